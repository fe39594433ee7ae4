//! Textual polynomial format.
//!
//! Canonical rendering: terms in ascending lexicographic rank joined by
//! " + ", each term `coeff*mono` with the coefficient omitted when it is 1
//! and a monomial part is present. Variables are `x1`, `x2`, ... with `^`
//! for powers and `*` between factors. Extension-field coefficients render
//! as tuples `(c0,c1,...)`. The zero element renders as `0`.
//!
//! The parser accepts that grammar plus whitespace, `-` for subtraction,
//! integer coefficients of any size (reduced into the prime subfield),
//! exponents of any size (reduced mod rho), and repeated factors. Errors
//! carry the byte offset of the offending token.

use crate::error::Error;
use crate::gf::FieldElement;
use crate::qring::{RingElement, RingSpec};

pub(crate) fn render(f: &RingElement) -> String {
    let spec = f.spec();
    let field = spec.field();
    let mut parts: Vec<String> = Vec::new();
    for (rank, &c) in f.values().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let e = spec.exponent_of_rank(rank);
        let mono: Vec<String> = e
            .coords()
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x > 0)
            .map(|(j, &x)| {
                if x == 1 {
                    format!("x{}", j + 1)
                } else {
                    format!("x{}^{}", j + 1, x)
                }
            })
            .collect();
        let coeff = field.element(c).expect("stored values are reduced");
        let part = if mono.is_empty() {
            coeff.to_string()
        } else if coeff.is_one() {
            mono.join("*")
        } else {
            format!("{}*{}", coeff, mono.join("*"))
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Int(u64),
    Var(usize),
    End,
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
    tok: Tok,
    tok_pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Result<Lexer<'a>, Error> {
        let mut lx = Lexer {
            bytes: input.as_bytes(),
            pos: 0,
            tok: Tok::End,
            tok_pos: 0,
        };
        lx.advance()?;
        Ok(lx)
    }

    fn err(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    fn advance(&mut self) -> Result<(), Error> {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.tok_pos = self.pos;
        if self.pos >= self.bytes.len() {
            self.tok = Tok::End;
            return Ok(());
        }
        let b = self.bytes[self.pos];
        self.tok = match b {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b',' => {
                self.pos += 1;
                Tok::Comma
            }
            b'0'..=b'9' => Tok::Int(self.read_int()?),
            b'x' => {
                let start = self.pos;
                self.pos += 1;
                if self.pos >= self.bytes.len() || !self.bytes[self.pos].is_ascii_digit() {
                    return Err(self.err(start, "expected variable index after 'x'"));
                }
                Tok::Var(self.read_int()? as usize)
            }
            other => {
                return Err(self.err(self.pos, format!("unexpected character '{}'", other as char)))
            }
        };
        Ok(())
    }

    fn read_int(&mut self) -> Result<u64, Error> {
        let start = self.pos;
        let mut v: u64 = 0;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((self.bytes[self.pos] - b'0') as u64))
                .ok_or_else(|| self.err(start, "integer literal too large"))?;
            self.pos += 1;
        }
        Ok(v)
    }
}

pub(crate) fn parse(spec: &RingSpec, input: &str) -> Result<RingElement, Error> {
    let mut lx = Lexer::new(input)?;
    let mut acc = spec.zero();
    let mut negate = false;
    if lx.tok == Tok::Minus {
        negate = true;
        lx.advance()?;
    }
    loop {
        let term = parse_term(spec, &mut lx)?;
        acc = if negate {
            acc.sub(&term).expect("same spec")
        } else {
            acc.add(&term).expect("same spec")
        };
        match lx.tok {
            Tok::Plus => {
                negate = false;
                lx.advance()?;
            }
            Tok::Minus => {
                negate = true;
                lx.advance()?;
            }
            Tok::End => return Ok(acc),
            _ => return Err(lx.err(lx.tok_pos, "expected '+', '-' or end of input")),
        }
    }
}

/// term := factor ('*' factor)*, where a factor is an integer, a coefficient
/// tuple, or a variable power.
fn parse_term(spec: &RingSpec, lx: &mut Lexer) -> Result<RingElement, Error> {
    let mut coeff = spec.field().one();
    let mut exps = vec![0u64; spec.num_vars()];
    let mut first = true;
    loop {
        match lx.tok {
            Tok::Int(v) => {
                let c = spec.field().element_from_int(v);
                coeff = coeff.mul(&c).expect("same field");
                lx.advance()?;
            }
            Tok::LParen => {
                let c = parse_tuple(spec, lx)?;
                coeff = coeff.mul(&c).expect("same field");
            }
            Tok::Var(idx) => {
                let pos = lx.tok_pos;
                if idx == 0 || idx > spec.num_vars() {
                    return Err(lx.err(
                        pos,
                        format!("unknown variable x{idx} (ring has {} variables)", spec.num_vars()),
                    ));
                }
                lx.advance()?;
                let mut e = 1u64;
                if lx.tok == Tok::Caret {
                    lx.advance()?;
                    match lx.tok {
                        Tok::Int(v) => {
                            e = v;
                            lx.advance()?;
                        }
                        _ => return Err(lx.err(lx.tok_pos, "expected integer exponent after '^'")),
                    }
                }
                let rho_j = spec.rho()[idx - 1];
                exps[idx - 1] = (exps[idx - 1] + e % rho_j) % rho_j;
            }
            _ if first => return Err(lx.err(lx.tok_pos, "expected a term")),
            _ => unreachable!("loop exits below before reaching here"),
        }
        first = false;
        if lx.tok == Tok::Star {
            lx.advance()?;
            match lx.tok {
                Tok::Int(_) | Tok::LParen | Tok::Var(_) => continue,
                _ => return Err(lx.err(lx.tok_pos, "expected a factor after '*'")),
            }
        }
        break;
    }
    let e = spec.exponent(&exps).expect("exponents reduced above");
    spec.monomial(&e, &coeff)
}

/// Coefficient tuple `(c0,c1,...)` for extension fields.
fn parse_tuple(spec: &RingSpec, lx: &mut Lexer) -> Result<FieldElement, Error> {
    let open = lx.tok_pos;
    lx.advance()?;
    let mut coeffs = Vec::new();
    loop {
        match lx.tok {
            Tok::Int(v) => {
                coeffs.push(v);
                lx.advance()?;
            }
            _ => return Err(lx.err(lx.tok_pos, "expected integer inside coefficient tuple")),
        }
        match lx.tok {
            Tok::Comma => {
                lx.advance()?;
            }
            Tok::RParen => {
                lx.advance()?;
                break;
            }
            _ => return Err(lx.err(lx.tok_pos, "expected ',' or ')' in coefficient tuple")),
        }
    }
    if coeffs.len() > spec.field().m() as usize {
        return Err(lx.err(
            open,
            format!(
                "tuple has {} entries but the field has degree {}",
                coeffs.len(),
                spec.field().m()
            ),
        ));
    }
    spec.field()
        .element_from_coeffs(&coeffs)
        .map_err(|_| lx.err(open, "invalid coefficient tuple"))
}
