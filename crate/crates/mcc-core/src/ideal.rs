//! Ideals of R as linear codes: the span-closure oracle.
//!
//! An ideal generated by g_1, ..., g_t equals the GF(q)-span of all monomial
//! multiples x^alpha g_i, because multiplication by a monomial permutes
//! coefficients and every ring element is a scalar combination of monomials.
//! `span_closure` materializes that span as a reduced row echelon basis over
//! the natural (rank-order) columns. RREF is unique for a given row space,
//! so the oracle output is canonical: any correct basis construction must
//! reproduce it bit for bit after reduction.
//!
//! [`Code`] bundles a ring with generators and computes the oracle lazily,
//! at most once.

use std::sync::OnceLock;

use rand::Rng;

use crate::error::Error;
use crate::linalg;
use crate::qring::{shift_values, RingElement, RingSpec};
use crate::ExecMode;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default cap on full codeword enumeration (q^dim).
pub const DEFAULT_ENUM_CAP: u128 = 1 << 20;

/// Canonical RREF basis of the ideal generated by `generators`.
///
/// Zero generators contribute nothing; no generators (or all zero) yields
/// the zero ideal and an empty basis. Rows come back as ring elements with
/// strictly increasing leading rank and leading coefficient 1.
pub fn span_closure(
    spec: &RingSpec,
    generators: &[RingElement],
    mode: ExecMode,
) -> Result<Vec<RingElement>, Error> {
    for g in generators {
        if g.spec() != spec {
            return Err(Error::RingMismatch);
        }
    }
    let live: Vec<&RingElement> = generators.iter().filter(|g| !g.is_zero()).collect();
    if live.is_empty() {
        return Ok(Vec::new());
    }
    let n = spec.n();
    let mut rows = build_shift_rows(spec, &live, mode);
    let col_order: Vec<usize> = (0..n).collect();
    linalg::rref_in_place(spec.field(), &mut rows, &col_order, mode);
    Ok(rows.into_iter().map(|v| spec.element_from_values(v)).collect())
}

/// All n * t monomial shifts of the generators, generator-major.
fn build_shift_rows(spec: &RingSpec, live: &[&RingElement], mode: ExecMode) -> Vec<Vec<u64>> {
    let n = spec.n();
    let total = live.len() * n;
    let make = |idx: usize| {
        let g = live[idx / n];
        let shift = spec.exponent_of_rank(idx % n);
        shift_values(spec, g.values(), shift.coords())
    };
    #[cfg(feature = "parallel")]
    if mode == ExecMode::Parallel {
        return (0..total).into_par_iter().map(make).collect();
    }
    let _ = mode;
    (0..total).map(make).collect()
}

/// A multicyclic code: a ring plus generating polynomials, with the oracle
/// basis cached after first use.
#[derive(Debug)]
pub struct Code {
    spec: RingSpec,
    generators: Vec<RingElement>,
    oracle: OnceLock<Vec<RingElement>>,
}

impl Code {
    /// Zero generators are dropped. An empty (or all-zero) generator list
    /// defines the zero ideal.
    pub fn new(spec: RingSpec, generators: Vec<RingElement>) -> Result<Code, Error> {
        for g in &generators {
            if g.spec() != &spec {
                return Err(Error::RingMismatch);
            }
        }
        let generators: Vec<RingElement> =
            generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Code {
            spec,
            generators,
            oracle: OnceLock::new(),
        })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn generators(&self) -> &[RingElement] {
        &self.generators
    }

    /// The canonical RREF basis, computed on first call.
    pub fn oracle_basis(&self) -> &[RingElement] {
        self.oracle.get_or_init(|| {
            span_closure(&self.spec, &self.generators, ExecMode::default())
                .expect("generators validated at construction")
        })
    }

    /// dim_GF(q) of the ideal; also log_q of the codeword count.
    pub fn dimension(&self) -> usize {
        self.oracle_basis().len()
    }

    /// Number of codewords as q^dim, None if it overflows u128.
    pub fn cardinality(&self) -> Option<u128> {
        let q = self.spec.field().q() as u128;
        let mut out: u128 = 1;
        for _ in 0..self.dimension() {
            out = out.checked_mul(q)?;
        }
        Some(out)
    }

    /// Membership test against the oracle basis.
    pub fn contains(&self, f: &RingElement) -> Result<bool, Error> {
        if f.spec() != &self.spec {
            return Err(Error::RingMismatch);
        }
        let basis = self.oracle_basis();
        // RREF rows lead with 1 at their first nonzero position.
        let rows: Vec<Vec<u64>> = basis.iter().map(|b| b.values().to_vec()).collect();
        let pivots: Vec<usize> = rows
            .iter()
            .map(|row| row.iter().position(|&x| x != 0).expect("basis rows are nonzero"))
            .collect();
        let mut v = f.values().to_vec();
        linalg::reduce_against(self.spec.field(), &rows, &pivots, &mut v);
        Ok(v.iter().all(|&x| x == 0))
    }

    /// A uniformly random codeword: uniform scalar mix of the oracle basis.
    pub fn random_codeword<R: Rng + ?Sized>(&self, rng: &mut R) -> RingElement {
        let field = self.spec.field();
        let q = field.q();
        let mut values = vec![0u64; self.spec.n()];
        for row in self.oracle_basis() {
            let c = rng.random_range(0..q);
            if c == 0 {
                continue;
            }
            for (slot, &r) in values.iter_mut().zip(row.values()) {
                if r != 0 {
                    *slot = field.add_val(*slot, field.mul_val(c, r));
                }
            }
        }
        self.spec.element_from_values(values)
    }

    /// Iterate every codeword. Fails when q^dim exceeds `DEFAULT_ENUM_CAP`.
    pub fn enumerate_codewords(&self) -> Result<CodewordIter<'_>, Error> {
        self.enumerate_codewords_capped(DEFAULT_ENUM_CAP)
    }

    pub fn enumerate_codewords_capped(&self, cap: u128) -> Result<CodewordIter<'_>, Error> {
        let q = self.spec.field().q() as u128;
        let mut count: u128 = 1;
        for _ in 0..self.dimension() {
            count = count.saturating_mul(q);
            if count > cap {
                return Err(Error::CapExceeded {
                    what: "codeword count",
                    value: count,
                    cap,
                });
            }
        }
        Ok(CodewordIter {
            code: self,
            digits: vec![0; self.dimension()],
            current: vec![0; self.spec.n()],
            done: false,
        })
    }
}

/// Odometer over scalar combinations of the oracle basis. Each step updates
/// the running combination by the scalar delta of one digit (amortized one
/// row operation per codeword), so full enumeration costs O(count * n).
pub struct CodewordIter<'a> {
    code: &'a Code,
    digits: Vec<u64>,
    current: Vec<u64>,
    done: bool,
}

impl Iterator for CodewordIter<'_> {
    type Item = RingElement;

    fn next(&mut self) -> Option<RingElement> {
        if self.done {
            return None;
        }
        let out = self.code.spec.element_from_values(self.current.clone());
        let field = self.code.spec.field();
        let q = field.q();
        let basis = self.code.oracle_basis();
        let mut pos = 0;
        loop {
            if pos == self.digits.len() {
                self.done = true;
                break;
            }
            let old = self.digits[pos];
            let new = if old + 1 == q { 0 } else { old + 1 };
            self.digits[pos] = new;
            // Scalars enumerate field elements by packed value, so the
            // adjustment is (new - old) * basis[pos].
            let delta = field.sub_val(new, old);
            for (slot, &r) in self.current.iter_mut().zip(basis[pos].values()) {
                if r != 0 {
                    *slot = field.add_val(*slot, field.mul_val(delta, r));
                }
            }
            if new != 0 {
                break;
            }
            pos += 1;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    fn ring(p: u64, rho: &[u64]) -> RingSpec {
        RingSpec::new(FieldSpec::prime(p).unwrap(), rho).unwrap()
    }

    fn code(spec: &RingSpec, gens: &[&str]) -> Code {
        let gens = gens
            .iter()
            .map(|g| spec.parse_polynomial(g).unwrap())
            .collect();
        Code::new(spec.clone(), gens).unwrap()
    }

    #[test]
    fn hamming_oracle_basis() {
        // <1 + x + x^3> in GF(2)[x]/(x^7 - 1): the [7,4] Hamming code.
        let spec = ring(2, &[7]);
        let c = code(&spec, &["1 + x1 + x1^3"]);
        assert_eq!(c.dimension(), 4);
        assert_eq!(c.cardinality(), Some(16));
        let rows: Vec<Vec<u64>> = c.oracle_basis().iter().map(|r| r.values().to_vec()).collect();
        // Independently computed reduced form of the circulant span: the
        // systematic generator of the cyclic Hamming code.
        assert_eq!(
            rows,
            vec![
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 0, 1, 1],
                vec![0, 0, 1, 0, 1, 1, 1],
                vec![0, 0, 0, 1, 1, 0, 1],
            ]
        );
    }

    #[test]
    fn unit_ideal_spans_everything() {
        let spec = ring(2, &[2, 2]);
        let c = code(&spec, &["1"]);
        assert_eq!(c.dimension(), 4);
        for f in ["x1", "1 + x1*x2", "x2"] {
            assert!(c.contains(&spec.parse_polynomial(f).unwrap()).unwrap());
        }
    }

    #[test]
    fn two_variable_principal_ideal() {
        // <1 + x2> over rho = (2, 2): dimension 2.
        let spec = ring(2, &[2, 2]);
        let c = code(&spec, &["1 + x2"]);
        assert_eq!(c.dimension(), 2);
        assert!(c.contains(&spec.parse_polynomial("x1 + x1*x2").unwrap()).unwrap());
        assert!(!c.contains(&spec.parse_polynomial("1 + x1").unwrap()).unwrap());
        // Closure under both shifts.
        let w = spec.parse_polynomial("1 + x2").unwrap();
        for shift in [[1, 0], [0, 1]] {
            let e = spec.exponent(&shift).unwrap();
            assert!(c.contains(&w.mul_monomial(&e).unwrap()).unwrap());
        }
    }

    #[test]
    fn zero_ideal() {
        let spec = ring(3, &[3]);
        let c = Code::new(spec.clone(), vec![spec.zero()]).unwrap();
        assert_eq!(c.dimension(), 0);
        assert_eq!(c.cardinality(), Some(1));
        assert!(c.contains(&spec.zero()).unwrap());
        assert!(!c.contains(&spec.one()).unwrap());
        let words: Vec<_> = c.enumerate_codewords().unwrap().collect();
        assert_eq!(words, vec![spec.zero()]);
    }

    #[test]
    fn oracle_rows_are_rref() {
        let spec = ring(3, &[3, 2]);
        let c = code(&spec, &["1 + 2*x1*x2", "x2 + x1"]);
        let basis = c.oracle_basis();
        let mut last_lead = None;
        for row in basis {
            let lead = row.values().iter().position(|&v| v != 0).unwrap();
            assert_eq!(row.values()[lead], 1);
            if let Some(prev) = last_lead {
                assert!(lead > prev);
            }
            // Other rows are zero at this pivot.
            for other in basis {
                if other != row {
                    assert_eq!(other.values()[lead], 0);
                }
            }
            last_lead = Some(lead);
        }
    }

    #[test]
    fn enumeration_matches_cardinality_and_closure() {
        let spec = ring(2, &[2, 2]);
        let c = code(&spec, &["1 + x2"]);
        let words: Vec<RingElement> = c.enumerate_codewords().unwrap().collect();
        assert_eq!(words.len(), 4);
        // Pairwise distinct.
        for i in 0..words.len() {
            for j in 0..i {
                assert_ne!(words[i], words[j]);
            }
        }
        // Every word is in the code and shift-closed.
        for w in &words {
            assert!(c.contains(w).unwrap());
            let e = spec.exponent(&[1, 0]).unwrap();
            assert!(c.contains(&w.mul_monomial(&e).unwrap()).unwrap());
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let spec = ring(2, &[5, 5]);
        let c = code(&spec, &["1"]);
        assert_eq!(c.dimension(), 25);
        assert!(matches!(
            c.enumerate_codewords_capped(1 << 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn modes_produce_identical_bases() {
        let spec = ring(3, &[4, 3]);
        let gens = vec![
            spec.parse_polynomial("1 + x1 + 2*x2").unwrap(),
            spec.parse_polynomial("x1^3*x2^2 + 2").unwrap(),
        ];
        let seq = span_closure(&spec, &gens, ExecMode::Sequential).unwrap();
        let par = span_closure(&spec, &gens, ExecMode::Parallel).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn presentation_independence() {
        // Same ideal, different generator lists: identical oracle rows.
        let spec = ring(2, &[2, 2]);
        let a = code(&spec, &["1 + x2"]);
        let b = code(
            &spec,
            &["x1 + x1*x2", "1 + x2"],
        );
        assert_eq!(a.oracle_basis(), b.oracle_basis());
    }
}
