//! Generator matrices and encoding.
//!
//! A basis g_1, ..., g_l of the ideal turns into the l x n matrix whose
//! rows are the coefficient vectors in exponent-rank column order. Encoding
//! maps a message (m_1, ..., m_l) to sum m_i g_i, i.e. message times matrix.
//!
//! Construction refuses empty or rank-deficient row sets: a generator
//! matrix must have independent rows. The zero ideal therefore has no
//! generator matrix, only an empty basis.

use crate::error::Error;
use crate::gf::FieldElement;
use crate::linalg;
use crate::qring::{RingElement, RingSpec};
use crate::ExecMode;

/// Which basis the rows came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisSource {
    /// Sepasdar members (shifted staircase representatives).
    Sepasdar,
    /// Oracle RREF rows (fallback when B is not proven).
    OracleRref,
}

impl BasisSource {
    pub fn name(self) -> &'static str {
        match self {
            BasisSource::Sepasdar => "sepasdar",
            BasisSource::OracleRref => "oracle-rref",
        }
    }
}

#[derive(Debug, Clone)]
pub struct GeneratorMatrix {
    spec: RingSpec,
    rows: Vec<Vec<u64>>,
    source: BasisSource,
}

/// Stack basis elements into a generator matrix, checking independence.
pub fn to_matrix(
    spec: &RingSpec,
    basis: &[RingElement],
    source: BasisSource,
    mode: ExecMode,
) -> Result<GeneratorMatrix, Error> {
    if basis.is_empty() {
        return Err(Error::EmptyBasis);
    }
    for b in basis {
        if b.spec() != spec {
            return Err(Error::RingMismatch);
        }
    }
    let rows: Vec<Vec<u64>> = basis.iter().map(|b| b.values().to_vec()).collect();
    let rank = linalg::rank(spec.field(), &rows, mode);
    if rank != rows.len() {
        return Err(Error::RankDeficient {
            rank,
            rows: rows.len(),
        });
    }
    Ok(GeneratorMatrix {
        spec: spec.clone(),
        rows,
        source,
    })
}

/// Quote a CSV cell if it contains a comma, quote or newline.
fn csv_cell(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl GeneratorMatrix {
    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn source(&self) -> BasisSource {
        self.source
    }

    /// Message length l (number of rows).
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Code length n (number of columns).
    pub fn length(&self) -> usize {
        self.spec.n()
    }

    pub fn entry(&self, row: usize, col: usize) -> FieldElement {
        self.spec
            .field()
            .element(self.rows[row][col])
            .expect("stored values are reduced")
    }

    /// Row i back as a ring element.
    pub fn row(&self, i: usize) -> RingElement {
        self.spec.element_from_values(self.rows[i].clone())
    }

    /// The same row space in canonical reduced form. Source is preserved;
    /// useful for comparing matrices built from different bases.
    pub fn to_rref(&self, mode: ExecMode) -> GeneratorMatrix {
        let mut rows = self.rows.clone();
        let col_order: Vec<usize> = (0..self.spec.n()).collect();
        linalg::rref_in_place(self.spec.field(), &mut rows, &col_order, mode);
        GeneratorMatrix {
            spec: self.spec.clone(),
            rows,
            source: self.source,
        }
    }

    /// Codeword for a message of length `num_rows`.
    pub fn encode(&self, message: &[FieldElement]) -> Result<RingElement, Error> {
        if message.len() != self.rows.len() {
            return Err(Error::LengthMismatch {
                got: message.len(),
                want: self.rows.len(),
            });
        }
        let field = self.spec.field();
        for m in message {
            if m.spec() != field {
                return Err(Error::FieldMismatch);
            }
        }
        let mut values = vec![0u64; self.spec.n()];
        for (m, row) in message.iter().zip(&self.rows) {
            let c = m.value();
            if c == 0 {
                continue;
            }
            for (slot, &r) in values.iter_mut().zip(row) {
                if r != 0 {
                    *slot = field.add_val(*slot, field.mul_val(c, r));
                }
            }
        }
        Ok(self.spec.element_from_values(values))
    }

    /// Rows of space-separated field elements, one line per row.
    pub fn render_text(&self) -> String {
        let field = self.spec.field();
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|&v| field.element(v).expect("reduced").to_string())
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// CSV with one header line of exponent labels (coordinates joined by
    /// commas, quoted when needed), then one line per row.
    pub fn render_csv(&self) -> String {
        let field = self.spec.field();
        let mut out = String::new();
        let labels: Vec<String> = (0..self.spec.n())
            .map(|r| {
                let e = self.spec.exponent_of_rank(r);
                let label = e
                    .coords()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                csv_cell(&label)
            })
            .collect();
        out.push_str(&labels.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|&v| csv_cell(&field.element(v).expect("reduced").to_string()))
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}
