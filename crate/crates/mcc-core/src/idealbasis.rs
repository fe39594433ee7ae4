//! Staircase form of an ideal basis, organized by x_s-layers.
//!
//! Writing f in R as f = sum_k f_k(x_1..x_{s-1}) x_s^k, the oracle basis is
//! re-echelonized under a column order that walks the x_s-blocks upwards and,
//! inside each block, the S-part ranks downwards. Each resulting row then
//! has a well-defined layer k (its pivot block, equal to its x_s-order) and
//! a leading S-coefficient p_k whose lex degree sits exactly at the pivot.
//! Within one layer the leading degrees are pairwise distinct, because
//! distinct rows have distinct pivot columns.
//!
//! The row set spans the same space as the oracle, so it generates the same
//! ideal; the corpus checks regenerate the oracle from it as an invariant.

use crate::error::Error;
use crate::ideal::Code;
use crate::linalg;
use crate::qring::{lex_cmp, ExponentVector, RingElement, RingSpec};
use crate::ExecMode;

/// One row of the staircase form.
#[derive(Debug, Clone)]
pub struct StaircaseRow {
    element: RingElement,
    layer: usize,
    leading: RingElement,
    leading_degree: ExponentVector,
}

impl StaircaseRow {
    pub fn element(&self) -> &RingElement {
        &self.element
    }

    /// Pivot x_s-block; also the x_s-order of the element.
    pub fn layer(&self) -> usize {
        self.layer
    }

    /// The x_s^layer coefficient as an element of the subring S.
    pub fn leading(&self) -> &RingElement {
        &self.leading
    }

    /// Lex degree of the leading coefficient (arity s - 1).
    pub fn leading_degree(&self) -> &ExponentVector {
        &self.leading_degree
    }
}

/// The full staircase basis, rows grouped by layer, rho_s layers total
/// (possibly empty). Within a layer rows appear in echelon order, which is
/// descending leading degree.
#[derive(Debug)]
pub struct StaircaseBasis {
    spec: RingSpec,
    layers: Vec<Vec<StaircaseRow>>,
}

/// How a representative is picked from a nonempty layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SelectionStrategy {
    /// Smallest leading degree in lex order. Maximizes the shift box
    /// attached to the representative.
    #[default]
    MinALex,
    /// First row in echelon order (largest leading degree).
    First,
}

impl SelectionStrategy {
    pub fn name(self) -> &'static str {
        match self {
            SelectionStrategy::MinALex => "min_a_lex",
            SelectionStrategy::First => "first",
        }
    }
}

/// Echelonize the oracle basis under the staircase column order.
pub fn build_staircase(code: &Code, mode: ExecMode) -> Result<StaircaseBasis, Error> {
    let spec = code.spec().clone();
    let rho_s = *spec.rho().last().unwrap() as usize;
    let sub = spec.subring();
    let n_sub = sub.n();
    let mut rows: Vec<Vec<u64>> = code
        .oracle_basis()
        .iter()
        .map(|r| r.values().to_vec())
        .collect();
    // Blocks of ascending x_s-degree; S-ranks descending inside a block, so
    // a pivot is the lex-largest S-exponent alive in its layer.
    let mut col_order = Vec::with_capacity(spec.n());
    for k in 0..rho_s {
        for j in (0..n_sub).rev() {
            col_order.push(j * rho_s + k);
        }
    }
    let pivots = linalg::rref_in_place(spec.field(), &mut rows, &col_order, mode);
    let mut layers: Vec<Vec<StaircaseRow>> = (0..rho_s).map(|_| Vec::new()).collect();
    for (values, pivot) in rows.into_iter().zip(pivots) {
        let element = spec.element_from_values(values);
        let layer = pivot % rho_s;
        let leading = element.xs_coefficient(layer)?;
        let leading_degree = leading.degree()?;
        debug_assert_eq!(element.xs_order()?, layer);
        debug_assert_eq!(sub.lex_rank(&leading_degree), pivot / rho_s);
        layers[layer].push(StaircaseRow {
            element,
            layer,
            leading,
            leading_degree,
        });
    }
    Ok(StaircaseBasis { spec, layers })
}

impl StaircaseBasis {
    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn layers(&self) -> &[Vec<StaircaseRow>] {
        &self.layers
    }

    pub fn layer(&self, k: usize) -> Result<&[StaircaseRow], Error> {
        self.layers
            .get(k)
            .map(|l| l.as_slice())
            .ok_or(Error::IndexOutOfRange {
                index: k,
                bound: self.layers.len() as u64,
            })
    }

    /// All rows, layer-major.
    pub fn rows(&self) -> impl Iterator<Item = &StaircaseRow> {
        self.layers.iter().flatten()
    }

    pub fn num_rows(&self) -> usize {
        self.layers.iter().map(|l| l.len()).sum()
    }

    /// Pick one representative per nonempty layer.
    pub fn select_representatives(&self, strategy: SelectionStrategy) -> Vec<Option<StaircaseRow>> {
        self.layers
            .iter()
            .map(|layer| match strategy {
                SelectionStrategy::First => layer.first().cloned(),
                SelectionStrategy::MinALex => layer
                    .iter()
                    .min_by(|a, b| {
                        lex_cmp(&a.leading_degree, &b.leading_degree)
                            .expect("same arity within one basis")
                    })
                    .cloned(),
            })
            .collect()
    }
}
