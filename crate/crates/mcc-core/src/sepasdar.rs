//! Sepasdar-style combinatorial basis from staircase representatives.
//!
//! For each nonempty layer k pick a representative r_k with leading degree
//! a_k (an exponent vector over the first s - 1 variables). The candidate
//! set is
//!
//! ```text
//! B = union_k { x^i * r_k : i strictly below rho' - a_k in every coordinate }
//! ```
//!
//! where rho' = (rho_1, ..., rho_{s-1}). The box attached to layer k has
//! prod_j (rho_j - a_kj) members, so |B| = sum of the box sizes. Members of
//! B are linearly independent; whether they span depends on the ideal. When
//! |B| equals the ideal dimension, independence makes B an actual basis and
//! the status is `ProvenBasis`; otherwise the status is `IndependentOnly`
//! and callers needing a full basis must fall back to the oracle rows.
//!
//! For s = 1 the boxes are zero-dimensional and B is just one representative
//! per layer, which always reaches the dimension. For s = 2 the selection
//! with the smallest leading degree per layer also always reaches it. The
//! two-generator ideal <1 + x1, 1 + x2> over GF(2) with rho = (2, 2, 2) is a
//! genuine deficit case: dimension 6, |B| = 4.

use crate::error::Error;
use crate::ideal::Code;
use crate::idealbasis::{build_staircase, SelectionStrategy, StaircaseBasis, StaircaseRow};
use crate::linalg;
use crate::qring::{ExponentVector, RingElement, RingSpec};
use crate::ExecMode;

/// One member of B with its provenance.
#[derive(Debug, Clone)]
pub struct BasisMember {
    element: RingElement,
    layer: usize,
    shift: ExponentVector,
}

impl BasisMember {
    pub fn element(&self) -> &RingElement {
        &self.element
    }

    pub fn layer(&self) -> usize {
        self.layer
    }

    /// The box offset i (arity s - 1).
    pub fn shift(&self) -> &ExponentVector {
        &self.shift
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisStatus {
    /// |B| equals the ideal dimension: B is a basis.
    ProvenBasis,
    /// |B| fell short: members are independent but do not span.
    IndependentOnly,
}

impl BasisStatus {
    pub fn name(self) -> &'static str {
        match self {
            BasisStatus::ProvenBasis => "ProvenBasis",
            BasisStatus::IndependentOnly => "IndependentOnly",
        }
    }
}

/// B with its status relative to the ideal dimension.
#[derive(Debug)]
pub struct SepasdarBasis {
    members: Vec<BasisMember>,
    status: BasisStatus,
    dimension: usize,
}

impl SepasdarBasis {
    pub fn members(&self) -> &[BasisMember] {
        &self.members
    }

    pub fn status(&self) -> BasisStatus {
        self.status
    }

    /// Ideal dimension the member count is measured against.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// dimension - |B|; zero exactly for `ProvenBasis`.
    pub fn gap(&self) -> usize {
        self.dimension - self.members.len()
    }

    pub fn elements(&self) -> Vec<RingElement> {
        self.members.iter().map(|m| m.element.clone()).collect()
    }
}

/// Box offsets below `bounds`, ascending lex order (first coordinate most
/// significant). An empty bounds vector yields the single empty offset.
fn box_offsets(bounds: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; bounds.len()];
    if bounds.contains(&0) {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut j = bounds.len();
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            cur[j] += 1;
            if cur[j] < bounds[j] {
                break;
            }
            cur[j] = 0;
        }
    }
}

/// Expand representatives into B, layer-major, offsets in lex order.
pub fn build_members(
    spec: &RingSpec,
    representatives: &[Option<StaircaseRow>],
) -> Result<Vec<BasisMember>, Error> {
    let s = spec.num_vars();
    let rho_prime = &spec.rho()[..s - 1];
    let mut members = Vec::new();
    for rep in representatives.iter().flatten() {
        let a = rep.leading_degree().coords();
        debug_assert_eq!(a.len(), s - 1);
        let bounds: Vec<u64> = rho_prime.iter().zip(a).map(|(&r, &d)| r - d).collect();
        for offset in box_offsets(&bounds) {
            let mut full = offset.clone();
            full.push(0);
            let e = spec.exponent(&full)?;
            members.push(BasisMember {
                element: rep.element().mul_monomial(&e)?,
                layer: rep.layer(),
                shift: offset.into(),
            });
        }
    }
    Ok(members)
}

/// Expected |B| from the representative degrees alone.
pub fn expected_member_count(spec: &RingSpec, representatives: &[Option<StaircaseRow>]) -> usize {
    let s = spec.num_vars();
    let rho_prime = &spec.rho()[..s - 1];
    representatives
        .iter()
        .flatten()
        .map(|rep| {
            rho_prime
                .iter()
                .zip(rep.leading_degree().coords())
                .map(|(&r, &d)| (r - d) as usize)
                .product::<usize>()
        })
        .sum()
}

/// Rank check: members are linearly independent over GF(q).
pub fn verify_independence(
    spec: &RingSpec,
    members: &[BasisMember],
    mode: ExecMode,
) -> Result<(), Error> {
    let rows: Vec<Vec<u64>> = members.iter().map(|m| m.element.values().to_vec()).collect();
    let rank = linalg::rank(spec.field(), &rows, mode);
    if rank == members.len() {
        Ok(())
    } else {
        Err(Error::RankDeficient {
            rank,
            rows: members.len(),
        })
    }
}

/// Full pipeline output for one code.
#[derive(Debug)]
pub struct Analysis {
    pub staircase: StaircaseBasis,
    pub representatives: Vec<Option<StaircaseRow>>,
    pub basis: SepasdarBasis,
}

/// staircase -> representatives -> B, with status decided by member count.
pub fn analyze(code: &Code, strategy: SelectionStrategy, mode: ExecMode) -> Result<Analysis, Error> {
    let staircase = build_staircase(code, mode)?;
    let representatives = staircase.select_representatives(strategy);
    let members = build_members(code.spec(), &representatives)?;
    let dimension = code.dimension();
    debug_assert!(members.len() <= dimension);
    let status = if members.len() == dimension {
        BasisStatus::ProvenBasis
    } else {
        BasisStatus::IndependentOnly
    };
    Ok(Analysis {
        staircase,
        representatives,
        basis: SepasdarBasis {
            members,
            status,
            dimension,
        },
    })
}
