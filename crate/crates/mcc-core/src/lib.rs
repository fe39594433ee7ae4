//! Exact construction and verification of generator matrices for
//! multicyclic codes.
//!
//! A multicyclic code of shape rho = (rho_1, ..., rho_s) over GF(q) is an
//! ideal of GF(q)[x_1, ..., x_s] / (x_1^rho_1 - 1, ..., x_s^rho_s - 1),
//! equivalently a linear code of length n = prod(rho_i) closed under the
//! cyclic shift along every axis. The crate builds, from a generator list:
//!
//! * the canonical reduced basis of the ideal ([`ideal::span_closure`]),
//! * its staircase form layered by x_s-degree ([`idealbasis`]),
//! * a combinatorial basis of shifted layer representatives ([`sepasdar`]),
//! * generator matrices and encoders ([`genmatrix`]),
//!
//! plus a seeded verification corpus ([`corpus`]) exercising the structural
//! invariants end to end.
//!
//! Heavy kernels (row reduction, corpus fan-out) are data-parallel via
//! rayon when the `parallel` feature (default) is on; [`ExecMode`] selects
//! the path per call and both paths produce bit-identical results.

pub mod corpus;
pub mod error;
pub mod genmatrix;
pub mod gf;
pub mod ideal;
pub mod idealbasis;
mod linalg;
pub mod qring;
pub mod sepasdar;
mod text;

pub use error::Error;

/// Execution mode for the data-parallel kernels.
///
/// `Parallel` uses the rayon pool when the `parallel` feature is enabled
/// and falls back to the sequential path otherwise. Outputs are identical
/// in both modes; only wall-clock time differs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

impl ExecMode {
    pub fn name(self) -> &'static str {
        match self {
            ExecMode::Sequential => "sequential",
            ExecMode::Parallel => "parallel",
        }
    }
}
