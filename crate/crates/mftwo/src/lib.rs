//! Size-two graded matrix factorizations and their complete intersections.

mod ci;
mod mf;
mod regular;
mod twovar;

pub use ci::{
    hypersurface_collapse, singularity_from_mf, two_var_ci, two_var_fq, CompleteIntersection,
    Convention,
};
pub use mf::{koszul_mf, koszul_mf_weighted, Matrix2, Shifts, MF2};
pub use regular::regular_sequence_warnings;
pub use twovar::{mf2_two_var, XY};

use grading::GradingError;
use polycore::PolyError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MfError {
    #[error("inhomogeneous data: {0}")]
    Inhomogeneous(String),
    #[error("matrix identity fails: {0}")]
    Identity(String),
    #[error("entry ({i},{j}) of {matrix} has degree {got}, expected {want}")]
    EntryDegree {
        matrix: &'static str,
        i: usize,
        j: usize,
        want: i64,
        got: i64,
    },
    #[error("alpha must be at least 5, got {0}")]
    AlphaTooSmall(u32),
    #[error("no equation is linear in '{0}' with constant coefficient")]
    NotLinear(String),
    #[error("expected a factorization in two variables x, y with x dividing p1")]
    NotTwoVariable,
    #[error("unknown convention '{0}' (expected q0 or q1)")]
    UnknownConvention(String),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
