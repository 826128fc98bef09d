//! Canonical weight systems and maximal gradings of invertible polynomials.
//!
//! ```
//! use grading::{canonical_weights, maximal_grading, ExponentMatrix};
//!
//! let e = ExponentMatrix::new(3, vec![vec![7, 0, 0], vec![0, 3, 0], vec![0, 0, 2]]).unwrap();
//! let w = canonical_weights(&e).unwrap();
//! assert_eq!(w.to_string(), "(6,14,21;42)");
//! assert_eq!(maximal_grading(&e).unwrap().to_string(), "ℤ");
//! ```

mod group;
mod snf;
mod weights;

pub use group::{is_degree_iso, maximal_grading, wpl_grading, GradingGroup, GroupElement};
pub use snf::{smith_normal_form, Matrix, SmithForm};
pub use weights::{canonical_weights, ExponentMatrix, WeightSystem};

use polycore::MultiPoly;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GradingError {
    #[error("exponent matrix needs at least {n} rows of length {n}, got {rows}")]
    Shape { n: usize, rows: usize },
    #[error("exponent matrix is singular")]
    Singular,
    #[error("canonical weights {0:?} are not all positive")]
    NonPositiveWeight(Vec<i64>),
    #[error("monomial row {0} does not have the canonical degree")]
    InconsistentRow(usize),
    #[error("no invertible part found in {0}")]
    NotInvertible(String),
    #[error("deformation monomials of {0} are not of the canonical degree")]
    InconsistentDeformation(String),
    #[error("grading group has rank {0}, expected 1")]
    RankNotOne(usize),
}

/// Canonical weights and maximal grading of a polynomial, with the exponent
/// matrix chosen by [`ExponentMatrix::from_poly`].
pub fn analyse(
    f: &MultiPoly,
) -> Result<(ExponentMatrix, WeightSystem, GradingGroup), GradingError> {
    let e = ExponentMatrix::from_poly(f)?;
    let w = canonical_weights(&e)?;
    let g = maximal_grading(&e)?;
    Ok((e, w, g))
}
