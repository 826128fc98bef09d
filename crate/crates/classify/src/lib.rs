//! Classification of weighted homogeneous deformations of invertible
//! polynomials in three variables, Dolgachev numbers, and the embeddings
//! into rings of weighted projective lines.

mod embed;
mod matching;
mod types;

pub use embed::{dolgachev_numbers, generator_images, verify_embedding};
pub use matching::{
    all_matches, binomial_products, classify_deformation, rational_roots, BinomialProduct,
};
pub use types::{template, DeformationClass, DeformationType, Signature};

use grading::GradingError;
use polycore::PolyError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("expected a polynomial in three variables, got {0}")]
    NotThreeVariables(usize),
    #[error("not a weighted homogeneous deformation of an invertible polynomial: {0}")]
    NotDeformation(GradingError),
    #[error("no template matches {0}")]
    NoMatch(String),
    #[error("{} inequivalent templates match", .0.len())]
    Ambiguous(Vec<DeformationClass>),
    #[error("type V Dolgachev numbers are only known for p = (3,2,2), got {0:?}")]
    UnsupportedTypeV([u32; 3]),
    #[error("signature {0:?} needs at least three entries, all at least 2")]
    DegenerateSignature(Vec<u32>),
    #[error("divisibility constraints fail for type {kind}, p = {p:?}, m = {m}")]
    Divisibility {
        kind: DeformationType,
        p: [u32; 3],
        m: u32,
    },
    #[error("λ must start with 1 and be pairwise distinct and nonzero")]
    BadLambdas,
    #[error("unknown deformation type '{0}'")]
    UnknownType(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
