//! Exact sparse multivariate polynomial arithmetic over the rationals, with a
//! parser, monomial substitution, resultants and rewriting modulo the
//! relations of a weighted projective line.

mod laurent;
mod parse;
mod poly;
mod resultant;
mod wpl;

pub use laurent::{compose, substitute, substitute_laurent, LaurentPoly, MonomialMap};
pub use parse::parse_poly;
pub use poly::{frac, rat, MultiPoly, Rational};
pub use resultant::{
    bareiss_det, classical_discriminant_wrt, det2, quarter_discriminant_wrt, resultant_wrt,
    sylvester_matrix,
};
pub use wpl::{default_lambdas, normal_form_mod_wpl, wpl_vars, WplPresentation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable '{name}'{}", pos.map(|p| format!(" at offset {p}")).unwrap_or_default())]
    UnknownVariable { name: String, pos: Option<usize> },
    #[error("bad exponent at offset {pos}: {msg}")]
    BadExponent { pos: usize, msg: String },
    #[error("substitution leaves {var}^{exponent}")]
    LaurentResult { var: String, exponent: i64 },
    #[error("no assignment for variable '{var}'")]
    MissingAssignment { var: String },
    #[error("both polynomials are constant in '{var}'")]
    BothConstant { var: String },
    #[error("expected degree {expected} in '{var}', found {found}")]
    WrongDegree {
        var: String,
        expected: u32,
        found: u32,
    },
    #[error("polynomial is not weighted homogeneous: {poly}")]
    Inhomogeneous { poly: String },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
}
