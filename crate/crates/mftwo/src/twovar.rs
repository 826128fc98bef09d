use polycore::{rat, MultiPoly};

use crate::mf::{koszul_mf, MF2};
use crate::MfError;

pub const XY: [&str; 2] = ["x", "y"];

/// Factorization of `x^α y^β + y³` from `S/(x², y²)`:
/// `p₁ = x², p₂ = y², h₁ = x^{α−2}y^β, h₂ = y`.
pub fn mf2_two_var(alpha: u32, beta: u32) -> Result<MF2, MfError> {
    if alpha < 5 {
        return Err(MfError::AlphaTooSmall(alpha));
    }
    let mono = |a: u32, b: u32| MultiPoly::monomial(&XY, vec![a, b], rat(1));
    koszul_mf(
        &mono(2, 0),
        &mono(0, 2),
        &mono(alpha - 2, beta),
        &mono(0, 1),
    )
}
