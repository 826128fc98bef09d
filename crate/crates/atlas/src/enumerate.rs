use std::collections::BTreeSet;

use classify::{dolgachev_numbers, ClassifyError, DeformationClass, DeformationType};
use polycore::rat;

use crate::cases::{instantiate, CaseId};
use crate::catalog::catalog_equations;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    pub case: CaseId,
    pub p: [u32; 3],
    pub m: u32,
}

/// Every `(case, p, m)` with `pᵢ ≤ pmax`, `m ≤ mmax` satisfying the case's
/// constraints and condition and whose mapping exponents are nonnegative
/// integers. Tuples whose Dolgachev numbers have an entry below 2 are
/// skipped.
pub fn enumerate_solutions(pmax: u32, mmax: u32) -> Vec<Solution> {
    let mut out = Vec::new();
    for m in 1..=mmax {
        let lambdas: Vec<_> = (1..=i64::from(m)).map(rat).collect();
        for p1 in 1..=pmax {
            for p2 in 1..=pmax {
                for p3 in 1..=pmax {
                    let p = [p1, p2, p3];
                    for case in CaseId::ALL {
                        if case.condition_holds(p, m).unwrap_or(false)
                            && instantiate(case, p, m, &lambdas, None).is_ok()
                            && !degenerate(case, p, m, &lambdas)
                        {
                            out.push(Solution { case, p, m });
                        }
                    }
                }
            }
        }
    }
    out
}

fn degenerate(case: CaseId, p: [u32; 3], m: u32, lambdas: &[polycore::Rational]) -> bool {
    let Ok(class) = DeformationClass::new(case.kind(), p, m, lambdas.to_vec()) else {
        return true;
    };
    matches!(
        dolgachev_numbers(&class),
        Err(ClassifyError::DegenerateSignature(_))
    )
}

pub type Projected = BTreeSet<(DeformationType, [u32; 3], u32)>;

pub fn project(solutions: &[Solution]) -> Projected {
    solutions
        .iter()
        .map(|s| (s.case.kind(), s.p, s.m))
        .collect()
}

/// The two solutions outside the catalog with their Dolgachev numbers.
pub const EXTRA_SOLUTIONS: [(DeformationType, [u32; 3], u32, &[u32]); 2] = [
    (DeformationType::I, [4, 4, 3], 2, &[2, 2, 3, 3]),
    (DeformationType::IV, [3, 3, 4], 1, &[8, 7, 4]),
];

/// Catalog tuples together with the two extra solutions.
pub fn expected_solutions() -> Projected {
    let mut set: Projected = catalog_equations()
        .map(|(_, e)| (e.kind, e.p, e.m))
        .collect();
    set.extend(EXTRA_SOLUTIONS.iter().map(|&(k, p, m, _)| (k, p, m)));
    set
}
