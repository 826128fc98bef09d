use classify::DeformationType::{self, *};
use polycore::{parse_poly, MultiPoly, PolyError, Rational};

use crate::cases::XYZ;

/// One equation of a catalog row. `f` is written with parameters `l4`, `l5`
/// standing for `λ₄`, `λ₅`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEquation {
    pub f: &'static str,
    pub kind: DeformationType,
    pub p: [u32; 3],
    pub m: u32,
    pub signature: &'static [u32],
}

impl CatalogEquation {
    /// `f` with `(λ₄, λ₅)` replaced by the given values (missing ones by 2, 3).
    pub fn polynomial(&self, lambdas: &[Rational]) -> Result<MultiPoly, PolyError> {
        let vars = ["x", "y", "z", "l4", "l5"];
        let f = parse_poly(self.f, &vars)?;
        let defaults = [polycore::rat(2), polycore::rat(3)];
        let values: Vec<(&str, Rational)> = ["l4", "l5"]
            .iter()
            .enumerate()
            .map(|(i, v)| {
                (
                    *v,
                    lambdas
                        .get(i)
                        .cloned()
                        .unwrap_or_else(|| defaults[i].clone()),
                )
            })
            .collect();
        f.eval_at(&values).with_vars(&XYZ)
    }

    /// `(λ₃, …, λ_{m+2})` used by [`CatalogEquation::polynomial`] with no
    /// explicit values.
    pub fn default_lambdas(&self) -> Vec<Rational> {
        (1..=i64::from(self.m)).map(polycore::rat).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogRow {
    /// `(a, b, c; h)`
    pub weights: [i64; 4],
    pub name: Option<&'static str>,
    pub equations: &'static [CatalogEquation],
}

const fn eq(
    f: &'static str,
    kind: DeformationType,
    p: [u32; 3],
    m: u32,
    signature: &'static [u32],
) -> CatalogEquation {
    CatalogEquation {
        f,
        kind,
        p,
        m,
        signature,
    }
}

const fn row(
    weights: [i64; 4],
    name: Option<&'static str>,
    equations: &'static [CatalogEquation],
) -> CatalogRow {
    CatalogRow {
        weights,
        name,
        equations,
    }
}

const ROWS: &[CatalogRow] = &[
    row(
        [6, 14, 21, 42],
        Some("E12"),
        &[eq("-(y^3-x^7)+z^2", I, [3, 7, 2], 1, &[3, 7, 2])],
    ),
    row(
        [4, 10, 15, 30],
        Some("E13"),
        &[eq("-x*(y^5-x^2)+z^2", II1, [3, 5, 2], 1, &[4, 5, 2])],
    ),
    row(
        [3, 8, 12, 24],
        Some("E14"),
        &[eq("-x*(y^4-x)+z^3", II1, [2, 4, 3], 1, &[3, 4, 3])],
    ),
    row(
        [6, 8, 15, 30],
        Some("Z11"),
        &[eq("-x*(y^3-x^4)+z^2", II1, [5, 3, 2], 1, &[8, 3, 2])],
    ),
    row(
        [4, 6, 11, 22],
        Some("Z12"),
        &[eq("-x*y*(y^2-x^3)+z^2", III, [4, 3, 2], 1, &[6, 4, 2])],
    ),
    row(
        [3, 5, 9, 18],
        Some("Z13"),
        &[eq("-x*(y^3-x)+y*z^3", IV, [2, 3, 3], 1, &[3, 5, 3])],
    ),
    row(
        [4, 5, 10, 20],
        Some("W12"),
        &[eq("-x*(y^2-x)+z^5", II1, [2, 2, 5], 1, &[5, 2, 5])],
    ),
    row(
        [3, 4, 8, 16],
        Some("W13"),
        &[eq("-x*(y^2-x)+y*z^4", IV, [2, 2, 4], 1, &[4, 3, 4])],
    ),
    row(
        [6, 8, 9, 24],
        Some("Q10"),
        &[eq("-x*(y^2-x^3)+z^3", II1, [4, 2, 3], 1, &[9, 2, 3])],
    ),
    row(
        [4, 6, 7, 18],
        Some("Q11"),
        &[eq("-x*(y^3-x^2)+y*z^2", IV, [3, 3, 2], 1, &[4, 7, 2])],
    ),
    row(
        [3, 5, 6, 15],
        Some("Q12"),
        &[eq("-x*y*(y-x^2)+z^3", III, [3, 2, 3], 1, &[6, 3, 3])],
    ),
    row(
        [4, 5, 6, 16],
        Some("S11"),
        &[eq("-x*(y^2-x^3)+y*z^2", IV, [4, 2, 2], 1, &[6, 5, 2])],
    ),
    row(
        [3, 4, 5, 13],
        Some("S12"),
        &[eq("-z*(x*z-y^2)+y*x^3", V, [3, 2, 2], 1, &[3, 4, 5])],
    ),
    row(
        [3, 4, 4, 12],
        Some("U12"),
        &[eq("-x*y*(y-x)+z^4", III, [2, 2, 4], 1, &[4, 4, 4])],
    ),
    row(
        [2, 6, 9, 18],
        Some("J3,0"),
        &[eq(
            "-x*(y^3-x)*(y^3-l4*x)+z^2",
            II1,
            [3, 6, 2],
            2,
            &[2, 3, 2, 2],
        )],
    ),
    row(
        [2, 4, 7, 14],
        Some("Z1,0"),
        &[eq(
            "-x*y*(y-x^2)*(y-l4*x^2)+z^2",
            III,
            [5, 3, 2],
            2,
            &[4, 2, 2, 2],
        )],
    ),
    row(
        [2, 4, 5, 12],
        Some("Q2,0"),
        &[eq(
            "-x*(y^2-x)*(y^2-l4*x)+y*z^2",
            IV,
            [3, 4, 2],
            2,
            &[2, 5, 2, 2],
        )],
    ),
    row(
        [2, 3, 6, 12],
        Some("W1,0"),
        &[
            eq(
                "-(z^3-x)*(z^3-l4*x)+x*y^2",
                II2,
                [2, 2, 6],
                2,
                &[3, 3, 2, 2],
            ),
            eq(
                "-(z^2-x)*(z^2-l4*x)+x*y^3",
                II2,
                [2, 3, 4],
                2,
                &[2, 2, 3, 3],
            ),
        ],
    ),
    row(
        [2, 3, 4, 10],
        Some("S1,0"),
        &[eq(
            "-x*(y-x^2)*(y-l4*x^2)+y*z^2",
            IV,
            [5, 2, 2],
            2,
            &[4, 3, 2, 2],
        )],
    ),
    row(
        [2, 3, 3, 9],
        Some("U1,0"),
        &[eq(
            "-x*(y-x)*(y-l4*x)+y*z^3",
            IV,
            [3, 2, 3],
            2,
            &[3, 2, 3, 3],
        )],
    ),
    row(
        [2, 2, 5, 10],
        None,
        &[eq(
            "-x*y*(y-x)*(y-l4*x)*(y-l5*x)+z^2",
            III,
            [4, 4, 2],
            3,
            &[2, 2, 2, 2, 2],
        )],
    ),
    row(
        [2, 2, 3, 8],
        None,
        &[eq(
            "-x*(y-x)*(y-l4*x)*(y-l5*x)+y*z^2",
            IV,
            [4, 3, 2],
            3,
            &[2, 3, 2, 2, 2],
        )],
    ),
];

/// The 22 weight systems with `ε = −1` and their deformations.
pub fn catalog() -> &'static [CatalogRow] {
    ROWS
}

pub fn catalog_equations() -> impl Iterator<Item = (&'static CatalogRow, &'static CatalogEquation)>
{
    ROWS.iter()
        .flat_map(|r| r.equations.iter().map(move |e| (r, e)))
}

/// Two-variable parts `x^α y^β + y³` of the signatures whose size-two
/// factorization goes through the R reduction, with the names of the
/// singularity and of the complete intersection it reduces from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoVariableCase {
    pub alpha: u32,
    pub beta: u32,
    pub name: &'static str,
    pub signature: &'static [u32],
    pub source: &'static str,
    pub source_signature: &'static [u32],
}

pub const TWO_VARIABLE_CASES: [TwoVariableCase; 4] = [
    TwoVariableCase {
        alpha: 7,
        beta: 0,
        name: "E12",
        signature: &[2, 3, 7],
        source: "Z11",
        source_signature: &[2, 3, 8],
    },
    TwoVariableCase {
        alpha: 5,
        beta: 1,
        name: "E13",
        signature: &[2, 4, 5],
        source: "Z12",
        source_signature: &[2, 4, 6],
    },
    TwoVariableCase {
        alpha: 8,
        beta: 0,
        name: "E14",
        signature: &[3, 3, 4],
        source: "Z13",
        source_signature: &[3, 3, 5],
    },
    TwoVariableCase {
        alpha: 6,
        beta: 1,
        name: "J3,0",
        signature: &[2, 2, 2, 3],
        source: "Z1,0",
        source_signature: &[2, 2, 2, 4],
    },
];
