use std::fmt;
use std::str::FromStr;

use classify::{DeformationClass, DeformationType};
use mftwo::Matrix2;
use polycore::{rat, MultiPoly, Rational};

use crate::AtlasError;

pub const XYZ: [&str; 3] = ["x", "y", "z"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    I,
    II1a,
    II1b,
    II2,
    IIIa,
    IIIb,
    IVa,
    IVb,
    IVc,
    IVd,
    Va,
    Vb,
}

impl CaseId {
    pub const ALL: [CaseId; 12] = [
        CaseId::I,
        CaseId::II1a,
        CaseId::II1b,
        CaseId::II2,
        CaseId::IIIa,
        CaseId::IIIb,
        CaseId::IVa,
        CaseId::IVb,
        CaseId::IVc,
        CaseId::IVd,
        CaseId::Va,
        CaseId::Vb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseId::I => "I",
            CaseId::II1a => "II1a",
            CaseId::II1b => "II1b",
            CaseId::II2 => "II2",
            CaseId::IIIa => "IIIa",
            CaseId::IIIb => "IIIb",
            CaseId::IVa => "IVa",
            CaseId::IVb => "IVb",
            CaseId::IVc => "IVc",
            CaseId::IVd => "IVd",
            CaseId::Va => "Va",
            CaseId::Vb => "Vb",
        }
    }

    pub fn kind(self) -> DeformationType {
        match self {
            CaseId::I => DeformationType::I,
            CaseId::II1a | CaseId::II1b => DeformationType::II1,
            CaseId::II2 => DeformationType::II2,
            CaseId::IIIa | CaseId::IIIb => DeformationType::III,
            CaseId::IVa | CaseId::IVb | CaseId::IVc | CaseId::IVd => DeformationType::IV,
            CaseId::Va | CaseId::Vb => DeformationType::V,
        }
    }

    /// Index (1-based) of the Dolgachev number that the case increases.
    pub fn default_index(self) -> usize {
        match self {
            CaseId::II1a | CaseId::IIIa | CaseId::IVa | CaseId::Vb => 1,
            CaseId::IVb | CaseId::IVd | CaseId::Va => 2,
            CaseId::I | CaseId::II1b | CaseId::II2 | CaseId::IIIb | CaseId::IVc => 3,
        }
    }

    /// Cases whose lower right factor may be exchanged with any other arm.
    pub fn exchangeable(self) -> bool {
        self.default_index() == 3
    }

    /// Divisibility and range constraints on `(p, m)`.
    pub fn constraints_hold(self, p: [u32; 3], m: u32) -> bool {
        if p.contains(&0) || m == 0 {
            return false;
        }
        let extra = match self {
            CaseId::I | CaseId::II2 => m >= 2,
            CaseId::IVd | CaseId::Va | CaseId::Vb => m == 1,
            _ => true,
        };
        extra && DeformationClass::with_default_lambdas(self.kind(), p, m).is_ok()
    }

    /// The integer condition under which the case's mapping is an embedding.
    pub fn condition_holds(self, p: [u32; 3], m: u32) -> Result<bool, AtlasError> {
        if !self.constraints_hold(p, m) {
            return Err(AtlasError::Divisibility { case: self, p, m });
        }
        let [p1, p2, p3] = p.map(i64::from);
        let m = i64::from(m);
        let mm = m * m;
        let holds = match self {
            CaseId::I => (m - 1) * p1 * p2 * (p3 - 1) == p1 * p2 + (p3 + 1) * mm,
            CaseId::II1a => p2 * (p3 - 1) * (p1 - 1) == p3 * (p1 - 1) + m + p2,
            CaseId::II1b => {
                (p2 * m + (m - 1) * (p1 - 1) * p2) * (p3 - 1) == (p1 - 1) * p2 + (p3 + 1) * mm
            }
            CaseId::II2 => {
                p3 * m + (m - 1) * p1 * p3 * (p2 - 1) == (m - 1) * p1 * p3 + (p2 + 1) * mm
            }
            CaseId::IIIa => p2 * (p3 - 1) * (p1 - 1) == p3 * (p1 - 1) + (m - 1) + p2,
            CaseId::IIIb => {
                ((p1 - 1) * m + (p2 - 1) * m + (m - 1) * (p1 - 1) * (p2 - 1)) * (p3 - 1)
                    == (p1 - 1) * (p2 - 1) + (p3 + 1) * mm
            }
            CaseId::IVa => p2 * (p3 - 1) * (p1 - 1) == p3 * (p1 - 1) + (m + 1 - p1) + p2,
            CaseId::IVb => p2 * (p1 * (p3 - 1) - p3) == (p1 - 1) * (p3 - 1) + m,
            CaseId::IVc => {
                (p2 * m + (m - 1) * (p1 - 1) * p2) * (p3 - 1) + (p1 - 1) * m
                    == (p1 - 1) * p2 + (p3 + 1) * mm
            }
            CaseId::IVd => p3 * (p1 - 1) * (p2 - 1) == p1 * (p2 - 1) + 2,
            CaseId::Va | CaseId::Vb => p2 * (p1 - 1) * (p3 - 1) == (p1 - 1) * (p3 - 1) + 2,
        };
        Ok(holds)
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseId {
    type Err = AtlasError;
    fn from_str(s: &str) -> Result<Self, AtlasError> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| AtlasError::UnknownCase(s.to_string()))
    }
}

/// A case evaluated at concrete `(p, m, λ)`: the displayed matrix over
/// `x, y, z` and the images of `x, y, z, w` as exponent vectors in
/// `X₁..X_{m+2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseInstance {
    pub case: CaseId,
    pub p: [u32; 3],
    pub m: u32,
    pub lambdas: Vec<Rational>,
    /// Arm whose factor sits in the lower right corner (3 unless exchanged).
    pub arm: usize,
    pub matrix: Matrix2,
    /// Images of `x, y, z, w`.
    pub mapping: [Vec<i64>; 4],
    /// 1-based index of the increased Dolgachev number.
    pub index: usize,
}

fn mono(e: [u32; 3]) -> MultiPoly {
    MultiPoly::monomial(&XYZ, e.to_vec(), rat(1))
}

fn var(k: usize) -> MultiPoly {
    let mut e = [0; 3];
    e[k] = 1;
    mono(e)
}

fn pow(k: usize, n: u32) -> MultiPoly {
    let mut e = [0; 3];
    e[k] = n;
    mono(e)
}

/// `u^a − λ v^b`
fn binom(u: usize, a: u32, v: usize, b: u32, l: &Rational) -> MultiPoly {
    &pow(u, a) - &pow(v, b).scale(l)
}

/// Exponent vectors with room for `r` coordinates, built from 1-based
/// `(index, numerator, denominator)` entries.
struct Images {
    r: usize,
    case: CaseId,
}

impl Images {
    fn exp(
        &self,
        entries: &[(usize, i64, i64)],
        arms_from: Option<(usize, i64)>,
    ) -> Result<Vec<i64>, AtlasError> {
        let mut e = vec![0i64; self.r];
        for &(i, n, d) in entries {
            if d == 0 || n % d != 0 || n / d < 0 {
                return Err(AtlasError::NonIntegral {
                    case: self.case,
                    exponent: format!("X{i}^({n}/{d})"),
                });
            }
            e[i - 1] += n / d;
        }
        if let Some((lo, k)) = arms_from {
            if k < 0 {
                return Err(AtlasError::NonIntegral {
                    case: self.case,
                    exponent: format!("X{lo}..X{}^{k}", self.r),
                });
            }
            for x in e.iter_mut().skip(lo - 1) {
                *x += k;
            }
        }
        Ok(e)
    }
}

fn product(factor: &dyn Fn(usize) -> MultiPoly, r: usize, skip: Option<usize>) -> MultiPoly {
    (3..=r)
        .filter(|&i| Some(i) != skip)
        .fold(MultiPoly::one(&XYZ), |acc, i| &acc * &factor(i))
}

pub fn instantiate(
    case: CaseId,
    p: [u32; 3],
    m: u32,
    lambdas: &[Rational],
    arm: Option<usize>,
) -> Result<CaseInstance, AtlasError> {
    if !case.constraints_hold(p, m) {
        return Err(AtlasError::Divisibility { case, p, m });
    }
    DeformationClass::new(case.kind(), p, m, lambdas.to_vec())?;
    let r = m as usize + 2;
    let k = arm.unwrap_or(3);
    if k != 3 && (!case.exchangeable() || !(3..=r).contains(&k)) {
        return Err(AtlasError::BadArm { case, arm: k });
    }
    let [p1, p2, p3] = p;
    let [q1, q2, q3] = p.map(i64::from);
    let mi = i64::from(m);
    let mm = mi * mi;
    let (x, y, z) = (0, 1, 2);
    let neg = |a: MultiPoly| -&a;
    let lam = |i: usize| &lambdas[i - 3];
    let im = Images { r, case };
    let one = |i: usize, n: i64| (i, n, 1);
    let (matrix, mapping): (Matrix2, [Vec<i64>; 4]) = match case {
        CaseId::I => {
            let f = |i: usize| binom(y, p2 / m, x, p1 / m, lam(i));
            (
                [
                    [product(&f, r, Some(k)), neg(var(z))],
                    [pow(z, p3 - 1), neg(f(k))],
                ],
                [
                    im.exp(&[one(1, 1), (3, q2, mi)], None)?,
                    im.exp(&[one(2, 1), (3, q1, mi)], None)?,
                    im.exp(&[(3, (mi - 1) * q1 * q2, mm)], Some((4, 1)))?,
                    im.exp(&[], Some((4, q3 - 1)))?,
                ],
            )
        }
        CaseId::II1a | CaseId::II1b | CaseId::IVa | CaseId::IVb | CaseId::IVc => {
            let f = |i: usize| binom(y, p2 / m, x, (p1 - 1) / m, lam(i));
            let all = product(&f, r, None);
            let rest = &var(x) * &product(&f, r, Some(k));
            let z_x3 = (3, q2 * mi + (mi - 1) * (q1 - 1) * q2, mm);
            match case {
                CaseId::II1a => (
                    [[all, neg(var(z))], [pow(z, p3 - 1), neg(var(x))]],
                    [
                        im.exp(&[(1, q3 * (q1 - 1) + mi + q2, q1 - 1)], None)?,
                        im.exp(&[one(1, 1), one(2, 1)], None)?,
                        im.exp(&[one(1, q2)], Some((3, 1)))?,
                        im.exp(&[], Some((3, q3 - 1)))?,
                    ],
                ),
                CaseId::II1b => (
                    [[rest, neg(var(z))], [pow(z, p3 - 1), neg(f(k))]],
                    [
                        im.exp(&[one(1, q3), (3, q2, mi)], None)?,
                        im.exp(&[one(2, 1), (3, q1 - 1, mi)], None)?,
                        im.exp(&[one(1, 1), z_x3], Some((4, 1)))?,
                        im.exp(&[one(1, q3 - 1)], Some((4, q3 - 1)))?,
                    ],
                ),
                CaseId::IVa => (
                    [[all, neg(var(z))], [&var(y) * &pow(z, p3 - 1), neg(var(x))]],
                    [
                        im.exp(&[(1, q3 * (q1 - 1) + mi + q2, q1 - 1), one(2, 1)], None)?,
                        im.exp(&[one(1, 1), one(2, q1)], None)?,
                        im.exp(&[one(1, q2)], Some((3, 1)))?,
                        im.exp(&[one(2, q1 - 1)], Some((3, q3 - 1)))?,
                    ],
                ),
                CaseId::IVb => (
                    [[all, neg(var(y))], [pow(z, p3), neg(var(x))]],
                    [
                        im.exp(&[one(1, q3), one(2, q3)], None)?,
                        im.exp(&[(2, q1 * q2 + (q1 - 1) * (q3 - 1) + mi, q2)], None)?,
                        im.exp(&[one(1, 1), one(2, 1)], Some((3, 1)))?,
                        im.exp(&[], Some((3, q3)))?,
                    ],
                ),
                _ => (
                    [[rest, neg(var(z))], [&var(y) * &pow(z, p3 - 1), neg(f(k))]],
                    [
                        im.exp(&[one(1, q3), one(2, 1), (3, q2, mi)], None)?,
                        im.exp(&[one(2, q1), (3, q1 - 1, mi)], None)?,
                        im.exp(&[one(1, 1), z_x3], Some((4, 1)))?,
                        im.exp(
                            &[one(1, q3 - 1), (2, mi + (mi - 1) * (q1 - 1), mi)],
                            Some((4, q3 - 1)),
                        )?,
                    ],
                ),
            }
        }
        CaseId::II2 => {
            let g = |i: usize| binom(z, p3 / m, x, p1 / m, lam(i));
            (
                [
                    [product(&g, r, Some(k)), neg(var(y))],
                    [&var(x) * &pow(y, p2 - 1), neg(g(k))],
                ],
                [
                    im.exp(&[one(1, q3), (3, q3, mi)], None)?,
                    im.exp(&[(3, (mi - 1) * q1 * q3, mm)], Some((4, 1)))?,
                    im.exp(&[one(1, 1), one(2, 1), (3, q1, mi)], None)?,
                    im.exp(&[(1, (mi - 1) * q3, mi)], Some((4, q2 - 1)))?,
                ],
            )
        }
        CaseId::IIIa | CaseId::IIIb => {
            let h = |i: usize| binom(y, (p2 - 1) / m, x, (p1 - 1) / m, lam(i));
            if case == CaseId::IIIa {
                (
                    [
                        [&var(y) * &product(&h, r, None), neg(var(z))],
                        [pow(z, p3 - 1), neg(var(x))],
                    ],
                    [
                        im.exp(&[(1, q3 * (q1 - 1) + mi - 1 + q2, q1 - 1)], None)?,
                        im.exp(&[one(1, 1), one(2, q3)], None)?,
                        im.exp(&[one(1, q2), one(2, 1)], Some((3, 1)))?,
                        im.exp(&[one(2, q3 - 1)], Some((3, q3 - 1)))?,
                    ],
                )
            } else {
                let z_x3 = (
                    3,
                    (q1 - 1) * mi + (q2 - 1) * mi + (mi - 1) * (q1 - 1) * (q2 - 1),
                    mm,
                );
                (
                    [
                        [&mono([1, 1, 0]) * &product(&h, r, Some(k)), neg(var(z))],
                        [pow(z, p3 - 1), neg(h(k))],
                    ],
                    [
                        im.exp(&[one(1, q3), (3, q2 - 1, mi)], None)?,
                        im.exp(&[one(2, q3), (3, q1 - 1, mi)], None)?,
                        im.exp(&[one(1, 1), one(2, 1), z_x3], Some((4, 1)))?,
                        im.exp(&[one(1, q3 - 1), one(2, q3 - 1)], Some((4, q3 - 1)))?,
                    ],
                )
            }
        }
        CaseId::IVd => (
            [
                [&mono([1, p2 - 1, 0]) - &pow(z, p3), neg(var(x))],
                [pow(x, p1 - 1), neg(var(y))],
            ],
            [
                im.exp(&[one(1, q3), one(2, q3)], None)?,
                im.exp(&[(2, q1 * (q2 - 1) + 2, q2 - 1)], None)?,
                im.exp(&[one(1, 1), one(2, 1), one(3, 1)], None)?,
                im.exp(&[one(1, q3 * (q1 - 1))], None)?,
            ],
        ),
        CaseId::Va => (
            [
                [&mono([1, 0, p3 - 1]) - &pow(y, p2), neg(var(x))],
                [mono([p1 - 1, 1, 0]), neg(var(z))],
            ],
            [
                im.exp(&[one(2, q2), one(3, q3)], None)?,
                im.exp(&[one(1, q3), one(2, 1), one(3, 1)], None)?,
                im.exp(&[one(1, 1), one(2, q1 * q2 - q2 + 1)], None)?,
                im.exp(&[one(1, q3 - 1), one(3, q1 * q2 - q2 + 1)], None)?,
            ],
        ),
        CaseId::Vb => (
            [
                [&mono([1, 0, p3 - 1]) - &pow(y, p2), neg(var(y))],
                [pow(x, p1), neg(var(z))],
            ],
            [
                im.exp(&[one(1, 1), one(2, 1), one(3, q2)], None)?,
                im.exp(&[one(1, q1 * q3 - q1 + 1), one(3, 1)], None)?,
                im.exp(&[one(1, q1), one(2, q1)], None)?,
                im.exp(&[one(3, q1 * q2)], None)?,
            ],
        ),
    };
    let mut mapping = mapping;
    let mut index = case.default_index();
    if k != 3 {
        for e in mapping.iter_mut() {
            e.swap(2, k - 1);
        }
        index = k;
    }
    Ok(CaseInstance {
        case,
        p,
        m,
        lambdas: lambdas.to_vec(),
        arm: k,
        matrix,
        mapping,
        index,
    })
}
