use polycore::{det2, MultiPoly};

use crate::MfError;

/// Grading degrees of the generators of `F₀ = S(0) ⊕ S(f−p₁−p₂)` and
/// `F₁ = S(f−p₁) ⊕ S(f−p₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shifts {
    pub f0: [i64; 2],
    pub f1: [i64; 2],
}

/// A size-two matrix factorization from the Koszul resolution of
/// `S/(p₁, p₂)`, with `f = p₁h₁ + p₂h₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MF2 {
    pub p1: MultiPoly,
    pub p2: MultiPoly,
    pub h1: MultiPoly,
    pub h2: MultiPoly,
    pub f: MultiPoly,
    /// Integer weight of each variable of `f`, in `f.vars()` order.
    pub weights: Vec<i64>,
    pub degree: i64,
    pub shifts: Shifts,
    /// Set when the regular-sequence check could not confirm `p₁, p₂`.
    pub warnings: Vec<String>,
}

pub type Matrix2 = [[MultiPoly; 2]; 2];

fn mat_mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

impl MF2 {
    pub fn vars(&self) -> &[String] {
        self.f.vars()
    }

    pub fn q0(&self) -> Matrix2 {
        [
            [self.h1.clone(), -&self.p2],
            [self.h2.clone(), self.p1.clone()],
        ]
    }

    pub fn q1(&self) -> Matrix2 {
        [
            [self.p1.clone(), self.p2.clone()],
            [-&self.h2, self.h1.clone()],
        ]
    }

    /// Degree the entry `(i, j)` of `q₀` must have.
    pub fn q0_entry_degree(&self, i: usize, j: usize) -> i64 {
        self.shifts.f1[i] - self.shifts.f0[j]
    }

    /// Degree the entry `(i, j)` of `q₁` must have.
    pub fn q1_entry_degree(&self, i: usize, j: usize) -> i64 {
        self.shifts.f0[i] + self.degree - self.shifts.f1[j]
    }

    /// Re-checks every invariant: both products, the determinant and the
    /// entrywise degrees.
    pub fn verify(&self) -> Result<(), MfError> {
        let vars = self.vars();
        let f = &self.f;
        let zero = MultiPoly::zero(vars);
        let scalar = [[f.clone(), zero.clone()], [zero.clone(), f.clone()]];
        let (q0, q1) = (self.q0(), self.q1());
        if mat_mul(&q1, &q0) != scalar {
            return Err(MfError::Identity("q1·q0 ≠ f·Id".into()));
        }
        if mat_mul(&q0, &q1) != scalar {
            return Err(MfError::Identity("q0·q1 ≠ f·Id".into()));
        }
        if det2(&q1) != *f {
            return Err(MfError::Identity("det q1 ≠ f".into()));
        }
        for i in 0..2 {
            for j in 0..2 {
                for (name, entry, want) in [
                    ("q0", &q0[i][j], self.q0_entry_degree(i, j)),
                    ("q1", &q1[i][j], self.q1_entry_degree(i, j)),
                ] {
                    let got = entry.weighted_degree(&self.weights)?;
                    if got.is_some_and(|d| d != want) {
                        return Err(MfError::EntryDegree {
                            matrix: name,
                            i,
                            j,
                            want,
                            got: got.unwrap(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

fn homogeneous_degree(p: &MultiPoly, weights: &[i64], what: &str) -> Result<i64, MfError> {
    p.weighted_degree(weights)?
        .ok_or_else(|| MfError::Inhomogeneous(format!("{what} is zero")))
}

/// Builds the factorization from `(p₁, p₂, h₁, h₂)`, grading by the reduced
/// canonical weights of `f = p₁h₁ + p₂h₂`.
pub fn koszul_mf(
    p1: &MultiPoly,
    p2: &MultiPoly,
    h1: &MultiPoly,
    h2: &MultiPoly,
) -> Result<MF2, MfError> {
    let f = &(p1 * h1) + &(p2 * h2);
    if f.is_zero() {
        return Err(MfError::Inhomogeneous("f = p1·h1 + p2·h2 is zero".into()));
    }
    let used = f.support_vars();
    let f_small = f.with_vars(&used)?;
    let (_, w, _) = grading::analyse(&f_small)?;
    let r = w.reduced();
    let weights: Vec<i64> = f
        .vars()
        .iter()
        .map(|v| used.iter().position(|u| u == v).map_or(0, |k| r.weights[k]))
        .collect();
    koszul_mf_weighted(p1, p2, h1, h2, &weights)
}

/// As [`koszul_mf`] with explicit integer weights for the variables of `f`.
pub fn koszul_mf_weighted(
    p1: &MultiPoly,
    p2: &MultiPoly,
    h1: &MultiPoly,
    h2: &MultiPoly,
    weights: &[i64],
) -> Result<MF2, MfError> {
    let f = &(p1 * h1) + &(p2 * h2);
    let vars = f.vars().to_vec();
    let align = |p: &MultiPoly| p.with_vars(&vars);
    let (p1, p2, h1, h2) = (align(p1)?, align(p2)?, align(h1)?, align(h2)?);
    if weights.len() != vars.len() {
        return Err(MfError::Inhomogeneous(format!(
            "{} weights for {} variables",
            weights.len(),
            vars.len()
        )));
    }
    let d = homogeneous_degree(&f, weights, "f")?;
    let d1 = homogeneous_degree(&p1, weights, "p1")?;
    let d2 = homogeneous_degree(&p2, weights, "p2")?;
    let shifts = Shifts {
        f0: [0, d - d1 - d2],
        f1: [d - d1, d - d2],
    };
    let warnings = crate::regular::regular_sequence_warnings(&p1, &p2);
    let mf = MF2 {
        p1,
        p2,
        h1,
        h2,
        f,
        weights: weights.to_vec(),
        degree: d,
        shifts,
        warnings,
    };
    mf.verify()?;
    Ok(mf)
}
