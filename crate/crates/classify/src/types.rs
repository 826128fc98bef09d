use std::fmt;
use std::str::FromStr;

use polycore::{rat, MonomialMap, MultiPoly, Rational};

use crate::ClassifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeformationType {
    I,
    II1,
    II2,
    III,
    IV,
    V,
}

impl DeformationType {
    pub const ALL: [DeformationType; 6] = [
        DeformationType::I,
        DeformationType::II1,
        DeformationType::II2,
        DeformationType::III,
        DeformationType::IV,
        DeformationType::V,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DeformationType::I => "I",
            DeformationType::II1 => "II1",
            DeformationType::II2 => "II2",
            DeformationType::III => "III",
            DeformationType::IV => "IV",
            DeformationType::V => "V",
        }
    }
}

impl fmt::Display for DeformationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DeformationType {
    type Err = ClassifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DeformationType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ClassifyError::UnknownType(s.to_string()))
    }
}

/// Dolgachev numbers `(α₁, …, α_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<u32>);

impl Signature {
    pub fn new(alphas: Vec<u32>) -> Result<Self, ClassifyError> {
        if alphas.len() < 3 || alphas.iter().any(|&a| a < 2) {
            return Err(ClassifyError::DegenerateSignature(alphas));
        }
        Ok(Signature(alphas))
    }

    pub fn alphas(&self) -> &[u32] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn sorted(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    /// Sorted entries concatenated, as used for node labels (`2244`).
    /// Entries ≥ 10 are written in full.
    pub fn compact(&self) -> String {
        self.sorted().iter().map(|a| a.to_string()).collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A weighted homogeneous deformation in template form, together with the
/// change of variables relating it to the input:
/// `input(v) = scalar · template(t)` where `tᵢ = signs[i] · v[permutation[i]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationClass {
    pub kind: DeformationType,
    pub p: [u32; 3],
    pub m: u32,
    /// `(λ₃, …, λ_{m+2})` with `λ₃ = 1`.
    pub lambdas: Vec<Rational>,
    pub permutation: [usize; 3],
    pub signs: [i8; 3],
    pub scalar: Rational,
}

impl DeformationClass {
    /// A class in template coordinates with the identity change of variables.
    pub fn new(
        kind: DeformationType,
        p: [u32; 3],
        m: u32,
        lambdas: Vec<Rational>,
    ) -> Result<Self, ClassifyError> {
        let c = DeformationClass {
            kind,
            p,
            m,
            lambdas,
            permutation: [0, 1, 2],
            signs: [1, 1, 1],
            scalar: rat(1),
        };
        c.check()?;
        Ok(c)
    }

    /// `(λ₃, …, λ_{m+2}) = (1, 2, …, m)`.
    pub fn with_default_lambdas(
        kind: DeformationType,
        p: [u32; 3],
        m: u32,
    ) -> Result<Self, ClassifyError> {
        Self::new(kind, p, m, (1..=i64::from(m)).map(rat).collect())
    }

    fn check(&self) -> Result<(), ClassifyError> {
        let [p1, p2, p3] = self.p;
        let m = self.m;
        let bad = || ClassifyError::Divisibility {
            kind: self.kind,
            p: self.p,
            m,
        };
        if m == 0 || self.p.contains(&0) {
            return Err(bad());
        }
        let divides = |a: u32| a >= m && a.is_multiple_of(m);
        let ok = match self.kind {
            DeformationType::I => divides(p1) && divides(p2),
            DeformationType::II1 | DeformationType::IV => p1 > 1 && divides(p1 - 1) && divides(p2),
            DeformationType::II2 => divides(p1) && divides(p3),
            DeformationType::III => p1 > 1 && p2 > 1 && divides(p1 - 1) && divides(p2 - 1),
            DeformationType::V => m == 1,
        };
        if !ok {
            return Err(bad());
        }
        if self.lambdas.len() != m as usize || self.lambdas.first() != Some(&rat(1)) {
            return Err(ClassifyError::BadLambdas);
        }
        for (i, a) in self.lambdas.iter().enumerate() {
            if a == &rat(0) || self.lambdas[..i].contains(a) {
                return Err(ClassifyError::BadLambdas);
            }
        }
        Ok(())
    }

    /// The Table-style template in coordinates named after `vars`.
    pub fn template<S: AsRef<str>>(&self, vars: &[S]) -> MultiPoly {
        template(self.kind, self.p, self.m, &self.lambdas, vars)
    }

    /// The template pulled back through the recorded change of variables.
    pub fn reconstruct<S: AsRef<str>>(&self, vars: &[S]) -> MultiPoly {
        let t = self.template(vars);
        let mut map = MonomialMap::new(vars);
        for i in 0..3 {
            let mut e = vec![0i64; 3];
            e[self.permutation[i]] = 1;
            map = map.assign(vars[i].as_ref(), rat(i64::from(self.signs[i])), e);
        }
        polycore::substitute(&t, &map)
            .expect("monomial substitution with positive exponents")
            .scale(&self.scalar)
    }
}

fn power(vars: &[String], e: [u32; 3]) -> MultiPoly {
    MultiPoly::monomial(vars, e.to_vec(), rat(1))
}

/// `Π (u^a − λ v^b)` over the given λ, with `u`, `v` variable indices.
fn product(vars: &[String], u: usize, a: u32, v: usize, b: u32, lambdas: &[Rational]) -> MultiPoly {
    let mut ua = [0; 3];
    ua[u] = a;
    let mut vb = [0; 3];
    vb[v] = b;
    lambdas.iter().fold(MultiPoly::one(vars), |acc, l| {
        &acc * &(&power(vars, ua) - &power(vars, vb).scale(l))
    })
}

pub fn template<S: AsRef<str>>(
    kind: DeformationType,
    p: [u32; 3],
    m: u32,
    lambdas: &[Rational],
    vars: &[S],
) -> MultiPoly {
    let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
    let [p1, p2, p3] = p;
    let x = power(&vars, [1, 0, 0]);
    let zp = power(&vars, [0, 0, p3]);
    match kind {
        DeformationType::I => &zp - &product(&vars, 1, p2 / m, 0, p1 / m, lambdas),
        DeformationType::II1 => &zp - &(&x * &product(&vars, 1, p2 / m, 0, (p1 - 1) / m, lambdas)),
        DeformationType::II2 => {
            &power(&vars, [1, p2, 0]) - &product(&vars, 2, p3 / m, 0, p1 / m, lambdas)
        }
        DeformationType::III => {
            &zp - &(&power(&vars, [1, 1, 0])
                * &product(&vars, 1, (p2 - 1) / m, 0, (p1 - 1) / m, lambdas))
        }
        DeformationType::IV => {
            &power(&vars, [0, 1, p3]) - &(&x * &product(&vars, 1, p2 / m, 0, (p1 - 1) / m, lambdas))
        }
        DeformationType::V => {
            let inner = &power(&vars, [1, 0, p3 - 1]) - &power(&vars, [0, p2, 0]);
            &power(&vars, [p1, 1, 0]) - &(&power(&vars, [0, 0, 1]) * &inner)
        }
    }
}
