use std::collections::HashMap;

use num_traits::One;

use crate::{rat, MultiPoly, PolyError, Rational};

/// Presentation of the weighted projective line ring
/// `Q[X1..Xr] / (Xi^αi − X2^α2 + λi·X1^α1, i ≥ 3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WplPresentation {
    vars: Vec<String>,
    alphas: Vec<u32>,
    lambdas: Vec<Rational>,
}

pub fn default_lambdas(count: usize) -> Vec<Rational> {
    (1..=count as i64).map(rat).collect()
}

pub fn wpl_vars(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("X{i}")).collect()
}

impl WplPresentation {
    /// `lambdas[k]` is the parameter of the relation for `X_{k+3}`.
    pub fn new(alphas: Vec<u32>, lambdas: Vec<Rational>) -> Result<Self, PolyError> {
        let r = alphas.len();
        if r < 3 {
            return Err(PolyError::InvalidPresentation(format!(
                "need r >= 3, got {r}"
            )));
        }
        if alphas.contains(&0) {
            return Err(PolyError::InvalidPresentation(
                "exponents must be positive".into(),
            ));
        }
        if lambdas.len() != r - 2 {
            return Err(PolyError::InvalidPresentation(format!(
                "expected {} parameters, got {}",
                r - 2,
                lambdas.len()
            )));
        }
        for i in 0..lambdas.len() {
            for j in i + 1..lambdas.len() {
                if lambdas[i] == lambdas[j] {
                    return Err(PolyError::InvalidPresentation(
                        "parameters must be pairwise distinct".into(),
                    ));
                }
            }
        }
        Ok(WplPresentation {
            vars: wpl_vars(r),
            alphas,
            lambdas,
        })
    }

    pub fn with_default_lambdas(alphas: Vec<u32>) -> Result<Self, PolyError> {
        let n = alphas.len().saturating_sub(2);
        Self::new(alphas, default_lambdas(n))
    }

    pub fn r(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[u32] {
        &self.alphas
    }

    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// The generator `Xi^αi − X2^α2 + λi·X1^α1` for `i ≥ 3` (1-based).
    pub fn generator(&self, i: usize) -> MultiPoly {
        assert!(i >= 3 && i <= self.r());
        let r = self.r();
        let mono = |k: usize, e: u32| {
            let mut v = vec![0; r];
            v[k] = e;
            v
        };
        MultiPoly::from_terms(
            &self.vars,
            vec![
                (mono(i - 1, self.alphas[i - 1]), Rational::one()),
                (mono(1, self.alphas[1]), -Rational::one()),
                (mono(0, self.alphas[0]), self.lambdas[i - 3].clone()),
            ],
        )
    }

    /// Reduces `p` so that every `Xi` with `i ≥ 3` has exponent below `αi`.
    /// Variables outside `X1..Xr` are carried along unchanged.
    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        let mut vars = p.vars().to_vec();
        for v in &self.vars[..2] {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        let p = p.with_vars(&vars).unwrap();
        let slot: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let (i1, i2) = (slot[0].unwrap(), slot[1].unwrap());
        let mut cache: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero(&vars);
        for (e, c) in p.terms() {
            let mut base = e.clone();
            let mut factors = Vec::new();
            for (k, s) in slot.iter().enumerate().skip(2) {
                let Some(j) = *s else { continue };
                let a = self.alphas[k];
                let q = base[j] / a;
                base[j] %= a;
                if q > 0 {
                    factors.push((k, q));
                }
            }
            let mut term = MultiPoly::monomial(&vars, base, c.clone());
            for (k, q) in factors {
                let f = cache.entry((k, q)).or_insert_with(|| {
                    let mut e2 = vec![0; vars.len()];
                    e2[i2] = self.alphas[1];
                    let mut e1 = vec![0; vars.len()];
                    e1[i1] = self.alphas[0];
                    let rhs = MultiPoly::from_terms(
                        &vars,
                        vec![(e2, Rational::one()), (e1, -self.lambdas[k - 2].clone())],
                    );
                    rhs.pow(q)
                });
                term = &term * &*f;
            }
            out = &out + &term;
        }
        out
    }

    pub fn reduces_to_zero(&self, p: &MultiPoly) -> bool {
        self.normal_form(p).is_zero()
    }
}

/// Convenience wrapper over [`WplPresentation::normal_form`].
pub fn normal_form_mod_wpl(p: &MultiPoly, w: &WplPresentation) -> MultiPoly {
    w.normal_form(p)
}
