use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::{MultiPoly, PolyError, Rational};

/// Polynomial whose exponents may be negative. Used as the intermediate of
/// monomial substitutions before polynomiality is checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentPoly {
    pub fn zero(vars: &[String]) -> Self {
        LaurentPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(vars: &[String], exps: Vec<i64>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(exps, c);
        p
    }

    pub fn from_poly(p: &MultiPoly) -> Self {
        let mut out = Self::zero(p.vars());
        for (e, c) in p.terms() {
            out.add_term(e.iter().map(|&k| k as i64).collect(), c.clone());
        }
        out
    }

    fn add_term(&mut self, e: Vec<i64>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = LaurentPoly::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.iter().zip(eb).map(|(a, b)| a + b).collect(), ca * cb);
            }
        }
        out
    }

    /// Multiplies by the monomial with exponent vector `shift`.
    pub fn shift(&self, shift: &[i64]) -> LaurentPoly {
        assert_eq!(shift.len(), self.vars.len());
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Converts to an ordinary polynomial, failing on any negative exponent.
    pub fn to_poly(&self) -> Result<MultiPoly, PolyError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            if let Some(i) = e.iter().position(|&k| k < 0) {
                return Err(PolyError::LaurentResult {
                    var: self.vars[i].clone(),
                    exponent: e[i],
                });
            }
            terms.push((e.iter().map(|&k| k as u32).collect(), c.clone()));
        }
        Ok(MultiPoly::from_terms(&self.vars, terms))
    }
}

/// Assignment of a coefficient times a Laurent monomial to each source variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    target_vars: Vec<String>,
    assignments: BTreeMap<String, (Rational, Vec<i64>)>,
}

impl MonomialMap {
    pub fn new<S: AsRef<str>>(target_vars: &[S]) -> Self {
        MonomialMap {
            target_vars: target_vars.iter().map(|v| v.as_ref().to_string()).collect(),
            assignments: BTreeMap::new(),
        }
    }

    pub fn target_vars(&self) -> &[String] {
        &self.target_vars
    }

    pub fn assign(mut self, source: &str, coeff: Rational, exps: Vec<i64>) -> Self {
        assert_eq!(
            exps.len(),
            self.target_vars.len(),
            "exponent vector length mismatch"
        );
        self.assignments.insert(source.to_string(), (coeff, exps));
        self
    }

    /// Assigns `source ↦ coeff · Π name^k` for the listed `(name, k)` pairs.
    pub fn assign_named(self, source: &str, coeff: Rational, factors: &[(&str, i64)]) -> Self {
        let mut e = vec![0i64; self.target_vars.len()];
        for (name, k) in factors {
            let i = self
                .target_vars
                .iter()
                .position(|v| v == name)
                .unwrap_or_else(|| panic!("unknown target variable {name}"));
            e[i] += k;
        }
        self.assign(source, coeff, e)
    }

    pub fn get(&self, source: &str) -> Option<&(Rational, Vec<i64>)> {
        self.assignments.get(source)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &(Rational, Vec<i64>))> {
        self.assignments.iter()
    }
}

/// Applies `m` to `p`, returning the raw Laurent image.
pub fn substitute_laurent(p: &MultiPoly, m: &MonomialMap) -> Result<LaurentPoly, PolyError> {
    let n = m.target_vars.len();
    let mut images = Vec::with_capacity(p.vars().len());
    for (i, v) in p.vars().iter().enumerate() {
        let used = p.terms().any(|(e, _)| e[i] > 0);
        match m.assignments.get(v) {
            Some(a) => images.push(Some(a)),
            None if used => return Err(PolyError::MissingAssignment { var: v.clone() }),
            None => images.push(None),
        }
    }
    let mut out = LaurentPoly::zero(&m.target_vars);
    for (e, c) in p.terms() {
        let mut coeff = c.clone();
        let mut exps = vec![0i64; n];
        for (i, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let (ac, ae) = images[i].unwrap();
            if !ac.is_one() {
                coeff *= num_traits::pow(ac.clone(), k as usize);
            }
            for (slot, &x) in exps.iter_mut().zip(ae) {
                *slot += x * k as i64;
            }
        }
        out.add_term(exps, coeff);
    }
    Ok(out)
}

/// Applies `m` to `p`; every exponent of the collected result must be ≥ 0.
pub fn substitute(p: &MultiPoly, m: &MonomialMap) -> Result<MultiPoly, PolyError> {
    substitute_laurent(p, m)?.to_poly()
}

/// Replaces the variable `var` of `p` by the polynomial `q`.
pub fn compose(p: &MultiPoly, var: &str, q: &MultiPoly) -> MultiPoly {
    let coeffs = p.coeffs_in(var);
    let vars = p.merged_vars(q);
    let q = q.with_vars(&vars).unwrap();
    let mut out = MultiPoly::zero(&vars);
    let mut power = MultiPoly::one(&vars);
    for (k, c) in coeffs.iter().enumerate() {
        if k > 0 {
            power = &power * &q;
        }
        if !c.is_zero() {
            out = &out + &(&c.with_vars(&vars).unwrap() * &power);
        }
    }
    out
}
