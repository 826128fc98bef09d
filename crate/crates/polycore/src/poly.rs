use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::PolyError;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse polynomial with rational coefficients over an ordered list of
/// variables. Zero coefficients are never stored, so structural equality is
/// polynomial equality for a fixed variable list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn owned_vars<S: AsRef<str>>(vars: &[S]) -> Vec<String> {
    vars.iter().map(|v| v.as_ref().to_string()).collect()
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly {
            vars: owned_vars(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Rational) -> Self {
        let n = vars.len();
        Self::monomial(vars, vec![0; n], c)
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn monomial<S: AsRef<str>>(vars: &[S], exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly {
            vars: owned_vars(vars),
            terms,
        }
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self, PolyError> {
        let idx = vars
            .iter()
            .position(|v| v.as_ref() == name)
            .ok_or_else(|| PolyError::UnknownVariable {
                name: name.into(),
                pos: None,
            })?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Ok(Self::monomial(vars, e, Rational::one()))
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Self
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Returns `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in `name`; `None` for the zero polynomial, `Some(0)` if `name`
    /// does not occur.
    pub fn degree_in(&self, name: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        match self.var_index(name) {
            Some(i) => self.terms.keys().map(|e| e[i]).max(),
            None => Some(0),
        }
    }

    /// Names of variables that occur with a positive exponent.
    pub fn support_vars(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .map(|i| self.vars[i].clone())
            .collect()
    }

    /// Re-expresses the polynomial over `new_vars`, which must contain every
    /// variable that occurs.
    pub fn with_vars<S: AsRef<str>>(&self, new_vars: &[S]) -> Result<Self, PolyError> {
        let new_vars = owned_vars(new_vars);
        if new_vars == self.vars {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let j = new_vars.iter().position(|w| w == v);
            if j.is_none() && self.terms.keys().any(|e| e[i] > 0) {
                return Err(PolyError::UnknownVariable {
                    name: v.clone(),
                    pos: None,
                });
            }
            map.push(j);
        }
        let mut out = MultiPoly::zero(&new_vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; new_vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    ne[j] += k;
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Variable list of `self` followed by the variables of `other` not yet present.
    pub fn merged_vars(&self, other: &MultiPoly) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    pub(crate) fn aligned(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let vars = a.merged_vars(b);
        (a.with_vars(&vars).unwrap(), b.with_vars(&vars).unwrap())
    }

    /// Renames variables according to `map`; unmapped names are kept.
    pub fn rename(&self, map: &[(&str, &str)]) -> MultiPoly {
        let vars: Vec<String> = self
            .vars
            .iter()
            .map(|v| {
                map.iter()
                    .find(|(from, _)| from == v)
                    .map(|(_, to)| to.to_string())
                    .unwrap_or_else(|| v.clone())
            })
            .collect();
        MultiPoly {
            vars,
            terms: self.terms.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut result = MultiPoly::one(&self.vars);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Coefficients with respect to `name`: entry `k` is the coefficient of
    /// `name^k`, expressed over the same variable list.
    pub fn coeffs_in(&self, name: &str) -> Vec<MultiPoly> {
        let Some(i) = self.var_index(name) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(name).unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(&self.vars); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne[i] as usize;
            ne[i] = 0;
            out[k].add_term(ne, c.clone());
        }
        out
    }

    /// Lexicographically largest term, used as the leading term in division.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() {
            return None;
        }
        let (r0, d) = MultiPoly::aligned(self, d);
        if let Some(c) = d.as_constant() {
            return Some(r0.scale(&(Rational::one() / c)));
        }
        let (de, dc) = d
            .leading_term()
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut r = r0;
        let mut q = MultiPoly::zero(&r.vars);
        while let Some((re, rc)) = r.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let te: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let tc = rc / &dc;
            for (e, c) in &d.terms {
                let ne: Vec<u32> = e.iter().zip(&te).map(|(a, b)| a + b).collect();
                r.add_term(ne, -(c * &tc));
            }
            q.add_term(te, tc);
        }
        Some(q)
    }

    /// Sets each listed variable to a rational value, keeping the variable list.
    pub fn eval_at(&self, values: &[(&str, Rational)]) -> MultiPoly {
        let idx: Vec<(usize, &Rational)> = values
            .iter()
            .filter_map(|(n, v)| self.var_index(n).map(|i| (i, v)))
            .collect();
        let mut out = MultiPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let mut nc = c.clone();
            for &(i, v) in &idx {
                nc *= num_traits::pow(v.clone(), ne[i] as usize);
                ne[i] = 0;
            }
            out.add_term(ne, nc);
        }
        out
    }

    /// Weighted degree of each term under integer weights, one per variable.
    pub fn term_degrees(&self, weights: &[i64]) -> Vec<i64> {
        assert_eq!(weights.len(), self.vars.len());
        self.terms
            .keys()
            .map(|e| e.iter().zip(weights).map(|(&k, &w)| k as i64 * w).sum())
            .collect()
    }

    /// `Ok(Some(d))` if homogeneous of weighted degree `d`, `Ok(None)` for the
    /// zero polynomial, and an error if terms have different degrees.
    pub fn weighted_degree(&self, weights: &[i64]) -> Result<Option<i64>, PolyError> {
        let degs = self.term_degrees(weights);
        match degs.first() {
            None => Ok(None),
            Some(&d) if degs.iter().all(|&x| x == d) => Ok(Some(d)),
            Some(_) => Err(PolyError::Inhomogeneous {
                poly: self.to_string(),
            }),
        }
    }

    fn print_order(a: &[u32], b: &[u32]) -> Ordering {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        db.cmp(&da).then_with(|| b.cmp(a))
    }

    /// Terms in graded lexicographic order, largest first.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|x, y| Self::print_order(x.0, y.0));
        v
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], x)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", a, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = MultiPoly::aligned(self, rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = MultiPoly::aligned(self, rhs);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::aligned(self, rhs);
        let mut out = MultiPoly::zero(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}
