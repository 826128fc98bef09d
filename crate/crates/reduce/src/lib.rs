//! The L, Δ and R reductions, and comparison up to a unit and a renaming of
//! variables.

use mftwo::CompleteIntersection;
use num_traits::Zero;
use polycore::{
    quarter_discriminant_wrt, rat, resultant_wrt, LaurentPoly, MultiPoly, PolyError, Rational,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("expected two equations, got {0}")]
    EquationCount(usize),
    #[error("{0} is not of the form w^3*x + x^3*A(w,x)")]
    Shape(String),
    #[error("variable '{0}' is missing")]
    MissingVariable(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Eliminates `var` from the two equations by their resultant.
pub fn l_reduce(ci: &CompleteIntersection, var: &str) -> Result<MultiPoly, ReduceError> {
    match ci.equations.as_slice() {
        [a, b] => Ok(resultant_wrt(a, b, var)?),
        eqs => Err(ReduceError::EquationCount(eqs.len())),
    }
}

/// `z² + Δ_w F` where `Δ_w` is the quarter discriminant `(B/2)² − AC` of
/// `F = Aw² + Bw + C`. The result lives over the variables of `F` other
/// than `w`, followed by `z`.
pub fn delta_reduce(f: &MultiPoly) -> Result<MultiPoly, ReduceError> {
    delta_reduce_in(f, "w", "z")
}

pub fn delta_reduce_in(f: &MultiPoly, w: &str, z: &str) -> Result<MultiPoly, ReduceError> {
    if f.var_index(w).is_none() {
        return Err(ReduceError::MissingVariable(w.into()));
    }
    let disc = quarter_discriminant_wrt(f, w)?;
    let mut vars: Vec<String> = f.vars().iter().filter(|v| *v != w).cloned().collect();
    if !vars.iter().any(|v| v == z) {
        vars.push(z.to_string());
    }
    let disc = disc.with_vars(&vars)?;
    Ok(&MultiPoly::var(&vars, z)?.pow(2) + &disc)
}

/// `w³ + x⁵·A(w/x, x)` for `F = w³x + x³·A(w, x)`.
pub fn r_reduce(f: &MultiPoly) -> Result<MultiPoly, ReduceError> {
    r_reduce_in(f, "w", "x")
}

pub fn r_reduce_in(f: &MultiPoly, w: &str, x: &str) -> Result<MultiPoly, ReduceError> {
    let vars = f.vars().to_vec();
    let var = |name: &str| {
        MultiPoly::var(&vars, name).map_err(|_| ReduceError::MissingVariable(name.into()))
    };
    let (wv, xv) = (var(w)?, var(x)?);
    let shape = ReduceError::Shape(f.to_string());
    let rest = f - &(&wv.pow(3) * &xv);
    let a = rest.div_exact(&xv.pow(3)).ok_or(shape)?;
    let iw = vars.iter().position(|v| v == w).expect("w present");
    let ix = vars.iter().position(|v| v == x).expect("x present");
    // A(w/x, x)·x⁵: each term w^i x^j becomes w^i x^{j − i + 5}.
    let mut out = LaurentPoly::from_poly(&wv.pow(3));
    for (e, c) in a.terms() {
        let mut exps: Vec<i64> = e.iter().map(|&k| i64::from(k)).collect();
        exps[ix] += 5 - exps[iw];
        out = out.add(&LaurentPoly::monomial(&vars, exps, c.clone()));
    }
    Ok(out.to_poly()?)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for k in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(k, n - 1);
            out.push(p);
        }
    }
    out
}

/// A unit `c` and a renaming `σ` (from variables of `p` to variables of `q`)
/// with `q = c·σ(p)`, if any. Only variables that occur are matched.
pub fn unit_and_renaming(
    p: &MultiPoly,
    q: &MultiPoly,
) -> Option<(Rational, Vec<(String, String)>)> {
    if p.is_zero() || q.is_zero() {
        return (p.is_zero() && q.is_zero()).then(|| (rat(1), vec![]));
    }
    let ps = p.support_vars();
    let qs = q.support_vars();
    if ps.len() != qs.len() || p.num_terms() != q.num_terms() {
        return None;
    }
    let p = p.with_vars(&ps).ok()?;
    let q = q.with_vars(&qs).ok()?;
    let (qe, qc) = q.terms().next()?;
    for perm in permutations(ps.len()) {
        let map: Vec<(&str, &str)> = ps
            .iter()
            .zip(&perm)
            .map(|(a, &k)| (a.as_str(), qs[k].as_str()))
            .collect();
        let renamed = p.rename(&map).with_vars(&qs).ok()?;
        let pc = renamed.coeff(qe);
        if pc.is_zero() {
            continue;
        }
        let c = qc / &pc;
        if renamed.scale(&c) == q {
            return Some((
                c,
                map.iter()
                    .map(|(a, b)| (a.to_string(), b.to_string()))
                    .collect(),
            ));
        }
    }
    None
}

pub fn equal_up_to_unit_and_renaming(p: &MultiPoly, q: &MultiPoly) -> bool {
    unit_and_renaming(p, q).is_some()
}
