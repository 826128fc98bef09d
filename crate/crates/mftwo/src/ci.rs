use polycore::{compose, rat, LaurentPoly, MonomialMap, MultiPoly};

use crate::mf::MF2;
use crate::MfError;

/// Which matrix supplies the complete intersection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `(h₁ − w·p₂, h₂ + w·p₁)`, from the entries of `q₀`.
    Q0,
    /// `(p₁ + w·p₂, −h₂ + w·h₁) = q₁·(1, w)ᵀ`.
    Q1,
}

impl std::str::FromStr for Convention {
    type Err = MfError;
    fn from_str(s: &str) -> Result<Self, MfError> {
        match s {
            "q0" => Ok(Convention::Q0),
            "q1" => Ok(Convention::Q1),
            _ => Err(MfError::UnknownConvention(s.into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteIntersection {
    pub vars: Vec<String>,
    pub equations: Vec<MultiPoly>,
    /// Name of the auxiliary variable.
    pub w: String,
}

impl CompleteIntersection {
    pub fn new(w: &str, equations: Vec<MultiPoly>) -> Self {
        let mut vars = vec![w.to_string()];
        for e in &equations {
            for v in e.vars() {
                if !vars.contains(v) {
                    vars.push(v.clone());
                }
            }
        }
        let equations = equations
            .iter()
            .map(|e| e.with_vars(&vars).expect("superset of variables"))
            .collect();
        CompleteIntersection {
            vars,
            equations,
            w: w.to_string(),
        }
    }

    /// Every equation vanishes at the origin.
    pub fn passes_through_origin(&self) -> bool {
        self.equations
            .iter()
            .all(|e| e.coeff(&vec![0; self.vars.len()]) == rat(0))
    }
}

fn fresh_w(vars: &[String]) -> String {
    let mut w = "w".to_string();
    while vars.contains(&w) {
        w.push('\'');
    }
    w
}

pub fn singularity_from_mf(mf: &MF2, convention: Convention) -> CompleteIntersection {
    let wname = fresh_w(mf.vars());
    let mut vars = vec![wname.clone()];
    vars.extend(mf.vars().iter().cloned());
    let w = MultiPoly::var(&vars, &wname).expect("w is in the list");
    let lift = |p: &MultiPoly| p.with_vars(&vars).expect("superset of variables");
    let (p1, p2, h1, h2) = (lift(&mf.p1), lift(&mf.p2), lift(&mf.h1), lift(&mf.h2));
    let equations = match convention {
        Convention::Q0 => vec![&h1 - &(&w * &p2), &h2 + &(&w * &p1)],
        Convention::Q1 => vec![&p1 + &(&w * &p2), &(&w * &h1) - &h2],
    };
    CompleteIntersection {
        vars,
        equations,
        w: wname,
    }
}

/// Solves the equation of the form `c·var + g` (with `g` free of `var`) for
/// `var` and substitutes into the other equation.
pub fn hypersurface_collapse(ci: &CompleteIntersection, var: &str) -> Result<MultiPoly, MfError> {
    if ci.equations.len() != 2 {
        return Err(MfError::NotLinear(var.into()));
    }
    for (k, eq) in ci.equations.iter().enumerate() {
        if eq.degree_in(var) != Some(1) {
            continue;
        }
        let cs = eq.coeffs_in(var);
        let Some(c) = cs[1].as_constant() else {
            continue;
        };
        let solution = cs[0].scale(&(-(rat(1) / c)));
        let other = &ci.equations[1 - k];
        return Ok(compose(other, var, &solution));
    }
    Err(MfError::NotLinear(var.into()))
}

/// The literal two-variable complete intersection, with the first equation
/// multiplied by `x` to clear the fraction `w/x`:
/// `(x·h₁ − w·p₂, h₂ + w·p₁/x)`.
pub fn two_var_ci(mf: &MF2) -> Result<CompleteIntersection, MfError> {
    let wname = fresh_w(mf.vars());
    let mut vars = vec![wname.clone()];
    vars.extend(mf.vars().iter().cloned());
    let lift = |p: &MultiPoly| p.with_vars(&vars).expect("superset of variables");
    let w = MultiPoly::var(&vars, &wname).expect("w is in the list");
    let x = MultiPoly::var(&vars, &mf.vars()[0]).expect("x is in the list");
    let p1_over_x = lift(&mf.p1).div_exact(&x).ok_or(MfError::NotTwoVariable)?;
    let e1 = &(&x * &lift(&mf.h1)) - &(&w * &lift(&mf.p2));
    let e2 = &lift(&mf.h2) + &(&w * &p1_over_x);
    Ok(CompleteIntersection {
        vars,
        equations: vec![e1, e2],
        w: wname,
    })
}

/// `F_Q(w, x) = F_{Q,1}(w, x, y = w·x)` for `F_{Q,1} = h₁ + (w/x)·p₂`, the
/// orientation in which `F_Q = w³x + x^{α+β−2}w^β` holds exactly.
pub fn two_var_fq(mf: &MF2) -> Result<MultiPoly, MfError> {
    let [x, y] = match mf.vars() {
        [x, y] => [x.clone(), y.clone()],
        _ => return Err(MfError::NotTwoVariable),
    };
    let wname = fresh_w(mf.vars());
    let target = [wname.clone(), x.clone()];
    let map = MonomialMap::new(&target)
        .assign(&x, rat(1), vec![0, 1])
        .assign(&y, rat(1), vec![1, 1]);
    let h1 = LaurentPoly::from_poly(&polycore::substitute(&mf.h1, &map)?);
    let p2 = LaurentPoly::from_poly(&polycore::substitute(&mf.p2, &map)?);
    Ok(h1.add(&p2.shift(&[1, -1])).to_poly()?)
}
