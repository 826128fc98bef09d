use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use polycore::{rat, MonomialMap, MultiPoly, Rational};

use crate::types::{DeformationClass, DeformationType};
use crate::{dolgachev_numbers, ClassifyError};

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// `Π (u^a − λᵢ v^b)` data recovered from a polynomial in `u`, `v` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialProduct {
    pub m: u32,
    pub a: u32,
    pub b: u32,
    pub lambdas: Vec<Rational>,
}

/// All ways of writing `q` as `Π_{i=1}^m (u^a − λᵢ v^b)` with `a, b ≥ 1`,
/// distinct nonzero rational `λᵢ` and `1` among them. The returned λ lists
/// start with `1`, the rest ascending.
pub fn binomial_products(q: &MultiPoly, u: usize, v: usize) -> Vec<BinomialProduct> {
    let n = q.vars().len();
    let mut top_u = 0;
    let mut top_v = 0;
    for (e, _) in q.terms() {
        if (0..n).any(|k| k != u && k != v && e[k] > 0) {
            return vec![];
        }
        top_u = top_u.max(e[u]);
        top_v = top_v.max(e[v]);
    }
    if top_u == 0 || top_v == 0 {
        return vec![];
    }
    let g = top_u.gcd(&top_v);
    let mut out = Vec::new();
    for m in (1..=g).filter(|m| g % m == 0) {
        let (a, b) = (top_u / m, top_v / m);
        let mut coeffs = vec![Rational::zero(); m as usize + 1];
        let mut shaped = true;
        for (e, c) in q.terms() {
            let k = e[v] / b;
            if e[v] % b != 0 || e[u] != a * (m - k) {
                shaped = false;
                break;
            }
            coeffs[k as usize] = c.clone();
        }
        if !shaped || !coeffs[0].is_one() {
            continue;
        }
        // r(t) = Σ coeffs[k] t^{m−k} = Π (t − λᵢ)
        let r: Vec<Rational> = coeffs.iter().rev().cloned().collect();
        let roots = rational_roots(&r);
        if roots.len() != m as usize
            || !roots.contains(&rat(1))
            || roots.iter().any(|x| x.is_zero())
        {
            continue;
        }
        let mut lambdas = vec![rat(1)];
        lambdas.extend(roots.into_iter().filter(|x| *x != rat(1)));
        out.push(BinomialProduct { m, a, b, lambdas });
    }
    out
}

fn eval(r: &[Rational], t: &Rational) -> Rational {
    r.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let Some(n) = n.abs().to_u64() else {
        return vec![];
    };
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out
}

/// Distinct rational roots of the polynomial with coefficients `r` (index =
/// power), ascending.
pub fn rational_roots(r: &[Rational]) -> Vec<Rational> {
    let Some(deg) = r.iter().rposition(|c| !c.is_zero()) else {
        return vec![];
    };
    let low = r.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let den = r.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = r
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    if deg > low {
        for p in divisors(&ints[low]) {
            for q in divisors(&ints[deg]) {
                for s in [1, -1] {
                    let t = Rational::new(&p * BigInt::from(s), q.clone());
                    if !roots.contains(&t) && eval(r, &t).is_zero() {
                        roots.push(t);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Terms of `g` that involve the variable `k`.
fn terms_with(g: &MultiPoly, k: usize) -> Vec<(Vec<u32>, Rational)> {
    g.terms()
        .filter(|(e, _)| e[k] > 0)
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect()
}

/// Matches `g` (already in template coordinates) against one type.
fn match_type(
    g: &MultiPoly,
    kind: DeformationType,
) -> Vec<([u32; 3], u32, Vec<Rational>, Rational)> {
    let vars = g.vars().to_vec();
    let mono = |e: [u32; 3], c: Rational| MultiPoly::monomial(&vars, e.to_vec(), c);
    let mut out = Vec::new();
    match kind {
        DeformationType::V => {
            if g.num_terms() != 3 {
                return out;
            }
            let Some((e, c)) = g.terms().find(|(e, _)| e[0] == 0 && e[1] > 0 && e[2] == 1) else {
                return out;
            };
            let p2 = e[1];
            let scalar = c.clone();
            let h = g.scale(&(Rational::one() / &scalar));
            let Some((ex, _)) = h.terms().find(|(e, _)| e[0] > 0 && e[1] == 1 && e[2] == 0) else {
                return out;
            };
            let Some((ez, _)) = h.terms().find(|(e, _)| e[0] == 1 && e[1] == 0 && e[2] >= 2) else {
                return out;
            };
            let p = [ex[0], p2, ez[2]];
            if p[0] >= 1 && p2 >= 1 {
                out.push((p, 1, vec![rat(1)], scalar));
            }
        }
        _ => {
            // The term that is not part of the product: its variable and shape.
            let (tail_var, tail_prefix, prefix, u) = match kind {
                DeformationType::I => (2, [0, 0, 0], [0, 0, 0], 1),
                DeformationType::II1 => (2, [0, 0, 0], [1, 0, 0], 1),
                DeformationType::III => (2, [0, 0, 0], [1, 1, 0], 1),
                DeformationType::IV => (2, [0, 1, 0], [1, 0, 0], 1),
                DeformationType::II2 => (1, [1, 0, 0], [0, 0, 0], 2),
                DeformationType::V => unreachable!(),
            };
            let tails = terms_with(g, tail_var);
            if tails.len() != 1 {
                return out;
            }
            let (e, scalar) = tails[0].clone();
            let power = e[tail_var];
            let mut expect = tail_prefix;
            expect[tail_var] = power;
            if e != expect.to_vec() {
                return out;
            }
            let h = g.scale(&(Rational::one() / &scalar));
            let rest = &mono(expect, rat(1)) - &h;
            let Some(q) = rest.div_exact(&mono(prefix, rat(1))) else {
                return out;
            };
            for bp in binomial_products(&q, u, 0) {
                let m = bp.m;
                let p = match kind {
                    DeformationType::I => [bp.b * m, bp.a * m, power],
                    DeformationType::II1 | DeformationType::IV => [bp.b * m + 1, bp.a * m, power],
                    DeformationType::III => [bp.b * m + 1, bp.a * m + 1, power],
                    DeformationType::II2 => {
                        if m < 2 {
                            continue;
                        }
                        [bp.b * m, power, bp.a * m]
                    }
                    DeformationType::V => unreachable!(),
                };
                out.push((p, m, bp.lambdas, scalar.clone()));
            }
        }
    }
    out
}

/// Expresses `f` in template coordinates: `v[perm[i]] ↦ signs[i]·tᵢ`.
fn to_template_coords(f: &MultiPoly, perm: [usize; 3], signs: [i8; 3]) -> MultiPoly {
    let vars = f.vars().to_vec();
    let mut map = MonomialMap::new(&vars);
    for i in 0..3 {
        let mut e = vec![0i64; 3];
        e[i] = 1;
        map = map.assign(&vars[perm[i]], rat(i64::from(signs[i])), e);
    }
    polycore::substitute(f, &map).expect("signed permutation of variables")
}

fn sign_flips(s: [i8; 3]) -> usize {
    s.iter().filter(|&&x| x < 0).count()
}

fn perm_index(p: [usize; 3]) -> usize {
    PERMUTATIONS
        .iter()
        .position(|&q| q == p)
        .unwrap_or(usize::MAX)
}

/// Every match of `f` against every template, over signed permutations of
/// the variables, with the exact reconstruction check applied.
pub fn all_matches(f: &MultiPoly) -> Vec<DeformationClass> {
    let mut out = Vec::new();
    for perm in PERMUTATIONS {
        for mask in 0..8u8 {
            let signs = [0, 1, 2].map(|k| if mask >> k & 1 == 1 { -1 } else { 1 });
            let g = to_template_coords(f, perm, signs);
            for kind in DeformationType::ALL {
                for (p, m, lambdas, scalar) in match_type(&g, kind) {
                    let Ok(mut c) = DeformationClass::new(kind, p, m, lambdas) else {
                        continue;
                    };
                    c.permutation = perm;
                    c.signs = signs;
                    c.scalar = scalar;
                    if c.reconstruct(f.vars()) == *f {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

/// Preference among matches describing the same deformation.
fn preference(c: &DeformationClass) -> (bool, bool, usize, bool, usize, [u32; 3]) {
    let [p1, p2, p3] = c.p;
    let ordered = c.kind == DeformationType::I && c.m == 1 && p3 <= p1 && p1 <= p2;
    (
        dolgachev_numbers(c).is_err(),
        !ordered,
        sign_flips(c.signs),
        c.scalar != rat(1),
        perm_index(c.permutation),
        c.p,
    )
}

pub fn classify_deformation(f: &MultiPoly) -> Result<DeformationClass, ClassifyError> {
    if f.vars().len() != 3 {
        return Err(ClassifyError::NotThreeVariables(f.vars().len()));
    }
    grading::analyse(f).map_err(ClassifyError::NotDeformation)?;
    let matches = all_matches(f);
    if matches.is_empty() {
        return Err(ClassifyError::NoMatch(f.to_string()));
    }
    // Rotations of a loop are one deformation, whatever their signatures.
    let key = |c: &DeformationClass| {
        let sig = match c.kind {
            DeformationType::V => {
                let mut p = c.p.to_vec();
                p.sort_unstable();
                p
            }
            _ => dolgachev_numbers(c).map(|s| s.sorted()).unwrap_or_default(),
        };
        (c.kind, c.m, sig)
    };
    let first = key(&matches[0]);
    if matches.iter().any(|c| key(c) != first) {
        let mut distinct: Vec<DeformationClass> = Vec::new();
        for c in &matches {
            if !distinct.iter().any(|d| key(d) == key(c)) {
                distinct.push(c.clone());
            }
        }
        return Err(ClassifyError::Ambiguous(distinct));
    }
    Ok(matches
        .into_iter()
        .min_by_key(preference)
        .expect("nonempty"))
}
