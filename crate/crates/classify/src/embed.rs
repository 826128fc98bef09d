use polycore::{rat, wpl_vars, MonomialMap, Rational, WplPresentation};

use crate::types::{DeformationClass, DeformationType, Signature};
use crate::ClassifyError;

pub fn dolgachev_numbers(c: &DeformationClass) -> Result<Signature, ClassifyError> {
    let [p1, p2, p3] = c.p;
    let m = c.m;
    let (a1, a2, a3) = match c.kind {
        DeformationType::I => (p1 / m, p2 / m, p3),
        DeformationType::II1 => (p3 * (p1 - 1) / m, p2 / m, p3),
        DeformationType::II2 => (p3 * (p1 - 1) / m, p3 / m, p2),
        DeformationType::III => (p3 * (p1 - 1) / m, p3 * (p2 - 1) / m, p3),
        DeformationType::IV => (p3 * (p1 - 1) / m, (p1 * p2 - p1 + 1) / m, p3),
        DeformationType::V => {
            if c.p != [3, 2, 2] {
                return Err(ClassifyError::UnsupportedTypeV(c.p));
            }
            return Signature::new(vec![3, 4, 5]);
        }
    };
    let mut alphas = vec![a1, a2];
    alphas.extend(std::iter::repeat_n(a3, m as usize));
    Signature::new(alphas)
}

/// Images of `x, y, z` in `X₁..X_{m+2}` as exponent vectors.
pub fn generator_images(c: &DeformationClass) -> Result<[Vec<i64>; 3], ClassifyError> {
    let r = c.m as usize + 2;
    let p3 = i64::from(c.p[2]);
    let unit = |pairs: &[(usize, i64)]| {
        let mut e = vec![0i64; r];
        for &(i, k) in pairs {
            e[i - 1] += k;
        }
        e
    };
    let arms = |e: &mut Vec<i64>| {
        for k in e.iter_mut().skip(2) {
            *k += 1;
        }
    };
    let images = match c.kind {
        DeformationType::I => {
            let mut z = unit(&[]);
            arms(&mut z);
            [unit(&[(1, 1)]), unit(&[(2, 1)]), z]
        }
        DeformationType::II1 => {
            let mut z = unit(&[(1, 1)]);
            arms(&mut z);
            [unit(&[(1, p3)]), unit(&[(2, 1)]), z]
        }
        DeformationType::II2 => {
            let mut y = unit(&[]);
            arms(&mut y);
            [unit(&[(1, p3)]), y, unit(&[(1, 1), (2, 1)])]
        }
        DeformationType::III => {
            let mut z = unit(&[(1, 1), (2, 1)]);
            arms(&mut z);
            [unit(&[(1, p3)]), unit(&[(2, p3)]), z]
        }
        DeformationType::IV => {
            let mut z = unit(&[(1, 1)]);
            arms(&mut z);
            [unit(&[(1, p3), (2, 1)]), unit(&[(2, i64::from(c.p[0]))]), z]
        }
        DeformationType::V => {
            if c.p != [3, 2, 2] {
                return Err(ClassifyError::UnsupportedTypeV(c.p));
            }
            [
                unit(&[(2, 1), (3, 2)]),
                unit(&[(1, 2), (3, 1)]),
                unit(&[(1, 1), (2, 3)]),
            ]
        }
    };
    Ok(images)
}

/// Substitutes the generator images into the template and reduces modulo
/// the weighted projective line relations for the given λ.
pub fn verify_embedding(c: &DeformationClass, lambdas: &[Rational]) -> Result<bool, ClassifyError> {
    let sig = dolgachev_numbers(c)?;
    let images = generator_images(c)?;
    let vars = ["x", "y", "z"];
    let f = crate::types::template(c.kind, c.p, c.m, lambdas, &vars);
    let xs = wpl_vars(sig.r());
    let mut map = MonomialMap::new(&xs);
    for (name, e) in vars.iter().zip(images) {
        map = map.assign(name, rat(1), e);
    }
    let image = polycore::substitute(&f, &map)?;
    let w = WplPresentation::new(sig.alphas().to_vec(), lambdas.to_vec())?;
    Ok(w.reduces_to_zero(&image))
}
