use std::fmt;

use classify::Signature;

use crate::AtlasError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kodaira {
    II,
    III,
    IV,
    I0Star,
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kodaira::II => "II",
            Kodaira::III => "III",
            Kodaira::IV => "IV",
            Kodaira::I0Star => "I0*",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grade {
    pub d: i64,
    pub kodaira: Kodaira,
    pub ell: i64,
}

/// The row pattern a signature falls in, and the value `s − k` attached to
/// it (`c − 6`, `b + c − 8`, `a + b + c − 9`, `a + b + c + d − 8`).
fn pattern(s: &Signature) -> Result<(Kodaira, i64), AtlasError> {
    let v: Vec<i64> = s.sorted().into_iter().map(i64::from).collect();
    let sum: i64 = v.iter().sum();
    match v.as_slice() {
        [2, 3, c] if *c >= 7 => Ok((Kodaira::II, c - 6)),
        [2, b, c] if *b >= 4 && *c >= 4 => Ok((Kodaira::III, b + c - 8)),
        [a, _, _] if *a >= 3 => Ok((Kodaira::IV, sum - 9)),
        [_, _, _, _] => Ok((Kodaira::I0Star, sum - 8)),
        _ => Err(AtlasError::UnsupportedSignature(s.alphas().to_vec())),
    }
}

fn class_number(k: Kodaira) -> i64 {
    match k {
        Kodaira::II => 1,
        Kodaira::III => 2,
        Kodaira::IV => 3,
        Kodaira::I0Star => 4,
    }
}

/// Grade, Kodaira type and `ℓ` from Dolgachev numbers.
pub fn grade_and_class(s: &Signature) -> Result<Grade, AtlasError> {
    let (kodaira, d) = pattern(s)?;
    Ok(Grade {
        d,
        kodaira,
        ell: class_number(kodaira),
    })
}

/// `(D, ℓ)` from Gabrielov numbers: the class fixes `D`, the formula gives `ℓ`.
pub fn grade_from_gabrielov(s: &Signature) -> Result<(i64, i64), AtlasError> {
    let (kodaira, ell) = pattern(s)?;
    Ok((class_number(kodaira), ell))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn patterns_use_sorted_entries() {
        let s = Signature::new(vec![7, 3, 2]).unwrap();
        assert_eq!(pattern(&s).unwrap(), (Kodaira::II, 1));
        let s = Signature::new(vec![4, 2, 5]).unwrap();
        assert_eq!(pattern(&s).unwrap(), (Kodaira::III, 1));
        let s = Signature::new(vec![2, 2, 2, 2]).unwrap();
        assert_eq!(pattern(&s).unwrap(), (Kodaira::I0Star, 0));
    }
}
