use std::fmt;

use num_integer::Integer;

use crate::snf::{smith_normal_form, SmithForm};
use crate::weights::{canonical_weights, ExponentMatrix, WeightSystem};
use crate::GradingError;

/// An element of `ℤ^rank ⊕ ⊕ ℤ/tᵢ`, torsion coordinates reduced into `0..tᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

/// Finitely generated abelian group presented by generators and relations,
/// together with a degree map to `ℤ` defined on the generators.
#[derive(Clone, Debug)]
pub struct GradingGroup {
    smith: SmithForm,
    /// Column of the Smith form for each torsion factor.
    torsion_cols: Vec<usize>,
    free_cols: Vec<usize>,
    torsion: Vec<i64>,
    generators: Vec<GroupElement>,
    degrees: Vec<i64>,
}

impl GradingGroup {
    /// Cokernel of the row space of `relations` in `ℤ^{degrees.len()}`. The
    /// free coordinate is oriented so that generators of positive degree
    /// have positive free part.
    pub fn from_relations(relations: &[Vec<i64>], degrees: Vec<i64>) -> Result<Self, GradingError> {
        let cols = degrees.len();
        let m: Vec<Vec<i128>> = relations
            .iter()
            .map(|r| r.iter().map(|&x| i128::from(x)).collect())
            .collect();
        let mut smith = if m.is_empty() {
            SmithForm {
                diagonal: vec![],
                rank: 0,
                v: identity(cols),
                v_inv: identity(cols),
            }
        } else {
            smith_normal_form(&m)
        };
        let mut torsion_cols = Vec::new();
        let mut torsion = Vec::new();
        for (k, &d) in smith.diagonal.iter().enumerate() {
            if d > 1 {
                torsion_cols.push(k);
                torsion.push(d as i64);
            }
        }
        let free_cols: Vec<usize> = (smith.rank..cols).collect();
        for &k in &free_cols {
            let deg: i128 = (0..cols)
                .map(|j| smith.v_inv[k][j] * i128::from(degrees[j]))
                .sum();
            if deg < 0 {
                for row in smith.v.iter_mut() {
                    row[k] = -row[k];
                }
                for x in smith.v_inv[k].iter_mut() {
                    *x = -*x;
                }
            }
        }
        let mut g = GradingGroup {
            smith,
            torsion_cols,
            free_cols,
            torsion,
            generators: Vec::new(),
            degrees,
        };
        g.generators = (0..cols)
            .map(|j| {
                let mut e = vec![0; cols];
                e[j] = 1;
                g.class_of(&e)
            })
            .collect();
        Ok(g)
    }

    pub fn rank(&self) -> usize {
        self.free_cols.len()
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Class of the integer combination `Σ vⱼ·(generator j)`.
    pub fn class_of(&self, v: &[i64]) -> GroupElement {
        let image = |k: usize| -> i128 {
            v.iter()
                .enumerate()
                .map(|(j, &x)| i128::from(x) * self.smith.v[j][k])
                .sum()
        };
        GroupElement {
            free: self.free_cols.iter().map(|&k| image(k) as i64).collect(),
            torsion: self
                .torsion_cols
                .iter()
                .zip(&self.torsion)
                .map(|(&k, &t)| image(k).rem_euclid(i128::from(t)) as i64)
                .collect(),
        }
    }

    pub fn degree_of(&self, v: &[i64]) -> i64 {
        v.iter().zip(&self.degrees).map(|(a, b)| a * b).sum()
    }

    /// Degrees of the free generators.
    pub fn free_generator_degrees(&self) -> Vec<i64> {
        self.free_cols
            .iter()
            .map(|&k| {
                let d: i128 = self.smith.v_inv[k]
                    .iter()
                    .zip(&self.degrees)
                    .map(|(&a, &b)| a * i128::from(b))
                    .sum();
                d as i64
            })
            .collect()
    }

    pub fn degree_map_is_iso(&self) -> bool {
        self.torsion.is_empty() && self.free_generator_degrees() == [1]
    }
}

impl fmt::Display for GradingGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = vec!["ℤ".to_string(); self.rank()];
        parts.extend(self.torsion.iter().map(|t| format!("ℤ/{t}")));
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

/// `L_f`: generators `x⃗₁..x⃗ₙ, f⃗` modulo `f⃗ = Σⱼ E_{ij} x⃗ⱼ` for every row.
pub fn maximal_grading(e: &ExponentMatrix) -> Result<GradingGroup, GradingError> {
    let w = canonical_weights(e)?;
    let mut degrees: Vec<i64> = w.weights.iter().map(|x| x / w.c).collect();
    degrees.push(w.degree / w.c);
    let relations: Vec<Vec<i64>> = e
        .rows()
        .iter()
        .map(|r| {
            let mut row: Vec<i64> = r.iter().map(|&x| -i64::from(x)).collect();
            row.push(1);
            row
        })
        .collect();
    let g = GradingGroup::from_relations(&relations, degrees)?;
    if g.rank() != 1 {
        return Err(GradingError::RankNotOne(g.rank()));
    }
    Ok(g)
}

pub fn is_degree_iso(g: &GradingGroup, w: &WeightSystem) -> bool {
    let n = w.weights.len();
    g.degrees().len() == n + 1
        && g.degrees()[..n]
            .iter()
            .zip(&w.weights)
            .all(|(&d, &x)| d * w.c == x)
        && g.degree_map_is_iso()
}

/// `L(A)` for a weighted projective line with signature `alphas`:
/// generators `X⃗₁..X⃗ᵣ` modulo `α₁X⃗₁ = αᵢX⃗ᵢ`, with `deg X⃗ᵢ = lcm(α)/αᵢ`.
pub fn wpl_grading(alphas: &[u32]) -> Result<GradingGroup, GradingError> {
    let r = alphas.len();
    if r == 0 || alphas.contains(&0) {
        return Err(GradingError::Shape { n: r, rows: 0 });
    }
    let l = alphas.iter().fold(1i64, |acc, &a| acc.lcm(&i64::from(a)));
    let degrees: Vec<i64> = alphas.iter().map(|&a| l / i64::from(a)).collect();
    let relations: Vec<Vec<i64>> = (1..r)
        .map(|i| {
            let mut row = vec![0; r];
            row[0] = i64::from(alphas[0]);
            row[i] = -i64::from(alphas[i]);
            row
        })
        .collect();
    let g = GradingGroup::from_relations(&relations, degrees)?;
    if g.rank() != 1 {
        return Err(GradingError::RankNotOne(g.rank()));
    }
    Ok(g)
}
