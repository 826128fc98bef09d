use num_integer::Integer;
use polycore::MultiPoly;

use crate::GradingError;

/// Exponent vectors of an invertible polynomial (the first `n` rows) followed
/// by any deformation monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentMatrix {
    n: usize,
    rows: Vec<Vec<u32>>,
    swapped: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub weights: Vec<i64>,
    pub degree: i64,
    pub c: i64,
    pub epsilon: i64,
}

impl WeightSystem {
    pub fn reduced(&self) -> WeightSystem {
        WeightSystem {
            weights: self.weights.iter().map(|w| w / self.c).collect(),
            degree: self.degree / self.c,
            c: 1,
            epsilon: self.epsilon,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.c == 1
    }
}

impl std::fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let w: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "({};{})", w.join(","), self.degree)
    }
}

pub(crate) fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

impl ExponentMatrix {
    /// Validates shape and invertibility; swaps the first two rows if needed
    /// so that the top block has positive determinant.
    pub fn new(n: usize, rows: Vec<Vec<u32>>) -> Result<Self, GradingError> {
        if n == 0 || rows.len() < n || rows.iter().any(|r| r.len() != n) {
            return Err(GradingError::Shape {
                n,
                rows: rows.len(),
            });
        }
        let mut e = ExponentMatrix {
            n,
            rows,
            swapped: None,
        };
        let d = e.determinant();
        if d == 0 {
            return Err(GradingError::Singular);
        }
        if d < 0 {
            if n == 1 {
                return Err(GradingError::Singular);
            }
            e.rows.swap(0, 1);
            e.swapped = Some((0, 1));
        }
        Ok(e)
    }

    /// Picks the invertible part among the monomials of `f`: the first
    /// `n`-subset (in printing order) with positive canonical weights under
    /// which every remaining monomial has the same degree.
    pub fn from_poly(f: &MultiPoly) -> Result<Self, GradingError> {
        let n = f.vars().len();
        let monos: Vec<Vec<u32>> = f
            .sorted_terms()
            .into_iter()
            .map(|(e, _)| e.clone())
            .collect();
        if monos.len() < n {
            return Err(GradingError::NotInvertible(f.to_string()));
        }
        let mut found_weights = false;
        for subset in combinations(monos.len(), n) {
            let top: Vec<Vec<u32>> = subset.iter().map(|&i| monos[i].clone()).collect();
            let Ok(e) = ExponentMatrix::new(n, top) else {
                continue;
            };
            let Ok(w) = canonical_weights(&e) else {
                continue;
            };
            let rest: Vec<Vec<u32>> = (0..monos.len())
                .filter(|i| !subset.contains(i))
                .map(|i| monos[i].clone())
                .collect();
            if rest.iter().all(|r| row_degree(r, &w.weights) == w.degree) {
                let mut rows = e.rows.clone();
                rows.extend(rest);
                return Ok(ExponentMatrix {
                    n,
                    rows,
                    swapped: e.swapped,
                });
            }
            found_weights = true;
        }
        if found_weights {
            Err(GradingError::InconsistentDeformation(f.to_string()))
        } else {
            Err(GradingError::NotInvertible(f.to_string()))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn invertible_part(&self) -> &[Vec<u32>] {
        &self.rows[..self.n]
    }

    pub fn deformation_rows(&self) -> &[Vec<u32>] {
        &self.rows[self.n..]
    }

    /// Row swap applied at construction to make the determinant positive.
    pub fn swapped_rows(&self) -> Option<(usize, usize)> {
        self.swapped
    }

    pub fn determinant(&self) -> i128 {
        let m: Vec<Vec<i128>> = self.rows[..self.n]
            .iter()
            .map(|r| r.iter().map(|&x| i128::from(x)).collect())
            .collect();
        det(&m)
    }
}

fn row_degree(row: &[u32], w: &[i64]) -> i64 {
    row.iter().zip(w).map(|(&e, &w)| i64::from(e) * w).sum()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Solves `E·w = det(E)·(1..1)ᵀ` by Cramer's rule: `wᵢ` is the determinant
/// of the top block with column `i` replaced by ones.
pub fn canonical_weights(e: &ExponentMatrix) -> Result<WeightSystem, GradingError> {
    let n = e.n;
    let top: Vec<Vec<i128>> = e.rows[..n]
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let d = det(&top);
    if d == 0 {
        return Err(GradingError::Singular);
    }
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        let mut m = top.clone();
        for row in m.iter_mut() {
            row[i] = 1;
        }
        weights.push(det(&m));
    }
    if d < 0 || weights.iter().any(|&w| w <= 0) {
        return Err(GradingError::NonPositiveWeight(
            weights.iter().map(|&w| w as i64).collect(),
        ));
    }
    let weights: Vec<i64> = weights.into_iter().map(|w| w as i64).collect();
    let degree = d as i64;
    for (k, row) in e.rows.iter().enumerate() {
        if row_degree(row, &weights) != degree {
            return Err(GradingError::InconsistentRow(k));
        }
    }
    let c = weights.iter().fold(degree, |g, &w| g.gcd(&w));
    let epsilon = weights.iter().map(|w| w / c).sum::<i64>() - degree / c;
    Ok(WeightSystem {
        weights,
        degree,
        c,
        epsilon,
    })
}
