//! Smith normal form over the integers with the column transform and its
//! inverse, enough to describe the cokernel of a relation matrix.

pub type Matrix = Vec<Vec<i128>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Diagonal of `U·M·V`; nonzero entries first, each dividing the next.
    pub diagonal: Vec<i128>,
    pub rank: usize,
    pub v: Matrix,
    pub v_inv: Matrix,
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

struct Work {
    a: Matrix,
    v: Matrix,
    v_inv: Matrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, k: usize) {
        self.a.swap(i, k);
    }

    fn add_row(&mut self, dst: usize, src: usize, q: i128) {
        for j in 0..self.a[0].len() {
            let t = self.a[src][j] * q;
            self.a[dst][j] += t;
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(j, k);
        }
        self.v_inv.swap(j, k);
    }

    /// `col_dst += q · col_src`.
    fn add_col(&mut self, dst: usize, src: usize, q: i128) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            let t = row[src] * q;
            row[dst] += t;
        }
        let n = self.v_inv.len();
        for j in 0..n {
            let t = self.v_inv[dst][j] * q;
            self.v_inv[src][j] -= t;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row[j] = -row[j];
        }
        for x in self.v_inv[j].iter_mut() {
            *x = -*x;
        }
    }
}

pub fn smith_normal_form(m: &Matrix) -> SmithForm {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut w = Work {
        a: m.clone(),
        v: identity(cols),
        v_inv: identity(cols),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if w.a[i][j] != 0 && best.is_none_or(|(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if w.a[i][t] != 0 {
                    let q = w.a[i][t] / w.a[t][t];
                    w.add_row(i, t, -q);
                    if w.a[i][t] != 0 {
                        w.swap_rows(t, i);
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if w.a[t][j] != 0 {
                    let q = w.a[t][j] / w.a[t][t];
                    w.add_col(j, t, -q);
                    if w.a[t][j] != 0 {
                        w.swap_cols(t, j);
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            let p = w.a[t][t];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| w.a[i][j] % p != 0));
            match bad {
                Some(i) => w.add_row(t, i, 1),
                None => break,
            }
        }
        if w.a[t][t] < 0 {
            w.negate_col(t);
        }
        t += 1;
    }
    let diagonal: Vec<i128> = (0..rows.min(cols)).map(|i| w.a[i][i]).collect();
    let rank = diagonal.iter().filter(|&&d| d != 0).count();
    SmithForm {
        diagonal,
        rank,
        v: w.v,
        v_inv: w.v_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
        let n = b[0].len();
        a.iter()
            .map(|r| {
                (0..n)
                    .map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn two_squares() {
        let m = vec![vec![-2, 0, 1], vec![0, -2, 1]];
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal, vec![1, 2]);
        assert_eq!(s.rank, 2);
        assert_eq!(matmul(&s.v, &s.v_inv), identity(3));
    }

    #[test]
    fn divisibility_chain() {
        let m = vec![vec![2, 0], vec![0, 3]];
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal, vec![1, 6]);
        let m = vec![vec![4, 6, 0], vec![6, 9, 12], vec![0, 3, 8]];
        let s = smith_normal_form(&m);
        let prod: i128 = s.diagonal.iter().product();
        assert_eq!(prod.abs(), (4 * (72 - 36) - 6 * 48i128).abs());
        for k in 1..s.diagonal.len() {
            assert_eq!(s.diagonal[k] % s.diagonal[k - 1], 0);
        }
        assert_eq!(matmul(&s.v, &s.v_inv), identity(3));
    }

    #[test]
    fn zero_matrix() {
        let s = smith_normal_form(&vec![vec![0, 0]]);
        assert_eq!(s.rank, 0);
    }
}
