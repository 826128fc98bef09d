use grading::*;
use num_integer::Integer;
use proptest::prelude::*;

/// Exponent matrices of invertible polynomials in three variables: row `i`
/// is `aᵢ·eᵢ + e_{σ(i)}` for a partial injection `σ` without fixed points.
fn invertible_3x3() -> impl Strategy<Value = Vec<Vec<u32>>> {
    let targets = prop::collection::vec(prop::option::of(0usize..3), 3);
    (prop::collection::vec(2u32..=6, 3), targets).prop_filter_map(
        "partial injection",
        |(a, sigma)| {
            let mut used = [false; 3];
            for (i, s) in sigma.iter().enumerate() {
                if let Some(j) = *s {
                    if j == i || used[j] {
                        return None;
                    }
                    used[j] = true;
                }
            }
            let rows = (0..3)
                .map(|i| {
                    let mut r = vec![0; 3];
                    r[i] = a[i];
                    if let Some(j) = sigma[i] {
                        r[j] = 1;
                    }
                    r
                })
                .collect();
            Some(rows)
        },
    )
}

fn cofactor_det(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cofactor_det(&minor)
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn weights_and_grading(rows in invertible_3x3()) {
        let e = ExponentMatrix::new(3, rows).unwrap();
        let w = canonical_weights(&e).unwrap();
        for r in e.rows() {
            let deg: i64 = r.iter().zip(&w.weights).map(|(&a, &b)| i64::from(a) * b).sum();
            prop_assert_eq!(deg, w.degree);
        }
        prop_assert_eq!(w.degree as i128, e.determinant());
        let g = maximal_grading(&e).unwrap();
        prop_assert_eq!(g.rank(), 1);
        prop_assert_eq!(is_degree_iso(&g, &w), w.c == 1);

        // The torsion order is the gcd of the maximal minors of (−E | 1).
        let rel: Vec<Vec<i64>> = e.rows().iter().map(|r| {
            let mut v: Vec<i64> = r.iter().map(|&x| -i64::from(x)).collect();
            v.push(1);
            v
        }).collect();
        let minors_gcd = (0..4).fold(0i64, |acc, drop| {
            let m: Vec<Vec<i64>> = rel.iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != drop).map(|(_, &x)| x).collect()).collect();
            acc.gcd(&cofactor_det(&m))
        });
        prop_assert_eq!(g.torsion().iter().product::<i64>(), minors_gcd);
        for k in 1..g.torsion().len() {
            prop_assert_eq!(g.torsion()[k] % g.torsion()[k - 1], 0);
        }
        for (j, gen) in g.generators().iter().enumerate() {
            prop_assert_eq!(gen.free[0] * g.free_generator_degrees()[0], g.degrees()[j]);
        }
    }
}
