use crate::{frac, MultiPoly, PolyError};

/// Determinant of a square matrix of polynomials by fraction-free
/// (Bareiss) elimination.
pub fn bareiss_det(mut a: Vec<Vec<MultiPoly>>, vars: &[String]) -> MultiPoly {
    let n = a.len();
    if n == 0 {
        return MultiPoly::one(vars);
    }
    let mut negate = false;
    let mut prev = MultiPoly::one(vars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return MultiPoly::zero(vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step is an exact division");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].with_vars(vars).unwrap();
    if negate {
        -det
    } else {
        det
    }
}

/// Sylvester matrix of `p` and `q` with respect to `var`.
pub fn sylvester_matrix(p: &MultiPoly, q: &MultiPoly, var: &str) -> Vec<Vec<MultiPoly>> {
    let (p, q) = MultiPoly::aligned(p, q);
    let vars = p.vars().to_vec();
    let a = p.coeffs_in(var);
    let b = q.coeffs_in(var);
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (coeffs, shifts) in [(&a, n), (&b, m)] {
        let deg = coeffs.len() - 1;
        for s in 0..shifts {
            let mut row = vec![MultiPoly::zero(&vars); size];
            for (k, c) in coeffs.iter().enumerate() {
                row[s + deg - k] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Resultant of `p` and `q` with respect to `var` (standard Sylvester sign).
pub fn resultant_wrt(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly, PolyError> {
    let (p, q) = MultiPoly::aligned(p, q);
    let vars = p.vars().to_vec();
    if p.is_zero() || q.is_zero() {
        return Ok(MultiPoly::zero(&vars));
    }
    let dp = p.degree_in(var).unwrap();
    let dq = q.degree_in(var).unwrap();
    match (dp, dq) {
        (0, 0) => Err(PolyError::BothConstant { var: var.into() }),
        (0, _) => Ok(p.pow(dq)),
        (_, 0) => Ok(q.pow(dp)),
        _ => Ok(bareiss_det(sylvester_matrix(&p, &q, var), &vars)),
    }
}

/// `(B/2)² − A·C` for `p = A·var² + B·var + C`.
pub fn quarter_discriminant_wrt(p: &MultiPoly, var: &str) -> Result<MultiPoly, PolyError> {
    let deg = p.degree_in(var).unwrap_or(0);
    if deg != 2 {
        return Err(PolyError::WrongDegree {
            var: var.into(),
            expected: 2,
            found: deg,
        });
    }
    let c = p.coeffs_in(var);
    let half_b = c[1].scale(&frac(1, 2));
    Ok(&(&half_b * &half_b) - &(&c[2] * &c[0]))
}

/// Classical discriminant `B² − 4AC` of a quadratic, for cross-checks.
pub fn classical_discriminant_wrt(p: &MultiPoly, var: &str) -> Result<MultiPoly, PolyError> {
    let deg = p.degree_in(var).unwrap_or(0);
    if deg != 2 {
        return Err(PolyError::WrongDegree {
            var: var.into(),
            expected: 2,
            found: deg,
        });
    }
    let c = p.coeffs_in(var);
    let four = crate::rat(4);
    Ok(&(&c[1] * &c[1]) - &(&c[2] * &c[0]).scale(&four))
}

/// Determinant of a 2×2 polynomial matrix.
pub fn det2(m: &[[MultiPoly; 2]; 2]) -> MultiPoly {
    &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_poly;

    const V: [&str; 5] = ["w", "a", "b", "x", "y"];

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &V).unwrap()
    }

    #[test]
    fn linear_pair() {
        assert_eq!(
            resultant_wrt(&p("w - a"), &p("w - b"), "w").unwrap(),
            p("a - b")
        );
    }

    #[test]
    fn generic_linear_pair() {
        let v = ["w", "A", "B", "C", "D"];
        let f = parse_poly("A + w*B", &v).unwrap();
        let g = parse_poly("C + w*D", &v).unwrap();
        let want = parse_poly("B*C - A*D", &v).unwrap();
        assert_eq!(resultant_wrt(&f, &g, "w").unwrap(), want);
    }

    #[test]
    fn shared_root() {
        assert!(resultant_wrt(&p("w^2"), &p("w^2"), "w").unwrap().is_zero());
    }

    #[test]
    fn constant_argument() {
        assert_eq!(
            resultant_wrt(&p("x"), &p("w^3 + y"), "w").unwrap(),
            p("x^3")
        );
        assert!(matches!(
            resultant_wrt(&p("x"), &p("y"), "w"),
            Err(PolyError::BothConstant { .. })
        ));
    }

    #[test]
    fn quadratic_against_product_of_roots() {
        // Res(w² − a², w − b) = b² − a²
        let r = resultant_wrt(&p("w^2 - a^2"), &p("w - b"), "w").unwrap();
        assert_eq!(r, p("b^2 - a^2"));
        // Res((w−a)(w−b), (w−x)(w−y)) = (a−x)(a−y)(b−x)(b−y)
        let r = resultant_wrt(&p("(w - a)*(w - b)"), &p("(w - x)*(w - y)"), "w").unwrap();
        assert_eq!(r, p("(a - x)*(a - y)*(b - x)*(b - y)"));
    }

    #[test]
    fn wall_discriminant() {
        let got = quarter_discriminant_wrt(&p("w^2*y - 2*w*y*a + b"), "w").unwrap();
        assert_eq!(got, p("y^2*a^2 - y*b"));
        assert!(quarter_discriminant_wrt(&p("w^2"), "w").unwrap().is_zero());
        assert!(quarter_discriminant_wrt(&p("w^3"), "w").is_err());
    }
}
