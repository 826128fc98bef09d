use polycore::*;

const XYZ: [&str; 3] = ["x", "y", "z"];

#[test]
fn parse_catalog_equation() {
    let p = parse_poly("-x*(y^5 - x^2) + z^2", &XYZ).unwrap();
    let q = parse_poly("-x*y^5 + x^3 + z^2", &XYZ).unwrap();
    assert_eq!(p, q);
}

#[test]
fn parse_errors_are_distinguished() {
    assert!(matches!(
        parse_poly("x^", &XYZ),
        Err(PolyError::Syntax { pos: 2, .. })
    ));
    assert!(matches!(
        parse_poly("q", &XYZ),
        Err(PolyError::UnknownVariable { .. })
    ));
    assert!(matches!(
        parse_poly("y^-2", &XYZ),
        Err(PolyError::BadExponent { pos: 2, .. })
    ));
}

#[test]
fn laurent_intermediate_rejected() {
    let p = parse_poly("x^2*y", &["x", "y"]).unwrap();
    let m = MonomialMap::new(&["w", "x"])
        .assign_named("x", rat(1), &[("w", 1), ("x", -1)])
        .assign_named("y", rat(1), &[("x", 1)]);
    let err = substitute(&p, &m).unwrap_err();
    assert_eq!(
        err,
        PolyError::LaurentResult {
            var: "x".into(),
            exponent: -1
        }
    );
}

#[test]
fn laurent_intermediate_accepted_when_it_clears() {
    let p = parse_poly("x*y", &["x", "y"]).unwrap();
    let m = MonomialMap::new(&["w", "x"])
        .assign_named("x", rat(1), &[("w", 1), ("x", -1)])
        .assign_named("y", rat(1), &[("x", 2)]);
    assert_eq!(substitute(&p, &m).unwrap().to_string(), "w*x");
}

#[test]
fn resultant_of_generic_linear_forms_is_the_determinant() {
    let v = ["w", "x", "y", "z"];
    let f1 = parse_poly("y^5 - x^2 - w*z", &v).unwrap();
    let f2 = parse_poly("z - w*x", &v).unwrap();
    let r = resultant_wrt(&f1, &f2, "w").unwrap();
    // Res(A + wB, C + wD) = BC − AD with A = y⁵−x², B = −z, C = z, D = −x
    let want = parse_poly("-z*z + x*(y^5 - x^2)", &v).unwrap();
    assert_eq!(r, want);
}

#[test]
fn normal_form_examples() {
    let w = WplPresentation::new(vec![2, 2, 4, 3], vec![rat(1), frac(7, 3)]).unwrap();
    let p = parse_poly("X3^4*X4^3", w.vars()).unwrap();
    let want = parse_poly("(X2^2 - X1^2)*(X2^2 - 7/3*X1^2)", w.vars()).unwrap();
    assert_eq!(normal_form_mod_wpl(&p, &w), want);
    let g = w.generator(4);
    assert_eq!(g.to_string(), "X4^3 + 7/3*X1^2 - X2^2");
    assert!(normal_form_mod_wpl(&g, &w).is_zero());
}
