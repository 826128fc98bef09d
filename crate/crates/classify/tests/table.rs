use classify::*;
use grading::analyse;
use polycore::{parse_poly, rat};

const XYZ: [&str; 3] = ["x", "y", "z"];

struct Row {
    w: [i64; 4],
    eq: &'static str,
    kind: DeformationType,
    m: u32,
    p: [u32; 3],
    a: &'static [u32],
}

use DeformationType::*;

const ROWS: &[Row] = &[
    Row {
        w: [6, 14, 21, 42],
        eq: "-(y^3-x^7)+z^2",
        kind: I,
        m: 1,
        p: [3, 7, 2],
        a: &[3, 7, 2],
    },
    Row {
        w: [4, 10, 15, 30],
        eq: "-x*(y^5-x^2)+z^2",
        kind: II1,
        m: 1,
        p: [3, 5, 2],
        a: &[4, 5, 2],
    },
    Row {
        w: [3, 8, 12, 24],
        eq: "-x*(y^4-x)+z^3",
        kind: II1,
        m: 1,
        p: [2, 4, 3],
        a: &[3, 4, 3],
    },
    Row {
        w: [6, 8, 15, 30],
        eq: "-x*(y^3-x^4)+z^2",
        kind: II1,
        m: 1,
        p: [5, 3, 2],
        a: &[8, 3, 2],
    },
    Row {
        w: [4, 6, 11, 22],
        eq: "-x*y*(y^2-x^3)+z^2",
        kind: III,
        m: 1,
        p: [4, 3, 2],
        a: &[6, 4, 2],
    },
    Row {
        w: [3, 5, 9, 18],
        eq: "-x*(y^3-x)+y*z^3",
        kind: IV,
        m: 1,
        p: [2, 3, 3],
        a: &[3, 5, 3],
    },
    Row {
        w: [4, 5, 10, 20],
        eq: "-x*(y^2-x)+z^5",
        kind: II1,
        m: 1,
        p: [2, 2, 5],
        a: &[5, 2, 5],
    },
    Row {
        w: [3, 4, 8, 16],
        eq: "-x*(y^2-x)+y*z^4",
        kind: IV,
        m: 1,
        p: [2, 2, 4],
        a: &[4, 3, 4],
    },
    Row {
        w: [6, 8, 9, 24],
        eq: "-x*(y^2-x^3)+z^3",
        kind: II1,
        m: 1,
        p: [4, 2, 3],
        a: &[9, 2, 3],
    },
    Row {
        w: [4, 6, 7, 18],
        eq: "-x*(y^3-x^2)+y*z^2",
        kind: IV,
        m: 1,
        p: [3, 3, 2],
        a: &[4, 7, 2],
    },
    Row {
        w: [3, 5, 6, 15],
        eq: "-x*y*(y-x^2)+z^3",
        kind: III,
        m: 1,
        p: [3, 2, 3],
        a: &[6, 3, 3],
    },
    Row {
        w: [4, 5, 6, 16],
        eq: "-x*(y^2-x^3)+y*z^2",
        kind: IV,
        m: 1,
        p: [4, 2, 2],
        a: &[6, 5, 2],
    },
    Row {
        w: [3, 4, 5, 13],
        eq: "-z*(x*z-y^2)+y*x^3",
        kind: V,
        m: 1,
        p: [3, 2, 2],
        a: &[3, 4, 5],
    },
    Row {
        w: [3, 4, 4, 12],
        eq: "-x*y*(y-x)+z^4",
        kind: III,
        m: 1,
        p: [2, 2, 4],
        a: &[4, 4, 4],
    },
    Row {
        w: [2, 6, 9, 18],
        eq: "-x*(y^3-x)*(y^3-2*x)+z^2",
        kind: II1,
        m: 2,
        p: [3, 6, 2],
        a: &[2, 3, 2, 2],
    },
    Row {
        w: [2, 4, 7, 14],
        eq: "-x*y*(y-x^2)*(y-2*x^2)+z^2",
        kind: III,
        m: 2,
        p: [5, 3, 2],
        a: &[4, 2, 2, 2],
    },
    Row {
        w: [2, 4, 5, 12],
        eq: "-x*(y^2-x)*(y^2-2*x)+y*z^2",
        kind: IV,
        m: 2,
        p: [3, 4, 2],
        a: &[2, 5, 2, 2],
    },
    Row {
        w: [2, 3, 6, 12],
        eq: "-(z^3-x)*(z^3-2*x)+x*y^2",
        kind: II2,
        m: 2,
        p: [2, 2, 6],
        a: &[3, 3, 2, 2],
    },
    Row {
        w: [2, 3, 6, 12],
        eq: "-(z^2-x)*(z^2-2*x)+x*y^3",
        kind: II2,
        m: 2,
        p: [2, 3, 4],
        a: &[2, 2, 3, 3],
    },
    Row {
        w: [2, 3, 4, 10],
        eq: "-x*(y-x^2)*(y-2*x^2)+y*z^2",
        kind: IV,
        m: 2,
        p: [5, 2, 2],
        a: &[4, 3, 2, 2],
    },
    Row {
        w: [2, 3, 3, 9],
        eq: "-x*(y-x)*(y-2*x)+y*z^3",
        kind: IV,
        m: 2,
        p: [3, 2, 3],
        a: &[3, 2, 3, 3],
    },
    Row {
        w: [2, 2, 5, 10],
        eq: "-x*y*(y-x)*(y-2*x)*(y-3*x)+z^2",
        kind: III,
        m: 3,
        p: [4, 4, 2],
        a: &[2, 2, 2, 2, 2],
    },
    Row {
        w: [2, 2, 3, 8],
        eq: "-x*(y-x)*(y-2*x)*(y-3*x)+y*z^2",
        kind: IV,
        m: 3,
        p: [4, 3, 2],
        a: &[2, 3, 2, 2, 2],
    },
];

fn sorted(v: &[u32]) -> Vec<u32> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

#[test]
fn every_row_classifies_as_printed() {
    for row in ROWS {
        let f = parse_poly(row.eq, &XYZ).unwrap();
        let c = classify_deformation(&f).unwrap_or_else(|e| panic!("{}: {e}", row.eq));
        assert_eq!((c.kind, c.p, c.m), (row.kind, row.p, row.m), "{}", row.eq);
        let a = dolgachev_numbers(&c).unwrap();
        assert_eq!(a.sorted(), sorted(row.a), "{}", row.eq);
        assert_eq!(c.reconstruct(&XYZ), f);
        let lambdas: Vec<_> = (1..=i64::from(c.m)).map(rat).collect();
        assert_eq!(c.lambdas, lambdas, "{}", row.eq);
    }
}

#[test]
fn weights_match_up_to_permutation() {
    for row in ROWS {
        let f = parse_poly(row.eq, &XYZ).unwrap();
        let (_, w, g) = analyse(&f).unwrap();
        let r = w.reduced();
        let mut got = r.weights.clone();
        got.sort_unstable();
        let mut want = row.w[..3].to_vec();
        want.sort_unstable();
        assert_eq!((got, r.degree), (want, row.w[3]), "{}", row.eq);
        assert_eq!(w.epsilon, -1, "{}", row.eq);
        assert_eq!(g.to_string(), "ℤ", "{}", row.eq);
    }
}

#[test]
fn embeddings_reduce_to_zero() {
    for row in ROWS {
        let c = DeformationClass::with_default_lambdas(row.kind, row.p, row.m).unwrap();
        assert!(verify_embedding(&c, &c.lambdas).unwrap(), "{}", row.eq);
    }
}

#[test]
fn round_trip_through_templates() {
    for row in ROWS {
        let c = DeformationClass::with_default_lambdas(row.kind, row.p, row.m).unwrap();
        let back = classify_deformation(&c.template(&XYZ)).unwrap();
        assert_eq!(
            (back.kind, back.p, back.m, &back.lambdas),
            (c.kind, c.p, c.m, &c.lambdas),
            "{}",
            row.eq
        );
    }
}
