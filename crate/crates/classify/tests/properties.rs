use classify::*;
use polycore::rat;
use proptest::prelude::*;

const XYZ: [&str; 3] = ["x", "y", "z"];

fn class() -> impl Strategy<Value = DeformationClass> {
    let kinds = prop::sample::select(vec![
        DeformationType::I,
        DeformationType::II1,
        DeformationType::II2,
        DeformationType::III,
        DeformationType::IV,
    ]);
    (
        kinds,
        1u32..=3,
        1u32..=3,
        1u32..=3,
        2u32..=4,
        prop::sample::subsequence(vec![2i64, 3, 5, 7], 2),
    )
        .prop_filter_map("valid class", |(kind, m, a, b, p3, extra)| {
            let (m, p) = match kind {
                DeformationType::I => (m.max(2), [b * m.max(2), a * m.max(2), p3]),
                DeformationType::II1 | DeformationType::IV => (m, [b * m + 1, a * m, p3]),
                DeformationType::II2 => (m.max(2), [b * m.max(2), p3, a * m.max(2)]),
                DeformationType::III => (m, [b * m + 1, a * m + 1, p3]),
                DeformationType::V => unreachable!(),
            };
            let mut lambdas = vec![rat(1)];
            lambdas.extend(extra.iter().take(m as usize - 1).map(|&k| rat(k)));
            let c = DeformationClass::new(kind, p, m, lambdas).ok()?;
            dolgachev_numbers(&c).ok()?;
            Some(c)
        })
}

fn key(c: &DeformationClass) -> (DeformationType, u32, Vec<u32>) {
    (
        c.kind,
        c.m,
        dolgachev_numbers(c).map(|s| s.sorted()).unwrap_or_default(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn templates_classify_back(c in class()) {
        let f = c.template(&XYZ);
        match classify_deformation(&f) {
            Ok(back) => {
                prop_assert_eq!(key(&back), key(&c));
                prop_assert_eq!(back.reconstruct(&XYZ), f);
            }
            Err(ClassifyError::Ambiguous(all)) => {
                prop_assert!(all.iter().any(|d| key(d) == key(&c)));
            }
            Err(e) => prop_assert!(false, "{} failed: {}", f, e),
        }
        let lambdas = c.lambdas.clone();
        prop_assert!(verify_embedding(&c, &lambdas).unwrap());
    }
}
