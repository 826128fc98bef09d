use polycore::{rat, MultiPoly};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for k in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(k, n - 1);
            out.push(p);
        }
    }
    out
}

fn leading(p: &MultiPoly, order: &[usize], graded: bool) -> Vec<u32> {
    let key = |e: &Vec<u32>| {
        let total: u32 = if graded { e.iter().sum() } else { 0 };
        (total, order.iter().map(|&k| e[k]).collect::<Vec<_>>())
    };
    p.terms()
        .map(|(e, _)| e)
        .max_by_key(|e| key(e))
        .cloned()
        .unwrap_or_default()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

/// `c·x_k` with `c ≠ 0`: the index `k`.
fn pure_variable(p: &MultiPoly) -> Option<usize> {
    if p.num_terms() != 1 {
        return None;
    }
    let (e, _) = p.terms().next()?;
    if e.iter().sum::<u32>() != 1 {
        return None;
    }
    e.iter().position(|&k| k == 1)
}

/// Sufficient conditions for `p₁, p₂` to be a regular sequence: one is a
/// variable not dividing the other, or their leading monomials are coprime
/// for some graded-lex or lex order. Empty when confirmed.
pub fn regular_sequence_warnings(p1: &MultiPoly, p2: &MultiPoly) -> Vec<String> {
    if p1.is_zero() || p2.is_zero() {
        return vec!["p1 or p2 is zero".into()];
    }
    for (a, b) in [(p1, p2), (p2, p1)] {
        if let Some(k) = pure_variable(a) {
            let name = a.vars()[k].clone();
            if !b.eval_at(&[(name.as_str(), rat(0))]).is_zero() {
                return vec![];
            }
        }
    }
    let n = p1.vars().len();
    for order in permutations(n) {
        for graded in [true, false] {
            if coprime(&leading(p1, &order, graded), &leading(p2, &order, graded)) {
                return vec![];
            }
        }
    }
    vec![format!(
        "could not confirm that {p1} and {p2} form a regular sequence"
    )]
}
