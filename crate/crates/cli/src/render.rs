use mftwo::Matrix2;
use polycore::{MultiPoly, Rational};
use serde_json::{json, Value};

pub fn tuple<T: ToString>(items: &[T]) -> String {
    format!(
        "({})",
        items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
    )
}

pub fn rationals(items: &[Rational]) -> Vec<String> {
    items.iter().map(Rational::to_string).collect()
}

pub fn poly_json(p: &MultiPoly) -> Value {
    json!({ "vars": p.vars(), "text": p.to_string() })
}

pub fn matrix_text(m: &Matrix2) -> String {
    format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
}

pub fn matrix_json(m: &Matrix2) -> Value {
    json!([
        [m[0][0].to_string(), m[0][1].to_string()],
        [m[1][0].to_string(), m[1][1].to_string()]
    ])
}

/// `X1^5*X2`, or `1` for the zero vector.
pub fn monomial(e: &[i64]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, &k)| {
            if k == 1 {
                format!("X{}", i + 1)
            } else {
                format!("X{}^{k}", i + 1)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Text output with one `key: value` line per field.
#[derive(Default)]
pub struct Lines(String);

impl Lines {
    pub fn kv(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        self.0.push_str(&format!("{key}: {value}\n"));
        self
    }

    pub fn line(&mut self, text: impl std::fmt::Display) -> &mut Self {
        self.0.push_str(&format!("{text}\n"));
        self
    }

    pub fn finish(&mut self) -> String {
        std::mem::take(&mut self.0)
    }
}
