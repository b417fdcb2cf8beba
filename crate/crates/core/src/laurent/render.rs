use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::{grlex_cmp, LaurentPoly};
use crate::rational::int_json;

/// `t` for rank one, `x1 … xb` otherwise.
pub fn variable_names(rank: usize) -> Vec<String> {
    if rank == 1 {
        vec!["t".to_string()]
    } else {
        (1..=rank).map(|i| format!("x{i}")).collect()
    }
}

impl LaurentPoly {
    /// Renders terms in descending graded-lex order, e.g. `t^2 - 2*t + 1`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| grlex_cmp(b.0, a.0));
        let mut out = String::new();
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = e
                .0
                .iter()
                .zip(names)
                .filter(|(k, _)| **k != 0)
                .map(|(k, n)| if *k == 1 { n.clone() } else { format!("{n}^{k}") })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            let body = match (mono.is_empty(), abs.is_one()) {
                (true, _) => abs.to_string(),
                (false, true) => mono.join("*"),
                (false, false) => format!("{abs}*{}", mono.join("*")),
            };
            match (i, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }

    /// `{rendered, rank, terms: [{exp, coeff}]}` with terms in graded-lex order.
    pub fn to_json(&self) -> Value {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| grlex_cmp(b.0, a.0));
        json!({
            "rendered": self.to_string(),
            "rank": self.rank(),
            "terms": terms
                .into_iter()
                .map(|(e, c)| json!({"exp": e.0, "coeff": int_json(c)}))
                .collect::<Vec<_>>(),
        })
    }
}
