//! JSON rendering of engine values. Objects use `serde_json::Map`, whose keys
//! are kept sorted, so every document is a deterministic byte stream.

use gl11_core::oracle::FinLabel;
use gl11_core::symbolic::JacobiSeries;
use gl11_core::text::{render, render_fin};
use gl11_core::{FormalSum, ModuleLabel, Rational};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn label(l: &ModuleLabel) -> Value {
    Value::String(render(l))
}

pub fn formal_sum(sum: &FormalSum) -> Value {
    sum.iter()
        .map(|(l, m)| json!({ "label": render(l), "multiplicity": m }))
        .collect()
}

pub fn series(s: &JacobiSeries) -> Value {
    s.terms()
        .map(|((q, z, y), c)| {
            let coeff = c.to_i64().map_or_else(|| Value::String(c.to_string()), Value::from);
            json!({ "q": q.to_string(), "z": z.to_string(), "y": y.to_string(), "coeff": coeff })
        })
        .collect()
}

/// Tensor summands grouped with multiplicities, in label order.
pub fn fin_summands(parts: &[FinLabel]) -> Value {
    let mut counts: std::collections::BTreeMap<&FinLabel, u64> = Default::default();
    for p in parts {
        *counts.entry(p).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(l, m)| json!({ "label": render_fin(l), "dim": l.dim(), "multiplicity": m }))
        .collect()
}
