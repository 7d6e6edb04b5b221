//! Text and JSON rendering. JSON always carries coefficients as exact
//! rational strings; float mode only changes the text rendering (decimal
//! coefficients) and which residual line is printed.

use num_traits::ToPrimitive;
use quatdet::{QMatrix, Quaternion, Rational};
use serde_json::{json, Value};

pub fn rational_text(r: &Rational, float: bool) -> String {
    if float {
        format!("{}", r.to_f64().unwrap_or(f64::NAN))
    } else {
        r.to_string()
    }
}

pub fn quat_text(q: &Quaternion, float: bool) -> String {
    if !float {
        return q.to_string();
    }
    let mut out = String::new();
    for (coeff, unit) in [&q.w, &q.x, &q.y, &q.z].into_iter().zip(["", "i", "j", "k"]) {
        let v = coeff.to_f64().unwrap_or(f64::NAN);
        if v == 0.0 {
            continue;
        }
        if v < 0.0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&format!("{}", v.abs()));
        out.push_str(unit);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Matrix in the file format (header line plus entry rows). Exact output
/// is the canonical serialization; float output renders decimals.
pub fn matrix_text(m: &QMatrix, float: bool) -> String {
    if !float {
        return crate::matfile::serialize(m);
    }
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 1..=m.rows() {
        let row: Vec<String> = (1..=m.cols()).map(|j| quat_text(m.at(i, j), float)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// A quaternion as the four exact coefficient strings of 1, i, j, k.
pub fn quat_json(q: &Quaternion) -> Value {
    json!([
        q.w.to_string(),
        q.x.to_string(),
        q.y.to_string(),
        q.z.to_string(),
    ])
}

pub fn matrix_json(m: &QMatrix) -> Value {
    let entries: Vec<Value> = (1..=m.rows())
        .map(|i| Value::Array((1..=m.cols()).map(|j| quat_json(m.at(i, j))).collect()))
        .collect();
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

/// Largest coefficient magnitude of `lhs - rhs`, as f64; float mode's
/// residual measure.
pub fn max_abs_difference(lhs: &QMatrix, rhs: &QMatrix) -> f64 {
    let mut worst = 0.0f64;
    for i in 1..=lhs.rows() {
        for j in 1..=lhs.cols() {
            let d = lhs.at(i, j) - rhs.at(i, j);
            for part in [&d.w, &d.x, &d.y, &d.z] {
                worst = worst.max(part.to_f64().unwrap_or(f64::NAN).abs());
            }
        }
    }
    worst
}
