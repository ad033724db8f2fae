//! JSON algebra file format.
//!
//! ```json
//! {"dim": 2,
//!  "left":  [{"i": 1, "j": 2, "k": 1, "c": "1"}],
//!  "right": [{"i": 2, "j": 2, "k": 1, "c": "-3/2"}]}
//! ```
//!
//! Indices are 1-based, coefficients use the rational text form, omitted
//! entries are zero and a repeated `(i, j, k)` within one product is an error.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Product};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    #[serde(default)]
    left: Vec<Entry>,
    #[serde(default)]
    right: Vec<Entry>,
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    if file.dim == 0 {
        return Err(Error::parse("dim", "dimension must be at least 1"));
    }
    let n = file.dim;
    let mut alg = Algebra::zero(n);
    for (which, name, entries) in [
        (Product::Left, "left", &file.left),
        (Product::Right, "right", &file.right),
    ] {
        let mut seen = HashSet::new();
        for (idx, e) in entries.iter().enumerate() {
            let at = |field: &str| format!("{name}[{idx}].{field}");
            for (field, v) in [("i", e.i), ("j", e.j), ("k", e.k)] {
                if v == 0 || v > n {
                    return Err(Error::parse(at(field), format!("index {v} outside 1..={n}")));
                }
            }
            if !seen.insert((e.i, e.j, e.k)) {
                return Err(Error::parse(
                    at("k"),
                    format!("duplicate entry for (i, j, k) = ({}, {}, {})", e.i, e.j, e.k),
                ));
            }
            let c: Rational = e.c.parse().map_err(|err| match err {
                Error::Parse { message, .. } => Error::parse(at("c"), message),
                other => other,
            })?;
            alg.set_constant(which, e.i - 1, e.j - 1, e.k - 1, c);
        }
    }
    Ok(alg)
}

/// Serializes the nonzero structure constants in `(i, j, k)` order.
pub fn algebra_to_json(alg: &Algebra) -> String {
    let n = alg.dim();
    let entries = |which| {
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = alg.constant(which, i, j, k);
                    if !c.is_zero() {
                        out.push(Entry {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            c: c.to_string(),
                        });
                    }
                }
            }
        }
        out
    };
    let file = AlgebraFile {
        dim: n,
        left: entries(Product::Left),
        right: entries(Product::Right),
    };
    serde_json::to_string_pretty(&file).expect("algebra file serializes")
}
