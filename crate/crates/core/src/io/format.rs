//! The algebra file: a strict JSON document
//!
//! ```json
//! {
//!   "format": 1,
//!   "name": "A_2^1",
//!   "dim": 2,
//!   "products": [
//!     { "left": 1, "right": 1, "result": [ { "basis": 2, "coeff": "1" } ] }
//!   ]
//! }
//! ```
//!
//! Indices are 1-based. Products that are not listed are zero.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format: u32,
    pub name: String,
    pub dim: usize,
    pub products: Vec<ProductRecord>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductRecord {
    pub left: usize,
    pub right: usize,
    pub result: Vec<TermRecord>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub basis: usize,
    pub coeff: String,
}

fn parse_error(context: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { context: context.into(), message: message.into() }
}

impl AlgebraFile {
    pub fn from_algebra(a: &AlgebraSpec) -> Self {
        let n = a.dim();
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let result: Vec<TermRecord> = (0..n)
                    .filter(|&k| !a.gamma(i, j, k).is_zero())
                    .map(|k| TermRecord { basis: k + 1, coeff: a.gamma(i, j, k).to_string() })
                    .collect();
                if !result.is_empty() {
                    products.push(ProductRecord { left: i + 1, right: j + 1, result });
                }
            }
        }
        AlgebraFile { format: FORMAT_VERSION, name: a.name().to_string(), dim: n, products }
    }

    pub fn to_algebra(&self) -> Result<AlgebraSpec> {
        if self.format != FORMAT_VERSION {
            return Err(parse_error(
                "format",
                format!("unsupported version {}, expected {FORMAT_VERSION}", self.format),
            ));
        }
        if self.dim == 0 {
            return Err(parse_error("dim", "dimension must be positive"));
        }
        let n = self.dim;
        let in_range = |ctx: &str, idx: usize| {
            if (1..=n).contains(&idx) {
                Ok(idx - 1)
            } else {
                Err(parse_error(ctx, format!("index {idx} out of range 1..={n}")))
            }
        };
        let mut seen = BTreeSet::new();
        let mut a = AlgebraSpec::abelian(self.name.clone(), n);
        for (p, rec) in self.products.iter().enumerate() {
            let ctx = format!("products[{p}]");
            let i = in_range(&format!("{ctx}.left"), rec.left)?;
            let j = in_range(&format!("{ctx}.right"), rec.right)?;
            if !seen.insert((i, j)) {
                return Err(parse_error(ctx, format!("duplicate product ({}, {})", rec.left, rec.right)));
            }
            let mut bases = BTreeSet::new();
            for (t, term) in rec.result.iter().enumerate() {
                let tctx = format!("{ctx}.result[{t}]");
                let k = in_range(&format!("{tctx}.basis"), term.basis)?;
                if !bases.insert(k) {
                    return Err(parse_error(tctx, format!("duplicate basis index {}", term.basis)));
                }
                let c: Scalar =
                    term.coeff.parse().map_err(|e: Error| parse_error(format!("{tctx}.coeff"), e.to_string()))?;
                a.set_gamma(i, j, k, c);
            }
        }
        Ok(a)
    }
}

/// Parses an algebra document; JSON syntax errors carry line and column.
pub fn parse_algebra(text: &str) -> Result<AlgebraSpec> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| {
        let position = format!(" at line {} column {}", e.line(), e.column());
        let message = e.to_string();
        let message = message.strip_suffix(&position).unwrap_or(&message).to_string();
        parse_error(format!("line {}, column {}", e.line(), e.column()), message)
    })?;
    file.to_algebra()
}

/// Canonical serialization: products sorted by `(left, right, basis)`, zero
/// coefficients omitted, rationals in lowest terms, trailing newline.
pub fn emit_algebra(a: &AlgebraSpec) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraFile::from_algebra(a)).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;

    const A2_1: &str = r#"{"format": 1, "name": "A_2^1", "dim": 2,
        "products": [{"left": 1, "right": 1, "result": [{"basis": 2, "coeff": "1"}]}]}"#;

    #[test]
    fn parse_a2_1() {
        let a = parse_algebra(A2_1).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.basis_product(0, 0), Vector::basis(2, 1));
        assert!(a.basis_product(0, 1).is_zero());
    }

    #[test]
    fn parse_abelian() {
        let a = parse_algebra(r#"{"format":1,"name":"A_3^1","dim":3,"products":[]}"#).unwrap();
        assert!(a.is_abelian());
        assert_eq!(a.dim(), 3);
    }

    fn parse_err(text: &str) -> String {
        match parse_algebra(text) {
            Err(Error::Parse { context, message }) => format!("{context}: {message}"),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_rational() {
        let msg = parse_err(&A2_1.replace("\"1\"", "\"1/0\""));
        assert!(msg.starts_with("products[0].result[0].coeff: malformed rational"), "{msg}");
    }

    #[test]
    fn out_of_range_and_duplicates() {
        let msg = parse_err(&A2_1.replace("\"basis\": 2", "\"basis\": 3"));
        assert!(msg.contains("products[0].result[0].basis") && msg.contains("out of range"), "{msg}");
        let msg = parse_err(&A2_1.replace("\"left\": 1", "\"left\": 0"));
        assert!(msg.contains("products[0].left"), "{msg}");
        let dup = r#"{"format":1,"name":"x","dim":2,"products":[
            {"left":1,"right":1,"result":[]},
            {"left":1,"right":1,"result":[]}]}"#;
        assert!(parse_err(dup).contains("duplicate product (1, 1)"));
    }

    #[test]
    fn malformed_documents() {
        let msg = parse_err("{\n\"format\": 1,\n\"name\": \"x\",\n\"dim\": 2,\n\"products\": [,]}");
        assert!(msg.starts_with("line 5, column"), "{msg}");
        assert!(parse_err(r#"{"format":1,"name":"x","dim":2,"products":[],"extra":0}"#).contains("unknown field"));
        assert!(parse_err(r#"{"format":2,"name":"x","dim":2,"products":[]}"#).contains("unsupported version"));
        assert!(parse_err(r#"{"format":1,"name":"x","dim":0,"products":[]}"#).contains("positive"));
    }

    #[test]
    fn emit_is_canonical() {
        let a = parse_algebra(A2_1).unwrap();
        let text = emit_algebra(&a);
        assert_eq!(text.matches("\"left\"").count(), 1);
        assert_eq!(parse_algebra(&text).unwrap(), a);
        assert_eq!(emit_algebra(&parse_algebra(&text).unwrap()), text);
        let ab = AlgebraSpec::abelian("ab", 3);
        assert!(emit_algebra(&ab).contains("\"products\": []"));
    }
}
