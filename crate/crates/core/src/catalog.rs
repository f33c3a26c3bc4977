//! The classified Zinbiel algebras of dimensions 2, 3 and 4 together with
//! their reference inner-derivation tables.
//!
//! Products, table entries and indices are 1-based here, as printed.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::AlgebraSpec;
use crate::derivation::SymbolicAdMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Parameter name to value.
pub type Bindings = BTreeMap<String, Scalar>;

/// A structure constant, possibly a rational multiple of a parameter.
#[derive(Clone, Copy, Debug)]
pub enum Coeff {
    Frac(i64, i64),
    /// `factor * param`.
    Param(&'static str, i64),
}

use Coeff::{Frac, Param};

const ONE: Coeff = Frac(1, 1);

/// Coefficient of one `a_t` in a reference table entry.
#[derive(Clone, Copy, Debug)]
pub enum TableCoeff {
    Int(i64),
    /// `factor * param`.
    Param(&'static str, i64),
    /// Anything not linear in the parameter.
    Expr(fn(&Bindings) -> Scalar),
}

/// Reference table entry `(row, col)` = `sum coeff * a_t`.
#[derive(Clone, Copy, Debug)]
pub struct TableEntry {
    pub row: usize,
    pub col: usize,
    pub terms: &'static [(usize, TableCoeff)],
}

#[derive(Clone, Copy, Debug)]
pub enum Condition {
    Always,
    Equals(&'static str, i64),
    NotEquals(&'static str, i64),
}

impl Condition {
    fn holds(&self, b: &Bindings) -> bool {
        match *self {
            Condition::Always => true,
            Condition::Equals(p, v) => b.get(p) == Some(&Scalar::from(v)),
            Condition::NotEquals(p, v) => b.get(p) != Some(&Scalar::from(v)),
        }
    }
}

/// One row of a reference table: a parameter case with its printed matrix and dimension.
#[derive(Clone, Copy, Debug)]
pub struct TableCase {
    /// e.g. `"alpha != 0"`; empty when the table does not split.
    pub label: &'static str,
    pub condition: Condition,
    /// Binding used to render this case in the report.
    pub representative: &'static [(&'static str, i64)],
    pub expected_dim: usize,
    pub expected: &'static [TableEntry],
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableStatus {
    Verified,
    Flagged,
}

/// A parameter whose value must differ from `excluded` (when set).
#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub excluded: Option<i64>,
}

impl fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.excluded {
            Some(v) => write!(f, "{} != {}", self.name, v),
            None => write!(f, "{}", self.name),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub dim: usize,
    pub params: &'static [ParamSpec],
    pub products: &'static [(usize, usize, usize, Coeff)],
    pub cases: &'static [TableCase],
    pub table_status: TableStatus,
    /// Known disagreement between the printed products and the reference table.
    pub note: Option<&'static str>,
}

const ZERO_TABLE: &[TableEntry] = &[];

const fn e(row: usize, col: usize, terms: &'static [(usize, TableCoeff)]) -> TableEntry {
    TableEntry { row, col, terms }
}

use TableCoeff::Int;

const fn single(dim: usize, expected: &'static [TableEntry]) -> [TableCase; 1] {
    [TableCase { label: "", condition: Condition::Always, representative: &[], expected_dim: dim, expected }]
}

const NO_PARAMS: &[ParamSpec] = &[];
const LAMBDA_NONZERO: &[ParamSpec] = &[ParamSpec { name: "lambda", excluded: Some(0) }];
const ALPHA: &[ParamSpec] = &[ParamSpec { name: "alpha", excluded: None }];
const ALPHA_NOT_ONE: &[ParamSpec] = &[ParamSpec { name: "alpha", excluded: Some(1) }];

/// Row 3 = (a_2, -a_1, 0, ...) style tables, scaled by `k`.
macro_rules! skew_row {
    ($row:expr, $k:expr) => {
        [e($row, 1, &[(2, Int($k))]), e($row, 2, &[(1, Int(-$k))])]
    };
}

const T_A3_4: &[TableEntry] = &skew_row!(3, 1);
const T_A3_5: &[TableEntry] = &skew_row!(3, -1);
const T_A4_1: &[TableEntry] =
    &[e(3, 1, &[(2, Int(-1))]), e(3, 2, &[(1, Int(1))]), e(4, 1, &[(3, Int(-2))]), e(4, 3, &[(1, Int(2))])];
const T_A4_2: &[TableEntry] =
    &[e(4, 1, &[(2, Int(1)), (3, Int(-1))]), e(4, 2, &[(1, Int(-1))]), e(4, 3, &[(1, Int(1))])];
const T_A4_3: &[TableEntry] = &[e(4, 1, &[(3, Int(-1))]), e(4, 3, &[(1, Int(1))])];
const T_A4_4: &[TableEntry] =
    &[e(3, 1, &[(2, Int(2))]), e(3, 2, &[(1, Int(-2))]), e(4, 1, &[(3, Int(1))]), e(4, 3, &[(1, Int(-1))])];
const T_A4_6: &[TableEntry] = &skew_row!(3, 2);
const T_A4_7: &[TableEntry] =
    &[e(3, 1, &[(2, Int(1))]), e(3, 2, &[(1, Int(-1))]), e(4, 1, &[(2, Int(-1))]), e(4, 2, &[(1, Int(1))])];
const T_A4_8_GENERIC: &[TableEntry] = &[
    e(3, 1, &[(2, TableCoeff::Param("alpha", 1))]),
    e(3, 2, &[(1, TableCoeff::Param("alpha", -1))]),
    e(4, 1, &[(2, Int(1))]),
    e(4, 2, &[(1, Int(-1))]),
];
const T_ROW4_1: &[TableEntry] = &skew_row!(4, 1);
const T_ROW4_2: &[TableEntry] = &skew_row!(4, 2);
const T_ROW4_NEG: &[TableEntry] = &skew_row!(4, -1);
const T_A4_9_GENERIC: &[TableEntry] =
    &[e(4, 1, &[(2, TableCoeff::Param("alpha", 2))]), e(4, 2, &[(1, TableCoeff::Param("alpha", -2))])];

fn a4_15_ratio(b: &Bindings) -> Scalar {
    let alpha = b.get("alpha").cloned().unwrap_or_default();
    let num = Scalar::one() + &alpha;
    let den = Scalar::one() - &alpha;
    num.checked_div(&den).expect("alpha != 1 is enforced at instantiation")
}

const T_A4_15_GENERIC: &[TableEntry] = &[
    e(4, 1, &[(2, TableCoeff::Expr(|b| Scalar::one() - a4_15_ratio(b)))]),
    e(4, 2, &[(1, TableCoeff::Expr(|b| a4_15_ratio(b) - Scalar::one()))]),
];

const FLAGGED_NOTE: &str = "printed with the same products as A_4^12; the reference row cannot be reproduced from them";

/// Every classified algebra, in table order.
pub static CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        id: "A_2^1",
        dim: 2,
        params: NO_PARAMS,
        products: &[(1, 1, 2, ONE)],
        cases: &single(0, ZERO_TABLE),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_3^1",
        dim: 3,
        params: NO_PARAMS,
        products: &[],
        cases: &single(0, ZERO_TABLE),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_3^2",
        dim: 3,
        params: NO_PARAMS,
        products: &[(1, 1, 3, ONE)],
        cases: &single(0, ZERO_TABLE),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_3^3",
        dim: 3,
        params: NO_PARAMS,
        products: &[(1, 1, 3, ONE), (2, 2, 3, ONE)],
        cases: &single(0, ZERO_TABLE),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_3^4",
        dim: 3,
        params: NO_PARAMS,
        products: &[(1, 2, 3, Frac(1, 2)), (2, 1, 3, Frac(-1, 2))],
        cases: &single(2, T_A3_4),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_3^5",
        dim: 3,
        params: NO_PARAMS,
        products: &[(2, 1, 3, ONE)],
        cases: &single(2, T_A3_5),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_3^6",
        dim: 3,
        params: LAMBDA_NONZERO,
        products: &[(1, 1, 3, ONE), (1, 2, 3, ONE), (2, 2, 3, Param("lambda", 1))],
        cases: &[TableCase {
            label: "",
            condition: Condition::Always,
            representative: &[("lambda", 1)],
            expected_dim: 2,
            expected: T_A3_4,
        }],
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_3^7",
        dim: 3,
        params: NO_PARAMS,
        products: &[(1, 1, 2, ONE), (1, 2, 3, Frac(1, 2)), (2, 1, 3, ONE)],
        cases: &single(0, ZERO_TABLE),
        table_status: TableStatus::Verified,
        note: Some(
            "ad_w(e_1) = -1/2 a_2 e_3 and ad_w(e_2) = 1/2 a_1 e_3 for the printed products, \
             so Inn has dimension 2; the reference row shows the zero matrix and 0",
        ),
    },
    CatalogEntry {
        id: "A_4^1",
        dim: 4,
        params: NO_PARAMS,
        products: &[
            (1, 1, 2, ONE),
            (1, 2, 3, ONE),
            (2, 1, 3, Frac(2, 1)),
            (1, 3, 4, ONE),
            (2, 2, 4, Frac(3, 1)),
            (3, 1, 4, Frac(3, 1)),
        ],
        cases: &single(3, T_A4_1),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_4^2",
        dim: 4,
        params: NO_PARAMS,
        products: &[(1, 1, 3, ONE), (1, 2, 4, ONE), (1, 3, 4, ONE), (3, 1, 4, Frac(2, 1))],
        cases: &single(3, T_A4_2),
        table_status: TableStatus::Verified,
        note: Some(
            "the matrix matches, but ad_{e_2} = -ad_{e_3}, so the span has dimension 2; \
             the reference value 3 counts the coordinates a_1, a_2, a_3 occurring in the matrix",
        ),
    },
    CatalogEntry {
        id: "A_4^3",
        dim: 4,
        params: NO_PARAMS,
        products: &[(1, 1, 3, ONE), (1, 3, 4, ONE), (2, 2, 4, ONE), (3, 1, 4, Frac(2, 1))],
        cases: &single(2, T_A4_3),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_4^4",
        dim: 4,
        params: NO_PARAMS,
        products: &[(1, 2, 3, ONE), (1, 3, 4, ONE), (2, 1, 3, Frac(-1, 1))],
        cases: &single(3, T_A4_4),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_4^5",
        dim: 4,
        params: NO_PARAMS,
        products: &[(1, 2, 3, ONE), (1, 3, 4, ONE), (2, 1, 3, Frac(-1, 1)), (2, 2, 4, ONE)],
        cases: &single(3, T_A4_4),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_4^6",
        dim: 4,
        params: NO_PARAMS,
        products: &[(1, 1, 4, ONE), (1, 2, 3, ONE), (2, 1, 3, Frac(-1, 1)), (2, 2, 3, Frac(-2, 1)), (2, 2, 4, ONE)],
        cases: &single(2, T_A4_6),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_4^7",
        dim: 4,
        params: NO_PARAMS,
        products: &[(1, 2, 3, ONE), (2, 1, 4, ONE), (2, 2, 3, Frac(-1, 1))],
        cases: &single(2, T_A4_7),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_4^8",
        dim: 4,
        params: ALPHA,
        products: &[(1, 1, 3, ONE), (1, 2, 4, ONE), (2, 1, 3, Param("alpha", -1)), (2, 2, 4, Frac(-1, 1))],
        cases: &[
            TableCase {
                label: "alpha != 0",
                condition: Condition::NotEquals("alpha", 0),
                representative: &[("alpha", 2)],
                expected_dim: 2,
                expected: T_A4_8_GENERIC,
            },
            TableCase {
                label: "alpha = 0",
                condition: Condition::Equals("alpha", 0),
                representative: &[("alpha", 0)],
                expected_dim: 2,
                expected: T_ROW4_1,
            },
        ],
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_4^9",
        dim: 4,
        params: ALPHA,
        // "e_3 e_3 = e_4" read as a Zinbiel product
        products: &[
            (1, 1, 4, ONE),
            (1, 2, 4, Param("alpha", 1)),
            (2, 1, 4, Param("alpha", -1)),
            (2, 2, 4, ONE),
            (3, 3, 4, ONE),
        ],
        cases: &[
            TableCase {
                label: "alpha != 0",
                condition: Condition::NotEquals("alpha", 0),
                representative: &[("alpha", 2)],
                expected_dim: 2,
                expected: T_A4_9_GENERIC,
            },
            TableCase {
                label: "alpha = 0",
                condition: Condition::Equals("alpha", 0),
                representative: &[("alpha", 0)],
                expected_dim: 0,
                expected: ZERO_TABLE,
            },
        ],
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_4^10",
        dim: 4,
        params: NO_PARAMS,
        products: &[(1, 1, 4, ONE), (1, 3, 4, ONE), (2, 1, 4, Frac(-1, 1)), (2, 2, 4, ONE), (3, 1, 4, ONE)],
        cases: &single(2, T_ROW4_2),
        table_status: TableStatus::Verified,
        note: Some("the printed products give row 4 = (a_2, -a_1, 0, 0); the reference row has (2a_2, -2a_1, 0, 0)"),
    },
    CatalogEntry {
        id: "A_4^11",
        dim: 4,
        params: NO_PARAMS,
        products: &[(1, 1, 4, ONE), (1, 2, 4, ONE), (2, 1, 4, Frac(-1, 1)), (3, 3, 4, ONE)],
        cases: &single(2, T_ROW4_2),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_4^12",
        dim: 4,
        params: NO_PARAMS,
        products: &[(1, 2, 3, ONE), (2, 1, 4, ONE)],
        cases: &single(2, T_A4_7),
        table_status: TableStatus::Verified,
        note: None,
    },
    CatalogEntry {
        id: "A_4^13",
        dim: 4,
        params: NO_PARAMS,
        products: &[(1, 2, 3, ONE), (2, 1, 4, ONE)],
        cases: &single(2, T_A4_6),
        table_status: TableStatus::Flagged,
        note: Some(FLAGGED_NOTE),
    },
    CatalogEntry {
        id: "A_4^14",
        dim: 4,
        params: NO_PARAMS,
        products: &[(1, 2, 3, ONE), (2, 1, 4, ONE)],
        cases: &single(2, T_ROW4_NEG),
        table_status: TableStatus::Flagged,
        note: Some("the reference row omits the e_3 components: ad_w(e_2) = a_1 (e_3 - e_4) for the printed products"),
    },
    CatalogEntry {
        id: "A_4^15",
        dim: 4,
        params: ALPHA_NOT_ONE,
        products: &[(1, 2, 3, ONE), (2, 1, 4, ONE)],
        cases: &[
            TableCase {
                label: "alpha != -1",
                condition: Condition::NotEquals("alpha", -1),
                representative: &[("alpha", 2)],
                expected_dim: 2,
                expected: T_A4_15_GENERIC,
            },
            TableCase {
                label: "alpha = -1",
                condition: Condition::Equals("alpha", -1),
                representative: &[("alpha", -1)],
                expected_dim: 2,
                expected: T_ROW4_1,
            },
        ],
        table_status: TableStatus::Flagged,
        note: Some("the parameter alpha does not occur in the printed products"),
    },
    CatalogEntry {
        id: "A_4^16",
        dim: 4,
        params: NO_PARAMS,
        products: &[(1, 2, 3, ONE), (2, 1, 4, ONE)],
        cases: &single(2, T_ROW4_2),
        table_status: TableStatus::Flagged,
        note: Some(FLAGGED_NOTE),
    },
];

pub fn list_entries() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.id).collect()
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Builds a binding map from `(name, integer)` pairs.
pub fn bindings(pairs: &[(&str, i64)]) -> Bindings {
    pairs.iter().map(|&(k, v)| (k.to_string(), Scalar::from(v))).collect()
}

impl CatalogEntry {
    fn check_bindings(&self, b: &Bindings) -> Result<()> {
        for p in self.params {
            let value =
                b.get(p.name).ok_or_else(|| Error::MissingBinding { id: self.id.into(), param: p.name.into() })?;
            if p.excluded.is_some_and(|x| value == &Scalar::from(x)) {
                return Err(Error::ConstraintViolation { id: self.id.into(), constraint: p.to_string() });
            }
        }
        if let Some(extra) = b.keys().find(|k| !self.params.iter().any(|p| p.name == k.as_str())) {
            return Err(Error::ExtraBinding { id: self.id.into(), param: extra.clone() });
        }
        Ok(())
    }

    pub fn instantiate(&self, b: &Bindings) -> Result<AlgebraSpec> {
        self.check_bindings(b)?;
        let products = self.products.iter().map(|&(i, j, k, c)| {
            let value = match c {
                Frac(p, q) => Scalar::frac(p, q),
                Param(name, factor) => &b[name] * &Scalar::from(factor),
            };
            (i - 1, j - 1, k - 1, value)
        });
        AlgebraSpec::from_products(self.id, self.dim, products)
    }

    /// The reference case whose condition the bindings satisfy.
    pub fn case_for(&self, b: &Bindings) -> Result<&TableCase> {
        self.check_bindings(b)?;
        Ok(self.cases.iter().find(|c| c.condition.holds(b)).expect("cases cover every admissible binding"))
    }

    pub fn expected_inner_dimension(&self, b: &Bindings) -> Result<usize> {
        Ok(self.case_for(b)?.expected_dim)
    }

    /// Reference matrix with parameters substituted.
    pub fn expected_matrix(&self, b: &Bindings) -> Result<SymbolicAdMatrix> {
        let case = self.case_for(b)?;
        let mut m = SymbolicAdMatrix::zero(self.dim);
        for te in case.expected {
            let form = m.entry_mut(te.row - 1, te.col - 1);
            for &(t, c) in te.terms {
                form.coeffs[t - 1] = match c {
                    TableCoeff::Int(v) => Scalar::from(v),
                    TableCoeff::Param(p, k) => &b[p] * &Scalar::from(k),
                    TableCoeff::Expr(f) => f(b),
                };
            }
        }
        Ok(m)
    }

    /// Bindings for each reference case, as rendered in the report.
    pub fn case_bindings(&self) -> Vec<(&TableCase, Bindings)> {
        self.cases.iter().map(|c| (c, bindings(c.representative))).collect()
    }

    /// Every admissible binding drawn from the table's split values plus the
    /// generic values `-1, 1/2, 2, -3`.
    pub fn sample_bindings(&self) -> Vec<Bindings> {
        let Some(p) = self.params.first() else {
            return vec![Bindings::new()];
        };
        let mut values: Vec<Scalar> = self
            .cases
            .iter()
            .filter_map(|c| match c.condition {
                Condition::Equals(_, v) | Condition::NotEquals(_, v) => Some(Scalar::from(v)),
                Condition::Always => None,
            })
            .collect();
        values.extend([Scalar::from(-1), Scalar::frac(1, 2), Scalar::from(2), Scalar::from(-3)]);
        values.sort();
        values.dedup();
        values
            .into_iter()
            .map(|v| Bindings::from([(p.name.to_string(), v)]))
            .filter(|b| self.check_bindings(b).is_ok())
            .collect()
    }
}

pub fn instantiate(id: &str, b: &Bindings) -> Result<AlgebraSpec> {
    entry(id)?.instantiate(b)
}

pub fn expected_inner_dimension(id: &str, b: &Bindings) -> Result<usize> {
    entry(id)?.expected_inner_dimension(b)
}
