//! Inner derivations, the full derivation algebra, and the derivation
//! identities checked against them.
//!
//! Sign convention: `ad_w(u) = u w - w u`. Operator matrices store the image
//! of `e_i` in column `i`, so entry `(j, i)` of `ad_w` is the `e_j`-coefficient
//! of `ad_w(e_i)`, namely `sum_t a_t (gamma[i][t][j] - gamma[t][i][j])`.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, span, Matrix, OperatorMatrix, Subspace, Vector};
use crate::render::align_columns;
use crate::sampling;
use crate::scalar::Scalar;

/// A formal combination `sum_t coeffs[t] a_{t+1}` of the coordinates of a generic element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearForm {
    pub coeffs: Vector,
}

impl LinearForm {
    pub fn zero(n: usize) -> Self {
        LinearForm { coeffs: Vector::zeros(n) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn eval(&self, w: &Vector) -> Result<Scalar> {
        self.coeffs.dot(w)
    }

    pub fn add(&self, other: &LinearForm) -> Result<LinearForm> {
        Ok(LinearForm { coeffs: self.coeffs.add(&other.coeffs)? })
    }

    pub fn scale(&self, c: &Scalar) -> LinearForm {
        LinearForm { coeffs: self.coeffs.scale(c) }
    }
}

/// Terms in coordinate order, `"0"` for the zero form, `"a_2 - a_3"`, `"-2a_1"`, `"1/2a_2"`.
impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            f.write_str(sign)?;
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "a_{}", t + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `ad_w` for a generic `w = a_1 e_1 + ... + a_n e_n`, one linear form per entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymbolicAdMatrix {
    dim: usize,
    entries: Vec<LinearForm>,
}

impl SymbolicAdMatrix {
    pub fn zero(dim: usize) -> Self {
        SymbolicAdMatrix { dim, entries: vec![LinearForm::zero(dim); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &LinearForm {
        &self.entries[row * self.dim + col]
    }

    pub fn entry_mut(&mut self, row: usize, col: usize) -> &mut LinearForm {
        &mut self.entries[row * self.dim + col]
    }

    pub fn eval(&self, w: &Vector) -> Result<OperatorMatrix> {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = self.entry(r, c).eval(w)?;
            }
        }
        Ok(m)
    }

    /// Coefficient matrix of `a_{t+1}`.
    pub fn coefficient_matrix(&self, t: usize) -> OperatorMatrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = self.entry(r, c).coeffs[t].clone();
            }
        }
        m
    }

    /// Rendered entries, row by row.
    pub fn cells(&self) -> Vec<Vec<String>> {
        (0..self.dim).map(|r| (0..self.dim).map(|c| self.entry(r, c).to_string()).collect()).collect()
    }
}

impl fmt::Display for SymbolicAdMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&align_columns(&self.cells()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DerivationKind {
    Inner,
    Full,
}

/// A space of operators held through the canonical basis of their row-major vectorizations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivationSpace {
    pub kind: DerivationKind,
    n: usize,
    space: Subspace,
}

impl DerivationSpace {
    fn new(kind: DerivationKind, n: usize, space: Subspace) -> Self {
        DerivationSpace { kind, n, space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Vec<OperatorMatrix> {
        self.space.basis().iter().map(|v| Matrix::from_vector(self.n, self.n, v).expect("vectorized n x n")).collect()
    }

    pub fn as_subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn contains(&self, m: &OperatorMatrix) -> Result<bool> {
        self.space.contains(&m.vectorize())
    }
}

/// `ad_w = R_w - L_w`, assembled from the algebra's product.
pub fn ad_matrix(a: &AlgebraSpec, w: &Vector) -> Result<OperatorMatrix> {
    a.right_mult(w)?.sub(&a.left_mult(w)?)
}

/// `ad_{e_t}` for every basis element; `ad_w = sum_t w_t B_t`.
pub fn ad_generators(a: &AlgebraSpec) -> Vec<OperatorMatrix> {
    (0..a.dim()).map(|t| ad_matrix(a, &Vector::basis(a.dim(), t)).expect("basis vector")).collect()
}

/// Symbolic `ad_w` read directly off the structure constants.
pub fn symbolic_ad(a: &AlgebraSpec) -> SymbolicAdMatrix {
    let n = a.dim();
    let mut m = SymbolicAdMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            let form = m.entry_mut(j, i);
            for t in 0..n {
                form.coeffs[t] = a.gamma(i, t, j) - a.gamma(t, i, j);
            }
        }
    }
    m
}

/// Row-major vectorizations of `ms`, all `n x n`.
fn vectorized(ms: &[OperatorMatrix]) -> Vec<Vector> {
    ms.iter().map(Matrix::vectorize).collect()
}

/// `Inn(A) = span{ad_w}` as a canonical subspace of `n x n` matrices.
pub fn inner_derivation_space(a: &AlgebraSpec) -> DerivationSpace {
    let n = a.dim();
    let space = span(n * n, &vectorized(&ad_generators(a))).expect("uniform lengths");
    DerivationSpace::new(DerivationKind::Inner, n, space)
}

/// Coefficient matrix of the Leibniz constraints `d(e_i e_j) - d(e_i) e_j - e_i d(e_j) = 0`,
/// one row per `(i, j, k)` and one column per entry `d[(r, c)]` (row-major).
pub fn leibniz_system(a: &AlgebraSpec) -> Matrix {
    let n = a.dim();
    let var = |r: usize, c: usize| r * n + c;
    let mut sys = Matrix::zeros(n * n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let row = (i * n + j) * n + k;
                for m in 0..n {
                    // d(e_i e_j)_k = sum_m gamma[i][j][m] d[k][m]
                    sys[(row, var(k, m))] += a.gamma(i, j, m);
                    // (d(e_i) e_j)_k = sum_m d[m][i] gamma[m][j][k]
                    sys[(row, var(m, i))] -= a.gamma(m, j, k);
                    // (e_i d(e_j))_k = sum_m d[m][j] gamma[i][m][k]
                    sys[(row, var(m, j))] -= a.gamma(i, m, k);
                }
            }
        }
    }
    sys
}

/// `Der(A)` as the nullspace of the Leibniz system.
pub fn derivation_space(a: &AlgebraSpec) -> DerivationSpace {
    let n = a.dim();
    let space = if n == 0 { Subspace::zero(0) } else { nullspace(&leibniz_system(a)).expect("nonempty") };
    DerivationSpace::new(DerivationKind::Full, n, space)
}

fn check_square(a: &AlgebraSpec, m: &OperatorMatrix) -> Result<()> {
    for found in [m.rows(), m.cols()] {
        if found != a.dim() {
            return Err(Error::Dimension { expected: a.dim(), found });
        }
    }
    Ok(())
}

/// First basis pair `(i, j)` with `m(e_i e_j) != m(e_i) e_j + e_i m(e_j)`.
pub fn leibniz_violation(a: &AlgebraSpec, m: &OperatorMatrix) -> Result<Option<(usize, usize)>> {
    check_square(a, m)?;
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (Vector::basis(n, i), Vector::basis(n, j));
            let lhs = m.apply(&a.product(&ei, &ej)?)?;
            let rhs = a.product(&m.column(i), &ej)?.add(&a.product(&ei, &m.column(j))?)?;
            if lhs != rhs {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_derivation(a: &AlgebraSpec, m: &OperatorMatrix) -> Result<bool> {
    Ok(leibniz_violation(a, m)?.is_none())
}

fn require_derivation(a: &AlgebraSpec, d: &OperatorMatrix) -> Result<()> {
    match leibniz_violation(a, d)? {
        Some((i, j)) => Err(Error::NotADerivation(i, j)),
        None => Ok(()),
    }
}

/// `[d, L_u] = L_{d(u)}` and `[d, R_u] = R_{d(u)}` for every basis `u`.
pub fn check_mult_operator_identity(a: &AlgebraSpec, d: &OperatorMatrix) -> Result<bool> {
    require_derivation(a, d)?;
    for u in (0..a.dim()).map(|i| Vector::basis(a.dim(), i)) {
        let du = d.apply(&u)?;
        if d.bracket(&a.left_mult(&u)?)? != a.left_mult(&du)? {
            return Ok(false);
        }
        if d.bracket(&a.right_mult(&u)?)? != a.right_mult(&du)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `d([e_i, e_j]) = [d(e_i), e_j] + [e_i, d(e_j)]` in the commutator algebra.
pub fn check_lie_derivation(a: &AlgebraSpec, d: &OperatorMatrix) -> Result<bool> {
    require_derivation(a, d)?;
    Ok(leibniz_violation(&a.commutator(), d)?.is_none())
}

/// Outcome of the `[Der, Inn]` checks.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct InnerIdealReport {
    /// `d B_t - B_t d == ad_{d(e_t)}` for every Der basis element and generator.
    pub identity_holds: bool,
    /// `(derivation basis index, generator index)` pairs where it fails.
    pub identity_failures: Vec<(usize, usize)>,
    /// Every `[B_s, B_t]` lies in `Inn(A)`.
    pub brackets_in_inner: bool,
    /// Every `[B_s, B_t]` is zero.
    pub brackets_vanish: bool,
}

pub fn check_inner_ideal(a: &AlgebraSpec) -> InnerIdealReport {
    let n = a.dim();
    let gens = ad_generators(a);
    let inner = inner_derivation_space(a);
    let mut identity_failures = Vec::new();
    for (di, d) in derivation_space(a).basis().iter().enumerate() {
        for (t, b) in gens.iter().enumerate() {
            let lhs = d.bracket(b).expect("square");
            let rhs = ad_matrix(a, &d.column(t)).expect("length n");
            if lhs != rhs {
                identity_failures.push((di, t));
            }
        }
    }
    let mut brackets_in_inner = true;
    let mut brackets_vanish = true;
    for s in 0..n {
        for t in s + 1..n {
            let br = gens[s].bracket(&gens[t]).expect("square");
            brackets_vanish &= br.is_zero();
            brackets_in_inner &= inner.contains(&br).expect("n x n");
        }
    }
    InnerIdealReport {
        identity_holds: identity_failures.is_empty(),
        identity_failures,
        brackets_in_inner,
        brackets_vanish,
    }
}

/// `ad_{sum c_i w_i} == sum c_i ad_{w_i}`, with the result lying in `Inn(A)`.
pub fn ad_combination_holds(a: &AlgebraSpec, terms: &[(Scalar, Vector)]) -> Result<bool> {
    let n = a.dim();
    let mut w = Vector::zeros(n);
    let mut combined = Matrix::zeros(n, n);
    for (c, wi) in terms {
        w = w.add(&wi.scale(c))?;
        combined = combined.add(&ad_matrix(a, wi)?.scale(c))?;
    }
    let direct = ad_matrix(a, &w)?;
    Ok(direct == combined && inner_derivation_space(a).contains(&direct)?)
}

/// Randomized version of [`ad_combination_holds`]: each trial draws up to four
/// random coefficients and elements.
pub fn ad_linearity_check<R: Rng + ?Sized>(a: &AlgebraSpec, trials: usize, rng: &mut R) -> bool {
    (0..trials).all(|_| {
        let k = rng.gen_range(1..=4);
        let terms: Vec<(Scalar, Vector)> =
            (0..k).map(|_| (sampling::scalar(rng), sampling::vector(rng, a.dim()))).collect();
        ad_combination_holds(a, &terms).expect("consistent dimensions")
    })
}

/// Whether the left and right multiplication operators are derivations.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MultOperatorDiagnostic {
    /// `L_{e_i}` is a derivation, per basis element.
    pub left_is_derivation: Vec<bool>,
    pub right_is_derivation: Vec<bool>,
    /// `span{L_u}` is contained in `Der(A)`.
    pub left_space_in_der: bool,
    pub right_space_in_der: bool,
}

pub fn mult_operator_diagnostic(a: &AlgebraSpec) -> MultOperatorDiagnostic {
    let n = a.dim();
    let e = |i| Vector::basis(n, i);
    let lefts: Vec<_> = (0..n).map(|i| a.left_mult(&e(i)).expect("basis")).collect();
    let rights: Vec<_> = (0..n).map(|i| a.right_mult(&e(i)).expect("basis")).collect();
    let flags =
        |ms: &[OperatorMatrix]| -> Vec<bool> { ms.iter().map(|m| is_derivation(a, m).expect("n x n")).collect() };
    let left_is_derivation = flags(&lefts);
    let right_is_derivation = flags(&rights);
    MultOperatorDiagnostic {
        left_space_in_der: left_is_derivation.iter().all(|&b| b),
        right_space_in_der: right_is_derivation.iter().all(|&b| b),
        left_is_derivation,
        right_is_derivation,
    }
}

/// `n - dim{w : ad_w = 0}`, computed from the symbolic matrix independently of the span.
pub fn inner_dim_by_kernel(a: &AlgebraSpec) -> usize {
    let n = a.dim();
    if n == 0 {
        return 0;
    }
    let sym = symbolic_ad(a);
    // one equation per matrix entry, unknowns a_1..a_n
    let rows: Vec<Vec<Scalar>> =
        (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).map(|(r, c)| sym.entry(r, c).coeffs.0.clone()).collect();
    let system = Matrix::from_rows(rows).expect("uniform rows");
    n - nullspace(&system).expect("nonempty").dim()
}
