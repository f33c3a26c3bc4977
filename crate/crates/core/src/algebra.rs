//! Algebras given by structure constants `e_i * e_j = sum_k gamma[i][j][k] e_k`.
//!
//! Indices are 0-based in the API; anything shown to a user is 1-based.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{nullspace, Matrix, OperatorMatrix, Subspace, Vector};
use crate::scalar::Scalar;

/// A finite-dimensional algebra with a dense structure-constant tensor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraSpec {
    name: String,
    dim: usize,
    gamma: Vec<Scalar>,
}

/// A basis triple on which the Zinbiel identity fails.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZinbielViolation {
    pub triple: (usize, usize, usize),
    /// `(e_i e_j) e_k - e_i (e_j e_k) - e_i (e_k e_j)`.
    pub residual: Vector,
}

impl fmt::Display for ZinbielViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(f, "({}, {}, {}): residual {}", i + 1, j + 1, k + 1, self.residual)
    }
}

/// First product `b * e_j` or `e_j * b` that escapes a subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealWitness {
    /// Index into the subspace basis.
    pub basis_index: usize,
    /// Index of the algebra basis element.
    pub element: usize,
    /// `true` when the offending product is `b * e_j`, `false` for `e_j * b`.
    pub left: bool,
    pub product: Vector,
}

impl AlgebraSpec {
    /// The abelian (all products zero) algebra of the given dimension.
    pub fn abelian(name: impl Into<String>, dim: usize) -> Self {
        AlgebraSpec { name: name.into(), dim, gamma: vec![Scalar::zero(); dim * dim * dim] }
    }

    /// Builds an algebra from sparse products `(i, j, k, c)` meaning `e_i e_j += c e_k` (0-based).
    pub fn from_products(
        name: impl Into<String>,
        dim: usize,
        products: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut a = Self::abelian(name, dim);
        for (i, j, k, c) in products {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::Dimension { expected: dim, found: idx + 1 });
                }
            }
            let slot = a.slot(i, j, k);
            a.gamma[slot] += &c;
        }
        Ok(a)
    }

    fn slot(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.gamma[self.slot(i, j, k)]
    }

    pub fn set_gamma(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let slot = self.slot(i, j, k);
        self.gamma[slot] = c;
    }

    pub fn is_abelian(&self) -> bool {
        self.gamma.iter().all(Scalar::is_zero)
    }

    /// Structure constants multiplied through by `c`.
    pub fn scaled(&self, c: &Scalar) -> AlgebraSpec {
        AlgebraSpec { name: self.name.clone(), dim: self.dim, gamma: self.gamma.iter().map(|g| g * c).collect() }
    }

    /// Coordinates of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        Vector((0..self.dim).map(|k| self.gamma(i, j, k).clone()).collect())
    }

    fn check_vec(&self, v: &Vector) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, found: v.len() });
        }
        Ok(())
    }

    /// Bilinear product of two coordinate vectors.
    pub fn product(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        self.check_vec(u)?;
        self.check_vec(v)?;
        let n = self.dim;
        let mut out = Vector::zeros(n);
        for i in (0..n).filter(|&i| !u[i].is_zero()) {
            for j in (0..n).filter(|&j| !v[j].is_zero()) {
                let uv = &u[i] * &v[j];
                for k in 0..n {
                    let g = self.gamma(i, j, k);
                    if !g.is_zero() {
                        out[k] += &(&uv * g);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Residual of the Zinbiel identity `(uv)w - u(vw) - u(wv)`.
    pub fn zinbiel_residual(&self, u: &Vector, v: &Vector, w: &Vector) -> Result<Vector> {
        let lhs = self.product(&self.product(u, v)?, w)?;
        let r1 = self.product(u, &self.product(v, w)?)?;
        let r2 = self.product(u, &self.product(w, v)?)?;
        lhs.sub(&r1)?.sub(&r2)
    }

    /// All basis triples violating the Zinbiel identity. By trilinearity an
    /// empty result means the identity holds on the whole algebra.
    pub fn check_zinbiel(&self) -> Vec<ZinbielViolation> {
        let n = self.dim;
        let e = |i| Vector::basis(n, i);
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let residual =
                        self.zinbiel_residual(&e(i), &e(j), &e(k)).expect("basis vectors have the right length");
                    if !residual.is_zero() {
                        out.push(ZinbielViolation { triple: (i, j, k), residual });
                    }
                }
            }
        }
        out
    }

    pub fn is_zinbiel(&self) -> bool {
        self.check_zinbiel().is_empty()
    }

    /// `L_u`: column `j` holds `u * e_j`.
    pub fn left_mult(&self, u: &Vector) -> Result<OperatorMatrix> {
        self.check_vec(u)?;
        let cols: Result<Vec<Vector>> = (0..self.dim).map(|j| self.product(u, &Vector::basis(self.dim, j))).collect();
        Matrix::from_columns(&cols?).map(|m| self.square_or_empty(m))
    }

    /// `R_u`: column `j` holds `e_j * u`.
    pub fn right_mult(&self, u: &Vector) -> Result<OperatorMatrix> {
        self.check_vec(u)?;
        let cols: Result<Vec<Vector>> = (0..self.dim).map(|j| self.product(&Vector::basis(self.dim, j), u)).collect();
        Matrix::from_columns(&cols?).map(|m| self.square_or_empty(m))
    }

    fn square_or_empty(&self, m: Matrix) -> Matrix {
        if self.dim == 0 {
            Matrix::zeros(0, 0)
        } else {
            m
        }
    }

    /// The bracket algebra `[u, v] = u v - v u`.
    pub fn commutator(&self) -> AlgebraSpec {
        let n = self.dim;
        let mut out = AlgebraSpec::abelian(format!("[{}]", self.name), n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.set_gamma(i, j, k, self.gamma(i, j, k) - self.gamma(j, i, k));
                }
            }
        }
        out
    }

    /// Basis triples where the Jacobi identity fails. The algebra must be
    /// antisymmetric; otherwise the first asymmetric pair is reported as an error.
    pub fn check_jacobi(&self) -> Result<Vec<(usize, usize, usize)>> {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                let sym = self.basis_product(i, j).add(&self.basis_product(j, i))?;
                if !sym.is_zero() {
                    return Err(Error::NotAntisymmetric(i, j));
                }
            }
        }
        let e = |i| Vector::basis(n, i);
        let br = |u: &Vector, v: &Vector| self.product(u, v);
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s = br(&br(&e(i), &e(j))?, &e(k))?
                        .add(&br(&br(&e(j), &e(k))?, &e(i))?)?
                        .add(&br(&br(&e(k), &e(i))?, &e(j))?)?;
                    if !s.is_zero() {
                        out.push((i, j, k));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `{u : u * A = 0}`.
    pub fn annihilator_left(&self) -> Subspace {
        // u * e_j = sum_i u_i gamma[i][j][.], one row per (j, k)
        self.annihilator(|i, j, k| self.gamma(i, j, k))
    }

    /// `{u : A * u = 0}`.
    pub fn annihilator_right(&self) -> Subspace {
        self.annihilator(|i, j, k| self.gamma(j, i, k))
    }

    fn annihilator<'a>(&'a self, coeff: impl Fn(usize, usize, usize) -> &'a Scalar) -> Subspace {
        let n = self.dim;
        if n == 0 {
            return Subspace::zero(0);
        }
        let mut system = Matrix::zeros(n * n, n);
        for j in 0..n {
            for k in 0..n {
                for i in 0..n {
                    system[(j * n + k, i)] = coeff(i, j, k).clone();
                }
            }
        }
        nullspace(&system).expect("nonempty system")
    }

    /// First product leaving `s`, or `None` when `s` is a two-sided ideal.
    pub fn ideal_witness(&self, s: &Subspace) -> Result<Option<IdealWitness>> {
        if s.ambient_dim() != self.dim {
            return Err(Error::Dimension { expected: self.dim, found: s.ambient_dim() });
        }
        for (bi, b) in s.basis().iter().enumerate() {
            for j in 0..self.dim {
                let e = Vector::basis(self.dim, j);
                for left in [true, false] {
                    let product = if left { self.product(b, &e)? } else { self.product(&e, b)? };
                    if !s.contains(&product)? {
                        return Ok(Some(IdealWitness { basis_index: bi, element: j, left, product }));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace) -> Result<bool> {
        Ok(self.ideal_witness(s)?.is_none())
    }

    /// Brute-force check that `u v + v u` is associative on basis triples.
    pub fn symmetrized_is_associative(&self) -> bool {
        let n = self.dim;
        let e = |i| Vector::basis(n, i);
        let sym = |u: &Vector, v: &Vector| -> Vector {
            self.product(u, v).unwrap().add(&self.product(v, u).unwrap()).unwrap()
        };
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| sym(&sym(&e(i), &e(j)), &e(k)) == sym(&e(i), &sym(&e(j), &e(k))))))
    }
}
