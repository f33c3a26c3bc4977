//! Exact vectors, matrices and canonical subspaces over the rationals.
//!
//! Everything here returns fresh values; no kernel mutates its input.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A coordinate vector in a fixed basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    /// The basis vector `e_{i+1}` (0-based index `i`).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| Scalar::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        check_len(self.len(), other.len())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        check_len(self.len(), other.len())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// `self += c * other`, lengths assumed equal.
    fn axpy(&mut self, c: &Scalar, other: &Vector) {
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            *x += &(c * y);
        }
    }

    pub fn dot(&self, other: &Vector) -> Result<Scalar> {
        check_len(self.len(), other.len())?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|x| !x.is_zero())
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::Dimension { expected, found });
    }
    Ok(())
}

/// Dense row-major matrix.
///
/// Linear operators on an algebra are stored with column `i` holding the
/// coordinates of the image of `e_{i+1}`, so `m.apply(v)` is the usual
/// matrix-vector product.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// An `n x n` matrix acting on an `n`-dimensional algebra.
pub type OperatorMatrix = Matrix;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            check_len(cols, row.len())?;
            data.extend(row);
        }
        Ok(Matrix { rows: n_rows, cols, data })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector]) -> Result<Self> {
        let rows = cols.first().map_or(0, Vector::len);
        let mut m = Self::zeros(rows, cols.len());
        for (c, v) in cols.iter().enumerate() {
            check_len(rows, v.len())?;
            for r in 0..rows {
                m[(r, c)] = v[r].clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn row(&self, r: usize) -> Vector {
        Vector(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector((0..self.rows).map(|r| self[(r, c)].clone()).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    /// Row-major flattening, used to treat matrices as vectors of length `rows * cols`.
    pub fn vectorize(&self) -> Vector {
        Vector(self.data.clone())
    }

    pub fn from_vector(rows: usize, cols: usize, v: &Vector) -> Result<Self> {
        check_len(rows * cols, v.len())?;
        Ok(Matrix { rows, cols, data: v.0.clone() })
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        check_len(self.cols, v.len())?;
        Ok(Vector((0..self.rows).map(|r| (0..self.cols).map(|c| &self[(r, c)] * &v[c]).sum()).collect()))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_len(self.cols, other.rows)?;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out[(r, c)] += &(a * &other[(k, c)]);
                }
            }
        }
        Ok(out)
    }

    fn check_shape(&self, other: &Matrix) -> Result<()> {
        check_len(self.rows, other.rows)?;
        check_len(self.cols, other.cols)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// The operator bracket `self * other - other * self`.
    pub fn bracket(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(rref(self)?.1)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|r| (0..self.cols).map(|c| self[(r, c)].to_string()).collect()).collect();
        f.write_str(&crate::render::align_columns(&cells))
    }
}

/// Reduced row-echelon form and rank. Pivots are chosen leftmost-first and
/// scaled to 1, which makes the result unique.
pub fn rref(m: &Matrix) -> Result<(Matrix, usize)> {
    if m.rows == 0 || m.cols == 0 {
        return Err(Error::EmptyMatrix);
    }
    let mut rows: Vec<Vector> = (0..m.rows).map(|r| m.row(r)).collect();
    let mut rank = 0;
    for col in 0..m.cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv()?;
        rows[rank] = rows[rank].scale(&inv);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let c = -&row[col];
                row.axpy(&c, &pivot_row);
            }
        }
        rank += 1;
    }
    let data = rows.into_iter().flat_map(|v| v.0).collect();
    Ok((Matrix { rows: m.rows, cols: m.cols, data }, rank))
}

/// A linear subspace held as its canonical (reduced row-echelon) basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: (0..ambient_dim).map(|i| Vector::basis(ambient_dim, i)).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    fn pivots(&self) -> impl Iterator<Item = (usize, &Vector)> {
        self.basis.iter().map(|b| (b.leading_index().expect("basis vectors are nonzero"), b))
    }

    /// Residual of `v` after elimination against the basis; zero iff `v` is in the span.
    pub fn reduce(&self, v: &Vector) -> Result<Vector> {
        check_len(self.ambient_dim, v.len())?;
        let mut r = v.clone();
        for (p, b) in self.pivots() {
            if !r[p].is_zero() {
                let c = -&r[p];
                r.axpy(&c, b);
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Coordinates of `v` with respect to the canonical basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &Vector) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots().map(|(p, _)| v[p].clone()).collect()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Canonical basis of the span of `vs`, all of which must have length `ambient_dim`.
pub fn span(ambient_dim: usize, vs: &[Vector]) -> Result<Subspace> {
    for v in vs {
        check_len(ambient_dim, v.len())?;
    }
    if vs.is_empty() || ambient_dim == 0 {
        return Ok(Subspace::zero(ambient_dim));
    }
    let (r, rank) = rref(&Matrix::from_rows(vs.iter().map(|v| v.0.clone()).collect())?)?;
    Ok(Subspace { ambient_dim, basis: (0..rank).map(|i| r.row(i)).collect() })
}

/// Canonical basis of `{v : m v = 0}`.
pub fn nullspace(m: &Matrix) -> Result<Subspace> {
    let (r, rank) = rref(m)?;
    let pivot_cols: Vec<usize> = (0..rank).map(|i| r.row(i).leading_index().expect("nonzero rref row")).collect();
    let free = (0..m.cols).filter(|c| !pivot_cols.contains(c));
    let raw: Vec<Vector> = free
        .map(|f| {
            let mut v = Vector::basis(m.cols, f);
            for (i, &p) in pivot_cols.iter().enumerate() {
                v[p] = -&r[(i, f)];
            }
            v
        })
        .collect();
    span(m.cols, &raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(3);
        assert_eq!(rref(&id).unwrap(), (id, 3));
    }

    #[test]
    fn rref_proportional_rows() {
        let (r, rank) = rref(&ints(&[&[2, 4], &[1, 2]])).unwrap();
        assert_eq!(r, ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn rref_of_empty_matrix_is_an_error() {
        assert_eq!(rref(&Matrix::zeros(0, 3)), Err(Error::EmptyMatrix));
        assert_eq!(rref(&Matrix::zeros(2, 0)), Err(Error::EmptyMatrix));
        assert_eq!(nullspace(&Matrix::zeros(0, 0)), Err(Error::EmptyMatrix));
    }

    #[test]
    fn rref_with_fractions() {
        let (r, rank) = rref(&ints(&[&[0, 3, 1], &[2, 1, 0]])).unwrap();
        assert_eq!(rank, 2);
        assert_eq!(r.row(0), Vector(vec![Scalar::one(), Scalar::zero(), Scalar::frac(-1, 6)]));
        assert_eq!(r.row(1), Vector(vec![Scalar::zero(), Scalar::one(), Scalar::frac(1, 3)]));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&Matrix::zeros(2, 2)).unwrap().dim(), 2);
        assert_eq!(nullspace(&Matrix::identity(4)).unwrap().dim(), 0);
        let ns = nullspace(&ints(&[&[1, 1, 1]])).unwrap();
        assert_eq!(ns.dim(), 2);
        for b in ns.basis() {
            assert!(ints(&[&[1, 1, 1]]).apply(b).unwrap().is_zero());
        }
        // canonical form: pivots at columns 0 and 1
        assert_eq!(ns.basis()[0], Vector::from_ints(&[1, 0, -1]));
        assert_eq!(ns.basis()[1], Vector::from_ints(&[0, 1, -1]));
    }

    #[test]
    fn span_examples() {
        let s = span(2, &[Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1])]).unwrap();
        assert_eq!(s.dim(), 2);
        let s = span(2, &[Vector::from_ints(&[1, 2]), Vector::from_ints(&[2, 4])]).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&Vector::from_ints(&[-3, -6])).unwrap());
        assert!(!s.contains(&Vector::from_ints(&[1, 1])).unwrap());
        assert_eq!(span(3, &[]).unwrap().dim(), 0);
    }

    #[test]
    fn span_mixed_lengths_is_an_error() {
        let err = span(2, &[Vector::from_ints(&[1, 0]), Vector::from_ints(&[1, 0, 0])]);
        assert_eq!(err, Err(Error::Dimension { expected: 2, found: 3 }));
    }

    #[test]
    fn coordinates_round_trip() {
        let s = span(3, &[Vector::from_ints(&[1, 2, 0]), Vector::from_ints(&[0, 1, 5])]).unwrap();
        let v = Vector::from_ints(&[2, 7, 15]);
        let coords = s.coordinates(&v).unwrap().unwrap();
        let rebuilt = s.basis().iter().zip(&coords).fold(Vector::zeros(3), |acc, (b, c)| acc.add(&b.scale(c)).unwrap());
        assert_eq!(rebuilt, v);
        assert_eq!(s.coordinates(&Vector::from_ints(&[0, 0, 1])).unwrap(), None);
    }

    #[test]
    fn matrix_products() {
        let a = ints(&[&[1, 2], &[3, 4]]);
        let b = ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), ints(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.bracket(&b).unwrap(), ints(&[&[-1, -3], &[3, 1]]));
        assert_eq!(a.apply(&Vector::from_ints(&[1, 1])).unwrap(), Vector::from_ints(&[3, 7]));
        assert!(a.mul(&Matrix::zeros(3, 3)).is_err());
    }
}
