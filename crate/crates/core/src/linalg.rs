//! Exact linear algebra: dense matrices, reduced row echelon form, kernels and
//! subspaces in canonical form.
//!
//! A [`Subspace`] always stores its reduced row echelon basis with zero rows
//! removed, so two subspaces are equal exactly when their bases are equal
//! entry-wise.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// A dense row-major matrix over some field's element type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<E>]) -> Result<Self> {
        for c in cols {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
            }
        }
        let mut data = Vec::with_capacity(rows * cols.len());
        for r in 0..rows {
            data.extend(cols.iter().map(|c| c[r].clone()));
        }
        Ok(Matrix { rows, cols: cols.len(), data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[E]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        self.row_iter().map(<[E]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Matrix-vector product `self · v`.
    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        self.row_iter().map(|row| dot(field, row, v)).collect()
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if field.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = field.add(&out.data[idx], &field.mul(a, other.get(k, c)));
                }
            }
        }
        out
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        rref(field, self).rows
    }
}

pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !field.is_zero(x) && !field.is_zero(y) {
            field.add_assign(&mut acc, &field.mul(x, y));
        }
    }
    acc
}

pub fn zero_vector<F: Field>(field: &F, n: usize) -> Vec<F::Elem> {
    vec![field.zero(); n]
}

pub fn unit_vector<F: Field>(field: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector<F: Field>(field: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| field.is_zero(x))
}

pub fn add_vectors<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

pub fn sub_vectors<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| field.sub(x, y)).collect()
}

pub fn scale_vector<F: Field>(field: &F, c: &F::Elem, v: &[F::Elem]) -> Vec<F::Elem> {
    v.iter().map(|x| field.mul(c, x)).collect()
}

/// `y += c · x`.
pub fn axpy<F: Field>(field: &F, y: &mut [F::Elem], c: &F::Elem, x: &[F::Elem]) {
    if field.is_zero(c) {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !field.is_zero(xi) {
            field.add_assign(yi, &field.mul(c, xi));
        }
    }
}

/// Incrementally maintained reduced row echelon basis.
///
/// Every stored row has a leading 1 at its pivot and zeros at every other
/// row's pivot, so sorting the rows by pivot yields the canonical form.
#[derive(Clone, Debug)]
pub struct SpanBuilder<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> SpanBuilder<F> {
    pub fn new(field: F, ambient: usize) -> Self {
        SpanBuilder { field, ambient, rows: Vec::new() }
    }

    pub fn from_subspace(s: &Subspace<F>) -> Self {
        let rows = s.pivots.iter().copied().zip(s.basis.to_rows()).collect();
        SpanBuilder { field: s.field.clone(), ambient: s.ambient, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Reduces `v` against the current rows, returning the remainder.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = v[*pivot].clone();
            if !self.field.is_zero(&c) {
                axpy(&self.field, &mut v, &self.field.neg(&c), row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        is_zero_vector(&self.field, &self.reduce(v))
    }

    /// Adds `v` to the span. Returns `true` if the dimension grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        if self.is_full() {
            return false;
        }
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !self.field.is_zero(x)) else {
            return false;
        };
        let inv = self.field.inv(&v[pivot]).expect("pivot is nonzero");
        for x in v.iter_mut().skip(pivot) {
            *x = self.field.mul(x, &inv);
        }
        for (_, row) in &mut self.rows {
            let c = row[pivot].clone();
            if !self.field.is_zero(&c) {
                axpy(&self.field, row, &self.field.neg(&c), &v);
            }
        }
        self.rows.push((pivot, v));
        true
    }

    pub fn extend<'a, I>(&mut self, vs: I)
    where
        I: IntoIterator<Item = &'a [F::Elem]>,
        F::Elem: 'a,
    {
        for v in vs {
            self.insert(v);
        }
    }

    pub fn finish(mut self) -> Subspace<F> {
        self.rows.sort_by_key(|(p, _)| *p);
        let pivots = self.rows.iter().map(|(p, _)| *p).collect();
        let basis = Matrix::from_rows(self.ambient, self.rows.into_iter().map(|(_, r)| r).collect())
            .expect("rows have ambient length");
        Subspace { field: self.field, ambient: self.ambient, basis, pivots }
    }
}

/// Reduced row echelon form of `m` with zero rows removed. `m` is not modified.
pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let mut b = SpanBuilder::new(field.clone(), m.cols());
    b.extend(m.row_iter());
    b.finish().basis
}

/// The null space `{x : m·x = 0}` in canonical form.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Subspace<F> {
    let n = m.cols();
    let r = rref(field, m);
    let pivots: Vec<usize> =
        r.row_iter().map(|row| row.iter().position(|x| !field.is_zero(x)).expect("rref rows are nonzero")).collect();
    let mut b = SpanBuilder::new(field.clone(), n);
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut x = zero_vector(field, n);
        x[free] = field.one();
        for (row, &p) in r.row_iter().zip(&pivots) {
            x[p] = field.neg(&row[free]);
        }
        b.insert(&x);
    }
    b.finish()
}

/// A linear subspace of `F^n` held in canonical (reduced row echelon) form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    basis: Matrix<F::Elem>,
    pivots: Vec<usize>,
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            self.basis.row_iter().map(|r| r.iter().map(|x| self.field.format(x)).collect()).collect();
        f.debug_struct("Subspace")
            .field("field", &self.field.descriptor())
            .field("ambient", &self.ambient)
            .field("basis", &rows)
            .finish()
    }
}

/// `span{[1, 0], [0, 1]}`, or `0` for the zero subspace.
impl<F: Field> fmt::Display for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.rows() == 0 {
            return f.write_str("0");
        }
        f.write_str("span{")?;
        for (i, r) in self.basis.row_iter().enumerate() {
            let cells: Vec<String> = r.iter().map(|x| self.field.format(x)).collect();
            write!(f, "{}[{}]", if i > 0 { ", " } else { "" }, cells.join(", "))?;
        }
        f.write_str("}")
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        SpanBuilder::new(field, ambient).finish()
    }

    pub fn full(field: F, ambient: usize) -> Self {
        let basis = Matrix::identity(&field, ambient);
        Subspace { field, ambient, basis, pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn span<'a, I>(field: F, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a [F::Elem]>,
        F::Elem: 'a,
    {
        let mut b = SpanBuilder::new(field, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: v.len() });
            }
            b.insert(v);
        }
        Ok(b.finish())
    }

    /// Span of the rows of `m`.
    pub fn row_space(field: F, m: &Matrix<F::Elem>) -> Self {
        let mut b = SpanBuilder::new(field, m.cols());
        b.extend(m.row_iter());
        b.finish()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis (reduced row echelon form).
    pub fn basis(&self) -> &Matrix<F::Elem> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[F::Elem]> + '_ {
        self.basis.row_iter()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_vector(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Subspace<F>) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.descriptor(), right: other.field.descriptor() });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    ///
    /// This is linear in `v` and vanishes exactly on the subspace.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = v.to_vec();
        for (row, &p) in self.basis.row_iter().zip(&self.pivots) {
            let c = v[p].clone();
            if !self.field.is_zero(&c) {
                axpy(&self.field, &mut v, &self.field.neg(&c), row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        self.check_vector(v)?;
        Ok(self.contains_unchecked(v))
    }

    pub(crate) fn contains_unchecked(&self, v: &[F::Elem]) -> bool {
        is_zero_vector(&self.field, &self.reduce(v))
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` lies outside.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if v.len() != self.ambient || !self.contains_unchecked(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(coords.len(), self.dim(), "coordinate count does not match dimension");
        let mut v = zero_vector(&self.field, self.ambient);
        for (c, row) in coords.iter().zip(self.basis.row_iter()) {
            axpy(&self.field, &mut v, c, row);
        }
        v
    }

    /// `self ⊆ other`.
    pub fn leq(&self, other: &Subspace<F>) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.basis_vectors().all(|v| other.contains_unchecked(v)))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_compatible(other)?;
        let mut b = SpanBuilder::from_subspace(self);
        b.extend(other.basis_vectors());
        Ok(b.finish())
    }

    /// Intersection via the kernel of the stacked defining equations.
    pub fn intersect(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_compatible(other)?;
        let mut eqs = self.equations().to_rows();
        eqs.extend(other.equations().to_rows());
        let m = Matrix::from_rows(self.ambient, eqs)?;
        Ok(kernel(&self.field, &m))
    }

    /// A matrix whose kernel is exactly this subspace (rows span its annihilator).
    pub fn equations(&self) -> Matrix<F::Elem> {
        kernel(&self.field, &self.basis).basis
    }

    /// Non-pivot coordinates, in increasing order: a complement of the subspace.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// Solves a family of homogeneous linear conditions by successive restriction.
///
/// Starts from the whole space; each imposed linear map cuts the solution
/// space down to the vectors it sends to zero. Once the solution space is
/// zero, further conditions are skipped.
pub struct ConstraintSolver<F: Field> {
    field: F,
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
}

impl<F: Field> ConstraintSolver<F> {
    pub fn new(field: F, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit_vector(&field, ambient, i)).collect();
        ConstraintSolver { field, ambient, basis }
    }

    /// Starts from an arbitrary subspace instead of the whole space.
    pub fn within(s: &Subspace<F>) -> Self {
        ConstraintSolver { field: s.field.clone(), ambient: s.ambient, basis: s.basis.to_rows() }
    }

    pub fn is_exhausted(&self) -> bool {
        self.basis.is_empty()
    }

    /// Restricts the solution space to `{x : map(x) = 0}`.
    pub fn impose<M>(&mut self, map: M)
    where
        M: Fn(&[F::Elem]) -> Vec<F::Elem>,
    {
        if self.basis.is_empty() {
            return;
        }
        let images: Vec<Vec<F::Elem>> = self.basis.iter().map(|b| map(b)).collect();
        if images.iter().all(|v| is_zero_vector(&self.field, v)) {
            return;
        }
        let rows = images[0].len();
        let m = Matrix::from_columns(rows, &images).expect("images share a length");
        let coeffs = kernel(&self.field, &m);
        let mut b = SpanBuilder::new(self.field.clone(), self.ambient);
        for c in coeffs.basis_vectors() {
            let mut v = zero_vector(&self.field, self.ambient);
            for (ci, bi) in c.iter().zip(&self.basis) {
                axpy(&self.field, &mut v, ci, bi);
            }
            b.insert(&v);
        }
        self.basis = b.finish().basis.to_rows();
    }

    pub fn finish(self) -> Subspace<F> {
        let mut b = SpanBuilder::new(self.field, self.ambient);
        for v in &self.basis {
            b.insert(v);
        }
        b.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q(v: i64) -> num_rational::BigRational {
        Rationals.from_i64(v)
    }

    #[test]
    fn rref_of_zero_matrix_is_empty() {
        let m = Matrix::zeros(&Rationals, 3, 3);
        let r = rref(&Rationals, &m);
        assert_eq!(r.rows(), 0);
        assert_eq!(r.cols(), 3);
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let id = Matrix::identity(&Rationals, 4);
        assert_eq!(rref(&Rationals, &id), id);
    }

    #[test]
    fn rref_over_gf2() {
        let f = PrimeField::new(2).unwrap();
        let m = Matrix::from_rows(3, vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        let r = rref(&f, &m);
        let expected = Matrix::from_rows(3, vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn kernel_examples() {
        let id = Matrix::identity(&Rationals, 3);
        assert!(kernel(&Rationals, &id).is_zero());
        let z = Matrix::zeros(&Rationals, 3, 3);
        assert!(kernel(&Rationals, &z).is_full());
        let m = Matrix::from_rows(2, vec![vec![q(1), q(2)]]).unwrap();
        let k = kernel(&Rationals, &m);
        assert_eq!(k.dim(), 1);
        // canonical form of span{(-2, 1)} is span{(1, -1/2)}
        let expected = Subspace::span(Rationals, 2, [[q(-2), q(1)].as_slice()]).unwrap();
        assert_eq!(k, expected);
        assert_eq!(k.basis().row(0), &[q(1), Rationals.parse("-1/2").unwrap()]);
    }

    #[test]
    fn sum_and_intersection_basics() {
        let f = Rationals;
        let e1 = unit_vector(&f, 3, 0);
        let e2 = unit_vector(&f, 3, 1);
        let a = Subspace::span(f, 3, [e1.as_slice()]).unwrap();
        let b = Subspace::span(f, 3, [e2.as_slice()]).unwrap();
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert!(a.intersect(&b).unwrap().is_zero());
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn mismatched_ambient_is_an_error() {
        let a = Subspace::full(Rationals, 2);
        let b = Subspace::full(Rationals, 3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.contains(&[q(1)]).is_err());
    }

    #[test]
    fn mismatched_prime_fields_are_an_error() {
        let a = Subspace::full(PrimeField::new(2).unwrap(), 2);
        let b = Subspace::full(PrimeField::new(3).unwrap(), 2);
        assert!(matches!(a.intersect(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn coordinates_round_trip() {
        let f = PrimeField::new(5).unwrap();
        let s = Subspace::span(f, 3, [[1, 2, 3].as_slice(), [0, 1, 4].as_slice()]).unwrap();
        let v = s.combine(&[3, 4]);
        assert_eq!(s.coordinates(&v).unwrap(), vec![3, 4]);
        assert!(s.coordinates(&[0, 0, 1]).is_none());
    }

    #[test]
    fn constraint_solver_matches_kernel() {
        let f = Rationals;
        let m = Matrix::from_rows(3, vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]]).unwrap();
        let mut s = ConstraintSolver::new(f, 3);
        s.impose(|x| m.mul_vec(&f, x));
        assert_eq!(s.finish(), kernel(&f, &m));
    }
}
