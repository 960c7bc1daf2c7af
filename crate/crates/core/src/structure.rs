//! Subspace-valued invariants of an algebra and ideal arithmetic.
//!
//! Every invariant is computed by solving the defining linear conditions
//! exactly, and every result is returned in canonical form.

use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{is_zero_vector, sub_vectors, ConstraintSolver, Matrix, SpanBuilder, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sidedness {
    TwoSided,
    /// `A·L ⊆ L`
    LeftIdeal,
    /// `R·A ⊆ R`
    RightIdeal,
}

impl Sidedness {
    pub fn name(&self) -> &'static str {
        match self {
            Sidedness::TwoSided => "two-sided",
            Sidedness::LeftIdeal => "left",
            Sidedness::RightIdeal => "right",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [Sidedness::TwoSided, Sidedness::LeftIdeal, Sidedness::RightIdeal].into_iter().find(|x| x.name() == s)
    }

    fn needs_left(&self) -> bool {
        matches!(self, Sidedness::TwoSided | Sidedness::LeftIdeal)
    }

    fn needs_right(&self) -> bool {
        matches!(self, Sidedness::TwoSided | Sidedness::RightIdeal)
    }
}

impl fmt::Display for Sidedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A subspace certified to be an ideal of the given sidedness.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealHandle<F: Field> {
    space: Subspace<F>,
    sidedness: Sidedness,
}

impl<F: Field> IdealHandle<F> {
    /// Checks the ideal property on basis pairs and wraps the subspace.
    pub fn certify(a: &Algebra<F>, space: Subspace<F>, sidedness: Sidedness) -> Result<Self> {
        if space.ambient_dim() != a.dim() {
            return Err(Error::DimensionMismatch { expected: a.dim(), found: space.ambient_dim() });
        }
        if let Some(v) = ideal_violation(a, &space, sidedness) {
            return Err(Error::NotAnIdeal { sidedness: sidedness.name(), detail: v.to_string() });
        }
        Ok(IdealHandle { space, sidedness })
    }

    pub(crate) fn trusted(space: Subspace<F>, sidedness: Sidedness) -> Self {
        IdealHandle { space, sidedness }
    }

    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }

    pub fn into_space(self) -> Subspace<F> {
        self.space
    }

    pub fn sidedness(&self) -> Sidedness {
        self.sidedness
    }

    pub fn parent_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }
}

/// A basis product that escapes the subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealViolation {
    /// Index of the algebra basis vector `e_i`.
    pub basis_index: usize,
    /// Index of the subspace basis row.
    pub row: usize,
    /// `true` for `e_i · b`, `false` for `b · e_i`.
    pub left: bool,
}

impl fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.left {
            write!(f, "e_{} · b_{} escapes", self.basis_index, self.row)
        } else {
            write!(f, "b_{} · e_{} escapes", self.row, self.basis_index)
        }
    }
}

/// First basis product leaving `s`, if any.
pub fn ideal_violation<F: Field>(a: &Algebra<F>, s: &Subspace<F>, sidedness: Sidedness) -> Option<IdealViolation> {
    for (row, b) in s.basis_vectors().enumerate() {
        for i in 0..a.dim() {
            if sidedness.needs_left() && !s.contains_unchecked(&a.mul_basis_left(i, b)) {
                return Some(IdealViolation { basis_index: i, row, left: true });
            }
            if sidedness.needs_right() && !s.contains_unchecked(&a.mul_basis_right(b, i)) {
                return Some(IdealViolation { basis_index: i, row, left: false });
            }
        }
    }
    None
}

pub fn is_ideal<F: Field>(a: &Algebra<F>, s: &Subspace<F>, sidedness: Sidedness) -> bool {
    s.ambient_dim() == a.dim() && ideal_violation(a, s, sidedness).is_none()
}

/// `N(A) = {x : (x,a,b) = (a,x,b) = (a,b,x) = 0 for all a, b}`.
///
/// All three slot conditions are imposed, so the result is meaningful for
/// arbitrary (non-Novikov) algebras too.
pub fn nucleus<F: Field>(a: &Algebra<F>) -> Subspace<F> {
    let n = a.dim();
    let f = a.field();
    let mut solver = ConstraintSolver::new(f.clone(), n);
    for i in 0..n {
        for j in 0..n {
            if solver.is_exhausted() {
                break;
            }
            let eij = a.product(i, j);
            solver.impose(|x| {
                let first = sub_vectors(f, &a.mul_basis_right(&a.mul_basis_right(x, i), j), &a.mul(x, eij));
                let middle = sub_vectors(
                    f,
                    &a.mul_basis_right(&a.mul_basis_left(i, x), j),
                    &a.mul_basis_left(i, &a.mul_basis_right(x, j)),
                );
                let last = sub_vectors(f, &a.mul(eij, x), &a.mul_basis_left(i, &a.mul_basis_left(j, x)));
                let mut out = first;
                out.extend(middle);
                out.extend(last);
                out
            });
        }
    }
    solver.finish()
}

/// `K(A) = {k : [k, a] = 0 for all a}`.
pub fn commutative_center<F: Field>(a: &Algebra<F>) -> Subspace<F> {
    let f = a.field();
    let mut solver = ConstraintSolver::new(f.clone(), a.dim());
    for i in 0..a.dim() {
        solver.impose(|x| sub_vectors(f, &a.mul_basis_right(x, i), &a.mul_basis_left(i, x)));
    }
    solver.finish()
}

/// `Z(A) = N(A) ∩ K(A)`.
pub fn center<F: Field>(a: &Algebra<F>) -> Subspace<F> {
    nucleus(a).intersect(&commutative_center(a)).expect("same ambient space")
}

/// Span of all basis-triple associators (before ideal closure).
pub fn associator_span<F: Field>(a: &Algebra<F>) -> Subspace<F> {
    let n = a.dim();
    let mut b = SpanBuilder::new(a.field().clone(), n);
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                b.insert(&a.basis_associator(i, j, k));
                if b.is_full() {
                    break 'outer;
                }
            }
        }
    }
    b.finish()
}

/// `D(A)`: the two-sided ideal generated by all associators.
pub fn associator_ideal<F: Field>(a: &Algebra<F>) -> IdealHandle<F> {
    ideal_closure(a, &associator_span(a), Sidedness::TwoSided).expect("same ambient space")
}

/// `A² = span{e_i e_j}`.
pub fn square<F: Field>(a: &Algebra<F>) -> Subspace<F> {
    let n = a.dim();
    let mut b = SpanBuilder::new(a.field().clone(), n);
    for i in 0..n {
        for j in 0..n {
            b.insert(a.product(i, j));
        }
    }
    b.finish()
}

fn check_ambient<F: Field>(a: &Algebra<F>, s: &Subspace<F>) -> Result<()> {
    if s.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: s.ambient_dim() });
    }
    if s.field() != a.field() {
        return Err(Error::FieldMismatch { left: a.field().descriptor(), right: s.field().descriptor() });
    }
    Ok(())
}

/// `Ann_l(M) = {x : xM = 0}`.
pub fn ann_left<F: Field>(a: &Algebra<F>, m: &Subspace<F>) -> Result<Subspace<F>> {
    check_ambient(a, m)?;
    let mut solver = ConstraintSolver::new(a.field().clone(), a.dim());
    for b in m.basis_vectors() {
        solver.impose(|x| a.mul(x, b));
    }
    Ok(solver.finish())
}

/// `Ann_r(M) = {x : Mx = 0}`.
pub fn ann_right<F: Field>(a: &Algebra<F>, m: &Subspace<F>) -> Result<Subspace<F>> {
    check_ambient(a, m)?;
    let mut solver = ConstraintSolver::new(a.field().clone(), a.dim());
    for b in m.basis_vectors() {
        solver.impose(|x| a.mul(b, x));
    }
    Ok(solver.finish())
}

/// Least ideal of the requested sidedness containing `s`.
///
/// Each round multiplies the vectors added in the previous round on the left
/// and then on the right by every basis vector; the span stabilizes after at
/// most `dim` rounds.
pub fn ideal_closure<F: Field>(a: &Algebra<F>, s: &Subspace<F>, sidedness: Sidedness) -> Result<IdealHandle<F>> {
    check_ambient(a, s)?;
    let n = a.dim();
    let mut span = SpanBuilder::from_subspace(s);
    let mut frontier: Vec<Vec<F::Elem>> = s.basis().to_rows();
    while !frontier.is_empty() && !span.is_full() {
        let mut added = Vec::new();
        if sidedness.needs_left() {
            for v in &frontier {
                for i in 0..n {
                    let w = a.mul_basis_left(i, v);
                    if span.insert(&w) {
                        added.push(w);
                    }
                }
            }
        }
        if sidedness.needs_right() {
            let left_added = added.len();
            for v in frontier.iter().chain(added[..left_added].to_vec().iter()) {
                for i in 0..n {
                    let w = a.mul_basis_right(v, i);
                    if span.insert(&w) {
                        added.push(w);
                    }
                }
            }
        }
        frontier = added;
    }
    Ok(IdealHandle::trusted(span.finish(), sidedness))
}

/// `UV = span{u_i v_j}`. Not certified as an ideal.
pub fn subspace_product<F: Field>(a: &Algebra<F>, u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>> {
    check_ambient(a, u)?;
    check_ambient(a, v)?;
    let mut b = SpanBuilder::new(a.field().clone(), a.dim());
    for x in u.basis_vectors() {
        for y in v.basis_vectors() {
            b.insert(&a.mul(x, y));
            if b.is_full() {
                return Ok(b.finish());
            }
        }
    }
    Ok(b.finish())
}

/// `Ux = span{u_i x}`.
pub fn product_with_vector<F: Field>(a: &Algebra<F>, u: &Subspace<F>, x: &[F::Elem]) -> Result<Subspace<F>> {
    check_ambient(a, u)?;
    let products: Vec<_> = u.basis_vectors().map(|b| a.mul(b, x)).collect();
    Subspace::span(a.field().clone(), a.dim(), products.iter().map(Vec::as_slice))
}

/// `xU = span{x u_i}`.
pub fn vector_with_product<F: Field>(a: &Algebra<F>, x: &[F::Elem], u: &Subspace<F>) -> Result<Subspace<F>> {
    check_ambient(a, u)?;
    let products: Vec<_> = u.basis_vectors().map(|b| a.mul(x, b)).collect();
    Subspace::span(a.field().clone(), a.dim(), products.iter().map(Vec::as_slice))
}

/// `(U, V, W) = span{(u_i, v_j, w_k)}`.
pub fn associator_space<F: Field>(
    a: &Algebra<F>,
    u: &Subspace<F>,
    v: &Subspace<F>,
    w: &Subspace<F>,
) -> Result<Subspace<F>> {
    check_ambient(a, u)?;
    check_ambient(a, v)?;
    check_ambient(a, w)?;
    let mut b = SpanBuilder::new(a.field().clone(), a.dim());
    for x in u.basis_vectors() {
        for y in v.basis_vectors() {
            let xy = a.mul(x, y);
            for z in w.basis_vectors() {
                let lhs = a.mul(&xy, z);
                let rhs = a.mul(x, &a.mul(y, z));
                b.insert(&sub_vectors(a.field(), &lhs, &rhs));
            }
        }
    }
    Ok(b.finish())
}

/// First product `p·s` or `s·p` (for `p` in `parent`, `s` in `s`) leaving
/// `s`, or any basis vector of `s` outside `parent`. `None` means `s` is an
/// ideal of the subalgebra `parent` with the requested sidedness.
pub fn ideal_violation_in<F: Field>(
    a: &Algebra<F>,
    s: &Subspace<F>,
    parent: &Subspace<F>,
    sidedness: Sidedness,
) -> Result<Option<Vec<F::Elem>>> {
    check_ambient(a, s)?;
    check_ambient(a, parent)?;
    if let Some(v) = s.basis_vectors().find(|v| !parent.contains_unchecked(v)) {
        return Ok(Some(v.to_vec()));
    }
    for b in s.basis_vectors() {
        for p in parent.basis_vectors() {
            if sidedness.needs_left() {
                let x = a.mul(p, b);
                if !s.contains_unchecked(&x) {
                    return Ok(Some(x));
                }
            }
            if sidedness.needs_right() {
                let x = a.mul(b, p);
                if !s.contains_unchecked(&x) {
                    return Ok(Some(x));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_ideal_of<F: Field>(a: &Algebra<F>, s: &Subspace<F>, parent: &Subspace<F>, sidedness: Sidedness) -> bool {
    matches!(ideal_violation_in(a, s, parent, sidedness), Ok(None))
}

/// `{x ∈ L : xA ⊆ L}`.
pub fn right_stabilizer<F: Field>(a: &Algebra<F>, l: &Subspace<F>) -> Result<Subspace<F>> {
    check_ambient(a, l)?;
    let eqs = l.equations();
    let mut solver = ConstraintSolver::within(l);
    for j in 0..a.dim() {
        solver.impose(|x| eqs.mul_vec(a.field(), &a.mul_basis_right(x, j)));
        if solver.is_exhausted() {
            break;
        }
    }
    Ok(solver.finish())
}

/// A quotient algebra `A/I` with its projection.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub algebra: Algebra<F>,
    /// `dim(A/I) × dim(A)` matrix sending A-coordinates to quotient coordinates.
    pub projection: Matrix<F::Elem>,
    /// Coordinates of `A` whose basis vectors represent the quotient basis.
    pub representatives: Vec<usize>,
    ideal: Subspace<F>,
}

impl<F: Field> Quotient<F> {
    pub fn project(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let r = self.ideal.reduce(v);
        self.representatives.iter().map(|&c| r[c].clone()).collect()
    }

    /// Representative in `A` of a quotient vector.
    pub fn lift(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.algebra.field();
        let mut out = crate::linalg::zero_vector(f, self.ideal.ambient_dim());
        for (&c, x) in self.representatives.iter().zip(v) {
            out[c] = x.clone();
        }
        out
    }

    /// Preimage in `A` of a subspace of the quotient.
    pub fn preimage(&self, s: &Subspace<F>) -> Subspace<F> {
        let mut b = SpanBuilder::from_subspace(&self.ideal);
        for v in s.basis_vectors() {
            b.insert(&self.lift(v));
        }
        b.finish()
    }

    pub fn ideal(&self) -> &Subspace<F> {
        &self.ideal
    }
}

/// `A/I`, with coset representatives at the non-pivot coordinates of `I`.
pub fn quotient<F: Field>(a: &Algebra<F>, i: &IdealHandle<F>) -> Result<Quotient<F>> {
    quotient_by_subspace(a, i.space())
}

/// As [`quotient`], verifying that `s` is a two-sided ideal.
pub fn quotient_by_subspace<F: Field>(a: &Algebra<F>, s: &Subspace<F>) -> Result<Quotient<F>> {
    check_ambient(a, s)?;
    if let Some(v) = ideal_violation(a, s, Sidedness::TwoSided) {
        return Err(Error::NotAnIdeal { sidedness: Sidedness::TwoSided.name(), detail: v.to_string() });
    }
    let reps = s.non_pivots();
    let project = |v: &[F::Elem]| -> Vec<F::Elem> {
        let r = s.reduce(v);
        reps.iter().map(|&c| r[c].clone()).collect()
    };
    let algebra = Algebra::from_fn(a.field().clone(), reps.len(), |x, y| project(a.product(reps[x], reps[y])));
    let cols: Vec<_> = (0..a.dim()).map(|j| project(&a.basis_vector(j))).collect();
    let projection = Matrix::from_columns(reps.len(), &cols)?;
    Ok(Quotient { algebra, projection, representatives: reps, ideal: s.clone() })
}

/// A multiplicatively closed subspace viewed as an algebra in its own
/// canonical basis.
#[derive(Clone, Debug)]
pub struct Subalgebra<F: Field> {
    pub algebra: Algebra<F>,
    /// `dim(A) × dim(S)` matrix embedding S-coordinates into A.
    pub inclusion: Matrix<F::Elem>,
    space: Subspace<F>,
}

impl<F: Field> Subalgebra<F> {
    pub fn embed(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        self.space.combine(coords)
    }

    pub fn restrict(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        self.space.coordinates(v)
    }

    /// Image in `A` of a subspace of the subalgebra.
    pub fn embed_subspace(&self, s: &Subspace<F>) -> Subspace<F> {
        let mut b = SpanBuilder::new(self.space.field().clone(), self.space.ambient_dim());
        for v in s.basis_vectors() {
            b.insert(&self.embed(v));
        }
        b.finish()
    }

    /// Coordinates of a subspace of `A` contained in the subalgebra.
    pub fn restrict_subspace(&self, s: &Subspace<F>) -> Option<Subspace<F>> {
        let mut b = SpanBuilder::new(self.space.field().clone(), self.space.dim());
        for v in s.basis_vectors() {
            b.insert(&self.restrict(v)?);
        }
        Some(b.finish())
    }

    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }
}

/// Structure constants of a multiplicatively closed subspace in its own basis.
pub fn subalgebra_as_algebra<F: Field>(a: &Algebra<F>, s: &Subspace<F>) -> Result<Subalgebra<F>> {
    check_ambient(a, s)?;
    let basis = s.basis().to_rows();
    let k = basis.len();
    let mut table = Vec::with_capacity(k);
    for (x, bx) in basis.iter().enumerate() {
        let mut row = Vec::with_capacity(k);
        for (y, by) in basis.iter().enumerate() {
            let p = a.mul(bx, by);
            let coords = s
                .coordinates(&p)
                .ok_or_else(|| Error::NotASubalgebra(format!("b_{x} · b_{y} escapes the subspace")))?;
            row.push(coords);
        }
        table.push(row);
    }
    let algebra = Algebra::new(a.field().clone(), k, table)?;
    let inclusion = s.basis().transpose();
    Ok(Subalgebra { algebra, inclusion, space: s.clone() })
}

/// `true` when every basis product of `s` with itself vanishes.
pub fn squares_to_zero<F: Field>(a: &Algebra<F>, s: &Subspace<F>) -> bool {
    s.basis_vectors().all(|x| s.basis_vectors().all(|y| is_zero_vector(a.field(), &a.mul(x, y))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::generators;

    fn q(v: i64) -> num_rational::BigRational {
        Rationals.from_i64(v)
    }

    #[test]
    fn zero_algebra_invariants_are_full() {
        let a = Algebra::zero_product(Rationals, 3);
        assert!(nucleus(&a).is_full());
        assert!(commutative_center(&a).is_full());
        assert!(center(&a).is_full());
        assert!(associator_ideal(&a).is_zero());
        assert!(ann_left(&a, &a.full_space()).unwrap().is_full());
        assert!(ann_right(&a, &a.zero_space()).unwrap().is_full());
    }

    #[test]
    fn commutative_associative_nucleus_is_full() {
        let c = generators::truncated_polynomial(Rationals, 3);
        assert!(nucleus(&c).is_full());
        assert!(commutative_center(&c).is_full());
        assert!(associator_ideal(&c).is_zero());
    }

    #[test]
    fn commutative_center_of_one_sided_table() {
        // e1 e2 = e1, everything else zero
        let a =
            Algebra::from_fn(Rationals, 2, |i, j| if (i, j) == (0, 1) { vec![q(1), q(0)] } else { vec![q(0), q(0)] });
        let k = commutative_center(&a);
        // [x, e1] = -x_2 e1, [x, e2] = x_1 e1  =>  x = 0
        assert!(k.is_zero());
    }

    #[test]
    fn closure_of_an_ideal_is_itself() {
        let a = generators::truncated_poly_algebra(3, PrimeField::new(3).unwrap().from_i64(0)).unwrap();
        let d = associator_ideal(&a);
        let again = ideal_closure(&a, d.space(), Sidedness::TwoSided).unwrap();
        assert_eq!(again.space(), d.space());
        let full = ideal_closure(&a, &a.full_space(), Sidedness::LeftIdeal).unwrap();
        assert!(full.space().is_full());
    }

    #[test]
    fn quotient_by_zero_and_full() {
        let a = generators::truncated_poly_algebra(3, 1).unwrap();
        let zero = IdealHandle::certify(&a, a.zero_space(), Sidedness::TwoSided).unwrap();
        let q0 = quotient(&a, &zero).unwrap();
        assert_eq!(q0.algebra, a);
        assert_eq!(q0.projection, Matrix::identity(a.field(), 3));
        let full = IdealHandle::certify(&a, a.full_space(), Sidedness::TwoSided).unwrap();
        assert_eq!(quotient(&a, &full).unwrap().algebra.dim(), 0);
    }

    #[test]
    fn quotient_rejects_non_ideals() {
        let a = generators::truncated_poly_algebra(3, 1).unwrap();
        // span{e_0}: e_0 ∘ e_1 = e_0 + e_1 leaves it
        let s = Subspace::span(*a.field(), 3, [a.basis_vector(0).as_slice()]).unwrap();
        assert!(!is_ideal(&a, &s, Sidedness::TwoSided));
        assert!(matches!(quotient_by_subspace(&a, &s), Err(Error::NotAnIdeal { .. })));
    }

    #[test]
    fn subalgebra_of_full_and_zero() {
        let a = generators::truncated_poly_algebra(3, 0).unwrap();
        let s = subalgebra_as_algebra(&a, &a.full_space()).unwrap();
        assert_eq!(s.algebra, a);
        assert_eq!(subalgebra_as_algebra(&a, &a.zero_space()).unwrap().algebra.dim(), 0);
    }

    #[test]
    fn subalgebra_rejects_open_subspace() {
        let a = generators::truncated_poly_algebra(3, 1).unwrap();
        let s = Subspace::span(*a.field(), 3, [a.basis_vector(1).as_slice()]).unwrap();
        // x ∘ x = x·1 + x² is not a multiple of x
        assert!(matches!(subalgebra_as_algebra(&a, &s), Err(Error::NotASubalgebra(_))));
    }

    #[test]
    fn product_with_zero_is_zero() {
        let a = generators::truncated_poly_algebra(3, 1).unwrap();
        let p = subspace_product(&a, &a.zero_space(), &a.full_space()).unwrap();
        assert!(p.is_zero());
    }
}
