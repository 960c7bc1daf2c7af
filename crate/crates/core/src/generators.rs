//! Constructors for Novikov algebras and test corpora.
//!
//! The main source is the Gelfand–Dorfman construction: from a commutative
//! associative algebra `C` with derivation `d` and scalar `λ`, the product
//! `a ∘ b = a·d(b) + λ·a·b` is Novikov.
//!
//! Corpora are drawn from a `ChaCha8Rng` seeded with the profile seed, so a
//! profile fully determines its corpus.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{check_identity, is_novikov, Algebra, AnyAlgebra, IdentityId};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor, PrimeField, Rationals};
use crate::linalg::{axpy, is_zero_vector, kernel, sub_vectors, zero_vector, Matrix};

/// Inputs to the Gelfand–Dorfman construction.
#[derive(Clone, Debug)]
pub struct GdInput<F: Field> {
    c: Algebra<F>,
    d: Matrix<F::Elem>,
    lambda: F::Elem,
}

impl<F: Field> GdInput<F> {
    /// Validates that `c` is commutative and associative and that `d`
    /// (acting on column vectors) satisfies the Leibniz rule.
    pub fn new(c: Algebra<F>, d: Matrix<F::Elem>, lambda: F::Elem) -> Result<Self> {
        let n = c.dim();
        if d.rows() != n || d.cols() != n {
            return Err(Error::InvalidGdInput(format!("derivation is {}x{}, expected {n}x{n}", d.rows(), d.cols())));
        }
        for id in [IdentityId::Commutativity, IdentityId::Associativity] {
            let r = check_identity(&c, id);
            if let Some(w) = r.witness {
                return Err(Error::InvalidGdInput(format!("base algebra violates {id} at {:?}", w.indices)));
            }
        }
        if let Some((i, j)) = leibniz_violation(&c, &d) {
            return Err(Error::InvalidGdInput(format!("not a derivation: Leibniz rule fails at (e_{i}, e_{j})")));
        }
        Ok(GdInput { c, d, lambda })
    }

    pub fn base(&self) -> &Algebra<F> {
        &self.c
    }

    pub fn derivation(&self) -> &Matrix<F::Elem> {
        &self.d
    }

    pub fn lambda(&self) -> &F::Elem {
        &self.lambda
    }
}

/// First basis pair where `d(e_i e_j) ≠ d(e_i) e_j + e_i d(e_j)`.
pub fn leibniz_violation<F: Field>(c: &Algebra<F>, d: &Matrix<F::Elem>) -> Option<(usize, usize)> {
    let f = c.field();
    let n = c.dim();
    let images: Vec<_> = (0..n).map(|j| d.column(j)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = d.mul_vec(f, c.product(i, j));
            let mut rhs = c.mul_basis_right(&images[i], j);
            let right = c.mul_basis_left(i, &images[j]);
            axpy(f, &mut rhs, &f.one(), &right);
            if !is_zero_vector(f, &sub_vectors(f, &lhs, &rhs)) {
                return Some((i, j));
            }
        }
    }
    None
}

/// `e_i ∘ e_j = e_i · d(e_j) + λ e_i e_j`.
pub fn gd_algebra<F: Field>(input: &GdInput<F>) -> Result<Algebra<F>> {
    let out = gd_table(&input.c, &input.d, &input.lambda);
    debug_assert!(is_novikov(&out), "Gelfand-Dorfman output is not Novikov");
    Ok(out)
}

/// The Gelfand–Dorfman product table without validating the inputs.
///
/// The result is only guaranteed to be Novikov when `c` is commutative and
/// associative and `d` is a derivation; otherwise run the checker on it.
pub fn gd_table<F: Field>(c: &Algebra<F>, d: &Matrix<F::Elem>, lambda: &F::Elem) -> Algebra<F> {
    let f = c.field();
    let images: Vec<_> = (0..c.dim()).map(|j| d.column(j)).collect();
    Algebra::from_fn(f.clone(), c.dim(), |i, j| {
        let mut v = c.mul_basis_left(i, &images[j]);
        axpy(f, &mut v, lambda, c.product(i, j));
        v
    })
}

/// `F[x]/(x^m)` in the basis `1, x, ..., x^{m-1}`.
pub fn truncated_polynomial<F: Field>(field: F, m: usize) -> Algebra<F> {
    let one = field.one();
    Algebra::from_fn(field.clone(), m, |i, j| {
        let mut v = zero_vector(&field, m);
        if i + j < m {
            v[i + j] = one.clone();
        }
        v
    })
}

/// `F[x]/(f)` for monic `f = x^m + c_{m-1} x^{m-1} + ... + c_0`, given the
/// low coefficients `[c_0, ..., c_{m-1}]`.
pub fn polynomial_quotient<F: Field>(field: F, low_coeffs: &[F::Elem]) -> Algebra<F> {
    let m = low_coeffs.len();
    // powers[k] = x^k reduced modulo f, for k < 2m - 1
    let mut powers: Vec<Vec<F::Elem>> = Vec::new();
    for k in 0..(2 * m).saturating_sub(1) {
        if k < m {
            let mut v = zero_vector(&field, m);
            v[k] = field.one();
            powers.push(v);
        } else {
            // x^k = x · x^{k-1}; shift and substitute x^m = -Σ c_i x^i
            let prev = &powers[k - 1];
            let mut v = zero_vector(&field, m);
            v[1..].clone_from_slice(&prev[..m - 1]);
            let top = field.neg(&prev[m - 1]);
            axpy(&field, &mut v, &top, low_coeffs);
            powers.push(v);
        }
    }
    Algebra::from_fn(field.clone(), m, |i, j| powers[i + j].clone())
}

/// `d/dx` on `F[x]/(x^m)`. A derivation of the truncation only when the
/// characteristic divides `m`.
pub fn derivative_matrix<F: Field>(field: &F, m: usize) -> Matrix<F::Elem> {
    let mut d = Matrix::zeros(field, m, m);
    for j in 1..m {
        d.set(j - 1, j, field.from_i64(j as i64));
    }
    d
}

/// `x^{shift} d/dx` on `F[x]/(x^m)`, a derivation of the truncated algebra
/// whenever `shift ≥ 1` or the characteristic divides `m`.
pub fn shifted_derivative_matrix<F: Field>(field: &F, m: usize, shift: usize) -> Matrix<F::Elem> {
    let mut d = Matrix::zeros(field, m, m);
    for j in 1..m {
        let target = j - 1 + shift;
        if target < m {
            d.set(target, j, field.from_i64(j as i64));
        }
    }
    d
}

/// `a ∘ b = a · b'` on `F[x]/(x²)` with basis `{1, x}`: `1∘x = 1`, `x∘x = x`,
/// all other products zero.
///
/// `d/dx` is not a derivation of `F[x]/(x²)` in characteristic other than 2,
/// so this is built with [`gd_table`]; the result is associative and
/// right-commutative, hence Novikov.
pub fn dual_numbers_gd<F: Field>(field: F) -> Algebra<F> {
    let c = truncated_polynomial(field.clone(), 2);
    let d = derivative_matrix(&field, 2);
    gd_table(&c, &d, &field.zero())
}

/// Gelfand–Dorfman algebra on `GF(p)[x]/(x^p)` with `d = d/dx`; dimension `p`.
pub fn truncated_poly_algebra(p: u32, lambda: u32) -> Result<Algebra<PrimeField>> {
    let field = PrimeField::new(p)?;
    let m = p as usize;
    let c = truncated_polynomial(field, m);
    let d = derivative_matrix(&field, m);
    let lambda = field.from_i64(lambda as i64);
    gd_algebra(&GdInput::new(c, d, lambda)?)
}

/// Basis of the space of derivations of `c`, as `n × n` matrices acting on
/// column vectors.
pub fn derivations<F: Field>(c: &Algebra<F>) -> Vec<Matrix<F::Elem>> {
    let n = c.dim();
    let f = c.field();
    // unknown D[k][l] sits at column k*n + l; rows index (i, j, output k')
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for out in 0..n {
                let mut row = zero_vector(f, n * n);
                // D(e_i e_j)_{out} = Σ_l D[out][l] c_{ij}^l
                for l in 0..n {
                    let cij = c.structure_constant(i, j, l);
                    f.add_assign(&mut row[out * n + l], cij);
                }
                // - (D e_i) e_j: Σ_l D[l][i] c_{lj}^{out}
                for l in 0..n {
                    let v = f.neg(c.structure_constant(l, j, out));
                    f.add_assign(&mut row[l * n + i], &v);
                }
                // - e_i (D e_j): Σ_l D[l][j] c_{il}^{out}
                for l in 0..n {
                    let v = f.neg(c.structure_constant(i, l, out));
                    f.add_assign(&mut row[l * n + j], &v);
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(n * n, rows).expect("rows have n² entries");
    kernel(f, &system)
        .basis_vectors()
        .map(|v| Matrix::from_rows(n, v.chunks(n.max(1)).map(<[F::Elem]>::to_vec).collect()).expect("n×n"))
        .collect()
}

/// Block-diagonal direct sum; cross products vanish.
pub fn direct_sum<F: Field>(a: &Algebra<F>, b: &Algebra<F>) -> Result<Algebra<F>> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch { left: a.field().descriptor(), right: b.field().descriptor() });
    }
    let (m, n) = (a.dim(), b.dim());
    let f = a.field();
    Ok(Algebra::from_fn(f.clone(), m + n, |i, j| {
        let mut v = zero_vector(f, m + n);
        if i < m && j < m {
            v[..m].clone_from_slice(a.product(i, j));
        } else if i >= m && j >= m {
            v[m..].clone_from_slice(b.product(i - m, j - m));
        }
        v
    }))
}

/// Copy of `a` with `c[i][j][k] += delta`.
pub fn mutate<F: Field>(a: &Algebra<F>, i: usize, j: usize, k: usize, delta: &F::Elem) -> Result<Algebra<F>> {
    let n = a.dim();
    if let Some(&bad) = [i, j, k].iter().find(|&&x| x >= n) {
        return Err(Error::DimensionMismatch { expected: n, found: bad });
    }
    let mut out = a.clone();
    let f = a.field().clone();
    let slot = out.structure_constant_mut(i, j, k);
    *slot = f.add(slot, delta);
    Ok(out)
}

/// A single-entry mutation chosen by `rng`; returns the mutated algebra and
/// the `(i, j, k, delta)` used.
pub fn random_mutation<F: Field, R: Rng + ?Sized>(
    a: &Algebra<F>,
    rng: &mut R,
) -> Option<(Algebra<F>, [usize; 3], F::Elem)> {
    let n = a.dim();
    if n == 0 {
        return None;
    }
    let f = a.field();
    let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
    let mut delta = f.random(rng);
    if f.is_zero(&delta) {
        delta = f.one();
    }
    let m = mutate(a, i, j, k, &delta).expect("indices in range");
    Some((m, [i, j, k], delta))
}

/// Random commutative associative algebra of dimension `n`: a direct sum of
/// truncated polynomial algebras, polynomial quotients and zero algebras.
pub fn random_commutative_associative<F: Field, R: Rng + ?Sized>(field: &F, n: usize, rng: &mut R) -> Algebra<F> {
    let mut parts = Vec::new();
    let mut left = n;
    while left > 0 {
        let k = rng.gen_range(1..=left);
        parts.push(k);
        left -= k;
    }
    let mut acc = Algebra::zero_product(field.clone(), 0);
    for k in parts {
        let block = match rng.gen_range(0..4) {
            0 | 1 => truncated_polynomial(field.clone(), k),
            2 => {
                let coeffs: Vec<_> = (0..k).map(|_| field.random(rng)).collect();
                polynomial_quotient(field.clone(), &coeffs)
            }
            _ => Algebra::zero_product(field.clone(), k),
        };
        acc = direct_sum(&acc, &block).expect("same field");
    }
    acc
}

/// Random element of the derivation space of `c` (zero when only zero exists).
pub fn random_derivation<F: Field, R: Rng + ?Sized>(c: &Algebra<F>, rng: &mut R) -> Matrix<F::Elem> {
    let f = c.field();
    let n = c.dim();
    let mut d = Matrix::zeros(f, n, n);
    for basis in derivations(c) {
        let coeff = f.random(rng);
        if f.is_zero(&coeff) {
            continue;
        }
        for r in 0..n {
            for col in 0..n {
                let v = f.add(d.get(r, col), &f.mul(&coeff, basis.get(r, col)));
                d.set(r, col, v);
            }
        }
    }
    d
}

/// A random Gelfand–Dorfman algebra of dimension `n`, with `λ` drawn from
/// `{0, 1, random}`.
pub fn random_gd_algebra<F: Field, R: Rng + ?Sized>(field: &F, n: usize, rng: &mut R) -> Algebra<F> {
    let c = random_commutative_associative(field, n, rng);
    let d = random_derivation(&c, rng);
    let lambda = match rng.gen_range(0..3) {
        0 => field.zero(),
        1 => field.one(),
        _ => field.random(rng),
    };
    let input = GdInput::new(c, d, lambda).expect("random input is valid by construction");
    gd_algebra(&input).expect("valid input")
}

/// Parameters of a pseudo-random corpus.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CorpusProfile {
    pub fields: Vec<FieldDescriptor>,
    pub dims: Vec<usize>,
    /// Number of Novikov (positive) algebras.
    pub count: usize,
    /// Number of mutated non-Novikov companions.
    pub negatives: usize,
    pub seed: u64,
}

impl CorpusProfile {
    /// The profile behind the shipped corpus: small finite fields within the
    /// enumeration caps plus rationals.
    pub fn shipped() -> Self {
        CorpusProfile {
            fields: vec![FieldDescriptor::PrimeField(2), FieldDescriptor::PrimeField(3), FieldDescriptor::Rationals],
            dims: vec![1, 2, 3, 4],
            count: 36,
            negatives: 8,
            seed: 20_240_601,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub algebra: AnyAlgebra,
    /// Deliberately non-Novikov; never fed to the theorem suite.
    pub negative: bool,
    pub origin: String,
}

fn generate_in<F: Field>(field: &F, n: usize, rng: &mut ChaCha8Rng) -> Algebra<F> {
    random_gd_algebra(field, n, rng)
}

fn break_identities<F: Field>(a: &Algebra<F>, rng: &mut ChaCha8Rng) -> Option<(Algebra<F>, String)> {
    for _ in 0..32 {
        let (m, [i, j, k], delta) = random_mutation(a, rng)?;
        if !is_novikov(&m) {
            return Some((m, format!("c[{i}][{j}][{k}] += {}", a.field().format(&delta))));
        }
    }
    None
}

/// Deterministic corpus for a profile: exactly `count` Gelfand–Dorfman
/// algebras followed by exactly `negatives` mutated companions.
pub fn corpus(profile: &CorpusProfile) -> Result<Vec<CorpusEntry>> {
    if profile.fields.is_empty() || profile.dims.is_empty() {
        return Err(Error::Format("corpus profile needs at least one field and one dimension".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(profile.seed);
    let mut out = Vec::with_capacity(profile.count + profile.negatives);
    for idx in 0..profile.count {
        let desc = *profile.fields.choose(&mut rng).expect("nonempty");
        let n = *profile.dims.choose(&mut rng).expect("nonempty");
        let algebra: AnyAlgebra = match desc {
            FieldDescriptor::Rationals => generate_in(&Rationals, n, &mut rng).into(),
            FieldDescriptor::PrimeField(p) => generate_in(&PrimeField::new(p)?, n, &mut rng).into(),
        };
        out.push(CorpusEntry {
            name: format!("gd_{idx:03}_{}_dim{n}", field_tag(desc)),
            algebra,
            negative: false,
            origin: format!("random Gelfand-Dorfman, seed {}, index {idx}", profile.seed),
        });
    }
    let mut made = 0;
    let mut attempts = 0;
    while made < profile.negatives {
        if out.is_empty() || attempts > 64 * (profile.negatives + 1) {
            return Err(Error::Format("could not produce the requested number of negative examples".into()));
        }
        attempts += 1;
        let base = &out[rng.gen_range(0..profile.count.max(1).min(out.len()))];
        let broken = match &base.algebra {
            AnyAlgebra::Rational(a) => break_identities(a, &mut rng).map(|(m, s)| (AnyAlgebra::from(m), s)),
            AnyAlgebra::Prime(a) => break_identities(a, &mut rng).map(|(m, s)| (AnyAlgebra::from(m), s)),
        };
        if let Some((algebra, how)) = broken {
            let name = format!("neg_{made:03}_from_{}", base.name);
            let origin = format!("mutation of {}: {how}", base.name);
            out.push(CorpusEntry { name, algebra, negative: true, origin });
            made += 1;
        }
    }
    Ok(out)
}

fn field_tag(d: FieldDescriptor) -> String {
    match d {
        FieldDescriptor::Rationals => "q".into(),
        FieldDescriptor::PrimeField(p) => format!("gf{p}"),
    }
}

/// Hand-picked algebras covering the interesting cases: fields, zero
/// algebras, direct sums and truncated-polynomial GD algebras.
pub fn named_algebras() -> Vec<CorpusEntry> {
    let gf2 = PrimeField::new(2).expect("prime");
    let gf3 = PrimeField::new(3).expect("prime");
    let entry = |name: &str, algebra: AnyAlgebra, origin: &str| CorpusEntry {
        name: name.into(),
        algebra,
        negative: false,
        origin: origin.into(),
    };
    let field_q = truncated_polynomial(Rationals, 1);
    let mut out = vec![
        entry("field_q", field_q.clone().into(), "one-dimensional field e·e = e"),
        entry("field_gf2", truncated_polynomial(gf2, 1).into(), "one-dimensional field e·e = e"),
        entry("field_gf3", truncated_polynomial(gf3, 1).into(), "one-dimensional field e·e = e"),
        entry("zero_gf2_dim2", Algebra::zero_product(gf2, 2).into(), "zero multiplication"),
        entry("zero_q_dim3", Algebra::zero_product(Rationals, 3).into(), "zero multiplication"),
        entry(
            "fields_sum_gf2",
            direct_sum(&truncated_polynomial(gf2, 1), &truncated_polynomial(gf2, 1)).expect("same field").into(),
            "direct sum of two one-dimensional fields",
        ),
        entry(
            "fields_sum_q",
            direct_sum(&field_q, &field_q).expect("same field").into(),
            "direct sum of two one-dimensional fields",
        ),
        entry("dual_numbers_gd_q", dual_numbers_gd(Rationals).into(), "GD on Q[x]/(x^2) with d/dx, lambda 0"),
    ];
    for p in [2u32, 3] {
        for lambda in [0u32, 1] {
            let a = truncated_poly_algebra(p, lambda).expect("prime");
            out.push(entry(
                &format!("truncated_gf{p}_l{lambda}"),
                a.into(),
                &format!("GD on GF({p})[x]/(x^{p}) with d/dx, lambda {lambda}"),
            ));
        }
    }
    let t3 = truncated_poly_algebra(3, 1).expect("prime");
    out.push(entry(
        "truncated_gf3_l1_plus_field",
        direct_sum(&t3, &truncated_polynomial(gf3, 1)).expect("same field").into(),
        "GD on GF(3)[x]/(x^3), lambda 1, plus a one-dimensional field",
    ));
    let t2 = truncated_poly_algebra(2, 0).expect("prime");
    out.push(entry(
        "truncated_gf2_l0_plus_zero",
        direct_sum(&t2, &Algebra::zero_product(gf2, 1)).expect("same field").into(),
        "GD on GF(2)[x]/(x^2), lambda 0, plus a zero algebra",
    ));
    out
}

/// Named algebras followed by the shipped random profile.
pub fn shipped_corpus() -> Vec<CorpusEntry> {
    let mut out = named_algebras();
    out.extend(corpus(&CorpusProfile::shipped()).expect("shipped profile is valid"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_novikov;

    fn q(v: i64) -> num_rational::BigRational {
        Rationals.from_i64(v)
    }

    #[test]
    fn gd_with_zero_derivation_and_unit_lambda_is_base() {
        let c = truncated_polynomial(Rationals, 3);
        let d = Matrix::zeros(&Rationals, 3, 3);
        let a = gd_algebra(&GdInput::new(c.clone(), d, q(1)).unwrap()).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn gd_dual_numbers_table() {
        let a = dual_numbers_gd(Rationals);
        assert!(check_novikov(&a).is_novikov);
        assert_eq!(a.product(0, 0), &[q(0), q(0)]);
        assert_eq!(a.product(0, 1), &[q(1), q(0)]);
        assert_eq!(a.product(1, 0), &[q(0), q(0)]);
        assert_eq!(a.product(1, 1), &[q(0), q(1)]);
    }

    #[test]
    fn d_dx_is_not_a_derivation_of_rational_dual_numbers() {
        let c = truncated_polynomial(Rationals, 2);
        let d = derivative_matrix(&Rationals, 2);
        assert_eq!(leibniz_violation(&c, &d), Some((1, 1)));
        assert!(GdInput::new(c, d, q(0)).is_err());
        let shifted = shifted_derivative_matrix(&Rationals, 2, 1);
        assert!(leibniz_violation(&truncated_polynomial(Rationals, 2), &shifted).is_none());
    }

    #[test]
    fn gd_over_gf5_truncated_is_novikov() {
        let a = truncated_poly_algebra(5, 0).unwrap();
        assert_eq!(a.dim(), 5);
        assert!(check_novikov(&a).is_novikov);
    }

    #[test]
    fn truncated_lambda_changes_table() {
        let a0 = truncated_poly_algebra(3, 0).unwrap();
        let a1 = truncated_poly_algebra(3, 1).unwrap();
        assert_eq!(a0.dim(), 3);
        assert_ne!(a0, a1);
        assert_eq!(truncated_poly_algebra(2, 0).unwrap().dim(), 2);
    }

    #[test]
    fn gd_input_rejects_bad_base_and_derivation() {
        let noncomm =
            Algebra::from_fn(Rationals, 2, |i, j| if (i, j) == (0, 1) { vec![q(1), q(0)] } else { vec![q(0), q(0)] });
        let d = Matrix::zeros(&Rationals, 2, 2);
        assert!(matches!(GdInput::new(noncomm, d, q(0)), Err(Error::InvalidGdInput(_))));
        let field = truncated_polynomial(Rationals, 1);
        let d = Matrix::identity(&Rationals, 1);
        let err = GdInput::new(field, d, q(0)).unwrap_err();
        assert!(err.to_string().contains("Leibniz"));
    }

    #[test]
    fn derivations_of_field_and_zero_algebra() {
        assert!(derivations(&truncated_polynomial(Rationals, 1)).is_empty());
        assert_eq!(derivations(&Algebra::zero_product(Rationals, 2)).len(), 4);
    }

    #[test]
    fn derivations_of_gf3_truncated_contain_d_dx() {
        let f = PrimeField::new(3).unwrap();
        let c = truncated_polynomial(f, 3);
        let ds = derivations(&c);
        let ddx = derivative_matrix(&f, 3);
        assert!(leibniz_violation(&c, &ddx).is_none());
        for d in &ds {
            assert!(leibniz_violation(&c, d).is_none());
        }
        // d/dx lies in the span of the computed basis
        let flat = |m: &Matrix<u32>| m.to_rows().concat();
        let span =
            crate::linalg::Subspace::span(f, 9, ds.iter().map(flat).collect::<Vec<_>>().iter().map(Vec::as_slice))
                .unwrap();
        assert!(span.contains(&flat(&ddx)).unwrap());
    }

    #[test]
    fn polynomial_quotient_is_commutative_associative() {
        let c = polynomial_quotient(Rationals, &[q(2), q(-1), q(3)]);
        assert!(c.is_commutative());
        assert!(c.is_associative());
    }

    #[test]
    fn direct_sum_dims_add() {
        let a = truncated_poly_algebra(3, 1).unwrap();
        let b = truncated_poly_algebra(3, 0).unwrap();
        let s = direct_sum(&a, &b).unwrap();
        assert_eq!(s.dim(), 6);
        assert!(check_novikov(&s).is_novikov);
    }

    #[test]
    fn mutation_is_reversible() {
        let a = truncated_poly_algebra(3, 1).unwrap();
        assert_eq!(mutate(&a, 0, 1, 2, &0).unwrap(), a);
        let m = mutate(&a, 0, 1, 2, &1).unwrap();
        assert_ne!(m, a);
        assert_eq!(mutate(&m, 0, 1, 2, &2).unwrap(), a);
        assert!(mutate(&a, 3, 0, 0, &1).is_err());
    }

    #[test]
    fn corpus_counts_and_determinism() {
        let profile = CorpusProfile {
            fields: vec![FieldDescriptor::PrimeField(2), FieldDescriptor::Rationals],
            dims: vec![2, 3],
            count: 10,
            negatives: 3,
            seed: 7,
        };
        let a = corpus(&profile).unwrap();
        let b = corpus(&profile).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.iter().filter(|e| !e.negative).count(), 10);
        assert_eq!(a.iter().filter(|e| e.negative).count(), 3);
        for e in &a {
            let nov = crate::with_algebra!(&e.algebra, x => is_novikov(x));
            assert_eq!(nov, !e.negative, "{}", e.name);
        }
    }
}
