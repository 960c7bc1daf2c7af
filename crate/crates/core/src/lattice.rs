//! Decision procedures on the ideal lattice.
//!
//! Over a finite field the deciders scan every projective point `x` (one
//! representative per line) and work with the principal ideals `(x)`. Every
//! nonzero ideal `I` contains some `(x)` with `x ∈ I`, which makes the scans
//! exhaustive:
//!
//! * a nonzero trivial ideal contains a nonzero trivial principal ideal;
//! * `IJ = 0` with `I, J ≠ 0` yields `(x)(y) = 0` for any `x ∈ I`, `y ∈ J`;
//! * a minimal ideal is the principal ideal of each of its nonzero elements.
//!
//! Over the rationals no finite scan exists. The deciders then search a
//! bounded set of structured and random candidates and can only answer
//! `No` (with a witness) or `Undetermined`.
//!
//! Full subspace enumeration ([`enumerate_ideals`]) is an oracle for small
//! cases and is capped.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::linalg::{is_zero_vector, SpanBuilder, Subspace};
use crate::structure::{
    ann_left, ann_right, associator_span, center, ideal_closure, is_ideal, nucleus, quotient_by_subspace, square,
    squares_to_zero, subspace_product, IdealHandle, Sidedness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DecisionStatus {
    Yes,
    No,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    ProjectiveScan,
    SubspaceEnumeration,
    RandomSearch,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::ProjectiveScan => "projective_scan",
            Method::SubspaceEnumeration => "subspace_enumeration",
            Method::RandomSearch => "random_search",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [Method::ProjectiveScan, Method::SubspaceEnumeration, Method::RandomSearch].into_iter().find(|m| m.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Question {
    Semiprime,
    Prime,
    Simple,
}

impl Question {
    pub fn name(&self) -> &'static str {
        match self {
            Question::Semiprime => "semiprime",
            Question::Prime => "prime",
            Question::Simple => "simple",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [Question::Semiprime, Question::Prime, Question::Simple].into_iter().find(|q| q.name() == s)
    }
}

impl fmt::Display for Question {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence for a `No` answer. Each variant re-verifies from the algebra alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecisionWitness<F: Field> {
    /// A nonzero two-sided ideal with `I² = 0`.
    TrivialIdeal(Subspace<F>),
    /// Nonzero two-sided ideals with `IJ = 0`.
    ZeroProduct(Subspace<F>, Subspace<F>),
    /// A two-sided ideal with `0 ≠ I ≠ A`.
    ProperIdeal(Subspace<F>),
    /// `A ≠ 0` and `A² = 0`.
    ZeroSquare,
    /// `dim A = 0`.
    ZeroDimensional,
}

impl<F: Field> DecisionWitness<F> {
    /// Re-checks the witness from scratch against `a`.
    pub fn verify(&self, a: &Algebra<F>) -> bool {
        let two_sided = |s: &Subspace<F>| s.ambient_dim() == a.dim() && is_ideal(a, s, Sidedness::TwoSided);
        match self {
            DecisionWitness::TrivialIdeal(i) => !i.is_zero() && two_sided(i) && squares_to_zero(a, i),
            DecisionWitness::ZeroProduct(i, j) => {
                !i.is_zero()
                    && !j.is_zero()
                    && two_sided(i)
                    && two_sided(j)
                    && subspace_product(a, i, j).map(|p| p.is_zero()).unwrap_or(false)
            }
            DecisionWitness::ProperIdeal(i) => !i.is_zero() && !i.is_full() && two_sided(i),
            DecisionWitness::ZeroSquare => a.dim() > 0 && square(a).is_zero(),
            DecisionWitness::ZeroDimensional => a.dim() == 0,
        }
    }

    /// Whether this kind of witness refutes `question`.
    pub fn refutes(&self, question: Question) -> bool {
        match question {
            Question::Semiprime => matches!(self, DecisionWitness::TrivialIdeal(_)),
            Question::Prime => matches!(self, DecisionWitness::ZeroProduct(..) | DecisionWitness::TrivialIdeal(_)),
            Question::Simple => matches!(
                self,
                DecisionWitness::ProperIdeal(_) | DecisionWitness::ZeroSquare | DecisionWitness::ZeroDimensional
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision<F: Field> {
    pub question: Question,
    pub status: DecisionStatus,
    pub method: Method,
    pub witness: Option<DecisionWitness<F>>,
    /// Certificate description for `Yes`, reason for `Undetermined`.
    pub note: String,
}

impl<F: Field> Decision<F> {
    pub fn is_yes(&self) -> bool {
        self.status == DecisionStatus::Yes
    }

    pub fn is_no(&self) -> bool {
        self.status == DecisionStatus::No
    }

    fn yes(question: Question, method: Method, note: impl Into<String>) -> Self {
        Decision { question, status: DecisionStatus::Yes, method, witness: None, note: note.into() }
    }

    fn no(question: Question, method: Method, witness: DecisionWitness<F>) -> Self {
        Decision { question, status: DecisionStatus::No, method, witness: Some(witness), note: String::new() }
    }

    fn undetermined(question: Question, method: Method, note: impl Into<String>) -> Self {
        Decision { question, status: DecisionStatus::Undetermined, method, witness: None, note: note.into() }
    }
}

/// Tuning for the deciders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    /// Seed for random candidates over the rationals.
    pub seed: u64,
    /// Number of random candidates over the rationals.
    pub random_trials: usize,
    /// Largest number of projective points a finite-field scan may visit.
    pub max_points: u64,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { seed: 0, random_trials: 48, max_points: 1 << 18 }
    }
}

/// Number of projective points of `F_q^n`, or `None` on overflow.
pub fn projective_point_count(q: u64, n: usize) -> Option<u64> {
    let total = q.checked_pow(u32::try_from(n).ok()?)?;
    Some((total - 1) / (q - 1))
}

/// Projective points of `F^n` (first nonzero coordinate 1) in lexicographic
/// order of their coordinate indices.
pub fn projective_points<F: Field>(field: &F, n: usize) -> Vec<Vec<F::Elem>> {
    let q = field.order().expect("finite field");
    let mut out = Vec::new();
    for lead in 0..n {
        let tail = n - lead - 1;
        let count = q.pow(tail as u32);
        for t in 0..count {
            let mut v = vec![field.zero(); n];
            v[lead] = field.one();
            let mut rem = t;
            for slot in v[lead + 1..].iter_mut().rev() {
                *slot = field.element(rem % q);
                rem /= q;
            }
            out.push(v);
        }
    }
    out
}

/// `(x)`: the two-sided ideal generated by `x`.
pub fn principal_ideal<F: Field>(a: &Algebra<F>, x: &[F::Elem]) -> Result<IdealHandle<F>> {
    let s = Subspace::span(a.field().clone(), a.dim(), [x])?;
    ideal_closure(a, &s, Sidedness::TwoSided)
}

fn check_scan_size<F: Field>(a: &Algebra<F>, opts: &DecideOptions) -> Result<()> {
    let q = a.field().order().ok_or(Error::NeedsFiniteField(a.field().descriptor()))?;
    match projective_point_count(q, a.dim()) {
        Some(c) if c <= opts.max_points => Ok(()),
        other => Err(Error::CapExceeded {
            what: "projective points",
            value: other.unwrap_or(u64::MAX),
            limit: opts.max_points,
        }),
    }
}

/// Distinct principal ideals of all projective points, in order of first
/// appearance. Finite fields only.
pub fn distinct_principal_ideals<F: Field>(a: &Algebra<F>, opts: &DecideOptions) -> Result<Vec<Subspace<F>>> {
    check_scan_size(a, opts)?;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for x in projective_points(a.field(), a.dim()) {
        let p = principal_ideal(a, &x)?.into_space();
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Structured and random candidate vectors for the rational semidecisions.
fn candidate_vectors<F: Field>(a: &Algebra<F>, opts: &DecideOptions) -> Vec<Vec<F::Elem>> {
    let n = a.dim();
    let mut out: Vec<Vec<F::Elem>> = (0..n).map(|i| a.basis_vector(i)).collect();
    let full = a.full_space();
    let la = ann_left(a, &full).expect("same ambient");
    let ra = ann_right(a, &full).expect("same ambient");
    let both = la.intersect(&ra).expect("same ambient");
    for s in [both, la, ra, associator_span(a), square(a), nucleus(a), center(a)] {
        out.extend(s.basis_vectors().map(<[F::Elem]>::to_vec));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random_trials {
        let v: Vec<_> = (0..n).map(|_| a.field().random(&mut rng)).collect();
        out.push(v);
    }
    out.retain(|v| !is_zero_vector(a.field(), v));
    out
}

fn candidate_principal_ideals<F: Field>(a: &Algebra<F>, opts: &DecideOptions) -> Vec<Subspace<F>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for x in candidate_vectors(a, opts) {
        let p = principal_ideal(a, &x).expect("same ambient").into_space();
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

fn scan_method<F: Field>(a: &Algebra<F>) -> Method {
    if a.field().order().is_some() {
        Method::ProjectiveScan
    } else {
        Method::RandomSearch
    }
}

/// Principal ideals to scan: all of them over a finite field, candidates otherwise.
fn scan_set<F: Field>(a: &Algebra<F>, opts: &DecideOptions) -> Result<(Vec<Subspace<F>>, Method)> {
    if a.field().order().is_some() {
        Ok((distinct_principal_ideals(a, opts)?, Method::ProjectiveScan))
    } else {
        Ok((candidate_principal_ideals(a, opts), Method::RandomSearch))
    }
}

pub fn is_semiprime<F: Field>(a: &Algebra<F>) -> Result<Decision<F>> {
    is_semiprime_with(a, &DecideOptions::default())
}

/// No nonzero ideal `I` with `I² = 0`.
pub fn is_semiprime_with<F: Field>(a: &Algebra<F>, opts: &DecideOptions) -> Result<Decision<F>> {
    let q = Question::Semiprime;
    if a.dim() == 0 {
        return Ok(Decision::yes(q, scan_method(a), "zero-dimensional: no nonzero ideals"));
    }
    if square(a).is_zero() {
        let method = scan_method(a);
        return Ok(Decision::no(q, method, DecisionWitness::TrivialIdeal(a.full_space())));
    }
    let (ideals, method) = scan_set(a, opts)?;
    if let Some(t) = ideals.into_iter().find(|p| squares_to_zero(a, p)) {
        return Ok(Decision::no(q, method, DecisionWitness::TrivialIdeal(t)));
    }
    Ok(match method {
        Method::ProjectiveScan => Decision::yes(q, method, "no projective point generates a trivial ideal"),
        _ => Decision::undetermined(q, method, "no trivial ideal among candidates; infinite field"),
    })
}

pub fn is_prime<F: Field>(a: &Algebra<F>) -> Result<Decision<F>> {
    is_prime_with(a, &DecideOptions::default())
}

/// For ideals `I, J`: `IJ = 0` implies `I = 0` or `J = 0`.
pub fn is_prime_with<F: Field>(a: &Algebra<F>, opts: &DecideOptions) -> Result<Decision<F>> {
    let q = Question::Prime;
    if a.dim() == 0 {
        return Ok(Decision::yes(q, scan_method(a), "zero-dimensional: no nonzero ideals"));
    }
    let (ideals, method) = scan_set(a, opts)?;
    for i in &ideals {
        for j in &ideals {
            if subspace_product(a, i, j)?.is_zero() {
                return Ok(Decision::no(q, method, DecisionWitness::ZeroProduct(i.clone(), j.clone())));
            }
        }
    }
    Ok(match method {
        Method::ProjectiveScan => {
            Decision::yes(q, method, "no pair of projective points generates ideals with zero product")
        }
        _ => Decision::undetermined(q, method, "no zero product among candidate ideals; infinite field"),
    })
}

pub fn is_simple<F: Field>(a: &Algebra<F>) -> Result<Decision<F>> {
    is_simple_with(a, &DecideOptions::default())
}

/// `A² ≠ 0` and the only ideals are `0` and `A`. Zero-dimensional algebras
/// and algebras with zero multiplication are not simple.
pub fn is_simple_with<F: Field>(a: &Algebra<F>, opts: &DecideOptions) -> Result<Decision<F>> {
    let q = Question::Simple;
    let method = scan_method(a);
    if a.dim() == 0 {
        return Ok(Decision::no(q, method, DecisionWitness::ZeroDimensional));
    }
    if square(a).is_zero() {
        return Ok(Decision::no(q, method, DecisionWitness::ZeroSquare));
    }
    let (ideals, method) = scan_set(a, opts)?;
    if let Some(p) = ideals.into_iter().find(|p| !p.is_full()) {
        return Ok(Decision::no(q, method, DecisionWitness::ProperIdeal(p)));
    }
    Ok(match method {
        Method::ProjectiveScan => Decision::yes(q, method, "every projective point generates the whole algebra"),
        _ => Decision::undetermined(q, method, "no proper ideal among candidates; infinite field"),
    })
}

pub fn decide<F: Field>(a: &Algebra<F>, question: Question, opts: &DecideOptions) -> Result<Decision<F>> {
    match question {
        Question::Semiprime => is_semiprime_with(a, opts),
        Question::Prime => is_prime_with(a, opts),
        Question::Simple => is_simple_with(a, opts),
    }
}

/// Decides `question` from the full list of two-sided ideals. Finite fields
/// within [`ENUMERATION_CAPS`] only.
pub fn decide_by_enumeration<F: Field>(a: &Algebra<F>, question: Question) -> Result<Decision<F>> {
    let method = Method::SubspaceEnumeration;
    let ideals: Vec<Subspace<F>> = enumerate_ideals(a)?.into_iter().map(IdealHandle::into_space).collect();
    let nonzero: Vec<&Subspace<F>> = ideals.iter().filter(|s| !s.is_zero()).collect();
    Ok(match question {
        _ if a.dim() == 0 && question != Question::Simple => {
            Decision::yes(question, method, "zero-dimensional: no nonzero ideals")
        }
        Question::Semiprime => match nonzero.iter().find(|s| squares_to_zero(a, s)) {
            Some(t) => Decision::no(question, method, DecisionWitness::TrivialIdeal((*t).clone())),
            None => Decision::yes(question, method, "no nonzero ideal squares to zero"),
        },
        Question::Prime => {
            for i in &nonzero {
                for j in &nonzero {
                    if subspace_product(a, i, j)?.is_zero() {
                        return Ok(Decision::no(
                            question,
                            method,
                            DecisionWitness::ZeroProduct((*i).clone(), (*j).clone()),
                        ));
                    }
                }
            }
            Decision::yes(question, method, "no two nonzero ideals have zero product")
        }
        Question::Simple if a.dim() == 0 => Decision::no(question, method, DecisionWitness::ZeroDimensional),
        Question::Simple if square(a).is_zero() => Decision::no(question, method, DecisionWitness::ZeroSquare),
        Question::Simple => match nonzero.iter().find(|s| !s.is_full()) {
            Some(p) => Decision::no(question, method, DecisionWitness::ProperIdeal((*p).clone())),
            None => Decision::yes(question, method, "the only ideals are 0 and A"),
        },
    })
}

/// Minimal ideals, with a flag telling whether the list is exhaustive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalIdeals<F: Field> {
    pub ideals: Vec<IdealHandle<F>>,
    /// `false` over infinite fields: the list holds the minimal elements
    /// among the candidates searched, not certified minimal ideals.
    pub exhaustive: bool,
    pub method: Method,
}

pub fn minimal_ideals<F: Field>(a: &Algebra<F>) -> Result<MinimalIdeals<F>> {
    minimal_ideals_with(a, &DecideOptions::default())
}

pub fn minimal_ideals_with<F: Field>(a: &Algebra<F>, opts: &DecideOptions) -> Result<MinimalIdeals<F>> {
    let (ideals, method) = scan_set(a, opts)?;
    let minimal = minimal_elements(&ideals);
    Ok(MinimalIdeals {
        ideals: minimal.into_iter().map(|s| IdealHandle::trusted(s, Sidedness::TwoSided)).collect(),
        exhaustive: method == Method::ProjectiveScan,
        method,
    })
}

/// Elements of `family` containing no other element of `family`.
pub fn minimal_elements<F: Field>(family: &[Subspace<F>]) -> Vec<Subspace<F>> {
    family
        .iter()
        .filter(|s| family.iter().all(|t| t == *s || !(t.dim() < s.dim() && t.leq(s).expect("same ambient"))))
        .cloned()
        .collect()
}

/// The lower radical chain `0 = B_0 ⊂ B_1 ⊂ ... ⊂ B_k`, where `B_{i+1}/B_i`
/// is the sum of all trivial ideals of `A/B_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaerChain<F: Field> {
    pub stages: Vec<IdealHandle<F>>,
    /// `true` when every step used an exhaustive scan.
    pub certified: bool,
    pub method: Method,
}

impl<F: Field> BaerChain<F> {
    pub fn radical(&self) -> &IdealHandle<F> {
        self.stages.last().expect("chain always holds B_0")
    }
}

pub fn baer_radical<F: Field>(a: &Algebra<F>) -> Result<BaerChain<F>> {
    baer_radical_with(a, &DecideOptions::default())
}

pub fn baer_radical_with<F: Field>(a: &Algebra<F>, opts: &DecideOptions) -> Result<BaerChain<F>> {
    let mut current = a.zero_space();
    let mut stages = vec![IdealHandle::trusted(current.clone(), Sidedness::TwoSided)];
    let mut method = scan_method(a);
    loop {
        let q = quotient_by_subspace(a, &current)?;
        if q.algebra.dim() == 0 {
            break;
        }
        let (ideals, m) = scan_set(&q.algebra, opts)?;
        method = m;
        let mut sum = SpanBuilder::new(a.field().clone(), q.algebra.dim());
        for p in ideals.iter().filter(|p| squares_to_zero(&q.algebra, p)) {
            sum.extend(p.basis_vectors());
        }
        let s = sum.finish();
        if s.is_zero() {
            break;
        }
        current = q.preimage(&s);
        stages.push(IdealHandle::trusted(current.clone(), Sidedness::TwoSided));
    }
    Ok(BaerChain { stages, certified: method == Method::ProjectiveScan, method })
}

/// Hard caps for full subspace enumeration: `(p, largest dimension)`.
pub const ENUMERATION_CAPS: [(u32, usize); 2] = [(2, 5), (3, 4)];

pub fn enumeration_cap(field: FieldDescriptor) -> Option<usize> {
    match field {
        FieldDescriptor::PrimeField(p) => ENUMERATION_CAPS.iter().find(|(q, _)| *q == p).map(|(_, d)| *d),
        FieldDescriptor::Rationals => None,
    }
}

pub fn within_enumeration_caps(field: FieldDescriptor, n: usize) -> bool {
    enumeration_cap(field).is_some_and(|cap| n <= cap)
}

fn check_enumeration_caps(field: FieldDescriptor, n: usize) -> Result<()> {
    match field {
        FieldDescriptor::Rationals => Err(Error::NeedsFiniteField(field)),
        FieldDescriptor::PrimeField(p) => match enumeration_cap(field) {
            None => Err(Error::CapExceeded { what: "enumeration field size", value: p as u64, limit: 3 }),
            Some(cap) if n > cap => {
                Err(Error::CapExceeded { what: "enumeration dimension", value: n as u64, limit: cap as u64 })
            }
            Some(_) => Ok(()),
        },
    }
}

/// Every subspace of `F^n`, walked through reduced row echelon shapes: for
/// each pivot set, every assignment of the free entries.
pub fn enumerate_subspaces<F: Field>(field: &F, n: usize) -> Result<Vec<Subspace<F>>> {
    check_enumeration_caps(field.descriptor(), n)?;
    let q = field.order().expect("finite");
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| ((p + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let count = q.pow(free.len() as u32);
            for t in 0..count {
                let mut rows = vec![vec![field.zero(); n]; k];
                for (r, &p) in pivots.iter().enumerate() {
                    rows[r][p] = field.one();
                }
                let mut rem = t;
                for &(r, c) in &free {
                    rows[r][c] = field.element(rem % q);
                    rem /= q;
                }
                out.push(Subspace::span(field.clone(), n, rows.iter().map(Vec::as_slice))?);
            }
        }
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All two-sided ideals, by filtering [`enumerate_subspaces`].
pub fn enumerate_ideals<F: Field>(a: &Algebra<F>) -> Result<Vec<IdealHandle<F>>> {
    enumerate_ideals_of(a, Sidedness::TwoSided)
}

pub fn enumerate_ideals_of<F: Field>(a: &Algebra<F>, sidedness: Sidedness) -> Result<Vec<IdealHandle<F>>> {
    Ok(enumerate_subspaces(a.field(), a.dim())?
        .into_iter()
        .filter(|s| is_ideal(a, s, sidedness))
        .map(|s| IdealHandle::trusted(s, sidedness))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::generators::{direct_sum, truncated_polynomial};

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn projective_point_counts() {
        assert_eq!(projective_points(&gf(3), 4).len(), 40);
        assert_eq!(projective_point_count(3, 4), Some(40));
        assert_eq!(projective_points(&gf(2), 3).len(), 7);
        assert!(projective_points(&gf(5), 0).is_empty());
    }

    #[test]
    fn zero_algebra_is_not_semiprime() {
        let a = Algebra::zero_product(gf(2), 2);
        let d = is_semiprime(&a).unwrap();
        assert_eq!(d.status, DecisionStatus::No);
        assert!(d.witness.as_ref().unwrap().verify(&a));
        assert_eq!(d.witness, Some(DecisionWitness::TrivialIdeal(a.full_space())));
        let q = Algebra::zero_product(Rationals, 2);
        let d = is_semiprime(&q).unwrap();
        assert_eq!(d.status, DecisionStatus::No);
    }

    #[test]
    fn one_dim_field_is_semiprime_prime_simple() {
        let a = truncated_polynomial(gf(3), 1);
        assert!(is_semiprime(&a).unwrap().is_yes());
        assert!(is_prime(&a).unwrap().is_yes());
        assert!(is_simple(&a).unwrap().is_yes());
    }

    #[test]
    fn rationals_never_answer_yes() {
        let a = truncated_polynomial(Rationals, 1);
        assert_eq!(is_semiprime(&a).unwrap().status, DecisionStatus::Undetermined);
        assert_eq!(is_prime(&a).unwrap().status, DecisionStatus::Undetermined);
        assert_eq!(is_simple(&a).unwrap().status, DecisionStatus::Undetermined);
    }

    #[test]
    fn sum_of_fields_is_not_prime() {
        let f = truncated_polynomial(gf(2), 1);
        let a = direct_sum(&f, &f).unwrap();
        let d = is_prime(&a).unwrap();
        assert_eq!(d.status, DecisionStatus::No);
        let Some(DecisionWitness::ZeroProduct(i, j)) = &d.witness else { panic!("wrong witness") };
        assert_eq!(i.dim(), 1);
        assert_eq!(j.dim(), 1);
        assert_ne!(i, j);
        let mins = minimal_ideals(&a).unwrap();
        assert!(mins.exhaustive);
        assert_eq!(mins.ideals.len(), 2);
    }

    #[test]
    fn zero_algebra_is_not_simple() {
        let a = Algebra::zero_product(gf(2), 1);
        let d = is_simple(&a).unwrap();
        assert_eq!(d.witness, Some(DecisionWitness::ZeroSquare));
        let z = Algebra::zero_product(gf(2), 0);
        assert_eq!(is_simple(&z).unwrap().witness, Some(DecisionWitness::ZeroDimensional));
        let mins = minimal_ideals(&a).unwrap();
        assert_eq!(mins.ideals.len(), 1);
        assert!(mins.ideals[0].space().is_full());
    }

    #[test]
    fn baer_radical_of_zero_algebra_is_everything() {
        let a = Algebra::zero_product(gf(3), 2);
        let chain = baer_radical(&a).unwrap();
        assert_eq!(chain.stages.len(), 2);
        assert!(chain.radical().space().is_full());
        let f = truncated_polynomial(gf(3), 1);
        let chain = baer_radical(&f).unwrap();
        assert_eq!(chain.stages.len(), 1);
        assert!(chain.radical().is_zero());
    }

    #[test]
    fn enumeration_caps_are_enforced() {
        assert!(enumerate_subspaces(&gf(2), 5).is_ok());
        assert!(matches!(enumerate_subspaces(&gf(2), 6), Err(Error::CapExceeded { .. })));
        assert!(matches!(enumerate_subspaces(&gf(3), 5), Err(Error::CapExceeded { .. })));
        assert!(matches!(enumerate_subspaces(&gf(5), 1), Err(Error::CapExceeded { .. })));
        assert!(matches!(enumerate_subspaces(&Rationals, 1), Err(Error::NeedsFiniteField(_))));
    }

    #[test]
    fn enumerated_ideals_small_cases() {
        let f = truncated_polynomial(gf(2), 1);
        assert_eq!(enumerate_ideals(&f).unwrap().len(), 2);
        let z = Algebra::zero_product(gf(2), 2);
        assert_eq!(enumerate_ideals(&z).unwrap().len(), 5);
    }

    #[test]
    fn enumeration_decider_matches_scan() {
        let g = gf(2);
        let sum = direct_sum(&truncated_polynomial(g, 1), &truncated_polynomial(g, 1)).unwrap();
        for a in [sum, truncated_polynomial(g, 3), Algebra::zero_product(g, 2), Algebra::zero_product(g, 0)] {
            for q in [Question::Semiprime, Question::Prime, Question::Simple] {
                let e = decide_by_enumeration(&a, q).unwrap();
                let s = decide(&a, q, &DecideOptions::default()).unwrap();
                assert_eq!(e.status, s.status, "{q} on {a:?}");
                if let Some(w) = &e.witness {
                    assert!(w.verify(&a) && w.refutes(q));
                }
            }
        }
    }

    #[test]
    fn scan_cap_is_reported() {
        let a = truncated_polynomial(gf(3), 4);
        let opts = DecideOptions { max_points: 10, ..DecideOptions::default() };
        assert!(matches!(is_semiprime_with(&a, &opts), Err(Error::CapExceeded { .. })));
    }
}
