//! Executable checks of the structure theorems for Novikov algebras.
//!
//! Each check selects test objects (ideals, subideals, left ideals, vectors)
//! satisfying the claim's hypotheses and evaluates the conclusion. A check
//! whose hypotheses select nothing reports [`Status::Vacuous`]; one whose
//! hypotheses cannot be certified (typically primeness over `Q`) reports
//! [`Status::Undetermined`]. A [`Status::Fails`] always carries a
//! [`Failure`] that re-verifies from the algebra alone.

pub mod evidence;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{check_identity, check_identity_with_nucleus, is_novikov, Algebra, IdentityId};
use crate::field::Field;
use crate::lattice::{
    baer_radical_with, decide, enumerate_ideals_of, enumerate_subspaces, minimal_ideals_with, principal_ideal,
    within_enumeration_caps, DecideOptions, Decision, DecisionStatus, Method, Question,
};
use crate::linalg::{is_zero_vector, SpanBuilder, Subspace};
use crate::structure::{
    ann_left, ann_right, associator_ideal, center, commutative_center, ideal_closure, ideal_violation_in, is_ideal,
    is_ideal_of, nucleus, quotient_by_subspace, square, squares_to_zero, subalgebra_as_algebra, subspace_product,
    Sidedness,
};

pub use evidence::{AlgebraExpr, Fact, Failure, SpaceExpr, Violation};

/// The checked statements. Codes are stable identifiers used in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    /// For `n ∈ N(A)` all eight products of `n` with an associator, in any
    /// slot, vanish.
    L1,
    /// `Ann_l(L)` is an ideal for a left ideal `L`; `Ann_r(I)` is a left ideal
    /// for an ideal `I`.
    L2,
    /// `N(A)` and `Z(A)` are ideals and `K(A) = Z(A)`.
    L3,
    /// A nonassociative prime algebra has `N(A) = Z(A) = 0`.
    T1,
    /// For `I ⊴ A`, `V ⊴ I`, `V² = 0`: `AV + V` and `VA + V` are ideals of
    /// `I`, trivial when `A` is semiprime.
    L4,
    /// Ideals of a semiprime algebra are semiprime.
    T2,
    /// The lower radical chain stabilizes with a semiprime quotient.
    C1,
    /// `Mx + M` and `xM + M` are ideals of `I` for `M ⊴ I ⊴ A`.
    L5a,
    /// `(MA)I² ⊆ M`.
    L5b,
    /// `(Mx)²(Mx)² ⊆ M`.
    L5c,
    /// `(AM)I² ⊆ M`.
    L5d,
    /// `(xM)²(xM)² ⊆ M`.
    L5e,
    /// `M ⊴ I ⊴ A` with `I/M` semiprime implies `M ⊴ A`.
    L6,
    /// `{x ∈ L : xA ⊆ L}` is an ideal for a left ideal `L`.
    L7,
    /// Ideals of a prime algebra are prime.
    T3,
    /// A minimal ideal is trivial or simple.
    T4,
    /// A nonzero commutative ideal `H = H²` lies in `N(A)`.
    L8,
    /// A prime nonassociative algebra has no nonzero commutative ideal `H = H²`.
    C2,
    /// A prime algebra with a commutative minimal ideal is associative.
    C3,
    /// A commutative Novikov algebra is associative.
    NovikovCommAssoc,
}

impl ClaimId {
    pub const ALL: [ClaimId; 20] = [
        ClaimId::L1,
        ClaimId::L2,
        ClaimId::L3,
        ClaimId::T1,
        ClaimId::L4,
        ClaimId::T2,
        ClaimId::C1,
        ClaimId::L5a,
        ClaimId::L5b,
        ClaimId::L5c,
        ClaimId::L5d,
        ClaimId::L5e,
        ClaimId::L6,
        ClaimId::L7,
        ClaimId::T3,
        ClaimId::T4,
        ClaimId::L8,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::NovikovCommAssoc,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ClaimId::L1 => "L1",
            ClaimId::L2 => "L2",
            ClaimId::L3 => "L3",
            ClaimId::T1 => "T1",
            ClaimId::L4 => "L4",
            ClaimId::T2 => "T2",
            ClaimId::C1 => "C1",
            ClaimId::L5a => "L5a",
            ClaimId::L5b => "L5b",
            ClaimId::L5c => "L5c",
            ClaimId::L5d => "L5d",
            ClaimId::L5e => "L5e",
            ClaimId::L6 => "L6",
            ClaimId::L7 => "L7",
            ClaimId::T3 => "T3",
            ClaimId::T4 => "T4",
            ClaimId::L8 => "L8",
            ClaimId::C2 => "C2",
            ClaimId::C3 => "C3",
            ClaimId::NovikovCommAssoc => "NovikovCommAssoc",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }

    pub fn statement(&self) -> &'static str {
        match self {
            ClaimId::L1 => "n(x,y,z) = (nx,y,z) = ... = (x,y,z)n = 0 for n in N(A)",
            ClaimId::L2 => "Ann_l(L) is an ideal for a left ideal L; Ann_r(I) is a left ideal for an ideal I",
            ClaimId::L3 => "N(A), Z(A) are ideals and K(A) = Z(A)",
            ClaimId::T1 => "prime nonassociative implies N(A) = Z(A) = 0",
            ClaimId::L4 => "AV+V and VA+V are ideals of I (trivial when A is semiprime)",
            ClaimId::T2 => "ideals of a semiprime algebra are semiprime",
            ClaimId::C1 => "the lower radical chain ends in a semiprime quotient",
            ClaimId::L5a => "Mx+M and xM+M are ideals of I",
            ClaimId::L5b => "(MA)I² ⊆ M",
            ClaimId::L5c => "(Mx)²(Mx)² ⊆ M",
            ClaimId::L5d => "(AM)I² ⊆ M",
            ClaimId::L5e => "(xM)²(xM)² ⊆ M",
            ClaimId::L6 => "I/M semiprime implies M is an ideal of A",
            ClaimId::L7 => "{x ∈ L : xA ⊆ L} is an ideal",
            ClaimId::T3 => "ideals of a prime algebra are prime",
            ClaimId::T4 => "a minimal ideal is trivial or simple",
            ClaimId::L8 => "a commutative ideal H = H² lies in N(A)",
            ClaimId::C2 => "prime nonassociative: no nonzero commutative ideal H = H²",
            ClaimId::C3 => "prime with a commutative minimal ideal implies associative",
            ClaimId::NovikovCommAssoc => "commutative implies associative",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status<F: Field> {
    Holds,
    Fails(Box<Failure<F>>),
    Vacuous(String),
    Undetermined(String),
}

impl<F: Field> Status<F> {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails(_) => "fails",
            Status::Vacuous(_) => "vacuous",
            Status::Undetermined(_) => "undetermined",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<F: Field> {
    pub claim: ClaimId,
    pub status: Status<F>,
    /// Number of test objects that met the hypotheses and were checked.
    pub checked: usize,
    /// Which objects were used.
    pub context: String,
}

impl<F: Field> Verdict<F> {
    fn new(claim: ClaimId, status: Status<F>, checked: usize, context: impl Into<String>) -> Self {
        Verdict { claim, status, checked, context: context.into() }
    }

    fn vacuous(claim: ClaimId, reason: impl Into<String>) -> Self {
        Verdict::new(claim, Status::Vacuous(reason.into()), 0, "")
    }

    fn undetermined(claim: ClaimId, reason: impl Into<String>) -> Self {
        Verdict::new(claim, Status::Undetermined(reason.into()), 0, "")
    }

    fn fails(claim: ClaimId, checked: usize, hypotheses: Vec<Fact<F>>, violation: Violation<F>) -> Self {
        Verdict::new(claim, Status::Fails(Box::new(Failure { hypotheses, violation })), checked, "")
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.status, Status::Fails(_))
    }

    /// Holds with at least one checked object.
    pub fn is_covered(&self) -> bool {
        matches!(self.status, Status::Holds) && self.checked > 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub decide: DecideOptions,
    /// Largest number of `(I, M)` pairs (ideal, ideal of the ideal) examined.
    pub max_pairs: usize,
    /// Random seeds for left ideals and candidate ideals.
    pub random_seeds: usize,
    /// Use full subspace enumeration where the caps allow it.
    pub enumerate: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { decide: DecideOptions::default(), max_pairs: 1024, random_seeds: 4, enumerate: true }
    }
}

/// Objects shared by the checks of one algebra.
#[derive(Clone, Debug)]
pub struct TestObjects<F: Field> {
    pub novikov: bool,
    /// Two-sided ideals, always including `0` and `A`.
    pub ideals: Vec<Subspace<F>>,
    /// `true` when `ideals` lists every two-sided ideal.
    pub exhaustive: bool,
    pub left_ideals: Vec<Subspace<F>>,
    /// `(I, M)` with `I ⊴ A` and `M ⊴ I`, capped by [`SuiteOptions::max_pairs`].
    pub pairs: Vec<(Subspace<F>, Subspace<F>)>,
    pub pairs_truncated: bool,
    pub semiprime: Decision<F>,
    pub prime: Decision<F>,
}

/// Runs a decider, turning errors (caps) into `Undetermined`.
pub fn decide_lenient<F: Field>(a: &Algebra<F>, q: Question, opts: &DecideOptions) -> Decision<F> {
    decide(a, q, opts).unwrap_or_else(|e| Decision {
        question: q,
        status: DecisionStatus::Undetermined,
        method: Method::ProjectiveScan,
        witness: None,
        note: e.to_string(),
    })
}

struct Dedup<F: Field> {
    seen: HashSet<Subspace<F>>,
    out: Vec<Subspace<F>>,
}

impl<F: Field> Dedup<F> {
    fn new() -> Self {
        Dedup { seen: HashSet::new(), out: Vec::new() }
    }

    fn push(&mut self, s: Subspace<F>) {
        if self.seen.insert(s.clone()) {
            self.out.push(s);
        }
    }
}

fn random_vectors<F: Field>(a: &Algebra<F>, count: usize, seed: u64) -> Vec<Vec<F::Elem>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..a.dim()).map(|_| a.field().random(&mut rng)).collect::<Vec<_>>())
        .filter(|v| !is_zero_vector(a.field(), v))
        .collect()
}

/// Certified two-sided ideals found without enumeration.
fn candidate_ideals<F: Field>(a: &Algebra<F>, opts: &SuiteOptions) -> Vec<Subspace<F>> {
    let mut d = Dedup::new();
    let full = a.full_space();
    let mut base = vec![a.zero_space(), full.clone(), square(a), associator_ideal(a).into_space()];
    base.extend([nucleus(a), center(a), commutative_center(a)]);
    if let (Ok(l), Ok(r)) = (ann_left(a, &full), ann_right(a, &full)) {
        base.push(l.intersect(&r).expect("same ambient"));
        base.push(l);
        base.push(r);
    }
    let seeds = (0..a.dim()).map(|i| a.basis_vector(i)).chain(random_vectors(a, opts.random_seeds, opts.decide.seed));
    for x in seeds {
        base.push(principal_ideal(a, &x).expect("same ambient").into_space());
    }
    for s in base {
        if is_ideal(a, &s, Sidedness::TwoSided) {
            d.push(s);
        }
    }
    let first: Vec<_> = d.out.clone();
    for i in &first {
        for j in &first {
            let p = subspace_product(a, i, j).expect("same ambient");
            if is_ideal(a, &p, Sidedness::TwoSided) {
                d.push(p);
            }
        }
    }
    d.out
}

fn candidate_left_ideals<F: Field>(a: &Algebra<F>, opts: &SuiteOptions) -> Vec<Subspace<F>> {
    let mut d = Dedup::new();
    d.push(a.zero_space());
    d.push(a.full_space());
    let seeds = (0..a.dim()).map(|i| a.basis_vector(i)).chain(random_vectors(
        a,
        opts.random_seeds,
        opts.decide.seed ^ 0x9e37_79b9,
    ));
    for x in seeds {
        let s = Subspace::span(a.field().clone(), a.dim(), [x.as_slice()]).expect("same ambient");
        d.push(ideal_closure(a, &s, Sidedness::LeftIdeal).expect("same ambient").into_space());
    }
    d.out
}

/// Closure of `s` under left and right multiplication by `parent`.
fn closure_within<F: Field>(a: &Algebra<F>, s: &Subspace<F>, parent: &Subspace<F>) -> Subspace<F> {
    let mut span = SpanBuilder::from_subspace(s);
    let mut frontier: Vec<Vec<F::Elem>> = s.basis_vectors().map(<[F::Elem]>::to_vec).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for p in parent.basis_vectors() {
                for y in [a.mul(p, x), a.mul(x, p)] {
                    if span.insert(&y) {
                        next.push(y);
                    }
                }
            }
        }
        frontier = next;
    }
    span.finish()
}

/// Ideals of the subalgebra `i`, in `A`-coordinates.
fn subideals<F: Field>(
    a: &Algebra<F>,
    i: &Subspace<F>,
    ideals: &[Subspace<F>],
    opts: &SuiteOptions,
) -> Vec<Subspace<F>> {
    if opts.enumerate && within_enumeration_caps(a.field().descriptor(), i.dim()) {
        if let Ok(all) = enumerate_subspaces(a.field(), i.dim()) {
            return all
                .into_iter()
                .map(|s| {
                    let mut b = SpanBuilder::new(a.field().clone(), a.dim());
                    for v in s.basis_vectors() {
                        b.insert(&i.combine(v));
                    }
                    b.finish()
                })
                .filter(|m| is_ideal_of(a, m, i, Sidedness::TwoSided))
                .collect();
        }
    }
    let mut d = Dedup::new();
    d.push(a.zero_space());
    d.push(i.clone());
    d.push(subspace_product(a, i, i).expect("same ambient"));
    for j in ideals {
        if j.leq(i).expect("same ambient") {
            d.push(j.clone());
        }
    }
    for v in i.basis_vectors() {
        let s = Subspace::span(a.field().clone(), a.dim(), [v]).expect("same ambient");
        d.push(closure_within(a, &s, i));
    }
    d.out.into_iter().filter(|m| is_ideal_of(a, m, i, Sidedness::TwoSided)).collect()
}

pub fn test_objects<F: Field>(a: &Algebra<F>, opts: &SuiteOptions) -> TestObjects<F> {
    let novikov = is_novikov(a);
    let desc = a.field().descriptor();
    let eligible = opts.enumerate && within_enumeration_caps(desc, a.dim());
    let enumerated = |side| {
        eligible
            .then(|| enumerate_ideals_of(a, side).ok())
            .flatten()
            .map(|v| v.into_iter().map(|h| h.into_space()).collect::<Vec<_>>())
    };
    let (ideals, exhaustive) = match enumerated(Sidedness::TwoSided) {
        Some(v) => (v, true),
        None => (candidate_ideals(a, opts), false),
    };
    let left_ideals = enumerated(Sidedness::LeftIdeal).unwrap_or_else(|| candidate_left_ideals(a, opts));
    let mut pairs = Vec::new();
    let mut pairs_truncated = false;
    'outer: for i in &ideals {
        for m in subideals(a, i, &ideals, opts) {
            if pairs.len() >= opts.max_pairs {
                pairs_truncated = true;
                break 'outer;
            }
            pairs.push((i.clone(), m));
        }
    }
    TestObjects {
        novikov,
        semiprime: decide_lenient(a, Question::Semiprime, &opts.decide),
        prime: decide_lenient(a, Question::Prime, &opts.decide),
        ideals,
        exhaustive,
        left_ideals,
        pairs,
        pairs_truncated,
    }
}

fn g<F: Field>(label: &str, s: &Subspace<F>) -> SpaceExpr<F> {
    SpaceExpr::given(label, s)
}

fn ideal_fact<F: Field>(space: SpaceExpr<F>, parent: SpaceExpr<F>) -> Fact<F> {
    Fact::Ideal { space, sidedness: Sidedness::TwoSided, parent }
}

/// First basis vector of `space` outside `target`, as a violation.
fn escape<F: Field>(a: &Algebra<F>, space: SpaceExpr<F>, target: SpaceExpr<F>) -> Option<Violation<F>> {
    let s = space.eval(a).expect("expressions built from this algebra");
    let t = target.eval(a).expect("expressions built from this algebra");
    let element = s.basis_vectors().find(|v| !t.contains(v).expect("same ambient"))?.to_vec();
    Some(Violation::Escapes { space, target, element })
}

fn not_ideal<F: Field>(
    a: &Algebra<F>,
    space: SpaceExpr<F>,
    parent: SpaceExpr<F>,
    side: Sidedness,
) -> Option<Violation<F>> {
    let s = space.eval(a).expect("expressions built from this algebra");
    let p = parent.eval(a).expect("expressions built from this algebra");
    ideal_violation_in(a, &s, &p, side).expect("same ambient").map(|_| Violation::NotIdeal {
        space,
        sidedness: side,
        parent,
    })
}

fn not_novikov<F: Field>(claim: ClaimId) -> Verdict<F> {
    Verdict::vacuous(claim, "not a Novikov algebra")
}

fn ideals_note<F: Field>(obj: &TestObjects<F>) -> &'static str {
    if obj.exhaustive {
        "all ideals (enumerated)"
    } else {
        "candidate ideals"
    }
}

fn pairs_note<F: Field>(obj: &TestObjects<F>) -> String {
    format!(
        "{} (I, M) pairs from {}{}",
        obj.pairs.len(),
        ideals_note(obj),
        if obj.pairs_truncated { ", truncated" } else { "" }
    )
}

pub fn check_l1<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>) -> Verdict<F> {
    let claim = ClaimId::L1;
    if !obj.novikov {
        return not_novikov(claim);
    }
    let n = nucleus(a);
    if n.is_zero() {
        return Verdict::vacuous(claim, "nucleus is zero");
    }
    let report = check_identity_with_nucleus(a, &n);
    match report.witness {
        None => Verdict::new(claim, Status::Holds, n.dim(), format!("nucleus of dimension {}", n.dim())),
        Some(w) => Verdict::fails(
            claim,
            n.dim(),
            vec![Fact::Novikov],
            Violation::Identity { identity: report.identity, indices: w.indices, nucleus_element: w.nucleus_element },
        ),
    }
}

pub fn check_l2<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>) -> Verdict<F> {
    let claim = ClaimId::L2;
    if !obj.novikov {
        return not_novikov(claim);
    }
    let mut checked = 0;
    for l in &obj.left_ideals {
        checked += 1;
        let lx = g("L", l);
        if let Some(v) = not_ideal(a, SpaceExpr::AnnLeft(Box::new(lx.clone())), SpaceExpr::Whole, Sidedness::TwoSided) {
            let hyps = vec![
                Fact::Novikov,
                Fact::Ideal { space: lx, sidedness: Sidedness::LeftIdeal, parent: SpaceExpr::Whole },
            ];
            return Verdict::fails(claim, checked, hyps, v);
        }
    }
    for i in &obj.ideals {
        checked += 1;
        let ix = g("I", i);
        if let Some(v) = not_ideal(a, SpaceExpr::AnnRight(Box::new(ix.clone())), SpaceExpr::Whole, Sidedness::LeftIdeal)
        {
            return Verdict::fails(claim, checked, vec![Fact::Novikov, ideal_fact(ix, SpaceExpr::Whole)], v);
        }
    }
    let context = format!("{} left ideals, {} ideals ({})", obj.left_ideals.len(), obj.ideals.len(), ideals_note(obj));
    Verdict::new(claim, Status::Holds, checked, context)
}

pub fn check_l3<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>) -> Verdict<F> {
    let claim = ClaimId::L3;
    if !obj.novikov {
        return not_novikov(claim);
    }
    for s in [SpaceExpr::Nucleus, SpaceExpr::Center] {
        if let Some(v) = not_ideal(a, s, SpaceExpr::Whole, Sidedness::TwoSided) {
            return Verdict::fails(claim, 1, vec![Fact::Novikov], v);
        }
    }
    if commutative_center(a) != center(a) {
        let v = Violation::Differ { left: SpaceExpr::CommutativeCenter, right: SpaceExpr::Center };
        return Verdict::fails(claim, 1, vec![Fact::Novikov], v);
    }
    Verdict::new(claim, Status::Holds, 1, "N(A), Z(A), K(A)")
}

/// Hypothesis gate on a decision: `Ok(())` when it is `Yes`.
fn require_yes<F: Field>(claim: ClaimId, d: &Decision<F>) -> Result<(), Verdict<F>> {
    match d.status {
        DecisionStatus::Yes => Ok(()),
        DecisionStatus::No => Err(Verdict::vacuous(claim, format!("algebra is not {}", d.question))),
        DecisionStatus::Undetermined => {
            Err(Verdict::undetermined(claim, format!("{} undetermined: {}", d.question, d.note)))
        }
    }
}

fn decided_yes<F: Field>(algebra: AlgebraExpr<F>, question: Question) -> Fact<F> {
    Fact::Decided { algebra, question, status: DecisionStatus::Yes }
}

pub fn check_t1<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>) -> Verdict<F> {
    let claim = ClaimId::T1;
    if !obj.novikov {
        return not_novikov(claim);
    }
    if a.is_associative() {
        return Verdict::vacuous(claim, "algebra is associative");
    }
    if let Err(v) = require_yes(claim, &obj.prime) {
        return v;
    }
    let hyps =
        vec![Fact::Novikov, decided_yes(AlgebraExpr::Whole, Question::Prime), Fact::Nonzero(SpaceExpr::Associators)];
    for (s, sub) in [(SpaceExpr::Nucleus, nucleus(a)), (SpaceExpr::Center, center(a))] {
        if !sub.is_zero() {
            return Verdict::fails(claim, 1, hyps, Violation::Nonzero(s));
        }
    }
    Verdict::new(claim, Status::Holds, 1, "prime and nonassociative")
}

pub fn check_l4<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>) -> Verdict<F> {
    let claim = ClaimId::L4;
    if !obj.novikov {
        return not_novikov(claim);
    }
    let semiprime = obj.semiprime.is_yes();
    let mut checked = 0;
    for (i, v) in &obj.pairs {
        if v.is_zero() || !squares_to_zero(a, v) {
            continue;
        }
        checked += 1;
        let ix = g("I", i);
        let vx = g("V", v);
        let ax = SpaceExpr::Whole;
        let av = SpaceExpr::product(ax.clone(), vx.clone());
        let va = SpaceExpr::product(vx.clone(), ax.clone());
        let av_v = SpaceExpr::sum(av.clone(), vx.clone());
        let va_v = SpaceExpr::sum(va.clone(), vx.clone());
        let zero = SpaceExpr::Zero;
        let mut hyps = vec![
            Fact::Novikov,
            ideal_fact(ix.clone(), SpaceExpr::Whole),
            ideal_fact(vx.clone(), ix.clone()),
            Fact::SquareZero(vx.clone()),
        ];
        let containments = [
            (SpaceExpr::product(SpaceExpr::product(vx.clone(), ix.clone()), vx.clone()), zero.clone()),
            (SpaceExpr::associator(vx.clone(), vx.clone(), ix.clone()), zero.clone()),
            (SpaceExpr::associator(vx.clone(), ix.clone(), vx.clone()), zero.clone()),
            (SpaceExpr::associator(ix.clone(), vx.clone(), vx.clone()), zero.clone()),
            (SpaceExpr::product(av.clone(), ix.clone()), vx.clone()),
            (SpaceExpr::product(ix.clone(), av.clone()), av_v.clone()),
            (SpaceExpr::product(ix.clone(), va.clone()), va_v.clone()),
            (SpaceExpr::product(va.clone(), ix.clone()), va.clone()),
        ];
        for (space, target) in containments {
            if let Some(viol) = escape(a, space, target) {
                return Verdict::fails(claim, checked, hyps, viol);
            }
        }
        for s in [av_v.clone(), va_v.clone()] {
            if let Some(viol) = not_ideal(a, s, ix.clone(), Sidedness::TwoSided) {
                return Verdict::fails(claim, checked, hyps, viol);
            }
        }
        if semiprime {
            hyps.push(decided_yes(AlgebraExpr::Whole, Question::Semiprime));
            for s in [av_v, va_v] {
                if let Some(viol) = escape(a, SpaceExpr::square(s), zero.clone()) {
                    return Verdict::fails(claim, checked, hyps, viol);
                }
            }
        }
    }
    if checked == 0 {
        return Verdict::vacuous(claim, format!("no nonzero trivial V among {}", pairs_note(obj)));
    }
    let triviality =
        if semiprime { "triviality checked" } else { "triviality not applicable (A not certified semiprime)" };
    Verdict::new(claim, Status::Holds, checked, format!("{}; {triviality}", pairs_note(obj)))
}

/// Shared driver for the subalgebra decision claims.
fn ideals_inherit<F: Field>(
    a: &Algebra<F>,
    obj: &TestObjects<F>,
    claim: ClaimId,
    question: Question,
    opts: &SuiteOptions,
) -> Verdict<F> {
    if !obj.novikov {
        return not_novikov(claim);
    }
    let parent = if question == Question::Prime { &obj.prime } else { &obj.semiprime };
    if let Err(v) = require_yes(claim, parent) {
        return v;
    }
    let mut checked = 0;
    let mut undetermined = 0;
    for i in obj.ideals.iter().filter(|i| !i.is_zero()) {
        let sub = subalgebra_as_algebra(a, i).expect("ideals are subalgebras");
        let d = decide_lenient(&sub.algebra, question, &opts.decide);
        match d.status {
            DecisionStatus::Yes => checked += 1,
            DecisionStatus::Undetermined => undetermined += 1,
            DecisionStatus::No => {
                let ix = g("I", i);
                let hyps = vec![
                    Fact::Novikov,
                    decided_yes(AlgebraExpr::Whole, question),
                    ideal_fact(ix.clone(), SpaceExpr::Whole),
                ];
                let witness = d.witness.expect("No carries a witness");
                return Verdict::fails(
                    claim,
                    checked + 1,
                    hyps,
                    Violation::Refuted { algebra: AlgebraExpr::Sub(ix), question, witness },
                );
            }
        }
    }
    if undetermined > 0 {
        return Verdict::undetermined(claim, format!("{undetermined} ideals could not be decided"));
    }
    Verdict::new(claim, Status::Holds, checked, format!("{checked} nonzero ideals ({})", ideals_note(obj)))
}

pub fn check_t2<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>, opts: &SuiteOptions) -> Verdict<F> {
    ideals_inherit(a, obj, ClaimId::T2, Question::Semiprime, opts)
}

pub fn check_t3<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>, opts: &SuiteOptions) -> Verdict<F> {
    ideals_inherit(a, obj, ClaimId::T3, Question::Prime, opts)
}

pub fn check_c1<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>, opts: &SuiteOptions) -> Verdict<F> {
    let claim = ClaimId::C1;
    if !obj.novikov {
        return not_novikov(claim);
    }
    let chain = match baer_radical_with(a, &opts.decide) {
        Ok(c) => c,
        Err(e) => return Verdict::undetermined(claim, e.to_string()),
    };
    if !chain.certified {
        return Verdict::undetermined(claim, "chain built from discovered trivial ideals only (infinite field)");
    }
    let last = chain.stages.len() - 1;
    let r = chain.radical().space().clone();
    let rx = g("B", &r);
    let stage = Fact::BaerStage { index: last, space: rx.clone() };
    for (k, s) in chain.stages.iter().enumerate() {
        let sx = g("B_k", s.space());
        if let Some(v) = not_ideal(a, sx.clone(), SpaceExpr::Whole, Sidedness::TwoSided) {
            return Verdict::fails(claim, 1, vec![Fact::BaerStage { index: k, space: sx }], v);
        }
    }
    let q = quotient_by_subspace(a, &r).expect("radical is a two-sided ideal");
    let d = decide_lenient(&q.algebra, Question::Semiprime, &opts.decide);
    match d.status {
        DecisionStatus::Yes => {}
        DecisionStatus::Undetermined => return Verdict::undetermined(claim, d.note),
        DecisionStatus::No => {
            let witness = d.witness.expect("No carries a witness");
            let v = Violation::Refuted { algebra: AlgebraExpr::Quotient(rx), question: Question::Semiprime, witness };
            return Verdict::fails(claim, 1, vec![Fact::Novikov, stage], v);
        }
    }
    for v in obj.ideals.iter().filter(|v| squares_to_zero(a, v)) {
        let vx = g("V", v);
        if let Some(viol) = escape(a, vx.clone(), rx.clone()) {
            let hyps = vec![stage, ideal_fact(vx.clone(), SpaceExpr::Whole), Fact::SquareZero(vx)];
            return Verdict::fails(claim, 1, hyps, viol);
        }
    }
    let dims: Vec<_> = chain.stages.iter().map(|s| s.dim().to_string()).collect();
    Verdict::new(claim, Status::Holds, 1, format!("chain dimensions {}", dims.join(" < ")))
}

pub fn check_l5<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>) -> Vec<Verdict<F>> {
    let claims = [ClaimId::L5a, ClaimId::L5b, ClaimId::L5c, ClaimId::L5d, ClaimId::L5e];
    if !obj.novikov {
        return claims.iter().map(|&c| not_novikov(c)).collect();
    }
    let mut checked = [0usize; 5];
    let mut failed: [Option<Verdict<F>>; 5] = Default::default();
    let xs: Vec<Vec<F::Elem>> = (0..a.dim()).map(|i| a.basis_vector(i)).collect();
    for (i, m) in obj.pairs.iter().filter(|(_, m)| !m.is_zero()) {
        let ix = g("I", i);
        let mx = g("M", m);
        let hyps = vec![Fact::Novikov, ideal_fact(ix.clone(), SpaceExpr::Whole), ideal_fact(mx.clone(), ix.clone())];
        let i2 = SpaceExpr::square(ix.clone());
        let mut record = |k: usize, v: Option<Violation<F>>| {
            checked[k] += 1;
            if let (Some(v), None) = (v, &failed[k]) {
                failed[k] = Some(Verdict::fails(claims[k], checked[k], hyps.clone(), v));
            }
        };
        let mab = SpaceExpr::product(SpaceExpr::product(mx.clone(), SpaceExpr::Whole), i2.clone());
        record(1, escape(a, mab, mx.clone()));
        let amb = SpaceExpr::product(SpaceExpr::product(SpaceExpr::Whole, mx.clone()), i2.clone());
        record(3, escape(a, amb, mx.clone()));
        for x in &xs {
            let m_x = SpaceExpr::TimesVector(Box::new(mx.clone()), x.clone());
            let x_m = SpaceExpr::VectorTimes(x.clone(), Box::new(mx.clone()));
            let a_viol = not_ideal(a, SpaceExpr::sum(m_x.clone(), mx.clone()), ix.clone(), Sidedness::TwoSided)
                .or_else(|| not_ideal(a, SpaceExpr::sum(x_m.clone(), mx.clone()), ix.clone(), Sidedness::TwoSided));
            record(0, a_viol);
            let quartic = |u: SpaceExpr<F>| SpaceExpr::square(SpaceExpr::square(u));
            record(2, escape(a, quartic(m_x), mx.clone()));
            record(4, escape(a, quartic(x_m), mx.clone()));
        }
    }
    let context = pairs_note(obj);
    claims
        .iter()
        .enumerate()
        .map(|(k, &c)| match failed[k].take() {
            Some(v) => v,
            None if checked[k] == 0 => Verdict::vacuous(c, format!("no nonzero M among {context}")),
            None => Verdict::new(c, Status::Holds, checked[k], context.clone()),
        })
        .collect()
}

pub fn check_l6<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>, opts: &SuiteOptions) -> Verdict<F> {
    let claim = ClaimId::L6;
    if !obj.novikov {
        return not_novikov(claim);
    }
    let mut checked = 0;
    let mut undetermined = 0;
    for (i, m) in &obj.pairs {
        let sub = subalgebra_as_algebra(a, i).expect("ideals are subalgebras");
        let mm = sub.restrict_subspace(m).expect("M lies in I");
        let q = quotient_by_subspace(&sub.algebra, &mm).expect("M is an ideal of I");
        match decide_lenient(&q.algebra, Question::Semiprime, &opts.decide).status {
            DecisionStatus::No => continue,
            DecisionStatus::Undetermined => {
                undetermined += 1;
                continue;
            }
            DecisionStatus::Yes => checked += 1,
        }
        let ix = g("I", i);
        let mx = g("M", m);
        if let Some(v) = not_ideal(a, mx.clone(), SpaceExpr::Whole, Sidedness::TwoSided) {
            let hyps = vec![
                Fact::Novikov,
                ideal_fact(ix.clone(), SpaceExpr::Whole),
                ideal_fact(mx.clone(), ix.clone()),
                decided_yes(AlgebraExpr::SubQuotient { sub: ix, by: mx }, Question::Semiprime),
            ];
            return Verdict::fails(claim, checked, hyps, v);
        }
    }
    let context = format!("{}; {undetermined} quotients undetermined", pairs_note(obj));
    if checked == 0 {
        return if undetermined > 0 {
            Verdict::undetermined(claim, context)
        } else {
            Verdict::vacuous(claim, format!("no semiprime I/M among {}", pairs_note(obj)))
        };
    }
    Verdict::new(claim, Status::Holds, checked, context)
}

pub fn check_l7<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>) -> Verdict<F> {
    let claim = ClaimId::L7;
    if !obj.novikov {
        return not_novikov(claim);
    }
    for (k, l) in obj.left_ideals.iter().enumerate() {
        let lx = g("L", l);
        let m = SpaceExpr::RightStabilizer(Box::new(lx.clone()));
        if let Some(v) = not_ideal(a, m, SpaceExpr::Whole, Sidedness::TwoSided) {
            let hyps = vec![
                Fact::Novikov,
                Fact::Ideal { space: lx, sidedness: Sidedness::LeftIdeal, parent: SpaceExpr::Whole },
            ];
            return Verdict::fails(claim, k + 1, hyps, v);
        }
    }
    Verdict::new(claim, Status::Holds, obj.left_ideals.len(), format!("{} left ideals", obj.left_ideals.len()))
}

pub fn check_t4<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>, opts: &SuiteOptions) -> Verdict<F> {
    let claim = ClaimId::T4;
    if !obj.novikov {
        return not_novikov(claim);
    }
    let mins = match minimal_ideals_with(a, &opts.decide) {
        Ok(m) => m,
        Err(e) => return Verdict::undetermined(claim, e.to_string()),
    };
    if !mins.exhaustive {
        return Verdict::undetermined(claim, "minimal ideals are not certified over an infinite field");
    }
    if mins.ideals.is_empty() {
        return Verdict::vacuous(claim, "no nonzero ideals");
    }
    let mut trivial = 0;
    for h in &mins.ideals {
        if squares_to_zero(a, h.space()) {
            trivial += 1;
            continue;
        }
        let sub = subalgebra_as_algebra(a, h.space()).expect("ideals are subalgebras");
        let d = decide_lenient(&sub.algebra, Question::Simple, &opts.decide);
        match d.status {
            DecisionStatus::Yes => {}
            DecisionStatus::Undetermined => return Verdict::undetermined(claim, d.note),
            DecisionStatus::No => {
                let hx = g("H", h.space());
                let hyps =
                    vec![Fact::Novikov, Fact::MinimalIdeal(hx.clone()), Fact::Nonzero(SpaceExpr::square(hx.clone()))];
                let witness = d.witness.expect("No carries a witness");
                let v = Violation::Refuted { algebra: AlgebraExpr::Sub(hx), question: Question::Simple, witness };
                return Verdict::fails(claim, mins.ideals.len(), hyps, v);
            }
        }
    }
    let n = mins.ideals.len();
    Verdict::new(claim, Status::Holds, n, format!("{n} minimal ideals, {trivial} trivial, {} simple", n - trivial))
}

fn is_commutative_space<F: Field>(a: &Algebra<F>, s: &Subspace<F>) -> bool {
    s.basis_vectors().all(|x| s.basis_vectors().all(|y| a.mul(x, y) == a.mul(y, x)))
}

/// Nonzero commutative ideals `H` with `H² = H` among the test ideals.
fn idempotent_commutative_ideals<'a, F: Field>(
    a: &'a Algebra<F>,
    obj: &'a TestObjects<F>,
) -> impl Iterator<Item = &'a Subspace<F>> + 'a {
    obj.ideals.iter().filter(move |h| {
        !h.is_zero() && is_commutative_space(a, h) && subspace_product(a, h, h).ok().as_ref() == Some(*h)
    })
}

fn h_facts<F: Field>(hx: &SpaceExpr<F>) -> [Fact<F>; 3] {
    [ideal_fact(hx.clone(), SpaceExpr::Whole), Fact::Commutative(hx.clone()), Fact::Idempotent(hx.clone())]
}

pub fn check_l8<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>) -> Verdict<F> {
    let claim = ClaimId::L8;
    if !obj.novikov {
        return not_novikov(claim);
    }
    let mut checked = 0;
    for h in idempotent_commutative_ideals(a, obj) {
        checked += 1;
        let hx = g("H", h);
        if let Some(v) = escape(a, hx.clone(), SpaceExpr::Nucleus) {
            let mut hyps = vec![Fact::Novikov];
            hyps.extend(h_facts(&hx));
            return Verdict::fails(claim, checked, hyps, v);
        }
    }
    if checked == 0 {
        return Verdict::vacuous(claim, format!("no nonzero commutative H = H² among {}", ideals_note(obj)));
    }
    Verdict::new(claim, Status::Holds, checked, format!("{checked} ideals H ({})", ideals_note(obj)))
}

pub fn check_c2<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>) -> Verdict<F> {
    let claim = ClaimId::C2;
    if !obj.novikov {
        return not_novikov(claim);
    }
    if a.is_associative() {
        return Verdict::vacuous(claim, "algebra is associative");
    }
    if let Err(v) = require_yes(claim, &obj.prime) {
        return v;
    }
    if let Some(h) = idempotent_commutative_ideals(a, obj).next() {
        let hx = g("H", h);
        let mut hyps = vec![
            Fact::Novikov,
            decided_yes(AlgebraExpr::Whole, Question::Prime),
            Fact::Nonzero(SpaceExpr::Associators),
        ];
        hyps.extend(h_facts(&hx));
        return Verdict::fails(claim, 1, hyps, Violation::Nonzero(hx));
    }
    Verdict::new(claim, Status::Holds, 1, format!("searched {}", ideals_note(obj)))
}

pub fn check_c3<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>, opts: &SuiteOptions) -> Verdict<F> {
    let claim = ClaimId::C3;
    if !obj.novikov {
        return not_novikov(claim);
    }
    if let Err(v) = require_yes(claim, &obj.prime) {
        return v;
    }
    let mins = match minimal_ideals_with(a, &opts.decide) {
        Ok(m) if m.exhaustive => m,
        Ok(_) => return Verdict::undetermined(claim, "minimal ideals are not certified"),
        Err(e) => return Verdict::undetermined(claim, e.to_string()),
    };
    let Some(h) = mins.ideals.iter().find(|h| is_commutative_space(a, h.space())) else {
        return Verdict::vacuous(claim, "no commutative minimal ideal");
    };
    let report = check_identity(a, IdentityId::Associativity);
    if let Some(w) = report.witness {
        let hx = g("H", h.space());
        let hyps = vec![
            Fact::Novikov,
            decided_yes(AlgebraExpr::Whole, Question::Prime),
            Fact::MinimalIdeal(hx.clone()),
            Fact::Commutative(hx),
        ];
        let v = Violation::Identity { identity: IdentityId::Associativity, indices: w.indices, nucleus_element: None };
        return Verdict::fails(claim, 1, hyps, v);
    }
    Verdict::new(claim, Status::Holds, 1, format!("commutative minimal ideal of dimension {}", h.dim()))
}

pub fn check_novikov_comm_assoc<F: Field>(a: &Algebra<F>, obj: &TestObjects<F>) -> Verdict<F> {
    let claim = ClaimId::NovikovCommAssoc;
    if !obj.novikov {
        return not_novikov(claim);
    }
    if !a.is_commutative() {
        return Verdict::vacuous(claim, "algebra is not commutative");
    }
    let report = check_identity(a, IdentityId::Associativity);
    match report.witness {
        None => Verdict::new(claim, Status::Holds, 1, "commutative"),
        Some(w) => Verdict::fails(
            claim,
            1,
            vec![Fact::Novikov, Fact::Commutative(SpaceExpr::Whole)],
            Violation::Identity { identity: IdentityId::Associativity, indices: w.indices, nucleus_element: None },
        ),
    }
}

/// Every claim on one algebra, in [`ClaimId::ALL`] order.
pub fn run_suite<F: Field>(a: &Algebra<F>, opts: &SuiteOptions) -> Vec<Verdict<F>> {
    let obj = test_objects(a, opts);
    let mut out = vec![
        check_l1(a, &obj),
        check_l2(a, &obj),
        check_l3(a, &obj),
        check_t1(a, &obj),
        check_l4(a, &obj),
        check_t2(a, &obj, opts),
        check_c1(a, &obj, opts),
    ];
    out.extend(check_l5(a, &obj));
    out.extend([
        check_l6(a, &obj, opts),
        check_l7(a, &obj),
        check_t3(a, &obj, opts),
        check_t4(a, &obj, opts),
        check_l8(a, &obj),
        check_c2(a, &obj),
        check_c3(a, &obj, opts),
        check_novikov_comm_assoc(a, &obj),
    ]);
    out
}

/// Per-claim tallies over many algebras.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClaimCoverage {
    /// Algebras on which the claim held with at least one checked object.
    pub covered: usize,
    pub vacuous: usize,
    pub fails: usize,
    pub undetermined: usize,
    /// Sum of checked objects.
    pub objects: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage(pub BTreeMap<ClaimId, ClaimCoverage>);

impl Default for Coverage {
    fn default() -> Self {
        Self::new()
    }
}

impl Coverage {
    pub fn new() -> Self {
        Coverage(ClaimId::ALL.iter().map(|&c| (c, ClaimCoverage::default())).collect())
    }

    pub fn add<F: Field>(&mut self, verdicts: &[Verdict<F>]) {
        for v in verdicts {
            let c = self.0.entry(v.claim).or_default();
            match v.status {
                Status::Holds if v.checked > 0 => c.covered += 1,
                Status::Holds | Status::Vacuous(_) => c.vacuous += 1,
                Status::Fails(_) => c.fails += 1,
                Status::Undetermined(_) => c.undetermined += 1,
            }
            c.objects += v.checked;
        }
    }

    pub fn get(&self, claim: ClaimId) -> ClaimCoverage {
        self.0.get(&claim).copied().unwrap_or_default()
    }

    pub fn total_fails(&self) -> usize {
        self.0.values().map(|c| c.fails).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::generators::{mutate, truncated_poly_algebra, truncated_polynomial};

    fn run<F: Field>(a: &Algebra<F>) -> Vec<Verdict<F>> {
        run_suite(a, &SuiteOptions::default())
    }

    fn status<F: Field>(vs: &[Verdict<F>], c: ClaimId) -> &Status<F> {
        &vs.iter().find(|v| v.claim == c).unwrap().status
    }

    #[test]
    fn prime_truncated_algebra_covers_prime_claims() {
        let a = truncated_poly_algebra(3, 1).unwrap();
        let vs = run(&a);
        assert!(vs.iter().all(|v| !v.is_fail()), "{vs:#?}");
        for c in [ClaimId::T1, ClaimId::T3, ClaimId::C2, ClaimId::T4] {
            assert!(vs.iter().any(|v| v.claim == c && v.is_covered()), "{c}");
        }
    }

    #[test]
    fn zero_algebra_covers_trivial_ideal_claims() {
        let a = Algebra::zero_product(PrimeField::new(2).unwrap(), 2);
        let vs = run(&a);
        assert!(vs.iter().all(|v| !v.is_fail()));
        assert!(vs.iter().any(|v| v.claim == ClaimId::L4 && v.is_covered()));
        assert!(vs.iter().any(|v| v.claim == ClaimId::C1 && v.is_covered()));
        assert!(matches!(status(&vs, ClaimId::T1), Status::Vacuous(_)));
    }

    #[test]
    fn field_covers_commutative_claims() {
        let a = truncated_polynomial(PrimeField::new(3).unwrap(), 1);
        let vs = run(&a);
        for c in [ClaimId::L8, ClaimId::C3, ClaimId::NovikovCommAssoc, ClaimId::T2] {
            assert!(vs.iter().any(|v| v.claim == c && v.is_covered()), "{c}");
        }
    }

    #[test]
    fn rational_prime_claims_are_undetermined() {
        let a = crate::generators::dual_numbers_gd(Rationals);
        let vs = run(&a);
        assert!(vs.iter().all(|v| !v.is_fail()));
        assert!(matches!(status(&vs, ClaimId::C1), Status::Undetermined(_)));
    }

    #[test]
    fn non_novikov_is_vacuous() {
        let a = truncated_poly_algebra(3, 0).unwrap();
        let gf3 = PrimeField::new(3).unwrap();
        let m = mutate(&a, 1, 1, 0, &gf3.from_i64(1)).unwrap();
        assert!(!is_novikov(&m));
        let vs = run(&m);
        assert!(vs.iter().all(|v| matches!(v.status, Status::Vacuous(_))));
    }

    #[test]
    fn failures_reverify() {
        // An ideal that is not an ideal: the claim code path must yield
        // evidence that re-verifies.
        let gf2 = PrimeField::new(2).unwrap();
        let a = truncated_poly_algebra(2, 1).unwrap();
        let e0 = Subspace::span(gf2, 2, [a.basis_vector(0).as_slice()]).unwrap();
        let v = not_ideal(&a, g("S", &e0), SpaceExpr::Whole, Sidedness::TwoSided).unwrap();
        let f = Failure { hypotheses: vec![Fact::Novikov], violation: v };
        assert!(f.verify(&a).unwrap());
    }
}
