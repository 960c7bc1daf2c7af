//! Self-contained failure evidence.
//!
//! A [`Failure`] lists the hypotheses that selected the test objects and the
//! violated conclusion. Both are stated in terms of expressions that are
//! re-evaluated from the algebra alone, so a failure read back from a report
//! can be checked without rerunning the suite.

use std::fmt;

use crate::algebra::{defect_at, is_novikov, Algebra, IdentityId};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lattice::{
    baer_radical, decide, principal_ideal, projective_points, DecideOptions, DecisionStatus, DecisionWitness, Question,
};
use crate::linalg::{is_zero_vector, Subspace};
use crate::structure::{
    ann_left, ann_right, associator_ideal, associator_space, associator_span, center, commutative_center,
    ideal_violation_in, nucleus, product_with_vector, quotient_by_subspace, right_stabilizer, subalgebra_as_algebra,
    subspace_product, vector_with_product, Sidedness,
};

/// A subspace of `A` described by how to compute it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceExpr<F: Field> {
    Whole,
    Zero,
    /// An explicit subspace with a display label.
    Given {
        label: String,
        space: Subspace<F>,
    },
    Nucleus,
    CommutativeCenter,
    Center,
    /// Span of all associators.
    Associators,
    /// Two-sided ideal generated by the associators.
    AssociatorIdeal,
    Sum(Box<SpaceExpr<F>>, Box<SpaceExpr<F>>),
    Product(Box<SpaceExpr<F>>, Box<SpaceExpr<F>>),
    Associator(Box<SpaceExpr<F>>, Box<SpaceExpr<F>>, Box<SpaceExpr<F>>),
    /// `Ux`
    TimesVector(Box<SpaceExpr<F>>, Vec<F::Elem>),
    /// `xU`
    VectorTimes(Vec<F::Elem>, Box<SpaceExpr<F>>),
    AnnLeft(Box<SpaceExpr<F>>),
    AnnRight(Box<SpaceExpr<F>>),
    /// `{x ∈ L : xA ⊆ L}`
    RightStabilizer(Box<SpaceExpr<F>>),
}

impl<F: Field> SpaceExpr<F> {
    pub fn given(label: impl Into<String>, space: &Subspace<F>) -> Self {
        SpaceExpr::Given { label: label.into(), space: space.clone() }
    }

    pub fn sum(l: Self, r: Self) -> Self {
        SpaceExpr::Sum(Box::new(l), Box::new(r))
    }

    pub fn product(l: Self, r: Self) -> Self {
        SpaceExpr::Product(Box::new(l), Box::new(r))
    }

    pub fn square(s: Self) -> Self {
        SpaceExpr::product(s.clone(), s)
    }

    pub fn associator(x: Self, y: Self, z: Self) -> Self {
        SpaceExpr::Associator(Box::new(x), Box::new(y), Box::new(z))
    }

    pub fn eval(&self, a: &Algebra<F>) -> Result<Subspace<F>> {
        Ok(match self {
            SpaceExpr::Whole => a.full_space(),
            SpaceExpr::Zero => a.zero_space(),
            SpaceExpr::Given { space, .. } => {
                if space.ambient_dim() != a.dim() {
                    return Err(Error::DimensionMismatch { expected: a.dim(), found: space.ambient_dim() });
                }
                space.clone()
            }
            SpaceExpr::Nucleus => nucleus(a),
            SpaceExpr::CommutativeCenter => commutative_center(a),
            SpaceExpr::Center => center(a),
            SpaceExpr::Associators => associator_span(a),
            SpaceExpr::AssociatorIdeal => associator_ideal(a).into_space(),
            SpaceExpr::Sum(l, r) => l.eval(a)?.sum(&r.eval(a)?)?,
            SpaceExpr::Product(l, r) => subspace_product(a, &l.eval(a)?, &r.eval(a)?)?,
            SpaceExpr::Associator(x, y, z) => associator_space(a, &x.eval(a)?, &y.eval(a)?, &z.eval(a)?)?,
            SpaceExpr::TimesVector(u, x) => product_with_vector(a, &u.eval(a)?, x)?,
            SpaceExpr::VectorTimes(x, u) => vector_with_product(a, x, &u.eval(a)?)?,
            SpaceExpr::AnnLeft(m) => ann_left(a, &m.eval(a)?)?,
            SpaceExpr::AnnRight(m) => ann_right(a, &m.eval(a)?)?,
            SpaceExpr::RightStabilizer(l) => right_stabilizer(a, &l.eval(a)?)?,
        })
    }
}

impl<F: Field> fmt::Display for SpaceExpr<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Whole => f.write_str("A"),
            SpaceExpr::Zero => f.write_str("0"),
            SpaceExpr::Given { label, .. } => f.write_str(label),
            SpaceExpr::Nucleus => f.write_str("N(A)"),
            SpaceExpr::CommutativeCenter => f.write_str("K(A)"),
            SpaceExpr::Center => f.write_str("Z(A)"),
            SpaceExpr::Associators => f.write_str("(A,A,A)"),
            SpaceExpr::AssociatorIdeal => f.write_str("D(A)"),
            SpaceExpr::Sum(l, r) => write!(f, "({l} + {r})"),
            SpaceExpr::Product(l, r) => write!(f, "({l}·{r})"),
            SpaceExpr::Associator(x, y, z) => write!(f, "({x}, {y}, {z})"),
            SpaceExpr::TimesVector(u, _) => write!(f, "({u}·x)"),
            SpaceExpr::VectorTimes(_, u) => write!(f, "(x·{u})"),
            SpaceExpr::AnnLeft(m) => write!(f, "Ann_l({m})"),
            SpaceExpr::AnnRight(m) => write!(f, "Ann_r({m})"),
            SpaceExpr::RightStabilizer(l) => write!(f, "{{x ∈ {l} : xA ⊆ {l}}}"),
        }
    }
}

/// An algebra derived from `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraExpr<F: Field> {
    Whole,
    /// A multiplicatively closed subspace in its own canonical basis.
    Sub(SpaceExpr<F>),
    /// `A/S` for a two-sided ideal `S`.
    Quotient(SpaceExpr<F>),
    /// `I/M` for an ideal `M` of the subalgebra `I`.
    SubQuotient {
        sub: SpaceExpr<F>,
        by: SpaceExpr<F>,
    },
}

impl<F: Field> AlgebraExpr<F> {
    pub fn build(&self, a: &Algebra<F>) -> Result<Algebra<F>> {
        Ok(match self {
            AlgebraExpr::Whole => a.clone(),
            AlgebraExpr::Sub(s) => subalgebra_as_algebra(a, &s.eval(a)?)?.algebra,
            AlgebraExpr::Quotient(s) => quotient_by_subspace(a, &s.eval(a)?)?.algebra,
            AlgebraExpr::SubQuotient { sub, by } => {
                let s = subalgebra_as_algebra(a, &sub.eval(a)?)?;
                let m = s
                    .restrict_subspace(&by.eval(a)?)
                    .ok_or_else(|| Error::NotASubalgebra(format!("{by} is not contained in {sub}")))?;
                quotient_by_subspace(&s.algebra, &m)?.algebra
            }
        })
    }
}

impl<F: Field> fmt::Display for AlgebraExpr<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraExpr::Whole => f.write_str("A"),
            AlgebraExpr::Sub(s) => write!(f, "{s}"),
            AlgebraExpr::Quotient(s) => write!(f, "A/{s}"),
            AlgebraExpr::SubQuotient { sub, by } => write!(f, "{sub}/{by}"),
        }
    }
}

/// A hypothesis that held for the failing instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fact<F: Field> {
    Novikov,
    /// `space` is an ideal of the subalgebra `parent` (`A` itself for [`SpaceExpr::Whole`]).
    Ideal {
        space: SpaceExpr<F>,
        sidedness: Sidedness,
        parent: SpaceExpr<F>,
    },
    SquareZero(SpaceExpr<F>),
    Nonzero(SpaceExpr<F>),
    Commutative(SpaceExpr<F>),
    /// `S² = S`.
    Idempotent(SpaceExpr<F>),
    /// A minimal two-sided ideal (finite fields only).
    MinimalIdeal(SpaceExpr<F>),
    /// Stage `index` of the lower radical chain.
    BaerStage {
        index: usize,
        space: SpaceExpr<F>,
    },
    /// A decider returned `status` on the given algebra.
    Decided {
        algebra: AlgebraExpr<F>,
        question: Question,
        status: DecisionStatus,
    },
}

impl<F: Field> Fact<F> {
    pub fn holds(&self, a: &Algebra<F>) -> Result<bool> {
        Ok(match self {
            Fact::Novikov => is_novikov(a),
            Fact::Ideal { space, sidedness, parent } => {
                ideal_violation_in(a, &space.eval(a)?, &parent.eval(a)?, *sidedness)?.is_none()
            }
            Fact::SquareZero(s) => {
                let s = s.eval(a)?;
                subspace_product(a, &s, &s)?.is_zero()
            }
            Fact::Nonzero(s) => !s.eval(a)?.is_zero(),
            Fact::Commutative(s) => {
                let s = s.eval(a)?;
                let commutes = s.basis_vectors().all(|x| s.basis_vectors().all(|y| a.mul(x, y) == a.mul(y, x)));
                commutes
            }
            Fact::Idempotent(s) => {
                let s = s.eval(a)?;
                subspace_product(a, &s, &s)? == s
            }
            Fact::MinimalIdeal(s) => is_minimal_ideal(a, &s.eval(a)?)?,
            Fact::BaerStage { index, space } => {
                let chain = baer_radical(a)?;
                chain.stages.get(*index).map(|h| h.space()) == Some(&space.eval(a)?)
            }
            Fact::Decided { algebra, question, status } => {
                let b = algebra.build(a)?;
                decide(&b, *question, &DecideOptions::default())?.status == *status
            }
        })
    }
}

impl<F: Field> fmt::Display for Fact<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::Novikov => f.write_str("A is Novikov"),
            Fact::Ideal { space, sidedness, parent } => write!(f, "{space} is a {sidedness} ideal of {parent}"),
            Fact::SquareZero(s) => write!(f, "{s}² = 0"),
            Fact::Nonzero(s) => write!(f, "{s} ≠ 0"),
            Fact::Commutative(s) => write!(f, "{s} is commutative"),
            Fact::Idempotent(s) => write!(f, "{s}² = {s}"),
            Fact::MinimalIdeal(s) => write!(f, "{s} is a minimal ideal"),
            Fact::BaerStage { index, space } => write!(f, "{space} is stage {index} of the lower radical chain"),
            Fact::Decided { algebra, question, status } => write!(f, "{question}({algebra}) = {status:?}"),
        }
    }
}

/// Nonzero two-sided ideal whose every nonzero element generates it.
fn is_minimal_ideal<F: Field>(a: &Algebra<F>, s: &Subspace<F>) -> Result<bool> {
    if a.field().order().is_none() {
        return Err(Error::NeedsFiniteField(a.field().descriptor()));
    }
    if s.is_zero() || ideal_violation_in(a, s, &a.full_space(), Sidedness::TwoSided)?.is_some() {
        return Ok(false);
    }
    for c in projective_points(a.field(), s.dim()) {
        if principal_ideal(a, &s.combine(&c))?.space() != s {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The violated conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation<F: Field> {
    /// A nonzero identity defect at basis indices.
    Identity {
        identity: IdentityId,
        indices: Vec<usize>,
        nucleus_element: Option<Vec<F::Elem>>,
    },
    /// `element` lies in `space` but not in `target`.
    Escapes {
        space: SpaceExpr<F>,
        target: SpaceExpr<F>,
        element: Vec<F::Elem>,
    },
    /// `space` is not an ideal of `parent`.
    NotIdeal {
        space: SpaceExpr<F>,
        sidedness: Sidedness,
        parent: SpaceExpr<F>,
    },
    Differ {
        left: SpaceExpr<F>,
        right: SpaceExpr<F>,
    },
    Nonzero(SpaceExpr<F>),
    /// A decision witness refuting `question` for the derived algebra.
    Refuted {
        algebra: AlgebraExpr<F>,
        question: Question,
        witness: DecisionWitness<F>,
    },
}

impl<F: Field> Violation<F> {
    pub fn holds(&self, a: &Algebra<F>) -> Result<bool> {
        Ok(match self {
            Violation::Identity { identity, indices, nucleus_element } => {
                if let Some(nv) = nucleus_element {
                    if !nucleus(a).contains(nv)? {
                        return Ok(false);
                    }
                }
                let d = defect_at(a, *identity, indices, nucleus_element.as_deref())?;
                !is_zero_vector(a.field(), &d)
            }
            Violation::Escapes { space, target, element } => {
                space.eval(a)?.contains(element)? && !target.eval(a)?.contains(element)?
            }
            Violation::NotIdeal { space, sidedness, parent } => {
                ideal_violation_in(a, &space.eval(a)?, &parent.eval(a)?, *sidedness)?.is_some()
            }
            Violation::Differ { left, right } => left.eval(a)? != right.eval(a)?,
            Violation::Nonzero(s) => !s.eval(a)?.is_zero(),
            Violation::Refuted { algebra, question, witness } => {
                witness.refutes(*question) && witness.verify(&algebra.build(a)?)
            }
        })
    }
}

impl<F: Field> fmt::Display for Violation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Identity { identity, indices, .. } => write!(f, "{identity} fails at {indices:?}"),
            Violation::Escapes { space, target, .. } => write!(f, "{space} ⊄ {target}"),
            Violation::NotIdeal { space, sidedness, parent } => {
                write!(f, "{space} is not a {sidedness} ideal of {parent}")
            }
            Violation::Differ { left, right } => write!(f, "{left} ≠ {right}"),
            Violation::Nonzero(s) => write!(f, "{s} ≠ 0"),
            Violation::Refuted { algebra, question, .. } => write!(f, "{algebra} is not {question}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure<F: Field> {
    pub hypotheses: Vec<Fact<F>>,
    pub violation: Violation<F>,
}

impl<F: Field> Failure<F> {
    /// `true` when every hypothesis holds and the violation is real.
    pub fn verify(&self, a: &Algebra<F>) -> Result<bool> {
        for h in &self.hypotheses {
            if !h.holds(a)? {
                return Ok(false);
            }
        }
        self.violation.holds(a)
    }
}

impl<F: Field> fmt::Display for Failure<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.violation)?;
        if !self.hypotheses.is_empty() {
            f.write_str(" although ")?;
            for (i, h) in self.hypotheses.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{h}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::generators::{direct_sum, truncated_polynomial};

    #[test]
    fn escapes_reverifies() {
        let gf2 = PrimeField::new(2).unwrap();
        let f = truncated_polynomial(gf2, 1);
        let a = direct_sum(&f, &f).unwrap();
        let e0 = Subspace::span(gf2, 2, [a.basis_vector(0).as_slice()]).unwrap();
        let v = Violation::Escapes {
            space: SpaceExpr::Whole,
            target: SpaceExpr::given("I", &e0),
            element: a.basis_vector(1),
        };
        assert!(v.holds(&a).unwrap());
        let fake = Violation::Escapes { space: SpaceExpr::Whole, target: SpaceExpr::Whole, element: a.basis_vector(1) };
        assert!(!fake.holds(&a).unwrap());
    }

    #[test]
    fn minimal_ideal_fact() {
        let gf2 = PrimeField::new(2).unwrap();
        let f = truncated_polynomial(gf2, 1);
        let a = direct_sum(&f, &f).unwrap();
        let e0 = Subspace::span(gf2, 2, [a.basis_vector(0).as_slice()]).unwrap();
        assert!(Fact::MinimalIdeal(SpaceExpr::given("I", &e0)).holds(&a).unwrap());
        assert!(!Fact::MinimalIdeal(SpaceExpr::Whole).holds(&a).unwrap());
    }
}
