//! The algebra file format and JSON encodings of library values.
//!
//! An algebra file is a JSON object
//!
//! ```json
//! {"format_version":1,"field":{"GFp":3},"dim":1,"table":[[["1"]]]}
//! ```
//!
//! with an optional `basis_names` list after `dim`. Scalars are always
//! strings: decimal integers, `"num/den"` fractions, or residues. The
//! canonical form is compact JSON with keys in the order above, rationals in
//! lowest terms and residues reduced.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{Algebra, AnyAlgebra, IdentityId};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor, PrimeField, Rationals};
use crate::lattice::{DecisionStatus, DecisionWitness, Question};
use crate::linalg::Subspace;
use crate::structure::Sidedness;
use crate::theorems::{AlgebraExpr, Fact, Failure, SpaceExpr, Violation};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: u32,
    pub field: FieldDescriptor,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    pub table: Vec<Vec<Vec<String>>>,
}

impl AlgebraFile {
    pub fn from_algebra<F: Field>(a: &Algebra<F>) -> Self {
        let n = a.dim();
        let f = a.field();
        let table =
            (0..n).map(|i| (0..n).map(|j| a.product(i, j).iter().map(|c| f.format(c)).collect()).collect()).collect();
        AlgebraFile {
            format_version: FORMAT_VERSION,
            field: f.descriptor(),
            dim: n,
            basis_names: a.basis_names().map(<[String]>::to_vec),
            table,
        }
    }

    pub fn from_any(a: &AnyAlgebra) -> Self {
        crate::with_algebra!(a, x => AlgebraFile::from_algebra(x))
    }

    /// Validates shape and scalars; errors name the offending field.
    pub fn to_algebra(&self) -> Result<AnyAlgebra> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Format(format!(
                "format_version: unsupported version {} (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        Ok(match self.field {
            FieldDescriptor::Rationals => self.build(Rationals)?.into(),
            FieldDescriptor::PrimeField(p) => self.build(PrimeField::new(p)?)?.into(),
        })
    }

    fn build<F: Field>(&self, field: F) -> Result<Algebra<F>> {
        let n = self.dim;
        let shape = |path: String, len: usize| {
            if len == n {
                Ok(())
            } else {
                Err(Error::Format(format!("{path}: expected {n} entries, found {len}")))
            }
        };
        shape("table".into(), self.table.len())?;
        let mut table = Vec::with_capacity(n);
        for (i, row) in self.table.iter().enumerate() {
            shape(format!("table[{i}]"), row.len())?;
            let mut out_row = Vec::with_capacity(n);
            for (j, cell) in row.iter().enumerate() {
                shape(format!("table[{i}][{j}]"), cell.len())?;
                let v = cell
                    .iter()
                    .enumerate()
                    .map(|(k, s)| field.parse(s).map_err(|e| Error::Format(format!("table[{i}][{j}][{k}]: {e}"))))
                    .collect::<Result<Vec<_>>>()?;
                out_row.push(v);
            }
            table.push(out_row);
        }
        let a = Algebra::new(field, n, table)?;
        match &self.basis_names {
            None => Ok(a),
            Some(names) => {
                shape("basis_names".into(), names.len())?;
                a.with_basis_names(names.clone())
            }
        }
    }

    pub fn to_canonical(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// Parses an algebra file. Syntax errors carry line and column.
pub fn parse_algebra(text: &str) -> Result<AnyAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    file.to_algebra()
}

pub fn canonical_algebra(a: &AnyAlgebra) -> String {
    AlgebraFile::from_any(a).to_canonical()
}

/// Lowercase hex SHA-256 of a string.
pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// JSON encodings of library values over a fixed field.
#[derive(Clone, Copy, Debug)]
pub struct Codec<'a, F: Field> {
    field: &'a F,
}

fn err(what: &str, v: &Value) -> Error {
    Error::Format(format!("{what}: unexpected value {v}"))
}

fn get<'v>(v: &'v Value, key: &str) -> Result<&'v Value> {
    v.get(key).ok_or_else(|| Error::Format(format!("missing field {key:?}")))
}

fn get_str<'v>(v: &'v Value, key: &str) -> Result<&'v str> {
    get(v, key)?.as_str().ok_or_else(|| err(key, v))
}

fn get_usize(v: &Value, key: &str) -> Result<usize> {
    get(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| err(key, v))
}

fn boxed<F: Field>(c: &Codec<'_, F>, v: &Value, key: &str) -> Result<Box<SpaceExpr<F>>> {
    Ok(Box::new(c.dec_space_expr(get(v, key)?)?))
}

pub fn status_name(s: DecisionStatus) -> &'static str {
    match s {
        DecisionStatus::Yes => "yes",
        DecisionStatus::No => "no",
        DecisionStatus::Undetermined => "undetermined",
    }
}

pub fn status_from_name(s: &str) -> Result<DecisionStatus> {
    match s {
        "yes" => Ok(DecisionStatus::Yes),
        "no" => Ok(DecisionStatus::No),
        "undetermined" => Ok(DecisionStatus::Undetermined),
        _ => Err(Error::Format(format!("unknown decision status {s:?}"))),
    }
}

fn question_from(v: &Value, key: &str) -> Result<Question> {
    let s = get_str(v, key)?;
    Question::from_name(s).ok_or_else(|| Error::Format(format!("unknown question {s:?}")))
}

fn sidedness_from(v: &Value, key: &str) -> Result<Sidedness> {
    let s = get_str(v, key)?;
    Sidedness::from_name(s).ok_or_else(|| Error::Format(format!("unknown sidedness {s:?}")))
}

impl<'a, F: Field> Codec<'a, F> {
    pub fn new(field: &'a F) -> Self {
        Codec { field }
    }

    pub fn enc_vec(&self, v: &[F::Elem]) -> Value {
        Value::Array(v.iter().map(|x| Value::String(self.field.format(x))).collect())
    }

    pub fn dec_vec(&self, v: &Value) -> Result<Vec<F::Elem>> {
        v.as_array()
            .ok_or_else(|| err("vector", v))?
            .iter()
            .map(|x| self.field.parse(x.as_str().ok_or_else(|| err("scalar", x))?))
            .collect()
    }

    /// `{"ambient": n, "basis": [[...], ...]}` with the canonical basis.
    pub fn enc_subspace(&self, s: &Subspace<F>) -> Value {
        let basis: Vec<Value> = s.basis_vectors().map(|r| self.enc_vec(r)).collect();
        json!({"ambient": s.ambient_dim(), "basis": basis})
    }

    /// Rejects bases that are not in canonical form.
    pub fn dec_subspace(&self, v: &Value) -> Result<Subspace<F>> {
        let n = get_usize(v, "ambient")?;
        let rows = get(v, "basis")?
            .as_array()
            .ok_or_else(|| err("basis", v))?
            .iter()
            .map(|r| self.dec_vec(r))
            .collect::<Result<Vec<_>>>()?;
        let s = Subspace::span(self.field.clone(), n, rows.iter().map(Vec::as_slice))?;
        if s.basis().to_rows() != rows {
            return Err(Error::Format("subspace basis is not in canonical form".into()));
        }
        Ok(s)
    }

    pub fn enc_decision_witness(&self, w: &DecisionWitness<F>) -> Value {
        match w {
            DecisionWitness::TrivialIdeal(i) => json!({"kind": "trivial_ideal", "ideal": self.enc_subspace(i)}),
            DecisionWitness::ZeroProduct(i, j) => {
                json!({"kind": "zero_product", "left": self.enc_subspace(i), "right": self.enc_subspace(j)})
            }
            DecisionWitness::ProperIdeal(i) => json!({"kind": "proper_ideal", "ideal": self.enc_subspace(i)}),
            DecisionWitness::ZeroSquare => json!({"kind": "zero_square"}),
            DecisionWitness::ZeroDimensional => json!({"kind": "zero_dimensional"}),
        }
    }

    pub fn dec_decision_witness(&self, v: &Value) -> Result<DecisionWitness<F>> {
        Ok(match get_str(v, "kind")? {
            "trivial_ideal" => DecisionWitness::TrivialIdeal(self.dec_subspace(get(v, "ideal")?)?),
            "zero_product" => {
                DecisionWitness::ZeroProduct(self.dec_subspace(get(v, "left")?)?, self.dec_subspace(get(v, "right")?)?)
            }
            "proper_ideal" => DecisionWitness::ProperIdeal(self.dec_subspace(get(v, "ideal")?)?),
            "zero_square" => DecisionWitness::ZeroSquare,
            "zero_dimensional" => DecisionWitness::ZeroDimensional,
            _ => return Err(err("decision witness", v)),
        })
    }

    pub fn enc_space_expr(&self, e: &SpaceExpr<F>) -> Value {
        let b = |x: &SpaceExpr<F>| self.enc_space_expr(x);
        match e {
            SpaceExpr::Whole => json!({"op": "whole"}),
            SpaceExpr::Zero => json!({"op": "zero"}),
            SpaceExpr::Given { label, space } => {
                json!({"op": "given", "label": label, "space": self.enc_subspace(space)})
            }
            SpaceExpr::Nucleus => json!({"op": "nucleus"}),
            SpaceExpr::CommutativeCenter => json!({"op": "commutative_center"}),
            SpaceExpr::Center => json!({"op": "center"}),
            SpaceExpr::Associators => json!({"op": "associators"}),
            SpaceExpr::AssociatorIdeal => json!({"op": "associator_ideal"}),
            SpaceExpr::Sum(l, r) => json!({"op": "sum", "left": b(l), "right": b(r)}),
            SpaceExpr::Product(l, r) => json!({"op": "product", "left": b(l), "right": b(r)}),
            SpaceExpr::Associator(x, y, z) => json!({"op": "associator", "x": b(x), "y": b(y), "z": b(z)}),
            SpaceExpr::TimesVector(u, x) => json!({"op": "times_vector", "space": b(u), "vector": self.enc_vec(x)}),
            SpaceExpr::VectorTimes(x, u) => json!({"op": "vector_times", "vector": self.enc_vec(x), "space": b(u)}),
            SpaceExpr::AnnLeft(m) => json!({"op": "ann_left", "space": b(m)}),
            SpaceExpr::AnnRight(m) => json!({"op": "ann_right", "space": b(m)}),
            SpaceExpr::RightStabilizer(l) => json!({"op": "right_stabilizer", "space": b(l)}),
        }
    }

    pub fn dec_space_expr(&self, v: &Value) -> Result<SpaceExpr<F>> {
        Ok(match get_str(v, "op")? {
            "whole" => SpaceExpr::Whole,
            "zero" => SpaceExpr::Zero,
            "given" => SpaceExpr::Given {
                label: get_str(v, "label")?.to_string(),
                space: self.dec_subspace(get(v, "space")?)?,
            },
            "nucleus" => SpaceExpr::Nucleus,
            "commutative_center" => SpaceExpr::CommutativeCenter,
            "center" => SpaceExpr::Center,
            "associators" => SpaceExpr::Associators,
            "associator_ideal" => SpaceExpr::AssociatorIdeal,
            "sum" => SpaceExpr::Sum(boxed(self, v, "left")?, boxed(self, v, "right")?),
            "product" => SpaceExpr::Product(boxed(self, v, "left")?, boxed(self, v, "right")?),
            "associator" => SpaceExpr::Associator(boxed(self, v, "x")?, boxed(self, v, "y")?, boxed(self, v, "z")?),
            "times_vector" => SpaceExpr::TimesVector(boxed(self, v, "space")?, self.dec_vec(get(v, "vector")?)?),
            "vector_times" => SpaceExpr::VectorTimes(self.dec_vec(get(v, "vector")?)?, boxed(self, v, "space")?),
            "ann_left" => SpaceExpr::AnnLeft(boxed(self, v, "space")?),
            "ann_right" => SpaceExpr::AnnRight(boxed(self, v, "space")?),
            "right_stabilizer" => SpaceExpr::RightStabilizer(boxed(self, v, "space")?),
            _ => return Err(err("space expression", v)),
        })
    }

    pub fn enc_algebra_expr(&self, e: &AlgebraExpr<F>) -> Value {
        match e {
            AlgebraExpr::Whole => json!({"op": "whole"}),
            AlgebraExpr::Sub(s) => json!({"op": "sub", "space": self.enc_space_expr(s)}),
            AlgebraExpr::Quotient(s) => json!({"op": "quotient", "space": self.enc_space_expr(s)}),
            AlgebraExpr::SubQuotient { sub, by } => {
                json!({"op": "sub_quotient", "sub": self.enc_space_expr(sub), "by": self.enc_space_expr(by)})
            }
        }
    }

    pub fn dec_algebra_expr(&self, v: &Value) -> Result<AlgebraExpr<F>> {
        Ok(match get_str(v, "op")? {
            "whole" => AlgebraExpr::Whole,
            "sub" => AlgebraExpr::Sub(self.dec_space_expr(get(v, "space")?)?),
            "quotient" => AlgebraExpr::Quotient(self.dec_space_expr(get(v, "space")?)?),
            "sub_quotient" => AlgebraExpr::SubQuotient {
                sub: self.dec_space_expr(get(v, "sub")?)?,
                by: self.dec_space_expr(get(v, "by")?)?,
            },
            _ => return Err(err("algebra expression", v)),
        })
    }

    pub fn enc_fact(&self, f: &Fact<F>) -> Value {
        let s = |x: &SpaceExpr<F>| self.enc_space_expr(x);
        match f {
            Fact::Novikov => json!({"fact": "novikov"}),
            Fact::Ideal { space, sidedness, parent } => {
                json!({"fact": "ideal", "space": s(space), "sidedness": sidedness.name(), "parent": s(parent)})
            }
            Fact::SquareZero(x) => json!({"fact": "square_zero", "space": s(x)}),
            Fact::Nonzero(x) => json!({"fact": "nonzero", "space": s(x)}),
            Fact::Commutative(x) => json!({"fact": "commutative", "space": s(x)}),
            Fact::Idempotent(x) => json!({"fact": "idempotent", "space": s(x)}),
            Fact::MinimalIdeal(x) => json!({"fact": "minimal_ideal", "space": s(x)}),
            Fact::BaerStage { index, space } => json!({"fact": "baer_stage", "index": index, "space": s(space)}),
            Fact::Decided { algebra, question, status } => json!({
                "fact": "decided",
                "algebra": self.enc_algebra_expr(algebra),
                "question": question.name(),
                "status": status_name(*status),
            }),
        }
    }

    pub fn dec_fact(&self, v: &Value) -> Result<Fact<F>> {
        let sp = |k: &str| -> Result<SpaceExpr<F>> { self.dec_space_expr(get(v, k)?) };
        Ok(match get_str(v, "fact")? {
            "novikov" => Fact::Novikov,
            "ideal" => {
                Fact::Ideal { space: sp("space")?, sidedness: sidedness_from(v, "sidedness")?, parent: sp("parent")? }
            }
            "square_zero" => Fact::SquareZero(sp("space")?),
            "nonzero" => Fact::Nonzero(sp("space")?),
            "commutative" => Fact::Commutative(sp("space")?),
            "idempotent" => Fact::Idempotent(sp("space")?),
            "minimal_ideal" => Fact::MinimalIdeal(sp("space")?),
            "baer_stage" => Fact::BaerStage { index: get_usize(v, "index")?, space: sp("space")? },
            "decided" => Fact::Decided {
                algebra: self.dec_algebra_expr(get(v, "algebra")?)?,
                question: question_from(v, "question")?,
                status: status_from_name(get_str(v, "status")?)?,
            },
            _ => return Err(err("fact", v)),
        })
    }

    pub fn enc_violation(&self, x: &Violation<F>) -> Value {
        let s = |e: &SpaceExpr<F>| self.enc_space_expr(e);
        match x {
            Violation::Identity { identity, indices, nucleus_element } => json!({
                "violation": "identity",
                "identity": identity.name(),
                "indices": indices,
                "nucleus_element": nucleus_element.as_ref().map(|v| self.enc_vec(v)),
            }),
            Violation::Escapes { space, target, element } => json!({
                "violation": "escapes",
                "space": s(space),
                "target": s(target),
                "element": self.enc_vec(element),
            }),
            Violation::NotIdeal { space, sidedness, parent } => json!({
                "violation": "not_ideal",
                "space": s(space),
                "sidedness": sidedness.name(),
                "parent": s(parent),
            }),
            Violation::Differ { left, right } => json!({"violation": "differ", "left": s(left), "right": s(right)}),
            Violation::Nonzero(e) => json!({"violation": "nonzero", "space": s(e)}),
            Violation::Refuted { algebra, question, witness } => json!({
                "violation": "refuted",
                "algebra": self.enc_algebra_expr(algebra),
                "question": question.name(),
                "witness": self.enc_decision_witness(witness),
            }),
        }
    }

    pub fn dec_violation(&self, v: &Value) -> Result<Violation<F>> {
        let sp = |k: &str| -> Result<SpaceExpr<F>> { self.dec_space_expr(get(v, k)?) };
        Ok(match get_str(v, "violation")? {
            "identity" => {
                let name = get_str(v, "identity")?;
                let identity =
                    IdentityId::from_name(name).ok_or_else(|| Error::Format(format!("unknown identity {name:?}")))?;
                let indices = get(v, "indices")?
                    .as_array()
                    .ok_or_else(|| err("indices", v))?
                    .iter()
                    .map(|i| i.as_u64().map(|i| i as usize).ok_or_else(|| err("index", i)))
                    .collect::<Result<Vec<_>>>()?;
                let nucleus_element = match v.get("nucleus_element") {
                    None | Some(Value::Null) => None,
                    Some(x) => Some(self.dec_vec(x)?),
                };
                Violation::Identity { identity, indices, nucleus_element }
            }
            "escapes" => Violation::Escapes {
                space: sp("space")?,
                target: sp("target")?,
                element: self.dec_vec(get(v, "element")?)?,
            },
            "not_ideal" => Violation::NotIdeal {
                space: sp("space")?,
                sidedness: sidedness_from(v, "sidedness")?,
                parent: sp("parent")?,
            },
            "differ" => Violation::Differ { left: sp("left")?, right: sp("right")? },
            "nonzero" => Violation::Nonzero(sp("space")?),
            "refuted" => Violation::Refuted {
                algebra: self.dec_algebra_expr(get(v, "algebra")?)?,
                question: question_from(v, "question")?,
                witness: self.dec_decision_witness(get(v, "witness")?)?,
            },
            _ => return Err(err("violation", v)),
        })
    }

    pub fn enc_failure(&self, f: &Failure<F>) -> Value {
        let hyps: Vec<Value> = f.hypotheses.iter().map(|h| self.enc_fact(h)).collect();
        json!({"hypotheses": hyps, "violation": self.enc_violation(&f.violation)})
    }

    pub fn dec_failure(&self, v: &Value) -> Result<Failure<F>> {
        let hypotheses = get(v, "hypotheses")?
            .as_array()
            .ok_or_else(|| err("hypotheses", v))?
            .iter()
            .map(|h| self.dec_fact(h))
            .collect::<Result<Vec<_>>>()?;
        Ok(Failure { hypotheses, violation: self.dec_violation(get(v, "violation")?)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{dual_numbers_gd, truncated_poly_algebra};

    #[test]
    fn canonical_round_trip() {
        let a: AnyAlgebra = truncated_poly_algebra(3, 1).unwrap().into();
        let text = canonical_algebra(&a);
        let b = parse_algebra(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(canonical_algebra(&b), text);
        assert!(text.starts_with(r#"{"format_version":1,"field":{"GFp":3},"dim":3,"table":"#));
    }

    #[test]
    fn rational_scalars_are_strings_in_lowest_terms() {
        let text = r#"{"format_version":1,"field":"Q","dim":1,"table":[[["2/4"]]]}"#;
        let a = parse_algebra(text).unwrap();
        assert_eq!(canonical_algebra(&a), r#"{"format_version":1,"field":"Q","dim":1,"table":[[["1/2"]]]}"#);
        let q: AnyAlgebra = dual_numbers_gd(Rationals).into();
        assert_eq!(parse_algebra(&canonical_algebra(&q)).unwrap(), q);
    }

    #[test]
    fn errors_name_line_or_field() {
        let bad_scalar = r#"{"format_version":1,"field":"Q","dim":1,"table":[[["x"]]]}"#;
        let e = parse_algebra(bad_scalar).unwrap_err().to_string();
        assert!(e.contains("table[0][0][0]"), "{e}");
        let bad_shape = r#"{"format_version":1,"field":"Q","dim":2,"table":[[["1"]]]}"#;
        assert!(parse_algebra(bad_shape).unwrap_err().to_string().contains("table"));
        let syntax = "{\n\"format_version\": 1,\n\"field\": \"Q\",\n\"dim\": 1\n\"table\": []}";
        assert!(parse_algebra(syntax).unwrap_err().to_string().contains("line 5"));
        let composite = r#"{"format_version":1,"field":{"GFp":4},"dim":0,"table":[]}"#;
        assert!(parse_algebra(composite).is_err());
        let extension = r#"{"format_version":1,"field":"GF(4)","dim":0,"table":[]}"#;
        assert!(parse_algebra(extension).is_err());
    }

    #[test]
    fn failure_codec_round_trip() {
        let gf3 = PrimeField::new(3).unwrap();
        let c = Codec::new(&gf3);
        let s = Subspace::span(gf3, 2, [[1u32, 2].as_slice()]).unwrap();
        let f = Failure {
            hypotheses: vec![
                Fact::Novikov,
                Fact::Decided {
                    algebra: AlgebraExpr::Sub(SpaceExpr::given("I", &s)),
                    question: Question::Prime,
                    status: DecisionStatus::Yes,
                },
            ],
            violation: Violation::Escapes {
                space: SpaceExpr::product(SpaceExpr::Whole, SpaceExpr::given("V", &s)),
                target: SpaceExpr::Nucleus,
                element: vec![1, 2],
            },
        };
        let v = c.enc_failure(&f);
        assert_eq!(c.dec_failure(&v).unwrap(), f);
    }

    #[test]
    fn non_canonical_subspace_is_rejected() {
        let gf3 = PrimeField::new(3).unwrap();
        let c = Codec::new(&gf3);
        let v = json!({"ambient": 2, "basis": [["2", "1"]]});
        assert!(c.dec_subspace(&v).is_err());
    }
}
