//! Machine-readable reports and their independent re-verification.
//!
//! A report file is `{"header": {...}, "body": {...}}`. The header holds the
//! wall-clock time and is ignored by every comparison; the body is
//! deterministic for fixed inputs and flags, and its canonical serialization
//! is compact JSON with sorted object keys.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{check_identity, defect_at, is_novikov, Algebra, AnyAlgebra, IdentityId, IdentityReport};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::format::{canonical_algebra, sha256_hex, status_from_name, status_name, AlgebraFile, Codec};
use crate::lattice::{
    baer_radical_with, decide, decide_by_enumeration, enumerate_ideals_of, minimal_ideals_with, BaerChain,
    DecideOptions, Decision, DecisionStatus, Method, MinimalIdeals, Question,
};
use crate::linalg::{is_zero_vector, Subspace};
use crate::structure::{is_ideal, Sidedness};
use crate::theorems::{AlgebraExpr, ClaimCoverage, ClaimId, Coverage, Fact, SpaceExpr, Status, Verdict};

pub const TOOL_NAME: &str = "novikov";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    /// Seconds since the Unix epoch.
    pub generated_at: u64,
}

impl Header {
    pub fn now() -> Self {
        let secs = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        Header { generated_at: secs }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Instance {
    pub name: String,
    /// SHA-256 of the canonical algebra file.
    pub input_digest: String,
    pub algebra: AlgebraFile,
    pub results: Vec<Value>,
}

impl Instance {
    pub fn new(name: impl Into<String>, a: &AnyAlgebra) -> Self {
        Instance {
            name: name.into(),
            input_digest: sha256_hex(&canonical_algebra(a)),
            algebra: AlgebraFile::from_any(a),
            results: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportBody {
    pub tool: String,
    pub tool_version: String,
    pub command: String,
    pub seed: u64,
    pub options: Value,
    pub instances: Vec<Instance>,
    /// Per-claim tallies, present for theorem runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coverage: Option<Value>,
}

impl ReportBody {
    pub fn new(command: impl Into<String>, seed: u64, options: Value) -> Self {
        ReportBody {
            tool: TOOL_NAME.into(),
            tool_version: TOOL_VERSION.into(),
            command: command.into(),
            seed,
            options,
            instances: Vec::new(),
            coverage: None,
        }
    }

    /// Compact JSON with sorted keys; byte-identical for identical runs.
    pub fn to_canonical(&self) -> String {
        let v = serde_json::to_value(self).expect("plain data serializes");
        serde_json::to_string(&v).expect("plain data serializes")
    }

    pub fn digest(&self) -> String {
        sha256_hex(&self.to_canonical())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub header: Header,
    pub body: ReportBody,
}

impl ReportFile {
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("plain data serializes");
        serde_json::to_string(&v).expect("plain data serializes")
    }
}

/// Reads a report file, or a bare body as printed by `--format canonical`.
pub fn parse_report(text: &str) -> Result<ReportBody> {
    let v: Value = serde_json::from_str(text)?;
    let body = match v.get("body") {
        Some(b) if v.get("header").is_some() => b.clone(),
        _ => v,
    };
    Ok(serde_json::from_value(body)?)
}

fn method_from(v: &Value) -> Result<Method> {
    let s = v.get("method").and_then(Value::as_str).unwrap_or_default();
    Method::from_name(s).ok_or_else(|| Error::Format(format!("unknown method {s:?}")))
}

/// Encoders for the result items of one instance.
pub struct Items<'a, F: Field> {
    codec: Codec<'a, F>,
}

impl<'a, F: Field> Items<'a, F> {
    pub fn new(field: &'a F) -> Self {
        Items { codec: Codec::new(field) }
    }

    pub fn novikov(&self, value: bool) -> Value {
        json!({"kind": "novikov", "value": value})
    }

    pub fn identity(&self, r: &IdentityReport<F>) -> Value {
        let witness = r.witness.as_ref().map(|w| {
            json!({
                "indices": w.indices,
                "nucleus_element": w.nucleus_element.as_ref().map(|v| self.codec.enc_vec(v)),
                "defect": self.codec.enc_vec(&w.defect),
            })
        });
        json!({"kind": "identity", "identity": r.identity.name(), "holds": r.holds, "witness": witness})
    }

    pub fn subspace(&self, name: &str, expr: &SpaceExpr<F>, space: &Subspace<F>) -> Value {
        json!({
            "kind": "subspace",
            "name": name,
            "expr": self.codec.enc_space_expr(expr),
            "label": expr.to_string(),
            "space": self.codec.enc_subspace(space),
        })
    }

    pub fn decision(&self, algebra: &AlgebraExpr<F>, d: &Decision<F>) -> Value {
        json!({
            "kind": "decision",
            "algebra": self.codec.enc_algebra_expr(algebra),
            "label": algebra.to_string(),
            "question": d.question.name(),
            "status": status_name(d.status),
            "method": d.method.name(),
            "witness": d.witness.as_ref().map(|w| self.codec.enc_decision_witness(w)),
            "note": d.note,
        })
    }

    pub fn baer_chain(&self, c: &BaerChain<F>) -> Value {
        let stages: Vec<Value> = c.stages.iter().map(|s| self.codec.enc_subspace(s.space())).collect();
        json!({"kind": "baer_chain", "certified": c.certified, "method": c.method.name(), "stages": stages})
    }

    pub fn ideals(&self, sidedness: Sidedness, method: Method, exhaustive: bool, ideals: &[Subspace<F>]) -> Value {
        let list: Vec<Value> = ideals.iter().map(|s| self.codec.enc_subspace(s)).collect();
        json!({
            "kind": "ideals",
            "sidedness": sidedness.name(),
            "method": method.name(),
            "exhaustive": exhaustive,
            "ideals": list,
        })
    }

    pub fn minimal_ideals(&self, m: &MinimalIdeals<F>) -> Value {
        let list: Vec<Value> = m.ideals.iter().map(|s| self.codec.enc_subspace(s.space())).collect();
        json!({"kind": "minimal_ideals", "method": m.method.name(), "exhaustive": m.exhaustive, "ideals": list})
    }

    pub fn verdict(&self, v: &Verdict<F>) -> Value {
        let (reason, failure) = match &v.status {
            Status::Holds => (None, None),
            Status::Fails(f) => (Some(f.to_string()), Some(self.codec.enc_failure(f))),
            Status::Vacuous(r) | Status::Undetermined(r) => (Some(r.clone()), None),
        };
        json!({
            "kind": "verdict",
            "claim": v.claim.name(),
            "status": v.status.name(),
            "checked": v.checked,
            "context": v.context,
            "reason": reason,
            "failure": failure,
        })
    }
}

/// Coverage tallies as stored in a report.
pub fn coverage_json(c: &Coverage) -> Value {
    let map: serde_json::Map<String, Value> =
        c.0.iter()
            .map(|(claim, t)| {
                let v = json!({
                    "covered": t.covered,
                    "vacuous": t.vacuous,
                    "fails": t.fails,
                    "undetermined": t.undetermined,
                    "objects": t.objects,
                });
                (claim.name().to_string(), v)
            })
            .collect();
    Value::Object(map)
}

/// Theorem coverage overall and per field.
pub fn coverage_section(total: &Coverage, by_field: &BTreeMap<String, Coverage>) -> Value {
    let fields: serde_json::Map<String, Value> = by_field.iter().map(|(k, c)| (k.clone(), coverage_json(c))).collect();
    json!({"total": coverage_json(total), "by_field": fields})
}

fn coverage_from_verdicts(body: &ReportBody) -> (Coverage, BTreeMap<String, Coverage>) {
    let mut total = Coverage::new();
    let mut by_field: BTreeMap<String, Coverage> = BTreeMap::new();
    for inst in &body.instances {
        let field = inst.algebra.field.to_string();
        for r in inst.results.iter().filter(|r| r["kind"] == "verdict") {
            let Some(claim) = r["claim"].as_str().and_then(ClaimId::from_name) else { continue };
            let checked = r["checked"].as_u64().unwrap_or(0) as usize;
            let status = r["status"].as_str().unwrap_or_default();
            for c in [&mut total, by_field.entry(field.clone()).or_default()] {
                let t: &mut ClaimCoverage = c.0.entry(claim).or_default();
                match status {
                    "holds" if checked > 0 => t.covered += 1,
                    "holds" | "vacuous" => t.vacuous += 1,
                    "fails" => t.fails += 1,
                    _ => t.undetermined += 1,
                }
                t.objects += checked;
            }
        }
    }
    (total, by_field)
}

/// Outcome of re-verifying a report.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyOutcome {
    /// Items whose content was re-checked.
    pub checked: usize,
    /// Items carrying nothing checkable (undetermined decisions, holding verdicts).
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl VerifyOutcome {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Re-verifies every witness and recomputable result of a report from the
/// embedded algebras alone.
pub fn verify_report(body: &ReportBody) -> Result<VerifyOutcome> {
    let mut out = VerifyOutcome::default();
    for inst in &body.instances {
        let a = inst.algebra.to_algebra()?;
        let digest = sha256_hex(&canonical_algebra(&a));
        if digest != inst.input_digest {
            out.failures.push(format!("{}: input digest mismatch", inst.name));
        }
        for (k, item) in inst.results.iter().enumerate() {
            let verdict = crate::with_algebra!(&a, x => verify_item(x, item));
            match verdict {
                Ok(Check::Passed) => out.checked += 1,
                Ok(Check::Skipped) => out.skipped += 1,
                Ok(Check::Failed(msg)) => out.failures.push(format!("{}: results[{k}]: {msg}", inst.name)),
                Err(e) => out.failures.push(format!("{}: results[{k}]: {e}", inst.name)),
            }
        }
    }
    if let Some(stored) = &body.coverage {
        let (total, by_field) = coverage_from_verdicts(body);
        if *stored != coverage_section(&total, &by_field) {
            out.failures.push("coverage does not match the listed verdicts".into());
        } else {
            out.checked += 1;
        }
    }
    Ok(out)
}

enum Check {
    Passed,
    Skipped,
    Failed(String),
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Check::Passed
    } else {
        Check::Failed(msg())
    }
}

fn field_of<'v>(v: &'v Value, key: &str) -> Result<&'v Value> {
    v.get(key).ok_or_else(|| Error::Format(format!("missing field {key:?}")))
}

fn same_set<F: Field>(x: &[Subspace<F>], y: &[Subspace<F>]) -> bool {
    let x: HashSet<&Subspace<F>> = x.iter().collect();
    let y: HashSet<&Subspace<F>> = y.iter().collect();
    x == y
}

fn verify_item<F: Field>(a: &Algebra<F>, item: &Value) -> Result<Check> {
    let c = Codec::new(a.field());
    let kind = field_of(item, "kind")?.as_str().unwrap_or_default();
    let bool_of = |key: &str| -> Result<bool> {
        field_of(item, key)?.as_bool().ok_or_else(|| Error::Format(format!("{key} is not a boolean")))
    };
    let spaces = |key: &str| -> Result<Vec<Subspace<F>>> {
        field_of(item, key)?
            .as_array()
            .ok_or_else(|| Error::Format(format!("{key} is not a list")))?
            .iter()
            .map(|s| c.dec_subspace(s))
            .collect()
    };
    Ok(match kind {
        "novikov" => {
            let claimed = bool_of("value")?;
            require(is_novikov(a) == claimed, || format!("novikov recomputes to {}", !claimed))
        }
        "identity" => {
            let name = field_of(item, "identity")?.as_str().unwrap_or_default();
            let id = IdentityId::from_name(name).ok_or_else(|| Error::Format(format!("unknown identity {name:?}")))?;
            let holds = bool_of("holds")?;
            match field_of(item, "witness")? {
                Value::Null => require(holds && check_identity(a, id).holds, || format!("{name} does not hold")),
                w => {
                    let indices: Vec<usize> = serde_json::from_value(field_of(w, "indices")?.clone())?;
                    let nucleus_element = match w.get("nucleus_element") {
                        None | Some(Value::Null) => None,
                        Some(v) => Some(c.dec_vec(v)?),
                    };
                    if let Some(nv) = &nucleus_element {
                        let nucleus = crate::structure::nucleus(a);
                        if !nucleus.contains(nv)? {
                            return Ok(Check::Failed("witness element is not in the nucleus".into()));
                        }
                    }
                    let defect = defect_at(a, id, &indices, nucleus_element.as_deref())?;
                    let stored = c.dec_vec(field_of(w, "defect")?)?;
                    require(!holds && defect == stored && !is_zero_vector(a.field(), &defect), || {
                        format!("{name} witness at {indices:?} does not reproduce a nonzero defect")
                    })
                }
            }
        }
        "subspace" => {
            let expr = c.dec_space_expr(field_of(item, "expr")?)?;
            let space = c.dec_subspace(field_of(item, "space")?)?;
            require(expr.eval(a)? == space, || format!("{expr} recomputes to a different subspace"))
        }
        "decision" => verify_decision(a, &c, item)?,
        "baer_chain" => {
            let stages = spaces("stages")?;
            let chain_ok = stages.first().is_some_and(Subspace::is_zero)
                && stages.windows(2).all(|w| w[0].dim() < w[1].dim() && w[0].leq(&w[1]).unwrap_or(false))
                && stages.iter().all(|s| s.ambient_dim() == a.dim() && is_ideal(a, s, Sidedness::TwoSided));
            if !chain_ok {
                return Ok(Check::Failed("stages are not an increasing chain of ideals from 0".into()));
            }
            if bool_of("certified")? {
                let fresh = baer_radical_with(a, &DecideOptions::default())?;
                let fresh: Vec<Subspace<F>> = fresh.stages.into_iter().map(|s| s.into_space()).collect();
                require(fresh == stages, || "certified chain differs from a fresh computation".into())
            } else {
                Check::Passed
            }
        }
        "ideals" => {
            let side_name = field_of(item, "sidedness")?.as_str().unwrap_or_default();
            let side = Sidedness::from_name(side_name)
                .ok_or_else(|| Error::Format(format!("unknown sidedness {side_name:?}")))?;
            let list = spaces("ideals")?;
            if let Some(bad) = list.iter().find(|s| s.ambient_dim() != a.dim() || !is_ideal(a, s, side)) {
                return Ok(Check::Failed(format!("{bad:?} is not a {side_name} ideal")));
            }
            if bool_of("exhaustive")? {
                let fresh: Vec<Subspace<F>> =
                    enumerate_ideals_of(a, side)?.into_iter().map(|s| s.into_space()).collect();
                require(same_set(&fresh, &list), || "exhaustive ideal list differs from a fresh enumeration".into())
            } else {
                Check::Passed
            }
        }
        "minimal_ideals" => {
            let list = spaces("ideals")?;
            if let Some(bad) =
                list.iter().find(|s| s.is_zero() || s.ambient_dim() != a.dim() || !is_ideal(a, s, Sidedness::TwoSided))
            {
                return Ok(Check::Failed(format!("{bad:?} is not a nonzero ideal")));
            }
            if bool_of("exhaustive")? {
                for s in &list {
                    if !Fact::MinimalIdeal(SpaceExpr::given("M", s)).holds(a)? {
                        return Ok(Check::Failed(format!("{s:?} is not minimal")));
                    }
                }
                let fresh: Vec<Subspace<F>> = minimal_ideals_with(a, &DecideOptions::default())?
                    .ideals
                    .into_iter()
                    .map(|s| s.into_space())
                    .collect();
                require(same_set(&fresh, &list), || "minimal ideal list differs from a fresh scan".into())
            } else {
                Check::Passed
            }
        }
        "verdict" => match field_of(item, "status")?.as_str().unwrap_or_default() {
            "fails" => {
                let f = c.dec_failure(field_of(item, "failure")?)?;
                require(f.verify(a)?, || format!("failure evidence does not re-verify: {f}"))
            }
            "holds" | "vacuous" | "undetermined" => Check::Skipped,
            s => return Err(Error::Format(format!("unknown verdict status {s:?}"))),
        },
        _ => return Err(Error::Format(format!("unknown result kind {kind:?}"))),
    })
}

fn verify_decision<F: Field>(a: &Algebra<F>, c: &Codec<'_, F>, item: &Value) -> Result<Check> {
    let target = c.dec_algebra_expr(field_of(item, "algebra")?)?;
    let b = target.build(a)?;
    let qname = field_of(item, "question")?.as_str().unwrap_or_default();
    let question = Question::from_name(qname).ok_or_else(|| Error::Format(format!("unknown question {qname:?}")))?;
    let status = status_from_name(field_of(item, "status")?.as_str().unwrap_or_default())?;
    let method = method_from(item)?;
    Ok(match status {
        DecisionStatus::No => {
            let w = match field_of(item, "witness")? {
                Value::Null => return Ok(Check::Failed("No without a witness".into())),
                w => c.dec_decision_witness(w)?,
            };
            require(w.refutes(question) && w.verify(&b), || format!("witness does not refute {question} for {target}"))
        }
        DecisionStatus::Yes => {
            let fresh = match method {
                Method::SubspaceEnumeration => decide_by_enumeration(&b, question)?,
                _ => decide(&b, question, &DecideOptions::default())?,
            };
            require(fresh.is_yes(), || format!("{question} for {target} does not recompute to Yes"))
        }
        DecisionStatus::Undetermined => Check::Skipped,
    })
}

fn status_word(s: &str) -> &str {
    match s {
        "yes" => "Yes",
        "no" => "No",
        "undetermined" => "Undetermined",
        "holds" => "Holds",
        "fails" => "Fails",
        "vacuous" => "Vacuous",
        other => other,
    }
}

fn render_space(v: &Value) -> String {
    let rows: Vec<String> = v["basis"]
        .as_array()
        .map(|b| {
            b.iter()
                .map(|r| {
                    let cells: Vec<&str> = r.as_array().into_iter().flatten().filter_map(Value::as_str).collect();
                    format!("[{}]", cells.join(", "))
                })
                .collect()
        })
        .unwrap_or_default();
    let dim = rows.len();
    if dim == 0 {
        "dim 0".into()
    } else {
        format!("dim {dim}, basis {}", rows.join(" "))
    }
}

fn render_witness(w: &Value) -> String {
    match w["kind"].as_str().unwrap_or_default() {
        "trivial_ideal" => format!("trivial ideal ({})", render_space(&w["ideal"])),
        "zero_product" => {
            format!("ideals with zero product ({}) and ({})", render_space(&w["left"]), render_space(&w["right"]))
        }
        "proper_ideal" => format!("proper ideal ({})", render_space(&w["ideal"])),
        "zero_square" => "A² = 0".into(),
        "zero_dimensional" => "dim A = 0".into(),
        other => other.into(),
    }
}

/// One or more text lines for a result item.
pub fn render_item(item: &Value) -> String {
    let s = |k: &str| item[k].as_str().unwrap_or_default();
    match s("kind") {
        "novikov" => format!("novikov: {}", item["value"]),
        "identity" => match &item["witness"] {
            Value::Null => format!("{}: holds", s("identity")),
            w => {
                let defect: Vec<&str> =
                    w["defect"].as_array().into_iter().flatten().filter_map(Value::as_str).collect();
                let mut line = format!("{}: fails at basis indices {}", s("identity"), w["indices"]);
                if let Some(nv) = w["nucleus_element"].as_array() {
                    let nv: Vec<&str> = nv.iter().filter_map(Value::as_str).collect();
                    let _ = write!(line, " with nucleus element [{}]", nv.join(", "));
                }
                let _ = write!(line, ", defect [{}]", defect.join(", "));
                line
            }
        },
        "subspace" => format!("{} {}: {}", s("name"), s("label"), render_space(&item["space"])),
        "decision" => {
            let mut line = format!("{} {}: {} ({})", s("question"), s("label"), status_word(s("status")), s("method"));
            if !item["witness"].is_null() {
                let _ = write!(line, "; witness: {}", render_witness(&item["witness"]));
            } else if !s("note").is_empty() {
                let _ = write!(line, "; {}", s("note"));
            }
            line
        }
        "baer_chain" => {
            let stages = item["stages"].as_array().cloned().unwrap_or_default();
            let mut out = format!(
                "baer chain ({}, {}): {} stage(s)",
                s("method"),
                if item["certified"] == true { "certified" } else { "heuristic" },
                stages.len()
            );
            for (i, st) in stages.iter().enumerate() {
                let _ = write!(out, "\n  B_{i}: {}", render_space(st));
            }
            out
        }
        "ideals" | "minimal_ideals" => {
            let list = item["ideals"].as_array().cloned().unwrap_or_default();
            let what =
                if s("kind") == "ideals" { format!("{} ideals", s("sidedness")) } else { "minimal ideals".into() };
            let mut out = format!(
                "{what} ({}, {}): {}",
                s("method"),
                if item["exhaustive"] == true { "exhaustive" } else { "partial" },
                list.len()
            );
            for sp in &list {
                let _ = write!(out, "\n  {}", render_space(sp));
            }
            out
        }
        "verdict" => {
            let mut line = format!("{}: {} (checked {})", s("claim"), status_word(s("status")), item["checked"]);
            if let Some(r) = item["reason"].as_str() {
                let _ = write!(line, "; {r}");
            }
            line
        }
        other => format!("{other}: {item}"),
    }
}

/// Human-readable rendering of a whole report body.
pub fn render_body(body: &ReportBody) -> String {
    let mut out = String::new();
    for inst in body.instances.iter().filter(|i| !i.results.is_empty()) {
        let _ = writeln!(out, "== {} ({}, dim {})", inst.name, inst.algebra.field, inst.algebra.dim);
        for r in &inst.results {
            let _ = writeln!(out, "{}", render_item(r));
        }
    }
    if let Some(cov) = body.coverage.as_ref().and_then(|c| c["total"].as_object()) {
        let _ = writeln!(out, "== coverage (covered / vacuous / undetermined / fails)");
        for claim in ClaimId::ALL {
            if let Some(t) = cov.get(claim.name()) {
                let _ = writeln!(
                    out,
                    "{:<18} {:>4} {:>4} {:>4} {:>4}",
                    claim.name(),
                    t["covered"].as_u64().unwrap_or(0),
                    t["vacuous"].as_u64().unwrap_or(0),
                    t["undetermined"].as_u64().unwrap_or(0),
                    t["fails"].as_u64().unwrap_or(0)
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::generators::truncated_polynomial;
    use crate::lattice::is_semiprime;

    fn gf2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn decision_items_verify_and_tampering_is_caught() {
        let a = Algebra::zero_product(gf2(), 2);
        let any: AnyAlgebra = a.clone().into();
        let items = Items::new(a.field());
        let d = is_semiprime(&a).unwrap();
        let mut body = ReportBody::new("decide", 0, json!({}));
        let mut inst = Instance::new("zero", &any);
        inst.results.push(items.decision(&AlgebraExpr::Whole, &d));
        body.instances.push(inst);
        let text = body.to_canonical();
        let parsed = parse_report(&text).unwrap();
        assert_eq!(parsed, body);
        assert!(verify_report(&parsed).unwrap().ok());

        let tampered = text.replace(r#""status":"no""#, r#""status":"yes""#);
        assert!(!verify_report(&parse_report(&tampered).unwrap()).unwrap().ok());
    }

    #[test]
    fn digest_mismatch_is_reported() {
        let a: AnyAlgebra = truncated_polynomial(gf2(), 2).into();
        let mut body = ReportBody::new("check", 0, json!({}));
        let mut inst = Instance::new("t", &a);
        inst.input_digest = "00".into();
        inst.results.push(json!({"kind": "novikov", "value": true}));
        body.instances.push(inst);
        let out = verify_report(&body).unwrap();
        assert_eq!(out.failures.len(), 1);
        assert_eq!(out.checked, 1);
    }

    #[test]
    fn report_file_round_trips_with_header() {
        let body = ReportBody::new("check", 7, json!({"oracle": false}));
        let file = ReportFile { header: Header::now(), body: body.clone() };
        assert_eq!(parse_report(&file.to_json()).unwrap(), body);
    }
}
