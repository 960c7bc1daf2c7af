//! The `novikov` command-line front end.
//!
//! Exit codes: 0 when every check holds and every requested decision was
//! made, 1 when a checked identity or claim fails (the witness is in the
//! output), 2 on input errors and exceeded caps, 3 when a requested
//! determination came back undetermined.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{check_identity, check_identity_with_nucleus, is_novikov, Algebra, AnyAlgebra, IdentityId};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor, MAX_PRIME};
use crate::format::{canonical_algebra, parse_algebra, sha256_hex};
use crate::generators::{corpus, shipped_corpus, CorpusEntry, CorpusProfile};
use crate::lattice::{
    baer_radical_with, decide, decide_by_enumeration, enumerate_ideals_of, minimal_elements, within_enumeration_caps,
    DecideOptions, DecisionStatus, Method, MinimalIdeals, Question,
};
use crate::linalg::Subspace;
use crate::report::{
    coverage_section, parse_report, render_body, verify_report, Header, Instance, Items, ReportBody, ReportFile,
};
use crate::structure::{nucleus, squares_to_zero, IdealHandle, Sidedness};
use crate::theorems::{run_suite, AlgebraExpr, Coverage, SpaceExpr, SuiteOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "novikov", version, about = "Exact structure theory for finite-dimensional Novikov algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Largest prime accepted for GF(p) inputs.
    #[arg(long, global = true, default_value_t = MAX_PRIME)]
    pub field_cap: u32,
    /// Largest algebra dimension accepted.
    #[arg(long, global = true, default_value_t = 64)]
    pub dim_cap: usize,
    /// Seed for randomized searches and corpus generation.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    pub format: OutputFormat,
    /// Cross-check results against full subspace enumeration where eligible.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Also write the report (header and body) to this file.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Canonical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QuestionArg {
    Semiprime,
    Prime,
    Simple,
}

impl From<QuestionArg> for Question {
    fn from(q: QuestionArg) -> Self {
        match q {
            QuestionArg::Semiprime => Question::Semiprime,
            QuestionArg::Prime => Question::Prime,
            QuestionArg::Simple => Question::Simple,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Two,
    Left,
    Right,
}

impl From<SideArg> for Sidedness {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Two => Sidedness::TwoSided,
            SideArg::Left => Sidedness::LeftIdeal,
            SideArg::Right => Sidedness::RightIdeal,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the defining identities, associativity and commutativity.
    Check { path: PathBuf },
    /// Nucleus, centers, associator ideal, square and annihilators.
    Analyze { path: PathBuf },
    /// Decide semiprimeness, primeness or simplicity.
    Decide {
        path: PathBuf,
        #[arg(value_enum)]
        question: QuestionArg,
    },
    /// Lower radical chain and the semiprime quotient.
    Radical { path: PathBuf },
    /// Every ideal, by full subspace enumeration (small finite fields only).
    Lattice {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Two)]
        sidedness: SideArg,
    },
    /// Run the theorem suite on one algebra or a corpus.
    Theorems {
        path: Option<PathBuf>,
        /// `shipped`, a corpus profile JSON file, or a directory of algebra files.
        #[arg(long, conflicts_with = "path")]
        corpus: Option<String>,
    },
    /// Write a corpus of algebra files and an index.
    Generate {
        /// Corpus profile JSON; the shipped profile when omitted.
        #[arg(long)]
        profile: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-verify every witness in a report.
    VerifyWitness { report: PathBuf },
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

struct Ctx<'a> {
    global: &'a GlobalOpts,
    decide: DecideOptions,
}

impl Ctx<'_> {
    fn seed(&self) -> u64 {
        self.global.seed.unwrap_or(0)
    }

    fn options(&self) -> Value {
        json!({
            "field_cap": self.global.field_cap,
            "dim_cap": self.global.dim_cap,
            "oracle": self.global.oracle,
            "random_trials": self.decide.random_trials,
            "max_points": self.decide.max_points,
        })
    }

    fn check_caps(&self, a: &AnyAlgebra) -> Result<()> {
        if let FieldDescriptor::PrimeField(p) = a.descriptor() {
            if p > self.global.field_cap {
                return Err(Error::CapExceeded {
                    what: "--field-cap",
                    value: p.into(),
                    limit: self.global.field_cap.into(),
                });
            }
        }
        if a.dim() > self.global.dim_cap {
            return Err(Error::CapExceeded {
                what: "--dim-cap",
                value: a.dim() as u64,
                limit: self.global.dim_cap as u64,
            });
        }
        Ok(())
    }

    fn load(&self, path: &Path) -> Result<AnyAlgebra> {
        let a = parse_algebra(&read(path)?).map_err(|e| in_file(path, e))?;
        self.check_caps(&a)?;
        Ok(a)
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

/// Prefixes parse errors with the file they came from.
fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Format(m) => Error::Format(format!("{}: {m}", path.display())),
        Error::Json(j) => Error::Format(format!("{}: {j}", path.display())),
        other => other,
    }
}

fn instance_name(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "algebra".into())
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let ctx = Ctx {
        global: &cli.global,
        decide: DecideOptions { seed: cli.global.seed.unwrap_or(0), ..DecideOptions::default() },
    };
    let (body, code, notes) = match &cli.command {
        Command::Check { path } => single(&ctx, "check", path, cmd_check)?,
        Command::Analyze { path } => single(&ctx, "analyze", path, cmd_analyze)?,
        Command::Decide { path, question } => {
            let q = Question::from(*question);
            single(&ctx, &format!("decide {q}"), path, |c, a, i| cmd_decide(c, a, i, q))?
        }
        Command::Radical { path } => single(&ctx, "radical", path, cmd_radical)?,
        Command::Lattice { path, sidedness } => {
            let side = Sidedness::from(*sidedness);
            single(&ctx, &format!("lattice {}", side.name()), path, |c, a, i| cmd_lattice(c, a, i, side))?
        }
        Command::Theorems { path, corpus } => cmd_theorems(&ctx, path.as_deref(), corpus.as_deref())?,
        Command::Generate { profile, out: dir } => cmd_generate(&ctx, profile.as_deref(), dir)?,
        Command::VerifyWitness { report } => return cmd_verify_witness(report, out, err),
    };
    emit(&ctx, &body, &notes, out, err)?;
    Ok(code)
}

fn emit(ctx: &Ctx<'_>, body: &ReportBody, notes: &[String], out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match ctx.global.format {
        OutputFormat::Human => {
            out.write_all(render_body(body).as_bytes())?;
            for n in notes {
                writeln!(out, "{n}")?;
            }
        }
        OutputFormat::Canonical => {
            writeln!(out, "{}", body.to_canonical())?;
            for n in notes {
                writeln!(err, "{n}")?;
            }
        }
    }
    if let Some(path) = &ctx.global.report {
        let file = ReportFile { header: Header::now(), body: body.clone() };
        fs::write(path, file.to_json() + "\n")?;
    }
    Ok(())
}

type Outcome = (ReportBody, i32, Vec<String>);

/// Result items, exit code and extra notes for one algebra.
type InstanceOutcome = (Vec<Value>, i32, Vec<String>);

fn single<C>(ctx: &Ctx<'_>, command: &str, path: &Path, cmd: C) -> Result<Outcome>
where
    C: FnOnce(&Ctx<'_>, &AnyAlgebra, &mut Instance) -> Result<(i32, Vec<String>)>,
{
    let a = ctx.load(path)?;
    let mut body = ReportBody::new(command, ctx.seed(), ctx.options());
    let mut inst = Instance::new(instance_name(path), &a);
    let (code, notes) = cmd(ctx, &a, &mut inst)?;
    body.instances.push(inst);
    Ok((body, code, notes))
}

fn cmd_check(_: &Ctx<'_>, a: &AnyAlgebra, inst: &mut Instance) -> Result<(i32, Vec<String>)> {
    let (items, code, notes) = crate::with_algebra!(a, x => check_items(x));
    inst.results = items;
    Ok((code, notes))
}

fn check_items<F: Field>(a: &Algebra<F>) -> InstanceOutcome {
    let it = Items::new(a.field());
    let n = nucleus(a);
    let mut items: Vec<Value> =
        [IdentityId::LeftSymmetric, IdentityId::RightCommutative, IdentityId::DerivedAssociator]
            .into_iter()
            .map(|id| it.identity(&check_identity(a, id)))
            .collect();
    items.push(it.identity(&check_identity_with_nucleus(a, &n)));
    for id in [IdentityId::Associativity, IdentityId::Commutativity] {
        items.push(it.identity(&check_identity(a, id)));
    }
    let novikov = is_novikov(a);
    items.push(it.novikov(novikov));
    (items, if novikov { EXIT_OK } else { EXIT_FAILED }, Vec::new())
}

fn cmd_analyze(_: &Ctx<'_>, a: &AnyAlgebra, inst: &mut Instance) -> Result<(i32, Vec<String>)> {
    inst.results = crate::with_algebra!(a, x => analyze_items(x))?;
    Ok((EXIT_OK, Vec::new()))
}

fn analyze_items<F: Field>(a: &Algebra<F>) -> Result<Vec<Value>> {
    let it = Items::new(a.field());
    let mut exprs: Vec<(&str, SpaceExpr<F>)> = vec![
        ("nucleus", SpaceExpr::Nucleus),
        ("commutative_center", SpaceExpr::CommutativeCenter),
        ("center", SpaceExpr::Center),
        ("associator_span", SpaceExpr::Associators),
        ("associator_ideal", SpaceExpr::AssociatorIdeal),
        ("square", SpaceExpr::square(SpaceExpr::Whole)),
    ];
    for m in [SpaceExpr::Whole, SpaceExpr::Nucleus, SpaceExpr::AssociatorIdeal] {
        exprs.push(("ann_left", SpaceExpr::AnnLeft(Box::new(m.clone()))));
        exprs.push(("ann_right", SpaceExpr::AnnRight(Box::new(m))));
    }
    let mut items = vec![it.novikov(is_novikov(a))];
    for (name, e) in exprs {
        items.push(it.subspace(name, &e, &e.eval(a)?));
    }
    Ok(items)
}

fn cmd_decide(ctx: &Ctx<'_>, a: &AnyAlgebra, inst: &mut Instance, q: Question) -> Result<(i32, Vec<String>)> {
    let (items, code, notes) = crate::with_algebra!(a, x => decide_items(ctx, x, q))?;
    inst.results = items;
    Ok((code, notes))
}

fn decide_items<F: Field>(ctx: &Ctx<'_>, a: &Algebra<F>, q: Question) -> Result<InstanceOutcome> {
    let it = Items::new(a.field());
    let d = decide(a, q, &ctx.decide)?;
    let mut items = vec![it.decision(&AlgebraExpr::Whole, &d)];
    let mut notes = Vec::new();
    let mut code = if d.status == DecisionStatus::Undetermined { EXIT_UNDETERMINED } else { EXIT_OK };
    if ctx.global.oracle {
        if within_enumeration_caps(a.field().descriptor(), a.dim()) {
            let e = decide_by_enumeration(a, q)?;
            items.push(it.decision(&AlgebraExpr::Whole, &e));
            if d.status != DecisionStatus::Undetermined && d.status != e.status {
                notes.push(format!("oracle disagreement: {q} scan and enumeration differ"));
                code = EXIT_FAILED;
            } else if d.status == DecisionStatus::Undetermined {
                code = EXIT_OK;
            }
        } else {
            notes.push("oracle: not eligible (needs GF(2) dim <= 5 or GF(3) dim <= 4)".into());
        }
    }
    Ok((items, code, notes))
}

fn cmd_radical(ctx: &Ctx<'_>, a: &AnyAlgebra, inst: &mut Instance) -> Result<(i32, Vec<String>)> {
    let (items, code, notes) = crate::with_algebra!(a, x => radical_items(ctx, x))?;
    inst.results = items;
    Ok((code, notes))
}

fn radical_items<F: Field>(ctx: &Ctx<'_>, a: &Algebra<F>) -> Result<InstanceOutcome> {
    let it = Items::new(a.field());
    let chain = baer_radical_with(a, &ctx.decide)?;
    let radical = chain.radical().space().clone();
    let target = AlgebraExpr::Quotient(SpaceExpr::given("B(A)", &radical));
    let quotient = target.build(a)?;
    let d = decide(&quotient, Question::Semiprime, &ctx.decide)?;
    let mut items = vec![it.baer_chain(&chain), it.decision(&target, &d)];
    let mut notes = Vec::new();
    let mut code = if chain.certified && d.is_yes() { EXIT_OK } else { EXIT_UNDETERMINED };
    if ctx.global.oracle {
        if within_enumeration_caps(a.field().descriptor(), a.dim()) {
            let e = decide_by_enumeration(&quotient, Question::Semiprime)?;
            items.push(it.decision(&target, &e));
            let ideals: Vec<Subspace<F>> =
                enumerate_ideals_of(a, Sidedness::TwoSided)?.into_iter().map(IdealHandle::into_space).collect();
            let trivial: Vec<Subspace<F>> = ideals.into_iter().filter(|s| squares_to_zero(a, s)).collect();
            let contained = trivial.iter().all(|t| t.leq(&radical).unwrap_or(false));
            items.push(it.ideals(Sidedness::TwoSided, Method::SubspaceEnumeration, false, &trivial));
            notes.push(format!(
                "oracle: {} trivial ideal(s) by enumeration, all contained in the radical: {contained}",
                trivial.len()
            ));
            if !contained || !e.is_yes() {
                code = EXIT_FAILED;
            }
        } else {
            notes.push("oracle: not eligible (needs GF(2) dim <= 5 or GF(3) dim <= 4)".into());
        }
    }
    Ok((items, code, notes))
}

fn cmd_lattice(_: &Ctx<'_>, a: &AnyAlgebra, inst: &mut Instance, side: Sidedness) -> Result<(i32, Vec<String>)> {
    inst.results = crate::with_algebra!(a, x => lattice_items(x, side))?;
    Ok((EXIT_OK, Vec::new()))
}

fn lattice_items<F: Field>(a: &Algebra<F>, side: Sidedness) -> Result<Vec<Value>> {
    let it = Items::new(a.field());
    let ideals: Vec<Subspace<F>> = enumerate_ideals_of(a, side)?.into_iter().map(IdealHandle::into_space).collect();
    let mut items = vec![it.ideals(side, Method::SubspaceEnumeration, true, &ideals)];
    if side == Sidedness::TwoSided {
        let nonzero: Vec<Subspace<F>> = ideals.iter().filter(|s| !s.is_zero()).cloned().collect();
        let minimal = MinimalIdeals {
            ideals: minimal_elements(&nonzero)
                .into_iter()
                .map(|s| IdealHandle::certify(a, s, side))
                .collect::<Result<_>>()?,
            exhaustive: true,
            method: Method::SubspaceEnumeration,
        };
        items.push(it.minimal_ideals(&minimal));
    }
    Ok(items)
}

/// Corpus entries selected by `theorems`.
fn theorem_inputs(ctx: &Ctx<'_>, path: Option<&Path>, corpus_arg: Option<&str>) -> Result<Vec<(String, AnyAlgebra)>> {
    if let Some(p) = path {
        return Ok(vec![(instance_name(p), ctx.load(p)?)]);
    }
    let entries: Vec<CorpusEntry> = match corpus_arg.unwrap_or("shipped") {
        "shipped" => shipped_corpus(),
        other => {
            let p = Path::new(other);
            if p.is_dir() {
                return load_dir(ctx, p);
            }
            let profile: CorpusProfile = serde_json::from_str(&read(p)?).map_err(|e| in_file(p, e.into()))?;
            corpus(&profile)?
        }
    };
    let mut out = Vec::new();
    for e in entries.into_iter().filter(|e| !e.negative) {
        ctx.check_caps(&e.algebra)?;
        out.push((e.name, e.algebra));
    }
    Ok(out)
}

fn load_dir(ctx: &Ctx<'_>, dir: &Path) -> Result<Vec<(String, AnyAlgebra)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?.map(|e| e.map(|e| e.path())).collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.extension().is_some_and(|x| x == "json") && p.file_name().is_some_and(|n| n != "index.json"));
    paths.sort();
    paths.iter().map(|p| Ok((instance_name(p), ctx.load(p)?))).collect()
}

fn cmd_theorems(ctx: &Ctx<'_>, path: Option<&Path>, corpus_arg: Option<&str>) -> Result<Outcome> {
    let inputs = theorem_inputs(ctx, path, corpus_arg)?;
    let suite = SuiteOptions { decide: ctx.decide, ..SuiteOptions::default() };
    let mut options = ctx.options();
    options["max_pairs"] = json!(suite.max_pairs);
    options["random_seeds"] = json!(suite.random_seeds);
    options["enumerate"] = json!(suite.enumerate);
    let mut body = ReportBody::new("theorems", ctx.seed(), options);
    let mut total = Coverage::new();
    let mut by_field: BTreeMap<String, Coverage> = BTreeMap::new();
    for (name, a) in &inputs {
        let mut inst = Instance::new(name.clone(), a);
        let field = a.descriptor().to_string();
        inst.results = crate::with_algebra!(a, x => {
            let verdicts = run_suite(x, &suite);
            total.add(&verdicts);
            by_field.entry(field).or_default().add(&verdicts);
            let it = Items::new(x.field());
            verdicts.iter().map(|v| it.verdict(v)).collect()
        });
        body.instances.push(inst);
    }
    body.coverage = Some(coverage_section(&total, &by_field));
    let fails = total.total_fails();
    let notes = vec![format!("{} algebra(s), {fails} failing claim check(s)", inputs.len())];
    Ok((body, if fails > 0 { EXIT_FAILED } else { EXIT_OK }, notes))
}

fn cmd_generate(ctx: &Ctx<'_>, profile_path: Option<&Path>, dir: &Path) -> Result<Outcome> {
    let mut profile = match profile_path {
        Some(p) => serde_json::from_str(&read(p)?).map_err(|e| in_file(p, e.into()))?,
        None => CorpusProfile::shipped(),
    };
    if let Some(seed) = ctx.global.seed {
        profile.seed = seed;
    }
    let entries =
        if profile_path.is_none() && ctx.global.seed.is_none() { shipped_corpus() } else { corpus(&profile)? };
    fs::create_dir_all(dir)?;
    let mut options = ctx.options();
    options["profile"] = serde_json::to_value(&profile)?;
    let mut body = ReportBody::new("generate", profile.seed, options);
    let mut index = Vec::new();
    for e in &entries {
        ctx.check_caps(&e.algebra)?;
        let text = canonical_algebra(&e.algebra);
        let file = format!("{}.json", e.name);
        fs::write(dir.join(&file), format!("{text}\n"))?;
        index.push(json!({
            "name": e.name,
            "file": file,
            "digest": sha256_hex(&text),
            "negative": e.negative,
            "origin": e.origin,
        }));
        body.instances.push(Instance::new(e.name.clone(), &e.algebra));
    }
    let index = json!({"profile": profile, "entries": index});
    fs::write(dir.join("index.json"), serde_json::to_string(&index)? + "\n")?;
    let notes = vec![format!("wrote {} algebra file(s) and index.json to {}", entries.len(), dir.display())];
    Ok((body, EXIT_OK, notes))
}

fn cmd_verify_witness(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let body = parse_report(&read(path)?).map_err(|e| in_file(path, e))?;
    let outcome = verify_report(&body)?;
    for f in &outcome.failures {
        writeln!(err, "FAILED {f}")?;
    }
    writeln!(
        out,
        "verified {} item(s), {} without checkable content, {} failure(s)",
        outcome.checked,
        outcome.skipped,
        outcome.failures.len()
    )?;
    Ok(if outcome.ok() { EXIT_OK } else { EXIT_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::PrimeField;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("novikov").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn zero_algebra_is_not_semiprime_with_full_space_witness() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("zero.json");
        let a: AnyAlgebra = Algebra::zero_product(PrimeField::new(2).unwrap(), 2).into();
        fs::write(&path, canonical_algebra(&a)).unwrap();
        let (code, out, _) = run_capture(&["decide", path.to_str().unwrap(), "semiprime"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("semiprime A: No"), "{out}");
        assert!(out.contains("trivial ideal (dim 2, basis [1, 0] [0, 1])"), "{out}");
    }

    #[test]
    fn malformed_input_and_caps_exit_2() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        fs::write(&path, "{\"format_version\": 1,\n \"field\": \"Q\"\n}").unwrap();
        let (code, _, err) = run_capture(&["check", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("line"), "{err}");

        let a: AnyAlgebra = Algebra::zero_product(PrimeField::new(7).unwrap(), 2).into();
        fs::write(&path, canonical_algebra(&a)).unwrap();
        let (code, _, err) = run_capture(&["--field-cap", "5", "check", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("--field-cap"), "{err}");
        let (code, _, err) = run_capture(&["lattice", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("enumeration"), "{err}");
    }
}
