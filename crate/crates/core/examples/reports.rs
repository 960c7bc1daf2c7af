//! Writes an algebra file, builds a decision report for it and re-verifies
//! the report from its text alone.

use novikov::format::{canonical_algebra, parse_algebra};
use novikov::generators::truncated_polynomial;
use novikov::lattice::is_semiprime;
use novikov::report::{parse_report, verify_report, Instance, Items, ReportBody};
use novikov::theorems::AlgebraExpr;
use novikov::{AnyAlgebra, PrimeField};

fn main() -> novikov::Result<()> {
    let a = truncated_polynomial(PrimeField::new(3)?, 3);
    let text = canonical_algebra(&a.clone().into());
    println!("{text}");
    let parsed: AnyAlgebra = parse_algebra(&text)?;
    assert_eq!(canonical_algebra(&parsed), text);

    let d = is_semiprime(&a)?;
    let mut body = ReportBody::new("decide semiprime", 0, serde_json::json!({}));
    let mut inst = Instance::new("gf3_x3", &parsed);
    inst.results.push(Items::new(a.field()).decision(&AlgebraExpr::Whole, &d));
    body.instances.push(inst);
    let report = body.to_canonical();
    println!("{report}");

    let outcome = verify_report(&parse_report(&report)?)?;
    println!("verified {} item(s), failures: {:?}", outcome.checked, outcome.failures);
    Ok(())
}
