//! Runs every claim check on a prime nonassociative algebra and on a
//! mutation of it that is no longer Novikov.

use novikov::generators::{mutate, truncated_poly_algebra};
use novikov::theorems::{run_suite, Status, SuiteOptions};
use novikov::{Algebra, Field};

fn show<F: Field>(title: &str, a: &Algebra<F>) {
    println!("{title}");
    for v in run_suite(a, &SuiteOptions::default()) {
        let detail = match &v.status {
            Status::Holds => format!("{} object(s)", v.checked),
            Status::Fails(f) => f.to_string(),
            Status::Vacuous(r) | Status::Undetermined(r) => r.clone(),
        };
        println!("  {:<17} {:<12} {detail}", v.claim.name(), v.status.name());
    }
}

fn main() -> novikov::Result<()> {
    let a = truncated_poly_algebra(3, 1)?;
    show("GF(3)[x]/(x^3), d/dx, lambda = 1", &a);
    let broken = mutate(&a, 0, 0, 1, &a.field().one())?;
    show("same algebra with c[0][0][1] += 1", &broken);
    Ok(())
}
