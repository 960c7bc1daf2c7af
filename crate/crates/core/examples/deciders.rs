//! Semiprime, prime and simple decisions with their witnesses.

use novikov::generators::{direct_sum, truncated_poly_algebra, truncated_polynomial};
use novikov::lattice::{decide, DecideOptions, DecisionWitness, Question};
use novikov::{Algebra, Field, PrimeField, Rationals};

fn witness<F: Field>(w: &DecisionWitness<F>) -> String {
    match w {
        DecisionWitness::TrivialIdeal(i) => format!("trivial ideal {i}"),
        DecisionWitness::ZeroProduct(i, j) => format!("{i} * {j} = 0"),
        DecisionWitness::ProperIdeal(i) => format!("proper ideal {i}"),
        DecisionWitness::ZeroSquare => "A^2 = 0".into(),
        DecisionWitness::ZeroDimensional => "dim A = 0".into(),
    }
}

fn report<F: Field>(name: &str, a: &Algebra<F>) -> novikov::Result<()> {
    println!("{name}");
    for q in [Question::Semiprime, Question::Prime, Question::Simple] {
        let d = decide(a, q, &DecideOptions::default())?;
        let detail = d.witness.as_ref().map(witness).unwrap_or(d.note.clone());
        println!("  {q:<9} {:?} via {}: {detail}", d.status, d.method.name());
    }
    Ok(())
}

fn main() -> novikov::Result<()> {
    let gf2 = PrimeField::new(2)?;
    report("zero product, GF(2)^2", &Algebra::zero_product(gf2, 2))?;
    let field = truncated_polynomial(gf2, 1);
    report("GF(2) + GF(2)", &direct_sum(&field, &field)?)?;
    report("GF(5)[x]/(x^5), d/dx, lambda = 1", &truncated_poly_algebra(5, 1)?)?;
    report("Q[x]/(x^2)", &truncated_polynomial(Rationals, 2))?;
    Ok(())
}
