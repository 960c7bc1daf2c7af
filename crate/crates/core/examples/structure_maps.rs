//! Nucleus, centers, associators and annihilators of a few small algebras.

use novikov::generators::{direct_sum, dual_numbers_gd, truncated_poly_algebra, truncated_polynomial};
use novikov::structure::{ann_left, ann_right, associator_ideal, center, commutative_center, nucleus, square};
use novikov::{Algebra, Field, Rationals};

fn describe<F: Field>(name: &str, a: &Algebra<F>) -> novikov::Result<()> {
    let full = a.full_space();
    println!("{name} ({}, dim {})", a.field().descriptor(), a.dim());
    println!("  N(A)     = {}", nucleus(a));
    println!("  K(A)     = {}", commutative_center(a));
    println!("  Z(A)     = {}", center(a));
    println!("  D(A)     = {}", associator_ideal(a).space());
    println!("  A^2      = {}", square(a));
    println!("  Ann_l(A) = {}", ann_left(a, &full)?);
    println!("  Ann_r(A) = {}", ann_right(a, &full)?);
    Ok(())
}

fn main() -> novikov::Result<()> {
    describe("Q[x]/(x^2) with a*b = a d(b)/dx", &dual_numbers_gd(Rationals))?;
    describe("GF(3)[x]/(x^3) with d/dx, lambda = 1", &truncated_poly_algebra(3, 1)?)?;
    let q = Rationals;
    describe("Q[x]/(x^2) + Q[x]/(x^3)", &direct_sum(&truncated_polynomial(q, 2), &truncated_polynomial(q, 3))?)?;
    Ok(())
}
