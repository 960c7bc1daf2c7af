//! The lower radical chain and the semiprime quotient it leaves behind.

use novikov::generators::{direct_sum, truncated_poly_algebra, truncated_polynomial};
use novikov::lattice::{baer_radical, is_semiprime};
use novikov::structure::quotient;
use novikov::{Algebra, PrimeField};

fn main() -> novikov::Result<()> {
    let gf3 = PrimeField::new(3)?;
    let a = direct_sum(
        &truncated_poly_algebra(3, 1)?,
        &direct_sum(&truncated_polynomial(gf3, 3), &Algebra::zero_product(gf3, 1))?,
    )?;
    let chain = baer_radical(&a)?;
    println!("dim A = {}, certified = {}", a.dim(), chain.certified);
    for (i, b) in chain.stages.iter().enumerate() {
        println!("  B_{i} (dim {}) = {}", b.dim(), b.space());
    }
    let q = quotient(&a, chain.radical())?;
    let d = is_semiprime(&q.algebra)?;
    println!("A/B(A): dim {}, semiprime {:?}", q.algebra.dim(), d.status);
    Ok(())
}
