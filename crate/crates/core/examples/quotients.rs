//! Quotients by ideals and subalgebras viewed as algebras.

use novikov::generators::truncated_polynomial;
use novikov::structure::{ideal_closure, quotient, square, subalgebra_as_algebra};
use novikov::{Field, Rationals, Sidedness, Subspace};

fn main() -> novikov::Result<()> {
    let a = truncated_polynomial(Rationals, 4);
    let x2 = Subspace::span(Rationals, 4, [a.basis_vector(2).as_slice()])?;
    let ideal = ideal_closure(&a, &x2, Sidedness::TwoSided)?;
    println!("ideal generated by x^2: {}", ideal.space());
    let q = quotient(&a, &ideal)?;
    println!("A/(x^2): dim {}, representatives {:?}, A^2 = {}", q.algebra.dim(), q.representatives, square(&q.algebra));
    let x3 = a.basis_vector(3);
    let image: Vec<String> = q.project(&x3).iter().map(|c| Rationals.format(c)).collect();
    println!("x^3 projects to [{}]", image.join(", "));
    let x1 = q.lift(&[Rationals.from_i64(0), Rationals.from_i64(1)]);
    let lifted: Vec<String> = x1.iter().map(|c| Rationals.format(c)).collect();
    println!("the class of x lifts to [{}]", lifted.join(", "));
    let s = subalgebra_as_algebra(&a, ideal.space())?;
    println!("(x^2) as an algebra: dim {}, square {}", s.algebra.dim(), square(&s.algebra));
    Ok(())
}
