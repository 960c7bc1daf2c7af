//! Checks the defining identities on a Gelfand–Dorfman algebra, then breaks
//! one structure constant and prints the witness the checker finds.

use novikov::algebra::{check_novikov, defect_at};
use novikov::field::Field;
use novikov::generators::{derivative_matrix, gd_algebra, mutate, truncated_polynomial, GdInput};
use novikov::PrimeField;

fn main() -> novikov::Result<()> {
    let f = PrimeField::new(5)?;
    let c = truncated_polynomial(f, 5);
    let input = GdInput::new(c, derivative_matrix(&f, 5), f.from_i64(2))?;
    let a = gd_algebra(&input)?;
    let check = check_novikov(&a);
    println!("GF(5)[x]/(x^5), d = d/dx, lambda = 2: novikov = {}", check.is_novikov);

    let broken = mutate(&a, 1, 2, 0, &f.one())?;
    println!("after c[1][2][0] += 1:");
    for r in check_novikov(&broken).reports {
        match r.witness {
            None => println!("  {}: holds", r.identity),
            Some(w) => {
                let again = defect_at(&broken, r.identity, &w.indices, None)?;
                let shown: Vec<String> = again.iter().map(|x| f.format(x)).collect();
                println!("  {}: fails at {:?}, defect [{}]", r.identity, w.indices, shown.join(", "));
            }
        }
    }
    Ok(())
}
