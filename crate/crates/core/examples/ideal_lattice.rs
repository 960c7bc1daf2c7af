//! Full ideal enumeration for a small algebra over GF(2), checked against the
//! Gaussian binomial count of all subspaces.

use novikov::generators::{direct_sum, truncated_polynomial};
use novikov::lattice::{enumerate_ideals_of, enumerate_subspaces, minimal_ideals};
use novikov::{PrimeField, Sidedness};

fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (q.pow(n - i) - 1) / (q.pow(i + 1) - 1))
}

fn main() -> novikov::Result<()> {
    let gf2 = PrimeField::new(2)?;
    let a = direct_sum(&truncated_polynomial(gf2, 2), &truncated_polynomial(gf2, 2))?;
    let subspaces = enumerate_subspaces(&gf2, a.dim())?;
    let expected: u64 = (0..=4).map(|k| gaussian_binomial(4, k, 2)).sum();
    println!("subspaces of GF(2)^4: {} (closed form {expected})", subspaces.len());
    for side in [Sidedness::TwoSided, Sidedness::LeftIdeal, Sidedness::RightIdeal] {
        println!("{} ideals: {}", side.name(), enumerate_ideals_of(&a, side)?.len());
    }
    for m in minimal_ideals(&a)?.ideals {
        println!("minimal ideal {}", m.space());
    }
    Ok(())
}
