//! Exact subspace arithmetic over Q and GF(7).

use novikov::linalg::{kernel, rref};
use novikov::{Field, Matrix, PrimeField, Rationals, Subspace};

fn main() -> novikov::Result<()> {
    let q = Rationals;
    let m = Matrix::from_rows(2, vec![vec![q.from_i64(2), q.from_i64(1)], vec![q.from_i64(4), q.from_i64(2)]])?;
    println!("kernel of [[2, 1], [4, 2]] over Q: {}", kernel(&q, &m));

    let f = PrimeField::new(7)?;
    let v = |xs: [i64; 4]| xs.map(|x| f.from_i64(x)).to_vec();
    let u = Subspace::span(f, 4, [v([1, 2, 0, 0]).as_slice(), v([0, 0, 1, 3]).as_slice()])?;
    let w = Subspace::span(f, 4, [v([1, 2, 1, 3]).as_slice(), v([0, 1, 0, 0]).as_slice()])?;
    let (sum, meet) = (u.sum(&w)?, u.intersect(&w)?);
    println!("U = {u}\nW = {w}\nU + W = {sum}\nU ∩ W = {meet}");
    println!("dim U + dim W = {} = dim(U + W) + dim(U ∩ W) = {}", u.dim() + w.dim(), sum.dim() + meet.dim());
    let r = rref(&f, &Matrix::from_rows(4, vec![v([2, 4, 0, 0]), v([3, 6, 1, 3])])?);
    println!(
        "rref rows: {:?}",
        r.to_rows().iter().map(|row| row.iter().map(|x| f.format(x)).collect::<Vec<_>>()).collect::<Vec<_>>()
    );
    Ok(())
}
