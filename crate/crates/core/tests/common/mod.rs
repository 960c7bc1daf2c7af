//! Definitional oracles shared by the integration tests. Nothing here calls
//! the library's linear algebra, structure maps or enumerators; only the
//! field arithmetic and the raw structure constants are used.

#![allow(dead_code)]

use std::collections::BTreeSet;

use novikov::{Algebra, Field, PrimeField};

pub type Vector<F> = Vec<<F as Field>::Elem>;

pub fn unit<F: Field>(f: &F, n: usize, i: usize) -> Vector<F> {
    (0..n).map(|k| if k == i { f.one() } else { f.zero() }).collect()
}

pub fn is_zero<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

pub fn add<F: Field>(f: &F, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
    x.iter().zip(y).map(|(a, b)| f.add(a, b)).collect()
}

pub fn sub<F: Field>(f: &F, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
    x.iter().zip(y).map(|(a, b)| f.sub(a, b)).collect()
}

/// `xy = sum_ij x_i y_j c_ij^k e_k`, straight from the table.
pub fn mul<F: Field>(a: &Algebra<F>, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
    let f = a.field();
    let n = a.dim();
    let mut out = vec![f.zero(); n];
    for (i, xi) in x.iter().enumerate().filter(|(_, t)| !f.is_zero(t)) {
        for (j, yj) in y.iter().enumerate().filter(|(_, t)| !f.is_zero(t)) {
            let s = f.mul(xi, yj);
            for (k, o) in out.iter_mut().enumerate() {
                let c = a.structure_constant(i, j, k);
                if !f.is_zero(c) {
                    *o = f.add(o, &f.mul(&s, c));
                }
            }
        }
    }
    out
}

pub fn assoc<F: Field>(a: &Algebra<F>, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vector<F> {
    sub(a.field(), &mul(a, &mul(a, x, y), z), &mul(a, x, &mul(a, y, z)))
}

/// Defect of `(x,y,z) = (y,x,z)` at basis indices.
pub fn left_symmetry_defect<F: Field>(a: &Algebra<F>, [x, y, z]: [usize; 3]) -> Vector<F> {
    let n = a.dim();
    let e = |i| unit(a.field(), n, i);
    sub(a.field(), &assoc(a, &e(x), &e(y), &e(z)), &assoc(a, &e(y), &e(x), &e(z)))
}

/// Defect of `(xy)z = (xz)y` at basis indices.
pub fn right_commutativity_defect<F: Field>(a: &Algebra<F>, [x, y, z]: [usize; 3]) -> Vector<F> {
    let n = a.dim();
    let e = |i| unit(a.field(), n, i);
    sub(a.field(), &mul(a, &mul(a, &e(x), &e(y)), &e(z)), &mul(a, &mul(a, &e(x), &e(z)), &e(y)))
}

/// Triple loop over basis triples.
pub fn breaks<F: Field>(a: &Algebra<F>, defect: impl Fn(&Algebra<F>, [usize; 3]) -> Vector<F>) -> bool {
    let n = a.dim();
    (0..n).any(|x| (0..n).any(|y| (0..n).any(|z| !is_zero(a.field(), &defect(a, [x, y, z])))))
}

/// Reduced row echelon form with zero rows dropped.
pub fn rref<F: Field>(f: &F, mut rows: Vec<Vector<F>>, cols: usize) -> Vec<Vector<F>> {
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else { continue };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]).expect("nonzero pivot");
        rows[r] = rows[r].iter().map(|x| f.mul(x, &inv)).collect();
        for i in 0..rows.len() {
            if i != r && !f.is_zero(&rows[i][c]) {
                let factor = rows[i][c].clone();
                rows[i] = rows[i].iter().zip(&rows[r]).map(|(x, y)| f.sub(x, &f.mul(&factor, y))).collect();
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Canonical basis of `{x : m x = 0}`.
pub fn kernel<F: Field>(f: &F, m: Vec<Vector<F>>, cols: usize) -> Vec<Vector<F>> {
    let red = rref(f, m, cols);
    let pivots: Vec<usize> = red.iter().map(|row| row.iter().position(|x| !f.is_zero(x)).unwrap()).collect();
    let basis = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = unit(f, cols, free);
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = f.neg(&row[free]);
            }
            v
        })
        .collect();
    rref(f, basis, cols)
}

/// A linear map on coordinate vectors.
pub type LinMap<'a, F> = Box<dyn Fn(&[<F as Field>::Elem]) -> Vector<F> + 'a>;

/// Canonical basis of the common kernel of linear maps, each given by its
/// action on basis vectors.
pub fn solve<F: Field>(a: &Algebra<F>, maps: &[LinMap<'_, F>]) -> Vec<Vector<F>> {
    let f = a.field();
    let n = a.dim();
    let mut rows = Vec::new();
    for g in maps {
        let images: Vec<Vector<F>> = (0..n).map(|l| g(&unit(f, n, l))).collect();
        let out_dim = images.first().map_or(0, Vec::len);
        for k in 0..out_dim {
            rows.push(images.iter().map(|img| img[k].clone()).collect());
        }
    }
    kernel(f, rows, n)
}

pub fn nucleus<F: Field>(a: &Algebra<F>) -> Vec<Vector<F>> {
    let n = a.dim();
    let e: Vec<Vector<F>> = (0..n).map(|i| unit(a.field(), n, i)).collect();
    let mut maps: Vec<LinMap<'_, F>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (e[i].clone(), e[j].clone());
            maps.push(Box::new(move |x| assoc(a, x, &ei, &ej)));
            let (ei, ej) = (e[i].clone(), e[j].clone());
            maps.push(Box::new(move |x| assoc(a, &ei, x, &ej)));
            let (ei, ej) = (e[i].clone(), e[j].clone());
            maps.push(Box::new(move |x| assoc(a, &ei, &ej, x)));
        }
    }
    solve(a, &maps)
}

pub fn commutative_center<F: Field>(a: &Algebra<F>) -> Vec<Vector<F>> {
    let n = a.dim();
    let maps: Vec<LinMap<'_, F>> = (0..n)
        .map(|i| {
            let ei = unit(a.field(), n, i);
            Box::new(move |x: &[F::Elem]| sub(a.field(), &mul(a, x, &ei), &mul(a, &ei, x))) as LinMap<'_, F>
        })
        .collect();
    solve(a, &maps)
}

/// `{x : x m = 0 for m in M}` (`left = true`) or `{x : m x = 0}`.
pub fn annihilator<F: Field>(a: &Algebra<F>, m: &[Vector<F>], left: bool) -> Vec<Vector<F>> {
    let maps: Vec<LinMap<'_, F>> = m
        .iter()
        .map(|v| {
            let v = v.clone();
            Box::new(move |x: &[F::Elem]| if left { mul(a, x, &v) } else { mul(a, &v, x) }) as LinMap<'_, F>
        })
        .collect();
    solve(a, &maps)
}

/// Whether `v` lies in the span of `rows`.
pub fn in_span<F: Field>(f: &F, rows: &[Vector<F>], v: &[F::Elem]) -> bool {
    let cols = v.len();
    let before = rref(f, rows.to_vec(), cols).len();
    let mut with = rows.to_vec();
    with.push(v.to_vec());
    rref(f, with, cols).len() == before
}

// Finite fields: subspaces as explicit sets of vectors.

pub type Set = BTreeSet<Vec<u32>>;

pub fn all_vectors(f: &PrimeField, n: usize) -> Vec<Vec<u32>> {
    let p = f.modulus();
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut t| {
            let mut v = vec![0u32; n];
            for slot in v.iter_mut().rev() {
                *slot = (t % p as usize) as u32;
                t /= p as usize;
            }
            v
        })
        .collect()
}

/// Every linear combination of `rows`.
pub fn span_set(f: &PrimeField, n: usize, rows: &[Vec<u32>]) -> Set {
    let mut out: Set = [vec![0u32; n]].into_iter().collect();
    for r in rows {
        let mut next = Set::new();
        for s in &out {
            for c in 0..f.modulus() {
                let scaled: Vec<u32> = r.iter().map(|x| f.mul(x, &c)).collect();
                next.insert(add(f, s, &scaled));
            }
        }
        out = next;
    }
    out
}

pub fn scan(f: &PrimeField, n: usize, pred: impl Fn(&[u32]) -> bool) -> Set {
    all_vectors(f, n).into_iter().filter(|v| pred(v)).collect()
}

/// Every subspace of `GF(p)^n`, by closing `{0}` under adjoining vectors.
pub fn all_subspaces(f: &PrimeField, n: usize) -> Vec<Set> {
    let vectors = all_vectors(f, n);
    let zero: Set = [vec![0u32; n]].into_iter().collect();
    let mut seen: BTreeSet<Set> = [zero.clone()].into_iter().collect();
    let mut queue = vec![zero];
    while let Some(s) = queue.pop() {
        for v in vectors.iter().filter(|v| !s.contains(*v)) {
            let mut t = Set::new();
            for x in &s {
                for c in 0..f.modulus() {
                    let scaled: Vec<u32> = v.iter().map(|y| f.mul(y, &c)).collect();
                    t.insert(add(f, x, &scaled));
                }
            }
            if seen.insert(t.clone()) {
                queue.push(t);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn is_two_sided_ideal(a: &Algebra<PrimeField>, s: &Set) -> bool {
    let n = a.dim();
    s.iter().all(|x| {
        (0..n).all(|i| {
            let e = unit(a.field(), n, i);
            s.contains(&mul(a, x, &e)) && s.contains(&mul(a, &e, x))
        })
    })
}

pub fn zero_product(a: &Algebra<PrimeField>, i: &Set, j: &Set) -> bool {
    i.iter().all(|x| j.iter().all(|y| is_zero(a.field(), &mul(a, x, y))))
}

/// Decisions and minimal ideals recomputed from the full ideal list.
#[derive(Debug)]
pub struct EnumeratedFacts {
    pub ideals: Vec<Set>,
    pub semiprime: bool,
    pub prime: bool,
    pub simple: bool,
    pub minimal: BTreeSet<Set>,
    pub trivial: Vec<Set>,
}

pub fn enumerated_facts(a: &Algebra<PrimeField>) -> EnumeratedFacts {
    let n = a.dim();
    let ideals: Vec<Set> = all_subspaces(a.field(), n).into_iter().filter(|s| is_two_sided_ideal(a, s)).collect();
    let nonzero: Vec<&Set> = ideals.iter().filter(|s| s.len() > 1).collect();
    let trivial: Vec<Set> = nonzero.iter().filter(|s| zero_product(a, s, s)).map(|s| (*s).clone()).collect();
    let prime = nonzero.iter().all(|i| nonzero.iter().all(|j| !zero_product(a, i, j)));
    let full = all_vectors(a.field(), n).len();
    let square_nonzero = n > 0 && {
        let all: Set = all_vectors(a.field(), n).into_iter().collect();
        !zero_product(a, &all, &all)
    };
    let simple = square_nonzero && nonzero.iter().all(|s| s.len() == full);
    let minimal = nonzero
        .iter()
        .filter(|s| !nonzero.iter().any(|t| t.len() < s.len() && t.is_subset(s)))
        .map(|s| (*s).clone())
        .collect();
    EnumeratedFacts { semiprime: trivial.is_empty(), prime, simple, minimal, trivial, ideals }
}

/// `sum_k [n choose k]_q`, the number of subspaces of `GF(q)^n`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
    let num: u64 = (0..k).map(|i| q.pow(n - i) - 1).product();
    let den: u64 = (0..k).map(|i| q.pow(i + 1) - 1).product();
    num / den
}
