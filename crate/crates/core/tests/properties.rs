mod common;

use proptest::prelude::*;

use novikov::format::{canonical_algebra, parse_algebra};
use novikov::linalg::rref;
use novikov::{Algebra, AnyAlgebra, Field, Matrix, PrimeField, Rationals, Subspace};

fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn prime_rows(p: u32, max_rows: usize, n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..p, n), 0..=max_rows)
}

fn rational_rows(max_rows: usize, n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=max_rows)
}

fn to_q(rows: &[Vec<i64>]) -> Vec<Vec<<Rationals as Field>::Elem>> {
    rows.iter().map(|r| r.iter().map(|&x| Rationals.from_i64(x)).collect()).collect()
}

fn span<F: Field>(f: &F, n: usize, rows: &[Vec<F::Elem>]) -> Subspace<F> {
    Subspace::span(f.clone(), n, rows.iter().map(Vec::as_slice)).unwrap()
}

fn dimension_formula<F: Field>(u: &Subspace<F>, w: &Subspace<F>) -> Result<(), TestCaseError> {
    let sum = u.sum(w).unwrap();
    let meet = u.intersect(w).unwrap();
    prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
    prop_assert!(meet.leq(u).unwrap() && meet.leq(w).unwrap());
    prop_assert!(u.leq(&sum).unwrap() && w.leq(&sum).unwrap());
    Ok(())
}

fn bilinear<F: Field>(
    a: &Algebra<F>,
    x: &[F::Elem],
    y: &[F::Elem],
    z: &[F::Elem],
    c: &F::Elem,
) -> Result<(), TestCaseError> {
    let f = a.field();
    let lin = |u: &[F::Elem], v: &[F::Elem]| common::add(f, &u.iter().map(|t| f.mul(c, t)).collect::<Vec<_>>(), v);
    let scaled = |v: Vec<F::Elem>| v.iter().map(|t| f.mul(c, t)).collect::<Vec<_>>();
    prop_assert_eq!(a.mul(&lin(x, y), z), common::add(f, &scaled(a.mul(x, z)), &a.mul(y, z)));
    prop_assert_eq!(a.mul(z, &lin(x, y)), common::add(f, &scaled(a.mul(z, x)), &a.mul(z, y)));
    prop_assert_eq!(a.mul(x, y), common::mul(a, x, y));
    Ok(())
}

fn prime_algebra(p: u32, n: usize) -> impl Strategy<Value = Algebra<PrimeField>> {
    prop::collection::vec(0..p, n * n * n)
        .prop_map(move |t| Algebra::from_fn(gf(p), n, |i, j| t[(i * n + j) * n..(i * n + j + 1) * n].to_vec()))
}

fn rational_algebra(n: usize) -> impl Strategy<Value = Algebra<Rationals>> {
    prop::collection::vec(-4i64..=4, n * n * n).prop_map(move |t| {
        Algebra::from_fn(Rationals, n, |i, j| {
            t[(i * n + j) * n..(i * n + j + 1) * n].iter().map(|&x| Rationals.from_i64(x)).collect()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rref_is_idempotent_over_gf5(rows in prime_rows(5, 6, 5)) {
        let f = gf(5);
        let m = Matrix::from_rows(5, rows.clone()).unwrap();
        let once = rref(&f, &m);
        prop_assert_eq!(rref(&f, &once), once.clone());
        prop_assert_eq!(once.rank(&f), m.rank(&f));
        prop_assert_eq!(once.to_rows(), common::rref(&f, rows, 5));
    }

    #[test]
    fn rref_is_idempotent_over_q(rows in rational_rows(5, 4)) {
        let m = Matrix::from_rows(4, to_q(&rows)).unwrap();
        let once = rref(&Rationals, &m);
        prop_assert_eq!(rref(&Rationals, &once), once.clone());
        prop_assert_eq!(once.to_rows(), common::rref(&Rationals, to_q(&rows), 4));
    }

    #[test]
    fn dimension_formula_over_gf2(u in prime_rows(2, 5, 5), w in prime_rows(2, 5, 5)) {
        let f = gf(2);
        dimension_formula(&span(&f, 5, &u), &span(&f, 5, &w))?;
    }

    #[test]
    fn dimension_formula_over_gf7(u in prime_rows(7, 4, 5), w in prime_rows(7, 4, 5)) {
        let f = gf(7);
        dimension_formula(&span(&f, 5, &u), &span(&f, 5, &w))?;
    }

    #[test]
    fn dimension_formula_over_q(u in rational_rows(4, 5), w in rational_rows(4, 5)) {
        dimension_formula(&span(&Rationals, 5, &to_q(&u)), &span(&Rationals, 5, &to_q(&w)))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn intersection_matches_enumeration(p in prop::sample::select(vec![2u32, 3]), n in 1usize..=4, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let f = gf(p);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut pick = || -> Vec<Vec<u32>> {
            let k = rng.gen_range(0..=n);
            (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect()
        };
        let (u, w) = (pick(), pick());
        let (su, sw) = (span(&f, n, &u), span(&f, n, &w));
        let expected: common::Set = common::span_set(&f, n, &u).intersection(&common::span_set(&f, n, &w)).cloned().collect();
        let meet = su.intersect(&sw).unwrap();
        prop_assert_eq!(common::span_set(&f, n, &meet.basis().to_rows()), expected);
        let sum = su.sum(&sw).unwrap();
        let joined: Vec<Vec<u32>> = u.iter().chain(&w).cloned().collect();
        prop_assert_eq!(common::span_set(&f, n, &sum.basis().to_rows()), common::span_set(&f, n, &joined));
    }

    #[test]
    fn multiplication_is_bilinear_over_gf5(
        a in prime_algebra(5, 3),
        x in prop::collection::vec(0u32..5, 3),
        y in prop::collection::vec(0u32..5, 3),
        z in prop::collection::vec(0u32..5, 3),
        c in 0u32..5,
    ) {
        bilinear(&a, &x, &y, &z, &c)?;
    }

    #[test]
    fn multiplication_is_bilinear_over_q(
        a in rational_algebra(3),
        v in rational_rows(3, 3).prop_filter("three vectors", |v| v.len() == 3),
        c in -5i64..=5,
    ) {
        let v = to_q(&v);
        bilinear(&a, &v[0], &v[1], &v[2], &Rationals.from_i64(c))?;
    }

    #[test]
    fn algebra_files_round_trip(a in prime_algebra(3, 3), b in rational_algebra(2)) {
        for any in [AnyAlgebra::from(a), AnyAlgebra::from(b)] {
            let text = canonical_algebra(&any);
            let back = parse_algebra(&text).unwrap();
            prop_assert_eq!(canonical_algebra(&back), text);
            prop_assert_eq!(back, any);
        }
    }
}
