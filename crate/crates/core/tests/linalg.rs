use kinkeq::linalg::{extend_primitive, int_determinant, primitive_scale};
use kinkeq::{congruence, determinant, inertia, is_unimodular, BigInt, BigRational, IntMatrix, SymMatrix};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn sym_strategy(max_n: usize, bound: i64) -> impl Strategy<Value = SymMatrix> {
    (0..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((-bound..=bound, 1i64..=4), n * (n + 1) / 2).prop_map(move |v| {
            let mut g = SymMatrix::zeros(n);
            let mut it = v.into_iter();
            for i in 0..n {
                for j in i..n {
                    let (p, q) = it.next().unwrap();
                    g.set(i, j, BigRational::new(p.into(), q.into()));
                }
            }
            g
        })
    })
}

/// Unimodular matrix as a product of shears, swaps and sign flips.
fn unimodular_strategy(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec((0..n.max(1), 0..n.max(1), -3i64..=3, 0u8..3), 0..8).prop_map(
        move |ops| {
            let mut p = IntMatrix::identity(n);
            if n == 0 {
                return p;
            }
            for (i, j, c, kind) in ops {
                let mut rows = IntMatrix::identity(n).to_rows();
                match kind {
                    0 if i != j => rows[i][j] = c.into(),
                    1 => rows.swap(i, j),
                    _ => rows[i][i] = BigInt::from(-1),
                }
                p = &IntMatrix::from_rows(rows).unwrap() * &p;
            }
            p
        },
    )
}

fn sym_and_unimodular() -> impl Strategy<Value = (SymMatrix, IntMatrix)> {
    sym_strategy(5, 6).prop_flat_map(|g| {
        let n = g.size();
        (Just(g), unimodular_strategy(n))
    })
}

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(a: &[Vec<BigRational>]) -> BigRational {
    let n = a.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut total = BigRational::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = a[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &a[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

proptest! {
    #[test]
    fn sylvester_law((g, p) in sym_and_unimodular()) {
        let h = congruence(&g, &p).unwrap();
        prop_assert_eq!(inertia(&g), inertia(&h));
        prop_assert_eq!(determinant(&g), determinant(&h));
        let back = congruence(&h, &p.unimodular_inverse().unwrap()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn determinant_matches_cofactor_expansion(g in sym_strategy(5, 9)) {
        prop_assert_eq!(determinant(&g), cofactor_det(&g.to_rows()));
    }

    #[test]
    fn inertia_counts_add_up(g in sym_strategy(6, 5)) {
        let i = inertia(&g);
        prop_assert_eq!(i.size(), g.size());
        prop_assert_eq!(i.n_zero == 0, !determinant(&g).is_zero());
        prop_assert_eq!(inertia(&g.neg()), kinkeq::Inertia::new(i.n_minus, i.n_plus, i.n_zero));
    }

    #[test]
    fn unimodular_products(p in unimodular_strategy(4)) {
        prop_assert!(is_unimodular(&p));
        prop_assert!(int_determinant(&p).abs().is_one());
        prop_assert!((&p * &p.unimodular_inverse().unwrap()).is_identity());
    }

    #[test]
    fn primitive_vectors_extend(v in proptest::collection::vec(-30i64..=30, 1..6)) {
        let b: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        let g = b.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        prop_assume!(g.is_one());
        let u = extend_primitive(&b).unwrap();
        prop_assert_eq!(u.column(0), b.clone());
        prop_assert!(int_determinant(&u).abs().is_one());
        if b.len() >= 2 {
            prop_assert_eq!(int_determinant(&u), BigInt::one());
        }
    }

    #[test]
    fn primitive_scale_is_positive_multiple(v in proptest::collection::vec((-20i64..=20, 1i64..=6), 1..6)) {
        let u: Vec<BigRational> = v.iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect();
        prop_assume!(u.iter().any(|x| !x.is_zero()));
        let b = primitive_scale(&u).unwrap();
        let g = b.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        prop_assert!(g.is_one());
        // b = t·u for one positive rational t.
        let k = u.iter().position(|x| !x.is_zero()).unwrap();
        let t = BigRational::from_integer(b[k].clone()) / &u[k];
        prop_assert!(t.is_positive());
        for (bi, ui) in b.iter().zip(&u) {
            prop_assert_eq!(BigRational::from_integer(bi.clone()), &t * ui);
        }
    }
}

#[test]
fn empty_matrix_conventions() {
    let e = SymMatrix::empty();
    assert_eq!(determinant(&e), BigRational::one());
    assert_eq!(inertia(&e), kinkeq::Inertia::new(0, 0, 0));
    assert_eq!(congruence(&e, &IntMatrix::identity(0)).unwrap(), e);
}

#[test]
fn counterexample_facts() {
    let a = SymMatrix::from_i64(&[
        &[2, 1, 1, 1, 0, 0],
        &[1, 2, 1, 1, 1, 0],
        &[1, 1, 2, 1, 1, 1],
        &[1, 1, 1, 2, 1, 1],
        &[0, 1, 1, 1, 2, 1],
        &[0, 0, 1, 1, 1, 2],
    ])
    .unwrap();
    assert!(inertia(&a).is_positive_definite());
    assert_eq!(determinant(&a), BigRational::from_integer(3.into()));
}

#[test]
fn congruence_rejects_bad_input() {
    let g = SymMatrix::diag_i64(&[1, 2]);
    assert!(congruence(&g, &IntMatrix::from_i64(&[&[2, 0], &[0, 1]])).is_err());
    assert!(congruence(&g, &IntMatrix::identity(3)).is_err());
    assert!(extend_primitive(&[BigInt::from(2), BigInt::from(4)]).is_err());
    assert!(extend_primitive(&[]).is_err());
}
