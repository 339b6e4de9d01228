//! Property tests for scalars and dense linear algebra.

use nilcomplex::random::{random_elem, random_matrix, rng};
use nilcomplex::{Field, Matrix, QContext};
use proptest::prelude::*;

fn contexts() -> Vec<QContext> {
    let mut v: Vec<QContext> = [(7, 2, 3), (5, 2, 4), (11, 3, 5), (13, 3, 3)].iter().map(|&(p, q, n)| QContext::prime(p, q, n).unwrap()).collect();
    for n in [3, 4, 5] {
        let f = Field::cyclotomic(n).unwrap();
        let z = f.zeta().unwrap();
        v.push(QContext::new(f, z, n).unwrap());
    }
    v
}

#[test]
fn q_numbers_of_the_inverse() {
    for ctx in contexts() {
        let f = ctx.field();
        let inv = ctx.inverse().unwrap();
        for n in 0..12usize {
            let lhs = inv.q_number(n);
            let rhs = f.mul(&ctx.q_pow(1 - n as i64).unwrap(), &ctx.q_number(n));
            assert_eq!(lhs, rhs, "{ctx} n={n}");
        }
    }
}

#[test]
fn q_binomial_is_a_factorial_quotient() {
    for ctx in contexts().into_iter().filter(|c| c.assumptions().a1) {
        let f = ctx.field();
        for n in 0..=8usize {
            for m in 0..=n {
                let den = f.mul(&ctx.q_factorial(m), &ctx.q_factorial(n - m));
                if f.is_zero(&den) {
                    continue;
                }
                let quotient = f.div(&ctx.q_factorial(n), &den).unwrap();
                assert_eq!(ctx.q_binomial(n, m).unwrap(), quotient, "{ctx} ({n} {m})");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclotomic_field_axioms(n in prop::sample::select(vec![3usize, 4, 5, 7, 8]), seed in any::<u64>()) {
        let f = Field::cyclotomic(n).unwrap();
        let mut r = rng(seed);
        let (x, y, z) = (random_elem(&f, &mut r), random_elem(&f, &mut r), random_elem(&f, &mut r));
        prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
        if !f.is_zero(&x) {
            prop_assert!(f.is_one(&f.mul(&x, &f.inv(&x).unwrap())));
        }
    }

    #[test]
    fn rank_of_transpose(p in prop::sample::select(vec![2u64, 3, 7]), rows in 0usize..7, cols in 0usize..7, seed in any::<u64>()) {
        let f = Field::prime(p).unwrap();
        let m = random_matrix(&f, rows, cols, &mut rng(seed));
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_and_image(p in prop::sample::select(vec![2u64, 5]), rows in 1usize..7, cols in 1usize..7, seed in any::<u64>()) {
        let f = Field::prime(p).unwrap();
        let m = random_matrix(&f, rows, cols, &mut rng(seed));
        let im = m.image();
        prop_assert_eq!(im.dim(), m.rank());
        prop_assert_eq!(m.kernel().dim() + m.rank(), cols);
        for k in m.kernel().basis() {
            prop_assert!(m.apply(k).iter().all(|x| f.is_zero(x)));
        }
        for v in im.basis() {
            let x = m.solve(v);
            prop_assert!(x.is_some());
            prop_assert_eq!(&m.apply(&x.unwrap()), v);
        }
    }

    #[test]
    fn solve_is_exact_or_inconsistent(rows in 1usize..6, cols in 1usize..6, seed in any::<u64>()) {
        let f = Field::prime(3).unwrap();
        let mut r = rng(seed);
        let m = random_matrix(&f, rows, cols, &mut r);
        let b: Vec<_> = (0..rows).map(|_| random_elem(&f, &mut r)).collect();
        match m.solve(&b) {
            Some(x) => prop_assert_eq!(m.apply(&x), b),
            None => {
                let aug = m.hstack(&Matrix::from_columns(&f, rows, &[b]));
                prop_assert!(aug.rank() > m.rank());
            }
        }
    }
}
