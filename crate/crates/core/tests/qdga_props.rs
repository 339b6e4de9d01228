//! Property tests for graded q-differential algebras.

use nilcomplex::qdga::{
    ad_q_power_formula_check, cycles_ideal_check, d_power_product_check, matrix_example, sign_identity_check, tensor_algebra,
    triviality_check, universal_envelope, FiniteAlgebra,
};
use nilcomplex::{Field, QContext};
use proptest::prelude::*;

fn contexts() -> Vec<QContext> {
    let mut v: Vec<QContext> = [(7, 2, 3), (5, 2, 4), (11, 3, 5), (13, 3, 3), (13, 5, 4)].iter().map(|&(p, q, n)| QContext::prime(p, q, n).unwrap()).collect();
    let f = Field::cyclotomic(3).unwrap();
    let z = f.zeta().unwrap();
    v.push(QContext::new(f, z, 3).unwrap());
    v
}

#[test]
fn sign_identity_in_every_context() {
    for ctx in contexts() {
        sign_identity_check(&ctx).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn matrix_example_is_a_q_differential_algebra(which in 0usize..5, raw in prop::collection::vec(1i64..100, 5)) {
        let ctx = contexts()[which].clone();
        let f = ctx.field();
        let n = ctx.order();
        let lambdas: Vec<_> = raw[..n].iter().map(|&x| f.from_i64(x)).collect();
        prop_assume!(lambdas.iter().all(|l| !f.is_zero(l)));
        let ex = matrix_example(&ctx, &lambdas).unwrap();
        cycles_ideal_check(&ex.algebra, &ex.d).unwrap();
        for k in 1..=n {
            ad_q_power_formula_check(&ex.algebra, &ex.e, k).unwrap();
            d_power_product_check(&ex.algebra, &ex.d, k).unwrap();
        }
    }
}

#[test]
fn tensor_algebras_are_trivial() {
    for ctx in contexts().into_iter().take(3) {
        for name in ["ground", "dual_numbers", "k_x_k"] {
            let a = FiniteAlgebra::preset(name, ctx.field()).unwrap();
            let t = tensor_algebra(&a, &ctx, 4).unwrap();
            cycles_ideal_check(t.algebra(), t.d1()).unwrap();
            universal_envelope(&t).unwrap();
            triviality_check(&t, None).unwrap_or_else(|e| panic!("{ctx}, {name}: {e}"));
        }
    }
}
