//! Property tests for (co)simplicial builders and the comparison with ordinary homology.

use nilcomplex::qdga::FiniteAlgebra;
use nilcomplex::simplicial::{
    build_hochschild, build_simplicial_set_module, psi_bar_maps, theorem1_diagram, theorem234_check, theorem4_dictionary,
    theorem4_simplicial_check, Bimodule, SimplicialComplexK,
};
use nilcomplex::QContext;
use proptest::prelude::*;

fn complex_strategy() -> impl Strategy<Value = SimplicialComplexK> {
    (1usize..=4).prop_flat_map(|v| {
        prop::collection::vec(prop::collection::btree_set(0..v, 1..=v.min(3)), 1..4)
            .prop_map(move |facets| SimplicialComplexK::new(v, facets.into_iter().map(|f| f.into_iter().collect()).collect()).unwrap())
    })
}

fn context(which: usize) -> QContext {
    [(3, 1, 3), (7, 2, 3), (5, 2, 4), (2, 1, 2)].map(|(p, q, n)| QContext::prime(p, q, n).unwrap())[which].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Builders verify the simplicial identities on construction; the alternating
    /// differential then squares to zero and the q-differentials are N-nilpotent.
    #[test]
    fn simplicial_sets_are_consistent(k in complex_strategy(), which in 0usize..3) {
        let ctx = context(which);
        let s = build_simplicial_set_module(&k, &ctx, 5).unwrap();
        let e = s.dual();
        prop_assert!(e.standard_differential().is_ok());
        prop_assert!(e.corollary34_check().is_ok());
        prop_assert!(e.lemma8_check(1).is_ok());
        prop_assert!(e.remark3_check(1).is_ok());
    }

    /// The chain dictionary against classical homology of the complex, over any field with (A₁).
    #[test]
    fn chain_dictionary_matches_classical_homology(k in complex_strategy(), which in 0usize..3) {
        let ctx = context(which);
        let s = build_simplicial_set_module(&k, &ctx, 6).unwrap();
        let classical = k.classical_homology(ctx.field(), 5);
        let dict = theorem4_dictionary(&s, 0).unwrap();
        for &(kk, dim, valid) in &dict.ordinary {
            if valid {
                prop_assert_eq!(dim, classical[kk]);
            }
        }
        for variant in 0..2 {
            prop_assert!(theorem4_simplicial_check(&s, variant).is_ok());
        }
    }

    #[test]
    fn cochain_comparison_maps(k in complex_strategy(), p in 0usize..3) {
        let ctx = context(1);
        let e = build_simplicial_set_module(&k, &ctx, 5).unwrap().dual();
        prop_assert!(theorem1_diagram(&e, p).is_ok());
        prop_assert!(theorem234_check(&e, p).is_ok());
        let r = psi_bar_maps(&e, p).unwrap();
        prop_assert!(r.isomorphisms_asserted);
    }
}

#[test]
fn mayer_homology_of_the_circle_over_z2() {
    // N = 2 and q = 1 recover ordinary homology with Z/2 coefficients.
    let ctx = context(3);
    let s = build_simplicial_set_module(&SimplicialComplexK::triangle_boundary(), &ctx, 4).unwrap();
    let table = s.chains_d(0).unwrap().homology_table().unwrap();
    assert_eq!(table.nonzero(), vec![(1, -1, 1), (1, 0, 1)]);
}

#[test]
fn hochschild_presets_follow_the_dictionary() {
    let ctx = context(1);
    for name in ["ground", "dual_numbers", "k_x_k"] {
        let a = FiniteAlgebra::preset(name, ctx.field()).unwrap();
        let e = build_hochschild(&a, &Bimodule::regular(&a), &ctx, 5).unwrap();
        for p in 0..3 {
            theorem234_check(&e, p).unwrap_or_else(|x| panic!("{name}, p={p}: {x}"));
        }
    }
}
