//! Property tests for N-differential modules and graded N-complexes.

use nilcomplex::ncomplex::{hexagon_check, induced_map, multiplicities, NDiffModule};
use nilcomplex::linalg::{vec_add, vec_scale};
use nilcomplex::random::{random_complex, random_elem, random_graded_ses, random_module, random_module_map, random_ses, rng};
use nilcomplex::{Field, QContext};
use proptest::prelude::*;

fn context(which: usize) -> QContext {
    match which {
        0 => QContext::prime(7, 2, 3).unwrap(),
        1 => QContext::prime(5, 2, 4).unwrap(),
        2 => QContext::prime(11, 3, 5).unwrap(),
        3 => QContext::prime(3, 1, 3).unwrap(),
        _ => {
            let f = Field::cyclotomic(3).unwrap();
            let z = f.zeta().unwrap();
            QContext::new(f, z, 3).unwrap()
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn boundaries_lie_in_cycles(which in 0usize..5, dim in 1usize..10, seed in any::<u64>()) {
        let ctx = context(which);
        let e = random_module(&ctx, dim, &mut rng(seed));
        for n in 1..ctx.order() {
            prop_assert!(e.boundaries(n).is_subspace_of(&e.cycles(n)));
        }
    }

    #[test]
    fn hexagons_are_exact(which in 0usize..5, dim in 1usize..10, seed in any::<u64>()) {
        let ctx = context(which);
        let e = random_module(&ctx, dim, &mut rng(seed));
        let n = ctx.order();
        for l in 1..n {
            for m in 1..n - l {
                prop_assert!(hexagon_check(&e, l, m).is_ok());
            }
        }
    }

    #[test]
    fn homology_is_symmetric(which in 0usize..5, dim in 1usize..12, seed in any::<u64>()) {
        let ctx = context(which);
        let e = random_module(&ctx, dim, &mut rng(seed));
        let h = e.homology_dims().unwrap();
        let n = ctx.order();
        for k in 1..n {
            prop_assert_eq!(h[k - 1], h[n - k - 1]);
        }
    }

    #[test]
    fn multiplicities_add_up(which in 0usize..4, dim in 0usize..12, seed in any::<u64>()) {
        let ctx = context(which);
        let e = random_module(&ctx, dim, &mut rng(seed));
        let m = multiplicities(&e);
        prop_assert_eq!(m.iter().enumerate().map(|(i, x)| (i + 1) * x).sum::<usize>(), dim);
    }

    /// Moving a representative by a boundary does not change the class of its image.
    #[test]
    fn induced_maps_ignore_boundaries(which in 0usize..4, seed in any::<u64>()) {
        let ctx = context(which);
        let fld = ctx.field();
        let mut r = rng(seed);
        let e = random_module(&ctx, 6, &mut r);
        let f = random_module(&ctx, 7, &mut r);
        let phi = random_module_map(&e, &f, &mut r);
        for n in 1..ctx.order() {
            let map = induced_map(&e, &f, &phi, n).unwrap();
            let (src, tgt) = (e.homology(n).unwrap(), f.homology(n).unwrap());
            let boundary: Vec<_> = e.boundaries(n).basis().iter().fold(vec![fld.zero(); 6], |acc, b| {
                vec_add(fld, &acc, &vec_scale(fld, &random_elem(fld, &mut r), b))
            });
            for (j, z) in src.representatives().iter().enumerate() {
                let moved = vec_add(fld, z, &boundary);
                prop_assert_eq!(tgt.coords(&phi.apply(&moved)).unwrap(), map.column(j));
            }
        }
    }

    #[test]
    fn ses_hexagons_are_exact(which in 0usize..4, dim in 1usize..9, seed in any::<u64>()) {
        let ctx = context(which);
        let s = random_ses(&ctx, dim, &mut rng(seed));
        for n in 1..ctx.order() {
            prop_assert!(s.hexagon_ses_check(n).is_ok());
        }
    }

    #[test]
    fn graded_long_sequences_are_exact(which in 0usize..3, strings in 1usize..6, seed in any::<u64>()) {
        let ctx = context(which);
        let g = random_graded_ses(&ctx, -2, 6, strings, &mut rng(seed)).unwrap();
        for n in 1..ctx.order() {
            for k in -2..=6 {
                prop_assert!(g.long_exact_check(n, k).is_ok());
            }
        }
    }

    #[test]
    fn graded_boundaries_lie_in_cycles(which in 0usize..3, strings in 0usize..6, seed in any::<u64>()) {
        let ctx = context(which);
        let c = random_complex(&ctx, 0, 7, strings, &mut rng(seed));
        for m in 1..ctx.order() {
            for n in 0..=7 {
                prop_assert!(c.boundaries(m, n).is_subspace_of(&c.cycles(m, n)));
            }
        }
        let total: usize = c.homology_table().unwrap().cells.iter().map(|x| x.dim).sum();
        let module = c.total();
        let ungraded: usize = module.homology_dims().unwrap().iter().sum();
        prop_assert_eq!(total, ungraded);
    }
}

#[test]
fn zero_module_has_full_homology() {
    let ctx = context(0);
    let e = NDiffModule::zero(&ctx, 3);
    assert_eq!(e.homology_dims().unwrap(), vec![3, 3]);
}
