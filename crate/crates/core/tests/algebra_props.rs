use proptest::prelude::*;

use zinbiel::catalog;
use zinbiel::sampling;
use zinbiel::{AlgebraSpec, Scalar, Vector};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=6).prop_map(|(p, q)| Scalar::frac(p, q))
}

/// A random algebra together with three vectors and a scalar.
fn setup() -> impl Strategy<Value = (AlgebraSpec, Vector, Vector, Vector, Scalar)> {
    (1usize..=4, any::<u64>()).prop_flat_map(|(n, seed)| {
        let a = sampling::sparse_algebra(&mut sampling::rng(seed), "random", n);
        let v = || prop::collection::vec(scalar(), n).prop_map(Vector);
        (Just(a), v(), v(), v(), scalar())
    })
}

proptest! {
    #[test]
    fn product_is_bilinear((a, u, v, w, c) in setup()) {
        let cu_w = u.scale(&c).add(&w).unwrap();
        let lhs = a.product(&cu_w, &v).unwrap();
        let rhs = a.product(&u, &v).unwrap().scale(&c).add(&a.product(&w, &v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = a.product(&v, &cu_w).unwrap();
        let rhs = a.product(&v, &u).unwrap().scale(&c).add(&a.product(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_operators_agree_with_product((a, u, v, _w, _c) in setup()) {
        let p = a.product(&u, &v).unwrap();
        prop_assert_eq!(a.left_mult(&u).unwrap().apply(&v).unwrap(), p.clone());
        prop_assert_eq!(a.right_mult(&v).unwrap().apply(&u).unwrap(), p);
    }

    #[test]
    fn multiplication_operators_are_linear((a, u, _v, w, c) in setup()) {
        let cu_w = u.scale(&c).add(&w).unwrap();
        let l = a.left_mult(&u).unwrap().scale(&c).add(&a.left_mult(&w).unwrap()).unwrap();
        let r = a.right_mult(&u).unwrap().scale(&c).add(&a.right_mult(&w).unwrap()).unwrap();
        prop_assert_eq!(a.left_mult(&cu_w).unwrap(), l);
        prop_assert_eq!(a.right_mult(&cu_w).unwrap(), r);
    }

    #[test]
    fn commutator_is_antisymmetric((a, u, v, _w, _c) in setup()) {
        let br = a.commutator();
        let uv = br.product(&u, &v).unwrap();
        let vu = br.product(&v, &u).unwrap();
        prop_assert!(uv.add(&vu).unwrap().is_zero());
    }

    #[test]
    fn zinbiel_residual_vanishes_on_catalog(
        idx in 0usize..24,
        seed in any::<u64>(),
    ) {
        let e = catalog::entry(catalog::list_entries()[idx]).unwrap();
        let mut rng = sampling::rng(seed);
        for b in e.sample_bindings() {
            let a = e.instantiate(&b).unwrap();
            let (u, v, w) = (
                sampling::vector(&mut rng, a.dim()),
                sampling::vector(&mut rng, a.dim()),
                sampling::vector(&mut rng, a.dim()),
            );
            prop_assert!(a.zinbiel_residual(&u, &v, &w).unwrap().is_zero());
        }
    }

    #[test]
    fn residual_zero_on_basis_iff_zero_everywhere((a, u, v, w, _c) in setup()) {
        // the residual is trilinear, so basis triples decide it
        if a.is_zinbiel() {
            prop_assert!(a.zinbiel_residual(&u, &v, &w).unwrap().is_zero());
        } else {
            prop_assert!(!a.check_zinbiel().is_empty());
        }
    }
}

#[test]
fn zinbiel_symmetrization_is_associative_on_catalog() {
    for id in catalog::list_entries() {
        let e = catalog::entry(id).unwrap();
        for b in e.sample_bindings() {
            assert!(e.instantiate(&b).unwrap().symmetrized_is_associative(), "{id}");
        }
    }
}
