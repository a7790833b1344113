//! Randomized algebraic properties: ring axioms for the sparse polynomials,
//! the windowed-product contract, coarse specialization as a homomorphism,
//! and the group axioms for permutation composition.

use multimahonian::permstat::all_permutations;
use multimahonian::{MultivarPolynomial, Permutation, Window};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly(k: usize, n: usize) -> impl Strategy<Value = MultivarPolynomial> {
    proptest::collection::vec((proptest::collection::vec(0u32..3, k * n), -5i64..=5), 0..6)
        .prop_map(move |terms| {
            let mut p = MultivarPolynomial::zero(k, n);
            for (e, c) in terms {
                p.add_term(e, BigInt::from(c));
            }
            p
        })
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    prop::sample::select(all_permutations(n))
}

proptest! {
    #[test]
    fn addition_commutes(a in poly(2, 2), b in poly(2, 2)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn multiplication_commutes(a in poly(2, 2), b in poly(2, 2)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_associates(a in poly(2, 2), b in poly(2, 2), c in poly(2, 2)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in poly(2, 2), b in poly(2, 2), c in poly(2, 2)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn windowed_product_is_truncated_product(
        a in poly(2, 2),
        b in poly(2, 2),
        cap in 0u32..5,
    ) {
        let w = Window::new(cap);
        prop_assert_eq!(a.mul_windowed(&b, w), a.mul(&b).truncate(w));
    }

    #[test]
    fn coarse_specialization_is_a_ring_homomorphism(a in poly(2, 3), b in poly(2, 3)) {
        prop_assert_eq!(
            a.add(&b).specialize_coarse(),
            a.specialize_coarse().add(&b.specialize_coarse())
        );
        prop_assert_eq!(
            a.mul(&b).specialize_coarse(),
            a.specialize_coarse().mul(&b.specialize_coarse())
        );
    }

    #[test]
    fn composition_associates(a in perm(8), b in perm(8), c in perm(8)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn inverse_is_two_sided(a in perm(8)) {
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.inverse().compose(&a).is_identity());
    }
}
