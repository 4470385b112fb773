//! Randomized checks of the structural guarantees.

use lie2alg::builders::{random_algebra, random_transport_data, RandomProfile};
use lie2alg::classify::{invariants, is_normal_form, normal_form, transport};
use lie2alg::cli::document::{parse_document, to_canonical_string, AlgebraDocument, MorphismDocument};
use lie2alg::{compose, inverse, verify, verify_morphism};
use proptest::prelude::*;

fn small() -> RandomProfile {
    RandomProfile::small()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn random_algebras_verify(seed in any::<u64>()) {
        let l = random_algebra(seed, &RandomProfile::default()).unwrap();
        prop_assert!(verify(&l).is_pass());
    }

    #[test]
    fn transport_preserves_validity_and_invariants(seed in any::<u64>(), data_seed in any::<u64>()) {
        let l = random_algebra(seed, &small()).unwrap();
        let (phi0, phi1, big_phi) = random_transport_data(data_seed, l.n0(), l.n1(), 3);
        let (moved, m) = transport(&l, &phi0, &phi1, &big_phi).unwrap();
        prop_assert!(verify(&moved).is_pass());
        prop_assert!(verify_morphism(&m).is_pass());
        prop_assert_eq!(invariants(&moved).unwrap(), invariants(&l).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent(seed in any::<u64>()) {
        let l = random_algebra(seed, &small()).unwrap();
        let (nf, m) = normal_form(&l).unwrap();
        prop_assert!(is_normal_form(&nf));
        prop_assert!(verify_morphism(&m).is_pass());
        prop_assert_eq!(normal_form(&nf).unwrap().0, nf);
    }

    #[test]
    fn composition_is_associative_and_inverts(seed in any::<u64>(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let l0 = random_algebra(seed, &small()).unwrap();
        let step = |l: &lie2alg::TwoTermAlgebra, s: u64| {
            let (p0, p1, f) = random_transport_data(s, l.n0(), l.n1(), 2);
            transport(l, &p0, &p1, &f).unwrap()
        };
        let (l1, m1) = step(&l0, a);
        let (l2, m2) = step(&l1, b);
        let (_, m3) = step(&l2, c);
        let left = compose(&compose(&m1, &m2).unwrap(), &m3).unwrap();
        let right = compose(&m1, &compose(&m2, &m3).unwrap()).unwrap();
        prop_assert_eq!(left.phi0(), right.phi0());
        prop_assert_eq!(left.phi1(), right.phi1());
        prop_assert_eq!(left.big_phi(), right.big_phi());
        prop_assert!(compose(&m1, &inverse(&m1).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), data_seed in any::<u64>()) {
        let l = random_algebra(seed, &small()).unwrap();
        let text = to_canonical_string(&AlgebraDocument::from_algebra(&l, None, None));
        let doc: AlgebraDocument = parse_document(&text, "generated").unwrap();
        prop_assert_eq!(doc.to_algebra().unwrap(), l.clone());
        prop_assert_eq!(to_canonical_string(&doc), text);

        let (p0, p1, f) = random_transport_data(data_seed, l.n0(), l.n1(), 2);
        let (_, m) = transport(&l, &p0, &p1, &f).unwrap();
        let text = to_canonical_string(&MorphismDocument::from_morphism(&m));
        let doc: MorphismDocument = parse_document(&text, "generated").unwrap();
        prop_assert_eq!(to_canonical_string(&doc), text);
    }
}
