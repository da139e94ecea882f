mod common;

use common::*;
use implica_core::{
    derived_order, fixtures, relationalize, stone_base, stone_represent, verify_representation, Filter, Mode,
};

#[test]
fn invariants_on_every_ia_member() {
    for alg in ia_members() {
        let sr = stone_represent(&alg).unwrap();
        sr.check(&alg).unwrap();
        let n = alg.len();
        let k = sr.base.len();
        assert!(k < 1 << n);
        assert_eq!(sr.base, stone_base(&alg).unwrap());
        // base is exactly the brute-force prime filters
        let brute = proper_filters(&alg).into_iter().filter(|f| is_prime(&alg, f)).count();
        assert_eq!(k, brute);

        let full: Set = (0..k).collect();
        for (a, b) in tuples2(n) {
            let expected: Set = full.difference(&sr.map[a]).chain(&sr.map[b]).copied().collect();
            assert_eq!(sr.map[alg.arrow(a, b)], expected);
            if a != b {
                assert_ne!(sr.map[a], sr.map[b]);
            }
        }
    }
}

#[test]
fn order_reflection() {
    for alg in ia_members() {
        let sr = stone_represent(&alg).unwrap();
        let ord = derived_order(&alg).unwrap();
        for (a, b) in tuples2(alg.len()) {
            assert_eq!(sr.map[a].is_subset(&sr.map[b]), ord.leq(a, b));
        }
    }
}

#[test]
fn both_lifts_verify() {
    for alg in ia_members() {
        let sr = stone_represent(&alg).unwrap();
        for mode in [Mode::Relative, Mode::Absolute] {
            let rep = relationalize(&sr, mode);
            assert_eq!(rep.mode, mode);
            assert!(verify_representation(&alg, &rep).unwrap().passed(), "{alg:?} {mode}");
        }
    }
}

#[test]
fn base_sizes() {
    assert_eq!(stone_base(&fixtures::b4()).unwrap(), vec![Filter::new([1, 3]), Filter::new([2, 3])]);
    assert_eq!(stone_base(&fixtures::ia2()).unwrap().len(), 1);
    assert!(stone_base(&fixtures::singleton()).unwrap().is_empty());
}
