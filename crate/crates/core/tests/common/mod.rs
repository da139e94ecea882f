//! Brute-force reference implementations shared by the integration tests.
//!
//! The class, filter and weakening references use only the table
//! accessors of `FiniteAlgebra`, never the library's own checks.

#![allow(dead_code)]

use std::collections::BTreeSet;

use implica_core::corpus;
use implica_core::fixtures;
use implica_core::{FiniteAlgebra, PairSet, Profile};

pub type Set = BTreeSet<usize>;

pub fn tuples2(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

pub fn tuples3(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    tuples2(n).flat_map(move |(a, b)| (0..n).map(move |c| (a, b, c)))
}

pub fn self_arrow_constant(alg: &FiniteAlgebra) -> Option<usize> {
    let t = alg.arrow(0, 0);
    (0..alg.len()).all(|a| alg.arrow(a, a) == t).then_some(t)
}

pub fn is_ia(alg: &FiniteAlgebra) -> bool {
    let n = alg.len();
    let ar = |a, b| alg.arrow(a, b);
    let declared_ok = alg.one().is_none_or(|o| (0..n).all(|a| ar(a, a) == o));
    declared_ok
        && tuples2(n).all(|(a, b)| ar(ar(a, b), a) == a && ar(ar(a, b), b) == ar(ar(b, a), a))
        && tuples3(n).all(|(a, b, c)| ar(a, ar(b, c)) == ar(b, ar(a, c)))
}

pub fn is_positive_ia(alg: &FiniteAlgebra) -> bool {
    let Some(one) = self_arrow_constant(alg) else { return false };
    if alg.one().is_some_and(|o| o != one) {
        return false;
    }
    let n = alg.len();
    let ar = |a, b| alg.arrow(a, b);
    tuples2(n).all(|(a, b)| ar(a, ar(b, a)) == one)
        && tuples3(n).all(|(a, b, c)| ar(ar(a, ar(b, c)), ar(ar(a, b), ar(a, c))) == one)
        && tuples2(n).all(|(a, b)| a == b || ar(a, b) != one || ar(b, a) != one)
        && (0..n).all(|a| ar(a, one) == one)
}

pub fn contraction(alg: &FiniteAlgebra) -> bool {
    tuples2(alg.len()).all(|(a, b)| alg.arrow(alg.arrow(a, b), a) == a)
}

/// Carrier-size-3-and-below corpus plus every fixture.
pub fn corpus_with_fixtures() -> Vec<FiniteAlgebra> {
    corpus::exhaustive(3).chain(fixtures::all().into_iter().map(|(_, a)| a)).collect()
}

pub fn ia_members() -> Vec<FiniteAlgebra> {
    corpus_with_fixtures().into_iter().filter(is_ia).collect()
}

pub fn positive_members() -> Vec<FiniteAlgebra> {
    corpus_with_fixtures().into_iter().filter(is_positive_ia).collect()
}

pub fn subsets(n: usize) -> impl Iterator<Item = Set> {
    (0u32..1 << n).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

pub fn is_filter(alg: &FiniteAlgebra, s: &Set) -> bool {
    let Some(one) = self_arrow_constant(alg) else { return false };
    s.contains(&one) && tuples2(alg.len()).all(|(a, b)| !(s.contains(&a) && s.contains(&alg.arrow(a, b))) || s.contains(&b))
}

pub fn all_filters(alg: &FiniteAlgebra) -> Vec<Set> {
    subsets(alg.len()).filter(|s| is_filter(alg, s)).collect()
}

pub fn proper_filters(alg: &FiniteAlgebra) -> Vec<Set> {
    all_filters(alg).into_iter().filter(|s| s.len() < alg.len()).collect()
}

/// Intersection of every filter containing `seed`.
pub fn least_filter(alg: &FiniteAlgebra, seed: &Set) -> Set {
    let mut out: Set = (0..alg.len()).collect();
    for f in all_filters(alg) {
        if seed.is_subset(&f) {
            out = out.intersection(&f).copied().collect();
        }
    }
    out
}

pub fn is_prime(alg: &FiniteAlgebra, f: &Set) -> bool {
    f.len() < alg.len()
        && tuples2(alg.len()).all(|(a, b)| {
            let join = alg.arrow(alg.arrow(a, b), b);
            !f.contains(&join) || f.contains(&a) || f.contains(&b)
        })
}

pub fn is_irreducible(alg: &FiniteAlgebra, f: &Set) -> bool {
    let proper = proper_filters(alg);
    if !proper.contains(f) {
        return false;
    }
    let bigger: Vec<&Set> = proper.iter().filter(|g| f.is_subset(g) && *g != f).collect();
    !bigger.iter().any(|g| bigger.iter().any(|h| g.intersection(h).copied().collect::<Set>() == *f))
}

pub fn pairs(base: usize) -> Vec<(usize, usize)> {
    tuples2(base).collect()
}

pub fn all_relations(base: usize) -> Vec<PairSet> {
    let ps = pairs(base);
    (0u64..1 << ps.len())
        .map(|m| PairSet::from_pairs(base, ps.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, &p)| p)))
        .collect()
}

/// Direct reading of the universally quantified weakening implication.
pub fn weakening_arrow_forall(leq: &PairSet, r: &PairSet, s: &PairSet) -> PairSet {
    let n = leq.base();
    let mut out = PairSet::empty(n);
    for (x, y) in tuples2(n) {
        let ok = tuples2(n).all(|(xp, yp)| {
            let premise = leq.contains(xp, x) && leq.contains(y, yp) && r.contains(xp, yp);
            !premise || s.contains(xp, yp)
        });
        if ok {
            out.insert(x, y);
        }
    }
    out
}

/// Fixture, profile pairs exercised by the search/oracle comparisons.
pub fn search_cases() -> Vec<(&'static str, FiniteAlgebra, Profile)> {
    let arrow = Profile::ARROW;
    let ac = Profile::ARROW_COMPOSE;
    vec![
        ("ia2", fixtures::ia2(), arrow),
        ("h3", fixtures::h3(), arrow),
        ("m2", fixtures::m2(), arrow),
        ("b4", fixtures::b4(), arrow),
        ("b4-meet", fixtures::b4_meet(), arrow),
        ("b4-meet", fixtures::b4_meet(), ac),
        ("b4-meet", fixtures::b4_meet(), ac.with_zero_empty()),
        ("s2", fixtures::s2(), ac),
        ("s2", fixtures::s2(), ac.with_zero_empty()),
        ("singleton", fixtures::singleton(), ac),
        ("all-pairs", fixtures::all_pairs_monoid(), ac),
        ("all-pairs", fixtures::all_pairs_monoid(), ac.with_strict_identity()),
        ("all-pairs", fixtures::all_pairs_monoid(), ac.with_zero_empty()),
    ]
}

/// Compares search (iso pruning on and off) with the oracle for every
/// search case, both modes and bounds up to `max_base`. Returns the first
/// disagreement.
pub fn search_oracle_disagreement(max_base: usize) -> Option<String> {
    use implica_core::{oracle_enumerate, search_representation, verify_representation, Mode, SearchConfig};
    for (name, alg, profile) in search_cases() {
        for mode in [Mode::Relative, Mode::Absolute] {
            let mut oracle_found = false;
            for k in 0..=max_base {
                let oracle = oracle_enumerate(&alg, k, mode, profile);
                let gated = oracle.is_err();
                if let Ok(o) = &oracle {
                    if let Some(rep) = o.found() {
                        if !verify_representation(&alg, rep).unwrap().passed() {
                            return Some(format!("{name}: oracle witness fails"));
                        }
                    }
                    oracle_found |= o.is_found();
                }
                for iso in [false, true] {
                    let cfg = SearchConfig::new(k, mode, profile).up_to_iso(iso);
                    let res = search_representation(&alg, &cfg);
                    if res.is_err() != gated {
                        return Some(format!("{name} {mode} {profile} base {k} iso {iso}: gate mismatch"));
                    }
                    let Ok(out) = res else { continue };
                    if out.is_found() != oracle_found {
                        return Some(format!(
                            "{name} {mode} {profile} base {k} iso {iso}: search {} oracle {}",
                            out.is_found(),
                            oracle_found
                        ));
                    }
                    if let Some(rep) = out.found() {
                        let rep_ok = verify_representation(&alg, rep).unwrap().passed()
                            && rep.mode == mode
                            && rep.profile == profile
                            && rep.base_size() <= k;
                        if !rep_ok {
                            return Some(format!("{name} {mode} base {k}: witness does not re-verify"));
                        }
                    }
                }
            }
        }
    }
    None
}
