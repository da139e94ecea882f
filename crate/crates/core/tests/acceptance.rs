//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use implica_core::relmodel::proper::{proper_structure, transitive_relations};
use implica_core::relmodel::weakening::{posets, weakening_relations};
use implica_core::{
    check_class, corpus, derived_order, empty_zero, enumerate_filters, fixtures, generated_filter, prime_discriminate,
    prime_extend, quotient_by_identity, relationalize, search_representation, stone_represent,
    verify_representation, weakening_arrow, weakening_check, ClassId, FilterKind, Mode, PairSet, Profile,
    RelContext, Representation, SearchConfig,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passes(alg: &implica_core::FiniteAlgebra, class: ClassId) -> bool {
    check_class(alg, class).map(|r| r.passed).unwrap_or(false)
}

fn class_inclusion() -> Check {
    let named = [fixtures::ia2(), fixtures::h3(), fixtures::b4(), fixtures::s2()];
    let algebras: Vec<_> = corpus::exhaustive(3).chain(named).collect();
    ensure(algebras.len() == 19_700 + 4, || format!("corpus has {} members", algebras.len()))?;
    for alg in &algebras {
        let ia = passes(alg, ClassId::Ia);
        let pos = passes(alg, ClassId::PositiveIa);
        ensure(ia == is_ia(alg) && pos == is_positive_ia(alg), || format!("checker disagrees on {alg:?}"))?;
        ensure(!ia || pos, || format!("ia but not positive-ia: {alg:?}"))?;
        ensure((pos && contraction(alg)) == ia, || format!("contraction characterization fails: {alg:?}"))?;
    }
    Ok(())
}

fn separation_witness() -> Check {
    let h3 = fixtures::h3();
    ensure(passes(&h3, ClassId::PositiveIa), || "H3 fails positive-ia".into())?;
    let report = check_class(&h3, ClassId::Ia).map_err(|e| e.to_string())?;
    let first = report.violations.first().ok_or("H3 passes ia")?;
    ensure(first.axiom == "Contraction", || format!("first violation is {}", first.axiom))?;
    let witness = h3.render_tuple(&first.witness);
    ensure(witness == "(b,a)", || format!("witness {witness}"))
}

fn filter_suite() -> Check {
    for alg in ia_members() {
        let fs = enumerate_filters(&alg, FilterKind::All).map_err(|e| e.to_string())?;
        for f in &fs {
            let members: Set = f.members().iter().copied().collect();
            for a in alg.elements() {
                let mut seed = members.clone();
                seed.insert(a);
                let g = generated_filter(&alg, f, a).map_err(|e| e.to_string())?;
                let g: Set = g.members().iter().copied().collect();
                ensure(g == least_filter(&alg, &seed), || format!("least filter fails on {alg:?}"))?;
                if !f.contains(a) {
                    let p = prime_extend(&alg, f, a).map_err(|e| format!("prime_extend: {e}"))?;
                    ensure(f.is_subset(&p) && !p.contains(a), || "bad prime extension".into())?;
                }
            }
            for (a, b) in tuples2(alg.len()) {
                if !f.contains(alg.arrow(a, b)) {
                    let p = prime_discriminate(&alg, f, a, b).map_err(|e| format!("prime_discriminate: {e}"))?;
                    ensure(f.is_subset(&p) && p.contains(a) && !p.contains(b), || "bad discrimination".into())?;
                }
            }
        }
        let prime = enumerate_filters(&alg, FilterKind::Prime).map_err(|e| e.to_string())?;
        let irreducible = enumerate_filters(&alg, FilterKind::Irreducible).map_err(|e| e.to_string())?;
        ensure(prime == irreducible, || format!("prime != irreducible on {alg:?}"))?;
    }
    Ok(())
}

fn stone_suite() -> Check {
    for alg in ia_members() {
        let sr = stone_represent(&alg).map_err(|e| e.to_string())?;
        sr.check(&alg)?;
        let ord = derived_order(&alg).map_err(|e| e.to_string())?;
        for (a, b) in tuples2(alg.len()) {
            ensure(sr.map[a].is_subset(&sr.map[b]) == ord.leq(a, b), || "order reflection fails".into())?;
        }
        for mode in [Mode::Relative, Mode::Absolute] {
            let ok = verify_representation(&alg, &relationalize(&sr, mode)).map_err(|e| e.to_string())?;
            ensure(ok.passed(), || format!("{mode} lift fails on {alg:?}"))?;
        }
    }
    let b4 = stone_represent(&fixtures::b4()).map_err(|e| e.to_string())?.base.len();
    let ia2 = stone_represent(&fixtures::ia2()).map_err(|e| e.to_string())?.base.len();
    ensure(b4 == 2 && ia2 == 1, || format!("base sizes b4 {b4}, ia2 {ia2}"))
}

fn transform_suite() -> Check {
    let pairs = fixtures::all_pairs_monoid();
    let rep = Representation {
        context: RelContext::absolute(2),
        map: vec![PairSet::empty(2), PairSet::full(2)],
        mode: Mode::Absolute,
        profile: Profile::ARROW_COMPOSE,
    };
    let q = quotient_by_identity(&pairs, &rep).map_err(|e| e.to_string())?;
    ensure(q.base_size() == 1 && q.profile.strict_identity, || "quotient is not one point".into())?;
    ensure(verify_representation(&pairs, &q).unwrap().passed(), || "quotient fails".into())?;

    let s2 = fixtures::s2();
    let rep = Representation {
        context: RelContext::new(PairSet::diagonal(2)),
        map: vec![PairSet::from_pairs(2, [(0, 0)]), PairSet::diagonal(2)],
        mode: Mode::Relative,
        profile: Profile::ARROW_COMPOSE,
    };
    let z = empty_zero(&s2, &rep).map_err(|e| e.to_string())?;
    ensure(z.base_size() == 1 && z.map[0].is_empty(), || "zero-emptying of S2 is not one point".into())?;
    ensure(verify_representation(&s2, &z).unwrap().passed(), || "zero-emptying output fails".into())?;

    let outputs = [(&pairs, &q, 2), (&s2, &z, 2)];
    for (alg, out, input_base) in outputs {
        let bound = alg.len() * alg.len() * input_base;
        ensure(out.base_size() <= bound, || format!("base {} exceeds {bound}", out.base_size()))?;
    }
    Ok(())
}

fn search_oracle_agreement() -> Check {
    match search_oracle_disagreement(2) {
        Some(msg) => Err(msg),
        None => {
            let cfg = SearchConfig::new(2, Mode::Relative, Profile::ARROW_COMPOSE);
            let out = search_representation(&fixtures::s2(), &cfg).map_err(|e| e.to_string())?;
            ensure(out.found().is_some_and(|r| r.base_size() == 1), || format!("S2 search gave {out:?}"))
        }
    }
}

fn proper_structures() -> Check {
    let mut count = 0;
    for base in 0..=3 {
        for top in transitive_relations(base).map_err(|e| e.to_string())? {
            let (alg, rep) = proper_structure(&top).map_err(|e| e.to_string())?;
            ensure(passes(&alg, ClassId::Isg), || format!("powerset of {} is not isg", top.render()))?;
            let ok = verify_representation(&alg, &rep).map_err(|e| e.to_string())?;
            ensure(ok.passed(), || format!("identity embedding of {} fails", top.render()))?;
            count += 1;
        }
    }
    ensure(count == 1 + 2 + 13 + 171, || format!("{count} transitive tops"))
}

fn weakening_suite() -> Check {
    for base in 0..=3 {
        for p in posets(base).map_err(|e| e.to_string())? {
            let weak = weakening_relations(&p).map_err(|e| e.to_string())?;
            for r in &weak {
                for s in &weak {
                    let out = weakening_arrow(&p, r, s).map_err(|e| e.to_string())?;
                    ensure(weakening_check(&p, &out).unwrap(), || "arrow output is not weakening".into())?;
                    ensure(out == weakening_arrow_forall(p.leq(), r, s), || "arrow disagrees with definition".into())?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("class inclusion over the size<=3 corpus and fixtures", class_inclusion),
        ("H3 separates positive-ia from ia at Contraction (b,a)", separation_witness),
        ("filter generation, primality and extension", filter_suite),
        ("Stone representation and relational lifts", stone_suite),
        ("identity quotient and zero-emptying transforms", transform_suite),
        ("search agrees with the exhaustive oracle up to base 2", search_oracle_agreement),
        ("powerset algebras of transitive tops on <=3 points", proper_structures),
        ("weakening implication on posets with <=3 points", weakening_suite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {} PASS {name} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {msg} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
