//! Small named algebras used throughout the tests, benches and docs.

use crate::algebra::{FiniteAlgebra, Table};

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn boolean_arrow(bits: u32) -> Table {
    let mask = (1usize << bits) - 1;
    Table::from_fn(1 << bits, |a, b| (!a | b) & mask)
}

/// `{a, 1}` with Boolean implication.
pub fn ia2() -> FiniteAlgebra {
    let arrow = Table::from_rows(vec![vec![1, 1], vec![0, 1]]).unwrap();
    FiniteAlgebra::new(names(&["a", "1"]), arrow).unwrap()
}

/// The chain `a < b < 1` with Goedel implication: `x -> y` is 1 if
/// `x <= y`, else `y`. A Hilbert algebra that is not a Tarski algebra.
pub fn h3() -> FiniteAlgebra {
    let arrow = Table::from_fn(3, |x, y| if x <= y { 2 } else { y });
    FiniteAlgebra::new(names(&["a", "b", "1"]), arrow).unwrap()
}

/// The implication reduct of the powerset of `{p, q}`; element `i`
/// corresponds to the subset with bitmask `i`.
pub fn b4() -> FiniteAlgebra {
    FiniteAlgebra::new(names(&["0", "p", "q", "1"]), boolean_arrow(2)).unwrap()
}

/// `b4` with intersection as composition: a Boolean semigroup, represented
/// by subsets of the diagonal on two points.
pub fn b4_meet() -> FiniteAlgebra {
    b4().with_compose(Table::from_fn(4, |a, b| a & b))
        .and_then(|a| a.with_zero(Some(0)))
        .and_then(|a| a.with_one(Some(3)))
        .unwrap()
}

/// The two-element Boolean semigroup of relations over `{(0,0)}`.
pub fn s2_boolean() -> FiniteAlgebra {
    FiniteAlgebra::new(names(&["0", "1"]), boolean_arrow(1))
        .and_then(|a| a.with_compose(Table::from_fn(2, |a, b| a & b)))
        .and_then(|a| a.with_zero(Some(0)))
        .and_then(|a| a.with_one(Some(1)))
        .unwrap()
}

/// The implication-semigroup reduct of [`s2_boolean`]. The bottom stays
/// designated so that zero-emptying can be applied to it.
pub fn s2() -> FiniteAlgebra {
    crate::derived::reduct(&s2_boolean(), crate::algebra::ClassId::Isg).unwrap()
}

/// `{e}` with `e -> e = e` and `e ; e = e`.
pub fn singleton() -> FiniteAlgebra {
    FiniteAlgebra::new(names(&["e"]), Table::from_fn(1, |_, _| 0))
        .and_then(|a| a.with_compose(Table::from_fn(1, |_, _| 0)))
        .unwrap()
}

/// `{a, 1}` where `a -> a = a`; no top is definable.
pub fn m2() -> FiniteAlgebra {
    let arrow = Table::from_rows(vec![vec![0, 1], vec![0, 1]]).unwrap();
    FiniteAlgebra::new(names(&["a", "1"]), arrow).unwrap()
}

/// `{z, i}` where `i` is both the top and the monoid identity.
pub fn all_pairs_monoid() -> FiniteAlgebra {
    FiniteAlgebra::new(names(&["z", "i"]), boolean_arrow(1))
        .and_then(|a| a.with_compose(Table::from_fn(2, |a, b| a & b)))
        .and_then(|a| a.with_id(Some(1)))
        .and_then(|a| a.with_one(Some(1)))
        .and_then(|a| a.with_zero(Some(0)))
        .unwrap()
}

/// Every named fixture, paired with its name.
pub fn all() -> Vec<(&'static str, FiniteAlgebra)> {
    vec![
        ("ia2", ia2()),
        ("h3", h3()),
        ("b4", b4()),
        ("b4-meet", b4_meet()),
        ("s2", s2()),
        ("singleton", singleton()),
        ("m2", m2()),
        ("all-pairs", all_pairs_monoid()),
    ]
}
