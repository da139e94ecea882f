//! Shared inputs for the criterion benches.

use implica_core::relmodel::proper::proper_structure;
use implica_core::{FiniteAlgebra, PairSet};

/// `(℘(⊤), ->, ;)` for the transitive top `{(x,y) : x <= y}` on `n` points.
pub fn upper_triangle_powerset(n: usize) -> FiniteAlgebra {
    let top = PairSet::from_pairs(n, (0..n).flat_map(|x| (x..n).map(move |y| (x, y))));
    proper_structure(&top).expect("upper triangle is transitive").0
}

/// The Boolean implication algebra of subsets of a `bits`-element set.
pub fn boolean(bits: u32) -> FiniteAlgebra {
    let mask = (1usize << bits) - 1;
    FiniteAlgebra::from_arrow_fn(1 << bits, |a, b| (!a | b) & mask).expect("valid table")
}
