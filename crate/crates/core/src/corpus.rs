//! Exhaustive enumeration of small `->` tables.

use crate::algebra::FiniteAlgebra;

/// Every algebra on `n` elements (named `x0..`) with an arbitrary `->`
/// table, in odometer order over the row-major cells.
pub fn arrow_tables(n: usize) -> impl Iterator<Item = FiniteAlgebra> {
    assert!((1..=3).contains(&n), "exhaustive tables are only feasible up to 3 elements");
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut values = vec![0; cells];
        for v in values.iter_mut() {
            *v = code % n;
            code /= n;
        }
        FiniteAlgebra::from_arrow_fn(n, |a, b| values[a * n + b]).expect("valid table")
    })
}

/// All algebras with carrier size `1..=max_n`: `1 + 2^4 + 3^9` of them for
/// `max_n = 3`.
pub fn exhaustive(max_n: usize) -> impl Iterator<Item = FiniteAlgebra> {
    (1..=max_n).flat_map(arrow_tables)
}
