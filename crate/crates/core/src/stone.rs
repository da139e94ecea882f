//! Set representation of a finite implication algebra over its prime
//! filters, and its lift to unary or binary relations.

use std::collections::BTreeSet;

use crate::algebra::{ClassId, FiniteAlgebra};
use crate::axioms::check_class;
use crate::derived::derived_one;
use crate::error::{Error, Result};
use crate::filter::{enumerate_filters, prime_discriminate, Filter, FilterKind};
use crate::relmodel::{Mode, PairSet, Profile, RelContext, Representation};

/// `map[a]` is the set of positions `i` with `a ∈ base[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoneRepresentation {
    pub base: Vec<Filter>,
    pub map: Vec<BTreeSet<usize>>,
}

impl StoneRepresentation {
    /// Checks injectivity, `->`-preservation, top and join laws. Returns a
    /// description of the first failure.
    pub fn check(&self, alg: &FiniteAlgebra) -> std::result::Result<(), String> {
        let full: BTreeSet<usize> = (0..self.base.len()).collect();
        let one = derived_one(alg).map_err(|e| e.to_string())?;
        if self.map.len() != alg.len() {
            return Err(format!("map has {} entries for {} elements", self.map.len(), alg.len()));
        }
        if self.map[one] != full {
            return Err("map[1] is not the full base".into());
        }
        for a in alg.elements() {
            for b in alg.elements() {
                if a < b && self.map[a] == self.map[b] {
                    return Err(format!("{} and {} share an image", alg.name(a), alg.name(b)));
                }
                let expected: BTreeSet<usize> =
                    full.difference(&self.map[a]).chain(&self.map[b]).copied().collect();
                if self.map[alg.arrow(a, b)] != expected {
                    return Err(format!("-> not preserved at ({},{})", alg.name(a), alg.name(b)));
                }
                let union: BTreeSet<usize> = self.map[a].union(&self.map[b]).copied().collect();
                if self.map[alg.join(a, b)] != union {
                    return Err(format!("join not preserved at ({},{})", alg.name(a), alg.name(b)));
                }
            }
        }
        Ok(())
    }

    pub fn render(&self, alg: &FiniteAlgebra) -> String {
        let mut out = String::new();
        for (i, f) in self.base.iter().enumerate() {
            out.push_str(&format!("base {i} = {}\n", f.render(alg)));
        }
        for a in alg.elements() {
            let idx: Vec<String> = self.map[a].iter().map(|i| i.to_string()).collect();
            out.push_str(&format!("map {} = {{{}}}\n", alg.name(a), idx.join(",")));
        }
        out
    }
}

/// The prime filters, in canonical order.
pub fn stone_base(alg: &FiniteAlgebra) -> Result<Vec<Filter>> {
    enumerate_filters(alg, FilterKind::Prime)
}

pub fn stone_represent(alg: &FiniteAlgebra) -> Result<StoneRepresentation> {
    if !check_class(alg, ClassId::Ia)?.passed {
        return Err(Error::Precondition("algebra is not an implication algebra".into()));
    }
    let base = stone_base(alg)?;
    let map: Vec<BTreeSet<usize>> = alg
        .elements()
        .map(|a| (0..base.len()).filter(|&i| base[i].contains(a)).collect())
        .collect();

    // Every a ≠ b is separated by a prime filter over {1}: one of a ≰ b,
    // b ≰ a holds, and discrimination yields a base filter holding exactly
    // one of them.
    let one = derived_one(alg)?;
    let trivial = Filter::new([one]);
    for a in alg.elements() {
        for b in alg.elements() {
            if a == b || alg.arrow(a, b) == one {
                continue;
            }
            let g = prime_discriminate(alg, &trivial, a, b)?;
            let pos = base.binary_search(&g).map_err(|_| {
                Error::InternalInvariant(format!("separating filter {} is not in the base", g.render(alg)))
            })?;
            if !map[a].contains(&pos) || map[b].contains(&pos) {
                return Err(Error::InternalInvariant(format!(
                    "filter {pos} does not separate {} from {}",
                    alg.name(a),
                    alg.name(b)
                )));
            }
        }
    }
    let sr = StoneRepresentation { base, map };
    sr.check(alg).map_err(Error::InternalInvariant)?;
    Ok(sr)
}

/// Lifts the set representation to relations over the base positions.
///
/// Relative mode uses the diagonal as top and sends `S` to `{(i,i) : i ∈ S}`;
/// absolute mode uses `X x X` and sends `S` to `S x X`.
pub fn relationalize(sr: &StoneRepresentation, mode: Mode) -> Representation {
    let k = sr.base.len();
    let (top, map) = match mode {
        Mode::Relative => (
            PairSet::diagonal(k),
            sr.map.iter().map(|s| PairSet::from_pairs(k, s.iter().map(|&i| (i, i)))).collect(),
        ),
        Mode::Absolute => (
            PairSet::full(k),
            sr.map
                .iter()
                .map(|s| PairSet::from_pairs(k, s.iter().flat_map(|&i| (0..k).map(move |j| (i, j)))))
                .collect(),
        ),
    };
    Representation { context: RelContext::new(top), map, mode, profile: Profile::ARROW }
}
