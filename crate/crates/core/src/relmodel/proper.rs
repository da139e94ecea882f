//! The full algebra of subrelations of a top relation.

use super::{Mode, PairSet, Profile, RelContext, Representation};
use crate::algebra::{FiniteAlgebra, Table};
use crate::error::{Error, Result};

/// Largest top (in pairs) whose powerset algebra we are willing to build.
pub const MAX_TOP_PAIRS: usize = 12;

/// Builds `(℘(top), ->, ;)` together with its identity self-embedding.
///
/// Element `i` is the subrelation selecting the pairs of `top` whose
/// positions (in lexicographic order) are the set bits of `i`; it is named
/// `r<i>`. The top itself is designated as `one`.
pub fn proper_structure(top: &PairSet) -> Result<(FiniteAlgebra, Representation)> {
    if !top.is_transitive() {
        return Err(Error::IntransitiveContext);
    }
    let pairs: Vec<(usize, usize)> = top.iter().collect();
    if pairs.len() > MAX_TOP_PAIRS {
        return Err(Error::CapExceeded(format!("top with {} pairs", pairs.len())));
    }
    let base = top.base();
    let size = 1usize << pairs.len();
    let subsets: Vec<PairSet> = (0..size)
        .map(|mask| {
            PairSet::from_pairs(
                base,
                pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p),
            )
        })
        .collect();
    let index_of = |s: &PairSet| -> usize {
        pairs.iter().enumerate().filter(|(_, &(x, y))| s.contains(x, y)).map(|(k, _)| 1 << k).sum()
    };
    let full = size - 1;
    let arrow = Table::from_fn(size, |a, b| (full & !a) | b);
    let compose = Table::from_fn(size, |a, b| index_of(&subsets[a].compose(&subsets[b])));
    let names = (0..size).map(|i| format!("r{i}")).collect();
    let alg = FiniteAlgebra::new(names, arrow)?.with_compose(compose)?.with_one(Some(full))?;
    let rep = Representation {
        context: RelContext::new(top.clone()),
        map: subsets,
        mode: if *top == PairSet::full(base) { Mode::Absolute } else { Mode::Relative },
        profile: Profile::ARROW_COMPOSE,
    };
    Ok((alg, rep))
}

/// Every transitive relation over `base` points, by filtering all
/// `2^(base^2)` relations. Ordered by bitmask (bit `x*base+y` is `(x,y)`).
pub fn transitive_relations(base: usize) -> Result<Vec<PairSet>> {
    if base > 4 {
        return Err(Error::CapExceeded(format!("enumerating relations over {base} points")));
    }
    let bits = base * base;
    Ok((0u64..1 << bits)
        .map(|mask| {
            PairSet::from_pairs(base, (0..bits).filter(|i| mask >> i & 1 == 1).map(|i| (i / base, i % base)))
        })
        .filter(PairSet::is_transitive)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ClassId;
    use crate::axioms::check_class;
    use crate::relmodel::verify_representation;

    #[test]
    fn transitive_relation_counts() {
        // OEIS A006905: 1, 2, 13, 171
        let counts: Vec<usize> = (0..4).map(|n| transitive_relations(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 13, 171]);
    }

    #[test]
    fn powerset_of_two_point_chain() {
        let top = PairSet::from_pairs(2, [(0, 0), (0, 1), (1, 1)]);
        let (alg, rep) = proper_structure(&top).unwrap();
        assert_eq!(alg.len(), 8);
        assert!(check_class(&alg, ClassId::Isg).unwrap().passed);
        assert!(verify_representation(&alg, &rep).unwrap().passed());
    }

    #[test]
    fn intransitive_top_is_rejected() {
        let top = PairSet::from_pairs(3, [(0, 1), (1, 2)]);
        assert_eq!(proper_structure(&top).unwrap_err(), Error::IntransitiveContext);
    }
}
