//! Exhaustive reference enumeration for the representation search.
//!
//! Tries every top relation allowed by the mode and profile and every total
//! map from elements to subrelations, checking each candidate with
//! [`verify_representation`]. No pruning, no shared machinery with the
//! search beyond the class gate. Only usable at tiny sizes.

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::relmodel::{verify_representation, Mode, PairSet, Profile, RelContext, Representation};
use crate::search::{require_searchable, SearchOutcome};

pub const ORACLE_MAX_BASE: usize = 3;
pub const ORACLE_MAX_CARRIER: usize = 4;

/// Looks for a representation over exactly `base_size` points.
pub fn oracle_enumerate(
    alg: &FiniteAlgebra,
    base_size: usize,
    mode: Mode,
    profile: Profile,
) -> Result<SearchOutcome> {
    if base_size > ORACLE_MAX_BASE || alg.len() > ORACLE_MAX_CARRIER {
        return Err(Error::CapExceeded(format!(
            "oracle is capped at base {ORACLE_MAX_BASE} and carrier {ORACLE_MAX_CARRIER}"
        )));
    }
    require_searchable(alg, profile)?;

    let all_pairs: Vec<(usize, usize)> =
        (0..base_size).flat_map(|x| (0..base_size).map(move |y| (x, y))).collect();
    let subset = |universe: &[(usize, usize)], mask: u64| {
        PairSet::from_pairs(
            base_size,
            universe.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p),
        )
    };

    for top_mask in 0u64..1 << all_pairs.len() {
        let top = subset(&all_pairs, top_mask);
        if mode == Mode::Absolute && top != PairSet::full(base_size) {
            continue;
        }
        if profile.compose && !top.is_transitive() {
            continue;
        }
        if profile.strict_identity && !top.is_reflexive() {
            continue;
        }
        let inside: Vec<(usize, usize)> = top.iter().collect();
        let choices = 1u64 << inside.len();
        let mut digits = vec![0u64; alg.len()];
        loop {
            let rep = Representation {
                context: RelContext::new(top.clone()),
                map: digits.iter().map(|&d| subset(&inside, d)).collect(),
                mode,
                profile,
            };
            if verify_representation(alg, &rep)?.passed() {
                return Ok(SearchOutcome::Found(rep));
            }
            // Odometer over all |P(top)|^|S| maps.
            let mut k = 0;
            while k < digits.len() {
                digits[k] += 1;
                if digits[k] < choices {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == digits.len() {
                break;
            }
        }
    }
    Ok(SearchOutcome::Exhausted(base_size))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn s2_at_base_one() {
        let out = oracle_enumerate(&fixtures::s2(), 1, Mode::Relative, Profile::ARROW_COMPOSE).unwrap();
        assert!(out.is_found());
    }

    #[test]
    fn caps_and_gate() {
        let big = crate::relmodel::proper::proper_structure(&PairSet::full(2)).unwrap().0;
        assert!(matches!(
            oracle_enumerate(&big, 1, Mode::Relative, Profile::ARROW),
            Err(Error::CapExceeded(_))
        ));
        assert!(matches!(
            oracle_enumerate(&fixtures::s2(), 4, Mode::Relative, Profile::ARROW),
            Err(Error::CapExceeded(_))
        ));
        assert!(oracle_enumerate(&fixtures::ia2(), 1, Mode::Relative, Profile::ARROW_COMPOSE).is_err());
    }
}
