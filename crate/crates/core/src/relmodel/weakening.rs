//! Weakening relations over a finite poset.

use super::PairSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    leq: PairSet,
}

impl Poset {
    /// Adds the reflexive pairs, then checks antisymmetry and transitivity.
    pub fn new(base: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut leq = PairSet::diagonal(base);
        for (x, y) in pairs {
            if x >= base || y >= base {
                return Err(Error::Shape(format!("pair ({x},{y}) outside base {base}")));
            }
            leq.insert(x, y);
        }
        if let Some((x, y)) = leq.iter().find(|&(x, y)| x != y && leq.contains(y, x)) {
            return Err(Error::Precondition(format!("order is not antisymmetric at ({x},{y})")));
        }
        if !leq.is_transitive() {
            return Err(Error::Precondition("order is not transitive".into()));
        }
        Ok(Poset { leq })
    }

    pub fn antichain(base: usize) -> Self {
        Poset { leq: PairSet::diagonal(base) }
    }

    pub fn base_size(&self) -> usize {
        self.leq.base()
    }

    pub fn leq(&self) -> &PairSet {
        &self.leq
    }

    fn check_base(&self, r: &PairSet) -> Result<()> {
        if r.base() != self.base_size() {
            return Err(Error::Shape(format!(
                "relation over {} points, poset over {}",
                r.base(),
                self.base_size()
            )));
        }
        Ok(())
    }
}

/// `≤ ; r ; ≤ ⊆ r`.
pub fn weakening_check(p: &Poset, r: &PairSet) -> Result<bool> {
    p.check_base(r)?;
    Ok(p.leq.compose(r).compose(&p.leq).is_subset(r))
}

/// `{(x,y) : ∀x',y'. x' ≤ x ∧ y ≤ y' ∧ (x',y') ∈ r ⇒ (x',y') ∈ s}`.
pub fn weakening_arrow(p: &Poset, r: &PairSet, s: &PairSet) -> Result<PairSet> {
    if !weakening_check(p, r)? || !weakening_check(p, s)? {
        return Err(Error::NotWeakening);
    }
    let n = p.base_size();
    let bad = r.difference(s);
    let mut out = PairSet::empty(n);
    for x in 0..n {
        for y in 0..n {
            let blocked = bad.iter().any(|(xp, yp)| p.leq.contains(xp, x) && p.leq.contains(y, yp));
            if !blocked {
                out.insert(x, y);
            }
        }
    }
    Ok(out)
}

/// Every partial order on `base` points (labelled), by filtering relations.
pub fn posets(base: usize) -> Result<Vec<Poset>> {
    if base > 4 {
        return Err(Error::CapExceeded(format!("enumerating posets on {base} points")));
    }
    let off: Vec<(usize, usize)> =
        (0..base).flat_map(|x| (0..base).map(move |y| (x, y))).filter(|(x, y)| x != y).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << off.len() {
        let pairs = off.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p);
        if let Ok(p) = Poset::new(base, pairs) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Every weakening relation over `p`, ordered by bitmask.
pub fn weakening_relations(p: &Poset) -> Result<Vec<PairSet>> {
    let n = p.base_size();
    if n > 4 {
        return Err(Error::CapExceeded(format!("enumerating relations on {n} points")));
    }
    let bits = n * n;
    let mut out = Vec::new();
    for mask in 0u64..1 << bits {
        let r = PairSet::from_pairs(n, (0..bits).filter(|i| mask >> i & 1 == 1).map(|i| (i / n, i % n)));
        if weakening_check(p, &r)? {
            out.push(r);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> Poset {
        Poset::new(2, [(0, 1)]).unwrap()
    }

    #[test]
    fn check_examples() {
        let p = chain2();
        assert!(weakening_check(&p, &PairSet::from_pairs(2, [(0, 1)])).unwrap());
        assert!(!weakening_check(&p, &PairSet::from_pairs(2, [(1, 0)])).unwrap());
        assert!(weakening_check(&p, &PairSet::full(2)).unwrap());
    }

    #[test]
    fn arrow_examples() {
        let p = chain2();
        let empty = PairSet::empty(2);
        assert_eq!(weakening_arrow(&p, &empty, &empty).unwrap(), PairSet::full(2));
        // Every (x,y) has 0 ≤ x and y ≤ 1, so (0,1) ∈ r blocks all of them.
        let r = PairSet::from_pairs(2, [(0, 1)]);
        assert_eq!(weakening_arrow(&p, &r, &empty).unwrap(), PairSet::empty(2));
        assert_eq!(weakening_arrow(&p, &r, &r).unwrap(), PairSet::full(2));
    }

    #[test]
    fn non_weakening_input_is_rejected() {
        let p = chain2();
        let r = PairSet::from_pairs(2, [(1, 0)]);
        assert_eq!(weakening_arrow(&p, &r, &r).unwrap_err(), Error::NotWeakening);
    }

    #[test]
    fn poset_validation() {
        assert!(Poset::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(Poset::new(3, [(0, 1), (1, 2)]).is_err());
        assert!(Poset::new(3, [(0, 1), (1, 2), (0, 2)]).is_ok());
    }

    #[test]
    fn labelled_poset_counts() {
        // OEIS A001035: 1, 1, 3, 19, 219
        let counts: Vec<usize> = (0..5).map(|n| posets(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219]);
    }
}
