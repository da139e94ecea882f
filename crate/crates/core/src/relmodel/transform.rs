//! Representation transformations: collapsing a represented identity to
//! the true diagonal, and re-representing so the bottom is empty.

use super::{verify_representation, Mode, PairSet, Profile, RelContext, Representation, Verdict};
use crate::algebra::FiniteAlgebra;
use crate::derived::derived_one;
use crate::error::{Error, Result};

fn require_verified(alg: &FiniteAlgebra, rep: &Representation, profile: Profile) -> Result<()> {
    let probe = Representation { profile, ..rep.clone() };
    match verify_representation(alg, &probe)? {
        Verdict::Pass => Ok(()),
        Verdict::Fail(v) => Err(Error::Precondition(format!(
            "input is not a {profile} representation: {}",
            v.render(alg)
        ))),
    }
}

fn require_output(alg: &FiniteAlgebra, rep: &Representation, what: &str) -> Result<()> {
    match verify_representation(alg, rep)? {
        Verdict::Pass => Ok(()),
        Verdict::Fail(v) => {
            Err(Error::InternalInvariant(format!("{what} output fails: {}", v.render(alg))))
        }
    }
}

/// Collapses the classes of `h(1')` to single points, so that `1'` is
/// represented by the diagonal.
///
/// `h(1')` being an equivalence relation, and every image being a union of
/// blocks of it, are checked directly (before anything else) rather than
/// derived from extra structure on the algebra.
pub fn quotient_by_identity(alg: &FiniteAlgebra, rep: &Representation) -> Result<Representation> {
    let id = alg.require_id()?;
    if rep.map.len() != alg.len() {
        return Err(Error::Shape(format!("map has {} images for {} elements", rep.map.len(), alg.len())));
    }
    let base = rep.base_size();
    if rep.mode != Mode::Absolute || *rep.context.top() != PairSet::full(base) {
        return Err(Error::Precondition("quotienting needs an absolute representation".into()));
    }
    let eq = &rep.map[id];
    if let Some(x) = (0..base).find(|&x| !eq.contains(x, x)) {
        return Err(Error::NotEquivalence(format!("not reflexive at point {x}")));
    }
    if let Some((x, y)) = eq.iter().find(|&(x, y)| !eq.contains(y, x)) {
        return Err(Error::NotEquivalence(format!("({x},{y}) present but ({y},{x}) absent")));
    }
    if let Some((x, z)) = eq.compose(eq).difference(eq).iter().next() {
        return Err(Error::NotEquivalence(format!("not transitive: ({x},{z}) missing")));
    }
    for (a, img) in rep.map.iter().enumerate() {
        // An image is compatible iff it is closed under h(1') on both sides.
        let saturated = eq.compose(img).compose(eq);
        if let Some((x, y)) = saturated.difference(img).iter().next() {
            return Err(Error::NotCompatible(format!(
                "h({}) misses ({x},{y}) though it holds an equivalent pair",
                alg.name(a)
            )));
        }
    }
    require_verified(alg, rep, Profile::ARROW_COMPOSE)?;

    let mut class = vec![usize::MAX; base];
    let mut classes = 0;
    for x in 0..base {
        if class[x] == usize::MAX {
            for (y, c) in class.iter_mut().enumerate() {
                if eq.contains(x, y) {
                    *c = classes;
                }
            }
            classes += 1;
        }
    }
    let map = rep
        .map
        .iter()
        .map(|img| PairSet::from_pairs(classes, img.iter().map(|(x, y)| (class[x], class[y]))))
        .collect();
    let out = Representation {
        context: RelContext::absolute(classes),
        map,
        mode: Mode::Absolute,
        profile: Profile::ARROW_COMPOSE.with_strict_identity(),
    };
    require_output(alg, &out, "quotient")?;
    Ok(out)
}

/// A pair `(iota, o)` in `h(a) \ h(b)`, witnessing `a ≰ b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscriminatorPair {
    pub a: usize,
    pub b: usize,
    pub iota: usize,
    pub o: usize,
}

/// For each `a ≰ b` (lexicographically), the lexicographically first
/// discriminator pair.
pub fn discriminator_pairs(alg: &FiniteAlgebra, rep: &Representation) -> Result<Vec<DiscriminatorPair>> {
    let one = derived_one(alg)?;
    let mut out = Vec::new();
    for a in alg.elements() {
        for b in alg.elements() {
            if alg.arrow(a, b) == one {
                continue;
            }
            let (iota, o) = rep.map[a].difference(&rep.map[b]).iter().next().ok_or_else(|| {
                Error::Precondition(format!(
                    "no discriminator pair for {} ≰ {}",
                    alg.name(a),
                    alg.name(b)
                ))
            })?;
            out.push(DiscriminatorPair { a, b, iota, o });
        }
    }
    Ok(out)
}

/// The points between `iota` and `o`: `x = iota or (iota,x) in top`, and
/// `x = o or (x,o) in top`.
pub fn window(top: &PairSet, iota: usize, o: usize) -> Vec<usize> {
    (0..top.base())
        .filter(|&x| (x == iota || top.contains(iota, x)) && (x == o || top.contains(x, o)))
        .collect()
}

/// Rebuilds a representation of an implication semigroup with a bottom
/// `0` (below everything, annihilating `;`) so that `h(0)` is empty.
///
/// One restricted copy of the input is taken per discriminator pair and
/// the copies are joined disjointly; the result is relative, with base at
/// most `|S|^2 |X|`.
pub fn empty_zero(alg: &FiniteAlgebra, rep: &Representation) -> Result<Representation> {
    let zero = alg.require_zero()?;
    alg.require_compose()?;
    let one = derived_one(alg).map_err(|e| Error::Precondition(format!("no top: {e}")))?;
    for a in alg.elements() {
        if alg.arrow(zero, a) != one {
            return Err(Error::Precondition(format!("0 is not below {}", alg.name(a))));
        }
        if alg.compose(zero, a) != zero || alg.compose(a, zero) != zero {
            return Err(Error::Precondition(format!("0 does not annihilate {}", alg.name(a))));
        }
    }
    require_verified(alg, rep, Profile::ARROW_COMPOSE)?;

    let top = rep.context.top();
    let blocks: Vec<Vec<usize>> = discriminator_pairs(alg, rep)?
        .iter()
        .map(|d| window(top, d.iota, d.o))
        .collect();
    let base: usize = blocks.iter().map(Vec::len).sum();

    let restrict = |rel: &PairSet| {
        let mut out = PairSet::empty(base);
        let mut offset = 0;
        for block in &blocks {
            for (i, &x) in block.iter().enumerate() {
                for (j, &y) in block.iter().enumerate() {
                    if rel.contains(x, y) {
                        out.insert(offset + i, offset + j);
                    }
                }
            }
            offset += block.len();
        }
        out
    };
    let out = Representation {
        context: RelContext::new(restrict(top)),
        map: rep.map.iter().map(restrict).collect(),
        mode: Mode::Relative,
        profile: Profile::ARROW_COMPOSE.with_zero_empty(),
    };
    require_output(alg, &out, "zero-emptying")?;
    let bound = alg.len() * alg.len() * rep.base_size();
    if base > bound {
        return Err(Error::InternalInvariant(format!("base {base} exceeds bound {bound}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn all_pairs_rep() -> Representation {
        Representation {
            context: RelContext::absolute(2),
            map: vec![PairSet::empty(2), PairSet::full(2)],
            mode: Mode::Absolute,
            profile: Profile::ARROW_COMPOSE,
        }
    }

    #[test]
    fn all_pairs_collapse_to_one_point() {
        let out = quotient_by_identity(&fixtures::all_pairs_monoid(), &all_pairs_rep()).unwrap();
        assert_eq!(out.base_size(), 1);
        assert_eq!(out.map[1], PairSet::from_pairs(1, [(0, 0)]));
        assert!(out.map[0].is_empty());
    }

    #[test]
    fn diagonal_identity_is_left_alone() {
        let alg = fixtures::all_pairs_monoid();
        let rep = Representation {
            context: RelContext::absolute(1),
            map: vec![PairSet::empty(1), PairSet::full(1)],
            mode: Mode::Absolute,
            profile: Profile::ARROW_COMPOSE,
        };
        let out = quotient_by_identity(&alg, &rep).unwrap();
        assert_eq!(out.map, rep.map);
        assert_eq!(out.context, rep.context);
    }

    #[test]
    fn non_reflexive_identity_is_rejected() {
        let mut rep = all_pairs_rep();
        rep.map[1] = PairSet::from_pairs(2, [(0, 0)]);
        let err = quotient_by_identity(&fixtures::all_pairs_monoid(), &rep).unwrap_err();
        assert!(matches!(err, Error::NotEquivalence(_)), "{err}");
    }

    #[test]
    fn incompatible_labels_are_rejected() {
        // h(1') = X x X but h(z) holds only one of the equivalent pairs.
        let mut rep = all_pairs_rep();
        rep.map[0] = PairSet::from_pairs(2, [(0, 1)]);
        let err = quotient_by_identity(&fixtures::all_pairs_monoid(), &rep).unwrap_err();
        assert!(matches!(err, Error::NotCompatible(_)), "{err}");
    }

    #[test]
    fn s2_zero_is_emptied() {
        let rep = Representation {
            context: RelContext::new(PairSet::diagonal(2)),
            map: vec![PairSet::from_pairs(2, [(0, 0)]), PairSet::diagonal(2)],
            mode: Mode::Relative,
            profile: Profile::ARROW_COMPOSE,
        };
        let out = empty_zero(&fixtures::s2(), &rep).unwrap();
        assert_eq!(out.base_size(), 1);
        assert!(out.map[0].is_empty());
        assert_eq!(out.map[1], PairSet::from_pairs(1, [(0, 0)]));
    }

    #[test]
    fn already_empty_zero_stays_valid() {
        let rep = Representation {
            context: RelContext::new(PairSet::diagonal(1)),
            map: vec![PairSet::empty(1), PairSet::diagonal(1)],
            mode: Mode::Relative,
            profile: Profile::ARROW_COMPOSE,
        };
        let out = empty_zero(&fixtures::s2(), &rep).unwrap();
        assert_eq!(out.map, rep.map);
    }

    #[test]
    fn zero_emptying_needs_a_bottom() {
        let rep = all_pairs_rep();
        let no_zero = fixtures::all_pairs_monoid().with_zero(None).unwrap();
        assert_eq!(empty_zero(&no_zero, &rep).unwrap_err(), Error::MissingConstant("zero"));
        // `i` is not below `z`, so declaring it the bottom is rejected.
        let wrong = fixtures::all_pairs_monoid().with_zero(Some(1)).unwrap();
        assert!(matches!(empty_zero(&wrong, &rep), Err(Error::Precondition(_))));
    }

    #[test]
    fn window_follows_the_top() {
        // chain 0 -> 1 -> 2 with reflexive loops
        let top = PairSet::from_pairs(3, [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]);
        assert_eq!(window(&top, 0, 2), vec![0, 1, 2]);
        assert_eq!(window(&top, 1, 2), vec![1, 2]);
        assert_eq!(window(&top, 1, 1), vec![1]);
    }
}
