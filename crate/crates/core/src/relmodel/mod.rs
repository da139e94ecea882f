//! Concrete algebras of binary relations and representations into them.

mod pairset;
pub mod proper;
pub mod transform;
pub mod weakening;

use std::fmt;
use std::str::FromStr;

pub use pairset::PairSet;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};

/// A base set `0..base_size` and the ambient top relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelContext {
    top: PairSet,
}

impl RelContext {
    pub fn new(top: PairSet) -> Self {
        RelContext { top }
    }

    /// `X x X` over `base_size` points.
    pub fn absolute(base_size: usize) -> Self {
        RelContext { top: PairSet::full(base_size) }
    }

    pub fn base_size(&self) -> usize {
        self.top.base()
    }

    pub fn top(&self) -> &PairSet {
        &self.top
    }

    fn check_inside(&self, a: &PairSet) -> Result<()> {
        if a.base() != self.base_size() {
            return Err(Error::Shape(format!(
                "pair set over {} points in a context over {}",
                a.base(),
                self.base_size()
            )));
        }
        match a.difference(&self.top).iter().next() {
            Some((x, y)) => Err(Error::OutOfTop(x, y)),
            None => Ok(()),
        }
    }
}

/// Proper implication `(top \ a) ∪ b`.
pub fn rel_arrow(ctx: &RelContext, a: &PairSet, b: &PairSet) -> Result<PairSet> {
    ctx.check_inside(a)?;
    ctx.check_inside(b)?;
    Ok(ctx.top.difference(a).union(b))
}

/// Relational composition; needs a transitive top so the result stays inside.
pub fn rel_compose(ctx: &RelContext, a: &PairSet, b: &PairSet) -> Result<PairSet> {
    ctx.check_inside(a)?;
    ctx.check_inside(b)?;
    if !ctx.top.is_transitive() {
        return Err(Error::IntransitiveContext);
    }
    Ok(a.compose(b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// `top = X x X`.
    Absolute,
    /// `top` is any relation, transitive when composition is represented.
    #[default]
    Relative,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "absolute" => Ok(Mode::Absolute),
            "relative" => Ok(Mode::Relative),
            other => Err(Error::Precondition(format!("unknown mode `{other}`"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Absolute => "absolute",
            Mode::Relative => "relative",
        })
    }
}

/// Which operations and constants a representation must preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Profile {
    pub arrow: bool,
    pub compose: bool,
    pub strict_identity: bool,
    pub zero_empty: bool,
}

impl Profile {
    pub const ARROW: Profile =
        Profile { arrow: true, compose: false, strict_identity: false, zero_empty: false };
    pub const ARROW_COMPOSE: Profile =
        Profile { arrow: true, compose: true, strict_identity: false, zero_empty: false };

    pub fn with_strict_identity(mut self) -> Self {
        self.strict_identity = true;
        self
    }

    pub fn with_zero_empty(mut self) -> Self {
        self.zero_empty = true;
        self
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Profile::default();
        for item in s.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let flag = match item {
                "arrow" => &mut p.arrow,
                "compose" => &mut p.compose,
                "strict-identity" => &mut p.strict_identity,
                "zero-empty" => &mut p.zero_empty,
                other => return Err(Error::Precondition(format!("unknown profile item `{other}`"))),
            };
            *flag = true;
        }
        Ok(p)
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<&str> = [
            (self.arrow, "arrow"),
            (self.compose, "compose"),
            (self.strict_identity, "strict-identity"),
            (self.zero_empty, "zero-empty"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect();
        f.write_str(&items.join(","))
    }
}

/// A map from algebra elements (by index) to relations inside a context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub context: RelContext,
    pub map: Vec<PairSet>,
    pub mode: Mode,
    pub profile: Profile,
}

impl Representation {
    pub fn base_size(&self) -> usize {
        self.context.base_size()
    }

    pub fn image(&self, a: usize) -> &PairSet {
        &self.map[a]
    }
}

/// The first law a representation breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepViolation {
    pub law: &'static str,
    pub elements: Vec<usize>,
    pub pairs: Vec<(usize, usize)>,
}

impl RepViolation {
    fn new(law: &'static str, elements: Vec<usize>, pair: Option<(usize, usize)>) -> Self {
        RepViolation { law, elements, pairs: pair.into_iter().collect() }
    }

    pub fn render(&self, alg: &FiniteAlgebra) -> String {
        let mut out = format!("violation {}", self.law);
        if !self.elements.is_empty() {
            out.push(' ');
            out.push_str(&alg.render_tuple(&self.elements));
        }
        for (x, y) in &self.pairs {
            out.push_str(&format!(" ({x},{y})"));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(RepViolation),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

fn first_diff(a: &PairSet, b: &PairSet) -> Option<(usize, usize)> {
    let left = a.difference(b).iter().next();
    let right = b.difference(a).iter().next();
    match (left, right) {
        (Some(l), Some(r)) => Some(l.min(r)),
        (l, r) => l.or(r),
    }
}

/// Checks `rep` against `alg` for every law in its profile, in a fixed
/// order, and reports the first failure.
///
/// Shape mismatches and missing tables or constants are errors rather
/// than verdicts.
pub fn verify_representation(alg: &FiniteAlgebra, rep: &Representation) -> Result<Verdict> {
    let n = alg.len();
    let ctx = &rep.context;
    let top = ctx.top();
    let base = ctx.base_size();
    if rep.map.len() != n {
        return Err(Error::Shape(format!("map has {} images for {n} elements", rep.map.len())));
    }
    if let Some(a) = rep.map.iter().position(|img| img.base() != base) {
        return Err(Error::Shape(format!("image of {} is over the wrong base", alg.name(a))));
    }
    let compose = if rep.profile.compose { Some(alg.require_compose()?) } else { None };
    let id = if rep.profile.strict_identity { Some(alg.require_id()?) } else { None };
    let zero = if rep.profile.zero_empty { Some(alg.require_zero()?) } else { None };

    let fail = |law, elements, pair| Ok(Verdict::Fail(RepViolation::new(law, elements, pair)));

    for a in 0..n {
        if let Some(p) = rep.map[a].difference(top).iter().next() {
            return fail("image-in-top", vec![a], Some(p));
        }
    }
    if rep.mode == Mode::Absolute {
        if let Some(p) = PairSet::full(base).difference(top).iter().next() {
            return fail("absolute-top", vec![], Some(p));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if rep.map[a] == rep.map[b] {
                return fail("injectivity", vec![a, b], None);
            }
        }
    }
    if rep.profile.arrow {
        for a in 0..n {
            let not_a = top.difference(&rep.map[a]);
            for b in 0..n {
                let expected = not_a.union(&rep.map[b]);
                let actual = &rep.map[alg.arrow(a, b)];
                if *actual != expected {
                    return fail("arrow", vec![a, b], first_diff(actual, &expected));
                }
            }
        }
    }
    if let Some(table) = compose {
        if let Some(p) = top.compose(top).difference(top).iter().next() {
            return fail("transitive-top", vec![], Some(p));
        }
        for a in 0..n {
            for b in 0..n {
                let expected = rep.map[a].compose(&rep.map[b]);
                let actual = &rep.map[table.get(a, b)];
                if *actual != expected {
                    return fail("compose", vec![a, b], first_diff(actual, &expected));
                }
            }
        }
    }
    if let Some(id) = id {
        if let Some(x) = (0..base).find(|&x| !top.contains(x, x)) {
            return fail("reflexive-top", vec![], Some((x, x)));
        }
        let diag = PairSet::diagonal(base);
        if rep.map[id] != diag {
            return fail("strict-identity", vec![id], first_diff(&rep.map[id], &diag));
        }
    }
    if let Some(zero) = zero {
        if let Some(p) = rep.map[zero].iter().next() {
            return fail("zero-empty", vec![zero], Some(p));
        }
    }
    Ok(Verdict::Pass)
}
