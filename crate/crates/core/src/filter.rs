//! Implicative filters: validation, generation, enumeration and prime
//! extension.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{ClassId, FiniteAlgebra};
use crate::axioms::{check_class, common_self_arrow};
use crate::error::{Error, Result};

/// Carriers up to this size are enumerated by scanning every subset.
pub const SUBSET_SCAN_MAX: usize = 16;

/// A set of carrier indices, kept sorted. Filters order by size first,
/// then lexicographically by members.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filter {
    members: Vec<usize>,
}

impl Filter {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = members.into_iter().collect();
        Filter { members: set.into_iter().collect() }
    }

    pub fn from_mask(n: usize, mask: &[bool]) -> Self {
        Filter { members: (0..n).filter(|&i| mask[i]).collect() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_subset(&self, other: &Filter) -> bool {
        self.members.iter().all(|&a| other.contains(a))
    }

    pub fn intersection(&self, other: &Filter) -> Filter {
        Filter { members: self.members.iter().copied().filter(|&a| other.contains(a)).collect() }
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &a in &self.members {
            m[a] = true;
        }
        m
    }

    pub fn render(&self, alg: &FiniteAlgebra) -> String {
        alg.render_set(&self.members)
    }

    /// Parses `name,name,...` against the algebra's carrier. The empty
    /// string is the empty set.
    pub fn parse(alg: &FiniteAlgebra, text: &str) -> Result<Filter> {
        let mut members = Vec::new();
        for name in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let i = alg
                .index_of(name)
                .ok_or_else(|| Error::parse(1, format!("unknown element `{name}`")))?;
            members.push(i);
        }
        Ok(Filter::new(members))
    }
}

impl Ord for Filter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.len().cmp(&other.members.len()).then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Filter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FilterKind {
    All,
    Proper,
    Prime,
    Irreducible,
}

impl FromStr for FilterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(FilterKind::All),
            "proper" => Ok(FilterKind::Proper),
            "prime" => Ok(FilterKind::Prime),
            "irreducible" => Ok(FilterKind::Irreducible),
            other => Err(Error::Precondition(format!("unknown filter kind `{other}`"))),
        }
    }
}

impl fmt::Display for FilterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FilterKind::All => "all",
            FilterKind::Proper => "proper",
            FilterKind::Prime => "prime",
            FilterKind::Irreducible => "irreducible",
        })
    }
}

/// Which filter condition a subset breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterViolation {
    /// The top is missing.
    MissingOne { one: usize },
    /// `a` and `a -> b` are members but `b` is not.
    NotClosed { a: usize, b: usize },
}

impl FilterViolation {
    pub fn render(&self, alg: &FiniteAlgebra) -> String {
        match *self {
            FilterViolation::MissingOne { one } => format!("1 not in F ({})", alg.name(one)),
            FilterViolation::NotClosed { a, b } => format!(
                "not closed: {} and {} in F but {} not",
                alg.name(a),
                alg.name(alg.arrow(a, b)),
                alg.name(b)
            ),
        }
    }
}

fn require(alg: &FiniteAlgebra, class: ClassId) -> Result<()> {
    if check_class(alg, class)?.passed {
        Ok(())
    } else {
        Err(Error::Precondition(format!("algebra is not in class {class}")))
    }
}

fn top_of(alg: &FiniteAlgebra) -> Result<usize> {
    common_self_arrow(alg).map_err(|(a, b)| Error::NotConstant { a, b })
}

fn first_violation(alg: &FiniteAlgebra, one: usize, mask: &[bool]) -> Option<FilterViolation> {
    if !mask[one] {
        return Some(FilterViolation::MissingOne { one });
    }
    for a in alg.elements().filter(|&a| mask[a]) {
        for b in alg.elements() {
            if !mask[b] && mask[alg.arrow(a, b)] {
                return Some(FilterViolation::NotClosed { a, b });
            }
        }
    }
    None
}

/// Checks both filter conditions, returning the first failure. The top is
/// taken as the common value of `a -> a`.
pub fn is_filter(alg: &FiniteAlgebra, s: &Filter) -> Result<std::result::Result<(), FilterViolation>> {
    let one = top_of(alg)?;
    if let Some(&bad) = s.members().iter().find(|&&a| a >= alg.len()) {
        return Err(Error::Shape(format!("element index {bad} out of range")));
    }
    Ok(match first_violation(alg, one, &s.mask(alg.len())) {
        Some(v) => Err(v),
        None => Ok(()),
    })
}

fn validated(alg: &FiniteAlgebra, f: &Filter) -> Result<()> {
    match is_filter(alg, f)? {
        Ok(()) => Ok(()),
        Err(v) => Err(Error::Precondition(format!(
            "{} is not a filter: {}",
            f.render(alg),
            v.render(alg)
        ))),
    }
}

/// `{ x : a -> x in F }`, the least filter containing `F` and `a`.
pub fn generated_filter(alg: &FiniteAlgebra, f: &Filter, a: usize) -> Result<Filter> {
    require(alg, ClassId::PositiveIa)?;
    validated(alg, f)?;
    Ok(Filter::new(alg.elements().filter(|&x| f.contains(alg.arrow(a, x)))))
}

/// Closes `seed` (plus the top) under modus ponens.
pub fn mp_closure(alg: &FiniteAlgebra, one: usize, seed: &[bool]) -> Vec<bool> {
    let mut mask = seed.to_vec();
    mask[one] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for a in alg.elements() {
            if !mask[a] {
                continue;
            }
            for b in alg.elements() {
                if !mask[b] && mask[alg.arrow(a, b)] {
                    mask[b] = true;
                    changed = true;
                }
            }
        }
    }
    mask
}

/// Every filter, by testing each of the `2^n` subsets.
pub fn filters_by_subset_scan(alg: &FiniteAlgebra) -> Result<Vec<Filter>> {
    let n = alg.len();
    if n > 24 {
        return Err(Error::CapExceeded(format!("subset scan over {n} elements")));
    }
    let one = top_of(alg)?;
    let mut out = Vec::new();
    let mut mask = vec![false; n];
    for bits in 0u32..(1u32 << n) {
        if bits & (1 << one) == 0 {
            continue;
        }
        for (i, m) in mask.iter_mut().enumerate() {
            *m = bits & (1 << i) != 0;
        }
        if first_violation(alg, one, &mask).is_none() {
            out.push(Filter::from_mask(n, &mask));
        }
    }
    out.sort();
    Ok(out)
}

/// Every filter, generated from `{1}` by repeatedly adding one element and
/// closing under modus ponens.
pub fn filters_by_closure(alg: &FiniteAlgebra) -> Result<Vec<Filter>> {
    let n = alg.len();
    let one = top_of(alg)?;
    let start = mp_closure(alg, one, &vec![false; n]);
    let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
    let mut frontier = vec![start.clone()];
    seen.insert(start);
    while let Some(mask) = frontier.pop() {
        for a in 0..n {
            if mask[a] {
                continue;
            }
            let mut seed = mask.clone();
            seed[a] = true;
            let next = mp_closure(alg, one, &seed);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<Filter> = seen.iter().map(|m| Filter::from_mask(n, m)).collect();
    out.sort();
    Ok(out)
}

fn is_prime(alg: &FiniteAlgebra, f: &Filter) -> bool {
    if f.len() == alg.len() {
        return false;
    }
    let mask = f.mask(alg.len());
    alg.elements().all(|a| {
        mask[a] || alg.elements().all(|b| mask[b] || !mask[alg.join(a, b)])
    })
}

fn irreducible_among(proper: &[Filter], f: &Filter) -> bool {
    for (i, f1) in proper.iter().enumerate() {
        if f1 == f || !f.is_subset(f1) {
            continue;
        }
        for f2 in &proper[i + 1..] {
            if f2 != f && f.is_subset(f2) && f1.intersection(f2) == *f {
                return false;
            }
        }
    }
    true
}

/// All filters of the given kind, sorted by size then members.
pub fn enumerate_filters(alg: &FiniteAlgebra, kind: FilterKind) -> Result<Vec<Filter>> {
    require(alg, if kind == FilterKind::Prime { ClassId::Ia } else { ClassId::PositiveIa })?;
    let all = if alg.len() <= SUBSET_SCAN_MAX {
        filters_by_subset_scan(alg)?
    } else {
        filters_by_closure(alg)?
    };
    let n = alg.len();
    let proper: Vec<Filter> = all.iter().filter(|f| f.len() < n).cloned().collect();
    Ok(match kind {
        FilterKind::All => all,
        FilterKind::Proper => proper,
        FilterKind::Prime => proper.into_iter().filter(|f| is_prime(alg, f)).collect(),
        FilterKind::Irreducible => {
            proper.iter().filter(|f| irreducible_among(&proper, f)).cloned().collect()
        }
    })
}

/// The first prime filter, in enumeration order, that contains `f` and
/// omits `avoid`.
pub fn prime_extend(alg: &FiniteAlgebra, f: &Filter, avoid: usize) -> Result<Filter> {
    require(alg, ClassId::Ia)?;
    validated(alg, f)?;
    if f.contains(avoid) {
        return Err(Error::Precondition(format!(
            "{} already belongs to {}",
            alg.name(avoid),
            f.render(alg)
        )));
    }
    enumerate_filters(alg, FilterKind::Prime)?
        .into_iter()
        .find(|g| f.is_subset(g) && !g.contains(avoid))
        .ok_or_else(|| {
            Error::InternalInvariant(format!(
                "no prime filter extends {} while omitting {}",
                f.render(alg),
                alg.name(avoid)
            ))
        })
}

/// A prime filter containing `f` and `a` but not `b`, built as the prime
/// extension of `F_a` avoiding `b`. Requires `a -> b` outside `f`.
pub fn prime_discriminate(alg: &FiniteAlgebra, f: &Filter, a: usize, b: usize) -> Result<Filter> {
    require(alg, ClassId::Ia)?;
    validated(alg, f)?;
    if f.contains(alg.arrow(a, b)) {
        return Err(Error::Precondition(format!(
            "{} -> {} = {} already belongs to {}",
            alg.name(a),
            alg.name(b),
            alg.name(alg.arrow(a, b)),
            f.render(alg)
        )));
    }
    let fa = generated_filter(alg, f, a)?;
    prime_extend(alg, &fa, b)
}
