//! Bounded search for relational representations.
//!
//! Base sizes are tried in ascending order. For each size the candidate
//! tops are enumerated (the full square in absolute mode, every transitive
//! relation in relative mode, optionally one per point-permutation class),
//! and element images are assigned by backtracking: the top is pinned to
//! the whole top relation, images respect the derived order, and images of
//! `a -> b` and `a ; b` are forced as soon as `a` and `b` are placed.
//!
//! An exhausted search says nothing about representability beyond the bound.

use std::cmp::Reverse;

use itertools::Itertools;

use crate::algebra::{ClassId, FiniteAlgebra, Table};
use crate::axioms::check_class;
use crate::derived::derived_one;
use crate::error::{Error, Result};
use crate::relmodel::{verify_representation, Mode, PairSet, Profile, RelContext, Representation, Verdict};

/// Pair sets are packed into a `u64`, one bit per `(x, y)`.
pub const MAX_SEARCH_BASE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_base: usize,
    pub mode: Mode,
    pub profile: Profile,
    /// Only try one top per orbit under point permutations.
    pub up_to_iso: bool,
    /// Abort after this many candidate images have been tried.
    pub node_limit: Option<u64>,
}

impl SearchConfig {
    pub fn new(max_base: usize, mode: Mode, profile: Profile) -> Self {
        SearchConfig { max_base, mode, profile, up_to_iso: false, node_limit: None }
    }

    pub fn up_to_iso(mut self, on: bool) -> Self {
        self.up_to_iso = on;
        self
    }

    pub fn node_limit(mut self, limit: Option<u64>) -> Self {
        self.node_limit = limit;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Representation),
    /// No representation with base size up to the bound.
    Exhausted(usize),
    /// The node limit was reached.
    Aborted(u64),
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn found(&self) -> Option<&Representation> {
        match self {
            SearchOutcome::Found(r) => Some(r),
            _ => None,
        }
    }
}

/// Class gate shared by the search and the oracle.
pub(crate) fn require_searchable(alg: &FiniteAlgebra, profile: Profile) -> Result<()> {
    if !profile.arrow {
        return Err(Error::Precondition("profile must include arrow".into()));
    }
    let class = if profile.compose { ClassId::Isg } else { ClassId::Ia };
    if !check_class(alg, class)?.passed {
        return Err(Error::Precondition(format!("algebra is not in class {class}")));
    }
    if profile.strict_identity {
        alg.require_id()?;
    }
    if profile.zero_empty {
        alg.require_zero()?;
    }
    Ok(())
}

fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

#[inline]
fn bit(n: usize, x: usize, y: usize) -> u64 {
    1u64 << (x * n + y)
}

fn diagonal_mask(n: usize) -> u64 {
    (0..n).map(|x| bit(n, x, x)).sum()
}

#[inline]
fn compose_masks(n: usize, a: u64, b: u64) -> u64 {
    let row = low_bits(n);
    let mut out = 0;
    for x in 0..n {
        let mut r = (a >> (x * n)) & row;
        let mut acc = 0;
        while r != 0 {
            let y = r.trailing_zeros() as usize;
            acc |= (b >> (y * n)) & row;
            r &= r - 1;
        }
        out |= acc << (x * n);
    }
    out
}

fn is_transitive_mask(n: usize, m: u64) -> bool {
    compose_masks(n, m, m) & !m == 0
}

fn to_pair_set(n: usize, m: u64) -> PairSet {
    PairSet::from_pairs(n, (0..n * n).filter(|i| m >> i & 1 == 1).map(|i| (i / n, i % n)))
}

/// Transitive relations on `n` points by filtering all `2^(n^2)` relations.
pub fn transitive_tops_by_filter(n: usize) -> Vec<u64> {
    assert!(n <= 4, "filtering all relations on {n} points");
    (0..=low_bits(n * n)).filter(|&m| is_transitive_mask(n, m)).collect()
}

/// Transitive relations on `n` points by deciding pairs one at a time and
/// pruning as soon as a decided triple breaks transitivity.
pub fn transitive_tops_incremental(n: usize) -> Vec<u64> {
    fn go(n: usize, i: usize, m: u64, out: &mut Vec<u64>) {
        if i == n * n {
            out.push(m);
            return;
        }
        let (x, y) = (i / n, i % n);
        let decided = |p: usize, q: usize| p * n + q <= i;
        let has = |m: u64, p: usize, q: usize| m & bit(n, p, q) != 0;
        // (x,y) out: no decided x->z->y path may exist.
        let blocked = (0..n).any(|z| {
            decided(x, z) && decided(z, y) && has(m, x, z) && has(m, z, y)
        });
        if !blocked {
            go(n, i + 1, m, out);
        }
        // (x,y) in: every decided extension must already be present.
        let with = m | bit(n, x, y);
        let breaks = (0..n).any(|z| {
            (decided(y, z) && decided(x, z) && has(with, y, z) && !has(with, x, z))
                || (decided(z, x) && decided(z, y) && has(with, z, x) && !has(with, z, y))
        });
        if !breaks {
            go(n, i + 1, with, out);
        }
    }
    assert!(n <= MAX_SEARCH_BASE);
    let mut out = Vec::new();
    go(n, 0, 0, &mut out);
    out.sort_unstable();
    out
}

fn permute_mask(n: usize, m: u64, perm: &[usize]) -> u64 {
    let mut out = 0;
    let mut r = m;
    while r != 0 {
        let i = r.trailing_zeros() as usize;
        out |= bit(n, perm[i / n], perm[i % n]);
        r &= r - 1;
    }
    out
}

/// Candidate tops for one base size, ascending by mask.
fn candidate_tops(n: usize, cfg: &SearchConfig) -> Vec<u64> {
    let full = low_bits(n * n);
    let mut tops = match cfg.mode {
        Mode::Absolute => vec![full],
        Mode::Relative if n <= 3 => transitive_tops_by_filter(n),
        Mode::Relative => transitive_tops_incremental(n),
    };
    if cfg.profile.strict_identity {
        let diag = diagonal_mask(n);
        tops.retain(|&t| t & diag == diag);
    }
    if cfg.up_to_iso && n > 1 {
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        tops.retain(|&t| perms.iter().all(|p| permute_mask(n, t, p) >= t));
    }
    tops
}

struct Aborted;

struct Searcher<'a> {
    n: usize,
    top: u64,
    arrow: &'a Table,
    compose: Option<&'a Table>,
    leq: Vec<bool>,
    order: Vec<usize>,
    size: usize,
    assign: Vec<Option<u64>>,
    trail: Vec<usize>,
    nodes: u64,
    limit: Option<u64>,
}

impl Searcher<'_> {
    fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    fn undo(&mut self, to: usize) {
        while self.trail.len() > to {
            let e = self.trail.pop().unwrap();
            self.assign[e] = None;
        }
    }

    /// Places `e ↦ m` and everything it forces; false on conflict.
    fn place(&mut self, e: usize, m: u64) -> bool {
        let mut queue = vec![(e, m)];
        while let Some((e, m)) = queue.pop() {
            if let Some(v) = self.assign[e] {
                if v != m {
                    return false;
                }
                continue;
            }
            if m & !self.top != 0 {
                return false;
            }
            for &b in &self.trail {
                let v = self.assign[b].unwrap();
                if v == m
                    || (self.leq(e, b) && m & !v != 0)
                    || (self.leq(b, e) && v & !m != 0)
                {
                    return false;
                }
            }
            self.assign[e] = Some(m);
            self.trail.push(e);
            for k in 0..self.trail.len() {
                let b = self.trail[k];
                let v = self.assign[b].unwrap();
                for (x, vx, y, vy) in [(e, m, b, v), (b, v, e, m)] {
                    queue.push((self.arrow.get(x, y), (self.top & !vx) | vy));
                    if let Some(c) = self.compose {
                        queue.push((c.get(x, y), compose_masks(self.n, vx, vy)));
                    }
                }
            }
        }
        true
    }

    fn dfs(&mut self) -> std::result::Result<bool, Aborted> {
        let Some(e) = self.order.iter().copied().find(|&e| self.assign[e].is_none()) else {
            return Ok(true);
        };
        let mut upper = self.top;
        let mut lower = 0;
        for &b in &self.trail {
            let v = self.assign[b].unwrap();
            if self.leq(e, b) {
                upper &= v;
            }
            if self.leq(b, e) {
                lower |= v;
            }
        }
        if lower & !upper != 0 {
            return Ok(false);
        }
        let free = upper & !lower;
        let mut s: u64 = 0;
        loop {
            self.nodes += 1;
            if self.limit.is_some_and(|l| self.nodes > l) {
                return Err(Aborted);
            }
            let mark = self.trail.len();
            if self.place(e, lower | s) && self.dfs()? {
                return Ok(true);
            }
            self.undo(mark);
            if s == free {
                return Ok(false);
            }
            s = s.wrapping_sub(free) & free;
        }
    }
}

/// Searches base sizes `0..=cfg.max_base` for a representation of `alg`.
///
/// Requires an implication semigroup, or an implication algebra when the
/// profile is `{arrow}` only. Every returned witness has been re-verified.
pub fn search_representation(alg: &FiniteAlgebra, cfg: &SearchConfig) -> Result<SearchOutcome> {
    require_searchable(alg, cfg.profile)?;
    if cfg.max_base > MAX_SEARCH_BASE {
        return Err(Error::CapExceeded(format!(
            "search base {} exceeds {MAX_SEARCH_BASE}",
            cfg.max_base
        )));
    }
    let size = alg.len();
    let one = derived_one(alg)?;
    let leq: Vec<bool> = (0..size * size).map(|i| alg.arrow(i / size, i % size) == one).collect();
    let mut order: Vec<usize> = alg.elements().collect();
    order.sort_by_key(|&e| (Reverse((0..size).filter(|&x| leq[x * size + e]).count()), e));

    let mut nodes = 0;
    for n in 0..=cfg.max_base {
        for top in candidate_tops(n, cfg) {
            let mut s = Searcher {
                n,
                top,
                arrow: alg.arrow_table(),
                compose: if cfg.profile.compose { alg.compose_table() } else { None },
                leq: leq.clone(),
                order: order.clone(),
                size,
                assign: vec![None; size],
                trail: Vec::new(),
                nodes,
                limit: cfg.node_limit,
            };
            let mut pins = vec![(one, top)];
            if cfg.profile.strict_identity {
                pins.push((alg.require_id()?, diagonal_mask(n)));
            }
            if cfg.profile.zero_empty {
                pins.push((alg.require_zero()?, 0));
            }
            if !pins.into_iter().all(|(e, m)| s.place(e, m)) {
                continue;
            }
            let found = s.dfs();
            nodes = s.nodes;
            match found {
                Err(Aborted) => return Ok(SearchOutcome::Aborted(cfg.node_limit.unwrap_or(nodes))),
                Ok(false) => {}
                Ok(true) => {
                    let rep = Representation {
                        context: RelContext::new(to_pair_set(n, top)),
                        map: s.assign.iter().map(|m| to_pair_set(n, m.unwrap())).collect(),
                        mode: cfg.mode,
                        profile: cfg.profile,
                    };
                    return match verify_representation(alg, &rep)? {
                        Verdict::Pass => Ok(SearchOutcome::Found(rep)),
                        Verdict::Fail(v) => Err(Error::InternalInvariant(format!(
                            "search produced an invalid witness: {}",
                            v.render(alg)
                        ))),
                    };
                }
            }
        }
    }
    Ok(SearchOutcome::Exhausted(cfg.max_base))
}
