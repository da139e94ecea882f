use std::fmt;

/// A set of ordered pairs over the points `0..base`, as a dense bitset.
///
/// Iteration is in lexicographic `(x, y)` order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairSet {
    base: usize,
    words: Vec<u64>,
}

impl PairSet {
    pub fn empty(base: usize) -> Self {
        PairSet { base, words: vec![0; (base * base).div_ceil(64)] }
    }

    pub fn full(base: usize) -> Self {
        let mut s = PairSet::empty(base);
        for x in 0..base {
            for y in 0..base {
                s.insert(x, y);
            }
        }
        s
    }

    pub fn diagonal(base: usize) -> Self {
        let mut s = PairSet::empty(base);
        for x in 0..base {
            s.insert(x, x);
        }
        s
    }

    /// Panics if a pair lies outside `0..base`.
    pub fn from_pairs(base: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut s = PairSet::empty(base);
        for (x, y) in pairs {
            s.insert(x, y);
        }
        s
    }

    pub fn base(&self) -> usize {
        self.base
    }

    #[inline]
    fn bit(&self, x: usize, y: usize) -> usize {
        assert!(x < self.base && y < self.base, "pair ({x},{y}) outside base {}", self.base);
        x * self.base + y
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        if x >= self.base || y >= self.base {
            return false;
        }
        let i = x * self.base + y;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        let i = self.bit(x, y);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, x: usize, y: usize) {
        let i = self.bit(x, y);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let base = self.base;
        self.words.iter().enumerate().flat_map(move |(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                let i = wi * 64 + bit;
                Some((i / base, i % base))
            })
        })
    }

    fn same_base(&self, other: &PairSet) {
        assert_eq!(self.base, other.base, "pair sets over different bases");
    }

    pub fn union(&self, other: &PairSet) -> PairSet {
        self.same_base(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        PairSet { base: self.base, words }
    }

    pub fn intersection(&self, other: &PairSet) -> PairSet {
        self.same_base(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        PairSet { base: self.base, words }
    }

    pub fn difference(&self, other: &PairSet) -> PairSet {
        self.same_base(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        PairSet { base: self.base, words }
    }

    pub fn is_subset(&self, other: &PairSet) -> bool {
        self.same_base(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Relational composition `{(x,z) : (x,y) in self, (y,z) in other}`.
    pub fn compose(&self, other: &PairSet) -> PairSet {
        self.same_base(other);
        let mut out = PairSet::empty(self.base);
        for (x, y) in self.iter() {
            for z in 0..self.base {
                if other.contains(y, z) {
                    out.insert(x, z);
                }
            }
        }
        out
    }

    pub fn converse(&self) -> PairSet {
        PairSet::from_pairs(self.base, self.iter().map(|(x, y)| (y, x)))
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self).is_subset(self)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.base).all(|x| self.contains(x, x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|(x, y)| self.contains(y, x))
    }

    /// `(x,y) (x,y) ...`
    pub fn render(&self) -> String {
        self.iter().map(|(x, y)| format!("({x},{y})")).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Debug for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairSet[{}]{{{}}}", self.base, self.render())
    }
}
