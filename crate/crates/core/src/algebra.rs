//! Finite algebras given by Cayley tables.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A total binary operation on `0..n`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Table {
    n: usize,
    cells: Vec<usize>,
}

impl Table {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                cells.push(f(r, c));
            }
        }
        Table { n, cells }
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidAlgebra(format!(
                    "row {r} has {} entries, expected {n}",
                    row.len()
                )));
            }
            cells.extend(row);
        }
        let table = Table { n, cells };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        if let Some(pos) = self.cells.iter().position(|&v| v >= self.n) {
            return Err(Error::InvalidAlgebra(format!(
                "entry ({},{}) = {} is out of range",
                pos / self.n,
                pos % self.n,
                self.cells[pos]
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> usize {
        self.cells[r * self.n + c]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn row(&self, r: usize) -> &[usize] {
        &self.cells[r * self.n..(r + 1) * self.n]
    }
}

/// The axiom classes the workbench knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    /// Implication (Tarski) algebras.
    Ia,
    /// Positive implication (Hilbert) algebras.
    PositiveIa,
    /// Implication semigroups.
    Isg,
    /// Implication monoids.
    Imonoid,
    /// Boolean semigroups, with `->` read as Boolean implication.
    Bsg,
}

impl ClassId {
    pub const ALL: [ClassId; 5] =
        [ClassId::Ia, ClassId::PositiveIa, ClassId::Isg, ClassId::Imonoid, ClassId::Bsg];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassId::Ia => "ia",
            ClassId::PositiveIa => "positive-ia",
            ClassId::Isg => "isg",
            ClassId::Imonoid => "imonoid",
            ClassId::Bsg => "bsg",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown class `{s}`")))
    }
}

/// A finite algebra: named carrier, an `->` table, and optionally a `;`
/// table and the designated constants `1`, `1'` and `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    names: Vec<String>,
    arrow: Table,
    compose: Option<Table>,
    one: Option<usize>,
    id: Option<usize>,
    zero: Option<usize>,
}

impl FiniteAlgebra {
    pub fn new(names: Vec<String>, arrow: Table) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidAlgebra("carrier must be non-empty".into()));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == ',') {
                return Err(Error::InvalidAlgebra(format!("bad element name `{name}`")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidAlgebra(format!("duplicate element name `{name}`")));
            }
        }
        if arrow.size() != names.len() {
            return Err(Error::InvalidAlgebra(format!(
                "arrow table has size {}, carrier has {}",
                arrow.size(),
                names.len()
            )));
        }
        Ok(FiniteAlgebra { names, arrow, compose: None, one: None, id: None, zero: None })
    }

    /// Builds an algebra with generated names `x0, x1, ...`.
    pub fn from_arrow_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let names = (0..n).map(|i| format!("x{i}")).collect();
        let arrow = Table::from_fn(n, f);
        arrow.validate()?;
        FiniteAlgebra::new(names, arrow)
    }

    pub fn with_compose(mut self, compose: Table) -> Result<Self> {
        if compose.size() != self.len() {
            return Err(Error::InvalidAlgebra("compose table has the wrong size".into()));
        }
        compose.validate()?;
        self.compose = Some(compose);
        Ok(self)
    }

    pub fn without_compose(mut self) -> Self {
        self.compose = None;
        self
    }

    pub fn with_one(mut self, one: Option<usize>) -> Result<Self> {
        self.one = self.check_index(one)?;
        Ok(self)
    }

    pub fn with_id(mut self, id: Option<usize>) -> Result<Self> {
        self.id = self.check_index(id)?;
        Ok(self)
    }

    pub fn with_zero(mut self, zero: Option<usize>) -> Result<Self> {
        self.zero = self.check_index(zero)?;
        Ok(self)
    }

    fn check_index(&self, i: Option<usize>) -> Result<Option<usize>> {
        match i {
            Some(i) if i >= self.len() => {
                Err(Error::InvalidAlgebra(format!("constant index {i} is out of range")))
            }
            other => Ok(other),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn arrow_table(&self) -> &Table {
        &self.arrow
    }

    pub fn compose_table(&self) -> Option<&Table> {
        self.compose.as_ref()
    }

    #[inline]
    pub fn arrow(&self, a: usize, b: usize) -> usize {
        self.arrow.get(a, b)
    }

    /// `a ; b`. Panics when the algebra has no composition table.
    #[inline]
    pub fn compose(&self, a: usize, b: usize) -> usize {
        self.compose.as_ref().expect("algebra has no compose table").get(a, b)
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn id(&self) -> Option<usize> {
        self.id
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    /// `(a -> b) -> b`, the join in an implication algebra.
    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.arrow(self.arrow(a, b), b)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub(crate) fn require_compose(&self) -> Result<&Table> {
        self.compose.as_ref().ok_or(Error::MissingTable("compose"))
    }

    pub(crate) fn require_id(&self) -> Result<usize> {
        self.id.ok_or(Error::MissingConstant("id"))
    }

    pub(crate) fn require_zero(&self) -> Result<usize> {
        self.zero.ok_or(Error::MissingConstant("zero"))
    }

    /// Renders an element subset as `{a, b}` in carrier order.
    pub fn render_set<'a>(&self, members: impl IntoIterator<Item = &'a usize>) -> String {
        let mut idx: Vec<usize> = members.into_iter().copied().collect();
        idx.sort_unstable();
        idx.dedup();
        let parts: Vec<&str> = idx.iter().map(|&i| self.name(i)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Renders an element tuple as `(a,b,c)`.
    pub fn render_tuple(&self, tuple: &[usize]) -> String {
        let parts: Vec<&str> = tuple.iter().map(|&i| self.name(i)).collect();
        format!("({})", parts.join(","))
    }
}
