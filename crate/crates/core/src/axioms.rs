//! Exhaustive axiom checking for the five algebra classes.
//!
//! Every axiom is instantiated over all tuples of carrier elements in
//! lexicographic index order. A failing axiom is reported once, with its
//! first failing tuple and the total number of failing tuples.

use std::fmt;

use crate::algebra::{ClassId, FiniteAlgebra};
use crate::error::{Error, Result};

/// One falsified axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    /// First failing instance, as element indices in variable order.
    pub witness: Vec<usize>,
    /// Number of failing instances.
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub class: ClassId,
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl ClassReport {
    pub fn violation(&self, axiom: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    /// Multi-line plain text report using element names.
    pub fn render(&self, alg: &FiniteAlgebra) -> String {
        let mut out = format!("class {}\n", self.class);
        out.push_str(if self.passed { "passed\n" } else { "failed\n" });
        for v in &self.violations {
            out.push_str(&format!(
                "violation {} {} count {}\n",
                v.axiom,
                alg.render_tuple(&v.witness),
                v.count
            ));
        }
        out
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?} x{}", self.axiom, self.witness, self.count)
    }
}

#[derive(Default)]
struct Collector {
    violations: Vec<Violation>,
}

impl Collector {
    fn record(&mut self, axiom: &'static str, first: Option<Vec<usize>>, count: u64) {
        if let Some(witness) = first {
            self.violations.push(Violation { axiom, witness, count });
        }
    }

    fn unary(&mut self, n: usize, axiom: &'static str, holds: impl Fn(usize) -> bool) {
        let mut first = None;
        let mut count = 0;
        for a in 0..n {
            if !holds(a) {
                count += 1;
                first.get_or_insert_with(|| vec![a]);
            }
        }
        self.record(axiom, first, count);
    }

    fn binary(&mut self, n: usize, axiom: &'static str, holds: impl Fn(usize, usize) -> bool) {
        let mut first = None;
        let mut count = 0;
        for a in 0..n {
            for b in 0..n {
                if !holds(a, b) {
                    count += 1;
                    first.get_or_insert_with(|| vec![a, b]);
                }
            }
        }
        self.record(axiom, first, count);
    }

    fn ternary(
        &mut self,
        n: usize,
        axiom: &'static str,
        holds: impl Fn(usize, usize, usize) -> bool,
    ) {
        let mut first = None;
        let mut count = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !holds(a, b, c) {
                        count += 1;
                        first.get_or_insert_with(|| vec![a, b, c]);
                    }
                }
            }
        }
        self.record(axiom, first, count);
    }

    fn finish(self, class: ClassId) -> ClassReport {
        ClassReport { class, passed: self.violations.is_empty(), violations: self.violations }
    }
}

/// Evaluates every axiom instance of `class` over `alg`.
///
/// Fails only when the class needs a table or constant the algebra does not
/// carry; axiom failures are reported in the [`ClassReport`].
pub fn check_class(alg: &FiniteAlgebra, class: ClassId) -> Result<ClassReport> {
    let mut col = Collector::default();
    match class {
        ClassId::Ia => ia_axioms(alg, &mut col),
        ClassId::PositiveIa => positive_ia_axioms(alg, &mut col),
        ClassId::Isg => {
            alg.require_compose()?;
            ia_axioms(alg, &mut col);
            semigroup_axioms(alg, &mut col);
        }
        ClassId::Imonoid => {
            alg.require_compose()?;
            let id = alg.require_id()?;
            ia_axioms(alg, &mut col);
            semigroup_axioms(alg, &mut col);
            let n = alg.len();
            col.unary(n, "Left-identity", |a| alg.compose(id, a) == a);
            col.unary(n, "Right-identity", |a| alg.compose(a, id) == a);
        }
        ClassId::Bsg => {
            alg.require_compose()?;
            let zero = alg.require_zero()?;
            let one = alg.one().ok_or(Error::MissingConstant("one"))?;
            bsg_axioms(alg, zero, one, &mut col);
        }
    }
    Ok(col.finish(class))
}

/// Shorthand for `check_class(..).passed`, treating missing structure as failure.
pub fn passes(alg: &FiniteAlgebra, class: ClassId) -> bool {
    check_class(alg, class).map(|r| r.passed).unwrap_or(false)
}

fn ia_axioms(alg: &FiniteAlgebra, col: &mut Collector) {
    let n = alg.len();
    let ar = |a, b| alg.arrow(a, b);
    col.binary(n, "Contraction", |a, b| ar(ar(a, b), a) == a);
    col.binary(n, "Quasi-commutativity", |a, b| ar(ar(a, b), b) == ar(ar(b, a), a));
    col.ternary(n, "Exchange", |a, b, c| ar(a, ar(b, c)) == ar(b, ar(a, c)));
    if let Some(one) = alg.one() {
        col.unary(n, "One-mismatch", |a| ar(a, a) == one);
    }
}

/// The common value of `a -> a`, or the first pair `(0, b)` that disagrees.
pub(crate) fn common_self_arrow(alg: &FiniteAlgebra) -> std::result::Result<usize, (usize, usize)> {
    let top = alg.arrow(0, 0);
    match alg.elements().find(|&b| alg.arrow(b, b) != top) {
        Some(b) => Err((0, b)),
        None => Ok(top),
    }
}

fn positive_ia_axioms(alg: &FiniteAlgebra, col: &mut Collector) {
    let n = alg.len();
    let one = match common_self_arrow(alg) {
        Ok(one) => one,
        Err((a, b)) => {
            let count = alg.elements().filter(|&x| alg.arrow(x, x) != alg.arrow(a, a)).count();
            col.record("Not-constant", Some(vec![a, b]), count as u64);
            return;
        }
    };
    if let Some(declared) = alg.one() {
        if declared != one {
            col.record("One-mismatch", Some(vec![declared]), 1);
            return;
        }
    }
    let ar = |a, b| alg.arrow(a, b);
    col.binary(n, "P1", |a, b| ar(a, ar(b, a)) == one);
    col.ternary(n, "P2", |a, b, c| ar(ar(a, ar(b, c)), ar(ar(a, b), ar(a, c))) == one);
    col.binary(n, "P3", |a, b| a == b || ar(a, b) != one || ar(b, a) != one);
    col.unary(n, "P4", |a| ar(a, one) == one);
}

fn semigroup_axioms(alg: &FiniteAlgebra, col: &mut Collector) {
    let n = alg.len();
    let ar = |a, b| alg.arrow(a, b);
    let co = |a, b| alg.compose(a, b);
    col.ternary(n, "Associativity", |a, b, c| co(co(a, b), c) == co(a, co(b, c)));
    col.ternary(n, "Left-quasi-additivity", |a, b, c| {
        let (ac, bc) = (co(a, c), co(b, c));
        co(alg.join(a, b), c) == ar(ar(ac, bc), bc)
    });
    col.ternary(n, "Right-quasi-additivity", |a, b, c| {
        let (ca, cb) = (co(c, a), co(c, b));
        co(c, alg.join(a, b)) == ar(ar(ca, cb), cb)
    });
}

fn bsg_axioms(alg: &FiniteAlgebra, zero: usize, one: usize, col: &mut Collector) {
    let n = alg.len();
    let neg = |a| alg.arrow(a, zero);
    let join = |a, b| alg.join(a, b);
    let meet = |a, b| neg(join(neg(a), neg(b)));
    let co = |a, b| alg.compose(a, b);

    col.binary(n, "Boolean-arrow", |a, b| alg.arrow(a, b) == join(neg(a), b));
    col.binary(n, "Join-commutativity", |a, b| join(a, b) == join(b, a));
    col.ternary(n, "Join-associativity", |a, b, c| join(join(a, b), c) == join(a, join(b, c)));
    col.binary(n, "Meet-commutativity", |a, b| meet(a, b) == meet(b, a));
    col.ternary(n, "Meet-associativity", |a, b, c| meet(meet(a, b), c) == meet(a, meet(b, c)));
    col.binary(n, "Join-absorption", |a, b| join(a, meet(a, b)) == a);
    col.binary(n, "Meet-absorption", |a, b| meet(a, join(a, b)) == a);
    col.ternary(n, "Meet-distributivity", |a, b, c| {
        meet(a, join(b, c)) == join(meet(a, b), meet(a, c))
    });
    col.ternary(n, "Join-distributivity", |a, b, c| {
        join(a, meet(b, c)) == meet(join(a, b), join(a, c))
    });
    col.unary(n, "Zero-identity", |a| join(a, zero) == a);
    col.unary(n, "One-identity", |a| meet(a, one) == a);
    col.unary(n, "Complement-join", |a| join(a, neg(a)) == one);
    col.unary(n, "Complement-meet", |a| meet(a, neg(a)) == zero);
    col.ternary(n, "Associativity", |a, b, c| co(co(a, b), c) == co(a, co(b, c)));
    col.ternary(n, "Left-additivity", |a, b, c| co(join(a, b), c) == join(co(a, c), co(b, c)));
    col.ternary(n, "Right-additivity", |a, b, c| co(c, join(a, b)) == join(co(c, a), co(c, b)));
    col.unary(n, "Left-annihilation", |a| co(zero, a) == zero);
    col.unary(n, "Right-annihilation", |a| co(a, zero) == zero);
}
