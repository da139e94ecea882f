//! Term-defined structure: the top `a -> a`, the order and join of an
//! implication algebra, and signature reducts.

use crate::algebra::{ClassId, FiniteAlgebra, Table};
use crate::axioms::{check_class, common_self_arrow};
use crate::error::{Error, Result};

/// The common value of `a -> a`, checked against `b -> 1 = 1` and `1 -> b = b`.
pub fn derived_one(alg: &FiniteAlgebra) -> Result<usize> {
    let one = common_self_arrow(alg).map_err(|(a, b)| Error::NotConstant { a, b })?;
    for b in alg.elements() {
        if alg.arrow(b, one) != one {
            return Err(Error::LawViolation { law: "b->1=1", element: b });
        }
        if alg.arrow(one, b) != b {
            return Err(Error::LawViolation { law: "1->b=b", element: b });
        }
    }
    Ok(one)
}

/// The partial order `a <= b iff a -> b = 1` and the join `(a -> b) -> b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedOrder {
    n: usize,
    one: usize,
    leq: Vec<bool>,
    join: Table,
}

impl DerivedOrder {
    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join.get(a, b)
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    /// All pairs `(a, b)` with `a <= b`, lexicographically.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| (0..self.n).map(move |b| (a, b))).filter(|&(a, b)| self.leq(a, b))
    }
}

/// Requires an implication algebra.
pub fn derived_order(alg: &FiniteAlgebra) -> Result<DerivedOrder> {
    let report = check_class(alg, ClassId::Ia)?;
    if !report.passed {
        return Err(Error::Precondition("algebra is not an implication algebra".into()));
    }
    let n = alg.len();
    let one = derived_one(alg)?;
    let leq: Vec<bool> = (0..n * n).map(|i| alg.arrow(i / n, i % n) == one).collect();
    let join = Table::from_fn(n, |a, b| alg.join(a, b));
    let order = DerivedOrder { n, one, leq, join };

    for a in 0..n {
        if !order.leq(a, a) || !order.leq(a, one) {
            return Err(Error::InternalInvariant(format!("order not reflexive or bounded at {a}")));
        }
        for b in 0..n {
            if a != b && order.leq(a, b) && order.leq(b, a) {
                return Err(Error::InternalInvariant(format!("order not antisymmetric at ({a},{b})")));
            }
            if (order.join(a, b) == b) != order.leq(a, b) {
                return Err(Error::InternalInvariant(format!("join disagrees with order at ({a},{b})")));
            }
            for c in 0..n {
                if order.leq(a, b) && order.leq(b, c) && !order.leq(a, c) {
                    return Err(Error::InternalInvariant(format!(
                        "order not transitive at ({a},{b},{c})"
                    )));
                }
            }
        }
    }
    Ok(order)
}

fn source_classes(target: ClassId) -> &'static [ClassId] {
    use ClassId::*;
    match target {
        Isg => &[Bsg, Imonoid, Isg],
        Ia => &[Bsg, Imonoid, Isg, Ia],
        PositiveIa => &[Bsg, Imonoid, Isg, Ia, PositiveIa],
        Imonoid => &[Imonoid],
        Bsg => &[Bsg],
    }
}

/// Computes the `target`-signature reduct over the same carrier.
///
/// The source class is the first of the richer classes the algebra
/// actually belongs to. From a Boolean semigroup, `->` is recomputed as
/// `(-a) + b` with `-a = a -> 0`; the top is always re-derived as `a -> a`.
pub fn reduct(alg: &FiniteAlgebra, target: ClassId) -> Result<FiniteAlgebra> {
    let mut had_structure = false;
    let mut source = None;
    for &cls in source_classes(target) {
        match check_class(alg, cls) {
            Ok(report) => {
                had_structure = true;
                if report.passed {
                    source = Some(cls);
                    break;
                }
            }
            Err(Error::MissingTable(_)) | Err(Error::MissingConstant(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let source = match source {
        Some(s) => s,
        None if had_structure => {
            return Err(Error::Precondition(format!(
                "algebra belongs to none of the classes that define {target}"
            )))
        }
        None => {
            let from = if alg.compose_table().is_some() { "isg" } else { "ia" };
            return Err(Error::NotDefinable { from: from.into(), to: target.to_string() });
        }
    };

    let arrow = if source == ClassId::Bsg {
        let zero = alg.require_zero()?;
        Table::from_fn(alg.len(), |a, b| alg.join(alg.arrow(a, zero), b))
    } else {
        alg.arrow_table().clone()
    };
    let mut out = FiniteAlgebra::new(alg.names().to_vec(), arrow)?;
    let one = derived_one(&out)?;
    out = out.with_one(Some(one))?;
    match target {
        ClassId::Isg => {
            out = out.with_compose(alg.require_compose()?.clone())?.with_zero(alg.zero())?;
        }
        ClassId::Imonoid => {
            out = out.with_compose(alg.require_compose()?.clone())?.with_id(alg.id())?;
        }
        ClassId::Bsg => {
            out = out.with_compose(alg.require_compose()?.clone())?.with_zero(alg.zero())?;
        }
        ClassId::Ia | ClassId::PositiveIa => {}
    }
    if !check_class(&out, target)?.passed {
        return Err(Error::InternalInvariant(format!("{source} -> {target} reduct fails {target}")));
    }
    Ok(out)
}
