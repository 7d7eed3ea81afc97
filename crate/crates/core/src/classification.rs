//! Groups of order `p^2` and `pq`.
//!
//! [`classify`] never searches for an isomorphism. It extracts prime-order
//! subgroups, recognises the group as an internal direct or semidirect
//! product, and transports that decomposition onto a fixed representative.
//! [`verify_theorem`] checks the resulting counts against the brute-force
//! enumeration in [`crate::enumerate`].

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{is_prime, pow_mod, OrderShape};
use crate::enumerate::{enumerate_groups_with, EnumerationBudget};
use crate::group::{cyclic_group, FiniteGroup};
use crate::morphisms::{Hom, HomError, Iso};
use crate::products::{cyclic_semidirect, direct_product, sdp_congr, ProductError, ProductGroup};
use crate::recognition::{internal_direct, internal_semidirect, RecognitionError};
use crate::subgroup::{distinct_subgroups_of_order, subgroup_of_order, SubgroupError};

/// Which precondition of [`verify_uniqueness`] failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    OrderMismatch {
        left: usize,
        right: usize,
    },
    /// `which` is 1 or 2.
    Cyclic {
        which: u8,
    },
    BadOrderShape {
        order: usize,
    },
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::OrderMismatch { left, right } => write!(f, "orders differ ({left} vs {right})"),
            Hypothesis::Cyclic { which } => write!(f, "group {which} is cyclic"),
            Hypothesis::BadOrderShape { order } => write!(f, "order {order} is neither p^2 nor pq"),
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ClassificationError {
    #[error("{n} is not prime")]
    NotPrime { n: usize },
    #[error("every group of order {p}*{q} is cyclic")]
    NoNoncyclicGroup { p: usize, q: usize },
    #[error("order {order} is neither p^2 nor pq")]
    UnsupportedOrder { order: usize },
    #[error("expected order {p}*{q} with {p} < {q}, got {order}")]
    BadOrder { order: usize, p: usize, q: usize },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(Hypothesis),
    #[error(transparent)]
    Recognition(#[from] RecognitionError),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Hom(#[from] HomError),
}

type Result<T> = std::result::Result<T, ClassificationError>;

/// Where a group landed, with an isomorphism onto the representative.
#[derive(Clone, Debug)]
pub enum ClassificationResult {
    Cyclic {
        generator: usize,
        /// Onto `cyclic_group(|G|)`, sending `generator^i` to `i`.
        iso: Iso,
    },
    ElementaryAbelianPP {
        p: usize,
        representative: ProductGroup,
        iso: Iso,
    },
    SemidirectQP {
        p: usize,
        q: usize,
        /// The generator of `C_p` acts by `r -> r^k`.
        k: usize,
        phi: Hom,
        representative: ProductGroup,
        iso: Iso,
    },
}

impl ClassificationResult {
    pub fn tag(&self) -> &'static str {
        match self {
            ClassificationResult::Cyclic { .. } => "Cyclic",
            ClassificationResult::ElementaryAbelianPP { .. } => "ElementaryAbelianPP",
            ClassificationResult::SemidirectQP { .. } => "SemidirectQP",
        }
    }

    pub fn iso(&self) -> &Iso {
        match self {
            ClassificationResult::Cyclic { iso, .. }
            | ClassificationResult::ElementaryAbelianPP { iso, .. }
            | ClassificationResult::SemidirectQP { iso, .. } => iso,
        }
    }

    pub fn representative(&self) -> &Arc<FiniteGroup> {
        self.iso().target()
    }
}

fn require_prime(n: usize) -> Result<()> {
    if is_prime(n) {
        Ok(())
    } else {
        Err(ClassificationError::NotPrime { n })
    }
}

/// Whether some group of order `pq` is not cyclic.
pub fn noncyclic_exists(p: usize, q: usize) -> Result<bool> {
    require_prime(p)?;
    require_prime(q)?;
    Ok(p == q || (q - 1).is_multiple_of(p) || (p - 1).is_multiple_of(q))
}

/// Smallest `k > 1` with `k^p = 1 mod q`.
pub fn canonical_exponent(p: usize, q: usize) -> Option<usize> {
    (2..q).find(|&k| pow_mod(k, p, q) == 1)
}

/// The representative noncyclic group of order `pq` as a product.
pub fn canonical_noncyclic_product(p: usize, q: usize) -> Result<ProductGroup> {
    if !noncyclic_exists(p, q)? {
        return Err(ClassificationError::NoNoncyclicGroup { p, q });
    }
    if p == q {
        let c = Arc::new(cyclic_group(p).map_err(ProductError::from)?);
        return Ok(direct_product(&c, &c)?);
    }
    let (small, large) = (p.min(q), p.max(q));
    let k = canonical_exponent(small, large).ok_or(ClassificationError::NoNoncyclicGroup { p, q })?;
    Ok(cyclic_semidirect(large, small, k)?)
}

pub fn canonical_noncyclic(p: usize, q: usize) -> Result<Arc<FiniteGroup>> {
    Ok(canonical_noncyclic_product(p, q)?.group)
}

/// `generator^i -> i`, onto `target` whose element 1 generates by addition.
fn power_iso(g: &Arc<FiniteGroup>, generator: usize, target: &Arc<FiniteGroup>) -> Result<Iso> {
    let mut map = vec![0; g.order()];
    let mut x = 0;
    for i in 0..g.order() {
        map[x] = i;
        x = g.mul(x, generator);
    }
    Ok(Iso::from_bijection(g.clone(), target.clone(), map)?)
}

fn cyclic_result(g: &Arc<FiniteGroup>, generator: usize) -> Result<ClassificationResult> {
    let target = Arc::new(cyclic_group(g.order()).map_err(ProductError::from)?);
    Ok(ClassificationResult::Cyclic { generator, iso: power_iso(g, generator, &target)? })
}

fn first_generator(g: &FiniteGroup) -> usize {
    g.is_cyclic().expect("groups of prime order are cyclic")
}

pub fn classify(g: &Arc<FiniteGroup>) -> Result<ClassificationResult> {
    let shape = OrderShape::of(g.order());
    let Some((p, q)) = shape.primes() else {
        return Err(ClassificationError::UnsupportedOrder { order: g.order() });
    };
    if let Some(generator) = g.is_cyclic() {
        return cyclic_result(g, generator);
    }
    if p == q {
        classify_pp(g, p)
    } else {
        let e = express_as_semidirect(g, p, q)?;
        Ok(ClassificationResult::SemidirectQP {
            p,
            q,
            k: e.k,
            phi: e.phi,
            representative: e.representative,
            iso: e.iso,
        })
    }
}

fn classify_pp(g: &Arc<FiniteGroup>, p: usize) -> Result<ClassificationResult> {
    let (a, b) = distinct_subgroups_of_order(g, p)?;
    let d = internal_direct(g, &a, &b)?;
    let representative = canonical_noncyclic_product(p, p)?;
    let cp = &representative.normal;
    let a = &d.witness.normal.group;
    let b = &d.witness.complement.group;
    let f1 = power_iso(a, first_generator(a), cp)?;
    let f2 = power_iso(b, first_generator(b), cp)?;
    let transport = sdp_congr(&f1, &f2, &d.product, &representative)?;
    let iso = d.iso.then(&transport)?;
    Ok(ClassificationResult::ElementaryAbelianPP { p, representative, iso })
}

/// `G ≅ C_q ⋊_φ C_p` for `|G| = pq`, `p < q`.
#[derive(Clone, Debug)]
pub struct SemidirectExpression {
    /// 1 exactly when `φ` is trivial.
    pub k: usize,
    pub phi: Hom,
    /// `cyclic_semidirect(q, p, k)`.
    pub representative: ProductGroup,
    pub iso: Iso,
}

pub fn express_as_semidirect(g: &Arc<FiniteGroup>, p: usize, q: usize) -> Result<SemidirectExpression> {
    if !(is_prime(p) && is_prime(q) && p < q && g.order() == p * q) {
        return Err(ClassificationError::BadOrder { order: g.order(), p, q });
    }
    let big = subgroup_of_order(g, q)?;
    let small = subgroup_of_order(g, p)?;
    let w = internal_semidirect(g, &big, &small)?;

    let normal = &w.normal.group;
    let r = first_generator(normal);
    let cq = Arc::new(cyclic_group(q).map_err(ProductError::from)?);
    let f1 = power_iso(normal, r, &cq)?;
    // h acts on N by r -> r^e(h)
    let exponent = |h: usize| f1.apply(w.aut.apply(w.phi.apply(h), r));

    let complement = &w.complement.group;
    let (k, h) = if w.phi.is_trivial() {
        (1, first_generator(complement))
    } else {
        let k = canonical_exponent(p, q).ok_or(ClassificationError::NoNoncyclicGroup { p, q })?;
        let h = complement
            .elements()
            .find(|&h| exponent(h) == k)
            .expect("a nontrivial action realises every exponent of order p");
        (k, h)
    };
    let representative = cyclic_semidirect(q, p, k)?;
    let f2 = power_iso(complement, h, &representative.complement)?;
    let f1 = power_iso(normal, r, &representative.normal)?;
    let transport = sdp_congr(&f1, &f2, &w.product, &representative)?;
    let iso = w.iso.then(&transport)?;
    let phi = representative.action.as_ref().expect("cyclic_semidirect records its action").phi.clone();
    Ok(SemidirectExpression { k, phi, representative, iso })
}

/// An isomorphism between two noncyclic groups of the same order `p^2` or
/// `pq`, composed through their common representative.
pub fn verify_uniqueness(g1: &Arc<FiniteGroup>, g2: &Arc<FiniteGroup>) -> Result<Iso> {
    let fail = |h| Err(ClassificationError::HypothesisFailed(h));
    if g1.order() != g2.order() {
        return fail(Hypothesis::OrderMismatch { left: g1.order(), right: g2.order() });
    }
    if OrderShape::of(g1.order()).primes().is_none() {
        return fail(Hypothesis::BadOrderShape { order: g1.order() });
    }
    if g1.is_cyclic().is_some() {
        return fail(Hypothesis::Cyclic { which: 1 });
    }
    if g2.is_cyclic().is_some() {
        return fail(Hypothesis::Cyclic { which: 2 });
    }
    let r1 = classify(g1)?;
    let r2 = classify(g2)?;
    Ok(r1.iso().then(&r2.iso().inverse())?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCheck {
    pub order: usize,
    pub p: usize,
    pub q: usize,
    pub predicted: usize,
    pub oracle: Option<usize>,
    /// Result tags of the oracle's representatives, in discovery order.
    pub tags: Vec<String>,
    pub pass: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub max_order: usize,
    pub rows: Vec<OrderCheck>,
    pub pass: bool,
}

/// Compares predicted class counts for every `p^2` and `pq` order up to
/// `max_order` with the enumeration oracle, and classifies every oracle
/// representative.
pub fn verify_theorem(max_order: usize) -> TheoremReport {
    let orders: Vec<_> = (1..=max_order).filter_map(|n| OrderShape::of(n).primes().map(|(p, q)| (n, p, q))).collect();
    let rows: Vec<_> = orders.into_par_iter().map(|(n, p, q)| check_order(n, p, q)).collect();
    let pass = rows.iter().all(|r| r.pass);
    TheoremReport { max_order, rows, pass }
}

fn check_order(n: usize, p: usize, q: usize) -> OrderCheck {
    let predicted = 1 + usize::from(noncyclic_exists(p, q).expect("shape yields primes"));
    let mut row = OrderCheck { order: n, p, q, predicted, oracle: None, tags: Vec::new(), pass: false, error: None };
    let report = match enumerate_groups_with(n, &EnumerationBudget::extended()) {
        Ok(r) => r,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.oracle = Some(report.count);
    for rep in &report.representatives {
        match classify(rep).and_then(|c| c.iso().validate().map(|_| c).map_err(Into::into)) {
            Ok(c) => row.tags.push(c.tag().to_string()),
            Err(e) => {
                row.error = Some(e.to_string());
                return row;
            }
        }
    }
    let mut distinct = row.tags.clone();
    distinct.sort();
    distinct.dedup();
    row.pass = report.count == predicted && distinct.len() == row.tags.len();
    row
}
