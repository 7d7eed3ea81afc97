use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::group::FiniteGroup;

use super::search::{Backtrack, Flow};
use super::Iso;

/// Isomorphism invariants used to reject non-isomorphic pairs quickly.
/// Equal fingerprints never prove isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    /// Sorted.
    pub element_orders: Vec<usize>,
    pub center_size: usize,
    /// Sorted.
    pub class_sizes: Vec<usize>,
}

pub fn conjugacy_class_sizes(g: &FiniteGroup) -> Vec<usize> {
    let mut class_of = vec![usize::MAX; g.order()];
    let mut sizes = Vec::new();
    for x in g.elements() {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let mut size = 0;
        for y in g.elements() {
            let c = g.conj(y, x);
            if class_of[c] == usize::MAX {
                class_of[c] = id;
                size += 1;
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut element_orders = g.element_orders();
    element_orders.sort_unstable();
    let class_sizes = conjugacy_class_sizes(g);
    Fingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        element_orders,
        center_size: class_sizes.iter().filter(|&&s| s == 1).count(),
        class_sizes,
    }
}

/// Why two groups are known not to be isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonIsomorphic {
    OrdersDiffer,
    ElementOrdersDiffer,
    AbelianFlagDiffers,
    CenterSizesDiffer,
    ClassSizesDiffer,
    /// Fingerprints agree but the complete search found nothing.
    SearchExhausted,
}

impl fmt::Display for NonIsomorphic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NonIsomorphic::OrdersDiffer => "group orders differ",
            NonIsomorphic::ElementOrdersDiffer => "element-order multisets differ",
            NonIsomorphic::AbelianFlagDiffers => "one group is abelian and the other is not",
            NonIsomorphic::CenterSizesDiffer => "center sizes differ",
            NonIsomorphic::ClassSizesDiffer => "conjugacy class sizes differ",
            NonIsomorphic::SearchExhausted => "no isomorphism exists (exhaustive search)",
        })
    }
}

impl Fingerprint {
    /// First invariant that tells `self` and `other` apart, if any. Element
    /// orders are reported before the abelian flag since they are the more
    /// informative witness.
    pub fn mismatch(&self, other: &Fingerprint) -> Option<NonIsomorphic> {
        if self.order != other.order {
            Some(NonIsomorphic::OrdersDiffer)
        } else if self.element_orders != other.element_orders {
            Some(NonIsomorphic::ElementOrdersDiffer)
        } else if self.abelian != other.abelian {
            Some(NonIsomorphic::AbelianFlagDiffers)
        } else if self.center_size != other.center_size {
            Some(NonIsomorphic::CenterSizesDiffer)
        } else if self.class_sizes != other.class_sizes {
            Some(NonIsomorphic::ClassSizesDiffer)
        } else {
            None
        }
    }
}

/// Decides isomorphism, returning either an explicit isomorphism or the
/// reason none exists.
pub fn isomorphism_or_reason(g1: &Arc<FiniteGroup>, g2: &Arc<FiniteGroup>) -> Result<Iso, NonIsomorphic> {
    if g1.order() != g2.order() {
        return Err(NonIsomorphic::OrdersDiffer);
    }
    if g1 == g2 {
        return Ok(
            Iso::from_bijection(g1.clone(), g2.clone(), g1.elements().collect()).expect("identity is an isomorphism")
        );
    }
    if let Some(reason) = fingerprint(g1).mismatch(&fingerprint(g2)) {
        return Err(reason);
    }
    let mut found = None;
    let mut search = Backtrack::new(g1, g2);
    search.run(&mut |map| {
        found = Some(map.to_vec());
        Flow::Stop
    });
    match found {
        Some(map) => Ok(Iso::from_bijection(g1.clone(), g2.clone(), map).expect("search only yields isomorphisms")),
        None => Err(NonIsomorphic::SearchExhausted),
    }
}

pub fn find_isomorphism(g1: &Arc<FiniteGroup>, g2: &Arc<FiniteGroup>) -> Option<Iso> {
    isomorphism_or_reason(g1, g2).ok()
}

pub fn are_isomorphic(g1: &Arc<FiniteGroup>, g2: &Arc<FiniteGroup>) -> bool {
    find_isomorphism(g1, g2).is_some()
}
