//! Subgroups of a [`FiniteGroup`], their lattice operations, normality, and
//! the prime-order subgroup search the classification relies on.

use std::collections::VecDeque;
use std::sync::Arc;

use thiserror::Error;

use crate::arith::is_prime;
use crate::group::FiniteGroup;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SubgroupError {
    #[error("subgroups belong to different parent groups")]
    MismatchedParent,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("{p} is not prime")]
    NotPrime { p: usize },
    #[error("no element of order {p} (it does not divide {order})")]
    NoSuchElement { p: usize, order: usize },
    #[error("only one subgroup of order {p}")]
    OnlyOneSubgroup { p: usize },
}

/// Same group, either by pointer or by table.
pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A subset of a parent group closed under products and inverses.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Subgroup").field("parent_order", &self.parent.order()).field("members", &self.members).finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.parent, &other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// Checks that `members` really is a subgroup of `parent`.
    pub fn new(parent: Arc<FiniteGroup>, members: impl IntoIterator<Item = usize>) -> Result<Self, SubgroupError> {
        let n = parent.order();
        let mut mask = vec![false; n];
        for x in members {
            if x >= n {
                return Err(SubgroupError::NotSubgroup(format!("element {x} out of range")));
            }
            mask[x] = true;
        }
        if !mask[0] {
            return Err(SubgroupError::NotSubgroup("missing the identity".into()));
        }
        let members: Vec<usize> = (0..n).filter(|&x| mask[x]).collect();
        for &a in &members {
            if !mask[parent.inv(a)] {
                return Err(SubgroupError::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &members {
                if !mask[parent.mul(a, b)] {
                    return Err(SubgroupError::NotSubgroup(format!("{a}*{b} missing")));
                }
            }
        }
        if !n.is_multiple_of(members.len()) {
            return Err(SubgroupError::NotSubgroup(format!("size {} does not divide {n}", members.len())));
        }
        Ok(Subgroup { parent, members, mask })
    }

    fn from_mask_unchecked(parent: Arc<FiniteGroup>, mask: Vec<bool>) -> Self {
        let members = (0..mask.len()).filter(|&x| mask[x]).collect();
        Subgroup { parent, members, mask }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    /// Sorted member indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn is_bot(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_top(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    /// `g * h * g^-1` stays inside for every `g` in the parent.
    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.elements().all(|x| self.members.iter().all(|&h| self.mask[g.conj(x, h)]))
    }

    /// `x H x^-1`, as a subgroup.
    pub fn conjugate(&self, x: usize) -> Subgroup {
        let g = &self.parent;
        let mut mask = vec![false; g.order()];
        for &h in &self.members {
            mask[g.conj(x, h)] = true;
        }
        Subgroup::from_mask_unchecked(self.parent.clone(), mask)
    }

    fn check_parent(&self, other: &Subgroup) -> Result<(), SubgroupError> {
        if same_group(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(SubgroupError::MismatchedParent)
        }
    }

    /// Intersection.
    pub fn meet(&self, other: &Subgroup) -> Result<Subgroup, SubgroupError> {
        self.check_parent(other)?;
        let mask = self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect();
        Ok(Subgroup::from_mask_unchecked(self.parent.clone(), mask))
    }

    /// Subgroup generated by the union.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup, SubgroupError> {
        self.check_parent(other)?;
        let gens = self.members.iter().chain(&other.members).copied();
        Ok(closure(&self.parent, gens))
    }

    /// Re-indexes the subgroup as a standalone group.
    pub fn as_group(&self) -> EmbeddedGroup {
        let k = self.members.len();
        let mut section = vec![None; self.parent.order()];
        for (i, &x) in self.members.iter().enumerate() {
            section[x] = Some(i);
        }
        let mut table = Vec::with_capacity(k * k);
        for &a in &self.members {
            for &b in &self.members {
                table.push(section[self.parent.mul(a, b)].expect("closed") as u32);
            }
        }
        let group = FiniteGroup::from_flat(k, table).expect("subgroup tables are groups");
        EmbeddedGroup { group: Arc::new(group), parent: self.parent.clone(), embedding: self.members.clone(), section }
    }
}

/// A subgroup re-indexed as its own group, with the index maps both ways.
#[derive(Clone, Debug)]
pub struct EmbeddedGroup {
    pub group: Arc<FiniteGroup>,
    pub parent: Arc<FiniteGroup>,
    /// Sub index -> parent index. Increasing, so identity maps to identity.
    pub embedding: Vec<usize>,
    /// Parent index -> sub index, for members only.
    pub section: Vec<Option<usize>>,
}

impl EmbeddedGroup {
    pub fn embed(&self, x: usize) -> usize {
        self.embedding[x]
    }

    /// Panics if `x` is not a member.
    pub fn project(&self, x: usize) -> usize {
        self.section[x].expect("element outside the subgroup")
    }

    /// Image of a parent subgroup contained in this one.
    pub fn subgroup_of(&self, h: &Subgroup) -> Result<Subgroup, SubgroupError> {
        let members = h
            .members()
            .iter()
            .map(|&x| {
                self.section[x].ok_or_else(|| SubgroupError::NotSubgroup(format!("{x} outside the ambient subgroup")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Subgroup::new(self.group.clone(), members)
    }
}

/// Smallest subgroup containing `gens`.
pub fn closure(g: &Arc<FiniteGroup>, gens: impl IntoIterator<Item = usize>) -> Subgroup {
    let gens: Vec<usize> = gens.into_iter().filter(|&x| x != 0).collect();
    let mut mask = vec![false; g.order()];
    mask[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &s in &gens {
            let y = g.mul(x, s);
            if !mask[y] {
                mask[y] = true;
                queue.push_back(y);
            }
        }
    }
    Subgroup::from_mask_unchecked(g.clone(), mask)
}

pub fn bot(g: &Arc<FiniteGroup>) -> Subgroup {
    let mut mask = vec![false; g.order()];
    mask[0] = true;
    Subgroup::from_mask_unchecked(g.clone(), mask)
}

pub fn top(g: &Arc<FiniteGroup>) -> Subgroup {
    Subgroup::from_mask_unchecked(g.clone(), vec![true; g.order()])
}

/// Smallest-index element of order exactly `p`.
///
/// Scanning in index order and powering each element whose order is a
/// multiple of `p` down to order `p` yields the same winner, since an
/// element of order `p` is its own candidate.
pub fn element_of_order(g: &FiniteGroup, p: usize) -> Result<usize, SubgroupError> {
    if !is_prime(p) {
        return Err(SubgroupError::NotPrime { p });
    }
    if !g.order().is_multiple_of(p) {
        return Err(SubgroupError::NoSuchElement { p, order: g.order() });
    }
    g.elements().find(|&x| g.element_order(x) == p).ok_or(SubgroupError::NoSuchElement { p, order: g.order() })
}

/// The cyclic subgroup generated by [`element_of_order`].
pub fn subgroup_of_order(g: &Arc<FiniteGroup>, p: usize) -> Result<Subgroup, SubgroupError> {
    let x = element_of_order(g, p)?;
    Ok(closure(g, [x]))
}

/// All distinct subgroups of prime order `p`, in order of their
/// smallest-index generator.
pub fn subgroups_of_prime_order(g: &Arc<FiniteGroup>, p: usize) -> Result<Vec<Subgroup>, SubgroupError> {
    if !is_prime(p) {
        return Err(SubgroupError::NotPrime { p });
    }
    let mut found: Vec<Subgroup> = Vec::new();
    let mut covered = vec![false; g.order()];
    for x in g.elements() {
        if covered[x] || g.element_order(x) != p {
            continue;
        }
        let h = closure(g, [x]);
        for &y in h.members() {
            covered[y] = true;
        }
        found.push(h);
    }
    Ok(found)
}

/// The first two distinct order-`p` subgroups; used when `|G| = p^2` and
/// `G` is not cyclic.
pub fn distinct_subgroups_of_order(g: &Arc<FiniteGroup>, p: usize) -> Result<(Subgroup, Subgroup), SubgroupError> {
    let first = element_of_order(g, p)?;
    let a = closure(g, [first]);
    let second = g
        .elements()
        .find(|&x| !a.contains(x) && g.element_order(x) == p)
        .ok_or(SubgroupError::OnlyOneSubgroup { p })?;
    Ok((a, closure(g, [second])))
}
