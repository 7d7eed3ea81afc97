use std::sync::Arc;

use crate::group::FiniteGroup;
use crate::subgroup::{same_group, Subgroup};

use super::HomError;

/// A validated homomorphism between two finite groups.
#[derive(Clone)]
pub struct Hom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl std::fmt::Debug for Hom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hom")
            .field("source_order", &self.source.order())
            .field("target_order", &self.target.order())
            .field("map", &self.map)
            .finish()
    }
}

impl PartialEq for Hom {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && same_group(&self.source, &other.source) && same_group(&self.target, &other.target)
    }
}

impl Eq for Hom {}

impl Hom {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<usize>) -> Result<Self, HomError> {
        if map.len() != source.order() {
            return Err(HomError::LengthMismatch { expected: source.order(), found: map.len() });
        }
        if let Some(x) = map.iter().position(|&y| y >= target.order()) {
            return Err(HomError::OutOfRange { element: x, image: map[x] });
        }
        if map[0] != 0 {
            return Err(HomError::IdentityNotPreserved);
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(HomError::NotMultiplicative { x, y });
                }
            }
        }
        Ok(Hom { source, target, map })
    }

    pub(crate) fn new_unchecked(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<usize>) -> Self {
        debug_assert_eq!(map.len(), source.order());
        Hom { source, target, map }
    }

    /// Everything to the identity.
    pub fn trivial(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>) -> Self {
        let map = vec![0; source.order()];
        Hom { source, target, map }
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Self {
        let map = g.elements().collect();
        Hom { source: g.clone(), target: g, map }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.map.iter().all(|&y| y == 0)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Hom) -> Result<Hom, HomError> {
        if !same_group(&self.target, &next.source) {
            return Err(HomError::MismatchedGroups);
        }
        let map = self.map.iter().map(|&y| next.map[y]).collect();
        Ok(Hom { source: self.source.clone(), target: next.target.clone(), map })
    }

    pub fn kernel(&self) -> Subgroup {
        let members = self.source.elements().filter(|&x| self.map[x] == 0);
        Subgroup::new(self.source.clone(), members).expect("kernels are subgroups")
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::new(self.target.clone(), self.map.iter().copied()).expect("images are subgroups")
    }
}

/// Restriction of `f` to the subgroup `h` of its source, re-indexed so the
/// new source is `h.as_group()`.
pub fn restrict(f: &Hom, h: &Subgroup) -> Result<Hom, HomError> {
    if !same_group(f.source(), h.parent()) {
        return Err(HomError::MismatchedGroups);
    }
    let sub = h.as_group();
    let map = sub.embedding.iter().map(|&x| f.apply(x)).collect();
    Ok(Hom::new_unchecked(sub.group, f.target.clone(), map))
}

/// A homomorphism together with a verified two-sided inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iso {
    forward: Hom,
    backward: Hom,
}

impl Iso {
    pub fn new(forward: Hom, backward: Hom) -> Result<Self, HomError> {
        if !same_group(forward.source(), backward.target()) || !same_group(forward.target(), backward.source()) {
            return Err(HomError::MismatchedGroups);
        }
        let there_and_back = forward.source().elements().all(|x| backward.apply(forward.apply(x)) == x);
        let back_and_there = forward.target().elements().all(|y| forward.apply(backward.apply(y)) == y);
        if !(there_and_back && back_and_there) {
            return Err(HomError::NotInverse);
        }
        Ok(Iso { forward, backward })
    }

    /// Validates `map` as a bijective homomorphism and derives its inverse.
    pub fn from_bijection(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        map: Vec<usize>,
    ) -> Result<Self, HomError> {
        if source.order() != target.order() {
            return Err(HomError::NotBijective);
        }
        let forward = Hom::new(source.clone(), target.clone(), map)?;
        let mut back = vec![usize::MAX; target.order()];
        for (x, &y) in forward.map().iter().enumerate() {
            if back[y] != usize::MAX {
                return Err(HomError::NotBijective);
            }
            back[y] = x;
        }
        // A bijective hom has a homomorphic inverse.
        let backward = Hom::new_unchecked(target, source, back);
        Iso::new(forward, backward)
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Self {
        let id = Hom::identity(g);
        Iso { forward: id.clone(), backward: id }
    }

    pub fn forward(&self) -> &Hom {
        &self.forward
    }

    pub fn backward(&self) -> &Hom {
        &self.backward
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        self.forward.source()
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        self.forward.target()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.forward.apply(x)
    }

    pub fn map(&self) -> &[usize] {
        self.forward.map()
    }

    pub fn inverse(&self) -> Iso {
        Iso { forward: self.backward.clone(), backward: self.forward.clone() }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Iso) -> Result<Iso, HomError> {
        Ok(Iso { forward: self.forward.then(&next.forward)?, backward: next.backward.then(&self.backward)? })
    }

    /// Re-checks both homomorphisms and that they are mutually inverse.
    pub fn validate(&self) -> Result<(), HomError> {
        Hom::new(self.source().clone(), self.target().clone(), self.forward.map.clone())?;
        Hom::new(self.target().clone(), self.source().clone(), self.backward.map.clone())?;
        Iso::new(self.forward.clone(), self.backward.clone()).map(|_| ())
    }
}
