//! Recognising internal products.
//!
//! Given a normal subgroup `N` and a subgroup `H` with `N ⊓ H = ⊥`, every
//! element of `N ⊔ H` factors uniquely as `n·h`, and `n·h ↦ (n, h)` is an
//! isomorphism onto `N ⋊_φ H` where `φ` is conjugation restricted to `H`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::morphisms::{conj_normal, restrict, AutGroup, Hom, HomError, Iso};
use crate::products::{direct_product, sdp_trivial_iso_direct, semidirect_product, ProductError, ProductGroup};
use crate::subgroup::{same_group, EmbeddedGroup, Subgroup, SubgroupError};

/// Which of the two subgroups a hypothesis failed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    Normal,
    Complement,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Factor::Normal => "N",
            Factor::Complement => "H",
        })
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("subgroups do not belong to the given group")]
    MismatchedParent,
    #[error("{0} is not normal")]
    NotNormal(Factor),
    #[error("N ⊓ H is not trivial")]
    MeetNotTrivial,
    #[error("N ⊔ H is not the whole group")]
    JoinNotFull,
    #[error("conjugation action of H on N is not trivial")]
    NontrivialAction,
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
}

/// An explicit isomorphism `G ≅ N ⋊_φ H` and the data it was built from.
#[derive(Clone, Debug)]
pub struct DecompositionWitness {
    /// `N` re-indexed as a standalone group.
    pub normal: EmbeddedGroup,
    /// `H` re-indexed as a standalone group.
    pub complement: EmbeddedGroup,
    pub aut: AutGroup,
    /// Conjugation restricted to `H`, as a map into `aut.carrier()`.
    pub phi: Hom,
    pub product: ProductGroup,
    /// `n·h ↦ (n, h)`.
    pub iso: Iso,
}

fn check_parents(g: &Arc<FiniteGroup>, n: &Subgroup, h: &Subgroup) -> Result<(), RecognitionError> {
    if same_group(g, n.parent()) && same_group(g, h.parent()) {
        Ok(())
    } else {
        Err(RecognitionError::MismatchedParent)
    }
}

/// `G ≅ N ⋊_φ H` for `N` normal, `N ⊓ H = ⊥` and `N ⊔ H = ⊤`.
pub fn internal_semidirect(
    g: &Arc<FiniteGroup>,
    n: &Subgroup,
    h: &Subgroup,
) -> Result<DecompositionWitness, RecognitionError> {
    check_parents(g, n, h)?;
    if !n.is_normal() {
        return Err(RecognitionError::NotNormal(Factor::Normal));
    }
    if !n.meet(h)?.is_bot() {
        return Err(RecognitionError::MeetNotTrivial);
    }
    if !n.join(h)?.is_top() {
        return Err(RecognitionError::JoinNotFull);
    }
    factorize(g, n, h)
}

fn factorize(g: &Arc<FiniteGroup>, n: &Subgroup, h: &Subgroup) -> Result<DecompositionWitness, RecognitionError> {
    let conj = conj_normal(g, n)?;
    let phi = restrict(&conj.hom, h)?;
    let complement = h.as_group();
    let product = semidirect_product(&conj.normal.group, phi.source(), &conj.aut, &phi)?;

    // Invert (n, h) -> n·h. Injectivity is the meet condition; covering the
    // whole group checks that the set product N·H is the join.
    let mut preimage = vec![usize::MAX; g.order()];
    for (i, &x) in conj.normal.embedding.iter().enumerate() {
        for (j, &y) in complement.embedding.iter().enumerate() {
            let slot = &mut preimage[g.mul(x, y)];
            if *slot != usize::MAX {
                return Err(RecognitionError::MeetNotTrivial);
            }
            *slot = product.index(i, j);
        }
    }
    if preimage.contains(&usize::MAX) {
        return Err(RecognitionError::JoinNotFull);
    }
    let iso = Iso::from_bijection(g.clone(), product.group.clone(), preimage)?;
    Ok(DecompositionWitness { normal: conj.normal, complement, aut: conj.aut, phi, product, iso })
}

/// `N ⊔ H ≅ N ⋊_φ H` for `N` normal in `G` and `N ⊓ H = ⊥`. The returned
/// witness is relative to the join, re-indexed as the first component.
pub fn internal_semidirect_join(
    g: &Arc<FiniteGroup>,
    n: &Subgroup,
    h: &Subgroup,
) -> Result<(EmbeddedGroup, DecompositionWitness), RecognitionError> {
    check_parents(g, n, h)?;
    if !n.is_normal() {
        return Err(RecognitionError::NotNormal(Factor::Normal));
    }
    if !n.meet(h)?.is_bot() {
        return Err(RecognitionError::MeetNotTrivial);
    }
    let join = n.join(h)?.as_group();
    let n_in_join = join.subgroup_of(n)?;
    let h_in_join = join.subgroup_of(h)?;
    let witness = factorize(&join.group, &n_in_join, &h_in_join)?;
    Ok((join, witness))
}

/// `G ≅ N × H` when both subgroups are normal.
#[derive(Clone, Debug)]
pub struct DirectDecomposition {
    pub witness: DecompositionWitness,
    pub product: ProductGroup,
    pub iso: Iso,
}

pub fn internal_direct(
    g: &Arc<FiniteGroup>,
    n: &Subgroup,
    h: &Subgroup,
) -> Result<DirectDecomposition, RecognitionError> {
    check_parents(g, n, h)?;
    if !n.is_normal() {
        return Err(RecognitionError::NotNormal(Factor::Normal));
    }
    if !h.is_normal() {
        return Err(RecognitionError::NotNormal(Factor::Complement));
    }
    let witness = internal_semidirect(g, n, h)?;
    if !witness.phi.is_trivial() {
        return Err(RecognitionError::NontrivialAction);
    }
    let to_direct = sdp_trivial_iso_direct(&witness.normal.group, &witness.complement.group)?;
    let iso = witness.iso.then(&to_direct)?;
    let product = direct_product(&witness.normal.group, &witness.complement.group)?;
    Ok(DirectDecomposition { witness, product, iso })
}
