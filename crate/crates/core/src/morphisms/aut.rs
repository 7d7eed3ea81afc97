use std::collections::HashMap;
use std::sync::Arc;

use crate::group::{FiniteGroup, MAX_ORDER};
use crate::subgroup::{same_group, EmbeddedGroup, Subgroup};

use super::search::{Backtrack, Flow};
use super::{Hom, HomError, Iso};

/// Search nodes allowed when enumerating automorphisms.
pub const AUT_NODE_BUDGET: u64 = 20_000_000;

/// `Aut(base)`, materialised as a group whose element `i` is `autos[i]`.
/// Index 0 is the identity automorphism and the product is composition,
/// `carrier.mul(a, b) = autos[a] ∘ autos[b]`.
#[derive(Clone, Debug)]
pub struct AutGroup {
    base: Arc<FiniteGroup>,
    carrier: Arc<FiniteGroup>,
    autos: Vec<Iso>,
    index: HashMap<Vec<usize>, usize>,
}

impl AutGroup {
    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn carrier(&self) -> &Arc<FiniteGroup> {
        &self.carrier
    }

    pub fn autos(&self) -> &[Iso] {
        &self.autos
    }

    pub fn order(&self) -> usize {
        self.autos.len()
    }

    pub fn auto(&self, a: usize) -> &Iso {
        &self.autos[a]
    }

    /// Image of `x` under automorphism `a`.
    #[inline]
    pub fn apply(&self, a: usize, x: usize) -> usize {
        self.autos[a].apply(x)
    }

    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        self.index.get(map).copied()
    }
}

/// Enumerates `Aut(g)` by generator-image backtracking.
pub fn automorphism_group(g: &Arc<FiniteGroup>) -> Result<AutGroup, HomError> {
    let mut maps: Vec<Vec<usize>> = Vec::new();
    let mut over = false;
    let mut search = Backtrack::new(g, g);
    search.node_budget = AUT_NODE_BUDGET;
    let finished = search.run(&mut |map| {
        maps.push(map.to_vec());
        if maps.len() > MAX_ORDER {
            over = true;
            Flow::Stop
        } else {
            Flow::Continue
        }
    });
    if !finished || over {
        return Err(HomError::BudgetExceeded);
    }

    let identity: Vec<usize> = g.elements().collect();
    let id_pos = maps.iter().position(|m| *m == identity).expect("identity is an automorphism");
    let id_map = maps.remove(id_pos);
    maps.insert(0, id_map);

    let index: HashMap<Vec<usize>, usize> = maps.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let m = maps.len();
    let mut table = Vec::with_capacity(m * m);
    let mut composed = vec![0usize; g.order()];
    for a in &maps {
        for b in &maps {
            for x in g.elements() {
                composed[x] = a[b[x]];
            }
            table.push(index[&composed] as u32);
        }
    }
    let carrier = Arc::new(FiniteGroup::from_flat(m, table).expect("composition is a group law"));
    let autos =
        maps.into_iter().map(|map| Iso::from_bijection(g.clone(), g.clone(), map)).collect::<Result<Vec<_>, _>>()?;
    Ok(AutGroup { base: g.clone(), carrier, autos, index })
}

/// The conjugation action of a group on one of its normal subgroups.
#[derive(Clone, Debug)]
pub struct ConjugationAction {
    pub normal: EmbeddedGroup,
    pub aut: AutGroup,
    /// `g -> (n -> g n g^-1)`, into `aut.carrier()`.
    pub hom: Hom,
}

/// The homomorphism `G -> Aut(N)` induced by conjugation.
pub fn conj_normal(g: &Arc<FiniteGroup>, n: &Subgroup) -> Result<ConjugationAction, HomError> {
    if !same_group(g, n.parent()) {
        return Err(HomError::MismatchedGroups);
    }
    if !n.is_normal() {
        return Err(HomError::NotNormal);
    }
    let normal = n.as_group();
    let aut = automorphism_group(&normal.group)?;
    let mut map = Vec::with_capacity(g.order());
    let mut action = vec![0usize; normal.group.order()];
    for x in g.elements() {
        for (i, slot) in action.iter_mut().enumerate() {
            *slot = normal.project(g.conj(x, normal.embed(i)));
        }
        map.push(aut.index_of(&action).expect("conjugation is an automorphism"));
    }
    let hom = Hom::new(g.clone(), aut.carrier().clone(), map)?;
    Ok(ConjugationAction { normal, aut, hom })
}

/// Every homomorphism from `source` (cyclic, with generator `gen`) into
/// `target`, one per target element whose order divides `|source|`, in
/// index order of that element. The trivial hom comes first.
pub fn homs_from_cyclic(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> Result<Vec<Hom>, HomError> {
    let gen = source.is_cyclic().ok_or(HomError::NotCyclicSource)?;
    let n = source.order();
    let mut powers = Vec::with_capacity(n);
    let mut x = 0;
    for _ in 0..n {
        powers.push(x);
        x = source.mul(x, gen);
    }
    let mut homs = Vec::new();
    for a in target.elements() {
        if !n.is_multiple_of(target.element_order(a)) {
            continue;
        }
        let mut map = vec![0usize; n];
        let mut y = 0;
        for &p in &powers {
            map[p] = y;
            y = target.mul(y, a);
        }
        homs.push(Hom::new_unchecked(source.clone(), target.clone(), map));
    }
    Ok(homs)
}

/// All homomorphisms from a cyclic group into `Aut(N)`.
pub fn homs_to_aut(p: &Arc<FiniteGroup>, aut: &AutGroup) -> Result<Vec<Hom>, HomError> {
    homs_from_cyclic(p, aut.carrier())
}
