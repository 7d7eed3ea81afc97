//! External direct and semidirect products.
//!
//! The pair `(n, h)` is stored at index `n * |H| + h`, so `(1, 1)` lands on
//! index 0.

use std::sync::Arc;

use thiserror::Error;

use crate::arith::pow_mod;
use crate::group::{cyclic_group, FiniteGroup, GroupError, MAX_ORDER};
use crate::morphisms::{automorphism_group, AutGroup, Hom, HomError, Iso};
use crate::subgroup::{same_group, Subgroup};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("product order {order} exceeds the cap of {MAX_ORDER}")]
    SizeCap { order: usize },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("actions are incompatible at n = {n}, h = {h}")]
    IncompatibleAction { n: usize, h: usize },
    #[error("isomorphisms do not match the factors of the products")]
    MismatchedGroups,
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The homomorphism `H -> Aut(N)` a semidirect product was built from.
#[derive(Clone, Debug)]
pub struct Action {
    pub aut: AutGroup,
    pub phi: Hom,
}

/// `N ⋊ H` (or `N × H`) together with its factor embeddings.
#[derive(Clone, Debug)]
pub struct ProductGroup {
    pub group: Arc<FiniteGroup>,
    pub normal: Arc<FiniteGroup>,
    pub complement: Arc<FiniteGroup>,
    /// `None` for direct products.
    pub action: Option<Action>,
    pub embed_normal: Hom,
    pub embed_complement: Hom,
    pub canonical_normal: Subgroup,
    pub canonical_complement: Subgroup,
    /// `act[h * |N| + n]` is `φ(h)(n)`.
    act: Vec<u32>,
}

impl ProductGroup {
    pub fn index(&self, n: usize, h: usize) -> usize {
        n * self.complement.order() + h
    }

    pub fn pair(&self, x: usize) -> (usize, usize) {
        let k = self.complement.order();
        (x / k, x % k)
    }

    /// `φ(h)(n)`; the identity for direct products.
    pub fn act(&self, h: usize, n: usize) -> usize {
        self.act[h * self.normal.order() + n] as usize
    }

    pub fn is_direct(&self) -> bool {
        self.action.is_none()
    }

    fn build(
        normal: Arc<FiniteGroup>,
        complement: Arc<FiniteGroup>,
        act: Vec<u32>,
        action: Option<Action>,
    ) -> Result<Self, ProductError> {
        let (nn, nh) = (normal.order(), complement.order());
        let order = nn * nh;
        if order > MAX_ORDER {
            return Err(ProductError::SizeCap { order });
        }
        let mut table = Vec::with_capacity(order * order);
        for n1 in 0..nn {
            for h1 in 0..nh {
                for n2 in 0..nn {
                    let twisted = act[h1 * nn + n2] as usize;
                    let n = normal.mul(n1, twisted);
                    for h2 in 0..nh {
                        table.push((n * nh + complement.mul(h1, h2)) as u32);
                    }
                }
            }
        }
        // Rows above are indexed (n1, h1) and columns (n2, h2), which is the
        // pair layout n * |H| + h in both directions.
        let group = Arc::new(FiniteGroup::from_flat(order, table)?);
        let embed_normal = Hom::new(normal.clone(), group.clone(), (0..nn).map(|n| n * nh).collect())?;
        let embed_complement = Hom::new(complement.clone(), group.clone(), (0..nh).collect())?;
        let canonical_normal = embed_normal.image();
        let canonical_complement = embed_complement.image();
        Ok(ProductGroup {
            group,
            normal,
            complement,
            action,
            embed_normal,
            embed_complement,
            canonical_normal,
            canonical_complement,
            act,
        })
    }
}

/// `N × H` with componentwise multiplication.
pub fn direct_product(normal: &Arc<FiniteGroup>, complement: &Arc<FiniteGroup>) -> Result<ProductGroup, ProductError> {
    let order = normal.order() * complement.order();
    if order > MAX_ORDER {
        return Err(ProductError::SizeCap { order });
    }
    let act = (0..complement.order()).flat_map(|_| 0..normal.order() as u32).collect();
    ProductGroup::build(normal.clone(), complement.clone(), act, None)
}

/// `N ⋊_φ H` with `(n1, h1)(n2, h2) = (n1 · φ(h1)(n2), h1 h2)`.
pub fn semidirect_product(
    normal: &Arc<FiniteGroup>,
    complement: &Arc<FiniteGroup>,
    aut: &AutGroup,
    phi: &Hom,
) -> Result<ProductGroup, ProductError> {
    if !same_group(aut.base(), normal) {
        return Err(ProductError::InvalidAction("automorphism group is not Aut(N)".into()));
    }
    if !same_group(phi.source(), complement) || !same_group(phi.target(), aut.carrier()) {
        return Err(ProductError::InvalidAction("φ is not a map H -> Aut(N)".into()));
    }
    let order = normal.order() * complement.order();
    if order > MAX_ORDER {
        return Err(ProductError::SizeCap { order });
    }
    Hom::new(phi.source().clone(), phi.target().clone(), phi.map().to_vec())
        .map_err(|e| ProductError::InvalidAction(e.to_string()))?;
    let mut act = Vec::with_capacity(order);
    for h in complement.elements() {
        let a = phi.apply(h);
        act.extend(normal.elements().map(|n| aut.apply(a, n) as u32));
    }
    let action = Action { aut: aut.clone(), phi: phi.clone() };
    ProductGroup::build(normal.clone(), complement.clone(), act, Some(action))
}

/// `N ⋊_1 H ≅ N × H` by the identity on pairs.
pub fn sdp_trivial_iso_direct(normal: &Arc<FiniteGroup>, complement: &Arc<FiniteGroup>) -> Result<Iso, ProductError> {
    let aut = automorphism_group(normal)?;
    let trivial = Hom::trivial(complement.clone(), aut.carrier().clone());
    let sdp = semidirect_product(normal, complement, &aut, &trivial)?;
    let direct = direct_product(normal, complement)?;
    let map = sdp.group.elements().collect();
    Ok(Iso::from_bijection(sdp.group.clone(), direct.group.clone(), map)?)
}

/// Transports `N1 ⋊_{φ1} H1` onto `N2 ⋊_{φ2} H2` along `f1: N1 ≅ N2` and
/// `f2: H1 ≅ H2`, provided `φ2(f2 h)(f1 n) = f1(φ1(h) n)` for all `n, h`.
/// Direct products count as semidirect products with the trivial action.
pub fn sdp_congr(f1: &Iso, f2: &Iso, src: &ProductGroup, dst: &ProductGroup) -> Result<Iso, ProductError> {
    if !same_group(f1.source(), &src.normal)
        || !same_group(f1.target(), &dst.normal)
        || !same_group(f2.source(), &src.complement)
        || !same_group(f2.target(), &dst.complement)
    {
        return Err(ProductError::MismatchedGroups);
    }
    for h in src.complement.elements() {
        for n in src.normal.elements() {
            if dst.act(f2.apply(h), f1.apply(n)) != f1.apply(src.act(h, n)) {
                return Err(ProductError::IncompatibleAction { n, h });
            }
        }
    }
    let map = src
        .group
        .elements()
        .map(|x| {
            let (n, h) = src.pair(x);
            dst.index(f1.apply(n), f2.apply(h))
        })
        .collect();
    Ok(Iso::from_bijection(src.group.clone(), dst.group.clone(), map)?)
}

/// Homomorphism `C_p -> Aut(C_q)` sending the generator to `r -> r^k`.
pub fn power_action(
    q: usize,
    p: usize,
    k: usize,
) -> Result<(Arc<FiniteGroup>, Arc<FiniteGroup>, AutGroup, Hom), ProductError> {
    if q == 0 || p == 0 {
        return Err(ProductError::Group(GroupError::ZeroOrder));
    }
    if pow_mod(k, p, q) != 1 % q {
        return Err(ProductError::InvalidAction(format!("{k}^{p} is not 1 mod {q}")));
    }
    let cq = Arc::new(cyclic_group(q)?);
    let cp = Arc::new(cyclic_group(p)?);
    let aut = automorphism_group(&cq)?;
    let power_map: Vec<usize> = (0..q).map(|i| i * (k % q) % q).collect();
    let a = aut
        .index_of(&power_map)
        .ok_or_else(|| ProductError::InvalidAction(format!("r -> r^{k} is not an automorphism of C_{q}")))?;
    let carrier = aut.carrier();
    let mut map = Vec::with_capacity(p);
    let mut y = 0;
    for _ in 0..p {
        map.push(y);
        y = carrier.mul(y, a);
    }
    let phi = Hom::new(cp.clone(), carrier.clone(), map)?;
    Ok((cq, cp, aut, phi))
}

/// `C_q ⋊ C_p` where the generator of `C_p` acts by `r -> r^k`.
pub fn cyclic_semidirect(q: usize, p: usize, k: usize) -> Result<ProductGroup, ProductError> {
    let (cq, cp, aut, phi) = power_action(q, p, k)?;
    semidirect_product(&cq, &cp, &aut, &phi)
}

/// The dihedral group of order `2n`, as `C_n ⋊ C_2` acting by inversion.
pub fn dihedral_group(n: usize) -> Result<ProductGroup, ProductError> {
    cyclic_semidirect(n, 2, n.saturating_sub(1).max(1))
}
