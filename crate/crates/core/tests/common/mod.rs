#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use pqgroups::group::trivial_group;
use pqgroups::morphisms::{automorphism_group, find_isomorphism, homs_to_aut, AutGroup, Hom};
use pqgroups::products::{dihedral_group, direct_product, semidirect_product, ProductGroup};
use pqgroups::{cyclic_group, quaternion_group, symmetric_group, FiniteGroup};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn c(n: usize) -> Arc<FiniteGroup> {
    Arc::new(cyclic_group(n).unwrap())
}

pub fn dp(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Arc<FiniteGroup> {
    direct_product(a, b).unwrap().group
}

/// One group per isomorphism class of order at most 10, with a name.
pub fn small_groups() -> Vec<(&'static str, Arc<FiniteGroup>)> {
    let c2 = c(2);
    vec![
        ("C1", Arc::new(trivial_group())),
        ("C2", c(2)),
        ("C3", c(3)),
        ("C4", c(4)),
        ("C2xC2", dp(&c2, &c2)),
        ("C5", c(5)),
        ("C6", c(6)),
        ("S3", Arc::new(symmetric_group(3).unwrap())),
        ("C7", c(7)),
        ("C8", c(8)),
        ("C4xC2", dp(&c(4), &c2)),
        ("C2^3", dp(&dp(&c2, &c2), &c2)),
        ("D4", dihedral_group(4).unwrap().group),
        ("Q8", Arc::new(quaternion_group())),
        ("C9", c(9)),
        ("C3xC3", dp(&c(3), &c(3))),
        ("C10", c(10)),
        ("D5", dihedral_group(5).unwrap().group),
    ]
}

/// `g` with its non-identity elements renamed by a random permutation.
pub fn relabel(g: &FiniteGroup, rng: &mut impl Rng) -> (Arc<FiniteGroup>, Vec<usize>) {
    let n = g.order();
    let mut perm: Vec<usize> = (1..n).collect();
    perm.shuffle(rng);
    perm.insert(0, 0);
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[perm[a] * n + perm[b]] = perm[g.mul(a, b)] as u32;
        }
    }
    (Arc::new(FiniteGroup::from_flat(n, table).unwrap()), perm)
}

/// Normal factors with a cheap automorphism group, orders up to 32.
pub fn normal_factors() -> Vec<Arc<FiniteGroup>> {
    let c2 = c(2);
    let mut out: Vec<_> = (1..=32).map(c).collect();
    out.push(dp(&c2, &c2));
    out.push(dp(&c(4), &c2));
    out.push(dp(&c(3), &c(3)));
    out.push(dp(&dp(&c2, &c2), &c2));
    out.push(Arc::new(symmetric_group(3).unwrap()));
    out.push(Arc::new(quaternion_group()));
    out.push(dihedral_group(4).unwrap().group);
    out
}

pub struct RandomProduct {
    pub normal: Arc<FiniteGroup>,
    pub complement: Arc<FiniteGroup>,
    pub aut: AutGroup,
    pub phi: Hom,
    pub product: ProductGroup,
}

/// A semidirect product `N ⋊_φ C_m` with `|N| m <= max_order` and `φ`
/// drawn uniformly from all homomorphisms `C_m -> Aut(N)`.
pub fn random_semidirect(rng: &mut impl Rng, max_order: usize) -> RandomProduct {
    let factors: Vec<_> = normal_factors().into_iter().filter(|n| 2 * n.order() <= max_order).collect();
    let normal = factors.choose(rng).unwrap().clone();
    let m = rng.gen_range(1..=max_order / normal.order());
    let complement = c(m);
    let aut = automorphism_group(&normal).unwrap();
    let homs = homs_to_aut(&complement, &aut).unwrap();
    let phi = homs.choose(rng).unwrap().clone();
    let product = semidirect_product(&normal, &complement, &aut, &phi).unwrap();
    RandomProduct { normal, complement, aut, phi, product }
}

type Perm = [u8; 8];

fn compose(s: &Perm, t: &Perm) -> Perm {
    let mut out = [0; 8];
    for x in 0..8 {
        out[x] = s[t[x] as usize];
    }
    out
}

const ID: Perm = [0, 1, 2, 3, 4, 5, 6, 7];

fn semiregular(s: &Perm) -> bool {
    if *s == ID {
        return true;
    }
    let mut len = None;
    let mut seen = [false; 8];
    for start in 0..8 {
        if seen[start] {
            continue;
        }
        let (mut x, mut l) = (start, 0);
        while !seen[x] {
            seen[x] = true;
            x = s[x] as usize;
            l += 1;
        }
        if l == 1 || len.is_some_and(|m| m != l) {
            return false;
        }
        len = Some(l);
    }
    true
}

fn all_perms() -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p = ID;
    fn rec(k: usize, p: &mut Perm, out: &mut Vec<Perm>) {
        if k == 8 {
            out.push(*p);
            return;
        }
        for i in k..8 {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Closure under composition, or None once it exceeds 8 elements.
fn closure(gens: &[Perm]) -> Option<BTreeSet<Perm>> {
    let mut set = BTreeSet::from([ID]);
    let mut frontier = vec![ID];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(g, &x);
            if set.insert(y) {
                if set.len() > 8 {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    Some(set)
}

fn is_regular(set: &BTreeSet<Perm>) -> bool {
    set.len() == 8 && set.iter().all(semiregular)
}

fn perm_order(s: &Perm) -> usize {
    let (mut x, mut k) = (*s, 1);
    while x != ID {
        x = compose(s, &x);
        k += 1;
    }
    k
}

/// Isomorphism classes of groups of order 8, counted as regular subgroups
/// of the symmetric group on 8 points.
///
/// Every group of order 8 acts regularly on itself, and after conjugating
/// in S_8 one of its non-identity elements is a fixed representative of
/// its cycle type. Two further elements always suffice to generate the
/// rest. Classes are separated by element-order multiset and abelian flag,
/// and each class is checked to be a single isomorphism class.
pub fn regular_groups_of_order_8() -> Vec<Arc<FiniteGroup>> {
    let firsts: [Perm; 3] = [[1, 2, 3, 4, 5, 6, 7, 0], [1, 0, 3, 2, 5, 4, 7, 6], [1, 2, 3, 0, 5, 6, 7, 4]];
    let candidates: Vec<Perm> = all_perms().into_iter().filter(|s| *s != ID && semiregular(s)).collect();
    let mut found: BTreeSet<BTreeSet<Perm>> = BTreeSet::new();
    for g1 in firsts {
        let mut partial: BTreeSet<BTreeSet<Perm>> = BTreeSet::new();
        let base = closure(&[g1]).unwrap();
        if is_regular(&base) {
            found.insert(base.clone());
        }
        partial.insert(base);
        for _ in 0..2 {
            let mut next = BTreeSet::new();
            for k in &partial {
                let gens: Vec<Perm> = k.iter().copied().collect();
                for s in &candidates {
                    if k.contains(s) {
                        continue;
                    }
                    let mut with = gens.clone();
                    with.push(*s);
                    let Some(set) = closure(&with) else { continue };
                    if !set.iter().all(semiregular) {
                        continue;
                    }
                    if set.len() == 8 {
                        found.insert(set);
                    } else {
                        next.insert(set);
                    }
                }
            }
            partial = next;
        }
    }

    // (sorted element orders, abelian) -> representative
    type Key = (Vec<usize>, bool);
    let mut classes: Vec<(Key, Arc<FiniteGroup>)> = Vec::new();
    for set in found {
        let elems: Vec<Perm> = set.into_iter().collect();
        let index = |p: &Perm| elems.iter().position(|e| e == p).unwrap();
        let table: Vec<u32> =
            elems.iter().flat_map(|a| elems.iter().map(|b| index(&compose(a, b)) as u32).collect::<Vec<_>>()).collect();
        let g = Arc::new(FiniteGroup::from_flat(8, table).unwrap());
        let mut orders: Vec<usize> = elems.iter().map(perm_order).collect();
        orders.sort_unstable();
        let abelian = elems.iter().all(|a| elems.iter().all(|b| compose(a, b) == compose(b, a)));
        let key = (orders, abelian);
        match classes.iter().find(|(k, _)| *k == key) {
            Some((_, rep)) => assert!(find_isomorphism(rep, &g).is_some(), "invariants do not separate order 8"),
            None => classes.push((key, g)),
        }
    }
    classes.into_iter().map(|(_, g)| g).collect()
}
