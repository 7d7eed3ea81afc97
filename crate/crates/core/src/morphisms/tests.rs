use std::sync::Arc;

use super::*;
use crate::arith::totient;
use crate::group::{cyclic_group, quaternion_group, symmetric_group, trivial_group, FiniteGroup};
use crate::products::{cyclic_semidirect, dihedral_group, direct_product};
use crate::subgroup::{bot, closure, top};

fn c(n: usize) -> Arc<FiniteGroup> {
    Arc::new(cyclic_group(n).unwrap())
}

fn s3() -> Arc<FiniteGroup> {
    Arc::new(symmetric_group(3).unwrap())
}

fn dp(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Arc<FiniteGroup> {
    direct_product(a, b).unwrap().group
}

/// One representative of every group of order at most 10.
fn small_groups() -> Vec<(&'static str, Arc<FiniteGroup>)> {
    vec![
        ("1", c(1)),
        ("C2", c(2)),
        ("C3", c(3)),
        ("C4", c(4)),
        ("C2xC2", dp(&c(2), &c(2))),
        ("C5", c(5)),
        ("C6", c(6)),
        ("S3", s3()),
        ("C7", c(7)),
        ("C8", c(8)),
        ("C4xC2", dp(&c(4), &c(2))),
        ("C2^3", dp(&dp(&c(2), &c(2)), &c(2))),
        ("D4", dihedral_group(4).unwrap().group),
        ("Q8", Arc::new(quaternion_group())),
        ("C9", c(9)),
        ("C3xC3", dp(&c(3), &c(3))),
        ("C10", c(10)),
        ("D5", dihedral_group(5).unwrap().group),
    ]
}

#[test]
fn hom_constructors() {
    let (c4, c2) = (c(4), c(2));
    Hom::new(c4.clone(), c2.clone(), vec![0; 4]).unwrap();
    Hom::new(c4.clone(), c4.clone(), (0..4).collect()).unwrap();
    let parity = Hom::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
    assert!(parity.is_surjective());
    assert_eq!(parity.kernel().members(), &[0, 2]);

    assert_eq!(Hom::new(c4.clone(), c2.clone(), vec![1, 0, 1, 0]).unwrap_err(), HomError::IdentityNotPreserved);
    let err = Hom::new(c4.clone(), c4.clone(), vec![0, 2, 1, 3]).unwrap_err();
    let HomError::NotMultiplicative { x, y } = err else { panic!("{err:?}") };
    let m = [0, 2, 1, 3];
    assert_ne!(m[c4.mul(x, y)], c4.mul(m[x], m[y]));
    assert!(matches!(Hom::new(c4.clone(), c2.clone(), vec![0, 1]), Err(HomError::LengthMismatch { .. })));
}

#[test]
fn trivial_homs() {
    let t = Hom::trivial(c(3), c(2));
    Hom::new(t.source().clone(), t.target().clone(), t.map().to_vec()).unwrap();
    let anything = Hom::new(c(2), c(4), vec![0, 2]).unwrap();
    assert!(t.then(&anything).unwrap().is_trivial());
    let into = Hom::new(c(6), c(3), vec![0, 1, 2, 0, 1, 2]).unwrap();
    assert!(into.then(&t).unwrap().is_trivial());

    let aut7 = automorphism_group(&c(7)).unwrap();
    let homs = homs_to_aut(&c(3), &aut7).unwrap();
    assert_eq!(homs[0], Hom::trivial(homs[0].source().clone(), aut7.carrier().clone()));
}

#[test]
fn composition_and_mismatch() {
    let f = Hom::new(c(4), c(2), vec![0, 1, 0, 1]).unwrap();
    let g = Hom::new(c(2), c(6), vec![0, 3]).unwrap();
    let fg = f.then(&g).unwrap();
    Hom::new(fg.source().clone(), fg.target().clone(), fg.map().to_vec()).unwrap();
    assert_eq!(g.then(&f).unwrap_err(), HomError::MismatchedGroups);
}

#[test]
fn restriction() {
    let g = s3();
    let id = Hom::identity(g.clone());
    let r = restrict(&id, &top(&g)).unwrap();
    assert_eq!(r.map(), id.map());
    assert!(restrict(&id, &bot(&g)).unwrap().is_trivial());

    let a3 = closure(&g, [3]);
    let conj = conj_normal(&g, &a3).unwrap();
    let t = closure(&g, [1]);
    let r = restrict(&conj.hom, &t).unwrap();
    assert_eq!(r.source().order(), 2);
    // the transposition acts on A3 by inversion
    let a = r.apply(1);
    assert_ne!(a, 0);
    assert_eq!(conj.aut.carrier().element_order(a), 2);
    for x in conj.normal.group.elements() {
        assert_eq!(conj.aut.apply(a, x), conj.normal.group.inv(x));
    }
    assert_eq!(restrict(&conj.hom, &closure(&c(2), [1])).unwrap_err(), HomError::MismatchedGroups);
}

#[test]
fn aut_of_prime_cyclic() {
    let a5 = automorphism_group(&c(5)).unwrap();
    assert_eq!(a5.order(), 4);
    assert!(a5.carrier().is_cyclic().is_some());
    assert_eq!(automorphism_group(&c(2)).unwrap().order(), 1);
    assert_eq!(automorphism_group(&c(1)).unwrap().order(), 1);
}

#[test]
fn aut_of_c8_is_klein() {
    // units mod 8 are {1, 3, 5, 7}, each squaring to 1
    let a8 = automorphism_group(&c(8)).unwrap();
    assert_eq!(a8.order(), 4);
    assert!(a8.carrier().is_cyclic().is_none());
    for a in 1..4 {
        assert_eq!(a8.carrier().element_order(a), 2);
    }
}

#[test]
fn aut_cyclic_is_totient() {
    for n in 1..=30 {
        let aut = automorphism_group(&c(n)).unwrap();
        assert_eq!(aut.order(), totient(n), "n = {n}");
        for (i, a) in aut.autos().iter().enumerate() {
            a.validate().unwrap();
            assert_eq!(aut.index_of(a.map()), Some(i));
        }
        // carrier multiplication is composition
        for a in aut.carrier().elements() {
            for b in aut.carrier().elements() {
                let ab = aut.carrier().mul(a, b);
                for x in 0..n {
                    assert_eq!(aut.apply(ab, x), aut.apply(a, aut.apply(b, x)));
                }
            }
        }
    }
}

#[test]
fn aut_of_small_noncyclic_groups() {
    assert_eq!(automorphism_group(&s3()).unwrap().order(), 6);
    assert_eq!(automorphism_group(&Arc::new(quaternion_group())).unwrap().order(), 24);
    assert_eq!(automorphism_group(&dp(&c(2), &c(2))).unwrap().order(), 6);
    assert_eq!(automorphism_group(&dihedral_group(4).unwrap().group).unwrap().order(), 8);
    assert_eq!(automorphism_group(&dp(&c(3), &c(3))).unwrap().order(), 48);
    let aut = automorphism_group(&dp(&dp(&c(2), &c(2)), &c(2))).unwrap();
    assert_eq!(aut.order(), 168);
    assert_eq!(aut.autos()[0].map(), (0..8).collect::<Vec<_>>());
}

#[test]
fn aut_budget() {
    // |GL(4, 2)| = 20160 exceeds the carrier cap.
    let v = dp(&dp(&c(2), &c(2)), &dp(&c(2), &c(2)));
    assert_eq!(automorphism_group(&v).unwrap_err(), HomError::BudgetExceeded);
}

#[test]
fn conjugation_homs() {
    let g = c(6);
    let action = conj_normal(&g, &closure(&g, [2])).unwrap();
    assert!(action.hom.is_trivial());

    let s = s3();
    let action = conj_normal(&s, &bot(&s)).unwrap();
    assert!(action.hom.is_trivial());
    assert_eq!(action.aut.order(), 1);

    assert_eq!(conj_normal(&s, &closure(&s, [1])).unwrap_err(), HomError::NotNormal);
}

#[test]
fn homs_into_aut_counts() {
    let aut5 = automorphism_group(&c(5)).unwrap();
    assert_eq!(homs_to_aut(&c(3), &aut5).unwrap().len(), 1);
    let aut3 = automorphism_group(&c(3)).unwrap();
    assert_eq!(homs_to_aut(&c(2), &aut3).unwrap().len(), 2);
    let aut7 = automorphism_group(&c(7)).unwrap();
    let homs = homs_to_aut(&c(3), &aut7).unwrap();
    assert_eq!(homs.len(), 3);
    assert_eq!(homs.iter().filter(|h| !h.is_trivial()).count(), 2);
    for h in &homs {
        Hom::new(h.source().clone(), h.target().clone(), h.map().to_vec()).unwrap();
    }
    assert_eq!(homs_to_aut(&s3(), &aut7).unwrap_err(), HomError::NotCyclicSource);
}

#[test]
fn isomorphism_examples() {
    let g = s3();
    let id = find_isomorphism(&g, &g).unwrap();
    assert_eq!(id.map(), (0..6).collect::<Vec<_>>());

    let klein = dp(&c(2), &c(2));
    assert_eq!(isomorphism_or_reason(&c(4), &klein).unwrap_err(), NonIsomorphic::ElementOrdersDiffer);

    let twisted = cyclic_semidirect(3, 2, 2).unwrap().group;
    let iso = find_isomorphism(&g, &twisted).unwrap();
    iso.validate().unwrap();
    assert_eq!(isomorphism_or_reason(&c(6), &g).unwrap_err(), NonIsomorphic::ElementOrdersDiffer);
}

#[test]
fn d4_and_q8_need_more_than_element_orders() {
    let d4 = dihedral_group(4).unwrap().group;
    let q8 = Arc::new(quaternion_group());
    assert_eq!(isomorphism_or_reason(&d4, &q8).unwrap_err(), NonIsomorphic::ElementOrdersDiffer);
    let c4c2 = dp(&c(4), &c(2));
    assert!(isomorphism_or_reason(&d4, &c4c2).is_err());
}

#[test]
fn fingerprints() {
    assert_eq!(fingerprint(&c(6)), fingerprint(&cyclic_semidirect(3, 2, 1).unwrap().group));
    assert_ne!(fingerprint(&c(4)), fingerprint(&dp(&c(2), &c(2))));
    let f = fingerprint(&s3());
    assert_eq!(f.class_sizes, vec![1, 2, 3]);
    assert_eq!(f.center_size, 1);
    assert!(!f.abelian);
}

#[test]
fn isomorphism_is_reflexive_symmetric_and_separates_small_groups() {
    let groups = small_groups();
    for (i, (name_a, a)) in groups.iter().enumerate() {
        for (j, (name_b, b)) in groups.iter().enumerate() {
            let ab = find_isomorphism(a, b);
            let ba = find_isomorphism(b, a);
            assert_eq!(ab.is_some(), ba.is_some(), "{name_a} vs {name_b}");
            assert_eq!(ab.is_some(), i == j, "{name_a} vs {name_b}");
            if let Some(iso) = ab {
                iso.validate().unwrap();
                assert_eq!(fingerprint(a), fingerprint(b));
            }
        }
    }
}

#[test]
fn relabelled_groups_are_found_isomorphic() {
    // conjugate each table by a fixed permutation fixing 0
    for (name, g) in small_groups() {
        let n = g.order();
        let perm: Vec<usize> = (0..n).map(|x| if x == 0 { 0 } else { (x * 7 + 3) % (n - 1) + 1 }).collect();
        let mut bijective = vec![false; n];
        perm.iter().for_each(|&x| bijective[x] = true);
        if !bijective.iter().all(|&b| b) {
            continue;
        }
        let mut inv = vec![0; n];
        for (x, &y) in perm.iter().enumerate() {
            inv[y] = x;
        }
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| perm[g.mul(inv[a], inv[b])]).collect()).collect();
        let h = Arc::new(FiniteGroup::from_table(n, &rows).unwrap());
        let iso = find_isomorphism(&g, &h).unwrap_or_else(|| panic!("{name}"));
        iso.validate().unwrap();
    }
}

#[test]
fn iso_rejects_bad_pairs() {
    let f = Hom::new(c(2), c(2), vec![0, 1]).unwrap();
    let g = Hom::trivial(c(2), c(2));
    assert_eq!(Iso::new(f, g).unwrap_err(), HomError::NotInverse);
    assert_eq!(Iso::from_bijection(c(4), c(4), vec![0, 2, 0, 2]).unwrap_err(), HomError::NotBijective);
    assert_eq!(Iso::from_bijection(c(2), Arc::new(trivial_group()), vec![0, 0]).unwrap_err(), HomError::NotBijective);
}
