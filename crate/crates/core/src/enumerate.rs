//! Brute-force enumeration of all groups of a small order, up to
//! isomorphism.
//!
//! Cayley tables are filled cell by cell in row-major order. Each assignment
//! is pushed through the Latin-square constraints and every associativity
//! triple it touches, so most cells end up forced. Labels that no assigned
//! cell mentions yet are interchangeable, so a branch only ever tries one of
//! them (least-number heuristic). The surviving complete tables are then
//! deduplicated with [`find_isomorphism`](crate::morphisms::find_isomorphism).
//!
//! Nothing here consults the classifier or any stored catalogue of groups.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{factorize, is_prime, OrderShape};
use crate::group::FiniteGroup;
use crate::morphisms::{find_isomorphism, fingerprint, Fingerprint};

/// Orders accepted without the extended budget.
pub const DEFAULT_MAX_ORDER: usize = 16;
/// Largest order accepted by the extended budget, for prime, `p^2` and `pq`
/// orders only.
pub const EXTENDED_MAX_ORDER: usize = 33;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("order must be positive")]
    ZeroOrder,
    #[error("order {order} is outside the enumeration budget")]
    OrderOutOfBudget { order: usize },
    #[error("search exceeded {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_order: usize,
    /// Extra orders up to this bound are allowed when they are prime, `p^2`
    /// or `pq`.
    pub extended_max_order: usize,
    pub max_nodes: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_order: DEFAULT_MAX_ORDER, extended_max_order: DEFAULT_MAX_ORDER, max_nodes: 50_000_000 }
    }
}

impl EnumerationBudget {
    pub fn extended() -> Self {
        EnumerationBudget { extended_max_order: EXTENDED_MAX_ORDER, ..Self::default() }
    }

    pub fn permits(&self, n: usize) -> bool {
        n <= self.max_order
            || (n <= self.extended_max_order
                && (is_prime(n) || !matches!(OrderShape::of(n), OrderShape::Unsupported { .. })))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    /// Branching decisions made.
    pub nodes: u64,
    pub tables_completed: u64,
    /// Completed tables discarded as isomorphic to an earlier one.
    pub iso_rejections: u64,
}

#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub order: usize,
    /// In order of discovery.
    pub representatives: Vec<Arc<FiniteGroup>>,
    pub count: usize,
    pub stats: EnumerationStats,
}

pub fn enumerate_groups(n: usize) -> Result<EnumerationReport, EnumError> {
    enumerate_groups_with(n, &EnumerationBudget::default())
}

pub fn count_groups(n: usize) -> Result<usize, EnumError> {
    Ok(enumerate_groups(n)?.count)
}

pub fn enumerate_groups_with(n: usize, budget: &EnumerationBudget) -> Result<EnumerationReport, EnumError> {
    if n == 0 {
        return Err(EnumError::ZeroOrder);
    }
    if !budget.permits(n) {
        return Err(EnumError::OrderOutOfBudget { order: n });
    }
    let mut filler = Filler::new(n);
    let mut dedup = Dedup::default();
    filler.search(budget.max_nodes, &mut |table| dedup.offer(n, table))?;
    let stats =
        EnumerationStats { nodes: filler.nodes, tables_completed: dedup.completed, iso_rejections: dedup.rejected };
    let representatives: Vec<_> = dedup.reps.into_iter().map(|(g, _)| g).collect();
    Ok(EnumerationReport { order: n, count: representatives.len(), representatives, stats })
}

#[derive(Default)]
struct Dedup {
    reps: Vec<(Arc<FiniteGroup>, Fingerprint)>,
    completed: u64,
    rejected: u64,
}

impl Dedup {
    fn offer(&mut self, n: usize, table: &[u16]) {
        self.completed += 1;
        let flat = table.iter().map(|&v| v as u32).collect();
        let g = Arc::new(FiniteGroup::from_flat(n, flat).expect("propagation only completes group tables"));
        let fp = fingerprint(&g);
        let seen = self.reps.iter().any(|(rep, rep_fp)| *rep_fp == fp && find_isomorphism(rep, &g).is_some());
        if seen {
            self.rejected += 1;
        } else {
            self.reps.push((g, fp));
        }
    }
}

const UNSET: u16 = u16::MAX;

struct Filler {
    n: usize,
    table: Vec<u16>,
    /// `row_pos[a * n + v] = b` when `a * b = v` is known.
    row_pos: Vec<u16>,
    /// `col_pos[b * n + v] = a` when `a * b = v` is known.
    col_pos: Vec<u16>,
    /// How often each label occurs in assigned non-identity cells.
    mentions: Vec<u32>,
    trail: Vec<usize>,
    pending: Vec<usize>,
    top_prime: usize,
    nodes: u64,
}

impl Filler {
    fn new(n: usize) -> Self {
        let mut f = Filler {
            n,
            table: vec![UNSET; n * n],
            row_pos: vec![UNSET; n * n],
            col_pos: vec![UNSET; n * n],
            mentions: vec![0; n],
            trail: Vec::new(),
            pending: Vec::new(),
            top_prime: factorize(n).last().copied().unwrap_or(1),
            nodes: 0,
        };
        for x in 0..n {
            f.place(0, x, x);
            f.place(x, 0, x);
        }
        f
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.table[a * self.n + b];
        (v != UNSET).then_some(v as usize)
    }

    #[inline]
    fn right_solve(&self, a: usize, v: usize) -> Option<usize> {
        let b = self.row_pos[a * self.n + v];
        (b != UNSET).then_some(b as usize)
    }

    #[inline]
    fn left_solve(&self, b: usize, v: usize) -> Option<usize> {
        let a = self.col_pos[b * self.n + v];
        (a != UNSET).then_some(a as usize)
    }

    fn place(&mut self, a: usize, b: usize, v: usize) {
        let n = self.n;
        self.table[a * n + b] = v as u16;
        self.row_pos[a * n + v] = b as u16;
        self.col_pos[b * n + v] = a as u16;
    }

    /// Records `a * b = v`, or checks it if the cell is already known.
    fn assign(&mut self, a: usize, b: usize, v: usize) -> bool {
        if let Some(old) = self.get(a, b) {
            return old == v;
        }
        if self.right_solve(a, v).is_some() || self.left_solve(b, v).is_some() {
            return false;
        }
        self.place(a, b, v);
        self.mentions[a] += 1;
        self.mentions[b] += 1;
        self.mentions[v] += 1;
        let cell = a * self.n + b;
        self.trail.push(cell);
        self.pending.push(cell);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        let n = self.n;
        while self.trail.len() > mark {
            let cell = self.trail.pop().unwrap();
            let (a, b) = (cell / n, cell % n);
            let v = self.table[cell] as usize;
            self.table[cell] = UNSET;
            self.row_pos[a * n + v] = UNSET;
            self.col_pos[b * n + v] = UNSET;
            self.mentions[a] -= 1;
            self.mentions[b] -= 1;
            self.mentions[v] -= 1;
        }
        self.pending.clear();
    }

    /// Makes `a * b` and `c * d` equal if either is known.
    #[inline]
    fn equate(&mut self, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
        match (self.get(a, b), self.get(c, d)) {
            (Some(x), Some(y)) => x == y,
            (Some(x), None) => self.assign(c, d, x),
            (None, Some(y)) => self.assign(a, b, y),
            (None, None) => true,
        }
    }

    /// Drains the pending queue. Every triple `(xy)z = x(yz)` is examined
    /// when one of its cells becomes known, in whichever role that cell
    /// plays.
    fn propagate(&mut self) -> bool {
        let n = self.n;
        while let Some(cell) = self.pending.pop() {
            let (x, y) = (cell / n, cell % n);
            let v = self.table[cell] as usize;

            if v == 0 && !self.assign(y, x, 0) {
                return false;
            }
            for z in 1..n {
                // (x y) z = x (y z)
                if let Some(w) = self.get(y, z) {
                    if !self.equate((v, z), (x, w)) {
                        return false;
                    }
                } else if let Some(t) = self.get(v, z) {
                    if let Some(w) = self.right_solve(x, t) {
                        if !self.assign(y, z, w) {
                            return false;
                        }
                    }
                }
                // (z x) y = z (x y)
                if let Some(u) = self.get(z, x) {
                    if !self.equate((u, y), (z, v)) {
                        return false;
                    }
                } else if let Some(t) = self.get(z, v) {
                    if let Some(u) = self.left_solve(y, t) {
                        if !self.assign(z, x, u) {
                            return false;
                        }
                    }
                }
                // (z b) y = z (b y) where z b = x
                if let Some(b) = self.right_solve(z, x) {
                    if let Some(w) = self.get(b, y) {
                        if !self.assign(z, w, v) {
                            return false;
                        }
                    } else if let Some(w) = self.right_solve(z, v) {
                        if !self.assign(b, y, w) {
                            return false;
                        }
                    }
                }
                // (x b) z = x (b z) where b z = y
                if let Some(b) = self.left_solve(z, y) {
                    if let Some(u) = self.get(x, b) {
                        if !self.assign(u, z, v) {
                            return false;
                        }
                    } else if let Some(u) = self.left_solve(z, v) {
                        if !self.assign(x, b, u) {
                            return false;
                        }
                    }
                }
                // (x z) c = x y = v with x z = u, so z c = y where u c = v
                if let Some(u) = self.get(x, z) {
                    if let Some(c) = self.right_solve(u, v) {
                        if !self.assign(z, c, y) {
                            return false;
                        }
                    }
                }
                // x y = v = a (z y) with z y = w, so a z = x where a w = v
                if let Some(w) = self.get(z, y) {
                    if let Some(a) = self.left_solve(w, v) {
                        if !self.assign(a, z, x) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Order of `x` if its power chain is already known.
    fn known_order(&self, x: usize) -> Option<usize> {
        let mut p = x;
        for k in 1..=self.n {
            if p == 0 {
                return Some(k);
            }
            p = self.get(p, x)?;
        }
        None
    }

    /// False once `x` provably has no order dividing `n` and at most `bound`.
    fn bound_order(&self, x: usize, bound: usize) -> bool {
        let (mut p, mut k) = (x, 1);
        loop {
            if p == 0 {
                return k <= bound && self.n.is_multiple_of(k);
            }
            match self.get(p, x) {
                Some(q) => (p, k) = (q, k + 1),
                None => break,
            }
        }
        // x^1 .. x^k are known and non-identity
        (k + 1..=bound.min(self.n)).any(|d| self.n.is_multiple_of(d))
    }

    /// Lagrange, plus symmetry breaking: any labelling can be moved to one
    /// where label 1 has maximal order and the first label outside `<1>` has
    /// maximal order among the rest.
    fn orders_admissible(&self) -> bool {
        let n = self.n;
        let first = self.known_order(1);
        // Cauchy: some element has order equal to the largest prime factor
        if first.is_some_and(|m| m < self.top_prime) {
            return false;
        }
        // row 1 is filled first, so <1> = {0, ..., m - 1}
        let second = first.filter(|&m| m < n).and_then(|m| self.known_order(m).map(|o| (m, o)));
        (1..n).all(|x| {
            let bound = match second {
                Some((m, o)) if x >= m => o.min(m),
                _ => first.unwrap_or(n),
            };
            self.bound_order(x, bound)
        })
    }

    fn next_cell(&self) -> Option<(usize, usize)> {
        let n = self.n;
        (n..n * n).find(|&c| c % n != 0 && self.table[c] == UNSET).map(|c| (c / n, c % n))
    }

    fn search(&mut self, max_nodes: u64, emit: &mut dyn FnMut(&[u16])) -> Result<(), EnumError> {
        let Some((a, b)) = self.next_cell() else {
            emit(&self.table);
            return Ok(());
        };
        let fresh = (1..self.n).find(|&l| self.mentions[l] == 0 && l != a && l != b);
        for v in 0..self.n {
            let known = v == 0 || v == a || v == b || self.mentions[v] > 0;
            if !known && Some(v) != fresh {
                continue;
            }
            if self.right_solve(a, v).is_some() || self.left_solve(b, v).is_some() {
                continue;
            }
            self.nodes += 1;
            if self.nodes > max_nodes {
                return Err(EnumError::BudgetExceeded { nodes: max_nodes });
            }
            let mark = self.trail.len();
            if self.assign(a, b, v) && self.propagate() && self.orders_admissible() {
                self.search(max_nodes, emit)?;
            }
            self.undo_to(mark);
        }
        Ok(())
    }
}
