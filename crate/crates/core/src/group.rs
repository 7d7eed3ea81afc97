//! Finite groups stored as dense, validated Cayley tables.
//!
//! Elements are the indices `0..n`, and index `0` is always the identity.
//! Every constructor funnels through [`FiniteGroup::from_table`], so a value
//! of this type always satisfies the group axioms.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Largest order accepted by any constructor. Tables are dense `n * n`.
pub const MAX_ORDER: usize = 4096;

/// Largest degree accepted by [`symmetric_group`] (`6! = 720`).
pub const MAX_SYMMETRIC_DEGREE: usize = 6;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order must be positive")]
    ZeroOrder,
    #[error("order {order} exceeds the cap of {max}")]
    TooLarge { order: usize, max: usize },
    #[error("table shape mismatch: expected {expected} entries in row {row}, found {found}")]
    Shape { row: usize, expected: usize, found: usize },
    #[error("entry ({row}, {col}) = {value} is out of range")]
    NotClosed { row: usize, col: usize, value: usize },
    #[error("element 0 is not a two-sided identity (fails at element {element})")]
    NoIdentity { element: usize },
    #[error("row/column {line} repeats entry {value} ({axis})")]
    NotLatin { axis: Axis, line: usize, value: usize },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("symmetric group degree {degree} exceeds {max}")]
    DegreeTooLarge { degree: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => f.write_str("row"),
            Axis::Column => f.write_str("column"),
        }
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order <= 12 {
            f.debug_struct("FiniteGroup")
                .field("order", &self.order)
                .field("rows", &self.rows().collect::<Vec<_>>())
                .finish()
        } else {
            f.debug_struct("FiniteGroup").field("order", &self.order).finish_non_exhaustive()
        }
    }
}

impl FiniteGroup {
    /// Validates an `n * n` table of element indices and derives inverses.
    pub fn from_table(order: usize, rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::ZeroOrder);
        }
        if order > MAX_ORDER {
            return Err(GroupError::TooLarge { order, max: MAX_ORDER });
        }
        if rows.len() != order {
            return Err(GroupError::Shape { row: rows.len(), expected: order, found: 0 });
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::Shape { row: i, expected: order, found: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::NotClosed { row: i, col: j, value: v });
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat(order, flat)
    }

    /// Same as [`from_table`](Self::from_table) for a row-major table.
    pub fn from_flat(order: usize, table: Vec<u32>) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::ZeroOrder);
        }
        if order > MAX_ORDER {
            return Err(GroupError::TooLarge { order, max: MAX_ORDER });
        }
        if table.len() != order * order {
            return Err(GroupError::Shape { row: table.len() / order, expected: order * order, found: table.len() });
        }
        if let Some(pos) = table.iter().position(|&v| v as usize >= order) {
            return Err(GroupError::NotClosed { row: pos / order, col: pos % order, value: table[pos] as usize });
        }
        let at = |i: usize, j: usize| table[i * order + j] as usize;

        for x in 0..order {
            if at(0, x) != x || at(x, 0) != x {
                return Err(GroupError::NoIdentity { element: x });
            }
        }

        let mut seen = vec![usize::MAX; order];
        for i in 0..order {
            for j in 0..order {
                let v = at(i, j);
                if seen[v] == i {
                    return Err(GroupError::NotLatin { axis: Axis::Row, line: i, value: v });
                }
                seen[v] = i;
            }
        }
        seen.fill(usize::MAX);
        for j in 0..order {
            for i in 0..order {
                let v = at(i, j);
                if seen[v] == j {
                    return Err(GroupError::NotLatin { axis: Axis::Column, line: j, value: v });
                }
                seen[v] = j;
            }
        }

        let mut inverse = Vec::with_capacity(order);
        for i in 0..order {
            // Latin rows guarantee exactly one right inverse.
            let r = (0..order).find(|&j| at(i, j) == 0).expect("latin row contains 0");
            if at(r, i) != 0 {
                return Err(GroupError::NoInverse { element: i });
            }
            inverse.push(r as u32);
        }

        let group = FiniteGroup { order, table, inverse };
        group.check_associative()?;
        Ok(group)
    }

    /// Light's associativity test: the elements `g` with `(xg)y = x(gy)` for
    /// all `x, y` are closed under multiplication, so checking a set that
    /// generates the table under left-nested products is enough.
    fn check_associative(&self) -> Result<(), GroupError> {
        let n = self.order;
        let mut gens = Vec::new();
        let mut reached = vec![false; n];
        reached[0] = true;
        for x in 1..n {
            if reached[x] {
                continue;
            }
            gens.push(x);
            let mut queue: VecDeque<usize> = (0..n).filter(|&y| reached[y]).collect();
            for &g in &gens {
                if !reached[g] {
                    reached[g] = true;
                    queue.push_back(g);
                }
            }
            while let Some(y) = queue.pop_front() {
                for &g in &gens {
                    let z = self.mul(y, g);
                    if !reached[z] {
                        reached[z] = true;
                        queue.push_back(z);
                    }
                }
            }
        }
        for &g in &gens {
            for x in 0..n {
                let xg = self.mul(x, g);
                for y in 0..n {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(GroupError::NotAssociative { a: x, b: g, c: y });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `a * b * a^-1`.
    #[inline]
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[i * self.order..(i + 1) * self.order].iter().map(|&v| v as usize)
    }

    pub fn rows(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.order).map(|i| self.row(i).collect())
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut m = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            m += 1;
        }
        m
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|x| self.element_order(x)).collect()
    }

    /// The smallest-index element of order `|G|`, if the group is cyclic.
    pub fn is_cyclic(&self) -> Option<usize> {
        self.elements().find(|&x| self.element_order(x) == self.order)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Least `m` with `x^m = 1` for all `x`.
    pub fn exponent(&self) -> usize {
        self.elements().map(|x| self.element_order(x)).fold(1, |acc, m| acc / crate::arith::gcd(acc, m) * m)
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        self.elements().filter(|&z| self.elements().all(|x| self.mul(z, x) == self.mul(x, z))).collect()
    }

    /// Greedy generating sequence: repeatedly take the highest-order element
    /// outside the subgroup generated so far (smallest index on ties).
    pub fn generating_sequence(&self) -> Vec<usize> {
        let orders = self.element_orders();
        let mut by_order: Vec<usize> = (1..self.order).collect();
        by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));

        let mut gens = Vec::new();
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0usize];
        for x in by_order {
            if inside[x] {
                continue;
            }
            gens.push(x);
            // Extend the subgroup by right-multiplying with all generators.
            let mut queue: VecDeque<usize> = members.iter().copied().collect();
            while let Some(y) = queue.pop_front() {
                for &g in &gens {
                    let z = self.mul(y, g);
                    if !inside[z] {
                        inside[z] = true;
                        members.push(z);
                        queue.push_back(z);
                    }
                }
            }
            if members.len() == self.order {
                break;
            }
        }
        gens
    }

    /// Row-major copy of the table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.rows().collect()
    }
}

/// Integers mod `n` under addition, written multiplicatively: element `i`
/// is the `i`-th power of the generator `1`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::ZeroOrder);
    }
    if n > MAX_ORDER {
        return Err(GroupError::TooLarge { order: n, max: MAX_ORDER });
    }
    let table = (0..n).flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32)).collect();
    FiniteGroup::from_flat(n, table)
}

/// All permutations of `0..k` in lexicographic order of one-line notation,
/// so the identity is element 0. The product is composition with the right
/// factor applied first: `(s*t)(x) = s(t(x))`.
pub fn symmetric_group(k: usize) -> Result<FiniteGroup, GroupError> {
    if k == 0 {
        return Err(GroupError::ZeroOrder);
    }
    if k > MAX_SYMMETRIC_DEGREE {
        return Err(GroupError::DegreeTooLarge { degree: k, max: MAX_SYMMETRIC_DEGREE });
    }
    let perms = permutations_lex(k);
    let index: std::collections::HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let n = perms.len();
    let mut table = Vec::with_capacity(n * n);
    for s in &perms {
        for t in &perms {
            let st: Vec<usize> = t.iter().map(|&x| s[x]).collect();
            table.push(index[st.as_slice()] as u32);
        }
    }
    FiniteGroup::from_flat(n, table)
}

/// The one-line notation of each element of `symmetric_group(k)`.
pub fn permutations_lex(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// The quaternion group `{±1, ±i, ±j, ±k}`; element `2u + s` is the unit
/// `u` of `1, i, j, k` with sign `(-1)^s`.
pub fn quaternion_group() -> FiniteGroup {
    // (sign, unit) of unit_u * unit_v
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let (s, u) = UNIT[a / 2][b / 2];
            let sign = (a % 2 + b % 2 + s) % 2;
            table.push((2 * u + sign) as u32);
        }
    }
    FiniteGroup::from_flat(8, table).expect("quaternion table is a group")
}

pub fn trivial_group() -> FiniteGroup {
    cyclic_group(1).expect("order 1 is valid")
}
