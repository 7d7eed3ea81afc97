//! Generator-image backtracking shared by isomorphism testing and
//! automorphism enumeration.

use std::collections::VecDeque;

use crate::group::FiniteGroup;

const UNSET: usize = usize::MAX;

/// Outcome reported by the visitor: keep searching or stop.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flow {
    Continue,
    Stop,
}

pub(crate) struct Backtrack<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    gens: Vec<usize>,
    src_orders: Vec<usize>,
    dst_orders: Vec<usize>,
    pub nodes: u64,
    pub node_budget: u64,
}

impl<'a> Backtrack<'a> {
    pub fn new(src: &'a FiniteGroup, dst: &'a FiniteGroup) -> Self {
        Backtrack {
            src,
            dst,
            gens: src.generating_sequence(),
            src_orders: src.element_orders(),
            dst_orders: dst.element_orders(),
            nodes: 0,
            node_budget: u64::MAX,
        }
    }

    /// Extends `gens[..images.len()] -> images` to the subgroup they
    /// generate. Fails on an inconsistent or non-injective assignment.
    fn extend(&self, images: &[usize], map: &mut [usize], used: &mut [bool]) -> bool {
        map.fill(UNSET);
        used.fill(false);
        map[0] = 0;
        used[0] = true;
        let gens = &self.gens[..images.len()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mx = map[x];
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.src.mul(x, g);
                let my = self.dst.mul(mx, img);
                if map[y] == UNSET {
                    if used[my] {
                        return false;
                    }
                    map[y] = my;
                    used[my] = true;
                    queue.push_back(y);
                } else if map[y] != my {
                    return false;
                }
            }
        }
        true
    }

    /// Visits every isomorphism `src -> dst` in a fixed order. Returns
    /// `false` if the node budget ran out.
    pub fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> Flow) -> bool {
        if self.src.order() != self.dst.order() {
            return true;
        }
        let n = self.src.order();
        let mut map = vec![UNSET; n];
        let mut used = vec![false; n];
        let mut images = Vec::with_capacity(self.gens.len());
        let mut stop = false;
        self.descend(&mut images, &mut map, &mut used, visit, &mut stop)
    }

    fn descend(
        &mut self,
        images: &mut Vec<usize>,
        map: &mut [usize],
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> Flow,
        stop: &mut bool,
    ) -> bool {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return false;
        }
        let level = images.len();
        if level == self.gens.len() {
            if !self.extend(images, map, used) {
                return true;
            }
            if visit(map) == Flow::Stop {
                *stop = true;
            }
            return true;
        }
        let want = self.src_orders[self.gens[level]];
        for y in 1..self.dst.order() {
            if self.dst_orders[y] != want {
                continue;
            }
            images.push(y);
            let ok = self.extend(images, map, used);
            if ok && !self.descend(images, map, used, visit, stop) {
                return false;
            }
            images.pop();
            if *stop {
                return true;
            }
        }
        true
    }
}
