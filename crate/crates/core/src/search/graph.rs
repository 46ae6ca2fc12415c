use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use crate::alphabet::OrderedAlphabet;
use crate::error::{show_byte, Error, Result};

/// Precedence constraints among letters. An edge `u -> v` means `u < v`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstraintGraph {
    nodes: Vec<u8>,
    succ: BTreeMap<u8, BTreeSet<u8>>,
}

impl ConstraintGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_letter(&mut self, letter: u8) {
        if !self.nodes.contains(&letter) {
            self.nodes.push(letter);
        }
    }

    pub fn letters(&self) -> &[u8] {
        &self.nodes
    }

    pub fn has_edge(&self, u: u8, v: u8) -> bool {
        self.succ.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn edges(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.succ
            .iter()
            .flat_map(|(&u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.succ.values().map(BTreeSet::len).sum()
    }

    /// Record `u < v`. Idempotent; the graph may become inconsistent.
    pub fn assert_precedes(&mut self, u: u8, v: u8) -> Result<()> {
        if u == v {
            return Err(Error::InvalidArgument(format!(
                "a letter cannot precede itself ({})",
                show_byte(u)
            )));
        }
        self.add_letter(u);
        self.add_letter(v);
        self.succ.entry(u).or_default().insert(v);
        Ok(())
    }

    /// Record `u < v` only if the graph stays acyclic. Returns whether the
    /// edge is present afterwards.
    pub fn try_precedes(&mut self, u: u8, v: u8) -> Result<bool> {
        if u == v {
            return self.assert_precedes(u, v).map(|_| false);
        }
        if self.reaches(v, u) {
            return Ok(false);
        }
        self.assert_precedes(u, v)?;
        Ok(true)
    }

    /// Whether a directed path leads from `from` to `to`.
    pub fn reaches(&self, from: u8, to: u8) -> bool {
        let mut seen = [false; 256];
        let mut stack = vec![from];
        while let Some(x) = stack.pop() {
            if x == to {
                return true;
            }
            if std::mem::replace(&mut seen[x as usize], true) {
                continue;
            }
            if let Some(next) = self.succ.get(&x) {
                stack.extend(next.iter().copied().filter(|&y| !seen[y as usize]));
            }
        }
        false
    }

    pub fn is_consistent(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// Some letter lying on a cycle, if any.
    pub fn find_cycle(&self) -> Option<u8> {
        self.edges()
            .find(|&(u, v)| self.reaches(v, u))
            .map(|(u, _)| u)
    }

    /// A total order extending every edge. Among letters free to go next,
    /// the one earliest in `tie_break` wins; letters absent from `tie_break`
    /// follow in byte order.
    pub fn linearize(&self, tie_break: &[u8]) -> Result<OrderedAlphabet> {
        let mut priority = [usize::MAX; 256];
        let mut letters = Vec::new();
        for (i, &l) in tie_break.iter().enumerate() {
            if priority[l as usize] == usize::MAX {
                priority[l as usize] = i;
                letters.push(l);
            }
        }
        for &l in &self.nodes {
            if priority[l as usize] == usize::MAX {
                priority[l as usize] = tie_break.len() + l as usize;
                letters.push(l);
            }
        }

        let mut indegree = [0usize; 256];
        for (_, v) in self.edges() {
            indegree[v as usize] += 1;
        }
        let mut ready: BinaryHeap<Reverse<(usize, u8)>> = letters
            .iter()
            .filter(|&&l| indegree[l as usize] == 0)
            .map(|&l| Reverse((priority[l as usize], l)))
            .collect();
        let mut out = Vec::with_capacity(letters.len());
        while let Some(Reverse((_, l))) = ready.pop() {
            out.push(l);
            for &v in self.succ.get(&l).into_iter().flatten() {
                indegree[v as usize] -= 1;
                if indegree[v as usize] == 0 {
                    ready.push(Reverse((priority[v as usize], v)));
                }
            }
        }
        if out.len() != letters.len() {
            let on_cycle = self.find_cycle().map(show_byte).unwrap_or_default();
            return Err(Error::Inconsistent(on_cycle));
        }
        OrderedAlphabet::from_ascending(&out)
    }
}
