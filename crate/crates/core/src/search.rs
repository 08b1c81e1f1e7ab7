//! Generator-driven homomorphism search.
//!
//! Images are chosen for a greedy generating set of the source, smallest
//! candidate first, and propagated along the right Cayley graph. Because every
//! element below the `i`-th generator is generated by the earlier ones, the
//! first map found is the lexicographically least one as a vector.

use crate::algebra::{closure_mask, FiniteMonoid};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Identity-preserving maps; the closure starts at the identity.
    Monoid,
    /// Maps multiplicative on `0..originals`. If `adjoined`, the source
    /// identity (index `originals`) is sent to the target identity.
    Semigroup { originals: usize, adjoined: bool },
}

pub(crate) struct HomSearch<'a> {
    source: &'a FiniteMonoid,
    target: &'a FiniteMonoid,
    mode: Mode,
    candidates: Vec<Vec<usize>>,
    allowed: Vec<bool>,
    injective: bool,
}

impl<'a> HomSearch<'a> {
    /// `candidates[s]` lists the admissible images of `s` (any order).
    pub fn new(
        source: &'a FiniteMonoid,
        target: &'a FiniteMonoid,
        mode: Mode,
        mut candidates: Vec<Vec<usize>>,
    ) -> Self {
        let nt = target.order();
        let mut allowed = vec![false; source.order() * nt];
        for (s, c) in candidates.iter_mut().enumerate() {
            c.sort_unstable();
            c.dedup();
            for &t in c.iter() {
                allowed[s * nt + t] = true;
            }
        }
        HomSearch {
            source,
            target,
            mode,
            candidates,
            allowed,
            injective: false,
        }
    }

    pub fn injective(mut self, yes: bool) -> Self {
        self.injective = yes;
        self
    }

    fn domain(&self) -> usize {
        match self.mode {
            Mode::Monoid => self.source.order(),
            Mode::Semigroup { originals, .. } => originals,
        }
    }

    pub fn generators(&self) -> Vec<usize> {
        match self.mode {
            Mode::Monoid => crate::algebra::greedy_generators(self.source),
            Mode::Semigroup { originals, .. } => {
                let mut gens = Vec::new();
                let mut inside = vec![false; self.source.order()];
                for x in 0..originals {
                    if !inside[x] {
                        gens.push(x);
                        inside = semigroup_closure(self.source, &gens);
                    }
                }
                gens
            }
        }
    }

    /// Product of candidate counts over the generating set.
    pub fn space(&self, gens: &[usize]) -> u128 {
        gens.iter()
            .map(|&g| self.candidates[g].len() as u128)
            .fold(1u128, |acc, c| acc.saturating_mul(c))
    }

    fn initial(&self) -> Option<(Vec<usize>, Vec<bool>)> {
        let mut map = vec![usize::MAX; self.source.order()];
        let mut used = vec![false; self.target.order()];
        match self.mode {
            Mode::Monoid => {
                let (s, t) = (self.source.identity(), self.target.identity());
                if !self.allowed[s * self.target.order() + t] {
                    return None;
                }
                map[s] = t;
                used[t] = true;
            }
            Mode::Semigroup { adjoined: true, .. } => {
                map[self.source.identity()] = self.target.identity();
            }
            Mode::Semigroup { .. } => {}
        }
        Some((map, used))
    }

    fn check_budget(&self, gens: &[usize], budget: u128) -> Result<()> {
        let space = self.space(gens);
        if space > budget {
            return Err(Error::BudgetExceeded {
                requested: space,
                budget,
            });
        }
        Ok(())
    }

    /// The lexicographically least admissible homomorphism.
    pub fn first(&self, budget: u128) -> Result<Option<Vec<usize>>> {
        let gens = self.generators();
        self.check_budget(&gens, budget)?;
        let mut found = None;
        if let Some((map, used)) = self.initial() {
            self.dfs(0, &gens, &map, &used, &mut |m| {
                found = Some(m.to_vec());
                false
            });
        }
        Ok(found)
    }

    /// Every admissible homomorphism, in lexicographic order.
    pub fn all(&self, budget: u128) -> Result<Vec<Vec<usize>>> {
        let gens = self.generators();
        self.check_budget(&gens, budget)?;
        let mut out = Vec::new();
        if let Some((map, used)) = self.initial() {
            self.dfs(0, &gens, &map, &used, &mut |m| {
                out.push(m.to_vec());
                true
            });
        }
        Ok(out)
    }

    /// Returns `false` once the visitor asks to stop.
    fn dfs(
        &self,
        depth: usize,
        gens: &[usize],
        map: &[usize],
        used: &[bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == gens.len() {
            debug_assert!((0..self.domain()).all(|s| map[s] != usize::MAX));
            return visit(map);
        }
        let g = gens[depth];
        for &c in &self.candidates[g] {
            let mut m2 = map.to_vec();
            let mut u2 = used.to_vec();
            if self.propagate(&gens[..=depth], c, &mut m2, &mut u2)
                && !self.dfs(depth + 1, gens, &m2, &u2, visit)
            {
                return false;
            }
        }
        true
    }

    fn propagate(
        &self,
        gens: &[usize],
        image: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let nt = self.target.order();
        let g = *gens.last().unwrap();
        if map[g] != usize::MAX {
            return map[g] == image;
        }
        if self.injective && used[image] {
            return false;
        }
        map[g] = image;
        used[image] = true;
        let domain = self.domain();
        let mut queue: Vec<usize> = (0..self.source.order())
            .filter(|&x| map[x] != usize::MAX)
            .collect();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &h in gens {
                let y = self.source.mul(x, h);
                let v = self.target.mul(map[x], map[h]);
                if map[y] == usize::MAX {
                    if y >= domain || !self.allowed[y * nt + v] || (self.injective && used[v]) {
                        return false;
                    }
                    map[y] = v;
                    used[v] = true;
                    queue.push(y);
                } else if map[y] != v {
                    return false;
                }
            }
        }
        true
    }
}

/// Elements generated by `gens` under multiplication (no identity seed).
pub(crate) fn semigroup_closure(m: &FiniteMonoid, gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; m.order()];
    let mut stack: Vec<usize> = Vec::new();
    for &g in gens {
        if !seen[g] {
            seen[g] = true;
            stack.push(g);
        }
    }
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = m.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Membership mask of the submonoid generated by `gens`.
#[allow(dead_code)]
pub(crate) fn monoid_closure(m: &FiniteMonoid, gens: &[usize]) -> Vec<bool> {
    closure_mask(m, gens)
}
