//! Green's relations, maximal subgroups and classification predicates.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::algebra::{
    restrict_to_subset, FiniteGroup, FiniteMonoid, FiniteSemigroup, Homomorphism,
};
use crate::error::{Error, Result};

/// The R, L, J and H partitions of a monoid. Class indices are numbered by
/// least element.
#[derive(Clone, Debug)]
pub struct GreensStructure {
    monoid: FiniteMonoid,
    r_class_of: Vec<usize>,
    l_class_of: Vec<usize>,
    j_class_of: Vec<usize>,
    h_class_of: Vec<usize>,
    idempotents: Vec<usize>,
}

fn label_by<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<usize> {
    let mut ids: HashMap<K, usize> = HashMap::new();
    keys.map(|k| {
        let next = ids.len();
        *ids.entry(k).or_insert(next)
    })
    .collect()
}

fn classes_of(labels: &[usize]) -> Vec<Vec<usize>> {
    let k = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
    let mut out = vec![Vec::new(); k];
    for (x, &l) in labels.iter().enumerate() {
        out[l].push(x);
    }
    out
}

/// `xM`, `Mx` and `MxM` as bitsets.
pub(crate) fn ideals(m: &FiniteMonoid, x: usize) -> (FixedBitSet, FixedBitSet, FixedBitSet) {
    let n = m.order();
    let mut right = FixedBitSet::with_capacity(n);
    let mut left = FixedBitSet::with_capacity(n);
    for y in m.elements() {
        right.insert(m.mul(x, y));
        left.insert(m.mul(y, x));
    }
    let mut two = FixedBitSet::with_capacity(n);
    for a in left.ones() {
        for y in m.elements() {
            two.insert(m.mul(a, y));
        }
    }
    (right, left, two)
}

pub fn greens(m: &FiniteMonoid) -> GreensStructure {
    let all: Vec<_> = m.elements().map(|x| ideals(m, x)).collect();
    let r_class_of = label_by(all.iter().map(|(r, _, _)| r.clone()));
    let l_class_of = label_by(all.iter().map(|(_, l, _)| l.clone()));
    let j_class_of = label_by(all.iter().map(|(_, _, j)| j.clone()));
    let h_class_of = label_by(m.elements().map(|x| (r_class_of[x], l_class_of[x])));
    GreensStructure {
        monoid: m.clone(),
        r_class_of,
        l_class_of,
        j_class_of,
        h_class_of,
        idempotents: m.idempotents(),
    }
}

impl GreensStructure {
    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }
    pub fn r_class_of(&self) -> &[usize] {
        &self.r_class_of
    }
    pub fn l_class_of(&self) -> &[usize] {
        &self.l_class_of
    }
    pub fn j_class_of(&self) -> &[usize] {
        &self.j_class_of
    }
    pub fn h_class_of(&self) -> &[usize] {
        &self.h_class_of
    }
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }
    pub fn r_classes(&self) -> Vec<Vec<usize>> {
        classes_of(&self.r_class_of)
    }
    pub fn l_classes(&self) -> Vec<Vec<usize>> {
        classes_of(&self.l_class_of)
    }
    pub fn j_classes(&self) -> Vec<Vec<usize>> {
        classes_of(&self.j_class_of)
    }
    pub fn h_classes(&self) -> Vec<Vec<usize>> {
        classes_of(&self.h_class_of)
    }

    /// The R-class of `x`, in increasing order.
    pub fn r_class(&self, x: usize) -> Vec<usize> {
        let c = self.r_class_of[x];
        (0..self.monoid.order())
            .filter(|&y| self.r_class_of[y] == c)
            .collect()
    }

    pub fn h_class(&self, x: usize) -> Vec<usize> {
        let c = self.h_class_of[x];
        (0..self.monoid.order())
            .filter(|&y| self.h_class_of[y] == c)
            .collect()
    }

    /// The eggbox of one J-class: rows are R-classes, columns L-classes, each
    /// cell the (possibly empty) H-class at the intersection.
    pub fn eggbox(&self, j: usize) -> Vec<Vec<Vec<usize>>> {
        let members: Vec<usize> = (0..self.monoid.order())
            .filter(|&x| self.j_class_of[x] == j)
            .collect();
        let mut rows: Vec<usize> = Vec::new();
        let mut cols: Vec<usize> = Vec::new();
        for &x in &members {
            if !rows.contains(&self.r_class_of[x]) {
                rows.push(self.r_class_of[x]);
            }
            if !cols.contains(&self.l_class_of[x]) {
                cols.push(self.l_class_of[x]);
            }
        }
        rows.iter()
            .map(|&r| {
                cols.iter()
                    .map(|&l| {
                        members
                            .iter()
                            .copied()
                            .filter(|&x| self.r_class_of[x] == r && self.l_class_of[x] == l)
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

pub(crate) fn require_idempotent(m: &FiniteMonoid, e: usize) -> Result<()> {
    if e >= m.order() {
        return Err(Error::InvalidArgument(format!("element {e} out of range")));
    }
    if !m.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    Ok(())
}

/// The H-class of `e` as a group with identity `e`, and its inclusion.
pub fn maximal_subgroup(m: &FiniteMonoid, e: usize) -> Result<(FiniteGroup, Homomorphism)> {
    require_idempotent(m, e)?;
    let (r, l, _) = ideals(m, e);
    let h: Vec<usize> = m
        .elements()
        .filter(|&x| {
            let (rx, lx, _) = ideals(m, x);
            rx == r && lx == l
        })
        .collect();
    let (sub, incl) = restrict_to_subset(m, &h)?;
    Ok((FiniteGroup::new(sub)?, incl))
}

/// `eMe` with identity `e`, carrier in increasing order.
pub fn local_monoid(m: &FiniteMonoid, e: usize) -> Result<(FiniteMonoid, Homomorphism)> {
    require_idempotent(m, e)?;
    let mut mask = vec![false; m.order()];
    for x in m.elements() {
        mask[m.mul(m.mul(e, x), e)] = true;
    }
    let carrier: Vec<usize> = m.elements().filter(|&x| mask[x]).collect();
    restrict_to_subset(m, &carrier)
}

/// Classification flags of a semigroup, computed over its original elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_band: bool,
    pub is_completely_regular: bool,
    pub is_aperiodic: bool,
    pub group_elements: Vec<usize>,
}

/// `s` is a group element iff `s^(m+1) = s` for some `m ≥ 1`, i.e. the
/// monogenic subsemigroup of `s` has index 1.
pub fn classify(s: &FiniteSemigroup) -> Classification {
    let m = s.monoid();
    let mut is_band = true;
    let mut is_aperiodic = true;
    let mut group_elements = Vec::new();
    for x in s.originals() {
        let (index, period) = m.index_period(x);
        is_band &= m.is_idempotent(x);
        is_aperiodic &= period == 1;
        if index == 1 {
            group_elements.push(x);
        }
    }
    Classification {
        is_band,
        is_completely_regular: group_elements.len() == s.size(),
        is_aperiodic,
        group_elements,
    }
}

/// Whether `MaM = MbM`.
pub fn j_related(m: &FiniteMonoid, a: usize, b: usize) -> bool {
    ideals(m, a).2 == ideals(m, b).2
}

/// The §4-style inference: `a J a²` forces `a` into a subgroup. Returns
/// `None` when the hypothesis fails, otherwise whether `a` is a group element.
pub fn j_square_implies_group(m: &FiniteMonoid, a: usize) -> Option<bool> {
    if !j_related(m, a, m.mul(a, a)) {
        return None;
    }
    Some(m.index_period(a).0 == 1)
}
