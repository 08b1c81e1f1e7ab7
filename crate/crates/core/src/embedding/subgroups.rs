use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::algebra::{
    quotient_by_congruence, restrict_to_subset, Congruence, FiniteGroup, Homomorphism, Limits,
};
use crate::error::{Error, Result};

fn check_subgroup_cap(g: &FiniteGroup, limits: &Limits) -> Result<()> {
    if g.order() > limits.subgroup_cap {
        return Err(Error::BudgetExceeded {
            requested: g.order() as u128,
            budget: limits.subgroup_cap as u128,
        });
    }
    Ok(())
}

fn close(g: &FiniteGroup, mut set: FixedBitSet) -> FixedBitSet {
    let mut frontier: Vec<usize> = set.ones().collect();
    let gens = frontier.clone();
    while let Some(x) = frontier.pop() {
        for &y in &gens {
            let z = g.mul(x, y);
            if !set.contains(z) {
                set.insert(z);
                frontier.push(z);
            }
        }
    }
    set
}

/// Every subgroup, as increasing element lists ordered by size and then
/// lexicographically. Subgroups are found as closures of a known subgroup
/// with one more element, starting from the trivial one.
pub fn subgroups(g: &FiniteGroup, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    check_subgroup_cap(g, limits)?;
    let n = g.order();
    let mut trivial = FixedBitSet::with_capacity(n);
    trivial.insert(g.identity());
    let mut seen = std::collections::HashSet::new();
    seen.insert(trivial.clone());
    let mut queue = vec![trivial];
    let mut head = 0;
    while head < queue.len() {
        let s = queue[head].clone();
        head += 1;
        for x in g.elements() {
            if s.contains(x) {
                continue;
            }
            let mut t = s.clone();
            t.insert(x);
            let t = close(g, t);
            if seen.insert(t.clone()) {
                queue.push(t);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = queue.iter().map(|s| s.ones().collect()).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

pub fn is_normal(g: &FiniteGroup, n: &[usize]) -> bool {
    let mut inside = vec![false; g.order()];
    for &x in n {
        inside[x] = true;
    }
    g.elements()
        .all(|a| n.iter().all(|&x| inside[g.mul(g.mul(g.inv(a), x), a)]))
}

pub fn normal_subgroups(g: &FiniteGroup, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    Ok(subgroups(g, limits)?
        .into_iter()
        .filter(|n| is_normal(g, n))
        .collect())
}

/// `G/N` for a normal subgroup `N`, with the projection.
pub fn quotient_by_normal(g: &FiniteGroup, n: &[usize]) -> Result<(FiniteGroup, Homomorphism)> {
    if !is_normal(g, n) {
        return Err(Error::NotASubgroup("not a normal subgroup".into()));
    }
    let labels: Vec<usize> = g
        .elements()
        .map(|x| n.iter().map(|&y| g.mul(y, x)).min().expect("nonempty"))
        .collect();
    let c = Congruence::new(g.monoid(), &labels)?;
    let (q, proj) = quotient_by_congruence(g.monoid(), &c)?;
    Ok((FiniteGroup::new(q)?, proj))
}

/// The Frattini subgroup with its quotient.
#[derive(Clone, Debug)]
pub struct Frattini {
    pub subgroup: Vec<usize>,
    pub quotient: FiniteGroup,
    pub projection: Homomorphism,
    /// Every prime dividing `|Φ(G)|` divides `|G/Φ(G)|`.
    pub divisibility_holds: bool,
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `Φ(G)`, the intersection of the maximal proper subgroups (`G` itself
/// when there are none).
pub fn frattini(g: &FiniteGroup, limits: &Limits) -> Result<Frattini> {
    let subs = subgroups(g, limits)?;
    let proper: Vec<&Vec<usize>> = subs.iter().filter(|s| s.len() < g.order()).collect();
    let contained = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    let maximal: Vec<&Vec<usize>> = proper
        .iter()
        .copied()
        .filter(|s| !proper.iter().any(|t| t.len() > s.len() && contained(s, t)))
        .collect();
    let subgroup: Vec<usize> = g
        .elements()
        .filter(|x| maximal.iter().all(|m| m.binary_search(x).is_ok()))
        .collect();
    let (quotient, projection) = quotient_by_normal(g, &subgroup)?;
    let divisibility_holds = prime_factors(subgroup.len())
        .into_iter()
        .all(|p| quotient.order() % p == 0);
    Ok(Frattini {
        subgroup,
        quotient,
        projection,
        divisibility_holds,
    })
}

/// A subgroup chosen by [`saturated_lift`].
#[derive(Clone, Debug)]
pub struct ChosenSubgroup {
    pub elements: Vec<usize>,
    pub group: FiniteGroup,
    pub inclusion: Homomorphism,
}

/// A least-order subgroup `M ≤ G` with `member(M)` and `φ(M) = H`, ties broken
/// by the lexicographically least element list. `None` when no subgroup of
/// the class surjects.
pub fn saturated_lift(
    phi: &Homomorphism,
    member: &dyn Fn(&FiniteGroup) -> bool,
    limits: &Limits,
) -> Result<Option<ChosenSubgroup>> {
    let g = FiniteGroup::new(phi.source().clone())?;
    let h = FiniteGroup::new(phi.target().clone())?;
    if !member(&h) {
        return Err(Error::InvalidArgument(
            "the image group is not in the class".into(),
        ));
    }
    for s in subgroups(&g, limits)? {
        let mut hit = vec![false; h.order()];
        for &x in &s {
            hit[phi.apply(x)] = true;
        }
        if !hit.iter().all(|&b| b) {
            continue;
        }
        let (sub, inclusion) = restrict_to_subset(g.monoid(), &s)?;
        let group = FiniteGroup::new(sub)?;
        if member(&group) {
            return Ok(Some(ChosenSubgroup {
                elements: s,
                group,
                inclusion,
            }));
        }
    }
    Ok(None)
}

/// Answer of [`is_elementary_abelian`] for a group that is one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ElementaryPrime {
    /// The trivial group, elementary abelian for every prime.
    Any,
    Prime(usize),
}

impl ElementaryPrime {
    pub fn admits(self, p: usize) -> bool {
        match self {
            ElementaryPrime::Any => true,
            ElementaryPrime::Prime(q) => q == p,
        }
    }
}

pub fn is_elementary_abelian(g: &FiniteGroup) -> Option<ElementaryPrime> {
    if g.order() == 1 {
        return Some(ElementaryPrime::Any);
    }
    if !g.is_abelian() {
        return None;
    }
    let p = g.element_order(g.elements().find(|&x| x != g.identity())?);
    let is_prime = prime_factors(p) == [p];
    (is_prime
        && g.elements()
            .all(|x| x == g.identity() || g.element_order(x) == p))
    .then_some(ElementaryPrime::Prime(p))
}
