use crate::algebra::{FiniteMonoid, HomKind, Homomorphism, Limits};
use crate::error::{Error, Result};
use crate::search::{HomSearch, Mode};

/// Isomorphism-invariant data of one element: identity flag, index and
/// period of its cyclic subsemigroup, and the sizes of `xM` and `Mx`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementProfile {
    pub is_identity: bool,
    pub index: usize,
    pub period: usize,
    pub right_ideal: usize,
    pub left_ideal: usize,
}

pub fn profile(m: &FiniteMonoid) -> Vec<ElementProfile> {
    let n = m.order();
    let mut seen = vec![usize::MAX; n];
    m.elements()
        .map(|x| {
            let (index, period) = m.index_period(x);
            let mut count = |f: &dyn Fn(usize) -> usize, stamp: usize| {
                let mut c = 0;
                for y in m.elements() {
                    let z = f(y);
                    if seen[z] != stamp {
                        seen[z] = stamp;
                        c += 1;
                    }
                }
                c
            };
            let right_ideal = count(&|y| m.mul(x, y), 2 * x);
            let left_ideal = count(&|y| m.mul(y, x), 2 * x + 1);
            ElementProfile {
                is_identity: x == m.identity(),
                index,
                period,
                right_ideal,
                left_ideal,
            }
        })
        .collect()
}

/// Searches for an isomorphism `a → b`, returning the lexicographically
/// least one. Candidates are restricted to elements with equal profiles.
pub fn is_isomorphic(
    a: &FiniteMonoid,
    b: &FiniteMonoid,
    limits: &Limits,
) -> Result<Option<Homomorphism>> {
    let largest = a.order().max(b.order());
    if largest > limits.iso_bound {
        return Err(Error::BudgetExceeded {
            requested: largest as u128,
            budget: limits.iso_bound as u128,
        });
    }
    if a.order() != b.order() {
        return Ok(None);
    }
    let (pa, pb) = (profile(a), profile(b));
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }
    let candidates = pa
        .iter()
        .map(|p| b.elements().filter(|&y| pb[y] == *p).collect())
        .collect();
    let map = HomSearch::new(a, b, Mode::Monoid, candidates)
        .injective(true)
        .first(u128::MAX)?;
    Ok(map.map(|m| Homomorphism::from_parts(a, b, m, HomKind::Monoid)))
}
