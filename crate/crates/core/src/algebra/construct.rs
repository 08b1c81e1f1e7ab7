use std::collections::HashMap;
use std::hash::Hash;

use crate::algebra::hom::inclusion_map;
use crate::algebra::{FiniteMonoid, FiniteSemigroup, HomKind, Homomorphism, Limits};
use crate::error::{Error, Result};

pub(crate) fn check_cap(requested: u128, limits: &Limits) -> Result<()> {
    if requested > limits.size_cap as u128 {
        return Err(Error::SizeLimitExceeded {
            requested,
            cap: limits.size_cap,
        });
    }
    Ok(())
}

/// A direct product with its two projections.
#[derive(Clone, Debug)]
pub struct Product {
    pub monoid: FiniteMonoid,
    pub left: Homomorphism,
    pub right: Homomorphism,
    right_order: usize,
}

impl Product {
    /// Index of the pair `(x, y)`.
    pub fn pair(&self, x: usize, y: usize) -> usize {
        x * self.right_order + y
    }

    pub fn split(&self, z: usize) -> (usize, usize) {
        (z / self.right_order, z % self.right_order)
    }
}

/// Componentwise product `a × b`; the pair `(x, y)` has index `x·|b| + y`.
pub fn direct_product(a: &FiniteMonoid, b: &FiniteMonoid, limits: &Limits) -> Result<Product> {
    let (na, nb) = (a.order(), b.order());
    check_cap(na as u128 * nb as u128, limits)?;
    let n = na * nb;
    let mut flat = Vec::with_capacity(n * n);
    for x in 0..n {
        let (x1, x2) = (x / nb, x % nb);
        for y in 0..n {
            let (y1, y2) = (y / nb, y % nb);
            flat.push(a.mul(x1, y1) * nb + b.mul(x2, y2));
        }
    }
    let monoid = FiniteMonoid::from_parts(n, flat, a.identity() * nb + b.identity());
    let left = Homomorphism::from_parts(
        &monoid,
        a,
        (0..n).map(|z| z / nb).collect(),
        HomKind::Monoid,
    );
    let right = Homomorphism::from_parts(
        &monoid,
        b,
        (0..n).map(|z| z % nb).collect(),
        HomKind::Monoid,
    );
    Ok(Product {
        monoid,
        left,
        right,
        right_order: nb,
    })
}

/// The `n`-fold direct power; tuples are encoded big-endian in base `|m|`.
pub fn direct_power(m: &FiniteMonoid, n: usize, limits: &Limits) -> Result<FiniteMonoid> {
    let k = m.order();
    check_cap((k as u128).saturating_pow(n as u32), limits)?;
    let size = k.pow(n as u32);
    let decode = |mut z: usize| -> Vec<usize> {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = z % k;
            z /= k;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().fold(0, |acc, &x| acc * k + x);
    let tuples: Vec<Vec<usize>> = (0..size).map(decode).collect();
    let mut flat = Vec::with_capacity(size * size);
    for x in &tuples {
        for y in &tuples {
            let z: Vec<usize> = x.iter().zip(y).map(|(&a, &b)| m.mul(a, b)).collect();
            flat.push(encode(&z));
        }
    }
    let id = encode(&vec![m.identity(); n]);
    Ok(FiniteMonoid::from_parts(size, flat, id))
}

/// Smallest submonoid containing `gens`, indexed by first appearance in a
/// breadth-first search that right-multiplies by the generators in the
/// order given. The empty generating set yields `{identity}`.
pub fn submonoid_closure(m: &FiniteMonoid, gens: &[usize]) -> (FiniteMonoid, Homomorphism) {
    let mut index = vec![usize::MAX; m.order()];
    let mut elems = vec![m.identity()];
    index[m.identity()] = 0;
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head];
        head += 1;
        for &g in gens {
            let y = m.mul(x, g);
            if index[y] == usize::MAX {
                index[y] = elems.len();
                elems.push(y);
            }
        }
    }
    let k = elems.len();
    let mut flat = Vec::with_capacity(k * k);
    for &x in &elems {
        for &y in &elems {
            flat.push(index[m.mul(x, y)]);
        }
    }
    let sub = FiniteMonoid::from_parts(k, flat, 0);
    let incl = Homomorphism::from_parts(&sub, m, elems, HomKind::Monoid);
    (sub, incl)
}

/// Elements of the submonoid generated by `gens`, as a membership mask.
pub(crate) fn closure_mask(m: &FiniteMonoid, gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; m.order()];
    let mut stack = vec![m.identity()];
    seen[m.identity()] = true;
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

/// Re-indexes a closed subset (in the order given) as a monoid. The identity
/// is the ambient identity when present, otherwise the subset's own
/// two-sided identity.
pub fn restrict_to_subset(
    m: &FiniteMonoid,
    elems: &[usize],
) -> Result<(FiniteMonoid, Homomorphism)> {
    let flat = subset_table(m, elems)?;
    let k = elems.len();
    let identity = elems
        .iter()
        .position(|&x| x == m.identity())
        .or_else(|| crate::algebra::monoid::find_identity(k, &flat))
        .ok_or_else(|| Error::NotClosed("subset has no identity element".into()))?;
    let sub = FiniteMonoid::from_parts(k, flat, identity);
    let incl = inclusion_map(&sub, m, elems.to_vec());
    Ok((sub, incl))
}

/// Re-indexes a closed subset as a semigroup, adjoining an identity when the
/// subset has none. The inclusion is a semigroup map.
pub fn subsemigroup(m: &FiniteMonoid, elems: &[usize]) -> Result<(FiniteSemigroup, Homomorphism)> {
    let flat = subset_table(m, elems)?;
    let s = FiniteSemigroup::from_flat_unchecked(elems.len(), &flat);
    let mut map = elems.to_vec();
    if s.identity_adjoined() {
        map.push(m.identity());
    }
    let incl = Homomorphism::from_parts(
        s.monoid(),
        m,
        map,
        HomKind::Semigroup {
            source_adjoined: s.identity_adjoined(),
            target_adjoined: false,
        },
    );
    Ok((s, incl))
}

fn subset_table(m: &FiniteMonoid, elems: &[usize]) -> Result<Vec<usize>> {
    if elems.is_empty() {
        return Err(Error::NotClosed("empty subset".into()));
    }
    let mut index = vec![usize::MAX; m.order()];
    for (i, &x) in elems.iter().enumerate() {
        if index[x] != usize::MAX {
            return Err(Error::InvalidArgument(format!("element {x} listed twice")));
        }
        index[x] = i;
    }
    let k = elems.len();
    let mut flat = Vec::with_capacity(k * k);
    for &x in elems {
        for &y in elems {
            let z = index[m.mul(x, y)];
            if z == usize::MAX {
                return Err(Error::NotClosed(format!("{x}*{y} leaves the subset")));
            }
            flat.push(z);
        }
    }
    Ok(flat)
}

/// Closure of `gens` under `mul` starting from `identity`, enumerated
/// breadth-first. The Cayley table is filled from the right Cayley graph
/// without further calls to `mul`.
pub fn generate<T, F>(
    identity: T,
    gens: &[T],
    mul: F,
    limits: &Limits,
) -> Result<(Vec<T>, FiniteMonoid)>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let ng = gens.len();
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut parent = vec![(usize::MAX, usize::MAX)];
    let mut right: Vec<usize> = Vec::new();
    let mut head = 0;
    while head < elems.len() {
        for (gi, g) in gens.iter().enumerate() {
            let y = mul(&elems[head], g);
            let j = match index.get(&y) {
                Some(&j) => j,
                None => {
                    let j = elems.len();
                    check_cap(j as u128 + 1, limits)?;
                    index.insert(y.clone(), j);
                    elems.push(y);
                    parent.push((head, gi));
                    j
                }
            };
            right.push(j);
        }
        head += 1;
    }
    let k = elems.len();
    let mut flat = vec![0; k * k];
    for x in 0..k {
        let row = &mut flat[x * k..(x + 1) * k];
        row[0] = x;
        for y in 1..k {
            let (p, g) = parent[y];
            row[y] = right[row[p] * ng + g];
        }
    }
    Ok((elems, FiniteMonoid::from_parts(k, flat, 0)))
}

/// Tabulates an explicit finite set closed under `mul`. The identity is
/// found by scanning; the set must contain one.
pub fn from_elements<T, F>(elems: &[T], mul: F, limits: &Limits) -> Result<FiniteMonoid>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let (k, flat) = tabulate(elems, mul, limits)?;
    let identity = crate::algebra::monoid::find_identity(k, &flat)
        .ok_or_else(|| Error::NotClosed("element set has no identity".into()))?;
    Ok(FiniteMonoid::from_parts(k, flat, identity))
}

/// Like [`from_elements`] but adjoins an identity when the set has none.
pub fn semigroup_from_elements<T, F>(
    elems: &[T],
    mul: F,
    limits: &Limits,
) -> Result<FiniteSemigroup>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let (k, flat) = tabulate(elems, mul, limits)?;
    Ok(FiniteSemigroup::from_flat_unchecked(k, &flat))
}

fn tabulate<T, F>(elems: &[T], mul: F, limits: &Limits) -> Result<(usize, Vec<usize>)>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let k = elems.len();
    if k == 0 {
        return Err(Error::NotClosed("empty element set".into()));
    }
    check_cap(k as u128, limits)?;
    let index: HashMap<&T, usize> = elems.iter().enumerate().map(|(i, x)| (x, i)).collect();
    if index.len() != k {
        return Err(Error::InvalidArgument("duplicate elements".into()));
    }
    let mut flat = Vec::with_capacity(k * k);
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            let z = mul(x, y);
            match index.get(&z) {
                Some(&z) => flat.push(z),
                None => {
                    return Err(Error::NotClosed(format!(
                        "product of {i} and {j} leaves the set"
                    )))
                }
            }
        }
    }
    Ok((k, flat))
}

/// Greedy generating set: repeatedly adds the least element not yet in the
/// generated submonoid. Every element below the `i`-th generator lies in the
/// submonoid generated by the earlier ones.
pub fn greedy_generators(m: &FiniteMonoid) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = closure_mask(m, &gens);
    for x in m.elements() {
        if !inside[x] {
            gens.push(x);
            inside = closure_mask(m, &gens);
        }
    }
    gens
}
