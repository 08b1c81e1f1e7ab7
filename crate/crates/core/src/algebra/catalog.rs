//! Catalogs of small semigroups, monoids and groups up to isomorphism.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::algebra::{direct_product, FiniteGroup, FiniteMonoid, FiniteSemigroup, Limits};
use crate::error::{Error, Result};
use crate::search::{HomSearch, Mode};

const MAX_SEMIGROUP_ORDER: usize = 4;
const MAX_MONOID_ORDER: usize = 5;
const MAX_GROUP_ORDER: usize = 16;

/// Heap's algorithm over `items`, calling `f` on every arrangement.
fn for_each_permutation(items: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    let n = items.len();
    let mut c = vec![0; n];
    f(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            items.swap(if i % 2 == 0 { 0 } else { c[i] }, i);
            f(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn relabel(n: usize, flat: &[usize], perm: &[usize], out: &mut [usize]) {
    // perm[old] = new
    for i in 0..n {
        for j in 0..n {
            out[perm[i] * n + perm[j]] = perm[flat[i * n + j]];
        }
    }
}

/// The lexicographically least relabelling of a table. Indices in `fixed`
/// (a prefix `0..fixed`) are not moved.
pub fn canonical_form(n: usize, flat: &[usize], fixed: usize) -> Vec<usize> {
    let mut best = flat.to_vec();
    let mut scratch = vec![0; n * n];
    let mut tail: Vec<usize> = (fixed..n).collect();
    for_each_permutation(&mut tail, &mut |p| {
        let perm: Vec<usize> = (0..fixed).chain(p.iter().copied()).collect();
        relabel(n, flat, &perm, &mut scratch);
        if scratch < best {
            best.copy_from_slice(&scratch);
        }
    });
    best
}

/// Backtracking over table cells in row-major order; cells already set in
/// `table` are kept. Partial tables are pruned by associativity on every
/// triple whose products are all defined.
fn fill_tables(n: usize, table: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    fn consistent(n: usize, t: &[usize], cell: usize) -> bool {
        const U: usize = usize::MAX;
        let check = |a: usize, b: usize, c: usize| {
            let (ab, bc) = (t[a * n + b], t[b * n + c]);
            if ab == U || bc == U {
                return true;
            }
            let (l, r) = (t[ab * n + c], t[a * n + bc]);
            l == U || r == U || l == r
        };
        // every triple that reads the new cell as ab, bc, (ab)c or a(bc)
        let (i, j) = (cell / n, cell % n);
        for x in 0..n {
            if !check(i, j, x) || !check(x, i, j) {
                return false;
            }
            for y in 0..n {
                if t[x * n + y] == i && !check(x, y, j) {
                    return false;
                }
                if t[x * n + y] == j && !check(i, x, y) {
                    return false;
                }
            }
        }
        true
    }
    fn go(n: usize, t: &mut Vec<usize>, cell: usize, emit: &mut dyn FnMut(&[usize])) {
        if cell == n * n {
            emit(t);
            return;
        }
        if t[cell] != usize::MAX {
            if consistent(n, t, cell) {
                go(n, t, cell + 1, emit);
            }
            return;
        }
        for v in 0..n {
            t[cell] = v;
            if consistent(n, t, cell) {
                go(n, t, cell + 1, emit);
            }
        }
        t[cell] = usize::MAX;
    }
    go(n, table, 0, emit);
}

/// All semigroups of order `n` (`1 ≤ n ≤ 4`) up to isomorphism, ordered by
/// their canonical tables. Each table is its own canonical form.
pub fn enumerate_semigroups(n: usize) -> Result<Vec<FiniteSemigroup>> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    if n > MAX_SEMIGROUP_ORDER {
        return Err(Error::SizeLimitExceeded {
            requested: n as u128,
            cap: MAX_SEMIGROUP_ORDER,
        });
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut table = vec![usize::MAX; n * n];
    fill_tables(n, &mut table, &mut |t| {
        seen.insert(canonical_form(n, t, 0));
    });
    let mut forms: Vec<Vec<usize>> = seen.into_iter().collect();
    forms.sort();
    Ok(forms
        .iter()
        .map(|f| FiniteSemigroup::from_flat_unchecked(n, f))
        .collect())
}

/// All monoids of order `n` (`1 ≤ n ≤ 5`) up to isomorphism, identity at
/// index 0, ordered by canonical table.
pub fn enumerate_monoids(n: usize) -> Result<Vec<FiniteMonoid>> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    if n > MAX_MONOID_ORDER {
        return Err(Error::SizeLimitExceeded {
            requested: n as u128,
            cap: MAX_MONOID_ORDER,
        });
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut table = vec![usize::MAX; n * n];
    for i in 0..n {
        table[i] = i;
        table[i * n] = i;
    }
    fill_tables(n, &mut table, &mut |t| {
        seen.insert(canonical_form(n, t, 1));
    });
    let mut forms: Vec<Vec<usize>> = seen.into_iter().collect();
    forms.sort();
    Ok(forms
        .into_iter()
        .map(|f| FiniteMonoid::from_parts(n, f, 0))
        .collect())
}

/// `⟨a, b | a^m = 1, b^n = a^t, b⁻¹ab = a^r⟩` on the words `a^i b^j`.
/// Parameter choices that do not define a group of order `mn` are rejected.
pub fn metacyclic(m: usize, n: usize, t: usize, r: usize) -> Result<FiniteGroup> {
    let size = m * n;
    let mut rpow = vec![1 % m; n + 1];
    for j in 1..=n {
        rpow[j] = rpow[j - 1] * r % m;
    }
    let mut flat = Vec::with_capacity(size * size);
    for x in 0..size {
        let (i, j) = (x / n, x % n);
        for y in 0..size {
            let (k, l) = (y / n, y % n);
            let mut a = (i + k * rpow[j]) % m;
            let mut b = j + l;
            if b >= n {
                b -= n;
                a = (a + t) % m;
            }
            flat.push(a * n + b);
        }
    }
    FiniteGroup::new(FiniteMonoid::from_flat(size, flat, 0)?)
}

/// `N ⋊ ℤ/k` where the generator of `ℤ/k` acts by `theta` (`theta^k = 1`).
/// The element `(x, j)` has index `x·k + j`.
pub fn semidirect_cyclic(normal: &FiniteGroup, theta: &[usize], k: usize) -> Result<FiniteGroup> {
    let nn = normal.order();
    let mut powers = vec![(0..nn).collect::<Vec<usize>>()];
    for j in 1..=k {
        let prev = &powers[j - 1];
        powers.push((0..nn).map(|x| theta[prev[x]]).collect());
    }
    if powers[k].iter().enumerate().any(|(x, &y)| x != y) {
        return Err(Error::InvalidArgument("theta^k is not the identity".into()));
    }
    let size = nn * k;
    let mut flat = Vec::with_capacity(size * size);
    for a in 0..size {
        let (x, j) = (a / k, a % k);
        for b in 0..size {
            let (y, l) = (b / k, b % k);
            flat.push(normal.mul(x, powers[j][y]) * k + (j + l) % k);
        }
    }
    FiniteGroup::new(FiniteMonoid::from_flat(size, flat, normal.identity() * k)?)
}

fn automorphisms(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let all: Vec<Vec<usize>> = g.elements().map(|_| g.elements().collect()).collect();
    HomSearch::new(g.monoid(), g.monoid(), Mode::Monoid, all)
        .injective(true)
        .all(u128::MAX)
        .expect("unbounded search")
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn build_small_groups() -> Vec<FiniteGroup> {
    let limits = Limits::default();
    let mut by_order: Vec<Vec<FiniteGroup>> = vec![Vec::new(); MAX_GROUP_ORDER + 1];
    for order in 1..=MAX_GROUP_ORDER {
        let mut candidates: Vec<FiniteGroup> = Vec::new();
        for m in divisors(order) {
            let n = order / m;
            for t in 0..m {
                for r in 1..m.max(2) {
                    if let Ok(g) = metacyclic(m, n, t, r) {
                        candidates.push(g);
                    }
                }
            }
        }
        for d in divisors(order) {
            if d == 1 || d == order {
                continue;
            }
            for a in by_order[d].clone() {
                for b in &by_order[order / d] {
                    let p = direct_product(a.monoid(), b.monoid(), &limits).expect("small");
                    candidates.push(FiniteGroup::new(p.monoid).expect("product of groups"));
                }
                let k = order / d;
                for theta in automorphisms(&a) {
                    if let Ok(g) = semidirect_cyclic(&a, &theta, k) {
                        candidates.push(g);
                    }
                }
            }
        }
        let mut found: Vec<FiniteGroup> = Vec::new();
        for c in candidates {
            let new = found.iter().all(|f| {
                crate::algebra::is_isomorphic(f.monoid(), c.monoid(), &limits)
                    .expect("within bound")
                    .is_none()
            });
            if new {
                found.push(c);
            }
        }
        by_order[order] = found;
    }
    by_order.into_iter().flatten().collect()
}

/// Groups of order at most `max_order` (≤ 16) up to isomorphism, by order.
///
/// Built from metacyclic presentations, direct products and cyclic
/// semidirect products of smaller entries, then deduplicated.
pub fn small_groups(max_order: usize) -> Result<Vec<FiniteGroup>> {
    if max_order > MAX_GROUP_ORDER {
        return Err(Error::SizeLimitExceeded {
            requested: max_order as u128,
            cap: MAX_GROUP_ORDER,
        });
    }
    static CACHE: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    Ok(CACHE
        .get_or_init(build_small_groups)
        .iter()
        .filter(|g| g.order() <= max_order)
        .cloned()
        .collect())
}
