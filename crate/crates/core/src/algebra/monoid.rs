use std::fmt;
use std::ops::{Deref, Range};
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite monoid given by its Cayley table.
///
/// Elements are the dense indices `0..order`. The table is stored row-major
/// and shared, so clones are cheap.
#[derive(Clone)]
pub struct FiniteMonoid {
    order: usize,
    identity: usize,
    table: Arc<[usize]>,
}

impl FiniteMonoid {
    /// Validates a square table with a designated identity.
    ///
    /// Checks shape and range first, then the identity laws, then runs the
    /// full associativity scan in lexicographic `(i, j, k)` order so the
    /// reported witness is the first violating triple.
    pub fn new(rows: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::MalformedTable("table has no rows".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(order, flat, identity)
    }

    /// Same as [`FiniteMonoid::new`] on a row-major flat table.
    pub fn from_flat(order: usize, flat: Vec<usize>, identity: usize) -> Result<Self> {
        if order == 0 || flat.len() != order * order {
            return Err(Error::MalformedTable(format!(
                "flat table of length {} is not {order}x{order}",
                flat.len()
            )));
        }
        if let Some(pos) = flat.iter().position(|&x| x >= order) {
            return Err(Error::MalformedTable(format!(
                "entry ({}, {}) = {} out of range",
                pos / order,
                pos % order,
                flat[pos]
            )));
        }
        if identity >= order {
            return Err(Error::MalformedTable(format!(
                "identity {identity} out of range"
            )));
        }
        let m = Self::from_parts(order, flat, identity);
        m.check_identity()?;
        m.check_associative()?;
        Ok(m)
    }

    /// Builds a monoid without validation. Callers guarantee the laws hold.
    pub(crate) fn from_parts(order: usize, flat: Vec<usize>, identity: usize) -> Self {
        debug_assert_eq!(flat.len(), order * order);
        FiniteMonoid {
            order,
            identity,
            table: flat.into(),
        }
    }

    pub fn trivial() -> Self {
        Self::from_parts(1, vec![0], 0)
    }

    fn check_identity(&self) -> Result<()> {
        let e = self.identity;
        for i in self.elements() {
            if self.mul(e, i) != i || self.mul(i, e) != i {
                return Err(Error::BadIdentity(i));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        match first_nonassociative(self.order, &self.table) {
            Some((i, j, k)) => Err(Error::NonAssociative { i, j, k }),
            None => Ok(()),
        }
    }

    /// Re-runs the full associativity and identity checks.
    pub fn verify(&self) -> Result<()> {
        self.check_identity()?;
        self.check_associative()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn elements(&self) -> Range<usize> {
        0..self.order
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.elements().map(|a| self.row(a).to_vec()).collect()
    }

    /// `a^k`, with `a^0` the identity.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.identity, |acc, x| self.mul(acc, x))
    }

    #[inline]
    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    /// Index and period of the monogenic subsemigroup generated by `a`:
    /// the least `i >= 1`, `p >= 1` with `a^(i+p) = a^i`.
    pub fn index_period(&self, a: usize) -> (usize, usize) {
        let mut seen = vec![usize::MAX; self.order];
        let mut x = a;
        let mut k = 1;
        loop {
            if seen[x] != usize::MAX {
                let i = seen[x];
                return (i, k - i);
            }
            seen[x] = k;
            x = self.mul(x, a);
            k += 1;
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether `self` and `other` are the same table with the same identity.
    pub fn same_as(&self, other: &FiniteMonoid) -> bool {
        Arc::ptr_eq(&self.table, &other.table)
            || (self.order == other.order
                && self.identity == other.identity
                && self.table == other.table)
    }
}

/// Lexicographically first triple violating associativity, if any.
pub(crate) fn first_nonassociative(n: usize, t: &[usize]) -> Option<(usize, usize, usize)> {
    for i in 0..n {
        for j in 0..n {
            let ij = t[i * n + j];
            for k in 0..n {
                if t[ij * n + k] != t[i * n + t[j * n + k]] {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

impl PartialEq for FiniteMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for FiniteMonoid {}

impl fmt::Debug for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteMonoid(order {}, identity {})",
            self.order, self.identity
        )?;
        if self.order <= 8 {
            write!(f, " {:?}", self.rows())?;
        }
        Ok(())
    }
}

impl fmt::Display for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = (self.order.max(2) - 1).to_string().len();
        for a in self.elements() {
            let row: Vec<String> = self.row(a).iter().map(|x| format!("{x:>w$}")).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A finite semigroup carried as a monoid.
///
/// When `identity_adjoined` is set the carrier's identity is not an element of
/// the semigroup; it always sits at the last index, so the original elements
/// are `0..size()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    monoid: FiniteMonoid,
    identity_adjoined: bool,
}

impl FiniteSemigroup {
    /// Validates a semigroup table. If the table has a two-sided identity it
    /// is used; otherwise a fresh identity is appended.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("table has no rows".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(n, flat)
    }

    pub fn from_flat(n: usize, flat: Vec<usize>) -> Result<Self> {
        if n == 0 || flat.len() != n * n {
            return Err(Error::MalformedTable("table is not square".into()));
        }
        if let Some(pos) = flat.iter().position(|&x| x >= n) {
            return Err(Error::MalformedTable(format!(
                "entry ({}, {}) = {} out of range",
                pos / n,
                pos % n,
                flat[pos]
            )));
        }
        if let Some((i, j, k)) = first_nonassociative(n, &flat) {
            return Err(Error::NonAssociative { i, j, k });
        }
        Ok(Self::from_flat_unchecked(n, &flat))
    }

    /// Wraps an associative table, adjoining an identity when none exists.
    pub(crate) fn from_flat_unchecked(n: usize, flat: &[usize]) -> Self {
        if let Some(e) = find_identity(n, flat) {
            return FiniteSemigroup {
                monoid: FiniteMonoid::from_parts(n, flat.to_vec(), e),
                identity_adjoined: false,
            };
        }
        let m = n + 1;
        let mut t = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                t[i * m + j] = if i == n {
                    j
                } else if j == n {
                    i
                } else {
                    flat[i * n + j]
                };
            }
        }
        FiniteSemigroup {
            monoid: FiniteMonoid::from_parts(m, t, n),
            identity_adjoined: true,
        }
    }

    /// Views a monoid as a semigroup (its identity is an original element).
    pub fn from_monoid(monoid: FiniteMonoid) -> Self {
        FiniteSemigroup {
            monoid,
            identity_adjoined: false,
        }
    }

    /// Rebuilds from a carrier monoid and flag, checking the invariant.
    pub fn from_carrier(monoid: FiniteMonoid, identity_adjoined: bool) -> Result<Self> {
        if identity_adjoined {
            let n = monoid.order() - 1;
            if monoid.identity() != n {
                return Err(Error::MalformedTable(
                    "adjoined identity must be the last element".into(),
                ));
            }
            let sub: Vec<usize> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| monoid.mul(i, j))
                .collect();
            if sub.iter().any(|&x| x >= n) {
                return Err(Error::NotClosed(
                    "original elements multiply onto the adjoined identity".into(),
                ));
            }
            if n > 0 && find_identity(n, &sub).is_some() {
                return Err(Error::MalformedTable(
                    "identity flagged as adjoined but an original element is an identity".into(),
                ));
            }
        }
        Ok(FiniteSemigroup {
            monoid,
            identity_adjoined,
        })
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn into_monoid(self) -> FiniteMonoid {
        self.monoid
    }

    pub fn identity_adjoined(&self) -> bool {
        self.identity_adjoined
    }

    /// Number of original elements.
    pub fn size(&self) -> usize {
        self.monoid.order() - usize::from(self.identity_adjoined)
    }

    pub fn originals(&self) -> Range<usize> {
        0..self.size()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.monoid.mul(a, b)
    }

    /// The multiplication table restricted to the original elements.
    pub fn table(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        self.originals()
            .map(|a| self.monoid.row(a)[..n].to_vec())
            .collect()
    }

    pub fn flat_table(&self) -> Vec<usize> {
        self.table().concat()
    }
}

pub(crate) fn find_identity(n: usize, flat: &[usize]) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|i| flat[e * n + i] == i && flat[i * n + e] == i))
}

/// A finite group: a monoid in which every element is invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    monoid: FiniteMonoid,
    inverse: Arc<[usize]>,
}

impl FiniteGroup {
    pub fn new(monoid: FiniteMonoid) -> Result<Self> {
        let e = monoid.identity();
        let mut inverse = vec![usize::MAX; monoid.order()];
        for a in monoid.elements() {
            let row = monoid.row(a);
            match row.iter().position(|&x| x == e) {
                Some(b) if monoid.mul(b, a) == e => inverse[a] = b,
                _ => return Err(Error::NotAGroup(a)),
            }
        }
        Ok(FiniteGroup {
            monoid,
            inverse: inverse.into(),
        })
    }

    pub fn from_table(rows: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        Self::new(FiniteMonoid::new(rows, identity)?)
    }

    pub fn trivial() -> Self {
        Self::new(FiniteMonoid::trivial()).expect("trivial monoid is a group")
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn into_monoid(self) -> FiniteMonoid {
        self.monoid
    }

    /// Order of the element `a` in the group.
    pub fn element_order(&self, a: usize) -> usize {
        let e = self.monoid.identity();
        let mut x = a;
        let mut k = 1;
        while x != e {
            x = self.monoid.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.monoid.is_commutative()
    }
}

impl Deref for FiniteGroup {
    type Target = FiniteMonoid;

    fn deref(&self) -> &FiniteMonoid {
        &self.monoid
    }
}
