//! Standard small monoids, semigroups and groups.

use std::fmt;
use std::str::FromStr;

use crate::algebra::construct::check_cap;
use crate::algebra::{direct_power, FiniteGroup, FiniteMonoid, FiniteSemigroup, Limits};
use crate::error::{Error, Result};

/// A named family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic(usize),
    ElementaryAbelian { p: usize, k: usize },
    LeftZero(usize),
    RightZero(usize),
    ChainSemilattice(usize),
    Monogenic { index: usize, period: usize },
    ZeroAdjoined(Box<Family>),
    FullTransformation(usize),
}

impl Family {
    /// Number of elements of the family member (not counting an adjoined identity).
    pub fn size(&self) -> u128 {
        match self {
            Family::Cyclic(n)
            | Family::LeftZero(n)
            | Family::RightZero(n)
            | Family::ChainSemilattice(n) => *n as u128,
            Family::ElementaryAbelian { p, k } => (*p as u128).saturating_pow(*k as u32),
            Family::Monogenic { index, period } => (*index + *period - 1) as u128,
            Family::ZeroAdjoined(inner) => inner.size() + 1,
            Family::FullTransformation(n) => (*n as u128).saturating_pow(*n as u32),
        }
    }

    /// Builds the family member, enforcing the size cap.
    pub fn build(&self, limits: &Limits) -> Result<FiniteSemigroup> {
        check_cap(self.size() + 1, limits)?;
        Ok(match self {
            Family::Cyclic(n) => FiniteSemigroup::from_monoid(build_cyclic(*n)?),
            Family::ElementaryAbelian { p, k } => {
                FiniteSemigroup::from_monoid(elementary_abelian_in(*p, *k, limits)?.into_monoid())
            }
            Family::LeftZero(n) => build_left_zero(*n)?,
            Family::RightZero(n) => build_right_zero(*n)?,
            Family::ChainSemilattice(n) => build_chain(*n)?,
            Family::Monogenic { index, period } => build_monogenic(*index, *period)?,
            Family::ZeroAdjoined(inner) => {
                let base = inner.build(limits)?;
                zero_adjoined_semigroup(&base)
            }
            Family::FullTransformation(n) => {
                FiniteSemigroup::from_monoid(build_full_transformation(*n)?)
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "cyclic({n})"),
            Family::ElementaryAbelian { p, k } => write!(f, "elementary_abelian({p},{k})"),
            Family::LeftZero(n) => write!(f, "left_zero({n})"),
            Family::RightZero(n) => write!(f, "right_zero({n})"),
            Family::ChainSemilattice(n) => write!(f, "chain_semilattice({n})"),
            Family::Monogenic { index, period } => write!(f, "monogenic({index},{period})"),
            Family::ZeroAdjoined(inner) => write!(f, "zero_adjoined({inner})"),
            Family::FullTransformation(n) => write!(f, "full_transformation({n})"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name(args)` as printed by `Display`, e.g. `monogenic(2,1)` or
    /// `zero_adjoined(cyclic(2))`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], &s[i + 1..s.len() - 1]),
            _ => return Err(Error::UnknownFamily(s.to_string())),
        };
        if name == "zero_adjoined" {
            return Ok(Family::ZeroAdjoined(Box::new(args.parse()?)));
        }
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::UnknownFamily(s.to_string()))?;
        family_from_parts(name, &nums)
    }
}

/// Looks a family up by name and numeric arguments.
pub fn family_from_parts(name: &str, args: &[usize]) -> Result<Family> {
    let one = |f: fn(usize) -> Family| match args {
        [n] => Ok(f(*n)),
        _ => Err(Error::InvalidArgument(format!("{name} takes one argument"))),
    };
    match name {
        "cyclic" => one(Family::Cyclic),
        "left_zero" => one(Family::LeftZero),
        "right_zero" => one(Family::RightZero),
        "chain_semilattice" => one(Family::ChainSemilattice),
        "full_transformation" => one(Family::FullTransformation),
        "elementary_abelian" => match args {
            [p, k] => Ok(Family::ElementaryAbelian { p: *p, k: *k }),
            _ => Err(Error::InvalidArgument(
                "elementary_abelian takes (p, k)".into(),
            )),
        },
        "monogenic" => match args {
            [i, p] => Ok(Family::Monogenic {
                index: *i,
                period: *p,
            }),
            _ => Err(Error::InvalidArgument(
                "monogenic takes (index, period)".into(),
            )),
        },
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!("{what} must be positive")));
    }
    check_cap(n as u128, &Limits::default())
}

/// `Z/n` under addition, element `k` at index `k`.
pub fn cyclic(n: usize) -> Result<FiniteMonoid> {
    positive(n, "cyclic order")?;
    build_cyclic(n)
}

pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    FiniteGroup::new(cyclic(n)?)
}

fn build_cyclic(n: usize) -> Result<FiniteMonoid> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "cyclic order must be positive".into(),
        ));
    }
    let flat = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i + j) % n))
        .collect();
    Ok(FiniteMonoid::from_parts(n, flat, 0))
}

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `(Z/p)^k` with tuples encoded big-endian in base `p`.
pub fn elementary_abelian(p: usize, k: usize) -> Result<FiniteGroup> {
    elementary_abelian_in(p, k, &Limits::default())
}

fn elementary_abelian_in(p: usize, k: usize, limits: &Limits) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let m = direct_power(&build_cyclic(p)?, k, limits)?;
    FiniteGroup::new(m)
}

/// `x·y = x` on `n` elements.
pub fn left_zero(n: usize) -> Result<FiniteSemigroup> {
    positive(n, "size")?;
    build_left_zero(n)
}

fn build_left_zero(n: usize) -> Result<FiniteSemigroup> {
    let flat: Vec<usize> = (0..n).flat_map(|i| std::iter::repeat_n(i, n)).collect();
    Ok(FiniteSemigroup::from_flat_unchecked(n, &flat))
}

/// `x·y = y` on `n` elements.
pub fn right_zero(n: usize) -> Result<FiniteSemigroup> {
    positive(n, "size")?;
    build_right_zero(n)
}

fn build_right_zero(n: usize) -> Result<FiniteSemigroup> {
    let flat: Vec<usize> = (0..n).flat_map(|_| 0..n).collect();
    Ok(FiniteSemigroup::from_flat_unchecked(n, &flat))
}

/// The chain `0 < 1 < .. < n-1` under `min`; `n-1` is the identity.
pub fn chain_semilattice(n: usize) -> Result<FiniteSemigroup> {
    positive(n, "size")?;
    build_chain(n)
}

fn build_chain(n: usize) -> Result<FiniteSemigroup> {
    let flat: Vec<usize> = (0..n).flat_map(|i| (0..n).map(move |j| i.min(j))).collect();
    Ok(FiniteSemigroup::from_flat_unchecked(n, &flat))
}

/// `⟨s : s^(index+period) = s^index⟩`; `s^k` sits at index `k-1`.
pub fn monogenic(index: usize, period: usize) -> Result<FiniteSemigroup> {
    positive(index, "index")?;
    positive(period, "period")?;
    build_monogenic(index, period)
}

fn build_monogenic(index: usize, period: usize) -> Result<FiniteSemigroup> {
    if index == 0 || period == 0 {
        return Err(Error::InvalidArgument(
            "index and period must be positive".into(),
        ));
    }
    let n = index + period - 1;
    let reduce = |c: usize| {
        if c < index + period {
            c
        } else {
            index + (c - index) % period
        }
    };
    let flat: Vec<usize> = (1..=n)
        .flat_map(|a| (1..=n).map(move |b| reduce(a + b) - 1))
        .collect();
    Ok(FiniteSemigroup::from_flat_unchecked(n, &flat))
}

/// `M ∪ {0}` with the new absorbing element at the last index.
pub fn zero_adjoined(m: &FiniteMonoid) -> FiniteMonoid {
    let n = m.order();
    let k = n + 1;
    let mut flat = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            flat.push(if i == n || j == n { n } else { m.mul(i, j) });
        }
    }
    FiniteMonoid::from_parts(k, flat, m.identity())
}

/// Adjoins a zero to the original elements of a semigroup; an adjoined
/// identity stays adjoined and moves to the last index.
fn zero_adjoined_semigroup(s: &FiniteSemigroup) -> FiniteSemigroup {
    if !s.identity_adjoined() {
        return FiniteSemigroup::from_monoid(zero_adjoined(s.monoid()));
    }
    let n = s.size();
    let zero = n;
    let flat: Vec<usize> = (0..=n)
        .flat_map(|i| (0..=n).map(move |j| (i, j)))
        .map(|(i, j)| {
            if i == zero || j == zero {
                zero
            } else {
                s.mul(i, j)
            }
        })
        .collect();
    FiniteSemigroup::from_flat_unchecked(n + 1, &flat)
}

/// All maps `{0..n-1} -> {0..n-1}` in lexicographic order of image tuples,
/// composed left to right: `x(fg) = (xf)g`.
pub fn full_transformation(n: usize) -> Result<FiniteMonoid> {
    positive(n, "degree")?;
    check_cap((n as u128).saturating_pow(n as u32), &Limits::default())?;
    build_full_transformation(n)
}

fn build_full_transformation(n: usize) -> Result<FiniteMonoid> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let size = n.pow(n as u32);
    let decode = |mut z: usize| {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = z % n;
            z /= n;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().fold(0, |acc, &x| acc * n + x);
    let maps: Vec<Vec<usize>> = (0..size).map(decode).collect();
    let mut flat = Vec::with_capacity(size * size);
    for f in &maps {
        for g in &maps {
            let fg: Vec<usize> = f.iter().map(|&x| g[x]).collect();
            flat.push(encode(&fg));
        }
    }
    let id = encode(&(0..n).collect::<Vec<_>>());
    Ok(FiniteMonoid::from_parts(size, flat, id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greens::classify;

    #[test]
    fn cyclic_one_is_trivial() {
        assert_eq!(cyclic(1).unwrap(), FiniteMonoid::trivial());
    }

    #[test]
    fn left_zero_two() {
        let lz = left_zero(2).unwrap();
        assert_eq!(lz.table(), vec![vec![0, 0], vec![1, 1]]);
        assert!(lz.originals().all(|x| lz.monoid().is_idempotent(x)));
    }

    #[test]
    fn monogenic_two_one() {
        let s = monogenic(2, 1).unwrap();
        assert_eq!(s.size(), 2);
        // s·s = s², s²·s = s²
        assert_eq!(s.mul(0, 0), 1);
        assert_eq!(s.mul(1, 0), 1);
        assert!(!classify(&s).is_completely_regular);
    }

    #[test]
    fn monogenic_relation_with_minimal_index() {
        for (i, p) in [(1, 3), (2, 2), (3, 1), (2, 3)] {
            let s = monogenic(i, p).unwrap();
            let m = s.monoid();
            assert_eq!(m.index_period(0), (i, p));
        }
    }

    #[test]
    fn full_transformation_two() {
        let t2 = full_transformation(2).unwrap();
        assert_eq!(t2.order(), 4);
        // maps as (f(0), f(1)): 0 = const 0, 1 = id, 2 = swap, 3 = const 1
        assert_eq!(t2.identity(), 1);
        assert_eq!(t2.mul(2, 2), 1);
        assert_eq!(t2.mul(0, 2), 3);
        assert_eq!(t2.mul(2, 0), 0);
    }

    #[test]
    fn names_round_trip() {
        for s in [
            "cyclic(4)",
            "monogenic(2,1)",
            "zero_adjoined(cyclic(2))",
            "elementary_abelian(2,3)",
        ] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!(matches!(
            "nope(3)".parse::<Family>(),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn caps_apply() {
        let l = Limits {
            size_cap: 100,
            ..Limits::default()
        };
        assert!(matches!(
            Family::FullTransformation(4).build(&l),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
