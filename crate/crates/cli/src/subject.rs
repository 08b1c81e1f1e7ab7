//! Naming structures and maps on the command line.
//!
//! A structure argument is, in order of preference: an existing file, a short
//! alias (`z4`, `v4`, `lz2`, `t3`, ...), or a family expression such as
//! `monogenic(2,1)` or `zero_adjoined(cyclic(2))`. A map argument is `id`,
//! `mod`, `triv`, a comma-separated list of images, or a `hom` file.

use std::path::Path;

use mlab::algebra::family::{self, Family};
use mlab::algebra::metacyclic;
use mlab::{FiniteGroup, FiniteMonoid, FiniteSemigroup, Homomorphism, Limits};

use crate::format::{self, TableFile};
use crate::CliError;

/// Aliases and what they stand for, for `--help` and error messages.
pub const ALIASES: &[(&str, &str)] = &[
    ("triv", "the trivial monoid"),
    ("z<n>", "cyclic group of order n"),
    ("v4", "Klein four-group"),
    ("e<p>_<k>", "elementary abelian group of order p^k"),
    ("s3", "symmetric group on three points"),
    ("q8", "quaternion group"),
    ("d<2n>", "dihedral group of order 2n"),
    ("lz<n>", "left-zero semigroup on n elements"),
    ("rz<n>", "right-zero semigroup on n elements"),
    ("ch<n>", "chain semilattice on n elements"),
    ("m<i>_<p>", "monogenic semigroup with index i and period p"),
    ("t<n>", "full transformation monoid of degree n"),
    ("<alias>^0", "the alias with a zero adjoined"),
];

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn number(s: &str) -> Option<usize> {
    (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
        .then(|| s.parse().ok())
        .flatten()
}

fn two_numbers(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once('_')?;
    Some((number(a)?, number(b)?))
}

fn alias(name: &str, limits: &Limits) -> Result<Option<FiniteSemigroup>, CliError> {
    let mon = |m: FiniteMonoid| Ok(Some(FiniteSemigroup::from_monoid(m)));
    if let Some(inner) = name.strip_suffix("^0") {
        return match alias(inner, limits)? {
            Some(s) => mon(family::zero_adjoined(s.monoid())),
            None => Ok(None),
        };
    }
    let build = |f: Family| f.build(limits).map(Some).map_err(CliError::from);
    match name {
        "triv" => return mon(FiniteMonoid::trivial()),
        "v4" => return build(Family::ElementaryAbelian { p: 2, k: 2 }),
        "s3" => return mon(metacyclic(3, 2, 0, 2)?.into_monoid()),
        "q8" => return mon(metacyclic(4, 2, 2, 3)?.into_monoid()),
        _ => {}
    }
    if let Some(n) = name.strip_prefix('d').and_then(number) {
        if n < 2 || n % 2 != 0 {
            return Err(usage(format!("`{name}`: dihedral groups have even order")));
        }
        // ⟨a, b | a^k, b², b⁻¹ab = a⁻¹⟩
        let k = n / 2;
        return mon(metacyclic(k, 2, 0, k - 1)?.into_monoid());
    }
    type Prefixed = (&'static str, fn(usize) -> Family);
    let prefixed: [Prefixed; 5] = [
        ("lz", Family::LeftZero),
        ("rz", Family::RightZero),
        ("ch", Family::ChainSemilattice),
        ("z", Family::Cyclic),
        ("t", Family::FullTransformation),
    ];
    for (prefix, make) in prefixed {
        if let Some(n) = name.strip_prefix(prefix).and_then(number) {
            if n == 0 {
                return Err(usage(format!("`{name}`: order must be positive")));
            }
            return build(make(n));
        }
    }
    if let Some((p, k)) = name.strip_prefix('e').and_then(two_numbers) {
        return build(Family::ElementaryAbelian { p, k });
    }
    if let Some((i, p)) = name.strip_prefix('m').and_then(two_numbers) {
        return build(Family::Monogenic {
            index: i,
            period: p,
        });
    }
    Ok(None)
}

/// Resolves a structure argument.
pub fn resolve(arg: &str, limits: &Limits) -> Result<FiniteSemigroup, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        return match format::load(path)? {
            TableFile::Semigroup(s) => Ok(s),
            TableFile::Hom(_) => Err(usage(format!(
                "`{arg}` is a homomorphism file, expected a monoid"
            ))),
        };
    }
    if let Some(s) = alias(arg, limits)? {
        return Ok(s);
    }
    if arg.contains('(') {
        let f: Family = arg.parse().map_err(|e: mlab::Error| usage(e.to_string()))?;
        return Ok(f.build(limits)?);
    }
    Err(usage(format!(
        "`{arg}` is neither a file, an alias ({}) nor a family expression",
        ALIASES.iter().map(|a| a.0).collect::<Vec<_>>().join(", ")
    )))
}

pub fn resolve_monoid(arg: &str, limits: &Limits) -> Result<FiniteMonoid, CliError> {
    Ok(resolve(arg, limits)?.into_monoid())
}

pub fn resolve_group(arg: &str, limits: &Limits) -> Result<FiniteGroup, CliError> {
    Ok(FiniteGroup::new(resolve_monoid(arg, limits)?)?)
}

/// Resolves a map argument between two already-resolved monoids.
pub fn resolve_map(
    arg: &str,
    source: &FiniteMonoid,
    target: &FiniteMonoid,
) -> Result<Homomorphism, CliError> {
    let (n, t) = (source.order(), target.order());
    let map: Vec<usize> = match arg {
        "id" => {
            if n != t {
                return Err(usage(format!("`id` needs equal orders, got {n} and {t}")));
            }
            (0..n).collect()
        }
        "mod" => (0..n).map(|x| x % t).collect(),
        "triv" => vec![target.identity(); n],
        _ if Path::new(arg).is_file() => match format::load(Path::new(arg))? {
            TableFile::Hom(h) => {
                if (h.source_order, h.target_order) != (n, t) {
                    return Err(usage(format!(
                        "`{arg}` maps order {} to {}, expected {n} to {t}",
                        h.source_order, h.target_order
                    )));
                }
                h.map
            }
            TableFile::Semigroup(_) => {
                return Err(usage(format!("`{arg}` is a monoid file, expected a map")))
            }
        },
        _ => parse_list(arg, t)?,
    };
    if map.len() != n {
        return Err(usage(format!(
            "map `{arg}` has {} images, source has order {n}",
            map.len()
        )));
    }
    Ok(Homomorphism::new(source, target, map)?)
}

/// `0,2,4` or `0 2 4`; every entry below `bound`.
pub fn parse_list(arg: &str, bound: usize) -> Result<Vec<usize>, CliError> {
    arg.split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| match number(s) {
            Some(v) if v < bound => Ok(v),
            _ => Err(usage(format!(
                "`{s}` in `{arg}` is not an index below {bound}"
            ))),
        })
        .collect()
}
