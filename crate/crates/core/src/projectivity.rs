//! Bounded search for onto maps that do not split.
//!
//! A finite semigroup `S` is projective when every onto map `T ↠ S` from a
//! finite `T` has a section. A bounded search can only refute this; the
//! verdict for a subject with no refutation is named accordingly.

use rayon::prelude::*;
use serde::Serialize;

pub use crate::algebra::enumerate_semigroups;
use crate::algebra::{
    direct_product, family, subsemigroup, FiniteMonoid, FiniteSemigroup, HomKind, Homomorphism,
    Limits,
};
use crate::error::{Error, Result};
use crate::search::{semigroup_closure, HomSearch, Mode};

fn is_adjoined_source(kind: HomKind) -> bool {
    matches!(
        kind,
        HomKind::Semigroup {
            source_adjoined: true,
            ..
        }
    )
}

fn is_adjoined_target(kind: HomKind) -> bool {
    matches!(
        kind,
        HomKind::Semigroup {
            target_adjoined: true,
            ..
        }
    )
}

/// The lexicographically least section `ψ: S → T` of an onto map
/// `φ: T ↠ S`, multiplicative on the original elements of `S`.
pub fn split_search(phi: &Homomorphism, budget: u128) -> Result<Option<Homomorphism>> {
    if !phi.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let (t, s) = (phi.source(), phi.target());
    let s_originals = phi.target_originals().len();
    let (t_adj, s_adj) = (
        is_adjoined_source(phi.kind()),
        is_adjoined_target(phi.kind()),
    );
    let mut candidates: Vec<Vec<usize>> = (0..s.order()).map(|x| phi.fiber(x)).collect();
    if s_adj {
        candidates[s.identity()] = vec![t.identity()];
    }
    let mode = Mode::Semigroup {
        originals: s_originals,
        adjoined: s_adj,
    };
    let found = HomSearch::new(s, t, mode, candidates).first(budget)?;
    Ok(found.map(|map| {
        Homomorphism::from_parts(
            s,
            t,
            map,
            HomKind::Semigroup {
                source_adjoined: s_adj,
                target_adjoined: t_adj,
            },
        )
    }))
}

/// Every semigroup map `T → S` onto the original elements of `S`.
///
/// Images are pruned by idempotency, index and period: the image of `t` is
/// idempotent when `t` is, and its index and period are bounded by (and, for
/// the period, divide) those of `t`.
pub fn onto_homomorphisms(
    t: &FiniteSemigroup,
    s: &FiniteSemigroup,
    budget: u128,
) -> Result<Vec<Homomorphism>> {
    let (tm, sm) = (t.monoid(), s.monoid());
    let s_profile: Vec<(bool, usize, usize)> = s
        .originals()
        .map(|x| {
            let (i, p) = sm.index_period(x);
            (sm.is_idempotent(x), i, p)
        })
        .collect();
    let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); tm.order()];
    for x in t.originals() {
        let (i, p) = tm.index_period(x);
        let idem = tm.is_idempotent(x);
        candidates[x] = s
            .originals()
            .filter(|&y| {
                let (yi, yp, ypp) = (s_profile[y].0, s_profile[y].1, s_profile[y].2);
                (!idem || yi) && yp <= i && p % ypp == 0
            })
            .collect();
    }
    if t.identity_adjoined() {
        candidates[tm.identity()] = vec![sm.identity()];
    }
    let mode = Mode::Semigroup {
        originals: t.size(),
        adjoined: t.identity_adjoined(),
    };
    let kind = HomKind::Semigroup {
        source_adjoined: t.identity_adjoined(),
        target_adjoined: s.identity_adjoined(),
    };
    Ok(HomSearch::new(tm, sm, mode, candidates)
        .all(budget)?
        .into_iter()
        .map(|map| Homomorphism::from_parts(tm, sm, map, kind))
        .filter(|h| h.is_surjective())
        .collect())
}

/// Where a cover came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverSource {
    /// The catalog of semigroups of the given order.
    Catalog { order: usize, index: usize },
    /// A subsemigroup of `S × C¹` generated by one element over each element
    /// of `S`, projected onto `S`.
    Stretch,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    NoWitnessUpToBound,
    /// An onto map `phi: cover ↠ S` with no section.
    Witness {
        cover: FiniteSemigroup,
        phi: Homomorphism,
        source: CoverSource,
    },
}

#[derive(Clone, Debug)]
pub struct ProjectivityVerdict {
    pub subject: FiniteSemigroup,
    pub bound: usize,
    pub covers_checked: usize,
    pub outcome: Outcome,
}

impl ProjectivityVerdict {
    pub fn has_witness(&self) -> bool {
        matches!(self.outcome, Outcome::Witness { .. })
    }
}

/// The small monoids `C` used to stretch a subject: for each non-idempotent
/// element with index `i` and period `p`, the monogenic semigroup with index
/// `i + 1` and period `p` (with an identity), and for `p > 1` the cyclic
/// group of order `p²`.
fn stretch_factors(s: &FiniteSemigroup) -> Vec<FiniteMonoid> {
    let m = s.monoid();
    let mut shapes: Vec<(usize, usize)> = s
        .originals()
        .filter(|&x| !m.is_idempotent(x))
        .map(|x| m.index_period(x))
        .collect();
    shapes.sort_unstable();
    shapes.dedup();
    let mut out = Vec::new();
    for (i, p) in shapes {
        out.push(family::monogenic(i + 1, p).expect("positive").into_monoid());
        if p > 1 {
            out.push(family::cyclic(p * p).expect("positive"));
        }
    }
    out
}

/// Covers `T ≤ S × C¹` generated by `{(s, c_s)}` for every choice of `c_s`,
/// each with its first projection.
fn stretch_covers(
    s: &FiniteSemigroup,
    limits: &Limits,
) -> Result<Vec<(FiniteSemigroup, Homomorphism)>> {
    let mut out = Vec::new();
    for c in stretch_factors(s) {
        let prod = direct_product(s.monoid(), &c, limits)?;
        let n = s.size();
        let choices = (c.order() as u128).saturating_pow(n as u32);
        if choices > limits.budget {
            return Err(Error::BudgetExceeded {
                requested: choices,
                budget: limits.budget,
            });
        }
        for code in 0..choices as usize {
            let gens: Vec<usize> = (0..n)
                .map(|x| prod.pair(x, code / c.order().pow(x as u32) % c.order()))
                .collect();
            let mask = semigroup_closure(&prod.monoid, &gens);
            let elems: Vec<usize> = (0..prod.monoid.order()).filter(|&z| mask[z]).collect();
            let (t, incl) = subsemigroup(&prod.monoid, &elems)?;
            let map: Vec<usize> = t.originals().map(|z| prod.split(incl.apply(z)).0).collect();
            let phi = Homomorphism::semigroup(&t, s, map)?;
            out.push((t, phi));
        }
    }
    Ok(out)
}

/// Searches covers of `S` for one that does not split: first the catalog
/// semigroups of order `|S|..=bound` (at most 4) with all their onto maps,
/// then the stretch covers.
pub fn projective_up_to_bound(
    s: &FiniteSemigroup,
    bound: usize,
    limits: &Limits,
) -> Result<ProjectivityVerdict> {
    let mut checked = 0;
    let verdict = |outcome, checked| ProjectivityVerdict {
        subject: s.clone(),
        bound,
        covers_checked: checked,
        outcome,
    };
    for order in s.size()..=bound.min(4) {
        for (index, t) in enumerate_semigroups(order)?.into_iter().enumerate() {
            for phi in onto_homomorphisms(&t, s, limits.budget)? {
                checked += 1;
                if split_search(&phi, limits.budget)?.is_none() {
                    let source = CoverSource::Catalog { order, index };
                    return Ok(verdict(
                        Outcome::Witness {
                            cover: t,
                            phi,
                            source,
                        },
                        checked,
                    ));
                }
            }
        }
    }
    for (t, phi) in stretch_covers(s, limits)? {
        checked += 1;
        if split_search(&phi, limits.budget)?.is_none() {
            let source = CoverSource::Stretch;
            return Ok(verdict(
                Outcome::Witness {
                    cover: t,
                    phi,
                    source,
                },
                checked,
            ));
        }
    }
    Ok(verdict(Outcome::NoWitnessUpToBound, checked))
}

/// Status of one subject in a band scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanStatus {
    /// Non-band with a witness, or band without one.
    Consistent,
    /// A band that has a non-splitting cover: allowed, bands need not be
    /// projective.
    NonProjectiveBand,
    /// A non-band for which no witness was found within the bound.
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct ScanEntry {
    pub order: usize,
    pub index: usize,
    pub is_band: bool,
    pub verdict: ProjectivityVerdict,
    pub status: ScanStatus,
}

#[derive(Clone, Debug)]
pub struct BandScanReport {
    pub max_order: usize,
    pub bound: usize,
    pub entries: Vec<ScanEntry>,
}

impl BandScanReport {
    /// Every non-band has a witness and every subject without one is a band.
    pub fn consistent_with_theorem(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.status != ScanStatus::Inconclusive)
    }
}

/// Runs [`projective_up_to_bound`] on every catalog semigroup of order at
/// most `max_order` (≤ 4).
pub fn band_theorem_scan(
    max_order: usize,
    bound: usize,
    limits: &Limits,
) -> Result<BandScanReport> {
    let mut subjects = Vec::new();
    for order in 1..=max_order {
        for (index, s) in enumerate_semigroups(order)?.into_iter().enumerate() {
            subjects.push((order, index, s));
        }
    }
    let entries = subjects
        .into_par_iter()
        .map(|(order, index, s)| {
            let is_band = crate::greens::classify(&s).is_band;
            let verdict = projective_up_to_bound(&s, bound, limits)?;
            let status = match (is_band, verdict.has_witness()) {
                (false, false) => ScanStatus::Inconclusive,
                (true, true) => ScanStatus::NonProjectiveBand,
                _ => ScanStatus::Consistent,
            };
            Ok(ScanEntry {
                order,
                index,
                is_band,
                verdict,
                status,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BandScanReport {
        max_order,
        bound,
        entries,
    })
}
