use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use crate::algebra::{FiniteGroup, FiniteMonoid, FiniteSemigroup};
use crate::error::{Error, Result};

/// Which laws a [`Homomorphism`] was validated against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum HomKind {
    /// Multiplicative on every pair and identity-preserving.
    Monoid,
    /// Multiplicative on original elements only. An adjoined source identity
    /// is sent to the target identity; identities are otherwise unconstrained.
    Semigroup {
        source_adjoined: bool,
        target_adjoined: bool,
    },
}

/// A validated structure-preserving map between two finite monoids.
///
/// Composition follows the apply-left-then-right convention:
/// `f.compose(&g)` sends `s` to `g(f(s))`.
#[derive(Clone)]
pub struct Homomorphism {
    source: FiniteMonoid,
    target: FiniteMonoid,
    map: Arc<[usize]>,
    kind: HomKind,
    surjective: bool,
    injective: bool,
}

impl Homomorphism {
    /// Validates a monoid homomorphism.
    pub fn new(source: &FiniteMonoid, target: &FiniteMonoid, map: Vec<usize>) -> Result<Self> {
        check_len(&map, source.order(), target.order())?;
        check_multiplicative(source, target, &map, source.elements())?;
        if map[source.identity()] != target.identity() {
            return Err(Error::IdentityNotPreserved);
        }
        Ok(Self::from_parts(source, target, map, HomKind::Monoid))
    }

    /// Validates a map that is multiplicative on every pair but need not
    /// preserve identities, e.g. an embedding onto a local submonoid.
    pub fn relaxed(source: &FiniteMonoid, target: &FiniteMonoid, map: Vec<usize>) -> Result<Self> {
        check_len(&map, source.order(), target.order())?;
        check_multiplicative(source, target, &map, source.elements())?;
        Ok(Self::from_parts(
            source,
            target,
            map,
            HomKind::Semigroup {
                source_adjoined: false,
                target_adjoined: false,
            },
        ))
    }

    /// Validates a semigroup homomorphism. `map` may list images of the
    /// original elements only; an adjoined source identity is then sent to the
    /// target identity.
    pub fn semigroup(
        source: &FiniteSemigroup,
        target: &FiniteSemigroup,
        mut map: Vec<usize>,
    ) -> Result<Self> {
        let src = source.monoid();
        let tgt = target.monoid();
        if source.identity_adjoined() && map.len() == source.size() {
            map.push(tgt.identity());
        }
        check_len(&map, src.order(), tgt.order())?;
        if source.identity_adjoined() && map[src.identity()] != tgt.identity() {
            return Err(Error::IdentityNotPreserved);
        }
        if let Some(s) = source.originals().find(|&s| map[s] >= target.size()) {
            return Err(Error::LeavesSemigroup(s));
        }
        check_multiplicative(src, tgt, &map, source.originals())?;
        Ok(Self::from_parts(
            src,
            tgt,
            map,
            HomKind::Semigroup {
                source_adjoined: source.identity_adjoined(),
                target_adjoined: target.identity_adjoined(),
            },
        ))
    }

    pub fn identity(m: &FiniteMonoid) -> Self {
        Self::from_parts(m, m, m.elements().collect(), HomKind::Monoid)
    }

    pub(crate) fn from_parts(
        source: &FiniteMonoid,
        target: &FiniteMonoid,
        map: Vec<usize>,
        kind: HomKind,
    ) -> Self {
        let (src_range, tgt_range) = ranges(source, target, kind);
        let mut hit = vec![false; target.order()];
        let mut injective = true;
        for s in src_range {
            let t = map[s];
            if hit[t] {
                injective = false;
            }
            hit[t] = true;
        }
        let surjective = tgt_range.into_iter().all(|t| hit[t]);
        Homomorphism {
            source: source.clone(),
            target: target.clone(),
            map: map.into(),
            kind,
            surjective,
            injective,
        }
    }

    #[inline]
    pub fn apply(&self, s: usize) -> usize {
        self.map[s]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn source(&self) -> &FiniteMonoid {
        &self.source
    }

    pub fn target(&self) -> &FiniteMonoid {
        &self.target
    }

    pub fn kind(&self) -> HomKind {
        self.kind
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    pub fn is_bijective(&self) -> bool {
        self.surjective && self.injective
    }

    /// Source elements the laws are checked on.
    pub fn source_originals(&self) -> Range<usize> {
        ranges(&self.source, &self.target, self.kind).0
    }

    pub fn target_originals(&self) -> Range<usize> {
        ranges(&self.source, &self.target, self.kind).1
    }

    /// Sorted image of the original source elements.
    pub fn image(&self) -> Vec<usize> {
        let mut img: Vec<usize> = self.source_originals().map(|s| self.map[s]).collect();
        img.sort_unstable();
        img.dedup();
        img
    }

    /// Original source elements mapped to `t`.
    pub fn fiber(&self, t: usize) -> Vec<usize> {
        self.source_originals()
            .filter(|&s| self.map[s] == t)
            .collect()
    }

    /// Apply `self` first, then `next`.
    pub fn compose(&self, next: &Homomorphism) -> Result<Homomorphism> {
        if !self.target.same_as(&next.source) {
            return Err(Error::DomainMismatch);
        }
        let map: Vec<usize> = self.map.iter().map(|&x| next.map[x]).collect();
        let kind = match (self.kind, next.kind) {
            (HomKind::Monoid, HomKind::Monoid) => HomKind::Monoid,
            (a, b) => HomKind::Semigroup {
                source_adjoined: adjoined_source(a),
                target_adjoined: adjoined_target(b),
            },
        };
        Ok(Self::from_parts(&self.source, &next.target, map, kind))
    }

    /// Restricts to a submonoid or subsemigroup given by its inclusion.
    pub fn restrict(&self, inclusion: &Homomorphism) -> Result<Homomorphism> {
        inclusion.compose(self)
    }

    /// Re-asserts the defining laws from scratch.
    pub fn verify(&self) -> Result<()> {
        if self.kind == HomKind::Monoid
            && self.map[self.source.identity()] != self.target.identity()
        {
            return Err(Error::IdentityNotPreserved);
        }
        check_multiplicative(
            &self.source,
            &self.target,
            &self.map,
            self.source_originals(),
        )
    }

    /// Whether two maps agree elementwise on the original source elements.
    pub fn agrees_with(&self, other: &Homomorphism) -> bool {
        self.source.same_as(&other.source)
            && self.target.same_as(&other.target)
            && self.source_originals().all(|s| self.map[s] == other.map[s])
    }

    /// The inverse of a bijective map.
    pub fn inverse(&self) -> Result<Homomorphism> {
        if !self.is_bijective() || self.source.order() != self.target.order() {
            return Err(Error::InvalidArgument("map is not a bijection".into()));
        }
        let mut inv = vec![0; self.target.order()];
        for (s, &t) in self.map.iter().enumerate() {
            inv[t] = s;
        }
        let kind = match self.kind {
            HomKind::Monoid => HomKind::Monoid,
            HomKind::Semigroup {
                source_adjoined,
                target_adjoined,
            } => HomKind::Semigroup {
                source_adjoined: target_adjoined,
                target_adjoined: source_adjoined,
            },
        };
        Ok(Self::from_parts(&self.target, &self.source, inv, kind))
    }
}

fn adjoined_source(k: HomKind) -> bool {
    matches!(
        k,
        HomKind::Semigroup {
            source_adjoined: true,
            ..
        }
    )
}

fn adjoined_target(k: HomKind) -> bool {
    matches!(
        k,
        HomKind::Semigroup {
            target_adjoined: true,
            ..
        }
    )
}

fn ranges(
    source: &FiniteMonoid,
    target: &FiniteMonoid,
    kind: HomKind,
) -> (Range<usize>, Range<usize>) {
    let s = source.order() - usize::from(adjoined_source(kind));
    let t = target.order() - usize::from(adjoined_target(kind));
    (0..s, 0..t)
}

fn check_len(map: &[usize], src: usize, tgt: usize) -> Result<()> {
    if map.len() != src {
        return Err(Error::MapLength {
            got: map.len(),
            expected: src,
        });
    }
    if let Some(&bad) = map.iter().find(|&&t| t >= tgt) {
        return Err(Error::InvalidArgument(format!("image {bad} out of range")));
    }
    Ok(())
}

fn check_multiplicative(
    source: &FiniteMonoid,
    target: &FiniteMonoid,
    map: &[usize],
    domain: Range<usize>,
) -> Result<()> {
    for s in domain.clone() {
        for t in domain.clone() {
            if map[source.mul(s, t)] != target.mul(map[s], map[t]) {
                return Err(Error::NotMultiplicative { s, t });
            }
        }
    }
    Ok(())
}

impl PartialEq for Homomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.source.same_as(&other.source)
            && self.target.same_as(&other.target)
            && self.map == other.map
    }
}

impl Eq for Homomorphism {}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Homomorphism({} -> {}, {:?}, map {:?})",
            self.source.order(),
            self.target.order(),
            self.kind,
            self.map
        )
    }
}

/// Inclusion of a group into its ambient monoid, as a monoid map when the
/// identities agree and as a relaxed map otherwise.
pub(crate) fn inclusion_map(
    sub: &FiniteMonoid,
    ambient: &FiniteMonoid,
    map: Vec<usize>,
) -> Homomorphism {
    let kind = if map[sub.identity()] == ambient.identity() {
        HomKind::Monoid
    } else {
        HomKind::Semigroup {
            source_adjoined: false,
            target_adjoined: false,
        }
    };
    Homomorphism::from_parts(sub, ambient, map, kind)
}

/// The kernel `{a : h(a) = 1}` of a group homomorphism, with its inclusion.
pub fn kernel(h: &Homomorphism) -> Result<(FiniteGroup, Homomorphism)> {
    let e = h.target().identity();
    let elems: Vec<usize> = h.source().elements().filter(|&a| h.apply(a) == e).collect();
    let (sub, incl) = crate::algebra::restrict_to_subset(h.source(), &elems)?;
    let g =
        FiniteGroup::new(sub).map_err(|_| Error::NotASubgroup("kernel is not a group".into()))?;
    Ok((g, incl))
}
