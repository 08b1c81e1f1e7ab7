//! The Henckell–Schützenberger expansion of a generated finite monoid.
//!
//! A word `w` is recorded by its factorization signature, the set of pairs
//! `([u], [v])` over all splittings `w = uv`. Two words are identified when
//! their signatures agree; the classes form a finite monoid with a natural
//! map onto `M`.

use serde::Serialize;

use crate::algebra::{closure_mask, generate, FiniteMonoid, Homomorphism, Limits};
use crate::error::{Error, Result};

/// A factorization signature with its value `m = u·v` for any pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExpansionElement {
    /// Sorted, without repeats.
    pub pairs: Vec<(usize, usize)>,
    pub m: usize,
}

impl ExpansionElement {
    pub fn identity(m: &FiniteMonoid) -> Self {
        let one = m.identity();
        ExpansionElement {
            pairs: vec![(one, one)],
            m: one,
        }
    }

    /// The signature of a single letter with value `x`.
    pub fn letter(m: &FiniteMonoid, x: usize) -> Self {
        let one = m.identity();
        let mut pairs = vec![(one, x), (x, one)];
        pairs.sort_unstable();
        pairs.dedup();
        ExpansionElement { pairs, m: x }
    }

    /// `(F, m)(F′, m′) = ({(u, v·m′)} ∪ {(m·u′, v′)}, m·m′)`.
    pub fn mul(&self, other: &Self, m: &FiniteMonoid) -> Self {
        let mut pairs: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .map(|&(u, v)| (u, m.mul(v, other.m)))
            .chain(other.pairs.iter().map(|&(u, v)| (m.mul(self.m, u), v)))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        ExpansionElement {
            pairs,
            m: m.mul(self.m, other.m),
        }
    }

    /// Checks the element invariants: `(1, m)` and `(m, 1)` are present and
    /// every pair multiplies out to `m`.
    pub fn is_consistent(&self, m: &FiniteMonoid) -> bool {
        let one = m.identity();
        self.pairs.binary_search(&(one, self.m)).is_ok()
            && self.pairs.binary_search(&(self.m, one)).is_ok()
            && self.pairs.iter().all(|&(u, v)| m.mul(u, v) == self.m)
    }
}

/// A labelled generating map `X → M`.
pub type Generators = [(char, usize)];

#[derive(Clone, Debug)]
pub struct Expansion {
    pub exp: FiniteMonoid,
    /// Signature of each element of `exp`.
    pub elements: Vec<ExpansionElement>,
    pub eta: Homomorphism,
    /// Index in `exp` of each generator's class.
    pub gen_lift: Vec<(char, usize)>,
}

pub fn henckell_expansion(
    m: &FiniteMonoid,
    gens: &Generators,
    limits: &Limits,
) -> Result<Expansion> {
    let values: Vec<usize> = gens.iter().map(|&(_, x)| x).collect();
    if let Some(&bad) = values.iter().find(|&&x| x >= m.order()) {
        return Err(Error::InvalidArgument(format!(
            "generator value {bad} out of range"
        )));
    }
    let reached = closure_mask(m, &values).iter().filter(|&&b| b).count();
    if reached != m.order() {
        return Err(Error::GeneratorsDontGenerate {
            reached,
            order: m.order(),
        });
    }
    let letters: Vec<ExpansionElement> = values
        .iter()
        .map(|&x| ExpansionElement::letter(m, x))
        .collect();
    let (elements, exp) = generate(
        ExpansionElement::identity(m),
        &letters,
        |a, b| a.mul(b, m),
        limits,
    )?;
    let eta = Homomorphism::new(&exp, m, elements.iter().map(|e| e.m).collect())?;
    let gen_lift = gens
        .iter()
        .zip(&letters)
        .map(|(&(c, _), l)| {
            (
                c,
                elements
                    .iter()
                    .position(|e| e == l)
                    .expect("generators are reached"),
            )
        })
        .collect();
    Ok(Expansion {
        exp,
        elements,
        eta,
        gen_lift,
    })
}

fn letter_values(m: &FiniteMonoid, gens: &Generators, w: &str) -> Result<Vec<usize>> {
    w.chars()
        .map(|c| {
            gens.iter()
                .find(|&&(l, _)| l == c)
                .map(|&(_, x)| x)
                .filter(|&x| x < m.order())
                .ok_or(Error::UnknownLetter(c))
        })
        .collect()
}

/// The value `[w]` of a word in `M`.
pub fn evaluate(m: &FiniteMonoid, gens: &Generators, w: &str) -> Result<usize> {
    Ok(m.product(letter_values(m, gens, w)?))
}

/// The signature of `w` computed from all `|w| + 1` factorizations.
pub fn word_signature(m: &FiniteMonoid, gens: &Generators, w: &str) -> Result<ExpansionElement> {
    let xs = letter_values(m, gens, w)?;
    let mut prefix = vec![m.identity()];
    for &x in &xs {
        prefix.push(m.mul(*prefix.last().unwrap(), x));
    }
    let mut suffix = vec![m.identity(); xs.len() + 1];
    for i in (0..xs.len()).rev() {
        suffix[i] = m.mul(xs[i], suffix[i + 1]);
    }
    let mut pairs: Vec<(usize, usize)> =
        prefix.iter().copied().zip(suffix.iter().copied()).collect();
    pairs.sort_unstable();
    pairs.dedup();
    Ok(ExpansionElement {
        pairs,
        m: prefix[xs.len()],
    })
}

/// Verdict for one idempotent of the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberVerdict {
    pub idempotent: usize,
    pub fiber: Vec<usize>,
    pub aperiodic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AperiodicReport {
    pub fibers: Vec<FiberVerdict>,
}

impl AperiodicReport {
    pub fn holds(&self) -> bool {
        self.fibers.iter().all(|f| f.aperiodic)
    }
}

/// Tests whether every idempotent fibre `h⁻¹(e)` is aperiodic: each `x` in
/// it has `xⁿ = xⁿ⁺¹` for some `n`.
pub fn is_aperiodic_morphism(h: &Homomorphism) -> AperiodicReport {
    let src = h.source();
    let fibers = h
        .target()
        .idempotents()
        .into_iter()
        .map(|e| {
            let fiber = h.fiber(e);
            let aperiodic = fiber.iter().all(|&x| src.index_period(x).1 == 1);
            FiberVerdict {
                idempotent: e,
                fiber,
                aperiodic,
            }
        })
        .collect();
    AperiodicReport { fibers }
}

/// A factorization `w^k = w^k1 · x · y · w^k2` with `w = xy`,
/// `[w^k1 x] = [w]` and `[y w^k2] = [w]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationWitness {
    pub k1: usize,
    pub x: String,
    pub y: String,
    pub k2: usize,
}

/// Finds a witness when `w²` and `w^k` have the same signature (`k ≥ 4`).
///
/// Cut points are scanned from the right end of `w^k` leftwards, with `x`
/// nonempty, so the witness with the largest `k1` is returned.
pub fn factorization_witness(
    m: &FiniteMonoid,
    gens: &Generators,
    w: &str,
    k: usize,
) -> Result<FactorizationWitness> {
    if k < 4 {
        return Err(Error::InvalidArgument("k must be at least 4".into()));
    }
    if w.is_empty() {
        return Err(Error::InvalidArgument("w must be nonempty".into()));
    }
    let w2 = word_signature(m, gens, &w.repeat(2))?;
    let wk = word_signature(m, gens, &w.repeat(k))?;
    if w2 != wk {
        return Err(Error::HypothesisFails { k });
    }
    let letters: Vec<char> = w.chars().collect();
    let value = evaluate(m, gens, w)?;
    for k1 in (0..k).rev() {
        for j in (1..=letters.len()).rev() {
            let x: String = letters[..j].iter().collect();
            let y: String = letters[j..].iter().collect();
            let k2 = k - 1 - k1;
            let left = evaluate(m, gens, &(w.repeat(k1) + &x))?;
            let right = evaluate(m, gens, &(y.clone() + &w.repeat(k2)))?;
            if left == value && right == value {
                return Ok(FactorizationWitness { k1, x, y, k2 });
            }
        }
    }
    Err(Error::NoWitness { k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::family;
    use crate::greens::classify;
    use std::collections::HashMap;

    fn lim() -> Limits {
        Limits::default()
    }

    // oracle: classes of words up to length `len` by directly computed signature
    fn word_classes(m: &FiniteMonoid, gens: &Generators, len: usize) -> usize {
        let mut classes: HashMap<ExpansionElement, ()> = HashMap::new();
        let mut words = vec![String::new()];
        for _ in 0..=len {
            let mut next = Vec::new();
            for w in &words {
                classes.insert(word_signature(m, gens, w).unwrap(), ());
                for &(c, _) in gens {
                    next.push(format!("{w}{c}"));
                }
            }
            words = next;
        }
        classes.len()
    }

    #[test]
    fn trivial_monoid() {
        let t = FiniteMonoid::trivial();
        let e = henckell_expansion(&t, &[], &lim()).unwrap();
        assert_eq!(e.exp.order(), 1);
    }

    #[test]
    fn z2_on_one_generator() {
        let z2 = family::cyclic(2).unwrap();
        let gens = [('a', 1)];
        let e = henckell_expansion(&z2, &gens, &lim()).unwrap();
        assert_eq!(e.exp.order(), 3);
        assert_eq!(word_classes(&z2, &gens, 8), 3);
        let a2 = word_signature(&z2, &gens, "aa").unwrap();
        let idx = e.elements.iter().position(|x| *x == a2).unwrap();
        assert_eq!(e.eta.apply(idx), 0);
        assert_eq!(
            word_signature(&z2, &gens, "aaa").unwrap(),
            word_signature(&z2, &gens, "a").unwrap()
        );
        let report = is_aperiodic_morphism(&e.eta);
        assert!(report.holds());
        assert_eq!(report.fibers[0].fiber.len(), 2);
    }

    #[test]
    fn left_zero_with_identity() {
        let lz = family::left_zero(2).unwrap();
        let gens = [('a', 0), ('b', 1)];
        let e = henckell_expansion(lz.monoid(), &gens, &lim()).unwrap();
        assert!(e.eta.is_surjective());
        assert_eq!(e.exp.order(), word_classes(lz.monoid(), &gens, 6));
        assert!(e.elements.iter().all(|x| x.is_consistent(lz.monoid())));
    }

    #[test]
    fn signatures() {
        let z2 = family::cyclic(2).unwrap();
        let gens = [('a', 1)];
        assert_eq!(
            word_signature(&z2, &gens, "").unwrap(),
            ExpansionElement::identity(&z2)
        );
        assert_eq!(
            word_signature(&z2, &gens, "a").unwrap().pairs,
            vec![(0, 1), (1, 0)]
        );
        assert_eq!(
            word_signature(&z2, &gens, "ab"),
            Err(Error::UnknownLetter('b'))
        );
    }

    #[test]
    fn mod_two_is_not_aperiodic() {
        let h = Homomorphism::new(
            &family::cyclic(4).unwrap(),
            &family::cyclic(2).unwrap(),
            vec![0, 1, 0, 1],
        )
        .unwrap();
        assert!(!is_aperiodic_morphism(&h).holds());
        let band = family::chain_semilattice(3).unwrap();
        assert!(is_aperiodic_morphism(&Homomorphism::identity(band.monoid())).holds());
    }

    #[test]
    fn factorization_examples() {
        let z2 = family::cyclic(2).unwrap();
        let w = factorization_witness(&z2, &[('a', 1)], "a", 4).unwrap();
        assert_eq!(
            w,
            FactorizationWitness {
                k1: 2,
                x: "a".into(),
                y: "".into(),
                k2: 1
            }
        );

        let t = FiniteMonoid::trivial();
        let w = factorization_witness(&t, &[('a', 0)], "a", 4).unwrap();
        assert_eq!(w.k1 + w.k2 + 1, 4);

        let z3 = family::cyclic(3).unwrap();
        assert_eq!(
            factorization_witness(&z3, &[('a', 1)], "a", 6),
            Err(Error::HypothesisFails { k: 6 })
        );
        let w = factorization_witness(&z3, &[('a', 1)], "a", 5).unwrap();
        assert_eq!((w.k1 % 3, w.k2 % 3), (0, 1));
        assert!(classify(&crate::algebra::FiniteSemigroup::from_monoid(z3))
            .group_elements
            .contains(&1));
    }
}
