//! Embedding problems for finite groups and the constructions that move
//! them around: weak solutions, pullbacks, obstruction transfer along the
//! Krasner–Kaloujnine embedding, and the monoid analogue.

mod subgroups;
mod transfer;

pub use subgroups::{
    frattini, is_elementary_abelian, is_normal, normal_subgroups, quotient_by_normal,
    saturated_lift, subgroups, ChosenSubgroup, ElementaryPrime, Frattini,
};
pub use transfer::{
    monoid_transfer, subgroup_extension_check, transfer_obstruction, ExtensionReport,
    IdempotentVerdict, MonoidTransfer, Transfer,
};

use crate::algebra::{from_elements, kernel, FiniteGroup, HomKind, Homomorphism, Limits};
use crate::error::{Error, Result};
use crate::search::{HomSearch, Mode};

/// A pair of homomorphisms `φ: G → B`, `α: A ↠ B` into a shared group.
///
/// [`EmbeddingProblem::new`] requires `φ` onto as well; problems produced by
/// [`transfer_obstruction`] keep the original `G`, whose image in the larger
/// `B̃` is only a subgroup, and are built with
/// [`EmbeddingProblem::with_any_phi`].
#[derive(Clone, Debug)]
pub struct EmbeddingProblem {
    pub g: FiniteGroup,
    pub b: FiniteGroup,
    pub a: FiniteGroup,
    pub phi: Homomorphism,
    pub alpha: Homomorphism,
    /// `ker α` with its inclusion into `A`.
    pub k: FiniteGroup,
    pub k_incl: Homomorphism,
}

impl EmbeddingProblem {
    pub fn new(phi: &Homomorphism, alpha: &Homomorphism) -> Result<Self> {
        if !phi.is_surjective() {
            return Err(Error::NotSurjective);
        }
        Self::with_any_phi(phi, alpha)
    }

    pub fn with_any_phi(phi: &Homomorphism, alpha: &Homomorphism) -> Result<Self> {
        if !phi.target().same_as(alpha.target()) {
            return Err(Error::CodomainMismatch(
                "phi and alpha must share a codomain".into(),
            ));
        }
        if !alpha.is_surjective() {
            return Err(Error::NotSurjective);
        }
        let g = FiniteGroup::new(phi.source().clone())?;
        let b = FiniteGroup::new(phi.target().clone())?;
        let a = FiniteGroup::new(alpha.source().clone())?;
        let (k, k_incl) = kernel(alpha)?;
        Ok(EmbeddingProblem {
            g,
            b,
            a,
            phi: phi.clone(),
            alpha: alpha.clone(),
            k,
            k_incl,
        })
    }

    /// Whether `lift` then `α` equals `φ`.
    pub fn is_solved_by(&self, lift: &Homomorphism) -> bool {
        lift.source().same_as(self.g.monoid())
            && lift.target().same_as(self.a.monoid())
            && self
                .g
                .elements()
                .all(|x| self.alpha.apply(lift.apply(x)) == self.phi.apply(x))
    }
}

/// A homomorphism `G → A` lifting `φ` through `α`.
#[derive(Clone, Debug)]
pub struct WeakSolution {
    pub lift: Homomorphism,
}

/// The lexicographically least weak solution, or `None` when there is none.
///
/// Generators of `G` take images in the `α`-fibre over their `φ`-image; the
/// search space is the product of those fibre sizes and must fit in `budget`.
pub fn solve_weak(p: &EmbeddingProblem, budget: u128) -> Result<Option<WeakSolution>> {
    let candidates =
        p.g.elements()
            .map(|x| p.alpha.fiber(p.phi.apply(x)))
            .collect();
    let found =
        HomSearch::new(p.g.monoid(), p.a.monoid(), Mode::Monoid, candidates).first(budget)?;
    Ok(found.map(|map| WeakSolution {
        lift: Homomorphism::from_parts(p.g.monoid(), p.a.monoid(), map, HomKind::Monoid),
    }))
}

/// The fibre product `A ×_B Gᵢ` with its projections.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub p: FiniteGroup,
    /// Element `i` of `P` is the pair `pairs[i]`, in lexicographic order.
    pub pairs: Vec<(usize, usize)>,
    pub alpha_prime: Homomorphism,
    pub psi_star: Homomorphism,
    pub ker_alpha: FiniteGroup,
    pub ker_alpha_prime: FiniteGroup,
    pub ker_alpha_prime_incl: Homomorphism,
    /// `a ↦ (a, 1)`, an isomorphism `ker α → ker α′`.
    pub kernel_iso: Homomorphism,
}

impl Pullback {
    /// `α′` then `ψ` equals `ψ*` then `α`, elementwise.
    pub fn square_commutes(&self, alpha: &Homomorphism, psi: &Homomorphism) -> bool {
        self.p
            .elements()
            .all(|x| psi.apply(self.alpha_prime.apply(x)) == alpha.apply(self.psi_star.apply(x)))
    }
}

pub fn pullback(alpha: &Homomorphism, psi: &Homomorphism, limits: &Limits) -> Result<Pullback> {
    if !alpha.target().same_as(psi.target()) {
        return Err(Error::CodomainMismatch(
            "alpha and psi must share a codomain".into(),
        ));
    }
    let a = FiniteGroup::new(alpha.source().clone())?;
    let gi = FiniteGroup::new(psi.source().clone())?;
    let pairs: Vec<(usize, usize)> = a
        .elements()
        .flat_map(|x| gi.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| alpha.apply(x) == psi.apply(y))
        .collect();
    let p = FiniteGroup::new(from_elements(
        &pairs,
        |&(a1, g1), &(a2, g2)| (a.mul(a1, a2), gi.mul(g1, g2)),
        limits,
    )?)?;
    let alpha_prime = Homomorphism::new(
        p.monoid(),
        gi.monoid(),
        pairs.iter().map(|pr| pr.1).collect(),
    )?;
    let psi_star = Homomorphism::new(
        p.monoid(),
        a.monoid(),
        pairs.iter().map(|pr| pr.0).collect(),
    )?;
    let (ker_alpha, ker_alpha_incl) = kernel(alpha)?;
    let (ker_alpha_prime, ker_alpha_prime_incl) = kernel(&alpha_prime)?;
    let iso_map = ker_alpha_incl
        .map()
        .iter()
        .map(|&x| {
            let z = pairs
                .binary_search(&(x, gi.identity()))
                .expect("(a, 1) lies in the pullback");
            ker_alpha_prime_incl
                .map()
                .iter()
                .position(|&y| y == z)
                .expect("(a, 1) lies in ker α′")
        })
        .collect();
    let kernel_iso = Homomorphism::new(ker_alpha.monoid(), ker_alpha_prime.monoid(), iso_map)?;
    if !kernel_iso.is_bijective() {
        return Err(Error::InvalidArgument(
            "kernel map is not a bijection".into(),
        ));
    }
    Ok(Pullback {
        p,
        pairs,
        alpha_prime,
        psi_star,
        ker_alpha,
        ker_alpha_prime,
        ker_alpha_prime_incl,
        kernel_iso,
    })
}
