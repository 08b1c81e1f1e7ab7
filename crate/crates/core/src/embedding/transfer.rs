use serde::Serialize;

use crate::algebra::{
    check_cap, direct_power, family, from_elements, restrict_to_subset, subsemigroup, FiniteGroup,
    FiniteMonoid, FiniteSemigroup, Homomorphism, Limits,
};
use crate::embedding::{is_elementary_abelian, EmbeddingProblem, WeakSolution};
use crate::error::{Error, Result};
use crate::greens::maximal_subgroup;
use crate::wreath::{krasner_kaloujnine, KkEmbedding, SchutzStructure, WreathElement, WreathLaw};

/// Every tuple choosing one entry from each list, in lexicographic order.
fn tuples(lists: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |&x| {
                    let mut t = prefix.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn product_size(lists: &[Vec<usize>]) -> u128 {
    lists
        .iter()
        .fold(1u128, |acc, l| acc.saturating_mul(l.len() as u128))
}

/// An embedding problem moved along `B ≤ B̃`: the new problem is
/// `φ̃: G → B̃` (the old `φ` followed by the inclusion) and `α̃: Ã ↠ B̃`,
/// where `Ã ≤ A ≀ (B̃/B, H)` is the preimage of the Krasner–Kaloujnine copy
/// of `B̃` under the coordinatewise `α`.
#[derive(Clone, Debug)]
pub struct Transfer {
    pub kk: KkEmbedding,
    /// Coordinates of the elements of `Ã`, over `A`.
    pub atilde_elems: Vec<WreathElement>,
    pub problem: EmbeddingProblem,
    /// `A′ = α̃⁻¹(B)`.
    pub aprime: FiniteGroup,
    pub aprime_incl: Homomorphism,
    /// `ρ: (f, [g]) ↦ f(B)`, from `A′` to `A`.
    pub rho: Homomorphism,
    /// `ker α̃ ↪ K^n`, `n` the number of cosets, by reading off coordinates.
    pub kernel_power: FiniteMonoid,
    pub kernel_embedding: Homomorphism,
    b_embed: Homomorphism,
}

impl Transfer {
    /// Diagram (4): `ρ` then `α` equals `α̃` restricted to `A′`, read in `B`.
    pub fn diagram_commutes(&self, original: &EmbeddingProblem) -> bool {
        self.aprime.elements().all(|x| {
            let bt = self.problem.alpha.apply(self.aprime_incl.apply(x));
            let b = self.b_embed.map().iter().position(|&y| y == bt);
            b == Some(original.alpha.apply(self.rho.apply(x)))
        })
    }

    /// Turns a weak solution of the transferred problem into one of the
    /// original: a lift lands in `A′`, and `ρ` carries it to `A`.
    pub fn transport(
        &self,
        original: &EmbeddingProblem,
        sol: &WeakSolution,
    ) -> Result<WeakSolution> {
        let map = original
            .g
            .elements()
            .map(|x| self.atilde_elems[sol.lift.apply(x)].f[0])
            .collect();
        let lift = Homomorphism::new(original.g.monoid(), original.a.monoid(), map)?;
        if !original.is_solved_by(&lift) {
            return Err(Error::InvalidArgument(
                "transported map is not a lift".into(),
            ));
        }
        Ok(WeakSolution { lift })
    }
}

pub fn transfer_obstruction(
    p: &EmbeddingProblem,
    btilde: &FiniteGroup,
    b_embed: &Homomorphism,
    limits: &Limits,
) -> Result<Transfer> {
    if !b_embed.source().same_as(p.b.monoid()) || !b_embed.target().same_as(btilde.monoid()) {
        return Err(Error::DomainMismatch);
    }
    if !b_embed.is_injective() {
        return Err(Error::NotASubgroup("B must embed injectively".into()));
    }
    let mut image = b_embed.image();
    image.sort_unstable();
    let kk = krasner_kaloujnine(btilde, &image, limits)?;
    // kk indexes B by increasing B̃-index; translate back to p.b
    let from_kk: Vec<usize> = kk
        .subgroup_incl
        .map()
        .iter()
        .map(|&x| {
            b_embed
                .map()
                .iter()
                .position(|&y| y == x)
                .expect("in image")
        })
        .collect();

    let cosets = kk.reps.len();
    let size = (btilde.order() as u128)
        .saturating_mul((p.k.order() as u128).saturating_pow(cosets as u32));
    check_cap(size, limits)?;
    let mut atilde_elems = Vec::new();
    let mut alpha_map = Vec::new();
    for g in btilde.elements() {
        let c = kk.coordinates(btilde, g);
        let fibers: Vec<Vec<usize>> = c.f.iter().map(|&v| p.alpha.fiber(from_kk[v])).collect();
        for f in tuples(&fibers) {
            atilde_elems.push(WreathElement { f, n: c.n });
            alpha_map.push(g);
        }
    }
    let law = WreathLaw {
        top: p.a.monoid(),
        action: kk.wreath.action(),
    };
    let atilde = FiniteGroup::new(from_elements(&atilde_elems, |x, y| law.mul(x, y), limits)?)?;
    let alpha_tilde = Homomorphism::new(atilde.monoid(), btilde.monoid(), alpha_map)?;
    let phi_tilde = p.phi.compose(b_embed)?;
    let problem = EmbeddingProblem::with_any_phi(&phi_tilde, &alpha_tilde)?;

    let aprime_idx: Vec<usize> = atilde
        .elements()
        .filter(|&x| image.binary_search(&alpha_tilde.apply(x)).is_ok())
        .collect();
    let (aprime_m, aprime_incl) = restrict_to_subset(atilde.monoid(), &aprime_idx)?;
    let aprime = FiniteGroup::new(aprime_m)?;
    let rho_map = aprime_idx.iter().map(|&x| atilde_elems[x].f[0]).collect();
    let rho = Homomorphism::new(aprime.monoid(), p.a.monoid(), rho_map)?;

    let kernel_power = direct_power(p.k.monoid(), cosets, limits)?;
    let k_pos = |a: usize| {
        p.k_incl
            .map()
            .iter()
            .position(|&y| y == a)
            .expect("coordinate in K")
    };
    let kernel_map = problem
        .k_incl
        .map()
        .iter()
        .map(|&x| {
            atilde_elems[x]
                .f
                .iter()
                .fold(0, |acc, &a| acc * p.k.order() + k_pos(a))
        })
        .collect();
    let kernel_embedding = Homomorphism::new(problem.k.monoid(), &kernel_power, kernel_map)?;

    Ok(Transfer {
        kk,
        atilde_elems,
        problem,
        aprime,
        aprime_incl,
        rho,
        kernel_power,
        kernel_embedding,
        b_embed: b_embed.clone(),
    })
}

/// The §3 transfer of a group extension `α̃: Ã ↠ H` of the maximal subgroup
/// to the whole monoid, through `Ã⁰ ≀ (Q*, N) ↠ H⁰ ≀ (Q*, N)`.
#[derive(Clone, Debug)]
pub struct MonoidTransfer {
    /// Preimage of the Schützenberger copy of `M`.
    pub mprime: FiniteMonoid,
    pub mprime_elems: Vec<WreathElement>,
    pub lambda: Homomorphism,
    /// `λ⁻¹(H)`; a semigroup, with an identity adjoined when it has none.
    pub aprime: FiniteSemigroup,
    pub aprime_incl: Homomorphism,
    /// `(f, [h]) ↦ f(He)`, from `A′` to `Ã`.
    pub rho: Homomorphism,
    /// Diagram (6): `λ` restricted to `A′`, read in `H`, equals `ρ` then `α̃`.
    pub diagram_commutes: bool,
}

pub fn monoid_transfer(
    s: &SchutzStructure,
    alpha_tilde: &Homomorphism,
    limits: &Limits,
) -> Result<MonoidTransfer> {
    if !alpha_tilde.target().same_as(s.h.monoid()) {
        return Err(Error::CodomainMismatch(
            "alpha_tilde must target the maximal subgroup".into(),
        ));
    }
    if !alpha_tilde.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let atilde = FiniteGroup::new(alpha_tilde.source().clone())?;
    let m = &s.m;
    let coords: Vec<WreathElement> = m.elements().map(|x| s.coordinates(x)).collect();
    for a in m.elements() {
        if let Some(b) = (a + 1..m.order()).find(|&b| coords[a] == coords[b]) {
            return Err(Error::NotFaithfulOnR { a, b });
        }
    }

    let a0 = family::zero_adjoined(atilde.monoid());
    let (zero_a, zero_h) = (atilde.order(), s.h.order());
    let fiber = |v: usize| {
        if v == zero_h {
            vec![zero_a]
        } else {
            alpha_tilde.fiber(v)
        }
    };
    let total: u128 = coords
        .iter()
        .map(|c| product_size(&c.f.iter().map(|&v| fiber(v)).collect::<Vec<_>>()))
        .fold(0u128, |acc, x| acc.saturating_add(x));
    check_cap(total, limits)?;

    let mut mprime_elems = Vec::new();
    let mut lambda_map = Vec::new();
    for (x, c) in coords.iter().enumerate() {
        let fibers: Vec<Vec<usize>> = c.f.iter().map(|&v| fiber(v)).collect();
        for f in tuples(&fibers) {
            mprime_elems.push(WreathElement { f, n: c.n });
            lambda_map.push(x);
        }
    }
    let law = WreathLaw {
        top: &a0,
        action: &s.qstar_action,
    };
    let mprime = from_elements(&mprime_elems, |x, y| law.mul(x, y), limits)?;
    let lambda = Homomorphism::new(&mprime, m, lambda_map)?;

    let h_elems = s.h_incl.map();
    let aprime_idx: Vec<usize> = mprime
        .elements()
        .filter(|&x| h_elems.contains(&lambda.apply(x)))
        .collect();
    let (aprime, aprime_incl) = subsemigroup(&mprime, &aprime_idx)?;
    let rho_map: Vec<usize> = aprime_idx.iter().map(|&x| mprime_elems[x].f[0]).collect();
    let rho = Homomorphism::semigroup(
        &aprime,
        &FiniteSemigroup::from_monoid(atilde.monoid().clone()),
        rho_map,
    )?;
    let diagram_commutes = aprime.originals().all(|x| {
        s.h_index(lambda.apply(aprime_incl.apply(x))) == Some(alpha_tilde.apply(rho.apply(x)))
    });
    Ok(MonoidTransfer {
        mprime,
        mprime_elems,
        lambda,
        aprime,
        aprime_incl,
        rho,
        diagram_commutes,
    })
}

/// The check at one idempotent `e′` of `M′`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotentVerdict {
    pub idempotent: usize,
    pub group_order: usize,
    /// `{g ∈ G′ : λ(g) = λ(e′)}`.
    pub kernel_order: usize,
    pub kernel_elementary_abelian: bool,
    /// Order of `λ(G′)`, which is `G′` modulo the kernel.
    pub image_order: usize,
    /// `λ(G′)` lies in the maximal subgroup of `M` at `λ(e′)`.
    pub quotient_embeds: bool,
}

impl IdempotentVerdict {
    pub fn passes(&self) -> bool {
        self.kernel_elementary_abelian
            && self.quotient_embeds
            && self.kernel_order * self.image_order == self.group_order
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub prime: usize,
    pub verdicts: Vec<IdempotentVerdict>,
}

impl ExtensionReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(IdempotentVerdict::passes)
    }
}

/// Checks that every maximal subgroup of `M′` is an extension of an
/// elementary abelian `p`-group by a subgroup of `M`.
pub fn subgroup_extension_check(lambda: &Homomorphism, p: usize) -> Result<ExtensionReport> {
    let mprime = lambda.source();
    let m = lambda.target();
    let mut verdicts = Vec::new();
    for e in mprime.idempotents() {
        let (g, incl) = maximal_subgroup(mprime, e)?;
        let le = lambda.apply(e);
        let kernel: Vec<usize> = g
            .elements()
            .filter(|&i| lambda.apply(incl.apply(i)) == le)
            .collect();
        let (ksub, _) = restrict_to_subset(g.monoid(), &kernel)?;
        let kernel_elementary_abelian = FiniteGroup::new(ksub)
            .ok()
            .and_then(|k| is_elementary_abelian(&k))
            .is_some_and(|ep| ep.admits(p));
        let (_, h_incl) = maximal_subgroup(m, le)?;
        let mut image: Vec<usize> = g.elements().map(|i| lambda.apply(incl.apply(i))).collect();
        image.sort_unstable();
        image.dedup();
        let quotient_embeds = image.iter().all(|x| h_incl.map().contains(x));
        verdicts.push(IdempotentVerdict {
            idempotent: e,
            group_order: g.order(),
            kernel_order: kernel.len(),
            kernel_elementary_abelian,
            image_order: image.len(),
            quotient_embeds,
        });
    }
    Ok(ExtensionReport { prime: p, verdicts })
}
