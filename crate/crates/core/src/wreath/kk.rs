use crate::algebra::{
    kernel_congruence_of_action, quotient_by_congruence, restrict_to_subset, FiniteGroup,
    Homomorphism, Limits, MonoidAction,
};
use crate::error::{Error, Result};
use crate::wreath::{wreath_product, WreathElement, WreathProduct};

/// Right cosets `Bg` of a subgroup, with representatives. The coset `B`
/// comes first with the identity as representative; the others follow in
/// order of their least element, which is their representative.
pub fn right_cosets(g: &FiniteGroup, b: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    check_subgroup(g, b)?;
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    let starts = std::iter::once(g.identity()).chain(g.elements());
    for x in starts {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &y in b {
            coset_of[g.mul(y, x)] = c;
        }
    }
    Ok((coset_of, reps))
}

fn check_subgroup(g: &FiniteGroup, b: &[usize]) -> Result<()> {
    if b.iter().any(|&x| x >= g.order()) {
        return Err(Error::NotASubgroup("element out of range".into()));
    }
    if !b.contains(&g.identity()) {
        return Err(Error::NotASubgroup("missing the identity".into()));
    }
    let mut inside = vec![false; g.order()];
    for &x in b {
        inside[x] = true;
    }
    for &x in b {
        for &y in b {
            if !inside[g.mul(x, y)] {
                return Err(Error::NotASubgroup(format!("{x}*{y} leaves the subset")));
            }
        }
    }
    Ok(())
}

/// The Krasner–Kaloujnine embedding `B̃ ↪ B ≀ (B̃/B, H)`.
#[derive(Clone, Debug)]
pub struct KkEmbedding {
    /// `B` re-indexed in increasing order of its elements in `B̃`.
    pub subgroup: FiniteGroup,
    pub subgroup_incl: Homomorphism,
    /// Right coset label of each element of `B̃`.
    pub coset_of: Vec<usize>,
    pub reps: Vec<usize>,
    /// `B̃` modulo the kernel of its action on the cosets.
    pub h: FiniteGroup,
    pub to_h: Homomorphism,
    pub wreath: WreathProduct,
    /// `g ↦ (f_g, [g])`.
    pub embed: Homomorphism,
    /// The image of `B` under `embed`, as a subgroup of the wreath product.
    pub embedded_b: FiniteGroup,
    pub embedded_b_incl: Homomorphism,
    /// `(f_g, [g]) ↦ f_g(B)`, an isomorphism onto `B`.
    pub tau: Homomorphism,
}

impl KkEmbedding {
    /// `f_g(c) = rep(c)·g·rep(c·g)⁻¹`, as indices of `B`.
    pub fn coordinates(&self, btilde: &FiniteGroup, g: usize) -> WreathElement {
        let position = |x: usize| {
            self.subgroup_incl
                .map()
                .iter()
                .position(|&y| y == x)
                .expect("lands in B")
        };
        let f = self
            .reps
            .iter()
            .map(|&r| {
                let rg = btilde.mul(r, g);
                let next = self.reps[self.coset_of[rg]];
                position(btilde.mul(rg, btilde.inv(next)))
            })
            .collect();
        WreathElement {
            f,
            n: self.to_h.apply(g),
        }
    }
}

pub fn krasner_kaloujnine(
    btilde: &FiniteGroup,
    b: &[usize],
    limits: &Limits,
) -> Result<KkEmbedding> {
    let (coset_of, reps) = right_cosets(btilde, b)?;
    let mut sorted = b.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let (bsub, subgroup_incl) = restrict_to_subset(btilde, &sorted)?;
    let subgroup = FiniteGroup::new(bsub)?;

    let k = reps.len();
    let n = btilde.order();
    let act: Vec<usize> = (0..k)
        .flat_map(|c| {
            let r = reps[c];
            let coset_of = &coset_of;
            (0..n).map(move |g| coset_of[btilde.mul(r, g)])
        })
        .collect();
    let action = MonoidAction::new(btilde, k, act)?;
    let cong = kernel_congruence_of_action(btilde, &action)?;
    let (hq, to_h) = quotient_by_congruence(btilde, &cong)?;
    let h = FiniteGroup::new(hq)?;
    let h_action = action.factor_through(&to_h)?;
    let wreath = wreath_product(&subgroup, &h_action, limits)?;

    let mut kk = KkEmbedding {
        subgroup,
        subgroup_incl,
        coset_of,
        reps,
        h,
        to_h,
        embed: Homomorphism::identity(&wreath.monoid),
        embedded_b: FiniteGroup::trivial(),
        embedded_b_incl: Homomorphism::identity(&wreath.monoid),
        tau: Homomorphism::identity(&wreath.monoid),
        wreath,
    };
    let map: Vec<usize> = btilde
        .elements()
        .map(|g| kk.wreath.encode(&kk.coordinates(btilde, g)))
        .collect();
    kk.embed = Homomorphism::new(btilde, &kk.wreath.monoid, map)?;

    let image: Vec<usize> = sorted.iter().map(|&x| kk.embed.apply(x)).collect();
    let (eb, eb_incl) = restrict_to_subset(&kk.wreath.monoid, &image)?;
    kk.embedded_b = FiniteGroup::new(eb)?;
    kk.embedded_b_incl = eb_incl;
    let tau_map: Vec<usize> = image.iter().map(|&z| kk.wreath.decode(z).f[0]).collect();
    kk.tau = Homomorphism::new(kk.embedded_b.monoid(), kk.subgroup.monoid(), tau_map)?;
    Ok(kk)
}
