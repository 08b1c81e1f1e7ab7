use crate::algebra::{
    family, kernel_congruence_of_action, quotient_by_congruence, restrict_to_subset, FiniteGroup,
    FiniteMonoid, Homomorphism, Limits, MonoidAction,
};
use crate::error::{Error, Result};
use crate::greens::{ideals, maximal_subgroup, require_idempotent};
use crate::wreath::{wreath_product, WreathElement, WreathProduct};

/// The Schützenberger representation of a monoid on the R-class of an
/// idempotent `e`.
///
/// The maximal subgroup `H` at `e` acts freely on the left of `R`; its orbits
/// form `Q`, and `M` acts on `Q* = Q ∪ {★}` by `Hr·m = H(rm)` when `rm ∈ R`
/// and `★` otherwise. The sink `★` has index `Q`.
#[derive(Clone, Debug)]
pub struct SchutzStructure {
    pub m: FiniteMonoid,
    pub e: usize,
    /// The R-class of `e`, increasing.
    pub r: Vec<usize>,
    /// `H` indexed by position in `h_incl`; its identity is `e`.
    pub h: FiniteGroup,
    pub h_incl: Homomorphism,
    /// Orbit of each element of `M`, `None` outside `R`.
    pub orbit_of: Vec<Option<usize>>,
    /// Orbit representatives; the orbit of `e` is first and represented by `e`.
    pub reps: Vec<usize>,
    /// `M` acting on `Q*`.
    pub m_action: MonoidAction,
    /// `M` modulo the kernel of its action on `Q*`.
    pub n: FiniteMonoid,
    pub to_n: Homomorphism,
    pub qstar_action: MonoidAction,
}

impl SchutzStructure {
    pub fn num_orbits(&self) -> usize {
        self.reps.len()
    }

    pub fn star(&self) -> usize {
        self.reps.len()
    }

    /// Position in `H` of an element of `M`, if it lies in `H`.
    pub fn h_index(&self, x: usize) -> Option<usize> {
        self.h_incl.map().iter().position(|&y| y == x)
    }

    /// `(f_x, [x])` with `f_x(★) = 0`, `f_x(o) = 0` when `rep(o)·x ∉ R`, and
    /// otherwise the `h` with `rep(o)·x = h·rep(o·x)`. Values index `H⁰`,
    /// whose zero is `|H|`.
    pub fn coordinates(&self, x: usize) -> WreathElement {
        let zero = self.h.order();
        let mut f: Vec<usize> = self
            .reps
            .iter()
            .map(|&r| {
                let y = self.m.mul(r, x);
                match self.orbit_of[y] {
                    None => zero,
                    Some(o) => {
                        let target = self.reps[o];
                        self.h_incl
                            .map()
                            .iter()
                            .position(|&h| self.m.mul(h, target) == y)
                            .expect("y lies in the H-orbit of its representative")
                    }
                }
            })
            .collect();
        f.push(zero);
        WreathElement {
            f,
            n: self.to_n.apply(x),
        }
    }
}

fn r_class(m: &FiniteMonoid, e: usize) -> Vec<usize> {
    let re = ideals(m, e).0;
    m.elements().filter(|&x| ideals(m, x).0 == re).collect()
}

pub fn schutz_structure(m: &FiniteMonoid, e: usize) -> Result<SchutzStructure> {
    require_idempotent(m, e)?;
    let r = r_class(m, e);
    let mut in_r = vec![false; m.order()];
    for &x in &r {
        in_r[x] = true;
    }
    let (h, h_incl) = maximal_subgroup(m, e)?;
    let h_elems = h_incl.map().to_vec();

    for &hh in &h_elems {
        for &x in &r {
            let y = m.mul(hh, x);
            if !in_r[y] || (y == x && hh != e) {
                return Err(Error::FreenessViolation { h: hh, r: x });
            }
        }
    }

    let mut orbit_of = vec![None; m.order()];
    let mut reps = Vec::new();
    for x in std::iter::once(e).chain(r.iter().copied()) {
        if orbit_of[x].is_some() {
            continue;
        }
        let o = reps.len();
        reps.push(x);
        for &hh in &h_elems {
            orbit_of[m.mul(hh, x)] = Some(o);
        }
    }

    for &hh in &h_elems {
        for &x in &r {
            let hx = m.mul(hh, x);
            for a in m.elements() {
                let (xa, hxa) = (m.mul(x, a), m.mul(hx, a));
                if in_r[xa] != in_r[hxa] || (in_r[xa] && hxa != m.mul(hh, xa)) {
                    return Err(Error::AutomorphismViolation { h: hh, r: x, m: a });
                }
            }
        }
    }

    let q = reps.len();
    let star = q;
    let mut act = Vec::with_capacity((q + 1) * m.order());
    for &rep in &reps {
        act.extend(
            m.elements()
                .map(|a| orbit_of[m.mul(rep, a)].unwrap_or(star)),
        );
    }
    act.extend(m.elements().map(|_| star));
    let m_action = MonoidAction::new(m, q + 1, act)?;
    let cong = kernel_congruence_of_action(m, &m_action)?;
    let (n, to_n) = quotient_by_congruence(m, &cong)?;
    let qstar_action = m_action.factor_through(&to_n)?;
    Ok(SchutzStructure {
        m: m.clone(),
        e,
        r,
        h,
        h_incl,
        orbit_of,
        reps,
        m_action,
        n,
        to_n,
        qstar_action,
    })
}

/// The partial right action of `M` on the R-class of `e`, totalised with an
/// undefined marker at index `|R|`.
fn r_action(m: &FiniteMonoid, r: &[usize]) -> MonoidAction {
    let undefined = r.len();
    let mut pos = vec![undefined; m.order()];
    for (i, &x) in r.iter().enumerate() {
        pos[x] = i;
    }
    let mut act = Vec::with_capacity((r.len() + 1) * m.order());
    for &x in r {
        act.extend(m.elements().map(|a| pos[m.mul(x, a)]));
    }
    act.extend(m.elements().map(|_| undefined));
    MonoidAction::from_parts(m, r.len() + 1, act)
}

/// `M` modulo the kernel of its partial action on the R-class of `e`.
pub fn faithful_r_quotient(m: &FiniteMonoid, e: usize) -> Result<(FiniteMonoid, Homomorphism)> {
    require_idempotent(m, e)?;
    let act = r_action(m, &r_class(m, e));
    let cong = kernel_congruence_of_action(m, &act)?;
    quotient_by_congruence(m, &cong)
}

/// The monomial embedding `M ↪ H⁰ ≀ (Q*, N)`.
#[derive(Clone, Debug)]
pub struct SchutzEmbedding {
    /// `H` with a zero appended at index `|H|`.
    pub h0: FiniteMonoid,
    pub wreath: WreathProduct,
    /// `m ↦ (f_m, [m])`; multiplicative and injective, but it sends the
    /// identity to `(q ↦ 1, ★ ↦ 0; [1])`, not to the wreath identity.
    pub embed: Homomorphism,
    pub embedded_h: FiniteGroup,
    pub embedded_h_incl: Homomorphism,
    /// `(f_h, [h]) ↦ f_h(He)`, an isomorphism onto `H`.
    pub tau: Homomorphism,
}

pub fn schutz_embedding(s: &SchutzStructure, limits: &Limits) -> Result<SchutzEmbedding> {
    let m = &s.m;
    let act = r_action(m, &s.r);
    let columns: Vec<Vec<usize>> = m
        .elements()
        .map(|a| (0..act.set_size()).map(|p| act.apply(p, a)).collect())
        .collect();
    for a in m.elements() {
        if let Some(b) = (a + 1..m.order()).find(|&b| columns[a] == columns[b]) {
            return Err(Error::NotFaithfulOnR { a, b });
        }
    }

    let h0 = family::zero_adjoined(s.h.monoid());
    let wreath = wreath_product(&h0, &s.qstar_action, limits)?;
    let map: Vec<usize> = m
        .elements()
        .map(|x| wreath.encode(&s.coordinates(x)))
        .collect();
    let embed = Homomorphism::relaxed(m, &wreath.monoid, map)?;
    if !embed.is_injective() {
        return Err(Error::NotFaithfulOnR { a: 0, b: 0 });
    }
    let image: Vec<usize> = s.h_incl.map().iter().map(|&x| embed.apply(x)).collect();
    let (eh, embedded_h_incl) = restrict_to_subset(&wreath.monoid, &image)?;
    let embedded_h = FiniteGroup::new(eh)?;
    let tau_map = image.iter().map(|&z| wreath.decode(z).f[0]).collect();
    let tau = Homomorphism::new(embedded_h.monoid(), s.h.monoid(), tau_map)?;
    Ok(SchutzEmbedding {
        h0,
        wreath,
        embed,
        embedded_h,
        embedded_h_incl,
        tau,
    })
}
