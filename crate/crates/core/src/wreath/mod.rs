//! Wreath products `T ≀ (Q, N)` and the two embeddings built on them.
//!
//! An element is a pair `(f, n)` with `f: Q → T` and `n ∈ N`, multiplied by
//! `(f, n)(f′, n′) = (q ↦ f(q)·f′(q·n), n·n′)`.

mod kk;
mod schutz;

pub use kk::{krasner_kaloujnine, right_cosets, KkEmbedding};
pub use schutz::{
    faithful_r_quotient, schutz_embedding, schutz_structure, SchutzEmbedding, SchutzStructure,
};

use crate::algebra::{check_cap, FiniteMonoid, Limits, MonoidAction};
use crate::error::Result;

/// A wreath-product element in coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathElement {
    pub f: Vec<usize>,
    pub n: usize,
}

/// The multiplication of `top ≀ (Q, N)` on coordinates, without tabulating
/// the whole product.
#[derive(Clone, Copy)]
pub struct WreathLaw<'a> {
    pub top: &'a FiniteMonoid,
    pub action: &'a MonoidAction,
}

impl WreathLaw<'_> {
    pub fn mul(&self, a: &WreathElement, b: &WreathElement) -> WreathElement {
        let f =
            a.f.iter()
                .enumerate()
                .map(|(q, &x)| self.top.mul(x, b.f[self.action.apply(q, a.n)]))
                .collect();
        WreathElement {
            f,
            n: self.action.monoid().mul(a.n, b.n),
        }
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement {
            f: vec![self.top.identity(); self.action.set_size()],
            n: self.action.monoid().identity(),
        }
    }
}

/// The full wreath product with its coordinate encoding: `(f, n)` has index
/// `code(f)·|N| + n`, where `code` reads `f` as a base-`|T|` numeral with
/// `f(0)` most significant.
#[derive(Clone, Debug)]
pub struct WreathProduct {
    pub monoid: FiniteMonoid,
    top: FiniteMonoid,
    action: MonoidAction,
}

impl WreathProduct {
    pub fn top(&self) -> &FiniteMonoid {
        &self.top
    }

    pub fn action(&self) -> &MonoidAction {
        &self.action
    }

    pub fn law(&self) -> WreathLaw<'_> {
        WreathLaw {
            top: &self.top,
            action: &self.action,
        }
    }

    pub fn encode(&self, x: &WreathElement) -> usize {
        let t = self.top.order();
        let code = x.f.iter().fold(0, |acc, &v| acc * t + v);
        code * self.action.monoid().order() + x.n
    }

    pub fn decode(&self, z: usize) -> WreathElement {
        let nn = self.action.monoid().order();
        let t = self.top.order();
        let (mut code, n) = (z / nn, z % nn);
        let mut f = vec![0; self.action.set_size()];
        for slot in f.iter_mut().rev() {
            *slot = code % t;
            code /= t;
        }
        WreathElement { f, n }
    }
}

/// Tabulates `top ≀ (Q, N)` for the right action `bottom` of `N` on `Q`.
pub fn wreath_product(
    top: &FiniteMonoid,
    bottom: &MonoidAction,
    limits: &Limits,
) -> Result<WreathProduct> {
    let q = bottom.set_size();
    let nn = bottom.monoid().order();
    let size = (top.order() as u128)
        .checked_pow(q as u32)
        .and_then(|x| x.checked_mul(nn as u128))
        .unwrap_or(u128::MAX);
    check_cap(size, limits)?;
    let size = size as usize;
    let mut w = WreathProduct {
        monoid: FiniteMonoid::trivial(),
        top: top.clone(),
        action: bottom.clone(),
    };
    let elems: Vec<WreathElement> = (0..size).map(|z| w.decode(z)).collect();
    let law = w.law();
    let mut flat = Vec::with_capacity(size * size);
    for a in &elems {
        for b in &elems {
            flat.push(w.encode(&law.mul(a, b)));
        }
    }
    let identity = w.encode(&law.identity());
    w.monoid = FiniteMonoid::from_parts(size, flat, identity);
    Ok(w)
}
