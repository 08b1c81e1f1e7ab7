use crate::algebra::{FiniteMonoid, Homomorphism};
use crate::error::{Error, Result};

/// A right action of a finite monoid on `{0, .., set_size-1}` by total maps.
///
/// Partial actions are totalised with a sink point fixed by everything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidAction {
    monoid: FiniteMonoid,
    set_size: usize,
    act: Vec<usize>,
}

impl MonoidAction {
    /// `act[q * order + m]` is `q·m`.
    pub fn new(monoid: &FiniteMonoid, set_size: usize, act: Vec<usize>) -> Result<Self> {
        let n = monoid.order();
        if act.len() != set_size * n {
            return Err(Error::InvalidAction(format!(
                "expected {} entries, got {}",
                set_size * n,
                act.len()
            )));
        }
        if act.iter().any(|&p| p >= set_size) {
            return Err(Error::InvalidAction("point out of range".into()));
        }
        let a = MonoidAction {
            monoid: monoid.clone(),
            set_size,
            act,
        };
        a.check_laws()?;
        Ok(a)
    }

    pub(crate) fn from_parts(monoid: &FiniteMonoid, set_size: usize, act: Vec<usize>) -> Self {
        MonoidAction {
            monoid: monoid.clone(),
            set_size,
            act,
        }
    }

    fn check_laws(&self) -> Result<()> {
        let m = &self.monoid;
        for q in 0..self.set_size {
            if self.apply(q, m.identity()) != q {
                return Err(Error::InvalidAction(format!("identity moves point {q}")));
            }
            for a in m.elements() {
                let qa = self.apply(q, a);
                for b in m.elements() {
                    if self.apply(qa, b) != self.apply(q, m.mul(a, b)) {
                        return Err(Error::InvalidAction(format!(
                            "(q·{a})·{b} != q·({a}{b}) at q = {q}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The action of a monoid on itself by right multiplication.
    pub fn right_regular(m: &FiniteMonoid) -> Self {
        Self::from_parts(m, m.order(), m.flat_table().to_vec())
    }

    #[inline]
    pub fn apply(&self, q: usize, m: usize) -> usize {
        self.act[q * self.monoid.order() + m]
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    /// Pushes the action down along an epimorphism whose kernel is contained
    /// in the kernel of the action.
    pub fn factor_through(&self, proj: &Homomorphism) -> Result<MonoidAction> {
        if !proj.source().same_as(&self.monoid) || !proj.is_surjective() {
            return Err(Error::InvalidAction(
                "projection must be onto from the acting monoid".into(),
            ));
        }
        let target = proj.target();
        let mut act = vec![usize::MAX; self.set_size * target.order()];
        for a in self.monoid.elements() {
            let t = proj.apply(a);
            for q in 0..self.set_size {
                let slot = &mut act[q * target.order() + t];
                let v = self.apply(q, a);
                if *slot != usize::MAX && *slot != v {
                    return Err(Error::InvalidAction(
                        "action does not factor through the projection".into(),
                    ));
                }
                *slot = v;
            }
        }
        Ok(Self::from_parts(target, self.set_size, act))
    }
}
