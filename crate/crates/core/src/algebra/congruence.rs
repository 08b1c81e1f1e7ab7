use std::collections::HashMap;

use crate::algebra::{FiniteMonoid, HomKind, Homomorphism, MonoidAction};
use crate::error::{Error, Result};

/// A congruence on a finite monoid, stored as a class label per element.
///
/// Labels are normalised so that classes are numbered by their least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    monoid: FiniteMonoid,
    class_of: Vec<usize>,
    classes: usize,
}

impl Congruence {
    pub fn new(monoid: &FiniteMonoid, labels: &[usize]) -> Result<Self> {
        if labels.len() != monoid.order() {
            return Err(Error::MapLength {
                got: labels.len(),
                expected: monoid.order(),
            });
        }
        let (class_of, classes) = normalise(labels);
        let c = Congruence {
            monoid: monoid.clone(),
            class_of,
            classes,
        };
        c.check_compatible()?;
        Ok(c)
    }

    pub fn discrete(monoid: &FiniteMonoid) -> Self {
        Congruence {
            monoid: monoid.clone(),
            class_of: monoid.elements().collect(),
            classes: monoid.order(),
        }
    }

    pub fn universal(monoid: &FiniteMonoid) -> Self {
        Congruence {
            monoid: monoid.clone(),
            class_of: vec![0; monoid.order()],
            classes: 1,
        }
    }

    /// The kernel of a homomorphism: `a ~ b` iff `h(a) = h(b)`.
    pub fn kernel_of(h: &Homomorphism) -> Self {
        let (class_of, classes) = normalise(h.map());
        Congruence {
            monoid: h.source().clone(),
            class_of,
            classes,
        }
    }

    fn check_compatible(&self) -> Result<()> {
        let m = &self.monoid;
        let mut rep = vec![usize::MAX; self.classes];
        for a in m.elements() {
            if rep[self.class_of[a]] == usize::MAX {
                rep[self.class_of[a]] = a;
            }
        }
        for a in m.elements() {
            let r = rep[self.class_of[a]];
            if r == a {
                continue;
            }
            for b in m.elements() {
                if self.class_of[m.mul(a, b)] != self.class_of[m.mul(r, b)]
                    || self.class_of[m.mul(b, a)] != self.class_of[m.mul(b, r)]
                {
                    return Err(Error::IncompatiblePartition { a: r, b: a });
                }
            }
        }
        Ok(())
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.classes
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for a in self.monoid.elements() {
            out[self.class_of[a]].push(a);
        }
        out
    }

    pub fn is_discrete(&self) -> bool {
        self.classes == self.monoid.order()
    }
}

fn normalise(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let class_of = labels
        .iter()
        .map(|&l| {
            let next = seen.len();
            *seen.entry(l).or_insert(next)
        })
        .collect();
    (class_of, seen.len())
}

/// The quotient `m / c` with its projection. Class `i` of the quotient is the
/// `i`-th class of `c` ordered by least element.
pub fn quotient_by_congruence(
    m: &FiniteMonoid,
    c: &Congruence,
) -> Result<(FiniteMonoid, Homomorphism)> {
    if !c.monoid().same_as(m) {
        return Err(Error::DomainMismatch);
    }
    let k = c.num_classes();
    let mut rep = vec![usize::MAX; k];
    for a in m.elements() {
        if rep[c.class_of(a)] == usize::MAX {
            rep[c.class_of(a)] = a;
        }
    }
    let mut flat = Vec::with_capacity(k * k);
    for &x in &rep {
        for &y in &rep {
            flat.push(c.class_of(m.mul(x, y)));
        }
    }
    let q = FiniteMonoid::from_parts(k, flat, c.class_of(m.identity()));
    let proj = Homomorphism::from_parts(m, &q, c.labels().to_vec(), HomKind::Monoid);
    Ok((q, proj))
}

/// Identifies two elements iff they act identically on every point.
pub fn kernel_congruence_of_action(m: &FiniteMonoid, act: &MonoidAction) -> Result<Congruence> {
    if !act.monoid().same_as(m) {
        return Err(Error::DomainMismatch);
    }
    let mut by_column: HashMap<Vec<usize>, usize> = HashMap::new();
    let labels: Vec<usize> = m
        .elements()
        .map(|a| {
            let col: Vec<usize> = (0..act.set_size()).map(|q| act.apply(q, a)).collect();
            let next = by_column.len();
            *by_column.entry(col).or_insert(next)
        })
        .collect();
    let (class_of, classes) = normalise(&labels);
    Ok(Congruence {
        monoid: m.clone(),
        class_of,
        classes,
    })
}
