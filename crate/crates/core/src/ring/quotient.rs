use super::{Carrier, Elem, FiniteRing, Subset};
use crate::{Result, RingError};

/// Carrier of `R/I`: cosets indexed in order of their least member.
pub struct QuotientCarrier {
    parent: FiniteRing,
    reps: Vec<Elem>,
    proj: Vec<Elem>,
}

impl QuotientCarrier {
    pub fn parent(&self) -> &FiniteRing {
        &self.parent
    }

    pub fn projection(&self) -> &[Elem] {
        &self.proj
    }

    pub fn representatives(&self) -> &[Elem] {
        &self.reps
    }
}

impl Carrier for QuotientCarrier {
    fn order(&self) -> usize {
        self.reps.len()
    }

    fn zero(&self) -> Elem {
        self.proj[self.parent.zero() as usize]
    }

    fn one(&self) -> Elem {
        self.proj[self.parent.one() as usize]
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        let (x, y) = (self.reps[a as usize], self.reps[b as usize]);
        self.proj[self.parent.add(x, y) as usize]
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let (x, y) = (self.reps[a as usize], self.reps[b as usize]);
        self.proj[self.parent.mul(x, y) as usize]
    }

    fn neg(&self, a: Elem) -> Elem {
        self.proj[self.parent.neg(self.reps[a as usize]) as usize]
    }

    fn label(&self, a: Elem) -> String {
        format!("[{}]", self.parent.label(self.reps[a as usize]))
    }

    // J(R/I) = (J(R) + I)/I for finite rings: R/(J + I) is semisimple.
    fn structural_radical(&self) -> Option<Vec<Elem>> {
        let j = self.parent.jacobson_radical();
        let mut out: Vec<Elem> = j
            .set
            .members()
            .iter()
            .map(|&x| self.proj[x as usize])
            .collect();
        out.sort_unstable();
        out.dedup();
        Some(out)
    }
}

/// A quotient ring with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ring: FiniteRing,
    pub ideal: Subset,
    /// Image of every parent element.
    pub projection: Vec<Elem>,
    /// Least parent element of every coset.
    pub representatives: Vec<Elem>,
}

impl FiniteRing {
    /// `R/I`. Rejects subsets that are not two-sided ideals.
    pub fn quotient(&self, ideal: &Subset) -> Result<Quotient> {
        let expr = format!("{}/J", self.expr());
        let expr = if ideal.kind() == super::SubsetKind::Radical {
            expr
        } else {
            format!("{}/I{:?}", self.expr(), ideal.members())
        };
        self.quotient_with_expr(ideal, expr)
    }

    /// As [`FiniteRing::quotient`], recording `expr` as the construction.
    pub fn quotient_with_expr(&self, ideal: &Subset, expr: String) -> Result<Quotient> {
        self.check_ideal(ideal).map_err(RingError::NotAnIdeal)?;
        if ideal.len() == self.order() {
            return Err(RingError::InvalidParameter(
                "quotient by the whole ring is the zero ring".into(),
            ));
        }
        let n = self.order();
        let mut proj = vec![Elem::MAX; n];
        let mut reps = Vec::with_capacity(n / ideal.len());
        for x in self.elements() {
            if proj[x as usize] != Elem::MAX {
                continue;
            }
            let c = reps.len() as Elem;
            reps.push(x);
            for &i in ideal.members() {
                proj[self.add(x, i) as usize] = c;
            }
        }
        let carrier = QuotientCarrier {
            parent: self.clone(),
            reps: reps.clone(),
            proj: proj.clone(),
        };
        Ok(Quotient {
            ring: FiniteRing::new(carrier, expr),
            ideal: ideal.clone(),
            projection: proj,
            representatives: reps,
        })
    }

    /// `R/J(R)`.
    pub fn quotient_by_radical(&self) -> Result<Quotient> {
        let j = self.jacobson_radical();
        self.quotient(&j.set)
    }
}
