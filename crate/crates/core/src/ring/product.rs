use super::{Carrier, Elem, FiniteRing, Radix, BUILD_CAP, MAX_SLOTS};
use crate::{Result, RingError};

/// Componentwise product; component 0 varies fastest in the index.
pub struct ProductCarrier {
    factors: Vec<FiniteRing>,
    radix: Radix,
}

impl ProductCarrier {
    pub fn factors(&self) -> &[FiniteRing] {
        &self.factors
    }

    pub fn radix(&self) -> &Radix {
        &self.radix
    }

    pub fn encode(&self, parts: &[Elem]) -> Elem {
        self.radix.encode(parts) as Elem
    }

    pub fn decode(&self, x: Elem) -> Vec<Elem> {
        self.radix.decode(x as u64)
    }

    fn zip(&self, a: Elem, b: Elem, f: impl Fn(&FiniteRing, Elem, Elem) -> Elem) -> Elem {
        let mut xa = [0 as Elem; MAX_SLOTS];
        let mut xb = [0 as Elem; MAX_SLOTS];
        let k = self.factors.len();
        self.radix.decode_into(a as u64, &mut xa[..k]);
        self.radix.decode_into(b as u64, &mut xb[..k]);
        for i in 0..k {
            xa[i] = f(&self.factors[i], xa[i], xb[i]);
        }
        self.radix.encode(&xa[..k]) as Elem
    }

    fn map(&self, a: Elem, f: impl Fn(&FiniteRing, Elem) -> Elem) -> Elem {
        let parts: Vec<Elem> = self
            .decode(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, r)| f(r, x))
            .collect();
        self.encode(&parts)
    }
}

impl Carrier for ProductCarrier {
    fn order(&self) -> usize {
        self.radix.total().unwrap() as usize
    }

    fn zero(&self) -> Elem {
        self.encode(&self.factors.iter().map(|r| r.zero()).collect::<Vec<_>>())
    }

    fn one(&self) -> Elem {
        self.encode(&self.factors.iter().map(|r| r.one()).collect::<Vec<_>>())
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        self.zip(a, b, |r, x, y| r.add(x, y))
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.zip(a, b, |r, x, y| r.mul(x, y))
    }

    fn neg(&self, a: Elem) -> Elem {
        self.map(a, |r, x| r.neg(x))
    }

    fn label(&self, a: Elem) -> String {
        let parts: Vec<String> = self
            .decode(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, r)| r.label(x))
            .collect();
        format!("({})", parts.join(", "))
    }

    fn structural_radical(&self) -> Option<Vec<Elem>> {
        let allowed: Vec<Vec<Elem>> = self
            .factors
            .iter()
            .map(|r| r.jacobson_radical().set.members().to_vec())
            .collect();
        Some(self.radix.enumerate(&allowed))
    }
}

/// `R_1 × … × R_k`.
pub fn direct_product(rings: &[FiniteRing]) -> Result<FiniteRing> {
    direct_product_capped(rings, BUILD_CAP)
}

pub fn direct_product_capped(rings: &[FiniteRing], cap: usize) -> Result<FiniteRing> {
    if rings.is_empty() {
        return Err(RingError::InvalidParameter("empty product".into()));
    }
    if rings.len() > MAX_SLOTS {
        return Err(RingError::InvalidParameter("too many factors".into()));
    }
    let radix = Radix::new(rings.iter().map(|r| r.order() as u64).collect());
    let exprs: Vec<String> = rings
        .iter()
        .map(|r| {
            if r.expr().contains(" x ") {
                format!("({})", r.expr())
            } else {
                r.expr().to_string()
            }
        })
        .collect();
    let expr = exprs.join(" x ");
    let order = radix.total().unwrap_or(u128::MAX);
    if order > cap as u128 {
        return Err(RingError::CapExceeded {
            what: format!("product {expr}"),
            order,
            cap: cap as u128,
        });
    }
    Ok(FiniteRing::new(
        ProductCarrier {
            factors: rings.to_vec(),
            radix,
        },
        expr,
    ))
}
