//! Element and ring predicates, periods, and the constructive
//! decompositions (potent plus nilpotent, tripotent plus potent, lifts of
//! potents modulo nil ideals).

mod nil_clean;
mod profile;
mod qbound;

use num_integer::Integer;
use serde::Serialize;

use crate::ring::{CharData, Elem, FiniteRing, PeriodData};

pub use nil_clean::{
    nil_clean_split, strongly_m_nil_clean, strongly_m_nil_clean_search, weakly_periodic_witness,
    MNilCleanReport, NilCleanSplit, WeaklyPeriodicWitness,
};
pub use profile::{
    classify_ring, FlagEntry, ProfileOptions, RingProfile, Status, Witness, TRIVIAL_FLAGS,
};
pub use qbound::{
    lift_potent_mod_nil, potent_split_with, q_bound, split_candidates, tripotent_potent_decompose,
    LiftResult, PotentSplit, QBound, SplitMode,
};

/// Least `(n, k)` with `x^(n+k) = x^n`.
pub fn element_period(ring: &FiniteRing, x: Elem) -> PeriodData {
    ring.period_of(x)
}

/// `x = a + b` with `b` potent and `a` nilpotent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub x: Elem,
    /// Nilpotent part.
    pub a: Elem,
    /// Potent part.
    pub b: Elem,
    pub period: PeriodData,
    /// Least m ≥ 2 with `b^m = b`.
    pub m_potency: u64,
    /// Least i with `a^i = 0`.
    pub nil_index: u32,
    pub commute: bool,
    /// `ab = ba = 0`.
    pub annihilate: bool,
}

impl Decomposition {
    /// Re-checks every claim by multiplying out.
    pub fn verify(&self, ring: &FiniteRing) -> Result<(), String> {
        let (a, b) = (self.a, self.b);
        if ring.add(a, b) != self.x {
            return Err(format!("a + b ≠ x for x = {}", ring.label(self.x)));
        }
        let k = self.period.period;
        if ring.pow(b, k + 1) != b {
            return Err(format!("b^{} ≠ b", k + 1));
        }
        if ring.pow(b, self.m_potency) != b {
            return Err(format!("b^{} ≠ b", self.m_potency));
        }
        if ring.pow(a, self.period.index) != ring.zero() {
            return Err(format!("a^{} ≠ 0", self.period.index));
        }
        if ring.pow(a, self.nil_index as u64) != ring.zero() {
            return Err(format!("a^{} ≠ 0", self.nil_index));
        }
        let (ab, ba) = (ring.mul(a, b), ring.mul(b, a));
        if self.commute != (ab == ba) || self.annihilate != (ab == ring.zero() && ba == ring.zero())
        {
            return Err("product flags disagree with the products".into());
        }
        Ok(())
    }
}

/// With `(n, k)` the period of x and N the least multiple of k with
/// `N ≥ n`, `b = x^(N+1)` and `a = x − b`.
pub fn potent_nilpotent_decompose(ring: &FiniteRing, x: Elem) -> Decomposition {
    let period = ring.period_of(x);
    let (n, k) = (period.index, period.period);
    let big_n = n.div_ceil(k) * k;
    let b = ring.pow(x, big_n + 1);
    let a = ring.sub(x, b);
    let m_potency = ring
        .period_of(b)
        .potency()
        .expect("x^(N+1) lies on the cycle of x");
    let nil_index = ring.nil_index(a).expect("x − x^(N+1) is nilpotent");
    let (ab, ba) = (ring.mul(a, b), ring.mul(b, a));
    Decomposition {
        x,
        a,
        b,
        period,
        m_potency,
        nil_index,
        commute: ab == ba,
        annihilate: ab == ring.zero() && ba == ring.zero(),
    }
}

/// Least `(n, k)`, n first, with `x^(n+k) = x^n` for every x: the largest
/// element index and the lcm of the element periods.
pub fn uniform_period(ring: &FiniteRing) -> PeriodData {
    let d = ring.element_data();
    let mut out = PeriodData {
        index: 1,
        period: 1,
    };
    for p in &d.periods {
        out.index = out.index.max(p.index);
        out.period = out.period.lcm(&p.period);
    }
    out
}

/// What a uniform law `x^(n+k) = x^n` forces on the characteristic and on
/// potency.
#[derive(Clone, Debug, Serialize)]
pub struct RemarkReport {
    pub uniform: PeriodData,
    pub characteristic: CharData,
    /// `x^(n+2) = x^n` uniformly: the characteristic divides `2^n · 3`.
    /// `None` when the uniform period does not divide 2.
    pub char_divides: Option<bool>,
    /// A uniform exponent pair `(m, n)` of opposite parity, when one exists.
    pub opposite_parity: Option<(u64, u64)>,
    /// Whether the ring is potent; asserted when `opposite_parity` is set.
    pub potent: bool,
}

impl RemarkReport {
    pub fn passed(&self) -> bool {
        self.char_divides != Some(false) && (self.opposite_parity.is_none() || self.potent)
    }
}

pub fn check_remark_2_2(ring: &FiniteRing) -> RemarkReport {
    let u = uniform_period(ring);
    let ch = ring.characteristic();
    let char_divides = (2 % u.period == 0).then(|| {
        let bound = 3u128 << u.index.min(100);
        bound.is_multiple_of(ch.characteristic as u128)
    });
    // m − n may be any multiple of k, so odd k gives both parities
    let opposite_parity = (u.period % 2 == 1).then_some((u.index + u.period, u.index));
    RemarkReport {
        uniform: u,
        characteristic: ch,
        char_divides,
        opposite_parity,
        potent: u.index == 1,
    }
}

/// Everything the element-level predicates say about one element.
#[derive(Clone, Debug, Serialize)]
pub struct ElementReport {
    pub element: Elem,
    pub label: String,
    pub period: PeriodData,
    pub nilpotent: bool,
    pub nil_index: Option<u32>,
    pub idempotent: bool,
    pub tripotent: bool,
    /// Least m ≥ 2 with `x^m = x`.
    pub m_potent: Option<u64>,
    pub unit: bool,
    pub unit_order: Option<u64>,
    pub in_radical: bool,
    pub central: bool,
}

pub fn classify_element(ring: &FiniteRing, x: Elem) -> ElementReport {
    let period = ring.period_of(x);
    let nil_index = ring.nil_index(x);
    ElementReport {
        element: x,
        label: ring.label(x),
        period,
        nilpotent: nil_index.is_some(),
        nil_index,
        idempotent: ring.is_idempotent(x),
        tripotent: ring.pow(x, 3) == x,
        m_potent: period.potency(),
        unit: ring.is_unit(x),
        unit_order: ring.unit_order(x),
        in_radical: ring.jacobson_radical().set.contains(x),
        central: ring.center().contains(x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic_ring, galois_field, matrix_ring, Shape};
    use crate::ring::BUILD_CAP;

    #[test]
    fn periods() {
        let z12 = cyclic_ring(12).unwrap();
        assert_eq!(
            element_period(&z12, 2),
            PeriodData {
                index: 2,
                period: 2
            }
        );
        assert_eq!(
            element_period(&z12, 1),
            PeriodData {
                index: 1,
                period: 1
            }
        );
        let z8 = cyclic_ring(8).unwrap();
        assert_eq!(
            element_period(&z8, 2),
            PeriodData {
                index: 3,
                period: 1
            }
        );
    }

    #[test]
    fn decompositions() {
        let z12 = cyclic_ring(12).unwrap();
        let d = potent_nilpotent_decompose(&z12, 2);
        assert_eq!((d.a, d.b), (6, 8));
        d.verify(&z12).unwrap();
        let z6 = cyclic_ring(6).unwrap();
        let d = potent_nilpotent_decompose(&z6, 5);
        assert_eq!((d.a, d.b), (0, 5));
        let z8 = cyclic_ring(8).unwrap();
        let d = potent_nilpotent_decompose(&z8, 2);
        assert_eq!((d.a, d.b), (2, 0));
    }

    #[test]
    fn uniform_periods_and_remark() {
        let u = |r: &FiniteRing| {
            let p = uniform_period(r);
            (p.index, p.period)
        };
        assert_eq!(u(&cyclic_ring(6).unwrap()), (1, 2));
        assert_eq!(u(&cyclic_ring(4).unwrap()), (2, 2));
        let f2 = galois_field(2, 1).unwrap();
        let m = matrix_ring(2, &f2, Shape::Full, BUILD_CAP).unwrap();
        assert_eq!(u(&m), (2, 6));
        let r = check_remark_2_2(&cyclic_ring(4).unwrap());
        assert_eq!(r.char_divides, Some(true));
        assert!(r.passed());
        let r = check_remark_2_2(&f2);
        assert_eq!(r.opposite_parity, Some((2, 1)));
        assert!(r.passed());
    }

    #[test]
    fn element_reports() {
        let z6 = cyclic_ring(6).unwrap();
        let e = classify_element(&z6, 3);
        assert!(e.idempotent && !e.unit);
        assert_eq!(e.m_potent, Some(2));
        let z4 = cyclic_ring(4).unwrap();
        let e = classify_element(&z4, 3);
        assert_eq!(e.unit_order, Some(2));
        assert_eq!(e.m_potent, Some(3));
    }
}
