use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::{Elem, FiniteRing, Subset, SubsetKind};

/// Least exponents with `x^(n+k) = x^n`: `index` is n, `period` is k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PeriodData {
    #[serde(rename = "n")]
    pub index: u64,
    #[serde(rename = "k")]
    pub period: u64,
}

impl PeriodData {
    /// `x^m = x` for some m ≥ 2.
    pub fn is_potent(&self) -> bool {
        self.index == 1
    }

    /// Least m ≥ 2 with `x^m = x`, when there is one.
    pub fn potency(&self) -> Option<u64> {
        self.is_potent().then_some(self.period + 1)
    }
}

/// Characteristic of a ring and its prime divisors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharData {
    pub characteristic: u64,
    pub pi: Vec<u64>,
}

/// Everything computed by one pass of power iteration over all elements.
pub struct ElementData {
    pub periods: Vec<PeriodData>,
    pub units: Subset,
    pub idempotents: Subset,
    pub nilpotents: Subset,
    /// Nilpotency index per element, 0 when the element is not nilpotent.
    pub nil_index: Vec<u32>,
}

/// Units, idempotents and nilpotents, with nilpotency indices.
#[derive(Clone, Debug)]
pub struct UnitsIdempotentsNilpotents {
    pub units: Subset,
    pub idempotents: Subset,
    pub nilpotents: Subset,
    /// `(x, In(x))` for every nilpotent x, ascending by x.
    pub nil_indices: Vec<(Elem, u32)>,
    /// Largest nilpotency index; `In(0) = 1`.
    pub ring_index: u32,
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FiniteRing {
    /// Additive order of the identity and its prime divisors.
    pub fn characteristic(&self) -> CharData {
        self.inner
            .cache
            .characteristic
            .get_or_init(|| {
                let one = self.one();
                let mut t = 1u64;
                let mut acc = one;
                while acc != self.zero() {
                    acc = self.add(acc, one);
                    t += 1;
                }
                CharData {
                    characteristic: t,
                    pi: prime_factors(t),
                }
            })
            .clone()
    }

    /// Power iteration with cycle detection for a single element.
    pub fn period_of(&self, x: Elem) -> PeriodData {
        if let Some(d) = self.inner.cache.elements.get() {
            return d.periods[x as usize];
        }
        let mut seen: HashMap<Elem, u64> = HashMap::new();
        let mut p = x;
        let mut i = 1u64;
        loop {
            if let Some(&j) = seen.get(&p) {
                return PeriodData {
                    index: j,
                    period: i - j,
                };
            }
            seen.insert(p, i);
            p = self.mul(p, x);
            i += 1;
        }
    }

    /// Periods, units, idempotents and nilpotents of every element,
    /// computed once.
    pub fn element_data(&self) -> Arc<ElementData> {
        self.inner
            .cache
            .elements
            .get_or_init(|| Arc::new(self.compute_element_data()))
            .clone()
    }

    fn compute_element_data(&self) -> ElementData {
        let n = self.order();
        let mut stamp = vec![u32::MAX; n];
        let mut seen_at = vec![0u64; n];
        let mut periods = Vec::with_capacity(n);
        let mut unit = vec![false; n];
        let mut idem = vec![false; n];
        let mut nil = vec![false; n];
        let mut nil_index = vec![0u32; n];
        for x in self.elements() {
            let mut p = x;
            let mut i = 1u64;
            let pd = loop {
                if stamp[p as usize] == x {
                    let j = seen_at[p as usize];
                    break PeriodData {
                        index: j,
                        period: i - j,
                    };
                }
                stamp[p as usize] = x;
                seen_at[p as usize] = i;
                p = self.mul(p, x);
                i += 1;
            };
            let xu = x as usize;
            // x^n is where the cycle starts; nilpotent iff that is zero
            let xn = self.pow(x, pd.index);
            if xn == self.zero() {
                nil[xu] = true;
                nil_index[xu] = pd.index as u32;
            }
            if pd.index == 1 && self.pow(x, pd.period) == self.one() {
                unit[xu] = true;
            }
            idem[xu] = self.mul(x, x) == x;
            periods.push(pd);
        }
        ElementData {
            periods,
            units: Subset::from_mask(self, &unit, SubsetKind::Units),
            idempotents: Subset::from_mask(self, &idem, SubsetKind::Idempotents),
            nilpotents: Subset::from_mask(self, &nil, SubsetKind::Nilpotents),
            nil_index,
        }
    }

    pub fn units_idempotents_nilpotents(&self) -> UnitsIdempotentsNilpotents {
        let d = self.element_data();
        let nil_indices: Vec<(Elem, u32)> = d
            .nilpotents
            .members()
            .iter()
            .map(|&x| (x, d.nil_index[x as usize]))
            .collect();
        let ring_index = nil_indices.iter().map(|&(_, i)| i).max().unwrap_or(1);
        UnitsIdempotentsNilpotents {
            units: d.units.clone(),
            idempotents: d.idempotents.clone(),
            nilpotents: d.nilpotents.clone(),
            nil_indices,
            ring_index,
        }
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        self.element_data().units.contains(x)
    }

    /// Unit test by injectivity of left multiplication. Slower than the
    /// cached answer; kept as an independent check.
    pub fn is_unit_by_injectivity(&self, x: Elem) -> bool {
        let mut hit = vec![false; self.order()];
        for y in self.elements() {
            let z = self.mul(x, y) as usize;
            if hit[z] {
                return false;
            }
            hit[z] = true;
        }
        true
    }

    pub fn is_nilpotent(&self, x: Elem) -> bool {
        self.element_data().nilpotents.contains(x)
    }

    /// Nilpotency index, or `None` for non-nilpotent elements.
    pub fn nil_index(&self, x: Elem) -> Option<u32> {
        match self.element_data().nil_index[x as usize] {
            0 => None,
            i => Some(i),
        }
    }

    pub fn is_idempotent(&self, x: Elem) -> bool {
        self.mul(x, x) == x
    }

    pub fn inverse(&self, x: Elem) -> Option<Elem> {
        let d = self.element_data();
        if !d.units.contains(x) {
            return None;
        }
        Some(self.pow(x, d.periods[x as usize].period - 1))
    }

    /// Multiplicative order of a unit.
    pub fn unit_order(&self, x: Elem) -> Option<u64> {
        let d = self.element_data();
        d.units.contains(x).then(|| d.periods[x as usize].period)
    }

    /// `{x : xy = yx for all y}`. Commuting with an additive generating
    /// set suffices.
    pub fn center(&self) -> Subset {
        self.inner
            .cache
            .center
            .get_or_init(|| {
                let gens = self.additive_generators(self.elements());
                let members = self
                    .elements()
                    .filter(|&x| gens.iter().all(|&g| self.commute(x, g)));
                Subset::from_members(self, members, SubsetKind::Center)
            })
            .clone()
    }
}
