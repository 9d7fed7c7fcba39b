use serde::Serialize;

use crate::ring::{Elem, FiniteRing};

use super::potent_nilpotent_decompose;

/// `x = sign·p + q` with p from the candidate set and q nilpotent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NilCleanSplit {
    pub x: Elem,
    pub p: Elem,
    pub q: Elem,
    /// `1` or `−1`; `−1` only for the weak variant.
    pub sign: i8,
}

/// First candidate p (in the given order) with `x − p` nilpotent, or with
/// `x + p` nilpotent when `allow_negative`. `commuting` additionally asks
/// for `px = xp`.
pub fn nil_clean_split(
    ring: &FiniteRing,
    x: Elem,
    candidates: &[Elem],
    commuting: bool,
    allow_negative: bool,
) -> Option<NilCleanSplit> {
    let nil = &ring.element_data().nilpotents;
    for &p in candidates {
        if commuting && !ring.commute(p, x) {
            continue;
        }
        let q = ring.sub(x, p);
        if nil.contains(q) {
            return Some(NilCleanSplit { x, p, q, sign: 1 });
        }
        if allow_negative {
            let q = ring.add(x, p);
            if nil.contains(q) {
                return Some(NilCleanSplit { x, p, q, sign: -1 });
            }
        }
    }
    None
}

/// `{b : b^m = b}`, ascending.
pub fn m_potents(ring: &FiniteRing, m: u64) -> Vec<Elem> {
    assert!(m >= 2);
    let d = ring.element_data();
    ring.elements()
        .filter(|&b| {
            let p = d.periods[b as usize];
            p.index == 1 && (m - 1).is_multiple_of(p.period)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct MNilCleanReport {
    pub m: u64,
    pub holds: bool,
    /// Largest element that is not a commuting sum of an m-potent and a
    /// nilpotent. For it `x^m − x` is not nilpotent, which rules out every
    /// such sum.
    pub counterwitness: Option<Elem>,
    /// `(x, b, a)` with `x = b + a`, `b^m = b`, a nilpotent, `ab = ba`;
    /// empty unless witnesses were requested.
    pub witnesses: Vec<(Elem, Elem, Elem)>,
}

/// If `x = b + a` with `b^m = b`, a nilpotent and `ab = ba`, then
/// `x^m − x = (b^m − b) + (terms divisible by a)` is nilpotent. Conversely
/// in the finite commutative subring generated by x, an m-potent lifts
/// modulo the nilradical, so the test is exact.
pub fn is_strongly_m_nil_clean_element(ring: &FiniteRing, x: Elem, m: u64) -> bool {
    ring.is_nilpotent(ring.sub(ring.pow(x, m), x))
}

/// An m-potent b commuting with x with `x − b` nilpotent, searched among 0
/// and the powers of x first, then the additive span of those powers.
pub fn strongly_m_nil_clean_witness(ring: &FiniteRing, x: Elem, m: u64) -> Option<Elem> {
    let ok =
        |b: Elem| ring.pow(b, m) == b && ring.is_nilpotent(ring.sub(x, b)) && ring.commute(b, x);
    let period = ring.period_of(x);
    let mut powers = Vec::new();
    let mut p = x;
    for _ in 0..period.index + period.period {
        powers.push(p);
        p = ring.mul(p, x);
    }
    if let Some(b) = std::iter::once(ring.zero())
        .chain(powers.iter().copied())
        .find(|&b| ok(b))
    {
        return Some(b);
    }
    let span = ring.additive_span(std::iter::once(ring.one()).chain(powers));
    span.members().iter().copied().find(|&b| ok(b))
}

/// Every element is a commuting sum of an m-potent and a nilpotent.
pub fn strongly_m_nil_clean(ring: &FiniteRing, m: u64, with_witnesses: bool) -> MNilCleanReport {
    assert!(m >= 2, "m-potents need m ≥ 2");
    let counterwitness = ring
        .elements()
        .rev()
        .find(|&x| !is_strongly_m_nil_clean_element(ring, x, m));
    let mut witnesses = Vec::new();
    if counterwitness.is_none() && with_witnesses {
        for x in ring.elements() {
            let b = strongly_m_nil_clean_witness(ring, x, m)
                .expect("an m-potent lifts whenever x^m − x is nilpotent");
            witnesses.push((x, b, ring.sub(x, b)));
        }
    }
    MNilCleanReport {
        m,
        holds: counterwitness.is_none(),
        counterwitness,
        witnesses,
    }
}

/// Full-ring search for a commuting m-potent part; the slow reference the
/// nilpotency test above is checked against.
pub fn strongly_m_nil_clean_search(ring: &FiniteRing, x: Elem, m: u64) -> Option<Elem> {
    nil_clean_split(ring, x, &m_potents(ring, m), true, false).map(|s| s.p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeaklyPeriodicWitness {
    pub x: Elem,
    /// Potent part.
    pub p: Elem,
    /// Nilpotent part.
    pub q: Elem,
    /// Least m ≥ 2 with `p^m = p`.
    pub potency: u64,
}

/// `x = p + q` for every x, taken from the potent/nilpotent decomposition.
pub fn weakly_periodic_witness(ring: &FiniteRing) -> Vec<WeaklyPeriodicWitness> {
    ring.elements()
        .map(|x| {
            let d = potent_nilpotent_decompose(ring, x);
            WeaklyPeriodicWitness {
                x,
                p: d.b,
                q: d.a,
                potency: d.m_potency,
            }
        })
        .collect()
}
