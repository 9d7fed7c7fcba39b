use num_integer::Integer;
use serde::Serialize;

use crate::constructions::{matrix_ring, MatrixCarrier, Shape, Twist};
use crate::ring::{Elem, FiniteRing, Subset};
use crate::{Result, RingError};

/// The exponent q with `A^q − A` nilpotent for every n×n matrix A.
#[derive(Clone, Debug, Serialize)]
pub struct QBound {
    pub q: u64,
    /// Orders of the fields in `R/J`, ascending.
    pub field_orders: Vec<u64>,
    pub n: usize,
    pub matrices_checked: usize,
    /// A matrix with `A^q − A` not nilpotent.
    pub violation: Option<Elem>,
}

/// Orders of the simple components of a commutative semisimple ring, read
/// off its primitive idempotents.
fn field_orders(q: &FiniteRing) -> Vec<u64> {
    let idem = q.element_data().idempotents.members().to_vec();
    let zero = q.zero();
    let mut out: Vec<u64> = idem
        .iter()
        .copied()
        .filter(|&e| e != zero)
        .filter(|&e| {
            !idem
                .iter()
                .any(|&f| f != zero && f != e && q.mul(f, e) == f)
        })
        .map(|e| {
            let mut ideal: Vec<Elem> = q.elements().map(|y| q.mul(e, y)).collect();
            ideal.sort_unstable();
            ideal.dedup();
            ideal.len() as u64
        })
        .collect();
    out.sort_unstable();
    out
}

/// `q = lcm{|F|^i − 1 : F a field of R/J, 1 ≤ i ≤ n} + 1`, verified over
/// every matrix of `M(n, R)`. Needs R abelian and R/J commutative.
pub fn q_bound(ring: &FiniteRing, n: usize, cap: usize) -> Result<QBound> {
    if n == 0 {
        return Err(RingError::InvalidParameter(
            "matrix size must be at least 1".into(),
        ));
    }
    let center = ring.center();
    let data = ring.element_data();
    if let Some(&e) = data
        .idempotents
        .members()
        .iter()
        .find(|&&e| !center.contains(e))
    {
        return Err(RingError::Precondition(format!(
            "{} is not abelian: idempotent {} is not central",
            ring.expr(),
            ring.label(e)
        )));
    }
    let quot = ring.quotient_by_radical()?;
    if let Some((x, y)) = quot.ring.first_noncommuting_pair() {
        return Err(RingError::Precondition(format!(
            "R/J is not commutative: {} and {} do not commute",
            quot.ring.label(x),
            quot.ring.label(y)
        )));
    }
    let fields = field_orders(&quot.ring);
    let mut l: u64 = 1;
    for &f in &fields {
        let mut fi: u64 = 1;
        for _ in 0..n {
            fi = fi
                .checked_mul(f)
                .ok_or_else(|| RingError::SizeOverflow(format!("|F|^{n} for |F| = {f}")))?;
            l = l.lcm(&(fi - 1));
        }
    }
    let q = l + 1;
    let m = matrix_ring(n, ring, Shape::Full, cap)?;
    let violation = m
        .elements()
        .find(|&a| !m.is_nilpotent(m.sub(m.pow(a, q), a)));
    Ok(QBound {
        q,
        field_orders: fields,
        n,
        matrices_checked: m.order(),
        violation,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitMode {
    /// `A = t + p` with `t³ = t`.
    Tripotent,
    /// `A = e + p` with `e² = e`; needs 3 to be a unit of the base.
    Idempotent,
}

impl SplitMode {
    fn exponent(self) -> u64 {
        match self {
            SplitMode::Tripotent => 3,
            SplitMode::Idempotent => 2,
        }
    }
}

/// `a = t + p` with t tripotent (or idempotent) and p potent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PotentSplit {
    pub a: Elem,
    pub t: Elem,
    pub p: Elem,
    pub t_exponent: u64,
    /// Least m ≥ 2 with `p^m = p`.
    pub p_potency: u64,
}

/// Candidate first parts for [`tripotent_potent_decompose`], after checking
/// the preconditions on the base ring.
pub fn split_candidates(ring: &FiniteRing, mode: SplitMode) -> Result<Vec<Elem>> {
    let c = ring
        .carrier::<MatrixCarrier>()
        .filter(|c| c.twist() == Twist::None && c.shape() == Shape::Full)
        .ok_or_else(|| {
            RingError::Precondition(format!("{} is not a full matrix ring", ring.expr()))
        })?;
    let base = c.base();
    if let Some(x) = base.elements().find(|&x| !base.period_of(x).is_potent()) {
        return Err(RingError::Precondition(format!(
            "base ring {} is not potent: {} is not",
            base.expr(),
            base.label(x)
        )));
    }
    if mode == SplitMode::Idempotent && !base.is_unit(base.int(3)) {
        return Err(RingError::Precondition(format!(
            "3 is not a unit of {}",
            base.expr()
        )));
    }
    let e = mode.exponent();
    Ok(ring.elements().filter(|&t| ring.pow(t, e) == t).collect())
}

/// First candidate t in index order with `a − t` potent, or `None` when
/// there is none.
pub fn potent_split_with(
    ring: &FiniteRing,
    a: Elem,
    mode: SplitMode,
    candidates: &[Elem],
) -> Option<PotentSplit> {
    let d = ring.element_data();
    candidates.iter().find_map(|&t| {
        let p = ring.sub(a, t);
        d.periods[p as usize]
            .potency()
            .map(|p_potency| PotentSplit {
                a,
                t,
                p,
                t_exponent: mode.exponent(),
                p_potency,
            })
    })
}

/// A matrix over a potent ring as tripotent (or idempotent) plus potent.
/// `Ok(None)` means no such sum exists for `a`.
pub fn tripotent_potent_decompose(
    ring: &FiniteRing,
    a: Elem,
    mode: SplitMode,
) -> Result<Option<PotentSplit>> {
    let cands = split_candidates(ring, mode)?;
    Ok(potent_split_with(ring, a, mode, &cands))
}

/// A potent element of the coset `x + I`.
#[derive(Clone, Debug, Serialize)]
pub struct LiftResult {
    pub x: Elem,
    /// Least m ≥ 2 with `x̄^m = x̄` in `R/I`.
    pub quotient_potency: u64,
    pub coset_size: usize,
    pub f: Option<Elem>,
    pub f_potency: Option<u64>,
}

/// Scans `x + I` in index order for an element f with `f^m = f`. Needs I
/// nil and `x + I` potent in `R/I`.
pub fn lift_potent_mod_nil(ring: &FiniteRing, ideal: &Subset, x: Elem) -> Result<LiftResult> {
    if let Some(&y) = ideal.members().iter().find(|&&y| !ring.is_nilpotent(y)) {
        return Err(RingError::Precondition(format!(
            "ideal is not nil: {} is not nilpotent",
            ring.label(y)
        )));
    }
    let quot = ring.quotient(ideal)?;
    let xb = quot.projection[x as usize];
    let quotient_potency = quot.ring.period_of(xb).potency().ok_or_else(|| {
        RingError::Precondition(format!("{} is not potent modulo the ideal", ring.label(x)))
    })?;
    let mut coset: Vec<Elem> = ideal.members().iter().map(|&i| ring.add(x, i)).collect();
    coset.sort_unstable();
    let hit = coset
        .iter()
        .find_map(|&f| ring.period_of(f).potency().map(|m| (f, m)));
    Ok(LiftResult {
        x,
        quotient_potency,
        coset_size: coset.len(),
        f: hit.map(|h| h.0),
        f_potency: hit.map(|h| h.1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic_ring, galois_field};
    use crate::ring::{SubsetKind, BUILD_CAP};

    #[test]
    fn q_values() {
        let f2 = galois_field(2, 1).unwrap();
        let b = q_bound(&f2, 2, BUILD_CAP).unwrap();
        assert_eq!((b.q, b.matrices_checked, b.violation), (4, 16, None));
        let z4 = cyclic_ring(4).unwrap();
        let b = q_bound(&z4, 2, BUILD_CAP).unwrap();
        assert_eq!((b.q, b.matrices_checked, b.violation), (4, 256, None));
        let f3 = galois_field(3, 1).unwrap();
        assert_eq!(q_bound(&f3, 1, BUILD_CAP).unwrap().q, 3);
        let z6 = cyclic_ring(6).unwrap();
        let b = q_bound(&z6, 1, BUILD_CAP).unwrap();
        assert_eq!(b.field_orders, vec![2, 3]);
        assert_eq!(b.q, 3);
    }

    #[test]
    fn q_bound_rejects_non_abelian() {
        let f2 = galois_field(2, 1).unwrap();
        let m = matrix_ring(2, &f2, Shape::Full, BUILD_CAP).unwrap();
        assert!(matches!(
            q_bound(&m, 1, BUILD_CAP),
            Err(RingError::Precondition(_))
        ));
    }

    #[test]
    fn splits() {
        let f2 = galois_field(2, 1).unwrap();
        let m = matrix_ring(2, &f2, Shape::Full, BUILD_CAP).unwrap();
        let cands = split_candidates(&m, SplitMode::Tripotent).unwrap();
        for a in m.elements() {
            let s = potent_split_with(&m, a, SplitMode::Tripotent, &cands).unwrap();
            assert_eq!(m.add(s.t, s.p), a);
        }
        let z6 = cyclic_ring(6).unwrap();
        let m6 = matrix_ring(2, &z6, Shape::Full, BUILD_CAP).unwrap();
        assert!(split_candidates(&m6, SplitMode::Idempotent).is_err());
        let s = tripotent_potent_decompose(&m6, m6.zero(), SplitMode::Tripotent)
            .unwrap()
            .unwrap();
        assert_eq!((s.t, s.p), (0, 0));
    }

    #[test]
    fn lifts() {
        let z4 = cyclic_ring(4).unwrap();
        let i = Subset::from_members(&z4, [0, 2], SubsetKind::Ideal);
        let l = lift_potent_mod_nil(&z4, &i, 3).unwrap();
        assert_eq!(l.f, Some(1));
        let z9 = cyclic_ring(9).unwrap();
        let i = Subset::from_members(&z9, [0, 3, 6], SubsetKind::Ideal);
        assert_eq!(lift_potent_mod_nil(&z9, &i, 4).unwrap().f, Some(1));
        let zero = Subset::singleton_zero(&z9, SubsetKind::Ideal);
        assert_eq!(lift_potent_mod_nil(&z9, &zero, 8).unwrap().f, Some(8));
    }
}
