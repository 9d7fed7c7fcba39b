use crate::ring::{Carrier, Elem, FiniteRing, Radix, MAX_SLOTS};
use crate::{Result, RingError};

use super::cyclic::{is_prime, smallest_irreducible};

/// A free algebra of finite rank over `Z_c`, given by structure constants:
/// `e_i e_j = Σ_k consts[(i*r + j)*r + k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub modulus: u64,
    pub rank: usize,
    pub consts: Vec<u64>,
    pub unit: Vec<u64>,
    pub name: String,
}

impl AlgebraPresentation {
    /// Checks shapes, associativity on basis triples and the unit.
    pub fn new(
        modulus: u64,
        rank: usize,
        consts: Vec<u64>,
        unit: Vec<u64>,
        name: String,
    ) -> Result<Self> {
        if modulus < 2 || rank == 0 {
            return Err(RingError::InvalidParameter(format!(
                "{name}: modulus must be ≥ 2 and rank ≥ 1"
            )));
        }
        if consts.len() != rank * rank * rank || unit.len() != rank {
            return Err(RingError::InvalidParameter(format!(
                "{name}: expected {} structure constants and {rank} unit coordinates",
                rank * rank * rank
            )));
        }
        let alg = AlgebraPresentation {
            modulus,
            rank,
            consts: consts.iter().map(|x| x % modulus).collect(),
            unit: unit.iter().map(|x| x % modulus).collect(),
            name,
        };
        alg.validate()
            .map_err(|e| RingError::Axiom(format!("{}: {e}", alg.name)))?;
        Ok(alg)
    }

    fn basis(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }

    /// Product of coordinate vectors.
    pub fn mul_coords(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let (r, c) = (self.rank, self.modulus);
        let mut out = vec![0u64; r];
        for i in 0..r {
            if x[i] == 0 {
                continue;
            }
            for j in 0..r {
                let xy = x[i] * y[j] % c;
                if xy == 0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o = (*o + xy * self.consts[(i * r + j) * r + k]) % c;
                }
            }
        }
        out
    }

    fn validate(&self) -> std::result::Result<(), String> {
        let r = self.rank;
        for i in 0..r {
            let ei = self.basis(i);
            if self.mul_coords(&self.unit, &ei) != ei || self.mul_coords(&ei, &self.unit) != ei {
                return Err(format!("unit does not act as identity on e{i}"));
            }
            for j in 0..r {
                let eij = self.mul_coords(&ei, &self.basis(j));
                for k in 0..r {
                    let ek = self.basis(k);
                    let left = self.mul_coords(&eij, &ek);
                    let right = self.mul_coords(&ei, &self.mul_coords(&self.basis(j), &ek));
                    if left != right {
                        return Err(format!(
                            "structure constants not associative at (e{i}, e{j}, e{k})"
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Z_c` as a rank-one algebra.
    pub fn cyclic(c: u64) -> Result<Self> {
        Self::new(c, 1, vec![1], vec![1], format!("Z({c})"))
    }

    /// `GF(p^k)` over `Z_p` with basis `1, a, …, a^{k-1}`.
    pub fn galois(p: u64, k: usize) -> Result<Self> {
        if !is_prime(p) || k == 0 {
            return Err(RingError::InvalidParameter(format!(
                "GF({p},{k}): need p prime, k ≥ 1"
            )));
        }
        let f = smallest_irreducible(p, k);
        let mut consts = vec![0u64; k * k * k];
        for i in 0..k {
            for j in 0..k {
                // a^{i+j} reduced modulo f
                let mut v = vec![0u64; i + j + 1];
                v[i + j] = 1;
                while v.len() > k {
                    let lead = v.pop().unwrap();
                    let shift = v.len() - k;
                    for (t, &c) in f[..k].iter().enumerate() {
                        v[shift + t] = (v[shift + t] + (p - c) * lead) % p;
                    }
                }
                v.resize(k, 0);
                for (t, &c) in v.iter().enumerate() {
                    consts[(i * k + j) * k + t] = c;
                }
            }
        }
        let mut unit = vec![0; k];
        unit[0] = 1;
        Self::new(p, k, consts, unit, format!("GF({p},{k})"))
    }

    /// `Z_c[t]/(t^k)`.
    pub fn truncated(c: u64, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(RingError::InvalidParameter(
                "TRUNC: k must be positive".into(),
            ));
        }
        let mut consts = vec![0u64; k * k * k];
        for i in 0..k {
            for j in 0..k {
                if i + j < k {
                    consts[(i * k + j) * k + i + j] = 1;
                }
            }
        }
        let mut unit = vec![0; k];
        unit[0] = 1;
        Self::new(c, k, consts, unit, format!("TRUNC({c},{k})"))
    }

    /// Order `c^r`, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        (self.modulus as u128).checked_pow(self.rank as u32)
    }

    /// `A ⊗_{Z_c} B` with basis `e_i ⊗ f_j` at position `i + r_A·j`.
    pub fn tensor(&self, other: &AlgebraPresentation) -> Result<AlgebraPresentation> {
        if self.modulus != other.modulus {
            return Err(RingError::InvalidParameter(format!(
                "tensor product needs a common base: Z({}) vs Z({})",
                self.modulus, other.modulus
            )));
        }
        let (ra, rb) = (self.rank, other.rank);
        let r = ra * rb;
        let c = self.modulus;
        let mut consts = vec![0u64; r * r * r];
        for i in 0..ra {
            for j in 0..rb {
                for i2 in 0..ra {
                    for j2 in 0..rb {
                        let (x, y) = (i + ra * j, i2 + ra * j2);
                        for k in 0..ra {
                            let a = self.consts[(i * ra + i2) * ra + k];
                            if a == 0 {
                                continue;
                            }
                            for l in 0..rb {
                                let b = other.consts[(j * rb + j2) * rb + l];
                                consts[(x * r + y) * r + k + ra * l] = a * b % c;
                            }
                        }
                    }
                }
            }
        }
        let unit = pure_tensor_coords(&self.unit, &other.unit, c);
        Self::new(
            c,
            r,
            consts,
            unit,
            format!("TEN({}, {})", self.name, other.name),
        )
    }
}

/// Coordinates of `u ⊗ v`.
pub fn pure_tensor_coords(u: &[u64], v: &[u64], c: u64) -> Vec<u64> {
    let mut out = vec![0; u.len() * v.len()];
    for (j, &y) in v.iter().enumerate() {
        for (i, &x) in u.iter().enumerate() {
            out[i + u.len() * j] = x * y % c;
        }
    }
    out
}

/// Elements are coordinate vectors, coordinate 0 least significant.
pub struct AlgebraCarrier {
    alg: AlgebraPresentation,
    radix: Radix,
}

impl AlgebraCarrier {
    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.alg
    }

    pub fn coords(&self, x: Elem) -> Vec<u64> {
        self.radix
            .decode(x as u64)
            .iter()
            .map(|&d| d as u64)
            .collect()
    }

    pub fn encode(&self, coords: &[u64]) -> Elem {
        let d: Vec<Elem> = coords
            .iter()
            .map(|&x| (x % self.alg.modulus) as Elem)
            .collect();
        self.radix.encode(&d) as Elem
    }
}

impl Carrier for AlgebraCarrier {
    fn order(&self) -> usize {
        self.radix.total().unwrap() as usize
    }

    fn zero(&self) -> Elem {
        0
    }

    fn one(&self) -> Elem {
        self.encode(&self.alg.unit)
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        let c = self.alg.modulus;
        let s: Vec<u64> = self
            .coords(a)
            .iter()
            .zip(self.coords(b))
            .map(|(x, y)| (x + y) % c)
            .collect();
        self.encode(&s)
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.encode(&self.alg.mul_coords(&self.coords(a), &self.coords(b)))
    }

    fn neg(&self, a: Elem) -> Elem {
        let c = self.alg.modulus;
        let s: Vec<u64> = self.coords(a).iter().map(|x| (c - x) % c).collect();
        self.encode(&s)
    }

    fn label(&self, a: Elem) -> String {
        let parts: Vec<String> = self.coords(a).iter().map(|x| x.to_string()).collect();
        format!("<{}>", parts.join(","))
    }
}

/// The algebra as a ring.
pub fn algebra_ring(alg: &AlgebraPresentation, cap: usize) -> Result<FiniteRing> {
    let order = if alg.rank > MAX_SLOTS {
        None
    } else {
        alg.order()
    };
    match order {
        Some(o) if o <= cap as u128 => {}
        Some(o) => {
            return Err(RingError::CapExceeded {
                what: alg.name.clone(),
                order: o,
                cap: cap as u128,
            })
        }
        None => return Err(RingError::SizeOverflow(alg.name.clone())),
    }
    Ok(FiniteRing::new(
        AlgebraCarrier {
            alg: alg.clone(),
            radix: Radix::uniform(alg.modulus, alg.rank),
        },
        alg.name.clone(),
    ))
}

/// `A ⊗ B` as a ring.
pub fn tensor_product_algebra(
    a: &AlgebraPresentation,
    b: &AlgebraPresentation,
    cap: usize,
) -> Result<FiniteRing> {
    let order = match (a.order(), b.order()) {
        (Some(x), Some(y)) => x.checked_mul(y),
        _ => None,
    };
    let name = format!("TEN({}, {})", a.name, b.name);
    match order {
        Some(o) if o <= cap as u128 => {}
        Some(o) => {
            return Err(RingError::CapExceeded {
                what: name,
                order: o,
                cap: cap as u128,
            })
        }
        None => return Err(RingError::SizeOverflow(name)),
    }
    algebra_ring(&a.tensor(b)?, cap)
}

/// Outcome of the combined-exponent check on pure tensors.
#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct ExponentLawReport {
    pub pairs_checked: u64,
    /// `(u, v, n, m)` in the factor rings where `(u⊗v)^l ≠ u⊗v`.
    pub failures: Vec<(Elem, Elem, u64, u64)>,
}

/// For every potent u in A and v in B, with least exponents `u^n = u` and
/// `v^m = v`, checks `(u⊗v)^l = u⊗v` for `l = (n−1)(m−1)+1`.
pub fn combined_exponent_check(
    a: &AlgebraPresentation,
    b: &AlgebraPresentation,
    cap: usize,
) -> Result<ExponentLawReport> {
    let ra = algebra_ring(a, cap)?;
    let rb = algebra_ring(b, cap)?;
    let t = tensor_product_algebra(a, b, cap)?;
    let (ca, cb) = (
        ra.carrier::<AlgebraCarrier>().unwrap(),
        rb.carrier::<AlgebraCarrier>().unwrap(),
    );
    let ct = t.carrier::<AlgebraCarrier>().unwrap();
    let mut report = ExponentLawReport::default();
    for u in ra.elements() {
        let Some(n) = ra.period_of(u).potency() else {
            continue;
        };
        for v in rb.elements() {
            let Some(m) = rb.period_of(v).potency() else {
                continue;
            };
            let w = ct.encode(&pure_tensor_coords(&ca.coords(u), &cb.coords(v), a.modulus));
            let l = (n - 1) * (m - 1) + 1;
            report.pairs_checked += 1;
            if t.pow(w, l) != w {
                report.failures.push((u, v, n, m));
            }
        }
    }
    Ok(report)
}
