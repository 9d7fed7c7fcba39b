use crate::ring::{prime_factors, Carrier, Elem, FiniteRing};
use crate::{Result, RingError};

/// Integers modulo n.
pub struct CyclicCarrier {
    n: u64,
}

impl CyclicCarrier {
    pub fn modulus(&self) -> u64 {
        self.n
    }
}

impl Carrier for CyclicCarrier {
    fn order(&self) -> usize {
        self.n as usize
    }

    fn zero(&self) -> Elem {
        0
    }

    fn one(&self) -> Elem {
        1
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        ((a as u64 + b as u64) % self.n) as Elem
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        (a as u64 * b as u64 % self.n) as Elem
    }

    fn neg(&self, a: Elem) -> Elem {
        ((self.n - a as u64) % self.n) as Elem
    }

    fn label(&self, a: Elem) -> String {
        a.to_string()
    }

    fn structural_radical(&self) -> Option<Vec<Elem>> {
        let rad: u64 = prime_factors(self.n).iter().product();
        Some(
            (0..self.n)
                .step_by(rad as usize)
                .map(|x| x as Elem)
                .collect(),
        )
    }
}

/// `Z(n)`.
pub fn cyclic_ring(n: u64) -> Result<FiniteRing> {
    if n < 2 {
        return Err(RingError::InvalidParameter(format!(
            "Z({n}): modulus must be at least 2"
        )));
    }
    if n > u32::MAX as u64 {
        return Err(RingError::SizeOverflow(format!("Z({n})")));
    }
    Ok(FiniteRing::new(CyclicCarrier { n }, format!("Z({n})")))
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

/// Polynomials over Z_p as coefficient vectors, constant term first.
fn poly_mod(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    let k = f.len() - 1;
    while a.len() > k {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let shift = a.len() - k;
            for (i, &c) in f[..k].iter().enumerate() {
                let t = &mut a[shift + i];
                *t = (*t + (p - c) * lead) % p;
            }
        }
    }
    a
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn digits(mut x: u64, p: u64, len: usize) -> Vec<u64> {
    let mut v = Vec::with_capacity(len);
    for _ in 0..len {
        v.push(x % p);
        x /= p;
    }
    v
}

fn has_factor_of_degree(f: &[u64], d: usize, p: u64) -> bool {
    // trial division by every monic polynomial of degree d
    (0..p.pow(d as u32)).any(|code| {
        let mut g = digits(code, p, d);
        g.push(1);
        poly_rem(f, &g, p).iter().all(|&c| c == 0)
    })
}

fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    poly_mod(f.to_vec(), g, p)
}

/// The monic irreducible of degree k whose lower coefficients, read as a
/// base-p number with the constant term least significant, are smallest.
pub fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    (0..p.pow(k as u32))
        .map(|code| {
            let mut f = digits(code, p, k);
            f.push(1);
            f
        })
        .find(|f| (1..=k / 2).all(|d| !has_factor_of_degree(f, d, p)))
        .expect("irreducible polynomials exist in every degree")
}

/// `GF(p^k)` as `Z_p[a]/(f)`. Elements are coefficient vectors encoded in
/// base p, constant term least significant.
pub struct GaloisCarrier {
    p: u64,
    k: usize,
    modulus: Vec<u64>,
}

impl GaloisCarrier {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// Monic modulus, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn encode(&self, c: &[u64]) -> Elem {
        c.iter().rev().fold(0u64, |acc, &d| acc * self.p + d) as Elem
    }

    fn decode(&self, x: Elem) -> Vec<u64> {
        digits(x as u64, self.p, self.k)
    }
}

impl Carrier for GaloisCarrier {
    fn order(&self) -> usize {
        self.p.pow(self.k as u32) as usize
    }

    fn zero(&self) -> Elem {
        0
    }

    fn one(&self) -> Elem {
        1
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        let (a, b) = (self.decode(a), self.decode(b));
        let s: Vec<u64> = a.iter().zip(&b).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&s)
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let prod = poly_mul(&self.decode(a), &self.decode(b), self.p);
        let mut r = poly_mod(prod, &self.modulus, self.p);
        r.resize(self.k, 0);
        self.encode(&r)
    }

    fn neg(&self, a: Elem) -> Elem {
        let n: Vec<u64> = self
            .decode(a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.encode(&n)
    }

    fn label(&self, a: Elem) -> String {
        if self.k == 1 {
            return a.to_string();
        }
        let c = self.decode(a);
        let mut terms = Vec::new();
        for (i, &x) in c.iter().enumerate().rev() {
            if x == 0 {
                continue;
            }
            let coef = if x == 1 && i > 0 {
                String::new()
            } else {
                x.to_string()
            };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}a"),
                _ => format!("{coef}a^{i}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    fn structural_radical(&self) -> Option<Vec<Elem>> {
        Some(vec![0])
    }
}

/// `GF(p, k)`, the field with p^k elements.
pub fn galois_field(p: u64, k: u32) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(RingError::InvalidParameter(format!(
            "GF({p},{k}): {p} is not prime"
        )));
    }
    if k == 0 {
        return Err(RingError::InvalidParameter(format!(
            "GF({p},{k}): degree must be positive"
        )));
    }
    match p.checked_pow(k) {
        Some(q) if q <= u32::MAX as u64 => {}
        _ => return Err(RingError::SizeOverflow(format!("GF({p},{k})"))),
    }
    let modulus = smallest_irreducible(p, k as usize);
    Ok(FiniteRing::new(
        GaloisCarrier {
            p,
            k: k as usize,
            modulus,
        },
        format!("GF({p},{k})"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(smallest_irreducible(5, 1), vec![0, 1]);
    }

    #[test]
    fn galois_field_is_a_field() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (3, 2), (5, 1), (2, 4)] {
            let f = galois_field(p, k).unwrap();
            let units = f.units_idempotents_nilpotents().units;
            assert_eq!(units.len(), f.order() - 1, "GF({p},{k})");
            let q = f.order() as u64;
            assert!(f.elements().all(|x| f.pow(x, q) == x));
        }
    }

    #[test]
    fn gf4_labels() {
        let f = galois_field(2, 2).unwrap();
        let labels: Vec<String> = f.elements().map(|x| f.label(x)).collect();
        assert_eq!(labels, ["0", "1", "a", "a+1"]);
        // a^2 = a + 1
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(cyclic_ring(1).is_err());
        assert!(galois_field(4, 1).is_err());
        assert!(galois_field(2, 0).is_err());
    }
}
