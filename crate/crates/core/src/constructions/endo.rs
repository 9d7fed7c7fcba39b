use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_integer::Integer;

use crate::ring::{prime_factors, Carrier, Elem, FiniteRing, Radix, MAX_SLOTS};
use crate::{Result, RingError};

/// `C(d_1) ⊕ … ⊕ C(d_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroupSpec {
    pub invariants: Vec<u64>,
}

impl fmt::Display for AbelianGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.invariants.iter().map(|d| format!("C({d})")).collect();
        f.write_str(&parts.join("+"))
    }
}

impl AbelianGroupSpec {
    pub fn new(invariants: Vec<u64>) -> Result<Self> {
        if invariants.is_empty() || invariants.iter().any(|&d| d < 2) {
            return Err(RingError::InvalidParameter(
                "abelian group needs cyclic factors of order at least 2".into(),
            ));
        }
        Ok(AbelianGroupSpec { invariants })
    }

    pub fn group_order(&self) -> Option<u128> {
        self.invariants
            .iter()
            .try_fold(1u128, |acc, &d| acc.checked_mul(d as u128))
    }

    /// Order of the endomorphism ring: the product of `gcd(d_i, d_j)`.
    pub fn endo_order(&self) -> Option<u128> {
        let mut acc = 1u128;
        for &a in &self.invariants {
            for &b in &self.invariants {
                acc = acc.checked_mul(a.gcd(&b) as u128)?;
            }
        }
        Some(acc)
    }

    /// For every prime p, the pairs `(k_j, n_j)`: the group has `n_j`
    /// cyclic summands of order `p^{k_j}`. Sorted by `k_j`.
    pub fn prime_components(&self) -> BTreeMap<u64, Vec<(u32, usize)>> {
        let mut by_prime: BTreeMap<u64, BTreeMap<u32, usize>> = BTreeMap::new();
        for &d in &self.invariants {
            for p in prime_factors(d) {
                let mut k = 0;
                let mut x = d;
                while x % p == 0 {
                    x /= p;
                    k += 1;
                }
                *by_prime.entry(p).or_default().entry(k).or_default() += 1;
            }
        }
        by_prime
            .into_iter()
            .map(|(p, ks)| (p, ks.into_iter().collect()))
            .collect()
    }
}

/// Every abelian p-group of order p^e with `2 ≤ p^e ≤ max_order`, one per
/// partition of e, invariants in descending order.
pub fn abelian_p_groups(p: u64, max_order: u64) -> Vec<AbelianGroupSpec> {
    fn partitions(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            partitions(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut e = 1u32;
    while p.checked_pow(e).is_some_and(|q| q <= max_order) {
        let mut parts = Vec::new();
        partitions(e, e, &mut Vec::new(), &mut parts);
        for lam in parts {
            out.push(AbelianGroupSpec {
                invariants: lam.iter().map(|&k| p.pow(k)).collect(),
            });
        }
        e += 1;
    }
    out
}

/// Endomorphisms of `⊕ Z_{d_i}` as r×r integer matrices: entry (i, j) is
/// the image of the j-th generator in the i-th summand, a multiple of
/// `d_i / gcd(d_i, d_j)` modulo `d_i`. Composition is matrix product.
pub struct EndoCarrier {
    spec: AbelianGroupSpec,
    r: usize,
    /// `d_i / gcd(d_i, d_j)` per slot, row-major.
    step: Vec<u64>,
    radix: Radix,
}

impl EndoCarrier {
    pub fn spec(&self) -> &AbelianGroupSpec {
        &self.spec
    }

    /// Entries as integers mod `d_i`, row-major.
    pub fn matrix(&self, x: Elem) -> Vec<u64> {
        let mut d = [0 as Elem; MAX_SLOTS];
        self.decode(x, &mut d);
        (0..self.r * self.r)
            .map(|s| d[s] as u64 * self.step[s])
            .collect()
    }

    /// Inverse of [`EndoCarrier::matrix`]; `None` if an entry is not an
    /// admissible homomorphism value.
    pub fn from_matrix(&self, m: &[u64]) -> Option<Elem> {
        let mut digits = [0 as Elem; MAX_SLOTS];
        for s in 0..self.r * self.r {
            let d_i = self.spec.invariants[s / self.r];
            let v = m[s] % d_i;
            if !v.is_multiple_of(self.step[s]) {
                return None;
            }
            digits[s] = (v / self.step[s]) as Elem;
        }
        Some(self.radix.encode(&digits[..self.r * self.r]) as Elem)
    }

    #[inline]
    fn decode(&self, x: Elem, out: &mut [Elem; MAX_SLOTS]) {
        self.radix
            .decode_into(x as u64, &mut out[..self.r * self.r]);
    }
}

impl Carrier for EndoCarrier {
    fn order(&self) -> usize {
        self.radix.total().unwrap() as usize
    }

    fn zero(&self) -> Elem {
        0
    }

    fn one(&self) -> Elem {
        let mut m = vec![0; self.r * self.r];
        for i in 0..self.r {
            m[i * self.r + i] = 1;
        }
        self.from_matrix(&m).unwrap()
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        let k = self.r * self.r;
        let (mut da, mut db) = ([0 as Elem; MAX_SLOTS], [0 as Elem; MAX_SLOTS]);
        self.decode(a, &mut da);
        self.decode(b, &mut db);
        let bases = self.radix.bases();
        for s in 0..k {
            da[s] = ((da[s] as u64 + db[s] as u64) % bases[s]) as Elem;
        }
        self.radix.encode(&da[..k]) as Elem
    }

    fn neg(&self, a: Elem) -> Elem {
        let k = self.r * self.r;
        let mut da = [0 as Elem; MAX_SLOTS];
        self.decode(a, &mut da);
        let bases = self.radix.bases();
        for s in 0..k {
            da[s] = ((bases[s] - da[s] as u64) % bases[s]) as Elem;
        }
        self.radix.encode(&da[..k]) as Elem
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let r = self.r;
        let (mut da, mut db) = ([0 as Elem; MAX_SLOTS], [0 as Elem; MAX_SLOTS]);
        self.decode(a, &mut da);
        self.decode(b, &mut db);
        let mut dc = [0 as Elem; MAX_SLOTS];
        for i in 0..r {
            let d_i = self.spec.invariants[i];
            for j in 0..r {
                let mut acc = 0u64;
                for k in 0..r {
                    let x = da[i * r + k] as u64 * self.step[i * r + k];
                    let y = db[k * r + j] as u64 * self.step[k * r + j];
                    acc = (acc + x * y) % d_i;
                }
                dc[i * r + j] = (acc / self.step[i * r + j]) as Elem;
            }
        }
        self.radix.encode(&dc[..r * r]) as Elem
    }

    fn label(&self, a: Elem) -> String {
        let m = self.matrix(a);
        let rows: Vec<String> = (0..self.r)
            .map(|i| {
                let row: Vec<String> = (0..self.r).map(|j| m[i * self.r + j].to_string()).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }

    fn structural_radical(&self) -> Option<Vec<Elem>> {
        // only when every summand has prime-power order
        let primes: Vec<u64> = self
            .spec
            .invariants
            .iter()
            .map(|&d| match prime_factors(d).as_slice() {
                [p] => Some(*p),
                _ => None,
            })
            .collect::<Option<_>>()?;
        let inv = &self.spec.invariants;
        let allowed: Vec<Vec<Elem>> = (0..self.r * self.r)
            .map(|s| {
                let (i, j) = (s / self.r, s % self.r);
                let base = self.radix.bases()[s] as Elem;
                if inv[i] == inv[j] {
                    // multiples of p among the digits (step is 1 here)
                    (0..base)
                        .filter(|&t| (t as u64).is_multiple_of(primes[i]))
                        .collect()
                } else {
                    (0..base).collect()
                }
            })
            .collect();
        Some(self.radix.enumerate(&allowed))
    }
}

/// Order bound above which `endo_ring` skips its built-in oracle check.
pub const ENDO_SELF_CHECK_LIMIT: usize = 256;

/// `End(G)` for a finite abelian group.
pub fn endo_ring(spec: &AbelianGroupSpec, cap: usize) -> Result<FiniteRing> {
    let expr = format!("END({spec})");
    let r = spec.invariants.len();
    let order = if r * r > MAX_SLOTS {
        None
    } else {
        spec.endo_order()
    };
    match order {
        Some(o) if o <= cap as u128 => {}
        Some(o) => {
            return Err(RingError::CapExceeded {
                what: expr,
                order: o,
                cap: cap as u128,
            })
        }
        None => return Err(RingError::SizeOverflow(expr)),
    }
    let inv = &spec.invariants;
    let mut step = Vec::with_capacity(r * r);
    let mut bases = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            let g = inv[i].gcd(&inv[j]);
            step.push(inv[i] / g);
            bases.push(g);
        }
    }
    let ring = FiniteRing::new(
        EndoCarrier {
            spec: spec.clone(),
            r,
            step,
            radix: Radix::new(bases),
        },
        expr.clone(),
    );
    if ring.order() <= ENDO_SELF_CHECK_LIMIT {
        check_endo_against_oracle(&ring)
            .map_err(|e| RingError::Precondition(format!("{expr}: {e}")))?;
    }
    Ok(ring)
}

/// Endomorphisms found by brute force: every choice of generator images
/// `v_j` with `d_j·v_j = 0`. Elements of G are mixed-radix indices over
/// the invariants.
pub struct EndoOracleCarrier {
    group: Radix,
    invariants: Vec<u64>,
    maps: Vec<Vec<u64>>,
    index: HashMap<Vec<u64>, Elem>,
}

impl EndoOracleCarrier {
    pub fn maps(&self) -> &[Vec<u64>] {
        &self.maps
    }

    fn group_add(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.group.decode(a), self.group.decode(b));
        let s: Vec<Elem> = da
            .iter()
            .zip(&db)
            .zip(&self.invariants)
            .map(|((&x, &y), &d)| ((x as u64 + y as u64) % d) as Elem)
            .collect();
        self.group.encode(&s)
    }

    fn group_smul(&self, k: u64, a: u64) -> u64 {
        let s: Vec<Elem> = self
            .group
            .decode(a)
            .iter()
            .zip(&self.invariants)
            .map(|(&x, &d)| ((x as u64 * (k % d)) % d) as Elem)
            .collect();
        self.group.encode(&s)
    }

    fn group_neg(&self, a: u64) -> u64 {
        let n: Vec<Elem> = self
            .group
            .decode(a)
            .iter()
            .zip(&self.invariants)
            .map(|(&x, &d)| ((d - x as u64) % d) as Elem)
            .collect();
        self.group.encode(&n)
    }

    fn apply(&self, f: &[u64], v: u64) -> u64 {
        let coords = self.group.decode(v);
        coords.iter().zip(f).fold(0, |acc, (&c, &img)| {
            self.group_add(acc, self.group_smul(c as u64, img))
        })
    }

    fn lookup(&self, f: Vec<u64>) -> Elem {
        self.index[&f]
    }
}

impl Carrier for EndoOracleCarrier {
    fn order(&self) -> usize {
        self.maps.len()
    }

    fn zero(&self) -> Elem {
        self.index[&vec![0; self.invariants.len()]]
    }

    fn one(&self) -> Elem {
        let gens: Vec<u64> = (0..self.invariants.len())
            .map(|j| {
                let mut d = vec![0; self.invariants.len()];
                d[j] = 1;
                self.group.encode(&d)
            })
            .collect();
        self.index[&gens]
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        let (f, g) = (&self.maps[a as usize], &self.maps[b as usize]);
        self.lookup(
            f.iter()
                .zip(g)
                .map(|(&x, &y)| self.group_add(x, y))
                .collect(),
        )
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let (f, g) = (&self.maps[a as usize], &self.maps[b as usize]);
        self.lookup(g.iter().map(|&v| self.apply(f, v)).collect())
    }

    fn neg(&self, a: Elem) -> Elem {
        let f = &self.maps[a as usize];
        self.lookup(f.iter().map(|&v| self.group_neg(v)).collect())
    }

    fn label(&self, a: Elem) -> String {
        format!("{:?}", self.maps[a as usize])
    }
}

/// Limit on `|G|^r`, the number of candidate generator-image tuples.
pub const ENDO_ORACLE_CAP: u128 = 1 << 20;

/// Brute-force endomorphism ring of G.
pub fn endo_oracle(spec: &AbelianGroupSpec) -> Result<FiniteRing> {
    let r = spec.invariants.len();
    let g_order = spec
        .group_order()
        .ok_or_else(|| RingError::SizeOverflow(spec.to_string()))?;
    let candidates = g_order.checked_pow(r as u32).unwrap_or(u128::MAX);
    if candidates > ENDO_ORACLE_CAP {
        return Err(RingError::CapExceeded {
            what: format!("endomorphism oracle for {spec}"),
            order: candidates,
            cap: ENDO_ORACLE_CAP,
        });
    }
    let group = Radix::new(spec.invariants.clone());
    let mut carrier = EndoOracleCarrier {
        group,
        invariants: spec.invariants.clone(),
        maps: Vec::new(),
        index: HashMap::new(),
    };
    let tuples = Radix::uniform(g_order as u64, r);
    for t in 0..candidates as u64 {
        let images: Vec<u64> = tuples.decode(t).iter().map(|&x| x as u64).collect();
        // the image of a generator of order d_j must be killed by d_j
        let ok = images
            .iter()
            .zip(&spec.invariants)
            .all(|(&v, &d)| carrier.group_smul(d, v) == 0);
        if ok {
            carrier
                .index
                .insert(images.clone(), carrier.maps.len() as Elem);
            carrier.maps.push(images);
        }
    }
    Ok(FiniteRing::new(carrier, format!("END-oracle({spec})")))
}

/// The matrix model's element as generator images: column j of the matrix
/// is the image of the j-th generator.
pub fn matrix_to_images(endo: &EndoCarrier, x: Elem) -> Vec<u64> {
    let m = endo.matrix(x);
    let r = endo.r;
    let group = Radix::new(endo.spec.invariants.clone());
    (0..r)
        .map(|j| {
            let col: Vec<Elem> = (0..r).map(|i| m[i * r + j] as Elem).collect();
            group.encode(&col)
        })
        .collect()
}

/// Checks that the matrix model is isomorphic to the brute-force
/// endomorphism ring via generator images.
pub fn check_endo_against_oracle(ring: &FiniteRing) -> std::result::Result<(), String> {
    let endo = ring
        .carrier::<EndoCarrier>()
        .ok_or("not an endomorphism ring")?;
    let oracle = endo_oracle(&endo.spec).map_err(|e| e.to_string())?;
    let oc = oracle.carrier::<EndoOracleCarrier>().unwrap();
    if oracle.order() != ring.order() {
        return Err(format!(
            "matrix model has {} elements, oracle finds {}",
            ring.order(),
            oracle.order()
        ));
    }
    let f: Vec<Elem> = ring
        .elements()
        .map(|x| {
            oc.index
                .get(&matrix_to_images(endo, x))
                .copied()
                .unwrap_or(Elem::MAX)
        })
        .collect();
    ring.check_isomorphism(&oracle, &f)
}
