use std::fmt;

use crate::ring::{prime_factors, Carrier, Elem, FiniteRing, Radix, Subset, SubsetKind, MAX_SLOTS};
use crate::{Result, RingError};

/// A finite group given by its Cayley table.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub order: usize,
    pub identity: u32,
    /// Row-major `order × order`.
    pub mul: Vec<u32>,
    pub inv: Vec<u32>,
    pub labels: Vec<String>,
    pub abelian: bool,
    pub expr: String,
}

/// Surface description of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Dihedral(u64),
    S3,
    Product(Vec<GroupSpec>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C({n})"),
            GroupSpec::Dihedral(n) => write!(f, "D({n})"),
            GroupSpec::S3 => f.write_str("S3"),
            GroupSpec::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    match p {
                        GroupSpec::Product(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl GroupSpec {
    /// Group order, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n as u128),
            GroupSpec::Dihedral(n) => (*n as u128).checked_mul(2),
            GroupSpec::S3 => Some(6),
            GroupSpec::Product(parts) => parts
                .iter()
                .try_fold(1u128, |acc, p| acc.checked_mul(p.order()?)),
        }
    }
}

impl GroupTable {
    fn from_fn(
        order: usize,
        identity: u32,
        labels: Vec<String>,
        expr: String,
        f: impl Fn(u32, u32) -> u32,
    ) -> GroupTable {
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order as u32 {
            for b in 0..order as u32 {
                mul.push(f(a, b));
            }
        }
        let inv = (0..order as u32)
            .map(|a| {
                (0..order as u32)
                    .find(|&b| mul[a as usize * order + b as usize] == identity)
                    .expect("group element without inverse")
            })
            .collect();
        let abelian =
            (0..order).all(|a| (0..order).all(|b| mul[a * order + b] == mul[b * order + a]));
        GroupTable {
            order,
            identity,
            mul,
            inv,
            labels,
            abelian,
            expr,
        }
    }

    #[inline]
    pub fn op(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order + b as usize]
    }

    /// Order of every element, in index order.
    pub fn element_orders(&self) -> Vec<u64> {
        (0..self.order as u32)
            .map(|g| {
                let mut x = g;
                let mut k = 1;
                while x != self.identity {
                    x = self.op(x, g);
                    k += 1;
                }
                k
            })
            .collect()
    }

    /// The prime p when the order is a power of p.
    pub fn p_group_prime(&self) -> Option<u64> {
        match prime_factors(self.order as u64).as_slice() {
            [p] => Some(*p),
            _ => None,
        }
    }

    /// Exhaustive group-axiom check.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let n = self.order as u32;
        for a in 0..n {
            if self.op(self.identity, a) != a || self.op(a, self.identity) != a {
                return Err(format!("identity fails at {a}"));
            }
            if self.op(a, self.inv[a as usize]) != self.identity {
                return Err(format!("inverse fails at {a}"));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                        return Err(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn power_label(base: &str, i: u64) -> String {
    match i {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{base}^{i}"),
    }
}

/// Cyclic group of order n, generator `g`.
pub fn cyclic_group(n: u64) -> GroupTable {
    let labels = (0..n).map(|i| power_label("g", i)).collect();
    GroupTable::from_fn(n as usize, 0, labels, format!("C({n})"), |a, b| {
        ((a as u64 + b as u64) % n) as u32
    })
}

/// Dihedral group of order 2n: `r^i s^j` has index `i + n·j`.
pub fn dihedral_group(n: u64) -> GroupTable {
    let n32 = n as u32;
    let labels = (0..2 * n)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            match (i, j) {
                (0, 1) => "s".to_string(),
                (_, 0) => power_label("r", i),
                _ => format!("{}s", power_label("r", i)),
            }
        })
        .collect();
    GroupTable::from_fn(2 * n as usize, 0, labels, format!("D({n})"), |x, y| {
        let (a, b) = (x % n32, x / n32);
        let (c, d) = (y % n32, y / n32);
        // s r^c = r^-c s
        let c = if b == 1 { (n32 - c) % n32 } else { c };
        (a + c) % n32 + n32 * ((b + d) % 2)
    })
}

/// Symmetric group on three points; permutations in lexicographic order of
/// their image tuples, composed right to left.
pub fn symmetric3() -> GroupTable {
    let perms: [[u32; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let labels = ["()", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    GroupTable::from_fn(6, 0, labels, "S3".into(), |a, b| {
        let (p, q) = (perms[a as usize], perms[b as usize]);
        let comp = [p[q[0] as usize], p[q[1] as usize], p[q[2] as usize]];
        perms.iter().position(|&r| r == comp).unwrap() as u32
    })
}

/// Direct product; the first factor varies fastest in the index.
pub fn group_product(parts: &[GroupTable]) -> GroupTable {
    let radix = Radix::new(parts.iter().map(|g| g.order as u64).collect());
    let order = radix.total().unwrap() as usize;
    let labels = (0..order as u64)
        .map(|x| {
            let d = radix.decode(x);
            let ls: Vec<&str> = d
                .iter()
                .zip(parts)
                .map(|(&i, g)| g.labels[i as usize].as_str())
                .collect();
            format!("({})", ls.join(", "))
        })
        .collect();
    let identity = radix.encode(&parts.iter().map(|g| g.identity).collect::<Vec<_>>()) as u32;
    let expr = parts
        .iter()
        .map(|g| {
            if g.expr.contains(" x ") {
                format!("({})", g.expr)
            } else {
                g.expr.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(" x ");
    GroupTable::from_fn(order, identity, labels, expr, |a, b| {
        let (da, db) = (radix.decode(a as u64), radix.decode(b as u64));
        let dc: Vec<u32> = da
            .iter()
            .zip(&db)
            .zip(parts)
            .map(|((&x, &y), g)| g.op(x, y))
            .collect();
        radix.encode(&dc) as u32
    })
}

/// Builds the table for a spec, refusing groups above `cap` elements.
pub fn group_table(spec: &GroupSpec, cap: usize) -> Result<GroupTable> {
    match spec.order() {
        Some(o) if o <= cap as u128 => {}
        Some(o) => {
            return Err(RingError::CapExceeded {
                what: format!("group {spec}"),
                order: o,
                cap: cap as u128,
            })
        }
        None => return Err(RingError::SizeOverflow(format!("group {spec}"))),
    }
    Ok(match spec {
        GroupSpec::Cyclic(0) => {
            return Err(RingError::InvalidParameter("C(0) is not finite".into()))
        }
        GroupSpec::Cyclic(n) => cyclic_group(*n),
        GroupSpec::Dihedral(n) if *n < 1 => {
            return Err(RingError::InvalidParameter("D(n) needs n ≥ 1".into()))
        }
        GroupSpec::Dihedral(n) => dihedral_group(*n),
        GroupSpec::S3 => symmetric3(),
        GroupSpec::Product(parts) => {
            let tables = parts
                .iter()
                .map(|p| group_table(p, cap))
                .collect::<Result<Vec<_>>>()?;
            group_product(&tables)
        }
    })
}

/// Functions `G → R` with convolution. Coefficient of group element g is
/// digit g of the index (identity's coefficient least significant when the
/// identity has index 0).
pub struct GroupRingCarrier {
    base: FiniteRing,
    group: GroupTable,
    radix: Radix,
}

impl GroupRingCarrier {
    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn coefficients(&self, x: Elem) -> Vec<Elem> {
        self.radix.decode(x as u64)
    }

    pub fn encode(&self, coefs: &[Elem]) -> Elem {
        self.radix.encode(coefs) as Elem
    }

    /// `r·g`.
    pub fn monomial(&self, r: Elem, g: u32) -> Elem {
        let mut c = vec![self.base.zero(); self.group.order];
        c[g as usize] = r;
        self.encode(&c)
    }

    /// The augmentation `Σ r_g g ↦ Σ r_g`.
    pub fn augmentation(&self, x: Elem) -> Elem {
        self.base.sum(self.coefficients(x))
    }
}

impl Carrier for GroupRingCarrier {
    fn order(&self) -> usize {
        self.radix.total().unwrap() as usize
    }

    fn zero(&self) -> Elem {
        self.encode(&vec![self.base.zero(); self.group.order])
    }

    fn one(&self) -> Elem {
        self.monomial(self.base.one(), self.group.identity)
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        let k = self.group.order;
        let mut da = [0 as Elem; MAX_SLOTS];
        let mut db = [0 as Elem; MAX_SLOTS];
        self.radix.decode_into(a as u64, &mut da[..k]);
        self.radix.decode_into(b as u64, &mut db[..k]);
        for g in 0..k {
            da[g] = self.base.add(da[g], db[g]);
        }
        self.radix.encode(&da[..k]) as Elem
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let k = self.group.order;
        let r = &self.base;
        let mut da = [0 as Elem; MAX_SLOTS];
        let mut db = [0 as Elem; MAX_SLOTS];
        let mut dc = [r.zero(); MAX_SLOTS];
        self.radix.decode_into(a as u64, &mut da[..k]);
        self.radix.decode_into(b as u64, &mut db[..k]);
        for g in 0..k {
            if da[g] == r.zero() {
                continue;
            }
            for h in 0..k {
                let gh = self.group.op(g as u32, h as u32) as usize;
                dc[gh] = r.add(dc[gh], r.mul(da[g], db[h]));
            }
        }
        self.radix.encode(&dc[..k]) as Elem
    }

    fn neg(&self, a: Elem) -> Elem {
        let c: Vec<Elem> = self
            .coefficients(a)
            .iter()
            .map(|&x| self.base.neg(x))
            .collect();
        self.encode(&c)
    }

    fn label(&self, a: Elem) -> String {
        let r = &self.base;
        let mut terms = Vec::new();
        for (g, &c) in self.coefficients(a).iter().enumerate() {
            if c == r.zero() {
                continue;
            }
            let gl = &self.group.labels[g];
            let is_identity = g as u32 == self.group.identity;
            terms.push(match (is_identity, c == r.one()) {
                (true, _) => r.label(c),
                (false, true) => gl.clone(),
                (false, false) => format!("{}*{}", r.label(c), gl),
            });
        }
        if terms.is_empty() {
            r.label(r.zero())
        } else {
            terms.join("+")
        }
    }

    fn structural_radical(&self) -> Option<Vec<Elem>> {
        let r = &self.base;
        let j = r.jacobson_radical();
        let n = self.group.order as i64;
        if r.is_unit(r.int(n)) {
            // |G| invertible: J(RG) = J(R)G
            let allowed = vec![j.set.members().to_vec(); self.group.order];
            return Some(self.radix.enumerate(&allowed));
        }
        let p = self.group.p_group_prime()?;
        if !j.set.contains(r.int(p as i64)) {
            return None;
        }
        // p-group with p in J(R): J(RG) is the preimage of J(R) under
        // the augmentation
        let members = (0..self.order() as Elem)
            .filter(|&x| j.set.contains(self.augmentation(x)))
            .collect();
        Some(members)
    }
}

/// `R G`.
pub fn group_ring(base: &FiniteRing, group: &GroupTable, cap: usize) -> Result<FiniteRing> {
    let expr = format!("GR({}, {})", base.expr(), group.expr);
    let radix = Radix::uniform(base.order() as u64, group.order);
    let order = if group.order > MAX_SLOTS {
        None
    } else {
        radix.total()
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
    Ok(FiniteRing::new(
        GroupRingCarrier {
            base: base.clone(),
            group: group.clone(),
            radix,
        },
        expr,
    ))
}

/// The augmentation ideal and how nilpotent it is.
#[derive(Clone, Debug)]
pub struct AugmentationData {
    pub delta: Subset,
    /// Every element of Δ is nilpotent.
    pub nil: bool,
    /// Least l with `Δ^l = 0`, when Δ is nilpotent as an ideal.
    pub ideal_index: Option<u32>,
    /// Largest nilpotency index of an element of Δ, when Δ is nil.
    pub element_index: Option<u32>,
}

/// Augmentation data of a group ring, or `None` for other rings.
pub fn augmentation_data(ring: &FiniteRing) -> Option<AugmentationData> {
    let c = ring.carrier::<GroupRingCarrier>()?;
    let zero = c.base().zero();
    let delta = Subset::from_members(
        ring,
        ring.elements().filter(|&x| c.augmentation(x) == zero),
        SubsetKind::Ideal,
    );
    let nil = delta.members().iter().all(|&x| ring.is_nilpotent(x));
    let element_index = nil.then(|| {
        delta
            .members()
            .iter()
            .map(|&x| ring.nil_index(x).unwrap())
            .max()
            .unwrap_or(1)
    });
    let ideal_index = ring.ideal_nilpotency_index(&delta);
    Some(AugmentationData {
        delta,
        nil,
        ideal_index,
        element_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cyclic::cyclic_ring;
    use crate::ring::BUILD_CAP;

    #[test]
    fn group_tables_validate() {
        for g in [
            cyclic_group(1),
            cyclic_group(5),
            dihedral_group(3),
            dihedral_group(4),
            symmetric3(),
        ] {
            g.validate().unwrap();
        }
        assert!(!symmetric3().abelian);
        assert!(!dihedral_group(3).abelian);
        assert!(cyclic_group(4).abelian);
        assert_eq!(dihedral_group(4).order, 8);
    }

    #[test]
    fn c2_times_c3_matches_c6_orders() {
        let p = group_product(&[cyclic_group(2), cyclic_group(3)]);
        p.validate().unwrap();
        let mut a = p.element_orders();
        let mut b = cyclic_group(6).element_orders();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn d3_and_s3_have_same_order_profile() {
        let mut a = dihedral_group(3).element_orders();
        let mut b = symmetric3().element_orders();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn z2c2_labels_and_augmentation() {
        let r = group_ring(&cyclic_ring(2).unwrap(), &cyclic_group(2), BUILD_CAP).unwrap();
        let labels: Vec<String> = r.elements().map(|x| r.label(x)).collect();
        assert_eq!(labels, ["0", "1", "g", "1+g"]);
        let aug = augmentation_data(&r).unwrap();
        assert_eq!(aug.delta.members(), &[0, 3]);
        assert_eq!(aug.ideal_index, Some(2));
    }

    #[test]
    fn product_expr() {
        let spec = GroupSpec::Product(vec![
            GroupSpec::Cyclic(2),
            GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::S3]),
        ]);
        assert_eq!(spec.to_string(), "C(2) x (C(2) x S3)");
        assert_eq!(spec.order(), Some(24));
        assert_eq!(group_table(&spec, 100).unwrap().expr, "C(2) x (C(2) x S3)");
    }
}
