use crate::ring::{validate_ring_axioms, Carrier, Elem, FiniteRing, Subset};
use crate::{Result, RingError};

/// A finite abelian group with left and right scalar actions, given by
/// tables. Element 0 is the zero.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub order: usize,
    /// `order × order`.
    pub add: Vec<Elem>,
    /// `|left ring| × order`: `left[r * order + m] = r·m`.
    pub left: Vec<Elem>,
    /// `order × |right ring|`: `right[m * |right ring| + r] = m·r`.
    pub right: Vec<Elem>,
    neg: Vec<Elem>,
    right_order: usize,
    labels: Vec<String>,
}

impl Bimodule {
    pub fn new(
        order: usize,
        add: Vec<Elem>,
        left: Vec<Elem>,
        right: Vec<Elem>,
        left_order: usize,
        right_order: usize,
    ) -> Result<Bimodule> {
        let shape = |name: &str, t: &[Elem], len: usize| -> Result<()> {
            if t.len() != len {
                return Err(RingError::InvalidParameter(format!(
                    "table {name} has {} entries, expected {len}",
                    t.len()
                )));
            }
            if let Some(&bad) = t.iter().find(|&&x| x as usize >= order) {
                return Err(RingError::InvalidParameter(format!(
                    "table {name} entry {bad} out of range"
                )));
            }
            Ok(())
        };
        shape("add", &add, order * order)?;
        shape("left", &left, left_order * order)?;
        shape("right", &right, order * right_order)?;
        let neg = (0..order)
            .map(|a| (0..order).find(|&b| add[a * order + b] == 0).unwrap_or(a) as Elem)
            .collect();
        Ok(Bimodule {
            order,
            add,
            left,
            right,
            neg,
            right_order,
            labels: (0..order).map(|i| format!("m{i}")).collect(),
        })
    }

    /// A sub-bimodule of R (an ideal) with the ring's own operations.
    /// Element 0 is the ring's zero; the rest follow in index order.
    fn from_ideal(ring: &FiniteRing, ideal: &Subset) -> (Bimodule, Vec<Elem>) {
        let mut members: Vec<Elem> = vec![ring.zero()];
        members.extend(
            ideal
                .members()
                .iter()
                .copied()
                .filter(|&x| x != ring.zero()),
        );
        let pos = |x: Elem| members.iter().position(|&y| y == x).unwrap() as Elem;
        let k = members.len();
        let mut add = Vec::with_capacity(k * k);
        for &a in &members {
            for &b in &members {
                add.push(pos(ring.add(a, b)));
            }
        }
        let mut left = Vec::with_capacity(ring.order() * k);
        for r in ring.elements() {
            for &m in &members {
                left.push(pos(ring.mul(r, m)));
            }
        }
        let mut right = Vec::with_capacity(ring.order() * k);
        for &m in &members {
            for r in ring.elements() {
                right.push(pos(ring.mul(m, r)));
            }
        }
        let mut bm = Bimodule::new(k, add, left, right, ring.order(), ring.order())
            .expect("ideal tables are well formed");
        bm.labels = members.iter().map(|&x| ring.label(x)).collect();
        (bm, members)
    }

    #[inline]
    pub fn plus(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn act_left(&self, r: Elem, m: Elem) -> Elem {
        self.left[r as usize * self.order + m as usize]
    }

    #[inline]
    pub fn act_right(&self, m: Elem, r: Elem) -> Elem {
        self.right[m as usize * self.right_order + r as usize]
    }

    pub fn negate(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }
}

/// Data of a Morita context `(A, B, M, N, φ, ψ)`.
#[derive(Clone, Debug)]
pub struct MoritaData {
    pub a: FiniteRing,
    pub b: FiniteRing,
    /// An (A, B)-bimodule.
    pub m: Bimodule,
    /// A (B, A)-bimodule.
    pub n: Bimodule,
    /// `φ: M × N → A`, row-major `|M| × |N|`.
    pub phi: Vec<Elem>,
    /// `ψ: N × M → B`, row-major `|N| × |M|`.
    pub psi: Vec<Elem>,
}

impl MoritaData {
    /// `A = B = R` with M and N ideals of R, all maps given by the
    /// multiplication of R.
    pub fn from_ideals(ring: &FiniteRing, m: &Subset, n: &Subset) -> Result<MoritaData> {
        for s in [m, n] {
            ring.check_ideal(s).map_err(RingError::NotAnIdeal)?;
        }
        let (bm, mm) = Bimodule::from_ideal(ring, m);
        let (bn, nn) = Bimodule::from_ideal(ring, n);
        let mut phi = Vec::with_capacity(mm.len() * nn.len());
        for &x in &mm {
            for &y in &nn {
                phi.push(ring.mul(x, y));
            }
        }
        let mut psi = Vec::with_capacity(mm.len() * nn.len());
        for &y in &nn {
            for &x in &mm {
                psi.push(ring.mul(y, x));
            }
        }
        Ok(MoritaData {
            a: ring.clone(),
            b: ring.clone(),
            m: bm,
            n: bn,
            phi,
            psi,
        })
    }

    pub fn phi(&self, m: Elem, n: Elem) -> Elem {
        self.phi[m as usize * self.n.order + n as usize]
    }

    pub fn psi(&self, n: Elem, m: Elem) -> Elem {
        self.psi[n as usize * self.m.order + m as usize]
    }

    /// Exhaustive check of the bimodule laws, biadditivity, middle
    /// linearity and the two balance conditions. Returns the first
    /// violation.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let (a, b) = (&self.a, &self.b);
        if self.phi.len() != self.m.order * self.n.order
            || self.psi.len() != self.m.order * self.n.order
        {
            return Err("pairing tables have the wrong size".into());
        }
        if self.phi.iter().any(|&x| x as usize >= a.order())
            || self.psi.iter().any(|&x| x as usize >= b.order())
        {
            return Err("pairing value out of range".into());
        }
        check_bimodule("M", &self.m, a, b)?;
        check_bimodule("N", &self.n, b, a)?;
        let (mo, no) = (self.m.order as Elem, self.n.order as Elem);
        for m in 0..mo {
            for n in 0..no {
                let p = self.phi(m, n);
                let q = self.psi(n, m);
                for m2 in 0..mo {
                    // biadditivity in the first slot, balance (mn)m' = m(nm')
                    if self.phi(self.m.plus(m, m2), n) != a.add(p, self.phi(m2, n)) {
                        return Err(format!("phi not additive in M at ({m}, {m2}; {n})"));
                    }
                    if self.psi(n, self.m.plus(m, m2)) != b.add(q, self.psi(n, m2)) {
                        return Err(format!("psi not additive in M at ({n}; {m}, {m2})"));
                    }
                    if self.m.act_left(p, m2) != self.m.act_right(m, self.psi(n, m2)) {
                        return Err(format!("(mn)m' != m(nm') at m={m}, n={n}, m'={m2}"));
                    }
                }
                for n2 in 0..no {
                    if self.phi(m, self.n.plus(n, n2)) != a.add(p, self.phi(m, n2)) {
                        return Err(format!("phi not additive in N at ({m}; {n}, {n2})"));
                    }
                    if self.psi(self.n.plus(n, n2), m) != b.add(q, self.psi(n2, m)) {
                        return Err(format!("psi not additive in N at ({n}, {n2}; {m})"));
                    }
                    if self.n.act_left(q, n2) != self.n.act_right(n, self.phi(m, n2)) {
                        return Err(format!("(nm)n' != n(mn') at n={n}, m={m}, n'={n2}"));
                    }
                }
                for x in a.elements() {
                    if self.phi(self.m.act_left(x, m), n) != a.mul(x, p) {
                        return Err(format!("phi(am, n) != a phi(m, n) at a={x}, m={m}, n={n}"));
                    }
                    if self.phi(m, self.n.act_right(n, x)) != a.mul(p, x) {
                        return Err(format!("phi(m, na) != phi(m, n) a at a={x}, m={m}, n={n}"));
                    }
                    if self.psi(self.n.act_right(n, x), m) != self.psi(n, self.m.act_left(x, m)) {
                        return Err(format!("psi(na, m) != psi(n, am) at a={x}, m={m}, n={n}"));
                    }
                }
                for y in b.elements() {
                    if self.psi(self.n.act_left(y, n), m) != b.mul(y, q) {
                        return Err(format!("psi(bn, m) != b psi(n, m) at b={y}, m={m}, n={n}"));
                    }
                    if self.psi(n, self.m.act_right(m, y)) != b.mul(q, y) {
                        return Err(format!("psi(n, mb) != psi(n, m) b at b={y}, m={m}, n={n}"));
                    }
                    if self.phi(self.m.act_right(m, y), n) != self.phi(m, self.n.act_left(y, n)) {
                        return Err(format!("phi(mb, n) != phi(m, bn) at b={y}, m={m}, n={n}"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_bimodule(
    name: &str,
    m: &Bimodule,
    l: &FiniteRing,
    r: &FiniteRing,
) -> std::result::Result<(), String> {
    let k = m.order as Elem;
    for x in 0..k {
        if m.plus(x, 0) != x {
            return Err(format!("{name}: 0 is not an additive identity at {x}"));
        }
        if m.plus(x, m.negate(x)) != 0 {
            return Err(format!("{name}: {x} has no additive inverse"));
        }
        if m.act_left(l.one(), x) != x || m.act_right(x, r.one()) != x {
            return Err(format!("{name}: identity does not act trivially on {x}"));
        }
        for y in 0..k {
            if m.plus(x, y) != m.plus(y, x) {
                return Err(format!("{name}: addition not commutative at ({x}, {y})"));
            }
            for z in 0..k {
                if m.plus(m.plus(x, y), z) != m.plus(x, m.plus(y, z)) {
                    return Err(format!(
                        "{name}: addition not associative at ({x}, {y}, {z})"
                    ));
                }
            }
            for a in l.elements() {
                if m.act_left(a, m.plus(x, y)) != m.plus(m.act_left(a, x), m.act_left(a, y)) {
                    return Err(format!(
                        "{name}: left action not additive at ({a}; {x}, {y})"
                    ));
                }
            }
            for b in r.elements() {
                if m.act_right(m.plus(x, y), b) != m.plus(m.act_right(x, b), m.act_right(y, b)) {
                    return Err(format!(
                        "{name}: right action not additive at ({x}, {y}; {b})"
                    ));
                }
            }
        }
        for a in l.elements() {
            for a2 in l.elements() {
                if m.act_left(l.mul(a, a2), x) != m.act_left(a, m.act_left(a2, x)) {
                    return Err(format!(
                        "{name}: left action not associative at ({a}, {a2}, {x})"
                    ));
                }
                if m.act_left(l.add(a, a2), x) != m.plus(m.act_left(a, x), m.act_left(a2, x)) {
                    return Err(format!(
                        "{name}: left action not distributive at ({a}, {a2}, {x})"
                    ));
                }
            }
            for b in r.elements() {
                if m.act_right(m.act_left(a, x), b) != m.act_left(a, m.act_right(x, b)) {
                    return Err(format!("{name}: actions do not commute at ({a}, {x}, {b})"));
                }
            }
        }
        for b in r.elements() {
            for b2 in r.elements() {
                if m.act_right(x, r.mul(b, b2)) != m.act_right(m.act_right(x, b), b2) {
                    return Err(format!(
                        "{name}: right action not associative at ({x}, {b}, {b2})"
                    ));
                }
                if m.act_right(x, r.add(b, b2)) != m.plus(m.act_right(x, b), m.act_right(x, b2)) {
                    return Err(format!(
                        "{name}: right action not distributive at ({x}, {b}, {b2})"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// The block ring `[[A, M], [N, B]]`; element `(a, m, n, b)` has index
/// `a + |A|·(m + |M|·(n + |N|·b))`.
pub struct MoritaCarrier {
    data: MoritaData,
}

impl MoritaCarrier {
    pub fn data(&self) -> &MoritaData {
        &self.data
    }

    pub fn encode(&self, a: Elem, m: Elem, n: Elem, b: Elem) -> Elem {
        let d = &self.data;
        let (oa, om, on) = (d.a.order() as u64, d.m.order as u64, d.n.order as u64);
        (a as u64 + oa * (m as u64 + om * (n as u64 + on * b as u64))) as Elem
    }

    pub fn decode(&self, x: Elem) -> (Elem, Elem, Elem, Elem) {
        let d = &self.data;
        let (oa, om, on) = (d.a.order() as u64, d.m.order as u64, d.n.order as u64);
        let mut x = x as u64;
        let a = x % oa;
        x /= oa;
        let m = x % om;
        x /= om;
        let n = x % on;
        (a as Elem, m as Elem, n as Elem, (x / on) as Elem)
    }

    /// Additive span of `φ(M × N)` inside A.
    pub fn trace_mn(&self) -> Subset {
        let d = &self.data;
        d.a.additive_span(d.phi.iter().copied())
    }

    /// Additive span of `ψ(N × M)` inside B.
    pub fn trace_nm(&self) -> Subset {
        let d = &self.data;
        d.b.additive_span(d.psi.iter().copied())
    }
}

impl Carrier for MoritaCarrier {
    fn order(&self) -> usize {
        let d = &self.data;
        d.a.order() * d.m.order * d.n.order * d.b.order()
    }

    fn zero(&self) -> Elem {
        self.encode(self.data.a.zero(), 0, 0, self.data.b.zero())
    }

    fn one(&self) -> Elem {
        self.encode(self.data.a.one(), 0, 0, self.data.b.one())
    }

    fn add(&self, x: Elem, y: Elem) -> Elem {
        let d = &self.data;
        let (a, m, n, b) = self.decode(x);
        let (a2, m2, n2, b2) = self.decode(y);
        self.encode(
            d.a.add(a, a2),
            d.m.plus(m, m2),
            d.n.plus(n, n2),
            d.b.add(b, b2),
        )
    }

    fn mul(&self, x: Elem, y: Elem) -> Elem {
        let d = &self.data;
        let (a, m, n, b) = self.decode(x);
        let (a2, m2, n2, b2) = self.decode(y);
        self.encode(
            d.a.add(d.a.mul(a, a2), d.phi(m, n2)),
            d.m.plus(d.m.act_left(a, m2), d.m.act_right(m, b2)),
            d.n.plus(d.n.act_left(b, n2), d.n.act_right(n, a2)),
            d.b.add(d.psi(n, m2), d.b.mul(b, b2)),
        )
    }

    fn neg(&self, x: Elem) -> Elem {
        let d = &self.data;
        let (a, m, n, b) = self.decode(x);
        self.encode(d.a.neg(a), d.m.negate(m), d.n.negate(n), d.b.neg(b))
    }

    fn label(&self, x: Elem) -> String {
        let d = &self.data;
        let (a, m, n, b) = self.decode(x);
        format!(
            "[[{}, {}], [{}, {}]]",
            d.a.label(a),
            d.m.labels[m as usize],
            d.n.labels[n as usize],
            d.b.label(b)
        )
    }

    fn structural_radical(&self) -> Option<Vec<Elem>> {
        let d = &self.data;
        let (ja, jb) = (d.a.jacobson_radical(), d.b.jacobson_radical());
        // MN ⊆ J(A) and NM ⊆ J(B) make [[J(A), M], [N, J(B)]] a nilpotent
        // ideal with quotient A/J(A) × B/J(B)
        if !self.trace_mn().is_subset_of(&ja.set) || !self.trace_nm().is_subset_of(&jb.set) {
            return None;
        }
        let mut out = Vec::new();
        for &b in jb.set.members() {
            for n in 0..d.n.order as Elem {
                for m in 0..d.m.order as Elem {
                    for &a in ja.set.members() {
                        out.push(self.encode(a, m, n, b));
                    }
                }
            }
        }
        out.sort_unstable();
        Some(out)
    }

    fn corner_idempotent(&self) -> Option<Elem> {
        Some(self.encode(self.data.a.one(), 0, 0, self.data.b.zero()))
    }
}

/// Builds the Morita context ring after validating the data exhaustively.
pub fn morita_ring(data: MoritaData, expr: String, cap: usize) -> Result<FiniteRing> {
    let order = data.a.order() as u128
        * data.m.order as u128
        * data.n.order as u128
        * data.b.order() as u128;
    if order > cap as u128 {
        return Err(RingError::CapExceeded {
            what: expr,
            order,
            cap: cap as u128,
        });
    }
    data.validate()
        .map_err(|e| RingError::Axiom(format!("{expr}: {e}")))?;
    morita_ring_unchecked(data, expr)
}

/// Builds the ring and only runs the generic ring-axiom check, so that
/// malformed data is reported as a concrete violating triple.
pub fn morita_ring_unchecked(data: MoritaData, expr: String) -> Result<FiniteRing> {
    let ring = FiniteRing::new(MoritaCarrier { data }, expr.clone());
    let report = validate_ring_axioms(&ring);
    if let Some(v) = report.violation {
        return Err(RingError::Axiom(format!("{expr}: {v}")));
    }
    Ok(ring)
}
