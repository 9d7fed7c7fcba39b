use crate::ring::{Carrier, Elem, FiniteRing, Radix, MAX_SLOTS};
use crate::{Result, RingError};

/// Which entries of an n×n matrix are free.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Full,
    UpperTriangular,
}

/// How products of entries are twisted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    /// Ordinary matrix multiplication.
    None,
    /// `K_s(R)`: the diagonal entries of a product pick up `s` from the
    /// off-diagonal terms.
    K { s: Elem },
    /// `M_n(R; s)`: the term `a_ik b_kj` is weighted by `s^δ` with
    /// `δ = 1 + [i=j] − [i=k] − [k=j]`.
    Ms { s: Elem },
}

/// n×n matrices over a base ring, optionally triangular or twisted by a
/// central element. Entries are stored row-major in the index, entry (0,0)
/// least significant.
pub struct MatrixCarrier {
    base: FiniteRing,
    n: usize,
    shape: Shape,
    twist: Twist,
    slots: Vec<(usize, usize)>,
    /// `slot_of[i*n + j]`, or `usize::MAX` for entries fixed at zero.
    slot_of: Vec<usize>,
    radix: Radix,
    /// `weight[(i*n + k)*n + j]` multiplies `a_ik b_kj`; `None` when all
    /// weights are one.
    weight: Option<Vec<Elem>>,
}

/// δ(i,k,j) = 1 + [i=j] − [i=k] − [k=j], never negative.
pub fn ms_exponent(i: usize, k: usize, j: usize) -> u32 {
    (1 + (i == j) as i32 - (i == k) as i32 - (k == j) as i32) as u32
}

impl MatrixCarrier {
    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    /// Entries of `x` as a dense row-major n×n array.
    pub fn entries(&self, x: Elem) -> Vec<Elem> {
        let mut digits = [0 as Elem; MAX_SLOTS];
        let k = self.slots.len();
        self.radix.decode_into(x as u64, &mut digits[..k]);
        let mut out = vec![self.base.zero(); self.n * self.n];
        for (s, &(i, j)) in self.slots.iter().enumerate() {
            out[i * self.n + j] = digits[s];
        }
        out
    }

    pub fn entry(&self, x: Elem, i: usize, j: usize) -> Elem {
        self.entries(x)[i * self.n + j]
    }

    /// Encodes a dense row-major array; `None` if a fixed-zero position is
    /// nonzero.
    pub fn encode(&self, entries: &[Elem]) -> Option<Elem> {
        let mut digits = [0 as Elem; MAX_SLOTS];
        for (pos, &v) in entries.iter().enumerate() {
            match self.slot_of[pos] {
                usize::MAX if v != self.base.zero() => return None,
                usize::MAX => {}
                s => digits[s] = v,
            }
        }
        Some(self.radix.encode(&digits[..self.slots.len()]) as Elem)
    }

    /// The matrix unit with `v` at (i, j).
    pub fn unit(&self, i: usize, j: usize, v: Elem) -> Option<Elem> {
        let mut e = vec![self.base.zero(); self.n * self.n];
        e[i * self.n + j] = v;
        self.encode(&e)
    }

    /// Scalar matrix `v·I`.
    pub fn scalar(&self, v: Elem) -> Elem {
        let mut e = vec![self.base.zero(); self.n * self.n];
        for i in 0..self.n {
            e[i * self.n + i] = v;
        }
        self.encode(&e).expect("diagonal is always free")
    }

    #[inline]
    fn decode(&self, x: Elem, out: &mut [Elem; MAX_SLOTS]) {
        let k = self.slots.len();
        let mut d = [0 as Elem; MAX_SLOTS];
        self.radix.decode_into(x as u64, &mut d[..k]);
        out[..self.n * self.n].fill(self.base.zero());
        for (s, &(i, j)) in self.slots.iter().enumerate() {
            out[i * self.n + j] = d[s];
        }
    }

    #[inline]
    fn encode_dense(&self, dense: &[Elem; MAX_SLOTS]) -> Elem {
        let mut d = [0 as Elem; MAX_SLOTS];
        for (s, &(i, j)) in self.slots.iter().enumerate() {
            d[s] = dense[i * self.n + j];
        }
        self.radix.encode(&d[..self.slots.len()]) as Elem
    }

    fn entrywise(&self, a: Elem, b: Elem, f: impl Fn(Elem, Elem) -> Elem) -> Elem {
        let k = self.slots.len();
        let mut da = [0 as Elem; MAX_SLOTS];
        let mut db = [0 as Elem; MAX_SLOTS];
        self.radix.decode_into(a as u64, &mut da[..k]);
        self.radix.decode_into(b as u64, &mut db[..k]);
        for s in 0..k {
            da[s] = f(da[s], db[s]);
        }
        self.radix.encode(&da[..k]) as Elem
    }
}

impl Carrier for MatrixCarrier {
    fn order(&self) -> usize {
        self.radix.total().unwrap() as usize
    }

    fn zero(&self) -> Elem {
        self.encode(&vec![self.base.zero(); self.n * self.n])
            .unwrap()
    }

    fn one(&self) -> Elem {
        self.scalar(self.base.one())
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        self.entrywise(a, b, |x, y| self.base.add(x, y))
    }

    fn neg(&self, a: Elem) -> Elem {
        self.entrywise(a, a, |x, _| self.base.neg(x))
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let n = self.n;
        let r = &self.base;
        let mut da = [0 as Elem; MAX_SLOTS];
        let mut db = [0 as Elem; MAX_SLOTS];
        let mut dc = [0 as Elem; MAX_SLOTS];
        self.decode(a, &mut da);
        self.decode(b, &mut db);
        for &(i, j) in &self.slots {
            let mut acc = r.zero();
            for k in 0..n {
                let t = r.mul(da[i * n + k], db[k * n + j]);
                let t = match &self.weight {
                    Some(w) => r.mul(w[(i * n + k) * n + j], t),
                    None => t,
                };
                acc = r.add(acc, t);
            }
            dc[i * n + j] = acc;
        }
        self.encode_dense(&dc)
    }

    fn label(&self, a: Elem) -> String {
        let e = self.entries(a);
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let row: Vec<String> = (0..self.n)
                    .map(|j| self.base.label(e[i * self.n + j]))
                    .collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }

    fn structural_radical(&self) -> Option<Vec<Elem>> {
        let j = self.base.jacobson_radical();
        let jm = j.set.members().to_vec();
        let all: Vec<Elem> = self.base.elements().collect();
        let s = match self.twist {
            Twist::None => None,
            Twist::K { s } | Twist::Ms { s } => Some(s),
        };
        // off-diagonal entries are free when they generate a nilpotent
        // ideal: strict upper part of T_n, or twisted rings with s in J
        let off_free = match (self.shape, s) {
            (Shape::UpperTriangular, _) => true,
            (Shape::Full, None) => false,
            (Shape::Full, Some(s)) if j.set.contains(s) => true,
            (Shape::Full, Some(s)) if self.base.is_unit(s) => false,
            _ => return None,
        };
        let allowed: Vec<Vec<Elem>> = self
            .slots
            .iter()
            .map(|&(i, k)| {
                if i != k && off_free {
                    all.clone()
                } else {
                    jm.clone()
                }
            })
            .collect();
        Some(self.radix.enumerate(&allowed))
    }

    fn corner_idempotent(&self) -> Option<Elem> {
        if self.n < 2 {
            return None;
        }
        let mut e = vec![self.base.zero(); self.n * self.n];
        for i in 0..self.n - 1 {
            e[i * self.n + i] = self.base.one();
        }
        self.encode(&e)
    }
}

fn matrix_expr(n: usize, base: &FiniteRing, shape: Shape, twist: Twist) -> String {
    let s_text = |s: Elem| -> String {
        // integers print as integers; other elements by index
        let as_int = (0..base.characteristic().characteristic).find(|&k| base.int(k as i64) == s);
        match as_int {
            Some(k) => k.to_string(),
            None => format!("#{s}"),
        }
    };
    match (shape, twist) {
        (Shape::Full, Twist::None) => format!("M({n}, {})", base.expr()),
        (Shape::UpperTriangular, _) => format!("T({n}, {})", base.expr()),
        (Shape::Full, Twist::K { s }) => format!("K({}, s={})", base.expr(), s_text(s)),
        (Shape::Full, Twist::Ms { s }) => format!("MS({n}, {}, s={})", base.expr(), s_text(s)),
    }
}

fn build(
    n: usize,
    base: &FiniteRing,
    shape: Shape,
    twist: Twist,
    cap: usize,
) -> Result<FiniteRing> {
    let expr = matrix_expr(n, base, shape, twist);
    if n == 0 {
        return Err(RingError::InvalidParameter(format!(
            "{expr}: size must be positive"
        )));
    }
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| shape == Shape::Full || i <= j)
        .collect();
    let radix = Radix::uniform(base.order() as u64, slots.len());
    let order = if slots.len() > MAX_SLOTS {
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
    let mut slot_of = vec![usize::MAX; n * n];
    for (s, &(i, j)) in slots.iter().enumerate() {
        slot_of[i * n + j] = s;
    }
    let weight = match twist {
        Twist::None => None,
        Twist::K { s } | Twist::Ms { s } => {
            if let Some(y) = base.elements().find(|&y| !base.commute(s, y)) {
                return Err(RingError::NonCentral(format!(
                    "{expr}: s does not commute with {}",
                    base.label(y)
                )));
            }
            let mut w = vec![base.one(); n * n * n];
            for i in 0..n {
                for k in 0..n {
                    for j in 0..n {
                        let e = match twist {
                            Twist::K { .. } => (i == j && i != k) as u64,
                            _ => ms_exponent(i, k, j) as u64,
                        };
                        w[(i * n + k) * n + j] = base.pow(s, e);
                    }
                }
            }
            Some(w)
        }
    };
    Ok(FiniteRing::new(
        MatrixCarrier {
            base: base.clone(),
            n,
            shape,
            twist,
            slots,
            slot_of,
            radix,
            weight,
        },
        expr,
    ))
}

/// `M(n, R)` or `T(n, R)`.
pub fn matrix_ring(n: usize, base: &FiniteRing, shape: Shape, cap: usize) -> Result<FiniteRing> {
    build(n, base, shape, Twist::None, cap)
}

/// Which formal matrix ring to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormalVariant {
    K,
    Ms(usize),
}

/// `K_s(R)` or `M_n(R; s)` for a central element `s` of `R`.
pub fn formal_matrix_s(
    base: &FiniteRing,
    s: Elem,
    variant: FormalVariant,
    cap: usize,
) -> Result<FiniteRing> {
    if s as usize >= base.order() {
        return Err(RingError::InvalidParameter(format!(
            "s = #{s} is not an element of {}",
            base.expr()
        )));
    }
    match variant {
        FormalVariant::K => build(2, base, Shape::Full, Twist::K { s }, cap),
        FormalVariant::Ms(n) if n < 2 => Err(RingError::InvalidParameter(format!(
            "MS({n}, ...): size must be at least 2"
        ))),
        FormalVariant::Ms(n) => build(n, base, Shape::Full, Twist::Ms { s }, cap),
    }
}
