//! The finite-ring carrier abstraction and the structural computations every
//! other module consumes.
//!
//! A [`FiniteRing`] is an immutable, cheaply clonable handle. Elements are
//! indices `0..order`. Carriers of order at most [`TABLE_LIMIT`] are
//! materialized into addition/multiplication tables at construction; larger
//! carriers compute each operation structurally. Derived data (powers, units,
//! radical, center) is memoized in write-once cells, so repeated queries
//! return identical values.

mod axioms;
mod elements;
mod ideal;
mod product;
mod quotient;
mod radical;
mod subset;
mod table;

use std::any::Any;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

pub use axioms::{validate_ring_axioms, validate_ring_axioms_with, AxiomReport, AxiomViolation};
pub use elements::{prime_factors, CharData, ElementData, PeriodData, UnitsIdempotentsNilpotents};
pub use product::{direct_product, direct_product_capped, ProductCarrier};
pub use quotient::{Quotient, QuotientCarrier};
pub use radical::{Radical, RadicalSource};
pub use subset::{Subset, SubsetKind};
pub use table::TableCarrier;

/// Element of a finite ring: an index into its carrier.
pub type Elem = u32;

/// Carriers up to this order get precomputed operation tables.
pub const TABLE_LIMIT: usize = 1024;

/// Default order bound for exhaustive axiom validation; above it triples are
/// sampled.
pub const AXIOM_CAP: usize = 512;

/// Default bound for exhaustive classification work.
pub const DEFAULT_CAP: usize = 10_000;

/// Default bound for constructing a carrier at all.
pub const BUILD_CAP: usize = 1 << 16;

#[doc(hidden)]
pub trait AsAny: Any {
    fn as_any(&self) -> &dyn Any;
}

impl<T: Any> AsAny for T {
    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// Structural description of a finite ring: total operations on indices.
pub trait Carrier: Send + Sync + AsAny {
    fn order(&self) -> usize;
    fn zero(&self) -> Elem;
    fn one(&self) -> Elem;
    fn add(&self, a: Elem, b: Elem) -> Elem;
    fn mul(&self, a: Elem, b: Elem) -> Elem;
    fn neg(&self, a: Elem) -> Elem;
    fn label(&self, a: Elem) -> String;

    /// Jacobson radical predicted by the construction, when the construction
    /// knows it.
    fn structural_radical(&self) -> Option<Vec<Elem>> {
        None
    }

    /// An idempotent `e` exhibiting the ring as a 2×2 block (Morita context)
    /// ring via `eRe`, `eR(1-e)`, `(1-e)Re`, `(1-e)R(1-e)`.
    fn corner_idempotent(&self) -> Option<Elem> {
        None
    }
}

struct Tables {
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
}

#[derive(Default)]
struct Cache {
    elements: OnceLock<Arc<ElementData>>,
    radical: OnceLock<Radical>,
    center: OnceLock<Subset>,
    characteristic: OnceLock<CharData>,
}

struct Inner {
    id: u64,
    order: usize,
    zero: Elem,
    one: Elem,
    carrier: Box<dyn Carrier>,
    tables: Option<Tables>,
    expr: String,
    cache: Cache,
}

/// A finite unital ring.
#[derive(Clone)]
pub struct FiniteRing {
    inner: Arc<Inner>,
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

impl FiniteRing {
    /// Wraps a carrier. `expr` records how the ring was built.
    pub fn new(carrier: impl Carrier + 'static, expr: impl Into<String>) -> FiniteRing {
        Self::from_boxed(Box::new(carrier), expr.into())
    }

    fn from_boxed(carrier: Box<dyn Carrier>, expr: String) -> FiniteRing {
        let order = carrier.order();
        assert!(order >= 1, "empty carrier");
        assert!(
            order <= u32::MAX as usize,
            "carrier too large for u32 indices"
        );
        let tables = (order <= TABLE_LIMIT).then(|| {
            let n = order as Elem;
            let mut add = Vec::with_capacity(order * order);
            let mut mul = Vec::with_capacity(order * order);
            for a in 0..n {
                for b in 0..n {
                    add.push(carrier.add(a, b));
                    mul.push(carrier.mul(a, b));
                }
            }
            let neg = (0..n).map(|a| carrier.neg(a)).collect();
            Tables { add, mul, neg }
        });
        FiniteRing {
            inner: Arc::new(Inner {
                id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
                order,
                zero: carrier.zero(),
                one: carrier.one(),
                carrier,
                tables,
                expr,
                cache: Cache::default(),
            }),
        }
    }

    /// Identity of this ring object; subsets remember it.
    pub fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn zero(&self) -> Elem {
        self.inner.zero
    }

    pub fn one(&self) -> Elem {
        self.inner.one
    }

    /// The construction expression this ring was built from.
    pub fn expr(&self) -> &str {
        &self.inner.expr
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.inner.order as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.tables {
            Some(t) => t.add[a as usize * self.inner.order + b as usize],
            None => self.inner.carrier.add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.tables {
            Some(t) => t.mul[a as usize * self.inner.order + b as usize],
            None => self.inner.carrier.mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.inner.tables {
            Some(t) => t.neg[a as usize],
            None => self.inner.carrier.neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn label(&self, a: Elem) -> String {
        self.inner.carrier.label(a)
    }

    pub fn labels(&self, xs: &[Elem]) -> Vec<String> {
        xs.iter().map(|&x| self.label(x)).collect()
    }

    /// `x^e` with the convention `x^0 = 1`.
    pub fn pow(&self, x: Elem, mut e: u64) -> Elem {
        let mut base = x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// `k·x` (repeated addition, by doubling).
    pub fn smul(&self, mut k: u64, x: Elem) -> Elem {
        let mut base = x;
        let mut acc = self.zero();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add(base, base);
            }
        }
        acc
    }

    /// The image of the integer `k` in the ring.
    pub fn int(&self, k: i64) -> Elem {
        let v = self.smul(k.unsigned_abs(), self.one());
        if k < 0 {
            self.neg(v)
        } else {
            v
        }
    }

    /// Sum of a sequence of elements.
    pub fn sum<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.zero(), |acc, x| self.add(acc, x))
    }

    pub fn commute(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Downcast to the concrete carrier type, for construction-specific
    /// queries (matrix base ring, group-ring augmentation, ...).
    pub fn carrier<T: Carrier>(&self) -> Option<&T> {
        self.inner.carrier.as_ref().as_any().downcast_ref::<T>()
    }

    pub fn corner_idempotent(&self) -> Option<Elem> {
        self.inner.carrier.corner_idempotent()
    }

    pub(crate) fn structural_radical_members(&self) -> Option<Vec<Elem>> {
        self.inner.carrier.structural_radical()
    }

    /// Fails when the ring order exceeds `cap`.
    pub fn ensure_within(&self, cap: usize, what: &str) -> crate::Result<()> {
        if self.order() > cap {
            return Err(crate::RingError::CapExceeded {
                what: format!("{what} on {}", self.expr()),
                order: self.order() as u128,
                cap: cap as u128,
            });
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        self.first_noncommuting_pair().is_none()
    }

    /// Two non-commuting members of an additive generating set, if any.
    pub fn first_noncommuting_pair(&self) -> Option<(Elem, Elem)> {
        let gens = self.additive_generators(self.elements());
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                if !self.commute(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Checks that `f` (given as images of `0..order`) is a ring isomorphism
    /// onto `target`. Returns a description of the first failure.
    pub fn check_isomorphism(&self, target: &FiniteRing, f: &[Elem]) -> Result<(), String> {
        if f.len() != self.order() || target.order() != self.order() {
            return Err(format!(
                "orders differ: {} vs {}",
                self.order(),
                target.order()
            ));
        }
        let mut hit = vec![false; target.order()];
        for (x, &y) in f.iter().enumerate() {
            if y as usize >= target.order() || std::mem::replace(&mut hit[y as usize], true) {
                return Err(format!("map is not a bijection at element {x}"));
            }
        }
        if f[self.one() as usize] != target.one() {
            return Err("identity not preserved".into());
        }
        for a in self.elements() {
            for b in self.elements() {
                let (fa, fb) = (f[a as usize], f[b as usize]);
                if f[self.add(a, b) as usize] != target.add(fa, fb) {
                    return Err(format!("addition not preserved at ({a}, {b})"));
                }
                if f[self.mul(a, b) as usize] != target.mul(fa, fb) {
                    return Err(format!("multiplication not preserved at ({a}, {b})"));
                }
            }
        }
        Ok(())
    }

    /// Checks that `f: self -> target` is a ring homomorphism (not
    /// necessarily bijective).
    pub fn check_homomorphism(&self, target: &FiniteRing, f: &[Elem]) -> Result<(), String> {
        if f[self.one() as usize] != target.one() {
            return Err("identity not preserved".into());
        }
        for a in self.elements() {
            for b in self.elements() {
                let (fa, fb) = (f[a as usize], f[b as usize]);
                if f[self.add(a, b) as usize] != target.add(fa, fb) {
                    return Err(format!("addition not preserved at ({a}, {b})"));
                }
                if f[self.mul(a, b) as usize] != target.mul(fa, fb) {
                    return Err(format!("multiplication not preserved at ({a}, {b})"));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.expr(), self.order())
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.id() == other.id()
    }
}

impl Eq for FiniteRing {}

/// Mixed-radix encoding of tuples: component 0 varies fastest.
#[derive(Clone, Debug)]
pub struct Radix {
    bases: Vec<u64>,
}

impl Radix {
    pub fn new(bases: Vec<u64>) -> Radix {
        Radix { bases }
    }

    pub fn uniform(base: u64, len: usize) -> Radix {
        Radix {
            bases: vec![base; len],
        }
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    /// Product of the bases, or `None` on overflow.
    pub fn total(&self) -> Option<u128> {
        self.bases
            .iter()
            .try_fold(1u128, |acc, &b| acc.checked_mul(b as u128))
    }

    #[inline]
    pub fn decode_into(&self, mut x: u64, out: &mut [Elem]) {
        for (slot, &b) in out.iter_mut().zip(&self.bases) {
            *slot = (x % b) as Elem;
            x /= b;
        }
    }

    pub fn decode(&self, x: u64) -> Vec<Elem> {
        let mut v = vec![0; self.bases.len()];
        self.decode_into(x, &mut v);
        v
    }

    #[inline]
    pub fn encode(&self, digits: &[Elem]) -> u64 {
        let mut x = 0u64;
        for (&d, &b) in digits.iter().zip(&self.bases).rev() {
            x = x * b + d as u64;
        }
        x
    }

    /// All encodings whose digit `i` ranges over `allowed[i]`, in ascending
    /// index order.
    pub fn enumerate(&self, allowed: &[Vec<Elem>]) -> Vec<Elem> {
        let mut out = vec![0u64];
        let mut stride = 1u64;
        for (choices, &b) in allowed.iter().zip(&self.bases) {
            let mut next = Vec::with_capacity(out.len() * choices.len());
            for &c in choices {
                for &partial in &out {
                    next.push(partial + c as u64 * stride);
                }
            }
            out = next;
            stride *= b;
        }
        let mut out: Vec<Elem> = out.into_iter().map(|x| x as Elem).collect();
        out.sort_unstable();
        out
    }
}

/// Maximum tuple length supported by structured carriers (indices are 32
/// bit, so at most 32 components of size ≥ 2).
pub const MAX_SLOTS: usize = 32;
