use crate::ring::{Carrier, Elem, FiniteRing, Subset};
use crate::{Result, RingError};

/// `R ∝ I`: pairs `(r, i)` with `(r, i)(s, j) = (rs, rj + is)`. The pair
/// `(r, i_k)` has index `r + |R|·k`, where `i_0 = 0` and the remaining
/// members of I follow in ascending order.
pub struct IdealizationCarrier {
    base: FiniteRing,
    members: Vec<Elem>,
    pos: Vec<Elem>,
}

impl IdealizationCarrier {
    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    pub fn encode(&self, r: Elem, i: Elem) -> Elem {
        r + self.base.order() as Elem * self.pos[i as usize]
    }

    /// `(r, i)` as base-ring elements.
    pub fn decode(&self, x: Elem) -> (Elem, Elem) {
        let n = self.base.order() as Elem;
        (x % n, self.members[(x / n) as usize])
    }
}

impl Carrier for IdealizationCarrier {
    fn order(&self) -> usize {
        self.base.order() * self.members.len()
    }

    fn zero(&self) -> Elem {
        self.encode(self.base.zero(), self.base.zero())
    }

    fn one(&self) -> Elem {
        self.encode(self.base.one(), self.base.zero())
    }

    fn add(&self, x: Elem, y: Elem) -> Elem {
        let ((r, i), (s, j)) = (self.decode(x), self.decode(y));
        self.encode(self.base.add(r, s), self.base.add(i, j))
    }

    fn mul(&self, x: Elem, y: Elem) -> Elem {
        let b = &self.base;
        let ((r, i), (s, j)) = (self.decode(x), self.decode(y));
        self.encode(b.mul(r, s), b.add(b.mul(r, j), b.mul(i, s)))
    }

    fn neg(&self, x: Elem) -> Elem {
        let (r, i) = self.decode(x);
        self.encode(self.base.neg(r), self.base.neg(i))
    }

    fn label(&self, x: Elem) -> String {
        let (r, i) = self.decode(x);
        format!("({}, {})", self.base.label(r), self.base.label(i))
    }

    fn structural_radical(&self) -> Option<Vec<Elem>> {
        let j = self.base.jacobson_radical();
        let mut out: Vec<Elem> = self
            .members
            .iter()
            .flat_map(|&i| j.set.members().iter().map(move |&r| (r, i)))
            .map(|(r, i)| self.encode(r, i))
            .collect();
        out.sort_unstable();
        Some(out)
    }
}

/// `R ∝ I` for a two-sided ideal I of R.
pub fn idealization(
    base: &FiniteRing,
    ideal: &Subset,
    expr: String,
    cap: usize,
) -> Result<FiniteRing> {
    base.check_ideal(ideal).map_err(RingError::NotAnIdeal)?;
    let order = base.order() as u128 * ideal.len() as u128;
    if order > cap as u128 {
        return Err(RingError::CapExceeded {
            what: expr,
            order,
            cap: cap as u128,
        });
    }
    let mut members = vec![base.zero()];
    members.extend(
        ideal
            .members()
            .iter()
            .copied()
            .filter(|&x| x != base.zero()),
    );
    let mut pos = vec![Elem::MAX; base.order()];
    for (k, &x) in members.iter().enumerate() {
        pos[x as usize] = k as Elem;
    }
    Ok(FiniteRing::new(
        IdealizationCarrier {
            base: base.clone(),
            members,
            pos,
        },
        expr,
    ))
}
