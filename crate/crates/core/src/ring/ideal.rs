use super::{Elem, FiniteRing, Subset, SubsetKind};

/// Additive subgroup built up one generator at a time.
pub(crate) struct Span {
    pub mask: Vec<bool>,
    pub members: Vec<Elem>,
    pub gens: Vec<Elem>,
}

impl Span {
    pub fn new(ring: &FiniteRing) -> Span {
        let mut mask = vec![false; ring.order()];
        mask[ring.zero() as usize] = true;
        Span {
            mask,
            members: vec![ring.zero()],
            gens: Vec::new(),
        }
    }

    /// Extends the span by `g`; returns false when `g` was already inside.
    pub fn extend(&mut self, ring: &FiniteRing, g: Elem) -> bool {
        if self.mask[g as usize] {
            return false;
        }
        self.gens.push(g);
        // closing a subgroup S under "+g" yields S + <g>
        let mut i = 0;
        while i < self.members.len() {
            let y = ring.add(self.members[i], g);
            if !self.mask[y as usize] {
                self.mask[y as usize] = true;
                self.members.push(y);
            }
            i += 1;
        }
        true
    }

    pub fn into_subset(self, ring: &FiniteRing, kind: SubsetKind) -> Subset {
        Subset::from_mask(ring, &self.mask, kind)
    }
}

impl FiniteRing {
    /// A generating set of the additive subgroup spanned by `xs`, chosen
    /// greedily in the order given.
    pub fn additive_generators<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Vec<Elem> {
        let mut span = Span::new(self);
        for x in xs {
            span.extend(self, x);
        }
        span.gens
    }

    pub fn additive_span<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Subset {
        let mut span = Span::new(self);
        for x in xs {
            span.extend(self, x);
        }
        span.into_subset(self, SubsetKind::Plain)
    }

    /// Least two-sided ideal containing `gens`.
    pub fn ideal_closure(&self, gens: &[Elem]) -> Subset {
        // left ideal first, then right multiples of its additive generators
        let mut left = Span::new(self);
        for &g in gens {
            for r in self.elements() {
                left.extend(self, self.mul(r, g));
            }
        }
        let mut two = Span::new(self);
        for &l in &left.gens {
            for s in self.elements() {
                two.extend(self, self.mul(l, s));
            }
        }
        two.into_subset(self, SubsetKind::Ideal)
    }

    /// Checks two-sided ideal closure; on failure describes a witness.
    pub fn check_ideal(&self, set: &Subset) -> Result<(), String> {
        if !set.belongs_to(self) {
            return Err("subset belongs to a different ring".into());
        }
        if !set.contains(self.zero()) {
            return Err("does not contain zero".into());
        }
        let gens = self.additive_generators(set.members().iter().copied());
        for &a in set.members() {
            for &g in &gens {
                let s = self.add(a, g);
                if !set.contains(s) {
                    return Err(format!("not closed under addition: {a} + {g} = {s}"));
                }
            }
            let n = self.neg(a);
            if !set.contains(n) {
                return Err(format!("not closed under negation: -{a} = {n}"));
            }
        }
        let ring_gens = self.additive_generators(self.elements());
        for &a in &gens {
            for &r in &ring_gens {
                let (ra, ar) = (self.mul(r, a), self.mul(a, r));
                if !set.contains(ra) {
                    return Err(format!("not a left ideal: {r} * {a} = {ra}"));
                }
                if !set.contains(ar) {
                    return Err(format!("not a right ideal: {a} * {r} = {ar}"));
                }
            }
        }
        Ok(())
    }

    pub fn is_ideal(&self, set: &Subset) -> bool {
        self.check_ideal(set).is_ok()
    }

    /// Product `IK` of two ideals: the additive span of all `ab`.
    pub fn ideal_product(&self, i: &Subset, k: &Subset) -> Subset {
        let gi = self.additive_generators(i.members().iter().copied());
        let gk = self.additive_generators(k.members().iter().copied());
        let mut span = Span::new(self);
        for &a in &gi {
            for &b in &gk {
                span.extend(self, self.mul(a, b));
            }
        }
        span.into_subset(self, SubsetKind::Ideal)
    }

    /// Additive span of `{ab : a in A, b in B}` for arbitrary subsets.
    pub fn subset_product(&self, a: &Subset, b: &Subset) -> Subset {
        let ga = self.additive_generators(a.members().iter().copied());
        let gb = self.additive_generators(b.members().iter().copied());
        let mut span = Span::new(self);
        for &x in &ga {
            for &y in &gb {
                span.extend(self, self.mul(x, y));
            }
        }
        span.into_subset(self, SubsetKind::Plain)
    }

    /// Least l with `I^l = 0`, or `None` if the powers stabilize above zero.
    pub fn ideal_nilpotency_index(&self, ideal: &Subset) -> Option<u32> {
        let mut power = ideal.clone();
        let mut l = 1u32;
        loop {
            if power.len() == 1 {
                return Some(l);
            }
            let next = self.ideal_product(&power, ideal);
            if next.len() == power.len() {
                return None;
            }
            power = next;
            l += 1;
        }
    }
}
