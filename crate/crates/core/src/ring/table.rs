use super::{Carrier, Elem};
use crate::{Result, RingError};

/// A ring given by explicit addition and multiplication tables.
pub struct TableCarrier {
    order: usize,
    zero: Elem,
    one: Elem,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
}

impl TableCarrier {
    /// Tables are row-major `order × order`. Only shapes and ranges are
    /// checked here; the ring axioms are left to
    /// [`validate_ring_axioms`](super::validate_ring_axioms).
    pub fn new(
        order: usize,
        zero: Elem,
        one: Elem,
        add: Vec<Elem>,
        mul: Vec<Elem>,
    ) -> Result<Self> {
        if order < 2 {
            return Err(RingError::InvalidParameter(
                "table ring needs at least 2 elements".into(),
            ));
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(RingError::InvalidParameter(format!(
                "tables must have {} entries",
                order * order
            )));
        }
        if let Some(&bad) = add
            .iter()
            .chain(&mul)
            .chain([&zero, &one])
            .find(|&&x| x as usize >= order)
        {
            return Err(RingError::InvalidParameter(format!(
                "entry {bad} out of range for order {order}"
            )));
        }
        // negation from the addition table; absent inverses fall back to the
        // element itself so the axiom check reports the failure
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] == zero)
                    .unwrap_or(a) as Elem
            })
            .collect();
        Ok(TableCarrier {
            order,
            zero,
            one,
            add,
            mul,
            neg,
        })
    }
}

impl Carrier for TableCarrier {
    fn order(&self) -> usize {
        self.order
    }

    fn zero(&self) -> Elem {
        self.zero
    }

    fn one(&self) -> Elem {
        self.one
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order + b as usize]
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order + b as usize]
    }

    fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    fn label(&self, a: Elem) -> String {
        a.to_string()
    }
}
