use std::sync::Arc;

use super::field::PrimeField;
use super::monomial::MonomialOrder;

/// A polynomial ring `F_p[v_0, ..., v_{k-1}]` with a fixed monomial order.
///
/// Rings are immutable once built and shared through [`Arc`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    names: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(field: PrimeField, names: Vec<String>, order: MonomialOrder) -> RingRef {
        Arc::new(Ring { field, names, order })
    }

    /// Grevlex ring with the given variable names.
    pub fn with_names<S: AsRef<str>>(field: PrimeField, names: &[S]) -> RingRef {
        Self::new(field, names.iter().map(|s| s.as_ref().to_string()).collect(), MonomialOrder::grevlex())
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring { field: self.field, names: self.names.clone(), order })
    }

    /// Appends variables after the existing ones; the order becomes grevlex
    /// unless `order` says otherwise.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S], order: MonomialOrder) -> RingRef {
        let mut names = self.names.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Arc::new(Ring { field: self.field, names, order })
    }

    /// The natural ring in which `first`'s variables precede `second`'s.
    pub fn concat(first: &Ring, second: &Ring, order: MonomialOrder) -> RingRef {
        assert_eq!(first.field, second.field, "cannot concatenate rings over different fields");
        let mut names = first.names.clone();
        names.extend(second.names.iter().cloned());
        Arc::new(Ring { field: first.field, names, order })
    }
}

pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
