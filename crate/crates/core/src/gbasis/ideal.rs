use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::groebner::{compute_groebner, normal_form, Budget, GroebnerBasis};
use crate::error::{Error, Result};
use crate::polycore::{same_ring, MonomialOrder, Polynomial, RingRef};

/// An ideal given by generators, with reduced Groebner bases cached per order.
///
/// The cache is behind a mutex, so concurrent queries on one ideal are safe;
/// the basis for a given order is unique, so every caller sees the same value.
#[derive(Debug)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), cache: Mutex::new(HashMap::new()) }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal { ring: ring.clone(), gens: vec![Polynomial::one(ring)], cache: Mutex::new(HashMap::new()) }
    }

    /// The irrelevant ideal generated by all variables.
    pub fn maximal(ring: &RingRef) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal { ring: ring.clone(), gens, cache: Mutex::new(HashMap::new()) }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// True when there are no nonzero generators.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced basis in the ring's own order.
    pub fn groebner(&self, budget: Budget) -> Result<Arc<GroebnerBasis>> {
        self.groebner_in(self.ring.order().clone(), budget)
    }

    pub fn groebner_in(&self, order: MonomialOrder, budget: Budget) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.lock().unwrap().get(&order) {
            return Ok(gb.clone());
        }
        let ring = if *self.ring.order() == order { self.ring.clone() } else { self.ring.with_order(order.clone()) };
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.to_ring(&ring)).collect();
        let gb = Arc::new(compute_groebner(&ring, &gens, budget)?);
        self.cache.lock().unwrap().insert(order, gb.clone());
        Ok(gb)
    }

    /// Seeds the cache with a basis computed elsewhere.
    pub(crate) fn with_cached(self, gb: Arc<GroebnerBasis>) -> Self {
        self.cache.lock().unwrap().insert(gb.ring().order().clone(), gb);
        self
    }

    pub fn contains(&self, f: &Polynomial, budget: Budget) -> Result<bool> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let gb = self.groebner(budget)?;
        Ok(normal_form(&f.to_ring(gb.ring()), &gb)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal, budget: Budget) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self, budget: Budget) -> Result<bool> {
        Ok(self.groebner(budget)?.is_unit())
    }

    /// The ideal generated by the reduced basis, with the basis cached.
    pub fn from_groebner(gb: Arc<GroebnerBasis>) -> Self {
        Ideal::new(gb.ring(), gb.polys().to_vec()).unwrap().with_cached(gb)
    }

    /// Same generators in another ring with identical variables and field.
    pub fn to_ring(&self, ring: &RingRef) -> Ideal {
        Ideal::new(ring, self.gens.iter().map(|g| g.to_ring(ring)).collect()).unwrap()
    }

    /// Pushes generators along a variable re-indexing.
    pub fn embed(&self, target: &RingRef, map: &[usize]) -> Ideal {
        Ideal::new(target, self.gens.iter().map(|g| g.embed(target, map)).collect()).unwrap()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ok(dedup_ideal(&self.ring, gens))
    }

    /// Degrees of the generators (zero generators never stored).
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.gens.iter().filter_map(|g| g.degree()).collect()
    }
}

/// Ideal whose generators are the monic, deduplicated inputs.
pub(crate) fn dedup_ideal(ring: &RingRef, gens: Vec<Polynomial>) -> Ideal {
    let mut out: Vec<Polynomial> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let m = g.monic();
        if seen.insert(m.clone()) {
            out.push(m);
        }
    }
    Ideal::new(ring, out).unwrap()
}
