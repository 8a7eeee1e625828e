//! Sparse linear combinations with parameter-polynomial coefficients.

use std::collections::btree_map;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::scalars::{Cyc, ParamPoly};

/// A finite sum `Σ coeff * basis`, with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lin<K: Ord> {
    terms: BTreeMap<K, ParamPoly>,
}

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, ParamPoly::one())
    }

    pub fn term(k: K, c: ParamPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(k, &c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, ParamPoly> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &K) -> ParamPoly {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, k: K, c: &ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    /// Adds `sign * c` where `sign = ±1`.
    pub fn add_signed(&mut self, k: K, c: &ParamPoly, sign: i8) {
        if sign >= 0 {
            self.add_term(k, c);
        } else {
            self.add_term(k, &-c);
        }
    }

    pub fn add_assign_lin(&mut self, o: &Lin<K>) {
        for (k, c) in &o.terms {
            self.add_term(k.clone(), c);
        }
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        let mut out = Self::zero();
        for (k, a) in &self.terms {
            out.add_term(k.clone(), &(a * c));
        }
        out
    }

    pub fn scale_cyc(&self, c: &Cyc) -> Self {
        self.scale(&ParamPoly::constant(c.clone()))
    }

    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> (i8, K2)) -> Lin<K2> {
        let mut out = Lin::zero();
        for (k, c) in &self.terms {
            let (s, k2) = f(k);
            out.add_signed(k2, c, s);
        }
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&ParamPoly) -> ParamPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &f(c));
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<K, ParamPoly> {
        self.terms
    }
}

impl<K: Ord + Clone> FromIterator<(K, ParamPoly)> for Lin<K> {
    fn from_iter<I: IntoIterator<Item = (K, ParamPoly)>>(iter: I) -> Self {
        let mut out = Lin::zero();
        for (k, c) in iter {
            out.add_term(k, &c);
        }
        out
    }
}

impl<K: Ord + Clone> Add for &Lin<K> {
    type Output = Lin<K>;
    fn add(self, o: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        out.add_assign_lin(o);
        out
    }
}

impl<K: Ord + Clone> Sub for &Lin<K> {
    type Output = Lin<K>;
    fn sub(self, o: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), &-c);
        }
        out
    }
}

impl<K: Ord + Clone> Neg for &Lin<K> {
    type Output = Lin<K>;
    fn neg(self) -> Lin<K> {
        self.map_coeffs(|c| -c)
    }
}
