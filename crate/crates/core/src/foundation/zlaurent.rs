//! Finitely supported Laurent series in `z`.

use std::collections::BTreeMap;

/// `Σ_n c_n z^n` with coefficients of any type.
#[derive(Clone, Debug, PartialEq)]
pub struct ZLaurent<T> {
    terms: BTreeMap<i32, T>,
}

impl<T> Default for ZLaurent<T> {
    fn default() -> Self {
        ZLaurent { terms: BTreeMap::new() }
    }
}

impl<T: Clone> ZLaurent<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(n: i32, c: T) -> Self {
        let mut z = Self::new();
        z.terms.insert(n, c);
        z
    }

    pub fn insert(&mut self, n: i32, c: T) {
        self.terms.insert(n, c);
    }

    pub fn get(&self, n: i32) -> Option<&T> {
        self.terms.get(&n)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &T)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Apply `f(n, c)` to every coefficient, e.g. the substitution `z ↦ −z`.
    pub fn map<U: Clone>(&self, f: impl Fn(i32, &T) -> U) -> ZLaurent<U> {
        ZLaurent { terms: self.terms.iter().map(|(k, v)| (*k, f(*k, v))).collect() }
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }
}
