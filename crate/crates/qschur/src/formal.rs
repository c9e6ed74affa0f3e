//! Finite integer formal sums over ordered keys.
//!
//! The zero-coefficient invariant: a key is present iff its coefficient is
//! nonzero, so equality of sums is equality of maps and iteration order is
//! the key order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalSum<T: Ord> {
    terms: BTreeMap<T, i64>,
}

impl<T: Ord> FormalSum<T> {
    pub fn zero() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }

    pub fn singleton(key: T) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, 1);
        FormalSum { terms }
    }

    pub fn add_term(&mut self, key: T, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let new = *o.get() + coeff;
                if new == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = new;
                }
            }
        }
    }

    pub fn coeff(&self, key: &T) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&T, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (T, i64)> {
        self.terms.into_iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of keys with nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn scaled(mut self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        for coeff in self.terms.values_mut() {
            *coeff *= k;
        }
        self
    }

    pub fn map_keys<U: Ord>(self, f: impl Fn(T) -> U) -> FormalSum<U> {
        let mut out = FormalSum::zero();
        for (k, c) in self.terms {
            out.add_term(f(k), c);
        }
        out
    }
}

impl<T: Ord + Clone> FromIterator<(T, i64)> for FormalSum<T> {
    fn from_iter<I: IntoIterator<Item = (T, i64)>>(iter: I) -> Self {
        let mut out = FormalSum::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<T: Ord> AddAssign for FormalSum<T> {
    fn add_assign(&mut self, rhs: Self) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl<T: Ord> Add for FormalSum<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<T: Ord> Neg for FormalSum<T> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for coeff in self.terms.values_mut() {
            *coeff = -*coeff;
        }
        self
    }
}

impl<T: Ord> Sub for FormalSum<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ord + fmt::Display> fmt::Display for FormalSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, coeff)) in self.terms.iter().enumerate() {
            let (sign, mag) = if *coeff < 0 {
                ("-", -coeff)
            } else {
                ("+", *coeff)
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag == 1 {
                write!(f, "{key}")?;
            } else {
                write!(f, "{mag}·{key}")?;
            }
        }
        Ok(())
    }
}
