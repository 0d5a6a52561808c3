//! Scalars extended with a symbolic `+∞`.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use crate::scalar::{format_exact, Scalar};

/// An exact value or `+∞`.
///
/// Variant order makes the derived `Ord` put every finite value below
/// `Infinity`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext<T> {
    Finite(T),
    Infinity,
}

impl<T: Scalar> Ext<T> {
    pub fn zero() -> Self {
        Ext::Finite(T::zero())
    }

    pub fn one() -> Self {
        Ext::Finite(T::one())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Ext::Infinity)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn finite(&self) -> Option<&T> {
        match self {
            Ext::Finite(v) => Some(v),
            Ext::Infinity => None,
        }
    }

    pub fn into_finite(self) -> Option<T> {
        match self {
            Ext::Finite(v) => Some(v),
            Ext::Infinity => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Ext::Finite(v) if v.is_zero())
    }

    /// `self − other` for a finite `other`; `∞ − q = ∞`.
    pub fn sub_finite(&self, other: &T) -> Self {
        match self {
            Ext::Finite(v) => Ext::Finite(v.clone() - other.clone()),
            Ext::Infinity => Ext::Infinity,
        }
    }
}

impl<T: Scalar> From<T> for Ext<T> {
    fn from(value: T) -> Self {
        Ext::Finite(value)
    }
}

impl<T: Scalar> Add for Ext<T> {
    type Output = Ext<T>;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Ext::Finite(a), Ext::Finite(b)) => Ext::Finite(a + b),
            _ => Ext::Infinity,
        }
    }
}

impl<'a, T: Scalar> Add<&'a Ext<T>> for &'a Ext<T> {
    type Output = Ext<T>;

    fn add(self, rhs: &'a Ext<T>) -> Ext<T> {
        match (self, rhs) {
            (Ext::Finite(a), Ext::Finite(b)) => Ext::Finite(a.clone() + b.clone()),
            _ => Ext::Infinity,
        }
    }
}

impl<T: Scalar> Sum for Ext<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Ext::zero(), |acc, x| acc + x)
    }
}

impl<'a, T: Scalar> Sum<&'a Ext<T>> for Ext<T> {
    fn sum<I: Iterator<Item = &'a Ext<T>>>(iter: I) -> Self {
        iter.fold(Ext::zero(), |acc, x| &acc + x)
    }
}

impl<T: Scalar> fmt::Display for Ext<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Finite(v) => f.write_str(&format_exact(v)),
            Ext::Infinity => f.write_str("inf"),
        }
    }
}
