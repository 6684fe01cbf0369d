use std::collections::BTreeMap;
use std::fmt::{Debug, Display};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::monomial::Exponent;

/// Coefficient ring requirements: an exact signed integer type.
pub trait Coefficient:
    Signed + Clone + Eq + Debug + Display + ToPrimitive + FromPrimitive + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Signed + Clone + Eq + Debug + Display + ToPrimitive + FromPrimitive + Send + Sync + 'static
{
}

/// A finitely supported map from exponents to nonzero coefficients.
///
/// Zero coefficients are never stored, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<K: Exponent, C: Coefficient> {
    terms: BTreeMap<K, C>,
}

/// Result of [`Laurent::is_unit`]: units of a Laurent ring over ℤ are `±monomial`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitFlag<K> {
    NotUnit,
    Unit { sign: i8, exponent: K },
}

impl<K: Copy> UnitFlag<K> {
    pub fn is_unit(&self) -> bool {
        matches!(self, UnitFlag::Unit { .. })
    }

    pub fn sign(&self) -> Option<i8> {
        match self {
            UnitFlag::Unit { sign, .. } => Some(*sign),
            UnitFlag::NotUnit => None,
        }
    }

    pub fn exponent(&self) -> Option<K> {
        match self {
            UnitFlag::Unit { exponent, .. } => Some(*exponent),
            UnitFlag::NotUnit => None,
        }
    }
}

impl<K: Exponent, C: Coefficient> Default for Laurent<K, C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Exponent, C: Coefficient> Laurent<K, C> {
    pub fn monomial(exponent: K, coeff: C) -> Self {
        let mut p = Self::default();
        p.add_term(exponent, coeff);
        p
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(K::zero(), C::from_i64(c).expect("coefficient conversion"))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (K, C)>>(terms: I) -> Self {
        let mut p = Self::default();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// Adds `c·m^k` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, k: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&K, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &K) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_exponent(&self) -> Option<K> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<K> {
        self.terms.keys().next().copied()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v.clone() * c.clone())))
    }

    /// Multiplies by `c·m^k`.
    pub fn mul_monomial(&self, k: K, c: &C) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (e.add(k), v.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Applies an exponent map that is injective, e.g. the involution `A ↦ A^-1`.
    pub fn map_exponents(&self, f: impl Fn(K) -> K) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (f(*k), c.clone())))
    }

    pub fn is_unit(&self) -> UnitFlag<K> {
        if self.terms.len() != 1 {
            return UnitFlag::NotUnit;
        }
        let (k, c) = self.terms.iter().next().expect("one term");
        if c.is_one() {
            UnitFlag::Unit { sign: 1, exponent: *k }
        } else if (-c.clone()).is_one() {
            UnitFlag::Unit { sign: -1, exponent: *k }
        } else {
            UnitFlag::NotUnit
        }
    }

    /// Multiplicative inverse, defined exactly for units.
    pub fn inverse(&self) -> Option<Self> {
        match self.is_unit() {
            UnitFlag::Unit { sign, exponent } => {
                Some(Self::monomial(exponent.neg(), C::from_i8(sign).expect("sign")))
            }
            UnitFlag::NotUnit => None,
        }
    }
}

impl<K: Exponent, C: Coefficient> Zero for Laurent<K, C> {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Exponent, C: Coefficient> One for Laurent<K, C> {
    fn one() -> Self {
        Self::monomial(K::zero(), C::one())
    }
}

impl<K: Exponent, C: Coefficient> Add<&Laurent<K, C>> for &Laurent<K, C> {
    type Output = Laurent<K, C>;
    fn add(self, rhs: &Laurent<K, C>) -> Laurent<K, C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Exponent, C: Coefficient> AddAssign<&Laurent<K, C>> for Laurent<K, C> {
    fn add_assign(&mut self, rhs: &Laurent<K, C>) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl<K: Exponent, C: Coefficient> SubAssign<&Laurent<K, C>> for Laurent<K, C> {
    fn sub_assign(&mut self, rhs: &Laurent<K, C>) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, -c.clone());
        }
    }
}

impl<K: Exponent, C: Coefficient> Sub<&Laurent<K, C>> for &Laurent<K, C> {
    type Output = Laurent<K, C>;
    fn sub(self, rhs: &Laurent<K, C>) -> Laurent<K, C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Exponent, C: Coefficient> Mul<&Laurent<K, C>> for &Laurent<K, C> {
    type Output = Laurent<K, C>;
    fn mul(self, rhs: &Laurent<K, C>) -> Laurent<K, C> {
        let mut out = Laurent::default();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out.add_term(k1.add(*k2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<K: Exponent, C: Coefficient> MulAssign<&Laurent<K, C>> for Laurent<K, C> {
    fn mul_assign(&mut self, rhs: &Laurent<K, C>) {
        *self = &*self * rhs;
    }
}

impl<K: Exponent, C: Coefficient> Neg for &Laurent<K, C> {
    type Output = Laurent<K, C>;
    fn neg(self) -> Laurent<K, C> {
        Laurent { terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }
}

impl<K: Exponent, C: Coefficient> Neg for Laurent<K, C> {
    type Output = Laurent<K, C>;
    fn neg(self) -> Laurent<K, C> {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<K: Exponent, C: Coefficient> $tr<Laurent<K, C>> for Laurent<K, C> {
            type Output = Laurent<K, C>;
            fn $method(self, rhs: Laurent<K, C>) -> Laurent<K, C> {
                (&self).$method(&rhs)
            }
        }
        impl<K: Exponent, C: Coefficient> $tr<&Laurent<K, C>> for Laurent<K, C> {
            type Output = Laurent<K, C>;
            fn $method(self, rhs: &Laurent<K, C>) -> Laurent<K, C> {
                (&self).$method(rhs)
            }
        }
        impl<K: Exponent, C: Coefficient> $tr<Laurent<K, C>> for &Laurent<K, C> {
            type Output = Laurent<K, C>;
            fn $method(self, rhs: Laurent<K, C>) -> Laurent<K, C> {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<K: Exponent, C: Coefficient> AddAssign for Laurent<K, C> {
    fn add_assign(&mut self, rhs: Self) {
        *self += &rhs;
    }
}

impl<K: Exponent, C: Coefficient> Sum for Laurent<K, C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<K: Exponent, C: Coefficient> Product for Laurent<K, C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}
