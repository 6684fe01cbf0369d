use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::algebra::ParsePolyError;
use crate::LaurentA;

/// Polynomial in one variable `V` with `LaurentA` coefficients.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly1<const V: char> {
    coeffs: BTreeMap<usize, LaurentA>,
}

/// A class in the basis `{x^n}`; `x^0` is the empty link.
pub type SkeinVectorX = Poly1<'x'>;

/// Polynomial in `t` with `LaurentA` coefficients.
pub type PolyT = Poly1<'t'>;

impl<const V: char> Poly1<V> {
    pub fn zero() -> Self {
        Poly1 { coeffs: BTreeMap::new() }
    }

    /// `c·V^n`.
    pub fn term(n: usize, c: LaurentA) -> Self {
        let mut p = Self::zero();
        p.add_term(n, c);
        p
    }

    /// The constant `c·V^0`.
    pub fn constant(c: LaurentA) -> Self {
        Self::term(0, c)
    }

    pub fn one() -> Self {
        Self::constant(LaurentA::one())
    }

    /// `V^1`.
    pub fn var() -> Self {
        Self::term(1, LaurentA::one())
    }

    pub fn add_term(&mut self, n: usize, c: LaurentA) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(n).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub fn coeff(&self, n: usize) -> LaurentA {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &LaurentA)> {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&LaurentA> {
        self.coeffs.values().next_back()
    }

    pub fn scale(&self, c: &LaurentA) -> Self {
        let mut out = Self::zero();
        for (n, k) in &self.coeffs {
            out.add_term(*n, k * c);
        }
        out
    }

    /// Multiplies by `V^k`.
    pub fn shift(&self, k: usize) -> Self {
        Poly1 { coeffs: self.coeffs.iter().map(|(n, c)| (n + k, c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Replaces every coefficient `c` by `f(c)`.
    pub fn map_coeffs(&self, f: impl Fn(&LaurentA) -> LaurentA) -> Self {
        let mut out = Self::zero();
        for (n, c) in &self.coeffs {
            out.add_term(*n, f(c));
        }
        out
    }

    /// Substitutes a polynomial (in any variable) for `V`.
    pub fn compose<const W: char>(&self, value: &Poly1<W>) -> Poly1<W> {
        let mut out = Poly1::<W>::zero();
        let mut power = Poly1::<W>::one();
        let mut at = 0usize;
        for (n, c) in &self.coeffs {
            while at < *n {
                power = &power * value;
                at += 1;
            }
            out = &out + &power.scale(c);
        }
        out
    }

    /// Same coefficients, read in another variable.
    pub fn rename<const W: char>(self) -> Poly1<W> {
        Poly1 { coeffs: self.coeffs }
    }

    /// `{"basis": "V", "coeffs": {"n": laurent-json, ...}}`.
    pub fn to_json(&self) -> Value {
        let coeffs: Map<String, Value> = self.coeffs.iter().map(|(n, c)| (n.to_string(), c.to_json())).collect();
        let mut m = Map::new();
        m.insert("basis".into(), Value::String(V.to_string()));
        m.insert("coeffs".into(), Value::Object(coeffs));
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self, ParsePolyError> {
        let bad = || ParsePolyError::Json(v.to_string());
        if v.get("basis").and_then(Value::as_str) != Some(V.to_string().as_str()) {
            return Err(bad());
        }
        let coeffs = v.get("coeffs").and_then(Value::as_object).ok_or_else(bad)?;
        let mut out = Self::zero();
        for (k, c) in coeffs {
            let n: usize = k.parse().map_err(|_| bad())?;
            out.add_term(n, LaurentA::from_json(c)?);
        }
        Ok(out)
    }
}

impl<const V: char> From<LaurentA> for Poly1<V> {
    fn from(c: LaurentA) -> Self {
        Self::constant(c)
    }
}

impl<const V: char> Add<&Poly1<V>> for &Poly1<V> {
    type Output = Poly1<V>;
    fn add(self, rhs: &Poly1<V>) -> Poly1<V> {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.add_term(*n, c.clone());
        }
        out
    }
}

impl<const V: char> Sub<&Poly1<V>> for &Poly1<V> {
    type Output = Poly1<V>;
    fn sub(self, rhs: &Poly1<V>) -> Poly1<V> {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.add_term(*n, -c);
        }
        out
    }
}

impl<const V: char> Mul<&Poly1<V>> for &Poly1<V> {
    type Output = Poly1<V>;
    fn mul(self, rhs: &Poly1<V>) -> Poly1<V> {
        let mut out = Poly1::zero();
        for (a, c) in &self.coeffs {
            for (b, d) in &rhs.coeffs {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

impl<const V: char> Neg for &Poly1<V> {
    type Output = Poly1<V>;
    fn neg(self) -> Poly1<V> {
        self.scale(&LaurentA::constant(-1))
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<const V: char> $tr<Poly1<V>> for Poly1<V> {
            type Output = Poly1<V>;
            fn $m(self, rhs: Poly1<V>) -> Poly1<V> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

/// Highest power first, as `(c) * V^n` joined by ` + `; zero prints as `0`.
impl<const V: char> fmt::Display for Poly1<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().rev().map(|(n, c)| format!("({c}) * {V}^{n}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<const V: char> fmt::Debug for Poly1<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
