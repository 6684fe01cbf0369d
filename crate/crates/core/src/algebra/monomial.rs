use std::fmt::{self, Debug};
use std::hash::Hash;

/// Exponent monoid of a Laurent ring: a free abelian group with a total order
/// used for canonical term ordering.
pub trait Exponent: Copy + Ord + Hash + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn neg(self) -> Self;
    /// Writes the monomial part, e.g. `A^3` or `v^1*z^-1`.
    fn fmt_monomial(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
    /// Parses the monomial part written by [`Exponent::fmt_monomial`].
    fn parse_monomial(s: &str) -> Option<Self>;
    /// Integer components in JSON order.
    fn components(&self) -> Vec<i64>;
    fn from_components(c: &[i64]) -> Option<Self>;
}

fn parse_power(s: &str, var: char) -> Option<i64> {
    let rest = s.strip_prefix(var)?.strip_prefix('^')?;
    rest.parse().ok()
}

impl Exponent for i64 {
    fn zero() -> Self {
        0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn neg(self) -> Self {
        -self
    }
    fn fmt_monomial(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A^{self}")
    }
    fn parse_monomial(s: &str) -> Option<Self> {
        parse_power(s, 'A')
    }
    fn components(&self) -> Vec<i64> {
        vec![*self]
    }
    fn from_components(c: &[i64]) -> Option<Self> {
        match c {
            [e] => Some(*e),
            _ => None,
        }
    }
}

/// Exponent pair `(a, b)` of the monomial `v^a z^b`, ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VZ(pub i64, pub i64);

impl Exponent for VZ {
    fn zero() -> Self {
        VZ(0, 0)
    }
    fn add(self, other: Self) -> Self {
        VZ(self.0 + other.0, self.1 + other.1)
    }
    fn neg(self) -> Self {
        VZ(-self.0, -self.1)
    }
    fn fmt_monomial(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v^{}*z^{}", self.0, self.1)
    }
    fn parse_monomial(s: &str) -> Option<Self> {
        let (v, z) = s.split_once('*')?;
        Some(VZ(parse_power(v, 'v')?, parse_power(z, 'z')?))
    }
    fn components(&self) -> Vec<i64> {
        vec![self.0, self.1]
    }
    fn from_components(c: &[i64]) -> Option<Self> {
        match c {
            [a, b] => Some(VZ(*a, *b)),
            _ => None,
        }
    }
}
