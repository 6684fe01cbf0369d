use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{Map, Value};

use super::HomflyptError;
use crate::LaurentVZ;

/// Comparison data for crossingless configurations without empty ovals.
///
/// Fields compare in declaration order: total arrows (absolute values),
/// number of ovals, the ascending positive indices, then the ascending
/// absolute values of the negative indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OrderKey {
    pub total_arrows: u64,
    pub oval_count: usize,
    pub pos_profile: Vec<u64>,
    pub neg_profile: Vec<u64>,
}

impl OrderKey {
    pub fn of(ks: &[i64]) -> OrderKey {
        let mut pos: Vec<u64> = ks.iter().filter(|k| **k > 0).map(|k| k.unsigned_abs()).collect();
        let mut neg: Vec<u64> = ks.iter().filter(|k| **k < 0).map(|k| k.unsigned_abs()).collect();
        pos.sort_unstable();
        neg.sort_unstable();
        OrderKey {
            total_arrows: pos.iter().chain(&neg).sum(),
            oval_count: ks.len(),
            pos_profile: pos,
            neg_profile: neg,
        }
    }
}

fn check_indices(ks: &[i64]) -> Result<(), HomflyptError> {
    if ks.contains(&0) {
        return Err(HomflyptError::ZeroIndex);
    }
    Ok(())
}

/// Side-by-side ovals `t_{k_1} ⋯ t_{k_s}`, indices sorted ascending.
///
/// Ordering is [`order_compare`]; the key decides it, since the key fixes
/// the multiset of indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BElement {
    key: OrderKey,
    ks: Vec<i64>,
}

impl BElement {
    pub fn new(mut ks: Vec<i64>) -> Result<Self, HomflyptError> {
        check_indices(&ks)?;
        ks.sort_unstable();
        Ok(BElement { key: OrderKey::of(&ks), ks })
    }

    pub(crate) fn from_nonzero(ks: Vec<i64>) -> Self {
        Self::new(ks).expect("indices are nonzero")
    }

    /// The empty diagram.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(k: i64) -> Result<Self, HomflyptError> {
        Self::new(vec![k])
    }

    pub fn ks(&self) -> &[i64] {
        &self.ks
    }

    pub fn key(&self) -> &OrderKey {
        &self.key
    }

    pub fn is_empty(&self) -> bool {
        self.ks.is_empty()
    }

    /// Disjoint union.
    pub fn product(&self, other: &BElement) -> BElement {
        let mut ks = self.ks.clone();
        ks.extend_from_slice(&other.ks);
        BElement::from_nonzero(ks)
    }

    /// The same ovals with every orientation and arrow reversed.
    pub fn reversed(&self) -> BElement {
        BElement::from_nonzero(self.ks.iter().map(|k| -k).collect())
    }

    /// The concentric element with the same ovals.
    pub fn nested(&self) -> BppElement {
        BppElement::from_multiset(&self.ks)
    }
}

/// Concentric ovals `t_{k_1,…,k_s}` with `k_1` innermost: negative indices
/// first by increasing absolute value, then positive ones increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BppElement {
    key: OrderKey,
    ks: Vec<i64>,
}

fn nesting_rank(k: i64) -> (bool, u64) {
    (k > 0, k.unsigned_abs())
}

impl BppElement {
    /// Accepts only tuples already in nesting order.
    pub fn new(ks: Vec<i64>) -> Result<Self, HomflyptError> {
        check_indices(&ks)?;
        if ks.windows(2).any(|w| nesting_rank(w[0]) > nesting_rank(w[1])) {
            return Err(HomflyptError::NotNested(ks));
        }
        Ok(BppElement { key: OrderKey::of(&ks), ks })
    }

    /// The concentric element on the given indices, in any order.
    pub fn from_multiset(ks: &[i64]) -> Self {
        let mut ks = ks.to_vec();
        ks.sort_unstable_by_key(|k| nesting_rank(*k));
        Self::new(ks).expect("indices are nonzero and sorted")
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Indices from the innermost oval outwards.
    pub fn ks(&self) -> &[i64] {
        &self.ks
    }

    pub fn key(&self) -> &OrderKey {
        &self.key
    }

    /// The side-by-side element with the same ovals.
    pub fn flattened(&self) -> BElement {
        BElement::from_nonzero(self.ks.clone())
    }
}

/// Total order on configurations, by [`OrderKey`].
pub fn order_compare(a: &[i64], b: &[i64]) -> Ordering {
    OrderKey::of(a).cmp(&OrderKey::of(b))
}

fn fmt_indices(prefix: &str, ks: &[i64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let body: Vec<String> = ks.iter().map(i64::to_string).collect();
    write!(f, "{prefix}[{}]", body.join(","))
}

fn parse_indices(prefix: &str, s: &str) -> Result<Vec<i64>, HomflyptError> {
    let bad = || HomflyptError::BadText(s.to_string());
    let body = s.trim().strip_prefix(prefix).and_then(|r| r.strip_prefix('[')).and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',').map(|k| k.trim().parse::<i64>().map_err(|_| bad())).collect()
}

impl fmt::Display for BElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_indices("t", &self.ks, f)
    }
}

impl fmt::Display for BppElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_indices("tn", &self.ks, f)
    }
}

impl FromStr for BElement {
    type Err = HomflyptError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim_start().starts_with("tn") {
            return Err(HomflyptError::BadText(s.to_string()));
        }
        BElement::new(parse_indices("t", s)?)
    }
}

impl FromStr for BppElement {
    type Err = HomflyptError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BppElement::new(parse_indices("tn", s)?)
    }
}

/// Labels of a basis of a HOMFLYPT skein module.
pub trait BasisLabel: Clone + Ord + fmt::Display + FromStr<Err = HomflyptError> {
    /// Name written into JSON.
    const BASIS: &'static str;
    fn key(&self) -> &OrderKey;
}

impl BasisLabel for BElement {
    const BASIS: &'static str = "B";
    fn key(&self) -> &OrderKey {
        &self.key
    }
}

impl BasisLabel for BppElement {
    const BASIS: &'static str = "B''";
    fn key(&self) -> &OrderKey {
        &self.key
    }
}

/// Finite combination of basis elements with `LaurentVZ` coefficients.
/// Zero coefficients are never stored; iteration follows the order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkeinVec<E: BasisLabel> {
    terms: BTreeMap<E, LaurentVZ>,
}

pub type SkeinVectorB = SkeinVec<BElement>;
pub type SkeinVectorBpp = SkeinVec<BppElement>;

impl<E: BasisLabel> Default for SkeinVec<E> {
    fn default() -> Self {
        SkeinVec { terms: BTreeMap::new() }
    }
}

impl<E: BasisLabel> SkeinVec<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(e: E, c: LaurentVZ) -> Self {
        let mut v = Self::zero();
        v.add_term(e, c);
        v
    }

    pub fn basis(e: E) -> Self {
        Self::term(e, LaurentVZ::one())
    }

    pub fn add_term(&mut self, e: E, c: LaurentVZ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &Self, c: &LaurentVZ) {
        for (e, d) in &other.terms {
            self.add_term(e.clone(), d * c);
        }
    }

    pub fn coeff(&self, e: &E) -> LaurentVZ {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&E, &LaurentVZ)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest term under the order.
    pub fn leading(&self) -> Option<(&E, &LaurentVZ)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &LaurentVZ) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentVZ) -> LaurentVZ) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Map<String, Value> = self.terms.iter().map(|(e, c)| (e.to_string(), c.to_json())).collect();
        serde_json::json!({ "basis": E::BASIS, "coeffs": coeffs })
    }

    pub fn from_json(v: &Value) -> Result<Self, HomflyptError> {
        let bad = || HomflyptError::BadText(v.to_string());
        if v.get("basis").and_then(Value::as_str) != Some(E::BASIS) {
            return Err(bad());
        }
        let mut out = Self::zero();
        for (label, c) in v.get("coeffs").and_then(Value::as_object).ok_or_else(bad)? {
            out.add_term(label.parse()?, LaurentVZ::from_json(c).map_err(|_| bad())?);
        }
        Ok(out)
    }
}

impl SkeinVectorB {
    pub fn one() -> Self {
        Self::basis(BElement::empty())
    }

    /// Every oval reversed.
    pub fn reversed(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(e.reversed(), c.clone());
        }
        out
    }
}

impl<E: BasisLabel> From<E> for SkeinVec<E> {
    fn from(e: E) -> Self {
        Self::basis(e)
    }
}

impl<E: BasisLabel> Add<&SkeinVec<E>> for &SkeinVec<E> {
    type Output = SkeinVec<E>;
    fn add(self, rhs: &SkeinVec<E>) -> SkeinVec<E> {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentVZ::one());
        out
    }
}

impl<E: BasisLabel> Sub<&SkeinVec<E>> for &SkeinVec<E> {
    type Output = SkeinVec<E>;
    fn sub(self, rhs: &SkeinVec<E>) -> SkeinVec<E> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-LaurentVZ::one());
        out
    }
}

impl<E: BasisLabel> Neg for &SkeinVec<E> {
    type Output = SkeinVec<E>;
    fn neg(self) -> SkeinVec<E> {
        self.map_coeffs(|c| -c)
    }
}

/// Disjoint union, extended bilinearly.
impl Mul<&SkeinVectorB> for &SkeinVectorB {
    type Output = SkeinVectorB;
    fn mul(self, rhs: &SkeinVectorB) -> SkeinVectorB {
        let mut out = SkeinVectorB::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.product(b), c * d);
            }
        }
        out
    }
}

impl<E: BasisLabel> fmt::Display for SkeinVec<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(e, c)| format!("({c}) * {e}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<E: BasisLabel> fmt::Debug for SkeinVec<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
