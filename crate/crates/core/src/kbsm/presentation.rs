//! Presentation data for `RP^3 # RP^3` and the prism manifolds `M_p`.

use serde_json::{json, Value};

use super::PolyT;
use crate::LaurentA;

/// `Q_0 = 1`, `Q_1 = t`, `Q_n = t·Q_{n-1} - Q_{n-2}`.
pub fn qn_poly(n: usize) -> PolyT {
    let (mut prev, mut cur) = (PolyT::one(), PolyT::var());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur.shift(1) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Generator of the relation submodule `S ⊂ R[t]` with index `n ≥ 2`:
///
/// - even `n`: `(A^{n+1}+A^{n-1})(Q_n - 1) - 2(A+A^-1) Σ_{k=1}^{n/2} A^{n+2-4k}`
/// - odd `n`: `(A^{n+1}+A^{n-1})(Q_n - t) - 2t Σ_{k=1}^{(n-1)/2} A^{n+1-4k}`
///
/// Returns `None` for `n < 2`.
pub fn rp3rp3_relation(n: usize) -> Option<PolyT> {
    if n < 2 {
        return None;
    }
    let e = n as i64;
    let front = LaurentA::a_pow(e + 1) + LaurentA::a_pow(e - 1);
    let two = LaurentA::constant(2);
    if n % 2 == 0 {
        let sum: LaurentA = (1..=e / 2).map(|k| LaurentA::a_pow(e + 2 - 4 * k)).sum();
        let tail = &two * &(LaurentA::a_pow(1) + LaurentA::a_pow(-1)) * sum;
        Some(&(&qn_poly(n) - &PolyT::one()).scale(&front) - &PolyT::constant(tail))
    } else {
        let sum: LaurentA = (1..=(e - 1) / 2).map(|k| LaurentA::a_pow(e + 1 - 4 * k)).sum();
        Some(&(&qn_poly(n) - &PolyT::var()).scale(&front) - &PolyT::term(1, &two * &sum))
    }
}

/// `S_{2,∞}(RP^3 # RP^3) = R·E ⊕ R·E' ⊕ R[t]/S`, with `S` truncated at `n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rp3Presentation {
    pub generators: Vec<&'static str>,
    /// `(n, relation)` for `2 ≤ n ≤ n_max`.
    pub relations: Vec<(usize, PolyT)>,
}

pub fn rp3rp3_presentation(n_max: usize) -> Rp3Presentation {
    Rp3Presentation {
        generators: vec!["E", "E'", "R[t]"],
        relations: (2..=n_max).filter_map(|n| rp3rp3_relation(n).map(|r| (n, r))).collect(),
    }
}

impl Rp3Presentation {
    pub fn to_json(&self) -> Value {
        let rels: Vec<Value> =
            self.relations.iter().map(|(n, r)| json!({"n": n, "relation": r.to_json()})).collect();
        json!({"generators": self.generators, "relations": rels})
    }
}

/// Generators of the prism manifold module `S_{2,∞}(M_p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrismBasis {
    pub p: u32,
    pub labels: Vec<String>,
    /// `3 + ⌊p/2⌋` for odd `p`, `4 + p/2` for even `p`.
    pub stated_count: usize,
    /// Set when the listed generators and the stated count disagree.
    pub discrepancy: Option<String>,
}

/// Generator list `∅, x, x^2, ..., x^{1+⌊p/2⌋}, E` and, for even `p`, `E'`.
///
/// The list always names `x` and `x^2`, so for `p = 1` it has four entries
/// while the count formula gives three; the mismatch is reported in
/// [`PrismBasis::discrepancy`].
pub fn prism_basis(p: u32) -> PrismBasis {
    let top = (1 + p / 2).max(2) as usize;
    let mut labels = vec!["∅".to_string(), "x".to_string()];
    labels.extend((2..=top).map(|k| format!("x^{k}")));
    labels.push("E".into());
    if p % 2 == 0 {
        labels.push("E'".into());
    }
    let half = (p / 2) as usize;
    let stated_count = if p % 2 == 0 { 4 + half } else { 3 + half };
    let discrepancy = (labels.len() != stated_count).then(|| {
        format!(
            "p={p}: the generator list has {} entries but the count formula gives {stated_count}",
            labels.len()
        )
    });
    PrismBasis { p, labels, stated_count, discrepancy }
}

impl PrismBasis {
    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "labels": self.labels,
            "stated_count": self.stated_count,
            "discrepancy": self.discrepancy,
        })
    }
}

/// `t = -A^-3 x` as a class over `{x^n}`.
pub fn t_in_x() -> super::SkeinVectorX {
    super::SkeinVectorX::term(1, LaurentA::term(-1, -3))
}
