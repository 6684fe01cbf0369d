//! HOMFLYPT skein module of `L(p,1)`: rewriting `B` over `B_p`.
//!
//! Sliding an oval over the 2-handle flips its orientation, changes its
//! winding by `p` and makes it enclose every other oval. An oval `t_k` out
//! of range is removed by a slide of `t_k` itself (`Ccw` sense) or of the
//! reverted oval `t̄_k` (`Cw` sense); either way the new winding is smaller.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{OnceLock, RwLock};

use serde_json::{json, Value};

use super::basis::{BElement, SkeinVectorB};
use super::reduce::{enclose, lone_oval, t_orientation};
use super::HomflyptError;
use crate::diagram::Orientation;
use crate::kbsm::SlideSense;

/// The lens space `L(p,1)` with a slide convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LensSpec {
    pub p: u32,
    pub sense: SlideSense,
}

impl LensSpec {
    pub fn new(p: u32, sense: SlideSense) -> Result<Self, HomflyptError> {
        if p == 0 {
            return Err(HomflyptError::BadLens(p));
        }
        Ok(LensSpec { p, sense })
    }

    /// Whether `t_k` lies in `B_p`, i.e. `-p/2 < k ≤ p/2`.
    pub fn in_range(&self, k: i64) -> bool {
        let p = self.p as i64;
        -p < 2 * k && 2 * k <= p
    }

    pub fn check_in_range(&self, e: &BElement) -> Result<(), HomflyptError> {
        match e.ks().iter().find(|&&k| !self.in_range(k)) {
            Some(_) => Err(HomflyptError::OutOfRange { element: e.to_string(), p: self.p }),
            None => Ok(()),
        }
    }

    /// Oval `(o, w)` after one slide.
    pub fn slide(&self, o: Orientation, w: i64) -> (Orientation, i64) {
        let s = match o {
            Orientation::Ccw => 1,
            Orientation::Cw => -1,
        };
        let p = self.p as i64;
        match self.sense {
            SlideSense::Ccw => (o.flip(), w - p * s),
            SlideSense::Cw => (o.flip(), w + p * s),
        }
    }

    /// The oval with winding `k` whose slide lowers the winding: `t_k` for
    /// `Ccw`, `t̄_k` for `Cw`.
    fn pivot_orientation(&self, k: i64) -> Orientation {
        match self.sense {
            SlideSense::Ccw => t_orientation(k),
            SlideSense::Cw => t_orientation(k).flip(),
        }
    }
}

/// Both sides of the slide relation for the oval `(o, k)` next to the
/// ovals `rest`: the diagram before the slide and after it, reduced in `B`.
fn slide_relation(spec: LensSpec, o: Orientation, k: i64, rest: &BElement) -> Result<(SkeinVectorB, SkeinVectorB), HomflyptError> {
    let before = &lone_oval(o, k)? * &SkeinVectorB::basis(rest.clone());
    let (o2, w2) = spec.slide(o, k);
    Ok((before, enclose(o2, w2, rest.ks())?))
}

fn without(e: &BElement, k: i64) -> BElement {
    let mut ks = e.ks().to_vec();
    let at = ks.iter().position(|&x| x == k).expect("index present");
    ks.remove(at);
    BElement::from_nonzero(ks)
}

type Memo = RwLock<HashMap<(LensSpec, BElement), SkeinVectorB>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn reduce_monomial(e: &BElement, spec: LensSpec, active: &mut HashSet<BElement>) -> Result<SkeinVectorB, HomflyptError> {
    // The out-of-range oval with the most arrows goes first.
    let Some(&k) = e.ks().iter().filter(|&&k| !spec.in_range(k)).max_by_key(|k| (k.abs(), k.signum())) else {
        return Ok(SkeinVectorB::basis(e.clone()));
    };
    let key = (spec, e.clone());
    if let Some(v) = memo().read().expect("lens memo poisoned").get(&key) {
        return Ok(v.clone());
    }
    if !active.insert(e.clone()) {
        return Err(HomflyptError::RewriteCycle { element: e.to_string(), p: spec.p });
    }
    let rest = without(e, k);
    let (before, after) = slide_relation(spec, spec.pivot_orientation(k), k, &rest)?;
    let pivot = before.coeff(e);
    let inv = match pivot.is_unit().is_unit() {
        true => pivot.inverse().expect("unit"),
        false => return Err(HomflyptError::NonUnitPivot { element: e.to_string(), p: spec.p, pivot: pivot.to_string() }),
    };
    // e = pivot⁻¹·(after − (before − pivot·e))
    let mut rhs = after;
    for (m, c) in before.terms().filter(|(m, _)| *m != e) {
        rhs.add_term(m.clone(), -c.clone());
    }
    let mut out = SkeinVectorB::zero();
    for (m, c) in rhs.terms() {
        out.add_scaled(&reduce_monomial(m, spec, active)?, c);
    }
    let out = out.scale(&inv);
    active.remove(e);
    memo().write().expect("lens memo poisoned").insert(key, out.clone());
    Ok(out)
}

/// Rewrites a vector over `B` as a vector over `B_p`.
pub fn lens_reduce(v: &SkeinVectorB, spec: LensSpec) -> Result<SkeinVectorB, HomflyptError> {
    let mut out = SkeinVectorB::zero();
    for (m, c) in v.terms() {
        out.add_scaled(&reduce_monomial(m, spec, &mut HashSet::new())?, c);
    }
    Ok(out)
}

/// Rewrite table for the monomials of `B` outside `B_p` with at most
/// `bound` arrows, certified against every slide of every oval of every
/// monomial in the truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HLensRules {
    pub spec: LensSpec,
    pub bound: u64,
    pub rules: BTreeMap<BElement, SkeinVectorB>,
    /// Number of slide relations checked.
    pub relations: usize,
}

impl HLensRules {
    pub fn to_json(&self) -> Value {
        let rules: serde_json::Map<String, Value> =
            self.rules.iter().map(|(e, v)| (e.to_string(), v.to_json())).collect();
        json!({
            "p": self.spec.p,
            "sense": self.spec.sense.name(),
            "bound": self.bound,
            "relations_checked": self.relations,
            "rules": rules,
        })
    }
}

/// Lens rules for `L(p,1)` with the default slide sense.
pub fn homflypt_lens_rules(p: u32, bound: u64) -> Result<HLensRules, HomflyptError> {
    homflypt_lens_rules_with(LensSpec::new(p, SlideSense::Ccw)?, bound)
}

pub fn homflypt_lens_rules_with(spec: LensSpec, bound: u64) -> Result<HLensRules, HomflyptError> {
    let mut rules = BTreeMap::new();
    let mut relations = 0;
    for e in super::change::b_truncation(bound, None) {
        let reduced = lens_reduce(&SkeinVectorB::basis(e.clone()), spec)?;
        if spec.check_in_range(&e).is_err() {
            rules.insert(e.clone(), reduced);
        }
        let mut distinct = e.ks().to_vec();
        distinct.dedup();
        for k in distinct {
            let rest = without(&e, k);
            for o in [Orientation::Ccw, Orientation::Cw] {
                let (before, after) = slide_relation(spec, o, k, &rest)?;
                let diff = &lens_reduce(&before, spec)? - &lens_reduce(&after, spec)?;
                if !diff.is_zero() {
                    return Err(HomflyptError::Inconsistent { p: spec.p, relation: format!("slide of ({o:?}, {k}) beside {rest}") });
                }
                relations += 1;
            }
        }
    }
    Ok(HLensRules { spec, bound, rules, relations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slide_lowers_out_of_range_windings() {
        for sense in [SlideSense::Ccw, SlideSense::Cw] {
            for p in 1..=6u32 {
                let spec = LensSpec::new(p, sense).unwrap();
                for k in (-12i64..=12).filter(|&k| k != 0 && !spec.in_range(k)) {
                    let (_, w) = spec.slide(spec.pivot_orientation(k), k);
                    assert!(w.abs() <= k.abs(), "p={p} k={k} {sense:?}");
                }
            }
        }
    }
}
