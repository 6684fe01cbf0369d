//! Normal form of crossingless oriented diagrams in the basis `B`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::basis::{BElement, SkeinVectorB};
use super::push::{homflypt_push_coeffs, revert_tbar, PushConfig};
use super::HomflyptError;
use crate::diagram::{to_oriented_forest, Orientation, OrientedLabel, Tree};
use crate::{LaurentVZ, MorseWord, OrientedForest};

/// Winding of an oval along its own orientation.
pub(crate) fn winding(l: &OrientedLabel) -> i64 {
    match l.orientation {
        Orientation::Ccw => l.arrows,
        Orientation::Cw => -l.arrows,
    }
}

/// Orientation of the oval `t_k`.
pub(crate) fn t_orientation(k: i64) -> Orientation {
    if k > 0 {
        Orientation::Ccw
    } else {
        Orientation::Cw
    }
}

/// Class of one oval with nothing inside it.
pub(crate) fn lone_oval(o: Orientation, w: i64) -> Result<SkeinVectorB, HomflyptError> {
    if w == 0 {
        return Ok(SkeinVectorB::term(BElement::empty(), LaurentVZ::trivial_circle()));
    }
    if t_orientation(w) == o {
        Ok(SkeinVectorB::basis(BElement::single(w)?))
    } else {
        Ok((*revert_tbar(w)?).clone())
    }
}

type FlatKey = (Orientation, i64, Vec<i64>);

fn flat_memo() -> &'static RwLock<HashMap<FlatKey, SkeinVectorB>> {
    static MEMO: OnceLock<RwLock<HashMap<FlatKey, SkeinVectorB>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// An oval `(o, w)` around side-by-side ovals `t_k`, `k ∈ inside`, with
/// every inner oval pushed out through it.
pub(crate) fn enclose(o: Orientation, w: i64, inside: &[i64]) -> Result<SkeinVectorB, HomflyptError> {
    let Some((&k, rest)) = inside.split_last() else {
        return lone_oval(o, w);
    };
    let key = (o, w, inside.to_vec());
    if let Some(v) = flat_memo().read().expect("reduce memo poisoned").get(&key) {
        return Ok(v.clone());
    }
    let config = if t_orientation(k) == o { PushConfig::Agree } else { PushConfig::Disagree };
    let table = homflypt_push_coeffs(k, config)?;
    let sign = k.signum();
    let mut out = SkeinVectorB::zero();
    for (&i, a) in &table.a {
        let left = k - sign * i;
        let mut term = enclose(o, w + sign * i, rest)?;
        if left != 0 {
            term = &term * &SkeinVectorB::basis(BElement::single(left)?);
        }
        out.add_scaled(&term, a);
    }
    flat_memo().write().expect("reduce memo poisoned").insert(key, out.clone());
    Ok(out)
}

fn collapse(t: &Tree<OrientedLabel>) -> Result<SkeinVectorB, HomflyptError> {
    let mut inside = SkeinVectorB::one();
    for c in &t.children {
        inside = &inside * &collapse(c)?;
    }
    let (o, w) = (t.label.orientation, winding(&t.label));
    let mut out = SkeinVectorB::zero();
    for (m, c) in inside.terms() {
        out.add_scaled(&enclose(o, w, m.ks())?, c);
    }
    Ok(out)
}

/// Class of a crossingless oriented diagram in the basis `B`.
///
/// Innermost ovals are pushed out through their parents, ovals whose
/// arrows run against their orientation are reverted, and empty ovals
/// become the trivial-circle factor.
pub fn reduce_oriented_forest(f: &OrientedForest) -> Result<SkeinVectorB, HomflyptError> {
    let mut out = SkeinVectorB::one();
    for r in &f.roots {
        out = &out * &collapse(r)?;
    }
    Ok(out)
}

/// Class of a crossingless oriented word in the basis `B`.
pub fn eval_oriented(w: &MorseWord) -> Result<SkeinVectorB, HomflyptError> {
    reduce_oriented_forest(&to_oriented_forest(w)?)
}

/// Side-by-side ovals realising a basis element.
pub fn b_forest(e: &BElement) -> OrientedForest {
    OrientedForest::flat(e.ks().iter().map(|&k| t_label(k)))
}

/// Label of the oval `t_k`.
pub fn t_label(k: i64) -> OrientedLabel {
    OrientedLabel { arrows: k.abs(), orientation: t_orientation(k) }
}
