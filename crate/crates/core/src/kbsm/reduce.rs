use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use super::{push_coeffs, KbsmError, SkeinVectorX};
use super::sweep::sweep_bracket;
use crate::diagram::{crossing_cap_from_env, Tree};
use crate::{ArrowForest, DiagramError, LaurentA, MorseWord};

fn p_memo() -> &'static RwLock<HashMap<i64, Arc<SkeinVectorX>>> {
    static MEMO: OnceLock<RwLock<HashMap<i64, Arc<SkeinVectorX>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The single oval `P_k` with `k` arrows, as a polynomial in `x`. Memoized.
pub fn p_poly(k: i64) -> Arc<SkeinVectorX> {
    if let Some(p) = p_memo().read().expect("P memo poisoned").get(&k) {
        return p.clone();
    }
    let x = SkeinVectorX::var();
    let value = match k {
        0 => SkeinVectorX::constant(LaurentA::delta()),
        1 => x,
        -1 => x.scale(&LaurentA::a_pow(-6)),
        // Pushing one arrow off the oval: P_k = -A^-2 P_{k-1} x - A^2 P_{k-2}.
        k if k > 1 => {
            &(&*p_poly(k - 1) * &x).scale(&LaurentA::term(-1, -2)) - &p_poly(k - 2).scale(&LaurentA::a_pow(2))
        }
        // P_k = -A^2 P_{k+1} P_{-1} - A^-2 P_{k+2}.
        k => {
            &(&*p_poly(k + 1) * &p_poly(-1)).scale(&LaurentA::term(-1, 2))
                - &p_poly(k + 2).scale(&LaurentA::a_pow(-2))
        }
    };
    let value = Arc::new(value);
    p_memo().write().expect("P memo poisoned").entry(k).or_insert(value).clone()
}

/// A tree collapsed to a combination of single ovals: arrows ↦ coefficient.
fn collapse(t: &Tree<i64>) -> BTreeMap<i64, LaurentA> {
    let mut combo = BTreeMap::from([(t.label, LaurentA::one())]);
    for child in &t.children {
        let inner = collapse(child);
        let mut next: BTreeMap<i64, LaurentA> = BTreeMap::new();
        for (leaf, d) in &inner {
            let table = push_coeffs(*leaf);
            for (a, c) in &combo {
                let cd = c * d;
                for (i, r) in &table.r {
                    *next.entry(a + i).or_default() += &cd * r;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        combo = next;
    }
    combo
}

/// Class of a crossing-free arrow configuration in `{x^n}`.
///
/// Innermost ovals are absorbed into their parents with [`push_coeffs`]
/// until the forest is flat; then each oval becomes [`p_poly`] and the
/// roots are multiplied.
pub fn reduce_forest(f: &ArrowForest) -> SkeinVectorX {
    let mut out = SkeinVectorX::one();
    for root in &f.roots {
        let mut v = SkeinVectorX::zero();
        for (k, c) in collapse(root) {
            v = &v + &p_poly(k).scale(&c);
        }
        out = &out * &v;
    }
    out
}

/// Class of an arrow word in the solid torus, using the crossing cap from
/// the environment.
pub fn eval_torus(w: &MorseWord) -> Result<SkeinVectorX, KbsmError> {
    eval_torus_with_cap(w, crossing_cap_from_env())
}

pub fn eval_torus_with_cap(w: &MorseWord, cap: usize) -> Result<SkeinVectorX, KbsmError> {
    let w = if w.is_oriented() { w.unoriented() } else { w.clone() };
    let c = w.crossing_count();
    if c > cap {
        return Err(DiagramError::CrossingCap { crossings: c, cap }.into());
    }
    Ok(sweep_bracket(&w))
}
