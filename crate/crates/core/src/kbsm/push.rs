//! Pushing an oval into the arc that encloses it.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use crate::LaurentA;

/// Coefficients `r_i` of the push relation: an oval with `n` arrows lying
/// next to an arc equals `Σ r_i` times the arc carrying `i` extra arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushTable {
    pub n: i64,
    pub r: BTreeMap<i64, LaurentA>,
}

impl PushTable {
    /// `r_i`, zero outside the stored support.
    pub fn r(&self, i: i64) -> LaurentA {
        self.r.get(&i).cloned().unwrap_or_default()
    }
}

/// Local picture during the push: an oval with `oval` arrows beside the arc,
/// or the arc alone once the oval is gone. `arc` counts arrows gained by the
/// arc, in the sense of the enclosing oval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Local {
    Beside { oval: i64, arc: i64 },
    Arc(i64),
}

/// One push step for an oval with `n > 0` arrows.
///
/// An Ω2 finger from the arc runs around one arrow of the oval, and the
/// arrow is pushed through it by Ω5. Resolving the switched crossing gives
/// three pictures:
/// - the oval keeps `n - 1` arrows and the arc gains one, weight `A^2`;
/// - the oval merges into the arc; its `n - 1` arrows run against the arc
///   and the pushed arrow with it, so Ω4 leaves `n - 2` arrows against it;
/// - the other smoothing leaves a kink on the merged arc, which carries all
///   `n` arrows against it; with the Ω1 factor the weight is `-A^2`.
fn step(n: i64, arc: i64) -> [(LaurentA, Local); 3] {
    [
        (LaurentA::a_pow(2), Local::Beside { oval: n - 1, arc: arc + 1 }),
        (LaurentA::a_pow(0), Local::Arc(arc - (n - 2))),
        (LaurentA::term(-1, 2), Local::Arc(arc - n)),
    ]
}

fn expand(local: Local, weight: &LaurentA, out: &mut BTreeMap<i64, LaurentA>) {
    match local {
        Local::Arc(i) => {
            let slot = out.entry(i).or_default();
            *slot += weight;
        }
        // A trivial circle beside the arc.
        Local::Beside { oval: 0, arc } => expand(Local::Arc(arc), &(weight * &LaurentA::delta()), out),
        Local::Beside { oval, arc } => {
            for (w, next) in step(oval, arc) {
                expand(next, &(weight * &w), out);
            }
        }
    }
}

fn compute(n: i64) -> PushTable {
    let mut r = BTreeMap::new();
    if n >= 0 {
        expand(Local::Beside { oval: n, arc: 0 }, &LaurentA::a_pow(0), &mut r);
    } else {
        // Reversing every arrow mirrors the picture: A -> A^-1, i -> -i.
        for (i, c) in compute(-n).r {
            r.insert(-i, c.map_exponents(|e| -e));
        }
    }
    r.retain(|_, c| !c.is_zero());
    PushTable { n, r }
}

fn memo() -> &'static RwLock<HashMap<i64, Arc<PushTable>>> {
    static MEMO: OnceLock<RwLock<HashMap<i64, Arc<PushTable>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Push table for an oval with `n` net counterclockwise arrows. Memoized.
pub fn push_coeffs(n: i64) -> Arc<PushTable> {
    if let Some(t) = memo().read().expect("push memo poisoned").get(&n) {
        return t.clone();
    }
    let t = Arc::new(compute(n));
    memo().write().expect("push memo poisoned").entry(n).or_insert(t).clone()
}
