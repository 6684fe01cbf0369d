//! The quotient by the slide move of `L(p,1)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use serde_json::{json, Value};

use super::{eval_torus_with_cap, KbsmError, SkeinVectorX};
use crate::algebra::UnitFlag;
use crate::diagram::{apply_move, crossing_cap_from_env, Dir, Event, MoveSpec, Side};
use crate::{LaurentA, MorseWord};

/// Direction of the `p` arrows a slide adds, read on the oval that the
/// slid arc joins. `Ccw` is `L(p,1)`; `Cw` is the mirror convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum SlideSense {
    #[default]
    Ccw,
    Cw,
}

impl SlideSense {
    pub fn name(self) -> &'static str {
        match self {
            SlideSense::Ccw => "ccw",
            SlideSense::Cw => "cw",
        }
    }
}

/// The slide move of `L(p,1)` on the outermost strand at `slice` on `side`.
pub fn lens_slide(p: u32, sense: SlideSense, slice: usize, side: Side) -> MoveSpec {
    // The added arrows sit on the right strand of the new oval for a left
    // slide and on its left strand for a right slide.
    let dir = match (side, sense) {
        (Side::Left, SlideSense::Ccw) | (Side::Right, SlideSense::Cw) => Dir::Down,
        _ => Dir::Up,
    };
    MoveSpec::Slide { p, dir, slice, side }
}

/// The relation used to eliminate `x^degree`: sliding the oval `P_k` in the
/// diagram `P_k ∪ x^m`; `lead` is the unit leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pivot {
    pub degree: usize,
    pub k: i64,
    pub m: usize,
    pub lead: LaurentA,
}

/// Rewrite rules `x^n ↦ (vector over x^0..x^{⌊p/2⌋})` for `⌊p/2⌋ < n ≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LensRules {
    pub p: u32,
    pub sense: SlideSense,
    pub n_max: usize,
    pub rules: BTreeMap<usize, SkeinVectorX>,
    pub pivots: Vec<Pivot>,
    /// Further slide relations checked to vanish under the rules.
    pub checked_relations: usize,
}

impl LensRules {
    /// Number of surviving basis elements.
    pub fn rank(&self) -> usize {
        self.p as usize / 2 + 1
    }

    /// Rewrites `v` over `x^0..x^{⌊p/2⌋}`; `None` if `v` has terms above `n_max`.
    pub fn reduce(&self, v: &SkeinVectorX) -> Option<SkeinVectorX> {
        let top = self.p as usize / 2;
        let mut out = SkeinVectorX::zero();
        for (n, c) in v.terms() {
            if n <= top {
                out.add_term(n, c.clone());
            } else {
                out = &out + &self.rules.get(&n)?.scale(c);
            }
        }
        Some(out)
    }

    pub fn to_json(&self) -> Value {
        let rules: serde_json::Map<String, Value> =
            self.rules.iter().map(|(n, r)| (n.to_string(), r.to_json())).collect();
        let pivots: Vec<Value> = self
            .pivots
            .iter()
            .map(|q| json!({"degree": q.degree, "k": q.k, "m": q.m, "lead": q.lead.to_json()}))
            .collect();
        json!({
            "p": self.p,
            "sense": self.sense.name(),
            "n_max": self.n_max,
            "rank": self.rank(),
            "rules": rules,
            "pivots": pivots,
            "checked_relations": self.checked_relations,
        })
    }
}

/// `P_k ∪ x^m`, with `P_k` leftmost.
fn relation_diagram(k: i64, m: usize) -> MorseWord {
    let dir = if k > 0 { Dir::Up } else { Dir::Down };
    let mut events = vec![Event::Cup { pos: 1, sense: None }];
    events.extend((0..k.unsigned_abs()).map(|_| Event::Arrow { pos: 1, dir }));
    events.push(Event::Cap { pos: 1 });
    for _ in 0..m {
        events.push(Event::Cup { pos: 1, sense: None });
        events.push(Event::Arrow { pos: 1, dir: Dir::Up });
        events.push(Event::Cap { pos: 1 });
    }
    MorseWord::new(events).expect("relation diagram is closed")
}

/// `eval(D) - eval(slide(D))` for `D = P_k ∪ x^m`, sliding `P_k`.
fn relation(p: u32, sense: SlideSense, k: i64, m: usize) -> Result<SkeinVectorX, KbsmError> {
    let d = relation_diagram(k, m);
    let slid = apply_move(&d, &lens_slide(p, sense, 1, Side::Left))?;
    let cap = crossing_cap_from_env();
    Ok(&eval_torus_with_cap(&d, cap)? - &eval_torus_with_cap(&slid, cap)?)
}

/// Derives the rules by sliding ovals `P_k` beside `m` parallel cores and
/// solving the triangular system from low degree up. Each degree above
/// `⌊p/2⌋` must be the top degree of some relation with a unit leading
/// coefficient. Every relation from `|k| <= p + 1`, `m <= 2` within reach
/// of the rules must then reduce to zero.
pub fn derive_lens_rules_with(p: u32, n_max: usize, sense: SlideSense) -> Result<LensRules, KbsmError> {
    if p == 0 {
        return Err(KbsmError::BadLens { p });
    }
    let top = p as usize / 2;
    let n_max = n_max.max(top);
    let reach = p as i64 + 1;
    let mut rules: BTreeMap<usize, SkeinVectorX> = BTreeMap::new();
    let mut pivots = Vec::new();
    for degree in top + 1..=n_max {
        let mut found = None;
        'search: for m in 0..=degree {
            let mut ks: Vec<i64> = (-reach..=reach).collect();
            ks.sort_by_key(|k| (k.abs(), *k < 0));
            for k in ks {
                let rel = relation(p, sense, k, m)?;
                if rel.degree() != Some(degree) {
                    continue;
                }
                let lead = rel.leading_coeff().expect("nonzero").clone();
                if let UnitFlag::Unit { .. } = lead.is_unit() {
                    found = Some((k, m, lead, rel));
                    break 'search;
                }
            }
        }
        let (k, m, lead, rel) = found.ok_or(KbsmError::NonUnitPivot { p, degree })?;
        let inv = lead.inverse().expect("unit");
        // x^degree = x^degree - rel / lead, which has lower degree.
        let mut lower = SkeinVectorX::term(degree, LaurentA::a_pow(0));
        lower = &lower - &rel.scale(&inv);
        let partial = LensRules {
            p,
            sense,
            n_max: degree - 1,
            rules: rules.clone(),
            pivots: Vec::new(),
            checked_relations: 0,
        };
        let rule = partial.reduce(&lower).expect("lower terms have rules");
        rules.insert(degree, rule);
        pivots.push(Pivot { degree, k, m, lead });
    }
    let mut out = LensRules { p, sense, n_max, rules, pivots, checked_relations: 0 };
    for m in 0..=n_max.min(2) {
        for k in -reach..=reach {
            match out.reduce(&relation(p, sense, k, m)?) {
                Some(r) if r.is_zero() => out.checked_relations += 1,
                Some(_) => return Err(KbsmError::Inconsistent { p }),
                None => {}
            }
        }
    }
    Ok(out)
}

pub fn derive_lens_rules(p: u32, n_max: usize) -> Result<LensRules, KbsmError> {
    derive_lens_rules_with(p, n_max, SlideSense::Ccw)
}

type RulesMemo = RwLock<HashMap<(u32, SlideSense), Arc<LensRules>>>;

fn memo() -> &'static RulesMemo {
    static MEMO: OnceLock<RulesMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Memoized rules reaching at least `n_max`.
pub fn lens_rules(p: u32, n_max: usize, sense: SlideSense) -> Result<Arc<LensRules>, KbsmError> {
    if let Some(r) = memo().read().expect("lens memo poisoned").get(&(p, sense)) {
        if r.n_max >= n_max {
            return Ok(r.clone());
        }
    }
    let r = Arc::new(derive_lens_rules_with(p, n_max, sense)?);
    let mut m = memo().write().expect("lens memo poisoned");
    let slot = m.entry((p, sense)).or_insert_with(|| r.clone());
    if slot.n_max < r.n_max {
        *slot = r.clone();
    }
    Ok(slot.clone())
}

/// Class of an arrow word in `L(p,1)`, over `x^0..x^{⌊p/2⌋}`.
pub fn eval_lens(w: &MorseWord, p: u32) -> Result<SkeinVectorX, KbsmError> {
    eval_lens_with(w, p, SlideSense::Ccw, crossing_cap_from_env())
}

pub fn eval_lens_with(w: &MorseWord, p: u32, sense: SlideSense, cap: usize) -> Result<SkeinVectorX, KbsmError> {
    let v = eval_torus_with_cap(w, cap)?;
    let rules = lens_rules(p, v.degree().unwrap_or(0), sense)?;
    Ok(rules.reduce(&v).expect("rules reach the top degree"))
}
