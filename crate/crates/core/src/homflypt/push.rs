//! Pushing an oriented oval through the strand that encloses it, and
//! reverting ovals whose arrows run against their orientation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_traits::One;

use super::basis::{BElement, SkeinVectorB};
use super::hecke::{neg, pos, Hecke, Letter};
use super::HomflyptError;
use crate::LaurentVZ;

/// Relative orientation of a pushed oval and the strand it crosses:
/// `Agree` when both turn the same way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PushConfig {
    Agree,
    Disagree,
}

impl PushConfig {
    pub fn name(self) -> &'static str {
        match self {
            PushConfig::Agree => "agree",
            PushConfig::Disagree => "disagree",
        }
    }
}

impl fmt::Display for PushConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficients `A_i`: an oval with `n` arrows along its orientation,
/// pushed out through the strand, equals `Σ A_i` times the oval with
/// `n - i` arrows outside and the strand carrying `i` more arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPushTable {
    pub n: i64,
    pub config: PushConfig,
    pub a: BTreeMap<i64, LaurentVZ>,
}

impl HPushTable {
    pub fn coeff(&self, i: i64) -> LaurentVZ {
        self.a.get(&i).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let a: serde_json::Map<String, serde_json::Value> =
            self.a.iter().map(|(i, c)| (i.to_string(), c.to_json())).collect();
        serde_json::json!({ "n": self.n, "config": self.config.name(), "A": a })
    }
}

/// Closures are taken with `g² = v·z·g + v²`, the image of the positive
/// crossing under `v⁻¹L₊ − vL₋ = zL₀`.
fn engine() -> &'static Mutex<Hecke> {
    static ENGINE: OnceLock<Mutex<Hecke>> = OnceLock::new();
    ENGINE.get_or_init(|| Mutex::new(Hecke::new(LaurentVZ::term(1, 1, 1), LaurentVZ::v_pow(2))))
}

fn closure(strands: usize, word: &[Letter]) -> SkeinVectorB {
    engine().lock().expect("hecke engine poisoned").closure(strands, word)
}

/// `t̄_n` for `n > 0`: the closure of `σ₁⁻¹⋯σ_{n-1}⁻¹`.
fn tbar_positive(n: usize) -> SkeinVectorB {
    closure(n, &(0..n - 1).map(neg).collect::<Vec<_>>())
}

/// Expansion of `t̄_n` in the basis `B`. Memoized.
pub fn revert_tbar(n: i64) -> Result<Arc<SkeinVectorB>, HomflyptError> {
    static MEMO: OnceLock<RwLock<HashMap<i64, Arc<SkeinVectorB>>>> = OnceLock::new();
    if n == 0 {
        return Err(HomflyptError::ZeroIndex);
    }
    let memo = MEMO.get_or_init(Default::default);
    if let Some(v) = memo.read().expect("revert memo poisoned").get(&n) {
        return Ok(v.clone());
    }
    let v = if n > 0 { tbar_positive(n as usize) } else { revert_tbar(-n)?.reversed() };
    Ok(memo.write().expect("revert memo poisoned").entry(n).or_insert(Arc::new(v)).clone())
}

/// Child cycle on strands `0..n`, the loop of strand `n` around it, and the
/// parent cycle on `n..n+j`, with the loop and parent mirrored for `Disagree`.
fn push_word(n: usize, j: usize, config: PushConfig) -> Vec<Letter> {
    let outer = match config {
        PushConfig::Agree => pos,
        PushConfig::Disagree => neg,
    };
    let mut word: Vec<Letter> = (0..n.saturating_sub(1)).map(pos).collect();
    word.extend((0..n).rev().map(outer));
    word.extend((0..n).map(outer));
    word.extend((n..n + j - 1).map(outer));
    word
}

/// Splits the closure of the nested pair `(child n, parent j)` into terms
/// `t_λ·(parent with j + i)`. The parent part of a monomial is its largest
/// index, which exceeds every index the child can leave behind when `j > n`.
fn split(n: usize, j: usize, config: PushConfig) -> Result<BTreeMap<(i64, BElement), LaurentVZ>, HomflyptError> {
    let not_local = || HomflyptError::NotLocal { n: n as i64, config };
    let mut residual = closure(n + j, &push_word(n, j, config));
    let mut out = BTreeMap::new();
    while let Some((mono, c)) = residual.terms().max_by_key(|(e, _)| e.ks().last().copied()) {
        let (mono, c) = (mono.clone(), c.clone());
        let (&m, rest) = mono.ks().split_last().ok_or_else(not_local)?;
        let i = m - j as i64;
        if !(0..=n as i64).contains(&i) {
            return Err(not_local());
        }
        let child = BElement::new(rest.to_vec())?;
        let parent = match config {
            PushConfig::Agree => SkeinVectorB::basis(BElement::single(m)?),
            PushConfig::Disagree => (*revert_tbar(m)?).clone(),
        };
        let lead = parent.coeff(&BElement::single(m)?);
        let coeff = &c * &lead.inverse().ok_or_else(not_local)?;
        let term = &SkeinVectorB::basis(child.clone()) * &parent;
        residual.add_scaled(&term, &-coeff.clone());
        out.insert((i, child), coeff);
    }
    Ok(out)
}

fn compute(n: i64, config: PushConfig) -> Result<HPushTable, HomflyptError> {
    if n < 0 {
        // Reversing every orientation keeps crossing signs.
        let t = compute(-n, config)?;
        return Ok(HPushTable { n, config, a: t.a });
    }
    if n == 0 {
        return Ok(HPushTable { n, config, a: BTreeMap::from([(0, LaurentVZ::one())]) });
    }
    let nu = n as usize;
    let first = split(nu, nu + 1, config)?;
    let second = split(nu, nu + 2, config)?;
    if first != second {
        return Err(HomflyptError::NotLocal { n, config });
    }
    let mut a = BTreeMap::new();
    for ((i, child), c) in first {
        let expected = if i == n { BElement::empty() } else { BElement::single(n - i)? };
        if child != expected {
            return Err(HomflyptError::NotLocal { n, config });
        }
        a.insert(i, c);
    }
    Ok(HPushTable { n, config, a })
}

/// Push table for an oval with `n` arrows along its orientation. Memoized.
///
/// Derived from closures of braids in which the oval is nested in a parent
/// with `n + 1` and with `n + 2` arrows; the two must give the same table.
pub fn homflypt_push_coeffs(n: i64, config: PushConfig) -> Result<Arc<HPushTable>, HomflyptError> {
    static MEMO: OnceLock<RwLock<HashMap<(i64, PushConfig), Arc<HPushTable>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(t) = memo.read().expect("push memo poisoned").get(&(n, config)) {
        return Ok(t.clone());
    }
    let t = Arc::new(compute(n, config)?);
    Ok(memo.write().expect("push memo poisoned").entry((n, config)).or_insert(t).clone())
}
