use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use skein_core::convert::{arrow_to_classical, classical_to_arrow};
use skein_core::diagram::random::{plant_site, random_move, random_word, MoveKind, WordShape};
use skein_core::diagram::{apply_move, Side};
use skein_core::kbsm::{derive_lens_rules, eval_lens_with, eval_torus_with_cap, lens_slide, push_coeffs, SlideSense};
use skein_core::{LaurentA, MorseWord};

use crate::error::CliError;
use crate::{CommandResult, Common, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Values are unchanged by random moves; Ω1 scales by `-A^±3`.
    KbsmMoves,
    /// Endpoint coefficients `r_n = -A^{2n+2}` and `r_-n = -A^2` of the push tables.
    PushEndpoints,
    /// The `L(p,1)` rewrite rules leave `⌊p/2⌋ + 1` basis elements.
    LensRank,
    /// Arrow to classical to arrow round trips keep the value.
    Conversions,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::KbsmMoves => "kbsm-moves",
            Suite::PushEndpoints => "push-endpoints",
            Suite::LensRank => "lens-rank",
            Suite::Conversions => "conversions",
        }
    }
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Suites to run; all of them when omitted.
    #[arg(long, value_enum)]
    suite: Vec<Suite>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Largest `n` for push-endpoints.
    #[arg(long, default_value_t = 8)]
    max_n: i64,
    /// Lens space for lens-rank and for slide moves in kbsm-moves. Without
    /// it lens-rank covers `p = 1..=8` and kbsm-moves stays in the torus.
    #[arg(long)]
    p: Option<u32>,
}

impl CheckArgs {
    fn suites(&self) -> Vec<Suite> {
        if self.suite.is_empty() {
            Suite::value_variants().to_vec()
        } else {
            self.suite.clone()
        }
    }
}

pub fn config(a: &CheckArgs, c: &Common) -> Value {
    json!({
        "suites": a.suites().iter().map(|s| s.name()).collect::<Vec<_>>(),
        "seed": a.seed,
        "trials": a.trials,
        "max_n": a.max_n,
        "p": a.p,
        "crossing_cap": c.cap(),
        "rng": "ChaCha8",
    })
}

/// Outcome of one suite. `counterexample` is set on failure.
struct SuiteReport {
    checked: usize,
    detail: String,
    counterexample: Option<Value>,
}

impl SuiteReport {
    fn pass(checked: usize, detail: String) -> Self {
        SuiteReport { checked, detail, counterexample: None }
    }

    fn fail(checked: usize, detail: String, counterexample: Value) -> Self {
        SuiteReport { checked, detail, counterexample: Some(counterexample) }
    }
}

fn kbsm_moves(a: &CheckArgs, cap: usize) -> Result<SuiteReport, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let shape = WordShape { max_crossings: 5, max_arrows: 4, max_strands: 6, body_len: 12 };
    let eval = |w: &MorseWord| eval_torus_with_cap(w, cap);
    let kink = [LaurentA::term(-1, 3), LaurentA::term(-1, -3)];
    let mut done = 0;
    let mut attempts = 0;
    while done < a.trials {
        attempts += 1;
        if attempts > 100 * a.trials.max(1) {
            return Err(CliError::Validation("kbsm-moves: could not place enough moves".into()));
        }
        let kind = MoveKind::ALL[done % MoveKind::ALL.len()];
        let w = random_word(&mut rng, shape);
        let Some(w) = plant_site(&mut rng, &w, kind) else { continue };
        let Some(m) = random_move(&mut rng, &w, kind) else { continue };
        let after = apply_move(&w, &m)?;
        let (v0, v1) = (eval(&w)?, eval(&after)?);
        let ok = if kind == MoveKind::Omega1 { kink.iter().any(|k| v1 == v0.scale(k)) } else { v0 == v1 };
        if !ok {
            let dump = json!({"word": w.render(), "move": format!("{m:?}"), "before": v0.to_string(), "after": v1.to_string()});
            return Ok(SuiteReport::fail(done, format!("{} changed the value", m.name()), dump));
        }
        done += 1;
        if let Some(p) = a.p {
            let side = if rng.gen() { Side::Left } else { Side::Right };
            let slice = rng.gen_range(0..=w.len());
            let Ok(slid) = apply_move(&w, &lens_slide(p, SlideSense::Ccw, slice, side)) else { continue };
            let (l0, l1) = (eval_lens_with(&w, p, SlideSense::Ccw, cap)?, eval_lens_with(&slid, p, SlideSense::Ccw, cap)?);
            if l0 != l1 {
                let dump = json!({"word": w.render(), "move": format!("slide p={p} at {slice} {side:?}"), "before": l0.to_string(), "after": l1.to_string()});
                return Ok(SuiteReport::fail(done, format!("slide in L({p},1) changed the value"), dump));
            }
        }
    }
    Ok(SuiteReport::pass(done, format!("{done} moves, {} kinds", MoveKind::ALL.len())))
}

fn push_endpoints(a: &CheckArgs) -> SuiteReport {
    for n in 1..=a.max_n {
        let t = push_coeffs(n);
        let (hi, lo) = (LaurentA::term(-1, 2 * n + 2), LaurentA::term(-1, 2));
        if t.r(n) != hi || t.r(-n) != lo {
            let dump = json!({"n": n, "r_n": t.r(n).to_string(), "r_-n": t.r(-n).to_string(),
                "expected_r_n": hi.to_string(), "expected_r_-n": lo.to_string()});
            return SuiteReport::fail(n as usize - 1, format!("endpoints differ at n = {n}"), dump);
        }
    }
    SuiteReport::pass(a.max_n.max(0) as usize, format!("r_n and r_-n for n = 1..={}", a.max_n))
}

fn lens_rank(a: &CheckArgs) -> Result<SuiteReport, CliError> {
    let ps: Vec<u32> = a.p.map_or_else(|| (1..=8).collect(), |p| vec![p]);
    let mut ranks = Vec::new();
    for (i, &p) in ps.iter().enumerate() {
        let rules = derive_lens_rules(p, p as usize + 2)?;
        let expected = p as usize / 2 + 1;
        if rules.rank() != expected {
            let dump = json!({"p": p, "rank": rules.rank(), "expected": expected});
            return Ok(SuiteReport::fail(i, format!("L({p},1) has rank {}", rules.rank()), dump));
        }
        ranks.push(format!("L({p},1): rank {expected}"));
    }
    Ok(SuiteReport::pass(ps.len(), ranks.join(", ")))
}

fn conversions(a: &CheckArgs) -> Result<SuiteReport, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let shape = WordShape { max_crossings: 4, max_arrows: 4, max_strands: 6, body_len: 10 };
    // Round trips add many crossings; the sweep evaluator does not enumerate states.
    let eval = |w: &MorseWord| eval_torus_with_cap(w, usize::MAX);
    for t in 0..a.trials {
        let w = random_word(&mut rng, shape);
        let back = classical_to_arrow(&arrow_to_classical(&w));
        let (v0, v1) = (eval(&w)?, eval(&back)?);
        if v0 != v1 {
            let dump = json!({"word": w.render(), "round_trip": back.render(), "before": v0.to_string(), "after": v1.to_string()});
            return Ok(SuiteReport::fail(t, "round trip changed the value".into(), dump));
        }
    }
    Ok(SuiteReport::pass(a.trials, format!("{} arrow words", a.trials)))
}

pub fn run(a: &CheckArgs, c: &Common) -> CommandResult {
    let mut results = Vec::new();
    let mut text = String::new();
    let mut failed = Vec::new();
    for suite in a.suites() {
        let r = match suite {
            Suite::KbsmMoves => kbsm_moves(a, c.cap())?,
            Suite::PushEndpoints => push_endpoints(a),
            Suite::LensRank => lens_rank(a)?,
            Suite::Conversions => conversions(a)?,
        };
        let verdict = if r.counterexample.is_none() { "PASS" } else { "FAIL" };
        text.push_str(&format!("{verdict} {}: {}\n", suite.name(), r.detail));
        if let Some(dump) = &r.counterexample {
            text.push_str(&format!("counterexample:\n{}\n", serde_json::to_string_pretty(dump).expect("json")));
            failed.push(suite.name());
        }
        results.push(json!({
            "suite": suite.name(),
            "pass": r.counterexample.is_none(),
            "checked": r.checked,
            "detail": r.detail,
            "counterexample": r.counterexample,
        }));
    }
    let result = json!({"seed": a.seed, "suites": results});
    if failed.is_empty() {
        Ok((result, text))
    } else {
        let error = CliError::Certificate(format!("failing suites: {}", failed.join(", ")));
        Err(Outcome::Failed { result, text, error })
    }
}
