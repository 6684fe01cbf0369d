//! Acceptance run: one PASS or FAIL line per criterion. All comparisons are
//! exact. Failing criteria are reported, not hidden; the process exits
//! nonzero when `SKEIN_ACCEPTANCE_STRICT` is set and any criterion fails.

mod common;

use std::cmp::Ordering;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skein_core::convert::{arrow_to_classical, classical_to_arrow, classical_to_mixed, mixed_to_classical};
use skein_core::diagram::random::{plant_site, random_move, random_word, MoveKind, WordShape};
use skein_core::diagram::{apply_move, Orientation, OrientedLabel, Side};
use skein_core::homflypt::{
    homflypt_basis_matrix, homflypt_push_coeffs, order_compare, reduce_oriented_forest, revert_tbar, BElement,
    LensSpec, PushConfig, SkeinVectorB,
};
use skein_core::kbsm::{
    basis_matrix, derive_lens_rules_with, eval_lens_with, eval_torus_with_cap, lens_slide, prism_basis, push_coeffs,
    qn_poly, rp3rp3_relation, BasisId, PolyT, SkeinVectorX, SlideSense,
};
use skein_core::{eval_torus, parse_morse, LaurentA, LaurentVZ, MorseWord, OrientedForest};

type Outcome = Result<String, String>;

fn a(c: i64, e: i64) -> LaurentA {
    LaurentA::term(c, e)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn push_anchors() -> Outcome {
    for n in 1..=8i64 {
        let t = push_coeffs(n);
        ensure(t.r(n) == a(-1, 2 * n + 2), || format!("r_{n} = {}", t.r(n)))?;
        ensure(t.r(-n) == a(-1, 2), || format!("r_-{n} = {}", t.r(-n)))?;
    }
    ensure(push_coeffs(1).r(1) == a(-1, 4) && push_coeffs(1).r(-1) == a(-1, 2), || "r_1 or r_-1".into())?;
    Ok("r_n = -A^(2n+2), r_-n = -A^2 for n = 1..8".into())
}

fn move_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let shape = WordShape::default();
    let kinds = [MoveKind::Omega2, MoveKind::Omega3, MoveKind::Omega4, MoveKind::Omega5, MoveKind::Planar];
    let mut trial = |kind: MoveKind, count: usize, check: &dyn Fn(&SkeinVectorX, &SkeinVectorX) -> bool| {
        let mut done = 0;
        while done < count {
            let w = random_word(&mut rng, shape);
            let Some(w) = plant_site(&mut rng, &w, kind) else { continue };
            let Some(m) = random_move(&mut rng, &w, kind) else { continue };
            let after = apply_move(&w, &m).map_err(|e| format!("{m:?}: {e}"))?;
            let (v0, v1) = (eval_torus(&w).unwrap(), eval_torus(&after).unwrap());
            ensure(check(&v0, &v1), || format!("{m:?} on\n{w}gives {v1}, was {v0}"))?;
            done += 1;
        }
        Ok::<(), String>(())
    };
    for kind in kinds {
        trial(kind, 200, &|v0, v1| v0 == v1)?;
    }
    let (up, down) = (a(-1, 3), a(-1, -3));
    trial(MoveKind::Omega1, 50, &|v0, v1| *v1 == v0.scale(&up) || *v1 == v0.scale(&down))?;
    Ok("200 trials each of Ω2-Ω5 and planar moves; 50 Ω1 trials scale by -A^±3".into())
}

fn turaev_basis() -> Outcome {
    for k in 0..=6 {
        let w = parse_morse(&"cup 1\nar+ 1\ncap 1\n".repeat(k)).unwrap();
        let v = eval_torus(&w).unwrap();
        ensure(v == SkeinVectorX::term(k, LaurentA::one()), || format!("{k} cores give {v}"))?;
    }
    let unknot = eval_torus(&parse_morse("cup 1\ncap 1").unwrap()).unwrap();
    ensure(unknot == SkeinVectorX::constant(&a(-1, 2) + &a(-1, -2)), || format!("unknot gives {unknot}"))?;
    let trefoil = parse_morse("cup 1\ncup 3\nx+ 2\nx+ 2\nx+ 2\ncap 3\ncap 1").unwrap();
    let (v, naive) = (eval_torus(&trefoil).unwrap(), common::naive_bracket(&trefoil));
    ensure(v == SkeinVectorX::constant(naive.clone()), || format!("trefoil gives {v}, naive state sum {naive}"))?;
    Ok("x^k for k = 0..6, unknot, trefoil against the naive state sum".into())
}

fn alt_bases() -> Outcome {
    let n = 8;
    let mut notes = Vec::new();
    for basis in BasisId::ALL {
        let t = basis_matrix(basis, n, None).map_err(|e| e.to_string())?;
        ensure(t.m.is_upper_triangular(), || format!("{basis} not triangular"))?;
        ensure(t.m.diagonal().iter().all(|d| d.is_unit().is_unit()), || format!("{basis} diagonal not units"))?;
        let id = skein_core::algebra::Matrix::identity(n + 1);
        ensure(t.m.mul(&t.m_inv) == id, || format!("{basis}: M·Minv is not I"))?;
    }
    // (-1)^e for integer e.
    let sign = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
    let p = basis_matrix(BasisId::P, n, None).unwrap();
    for k in 1..=n {
        let want = a(sign(k as i64 + 1), 2 - 2 * k as i64);
        ensure(*p.m.get(k, k) == want, || format!("P diagonal {k}: {} vs {want}", p.m.get(k, k)))?;
    }
    // The stated Pneg formula, (-1)^(n+1) A^(-2n-8) taken at n = -k.
    let pneg = basis_matrix(BasisId::Pneg, n, None).unwrap();
    for k in 1..=n {
        let idx = -(k as i64);
        let want = a(sign(idx + 1), -2 * idx - 8);
        if *pneg.m.get(k, k) != want {
            notes.push(format!("Pneg diagonal {k} is {}, formula gives {want}", pneg.m.get(k, k)));
        }
    }
    if notes.is_empty() {
        Ok("P, Pneg, y, yneg for N = 8: triangular, unit diagonal, exact inverse, diagonal formulas".into())
    } else {
        Err(format!("{} ({} of {n} entries differ)", notes[0], notes.len()))
    }
}

fn lens_quotients() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let shape = WordShape { max_crossings: 4, max_arrows: 3, max_strands: 6, body_len: 10 };
    for sense in [SlideSense::Ccw, SlideSense::Cw] {
        for p in 1..=8u32 {
            let rules = derive_lens_rules_with(p, 6, sense).map_err(|e| format!("p={p} {sense:?}: {e}"))?;
            ensure(rules.pivots.iter().all(|pv| pv.lead.is_unit().is_unit()), || format!("p={p}: non-unit pivot"))?;
            ensure(rules.rank() == p as usize / 2 + 1, || format!("p={p}: rank {}", rules.rank()))?;
            let mut done = 0;
            while done < 50 {
                let w = random_word(&mut rng, shape);
                let counts = w.strand_counts();
                let slices: Vec<usize> = (0..counts.len()).filter(|k| counts[*k] >= 1).collect();
                if slices.is_empty() {
                    continue;
                }
                let slice = slices[rng.gen_range(0..slices.len())];
                let side = if rng.gen() { Side::Left } else { Side::Right };
                let slid = apply_move(&w, &lens_slide(p, sense, slice, side)).map_err(|e| e.to_string())?;
                let eval = |w: &MorseWord| eval_lens_with(w, p, sense, 24).map_err(|e| e.to_string());
                let (v0, v1) = (eval(&w)?, eval(&slid)?);
                ensure(v0 == v1, || format!("p={p} {sense:?}: slide changes the value of\n{w}"))?;
                done += 1;
            }
        }
    }
    Ok("p = 1..8, both slide senses: unit pivots, rank ⌊p/2⌋+1, 50 slides each".into())
}

fn homflypt_anchors() -> Outcome {
    for n in 0..=6i64 {
        for (config, s) in [(PushConfig::Agree, 1), (PushConfig::Disagree, -1)] {
            let t = homflypt_push_coeffs(n, config).map_err(|e| e.to_string())?;
            ensure(t.coeff(0) == LaurentVZ::v_pow(2 * s * n), || format!("A_0 for n={n} {config}: {}", t.coeff(0)))?;
        }
    }
    let circle = LaurentVZ::term(1, -1, -1) + LaurentVZ::term(-1, 1, -1);
    for o in [Orientation::Ccw, Orientation::Cw] {
        let f = OrientedForest::flat([OrientedLabel { arrows: 0, orientation: o }]);
        let v = reduce_oriented_forest(&f).map_err(|e| e.to_string())?;
        ensure(v == SkeinVectorB::term(BElement::empty(), circle.clone()), || format!("trivial circle {v}"))?;
    }
    for n in (-4..=4i64).filter(|&n| n != 0) {
        let v = revert_tbar(n).map_err(|e| e.to_string())?;
        for (m, _) in v.terms() {
            let ks = m.ks();
            ensure(ks.iter().all(|k| k.signum() == n.signum()) && ks.iter().sum::<i64>() == n, || {
                format!("revert_tbar({n}) has term {m}")
            })?;
        }
    }
    Ok("A_0 = v^(±2n) for n = 0..6, trivial circle, revert_tbar support for |n| <= 4".into())
}

fn homflypt_change() -> Outcome {
    let m = homflypt_basis_matrix(4, None).map_err(|e| e.to_string())?;
    ensure(m.f.is_upper_triangular(), || "F not triangular".into())?;
    for d in m.diagonal() {
        ensure(d.is_v_monomial() && d.is_unit().is_unit(), || format!("diagonal entry {d}"))?;
    }
    ensure(order_compare(&[1, 1, 3, 3], &[1, 1, 2, 4]) == Ordering::Greater, || "first order example".into())?;
    ensure(order_compare(&[-2, -2, -4, -4], &[-2, -2, -3, -5]) == Ordering::Greater, || "second order example".into())?;
    Ok(format!("F on {} elements with <= 4 arrows: triangular, v-monomial diagonal; order examples", m.labels.len()))
}

fn lens_change() -> Outcome {
    let mut failures = Vec::new();
    for p in 1..=6 {
        let spec = LensSpec::new(p, SlideSense::Ccw).unwrap();
        match homflypt_basis_matrix(4, Some(spec)) {
            Ok(m) if m.f.is_upper_triangular() && m.diagonal().iter().all(|d| d.is_unit().is_unit()) => {}
            Ok(_) => failures.push(format!("p={p}: not triangular with unit diagonal")),
            Err(e) => failures.push(format!("p={p}: {e}")),
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok("p = 1..6 on the 4-arrow truncation".into())
}

fn presentation() -> Outcome {
    for n in 2..=10 {
        let r = &(&qn_poly(n) - &qn_poly(n - 1).shift(1)) + &qn_poly(n - 2);
        ensure(r.is_zero(), || format!("Q recurrence at n={n}"))?;
    }
    let t = |k: usize| PolyT::term(k, LaurentA::one());
    for n in 2..=6usize {
        let e = n as i64;
        let front = &a(1, e + 1) + &a(1, e - 1);
        let expect = if n % 2 == 0 {
            let s: LaurentA = (1..=e / 2).map(|k| a(2, e + 2 - 4 * k)).sum();
            &(&qn_poly(n) - &PolyT::one()).scale(&front) - &PolyT::constant(&s * &(&a(1, 1) + &a(1, -1)))
        } else {
            let s: LaurentA = (1..=(e - 1) / 2).map(|k| a(2, e + 1 - 4 * k)).sum();
            &(&qn_poly(n) - &t(1)).scale(&front) - &t(1).scale(&s)
        };
        ensure(rp3rp3_relation(n).as_ref() == Some(&expect), || format!("relation n={n}"))?;
    }
    for p in 2..=10u32 {
        let b = prism_basis(p);
        let want = if p % 2 == 1 { 3 + p / 2 } else { 4 + p / 2 } as usize;
        ensure(b.labels.len() == want, || format!("prism p={p}: {} generators", b.labels.len()))?;
    }
    let one = prism_basis(1);
    ensure(one.discrepancy.is_some(), || "p=1 discrepancy not reported".into())?;
    Ok(format!("Q_n to 10, relations n = 2..6, prism p = 2..10; {}", one.discrepancy.unwrap()))
}

fn round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let shape = WordShape { max_crossings: 6, max_arrows: 4, max_strands: 6, body_len: 12 };
    let eval = |w: &MorseWord| eval_torus_with_cap(w, usize::MAX).map_err(|e| e.to_string());
    for _ in 0..50 {
        let w = random_word(&mut rng, shape);
        let want = eval(&w)?;
        let c = arrow_to_classical(&w);
        ensure(eval(&classical_to_arrow(&c))? == want, || format!("arrow round trip of\n{w}"))?;
        let back = mixed_to_classical(&classical_to_mixed(&c, None)).map_err(|e| e.to_string())?;
        ensure(eval(&classical_to_arrow(&back))? == want, || format!("mixed round trip of\n{w}"))?;
    }
    Ok("50 words: arrow to classical to arrow, and through the mixed picture".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("push-coefficient anchors", push_anchors),
        ("move invariance", move_invariance),
        ("Turaev basis", turaev_basis),
        ("alternative bases", alt_bases),
        ("lens quotients", lens_quotients),
        ("HOMFLYPT anchors", homflypt_anchors),
        ("B'' change of basis", homflypt_change),
        ("B_p'' for p <= 6", lens_change),
        ("presentation data", presentation),
        ("conversion round trips", round_trips),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed.len(), criteria.len());
    if !failed.is_empty() && std::env::var_os("SKEIN_ACCEPTANCE_STRICT").is_some() {
        std::process::exit(1);
    }
}
