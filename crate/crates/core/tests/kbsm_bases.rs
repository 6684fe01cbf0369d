mod common;

use num_traits::One;
use skein_core::kbsm::{
    basis_matrix, expand_basis_element, prism_basis, qn_poly, rp3rp3_presentation, rp3rp3_relation, BasisId,
    PolyT, SkeinVectorX,
};
use skein_core::algebra::Matrix;
use skein_core::{parse_morse, LaurentA};

fn a(c: i64, e: i64) -> LaurentA {
    LaurentA::term(c, e)
}

fn poly(s: &str) -> LaurentA {
    s.parse().unwrap()
}

#[test]
fn first_elements() {
    for b in BasisId::ALL {
        assert_eq!(expand_basis_element(b, 0), SkeinVectorX::one());
    }
    assert_eq!(expand_basis_element(BasisId::P, 1), SkeinVectorX::var());
    assert_eq!(expand_basis_element(BasisId::Pneg, 1), SkeinVectorX::term(1, a(1, -6)));
    let mut p2 = SkeinVectorX::term(2, a(-1, -2));
    p2.add_term(0, poly("1*A^4 + 1*A^0"));
    assert_eq!(expand_basis_element(BasisId::P, 2), p2);
    // Values computed on the annulus.
    let mut pneg2 = SkeinVectorX::term(2, a(-1, -10));
    pneg2.add_term(0, poly("1*A^0 + 1*A^-4"));
    assert_eq!(expand_basis_element(BasisId::Pneg, 2), pneg2);
    let mut y2 = SkeinVectorX::term(2, a(1, 2));
    y2.add_term(0, poly("-1*A^8 + 1*A^0"));
    assert_eq!(expand_basis_element(BasisId::Y, 2), y2);
}

#[test]
fn nested_chains_match_state_sum() {
    for (b, tok) in [(BasisId::Y, "ar+"), (BasisId::Yneg, "ar-")] {
        for n in 1..=3usize {
            let mut text = String::new();
            for k in 1..=n {
                text.push_str(&format!("cup {k}\n{tok} {k}\n"));
            }
            for k in (1..=n).rev() {
                text.push_str(&format!("cap {k}\n"));
            }
            let w = parse_morse(&text).unwrap();
            let oracle = common::annulus_eval(&w);
            let mut v = SkeinVectorX::default();
            for (k, c) in oracle {
                v.add_term(k, c);
            }
            assert_eq!(expand_basis_element(b, n), v, "{b} {n}");
        }
    }
}

fn check_inverse(m: &Matrix<LaurentA>, inv: &Matrix<LaurentA>) {
    assert_eq!(m.mul(inv), Matrix::identity(m.size()));
    assert_eq!(inv.mul(m), Matrix::identity(m.size()));
}

#[test]
fn matrices_up_to_8() {
    for b in BasisId::ALL {
        let bm = basis_matrix(b, 8, None).unwrap();
        assert!(bm.m.is_upper_triangular());
        for d in bm.m.diagonal() {
            assert!(d.inverse().is_some(), "{b}: {d} is not a unit");
        }
        check_inverse(&bm.m, &bm.m_inv);
    }
    let p = basis_matrix(BasisId::P, 8, None).unwrap().m.diagonal();
    let pneg = basis_matrix(BasisId::Pneg, 8, None).unwrap().m.diagonal();
    assert_eq!(p[0], LaurentA::one());
    assert_eq!(pneg[0], LaurentA::one());
    for n in 1..=8i64 {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        assert_eq!(p[n as usize], a(sign, -2 * n + 2));
        assert_eq!(pneg[n as usize], a(sign, -4 * n - 2));
    }
}

#[test]
fn small_diagonals() {
    let d = |b, n| basis_matrix(b, n, None).unwrap().m.diagonal();
    assert_eq!(d(BasisId::P, 3), vec![a(1, 0), a(1, 0), a(-1, -2), a(1, -4)]);
    assert_eq!(d(BasisId::Pneg, 1), vec![a(1, 0), a(1, -6)]);
    assert_eq!(d(BasisId::Y, 2), vec![a(1, 0), a(1, 0), a(1, 2)]);
}

#[test]
fn lens_truncation() {
    for p in 1..=8u32 {
        for b in BasisId::ALL {
            let bm = basis_matrix(b, 0, Some(p)).unwrap();
            assert_eq!(bm.n, p as usize / 2);
            check_inverse(&bm.m, &bm.m_inv);
        }
    }
}

#[test]
fn basis_names_round_trip() {
    for b in BasisId::ALL {
        assert_eq!(b.name().parse::<BasisId>().unwrap(), b);
    }
    assert!("Q".parse::<BasisId>().is_err());
}

fn t(n: usize) -> PolyT {
    PolyT::term(n, LaurentA::one())
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `Q_n(t) = Σ_k (-1)^k C(n-k, k) t^{n-2k}`.
fn q_closed(n: usize) -> PolyT {
    let mut out = PolyT::zero();
    for k in 0..=n / 2 {
        let c = binom((n - k) as i64, k as i64) * if k % 2 == 0 { 1 } else { -1 };
        out.add_term(n - 2 * k, LaurentA::constant(c));
    }
    out
}

#[test]
fn q_polynomials() {
    assert_eq!(qn_poly(0), PolyT::one());
    assert_eq!(qn_poly(1), t(1));
    assert_eq!(qn_poly(2), &t(2) - &PolyT::one());
    assert_eq!(qn_poly(3), &t(3) - &t(1).scale(&LaurentA::constant(2)));
    for n in 0..=10 {
        assert_eq!(qn_poly(n), q_closed(n));
    }
    for n in 2..=10 {
        assert!((&(&qn_poly(n) - &qn_poly(n - 1).shift(1)) + &qn_poly(n - 2)).is_zero());
    }
}

#[test]
fn rp3rp3_relations() {
    let c = |s: &str| PolyT::constant(poly(s));
    let n2 = &(&t(2) - &c("2*A^0")).scale(&poly("1*A^3 + 1*A^1")) - &c("2*A^1 + 2*A^-1");
    assert_eq!(rp3rp3_relation(2).unwrap(), n2);
    let n3 = &(&t(3) - &t(1).scale(&LaurentA::constant(3))).scale(&poly("1*A^4 + 1*A^2")) - &t(1).scale(&LaurentA::constant(2));
    assert_eq!(rp3rp3_relation(3).unwrap(), n3);
    assert!(rp3rp3_relation(1).is_none());
    // Direct substitution of the closed forms with the binomial Q_n.
    for n in 2..=6usize {
        let e = n as i64;
        let front = a(1, e + 1) + a(1, e - 1);
        let expect = if n % 2 == 0 {
            let s: LaurentA = (1..=e / 2).map(|k| a(2, e + 2 - 4 * k)).sum();
            &(&q_closed(n) - &PolyT::one()).scale(&front) - &PolyT::constant(&s * &(a(1, 1) + a(1, -1)))
        } else {
            let s: LaurentA = (1..=(e - 1) / 2).map(|k| a(2, e + 1 - 4 * k)).sum();
            &(&q_closed(n) - &t(1)).scale(&front) - &t(1).scale(&s)
        };
        assert_eq!(rp3rp3_relation(n).unwrap(), expect, "n={n}");
    }
    let pres = rp3rp3_presentation(6);
    assert_eq!(pres.relations.len(), 5);
    assert_eq!(pres.generators[..2], ["E", "E'"]);
}

#[test]
fn prism_generators() {
    assert_eq!(prism_basis(3).labels, ["∅", "x", "x^2", "E"]);
    assert_eq!(prism_basis(4).labels, ["∅", "x", "x^2", "x^3", "E", "E'"]);
    for p in 2..=10u32 {
        let b = prism_basis(p);
        let expect = if p % 2 == 1 { 3 + p / 2 } else { 4 + p / 2 } as usize;
        assert_eq!(b.labels.len(), expect);
        assert!(b.discrepancy.is_none());
    }
    let one = prism_basis(1);
    assert_eq!(one.labels, ["∅", "x", "x^2", "E"]);
    assert_eq!(one.stated_count, 3);
    assert!(one.discrepancy.is_some());
}
