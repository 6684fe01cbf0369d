use std::cmp::Ordering;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skein_core::diagram::{Orientation, OrientedLabel, Tree};
use skein_core::homflypt::*;
use skein_core::kbsm::SlideSense;
use skein_core::{LaurentVZ, OrientedForest};

fn vz(terms: &[(i64, i64, i64)]) -> LaurentVZ {
    let mut out = LaurentVZ::zero();
    for &(c, a, b) in terms {
        out += &LaurentVZ::term(c, a, b);
    }
    out
}

fn b(s: &str) -> BElement {
    s.parse().unwrap()
}

fn bpp(s: &str) -> BppElement {
    s.parse().unwrap()
}

fn vec_b(terms: &[(&str, LaurentVZ)]) -> SkeinVectorB {
    let mut out = SkeinVectorB::zero();
    for (e, c) in terms {
        out.add_term(b(e), c.clone());
    }
    out
}

fn vec_bpp(terms: &[(&str, LaurentVZ)]) -> SkeinVectorBpp {
    let mut out = SkeinVectorBpp::zero();
    for (e, c) in terms {
        out.add_term(bpp(e), c.clone());
    }
    out
}

fn ccw(spec_p: u32) -> LensSpec {
    LensSpec::new(spec_p, SlideSense::Ccw).unwrap()
}

#[test]
fn push_endpoints() {
    for n in 0..=6i64 {
        for (config, sign) in [(PushConfig::Agree, 1), (PushConfig::Disagree, -1)] {
            let t = homflypt_push_coeffs(n, config).unwrap();
            assert_eq!(t.coeff(0), LaurentVZ::v_pow(2 * sign * n), "n={n} {config}");
            assert!(t.a.keys().all(|i| (0..=n).contains(i)));
            assert_eq!(homflypt_push_coeffs(-n, config).unwrap().a, t.a);
        }
    }
}

#[test]
fn push_tables_small() {
    let t = homflypt_push_coeffs(1, PushConfig::Agree).unwrap();
    assert_eq!(t.coeff(1), vz(&[(1, 1, 1)]));
    let t = homflypt_push_coeffs(1, PushConfig::Disagree).unwrap();
    assert_eq!(t.coeff(1), vz(&[(-1, -1, 1)]));
    let t = homflypt_push_coeffs(2, PushConfig::Agree).unwrap();
    assert_eq!(t.coeff(1), vz(&[(1, 4, 2)]));
    assert_eq!(t.coeff(2), vz(&[(1, 3, 3), (2, 3, 1)]));
    let t = homflypt_push_coeffs(2, PushConfig::Disagree).unwrap();
    assert_eq!(t.coeff(1), vz(&[(-1, -2, 2)]));
    assert_eq!(t.coeff(2), vz(&[(-2, -1, 1)]));
}

#[test]
fn revert_support() {
    for n in (-4..=4i64).filter(|&n| n != 0) {
        let v = revert_tbar(n).unwrap();
        for (m, _) in v.terms() {
            assert!(m.ks().iter().all(|k| k.signum() == n.signum()), "t̄_{n}: {m}");
            assert_eq!(m.ks().iter().sum::<i64>(), n);
        }
        assert!(v.coeff(&BElement::single(n).unwrap()).is_unit().is_unit());
    }
    assert_eq!(*revert_tbar(1).unwrap(), SkeinVectorB::basis(b("t[1]")));
    assert_eq!(*revert_tbar(2).unwrap(), vec_b(&[("t[2]", LaurentVZ::v_pow(-2)), ("t[1,1]", vz(&[(-1, -1, 1)]))]));
    assert_eq!(
        *revert_tbar(3).unwrap(),
        vec_b(&[("t[3]", LaurentVZ::v_pow(-4)), ("t[1,2]", vz(&[(-2, -3, 1)])), ("t[1,1,1]", vz(&[(1, -2, 2)]))])
    );
    assert_eq!(*revert_tbar(-2).unwrap(), vec_b(&[("t[-2]", LaurentVZ::v_pow(-2)), ("t[-1,-1]", vz(&[(-1, -1, 1)]))]));
}

fn lab(w: i64, o: Orientation) -> OrientedLabel {
    let arrows = if o == Orientation::Ccw { w } else { -w };
    OrientedLabel { arrows, orientation: o }
}

fn winding(l: &OrientedLabel) -> i64 {
    if l.orientation == Orientation::Ccw {
        l.arrows
    } else {
        -l.arrows
    }
}

#[test]
fn trivial_circle() {
    for o in [Orientation::Ccw, Orientation::Cw] {
        let v = reduce_oriented_forest(&OrientedForest::flat([lab(0, o)])).unwrap();
        assert_eq!(v, SkeinVectorB::term(BElement::empty(), vz(&[(1, -1, -1), (-1, 1, -1)])));
    }
}

#[test]
fn nested_pair() {
    let f = OrientedForest::chain(&[lab(1, Orientation::Ccw), lab(1, Orientation::Ccw)]);
    let v = reduce_oriented_forest(&f).unwrap();
    assert_eq!(v, vec_b(&[("t[1,1]", LaurentVZ::v_pow(2)), ("t[2]", vz(&[(1, 1, 1)]))]));
}

/// Reduces by pushing a randomly chosen innermost oval at every step.
fn reduce_randomly(roots: Vec<Tree<OrientedLabel>>, rng: &mut ChaCha8Rng) -> SkeinVectorB {
    fn leaf_paths(ts: &[Tree<OrientedLabel>], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for (i, t) in ts.iter().enumerate() {
            prefix.push(i);
            if t.children.is_empty() {
                if prefix.len() > 1 {
                    out.push(prefix.clone());
                }
            } else {
                leaf_paths(&t.children, prefix, out);
            }
            prefix.pop();
        }
    }
    fn siblings<'a>(roots: &'a mut Vec<Tree<OrientedLabel>>, path: &[usize]) -> &'a mut Vec<Tree<OrientedLabel>> {
        let mut cur = roots;
        for &i in path {
            cur = &mut cur[i].children;
        }
        cur
    }
    let mut paths = Vec::new();
    leaf_paths(&roots, &mut Vec::new(), &mut paths);
    let Some(path) = paths.choose(rng).cloned() else {
        let mut out = SkeinVectorB::one();
        for r in &roots {
            let (o, w) = (r.label.orientation, winding(&r.label));
            let single = reduce_oriented_forest(&OrientedForest::flat([lab(w, o)])).unwrap();
            out = &out * &single;
        }
        return out;
    };
    let (leaf_at, parent_path) = path.split_last().unwrap();
    let (parent_at, grand_path) = parent_path.split_last().unwrap();
    let mut base = roots;
    let leaf = siblings(&mut base, parent_path).remove(*leaf_at).label;
    let (o, w) = (leaf.orientation, winding(&leaf));
    let parent_o = siblings(&mut base, grand_path)[*parent_at].label.orientation;
    // Normalize the leaf to side-by-side t_k ovals before pushing.
    let here = reduce_oriented_forest(&OrientedForest::flat([lab(w, o)])).unwrap();
    let mut out = SkeinVectorB::zero();
    for (m, c) in here.terms() {
        let mut partial = SkeinVectorB::term(BElement::empty(), c.clone());
        let mut pending: Vec<Tree<OrientedLabel>> = base.clone();
        let ks = m.ks().to_vec();
        let Some((&k, rest)) = ks.split_last() else {
            out.add_scaled(&reduce_randomly(pending, rng), c);
            continue;
        };
        for &r in rest {
            siblings(&mut pending, parent_path).push(Tree::leaf(t_label(r)));
        }
        let config = if t_label(k).orientation == parent_o { PushConfig::Agree } else { PushConfig::Disagree };
        let table = homflypt_push_coeffs(k, config).unwrap();
        let mut acc = SkeinVectorB::zero();
        for (&i, a) in &table.a {
            let mut next = pending.clone();
            let parent = &mut siblings(&mut next, grand_path)[*parent_at];
            let pw = winding(&parent.label) + k.signum() * i;
            parent.label = lab(pw, parent.label.orientation);
            if k - k.signum() * i != 0 {
                siblings(&mut next, grand_path).push(Tree::leaf(t_label(k - k.signum() * i)));
            }
            acc.add_scaled(&reduce_randomly(next, rng), a);
        }
        partial = &partial * &acc;
        out = &out + &partial;
    }
    out
}

fn random_tree(rng: &mut ChaCha8Rng, budget: &mut usize) -> Tree<OrientedLabel> {
    *budget -= 1;
    let o = if rng.gen_bool(0.5) { Orientation::Ccw } else { Orientation::Cw };
    let label = lab(rng.gen_range(-3..=3), o);
    let mut children = Vec::new();
    while *budget > 0 && rng.gen_bool(0.5) {
        children.push(random_tree(rng, budget));
    }
    Tree::with_children(label, children)
}

#[test]
fn reduction_is_confluent() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..50 {
        let mut budget = rng.gen_range(1..=5);
        let mut roots = Vec::new();
        while budget > 0 {
            roots.push(random_tree(&mut rng, &mut budget));
        }
        let expected = reduce_oriented_forest(&OrientedForest::new(roots.clone())).unwrap();
        for _ in 0..20 {
            assert_eq!(reduce_randomly(roots.clone(), &mut rng), expected);
        }
    }
}

#[test]
fn order_examples() {
    assert_eq!(order_compare(&[1, 1, 3, 3], &[1, 1, 2, 4]), Ordering::Greater);
    assert_eq!(order_compare(&[-2, -2, -4, -4], &[-2, -2, -3, -5]), Ordering::Greater);
    assert!(b("t[1,1,3,3]") > b("t[1,1,2,4]"));
    assert!(b("t[-4,-4,-2,-2]") > b("t[-5,-3,-2,-2]"));
    assert!(b("t[2]") < b("t[1,1]"));
    assert!(b("t[-1]") < b("t[1]"));
}

#[test]
fn order_is_total_on_truncation() {
    let all = b_truncation(4, None);
    assert_eq!(all.len(), 38);
    for x in &all {
        for y in &all {
            let xy = order_compare(x.ks(), y.ks());
            assert_eq!(xy, order_compare(y.ks(), x.ks()).reverse());
            assert_eq!(xy == Ordering::Equal, x == y);
            assert_eq!(xy, x.cmp(y));
            for z in &all {
                if xy == Ordering::Less && order_compare(y.ks(), z.ks()) == Ordering::Less {
                    assert_eq!(order_compare(x.ks(), z.ks()), Ordering::Less);
                }
            }
        }
    }
}

#[test]
fn text_and_json_round_trip() {
    for s in ["t[]", "t[-2,1,1]", "t[3]"] {
        assert_eq!(b(s).to_string(), s);
    }
    for s in ["tn[]", "tn[-1,-3,2,4]", "tn[1,1]"] {
        assert_eq!(bpp(s).to_string(), s);
    }
    assert!("tn[2,-1]".parse::<BppElement>().is_err());
    assert!("t[0]".parse::<BElement>().is_err());
    assert_eq!(BppElement::from_multiset(&[4, -1, 2, -3]), bpp("tn[-1,-3,2,4]"));
    let v = revert_tbar(3).unwrap();
    assert_eq!(SkeinVectorB::from_json(&v.to_json()).unwrap(), *v);
    let f = f_to_bpp(&b("t[-1,1]")).unwrap();
    assert_eq!(SkeinVectorBpp::from_json(&f.to_json()).unwrap(), f);
    assert!(SkeinVectorBpp::from_json(&v.to_json()).is_err());
}

#[test]
fn f_examples() {
    assert_eq!(
        f_to_bpp(&b("t[1,1]")).unwrap(),
        vec_bpp(&[("tn[1,1]", LaurentVZ::v_pow(-2)), ("tn[2]", vz(&[(-1, -1, 1)]))])
    );
    assert_eq!(
        f_to_bpp(&b("t[-1,1]")).unwrap(),
        vec_bpp(&[("tn[-1,1]", LaurentVZ::v_pow(2)), ("tn[]", vz(&[(-1, 2, 0), (1, 0, 0)]))])
    );
    assert_eq!(f_to_bpp(&b("t[]")).unwrap(), SkeinVectorBpp::basis(BppElement::empty()));
    assert_eq!(f_to_bpp(&b("t[-3]")).unwrap(), SkeinVectorBpp::basis(bpp("tn[-3]")));
}

#[test]
fn basis_matrix_triangular() {
    let m = homflypt_basis_matrix(4, None).unwrap();
    assert_eq!(m.labels.len(), 38);
    assert!(m.f.is_upper_triangular());
    for d in m.diagonal() {
        let (c, e) = d.terms().next().map(|(e, c)| (c.clone(), *e)).unwrap();
        assert_eq!(d.terms().count(), 1);
        assert!(c.is_one(), "diagonal {d}");
        assert_eq!(e.1, 0, "diagonal {d} involves z");
    }
    assert_eq!(m.f.mul(&m.g), skein_core::algebra::Matrix::identity(38));
    // The empty element maps to itself.
    for i in 1..38 {
        assert!(m.f.get(i, 0).is_zero());
    }
    assert!(m.f.get(0, 0).is_one());
    let small = homflypt_basis_matrix(2, None).unwrap();
    let names: Vec<String> = small.labels.iter().map(ToString::to_string).collect();
    assert_eq!(names, ["t[]", "t[-1]", "t[1]", "t[-2]", "t[2]", "t[-1,-1]", "t[-1,1]", "t[1,1]"]);
    assert_eq!(small.diagonal()[7], LaurentVZ::v_pow(-2));
}

#[test]
fn lens_rules_certified() {
    for p in 1..=8 {
        let rules = homflypt_lens_rules(p, 4).unwrap();
        assert_eq!(rules.relations, 120, "p={p}");
        for (e, v) in &rules.rules {
            assert!(ccw(p).check_in_range(e).is_err());
            for (m, _) in v.terms() {
                ccw(p).check_in_range(m).unwrap();
            }
        }
    }
}

#[test]
fn lens_rule_examples() {
    // In L(1,1) = S³ each value is the HOMFLYPT polynomial of a link:
    // t₁, t₂ are unknots, t₁t₁ and t₋₁t₁ Hopf links, t₃ a trefoil. The
    // expected values come from v⁻¹L₊ − vL₋ = zL₀ by hand.
    let d = vz(&[(1, -1, -1), (-1, 1, -1)]);
    let s3 = |s: &str| {
        let v = lens_reduce(&SkeinVectorB::basis(b(s)), ccw(1)).unwrap();
        assert!(v.terms().all(|(e, _)| e.is_empty()));
        v.coeff(&BElement::empty())
    };
    for k in ["t[1]", "t[-1]", "t[2]", "t[-2]"] {
        assert_eq!(s3(k), d);
    }
    let (vm1, vm2, z) = (LaurentVZ::v_pow(-1), LaurentVZ::v_pow(-2), vz(&[(1, 0, 1)]));
    let hopf_neg = &(&vm2 * &(&d * &d)) - &(&(&vm1 * &z) * &d);
    let (v1, v2) = (LaurentVZ::v_pow(1), LaurentVZ::v_pow(2));
    let hopf_pos = &(&v2 * &(&d * &d)) + &(&(&v1 * &z) * &d);
    assert_eq!(s3("t[1,1]"), hopf_neg);
    assert_eq!(s3("t[-1,1]"), hopf_pos);
    // Crossing change on the trefoil: v⁻¹·unknot − v·T = z·(negative Hopf).
    let trefoil = &(&vm2 * &d) - &(&(&vm1 * &z) * &hopf_neg);
    assert_eq!(s3("t[3]"), trefoil);
    assert_eq!(s3("t[-3]"), trefoil);
    assert_eq!(lens_reduce(&SkeinVectorB::basis(b("t[-1]")), ccw(2)).unwrap(), SkeinVectorB::basis(b("t[1]")));
    assert_eq!(lens_reduce(&SkeinVectorB::basis(b("t[2]")), ccw(3)).unwrap(), SkeinVectorB::basis(b("t[-1]")));
    assert_eq!(
        lens_reduce(&SkeinVectorB::basis(b("t[-3,-1]")), ccw(6)).unwrap(),
        vec_b(&[("t[-1,3]", LaurentVZ::v_pow(-2)), ("t[2]", vz(&[(-1, -1, 1)]))])
    );
}

#[test]
fn lens_f_examples() {
    assert_eq!(f_to_bpp_lens(&b("t[1]"), ccw(2)).unwrap(), SkeinVectorBpp::basis(bpp("tn[1]")));
    assert_eq!(
        f_to_bpp_lens(&b("t[1,1]"), ccw(3)).unwrap(),
        vec_bpp(&[("tn[1,1]", LaurentVZ::v_pow(-2)), ("tn[-1]", vz(&[(-1, -1, 1)]))])
    );
    assert_eq!(
        f_to_bpp_lens(&b("t[1,2]"), ccw(5)).unwrap(),
        vec_bpp(&[("tn[1,2]", LaurentVZ::v_pow(-2)), ("tn[-2]", vz(&[(-1, -1, 1)]))])
    );
    assert!(matches!(f_to_bpp_lens(&b("t[2]"), ccw(3)), Err(HomflyptError::OutOfRange { .. })));
}

#[test]
fn lens_matrices_triangular_below_six() {
    for p in 1..=5 {
        let m = homflypt_basis_matrix(4, Some(ccw(p))).unwrap();
        assert!(m.f.is_upper_triangular(), "p={p}");
        assert!(m.diagonal().iter().all(|d| d.is_unit().is_unit()));
    }
}

#[test]
fn lens_six_breaks_the_order() {
    // t₋₃ slides to t₃ without losing arrows, so t₋₂t₋₂ picks up t₋₁t₃,
    // which is higher in the order.
    let err = homflypt_basis_matrix(4, Some(ccw(6))).unwrap_err();
    assert!(matches!(err, HomflyptError::NotTriangular { ref element, .. } if element == "t[-2,-2]"), "{err}");
}

#[test]
fn mirrored_slide_is_not_triangular() {
    for p in 2..=6 {
        let spec = LensSpec::new(p, SlideSense::Cw).unwrap();
        assert!(homflypt_lens_rules_with(spec, 3).is_ok());
        assert!(matches!(homflypt_basis_matrix(4, Some(spec)), Err(HomflyptError::NotTriangular { .. })));
    }
}

#[test]
fn bad_lens() {
    assert_eq!(LensSpec::new(0, SlideSense::Ccw), Err(HomflyptError::BadLens(0)));
}
