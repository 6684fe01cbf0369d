//! Change of basis between side-by-side ovals `B` and concentric ovals `B″`.
//!
//! `G` sends a concentric element to its class in `B`; it is triangular for
//! the order with the flattened element on the diagonal. `F` is its inverse.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde_json::{json, Value};

use super::basis::{BElement, BppElement, SkeinVectorB, SkeinVectorBpp};
use super::lens::{lens_reduce, LensSpec};
use super::reduce::{reduce_oriented_forest, t_label};
use super::HomflyptError;
use crate::algebra::Matrix;
use crate::diagram::OrientedLabel;
use crate::{LaurentVZ, OrientedForest};

/// Concentric ovals realising a `B″` element.
pub fn bpp_forest(b: &BppElement) -> OrientedForest {
    let outer_first: Vec<OrientedLabel> = b.ks().iter().rev().map(|&k| t_label(k)).collect();
    OrientedForest::chain(&outer_first)
}

type Memo<K, V> = RwLock<HashMap<K, V>>;

fn cached<K, V>(memo: &Memo<K, V>, key: &K, make: impl FnOnce() -> Result<V, HomflyptError>) -> Result<V, HomflyptError>
where
    K: std::hash::Hash + Eq + Clone,
    V: Clone,
{
    if let Some(v) = memo.read().expect("memo poisoned").get(key) {
        return Ok(v.clone());
    }
    let v = make()?;
    memo.write().expect("memo poisoned").insert(key.clone(), v.clone());
    Ok(v)
}

/// Class of a `B″` element in `B`, or in `B_p` for a lens space.
pub fn expand_bpp(b: &BppElement, lens: Option<LensSpec>) -> Result<SkeinVectorB, HomflyptError> {
    static MEMO: OnceLock<Memo<(BppElement, Option<LensSpec>), SkeinVectorB>> = OnceLock::new();
    cached(MEMO.get_or_init(Default::default), &(b.clone(), lens), || {
        let torus = reduce_oriented_forest(&bpp_forest(b))?;
        match lens {
            None => Ok(torus),
            Some(spec) => lens_reduce(&torus, spec),
        }
    })
}

fn diagonal_entry(e: &BElement, lens: Option<LensSpec>) -> Result<(SkeinVectorB, LaurentVZ), HomflyptError> {
    let g = expand_bpp(&e.nested(), lens)?;
    let not_triangular = || HomflyptError::NotTriangular { element: e.to_string(), image: g.to_string() };
    match g.leading() {
        Some((top, c)) if top == e && c.is_unit().is_unit() => {
            let c = c.clone();
            Ok((g, c))
        }
        _ => Err(not_triangular()),
    }
}

/// `F(e)`: the element `e` of `B` (or `B_p`) written over `B″` (or `B_p″`).
///
/// Equal to a unit times the concentric element on the same ovals plus
/// strictly lower terms; fails if the triangular structure breaks.
pub fn f_to_bpp_with(e: &BElement, lens: Option<LensSpec>) -> Result<SkeinVectorBpp, HomflyptError> {
    static MEMO: OnceLock<Memo<(BElement, Option<LensSpec>), SkeinVectorBpp>> = OnceLock::new();
    cached(MEMO.get_or_init(Default::default), &(e.clone(), lens), || {
        if let Some(spec) = lens {
            spec.check_in_range(e)?;
        }
        let (g, lead) = diagonal_entry(e, lens)?;
        let inv = lead.inverse().expect("leading coefficient is a unit");
        // e = lead⁻¹·(G(e″) − Σ_{e' < e} c_{e'}·e')
        let mut out = SkeinVectorBpp::basis(e.nested());
        for (lower, c) in g.terms().filter(|(x, _)| *x != e) {
            out.add_scaled(&f_to_bpp_with(lower, lens)?, &-c.clone());
        }
        Ok(out.scale(&inv))
    })
}

/// `F` on the solid torus.
pub fn f_to_bpp(e: &BElement) -> Result<SkeinVectorBpp, HomflyptError> {
    f_to_bpp_with(e, None)
}

/// `F` on `L(p,1)`, for `e` in `B_p`.
pub fn f_to_bpp_lens(e: &BElement, spec: LensSpec) -> Result<SkeinVectorBpp, HomflyptError> {
    f_to_bpp_with(e, Some(spec))
}

/// Elements of `B` with at most `max_arrows` arrows in total, ascending.
/// With `range = Some(p)`, only indices in `(-p/2, p/2]`.
pub fn b_truncation(max_arrows: u64, range: Option<u32>) -> Vec<BElement> {
    let allowed = |k: i64| match range {
        Some(p) => 2 * k > -(p as i64) && 2 * k <= p as i64,
        None => true,
    };
    let mut indices: Vec<i64> = (1..=max_arrows as i64).flat_map(|k| [k, -k]).filter(|k| allowed(*k)).collect();
    indices.sort_unstable();
    let mut out = Vec::new();
    fn rec(indices: &[i64], from: usize, budget: u64, cur: &mut Vec<i64>, out: &mut Vec<BElement>) {
        out.push(BElement::from_nonzero(cur.clone()));
        for (i, &k) in indices.iter().enumerate().skip(from) {
            if k.unsigned_abs() <= budget {
                cur.push(k);
                rec(indices, i, budget - k.unsigned_abs(), cur, out);
                cur.pop();
            }
        }
    }
    rec(&indices, 0, max_arrows, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Matrices of `F` and `G` on a truncation, rows and columns in ascending
/// order. Column `j` of `f` is `F(labels[j])` over the concentric elements
/// `labels[i].nested()`; `g` is the inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HBasisMatrix {
    pub max_arrows: u64,
    pub lens: Option<LensSpec>,
    pub labels: Vec<BElement>,
    pub f: Matrix<LaurentVZ>,
    pub g: Matrix<LaurentVZ>,
}

impl HBasisMatrix {
    pub fn diagonal(&self) -> Vec<LaurentVZ> {
        self.f.diagonal()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_arrows": self.max_arrows,
            "p": self.lens.map(|s| s.p),
            "sense": self.lens.map(|s| s.sense.name()),
            "columns": self.labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "rows": self.labels.iter().map(|e| e.nested().to_string()).collect::<Vec<_>>(),
            "F": self.f.to_json(),
            "G": self.g.to_json(),
        })
    }
}

/// Matrix of `F` on the elements with at most `max_arrows` arrows, on the
/// torus or on `L(p,1)`. Certifies triangularity with unit diagonal and
/// that `F·G` is the identity.
pub fn homflypt_basis_matrix(max_arrows: u64, lens: Option<LensSpec>) -> Result<HBasisMatrix, HomflyptError> {
    let labels = b_truncation(max_arrows, lens.map(|s| s.p));
    let index: HashMap<&BElement, usize> = labels.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let n = labels.len();
    let (mut f, mut g) = (Matrix::zeros(n), Matrix::zeros(n));
    let outside = |e: &BElement| HomflyptError::Truncation { element: e.to_string() };
    for (j, e) in labels.iter().enumerate() {
        for (b, c) in f_to_bpp_with(e, lens)?.terms() {
            f.set(*index.get(&b.flattened()).ok_or_else(|| outside(&b.flattened()))?, j, c.clone());
        }
        for (b, c) in expand_bpp(&e.nested(), lens)?.terms() {
            g.set(*index.get(b).ok_or_else(|| outside(b))?, j, c.clone());
        }
    }
    let certified = f.is_upper_triangular()
        && f.diagonal().iter().all(|d| d.is_unit().is_unit())
        && f.mul(&g) == Matrix::identity(n);
    if !certified {
        return Err(HomflyptError::NotTriangular { element: format!("truncation {max_arrows}"), image: String::new() });
    }
    Ok(HBasisMatrix { max_arrows, lens, labels, f, g })
}
