use clap::{ArgGroup, Args};
use serde_json::{json, Value};
use skein_core::homflypt::{homflypt_basis_matrix, homflypt_lens_rules_with, LensSpec};
use skein_core::kbsm::{
    basis_matrix, derive_lens_rules_with, prism_basis, push_coeffs, qn_poly, rp3rp3_presentation, BasisId,
    SlideSense,
};

use crate::error::CliError;
use crate::input::Sense;
use crate::{CommandResult, Common, Outcome};

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("table").required(true).args([
    "kbsm_basis", "rp3_relations", "homflypt_f", "homflypt_lens_rules", "lens_rules", "prism", "qn", "push",
])))]
pub struct TablesArgs {
    /// Change of basis from `P`, `Pneg`, `y` or `yneg` to `{x^n}`.
    #[arg(long, value_name = "BASIS")]
    kbsm_basis: Option<BasisId>,
    /// Size of the kbsm basis table.
    #[arg(long = "N", default_value_t = 5)]
    big_n: usize,
    /// Relations of the RP^3 # RP^3 presentation.
    #[arg(long)]
    rp3_relations: bool,
    /// Largest `n` of the relation table.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Matrix of the HOMFLYPT change of basis `F`.
    #[arg(long = "homflypt-F")]
    homflypt_f: bool,
    /// Arrow bound of the HOMFLYPT truncation.
    #[arg(long, default_value_t = 3)]
    arrows: u64,
    /// Restrict `--kbsm-basis` or `--homflypt-F` to the lens space `L(p,1)`.
    #[arg(long, value_name = "P")]
    lens: Option<u32>,
    /// HOMFLYPT slide rules in `L(p,1)` up to `--arrows`.
    #[arg(long, value_name = "P")]
    homflypt_lens_rules: Option<u32>,
    /// Kauffman bracket rewrite rules in `L(p,1)`.
    #[arg(long, value_name = "P")]
    lens_rules: Option<u32>,
    /// Highest power of `x` rewritten by `--lens-rules`; defaults to `p + 2`.
    #[arg(long)]
    n_max: Option<usize>,
    /// Generators of the prism manifold module.
    #[arg(long, value_name = "P")]
    prism: Option<u32>,
    /// The polynomial `Q_n(t)`.
    #[arg(long, value_name = "N")]
    qn: Option<usize>,
    /// Push coefficients `r_i` for an oval with `n` arrows.
    #[arg(long, value_name = "N", allow_hyphen_values = true)]
    push: Option<i64>,
    #[arg(long, value_enum, default_value_t = Sense::Ccw)]
    sense: Sense,
}

pub fn config(a: &TablesArgs, _c: &Common) -> Value {
    let table = if let Some(b) = a.kbsm_basis {
        json!({"table": "kbsm-basis", "basis": b.name(), "N": a.big_n, "lens": a.lens})
    } else if a.rp3_relations {
        json!({"table": "rp3-relations", "n": a.n})
    } else if a.homflypt_f {
        json!({"table": "homflypt-F", "arrows": a.arrows, "lens": a.lens})
    } else if let Some(p) = a.homflypt_lens_rules {
        json!({"table": "homflypt-lens-rules", "p": p, "arrows": a.arrows})
    } else if let Some(p) = a.lens_rules {
        json!({"table": "lens-rules", "p": p, "n_max": a.n_max.unwrap_or(p as usize + 2)})
    } else if let Some(p) = a.prism {
        json!({"table": "prism", "p": p})
    } else if let Some(n) = a.qn {
        json!({"table": "qn", "n": n})
    } else {
        json!({"table": "push", "n": a.push})
    };
    let mut table = table;
    table["sense"] = json!(SlideSense::from(a.sense).name());
    table
}

fn lens_spec(p: Option<u32>, sense: Sense) -> Result<Option<LensSpec>, CliError> {
    p.map(|p| LensSpec::new(p, sense.into())).transpose().map_err(Into::into)
}

pub fn run(a: &TablesArgs, _c: &Common) -> CommandResult {
    if let Some(b) = a.kbsm_basis {
        let t = basis_matrix(b, a.big_n, a.lens)?;
        let diagonal = t.m.diagonal();
        let unit = diagonal.iter().all(|d| d.is_unit().is_unit());
        let triangular = t.m.is_upper_triangular();
        let mut result = t.to_json();
        result["certificate"] = json!({
            "upper_triangular": triangular,
            "unit_diagonal": unit,
            "diagonal": diagonal.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        });
        let mut text = format!("basis {b}, N = {}: M column j expands element j over x^0..x^{}\n", t.n, t.n);
        for (j, d) in diagonal.iter().enumerate() {
            text.push_str(&format!("  M[{j}][{j}] = {d}\n"));
        }
        if let Some(j) = diagonal.iter().position(|d| !d.is_unit().is_unit()) {
            let error = CliError::Certificate(format!("basis {b}: diagonal entry {j} is {} and not a unit", diagonal[j]));
            return Err(Outcome::Failed { result, text, error });
        }
        text.push_str("certified: upper triangular, unit diagonal, exact inverse\n");
        return Ok((result, text));
    }
    if a.rp3_relations {
        let pres = rp3rp3_presentation(a.n);
        let mut text = String::from("generators: E, E', R[t]\n");
        for (n, r) in &pres.relations {
            text.push_str(&format!("S_{n} = {r}\n"));
        }
        return Ok((pres.to_json(), text));
    }
    if a.homflypt_f {
        let t = homflypt_basis_matrix(a.arrows, lens_spec(a.lens, a.sense)?)?;
        let diagonal = t.diagonal();
        let mut result = t.to_json();
        result["certificate"] = json!({
            "upper_triangular": true,
            "unit_diagonal": true,
            "v_monomial_diagonal": diagonal.iter().all(|d| d.is_v_monomial()),
            "diagonal": diagonal.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        });
        let mut text = format!("F on {} elements with at most {} arrows\n", t.labels.len(), a.arrows);
        for (e, d) in t.labels.iter().zip(&diagonal) {
            text.push_str(&format!("  F({e}) = ({d}) * {} + lower terms\n", e.nested()));
        }
        text.push_str("certified: upper triangular, unit diagonal, F*G = I\n");
        return Ok((result, text));
    }
    if let Some(p) = a.homflypt_lens_rules {
        let rules = homflypt_lens_rules_with(LensSpec::new(p, a.sense.into())?, a.arrows)?;
        let mut text = format!("L({p},1): {} slide relations checked\n", rules.relations);
        for (e, v) in &rules.rules {
            text.push_str(&format!("{e} = {v}\n"));
        }
        return Ok((rules.to_json(), text));
    }
    if let Some(p) = a.lens_rules {
        let rules = derive_lens_rules_with(p, a.n_max.unwrap_or(p as usize + 2), a.sense.into())?;
        let mut text = format!("L({p},1): rank {}\n", rules.rank());
        for (n, v) in &rules.rules {
            text.push_str(&format!("x^{n} = {v}\n"));
        }
        return Ok((rules.to_json(), text));
    }
    if let Some(p) = a.prism {
        let b = prism_basis(p);
        let mut text = format!("generators: {}\n", b.labels.join(", "));
        if let Some(d) = &b.discrepancy {
            text.push_str(&format!("note: {d}\n"));
        }
        return Ok((b.to_json(), text));
    }
    if let Some(n) = a.qn {
        let q = qn_poly(n);
        return Ok((json!({"n": n, "Q": q.to_json()}), format!("Q_{n} = {q}\n")));
    }
    let n = a.push.expect("clap requires one table");
    let table = push_coeffs(n);
    let mut text = String::new();
    let mut coeffs = serde_json::Map::new();
    for (i, r) in &table.r {
        text.push_str(&format!("r_{i} = {r}\n"));
        coeffs.insert(i.to_string(), r.to_json());
    }
    Ok((json!({"n": n, "r": coeffs}), text))
}
