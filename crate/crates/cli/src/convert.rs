use std::path::PathBuf;

use clap::Args;
use serde_json::{json, Value};
use skein_core::convert::classical_to_mixed;

use crate::error::CliError;
use crate::input::{read_input, Diagram, Format};
use crate::{CommandResult, Common};

#[derive(Args, Debug)]
pub struct ConvertArgs {
    #[arg(long, value_enum)]
    from: Format,
    #[arg(long, value_enum)]
    to: Format,
    /// Input file, `-` for standard input.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// For a mixed output: record that surgery on the fixed component gives `L(P,Q)`.
    #[arg(long, value_name = "P/Q")]
    surgery: Option<String>,
}

pub fn config(a: &ConvertArgs, _c: &Common) -> Value {
    json!({
        "from": a.from.name(),
        "to": a.to.name(),
        "input": a.input.display().to_string(),
        "surgery": a.surgery,
    })
}

/// `P/Q` as the stored pair `(Q, P)`.
fn parse_surgery(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Parse(format!("surgery `{s}`: expected P/Q"));
    let (p, q) = s.split_once('/').ok_or_else(bad)?;
    let (p, q) = (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
    Ok((q, p))
}

pub fn run(a: &ConvertArgs, _c: &Common) -> CommandResult {
    let surgery = a.surgery.as_deref().map(parse_surgery).transpose()?;
    let diagram = Diagram::parse(&read_input(&a.input)?, a.from)?;
    let output = match (a.to, &diagram) {
        (Format::Arrow, _) => diagram.to_arrow()?.render(),
        (Format::Classical, _) => diagram.to_classical()?.render(),
        (Format::Mixed, Diagram::Mixed(m)) if surgery.is_none() => m.render(),
        (Format::Mixed, _) => classical_to_mixed(&diagram.to_classical()?, surgery).render(),
    };
    let mut text = output.clone();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok((json!({"from": a.from.name(), "to": a.to.name(), "diagram": output}), text))
}
