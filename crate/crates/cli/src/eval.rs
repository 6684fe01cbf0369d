use std::path::PathBuf;

use clap::Args;
use serde_json::{json, Value};
use skein_core::kbsm::{eval_lens_with, eval_torus_with_cap, SlideSense};

use crate::input::{read_input, Diagram, Format, Manifold, Sense};
use crate::{CommandResult, Common};

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// `torus` or `lens:p`.
    #[arg(long, default_value = "torus")]
    manifold: String,
    /// Input file, `-` for standard input.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Picture the input is drawn in.
    #[arg(long, value_enum, default_value_t = Format::Arrow)]
    from: Format,
    /// Direction of the arrows added by a lens slide.
    #[arg(long, value_enum, default_value_t = Sense::Ccw)]
    sense: Sense,
}

pub fn config(a: &EvalArgs, c: &Common) -> Value {
    json!({
        "manifold": a.manifold,
        "input": a.input.display().to_string(),
        "from": a.from.name(),
        "sense": SlideSense::from(a.sense).name(),
        "crossing_cap": c.cap(),
    })
}

pub fn run(a: &EvalArgs, c: &Common) -> CommandResult {
    let manifold = Manifold::parse(&a.manifold)?;
    let word = Diagram::parse(&read_input(&a.input)?, a.from)?.to_arrow()?;
    let (value, basis) = match manifold {
        Manifold::Torus => (eval_torus_with_cap(&word, c.cap())?, "x^n, n >= 0".to_string()),
        Manifold::Lens(p) => {
            (eval_lens_with(&word, p, a.sense.into(), c.cap())?, format!("x^n, 0 <= n <= {}", p / 2))
        }
    };
    let text = format!("{value}\n");
    let result = json!({
        "manifold": manifold.to_json(),
        "basis": basis,
        "crossings": word.crossing_count(),
        "arrows": word.arrow_count(),
        "value": value.to_json(),
        "text": value.to_string(),
    });
    Ok((result, text))
}
