use std::io::Read;
use std::path::Path;

use serde_json::{json, Value};
use skein_core::convert::{arrow_to_classical, classical_to_arrow, mixed_to_classical, ClassicalDiagram, MixedDiagram};
use skein_core::kbsm::SlideSense;
use skein_core::{parse_morse, MorseWord};

use crate::error::CliError;

/// Reads `path`, or standard input for `-`.
pub fn read_input(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Arrow,
    Classical,
    Mixed,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Arrow => "arrow",
            Format::Classical => "classical",
            Format::Mixed => "mixed",
        }
    }
}

/// A parsed diagram in any of the three pictures.
pub enum Diagram {
    Arrow(MorseWord),
    Classical(ClassicalDiagram),
    Mixed(MixedDiagram),
}

impl Diagram {
    pub fn parse(text: &str, format: Format) -> Result<Self, CliError> {
        Ok(match format {
            Format::Arrow => Diagram::Arrow(parse_morse(text)?),
            Format::Classical => Diagram::Classical(ClassicalDiagram::parse(text)?),
            Format::Mixed => Diagram::Mixed(MixedDiagram::parse(text)?),
        })
    }

    pub fn to_classical(&self) -> Result<ClassicalDiagram, CliError> {
        Ok(match self {
            Diagram::Arrow(w) => arrow_to_classical(w),
            Diagram::Classical(c) => c.clone(),
            Diagram::Mixed(m) => mixed_to_classical(m)?,
        })
    }

    pub fn to_arrow(&self) -> Result<MorseWord, CliError> {
        Ok(match self {
            Diagram::Arrow(w) => w.clone(),
            other => classical_to_arrow(&other.to_classical()?),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Manifold {
    Torus,
    Lens(u32),
}

impl Manifold {
    /// Parses `torus` or `lens:p`; `p = 0` is a validation error.
    pub fn parse(s: &str) -> Result<Self, CliError> {
        if s == "torus" {
            return Ok(Manifold::Torus);
        }
        let p = s
            .strip_prefix("lens:")
            .and_then(|p| p.parse::<u32>().ok())
            .ok_or_else(|| CliError::Parse(format!("manifold `{s}`: expected `torus` or `lens:p`")))?;
        if p == 0 {
            return Err(CliError::Validation("lens:p needs p >= 1".into()));
        }
        Ok(Manifold::Lens(p))
    }

    pub fn to_json(self) -> Value {
        match self {
            Manifold::Torus => json!({"kind": "torus"}),
            Manifold::Lens(p) => json!({"kind": "lens", "p": p}),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Sense {
    #[default]
    Ccw,
    Cw,
}

impl From<Sense> for SlideSense {
    fn from(s: Sense) -> Self {
        match s {
            Sense::Ccw => SlideSense::Ccw,
            Sense::Cw => SlideSense::Cw,
        }
    }
}
