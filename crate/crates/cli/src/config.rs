//! Parsed run configuration with a canonical one-line form.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use zerodiv::export::ExportFormat;
use zerodiv::verify::Scope;
use zerodiv::{FieldSpec, Subgraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphChoice {
    Gamma,
    /// H with a loop at every nilpotent representative.
    H,
    HSimple,
    Sub(Subgraph),
}

impl GraphChoice {
    pub const ALL: [GraphChoice; 7] = [
        Self::Gamma,
        Self::H,
        Self::HSimple,
        Self::Sub(Subgraph::H1),
        Self::Sub(Subgraph::H2),
        Self::Sub(Subgraph::H3),
        Self::Sub(Subgraph::H4),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Gamma => "gamma",
            Self::H => "H",
            Self::HSimple => "H-simple",
            Self::Sub(s) => s.name(),
        }
    }
}

impl fmt::Display for GraphChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| format!("unknown graph {s:?} (expected gamma, H, H-simple, H1..H4)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            Self::Text => "text",
            Self::Json => "json",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            _ => Err(format!("unknown output format {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Classify,
    Spectrum { graph: GraphChoice },
    Verify { scope: Scope },
    Export { graph: GraphChoice, format: ExportFormat },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Classify => "classify",
            Self::Spectrum { .. } => "spectrum",
            Self::Verify { .. } => "verify",
            Self::Export { .. } => "export",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Canonical field string, already validated.
    pub field: String,
    pub command: Command,
    pub output: OutputFormat,
    pub out: Option<PathBuf>,
    pub exact_cap: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigError {
    Field(zerodiv::Error),
    Syntax(String),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Field(e) => write!(f, "invalid field: {e}"),
            Self::Syntax(s) => f.write_str(s),
        }
    }
}

impl std::error::Error for ConfigError {}

/// Backslash-escapes spaces and backslashes so values survive splitting.
fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        if c == ' ' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out
}

/// Splits on unescaped spaces and removes the escapes.
fn split_escaped(s: &str) -> Result<Vec<String>, ConfigError> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        match c {
            '\\' => cur.push(
                chars
                    .next()
                    .ok_or_else(|| ConfigError::Syntax("dangling escape".into()))?,
            ),
            ' ' => tokens.push(std::mem::take(&mut cur)),
            _ => cur.push(c),
        }
    }
    tokens.push(cur);
    Ok(tokens)
}

impl RunConfig {
    /// Validates the field and stores its canonical form.
    pub fn new(field: &str, command: Command) -> Result<Self, ConfigError> {
        let spec = FieldSpec::parse(field).map_err(ConfigError::Field)?;
        Ok(Self {
            field: spec.canonical_string(),
            command,
            output: OutputFormat::Text,
            out: None,
            exact_cap: zerodiv::linalg::EXACT_CAP,
            seed: zerodiv::linalg::DEFAULT_SEED,
        })
    }

    pub fn field_spec(&self) -> FieldSpec {
        FieldSpec::parse(&self.field).expect("validated at construction")
    }

    /// One line of `key=value` pairs in a fixed order.
    pub fn canonical_string(&self) -> String {
        let mut parts = vec![format!("command={}", self.command.name()), format!("field={}", escape(&self.field))];
        match &self.command {
            Command::Classify => {}
            Command::Spectrum { graph } => parts.push(format!("graph={graph}")),
            Command::Verify { scope } => parts.push(format!("scope={scope}")),
            Command::Export { graph, format } => {
                parts.push(format!("graph={graph}"));
                parts.push(format!("format={}", format.name()));
            }
        }
        parts.push(format!("output={}", self.output.name()));
        if let Some(p) = &self.out {
            parts.push(format!("out={}", escape(&p.to_string_lossy())));
        }
        parts.push(format!("exact-cap={}", self.exact_cap));
        parts.push(format!("seed={}", self.seed));
        parts.join(" ")
    }

    /// Inverse of [`RunConfig::canonical_string`].
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut kv = std::collections::BTreeMap::new();
        for tok in split_escaped(text)? {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| ConfigError::Syntax(format!("expected key=value, got {tok:?}")))?;
            if kv.insert(k.to_string(), v.to_string()).is_some() {
                return Err(ConfigError::Syntax(format!("duplicate key {k:?}")));
            }
        }
        let mut take = |k: &str| {
            kv.remove(k)
                .ok_or_else(|| ConfigError::Syntax(format!("missing key {k:?}")))
        };
        let syntax = ConfigError::Syntax;
        let command_name = take("command")?;
        let field = take("field")?;
        let command = match command_name.as_str() {
            "classify" => Command::Classify,
            "spectrum" => Command::Spectrum {
                graph: take("graph")?.parse().map_err(syntax)?,
            },
            "verify" => Command::Verify {
                scope: take("scope")?.parse().map_err(syntax)?,
            },
            "export" => Command::Export {
                graph: take("graph")?.parse().map_err(syntax)?,
                format: take("format")?.parse().map_err(syntax)?,
            },
            other => return Err(ConfigError::Syntax(format!("unknown command {other:?}"))),
        };
        let output = take("output")?.parse().map_err(syntax)?;
        let exact_cap = take("exact-cap")?
            .parse()
            .map_err(|e| ConfigError::Syntax(format!("exact-cap: {e}")))?;
        let seed = take("seed")?
            .parse()
            .map_err(|e| ConfigError::Syntax(format!("seed: {e}")))?;
        let out = kv.remove("out").map(PathBuf::from);
        if let Some(k) = kv.keys().next() {
            return Err(ConfigError::Syntax(format!("unknown key {k:?}")));
        }
        let mut cfg = Self::new(&field, command)?;
        if cfg.field != field {
            return Err(ConfigError::Syntax(format!("field {field:?} is not in canonical form")));
        }
        cfg.output = output;
        cfg.out = out;
        cfg.exact_cap = exact_cap;
        cfg.seed = seed;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut cfg = RunConfig::new(
            "4",
            Command::Export {
                graph: GraphChoice::HSimple,
                format: ExportFormat::MatrixMarket,
            },
        )
        .unwrap();
        cfg.out = Some(PathBuf::from("/tmp/a dir/x\\y.mtx"));
        let s = cfg.canonical_string();
        assert_eq!(RunConfig::parse(&s).unwrap(), cfg);
        assert_eq!(RunConfig::parse(&s).unwrap().canonical_string(), s);
    }

    #[test]
    fn rejects_bad_field() {
        assert!(matches!(RunConfig::new("6", Command::Classify), Err(ConfigError::Field(_))));
    }
}
