//! The four commands. Each returns its rendered output and an exit code;
//! nothing here touches stdout directly.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::json;
use zerodiv::export::{export, VertexLabel};
use zerodiv::linalg::{numeric_spectrum, IntMatrix, Method};
use zerodiv::spectra::{
    closed_form, gamma_char_poly, quadratic_hints, spectrum_exact_matrix, ClosedFormGraph, ExactSpectrum,
};
use zerodiv::verify::{self, ClaimResult, Report, Scope, VerifyOptions, NUMERIC_TOL, SCHEMA_VERSION};
use zerodiv::{
    all_classes, build_gamma, build_h, build_subgraph, Error, FieldSpec, Graph, LoopPolicy,
    SpectrumMultiset,
};

use crate::config::{Command, GraphChoice, OutputFormat, RunConfig};
use crate::exit;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    /// Text for stdout.
    pub stdout: String,
    /// Text for stderr.
    pub stderr: String,
}

impl Outcome {
    fn ok(code: u8, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: u8, message: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Exit code for a library error.
pub fn error_code(e: &Error) -> u8 {
    match e {
        Error::NonPrimeCharacteristic(_)
        | Error::NotPrimePower(_)
        | Error::ReducibleModulus { .. }
        | Error::InvalidModulus(_)
        | Error::UnsupportedOrder { .. }
        | Error::FieldSyntax(_) => exit::BAD_FIELD,
        Error::OutOfDomain { .. } | Error::EmptySubgraph(_) | Error::DimensionTooLarge { .. } => exit::OUT_OF_DOMAIN,
        _ => exit::CLAIM_FAILED,
    }
}

pub fn execute(cfg: &RunConfig) -> Outcome {
    let f = cfg.field_spec();
    let result = match &cfg.command {
        Command::Classify => classify(cfg, &f),
        Command::Spectrum { graph } => spectrum(cfg, &f, *graph),
        Command::Verify { scope } => run_verify(cfg, &f, *scope),
        Command::Export { graph, format } => {
            return match export_graph(&f, *graph, *format) {
                Ok(text) => deliver(cfg, exit::OK, text, |p| format!("wrote {}\n", p.display())),
                Err(e) => Outcome::error(error_code(&e), e),
            }
        }
    };
    match result {
        Ok((code, text)) => deliver(cfg, code, text, |p| format!("report written to {}\n", p.display())),
        Err(e) => Outcome::error(error_code(&e), e),
    }
}

/// Writes `text` to `--out` when given, otherwise hands it to stdout.
fn deliver(cfg: &RunConfig, code: u8, text: String, summary: impl Fn(&Path) -> String) -> Outcome {
    match &cfg.out {
        None => Outcome::ok(code, text),
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome::ok(code, summary(path)),
            Err(e) => Outcome::error(exit::UNWRITABLE, format!("cannot write {}: {e}", path.display())),
        },
    }
}

fn field_title(f: &FieldSpec) -> String {
    format!("GF({})", f.order())
}

fn classify(cfg: &RunConfig, f: &FieldSpec) -> zerodiv::Result<(u8, String)> {
    let classes = all_classes(f)?;
    let n = f.n() as usize;
    let members: usize = classes.iter().map(|c| c.size()).sum();
    let ok = classes.len() == (n + 2) * (n + 2) && members == n * (n + 2) * (n + 2) && classes.iter().all(|c| c.size() == n);
    let code = if ok { exit::OK } else { exit::CLAIM_FAILED };
    let text = match cfg.output {
        OutputFormat::Json => {
            let rows: Vec<_> = classes
                .iter()
                .map(|c| {
                    json!({
                        "representative": c.representative.label(f),
                        "tag": c.representative.tag(),
                        "parameters": c.representative.parameters().iter().map(|&p| f.format(p)).collect::<Vec<_>>(),
                        "size": c.size(),
                        "members": c.members.iter().map(|m| m.render(f)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "field": f.canonical_string(),
                "zero_divisors": members,
                "class_count": classes.len(),
                "counts_match": ok,
                "classes": rows,
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        OutputFormat::Text => {
            let mut s = format!(
                "{}: {} zero-divisors in {} classes\n",
                field_title(f),
                members,
                classes.len()
            );
            let _ = writeln!(s, "{:>4}  {:<6} {:<12} {:>4}  representative", "#", "tag", "parameters", "size");
            for (i, c) in classes.iter().enumerate() {
                let params: Vec<String> = c.representative.parameters().iter().map(|&p| f.format(p)).collect();
                let _ = writeln!(
                    s,
                    "{:>4}  {:<6} {:<12} {:>4}  {}",
                    i + 1,
                    c.representative.tag(),
                    params.join(","),
                    c.size(),
                    c.representative.label(f)
                );
            }
            s
        }
    };
    Ok((code, text))
}

/// Graph for `choice`, rendered down to what the spectral code needs.
struct Built {
    adjacency: IntMatrix,
    order: usize,
    edges: usize,
    loops: usize,
}

impl Built {
    fn from_graph<L>(g: &Graph<L>) -> Self {
        Self {
            adjacency: g.adjacency_matrix(),
            order: g.order(),
            edges: g.edge_count(),
            loops: g.loop_count(),
        }
    }
}

fn closed_form_target(choice: GraphChoice) -> Option<ClosedFormGraph> {
    match choice {
        GraphChoice::H => Some(ClosedFormGraph::H),
        GraphChoice::Sub(s) => Some(ClosedFormGraph::Sub(s)),
        GraphChoice::Gamma | GraphChoice::HSimple => None,
    }
}

fn build(f: &FieldSpec, choice: GraphChoice) -> zerodiv::Result<Built> {
    Ok(match choice {
        GraphChoice::Gamma => Built::from_graph(&build_gamma(f)?),
        GraphChoice::H => Built::from_graph(&build_h(f, LoopPolicy::LoopsAllowed)),
        GraphChoice::HSimple => Built::from_graph(&build_h(f, LoopPolicy::Simple)),
        GraphChoice::Sub(s) => Built::from_graph(&build_subgraph(f, s)?),
    })
}

fn spectrum(cfg: &RunConfig, f: &FieldSpec, choice: GraphChoice) -> zerodiv::Result<(u8, String)> {
    let n = f.n();
    let target = closed_form_target(choice);
    if let Some(t) = target {
        if n < t.min_n() {
            return Err(Error::OutOfDomain {
                what: format!("closed form of {}", t.name()),
                n,
            });
        }
    }
    let g = build(f, choice)?;
    if g.order > cfg.exact_cap {
        return Err(Error::DimensionTooLarge {
            dim: g.order,
            cap: cfg.exact_cap,
        });
    }
    let hints = target.map_or_else(Vec::new, |t| quadratic_hints(t, n));
    let name = choice.name();
    let field = f.canonical_string();
    let claim = |id: &str, expected: String, computed: String, method: Method, pass: bool, note: Option<String>| ClaimResult {
        claim: format!("spectrum.{name}.{id}"),
        field: field.clone(),
        graph: name.into(),
        expected,
        computed,
        method,
        pass,
        note,
    };

    let mut results = Vec::new();
    let exact: Option<ExactSpectrum> = match spectrum_exact_matrix(&g.adjacency, &hints, cfg.seed) {
        Ok(s) => Some(s),
        Err(Error::UnresolvedFactor { .. }) => None,
        Err(e) => return Err(e),
    };
    let printed = target.map(|t| closed_form(t, n)).transpose()?;
    let mut text = format!(
        "{name} over {}: {} vertices, {} edges, {} loops\n",
        field_title(f),
        g.order,
        g.edges,
        g.loops
    );
    match &exact {
        Some(ex) => {
            let _ = writeln!(text, "spectrum ({}): {}", ex.method.as_str(), ex.spectrum);
            let _ = writeln!(
                text,
                "numeric check: residual {:.1e}, largest gap {:.1e}",
                ex.numeric_residual, ex.numeric_gap
            );
            results.push(claim(
                "exact",
                format!("{} eigenvalues", g.order),
                ex.spectrum.to_string(),
                ex.method,
                ex.spectrum.total() == g.order,
                None,
            ));
            let agree = ex.numeric_gap <= NUMERIC_TOL && ex.numeric_residual <= NUMERIC_TOL;
            results.push(claim(
                "numeric-agreement",
                format!("gap <= {NUMERIC_TOL:e}"),
                if agree { format!("within {NUMERIC_TOL:e}") } else { format!("gap {:.3e}", ex.numeric_gap) },
                Method::Numeric,
                agree,
                None,
            ));
            if let Some(p) = &printed {
                let ok = &ex.spectrum == p;
                let _ = writeln!(text, "closed form: {p} ({})", if ok { "matches" } else { "differs" });
                let note = (!ok).then(|| diff_note(p, &ex.spectrum));
                if let Some(d) = &note {
                    let _ = writeln!(text, "  {d}");
                }
                results.push(claim("closed-form", p.to_string(), ex.spectrum.to_string(), ex.method, ok, note));
            }
        }
        None => {
            let values = numeric_spectrum(&g.adjacency)?;
            let listed: Vec<String> = values.iter().map(|v| format!("{v:.6}")).collect();
            let _ = writeln!(text, "spectrum (numeric, no exact factorization): {}", listed.join(", "));
            results.push(claim(
                "exact",
                format!("{} eigenvalues", g.order),
                listed.join(", "),
                Method::Numeric,
                false,
                Some("some eigenvalue is neither an integer nor a quadratic surd".into()),
            ));
        }
    }
    if choice == GraphChoice::Gamma && f.order() == 2 {
        let got = gamma_char_poly(f)?;
        let want = verify::gf2_example_poly();
        let ok = got == want;
        let _ = writeln!(text, "characteristic polynomial: {got} ({})", if ok { "matches the worked example" } else { "differs from the worked example" });
        results.push(claim("example", want.to_string(), got.to_string(), Method::Exact, ok, None));
    }
    results.sort_by(|a, b| a.claim.cmp(&b.claim));
    let out = match cfg.output {
        OutputFormat::Text => text,
        OutputFormat::Json => render_json(&Report {
            schema_version: SCHEMA_VERSION,
            field,
            scope: Scope::Spectra,
            seed: cfg.seed,
            results,
        }),
    };
    Ok((exit::OK, out))
}

fn diff_note(printed: &SpectrumMultiset, computed: &SpectrumMultiset) -> String {
    let diffs: Vec<String> = printed
        .differences(computed)
        .iter()
        .map(|(v, p, c)| format!("{v}: closed form {p}, computed {c}"))
        .collect();
    diffs.join("; ")
}

fn render_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("serializable") + "\n"
}

fn run_verify(cfg: &RunConfig, f: &FieldSpec, scope: Scope) -> zerodiv::Result<(u8, String)> {
    let opts = VerifyOptions {
        seed: cfg.seed,
        exact_cap: cfg.exact_cap,
        ..VerifyOptions::default()
    };
    let report = verify::run(f, scope, opts)?;
    let code = if report.pass() { exit::OK } else { exit::CLAIM_FAILED };
    let text = match cfg.output {
        OutputFormat::Json => render_json(&report),
        OutputFormat::Text => {
            let mut s = String::new();
            for r in &report.results {
                let _ = writeln!(
                    s,
                    "{} {}: expected {}; computed {} ({})",
                    if r.pass { "pass" } else { "FAIL" },
                    r.claim,
                    r.expected,
                    r.computed,
                    r.method.as_str()
                );
                if let Some(note) = &r.note {
                    let _ = writeln!(s, "     note: {note}");
                }
            }
            let failed = report.failures().count();
            let _ = writeln!(
                s,
                "{}: {} claims, {} failed",
                field_title(f),
                report.results.len(),
                failed
            );
            s
        }
    };
    Ok((code, text))
}

fn export_graph(f: &FieldSpec, choice: GraphChoice, format: zerodiv::export::ExportFormat) -> zerodiv::Result<String> {
    let name = format!("{}_GF{}", choice.name().replace('-', "_"), f.order());
    Ok(match choice {
        GraphChoice::Gamma => export(&build_gamma(f)?, f, format, &name),
        GraphChoice::H => export(&build_h(f, LoopPolicy::LoopsAllowed), f, format, &name),
        GraphChoice::HSimple => export(&build_h(f, LoopPolicy::Simple), f, format, &name),
        GraphChoice::Sub(s) => export(&build_subgraph(f, s)?, f, format, &name),
    })
}
