//! Verification suites and the JSON report they produce.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::builder::{build_gamma, build_h, build_subgraph, class_induced_graph, Subgraph};
use crate::classify::all_classes;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::{complete, cycle, generalized_join, null, Graph, LoopPolicy};
use crate::linalg::{
    assemble_block_matrix, block_structured_det, determinant, numeric_eigen, numeric_spectrum, symmetric_eigen,
    CharPoly, IntMatrix, Method, DEFAULT_SEED, EXACT_CAP,
};
use crate::relations::check_relations;
use crate::ring::zero_divisors;
use crate::spectra::{
    check_fixed_part, closed_form, gamma_char_poly, gamma_spectrum_via_join, join_adjacency_spectrum,
    join_laplacian_spectrum, join_laplacian_spectrum_with, quadratic_hints, spectrum_exact_with_hints,
    verify_bounds, weyl_interval_f64, ClosedFormGraph, CorollaryVariant, JoinInput, LaplacianSign,
};
use crate::templates::template_graph;

pub const SCHEMA_VERSION: u32 = 1;

/// Tolerance for numeric spectrum comparisons.
pub const NUMERIC_TOL: f64 = 1e-8;

/// Largest dimension handed to the dense numeric eigensolver.
pub const NUMERIC_CAP: usize = 1200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    All,
    Counts,
    Regularity,
    Relations,
    Templates,
    Spectra,
    Join,
    Corollary,
    Bounds,
}

impl Scope {
    pub const SUITES: [Scope; 8] = [
        Self::Counts,
        Self::Regularity,
        Self::Relations,
        Self::Templates,
        Self::Spectra,
        Self::Join,
        Self::Corollary,
        Self::Bounds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::All => "all",
            Self::Counts => "counts",
            Self::Regularity => "regularity",
            Self::Relations => "relations",
            Self::Templates => "templates",
            Self::Spectra => "spectra",
            Self::Join => "join",
            Self::Corollary => "corollary",
            Self::Bounds => "bounds",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        std::iter::once(Self::All)
            .chain(Self::SUITES)
            .find(|sc| sc.name() == s)
            .ok_or_else(|| format!("unknown scope {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    pub field: String,
    pub graph: String,
    pub expected: String,
    pub computed: String,
    pub method: Method,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub field: String,
    pub scope: Scope,
    pub seed: u64,
    pub results: Vec<ClaimResult>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.results.iter().filter(|r| !r.pass)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    pub exact_cap: usize,
    /// Instances per randomized suite.
    pub random_trials: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            exact_cap: EXACT_CAP,
            random_trials: 100,
        }
    }
}

struct Ctx<'a> {
    f: &'a FieldSpec,
    opts: VerifyOptions,
    out: Vec<ClaimResult>,
}

impl Ctx<'_> {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        claim: impl Into<String>,
        graph: &str,
        expected: impl ToString,
        computed: impl ToString,
        method: Method,
        pass: bool,
        note: Option<String>,
    ) {
        self.out.push(ClaimResult {
            claim: claim.into(),
            field: self.f.canonical_string(),
            graph: graph.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            method,
            pass,
            note,
        });
    }

    fn n(&self) -> u32 {
        self.f.n()
    }
}

/// Runs the suites selected by `scope`; results are sorted by claim id.
pub fn run(f: &FieldSpec, scope: Scope, opts: VerifyOptions) -> Result<Report> {
    let mut ctx = Ctx {
        f,
        opts,
        out: Vec::new(),
    };
    let suites: Vec<Scope> = match scope {
        Scope::All => Scope::SUITES.to_vec(),
        s => vec![s],
    };
    for s in suites {
        match s {
            Scope::Counts => counts(&mut ctx)?,
            Scope::Regularity => regularity(&mut ctx),
            Scope::Relations => relations(&mut ctx),
            Scope::Templates => templates(&mut ctx)?,
            Scope::Spectra => spectra(&mut ctx)?,
            Scope::Join => join(&mut ctx)?,
            Scope::Corollary => corollary(&mut ctx)?,
            Scope::Bounds => bounds(&mut ctx)?,
            Scope::All => unreachable!(),
        }
    }
    ctx.out.sort_by(|a, b| a.claim.cmp(&b.claim));
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        field: f.canonical_string(),
        scope,
        seed: opts.seed,
        results: ctx.out,
    })
}

/// Stable rendering of a numeric discrepancy.
fn fmt_gap(label: &str, gap: f64) -> String {
    if gap <= NUMERIC_TOL {
        format!("{label} within {NUMERIC_TOL:e}")
    } else {
        format!("{label} {gap:.3e}")
    }
}

/// Six decimals with negative zero folded into zero.
fn fmt_value(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" { "0.000000".into() } else { s }
}

fn counts(c: &mut Ctx) -> Result<()> {
    let n = c.n() as usize;
    let z = zero_divisors(c.f)?.len();
    c.push("counts.zero-divisors", "Z", n * (n + 2) * (n + 2), z, Method::Exact, z == n * (n + 2) * (n + 2), None);
    let classes = all_classes(c.f)?;
    let want = (n + 2) * (n + 2);
    c.push("counts.classes", "Z", want, classes.len(), Method::Exact, classes.len() == want, None);
    let sizes_ok = classes.iter().all(|k| k.size() == n);
    let sizes: Vec<usize> = classes.iter().map(|k| k.size()).collect();
    let (lo, hi) = (sizes.iter().min().copied().unwrap_or(0), sizes.iter().max().copied().unwrap_or(0));
    c.push(
        "counts.class-size",
        "Z",
        format!("all {n}"),
        if lo == hi { format!("all {lo}") } else { format!("{lo}..{hi}") },
        Method::Exact,
        sizes_ok,
        None,
    );
    let nil = classes.iter().filter(|k| k.representative.is_nilpotent()).count();
    c.push("counts.nilpotent-classes", "Z", n + 2, nil, Method::Exact, nil == n + 2, None);
    Ok(())
}

fn regularity(c: &mut Ctx) {
    let n = c.n() as usize;
    let h = build_h(c.f, LoopPolicy::LoopsAllowed);
    let r = h.regularity();
    c.push(
        "regularity.H",
        "H",
        format!("{}-regular", 2 * n + 3),
        r.map_or("not regular".into(), |d| format!("{d}-regular")),
        Method::Exact,
        r == Some(2 * n + 3),
        None,
    );
    let s = build_h(c.f, LoopPolicy::Simple);
    let ok = s.labels().iter().enumerate().all(|(i, form)| {
        s.degree(i) == if form.is_nilpotent() { 2 * n + 2 } else { 2 * n + 3 }
    });
    c.push(
        "regularity.H-simple",
        "H-simple",
        format!("nilpotent degree {}, idempotent degree {}", 2 * n + 2, 2 * n + 3),
        if ok { "as expected".to_string() } else { "degree mismatch".to_string() },
        Method::Exact,
        ok,
        None,
    );
}

fn relations(c: &mut Ctx) {
    for row in check_relations(c.f) {
        c.push(
            format!("relations.{:02}", row.id),
            "H",
            format!("{}: holds on all {} cases", row.statement, row.checked),
            format!("{} failures", row.failures),
            Method::Exact,
            row.pass(),
            (row.checked == 0).then(|| "no admissible parameters; holds vacuously".to_string()),
        );
    }
}

fn templates(c: &mut Ctx) -> Result<()> {
    let n = c.n() as usize;
    for which in Subgraph::ALL {
        if which.order(n) == 0 {
            continue;
        }
        let g = build_subgraph(c.f, which)?;
        let t = template_graph(which, n);
        let ok = g.same_adjacency(&t);
        c.push(
            format!("templates.{which}"),
            which.name(),
            "block template adjacency",
            if ok { "identical" } else { "differs" },
            Method::Exact,
            ok,
            None,
        );
    }
    Ok(())
}

/// Characteristic polynomial of Γ over GF(2) as given by the worked example.
pub fn gf2_example_poly() -> CharPoly {
    CharPoly::from_factors([
        (&CharPoly::linear(1), 1),
        (&CharPoly::quadratic(3, -8), 1),
        (&CharPoly::linear(-2), 2),
        (&CharPoly::quadratic(0, -2), 2),
    ])
}

fn spectra(c: &mut Ctx) -> Result<()> {
    let n = c.n();
    if c.f.order() == 2 {
        let got = gamma_char_poly(c.f)?;
        let want = gf2_example_poly();
        c.push("spectra.gamma.example", "gamma", &want, &got, Method::Exact, got == want, None);
    }
    for which in ClosedFormGraph::ALL {
        if n < which.min_n() {
            continue;
        }
        let g = match which {
            ClosedFormGraph::H => build_h(c.f, LoopPolicy::LoopsAllowed),
            ClosedFormGraph::Sub(s) => build_subgraph(c.f, s)?,
        };
        if g.order() > c.opts.exact_cap {
            return Err(Error::DimensionTooLarge {
                dim: g.order(),
                cap: c.opts.exact_cap,
            });
        }
        let printed = closed_form(which, n)?;
        let exact = spectrum_exact_with_hints(&g, &quadratic_hints(which, n))?;
        let ok = exact.spectrum == printed;
        let note = (!ok).then(|| {
            let diffs: Vec<String> = printed
                .differences(&exact.spectrum)
                .iter()
                .map(|(v, p, e)| format!("{v}: printed {p}, computed {e}"))
                .collect();
            format!("printed total {}, order {}; {}", printed.total(), g.order(), diffs.join("; "))
        });
        let name = which.name();
        c.push(format!("spectra.{name}.closed-form"), name, &printed, &exact.spectrum, exact.method, ok, note);

        let trace = exact.spectrum.trace();
        let loops = g.loop_count();
        let trace_ok = trace == Some(num_rational::BigRational::from_integer(loops.into()));
        c.push(
            format!("spectra.{name}.trace"),
            name,
            loops,
            trace.map_or("unpaired surd".into(), |t| t.to_string()),
            exact.method,
            trace_ok,
            None,
        );
        c.push(
            format!("spectra.{name}.numeric-agreement"),
            name,
            format!("gap <= {NUMERIC_TOL:e}, residual <= {NUMERIC_TOL:e}"),
            format!("{}, {}", fmt_gap("gap", exact.numeric_gap), fmt_gap("residual", exact.numeric_residual)),
            Method::Numeric,
            exact.numeric_gap <= NUMERIC_TOL && exact.numeric_residual <= NUMERIC_TOL,
            None,
        );
        if matches!(which, ClosedFormGraph::Sub(Subgraph::H1 | Subgraph::H2)) {
            let sym = exact.spectrum.is_symmetric_about_zero();
            let bip = g.is_bipartite();
            c.push(
                format!("spectra.{name}.bipartite"),
                name,
                "spectrum symmetric about 0 and graph bipartite",
                format!("symmetric: {sym}, bipartite: {bip}"),
                Method::Exact,
                sym && bip,
                (g.loop_count() > 0).then(|| format!("{} loops at nilpotent vertices", g.loop_count())),
            );
        }
    }
    block_det_trials(c);
    Ok(())
}

fn random_int_matrix(rng: &mut ChaCha8Rng, k: usize) -> IntMatrix {
    IntMatrix::from_fn(k, |_, _| BigInt::from(rng.gen_range(-3i64..=3)))
}

fn block_det_trials(c: &mut Ctx) {
    let mut rng = ChaCha8Rng::seed_from_u64(c.opts.seed ^ 0xb10c);
    let trials = c.opts.random_trials * 2;
    let mut bad = 0;
    for _ in 0..trials {
        let k = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=4);
        let cm = random_int_matrix(&mut rng, k);
        let bm = random_int_matrix(&mut rng, k);
        if block_structured_det(&cm, &bm, m) != determinant(&assemble_block_matrix(&cm, &bm, m)) {
            bad += 1;
        }
    }
    c.push(
        "spectra.block-determinant",
        "-",
        format!("closed form equals direct determinant on {trials} instances"),
        format!("{bad} mismatches"),
        Method::Exact,
        bad == 0,
        None,
    );
}

fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn dense_values(a: &IntMatrix) -> Result<Vec<f64>> {
    Ok(symmetric_eigen(&a.to_f64(), a.dim())?.values)
}

fn random_regular(rng: &mut ChaCha8Rng) -> Graph<usize> {
    let m = rng.gen_range(1..=4);
    match rng.gen_range(0..3) {
        0 => complete(m),
        1 => null(m),
        _ if m >= 3 => cycle(m),
        _ => complete(m),
    }
}

/// Random joins: formula spectra against direct eigensolves. Returns the
/// number of failures for the adjacency and Laplacian formulas.
pub fn random_join_trials(seed: u64, trials: usize) -> Result<(usize, usize, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut bad_a, mut bad_l, mut worst) = (0, 0, 0.0f64);
    for _ in 0..trials {
        let m = rng.gen_range(1..=4);
        let mut k = Graph::empty((0..m).collect::<Vec<usize>>(), LoopPolicy::Simple);
        for i in 0..m {
            for j in i + 1..m {
                k.set_edge(i, j, rng.gen_bool(0.5));
            }
        }
        let family: Vec<Graph<usize>> = (0..m).map(|_| random_regular(&mut rng)).collect();
        let joined = generalized_join(&k, &family)?;
        let input = JoinInput::from_graphs(&k, &family)?;
        let ga = max_gap(&join_adjacency_spectrum(&input)?.values, &dense_values(&joined.adjacency_matrix())?);
        let gl = max_gap(&join_laplacian_spectrum(&input)?.values, &dense_values(&joined.laplacian_matrix())?);
        bad_a += usize::from(ga > NUMERIC_TOL);
        bad_l += usize::from(gl > NUMERIC_TOL);
        worst = worst.max(ga).max(gl);
    }
    Ok((bad_a, bad_l, worst))
}

fn join(c: &mut Ctx) -> Result<()> {
    let gamma = build_gamma(c.f)?;
    let classes = all_classes(c.f)?;
    let family: Vec<_> = classes.iter().map(class_induced_graph).collect();
    let k = build_h(c.f, LoopPolicy::Simple);
    let joined = generalized_join(&k, &family)?;
    let pos: std::collections::HashMap<_, _> = gamma.labels().iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let order: Vec<usize> = joined.labels().iter().map(|m| pos[m]).collect();
    let ok = gamma.induced(&order).same_adjacency(&joined);
    c.push(
        "join.reconstruction",
        "gamma",
        "join of class graphs over H equals gamma",
        if ok { "identical" } else { "differs" },
        Method::Exact,
        ok,
        None,
    );

    if gamma.order() <= NUMERIC_CAP {
        let input = JoinInput::from_graphs(&k, &family)?;
        let adj = join_adjacency_spectrum(&input)?;
        let direct = numeric_spectrum(&gamma.adjacency_matrix())?;
        let gap = max_gap(&adj.values, &direct);
        c.push(
            "join.adjacency-formula",
            "gamma",
            format!("gap <= {NUMERIC_TOL:e}"),
            fmt_gap("gap", gap),
            Method::Numeric,
            gap <= NUMERIC_TOL,
            None,
        );
        let lap = join_laplacian_spectrum(&input)?;
        let direct_l = dense_values(&gamma.laplacian_matrix())?;
        let gap_l = max_gap(&lap.values, &direct_l);
        let printed = join_laplacian_spectrum_with(&input, LaplacianSign::Plus)?;
        let gap_p = max_gap(&printed.values, &direct_l);
        c.push(
            "join.laplacian-formula",
            "gamma",
            format!("gap <= {NUMERIC_TOL:e}"),
            fmt_gap("gap", gap_l),
            Method::Numeric,
            gap_l <= NUMERIC_TOL,
            Some(format!("plus sign in the quotient: {}", fmt_gap("gap", gap_p))),
        );
    }

    let (bad_a, bad_l, worst) = random_join_trials(c.opts.seed, c.opts.random_trials)?;
    c.push(
        "join.random-oracle",
        "random",
        format!("{} joins agree within {NUMERIC_TOL:e}", c.opts.random_trials),
        format!("adjacency failures {bad_a}, laplacian failures {bad_l}, {}", fmt_gap("worst gap", worst)),
        Method::Numeric,
        bad_a == 0 && bad_l == 0,
        None,
    );
    Ok(())
}

fn corollary(c: &mut Ctx) -> Result<()> {
    let gamma = build_gamma(c.f)?;
    let exact = gamma.order() <= c.opts.exact_cap;
    let gamma_poly = if exact { Some(gamma_char_poly(c.f)?) } else { None };
    let gamma_values = if exact || gamma.order() <= NUMERIC_CAP {
        Some(numeric_eigen(&gamma.adjacency_matrix())?.0.values)
    } else {
        None
    };
    let mut matches = Vec::new();
    for variant in CorollaryVariant::ALL {
        let pred = gamma_spectrum_via_join(c.f, variant)?;
        let (ok, computed, method) = match (&gamma_poly, &gamma_values) {
            (Some(p), _) => (pred.poly == *p, p.to_string(), Method::Exact),
            (None, Some(v)) => {
                let gap = max_gap(&pred.numeric_values()?, v);
                (gap <= NUMERIC_TOL, fmt_gap("numeric gap", gap), Method::Numeric)
            }
            (None, None) => continue,
        };
        if ok {
            matches.push(variant.name());
        }
        c.push(
            format!("corollary.{}", variant.name()),
            "gamma",
            if method == Method::Exact { pred.poly.to_string() } else { "predicted spectrum".into() },
            computed,
            method,
            ok,
            None,
        );
    }
    let printed_matches: Vec<&str> = matches.iter().copied().filter(|m| *m != "quotient").collect();
    c.push(
        "corollary.unique-variant",
        "gamma",
        "exactly one of statement, proof",
        if printed_matches.is_empty() { "none".to_string() } else { printed_matches.join(", ") },
        if exact { Method::Exact } else { Method::Numeric },
        printed_matches.len() == 1,
        None,
    );
    let fixed = check_fixed_part(c.f)?;
    c.push(
        "corollary.fixed-part",
        "gamma",
        format!("0^{} and (-1)^{} beyond the quotient", fixed.expected.0, fixed.expected.1),
        format!(
            "gamma 0^{} (-1)^{}, quotient 0^{} (-1)^{}",
            fixed.gamma.0, fixed.gamma.1, fixed.quotient.0, fixed.quotient.1
        ),
        if gamma.order() > crate::linalg::MODULAR_THRESHOLD { Method::Modular } else { Method::Exact },
        fixed.pass(),
        None,
    );
    Ok(())
}

/// Random symmetric integer pairs: every eigenvalue of the sum lies in its
/// Weyl interval. Returns the number of violations.
pub fn random_weyl_trials(seed: u64, trials: usize) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x3e71);
    let mut bad = 0;
    for _ in 0..trials {
        let d = rng.gen_range(1..=8);
        let sym = |rng: &mut ChaCha8Rng| {
            let mut m = IntMatrix::zeros(d);
            for i in 0..d {
                for j in i..d {
                    let v = BigInt::from(rng.gen_range(-4i64..=4));
                    m[(i, j)] = v.clone();
                    m[(j, i)] = v;
                }
            }
            m
        };
        let a = sym(&mut rng);
        let b = sym(&mut rng);
        let (la, lb, ls) = (dense_values(&a)?, dense_values(&b)?, dense_values(&a.add(&b))?);
        for (i, &v) in ls.iter().enumerate() {
            let (lo, hi) = weyl_interval_f64(&la, &lb, i + 1)?;
            if v < lo - NUMERIC_TOL || v > hi + NUMERIC_TOL {
                bad += 1;
            }
        }
    }
    Ok(bad)
}

fn bounds(c: &mut Ctx) -> Result<()> {
    if c.n() >= 2 {
        let dim = ((c.n() + 2) * (c.n() + 2)) as usize;
        if dim > NUMERIC_CAP {
            return Err(Error::DimensionTooLarge { dim, cap: NUMERIC_CAP });
        }
        let report = verify_bounds(c.f)?;
        for item in &report.items {
            let b = item.bound;
            let vals: Vec<String> = item.values.iter().map(|&v| fmt_value(v)).collect();
            c.push(
                format!("bounds.item{:02}", b.item),
                "T+A(H)",
                format!("{} <= alpha_i <= {} for i in {}..={}", b.lower, b.upper, b.first, b.last),
                if vals.is_empty() { "empty range".into() } else { vals.join(", ") },
                Method::Numeric,
                item.pass,
                None,
            );
        }
        c.push(
            "bounds.partition",
            "T+A(H)",
            format!("ranges tile 1..={dim}"),
            report.partition_ok,
            Method::Exact,
            report.partition_ok,
            None,
        );
        let inside = report.items.iter().all(|it| {
            it.values
                .iter()
                .zip(&it.weyl)
                .all(|(&v, &(lo, hi))| v >= lo - NUMERIC_TOL && v <= hi + NUMERIC_TOL)
        });
        c.push(
            "bounds.weyl-containment",
            "T+A(H)",
            "every alpha_i inside its Weyl interval",
            inside,
            Method::Numeric,
            inside,
            None,
        );
    }
    let bad = random_weyl_trials(c.opts.seed, c.opts.random_trials)?;
    c.push(
        "bounds.weyl-random",
        "random",
        format!("{} random pairs respect the Weyl intervals", c.opts.random_trials),
        format!("{bad} violations"),
        Method::Numeric,
        bad == 0,
        None,
    );
    Ok(())
}
