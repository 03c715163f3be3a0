use std::path::PathBuf;

use proptest::prelude::*;
use zerodiv::export::ExportFormat;
use zerodiv::verify::Scope;
use zerodiv_cli::config::ConfigError;
use zerodiv_cli::{Command, GraphChoice, OutputFormat, RunConfig};

fn command() -> impl Strategy<Value = Command> {
    let graph = proptest::sample::select(GraphChoice::ALL.to_vec());
    let scope = proptest::sample::select(
        std::iter::once(Scope::All).chain(Scope::SUITES).collect::<Vec<_>>(),
    );
    let format = proptest::sample::select(vec![ExportFormat::Dot, ExportFormat::EdgeList, ExportFormat::MatrixMarket]);
    prop_oneof![
        Just(Command::Classify),
        graph.clone().prop_map(|graph| Command::Spectrum { graph }),
        scope.prop_map(|scope| Command::Verify { scope }),
        (graph, format).prop_map(|(graph, format)| Command::Export { graph, format }),
    ]
}

proptest! {
    #[test]
    fn canonical_string_round_trips(
        field in proptest::sample::select(vec!["2", "3", "4", "2^2", "8", "2^3:d", "9", "3^2:a", "16"]),
        cmd in command(),
        json in any::<bool>(),
        out in proptest::option::of("[a-z /\\\\.=_-]{1,16}"),
        cap in 1usize..5000,
        seed in any::<u64>(),
    ) {
        let mut cfg = RunConfig::new(field, cmd).unwrap();
        cfg.output = if json { OutputFormat::Json } else { OutputFormat::Text };
        cfg.out = out.map(PathBuf::from);
        cfg.exact_cap = cap;
        cfg.seed = seed;
        let s = cfg.canonical_string();
        let parsed = RunConfig::parse(&s).unwrap();
        prop_assert_eq!(&parsed, &cfg);
        prop_assert_eq!(parsed.canonical_string(), s);
    }
}

#[test]
fn field_is_canonicalized() {
    let a = RunConfig::new("4", Command::Classify).unwrap();
    let b = RunConfig::new("2^2", Command::Classify).unwrap();
    assert_eq!(a.field, b.field);
}

#[test]
fn parse_rejects_malformed() {
    for bad in [
        "command=classify",
        "command=launch field=2^1 output=text exact-cap=1 seed=1",
        "command=classify field=2^1 output=text exact-cap=1 seed=1 extra=1",
        "command=classify field=2 output=text exact-cap=1 seed=1",
        "command=classify field=2^1 output=yaml exact-cap=1 seed=1",
    ] {
        assert!(matches!(RunConfig::parse(bad), Err(ConfigError::Syntax(_))), "{bad}");
    }
}
