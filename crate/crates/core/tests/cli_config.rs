use gengamma::cli::{CliConfig, Command, Format, Function};
use proptest::prelude::*;

fn command() -> impl Strategy<Value = Option<Command>> {
    prop::option::of(prop::sample::select(vec![
        Command::Eval,
        Command::Constants,
        Command::Verify,
        Command::Table,
    ]))
}

fn function() -> impl Strategy<Value = Option<Function>> {
    prop::option::of(prop::sample::select(vec![
        Function::GammaAr,
        Function::GammaArProduct,
        Function::SinAr,
        Function::PsiAr,
        Function::GammaSeqArith,
    ]))
}

fn format() -> impl Strategy<Value = Option<Format>> {
    prop::option::of(prop::sample::select(vec![
        Format::Plain,
        Format::Structured,
        Format::Csv,
    ]))
}

fn real() -> impl Strategy<Value = Option<f64>> {
    prop::option::of(-1e6..1e6f64)
}

prop_compose! {
    fn config()(
        command in command(), function in function(), format in format(),
        (a, r, s_re, s_im) in (real(), real(), real(), real()),
        (tol, h, lambda, b) in (real(), real(), real(), real()),
        (from, to, step, alpha) in (real(), real(), real(), real()),
        n in prop::option::of(0u32..10), k in prop::option::of(0u32..10),
        max_terms in prop::option::of(1u64..1_000_000_000),
        suite in prop::option::of("[a-z_]{1,12}"),
    ) -> CliConfig {
        CliConfig {
            command, function, a, r, s_re, s_im, tol, max_terms, n, k, h, lambda, b, alpha,
            suite, from, to, step, format,
        }
    }
}

proptest! {
    #[test]
    fn normalized_config_round_trips(c in config()) {
        let norm = c.normalized();
        let text = serde_json::to_string(&norm).unwrap();
        let back: CliConfig = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back.normalized(), &norm);
    }

    #[test]
    fn overlay_prefers_the_second_config(x in config(), y in config()) {
        let merged = x.clone().overlay(&y);
        prop_assert_eq!(merged.a, y.a.or(x.a));
        prop_assert_eq!(merged.suite, y.suite.or(x.suite));
        prop_assert_eq!(merged.format, y.format.or(x.format));
    }
}
