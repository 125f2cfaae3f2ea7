use dircat::exactlin::FieldSpec;
use dircat_cli::report::Format;
use dircat_cli::suite::{cmd_paper_suite, run_suite};
use dircat_cli::RunConfig;

#[test]
fn acceptance_criteria() {
    let results = run_suite(&RunConfig::default()).unwrap();
    assert_eq!(results.len(), 10);
    for r in &results {
        println!("criterion {:>2} {}: {} ({})", r.id, if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
    }
    let failed: Vec<usize> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn suite_is_byte_identical_across_runs() {
    let cfg = RunConfig {
        seed: 7,
        ..RunConfig::default()
    };
    let a = cmd_paper_suite(&cfg).unwrap().render(Format::Structured);
    let b = cmd_paper_suite(&cfg).unwrap().render(Format::Structured);
    assert_eq!(a, b);
    let text_a = cmd_paper_suite(&cfg).unwrap().render(Format::Text);
    let text_b = cmd_paper_suite(&cfg).unwrap().render(Format::Text);
    assert_eq!(text_a, text_b);
}

#[test]
fn verdicts_hold_over_a_prime_field() {
    let cfg = RunConfig {
        field: Some(FieldSpec::Prime(3)),
        ..RunConfig::default()
    };
    let results = run_suite(&cfg).unwrap();
    assert!(results.iter().all(|r| r.passed), "{results:?}");
}
