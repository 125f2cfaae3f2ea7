use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", &format!("{name}.quiv")].iter().collect();
    p.display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dircat")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn info_reports_dimension_and_orders() {
    let o = run(&["info", &data("e3_1"), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["dim"], 10);
    assert_eq!(v["directed_orders"].as_array().unwrap().len(), 2);
    let o = run(&["info", &data("e3_2")]);
    assert!(stdout(&o).starts_with("dim A = 4; directed orders: 1"));
    assert!(stdout(&o).contains("x < y"));
    let o = run(&["info", &data("two_cycle")]);
    assert!(stdout(&o).contains("not a directed category"));
}

#[test]
fn strata_exit_codes() {
    let o = run(&["strata", &data("e3_1"), "--order", "w<z<x<y", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["standardly"], true);
    let totals: Vec<u64> = v["standard_dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).sum())
        .collect();
    assert_eq!(totals, [2, 2, 2, 2]);

    let o = run(&["strata", &data("e3_1"), "--order", "x<y<z<w", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    assert_eq!(v["standardly"], false);
    assert!(v["filtrations"][0]["filtration"]["failure"]["remainder"]["file"].is_string());

    let v = json(&run(&["strata", &data("e3_2"), "--order", "x<y", "--format", "structured"]));
    assert_eq!((v["standardly"].as_bool(), v["properly"].as_bool()), (Some(true), Some(true)));

    let o = run(&["strata", &data("e3_1"), "--order", "x<y"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tilt_exit_codes_and_module_files() {
    let dir = std::env::temp_dir().join(format!("dircat-tilt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let o = run(&["tilt", &data("e4_1"), "--site", "z", "--out", dir.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verified"], true);
    assert_eq!(v["tau_inverse"]["total_dim"], 4);
    let tau = dir.join("tau_inverse.mod");
    let o = run(&["check-module", &data("e4_1"), tau.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["pd"], 1);
    std::fs::remove_dir_all(&dir).unwrap();

    let o = run(&["tilt", &data("e4_2"), "--site", "y"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("injective at x"));

    let o = run(&["tilt", &data("no_witness"), "--site", "z"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("no free-summand witness"));

    assert_eq!(run(&["tilt", &data("e4_1"), "--site", "q"]).status.code(), Some(2));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let path = std::env::temp_dir().join(format!("dircat-bad-{}.quiv", std::process::id()));
    std::fs::write(&path, "vertex x\narrow a: x -> y\n").unwrap();
    let o = run(&["info", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2, column 15"), "{err}");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn check_module_filtration_verdict() {
    let path = std::env::temp_dir().join(format!("dircat-mod-{}.mod", std::process::id()));
    // The injective at y for the loop example: not Δ-filtered.
    std::fs::write(&path, "module\ndim x=1 y=1\nmap a = [[1]]\n").unwrap();
    let o = run(&["check-module", &data("e3_2"), path.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    assert_eq!(v["delta_filtration"]["succeeded"], false);
    assert_eq!(v["value_freeness"]["consistent"], true);
    std::fs::write(&path, "module\ndim x=1 y=1\nmap d = [[1]]\n").unwrap();
    assert_eq!(run(&["check-module", &data("e3_2"), path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn orders_lists_every_order() {
    let v = json(&run(&["orders", &data("e3_2"), "--format", "structured"]));
    let rows = v["orders"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows.iter().filter(|r| r["directed"] == true).count(), 1);
}

#[test]
fn structured_output_is_stable() {
    let a = run(&["strata", &data("e4_1"), "--order", "z<x<y", "--format", "structured"]);
    let b = run(&["strata", &data("e4_1"), "--order", "z<x<y", "--format", "structured"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn suite_reports_corrupted_examples_and_continues() {
    let dir = std::env::temp_dir().join(format!("dircat-data-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (name, text) in dircat_cli::bundled::EXAMPLES {
        let text = if *name == "e4_2" { "vertex x\nrel\n".to_string() } else { text.to_string() };
        std::fs::write(dir.join(format!("{name}.quiv")), text).unwrap();
    }
    let o = run(&["paper-suite", "--data", dir.to_str().unwrap()]);
    assert_ne!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("[pass]  1"), "{out}");
    assert!(out.contains("[FAIL]  4") && out.contains("e4_2.quiv: line 2"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}
