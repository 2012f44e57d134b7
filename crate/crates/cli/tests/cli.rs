use std::path::Path;
use std::process::{Command, Output};

use ccpareto::harness::{read_instance, Instance};
use ccpareto::oracles::extreme_point_set;

fn ccpareto(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccpareto"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn help_exits_zero() {
    let out = ccpareto(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("oracle"));
}

#[test]
fn unknown_flag_exits_one() {
    let out = ccpareto(&["table", "--input", "x.csv", "--colour"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn odd_n_exits_one_without_writing() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("i.toml");
    let out = ccpareto(&["gen", "instance-i", "--n", "7", "--out", path_str(&target)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!target.exists());
}

#[test]
fn malformed_csv_exits_two_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.csv");
    std::fs::write(
        &input,
        "instance,beta,alg,mean,std,p1,p2,p3,max_pop_mean,max_pop_std,infeasible\n\
         a,0.1,gsemo,1,0,,,,3,0,0\n\
         a,0.1,gsemo,not-a-number,0,,,,3,0,0\n",
    )
    .unwrap();
    let out = ccpareto(&["table", "--input", path_str(&input)]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("table"), "{err}");
    assert!(err.contains("bad.csv:3:"), "{err}");
}

#[test]
fn missing_input_exits_two() {
    let out = ccpareto(&["oracle", "brute-force", "--instance", "/nonexistent/x.toml"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("oracle"));
}

#[test]
fn extreme_point_count_matches_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("u.toml");
    let points = dir.path().join("ep.csv");
    let out = ccpareto(&[
        "gen", "uniform", "--n", "14", "--k", "6", "--seed", "3", "--out", path_str(&inst),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let out = ccpareto(&[
        "oracle", "extreme-points", "--instance", path_str(&inst), "--out", path_str(&points),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let written = std::fs::read_to_string(&points).unwrap().lines().count() - 1;

    let Instance::Uniform { instance, .. } = read_instance(&inst).unwrap() else {
        panic!("expected a uniform instance")
    };
    assert_eq!(written, extreme_point_set(&instance).unwrap().len());
    assert!(stderr(&out).contains(&format!("{written} extreme points")));
}

#[test]
fn greedy_on_an_mst_instance_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("t.toml");
    std::fs::write(
        &inst,
        "type = \"mst\"\nn = 3\nedges = [[1, 2], [2, 3], [1, 3]]\nweights = [[1, 1], [2, 1], [3, 1]]\n",
    )
    .unwrap();
    let out = ccpareto(&["oracle", "greedy", "--instance", path_str(&inst), "--lambda", "0.5"]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));

    let out = ccpareto(&["oracle", "kruskal", "--instance", path_str(&inst), "--lambda", "0.5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stderr(&out).contains("mu = 3"), "{}", stderr(&out));
}

#[test]
fn run_then_table_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("exp.toml");
    let csv = dir.path().join("out.csv");
    let md = dir.path().join("out.md");
    std::fs::write(
        &cfg,
        "label = \"small\"\nbudget = 2000\nreplicates = 3\nbetas = [0.1]\n\n\
         [problem]\ntype = \"uniform_random\"\nn = 10\nk = 4\n",
    )
    .unwrap();
    let out = ccpareto(&[
        "run", "--config", path_str(&cfg), "--betas", "0.2,0.01", "--format", "csv", "--out",
        path_str(&csv),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&csv).unwrap();
    // Header plus two betas times three algorithms.
    assert_eq!(text.lines().count(), 7);
    assert!(text.contains(",0.01,"));

    let out = ccpareto(&["table", "--input", path_str(&csv), "--format", "md", "--out", path_str(&md)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(std::fs::read_to_string(&md).unwrap().contains("### small"));
}

#[test]
fn gen_domset_from_random_graph() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("d.toml");
    let out = ccpareto(&[
        "gen", "domset", "--setting", "neg-correlated", "--random-n", "20", "--edge-prob", "0.2",
        "--seed", "5", "--out", path_str(&inst),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(matches!(read_instance(&inst).unwrap(), Instance::DominatingSet(_)));
}
