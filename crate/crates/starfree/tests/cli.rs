//! End-to-end checks of the binary: exit codes, output determinism, and the
//! gen/bench subcommands.

use starfree::graph::{complete, cycle, Graph};
use starfree::io::write_graph6;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_starfree")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("starfree-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_g6(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, format!("{}\n", write_graph6(g))).unwrap();
    path
}

fn star(leaves: usize) -> Graph {
    Graph::build(leaves + 1, &(1..=leaves).map(|v| (0, v)).collect::<Vec<_>>()).unwrap()
}

#[test]
fn color_c5_claw_free_succeeds() {
    let dir = temp_dir("c5");
    let path = write_g6(&dir, "c5.g6", &cycle(5));
    let out = run(&["color", path.to_str().unwrap(), "--pattern", "star:3", "--check"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    // five vertex lines, then the report as one JSON line
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with("0\t"));
    let report: serde_json::Value = serde_json::from_str(lines[5]).unwrap();
    assert_eq!(report["omega"], 2);
    assert_eq!(report["pattern"], "star:3");
    assert!(report["colors_used"].as_u64().unwrap() <= 8);
    assert!(report["wall_time_ms"].is_null());
}

#[test]
fn missing_file_exits_2() {
    let out = run(&["color", "/nonexistent/graph.g6", "--pattern", "K2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_graph6_exits_2() {
    let dir = temp_dir("bad");
    let path = dir.join("bad.g6");
    std::fs::write(&path, "D\x01\x02\n").unwrap();
    let out = run(&["color", path.to_str().unwrap(), "--pattern", "K2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_pattern_exits_2() {
    let dir = temp_dir("badpat");
    let path = write_g6(&dir, "c5.g6", &cycle(5));
    let out = run(&["color", path.to_str().unwrap(), "--pattern", "triangle"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn not_h_free_exits_3() {
    // C5 contains an induced P3 = star:2
    let dir = temp_dir("nhf");
    let path = write_g6(&dir, "c5.g6", &cycle(5));
    let out = run(&["color", path.to_str().unwrap(), "--pattern", "star:2", "--check"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn enumeration_cap_exits_5() {
    // forced decomposition of a star enumerates more stable subsets than
    // the cap of 1 allows
    let dir = temp_dir("cap");
    let path = write_g6(&dir, "star10.g6", &star(10));
    let out = run(&[
        "color",
        path.to_str().unwrap(),
        "--pattern",
        "2xK2",
        "--threshold-override",
        "1",
        "--cap",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(5), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn oracle_chi_scale_cap_exits_5() {
    let dir = temp_dir("chicap");
    let path = write_g6(&dir, "c5.g6", &cycle(5));
    let out = run(&["oracle", "chi", path.to_str().unwrap(), "--cap", "3"]);
    assert_eq!(out.status.code(), Some(5));
    let out = run(&["oracle", "chi", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "3");
}

#[test]
fn oracle_queries_answer() {
    let dir = temp_dir("oracle");
    let path = write_g6(&dir, "pet.g6", &starfree::graph::petersen());
    let omega = run(&["oracle", "omega", path.to_str().unwrap()]);
    assert_eq!(String::from_utf8(omega.stdout).unwrap().trim(), "2");
    let alpha = run(&["oracle", "alpha", path.to_str().unwrap()]);
    assert_eq!(String::from_utf8(alpha.stdout).unwrap().trim(), "4");
    let hfree = run(&["oracle", "hfree", path.to_str().unwrap(), "--pattern", "star:4"]);
    assert!(String::from_utf8(hfree.stdout).unwrap().starts_with("true"));
    let embed = run(&["oracle", "hfree", path.to_str().unwrap(), "--pattern", "star:3"]);
    assert!(String::from_utf8(embed.stdout).unwrap().starts_with("false"));
}

#[test]
fn oracle_ramsey_reports_stable_set_or_certificate() {
    let dir = temp_dir("ramsey");
    let c5 = write_g6(&dir, "c5.g6", &cycle(5));
    let out = run(&["oracle", "ramsey", c5.to_str().unwrap(), "-k", "2"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("stable-set"));
    let k6 = write_g6(&dir, "k6.g6", &complete(6));
    let out = run(&["oracle", "ramsey", k6.to_str().unwrap(), "-k", "2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "certificate 6 <= 6");
}

#[test]
fn gen_emits_graph6() {
    let dir = temp_dir("gen");
    let spec = dir.join("spec.json");
    std::fs::write(
        &spec,
        r#"{"family":"gnp","n":10,"p_num":1,"p_den":2,"seed":42}"#,
    )
    .unwrap();
    let out = run(&["gen", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "IV}OLLDo_");
}

#[test]
fn dimacs_input_is_sniffed() {
    let dir = temp_dir("dimacs");
    let path = dir.join("c5.col");
    std::fs::write(&path, starfree::io::write_dimacs_col(&cycle(5))).unwrap();
    let out = run(&["color", path.to_str().unwrap(), "--pattern", "star:3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn color_output_is_byte_identical_across_runs() {
    let dir = temp_dir("det");
    let path = write_g6(&dir, "pet.g6", &starfree::graph::petersen());
    let trace1 = dir.join("t1.json");
    let trace2 = dir.join("t2.json");
    // Petersen is 3-regular, so star:4 cannot embed
    let args1 = [
        "color", path.to_str().unwrap(), "--pattern", "star:4",
        "--chi", "--trace", trace1.to_str().unwrap(),
    ];
    let args2 = [
        "color", path.to_str().unwrap(), "--pattern", "star:4",
        "--chi", "--trace", trace2.to_str().unwrap(),
    ];
    let a = run(&args1);
    let b = run(&args2);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    // stdout embeds the trace path, so compare after normalizing it
    let norm = |out: &[u8], tag: &str| String::from_utf8(out.to_vec()).unwrap().replace(tag, "T");
    assert_eq!(norm(&a.stdout, "t1.json"), norm(&b.stdout, "t2.json"));
    assert_eq!(
        std::fs::read(&trace1).unwrap(),
        std::fs::read(&trace2).unwrap()
    );
}

#[test]
fn bench_csv_is_deterministic() {
    let dir = temp_dir("bench");
    let corpus = dir.join("corpus");
    std::fs::create_dir_all(&corpus).unwrap();
    write_g6(&corpus, "a-c5.g6", &cycle(5));
    write_g6(&corpus, "b-k4.g6", &complete(4));
    write_g6(&corpus, "c-c7.g6", &cycle(7));
    let args = [
        "bench", "--pattern", "star:3", "--corpus", corpus.to_str().unwrap(), "--chi",
    ];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# starfree bench csv v1");
    assert_eq!(
        lines[1],
        "instance,n,m,omega,chi,colors,bound,ratio,time_ms,status"
    );
    assert_eq!(lines.len(), 5);
    assert!(lines[2].starts_with("a-c5.g6,5,5,2,3,"));
    assert!(lines.iter().skip(2).all(|l| l.ends_with(",ok")));
}

#[test]
fn bench_keeps_going_past_failures() {
    // C5 is not star:2-free; K4 and the edgeless graph are
    let dir = temp_dir("benchfail");
    let corpus = dir.join("corpus");
    std::fs::create_dir_all(&corpus).unwrap();
    write_g6(&corpus, "a-c5.g6", &cycle(5));
    write_g6(&corpus, "b-k4.g6", &complete(4));
    let out = run(&[
        "bench", "--pattern", "star:2", "--corpus", corpus.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[2].ends_with(",not-h-free"));
    assert!(lines[3].ends_with(",ok"));
}
