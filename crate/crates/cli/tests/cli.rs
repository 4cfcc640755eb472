use std::process::{Command, Output};

fn cayrec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayrec")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn cayder_sequence() {
    let out = cayrec(&["seq", "cayder", "--nmax", "11"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n,value\n0,1\n1,0\n2,1\n3,4\n4,25\n"));
    assert!(text.ends_with("11,577560596\n"));
}

#[test]
fn sdiff_triangle_r2() {
    let out = cayrec(&["table", "sdiff", "--r", "2", "--nmax", "8"]);
    assert!(out.status.success());
    let want = "\
n,m1,m2,m3,m4,m5,m6,m7,m8
1,0,,,,,,,
2,0,1,,,,,,
3,0,2,0,,,,,
4,0,4,2,0,,,,
5,0,8,10,2,0,,,
6,0,16,38,18,2,0,,
7,0,32,130,110,28,2,0,
8,0,64,422,570,250,40,2,0
";
    assert_eq!(stdout(&out), want);
}

#[test]
fn psi_routes_agree() {
    let tables: Vec<String> = ["formula", "recursive", "composition"]
        .iter()
        .map(|route| stdout(&cayrec(&["table", "psi", "--R", "Der", "--nmax", "6", "--route", route])))
        .collect();
    assert_eq!(tables[0], tables[1]);
    assert_eq!(tables[0], tables[2]);
    assert!(tables[0].contains("\n2,1,2\n"));
}

#[test]
fn verify_passes() {
    let out = cayrec(&["verify", "--nmax", "6", "--model", "cayley", "--class", "derangement"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("MISMATCH"));
}

#[test]
fn exit_codes() {
    assert_eq!(cayrec(&["count", "--n", "9", "--model", "endofunctions"]).status.code(), Some(3));
    assert_eq!(cayrec(&["verify", "--nmax", "10"]).status.code(), Some(3));
    assert_eq!(cayrec(&["seq", "bogus", "--nmax", "3"]).status.code(), Some(2));
    assert_eq!(cayrec(&["count", "--n", "3", "--class", "nonsense"]).status.code(), Some(2));
    assert_eq!(cayrec(&["joyal", "--n", "4", "--input", "693163933"]).status.code(), Some(2));
    assert_eq!(cayrec(&["table", "sdiff", "--nmax", "4"]).status.code(), Some(2));
    let err = String::from_utf8(cayrec(&["count", "--n", "9", "--model", "end"]).stderr).unwrap();
    assert!(err.contains("--override-budget"));
}

#[test]
fn budget_override_warns() {
    let out = cayrec(&["count", "--n", "2", "--model", "end", "--override-budget"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,count\n2,4\n");
    assert!(String::from_utf8(out.stderr).unwrap().contains("warning"));
}

#[test]
fn grouped_counts() {
    let out = cayrec(&["count", "--n", "3", "--model", "cayley", "--class", "all", "--by", "ijr"]);
    let text = stdout(&out);
    assert!(text.starts_with("i,j,r,count\n"));
    let total: u64 = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 13);
}

#[test]
fn json_lines() {
    let out = cayrec(&["seq", "end", "--class", "tree", "--nmax", "4", "--format", "json"]);
    let lines: Vec<serde_json::Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[4]["value"], "64");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--nmax", "5", "--model", "end"];
    assert_eq!(cayrec(&args).stdout, cayrec(&args).stdout);
    let args = ["report", "asymptotics", "--nmax", "20"];
    assert_eq!(cayrec(&args).stdout, cayrec(&args).stdout);
}

#[test]
fn joyal_dot() {
    let out = cayrec(&["joyal", "--n", "9", "--input", "693163933", "--export", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("digraph endofunction"));
    assert!(text.contains("3 -> 3;"));
    assert!(text.contains("digraph doubly_rooted"));
    assert!(text.contains("3 [style=filled, peripheries=2, xlabel=\"tail/head\"]"));
}

#[test]
fn joyal_to_files() {
    let dir = std::env::temp_dir().join(format!("cayrec-joyal-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let prefix = dir.join("fig");
    let out = cayrec(&["joyal", "--n", "3", "--input", "231", "--out", prefix.to_str().unwrap()]);
    assert!(out.status.success());
    let tree = std::fs::read_to_string(dir.join("fig-tree.dot")).unwrap();
    assert!(tree.contains("color=blue"));
    assert!(dir.join("fig-digraph.dot").exists());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn identities_pass() {
    let out = cayrec(&["check", "identities", "--nmax", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn report_columns() {
    let out = cayrec(&["report", "asymptotics", "--nmax", "11"]);
    let text = stdout(&out);
    assert!(text.starts_with("series,n,numerator,denominator,ratio,reference\n"));
    assert!(text.contains("cayley_derangement_fraction,11,577560596,1622632573,0.3559404671,0.3678794412\n"));
}
