use std::path::PathBuf;
use std::process::{Command, Output};

use twistcox::catalog;
use twistcox::twist::canonical_key;
use twistcox_cli::format::{parse_instance, serialize_instance};

fn instance(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "instances", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn twistcox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistcox"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn key_text(g: &twistcox::DefiningGraph) -> String {
    let key: Vec<String> = canonical_key(g)
        .unwrap()
        .iter()
        .map(|m| if *m == 0 { "-".into() } else { m.to_string() })
        .collect();
    format!("key [{}]", key.join(" "))
}

#[test]
fn rigidity_reports() {
    let o = twistcox(&["rigidity", &instance("q3.cox")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3-rigid: true"));
    let o = twistcox(&["rigidity", &instance("e2.cox")]);
    assert!(stdout(&o).contains("3-rigid: false; witness J={s,t,p}"));
}

#[test]
fn malformed_edge_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.cox");
    std::fs::write(&p, "cox v1\ngens a b\nedge a b\n").unwrap();
    let o = twistcox(&["fc", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = twistcox(&["fc", "/nonexistent/file.cox"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn twists_and_class_of_q3() {
    let out = stdout(&twistcox(&["twists", &instance("q3.cox")]));
    assert!(out.contains("twists: 3"));
    assert!(out.contains("J={s,t} B={b}"));
    let out = stdout(&twistcox(&["twist-class", &instance("q3.cox")]));
    assert!(out.contains("members: 2"));
    assert!(out.contains("all members 3-rigid: true"));
}

#[test]
fn apply_writes_star_graph_and_words() {
    let dir = tempfile::tempdir().unwrap();
    let (inst, words) = (dir.path().join("star.cox"), dir.path().join("star.words"));
    let o = twistcox(&[
        "apply",
        &instance("q3.cox"),
        "--j",
        "s,t",
        "--b",
        "b",
        "--out",
        inst.to_str().unwrap(),
        "--words-out",
        words.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("b := s t s b s t s"));
    let star = parse_instance(&std::fs::read_to_string(&inst).unwrap()).unwrap();
    let (s, b) = (star.gen("s").unwrap(), star.gen("b").unwrap());
    assert_eq!(star.m(s, b), Some(4));
    assert_eq!(star.neighbors(s).len(), 3);
    assert!(std::fs::read_to_string(&words)
        .unwrap()
        .contains("b := s t s b s t s"));

    let o = twistcox(&["apply", &instance("q3.cox"), "--j", "s,t", "--b", "a,b"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn complexity_and_minimization_of_twisted_q3() {
    let out = stdout(&twistcox(&[
        "complexity",
        &instance("q3.cox"),
        &instance("q3_twisted.words"),
    ]));
    assert!(out.contains("K = (4, 6)"), "{out}");
    assert!(out.contains("angle-compatible: true"));
    let o = twistcox(&[
        "minimize",
        &instance("q3.cox"),
        &instance("q3_twisted.words"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("final K = (0, 0)"));
    assert!(out.contains("step 1: J={s,t} B={b} -> K = (0, 0)"));
    assert!(out.contains("conjugator: identity"));
}

#[test]
fn verify_commands() {
    let o = twistcox(&["verify", "f4-roots"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("uα_s + ptuα_s = 2·uspα_t"));
    assert!(out.contains("PASS"));
    assert_eq!(
        twistcox(&["verify", "no-such-check"]).status.code(),
        Some(2)
    );
}

#[test]
fn find_instances_contains_the_quadrilaterals() {
    let out = stdout(&twistcox(&[
        "find-instances",
        "--max-n",
        "4",
        "--labels",
        "2,3,4,5",
    ]));
    for g in [catalog::q3(), catalog::q4(), catalog::q5()] {
        assert!(out.contains(&key_text(&g)), "{}", key_text(&g));
    }
    let out = stdout(&twistcox(&["find-instances", "--max-n", "1"]));
    assert!(out.contains("instances: 0"));
    let out = stdout(&twistcox(&[
        "find-instances",
        "--max-n",
        "4",
        "--filter",
        "dihedral-twistable",
    ]));
    assert!(!out.contains("dihedral-twistable=false"));
    assert!(out.contains(&key_text(&catalog::q3())));
    assert_eq!(
        twistcox(&["find-instances", "--filter", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twistcox(&["find-instances", "--max-n", "8"]).status.code(),
        Some(2)
    );
}

#[test]
fn find_instances_catalog_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("catalog.cox");
    let o = twistcox(&[
        "find-instances",
        "--max-n",
        "3",
        "--out",
        p.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&p).unwrap();
    let graphs = twistcox_cli::format::parse_catalog(&text).unwrap();
    assert!(stdout(&o).contains(&format!("instances: {}", graphs.len())));
    for g in graphs {
        assert_eq!(parse_instance(&serialize_instance(&g)).unwrap(), g);
    }
}

#[test]
fn cap_exhaustion_exits_with_three() {
    let o = twistcox(&["find-instances", "--max-n", "4", "--cap", "50"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("partial"));
}

#[test]
fn reports_echo_flags_and_are_deterministic() {
    let args = [
        "scramble",
        &instance("q4.cox"),
        "--seed",
        "11",
        "--steps",
        "3",
        "--radius",
        "7",
        "--cutoff",
        "50",
    ];
    let (a, b) = (twistcox(&args), twistcox(&args));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.contains("params: radius=7 cutoff=50 depth=8 cap=100000 seed=11"));
    assert!(out.starts_with("command: twistcox scramble"));
}
