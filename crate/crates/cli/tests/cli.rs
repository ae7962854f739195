use std::path::Path;
use std::process::{Command, Output};

fn nanip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nanip"))
        .args(args)
        .env_remove("NANIP_SOLVER_CMD")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .to_string()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn solve_p3_with_every_exact_algorithm() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.txt", "nodes 3\nedge 0 1\nedge 1 2\ncost 2 1 0\n");
    for algorithm in ["dp", "brute", "bnb", "connected-dp"] {
        let out = nanip(&["solve", "--instance", &p3, "--algorithm", algorithm]);
        assert!(out.status.success(), "{algorithm}: {out:?}");
        let text = stdout(&out);
        assert_eq!(field(&text, "cost"), "4");
        assert_eq!(field(&text, "optimal"), "true");
    }
    let out = nanip(&["solve", "--instance", &p3, "--algorithm", "greedy", "--tie-break", "pref:2,1,0"]);
    assert_eq!(field(&stdout(&out), "order"), "2 1 0");
}

#[test]
fn guard_and_parse_failures_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let gen = nanip(&["gen", "--type", "random", "--nodes", "12", "--edges", "20", "--seed", "3"]);
    let big = write(dir.path(), "big.txt", &stdout(&gen));
    let out = nanip(&["solve", "--instance", &big, "--algorithm", "brute"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("limited to 10 vertices"));

    let broken = write(dir.path(), "broken.txt", "nodes 2\nedge 0 5\ncost 1 0\n");
    let out = nanip(&["solve", "--instance", &broken]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn generated_gadgets() {
    let out = nanip(&["gen", "--type", "btree", "--levels", "3"]);
    let text = stdout(&out);
    assert!(text.contains("nodes 9\n") && text.contains("cost 2 1 0\n"));
    assert!(text.starts_with("# generator: btree levels=3 doubled=false\n"));

    let out = nanip(&["gen", "--type", "clique-gadget", "--base", "K3", "--k", "3"]);
    let text = stdout(&out);
    assert!(text.contains("nodes 6\n") && text.contains("cost 3 2 1 0\n"));

    let out = nanip(&["gen", "--type", "random", "--nodes", "15", "--edges", "30", "--seed", "7"]);
    let text = stdout(&out);
    assert!(text.contains("nodes 15\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("edge ")).count(), 30);
}

#[test]
fn gen_then_solve_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b3.txt");
    let path = path.to_str().unwrap();
    let out = nanip(&["gen", "--type", "btree", "--levels", "3", "--doubled", "--out", path]);
    assert!(out.status.success());
    let instance = nanip_core::Instance::read(path).unwrap();
    assert_eq!((instance.graph.n(), instance.graph.m()), (17, 28));
    let out = nanip(&["solve", "--instance", path, "--algorithm", "bnb"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(field(&text, "m"), "28");
    assert_eq!(field(&text, "cost"), "7");
}

#[test]
fn ip_emit_structure_and_refusal() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "nodes 2\nedge 0 1\ncost 1 0\n");
    let binaries = |text: &str| {
        text.lines()
            .skip_while(|l| *l != "Binaries")
            .skip(1)
            .take_while(|l| *l != "End")
            .count()
    };
    let plain = stdout(&nanip(&["ip-emit", "--instance", &k2]));
    assert_eq!(binaries(&plain), 1);
    let explicit = stdout(&nanip(&["ip-emit", "--instance", &k2, "--explicit-antisymmetry"]));
    assert_eq!(binaries(&explicit), 2);

    let concave = write(dir.path(), "concave.txt", "nodes 2\nedge 0 1\ncost 3 2.9 0\n");
    let out = nanip(&["ip-emit", "--instance", &concave]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("convex"));
}

#[test]
fn ip_external_without_solver_is_unavailable() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "nodes 2\nedge 0 1\ncost 1 0\n");
    let out = nanip(&["solve", "--instance", &k2, "--algorithm", "ip-external"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unavailable"));
}

#[test]
fn bench_csv_and_range_check() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bench.csv");
    let csv = csv.to_str().unwrap();
    let args = [
        "bench", "--nodes", "7", "--edges-min", "6", "--edges-max", "9", "--edges-step", "3",
        "--per-density", "2", "--algorithm", "dp,bnb,ip-external", "--time-limit", "30",
        "--seed", "5", "--out", csv,
    ];
    let out = nanip(&args);
    assert!(out.status.success(), "{out:?}");
    let text = std::fs::read_to_string(csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "instance_id,n,m,seed,algorithm,objective,optimal,nodes_expanded,wall_time_s,status"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2 * 2 * 3 + 2 * 3);
    assert!(rows.iter().all(|r| r.split(',').count() == 10));
    assert_eq!(rows.iter().filter(|r| r.ends_with(",unavailable")).count(), 4);

    let again = dir.path().join("again.csv");
    let mut args2 = args.to_vec();
    *args2.last_mut().unwrap() = again.to_str().unwrap();
    assert!(nanip(&args2).status.success());
    let strip = |t: &str| -> Vec<String> {
        t.lines()
            .map(|l| l.split(',').take(8).collect::<Vec<_>>().join(","))
            .collect()
    };
    assert_eq!(strip(&text), strip(&std::fs::read_to_string(&again).unwrap()));

    let out = nanip(&["bench", "--nodes", "15", "--edges-min", "14", "--edges-max", "106"]);
    assert!(!out.status.success());
}
