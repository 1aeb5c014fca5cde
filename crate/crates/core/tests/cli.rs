use hedge_iep::cli::main_with_args;
use std::path::PathBuf;

fn run(args: &[&str]) -> i32 {
    main_with_args(std::iter::once("hedge-iep").chain(args.iter().copied()).map(String::from))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hedge-iep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn report(path: &PathBuf) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn generate_and_inspect_a_hedge() {
    let tree = scratch("tbf.json");
    let rep = scratch("info.json");
    assert_eq!(run(&["hedge", "gen", "t-bf", "--out", tree.to_str().unwrap()]), 0);
    assert_eq!(run(&["--report", rep.to_str().unwrap(), "hedge", "info", tree.to_str().unwrap()]), 0);
    let r = report(&rep);
    assert_eq!(r["schema"], "hedge-iep/1");
    assert_eq!(r["outputs"]["height"], 2);
    assert_eq!(r["outputs"]["ell"], serde_json::json!([3, 2, 1]));
}

#[test]
fn construct_then_recognize() {
    let tree = scratch("t31.json");
    let w = scratch("w.json");
    assert_eq!(run(&["hedge", "gen", "lush-min", "--height", "3", "--out", tree.to_str().unwrap()]), 0);
    let lam = "2/5,40/63,1/3,1/9,116/315";
    let t = tree.to_str().unwrap();
    assert_eq!(run(&["pth", "construct", "--lambda", lam, "--tree", t, "--splits", "random", "--out", w.to_str().unwrap()]), 0);
    assert_eq!(run(&["pth", "spectrum", "--lambda", lam, "--tree", t]), 0);
    let assign = "alpha1=2/5,alpha2=40/63,beta2=1/3,beta3=1/9,beta4=116/315";
    assert_eq!(run(&["pth", "recognize", w.to_str().unwrap(), "--assign", assign]), 0);
    let wrong = "alpha1=2/5,alpha2=40/63,beta2=1/3,beta3=1/9,beta4=1/2";
    assert_eq!(run(&["pth", "recognize", w.to_str().unwrap(), "--assign", wrong]), 1);
}

#[test]
fn sweep_writes_csv() {
    let tree = scratch("sweep-tree.json");
    let out = scratch("sweep.csv");
    run(&["hedge", "gen", "lush-min", "--height", "3", "--out", tree.to_str().unwrap()]);
    let args = ["pth", "rs-sweep", "--tree", tree.to_str().unwrap(), "--from", "0.34", "--to", "0.36", "--steps", "5"];
    assert_eq!(run(&[&args[..], &["--out", out.to_str().unwrap(), "--jobs", "2"]].concat()), 0);
    let (header, rows) = hedge_iep::io::read_csv(&out).unwrap();
    assert_eq!(header[0], "x");
    assert_eq!(header.len(), 8);
    assert_eq!(rows.len(), 5);
}

#[test]
fn exit_codes() {
    let bad = scratch("bad.json");
    std::fs::write(&bad, r#"{"parent": [0, 5, 1]}"#).unwrap();
    assert_eq!(run(&["hedge", "info", bad.to_str().unwrap()]), 2);
    assert_eq!(run(&["hedge", "info", scratch("missing.json").to_str().unwrap()]), 2);
    assert_eq!(run(&["repro", "nope"]), 2);
    assert_eq!(run(&["lambda", "build"]), 2);
    assert_eq!(run(&["no-such-command"]), 2);
    assert_eq!(run(&["lambda", "region", "2/5", "40/63", "1/3", "1/9", "116/315"]), 0);
    assert_eq!(run(&["repro", "table1"]), 0);
}
