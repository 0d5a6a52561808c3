use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathgame")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn game(name: &str) -> String {
    data(name).to_str().unwrap().to_string()
}

#[test]
fn closed_form_least_core_of_the_diamond() {
    let out = run(&["leastcore", &game("diamond.json"), "--method", "combinatorial"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["command"], "leastcore");
    assert_eq!(v["epsilon1"], "1/2");
    assert_eq!(v["payoff"], serde_json::json!({"sa": "1/2", "at": "0", "sb": "1/2", "bt": "0"}));
    assert!(v["input_digest"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn all_least_core_methods_agree_on_epsilon() {
    for method in ["cg", "combinatorial", "brute"] {
        let v = json(&run(&["leastcore", &game("sp_random.json"), "--method", method]));
        assert_eq!(v["epsilon1"], "3/4", "{method}");
    }
}

#[test]
fn core_of_a_path_names_the_first_bridge() {
    let v = json(&run(&["core", &game("path.json")]));
    assert_eq!((v["nonempty"].clone(), v["witness"].clone()), (Value::Bool(true), Value::from("e0")));
    let v = json(&run(&["core", &game("diamond.json")]));
    assert_eq!((v["nonempty"].clone(), v["witness"].clone()), (Value::Bool(false), Value::Null));
}

#[test]
fn selftest_agrees_on_fixtures() {
    for name in ["sp_random.json", "diamond.json", "path.json", "costly_parallel.json", "diamond_vpcg_dual.json"] {
        let out = run(&["selftest", &game(name)]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let v = json(&out);
        assert_eq!(v["agree"], true);
        for (check, verdict) in v["checks"].as_object().unwrap() {
            let verdict = verdict.as_str().unwrap();
            assert!(verdict == "agree" || verdict.starts_with("skipped"), "{name}: {check} {verdict}");
        }
    }
    let v = json(&run(&["selftest", &game("sp_random.json")]));
    assert_eq!(v["checks"]["nucleolus_sp_vs_brute"], "agree");
}

#[test]
fn least_core_output_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["diamond.json", "costly_parallel.json", "sp_random.json", "diamond_vpcg_dual.json"] {
        let out = run(&["leastcore", &game(name)]);
        let eps = json(&out)["epsilon1"].as_str().unwrap().to_string();
        let payoff = dir.path().join(format!("{name}.payoff.json"));
        std::fs::write(&payoff, &out.stdout).unwrap();
        let v = json(&run(&["verify", &game(name), "--payoff", payoff.to_str().unwrap(), "--epsilon", &eps]));
        assert_eq!(v["member"], true, "{name}");
    }
}

#[test]
fn verify_rejects_below_epsilon_and_inefficient_payoffs() {
    let dir = tempfile::tempdir().unwrap();
    let payoff = dir.path().join("uniform.json");
    std::fs::write(&payoff, r#"{"payoff": {"sa": "1/4", "at": "1/4", "sb": "1/4", "bt": "1/4"}}"#).unwrap();
    let p = payoff.to_str().unwrap();
    let v = json(&run(&["verify", &game("diamond.json"), "--payoff", p, "--epsilon", "1/2"]));
    assert_eq!((v["member"].clone(), v["min_winning_excess"].clone()), (Value::Bool(true), Value::from("-1/2")));
    let v = json(&run(&["verify", &game("diamond.json"), "--payoff", p, "--epsilon", "0.49"]));
    assert_eq!(v["member"], false);

    std::fs::write(&payoff, r#"{"payoff": {"sa": "1/2", "at": "1/2", "sb": "1/2", "bt": "0"}}"#).unwrap();
    let out = run(&["verify", &game("diamond.json"), "--payoff", p, "--epsilon", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "not_efficient");
}

#[test]
fn nucleolus_methods() {
    let sp = json(&run(&["nucleolus", &game("sp_random.json")]));
    let brute = json(&run(&["nucleolus", &game("sp_random.json"), "--method", "brute"]));
    assert_eq!(sp["payoff"], brute["payoff"]);
    assert_eq!(sp["payoff"]["e4"], "1/4");
    assert!(!sp["trace"].as_array().unwrap().is_empty());

    let out = run(&["nucleolus", &game("bridge.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "not_series_parallel");
    let v = json(&run(&["nucleolus", &game("bridge.json"), "--method", "brute"]));
    assert!(v["payoff"].is_object());
}

#[test]
fn maxmin_with_probabilities() {
    let dir = tempfile::tempdir().unwrap();
    let probs = dir.path().join("probs.json");
    std::fs::write(&probs, r#"{"e0": "1/2", "e1": "1/3"}"#).unwrap();
    let v =
        json(&run(&["maxmin", &game("costly_parallel.json"), "--mode", "edge", "--probs", probs.to_str().unwrap()]));
    assert_eq!(v["value"], "1/5");
    assert_eq!(v["strategy"], serde_json::json!({"e0": "2/5", "e1": "3/5"}));
    let v = json(&run(&["maxmin", &game("diamond.json"), "--mode", "edge"]));
    assert_eq!(v["value"], "1/2");
}

#[test]
fn coalition_values() {
    let v = json(&run(&["value", &game("diamond.json"), "--coalition", "sa,at"]));
    assert_eq!((v["winning"].clone(), v["value"].clone()), (Value::Bool(true), Value::from("1")));
    let v = json(&run(&["value", &game("costly_parallel.json"), "--coalition", "e0"]));
    assert_eq!(v["value"], "3/4");
    let out = run(&["value", &game("diamond.json"), "--coalition", "sa,zz"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "unknown_player");
}

#[test]
fn input_errors_exit_with_one() {
    let out = run(&["core", &game("direct_vpcg.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "vpcg_direct_edge");

    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\n  \"directed\": false,\n  \"vertices\": [\"s\" \"t\"]\n}").unwrap();
    let out = run(&["core", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = &json(&out)["error"];
    assert_eq!(err["kind"], "syntax");
    assert!(err["message"].as_str().unwrap().contains("line 3"));

    let out = run(&["core", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(json(&out)["error"]["kind"], "io");
}

#[test]
fn output_is_deterministic() {
    for args in
        [vec!["leastcore", "sp_random.json"], vec!["nucleolus", "sp_random.json"], vec!["selftest", "diamond.json"]]
    {
        let full: Vec<String> =
            args.iter().map(|a| if a.ends_with(".json") { game(a) } else { a.to_string() }).collect();
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        assert_eq!(run(&refs).stdout, run(&refs).stdout);
    }
}
