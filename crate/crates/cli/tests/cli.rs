use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compshuffle")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn chi_json() {
    let o = run(&["chi", "--path", "NNEENE", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["basis"], "s");
    let terms: Vec<(String, String)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["shape"].to_string(), t["coeff"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(
        terms,
        [("[3]".into(), "1".into()), ("[2,1]".into(), "q + 1".into()), ("[1,1,1]".into(), "q".into())]
    );
}

#[test]
fn chi_weights() {
    let zero = run(&["chi", "--path", "NNEENE", "--weight", "zero"]);
    assert_eq!(stdout(&zero), "s[2,1] + (q)*s[1,1,1]\n");
    let listed = run(&["chi", "--path", "NNEENE", "--weight", r#"[{"corner":[2,3],"weight":"0"}]"#]);
    assert_eq!(stdout(&listed), stdout(&zero));
    assert_eq!(run(&["chi", "--path", "NNEENE", "--weight", r#"[{"corner":[1,2],"weight":"0"}]"#]).status.code(), Some(2));
}

#[test]
fn zeta_of_the_worked_path() {
    let out = stdout(&run(&["zeta", "--path", "NENNNENNEEEENNEE"]));
    assert!(out.contains("sigma     1,2,4,6,7,8,3,5"), "{}", out);
    assert!(out.contains("bounce    0,0,0,1,1,2,2,3"), "{}", out);
    assert!(out.contains("t         17,16,11,9"), "{}", out);
}

#[test]
fn dalpha_routes_agree() {
    let outs: Vec<String> =
        ["op", "brute", "nabla"].iter().map(|m| stdout(&run(&["dalpha", "--alpha", "2,1", "--method", m]))).collect();
    assert_eq!(outs[0], outs[1]);
    assert_eq!(outs[0], outs[2]);
    assert_eq!(stdout(&run(&["dalpha", "--alpha", "1,2"])), "(t)*s[2,1] + (q*t)*s[1,1,1]\n");
}

#[test]
fn macdonald_and_nabla() {
    assert_eq!(stdout(&run(&["macdonald", "--mu", "2,1"])), "s[3] + (q + t)*s[2,1] + (q*t)*s[1,1,1]\n");
    assert_eq!(stdout(&run(&["nabla", "--schur", "1"])), "(-1)*s[1]\n");
    let h = stdout(&run(&["macdonald", "--mu", "2", "--json"]));
    let o = run(&["nabla", "--input", &h]);
    assert_eq!(stdout(&o), "(q)*s[2] + (q^2)*s[1,1]\n");
}

#[test]
fn involution() {
    assert_eq!(stdout(&run(&["ninv", "--schur", "1"])), "V_0: (s[1])\n");
    // N(y_1) = q^{alpha_1 - 1} N_2 = -qt y_1, and N is an involution
    assert_eq!(stdout(&run(&["ninv", "--alpha", "2"])), "V_1: y1*((-q*t))\n");
    let n = stdout(&run(&["ninv", "--alpha", "2", "--json"]));
    assert_eq!(stdout(&run(&["ninv", "--input", &n])), "V_1: y1*((1))\n");
}

#[test]
fn verify_commands() {
    for args in [
        vec!["verify", "shuffle", "--n", "2"],
        vec!["verify", "bijection", "--n", "5"],
        vec!["verify", "charfn", "--n", "3"],
        vec!["verify", "relations", "--k-max", "2", "--degree", "2", "--exhaustive-degree", "2", "--trials", "2", "--seed", "7", "--jobs", "2"],
    ] {
        let o = run(&args);
        assert!(o.status.success(), "{:?}", args);
        assert!(stdout(&o).starts_with("PASS\n"), "{:?}", args);
    }
    let o = run(&["verify", "shuffle", "--n", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["records"].as_array().unwrap().len(), 2);
}

#[test]
fn deterministic_output() {
    let a = run(&["verify", "relations", "--k-max", "1", "--degree", "2", "--trials", "3", "--seed", "5", "--json"]);
    let b = run(&["verify", "relations", "--k-max", "1", "--degree", "2", "--trials", "3", "--seed", "5", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn errors_and_degree_cap() {
    let o = run(&["chi", "--path", "NNE"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_ne!(run(&["frobnicate"]).status.code(), Some(0));
    let capped = Command::new(env!("CARGO_BIN_EXE_compshuffle"))
        .args(["macdonald", "--mu", "2,2"])
        .env("SHUFFLE_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}
