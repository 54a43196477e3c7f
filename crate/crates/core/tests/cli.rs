use std::process::Command;

const FIB_Q: &str = "ring=Q;p=[-1,-1,1];init=[0,1]";

fn recseq(args: &[&str]) -> (i32, String, String) {
    recseq_env(args, None)
}

fn recseq_env(args: &[&str], prefix: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_recseq"));
    cmd.args(args).env_remove("RECSEQ_PREFIX");
    if let Some(p) = prefix {
        cmd.env("RECSEQ_PREFIX", p);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn hurwitz_of_fibonacci() {
    let (code, out, _) = recseq(&["op", "--kind", "hurwitz", "-a", FIB_Q, "-b", FIB_Q, "-n", "8"]);
    assert_eq!(code, 0);
    // (t-1)^2 (t^2-2t-4)
    assert!(out.contains("charpoly: [-4,6,1,-4,1]"), "{out}");
    assert!(out.contains("order: 4"), "{out}");
    assert!(out.contains("terms: [0,0,2,6,22,70,230,742]"), "{out}");
}

#[test]
fn structured_output_is_stable() {
    let args = ["--format", "structured", "op", "--kind", "newton", "-a", FIB_Q, "-b", "ring=Q;p=[-1/2,1];init=[3/4]"];
    let (code, first, _) = recseq(&args);
    assert_eq!(code, 0);
    let (_, second, _) = recseq(&args);
    assert_eq!(first, second);
    let tree: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(tree["kind"], "newton");
    assert_eq!(tree["order"], "2");
    assert_eq!(tree["initial"][0], "0");
    assert!(tree["terms"].as_array().unwrap().iter().all(|t| t.is_string()));
}

#[test]
fn terms_and_charpoly_op() {
    let (code, out, _) = recseq(&["terms", "-s", "ring=Zmod:7;p=[-1,-1,1];init=[0,1]", "-n", "10"]);
    assert_eq!((code, out.trim()), (0, "[0,1,1,2,3,5,1,6,0,6]"));
    let (code, out, _) = recseq(&["charpoly-op", "--kind", "boxtimes", "-p", "[-2,1]", "-q", "[-3,1]"]);
    assert_eq!((code, out.trim()), (0, "[-11,1]"));
    let (code, out, _) = recseq(&["charpoly-op", "--kind", "star", "-p", "[-1,1]", "-q", "[-2,1]", "--ring", "Zmod:5"]);
    assert_eq!((code, out.trim()), (0, "[2,1]"));
}

#[test]
fn inverse_and_witness() {
    let (code, out, _) = recseq(&["invert", "-s", "ring=Q;p=[-1,1];init=[1]", "-n", "4"]);
    assert_eq!((code, out.trim()), (0, "[1,-1/2,1/4,-1/8]"));
    let (code, out, _) = recseq(&["--format", "structured", "invert", "-s", "ring=Z;p=[-1,1];init=[1]", "-n", "4"]);
    assert_eq!(code, 1);
    let tree: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(tree["witness"]["index"], "1");
    assert_eq!(tree["witness"]["value"], "2");
}

#[test]
fn transforms() {
    let (code, out, _) = recseq(&["transform", "--kind", "binomial", "-s", "ring=Z;p=[-1,-1,1];init=[0,1]", "-n", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("terms: [0,1,3,8,21,55]"), "{out}");
    let (code, out, _) = recseq(&["psi", "-s", "ring=Z;p=[0,1];init=[1]", "-n", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("terms: [1,-1,1,-1,1]"), "{out}");
}

#[test]
fn verify_checks() {
    let (code, out, _) = recseq(&["verify", "--check", "recurrence", "-s", "ring=Z;terms=[1,2,4,8]", "-p", "[-3,1]"]);
    assert_eq!(code, 1);
    assert!(out.contains("index 1 expected 3"), "{out}");
    assert_eq!(recseq(&["verify", "--check", "ogf", "-s", FIB_Q, "--extra", "50"]).0, 0);
    assert_eq!(recseq(&["verify", "--check", "decomposition", "-a", FIB_Q, "-b", FIB_Q]).0, 0);
    assert_eq!(recseq(&["verify", "--check", "morphism", "--map", "psi-inverse", "-a", FIB_Q, "-b", FIB_Q]).0, 0);
    assert_eq!(recseq(&["verify", "--check", "inverse", "-s", "ring=Q;p=[-1,1];init=[1]"]).0, 0);
    assert_eq!(recseq(&["verify", "--check", "inverse", "-s", "ring=Z;p=[-1,1];init=[1]"]).0, 1);
}

#[test]
fn prefix_from_environment() {
    let (code, out, _) = recseq_env(&["verify", "--check", "decomposition", "-a", FIB_Q, "-b", FIB_Q], Some("12"));
    assert_eq!(code, 0);
    assert!(out.contains("(prefix 12)"), "{out}");
    let (code, out, _) = recseq(&["verify", "--check", "decomposition", "-a", FIB_Q, "-b", FIB_Q]);
    assert_eq!(code, 0);
    assert!(out.contains("(prefix 30)"), "{out}");
    assert_eq!(recseq_env(&["verify", "--check", "ogf", "-s", FIB_Q], Some("zero")).0, 2);
}

#[test]
fn parse_and_usage_errors() {
    let (code, _, err) = recseq(&["terms", "-s", "ring=Zmod:1;p=[0,1];init=[1]"]);
    assert_eq!(code, 2);
    assert!(err.contains("modulus"), "{err}");
    assert_eq!(recseq(&["op", "--kind", "sum", "-a", FIB_Q, "-b", "ring=Z;p=[0,1];init=[1]"]).0, 2);
    assert_eq!(recseq(&["charpoly-op", "--kind", "star", "-p", "[-1,-1,2]", "-q", "[0,1]"]).0, 2);
    assert_eq!(recseq(&["terms", "-s", FIB_Q, "--unknown"]).0, 2);
    assert_eq!(recseq(&["frobnicate"]).0, 2);
    let (code, out, _) = recseq(&["--format", "structured", "terms", "-s", "ring=Z;p=[0,x,1];init=[1,2]"]);
    assert_eq!(code, 2);
    let tree: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(tree["position"], "12");
}
