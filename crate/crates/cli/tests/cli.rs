use std::process::{Command, Output};

fn hesskit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hesskit"))
        .args(args)
        .env_remove("HESSKIT_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hesskit(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    hesskit(args).status.code().unwrap()
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn core_golden(name: &str) -> String {
    let path = format!("{}/../core/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn tree_dot_goldens() {
    assert_eq!(
        stdout(&["tree", "--mu", "2,2", "--kind", "gp"]),
        golden("gp_mu22.dot")
    );
    assert_eq!(
        stdout(&["tree", "--mu", "2,2", "--kind", "modified-gp"]),
        golden("modified_gp_mu22.dot")
    );
    assert_eq!(
        stdout(&["tree", "--h", "2,3,3", "--kind", "h"]),
        golden("h_h233.dot")
    );
    assert_eq!(
        stdout(&[
            "tree",
            "--h",
            "3,3,3,4",
            "--kind",
            "h-tableau",
            "--format",
            "dot"
        ]),
        golden("h_tableau_h3334.dot")
    );
}

#[test]
fn fillings_listings() {
    assert_eq!(
        stdout(&["fillings", "--h", "3,3,3", "--mu", "2,1"]),
        core_golden("fillings_h333_mu21.txt")
    );
    assert_eq!(
        stdout(&["fillings", "--h", "1,3,3", "--mu", "2,1"]),
        core_golden("fillings_h133_mu21.txt")
    );
    assert_eq!(
        stdout(&["fillings", "--h", "3,3,3,4", "--mu", "4"]),
        core_golden("fillings_h3334_mu4.txt")
    );
    assert_eq!(
        stdout(&["fillings", "--h", "1,2,3", "--mu", "3"]),
        "123\t-\t1\n"
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "fillings", "--h", "1,3,3", "--mu", "2,1", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(json.as_array().unwrap().len(), 4);
    assert_eq!(
        json[0]["filling"],
        serde_json::json!({ "shape": [2, 1], "word": [1, 2, 3] })
    );
    assert_eq!(json[0]["monomial"], "x3^2");
}

#[test]
fn betti() {
    assert_eq!(
        stdout(&["betti", "--h", "1,3,3", "--mu", "2,1"]),
        "1,2,1\n1 + 2*t^2 + t^4\n"
    );
    assert_eq!(
        stdout(&["betti", "--h", "1,2,3,4", "--mu", "4"])
            .lines()
            .next(),
        Some("1")
    );
    assert_eq!(
        stdout(&["betti", "--h", "3,3,3,4", "--mu", "4"])
            .lines()
            .next(),
        Some("1,2,2,1")
    );
}

#[test]
fn trees_other_formats() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "tree", "--mu", "2,2", "--kind", "gp", "--format", "json",
    ]))
    .unwrap();
    let leaves: Vec<&str> = json["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|n| {
            n.get("monomial")
                .and_then(|m| m.as_array())
                .map(|_| n["label"].as_str().unwrap())
        })
        .collect();
    assert_eq!(leaves, ["1", "x2", "x3", "x4", "x2*x4", "x3*x4"]);
    let chain = stdout(&[
        "tree",
        "--mu",
        "1",
        "--kind",
        "modified-gp",
        "--format",
        "plain",
    ]);
    assert_eq!(chain, "[1] .\n  [0] 1 -> 1\n    [B] 1 -> 1\n");
    let h_tree = stdout(&["tree", "--h", "2,3,3", "--kind", "h", "--format", "plain"]);
    assert_eq!(h_tree.lines().filter(|l| l.contains("[4]")).count(), 4);
}

#[test]
fn ideal_and_basis() {
    assert_eq!(
        stdout(&["ideal", "--h", "3,3,3,4"]),
        core_golden("ideal_h3334.txt")
    );
    assert_eq!(
        stdout(&["ideal", "--h", "3,3,3,4", "--leading"]),
        "<x4, x3^3, x2^2, x1>\n"
    );
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["ideal", "--h", "1,2", "--format", "json"])).unwrap();
    assert_eq!(
        json,
        serde_json::json!([[{ "exps": [0, 1], "coef": 1 }], [{ "exps": [1, 0], "coef": 1 }, { "exps": [0, 1], "coef": 1 }]])
    );
    assert_eq!(
        stdout(&["basis", "--h", "3,3,3,4"]),
        "1\nx2\nx3\nx2*x3\nx3^2\nx2*x3^2\n"
    );
    assert_eq!(
        stdout(&["basis", "--mu", "2,2"]),
        "1\nx2\nx3\nx4\nx2*x4\nx3*x4\n"
    );
}

#[test]
fn maps() {
    assert_eq!(
        stdout(&["psi", "--mu", "2,2,2", "--monomial", "x3*x4^2*x5*x6"]),
        "12/36/45\n"
    );
    assert_eq!(
        stdout(&[
            "phi",
            "--h",
            "1,2,3,4,5,6",
            "--mu",
            "2,2,2",
            "--filling",
            "12/36/45"
        ]),
        "x3*x4^2*x5*x6\n"
    );
    assert_eq!(
        stdout(&["psih", "--h", "2,4,4,5,5", "--monomial", "x2*x4^2*x5"]),
        "54213\n"
    );
    assert_eq!(
        stdout(&["phi", "--h", "2,4,4,5,5", "--filling", "54213"]),
        "x2*x4^2*x5\n"
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "phi",
        "--h",
        "2,4,4,5,5",
        "--filling",
        "54213",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(
        json["pairs"],
        serde_json::json!([[1, 2], [1, 4], [3, 4], [3, 5]])
    );
}

#[test]
fn verify() {
    assert_eq!(
        stdout(&["verify", "--all-n", "5"]),
        "42 functions checked, 0 failures\n"
    );
    assert_eq!(
        stdout(&["verify", "--h", "3,3,3,4"]),
        "1 function checked, 0 failures\n"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["fillings", "--h", "2,1", "--mu", "2"]), 2);
    assert_eq!(code(&["fillings", "--h", "1,2,3", "--mu", "2"]), 2);
    assert_eq!(code(&["tree", "--h", "2,3,3", "--kind", "gp"]), 2);
    assert_eq!(code(&["tree", "--mu", "2,2", "--kind", "h"]), 2);
    assert_eq!(code(&["psi", "--mu", "1,2", "--monomial", "1"]), 2);
    assert_eq!(code(&["phi", "--h", "2,3,5,5,5", "--filling", "54213"]), 2);
    assert_eq!(
        code(&["fillings", "--h", "1,2,3,4,5,6,7,8,9,10", "--mu", "10"]),
        3
    );
    assert_eq!(code(&["psih", "--h", "2,4,4,5,5", "--monomial", "x1"]), 4);
    assert_eq!(code(&["psi", "--mu", "2,2", "--monomial", "x2^2"]), 4);
    let capped = Command::new(env!("CARGO_BIN_EXE_hesskit"))
        .args(["fillings", "--h", "3,3,3,4", "--mu", "4"])
        .env("HESSKIT_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn deterministic_output() {
    let args = [
        "fillings",
        "--h",
        "2,3,4,5,5",
        "--mu",
        "3,2",
        "--format",
        "json",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}
