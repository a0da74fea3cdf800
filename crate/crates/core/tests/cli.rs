use std::process::{Command, Output};

use abext::parse_group;

fn abext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abext")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    abext(args).status.code().unwrap()
}

#[test]
fn ext_lists_the_four_extensions() {
    let o = abext(&["ext", "Z/4 x Z/2", "Z/2^2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "Z/8 x Z/4\nZ/8 x Z/2^2\nZ/4^2 x Z/2\nZ/4 x Z/2^3\n");
}

#[test]
fn ext_check_with_oracle() {
    let o = abext(&["ext", "--check", "Z/4^5", "Z/4^2 x Z/2", "Z/4^2 x Z/2", "--oracle"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "true\noracle: true\n");
    let o = abext(&["ext", "Z/2", "Z/2", "--check", "Z/6"]);
    assert_eq!(stdout(&o), "false\n");
    assert_eq!(code(&["ext", "Z/16", "Z/16", "--check", "Z/16^2", "--oracle", "--oracle-bound", "64"]), 3);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify", "thm-main", "--bound", "64"]), 0);
    assert_eq!(code(&["verify", "thm-main", "--bound", "16"]), 2);
    assert_eq!(code(&["verify", "prop-product-types", "--bound", "16"]), 2);
    assert_eq!(code(&["verify", "nonsense"]), 64);
    assert_eq!(code(&["verify", "thm-main", "--bound", "0"]), 64);
    assert_eq!(code(&["ext", "Z/0", "Z/2"]), 64);
    assert_eq!(code(&["member", "Z/4", "--family", "A9"]), 64);
    assert_eq!(code(&["enumerate", "--family", "A1", "--bound", "100000000"]), 3);
    assert_eq!(code(&["tables", "--frobnicate"]), 64);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&[]), 64);
}

#[test]
fn help_and_version_text() {
    let help = stdout(&abext(&["--help"]));
    for cmd in ["lr-expand", "lr-coeff", "ext", "member", "enumerate", "tables", "verify"] {
        assert!(help.contains(cmd), "{cmd}");
    }
    assert!(stdout(&abext(&["--version"])).starts_with("abext "));
}

#[test]
fn lr_commands() {
    assert_eq!(stdout(&abext(&["lr-coeff", "[2,1]", "[2,1]", "[3,2,1]"])), "2\n");
    let o = abext(&["lr-expand", "[2,1]", "[1,1]", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["shape"], serde_json::json!([3, 2]));
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(stdout(&abext(&["lr-expand", "[1,2]", "[]"])), "[2,1] 1\n");
    assert_eq!(code(&["lr-expand", "[2,-1]", "[1]"]), 64);
}

#[test]
fn member_and_enumerate() {
    assert_eq!(stdout(&abext(&["member", "Z/4^5", "--family", "PB4p"])), "true\n");
    assert_eq!(stdout(&abext(&["member", "Z/4^5", "--family", "PA4p"])), "false\n");
    let o = abext(&["member", "Z/4^4 x Z/2^2", "--family", "PA4p", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"], serde_json::json!([8]));
    assert_eq!(stdout(&abext(&["enumerate", "--family", "A2", "--bound", "4"])), "1\nZ/2\nZ/3\nZ/4\nZ/2^2\n");
}

#[test]
fn emitted_groups_reparse() {
    let text = stdout(&abext(&["enumerate", "--family", "PB4p", "--bound", "256"]));
    assert!(text.ends_with('\n'));
    for line in text.lines() {
        let g = parse_group(line).unwrap();
        assert_eq!(g.to_string(), line);
    }
}

#[test]
fn json_and_text_agree() {
    let text = stdout(&abext(&["verify", "prop-product-types"]));
    let json = stdout(&abext(&["verify", "prop-product-types", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    for w in v["witnesses"].as_array().unwrap() {
        assert!(text.contains(&format!("  {}\n", w.as_str().unwrap())));
    }
    assert!(text.contains(&format!("checked pairs: {}\n", v["checked_pairs"])));
}

#[test]
fn output_does_not_depend_on_jobs() {
    let one = stdout(&abext(&["verify", "thm-second", "--jobs", "1", "--format", "json"]));
    let four = stdout(&abext(&["verify", "thm-second", "--jobs", "4", "--format", "json"]));
    assert_eq!(one, four);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = abext(&["verify", "thm-main", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["witnesses"], serde_json::json!(["Z/4^5"]));
}

#[test]
fn properties_are_seeded() {
    assert_eq!(code(&["verify", "properties", "--seed", "7"]), 0);
    let a = stdout(&abext(&["verify", "properties", "--seed", "7"]));
    let b = stdout(&abext(&["verify", "properties", "--seed", "7"]));
    assert_eq!(a, b);
}
