//! End-to-end tests of the `qsym` binary: the documented invocations,
//! output formats, exit codes, and round-tripping of printed elements.

use std::process::{Command, Output};

fn qsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).trim().to_string()
}

#[test]
fn mul_prints_the_product() {
    let out = qsym(&["mul", "M", "(2)", "(3)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "M(2,3) + M(3,2) + M(5)");
}

#[test]
fn mul_in_e_basis_mirrors_signs() {
    let out = qsym(&["mul", "E", "(2)", "(3)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "E(2,3) + E(3,2) - E(5)");
}

#[test]
fn eval_mod_p_prints_the_residue() {
    let out = qsym(&["eval", "S", "(2,1)", "--prime", "11"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4");
}

#[test]
fn eval_exact_prints_the_rational() {
    let out = qsym(&["eval", "A", "(1)", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "11/6");
}

#[test]
fn eval_csv_rows() {
    let out = qsym(&["eval", "S", "(2,1)", "--primes", "11..13", "--csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("kind,composition,p,value"));
    assert_eq!(lines.next(), Some("S,\"(2,1)\",11,4"));
    assert!(lines.next().unwrap().starts_with("S,\"(2,1)\",13,"));
}

#[test]
fn generator_table_at_67() {
    let out = qsym(&["table", "--weight", "9", "--prime", "67", "--generators"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "S(6,1,1,1)=7 S(8,1)=0 S(2,1)*S(4,1,1)=4");
}

#[test]
fn verify_theorem_exits_zero() {
    let out = qsym(&["verify", "--theorem", "4.6", "--primes", "11..31", "--max-weight", "6"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn verify_json_is_machine_readable() {
    let out = qsym(&["verify", "--theorem", "4.3", "--primes", "11..13", "--json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed[0]["failed"], 0);
    assert_eq!(parsed[0]["id"], "4.3");
}

#[test]
fn fit_recovers_a_coefficient() {
    let out = qsym(&[
        "fit",
        "--target",
        "S(3,2)",
        "--generators",
        "S(4,1)",
        "--primes",
        "11,13,17",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "S(3,2) = -2*S(4,1) (validated at p=17)");
}

#[test]
fn printed_elements_reparse() {
    for invocation in [
        vec!["mul", "M", "(1,2)", "(2)"],
        vec!["antipode", "2*M(1,1) + M(3)"],
        vec!["psi", "M(2,1)"],
        vec!["convert", "F(2,1)", "--to", "M"],
    ] {
        let out = qsym(&invocation);
        assert!(out.status.success());
        let printed = stdout(&out);
        // Feeding the output back through `convert --to` its own basis
        // must print the identical string.
        let basis = printed
            .chars()
            .find(|c| ['M', 'E', 'F'].contains(c))
            .unwrap()
            .to_string();
        let round = qsym(&["convert", &printed, "--to", &basis]);
        assert!(round.status.success());
        assert_eq!(stdout(&round), printed, "round-trip of {invocation:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for invocation in [
        vec!["eval", "S", "(2,0)", "--prime", "11"],
        vec!["eval", "S", "(2,1)", "--prime", "10"],
        vec!["verify", "--theorem", "nope", "--primes", "11..13"],
        vec!["verify", "--theorem", "4.6", "--primes", "31..11"],
        vec!["mul", "Q", "(2)", "(3)"],
    ] {
        let out = qsym(&invocation);
        assert_eq!(out.status.code(), Some(2), "exit code for {invocation:?}");
    }
}

#[test]
fn verification_failure_exits_one() {
    // A wrong relation table makes the weight-5 sweep fail.
    let dir = std::env::temp_dir().join("qsym-cli-test-tables");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.tbl");
    std::fs::write(&path, "5; GENERATORS; S(4,1); 6\n5; S(3,2); 7*S(4,1); 6\n").unwrap();
    let out = qsym(&[
        "table",
        "--weight",
        "5",
        "--primes",
        "11..13",
        "--tables",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn psi_word_mode() {
    let out = qsym(&["psi", "--word", "x^2y^3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-xxyyy - xyyyy - yxyyy - yyyyy");
}

#[test]
fn coproduct_of_a_power_sum() {
    let out = qsym(&["coproduct", "M(4)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1*()(x)(4) + 1*(4)(x)()");
}
