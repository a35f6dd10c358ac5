use std::path::PathBuf;
use std::process::{Command, Output};

use contscope_cli::{EXIT_FAILED, EXIT_INPUT, EXIT_OK};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contscope"))
        .current_dir(root())
        .args(args)
        .output()
        .expect("spawn contscope")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const GIRLS: &str = "data/models/girls_boys.model";
const GIRLS_S: &str = "data/models/every_girl_likes_a_boy.sentence";

#[test]
fn golden_table() {
    let o = run(&["readings", GIRLS, GIRLS_S]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert_eq!(stdout(&o), include_str!("golden/girls_boys.txt"));
}

#[test]
fn strategy_a_records() {
    let o = run(&["readings", GIRLS, GIRLS_S, "--strategy", "a", "--format", "records"]);
    assert_eq!(stdout(&o), "A|(1,2)|(1,2)|true\nA|(2,1)|(2,1)|false\n");
}

#[test]
fn arity_three_c_has_four_readings() {
    let o = run(&[
        "readings",
        "data/models/school.model",
        "data/models/some_teacher_gave_every_student_most_books.sentence",
        "--strategy",
        "c",
        "--format",
        "records",
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let orders: Vec<String> = stdout(&o).lines().map(|l| l.split('|').nth(2).unwrap().to_string()).collect();
    assert_eq!(orders, ["(1,2,3)", "(1,3,2)", "(2,3,1)", "(3,2,1)"]);
}

#[test]
fn trees_report_the_reading_value() {
    let o = run(&["readings", GIRLS, GIRLS_S, "--strategy", "b", "--show-trees"]);
    let text = stdout(&o);
    assert!(text.contains("== B (2,1) =="));
    assert!(text.contains("PLF: "));
    assert_eq!(text.matches("tree value: true").count(), 1);
    assert_eq!(text.matches("tree value: false").count(), 1);
}

#[test]
fn unknown_noun_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("s.sentence");
    std::fs::write(&s, "qp1: every kid\nqp2: a boy\nverb: likes\n").unwrap();
    let o = run(&["readings", GIRLS, s.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_INPUT));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("unknown noun `kid`"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn missing_file_is_an_input_error() {
    let o = run(&["readings", "no/such.model", GIRLS_S]);
    assert_eq!(o.status.code(), Some(EXIT_INPUT));
}

#[test]
fn continuation_laws_pass() {
    let o = run(&["check", "--suite", "monad-laws", "--monad", "continuation", "--max-size", "1"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let text = stdout(&o);
    assert!(text.contains("PASS monad laws [continuation]"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn list_pileups_print_rows_and_columns() {
    let o = run(&["check", "--suite", "pileup", "--monad", "list:3", "--max-size", "2"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let text = stdout(&o);
    assert!(text.contains("rows:    pul([0,1],[0,1]) = [⟨0,0⟩,⟨0,1⟩,⟨1,0⟩,⟨1,1⟩]"));
    assert!(text.contains("columns: pur([0,1],[0,1]) = [⟨0,0⟩,⟨1,0⟩,⟨0,1⟩,⟨1,1⟩]"));
    assert!(text.contains("not commutative"));
}

#[test]
fn bad_monad_is_rejected() {
    let o = run(&["check", "--monad", "state"]);
    assert_eq!(o.status.code(), Some(EXIT_INPUT));
}

#[test]
fn tampered_witness_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    for f in ["continuation_noncommuting.txt", "exception_noncommuting.txt", "incompleteness_213.txt", "incompleteness_312.txt"] {
        std::fs::copy(root().join("data/witnesses").join(f), dir.path().join(f)).unwrap();
    }
    let path = dir.path().join("incompleteness_213.txt");
    let text = std::fs::read_to_string(&path).unwrap().replace("sigma_truth: false", "sigma_truth: true");
    std::fs::write(&path, text).unwrap();
    let o = run(&["witnesses", "--verify", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_FAILED));
    assert!(stdout(&o).contains("FAIL incompleteness_213.txt"));
}

#[test]
fn stored_witnesses_verify() {
    let o = run(&["witnesses", "--verify", "data/witnesses"]);
    assert_eq!(o.status.code(), Some(EXIT_OK), "{}", stdout(&o));
}
