use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn sp6(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sp6")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn matrix_file(json: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

const X0: &str = r#"[[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1],[0,0,0,0,0,0],[0,0,0,0,0,0],[0,0,0,0,0,0]]"#;

fn rep_42_json() -> String {
    let rows: Vec<Vec<i64>> = sp6_core::orbits::REP_42_ROWS.iter().map(|r| r.to_vec()).collect();
    serde_json::to_string(&rows).unwrap()
}

#[test]
fn jordan_type_of_x0() {
    let f = matrix_file(X0);
    let o = sp6(&["jordan-type", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[2,2,2]\nin-sp: true\n");
}

#[test]
fn representative_is_in_sp() {
    let f = matrix_file(&rep_42_json());
    let o = sp6(&["in-sp", f.path().to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = sp6(&["jordan-type", f.path().to_str().unwrap()]);
    assert!(stdout(&o).starts_with("[4,2]\n"));
}

#[test]
fn charpoly_output() {
    let zero = matrix_file(&serde_json::to_string(&vec![vec![0; 6]; 6]).unwrap());
    assert_eq!(stdout(&sp6(&["charpoly", zero.path().to_str().unwrap()])).trim(), "λ^6");
    let diag = matrix_file(r#"[["1/2", 0], [0, "i"]]"#);
    assert_eq!(stdout(&sp6(&["charpoly", diag.path().to_str().unwrap()])).trim(), "λ^2 + (-1/2-1i)*λ + (1/2i)");
}

#[test]
fn exit_codes_for_matrix_commands() {
    let not_nilpotent = matrix_file("[[1, 0], [0, 0]]");
    assert_eq!(sp6(&["jordan-type", not_nilpotent.path().to_str().unwrap()]).status.code(), Some(1));
    let garbage = matrix_file("[[1, 2], [3]]");
    assert_eq!(sp6(&["charpoly", garbage.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(sp6(&["in-sp", "/nonexistent/matrix.json"]).status.code(), Some(2));
    let odd = matrix_file("[[0]]");
    assert_eq!(stdout(&sp6(&["in-sp", odd.path().to_str().unwrap()])).trim(), "false");
}

#[test]
fn verify_writes_reports() {
    let out = NamedTempFile::new().unwrap();
    let path = out.path().to_str().unwrap();
    let o = sp6(&["verify", "--sections", "2,3", "--samples", "3", "--out", path]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let claims = report["claims"].as_array().unwrap();
    assert!(claims.iter().all(|c| c["status"] == "PASS"));
    assert!(claims.iter().all(|c| ["2", "3"].contains(&c["section"].as_str().unwrap())));
    let ids: Vec<&str> = claims.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);

    let md = stdout(&sp6(&["verify", "--sections", "5", "--samples", "3", "--format", "md"]));
    assert!(md.contains("| `S5.weyl-groups` | 5 | PASS |"));
}

#[test]
fn section_one_reports_the_trace_identities() {
    let o = sp6(&["verify", "--sections", "1", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let claim = report["claims"].as_array().unwrap().iter().find(|c| c["id"] == "S1.trace-identities").unwrap();
    assert_eq!(claim["status"], "PASS");
    assert!(claim["witness"].as_str().unwrap().contains("tr(A^4) - 2*g1^2 - 4*g2^2 = 0"));
}

#[test]
fn section_three_with_seed_seven() {
    let o = sp6(&["verify", "--sections", "3", "--seed", "7", "--samples", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<&str> = report["claims"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"S3.fiber-sampler") && ids.contains(&"S3.kernel-limit"));
    assert!(report["claims"].as_array().unwrap().iter().all(|c| c["status"] == "PASS"));
}
