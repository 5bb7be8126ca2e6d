use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_liecoeff"));
    c.env_remove("LIECOEFF_MAX_DIM").env_remove("LIECOEFF_COFACTOR_MAX");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn sl2_standard_charpoly() {
    let o = run(&["charpoly", "--algebra", "sl2", "--d", "1", "--format", "plain"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x0^2 - (x2^2 + x1*x3)\n");
}

#[test]
fn heisenberg_is_nilpotent() {
    let o = run(&["nilpotent", "--basis", &data("heisenberg.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "nilpotent: true, charpoly: x0^3\n");

    let o = run(&["nilpotent", "--basis", &data("solvable3.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("nilpotent: false"));
}

#[test]
fn solvable_example_from_file() {
    let o = run(&["charpoly", "--algebra", &data("solvable3.json")]);
    assert_eq!(stdout(&o), "x0^3 + x1^2*x0\n");
}

#[test]
fn verify_single_and_all() {
    let o = run(&["verify", "--check", "product-formula", "--n", "2", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS product-formula (n=2, d=3)"));

    let o = run(&["verify", "--all", "--nmax", "3", "--dmax", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(!text.contains("FAIL"), "{text}");
    assert!(text.trim_end().ends_with("checks, 0 failed"));
}

#[test]
fn goldens() {
    let cases: [(&[&str], &str); 4] = [
        (&["coeffalg", "--algebra", "gl", "--n", "2", "--d", "3"], "gl2_s3_coeffalg.txt"),
        (&["coeffalg", "--algebra", "ut", "--n", "3", "--d", "2", "--format", "latex"], "ut3_s2_coeffalg.tex"),
        (&["charpoly", "--algebra", "sl2", "--d", "2", "--format", "json"], "sl2_s2_charpoly.json"),
        (&["sympow", "--algebra", "gl", "--n", "2", "--d", "2"], "gl2_s2_sympow.txt"),
    ];
    for (args, file) in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o), golden(file), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["coeffalg", "--algebra", "sl", "--n", "3", "--d", "1", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn emitted_json_reads_back() {
    let cases: [(&str, &[&str]); 6] = [
        ("charpoly.json", &["charpoly", "--algebra", "gl", "--n", "2", "--d", "2"]),
        ("report.json", &["coeffalg", "--algebra", "ut", "--n", "2", "--d", "3"]),
        ("sl_report.json", &["coeffalg", "--algebra", "sl", "--n", "3", "--d", "1"]),
        ("nilpotent.json", &["nilpotent", "--algebra", "heisenberg"]),
        ("sympow.json", &["sympow", "--algebra", "sl2", "--d", "3"]),
        ("verify.json", &["verify", "--check", "theorem2", "--n", "2", "--d", "2"]),
    ];
    for (file, args) in cases {
        let path = scratch(file);
        let mut full: Vec<&str> = args.to_vec();
        let p = path.display().to_string();
        full.extend(["--format", "json", "--output", &p]);
        let o = run(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(o.stdout.is_empty());
        let r = run(&["read", &p]);
        assert_eq!(r.status.code(), Some(0), "{file}: {}", String::from_utf8_lossy(&r.stderr));
        assert!(stdout(&r).starts_with("ok: "));
    }
}

#[test]
fn tampered_report_is_rejected() {
    let o = run(&["coeffalg", "--algebra", "gl", "--n", "2", "--d", "2", "--format", "json"]);
    let text = stdout(&o);
    // Claim z1 = 4*Tr1 instead of 3*Tr1.
    let needle = "\"coeff\": \"3\"";
    assert!(text.contains(needle));
    let path = scratch("tampered.json");
    std::fs::write(&path, text.replacen(needle, "\"coeff\": \"4\"", 1)).unwrap();
    let r = run(&["read", &path.display().to_string()]);
    assert_eq!(r.status.code(), Some(2));
}

#[test]
fn invalid_inputs_exit_2() {
    let o = run(&["nilpotent", "--basis", &data("not_closed.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("leaves the span"));

    let path = scratch("garbage.json");
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(run(&["charpoly", "--algebra", &path.display().to_string()]).status.code(), Some(2));
    assert_eq!(run(&["charpoly", "--algebra", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["coeffalg", "--algebra", "heisenberg"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--check", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["charpoly", "--d", "0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn caps_exit_3() {
    assert_eq!(run(&["charpoly", "--algebra", "gl", "--n", "4", "--d", "5"]).status.code(), Some(3));
    let o = bin().env("LIECOEFF_MAX_DIM", "3").args(["charpoly", "--algebra", "sl2", "--d", "3"]).output().unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = bin().env("LIECOEFF_MAX_DIM", "many").args(["charpoly"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cofactor_override_does_not_change_results() {
    let args = ["charpoly", "--algebra", "ut", "--n", "3", "--d", "2"];
    let default = run(&args).stdout;
    let o = bin().env("LIECOEFF_COFACTOR_MAX", "1").args(args).output().unwrap();
    assert_eq!(o.stdout, default);
}
