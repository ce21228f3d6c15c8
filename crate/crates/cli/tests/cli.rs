use std::path::PathBuf;
use std::process::{Command, Output};

fn leaper(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leaper"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn connect_two_three_on_five_by_six() {
    let o = leaper(&["connect", "--r", "2", "--s", "3", "--m", "5", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("CONNECTED"));
}

#[test]
fn connect_reports_the_failing_condition() {
    let o = leaper(&["connect", "--r", "2", "--s", "3", "--m", "4", "--n", "20"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("DISCONNECTED\n"));
    assert!(text.contains("reason too-narrow"));
}

#[test]
fn construct_oblong_k2_is_nine_by_ten() {
    let o = leaper(&["construct", "--method", "thm6", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("leaper 1 4 9 10 10 closed"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.split_whitespace().count() == 10));
}

#[test]
fn construct_output_verifies() {
    for args in [
        ["--method", "thm4", "--r", "3"],
        ["--method", "thm5", "--k", "3"],
        ["--method", "thm6", "--k", "3"],
    ] {
        let path = scratch(&format!("construct-{}.txt", args[1]));
        let mut full = vec!["construct"];
        full.extend(args);
        full.extend(["--radix", "9", "--output", path.to_str().unwrap()]);
        assert_eq!(leaper(&full).status.code(), Some(0));
        let o = leaper(&["verify", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).starts_with("VALID closed tour"));
    }
}

#[test]
fn verify_rejects_a_broken_tour() {
    let path = scratch("broken.txt");
    let o = leaper(&["construct", "--method", "thm4", "--r", "1"]);
    let text = stdout(&o);
    // Swap the first two entries of the body.
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut row: Vec<String> = lines[1].split(' ').map(String::from).collect();
    row.swap(0, 1);
    lines[1] = row.join(" ");
    std::fs::write(&path, lines.join("\n")).unwrap();
    let o = leaper(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("INVALID"));
}

#[test]
fn certify_two_three_nine_by_nine() {
    let o = leaper(&["certify", "--r", "2", "--s", "3", "--m", "9", "--n", "9"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("certificate "));
    assert!(text.ends_with("end\n"));
}

#[test]
fn certify_unknown_and_check() {
    let o = leaper(&["certify", "--r", "1", "--s", "2", "--m", "5", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "UNKNOWN\n");

    let path = scratch("cert-2-3-6-8.txt");
    let board = ["--r", "2", "--s", "3", "--m", "6", "--n", "8"];
    let mut make = vec!["certify"];
    make.extend(board);
    make.extend(["--output", path.to_str().unwrap()]);
    assert_eq!(leaper(&make).status.code(), Some(1));
    let mut check = vec!["certify"];
    check.extend(board);
    check.extend(["--check", path.to_str().unwrap()]);
    let o = leaper(&check);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("VALID"));
}

#[test]
fn search_outcomes() {
    let o = leaper(&["search", "--r", "1", "--s", "2", "--m", "4", "--n", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NO TOUR (exhausted)\n");

    let o = leaper(&[
        "search", "--r", "1", "--s", "2", "--m", "6", "--n", "6", "--budget", "5",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "INCONCLUSIVE (budget)\n");

    let o = leaper(&["search", "--r", "1", "--s", "2", "--m", "3", "--n", "8", "--path"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("leaper 1 2 3 8 10 open\n"));

    let o = leaper(&["search", "--r", "1", "--s", "2", "--m", "5", "--n", "6", "--count"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("COUNT "));
}

#[test]
fn search_output_ignores_workers() {
    let base = ["search", "--r", "1", "--s", "2", "--m", "6", "--n", "6"];
    let one = leaper(&base);
    let mut more = base.to_vec();
    more.extend(["--workers", "4"]);
    let four = leaper(&more);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stderr, four.stderr);
}

#[test]
fn outputs_repeat_byte_for_byte() {
    for args in [
        vec!["connect", "--r", "1", "--s", "3", "--m", "8", "--n", "8"],
        vec!["certify", "--r", "2", "--s", "3", "--m", "7", "--n", "9"],
        vec!["bounds", "--r", "4"],
        vec!["diameter", "--r", "1", "--s", "2", "--m", "8", "--n", "8"],
        vec!["export-tsplib", "--r", "1", "--s", "2", "--m", "5", "--n", "6"],
    ] {
        let a = leaper(&args);
        let b = leaper(&args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn bounds_table() {
    let o = leaper(&["bounds", "--r", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "r 4\n\
         width {4,5} beyond 9 ranks: 18\n\
         file-count {4,5} on 9 ranks: base 44 improved 46\n\
         area {1,8}: 306\n"
    );
}

#[test]
fn diameter_and_export() {
    let o = leaper(&["diameter", "--r", "1", "--s", "2", "--m", "8", "--n", "8"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "6\n".to_string()));
    let o = leaper(&["diameter", "--r", "1", "--s", "3", "--m", "8", "--n", "8"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(1), "INFINITE\n".to_string()));
    let o = leaper(&["export-tsplib", "--r", "1", "--s", "2", "--m", "5", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("DIMENSION : 30"));
}

#[test]
fn render_draws_every_move() {
    let path = scratch("render.txt");
    let o = leaper(&[
        "construct",
        "--method",
        "thm4",
        "--r",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = leaper(&["render", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = stdout(&o);
    assert!(svg.contains("<svg"));
    let tour = leaper::tourio::parse_grid(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(leaper::tourio::count_moves(&svg), tour.len());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["connect", "--r", "3", "--s", "2", "--m", "5", "--n", "5"],
        vec!["connect", "--r", "1", "--s", "2", "--m", "0", "--n", "5"],
        vec!["construct", "--method", "thm4"],
        vec!["construct", "--method", "thm6", "--k", "1"],
        vec!["construct", "--method", "thm7", "--k", "2"],
        vec![
            "search",
            "--r",
            "1",
            "--s",
            "2",
            "--m",
            "5",
            "--n",
            "6",
            "--workers",
            "0",
        ],
        vec!["verify", "/nonexistent/grid.txt"],
        vec!["bounds", "--r", "0"],
        vec!["frobnicate"],
    ] {
        let o = leaper(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}
