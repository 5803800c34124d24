mod common;

use std::fmt::Write as _;

use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{fixture, scratch, spliff};
use spliffer_core::decision::{equivalent_deterministic, equivalent_functional, is_functional};
use spliffer_core::rational::{product, star, trim, union};
use spliffer_core::{format, random, Spliffer};

const FIXTURES: [&str; 7] =
    ["fig1.spl", "fig2a.spl", "fig2b.spl", "fig3.spl", "fig4.spl", "single_left_a.spl", "single_right_a.spl"];

fn load(name: &str) -> Spliffer {
    format::parse(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

#[test]
fn check_fun_fig1_reports_witness() {
    let run = spliff(["check-fun".as_ref(), fixture("fig1.spl").as_os_str()]);
    assert_eq!(run.code, 1);
    assert_eq!(run.stdout, "NOT FUNCTIONAL\ninput: aba\noutput: a | ab\noutput: aa | b\n");
    assert!(run.stderr.is_empty());
}

#[test]
fn equiv_fig2_det() {
    let run = spliff(["equiv".as_ref(), fixture("fig2a.spl").as_os_str(), fixture("fig2b.spl").as_os_str(), "--det".as_ref()]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "EQUIVALENT\n"));
}

#[test]
fn split_fig1_lexicographic() {
    let run = spliff(["split".as_ref(), fixture("fig1.spl").as_os_str(), "aba".as_ref()]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "a | ab\naa | b\n"));
}

#[test]
fn accepts_and_rejects() {
    let f = fixture("fig1.spl");
    let run = spliff(["accepts".as_ref(), f.as_os_str(), "aa".as_ref(), "b".as_ref(), "aba".as_ref()]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "ACCEPTED\n"));
    let run = spliff(["accepts".as_ref(), f.as_os_str(), "ab".as_ref(), "a".as_ref(), "aba".as_ref()]);
    assert_eq!((run.code, run.stdout.as_str()), (1, "REJECTED\n"));
    let run = spliff(["accepts".as_ref(), f.as_os_str(), "aa".as_ref(), "b".as_ref(), "abb".as_ref()]);
    assert_eq!(run.code, 2);
    assert!(run.stdout.is_empty() && !run.stderr.is_empty());
}

#[test]
fn empty_word_is_a_dash() {
    let run = spliff(["split".as_ref(), fixture("single_left_a.spl").as_os_str(), "a".as_ref()]);
    assert_eq!(run.stdout, "a | -\n");
    let run = spliff(["accepts".as_ref(), fixture("single_right_a.spl").as_os_str(), "-".as_ref(), "a".as_ref(), "a".as_ref()]);
    assert_eq!(run.code, 0);
}

#[test]
fn validate_and_check_det() {
    let run = spliff(["validate".as_ref(), fixture("fig3.spl").as_os_str()]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "VALID\n"));
    let bad = scratch("bad_range.spl", "alphabet: a\nstates: 2\ninitial: 0\nfinal: 3\ntrans: 0 b L 1\n");
    let run = spliff(["validate".as_ref(), bad.as_os_str()]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.starts_with("INVALID\n"));
    assert_eq!(run.stdout.lines().count(), 3);

    let run = spliff(["check-det".as_ref(), fixture("fig2a.spl").as_os_str()]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "DETERMINISTIC\n"));
    let run = spliff(["check-det".as_ref(), fixture("fig1.spl").as_os_str()]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.starts_with("NOT DETERMINISTIC\n"));
}

#[test]
fn errors_exit_2_on_stderr() {
    let bad = scratch("bad_tape.spl", "alphabet: a\nstates: 2\ninitial: 0\ntrans: 0 a X 1\n");
    let run = spliff(["check-fun".as_ref(), bad.as_os_str()]);
    assert_eq!(run.code, 2);
    assert!(run.stdout.is_empty());
    assert!(run.stderr.contains("line 4, column 12: tape must be L or R"), "{}", run.stderr);

    let run = spliff(["check-fun", "/nonexistent/machine.spl"]);
    assert_eq!(run.code, 2);

    let run = spliff(["enumerate"]);
    assert_eq!(run.code, 2);

    let run = spliff(["equiv".as_ref(), fixture("fig1.spl").as_os_str(), fixture("fig2a.spl").as_os_str(), "--det".as_ref()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("first machine is not deterministic"));
}

#[test]
fn operations_write_files_or_stdout() {
    let f = fixture("fig4.spl");
    let out = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("star_fig4.spl");
    let run = spliff(["star".as_ref(), f.as_os_str(), "-o".as_ref(), out.as_os_str()]);
    assert_eq!((run.code, run.stdout.as_str()), (0, ""));
    let written = std::fs::read_to_string(&out).unwrap();
    assert_eq!(spliff(["star".as_ref(), f.as_os_str()]).stdout, written);
    assert_eq!(format::parse(&written).unwrap(), star(&load("fig4.spl")));

    let run = spliff(["project-input".as_ref(), fixture("fig1.spl").as_os_str()]);
    assert_eq!(run.stdout, format::serialize_nfa(&load("fig1.spl").input_projection()));
}

/// Library rendering of every report the CLI prints for one machine file.
fn library_reports(m: &Spliffer, other: &Spliffer) -> Vec<(Vec<&'static str>, String, i32)> {
    let fun = is_functional(m);
    let det = match m.is_deterministic() {
        Ok(()) => ("DETERMINISTIC\n".to_string(), 0),
        Err(v) => (format!("NOT DETERMINISTIC\nreason: {v}\n"), 1),
    };
    let eq = equivalent_functional(m, other);
    let mut enumerated = String::new();
    for t in m.enumerate_behavior(5) {
        let _ = writeln!(enumerated, "{t}");
    }
    let mut reports = vec![
        (vec!["check-fun", "M"], fun.to_string(), if fun.is_functional() { 0 } else { 1 }),
        (vec!["check-det", "M"], det.0, det.1),
        (vec!["equiv", "M", "N"], eq.to_string(), if eq.is_equivalent() { 0 } else { 1 }),
        (vec!["enumerate", "M", "--max-len", "5"], enumerated, 0),
        (vec!["union", "M", "N"], format::serialize(&union(m, other)), 0),
        (vec!["product", "M", "N"], format::serialize(&product(m, other)), 0),
        (vec!["star", "M"], format::serialize(&star(m)), 0),
        (vec!["trim", "M"], format::serialize(&trim(m)), 0),
    ];
    if let Ok(eq) = equivalent_deterministic(m, other) {
        reports.push((vec!["equiv", "M", "N", "--det"], eq.to_string(), if eq.is_equivalent() { 0 } else { 1 }));
    }
    reports
}

fn assert_thin_wrapper(m: &Spliffer, other: &Spliffer, tag: &str) {
    let mp = scratch(&format!("{tag}_m.spl"), &format::serialize(m));
    let np = scratch(&format!("{tag}_n.spl"), &format::serialize(other));
    for (args, text, code) in library_reports(m, other) {
        let argv: Vec<&std::ffi::OsStr> = args
            .iter()
            .map(|a| match *a {
                "M" => mp.as_os_str(),
                "N" => np.as_os_str(),
                a => a.as_ref(),
            })
            .collect();
        let run = spliff(&argv);
        assert_eq!((run.code, &run.stdout), (code, &text), "{tag}: {args:?}");
    }
}

#[test]
fn cli_agrees_with_library_on_fixtures() {
    for (i, name) in FIXTURES.iter().enumerate() {
        let other = FIXTURES[(i + 1) % FIXTURES.len()];
        assert_thin_wrapper(&load(name), &load(other), &format!("fixture{i}"));
    }
}

#[test]
fn cli_agrees_with_library_on_random_machines() {
    let mut rng = StdRng::seed_from_u64(21);
    for i in 0..12 {
        let (m, n) = if i % 2 == 0 {
            (random::spliffer(&mut rng, 4, 2, 0.15), random::spliffer(&mut rng, 4, 2, 0.15))
        } else {
            let d = random::deterministic(&mut rng, 4, 2, 0.8);
            let e = random::mutate_deterministic(&mut rng, &d);
            (d, e)
        };
        assert_thin_wrapper(&m, &n, &format!("random{i}"));
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let f1 = fixture("fig1.spl");
    let f3 = fixture("fig3.spl");
    let commands: Vec<Vec<&std::ffi::OsStr>> = vec![
        vec!["check-fun".as_ref(), f1.as_os_str()],
        vec!["enumerate".as_ref(), f3.as_os_str()],
        vec!["union".as_ref(), f1.as_os_str(), f3.as_os_str()],
        vec!["product".as_ref(), f3.as_os_str(), f1.as_os_str()],
        vec!["equiv".as_ref(), f1.as_os_str(), f3.as_os_str()],
        vec!["split".as_ref(), f3.as_os_str(), "babab".as_ref()],
    ];
    for args in commands {
        let first = spliff(&args);
        for _ in 0..3 {
            let again = spliff(&args);
            assert_eq!((again.code, &again.stdout, &again.stderr), (first.code, &first.stdout, &first.stderr));
        }
    }
}

#[test]
fn fixtures_round_trip() {
    for name in FIXTURES {
        let m = load(name);
        assert_eq!(format::parse(&format::serialize(&m)).unwrap(), m, "{name}");
    }
}
