//! End-to-end tests of the `fuzzcode` binary: spawn the real executable,
//! check stdout/stderr bytes and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fuzzcode"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn fuzzcode")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn assert_code(out: &Output, want: i32) {
    assert_eq!(
        out.status.code(),
        Some(want),
        "exit code mismatch\nstdout:\n{}\nstderr:\n{}",
        stdout(out),
        stderr(out)
    );
}

fn tmp(name: &str) -> PathBuf {
    let dir = tempfile::tempdir().expect("tempdir").keep();
    dir.join(name)
}

fn construct(name: &str, extra: &[&str], out: &Path) {
    let mut args = vec!["construct", name];
    args.extend_from_slice(extra);
    let out_str = out.to_str().unwrap();
    args.extend_from_slice(&["--out", out_str]);
    let r = run(&args);
    assert_code(&r, 0);
}

fn repo_data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

#[test]
fn golay_info_summary_line() {
    let f = tmp("golay.code");
    construct("golay", &[], &f);
    let r = run(&["info", f.to_str().unwrap()]);
    assert_code(&r, 0);
    let text = stdout(&r);
    assert!(text.contains("summary: 24 12 8 self-dual"), "got:\n{text}");
    assert!(text.contains("error_capability: 3"));
}

#[test]
fn fuzzy_rm_5_verifies_as_fuzzy_self_dual() {
    let f = tmp("rm5.fuzzy");
    construct("fuzzy-rm", &["--m", "5"], &f);
    let r = run(&["verify", f.to_str().unwrap()]);
    assert_code(&r, 0);
    let text = stdout(&r);
    assert!(text.contains("fuzzy self-dual: yes"), "got:\n{text}");
    assert!(text.contains("verdict: ok"));
}

#[test]
fn every_construction_round_trips_through_verify() {
    let cases: &[(&str, &[&str])] = &[
        ("hamming", &[]),
        ("ext-hamming", &[]),
        ("simplex", &[]),
        ("golay", &[]),
        ("rm", &["--r", "1", "--m", "3"]),
        ("fuzzy-v4", &[]),
        ("fuzzy-hamming-b", &[]),
        ("fuzzy-hamming-d", &[]),
        ("fuzzy-simplex-e", &[]),
        ("fuzzy-golay", &[]),
        ("fuzzy-rm", &["--m", "4"]),
    ];
    for (name, extra) in cases {
        let f = tmp("code.txt");
        construct(name, extra, &f);
        let r = run(&["verify", f.to_str().unwrap()]);
        assert_code(&r, 0);
        assert!(stdout(&r).contains("verdict: ok"), "{name} failed verify");
        let r = run(&["info", f.to_str().unwrap()]);
        assert_code(&r, 0);
    }
}

#[test]
fn corrupted_chain_fails_verify_naming_the_invariant() {
    let f = tmp("bad.fuzzy");
    let good = std::fs::read_to_string(repo_data("code_d.fuzzy")).unwrap();
    let bad = good.replace("dims: 0 1 2 3 4 5 6 7", "dims: 0 2 1 3 4 5 6 7");
    assert_ne!(good, bad);
    std::fs::write(&f, bad).unwrap();
    let r = run(&["verify", f.to_str().unwrap()]);
    assert_code(&r, 1);
    assert!(
        stderr(&r).contains("strictly increasing"),
        "stderr should name the violated invariant, got:\n{}",
        stderr(&r)
    );
}

#[test]
fn tampered_master_row_fails_verify() {
    let good = std::fs::read_to_string(repo_data("code_d.fuzzy")).unwrap();
    // Replace the last master row with a repeat of the first: prefixes lose
    // rank, so the declared dimensions no longer match.
    let mut lines: Vec<&str> = good.lines().collect();
    let first_row = lines[6];
    let last = lines.len() - 1;
    lines[last] = first_row;
    let f = tmp("tampered.fuzzy");
    std::fs::write(&f, lines.join("\n")).unwrap();
    let r = run(&["verify", f.to_str().unwrap()]);
    assert_code(&r, 1);
    assert!(stderr(&r).contains("dependent") || stderr(&r).contains("rank"), "got:\n{}", stderr(&r));
}

#[test]
fn decode_walkthrough_exact_report() {
    let d = repo_data("code_d.fuzzy");
    let r = run(&["decode", "--code", d.to_str().unwrap(), "--alpha1", "1/2", "--word", "00111101"]);
    assert_code(&r, 0);
    let want = "\
word: 00111101
membership: 3/8
table_entries: 2
classic_entries: 16
reduction_ratio: 8
syndrome: 0001
leader: 00010000
codeword: 00101101
corrected_membership: 5/8
reliable: yes
";
    assert_eq!(stdout(&r), want);
}

#[test]
fn decode_dump_table_lists_cosets_of_the_extension() {
    let d = repo_data("code_d.fuzzy");
    let r = run(&[
        "decode",
        "--code",
        d.to_str().unwrap(),
        "--alpha1",
        "1/2",
        "--word",
        "00111101",
        "--dump-table",
    ]);
    assert_code(&r, 0);
    let text = stdout(&r);
    let (dump, report) = text.split_once("\n\n").expect("dump then blank line then report");
    // Table for (1/2, 3/8): inner dim 4, outer dim 5 — 2^(5-4) = 2 entries.
    let lines: Vec<&str> = dump.lines().collect();
    assert_eq!(lines.len(), 2, "dump:\n{dump}");
    for line in &lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(parts.len(), 4, "line: {line}");
        assert!(parts[3] == "unique" || parts[3] == "tied");
    }
    assert!(lines.contains(&"0001 00010000 1 unique"));
    assert!(report.starts_with("word: 00111101"));
}

#[test]
fn decode_inside_cut_needs_no_correction() {
    let d = repo_data("code_d.fuzzy");
    let r = run(&["decode", "--code", d.to_str().unwrap(), "--alpha1", "1/2", "--word", "11010010"]);
    assert_code(&r, 0);
    let text = stdout(&r);
    assert!(text.contains("no correction needed"));
    assert!(text.contains("membership: 1/2"));
    assert!(text.contains("codeword: 11010010"));
}

#[test]
fn decode_outside_chain_warns_but_succeeds() {
    let d = repo_data("code_d.fuzzy");
    let r = run(&["decode", "--code", d.to_str().unwrap(), "--alpha1", "1/2", "--word", "11111110"]);
    assert_code(&r, 0);
    let text = stdout(&r);
    assert!(text.contains("membership: 0"));
    assert!(text.contains("warning: membership 0 lies outside the chain"));
    assert!(text.contains("corrected_membership: 1/2"));
}

#[test]
fn decode_respects_cap_override() {
    let d = repo_data("code_d.fuzzy");
    let r = bin()
        .args(["decode", "--code", d.to_str().unwrap(), "--alpha1", "1/2", "--word", "00111101"])
        .env("FUZZCODE_CAP", "4")
        .output()
        .unwrap();
    assert_code(&r, 1);
    assert!(stderr(&r).contains("cap"), "got:\n{}", stderr(&r));
}

#[test]
fn simulate_is_deterministic_per_seed() {
    let d = repo_data("code_d.fuzzy");
    let args = [
        "simulate",
        "--code",
        d.to_str().unwrap(),
        "--alpha1",
        "1/2",
        "--channel-p",
        "0.05",
        "--trials",
        "300",
        "--seed",
        "42",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_code(&a, 0);
    assert_eq!(stdout(&a), stdout(&b));
    // A different seed must give a different trajectory somewhere.
    let mut other = args;
    other[10] = "43";
    let c = run(&other);
    assert_code(&c, 0);
    assert_ne!(stdout(&a), stdout(&c));
}

#[test]
fn simulate_noiseless_channel_is_all_clean() {
    let d = repo_data("code_d.fuzzy");
    let r = run(&[
        "simulate",
        "--code",
        d.to_str().unwrap(),
        "--alpha1",
        "1/2",
        "--channel-p",
        "0",
        "--trials",
        "100",
        "--seed",
        "7",
    ]);
    assert_code(&r, 0);
    let text = stdout(&r);
    assert!(text.contains("clean: 100"), "got:\n{text}");
    assert!(text.contains("frame_success_rate: 1.000000"));
    assert!(text.contains("avg_error_weight: 0.000000"));
    assert!(text.contains("membership_correction_rate: 1.000000"));
}

#[test]
fn encode_linear_and_fuzzy_cut() {
    let h = tmp("hamming.code");
    construct("hamming", &[], &h);
    let r = run(&["encode", "--code", h.to_str().unwrap(), "--message", "1011"]);
    assert_code(&r, 0);
    assert_eq!(stdout(&r), "1011010\n");

    let d = repo_data("code_d.fuzzy");
    let r = run(&["encode", "--code", d.to_str().unwrap(), "--alpha", "1/2", "--message", "1011"]);
    assert_code(&r, 0);
    assert_eq!(stdout(&r).trim().len(), 8);
}

#[test]
fn dual_is_an_involution_through_files() {
    let h = tmp("hamming.code");
    construct("hamming", &[], &h);
    let once = tmp("dual.code");
    let r = run(&["dual", h.to_str().unwrap(), "--out", once.to_str().unwrap()]);
    assert_code(&r, 0);
    let twice = tmp("dualdual.code");
    let r = run(&["dual", once.to_str().unwrap(), "--out", twice.to_str().unwrap()]);
    assert_code(&r, 0);
    assert_eq!(
        std::fs::read_to_string(&h).unwrap(),
        std::fs::read_to_string(&twice).unwrap()
    );
    // The dual of the Hamming code is the [7,3] simplex code.
    let r = run(&["info", once.to_str().unwrap()]);
    assert!(stdout(&r).contains("summary: 7 3 4"));
}

#[test]
fn fuzzy_dual_exists_for_mirrored_chain_and_not_for_lopsided_one() {
    let e = tmp("simplex.fuzzy");
    construct("fuzzy-simplex-e", &[], &e);
    let dual = tmp("edual.fuzzy");
    let r = run(&["fuzzy-dual", e.to_str().unwrap(), "--out", dual.to_str().unwrap()]);
    assert_code(&r, 0);
    let r = run(&["verify", dual.to_str().unwrap()]);
    assert_code(&r, 0);

    // A chain whose image is not closed under complements has no dual.
    let lopsided = "FUZZYCODE 1\nfield: 2\nlength: 3\nlevels: 3\nalphas: 1 1/2 1/3\ndims: 0 2 3\n1 1 0\n1 0 1\n1 1 1\n";
    let f = tmp("lopsided.fuzzy");
    std::fs::write(&f, lopsided).unwrap();
    let r = run(&["fuzzy-dual", f.to_str().unwrap()]);
    assert_code(&r, 1);
    assert!(stderr(&r).contains("no orthogonal fuzzy code exists"), "got:\n{}", stderr(&r));
}

#[test]
fn extsum_of_chains_is_a_chain() {
    let a = tmp("a.fuzzy");
    construct("fuzzy-v4", &[], &a);
    let out = tmp("sum.fuzzy");
    let r = run(&["extsum", a.to_str().unwrap(), a.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_code(&r, 0);
    let text = stdout(&r);
    assert!(text.contains("linear: yes"), "got:\n{text}");
    // A chain absorbs itself: the sum is the same fuzzy code.
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&out).unwrap()
    );
}

#[test]
fn meet_and_directsum_produce_verified_chains() {
    let a = tmp("a.fuzzy");
    construct("fuzzy-v4", &[], &a);
    let b = tmp("b.fuzzy");
    construct("fuzzy-hamming-d", &[], &b);

    let met = tmp("met.fuzzy");
    let r = run(&["meet", a.to_str().unwrap(), a.to_str().unwrap(), "--out", met.to_str().unwrap()]);
    assert_code(&r, 0);
    let r = run(&["verify", met.to_str().unwrap()]);
    assert_code(&r, 0);

    let joined = tmp("joined.fuzzy");
    let r = run(&[
        "directsum",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--out",
        joined.to_str().unwrap(),
    ]);
    assert_code(&r, 0);
    let r = run(&["verify", joined.to_str().unwrap()]);
    assert_code(&r, 0);
    let r = run(&["info", joined.to_str().unwrap()]);
    assert!(stdout(&r).contains("length: 12"));

    // Meet requires a common ambient space.
    let r = run(&["meet", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_code(&r, 1);
    assert!(stderr(&r).contains("different spaces"));
}

#[test]
fn usage_errors_exit_2() {
    // Unknown construction name.
    let r = run(&["construct", "nonsense"]);
    assert_code(&r, 2);
    // Missing file.
    let r = run(&["info", "/nonexistent/code.txt"]);
    assert_code(&r, 2);
    // Wrong message length.
    let h = tmp("hamming.code");
    construct("hamming", &[], &h);
    let r = run(&["encode", "--code", h.to_str().unwrap(), "--message", "10"]);
    assert_code(&r, 2);
    assert!(stderr(&r).contains("length"));
    // Wrong word alphabet.
    let d = repo_data("code_d.fuzzy");
    let r = run(&["decode", "--code", d.to_str().unwrap(), "--alpha1", "1/2", "--word", "00112201"]);
    assert_code(&r, 2);
    // Zero confidence level.
    let r = run(&["decode", "--code", d.to_str().unwrap(), "--alpha1", "0", "--word", "00111101"]);
    assert_code(&r, 2);
    // Unknown flag (clap's own exit code).
    let r = run(&["info", "--bogus"]);
    assert_code(&r, 2);
    // rm without its parameters.
    let r = run(&["construct", "rm"]);
    assert_code(&r, 2);
    // channel probability out of range.
    let r = run(&[
        "simulate", "--code", d.to_str().unwrap(), "--alpha1", "1/2", "--channel-p", "1.5",
        "--trials", "10", "--seed", "1",
    ]);
    assert_code(&r, 2);
}

#[test]
fn oracle_subcommand_works_but_stays_hidden() {
    let h = tmp("hamming.code");
    construct("hamming", &[], &h);
    let r = run(&["oracle", "mindist", h.to_str().unwrap()]);
    assert_code(&r, 0);
    assert_eq!(stdout(&r).trim(), "3");

    let d = repo_data("code_d.fuzzy");
    let r = run(&["oracle", "membership", d.to_str().unwrap(), "00111101"]);
    assert_code(&r, 0);
    assert_eq!(stdout(&r).trim(), "3/8");

    let r = run(&["oracle", "nearest", h.to_str().unwrap(), "1111110"]);
    assert_code(&r, 0);
    assert!(stdout(&r).contains("unique") || stdout(&r).contains("tied"));

    let help = run(&["--help"]);
    assert_code(&help, 0);
    assert!(!stdout(&help).contains("oracle"), "oracle should not be advertised");
}

#[test]
fn construct_fuzzy_rm_rejects_bad_levels() {
    // Levels must be strictly decreasing inside (1/2, 1).
    let r = run(&["construct", "fuzzy-rm", "--m", "4", "--alphas", "1/2,1/4"]);
    assert_code(&r, 2);
    let r = run(&["construct", "fuzzy-rm", "--m", "4", "--alphas", "15/16,15/16"]);
    assert_code(&r, 2);
    // The right number of well-placed levels works.
    let f = tmp("rm4.fuzzy");
    construct("fuzzy-rm", &["--m", "4", "--alphas", "9/10,6/10"], &f);
    let r = run(&["verify", f.to_str().unwrap()]);
    assert_code(&r, 0);
}
