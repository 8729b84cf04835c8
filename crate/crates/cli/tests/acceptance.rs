//! Acceptance: CLI determinism. Every command is run twice on committed
//! fixtures and compared byte for byte against a committed golden output,
//! and everything the CLI writes must parse back to an equal object.

use zkcss_cli::{run, Outcome};
use zkcss_core::format::{encoder_to_text, parse_artifact, parse_encoder, Artifact};

fn invoke(args: &[&str]) -> Outcome {
    run(std::iter::once("zkcss").chain(args.iter().copied()))
}

struct GoldenCase {
    name: &'static str,
    args: &'static [&'static str],
    want_code: u8,
    golden: &'static str,
}

const CASES: &[GoldenCase] = &[
    GoldenCase {
        name: "analyze encoder",
        args: &["analyze", "../core/fixtures/shamir5.enc"],
        want_code: 0,
        golden: include_str!("golden/analyze_shamir5_enc.txt"),
    },
    GoldenCase {
        name: "analyze css",
        args: &["analyze", "../core/fixtures/steane.css", "--css"],
        want_code: 0,
        golden: include_str!("golden/analyze_steane_css.txt"),
    },
    GoldenCase {
        name: "analyze regression encoder",
        args: &["analyze", "../core/fixtures/zk_not_stronger.enc"],
        want_code: 0,
        golden: include_str!("golden/analyze_zk_not_stronger_enc.txt"),
    },
    GoldenCase {
        name: "verify holds",
        args: &[
            "verify",
            "../core/fixtures/shamir5.enc",
            "--t",
            "1",
            "--e",
            "1",
        ],
        want_code: 0,
        golden: include_str!("golden/verify_shamir5_t1_e1.txt"),
    },
    GoldenCase {
        name: "verify fails with witnesses",
        args: &["verify", "../core/fixtures/shamir5.enc", "--t", "2"],
        want_code: 1,
        golden: include_str!("golden/verify_shamir5_t2.txt"),
    },
    GoldenCase {
        name: "convert encoder to css",
        args: &["convert", "--to-css", "../core/fixtures/worked3.enc"],
        want_code: 0,
        golden: include_str!("golden/convert_worked3_to_css.txt"),
    },
    GoldenCase {
        name: "convert css to encoder",
        args: &["convert", "--to-zk", "../core/fixtures/steane.css"],
        want_code: 0,
        golden: include_str!("golden/convert_steane_to_zk.txt"),
    },
    GoldenCase {
        name: "exhaustive linearity sweep",
        args: &["ltc-sweep", "--tester", "blr:3", "--exhaustive"],
        want_code: 0,
        golden: include_str!("golden/ltc_blr3_exhaustive.txt"),
    },
    GoldenCase {
        name: "exhaustive parity sweep",
        args: &[
            "ltc-sweep",
            "tests/fixtures/repetition3.code",
            "--tester",
            "parity:tests/fixtures/repetition3_checks.mat",
            "--exhaustive",
        ],
        want_code: 0,
        golden: include_str!("golden/ltc_parity_rep3_exhaustive.txt"),
    },
    GoldenCase {
        name: "sampled sweep with fixed seed",
        args: &[
            "ltc-sweep",
            "--tester",
            "blr:2",
            "--samples",
            "10",
            "--seed",
            "42",
        ],
        want_code: 0,
        golden: include_str!("golden/ltc_blr2_sampled_seed42.txt"),
    },
    GoldenCase {
        name: "gallery listing",
        args: &["gallery"],
        want_code: 0,
        golden: include_str!("golden/gallery_list.txt"),
    },
];

/// Criterion 8: byte-identical outputs across runs, pinned by goldens.
#[test]
fn criterion_8_cli_determinism_golden_outputs() {
    for case in CASES {
        let first = invoke(case.args);
        let second = invoke(case.args);
        assert_eq!(
            first.stdout, second.stdout,
            "{}: output differs between runs",
            case.name
        );
        assert_eq!(first.code, second.code, "{}: exit code differs", case.name);
        assert_eq!(
            first.code, case.want_code,
            "{}: unexpected exit code",
            case.name
        );
        assert_eq!(
            first.stdout, case.golden,
            "{}: output differs from the committed golden file",
            case.name
        );
    }
    println!(
        "criterion 8 PASS: {} commands byte-identical across runs and against goldens",
        CASES.len()
    );
}

#[test]
fn convert_output_reparses_to_an_equal_object() {
    // encoder -> css text round trip
    let css_text = invoke(&["convert", "--to-css", "../core/fixtures/worked3.enc"]).stdout;
    let Artifact::Css(css) = parse_artifact(&css_text).unwrap() else {
        panic!("convert --to-css must emit a css artifact");
    };
    // css -> encoder text round trip, and canonical re-serialization is stable
    let enc_text = invoke(&["convert", "--to-zk", "../core/fixtures/steane.css"]).stdout;
    let encoder = parse_encoder(&enc_text).unwrap();
    let canonical = encoder_to_text(&encoder);
    assert_eq!(parse_encoder(&canonical).unwrap(), encoder);
    // the converted pair is the expected one
    assert_eq!(css.block_length(), 3);
    assert_eq!(encoder.block_length(), 7);
    assert_eq!(encoder.k_prime(), 1);
}

#[test]
fn convert_writes_files_it_can_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("steane.enc");
    let outcome = invoke(&[
        "convert",
        "--to-zk",
        "../core/fixtures/steane.css",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(outcome.code, 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let encoder = parse_encoder(&text).unwrap();
    assert_eq!(encoder.k_prime(), 1);
    // converting the written encoder back to css preserves the reported values
    let analyze = invoke(&["analyze", out.to_str().unwrap()]);
    assert_eq!(analyze.code, 0);
    assert!(analyze.stdout.contains("max_zk_t: 2 (algebraic)"));
    assert!(analyze.stdout.contains("max_decodable_e: 1"));
}

#[test]
fn error_paths_exit_2() {
    // malformed file
    let outcome = invoke(&["verify", "tests/fixtures/malformed.enc", "--t", "1"]);
    assert_eq!(outcome.code, 2);
    assert!(
        outcome.stderr.contains("line 5"),
        "stderr: {}",
        outcome.stderr
    );
    // oracle required but over budget
    let outcome = invoke(&[
        "verify",
        "../core/fixtures/shamir5.enc",
        "--t",
        "1",
        "--require-oracle",
        "--budget",
        "2",
    ]);
    assert_eq!(outcome.code, 2);
    assert!(outcome.stderr.contains("--require-oracle"));
    // degenerate css rejected by the transform, quoting the requirement
    let dir = tempfile::tempdir().unwrap();
    let degenerate = dir.path().join("degenerate.css");
    std::fs::write(
        &degenerate,
        "css\nparity_check\n2 1 3\n1 1 1\n---\ngenerator\n2 3 1\n1\n1\n1\n",
    )
    .unwrap();
    let outcome = invoke(&["convert", "--to-zk", degenerate.to_str().unwrap()]);
    assert_eq!(outcome.code, 2);
    assert!(
        outcome.stderr.contains("k' >= 1"),
        "stderr: {}",
        outcome.stderr
    );
    // exhaustive sweep over the word cap instructs sampled mode
    let big_code = dir.path().join("big.code");
    std::fs::write(
        &big_code,
        "parity_check\n2 1 20\n1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n",
    )
    .unwrap();
    let big_checks = dir.path().join("big_checks.mat");
    std::fs::write(
        &big_checks,
        "2 1 20\n1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n",
    )
    .unwrap();
    let outcome = invoke(&[
        "ltc-sweep",
        big_code.to_str().unwrap(),
        "--tester",
        &format!("parity:{}", big_checks.to_str().unwrap()),
        "--exhaustive",
    ]);
    assert_eq!(outcome.code, 2);
    assert!(
        outcome.stderr.contains("--samples"),
        "stderr: {}",
        outcome.stderr
    );
    // usage errors
    assert_eq!(invoke(&["convert", "../core/fixtures/worked3.enc"]).code, 2);
    assert_eq!(invoke(&["analyze", "no-such-file"]).code, 2);
}

#[test]
fn zero_dimensional_input_is_a_clean_error() {
    let dir = tempfile::tempdir().unwrap();
    let zero = dir.path().join("zero.code");
    // parity check = identity: the code is {0}
    std::fs::write(&zero, "parity_check\n2 3 3\n1 0 0\n0 1 0\n0 0 1\n").unwrap();
    let outcome = invoke(&["analyze", zero.to_str().unwrap()]);
    assert_eq!(outcome.code, 2);
    assert!(outcome.stderr.contains("no nonzero codeword"));
}
