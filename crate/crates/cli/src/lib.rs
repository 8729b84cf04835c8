//! The `zkcss` command line: analyze, convert, verify, sweep, and export
//! coding-toolkit artifacts.
//!
//! Exit codes: 0 when the command succeeds and every requested predicate
//! holds, 1 when predicates were checked and at least one is false, 2 for
//! usage, parse, and capability errors. All reports are deterministic given
//! the inputs, flags, and seed.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use zkcss_core::code::{LinearCode, MinWeight};
use zkcss_core::css::{gallery, CssCode};
use zkcss_core::equiv::{css_to_zk, zk_to_css};
use zkcss_core::error::Error;
use zkcss_core::format::{css_to_text, encoder_to_text, parse_artifact, parse_matrix, Artifact};
use zkcss_core::ltc::{blr_hadamard_tester, parity_sampler_tester, LocalTester, SoundnessReport};
use zkcss_core::zkenc::{fixtures, RandomizedEncoder};
use zkcss_core::Budget;

#[derive(Debug, Parser)]
#[command(
    name = "zkcss",
    version,
    about = "Exact toolkit for linear codes, randomized encoders, and CSS pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report the parameters, distances, and thresholds of an artifact.
    Analyze {
        /// Path to a code, encoder, or css file (detected by header).
        input: PathBuf,
        /// Require the input to be a css pair.
        #[arg(long)]
        css: bool,
        /// Require the input to live over GF(this prime).
        #[arg(long)]
        field: Option<u64>,
        /// Enumeration budget in states.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Convert between encoder and css representations.
    Convert {
        input: PathBuf,
        /// Encoder file in, css file out.
        #[arg(long)]
        to_css: bool,
        /// Css file in, encoder file out.
        #[arg(long)]
        to_zk: bool,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check requested predicates; exit 0 iff all hold.
    Verify {
        input: PathBuf,
        /// Check t-zero-knowledge at this t.
        #[arg(long)]
        t: Option<usize>,
        /// Check decodability from this many errors.
        #[arg(long)]
        e: Option<usize>,
        /// Fail (exit 2) instead of falling back to the algebraic criterion
        /// when the distribution oracle exceeds the budget.
        #[arg(long)]
        require_oracle: bool,
        /// Require the input to live over GF(this prime).
        #[arg(long)]
        field: Option<u64>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run a local tester over words and report exact soundness.
    LtcSweep {
        /// Code file; required for `parity:` testers, absent for `blr:`.
        code: Option<PathBuf>,
        /// Tester spec: `blr:<message_len>` or `parity:<check-matrix-file>`.
        #[arg(long)]
        tester: String,
        /// Sweep all p^n words (capped at 65536).
        #[arg(long)]
        exhaustive: bool,
        /// Sweep this many seeded random words instead.
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for sampled mode.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// List committed fixtures, print one, or export them all.
    Gallery {
        /// Fixture name (`steane`, `shamir5`, ..., or `<name>.enc`).
        name: Option<String>,
        /// Write every fixture file into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

/// Captured result of one CLI invocation.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn predicate_failure(stdout: String) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 1,
        }
    }

    fn error(message: String) -> Outcome {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: 2,
        }
    }
}

/// Runs the CLI on explicit arguments (the first one is the program name).
pub fn run<'a>(args: impl IntoIterator<Item = &'a str>) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            return Outcome {
                stdout: String::new(),
                stderr: e.to_string(),
                code: 2,
            }
        }
        Err(e) => {
            // --help and --version land here
            return Outcome::ok(e.to_string());
        }
    };
    match cli.command {
        Command::Analyze {
            input,
            css,
            field,
            budget,
        } => cmd_analyze(&input, css, field, to_budget(budget)),
        Command::Convert {
            input,
            to_css,
            to_zk,
            output,
        } => cmd_convert(&input, to_css, to_zk, output.as_deref()),
        Command::Verify {
            input,
            t,
            e,
            require_oracle,
            field,
            budget,
        } => cmd_verify(&input, t, e, require_oracle, field, to_budget(budget)),
        Command::LtcSweep {
            code,
            tester,
            exhaustive,
            samples,
            seed,
            output,
            budget,
        } => cmd_ltc_sweep(
            code.as_deref(),
            &tester,
            exhaustive,
            samples,
            seed,
            output.as_deref(),
            to_budget(budget),
        ),
        Command::Gallery { name, export } => cmd_gallery(name.as_deref(), export.as_deref()),
    }
}

fn to_budget(flag: Option<u64>) -> Budget {
    flag.map_or(Budget::DEFAULT, Budget)
}

fn load_artifact(path: &Path) -> Result<Artifact, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_artifact(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn check_field(artifact: &Artifact, required: Option<u64>) -> Result<(), String> {
    let Some(p) = required else { return Ok(()) };
    let actual = match artifact {
        Artifact::Code(c) => c.field().modulus(),
        Artifact::Encoder(e) => e.field().modulus(),
        Artifact::Css(c) => c.cx().field().modulus(),
    };
    if actual != p {
        return Err(format!(
            "input is over GF({actual}), but --field {p} was required"
        ));
    }
    Ok(())
}

fn fmt_weight(w: MinWeight) -> String {
    match w {
        MinWeight::Exact(d) => d.to_string(),
        MinWeight::LowerBound(b) => format!(">= {b} (certified bound, raise --budget for exact)"),
    }
}

fn cmd_analyze(input: &Path, require_css: bool, field: Option<u64>, budget: Budget) -> Outcome {
    let artifact = match load_artifact(input) {
        Ok(a) => a,
        Err(e) => return Outcome::error(e),
    };
    if let Err(e) = check_field(&artifact, field) {
        return Outcome::error(e);
    }
    if require_css && !matches!(artifact, Artifact::Css(_)) {
        return Outcome::error("--css was given but the input is not a css pair".into());
    }
    let report = match &artifact {
        Artifact::Code(code) => analyze_code(code, budget),
        Artifact::Encoder(encoder) => analyze_encoder(encoder, budget),
        Artifact::Css(css) => analyze_css(css, budget),
    };
    match report {
        Ok(text) => Outcome::ok(text),
        Err(e) => Outcome::error(e),
    }
}

fn analyze_code(code: &LinearCode, budget: Budget) -> Result<String, String> {
    let mut out = String::new();
    let _ = writeln!(out, "kind: linear code");
    let _ = writeln!(out, "field: {}", code.field());
    let _ = writeln!(out, "n: {}", code.block_length());
    let _ = writeln!(out, "k: {}", code.dimension());
    let _ = writeln!(out, "rate: {}", code.rate());
    if code.was_reduced() {
        let _ = writeln!(out, "warning: input matrix was not full rank; reduced");
    }
    let d = code.min_weight(budget).map_err(|e| e.to_string())?;
    let _ = writeln!(out, "min_distance: {}", fmt_weight(d));
    let _ = writeln!(out, "dual_dimension: {}", code.dual().dimension());
    Ok(out)
}

fn analyze_encoder(encoder: &RandomizedEncoder, budget: Budget) -> Result<String, String> {
    let mut out = String::new();
    let _ = writeln!(out, "kind: randomized encoder");
    let _ = writeln!(out, "field: {}", encoder.field());
    let _ = writeln!(out, "n: {}", encoder.block_length());
    let _ = writeln!(out, "k: {}", encoder.dimension());
    let _ = writeln!(out, "k_prime: {}", encoder.k_prime());
    let _ = writeln!(out, "code_rate: {}", encoder.code().rate());
    let d = encoder
        .code()
        .min_weight(budget)
        .map_err(|e| e.to_string())?;
    let _ = writeln!(out, "code_min_distance: {}", fmt_weight(d));
    let dx = encoder.distance_x(budget).map_err(|e| e.to_string())?;
    let dz = encoder.distance_z(budget).map_err(|e| e.to_string())?;
    let _ = writeln!(out, "d_x: {}", fmt_weight(dx));
    let _ = writeln!(out, "d_z: {}", fmt_weight(dz));
    let e_max = encoder.decoding_radius(budget).map_err(|e| e.to_string())?;
    let _ = writeln!(out, "max_decodable_e: {}", fmt_weight(e_max));
    let t_max = encoder.zk_threshold(budget).map_err(|e| e.to_string())?;
    let _ = writeln!(out, "max_zk_t: {} (algebraic)", fmt_weight(t_max));
    match encoder.zk_threshold_oracle(budget) {
        Ok(t) => {
            let _ = writeln!(out, "max_zk_t_oracle: {t}");
        }
        Err(Error::BudgetExceeded { needed, budget }) => {
            let _ = writeln!(
                out,
                "max_zk_t_oracle: skipped (needs {needed} states, budget {budget})"
            );
        }
        Err(e) => return Err(e.to_string()),
    }
    Ok(out)
}

fn analyze_css(css: &CssCode, budget: Budget) -> Result<String, String> {
    let mut out = String::new();
    let _ = writeln!(out, "kind: css pair");
    let _ = writeln!(out, "field: {}", css.cx().field());
    let _ = writeln!(out, "n: {}", css.block_length());
    let _ = writeln!(out, "dim_c_x: {}", css.cx().dimension());
    let _ = writeln!(out, "dim_c_z: {}", css.cz().dimension());
    let _ = writeln!(out, "css_dimension: {}", css.dimension());
    let _ = writeln!(out, "rate: {}", css.rate());
    let dx = css.distance_x(budget).map_err(|e| e.to_string())?;
    let dz = css.distance_z(budget).map_err(|e| e.to_string())?;
    let d = css.distance(budget).map_err(|e| e.to_string())?;
    let _ = writeln!(out, "d_x: {}", fmt_weight(dx));
    let _ = writeln!(out, "d_z: {}", fmt_weight(dz));
    let _ = writeln!(out, "distance: {}", fmt_weight(d));
    Ok(out)
}

fn cmd_convert(input: &Path, to_css: bool, to_zk: bool, output: Option<&Path>) -> Outcome {
    if to_css == to_zk {
        return Outcome::error("exactly one of --to-css or --to-zk is required".into());
    }
    let artifact = match load_artifact(input) {
        Ok(a) => a,
        Err(e) => return Outcome::error(e),
    };
    let text = if to_css {
        let Artifact::Encoder(encoder) = artifact else {
            return Outcome::error("--to-css needs a randomized encoder file as input".into());
        };
        let result = zk_to_css(&encoder);
        let mut text = format!(
            "# converted from a randomized encoder: n={} k={} k_prime={} over {}\n\
             # C_X is the encoder's code; C_Z is the dual of the span of generator columns {}..{} (the randomness block)\n",
            encoder.block_length(),
            encoder.dimension(),
            encoder.k_prime(),
            encoder.field(),
            result.randomness_columns.start,
            result.randomness_columns.end - 1,
        );
        text.push_str(&css_to_text(&result.css));
        text
    } else {
        let Artifact::Css(css) = artifact else {
            return Outcome::error("--to-zk needs a css file as input".into());
        };
        let result = match css_to_zk(&css) {
            Ok(r) => r,
            Err(e) => return Outcome::error(e.to_string()),
        };
        let mut text = format!(
            "# converted from a css pair: n={} over {}\n\
             # generator columns {}..{} form the canonical basis of C_Z^perp\n",
            css.block_length(),
            css.cx().field(),
            result.basis_columns.start,
            result.basis_columns.end - 1,
        );
        text.push_str(&encoder_to_text(&result.encoder));
        text
    };
    match output {
        Some(path) => match fs::write(path, &text) {
            Ok(()) => Outcome::ok(format!("wrote {}\n", path.display())),
            Err(e) => Outcome::error(format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome::ok(text),
    }
}

enum PredicateOutcome {
    Holds,
    Fails(Vec<String>),
}

fn cmd_verify(
    input: &Path,
    t: Option<usize>,
    e: Option<usize>,
    require_oracle: bool,
    field: Option<u64>,
    budget: Budget,
) -> Outcome {
    let artifact = match load_artifact(input) {
        Ok(a) => a,
        Err(msg) => return Outcome::error(msg),
    };
    if let Err(msg) = check_field(&artifact, field) {
        return Outcome::error(msg);
    }
    let mut out = String::new();
    let mut failures = 0usize;
    let mut record = |out: &mut String, line: String, outcome: PredicateOutcome| match outcome {
        PredicateOutcome::Holds => {
            let _ = writeln!(out, "{line}: holds");
        }
        PredicateOutcome::Fails(witnesses) => {
            failures += 1;
            let _ = writeln!(out, "{line}: FAILS");
            for w in witnesses {
                let _ = writeln!(out, "  witness: {w}");
            }
        }
    };
    match &artifact {
        Artifact::Code(code) => {
            if t.is_some() || e.is_some() {
                return Outcome::error(
                    "--t and --e apply to encoders and css pairs, not plain codes".into(),
                );
            }
            let _ = writeln!(
                out,
                "input: linear code n={} k={} over {}",
                code.block_length(),
                code.dimension(),
                code.field()
            );
            let _ = writeln!(out, "structure: parity check annihilates the generator");
        }
        Artifact::Encoder(encoder) => {
            let _ = writeln!(
                out,
                "input: encoder n={} k={} k_prime={} over {}",
                encoder.block_length(),
                encoder.dimension(),
                encoder.k_prime(),
                encoder.field()
            );
            if let Some(t) = t {
                match verify_zk(encoder, t, require_oracle, budget) {
                    Ok((line, outcome)) => record(&mut out, line, outcome),
                    Err(msg) => return Outcome::error(msg),
                }
            }
            if let Some(e) = e {
                match verify_decodable(encoder, e, budget) {
                    Ok((line, outcome)) => record(&mut out, line, outcome),
                    Err(msg) => return Outcome::error(msg),
                }
            }
        }
        Artifact::Css(css) => {
            let _ = writeln!(
                out,
                "input: css pair n={} css_dimension={} over {}",
                css.block_length(),
                css.dimension(),
                css.cx().field()
            );
            let _ = writeln!(out, "orthogonality: C_X^perp and C_Z^perp are orthogonal");
            if let Some(t) = t {
                match verify_css_side(css, "d_z", t, budget, /* z_side */ true) {
                    Ok((line, outcome)) => record(&mut out, line, outcome),
                    Err(msg) => return Outcome::error(msg),
                }
            }
            if let Some(e) = e {
                match verify_css_side(css, "d_x", 2 * e, budget, /* z_side */ false) {
                    Ok((line, outcome)) => record(&mut out, line, outcome),
                    Err(msg) => return Outcome::error(msg),
                }
            }
        }
    }
    if failures == 0 {
        let _ = writeln!(out, "result: all predicates hold");
        Outcome::ok(out)
    } else {
        let _ = writeln!(out, "result: {failures} predicate(s) failed");
        Outcome::predicate_failure(out)
    }
}

fn verify_zk(
    encoder: &RandomizedEncoder,
    t: usize,
    require_oracle: bool,
    budget: Budget,
) -> Result<(String, PredicateOutcome), String> {
    let (holds, method) = match encoder.is_t_zk_oracle(t, budget) {
        Ok(v) => (v, "oracle"),
        Err(Error::BudgetExceeded { needed, budget: b }) if require_oracle => {
            return Err(format!(
                "--require-oracle: the distribution oracle needs {needed} states, budget {b}"
            ));
        }
        Err(Error::BudgetExceeded { .. }) => match encoder.is_t_zk_algebraic(t, budget) {
            Ok(v) => (v, "algebraic"),
            Err(e) => return Err(e.to_string()),
        },
        Err(e) => return Err(e.to_string()),
    };
    let line = format!("zk t={t} (method: {method})");
    if holds {
        return Ok((line, PredicateOutcome::Holds));
    }
    let mut witnesses = Vec::new();
    if let Ok(Some((index_set, msg))) = encoder.find_leaking_set(t, budget) {
        witnesses.push(format!(
            "index set {index_set:?} leaks unit message {msg} (zero not in the restricted support)"
        ));
    }
    let cz = encoder.randomness_span().dual();
    let cx_perp = encoder.code().dual();
    if let Ok(search) = cz.min_weight_search(Some(&cx_perp), budget) {
        if let Some(witness) = search.witness {
            let values: Vec<u64> = witness.iter().map(|e| e.value()).collect();
            witnesses.push(format!(
                "vector {values:?} of weight {} lies in C_Z outside C_X^perp",
                values.iter().filter(|&&v| v != 0).count()
            ));
        }
    }
    Ok((line, PredicateOutcome::Fails(witnesses)))
}

fn verify_decodable(
    encoder: &RandomizedEncoder,
    e: usize,
    budget: Budget,
) -> Result<(String, PredicateOutcome), String> {
    let holds = encoder
        .is_decodable_from(e, budget)
        .map_err(|x| x.to_string())?;
    let line = format!("decodable e={e} (method: d_X > 2e)");
    if holds {
        return Ok((line, PredicateOutcome::Holds));
    }
    let mut witnesses = Vec::new();
    if let Ok(search) = encoder
        .code()
        .min_weight_search(Some(&encoder.randomness_span()), budget)
    {
        if let Some(witness) = search.witness {
            let values: Vec<u64> = witness.iter().map(|e| e.value()).collect();
            witnesses.push(format!(
                "codeword {values:?} of weight {} encodes a nonzero message",
                values.iter().filter(|&&v| v != 0).count()
            ));
        }
    }
    Ok((line, PredicateOutcome::Fails(witnesses)))
}

fn verify_css_side(
    css: &CssCode,
    name: &str,
    threshold: usize,
    budget: Budget,
    z_side: bool,
) -> Result<(String, PredicateOutcome), String> {
    let search = if z_side {
        css.distance_z_search(budget)
    } else {
        css.distance_x_search(budget)
    }
    .map_err(|e| e.to_string())?;
    let line = format!("{name} > {threshold} (method: distance search)");
    match search.weight {
        MinWeight::Exact(d) if d > threshold => Ok((line, PredicateOutcome::Holds)),
        MinWeight::LowerBound(b) if b > threshold => Ok((line, PredicateOutcome::Holds)),
        MinWeight::Exact(_) => {
            let mut witnesses = Vec::new();
            if let Some(witness) = search.witness {
                let values: Vec<u64> = witness.iter().map(|e| e.value()).collect();
                let (inside, outside) = if z_side {
                    ("C_Z", "C_X^perp")
                } else {
                    ("C_X", "C_Z^perp")
                };
                witnesses.push(format!(
                    "vector {values:?} of weight {} lies in {inside} outside {outside}",
                    values.iter().filter(|&&v| v != 0).count()
                ));
            }
            Ok((line, PredicateOutcome::Fails(witnesses)))
        }
        MinWeight::LowerBound(b) => Err(Error::DistanceInconclusive { bound: b }.to_string()),
    }
}

fn cmd_ltc_sweep(
    code_path: Option<&Path>,
    tester_spec: &str,
    exhaustive: bool,
    samples: Option<usize>,
    seed: u64,
    output: Option<&Path>,
    budget: Budget,
) -> Outcome {
    if exhaustive == samples.is_some() {
        return Outcome::error("choose exactly one of --exhaustive or --samples N".into());
    }
    let tester: LocalTester = if let Some(m) = tester_spec.strip_prefix("blr:") {
        if code_path.is_some() {
            return Outcome::error(
                "the blr tester carries its own Hadamard code; drop the code file argument".into(),
            );
        }
        let m: usize = match m.parse() {
            Ok(v) => v,
            Err(_) => return Outcome::error(format!("bad blr message length {m:?}")),
        };
        match blr_hadamard_tester(m) {
            Ok(t) => t,
            Err(e) => return Outcome::error(e.to_string()),
        }
    } else if let Some(checks_path) = tester_spec.strip_prefix("parity:") {
        let Some(code_path) = code_path else {
            return Outcome::error("parity testers need a code file argument".into());
        };
        let code = match load_artifact(code_path) {
            Ok(Artifact::Code(c)) => c,
            Ok(_) => return Outcome::error("the code argument must be a plain code file".into()),
            Err(e) => return Outcome::error(e),
        };
        let checks_text = match fs::read_to_string(checks_path) {
            Ok(t) => t,
            Err(e) => return Outcome::error(format!("cannot read {checks_path}: {e}")),
        };
        let checks = match parse_matrix(&checks_text) {
            Ok(m) => m,
            Err(e) => return Outcome::error(format!("{checks_path}: {e}")),
        };
        match parity_sampler_tester(&code, &checks) {
            Ok(t) => t,
            Err(e) => return Outcome::error(e.to_string()),
        }
    } else {
        return Outcome::error(format!(
            "unknown tester spec {tester_spec:?}; use blr:<m> or parity:<file>"
        ));
    };
    let report: SoundnessReport = if exhaustive {
        match tester.soundness_sweep_exhaustive(budget) {
            Ok(r) => r,
            Err(Error::BudgetExceeded { needed, budget }) => {
                return Outcome::error(format!(
                    "exhaustive mode needs {needed} words but the cap is {budget}; \
                     rerun with --samples <N> --seed <S>"
                ))
            }
            Err(e) => return Outcome::error(e.to_string()),
        }
    } else {
        match tester.soundness_sweep_sampled(samples.unwrap(), seed, budget) {
            Ok(r) => r,
            Err(e) => return Outcome::error(e.to_string()),
        }
    };
    let mut text = format!(
        "# tester {} q={} checks={}\n",
        tester_spec,
        tester.query_budget(),
        tester.checks().len()
    );
    if tester.is_vacuous() {
        text.push_str("# warning: vacuous tester, every word is accepted\n");
    }
    text.push_str(&report.to_text());
    match output {
        Some(path) => match fs::write(path, &text) {
            Ok(()) => Outcome::ok(format!("wrote {}\n", path.display())),
            Err(e) => Outcome::error(format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome::ok(text),
    }
}

fn cmd_gallery(name: Option<&str>, export: Option<&Path>) -> Outcome {
    let entries = gallery();
    let encoders = fixtures::fixture_files();
    if let Some(dir) = export {
        if let Err(e) = fs::create_dir_all(dir) {
            return Outcome::error(format!("cannot create {}: {e}", dir.display()));
        }
        let mut out = String::new();
        for entry in &entries {
            let path = dir.join(format!("{}.css", entry.name));
            if let Err(e) = fs::write(&path, entry.file_text) {
                return Outcome::error(format!("cannot write {}: {e}", path.display()));
            }
            let _ = writeln!(out, "wrote {}", path.display());
        }
        for (name, text) in &encoders {
            let path = dir.join(format!("{name}.enc"));
            if let Err(e) = fs::write(&path, text) {
                return Outcome::error(format!("cannot write {}: {e}", path.display()));
            }
            let _ = writeln!(out, "wrote {}", path.display());
        }
        return Outcome::ok(out);
    }
    if let Some(name) = name {
        if let Some(text) = entries
            .iter()
            .find(|e| e.name == name)
            .map(|e| e.file_text)
            .or_else(|| {
                name.strip_suffix(".enc").and_then(|stem| {
                    encoders
                        .iter()
                        .find(|(n, _)| *n == stem)
                        .map(|(_, text)| *text)
                })
            })
        {
            return Outcome::ok(text.to_string());
        }
        return Outcome::error(format!("no fixture named {name:?}"));
    }
    let mut out = String::from("css pairs:\n");
    for entry in &entries {
        let _ = writeln!(
            out,
            "  {}: n={} over {} - {}",
            entry.name,
            entry.css.block_length(),
            entry.css.cx().field(),
            entry.description
        );
    }
    out.push_str("encoders:\n");
    for (name, text) in &encoders {
        let encoder = zkcss_core::format::parse_encoder(text).expect("fixture parses");
        let _ = writeln!(
            out,
            "  {}.enc: n={} k={} k_prime={} over {}",
            name,
            encoder.block_length(),
            encoder.dimension(),
            encoder.k_prime(),
            encoder.field()
        );
    }
    Outcome::ok(out)
}
