use std::process::ExitCode;

use affperm::insertion::{enumerate_reduced_words, insert, RecordingTableau};
use affperm::io::{parse_partition, parse_parts, parse_perm, parse_word};
use affperm::kcode::{affine_code, canonical_decomposition, k_conjugate_perm, AffineCodeVariant};
use affperm::nilcox::{verify_split_product, Comparison, SplitReport};
use affperm::selftest::{self, SelftestConfig};
use affperm::shapes::{from_core, k_boundary, k_conjugate_partition, split_bounded, to_core};
use affperm::{AffinePerm, CorePartition, Direction, Error, KCode, KSchurTable, NilCoxSum, Rank, Side};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "affperm", version, about = "Canonical forms for affine permutations and k-Schur functions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Rd,
    Ri,
    Ld,
    Li,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CodeMode {
    Rd,
    Ri,
    Ld,
    Li,
    Crd,
    Cri,
    Cld,
    Cli,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KSchurAction {
    Expand,
    VerifySplit,
}

/// An element given either as a word or as a window.
#[derive(Args)]
struct Element {
    /// Space-separated letters, e.g. "2 1 0".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "window")]
    word: Option<String>,
    /// Comma-separated window, e.g. "1,-6,0,15".
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical cyclic decomposition and its k-code.
    Decompose {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Mode::Rd)]
        mode: Mode,
        #[command(flatten)]
        element: Element,
    },
    /// Decide whether two words give the same element.
    Equal {
        #[arg(long)]
        k: usize,
        /// Pass exactly twice.
        #[arg(long, num_args = 1, required = true, allow_hyphen_values = true)]
        word: Vec<String>,
    },
    /// k-Schur function of a k-bounded partition.
    Kschur {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        partition: String,
        #[arg(value_enum)]
        action: KSchurAction,
    },
    /// Run the bounded verification suites.
    Selftest {
        #[arg(long = "k", default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 8)]
        length_bound: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// One of the k-codes or affine codes of an element.
    Code {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = CodeMode::Rd)]
        mode: CodeMode,
        #[command(flatten)]
        element: Element,
    },
    /// Insert the letters of a word one at a time, with traces.
    Insert {
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// The (k+1)-core of a k-bounded partition, or with --inverse the
    /// k-bounded partition of a core.
    Core {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        partition: String,
        #[arg(long)]
        inverse: bool,
    },
    /// All reduced words of an element.
    ReducedWords {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        length_bound: usize,
        #[command(flatten)]
        element: Element,
    },
    /// k-conjugate of a partition or of an element.
    Conjugate {
        #[arg(long)]
        k: usize,
        #[arg(long, conflicts_with_all = ["word", "window"])]
        partition: Option<String>,
        #[command(flatten)]
        element: Element,
    },
}

/// A command that did not succeed.
enum Failure {
    /// Exit status and an error message for stderr.
    Error(u8, String),
    /// A completed check that found failures; printed to stdout, exit 1.
    Report(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(1, e.to_string())
    }
}

fn usage(msg: &str) -> Failure {
    Failure::Error(1, msg.to_string())
}

fn zero() -> Failure {
    Failure::Error(2, "zero".into())
}

type Outcome = Result<String, Failure>;

fn rank(k: usize) -> Result<Rank, Failure> {
    Ok(Rank::new(k)?)
}

fn element(r: Rank, e: &Element) -> Result<AffinePerm, Failure> {
    match (&e.word, &e.window) {
        (Some(w), _) => {
            let word = parse_word(r, w)?;
            AffinePerm::identity(r).nil_right_word(&word).ok_or_else(zero)
        }
        (None, Some(w)) => Ok(parse_perm(r, w)?),
        (None, None) => Err(usage("one of --word or --window is required")),
    }
}

fn set_list(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", s.join(","))
}

fn code_json(c: &KCode) -> Value {
    json!(c.entries())
}

fn decompose(format: Format, k: usize, mode: Mode, e: &Element) -> Outcome {
    let r = rank(k)?;
    let x = element(r, e)?;
    let (direction, side) = match mode {
        Mode::Rd => (Direction::Decreasing, Side::Right),
        Mode::Ri => (Direction::Increasing, Side::Right),
        Mode::Ld => (Direction::Decreasing, Side::Left),
        Mode::Li => (Direction::Increasing, Side::Left),
    };
    let d = canonical_decomposition(&x, direction, side);
    let code = affperm::kcode::code_of(&d)?;
    // print the rightmost factor first; left decompositions number rows from the left
    let mut rows: Vec<Vec<usize>> = d.rows().iter().map(|s| s.to_vec()).collect();
    if side == Side::Left {
        rows.reverse();
    }
    let letter = if direction == Direction::Decreasing { "d" } else { "u" };
    Ok(match format {
        Format::Json => json!({ "factors": rows, "code": code_json(&code) }).to_string(),
        Format::Text => {
            let factors: Vec<String> = rows.iter().map(|s| format!("{letter}{}", set_list(s))).collect();
            format!("factors:{}\ncode: {code}", factors.iter().map(|f| format!(" {f}")).collect::<String>())
        }
    })
}

fn equal(format: Format, k: usize, words: &[String]) -> Outcome {
    let r = rank(k)?;
    let [w1, w2] = words else {
        return Err(usage("equal takes exactly two --word arguments"));
    };
    let parse = |w: &str| -> Result<Option<KCode>, Failure> {
        let word = parse_word(r, w)?;
        Ok(AffinePerm::identity(r).nil_right_word(&word).map(|x| affperm::kcode::rd(&x)))
    };
    let same = parse(w1)? == parse(w2)?;
    let verdict = if same { "equal" } else { "not-equal" };
    Ok(match format {
        Format::Json => json!({ "equal": same }).to_string(),
        Format::Text => verdict.to_string(),
    })
}

fn sum_output(format: Format, f: &NilCoxSum) -> String {
    match format {
        Format::Json => f.to_json(),
        Format::Text => f.to_text().trim_end().to_string(),
    }
}

fn kschur(format: Format, k: usize, partition: &str, action: KSchurAction) -> Outcome {
    let r = rank(k)?;
    let lambda = parse_partition(r, partition)?;
    let mut table = KSchurTable::new(r);
    match action {
        KSchurAction::Expand => Ok(sum_output(format, &table.k_schur(&lambda)?)),
        KSchurAction::VerifySplit => {
            let report = verify_split_product(&lambda, &mut table)?;
            let SplitReport::Checked { components, groupings } = &report else {
                return Ok(match format {
                    Format::Json => json!({ "result": "trivial" }).to_string(),
                    Format::Text => "trivial (does not split)".to_string(),
                });
            };
            let comps: Vec<String> = components.iter().map(|c| c.to_string()).collect();
            let verdict = if report.passed() { "PASS" } else { "FAIL" };
            let text = match format {
                Format::Json => {
                    let gs: Vec<Value> = groupings
                        .iter()
                        .map(|g| {
                            let fs: Vec<String> = g.factors.iter().map(|f| f.to_string()).collect();
                            json!({ "factors": fs, "equal": g.result == Comparison::Equal })
                        })
                        .collect();
                    json!({ "result": verdict, "components": comps, "groupings": gs }).to_string()
                }
                Format::Text => {
                    let mut out = format!("{verdict}\ncomponents: {}", comps.join(" "));
                    for g in groupings {
                        let fs: Vec<String> = g.factors.iter().map(|f| f.to_string()).collect();
                        match &g.result {
                            Comparison::Equal => out.push_str(&format!("\n  {} equal", fs.join(" * "))),
                            Comparison::Differ { x, lhs, rhs } => {
                                out.push_str(&format!("\n  {} differs at {x}: {lhs} vs {rhs}", fs.join(" * ")))
                            }
                        }
                    }
                    out
                }
            };
            if report.passed() {
                Ok(text)
            } else {
                Err(Failure::Report(text))
            }
        }
    }
}

fn run_selftest(format: Format, k_max: usize, length_bound: usize, inject_fault: bool) -> Outcome {
    if k_max == 0 {
        return Err(usage("--k must be at least 1"));
    }
    let outcomes = selftest::run(&SelftestConfig { k_max, length_bound, inject_fault });
    let passed = outcomes.iter().all(|o| o.passed);
    let text = match format {
        Format::Json => {
            let items: Vec<Value> = outcomes
                .iter()
                .map(|o| json!({ "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail }))
                .collect();
            json!({ "passed": passed, "criteria": items }).to_string()
        }
        Format::Text => {
            let mut lines: Vec<String> = outcomes.iter().map(|o| o.to_string()).collect();
            lines.push(if passed { "PASS".into() } else { "FAIL".into() });
            lines.join("\n")
        }
    };
    if passed {
        Ok(text)
    } else {
        Err(Failure::Report(text))
    }
}

fn code(format: Format, k: usize, mode: CodeMode, e: &Element) -> Outcome {
    use affperm::kcode::{ld, li, rd, ri};
    let x = element(rank(k)?, e)?;
    let c = match mode {
        CodeMode::Rd => rd(&x),
        CodeMode::Ri => ri(&x),
        CodeMode::Ld => ld(&x),
        CodeMode::Li => li(&x),
        CodeMode::Crd => affine_code(&x, AffineCodeVariant::Crd),
        CodeMode::Cri => affine_code(&x, AffineCodeVariant::Cri),
        CodeMode::Cld => affine_code(&x, AffineCodeVariant::Cld),
        CodeMode::Cli => affine_code(&x, AffineCodeVariant::Cli),
    };
    Ok(match format {
        Format::Json => json!({ "code": code_json(&c), "window": x.window() }).to_string(),
        Format::Text => c.to_string(),
    })
}

fn insert_cmd(format: Format, k: usize, word: &str) -> Outcome {
    let r = rank(k)?;
    let word = parse_word(r, word)?;
    let mut c = KCode::zero(r);
    let mut traces = Vec::new();
    for &p in &word {
        let (next, trace) = insert(&c, p).map_err(|e| match e {
            Error::DescentViolation(_) => zero(),
            e => e.into(),
        })?;
        traces.push((p, trace));
        c = next;
    }
    let (_, q): (KCode, RecordingTableau) = affperm::insertion::insert_word(r, &word)?;
    Ok(match format {
        Format::Json => {
            let steps: Vec<Value> = traces
                .iter()
                .map(|(p, t)| {
                    let lines: Vec<String> = t.steps.iter().map(|s| s.to_string()).collect();
                    json!({ "letter": p, "steps": lines })
                })
                .collect();
            let rows: Vec<Vec<usize>> = (1..=c.height()).map(|j| q.row_labels(j)).collect();
            json!({ "code": code_json(&c), "recording": rows, "trace": steps }).to_string()
        }
        Format::Text => {
            let mut out = String::new();
            for (p, t) in &traces {
                out.push_str(&format!("insert {p}\n"));
                for s in &t.steps {
                    out.push_str(&format!("  {s}\n"));
                }
            }
            out.push_str(&format!("code: {c}\nrecording:\n{q}"));
            out.trim_end().to_string()
        }
    })
}

fn core_cmd(format: Format, k: usize, partition: &str, inverse: bool) -> Outcome {
    let r = rank(k)?;
    let (core, bounded) = if inverse {
        let mu = CorePartition::new(r, &parse_parts(partition)?)?;
        let lambda = from_core(&mu);
        (mu, lambda)
    } else {
        let lambda = parse_partition(r, partition)?;
        (to_core(&lambda), lambda)
    };
    let comps: Vec<String> = split_bounded(&core).iter().map(|c| c.to_string()).collect();
    let boundary = k_boundary(&core, k);
    Ok(match format {
        Format::Json => json!({
            "core": core.parts(),
            "bounded": bounded.parts(),
            "boundary_rows": boundary.row_lengths(),
            "components": comps,
        })
        .to_string(),
        Format::Text => format!("core: {core}\nbounded: {bounded}\ncomponents: {}", comps.join(" ")),
    })
}

fn reduced_words(format: Format, k: usize, length_bound: usize, e: &Element) -> Outcome {
    let x = element(rank(k)?, e)?;
    let words = enumerate_reduced_words(&x, length_bound)?;
    Ok(match format {
        Format::Json => json!(words).to_string(),
        Format::Text => words
            .iter()
            .map(|w| w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn conjugate(format: Format, k: usize, partition: Option<&str>, e: &Element) -> Outcome {
    let r = rank(k)?;
    if let Some(p) = partition {
        let conj = k_conjugate_partition(&parse_partition(r, p)?);
        return Ok(match format {
            Format::Json => json!({ "partition": conj.parts() }).to_string(),
            Format::Text => conj.to_string(),
        });
    }
    let c = k_conjugate_perm(&element(r, e)?);
    Ok(match format {
        Format::Json => json!({ "window": c.window(), "word": c.reduced_word() }).to_string(),
        Format::Text => c.to_string(),
    })
}

fn dispatch(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Decompose { k, mode, element } => decompose(f, *k, *mode, element),
        Command::Equal { k, word } => equal(f, *k, word),
        Command::Kschur { k, partition, action } => kschur(f, *k, partition, *action),
        Command::Selftest { k_max, length_bound, inject_fault } => {
            run_selftest(f, *k_max, *length_bound, *inject_fault)
        }
        Command::Code { k, mode, element } => code(f, *k, *mode, element),
        Command::Insert { k, word } => insert_cmd(f, *k, word),
        Command::Core { k, partition, inverse } => core_cmd(f, *k, partition, *inverse),
        Command::ReducedWords { k, length_bound, element } => reduced_words(f, *k, *length_bound, element),
        Command::Conjugate { k, partition, element } => conjugate(f, *k, partition.as_deref(), element),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Report(out)) => {
            println!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Error(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
