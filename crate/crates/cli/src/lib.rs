//! Command-line front end for `redword`.
//!
//! [`run`] does everything except touching the process: it parses the
//! arguments, executes the command and returns the exit code together with
//! the text destined for stdout and stderr.

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use redword::sweep::{verify_zigzag_sweep, Violation};
use redword::{
    class_partition, count_reduced_words, long_element_class, long_element_singleton,
    search_by_class_count, singleton_words, verify_theorem_sweep, Error, Limits, Permutation, Word,
    DEFAULT_MAX_WORDS,
};
use serde_json::{json, Value};

pub use redword::{parse_permutation, parse_word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "redword",
    version,
    about = "Reduced words, commutation classes and singleton classes of permutations"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest number of reduced words a command may materialize.
    #[arg(long, global = true, env = "REDWORD_MAX_WORDS")]
    max_words: Option<usize>,
    /// Worker threads for sweeps; defaults to the available parallelism.
    #[arg(long, global = true, env = "REDWORD_THREADS")]
    threads: Option<usize>,
    /// Largest degree an exhaustive sweep may visit.
    #[arg(long, global = true, default_value_t = 7)]
    sweep_bound: usize,
    /// Include `elapsed_ms` in JSON output.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a word to a permutation in one-line notation.
    Eval {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// List the reduced words of a permutation in lexicographic order.
    ReducedWords {
        permutation: String,
        #[arg(long)]
        count_only: bool,
    },
    /// Split the reduced words of a permutation into commutation classes.
    Classes { permutation: String },
    /// Reduced words that form their own commutation class.
    Singletons { permutation: String },
    /// The singleton word of the long element and its symmetries.
    Longest { n: usize },
    /// Check the theorem and both lemmas on every permutation up to a degree.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Permutations of degree n with exactly K singleton words.
    Search {
        #[arg(long)]
        class_count: usize,
        #[arg(long)]
        n: usize,
    },
    /// Build the zig-zag word for (i, j) and check it is not reduced.
    Zigzag {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::ReducedWords { .. } => "reduced-words",
            Command::Classes { .. } => "classes",
            Command::Singletons { .. } => "singletons",
            Command::Longest { .. } => "longest",
            Command::Verify { .. } => "verify",
            Command::Search { .. } => "search",
            Command::Zigzag { .. } => "zigzag",
        }
    }
}

/// The machine-readable result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputDocument {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    /// Only reported with `--timing`, so that plain runs stay byte-identical.
    pub elapsed_ms: Option<u128>,
}

impl OutputDocument {
    pub fn to_json(&self) -> Value {
        let mut doc = json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
        });
        if let Some(ms) = self.elapsed_ms {
            doc["elapsed_ms"] = json!(ms);
        }
        doc
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub document: Option<OutputDocument>,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(code: i32, stderr: String) -> Self {
        Self {
            code,
            document: None,
            stdout: String::new(),
            stderr,
        }
    }
}

pub fn word_json(w: &Word) -> Value {
    let mut v = json!({ "letters": w.letters() });
    if w.degree() <= 10 {
        v["compact"] = json!(w.to_string());
    }
    v
}

fn words_json(words: &[Word]) -> Value {
    Value::Array(words.iter().map(word_json).collect())
}

fn show(w: &Word) -> String {
    if w.is_empty() {
        "<empty>".to_string()
    } else {
        w.to_string()
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } | Error::SweepBoundExceeded { .. } => EXIT_LIMIT,
        _ => EXIT_USAGE,
    }
}

/// Text rendering plus the JSON payload of a successful command.
struct Rendered {
    code: i32,
    inputs: Value,
    results: Value,
    text: String,
}

fn execute(command: &Command, limits: &Limits) -> Result<Rendered, Error> {
    let ok = |inputs, results, text| Rendered {
        code: EXIT_OK,
        inputs,
        results,
        text,
    };
    match command {
        Command::Eval { n, word } => {
            let w = parse_word(word, *n)?;
            let p = w.evaluate();
            Ok(ok(
                json!({ "n": n, "word": word_json(&w) }),
                json!({ "permutation": p.to_string(), "length": p.length(), "reduced": w.is_reduced() }),
                format!("{p}\n"),
            ))
        }
        Command::ReducedWords {
            permutation,
            count_only,
        } => {
            let p = parse_permutation(permutation)?;
            let inputs = json!({ "permutation": p.to_string(), "count_only": count_only });
            if *count_only {
                let count = count_reduced_words(&p)?;
                return Ok(ok(
                    inputs,
                    json!({ "count": count.to_string() }),
                    format!("{count}\n"),
                ));
            }
            let words = redword::classes::collect_reduced_words(&p, limits.max_words)?;
            let text: String = words.iter().map(|w| format!("{}\n", show(w))).collect();
            Ok(ok(
                inputs,
                json!({ "count": words.len().to_string(), "words": words_json(&words) }),
                text,
            ))
        }
        Command::Classes { permutation } => {
            let p = parse_permutation(permutation)?;
            let part = class_partition(&p, limits.max_words)?;
            let mut text = format!(
                "{}: {} reduced words in {} commutation classes\n",
                p,
                part.total_words,
                part.classes.len()
            );
            for c in &part.classes {
                let members: Vec<String> = c.members.iter().map(show).collect();
                text.push_str(&format!("[{}] {}\n", c.len(), members.join(" ")));
            }
            let classes: Vec<Value> = part
                .classes
                .iter()
                .map(|c| {
                    json!({
                        "representative": word_json(c.representative()),
                        "size": c.len(),
                        "members": words_json(&c.members),
                    })
                })
                .collect();
            Ok(ok(
                json!({ "permutation": p.to_string() }),
                json!({
                    "total_words": part.total_words,
                    "class_count": part.classes.len(),
                    "singleton_count": part.singleton_classes().count(),
                    "classes": classes,
                }),
                text,
            ))
        }
        Command::Singletons { permutation } => {
            let p = parse_permutation(permutation)?;
            let words = singleton_words(&p);
            let text: String = words.iter().map(|w| format!("{}\n", show(w))).collect();
            Ok(ok(
                json!({ "permutation": p.to_string() }),
                json!({
                    "count": words.len(),
                    "degenerate": p.is_identity(),
                    "words": words_json(&words),
                }),
                text,
            ))
        }
        Command::Longest { n } => {
            let w = long_element_singleton(*n)?;
            let class = long_element_class(*n)?;
            let mut text = format!("{w}\nsymmetries:\n");
            for s in &class {
                text.push_str(&format!("{s}\n"));
            }
            Ok(ok(
                json!({ "n": n }),
                json!({
                    "permutation": Permutation::longest_element(*n)?.to_string(),
                    "word": word_json(&w),
                    "symmetries": words_json(&class),
                }),
                text,
            ))
        }
        Command::Verify { max_n } => {
            let report = verify_theorem_sweep(*max_n, limits)?;
            let zigzag = verify_zigzag_sweep(*max_n)?;
            let total = report.violations.len() + zigzag.failures.len();
            let mut text = format!(
                "theorem sweep n <= {}: {} permutations, {} singleton words, {} lemma cases\n",
                max_n, report.permutations_checked, report.words_checked, report.lemma_cases
            );
            text.push_str(&format!(
                "zig-zag sweep n <= {}: {} cases\n",
                max_n, zigzag.cases
            ));
            for v in &report.violations {
                text.push_str(&format!(
                    "violation {}: {} {}\n",
                    v.check.name(),
                    v.permutation,
                    v.word
                ));
            }
            for (i, j, n) in &zigzag.failures {
                text.push_str(&format!("violation zigzag-lemma: i={i} j={j} n={n}\n"));
            }
            text.push_str(&format!("{total} violations\n"));
            let violations: Vec<Value> = report.violations.iter().map(violation_json).collect();
            let zigzag_failures: Vec<Value> = zigzag
                .failures
                .iter()
                .map(|(i, j, n)| json!({ "i": i, "j": j, "n": n }))
                .collect();
            Ok(Rendered {
                code: if total == 0 { EXIT_OK } else { EXIT_VIOLATION },
                inputs: json!({ "max_n": max_n }),
                results: json!({
                    "permutations_checked": report.permutations_checked,
                    "words_checked": report.words_checked,
                    "degenerate": report.degenerate,
                    "lemma_cases": report.lemma_cases,
                    "zigzag_cases": zigzag.cases,
                    "violation_count": total,
                    "violations": violations,
                    "zigzag_failures": zigzag_failures,
                }),
                text,
            })
        }
        Command::Search { class_count, n } => {
            let result = search_by_class_count(*n, *class_count, limits)?;
            let mut text = format!(
                "{} permutations of degree {} with {} singleton words\n",
                result.permutations.len(),
                n,
                class_count
            );
            for (p, words) in &result.permutations {
                let ws: Vec<String> = words.iter().map(show).collect();
                text.push_str(&format!("{p}: {}\n", ws.join(" ")));
            }
            let perms: Vec<Value> = result
                .permutations
                .iter()
                .map(|(p, words)| json!({ "permutation": p.to_string(), "words": words_json(words) }))
                .collect();
            Ok(ok(
                json!({ "n": n, "class_count": class_count }),
                json!({ "count": result.permutations.len(), "permutations": perms }),
                text,
            ))
        }
        Command::Zigzag { i, j, n } => {
            let r = redword::check_zigzag_lemma(*i, *j, *n)?;
            let holds = r.lemma_holds(*i, *j);
            let text = format!(
                "word {}\nreduced {}\nletters {}\nevaluated {} of length {}\nlemma {}\n",
                r.word,
                r.reduced,
                r.word.len(),
                r.permutation,
                r.evaluated_length,
                if holds { "holds" } else { "FAILS" }
            );
            Ok(Rendered {
                code: if holds { EXIT_OK } else { EXIT_VIOLATION },
                inputs: json!({ "i": i, "j": j, "n": n }),
                results: json!({
                    "word": word_json(&r.word),
                    "reduced": r.reduced,
                    "evaluated_length": r.evaluated_length,
                    "permutation": r.permutation.to_string(),
                    "window_matches": r.window_matches,
                    "symmetries_reduced": r.symmetries_reduced,
                    "lemma_holds": holds,
                }),
                text,
            })
        }
    }
}

fn violation_json(v: &Violation) -> Value {
    json!({
        "check": v.check.name(),
        "permutation": v.permutation.to_string(),
        "word": word_json(&v.word),
    })
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    document: None,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome::failure(code, rendered)
            };
        }
    };
    let limits = Limits {
        max_words: cli.max_words.unwrap_or(DEFAULT_MAX_WORDS),
        sweep_bound: cli.sweep_bound,
    };
    let start = Instant::now();
    let parallel = matches!(cli.command, Command::Verify { .. } | Command::Search { .. });
    let result = if parallel {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(t) = cli.threads {
            builder = builder.num_threads(t);
        }
        match builder.build() {
            Ok(pool) => pool.install(|| execute(&cli.command, &limits)),
            Err(e) => return Outcome::failure(EXIT_USAGE, format!("error: {e}\n")),
        }
    } else {
        execute(&cli.command, &limits)
    };
    let rendered = match result {
        Ok(r) => r,
        Err(e) => return Outcome::failure(exit_code_for(&e), format!("error: {e}\n")),
    };
    let document = OutputDocument {
        command: cli.command.name().to_string(),
        inputs: rendered.inputs,
        results: rendered.results,
        elapsed_ms: cli.timing.then(|| start.elapsed().as_millis()),
    };
    let stdout = match cli.format {
        Format::Text => rendered.text,
        Format::Json => {
            let mut s = serde_json::to_string(&document.to_json()).expect("serializable");
            s.push('\n');
            s
        }
    };
    Outcome {
        code: rendered.code,
        document: Some(document),
        stdout,
        stderr: String::new(),
    }
}
