use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grothlab::combinatorics::{Composition, FlagVector, KeyTableau, Permutation, Word};
use grothlab::expansions::{
    flagged_expansion, groth_to_lascoux, lascoux_rsvt, lascoux_rssyt, stable_expansion, ExpansionKind,
    ExpansionResult,
};
use grothlab::insertion::{insert_pair_traced, CompatiblePair};
use grothlab::keys::{left_key_increasing, left_key_rssyt, right_key};
use grothlab::kjdt::{flat, sharp};
use grothlab::polynomial::{demazure, flagged_grothendieck, grothendieck, lascoux, schubert};
use grothlab::verify::{verify_suite, Scale, Status};
use grothlab::{BetaMode, Polynomial, Tableau};
use serde::Serialize;

/// Grothendieck, Lascoux, Schubert and Demazure polynomials, Hecke
/// insertion, K-jeu-de-taquin and tableau keys.
#[derive(Parser, Debug)]
#[command(name = "grothlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Specialization of β in polynomial output.
    #[arg(long, value_enum, global = true, default_value_t = Beta::Symbolic)]
    beta: Beta,

    /// Set x_k = 0 for k > NVARS in polynomial output (default: keep all).
    #[arg(long, global = true)]
    nvars: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Beta {
    Symbolic,
    Zero,
    MinusOne,
}

impl From<Beta> for BetaMode {
    fn from(b: Beta) -> Self {
        match b {
            Beta::Symbolic => BetaMode::Symbolic,
            Beta::Zero => BetaMode::Zero,
            Beta::MinusOne => BetaMode::MinusOne,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursion,
    Rsvt,
    Rssyt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Side {
    Right,
    Left,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// β-Grothendieck polynomial of a permutation.
    Groth {
        #[arg(value_parser = parse_perm)]
        w: Permutation,
    },
    /// Schubert polynomial of a permutation.
    Schubert {
        #[arg(value_parser = parse_perm)]
        w: Permutation,
    },
    /// Lascoux polynomial of a composition such as 1,0,2.
    Lascoux {
        #[arg(value_parser = parse_comp)]
        alpha: Composition,
        #[arg(long, value_enum, default_value_t = Method::Recursion)]
        method: Method,
    },
    /// Demazure character of a composition.
    Demazure {
        #[arg(value_parser = parse_comp)]
        alpha: Composition,
    },
    /// Flagged β-Grothendieck polynomial.
    Flagged {
        #[arg(value_parser = parse_perm)]
        w: Permutation,
        #[arg(long, value_parser = parse_flag)]
        flag: FlagVector,
    },
    /// Positive expansions of Grothendieck polynomials.
    Expand {
        #[command(subcommand)]
        kind: ExpandKind,
    },
    /// Insert a compatible pair, giving a decreasing tableau and a
    /// set-valued recording tableau.
    Insert {
        #[arg(long, value_parser = parse_word)]
        a: Word,
        #[arg(long, value_parser = parse_word)]
        i: Word,
        #[arg(long)]
        trace: bool,
    },
    /// Right key of a decreasing tableau, or left key of an increasing or
    /// reverse semistandard tableau.
    Key {
        #[arg(value_enum)]
        side: Side,
        #[command(flatten)]
        input: TableauInput,
    },
    /// Decreasing to increasing tableau via anti-rectification.
    Sharp {
        #[command(flatten)]
        input: TableauInput,
    },
    /// Increasing to decreasing tableau, inverse of `sharp`.
    Flat {
        #[command(flatten)]
        input: TableauInput,
    },
    /// Run the identity checks; exits with status 3 on any failure.
    Verify {
        #[arg(long, value_parser = parse_scale, default_value = "s3")]
        scale: Vec<Scale>,
    },
}

#[derive(Subcommand, Debug)]
enum ExpandKind {
    /// Grothendieck polynomial into Lascoux polynomials.
    Lascoux {
        #[arg(value_parser = parse_perm)]
        w: Permutation,
    },
    /// Symmetrized Grothendieck polynomial into Grassmannian ones.
    Stable {
        #[arg(value_parser = parse_perm)]
        w: Permutation,
        #[arg(long)]
        n: usize,
    },
    /// Flagged Grothendieck polynomial into Lascoux polynomials.
    Flagged {
        #[arg(value_parser = parse_perm)]
        w: Permutation,
        #[arg(long, value_parser = parse_flag)]
        flag: FlagVector,
    },
}

#[derive(Args, Debug)]
struct TableauInput {
    /// JSON file with `shape_outer`, `shape_inner` and `cells` as
    /// `[row, col, [values]]`.
    #[arg(long)]
    tableau: PathBuf,
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    Permutation::parse(s).map_err(|e| e.to_string())
}

fn parse_comp(s: &str) -> Result<Composition, String> {
    Composition::parse(s).map_err(|e| e.to_string())
}

fn parse_flag(s: &str) -> Result<FlagVector, String> {
    FlagVector::parse(s).map_err(|e| e.to_string())
}

fn parse_word(s: &str) -> Result<Word, String> {
    Word::parse(s).map_err(|e| e.to_string())
}

fn parse_scale(s: &str) -> Result<Scale, String> {
    s.parse().map_err(|e: grothlab::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Domain(String),
    Verification(String),
}

impl From<grothlab::Error> for Failure {
    fn from(e: grothlab::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn read_tableau(path: &Path) -> Result<Tableau<u32>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

struct Output {
    format: Format,
    beta: BetaMode,
    nvars: Option<usize>,
}

impl Output {
    fn poly(&self, p: &Polynomial) -> String {
        let mut p = p.specialize(self.beta);
        if let Some(n) = self.nvars {
            p = Polynomial::from_terms(p.into_terms().into_iter().filter(|(m, _)| m.exps().len() <= n));
        }
        match self.format {
            Format::Text => p.to_string(),
            Format::Json => to_json(&p),
        }
    }

    fn expansion(&self, e: &ExpansionResult) -> String {
        let mut e = e.clone();
        if self.beta == BetaMode::Zero {
            e.terms.retain(|t| t.beta_power == 0);
        }
        if self.format == Format::Json {
            return to_json(&e);
        }
        let name = match e.kind {
            ExpansionKind::Lascoux => "L",
            ExpansionKind::Grassmannian => "G",
        };
        let mut out = String::new();
        for t in &e.terms {
            let negative = self.beta == BetaMode::MinusOne && t.beta_power % 2 == 1;
            let sign = match (out.is_empty(), negative) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            let mut factors = Vec::new();
            if t.multiplicity != 1 {
                factors.push(t.multiplicity.to_string());
            }
            if self.beta == BetaMode::Symbolic {
                match t.beta_power {
                    0 => {}
                    1 => factors.push("b".into()),
                    k => factors.push(format!("b^{k}")),
                }
            }
            factors.push(format!("{name}{}", t.index));
            write!(out, "{sign}{}", factors.join(" ")).expect("write to string");
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn tableau(&self, t: &Tableau<u32>) -> String {
        match self.format {
            Format::Text => t.to_string(),
            Format::Json => to_json(t),
        }
    }

    fn key(&self, k: &KeyTableau) -> String {
        #[derive(Serialize)]
        struct KeyJson<'a> {
            columns: &'a [Vec<u32>],
            weight: Composition,
        }
        match self.format {
            Format::Text => format!("{k}\nweight {}", k.weight()),
            Format::Json => to_json(&KeyJson { columns: k.columns(), weight: k.weight() }),
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let out = Output { format: cli.format, beta: cli.beta.into(), nvars: cli.nvars };
    Ok(match cli.command {
        Command::Groth { w } => out.poly(&grothendieck(&w, BetaMode::Symbolic)),
        Command::Schubert { w } => out.poly(&schubert(&w)),
        Command::Lascoux { alpha, method } => out.poly(&match method {
            Method::Recursion => lascoux(&alpha, BetaMode::Symbolic),
            Method::Rsvt => lascoux_rsvt(&alpha),
            Method::Rssyt => lascoux_rssyt(&alpha),
        }),
        Command::Demazure { alpha } => out.poly(&demazure(&alpha)),
        Command::Flagged { w, flag } => out.poly(&flagged_grothendieck(&w, &flag)?),
        Command::Expand { kind } => out.expansion(&match kind {
            ExpandKind::Lascoux { w } => groth_to_lascoux(&w),
            ExpandKind::Stable { w, n } => stable_expansion(&w, n),
            ExpandKind::Flagged { w, flag } => flagged_expansion(&w, &flag)?,
        }),
        Command::Insert { a, i, trace } => {
            let pair = CompatiblePair::new(a, i)?;
            let (rp, steps) = insert_pair_traced(&pair);
            match (cli.format, trace) {
                (Format::Json, false) => to_json(&rp),
                (Format::Json, true) => to_json(&serde_json::json!({ "steps": steps, "result": rp })),
                (Format::Text, _) => {
                    let mut s = String::new();
                    if trace {
                        for st in &steps {
                            let o = &st.outcome;
                            let how = if o.grew { "grew" } else { "contracted" };
                            writeln!(s, "insert {} (record {}): {how} at {:?} -> {}", st.letter, st.record, o.end_box, o.tableau)
                                .expect("write to string");
                        }
                    }
                    write!(s, "P:\n{}\nQ:\n{}", rp.p(), rp.q()).expect("write to string");
                    s
                }
            }
        }
        Command::Key { side, input } => {
            let t = read_tableau(&input.tableau)?;
            let k = match side {
                Side::Right => right_key(&t)?,
                Side::Left if t.is_increasing() => left_key_increasing(&t)?,
                Side::Left => left_key_rssyt(&t)?,
            };
            out.key(&k)
        }
        Command::Sharp { input } => out.tableau(&sharp(&read_tableau(&input.tableau)?)?),
        Command::Flat { input } => out.tableau(&flat(&read_tableau(&input.tableau)?)?),
        Command::Verify { scale } => {
            let report = verify_suite(&scale);
            let text = match cli.format {
                Format::Json => to_json(&report.entries),
                Format::Text => report
                    .entries
                    .iter()
                    .map(|e| {
                        let status = if e.status == Status::Pass { "PASS" } else { "FAIL" };
                        let ce = e.counterexample.as_deref().map(|c| format!(": {c}")).unwrap_or_default();
                        format!("{status} {} [{}] {} checks{ce}", e.criterion, e.scale, e.checked)
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            if !report.all_passed() {
                return Err(Failure::Verification(text));
            }
            text
        }
    })
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("GROTHLAB_THREADS") else { return Ok(()) };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("GROTHLAB_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Domain(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(report)) => {
            println!("{report}");
            eprintln!("verification failed");
            ExitCode::from(3)
        }
    }
}
