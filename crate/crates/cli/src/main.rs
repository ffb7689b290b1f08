//! Command-line front end for the simplicial model of the Hopf fibration.
//!
//! Value-producing subcommands read the library's JSON wire forms (inline via
//! `--input`, or from disk via `--file`) and print one compact JSON value on
//! stdout, so any output can be piped back into another subcommand.
//! Suite-running subcommands (`verify …`, `twist check`) print a human
//! summary by default and the full report as JSON with `--json`.
//!
//! Exit status: 0 on success with zero violations, 1 when a verification
//! suite reports violations, 2 on usage or validation errors. Malformed JSON
//! payloads are rejected with the offending line and column.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use hopf_core::{
    check_sphere_twisting, check_universal_twisting, degree_invariant, enumerate_degeneracy_words,
    eta, fill_horn, gamma_basis, gamma_degeneracy, gamma_face, loop_degeneracy, loop_face,
    normalized_chains, run_all, run_bundle_class, run_golden_tables, s2_degeneracy, s2_face,
    s2_simplices, universal_zeta, BaseSimplex, Bounds, ChainComplex, GammaElement, LoopWord,
    OperatorWord, Sampler, SuiteResult, TotalSimplex, TotalSimplexPayload, TwistedProduct,
    VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "hopfmodel",
    version,
    about = "Exact computations in a simplicial model of the Hopf fibration",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    /// Seed for randomized suites and sampled fibers.
    #[arg(long, global = true, default_value_t = 42, value_name = "N")]
    seed: u64,

    /// Largest simplex degree touched by bounded enumerations and suites.
    #[arg(long, global = true, default_value_t = 6, value_name = "D")]
    max_degree: u32,

    /// Randomized checks per law suite.
    #[arg(long, global = true, default_value_t = 1000, value_name = "N")]
    samples: u32,

    /// Bundle class (the twisting degree m).
    #[arg(
        long,
        global = true,
        default_value_t = 1,
        value_name = "M",
        allow_negative_numbers = true
    )]
    class: i64,

    /// Print suite reports as JSON instead of a human summary.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize and enumerate simplicial operator words.
    #[command(subcommand)]
    Op(OpCmd),
    /// Levelwise structure of the free simplicial abelian group Γ(C).
    #[command(subcommand)]
    Gamma(GammaCmd),
    /// The loop group: free-group words, faces, horn filling, the degree map.
    #[command(subcommand)]
    Loop(LoopCmd),
    /// Simplices of the small model of the 2-sphere.
    #[command(subcommand)]
    S2(S2Cmd),
    /// The twisting function of a sphere bundle.
    #[command(subcommand)]
    Eta(EtaCmd),
    /// Check twisting identities.
    #[command(subcommand)]
    Twist(TwistCmd),
    /// The twisted cartesian product: total-space simplices and the bundle maps.
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// Run verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Export enumerable slices of the model.
    #[command(subcommand)]
    Export(ExportCmd),
}

#[derive(Subcommand)]
enum OpCmd {
    /// Rewrite an operator word to its canonical form.
    Normalize {
        /// Source degree for a word given with --word.
        #[arg(long, value_name = "N", requires = "word")]
        source: Option<u32>,
        /// Operator word in text form, rightmost operator acting first (e.g. "s1 d0 d2").
        #[arg(long, value_name = "TEXT", requires = "source", conflicts_with_all = ["input", "file"])]
        word: Option<String>,
        #[command(flatten)]
        payload: Payload,
    },
    /// List the canonical degeneracy words from one degree up to another.
    Words {
        /// Source degree.
        #[arg(long, value_name = "N")]
        source: u32,
        /// Target degree.
        #[arg(long, value_name = "N")]
        target: u32,
    },
}

#[derive(Subcommand)]
enum GammaCmd {
    /// List the basis symbols of Γ(C) in one degree.
    Basis {
        /// Degree to enumerate.
        #[arg(long, value_name = "N")]
        degree: u32,
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Apply a face map to an element of Γ(C).
    Face {
        /// Face index.
        #[arg(long, value_name = "I")]
        index: u32,
        #[command(flatten)]
        payload: Payload,
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Apply a degeneracy map to an element of Γ(C).
    Deg {
        /// Degeneracy index.
        #[arg(long, value_name = "I")]
        index: u32,
        #[command(flatten)]
        payload: Payload,
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Compute the normalized chain complex of Γ(C) up to --max-degree.
    Nchains {
        #[command(flatten)]
        complex: ComplexArg,
    },
}

#[derive(Subcommand)]
enum LoopCmd {
    /// Apply a face map to a loop-group word.
    Face {
        /// Face index.
        #[arg(long, value_name = "I")]
        index: u32,
        #[command(flatten)]
        payload: Payload,
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Apply a degeneracy map to a loop-group word.
    Deg {
        /// Degeneracy index.
        #[arg(long, value_name = "I")]
        index: u32,
        #[command(flatten)]
        payload: Payload,
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Multiply loop-group words left to right (payload: JSON array of words).
    Mul {
        #[command(flatten)]
        payload: Payload,
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Fill a compatible horn (payload: JSON object mapping face index to word).
    FillHorn {
        /// Degree of the filler.
        #[arg(long, value_name = "N")]
        degree: u32,
        /// Index of the missing face.
        #[arg(long, value_name = "K")]
        missing: u32,
        #[command(flatten)]
        payload: Payload,
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Evaluate the degree invariant of a loop-group word.
    Degree {
        #[command(flatten)]
        payload: Payload,
    },
}

#[derive(Subcommand)]
enum S2Cmd {
    /// List all sphere simplices in one degree.
    List {
        /// Degree to enumerate.
        #[arg(long, value_name = "N")]
        degree: u32,
    },
    /// Apply a face map to a sphere simplex.
    Face {
        /// Face index.
        #[arg(long, value_name = "I")]
        index: u32,
        #[command(flatten)]
        payload: Payload,
    },
    /// Apply a degeneracy map to a sphere simplex.
    Deg {
        /// Degeneracy index.
        #[arg(long, value_name = "I")]
        index: u32,
        #[command(flatten)]
        payload: Payload,
    },
}

#[derive(Subcommand)]
enum EtaCmd {
    /// Evaluate the twisting function of the class-m bundle on a base simplex.
    Eval {
        #[command(flatten)]
        payload: Payload,
    },
}

#[derive(Subcommand)]
enum TwistCmd {
    /// Check the four twisting identities for the class-m twisting and the
    /// universal one, exhaustively over the sphere up to --max-degree and on
    /// --samples random elements.
    Check,
}

#[derive(Subcommand)]
enum HopfCmd {
    /// Apply a face map to a total-space simplex.
    Face {
        /// Face index.
        #[arg(long, value_name = "I")]
        index: u32,
        #[command(flatten)]
        payload: Payload,
    },
    /// Apply a degeneracy map to a total-space simplex.
    Deg {
        /// Degeneracy index.
        #[arg(long, value_name = "I")]
        index: u32,
        #[command(flatten)]
        payload: Payload,
    },
    /// Act on a total-space simplex by a fiber word (principal action).
    Act {
        /// The acting loop-group word, as inline JSON.
        #[arg(long, value_name = "JSON")]
        action: String,
        #[command(flatten)]
        payload: Payload,
    },
    /// Lift a horn of the total space over a base filler
    /// (payload: {"class": m, "faces": {"i": {"fiber":…, "base":…}, …}, "filler": …}).
    LiftHorn {
        /// Degree of the filler.
        #[arg(long, value_name = "N")]
        degree: u32,
        /// Index of the missing face.
        #[arg(long, value_name = "K")]
        missing: u32,
        #[command(flatten)]
        payload: Payload,
    },
    /// Project a total-space simplex to its base simplex.
    Project {
        #[command(flatten)]
        payload: Payload,
    },
    /// Send a total-space simplex into the universal twisted product.
    ToUniversal {
        #[command(flatten)]
        payload: Payload,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run every suite with the global bounds and seed.
    All {
        /// Coefficient bound for sampled elements.
        #[arg(long, default_value_t = 3, value_name = "B", allow_negative_numbers = true)]
        coeff_bound: i64,
    },
    /// Check the frozen golden tables: degree-three faces and degeneracies,
    /// the listed twisting values, and the generator census.
    Golden,
    /// Certify the degree invariant for the class-m bundle by bounded search.
    Bundle {
        /// Coefficient bound for the Moore-cycle enumeration.
        #[arg(long, default_value_t = 2, value_name = "B", allow_negative_numbers = true)]
        search_bound: i64,
    },
}

#[derive(Subcommand)]
enum ExportCmd {
    /// Dump the total space up to --max-degree: every base simplex crossed
    /// with --fiber-samples sample fibers.
    Model {
        /// Sample fibers per base simplex (the first is always the identity).
        #[arg(long, default_value_t = 1, value_name = "F")]
        fiber_samples: u32,
    },
}

/// A JSON payload taken inline or from a file; exactly one source is required.
#[derive(Args)]
struct Payload {
    /// Inline JSON payload.
    #[arg(long, value_name = "JSON", conflicts_with = "file")]
    input: Option<String>,
    /// Read the JSON payload from a file.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

impl Payload {
    fn text(&self) -> Result<String> {
        match (&self.input, &self.file) {
            (Some(text), None) => Ok(text.clone()),
            (None, Some(path)) => fs::read_to_string(path)
                .with_context(|| format!("cannot read payload file {}", path.display())),
            (None, None) => bail!("a payload is required: pass --input <JSON> or --file <PATH>"),
            (Some(_), Some(_)) => unreachable!("clap rejects --input with --file"),
        }
    }

    fn parse<T: DeserializeOwned>(&self) -> Result<T> {
        parse_json(&self.text()?)
    }
}

/// The coefficient complex a command works over: a sphere by default, or any
/// complex read from a JSON file.
#[derive(Args)]
struct ComplexArg {
    /// Use the complex with a single Z in degree K.
    #[arg(long, value_name = "K", default_value_t = 2, conflicts_with = "complex")]
    sphere: u32,
    /// Read the coefficient complex from a JSON file instead.
    #[arg(long, value_name = "PATH")]
    complex: Option<PathBuf>,
}

impl ComplexArg {
    fn load(&self) -> Result<ChainComplex> {
        let Some(path) = &self.complex else {
            return Ok(ChainComplex::sphere(self.sphere));
        };
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read complex file {}", path.display()))?;
        let raw: ChainComplex = parse_json(&text)?;
        // Deserialization is structural; rebuild to check shapes and d∘d = 0.
        ChainComplex::new(raw.ranks().clone(), raw.differentials().clone())
            .context("invalid chain complex")
    }
}

/// Parse JSON, annotating failures with their position.
fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).context("malformed JSON payload")
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Op(cmd) => run_op(cmd)?,
        Command::Gamma(cmd) => run_gamma(&cli, cmd)?,
        Command::Loop(cmd) => run_loop(cmd)?,
        Command::S2(cmd) => run_s2(cmd)?,
        Command::Eta(EtaCmd::Eval { payload }) => {
            let base: BaseSimplex = payload.parse()?;
            print_json(&eta(cli.class, &base)?)?;
        }
        Command::Twist(TwistCmd::Check) => return run_twist_check(&cli),
        Command::Hopf(cmd) => run_hopf(cmd)?,
        Command::Verify(cmd) => return run_verify(&cli, cmd),
        Command::Export(ExportCmd::Model { fiber_samples }) => {
            run_export_model(&cli, *fiber_samples)?
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_op(cmd: &OpCmd) -> Result<()> {
    match cmd {
        OpCmd::Normalize {
            source,
            word,
            payload,
        } => {
            let parsed = match (source, word) {
                (Some(src), Some(text)) => OperatorWord::parse(*src, text)?,
                _ => payload.parse()?,
            };
            print_json(&parsed.normalize()?)
        }
        OpCmd::Words { source, target } => {
            let words = enumerate_degeneracy_words(*source, *target)?;
            let words: Vec<OperatorWord> = words
                .iter()
                .map(|w| w.to_operator_word(*source))
                .collect();
            print_json(&words)
        }
    }
}

fn run_gamma(cli: &Cli, cmd: &GammaCmd) -> Result<()> {
    match cmd {
        GammaCmd::Basis { degree, complex } => {
            let c = complex.load()?;
            let basis: Vec<GammaElement> = gamma_basis(&c, *degree)
                .iter()
                .map(|sym| sym.element(&c))
                .collect();
            print_json(&basis)
        }
        GammaCmd::Face {
            index,
            payload,
            complex,
        } => {
            let c = complex.load()?;
            let x: GammaElement = payload.parse()?;
            x.validate(&c)?;
            print_json(&gamma_face(&c, *index, &x)?)
        }
        GammaCmd::Deg {
            index,
            payload,
            complex,
        } => {
            let c = complex.load()?;
            let x: GammaElement = payload.parse()?;
            x.validate(&c)?;
            print_json(&gamma_degeneracy(&c, *index, &x)?)
        }
        GammaCmd::Nchains { complex } => {
            let c = complex.load()?;
            print_json(&normalized_chains(&c, cli.max_degree))
        }
    }
}

fn run_loop(cmd: &LoopCmd) -> Result<()> {
    match cmd {
        LoopCmd::Face {
            index,
            payload,
            complex,
        } => {
            let c = complex.load()?;
            let w: LoopWord = payload.parse()?;
            print_json(&loop_face(&c, *index, &w)?)
        }
        LoopCmd::Deg {
            index,
            payload,
            complex,
        } => {
            let c = complex.load()?;
            let w: LoopWord = payload.parse()?;
            print_json(&loop_degeneracy(&c, *index, &w)?)
        }
        LoopCmd::Mul { payload, complex } => {
            let _ = complex.load()?;
            let words: Vec<LoopWord> = payload.parse()?;
            let Some((first, rest)) = words.split_first() else {
                bail!("loop mul needs a non-empty JSON array of words");
            };
            let mut product = first.clone();
            for w in rest {
                product = product.multiply(w)?;
            }
            print_json(&product)
        }
        LoopCmd::FillHorn {
            degree,
            missing,
            payload,
            complex,
        } => {
            let c = complex.load()?;
            let faces: BTreeMap<u32, LoopWord> = payload.parse()?;
            print_json(&fill_horn(&c, *degree, *missing, &faces)?)
        }
        LoopCmd::Degree { payload } => {
            let w: LoopWord = payload.parse()?;
            print_json(&degree_invariant(&w)?)
        }
    }
}

fn run_s2(cmd: &S2Cmd) -> Result<()> {
    match cmd {
        S2Cmd::List { degree } => print_json(&s2_simplices(*degree)),
        S2Cmd::Face { index, payload } => {
            let b: BaseSimplex = payload.parse()?;
            print_json(&s2_face(*index, &b)?)
        }
        S2Cmd::Deg { index, payload } => {
            let b: BaseSimplex = payload.parse()?;
            print_json(&s2_degeneracy(*index, &b)?)
        }
    }
}

/// Wire form of a total-space simplex without its bundle class, for payloads
/// where the class is given once at the top level.
#[derive(Deserialize)]
struct BareTotalSimplex {
    fiber: LoopWord,
    base: BaseSimplex,
}

#[derive(Deserialize)]
struct LiftHornPayload {
    class: i64,
    faces: BTreeMap<u32, BareTotalSimplex>,
    filler: BaseSimplex,
}

fn split_payload(payload: &Payload) -> Result<(TwistedProduct, TotalSimplex)> {
    let wire: TotalSimplexPayload = payload.parse()?;
    Ok(wire.into_parts()?)
}

fn run_hopf(cmd: &HopfCmd) -> Result<()> {
    match cmd {
        HopfCmd::Face { index, payload } => {
            let (bundle, t) = split_payload(payload)?;
            let image = bundle.face(*index, &t)?;
            print_json(&TotalSimplexPayload::new(&bundle, &image))
        }
        HopfCmd::Deg { index, payload } => {
            let (bundle, t) = split_payload(payload)?;
            let image = bundle.degeneracy(*index, &t)?;
            print_json(&TotalSimplexPayload::new(&bundle, &image))
        }
        HopfCmd::Act { action, payload } => {
            let (bundle, t) = split_payload(payload)?;
            let h: LoopWord = parse_json(action)?;
            let image = bundle.act(&t, &h)?;
            print_json(&TotalSimplexPayload::new(&bundle, &image))
        }
        HopfCmd::LiftHorn {
            degree,
            missing,
            payload,
        } => {
            let wire: LiftHornPayload = payload.parse()?;
            let bundle = TwistedProduct::new(wire.class);
            let mut faces = BTreeMap::new();
            for (i, face) in wire.faces {
                faces.insert(i, TotalSimplex::new(face.fiber, face.base)?);
            }
            let filled = bundle.lift_horn(*degree, *missing, &faces, &wire.filler)?;
            print_json(&TotalSimplexPayload::new(&bundle, &filled))
        }
        HopfCmd::Project { payload } => {
            let (bundle, t) = split_payload(payload)?;
            print_json(&bundle.project(&t))
        }
        HopfCmd::ToUniversal { payload } => {
            let (bundle, t) = split_payload(payload)?;
            let u = bundle.to_universal(&t);
            #[derive(Serialize)]
            struct UniversalWire {
                fiber: LoopWord,
                base: GammaElement,
            }
            print_json(&UniversalWire {
                fiber: u.fiber,
                base: u.base,
            })
        }
    }
}

fn run_twist_check(cli: &Cli) -> Result<ExitCode> {
    if cli.max_degree < 1 {
        bail!("twist check needs --max-degree >= 1: twisting functions start in degree 1");
    }
    let mut result = SuiteResult::new("twisting");
    check_sphere_twisting(|b| eta(cli.class, b), cli.max_degree, &mut result);

    let c = ChainComplex::sphere(2);
    let bounds = Bounds {
        max_degree: cli.max_degree,
        samples: cli.samples,
        coeff_bound: 3,
    };
    let mut sampler = Sampler::new(cli.seed, bounds);
    let elements: Vec<GammaElement> = (0..cli.samples)
        .map(|_| {
            let degree = sampler.degree(1);
            sampler.gamma_element(&c, degree)
        })
        .collect();
    check_universal_twisting(universal_zeta, &c, &elements, &mut result);

    let report = VerificationReport {
        seed: cli.seed,
        bounds,
        suites: vec![result],
    };
    finish_report(cli, &report)
}

fn run_verify(cli: &Cli, cmd: &VerifyCmd) -> Result<ExitCode> {
    let report = match cmd {
        VerifyCmd::All { coeff_bound } => {
            if cli.max_degree < 2 {
                bail!("verify all needs --max-degree >= 2");
            }
            if cli.samples < 1 {
                bail!("verify all needs --samples >= 1");
            }
            if *coeff_bound < 1 {
                bail!("verify all needs --coeff-bound >= 1");
            }
            let bounds = Bounds {
                max_degree: cli.max_degree,
                samples: cli.samples,
                coeff_bound: *coeff_bound,
            };
            run_all(bounds, cli.seed)
        }
        VerifyCmd::Golden => run_golden_tables(),
        VerifyCmd::Bundle { search_bound } => {
            if *search_bound < 1 {
                bail!("verify bundle needs --search-bound >= 1");
            }
            run_bundle_class(cli.class, *search_bound)
        }
    };
    finish_report(cli, &report)
}

/// Print a suite report and turn its violation count into an exit status.
fn finish_report(cli: &Cli, report: &VerificationReport) -> Result<ExitCode> {
    if cli.json {
        print_json(report)?;
    } else {
        for suite in &report.suites {
            println!(
                "suite {:<22} {:>8} checks  {:>3} violations",
                suite.name,
                suite.checks,
                suite.violations.len()
            );
            for v in &suite.violations {
                println!("  violated {}", v.law);
                println!("    witness: {}", v.witness);
            }
        }
        println!(
            "total: {} suites, {} checks, {} violations (seed {})",
            report.suites.len(),
            report.total_checks(),
            report.total_violations(),
            report.seed
        );
    }
    if report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

#[derive(Serialize)]
struct ModelExport {
    class: i64,
    max_degree: u32,
    fiber_samples: u32,
    degrees: Vec<DegreeSlice>,
}

#[derive(Serialize)]
struct DegreeSlice {
    degree: u32,
    base_count: usize,
    simplices: Vec<TotalSimplexPayload>,
}

fn run_export_model(cli: &Cli, fiber_samples: u32) -> Result<()> {
    if fiber_samples < 1 {
        bail!("export model needs --fiber-samples >= 1");
    }
    let bundle = TwistedProduct::new(cli.class);
    let bounds = Bounds {
        max_degree: cli.max_degree,
        samples: cli.samples,
        coeff_bound: 3,
    };
    let mut sampler = Sampler::new(cli.seed, bounds);
    let mut degrees = Vec::new();
    for n in 0..=cli.max_degree {
        let mut fibers = vec![LoopWord::identity(n)];
        for _ in 1..fiber_samples {
            fibers.push(sampler.loop_word(bundle.fiber_complex(), n));
        }
        let bases = s2_simplices(n);
        let mut simplices = Vec::with_capacity(bases.len() * fibers.len());
        for base in &bases {
            for fiber in &fibers {
                let t = TotalSimplex::new(fiber.clone(), base.clone())?;
                simplices.push(TotalSimplexPayload::new(&bundle, &t));
            }
        }
        degrees.push(DegreeSlice {
            degree: n,
            base_count: bases.len(),
            simplices,
        });
    }
    print_json(&ModelExport {
        class: cli.class,
        max_degree: cli.max_degree,
        fiber_samples,
        degrees,
    })
}
