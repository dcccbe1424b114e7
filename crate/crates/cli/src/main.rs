use std::fmt::Write as _;
use std::io::{self, Read as _, Write as _};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use twinscale::{
    alpha_cospectral_check, blowup, char_poly, coalesce_all, cospectral, decomposition_check, eigenvalues_numeric,
    family_subgraph1, family_subgraph2, fixture, format_rational, hat_subgraph, parse_graph, parse_rational,
    quotient_graph, scaled_isomorphism, spectrum_json, twin_classes, write_graph, FamilyVariant, MatrixKind,
    Multiplicity, TwinSubgraphWitness, WeightedGraph, WitnessFile,
};

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_FALSE: u8 = 3;

#[derive(Parser)]
#[command(name = "twinscale", version, about = "Cospectral graph construction and exact spectral checks")]
struct Cli {
    /// Output format for reports; graph-producing commands always emit the graph text format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct MatrixArg {
    /// adjacency, laplacian, signless, normalized or transition
    #[arg(long, default_value = "normalized")]
    matrix: MatrixKind,
}

#[derive(Subcommand)]
enum Command {
    /// Numeric eigenvalues, ascending.
    Spectrum {
        file: String,
        #[command(flatten)]
        m: MatrixArg,
    },
    /// Exact characteristic polynomial.
    Charpoly {
        file: String,
        #[arg(long, default_value = "transition")]
        matrix: MatrixKind,
    },
    /// Exact cospectrality verdict.
    Cospectral {
        a: String,
        b: String,
        #[command(flatten)]
        m: MatrixArg,
    },
    /// Twin vertices.
    Twins {
        #[command(subcommand)]
        action: TwinsAction,
    },
    /// Checks a twin-subgraph witness.
    VerifyWitness {
        file: String,
        /// Path to a witness JSON file, or the JSON itself.
        #[arg(long)]
        witness: String,
    },
    /// The quotient graph of a witness, or one of its two side graphs.
    Quotient {
        file: String,
        #[arg(long)]
        witness: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        side: Option<u8>,
    },
    /// Checks that the transition polynomial splits along a witness.
    DecomposeCheck {
        file: String,
        #[arg(long)]
        witness: String,
    },
    /// Blows each vertex up into independent copies.
    Blowup {
        file: String,
        /// Copies per vertex, e.g. `v=3,u=6`; unlisted vertices keep one copy.
        #[arg(long)]
        mult: String,
    },
    /// Members of the two parameterized families.
    Family {
        #[arg(value_enum)]
        which: FamilyName,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Full)]
        variant: VariantArg,
    },
    /// A named example graph.
    Fixture { name: String },
    /// Finds `φ` and `α` with `B = α·φ(A)`.
    ScaledIso { a: String, b: String },
    /// Checks `spec(B) = √β·spec(A)` for the adjacency matrix.
    AlphaCheck {
        a: String,
        b: String,
        #[arg(long)]
        beta: String,
    },
}

#[derive(Subcommand)]
enum TwinsAction {
    /// Maximal twin classes.
    Find { file: String },
    /// Coalesces all twins and prints the reduced graph.
    Coalesce { file: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Subgraph1,
    Subgraph2,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Full,
    Sub,
}

impl From<VariantArg> for FamilyVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Full => FamilyVariant::Full,
            VariantArg::Sub => FamilyVariant::Sub,
        }
    }
}

struct Output {
    text: String,
    verdict: Option<bool>,
}

impl Output {
    fn plain(text: String) -> Self {
        Output { text, verdict: None }
    }

    fn verdict(text: String, holds: bool) -> Self {
        Output { text, verdict: Some(holds) }
    }
}

type CmdResult = Result<Output, String>;

fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading `{path}`: {e}"))
    }
}

fn load(path: &str) -> Result<(String, WeightedGraph), String> {
    let parsed = parse_graph(&read_source(path)?).map_err(|e| format!("`{path}`: {e}"))?;
    Ok((parsed.name, parsed.graph))
}

fn load_witness(arg: &str) -> Result<WitnessFile, String> {
    let text = if arg.trim_start().starts_with('{') { arg.to_string() } else { read_source(arg)? };
    WitnessFile::parse(&text).map_err(|e| format!("witness: {e}"))
}

fn verified(g: &WeightedGraph, arg: &str) -> Result<TwinSubgraphWitness, String> {
    load_witness(arg)?
        .verify(g)
        .map_err(|e| e.to_string())?
        .ok_or_else(|| "witness does not certify twin subgraphs in this graph".to_string())
}

fn render(format: Format, value: Value, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => format!("{value}\n"),
        Format::Text => text(),
    }
}

fn run(cli: Cli) -> CmdResult {
    let fmt = cli.format;
    let e = |err: twinscale::Error| err.to_string();
    match cli.command {
        Command::Spectrum { file, m } => {
            let (_, g) = load(&file)?;
            let vals = eigenvalues_numeric(&g, m.matrix).map_err(e)?;
            Ok(Output::plain(render(fmt, spectrum_json(m.matrix, &vals), || {
                vals.iter().map(|&v| format!("{:.12}\n", if v.abs() < 5e-13 { 0.0 } else { v })).collect()
            })))
        }
        Command::Charpoly { file, matrix } => {
            let (_, g) = load(&file)?;
            let p = char_poly(&g, matrix).map_err(e)?;
            Ok(Output::plain(render(fmt, p.to_json(), || format!("{p}\n"))))
        }
        Command::Cospectral { a, b, m } => {
            let ((_, g), (_, h)) = (load(&a)?, load(&b)?);
            let holds = cospectral(&g, &h, m.matrix).map_err(e)?;
            let text = render(fmt, json!({ "cospectral": holds, "matrix": m.matrix.as_str() }), || {
                format!("{}\n", if holds { "cospectral" } else { "not cospectral" })
            });
            Ok(Output::verdict(text, holds))
        }
        Command::Twins { action: TwinsAction::Find { file } } => {
            let (_, g) = load(&file)?;
            let classes = twin_classes(&g).map_err(e)?;
            let nontrivial: Vec<_> = classes.iter().filter(|c| c.len() >= 2).collect();
            let value = json!({
                "classes": nontrivial.iter().map(|c| {
                    let rep = c.members()[0].as_str();
                    json!({
                        "members": c.members().iter().map(|m| m.as_str()).collect::<Vec<_>>(),
                        "alpha": c.members()[1..].iter()
                            .map(|m| (m.to_string(), Value::String(format_rational(&c.alpha(rep, m.as_str()).expect("member")))))
                            .collect::<serde_json::Map<_, _>>(),
                    })
                }).collect::<Vec<_>>()
            });
            Ok(Output::plain(render(fmt, value, || {
                let mut out = String::new();
                for c in &nontrivial {
                    let rep = c.members()[0].as_str();
                    let _ = write!(out, "{{{}}}", c.members().iter().map(|m| m.as_str()).collect::<Vec<_>>().join(", "));
                    for m in &c.members()[1..] {
                        let _ = write!(out, "  alpha({rep}, {m}) = {}", format_rational(&c.alpha(rep, m.as_str()).expect("member")));
                    }
                    out.push('\n');
                }
                out
            })))
        }
        Command::Twins { action: TwinsAction::Coalesce { file } } => {
            let (name, g) = load(&file)?;
            let (reduced, removed) = coalesce_all(&g).map_err(e)?;
            Ok(Output::plain(format!("# removed {removed}\n{}", write_graph(&format!("{name}_coalesced"), &reduced))))
        }
        Command::VerifyWitness { file, witness } => {
            let (_, g) = load(&file)?;
            let found = load_witness(&witness)?.verify(&g).map_err(e)?;
            let alpha = found.as_ref().map(|w| format_rational(w.alpha()));
            let text = render(fmt, json!({ "twin_subgraphs": found.is_some(), "alpha": alpha }), || match &alpha {
                Some(a) => format!("twin subgraphs, alpha = {a}\n"),
                None => "not twin subgraphs\n".into(),
            });
            Ok(Output::plain(text))
        }
        Command::Quotient { file, witness, side } => {
            let (name, g) = load(&file)?;
            let w = verified(&g, &witness)?;
            let (out, label) = match side {
                None => (quotient_graph(&g, &w).map_err(e)?, format!("{name}_quotient")),
                Some(s) => (hat_subgraph(&g, &w, s).map_err(e)?, format!("{name}_side{s}")),
            };
            Ok(Output::plain(write_graph(&label, &out)))
        }
        Command::DecomposeCheck { file, witness } => {
            let (_, g) = load(&file)?;
            let w = verified(&g, &witness)?;
            let holds = decomposition_check(&g, &w).map_err(e)?;
            let text = render(fmt, json!({ "decomposes": holds, "alpha": format_rational(w.alpha()) }), || {
                format!("{}\n", if holds { "decomposes" } else { "does not decompose" })
            });
            Ok(Output::verdict(text, holds))
        }
        Command::Blowup { file, mult } => {
            let (name, g) = load(&file)?;
            let m = Multiplicity::parse(&mult).map_err(e)?;
            Ok(Output::plain(write_graph(&format!("{name}_blowup"), &blowup(&g, &m).map_err(e)?)))
        }
        Command::Family { which, k, variant } => {
            let variant = FamilyVariant::from(variant);
            let (g, n) = match which {
                FamilyName::Subgraph1 => (family_subgraph1(k, variant), 1),
                FamilyName::Subgraph2 => (family_subgraph2(k, variant), 2),
            };
            Ok(Output::plain(write_graph(&format!("family{n}_k{k}_{variant}"), &g.map_err(e)?)))
        }
        Command::Fixture { name } => Ok(Output::plain(write_graph(&name, &fixture(&name).map_err(e)?))),
        Command::ScaledIso { a, b } => {
            let ((_, g), (_, h)) = (load(&a)?, load(&b)?);
            let iso = scaled_isomorphism(&g, &h);
            let value = match &iso {
                Some(s) => json!({
                    "isomorphic": true,
                    "alpha": format_rational(&s.alpha),
                    "map": s.map.iter().map(|(u, v)| (u.to_string(), Value::String(v.to_string()))).collect::<serde_json::Map<_, _>>(),
                }),
                None => json!({ "isomorphic": false }),
            };
            let text = render(fmt, value, || match &iso {
                Some(s) => {
                    let mut out = format!("alpha = {}\n", format_rational(&s.alpha));
                    for (u, v) in &s.map {
                        let _ = writeln!(out, "{u} -> {v}");
                    }
                    out
                }
                None => "no scaled isomorphism\n".into(),
            });
            Ok(Output::verdict(text, iso.is_some()))
        }
        Command::AlphaCheck { a, b, beta } => {
            let ((_, g), (_, h)) = (load(&a)?, load(&b)?);
            let beta = parse_rational(&beta).map_err(e)?;
            let v = alpha_cospectral_check(&g, &h, &beta).map_err(e)?;
            let text = render(fmt, v.to_json(), || {
                format!(
                    "{} (beta = {}, {})\n",
                    if v.cospectral { "alpha-cospectral" } else { "not alpha-cospectral" },
                    format_rational(&v.alpha_squared),
                    v.to_json()["mode"].as_str().unwrap_or_default()
                )
            });
            Ok(Output::verdict(text, v.cospectral))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            match out.verdict {
                Some(false) => ExitCode::from(EXIT_FALSE),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
