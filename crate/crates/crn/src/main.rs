//! The `crn` command line tool.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crn::decomp::{self, DecompositionKind};
use crn::kinetics::{self, CfRmVariant};
use crn::parser;
use crn::report::{
    AnalysisReport, DecompositionReport, NetworkSummary, TransformReport, SCHEMA_VERSION,
};
use crn::verdict::{analyze_multistationarity, KineticsClass};

const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(name = "crn", version, about = "Structural analysis of chemical reaction networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    O,
    P,
    Ptilde,
    F,
}

impl From<KindArg> for DecompositionKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::O => DecompositionKind::O,
            KindArg::P => DecompositionKind::P,
            KindArg::Ptilde => DecompositionKind::PTilde,
            KindArg::F => DecompositionKind::F,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    CfRm,
    CfRmPlus,
    CfRiPlus,
}

impl From<VariantArg> for CfRmVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::CfRm => CfRmVariant::Generic,
            VariantArg::CfRmPlus => CfRmVariant::Plus,
            VariantArg::CfRiPlus => CfRmVariant::RiPlus,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KineticsArg {
    Arbitrary,
    MassAction,
}

impl From<KineticsArg> for KineticsClass {
    fn from(k: KineticsArg) -> Self {
        match k {
            KineticsArg::Arbitrary => KineticsClass::Arbitrary,
            KineticsArg::MassAction => KineticsClass::MassAction,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Structural numbers and the fundamental decomposition of a network.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// A chosen decomposition with per-subnetwork numbers and the
    /// independence conclusions.
    Decompose {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "f")]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Apply a reactant-multiple transform to a power-law kinetic system.
    Transform {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "cf-rm-plus")]
        variant: VariantArg,
        /// Write the transformed system to this path instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Multistationarity verdict via the deficiency theorems over the
    /// fundamental decomposition.
    Verdict {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "mass-action")]
        kinetics: KineticsArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure { message, code }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct Failure {
    message: String,
    code: u8,
}

fn parse_failure(e: parser::ParseError) -> Failure {
    let code = if matches!(e, parser::ParseError::MissingKinetics) {
        EXIT_PRECONDITION
    } else {
        EXIT_PARSE
    };
    Failure {
        message: e.to_string(),
        code,
    }
}

fn read_input(file: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(file).map_err(|e| Failure {
        message: format!("{}: {e}", file.display()),
        code: EXIT_PARSE,
    })
}

fn color_enabled() -> bool {
    matches!(std::env::var("CRN_COLOR").as_deref(), Ok(v) if !v.is_empty() && v != "0")
}

fn emit(report: &AnalysisReport, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text(color_enabled())),
    }
}

fn run(cmd: Command) -> Result<ExitCode, Failure> {
    match cmd {
        Command::Analyze { file, format } => {
            let net = parser::parse_network(&read_input(&file)?).map_err(parse_failure)?;
            let o = decomp::default_orientation(&net);
            let d = decomp::build_decomposition(&net, DecompositionKind::F, &o)
                .map_err(internal)?;
            let summary = decomp::summarize_types(&net, &d);
            let report = AnalysisReport {
                schema_version: SCHEMA_VERSION,
                command: "analyze".to_string(),
                network: NetworkSummary::of(&net),
                decomposition: Some(DecompositionReport::of(&net, &d, Some(summary))),
                verdict: None,
                transform: None,
            };
            emit(&report, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { file, kind, format } => {
            let net = parser::parse_network(&read_input(&file)?).map_err(parse_failure)?;
            let o = decomp::default_orientation(&net);
            let kind = DecompositionKind::from(kind);
            let d = decomp::build_decomposition(&net, kind, &o).map_err(internal)?;
            let summary = matches!(kind, DecompositionKind::P | DecompositionKind::F)
                .then(|| decomp::summarize_types(&net, &d));
            let report = AnalysisReport {
                schema_version: SCHEMA_VERSION,
                command: "decompose".to_string(),
                network: NetworkSummary::of(&net),
                decomposition: Some(DecompositionReport::of(&net, &d, summary)),
                verdict: None,
                transform: None,
            };
            emit(&report, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform {
            file,
            variant,
            out,
            format,
        } => {
            let ks =
                parser::parse_kinetic_system(&read_input(&file)?).map_err(parse_failure)?;
            let variant = CfRmVariant::from(variant);
            let (after, record) = kinetics::cf_rm(&ks, variant).map_err(|e| Failure {
                message: e.to_string(),
                code: EXIT_PRECONDITION,
            })?;
            assert!(
                kinetics::verify_dynamic_equivalence(&ks, &after, &record),
                "transform postcondition: dynamic equivalence"
            );
            let invariants = kinetics::check_transform_invariants(&ks, &after);
            let transformed =
                parser::pretty_print(after.network(), Some(after.kinetic_orders()));
            if let Some(path) = &out {
                std::fs::write(path, &transformed).map_err(|e| Failure {
                    message: format!("{}: {e}", path.display()),
                    code: EXIT_PARSE,
                })?;
            }
            let report = AnalysisReport {
                schema_version: SCHEMA_VERSION,
                command: "transform".to_string(),
                network: NetworkSummary::of(after.network()),
                decomposition: None,
                verdict: None,
                transform: Some(TransformReport::of(
                    &variant.to_string(),
                    ks.network(),
                    after.network(),
                    kinetics::classify_plk(&ks).0,
                    kinetics::classify_plk(&after).0,
                    &record,
                    invariants,
                    transformed,
                )),
            };
            emit(&report, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verdict {
            file,
            kinetics,
            format,
        } => {
            let net = parser::parse_network(&read_input(&file)?).map_err(parse_failure)?;
            let verdict = analyze_multistationarity(&net, kinetics.into());
            let o = decomp::default_orientation(&net);
            let decomposition = decomp::build_decomposition(&net, DecompositionKind::F, &o)
                .ok()
                .map(|d| {
                    let summary = decomp::summarize_types(&net, &d);
                    DecompositionReport::of(&net, &d, Some(summary))
                });
            let report = AnalysisReport {
                schema_version: SCHEMA_VERSION,
                command: "verdict".to_string(),
                network: NetworkSummary::of(&net),
                decomposition,
                verdict: Some(verdict),
                transform: None,
            };
            emit(&report, format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn internal(e: crn::decomp::DecompError) -> Failure {
    Failure {
        message: e.to_string(),
        code: EXIT_PRECONDITION,
    }
}
