//! Analysis of chemical reaction networks and power-law kinetic systems:
//! structural numbers and deficiency, orientations and fundamental
//! decompositions, independence tests, reactant-multiple transforms, and
//! multistationarity verdicts built on the deficiency theorems.
//!
//! The `crn` binary wraps the library; see the crate README for the text
//! format and CLI usage.

pub mod decomp;
pub mod graphs;
pub mod kinetics;
pub mod linalg;
pub mod model;
pub mod parser;
pub mod report;
pub mod verdict;

pub use decomp::{
    build_decomposition, default_orientation, fundamental_classes, summarize_types,
    Decomposition, DecompositionKind, Orientation, SubnetworkType,
};
pub use kinetics::{cf_rm, classify_plk, CfRmVariant, KineticSystem, PlkClass};
pub use model::{Complex, Network, NetworkBuilder, Reaction, StructuralNumbers};
pub use parser::{parse_document, parse_kinetic_system, parse_network, pretty_print, ParseError};
pub use report::AnalysisReport;
pub use verdict::{analyze_multistationarity, Conclusion, KineticsClass, Verdict};
