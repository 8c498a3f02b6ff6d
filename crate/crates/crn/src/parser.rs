//! Parser and pretty-printer for the plain-text `.crn` network format.
//!
//! The grammar, one statement per line:
//!
//! ```text
//! # comment to end of line
//! species: A B C            # optional; declares and fixes the species order
//! R1: A + 2B -> C           # irreversible reaction
//! R2: C <-> A               # reversible pair (forward row first)
//! R3: A -> 0                # 0 is the zero complex
//! kinetics:                 # optional block, one row per directed reaction
//! 1 0 0
//! 1/2 0 0
//! ...
//! ```
//!
//! `kinetics: mass-action` derives the kinetic order matrix from the
//! reactant complexes instead of explicit rows. Kinetic entries may be
//! integers, fractions `a/b`, or decimals such as `0.5`; all are parsed as
//! exact rationals. UTF-8 input, LF or CRLF line endings.

use num_bigint::BigInt;
use num_traits::{pow::Pow, Zero};
use thiserror::Error;

use crate::kinetics::KineticSystem;
use crate::linalg::{rat, Rational, RationalMatrix};
use crate::model::{Complex, ModelError, Network, NetworkBuilder};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed statement: {text}")]
    MalformedStatement { line: usize, text: String },
    #[error("line {line}: malformed term `{term}`")]
    MalformedTerm { line: usize, term: String },
    #[error("line {line}: duplicate reaction id `{id}`")]
    DuplicateReactionId { line: usize, id: String },
    #[error("line {line}: unknown species `{species}` (a species: header was declared)")]
    UnknownSpecies { line: usize, species: String },
    #[error("line {line}: reactant and product are the same complex")]
    LoopReaction { line: usize },
    #[error("line {line}: cannot parse kinetic order `{token}`")]
    BadKineticEntry { line: usize, token: String },
    #[error("kinetics block has {got} rows but the network has {expected} directed reactions")]
    KineticsRowCount { got: usize, expected: usize },
    #[error("line {line}: kinetics row has {got} entries but there are {expected} species")]
    KineticsColumnCount { line: usize, got: usize, expected: usize },
    #[error("no kinetics block in input")]
    MissingKinetics,
    #[error("no reactions in input")]
    EmptyInput,
    #[error("invalid network: {0}")]
    Model(#[from] ModelError),
}

/// A parsed document: the network plus the optional kinetics block.
pub struct Document {
    pub network: Network,
    kinetics: Option<KineticsBlock>,
}

enum KineticsBlock {
    MassAction,
    Rows(Vec<Vec<Rational>>),
}

/// Parses the reaction statements only; a kinetics block, if present, is
/// validated but not required.
pub fn parse_network(text: &str) -> Result<Network, ParseError> {
    Ok(parse_document(text)?.network)
}

/// Parses a network together with its kinetic order matrix. Errors if no
/// kinetics block is present.
pub fn parse_kinetic_system(text: &str) -> Result<KineticSystem, ParseError> {
    let doc = parse_document(text)?;
    doc.into_kinetic_system()
}

impl Document {
    pub fn has_kinetics(&self) -> bool {
        self.kinetics.is_some()
    }

    pub fn into_kinetic_system(self) -> Result<KineticSystem, ParseError> {
        let net = self.network;
        let m = net.num_species();
        let r = net.num_reactions();
        let f = match self.kinetics {
            None => return Err(ParseError::MissingKinetics),
            Some(KineticsBlock::MassAction) => mass_action_orders(&net),
            Some(KineticsBlock::Rows(rows)) => {
                if rows.len() != r {
                    return Err(ParseError::KineticsRowCount {
                        got: rows.len(),
                        expected: r,
                    });
                }
                let mut f = RationalMatrix::zeros(r, m);
                for (i, row) in rows.into_iter().enumerate() {
                    for (j, v) in row.into_iter().enumerate() {
                        f[(i, j)] = v;
                    }
                }
                f
            }
        };
        let labels = (1..=r).map(|i| format!("k{i}")).collect();
        Ok(KineticSystem::new(net, f, labels))
    }
}

/// Mass action: kinetic order row of each reaction is its reactant column
/// of Y, i.e. F is the transpose of the reactant part of the molecularity
/// matrix.
pub fn mass_action_orders(net: &Network) -> RationalMatrix {
    let mut f = RationalMatrix::zeros(net.num_reactions(), net.num_species());
    for (i, r) in net.reactions().iter().enumerate() {
        for (s, c) in net.complexes()[r.reactant].terms() {
            f[(i, s)] = rat(c as i64, 1);
        }
    }
    f
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut builder: Option<NetworkBuilder> = None;
    let mut declared_species = false;
    let mut ids: Vec<String> = Vec::new();
    let mut kinetics: Option<KineticsBlock> = None;
    let mut kinetic_rows: Vec<(usize, Vec<String>)> = Vec::new();
    let mut in_kinetics = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if in_kinetics {
            kinetic_rows.push((line, content.split_whitespace().map(String::from).collect()));
            continue;
        }
        if let Some(rest) = content.strip_prefix("species:") {
            let species: Vec<String> = rest.split_whitespace().map(String::from).collect();
            builder = Some(NetworkBuilder::new(species));
            declared_species = true;
            continue;
        }
        if let Some(rest) = content.strip_prefix("kinetics:") {
            let rest = rest.trim();
            if rest == "mass-action" {
                kinetics = Some(KineticsBlock::MassAction);
            } else if rest.is_empty() {
                in_kinetics = true;
            } else {
                return Err(ParseError::MalformedStatement {
                    line,
                    text: content.to_string(),
                });
            }
            continue;
        }

        let (id, body) = content
            .split_once(':')
            .ok_or_else(|| ParseError::MalformedStatement {
                line,
                text: content.to_string(),
            })?;
        let id = id.trim();
        if id.is_empty() || id.contains(char::is_whitespace) {
            return Err(ParseError::MalformedStatement {
                line,
                text: content.to_string(),
            });
        }
        let (lhs, rhs, reversible) = if let Some((l, r)) = body.split_once("<->") {
            (l, r, true)
        } else if let Some((l, r)) = body.split_once("->") {
            (l, r, false)
        } else {
            return Err(ParseError::MalformedStatement {
                line,
                text: content.to_string(),
            });
        };

        let b = builder.get_or_insert_with(|| NetworkBuilder::new(Vec::new()));
        let reactant = parse_complex(lhs, b, declared_species, line)?;
        let product = parse_complex(rhs, b, declared_species, line)?;
        if reactant == product {
            return Err(ParseError::LoopReaction { line });
        }
        let check_id = |ids: &[String], id: &str| -> Result<(), ParseError> {
            if ids.iter().any(|x| x == id) {
                Err(ParseError::DuplicateReactionId {
                    line,
                    id: id.to_string(),
                })
            } else {
                Ok(())
            }
        };
        check_id(&ids, id)?;
        if reversible {
            let rev_id = format!("{id}_rev");
            check_id(&ids, &rev_id)?;
            b.add_reversible(id, reactant, product);
            ids.push(id.to_string());
            ids.push(rev_id);
        } else {
            b.add_reaction(id, reactant, product);
            ids.push(id.to_string());
        }
    }

    if in_kinetics {
        let mut rows = Vec::new();
        for (line, tokens) in kinetic_rows {
            let row: Result<Vec<Rational>, ParseError> = tokens
                .iter()
                .map(|t| parse_rational(t).ok_or(ParseError::BadKineticEntry {
                    line,
                    token: t.clone(),
                }))
                .collect();
            rows.push((line, row?));
        }
        kinetics = Some(KineticsBlock::Rows(validate_row_widths(rows)?));
    }

    let builder = builder.ok_or(ParseError::EmptyInput)?;
    let network = builder.build()?;
    if let Some(KineticsBlock::Rows(rows)) = &kinetics {
        for row in rows {
            if row.len() != network.num_species() {
                // Row widths were checked against each other; check against m.
                return Err(ParseError::KineticsColumnCount {
                    line: 0,
                    got: row.len(),
                    expected: network.num_species(),
                });
            }
        }
    }
    Ok(Document { network, kinetics })
}

fn validate_row_widths(
    rows: Vec<(usize, Vec<Rational>)>,
) -> Result<Vec<Vec<Rational>>, ParseError> {
    let width = rows.first().map_or(0, |(_, r)| r.len());
    for (line, row) in &rows {
        if row.len() != width {
            return Err(ParseError::KineticsColumnCount {
                line: *line,
                got: row.len(),
                expected: width,
            });
        }
    }
    Ok(rows.into_iter().map(|(_, r)| r).collect())
}

fn parse_complex(
    text: &str,
    builder: &mut NetworkBuilder,
    declared_species: bool,
    line: usize,
) -> Result<Complex, ParseError> {
    let text = text.trim();
    if text == "0" {
        return Ok(Complex::zero());
    }
    let mut terms = Vec::new();
    for term in text.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(ParseError::MalformedTerm {
                line,
                term: term.to_string(),
            });
        }
        let digits_end = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
        let (coef_str, name) = term.split_at(digits_end);
        let name = name.trim();
        let coef: u64 = if coef_str.is_empty() {
            1
        } else {
            coef_str.parse().map_err(|_| ParseError::MalformedTerm {
                line,
                term: term.to_string(),
            })?
        };
        if coef == 0
            || name.is_empty()
            || !name
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_')
            || !name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_')
        {
            return Err(ParseError::MalformedTerm {
                line,
                term: term.to_string(),
            });
        }
        if declared_species && !builder.species().iter().any(|s| s == name) {
            return Err(ParseError::UnknownSpecies {
                line,
                species: name.to_string(),
            });
        }
        let idx = builder.intern_species(name);
        terms.push((idx, coef));
    }
    Ok(Complex::from_terms(terms))
}

/// Parses `3`, `-2`, `1/2`, `0.5`, `-1.25` into an exact rational.
pub fn parse_rational(token: &str) -> Option<Rational> {
    if let Some((num, den)) = token.split_once('/') {
        let num: BigInt = num.parse().ok()?;
        let den: BigInt = den.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Rational::new(num, den));
    }
    if let Some((int_part, frac_part)) = token.split_once('.') {
        if frac_part.is_empty() || !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        if !int_digits.chars().all(|c| c.is_ascii_digit()) || int_digits.is_empty() {
            return None;
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let combined: BigInt = format!("{int_digits}{frac_part}").parse().ok()?;
        let value = Rational::new(combined, scale);
        return Some(if negative { -value } else { value });
    }
    let int: BigInt = token.parse().ok()?;
    Some(Rational::from(int))
}

fn format_rational(v: &Rational) -> String {
    if v.denom() == &BigInt::from(1) {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Canonical text form: species header, one statement per reversible pair or
/// irreversible reaction, then the kinetics rows if any. Parsing the output
/// reproduces the input network exactly.
pub fn pretty_print(net: &Network, kinetics: Option<&RationalMatrix>) -> String {
    let mut out = String::new();
    out.push_str("species: ");
    out.push_str(&net.species().join(" "));
    out.push('\n');
    for (i, r) in net.reactions().iter().enumerate() {
        // The reverse member of a pair is printed as part of the forward's
        // `<->` statement.
        if matches!(r.reverse_of, Some(j) if j < i) {
            continue;
        }
        let arrow = if r.reverse_of.is_some() { "<->" } else { "->" };
        out.push_str(&format!(
            "{}: {} {} {}\n",
            r.id,
            net.complexes()[r.reactant].render(net.species()),
            arrow,
            net.complexes()[r.product].render(net.species())
        ));
    }
    if let Some(f) = kinetics {
        out.push_str("kinetics:\n");
        for i in 0..f.rows() {
            let row: Vec<String> = f.row(i).iter().map(format_rational).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}
