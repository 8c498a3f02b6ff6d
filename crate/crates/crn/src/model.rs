//! The CRN data model: species, complexes, reactions with reversibility
//! pairing, and the derived matrices Y, I_a and N = Y * I_a.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graphs;
use crate::linalg::{rat, RationalMatrix};

/// A complex: a formal nonnegative integer combination of species. The zero
/// complex is the empty map. Equality of the coefficient maps defines complex
/// identity network-wide.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Complex {
    coefficients: BTreeMap<usize, u64>,
}

impl Complex {
    pub fn zero() -> Self {
        Complex::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, u64)>) -> Self {
        let mut coefficients = BTreeMap::new();
        for (species, coef) in terms {
            if coef > 0 {
                *coefficients.entry(species).or_insert(0) += coef;
            }
        }
        Complex { coefficients }
    }

    /// Complex made of a single species with coefficient 1.
    pub fn species(idx: usize) -> Self {
        Complex::from_terms([(idx, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, species: usize) -> u64 {
        self.coefficients.get(&species).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coefficients.iter().map(|(&s, &c)| (s, c))
    }

    /// The complex T*y (positive integer multiple).
    pub fn scaled(&self, factor: u64) -> Self {
        assert!(factor > 0);
        Complex {
            coefficients: self.coefficients.iter().map(|(&s, &c)| (s, c * factor)).collect(),
        }
    }

    /// Coefficient-wise sum of two complexes.
    pub fn plus(&self, other: &Complex) -> Self {
        let mut coefficients = self.coefficients.clone();
        for (&s, &c) in &other.coefficients {
            *coefficients.entry(s).or_insert(0) += c;
        }
        Complex { coefficients }
    }

    pub fn render(&self, species: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coefficients
            .iter()
            .map(|(&s, &c)| {
                if c == 1 {
                    species[s].clone()
                } else {
                    format!("{}{}", c, species[s])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A directed reaction between two interned complexes. Reversible statements
/// are stored as two directed reactions linked through `reverse_of`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reaction {
    pub id: String,
    pub reactant: usize,
    pub product: usize,
    pub reverse_of: Option<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("reaction {id}: reactant and product complexes are identical")]
    LoopReaction { id: String },
    #[error("duplicate complex at indices {first} and {second}")]
    DuplicateComplex { first: usize, second: usize },
    #[error("complex {index} does not appear in any reaction")]
    UnusedComplex { index: usize },
    #[error("reaction {id}: reverse_of link is not symmetric")]
    BrokenReversePair { id: String },
    #[error("network has no reactions")]
    Empty,
}

/// A chemical reaction network: the triple (S, C, R).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    species: Vec<String>,
    complexes: Vec<Complex>,
    reactions: Vec<Reaction>,
}

impl Network {
    pub fn new(
        species: Vec<String>,
        complexes: Vec<Complex>,
        reactions: Vec<Reaction>,
    ) -> Result<Self, ModelError> {
        if reactions.is_empty() {
            return Err(ModelError::Empty);
        }
        for (i, a) in complexes.iter().enumerate() {
            for (j, b) in complexes.iter().enumerate().skip(i + 1) {
                if a == b {
                    return Err(ModelError::DuplicateComplex { first: i, second: j });
                }
            }
        }
        for r in &reactions {
            if r.reactant == r.product {
                return Err(ModelError::LoopReaction { id: r.id.clone() });
            }
        }
        for (i, r) in reactions.iter().enumerate() {
            if let Some(j) = r.reverse_of {
                let partner = &reactions[j];
                let ok = partner.reverse_of == Some(i)
                    && partner.reactant == r.product
                    && partner.product == r.reactant;
                if !ok {
                    return Err(ModelError::BrokenReversePair { id: r.id.clone() });
                }
            }
        }
        for (index, _) in complexes.iter().enumerate() {
            let used = reactions
                .iter()
                .any(|r| r.reactant == index || r.product == index);
            if !used {
                return Err(ModelError::UnusedComplex { index });
            }
        }
        Ok(Network {
            species,
            complexes,
            reactions,
        })
    }

    pub fn species(&self) -> &[String] {
        &self.species
    }

    pub fn complexes(&self) -> &[Complex] {
        &self.complexes
    }

    pub fn reactions(&self) -> &[Reaction] {
        &self.reactions
    }

    pub fn num_species(&self) -> usize {
        self.species.len()
    }

    pub fn num_complexes(&self) -> usize {
        self.complexes.len()
    }

    pub fn num_reactions(&self) -> usize {
        self.reactions.len()
    }

    pub fn reaction_equation(&self, idx: usize) -> String {
        let r = &self.reactions[idx];
        format!(
            "{} -> {}",
            self.complexes[r.reactant].render(&self.species),
            self.complexes[r.product].render(&self.species)
        )
    }

    /// Y: the m x n molecularity matrix.
    pub fn molecularity_matrix(&self) -> RationalMatrix {
        let mut y = RationalMatrix::zeros(self.num_species(), self.num_complexes());
        for (j, c) in self.complexes.iter().enumerate() {
            for (i, coef) in c.terms() {
                y[(i, j)] = rat(coef as i64, 1);
            }
        }
        y
    }

    /// I_a: the n x r incidence matrix, one -1/+1 pair per column.
    pub fn incidence_matrix(&self) -> RationalMatrix {
        let mut ia = RationalMatrix::zeros(self.num_complexes(), self.num_reactions());
        for (j, r) in self.reactions.iter().enumerate() {
            ia[(r.reactant, j)] = rat(-1, 1);
            ia[(r.product, j)] = rat(1, 1);
        }
        ia
    }

    /// N = Y * I_a: the m x r stoichiometric matrix whose columns are the
    /// reaction vectors.
    pub fn stoichiometric_matrix(&self) -> RationalMatrix {
        self.molecularity_matrix().matmul(&self.incidence_matrix())
    }

    /// Reaction vector of one reaction (product complex minus reactant
    /// complex, as a species-indexed column).
    pub fn reaction_vector(&self, idx: usize) -> Vec<crate::linalg::Rational> {
        let r = &self.reactions[idx];
        let reactant = &self.complexes[r.reactant];
        let product = &self.complexes[r.product];
        (0..self.num_species())
            .map(|s| rat(product.coefficient(s) as i64 - reactant.coefficient(s) as i64, 1))
            .collect()
    }

    pub fn structural_numbers(&self) -> StructuralNumbers {
        let graph = graphs::ComplexGraph::of_network(self);
        let labeling = graph.component_labeling();
        let s = self.stoichiometric_matrix().rank();
        let n = self.num_complexes();
        let l = labeling.num_linkage_classes();
        let sl = labeling.num_strong_classes();
        StructuralNumbers {
            m: self.num_species(),
            n,
            r: self.num_reactions(),
            l,
            sl,
            t: labeling.terminal().len(),
            s,
            delta: (n - l) as i64 - s as i64,
            weakly_reversible: sl == l,
        }
    }

    /// The subnetwork generated by a set of reactions: same species list,
    /// complexes restricted to those touched by the set. `reverse_of` links
    /// survive only when both directions are inside the set.
    pub fn subnetwork(&self, reaction_indices: &[usize]) -> Network {
        assert!(!reaction_indices.is_empty(), "empty subnetwork");
        let mut complex_map: BTreeMap<usize, usize> = BTreeMap::new();
        let mut complexes = Vec::new();
        let intern = |idx: usize, complexes: &mut Vec<Complex>, map: &mut BTreeMap<usize, usize>| {
            *map.entry(idx).or_insert_with(|| {
                complexes.push(self.complexes[idx].clone());
                complexes.len() - 1
            })
        };
        let mut reactions = Vec::new();
        for &ri in reaction_indices {
            let r = &self.reactions[ri];
            let reactant = intern(r.reactant, &mut complexes, &mut complex_map);
            let product = intern(r.product, &mut complexes, &mut complex_map);
            let reverse_of = r.reverse_of.and_then(|partner| {
                reaction_indices
                    .iter()
                    .position(|&other| other == partner)
            });
            reactions.push(Reaction {
                id: r.id.clone(),
                reactant,
                product,
                reverse_of,
            });
        }
        Network {
            species: self.species.clone(),
            complexes,
            reactions,
        }
    }
}

/// The structural invariants of a network: counts, rank, and deficiency
/// delta = n - l - s.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralNumbers {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub l: usize,
    pub sl: usize,
    pub t: usize,
    pub s: usize,
    pub delta: i64,
    pub weakly_reversible: bool,
}

impl fmt::Display for StructuralNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} n={} r={} l={} sl={} t={} s={} delta={} weakly_reversible={}",
            self.m, self.n, self.r, self.l, self.sl, self.t, self.s, self.delta, self.weakly_reversible
        )
    }
}

/// Incremental builder that interns complexes by coefficient-map equality,
/// in first-appearance order.
#[derive(Default)]
pub struct NetworkBuilder {
    species: Vec<String>,
    complexes: Vec<Complex>,
    reactions: Vec<Reaction>,
}

impl NetworkBuilder {
    pub fn new(species: Vec<String>) -> Self {
        NetworkBuilder {
            species,
            ..Default::default()
        }
    }

    pub fn species(&self) -> &[String] {
        &self.species
    }

    /// Returns the species index, adding the label if new.
    pub fn intern_species(&mut self, label: &str) -> usize {
        if let Some(i) = self.species.iter().position(|s| s == label) {
            i
        } else {
            self.species.push(label.to_string());
            self.species.len() - 1
        }
    }

    pub fn intern_complex(&mut self, c: Complex) -> usize {
        if let Some(i) = self.complexes.iter().position(|x| *x == c) {
            i
        } else {
            self.complexes.push(c);
            self.complexes.len() - 1
        }
    }

    /// Adds an irreversible reaction, returning its index.
    pub fn add_reaction(&mut self, id: &str, reactant: Complex, product: Complex) -> usize {
        let reactant = self.intern_complex(reactant);
        let product = self.intern_complex(product);
        self.reactions.push(Reaction {
            id: id.to_string(),
            reactant,
            product,
            reverse_of: None,
        });
        self.reactions.len() - 1
    }

    /// Adds a reversible pair (forward first), returning both indices.
    pub fn add_reversible(&mut self, id: &str, reactant: Complex, product: Complex) -> (usize, usize) {
        let fwd = self.add_reaction(id, reactant.clone(), product.clone());
        let rev = self.add_reaction(&format!("{id}_rev"), product, reactant);
        self.reactions[fwd].reverse_of = Some(rev);
        self.reactions[rev].reverse_of = Some(fwd);
        (fwd, rev)
    }

    pub fn build(self) -> Result<Network, ModelError> {
        Network::new(self.species, self.complexes, self.reactions)
    }
}
