//! Orientations, kernel-coordinate equivalence classes, fundamental
//! classes, the O-/P-/P~-/F-decompositions, the independence and
//! incidence-independence tests, and the Type I/II/III classification of
//! subnetworks.

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::graphs::{shape_of_subnetwork, SubnetworkShape};
use crate::linalg::{canonicalize_direction, Rational, RationalMatrix};
use crate::model::{Network, StructuralNumbers};

/// A choice of one direction per reversible pair, plus every irreversible
/// reaction. Members are directed reaction indices in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    members: Vec<usize>,
}

impl Orientation {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, reaction: usize) -> bool {
        self.members.binary_search(&reaction).is_ok()
    }

    /// The reactions of the network not in the orientation (the reverse
    /// directions of the reversible pairs).
    pub fn complement(&self, net: &Network) -> Vec<usize> {
        (0..net.num_reactions())
            .filter(|r| !self.contains(*r))
            .collect()
    }

    /// The orientation representative of an arbitrary reaction: itself if
    /// in O, otherwise its reverse partner.
    pub fn representative(&self, reaction: usize, net: &Network) -> usize {
        if self.contains(reaction) {
            reaction
        } else {
            net.reactions()[reaction]
                .reverse_of
                .expect("reaction outside the orientation must be a reverse direction")
        }
    }
}

/// The as-written orientation: for every reversible pair the first-listed
/// direction, plus all irreversible reactions.
pub fn default_orientation(net: &Network) -> Orientation {
    let members = net
        .reactions()
        .iter()
        .enumerate()
        .filter(|(i, r)| match r.reverse_of {
            None => true,
            Some(j) => *i < j,
        })
        .map(|(i, _)| i)
        .collect();
    Orientation { members }
}

/// Kernel coordinates of the orientation reactions: row `k` is the
/// coordinate vector of the k-th orientation member across a basis of
/// Ker L_O, where L_O is the map spanned by the reaction vectors of O.
#[derive(Clone, Debug)]
pub struct KernelCoordinates {
    pub basis_dim: usize,
    rows: Vec<Vec<Rational>>,
}

impl KernelCoordinates {
    pub fn row(&self, k: usize) -> &[Rational] {
        &self.rows[k]
    }
}

/// Builds the m x |O| matrix of reaction vectors of O and takes the rows of
/// its canonical nullspace basis.
pub fn kernel_coordinates(net: &Network, o: &Orientation) -> KernelCoordinates {
    let m = net.num_species();
    let mut mat = RationalMatrix::zeros(m, o.len());
    for (k, &ri) in o.members().iter().enumerate() {
        for (i, v) in net.reaction_vector(ri).into_iter().enumerate() {
            mat[(i, k)] = v;
        }
    }
    let basis = mat.nullspace_basis();
    let basis_dim = basis.cols();
    let rows = (0..o.len())
        .map(|k| (0..basis_dim).map(|j| basis[(k, j)].clone()).collect())
        .collect();
    KernelCoordinates { basis_dim, rows }
}

/// Partition of the orientation into the zeroth class (all-zero coordinate
/// rows, omitted when empty) and proportionality classes. Classes hold
/// reaction indices and are ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClasses {
    /// P_0: reactions with all-zero kernel coordinates, if any.
    pub zero_class: Option<Vec<usize>>,
    /// P_1, P_2, ...: proportionality classes of nonzero coordinate rows.
    pub classes: Vec<Vec<usize>>,
}

impl EquivalenceClasses {
    /// All classes including P_0 (P_0 first when present).
    pub fn all(&self) -> Vec<&Vec<usize>> {
        self.zero_class.iter().chain(self.classes.iter()).collect()
    }
}

pub fn equivalence_classes(kc: &KernelCoordinates, o: &Orientation) -> EquivalenceClasses {
    let mut zero = Vec::new();
    let mut canon: Vec<(Vec<Rational>, Vec<usize>)> = Vec::new();
    for (k, &ri) in o.members().iter().enumerate() {
        let row = kc.row(k);
        if row.iter().all(Zero::is_zero) {
            zero.push(ri);
            continue;
        }
        let c = canonicalize_direction(row);
        match canon.iter_mut().find(|(key, _)| *key == c) {
            Some((_, members)) => members.push(ri),
            None => canon.push((c, vec![ri])),
        }
    }
    let mut classes: Vec<Vec<usize>> = canon.into_iter().map(|(_, m)| m).collect();
    classes.sort_by_key(|c| c[0]);
    EquivalenceClasses {
        zero_class: if zero.is_empty() { None } else { Some(zero) },
        classes,
    }
}

/// Partition of the full reaction set into fundamental classes: each
/// equivalence class of O pulls in the reverse partners of its members.
/// Classes are ordered by smallest member reaction index.
pub fn fundamental_classes(net: &Network, o: &Orientation) -> Vec<Vec<usize>> {
    let kc = kernel_coordinates(net, o);
    let eq = equivalence_classes(&kc, o);
    let mut out: Vec<Vec<usize>> = Vec::new();
    for class in eq.all() {
        let mut members: Vec<usize> = Vec::new();
        for &ri in class {
            members.push(ri);
            if let Some(rev) = net.reactions()[ri].reverse_of {
                members.push(rev);
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out.sort_by_key(|c| c[0]);
    out
}

/// Subnetwork type per the trichotomy for equivalence classes: independent
/// vectors on a forest (I), minimally dependent on a forest (II), minimally
/// dependent on a single big cycle (III).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SubnetworkType {
    I,
    II,
    III,
}

impl std::fmt::Display for SubnetworkType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SubnetworkType::I => write!(f, "I"),
            SubnetworkType::II => write!(f, "II"),
            SubnetworkType::III => write!(f, "III"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompError {
    #[error("Lemma classification failed for reactions {part:?}: {reason}")]
    ClassificationFailed { part: Vec<usize>, reason: String },
}

/// Classifies one equivalence class (a reaction set within O). The three
/// patterns are exhaustive for genuine equivalence classes; anything else
/// signals an orientation or partition bug and is reported as an error.
pub fn classify_type(part: &[usize], net: &Network) -> Result<SubnetworkType, DecompError> {
    assert!(!part.is_empty(), "empty part");
    let n_mat = net.stoichiometric_matrix().select_columns(part);
    let kernel = n_mat.nullspace_basis();
    let shape = shape_of_subnetwork(part, net);
    let delta = net.subnetwork(part).structural_numbers().delta;
    match kernel.cols() {
        0 => {
            if shape == SubnetworkShape::Forest && delta == 0 {
                Ok(SubnetworkType::I)
            } else {
                Err(DecompError::ClassificationFailed {
                    part: part.to_vec(),
                    reason: format!(
                        "independent vectors but shape {shape:?}, deficiency {delta}"
                    ),
                })
            }
        }
        1 => {
            let v = kernel.column(0);
            if v.iter().any(Zero::is_zero) {
                return Err(DecompError::ClassificationFailed {
                    part: part.to_vec(),
                    reason: "1-dimensional kernel without full support".to_string(),
                });
            }
            match (shape, delta) {
                (SubnetworkShape::Forest, 1) => Ok(SubnetworkType::II),
                (SubnetworkShape::SingleCycle, 0) => Ok(SubnetworkType::III),
                _ => Err(DecompError::ClassificationFailed {
                    part: part.to_vec(),
                    reason: format!(
                        "minimally dependent vectors but shape {shape:?}, deficiency {delta}"
                    ),
                }),
            }
        }
        d => Err(DecompError::ClassificationFailed {
            part: part.to_vec(),
            reason: format!("kernel dimension {d} > 1"),
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    O,
    P,
    PTilde,
    F,
}

impl std::fmt::Display for DecompositionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DecompositionKind::O => write!(f, "O"),
            DecompositionKind::P => write!(f, "P"),
            DecompositionKind::PTilde => write!(f, "P~"),
            DecompositionKind::F => write!(f, "F"),
        }
    }
}

/// One part of a decomposition: its reactions, the structural numbers of
/// the generated subnetwork, and the type label when applicable.
#[derive(Clone, Debug)]
pub struct Part {
    pub reactions: Vec<usize>,
    pub numbers: StructuralNumbers,
    pub part_type: Option<SubnetworkType>,
}

/// A decomposition of a reaction set into subnetworks, with the
/// independence flags relative to the decomposed set.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub parts: Vec<Part>,
    pub independent: bool,
    pub incidence_independent: bool,
    pub bi_independent: bool,
    /// Degenerate-definition branches taken while building, surfaced in
    /// reports.
    pub notes: Vec<String>,
}

impl Decomposition {
    /// Union of all parts: the reaction set this decomposition partitions.
    pub fn decomposed_reactions(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.parts.iter().flat_map(|p| p.reactions.clone()).collect();
        all.sort_unstable();
        all
    }
}

pub fn build_decomposition(
    net: &Network,
    kind: DecompositionKind,
    o: &Orientation,
) -> Result<Decomposition, DecompError> {
    let mut notes = Vec::new();
    let raw_parts: Vec<(Vec<usize>, Option<SubnetworkType>)> = match kind {
        DecompositionKind::O => {
            let mut parts = vec![(o.members().to_vec(), None)];
            let complement = o.complement(net);
            if !complement.is_empty() {
                parts.push((complement, None));
            }
            parts
        }
        DecompositionKind::P => {
            let kc = kernel_coordinates(net, o);
            if kc.basis_dim == 0 {
                notes.push(
                    "trivial kernel (d = 0): every orientation reaction is in P_0, \
                     emitted as a single class"
                        .to_string(),
                );
            }
            let eq = equivalence_classes(&kc, o);
            let mut parts = Vec::new();
            for class in eq.all() {
                let t = classify_type(class, net)?;
                parts.push((class.clone(), Some(t)));
            }
            parts
        }
        DecompositionKind::PTilde => {
            let kc = kernel_coordinates(net, o);
            let eq = equivalence_classes(&kc, o);
            let mut parts = Vec::new();
            for class in eq.all() {
                let t = classify_type(class, net)?;
                parts.push((class.clone(), Some(t)));
                // C_i \ P_i: the reverse partners of this class's members.
                let diff: Vec<usize> = class
                    .iter()
                    .filter_map(|&ri| net.reactions()[ri].reverse_of)
                    .collect();
                if !diff.is_empty() {
                    parts.push((diff, None));
                }
            }
            notes.push(
                "P~ difference sets emitted for every class with a nonempty reverse set"
                    .to_string(),
            );
            parts
        }
        DecompositionKind::F => {
            let kc = kernel_coordinates(net, o);
            let eq = equivalence_classes(&kc, o);
            let mut parts = Vec::new();
            for class in eq.all() {
                let t = classify_type(class, net)?;
                let mut members: Vec<usize> = Vec::new();
                for &ri in class {
                    members.push(ri);
                    if let Some(rev) = net.reactions()[ri].reverse_of {
                        members.push(rev);
                    }
                }
                members.sort_unstable();
                parts.push((members, Some(t)));
            }
            parts.sort_by_key(|(m, _)| m[0]);
            parts
        }
    };

    let parts: Vec<Part> = raw_parts
        .into_iter()
        .map(|(reactions, part_type)| {
            let numbers = net.subnetwork(&reactions).structural_numbers();
            Part {
                reactions,
                numbers,
                part_type,
            }
        })
        .collect();

    let mut d = Decomposition {
        kind,
        parts,
        independent: false,
        incidence_independent: false,
        bi_independent: false,
        notes,
    };
    d.independent = test_independence(net, &d);
    d.incidence_independent = test_incidence_independence(net, &d);
    d.bi_independent = d.independent && d.incidence_independent;
    Ok(d)
}

/// Rank additivity: the decomposed set's stoichiometric subspace is the
/// direct sum of the parts' subspaces iff the ranks add up.
pub fn test_independence(net: &Network, d: &Decomposition) -> bool {
    let n_mat = net.stoichiometric_matrix();
    let whole = n_mat.select_columns(&d.decomposed_reactions()).rank();
    let sum: usize = d
        .parts
        .iter()
        .map(|p| n_mat.select_columns(&p.reactions).rank())
        .sum();
    whole == sum
}

/// Incidence additivity: n - l of the decomposed subnetwork equals the sum
/// of n_i - l_i over the parts.
pub fn test_incidence_independence(net: &Network, d: &Decomposition) -> bool {
    let whole_numbers = net.subnetwork(&d.decomposed_reactions()).structural_numbers();
    let whole = whole_numbers.n - whole_numbers.l;
    let sum: usize = d.parts.iter().map(|p| p.numbers.n - p.numbers.l).sum();
    whole == sum
}

/// Overall label of a P- or F-decomposition from its type census.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OverallType {
    TypeZero,
    TypeOne,
}

/// Type census of a decomposition plus the deficiency-versus-w_II checks.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionTypeSummary {
    pub w_i: usize,
    pub w_ii: usize,
    pub w_iii: usize,
    pub overall: OverallType,
    /// delta <= w_II must hold when the decomposition is independent.
    pub delta_le_wii: Option<bool>,
    /// delta >= w_II must hold when the decomposition is incidence-independent.
    pub delta_ge_wii: Option<bool>,
    /// delta = w_II must hold when the decomposition is bi-independent.
    pub delta_eq_wii: Option<bool>,
}

pub fn summarize_types(net: &Network, d: &Decomposition) -> DecompositionTypeSummary {
    assert!(
        matches!(d.kind, DecompositionKind::P | DecompositionKind::F),
        "type summary applies to P- and F-decompositions"
    );
    let mut w = [0usize; 3];
    for p in &d.parts {
        match p.part_type {
            Some(SubnetworkType::I) => w[0] += 1,
            Some(SubnetworkType::II) => w[1] += 1,
            Some(SubnetworkType::III) => w[2] += 1,
            None => {}
        }
    }
    let delta = net.structural_numbers().delta;
    let w_ii = w[1] as i64;
    DecompositionTypeSummary {
        w_i: w[0],
        w_ii: w[1],
        w_iii: w[2],
        overall: if w[1] >= 1 {
            OverallType::TypeOne
        } else {
            OverallType::TypeZero
        },
        delta_le_wii: d.independent.then_some(delta <= w_ii),
        delta_ge_wii: d.incidence_independent.then_some(delta >= w_ii),
        delta_eq_wii: d.bi_independent.then_some(delta == w_ii),
    }
}
