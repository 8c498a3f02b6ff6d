//! Power-law kinetic systems: PL-RDK / PL-NDK classification, CF-subsets
//! and NF-nodes, and the reactant-multiple transforms (CF-RM, CF-RM+,
//! CF-RI+) that convert a PL-NDK system into a dynamically equivalent
//! PL-RDK system.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::decomp::{self, DecompositionKind};
use crate::linalg::RationalMatrix;
use crate::model::{Complex, Network, Reaction};

/// A power-law kinetic system: a network plus its r x m kinetic order
/// matrix. Rate constants stay symbolic; no analysis here needs their
/// values.
#[derive(Clone, Debug)]
pub struct KineticSystem {
    net: Network,
    f: RationalMatrix,
    rate_labels: Vec<String>,
}

impl KineticSystem {
    pub fn new(net: Network, f: RationalMatrix, rate_labels: Vec<String>) -> Self {
        assert_eq!(f.rows(), net.num_reactions(), "one kinetic row per reaction");
        assert_eq!(f.cols(), net.num_species(), "one kinetic column per species");
        assert_eq!(rate_labels.len(), net.num_reactions());
        KineticSystem { net, f, rate_labels }
    }

    /// Mass action: F is the transpose of the reactant part of Y.
    pub fn mass_action(net: Network) -> Self {
        let f = crate::parser::mass_action_orders(&net);
        let labels = (1..=net.num_reactions()).map(|i| format!("k{i}")).collect();
        KineticSystem::new(net, f, labels)
    }

    pub fn network(&self) -> &Network {
        &self.net
    }

    pub fn kinetic_orders(&self) -> &RationalMatrix {
        &self.f
    }

    pub fn rate_labels(&self) -> &[String] {
        &self.rate_labels
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PlkClass {
    PlRdk,
    PlNdk,
}

impl std::fmt::Display for PlkClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlkClass::PlRdk => write!(f, "PL-RDK"),
            PlkClass::PlNdk => write!(f, "PL-NDK"),
        }
    }
}

/// One reactant node: its complex and its CF-subsets (maximal groups of
/// branching reactions with identical kinetic rows). The node is CF when
/// there is a single subset, NF otherwise.
#[derive(Clone, Debug)]
pub struct NodeInfo {
    pub reactant_complex: usize,
    pub cf_subsets: Vec<Vec<usize>>,
}

impl NodeInfo {
    pub fn is_nf(&self) -> bool {
        self.cf_subsets.len() >= 2
    }
}

/// Per-node classification of the reactant set rho(R).
#[derive(Clone, Debug)]
pub struct NodeClassification {
    pub nodes: Vec<NodeInfo>,
}

impl NodeClassification {
    pub fn nf_nodes(&self) -> impl Iterator<Item = &NodeInfo> {
        self.nodes.iter().filter(|n| n.is_nf())
    }
}

/// Groups reactions by reactant complex and splits each node into
/// CF-subsets by exact equality of kinetic rows.
pub fn classify_plk(ks: &KineticSystem) -> (PlkClass, NodeClassification) {
    let net = ks.network();
    let mut nodes: Vec<NodeInfo> = Vec::new();
    for (ri, r) in net.reactions().iter().enumerate() {
        let node = match nodes.iter_mut().find(|n| n.reactant_complex == r.reactant) {
            Some(n) => n,
            None => {
                nodes.push(NodeInfo {
                    reactant_complex: r.reactant,
                    cf_subsets: Vec::new(),
                });
                nodes.last_mut().unwrap()
            }
        };
        let row = ks.f.row(ri);
        match node
            .cf_subsets
            .iter_mut()
            .find(|subset| ks.f.row(subset[0]) == row)
        {
            Some(subset) => subset.push(ri),
            None => node.cf_subsets.push(vec![ri]),
        }
    }
    let class = if nodes.iter().any(NodeInfo::is_nf) {
        PlkClass::PlNdk
    } else {
        PlkClass::PlRdk
    };
    (class, NodeClassification { nodes })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CfRmVariant {
    /// Generic CF-RM: new reactants only need to avoid the current reactant
    /// set.
    Generic,
    /// CF-RM+: new reactants avoid all current complexes; new products
    /// additionally avoid complexes introduced by the transform.
    Plus,
    /// CF-RI+: CF-RM+ with reversibility/irreversibility preservation;
    /// reverse-side CF-subsets migrate with the same catalytic complex.
    RiPlus,
}

impl std::fmt::Display for CfRmVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CfRmVariant::Generic => write!(f, "cf-rm"),
            CfRmVariant::Plus => write!(f, "cf-rm-plus"),
            CfRmVariant::RiPlus => write!(f, "cf-ri-plus"),
        }
    }
}

/// One modified reaction: complexes before and after, and the multiplier
/// that produced the change (the paired forward multiplier for catalytic
/// migrations).
#[derive(Clone, Debug)]
pub struct ReactionChange {
    pub reaction: usize,
    pub old_reactant: Complex,
    pub old_product: Complex,
    pub new_reactant: Complex,
    pub new_product: Complex,
    pub multiplier: u64,
}

#[derive(Clone, Debug, Default)]
pub struct TransformRecord {
    pub changes: Vec<ReactionChange>,
    pub notes: Vec<String>,
}

impl TransformRecord {
    pub fn is_identity(&self) -> bool {
        self.changes.is_empty()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KineticsError {
    #[error("NF-node at the zero complex cannot be resolved by reactant multiples")]
    ZeroComplexNfNode,
}

// Mutable working copy of one reaction during a transform.
#[derive(Clone)]
struct Pending {
    id: String,
    reactant: Complex,
    product: Complex,
    reverse_of: Option<usize>,
}

struct TransformState {
    reactions: Vec<Pending>,
    original_complexes: BTreeSet<Complex>,
}

impl TransformState {
    fn current_complexes(&self) -> BTreeSet<Complex> {
        self.reactions
            .iter()
            .flat_map(|p| [p.reactant.clone(), p.product.clone()])
            .collect()
    }

    fn current_reactants(&self) -> BTreeSet<Complex> {
        self.reactions.iter().map(|p| p.reactant.clone()).collect()
    }

    fn introduced_complexes(&self) -> BTreeSet<Complex> {
        self.current_complexes()
            .difference(&self.original_complexes)
            .cloned()
            .collect()
    }
}

/// Applies the selected reactant-multiple transform. A PL-RDK input is
/// returned unchanged with an empty record. The output system always has
/// the same reaction vectors and kinetic rows per reaction, hence the same
/// species formation rate function.
pub fn cf_rm(
    ks: &KineticSystem,
    variant: CfRmVariant,
) -> Result<(KineticSystem, TransformRecord), KineticsError> {
    let (class, _) = classify_plk(ks);
    let mut record = TransformRecord::default();
    if class == PlkClass::PlRdk {
        return Ok((ks.clone(), record));
    }
    let net = ks.network();
    let mut state = TransformState {
        reactions: net
            .reactions()
            .iter()
            .map(|r| Pending {
                id: r.id.clone(),
                reactant: net.complexes()[r.reactant].clone(),
                product: net.complexes()[r.product].clone(),
                reverse_of: r.reverse_of,
            })
            .collect(),
        original_complexes: net.complexes().iter().cloned().collect(),
    };

    // Sweep NF-nodes (in order of reactant first appearance) until none
    // remain; a catalytic migration can create a new branching node, so one
    // pass is not always enough.
    let mut rounds = 0;
    loop {
        let mut reactants: Vec<Complex> = Vec::new();
        for p in &state.reactions {
            if !reactants.contains(&p.reactant) {
                reactants.push(p.reactant.clone());
            }
        }
        let nf: Vec<Complex> = reactants
            .into_iter()
            .filter(|y| subsets_at(ks, &state, y).len() >= 2)
            .collect();
        if nf.is_empty() {
            break;
        }
        rounds += 1;
        assert!(rounds <= 64, "NF sweep did not converge");
        for y in &nf {
            process_nf_node(ks, y, variant, &mut state, &mut record)?;
        }
    }

    let after = rebuild(ks, state, &mut record);
    debug_assert_eq!(classify_plk(&after).0, PlkClass::PlRdk);
    Ok((after, record))
}

// Current CF-subsets at the node with reactant complex `y`: reaction
// positions grouped by kinetic row (rows never change, so grouping by the
// original F rows stays correct).
fn subsets_at(ks: &KineticSystem, state: &TransformState, y: &Complex) -> Vec<Vec<usize>> {
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    for (ri, p) in state.reactions.iter().enumerate() {
        if p.reactant != *y {
            continue;
        }
        let row = ks.kinetic_orders().row(ri);
        match subsets
            .iter_mut()
            .find(|s| ks.kinetic_orders().row(s[0]) == row)
        {
            Some(s) => s.push(ri),
            None => subsets.push(vec![ri]),
        }
    }
    subsets
}

fn process_nf_node(
    ks: &KineticSystem,
    y: &Complex,
    variant: CfRmVariant,
    state: &mut TransformState,
    record: &mut TransformRecord,
) -> Result<(), KineticsError> {
    let mut subsets = subsets_at(ks, state, y);
    if subsets.len() < 2 {
        // A CF-RI+ catalytic migration may already have resolved this node.
        if subsets.len() == 1 {
            record
                .notes
                .push("NF-node resolved by an earlier catalytic migration".to_string());
        }
        return Ok(());
    }
    if y.is_zero() {
        return Err(KineticsError::ZeroComplexNfNode);
    }
    // Largest subset is kept; ties break toward the lowest minimum reaction
    // index. `subsets_at` emits subsets ordered by first member, so a stable
    // max scan honors the tie rule.
    let sort_key = |s: &Vec<usize>| (usize::MAX - s.len(), s[0]);

    match variant {
        CfRmVariant::Generic | CfRmVariant::Plus => {
            subsets.sort_by_key(|s| sort_key(s));
            for subset in &subsets[1..] {
                transform_subset(ks, y, subset, variant, state, record);
            }
        }
        CfRmVariant::RiPlus => {
            let has_rev = |s: &Vec<usize>| s.iter().any(|&ri| state.reactions[ri].reverse_of.is_some());
            let (mut reversible, mut irreversible): (Vec<_>, Vec<_>) =
                subsets.into_iter().partition(|s| has_rev(s));
            irreversible.sort_by_key(|s| sort_key(s));
            reversible.sort_by_key(|s| sort_key(s));
            if !irreversible.is_empty() {
                // Keep the largest irreversible subset, transform the rest
                // with CF-RM+.
                for subset in &irreversible[1..] {
                    transform_subset(ks, y, subset, CfRmVariant::Plus, state, record);
                }
            } else {
                record.notes.push(
                    "NF-node with only reversible CF-subsets: all subsets transformed"
                        .to_string(),
                );
            }
            for subset in &reversible {
                transform_subset(ks, y, subset, CfRmVariant::RiPlus, state, record);
            }
        }
    }
    Ok(())
}

// Picks the multiplier and rewrites one CF-subset (and, for RiPlus, the
// reverse-side subsets of its reversible members).
fn transform_subset(
    ks: &KineticSystem,
    y: &Complex,
    subset: &[usize],
    variant: CfRmVariant,
    state: &mut TransformState,
    record: &mut TransformRecord,
) {
    let multiplier = choose_multiplier(y, subset, variant, state);
    let catalytic = y.scaled(multiplier - 1);

    let mut migrations: BTreeSet<usize> = BTreeSet::new();
    if variant == CfRmVariant::RiPlus {
        for &ri in subset {
            if let Some(rev) = state.reactions[ri].reverse_of {
                let rev_reactant = state.reactions[rev].reactant.clone();
                let rev_subset = subsets_at(ks, state, &rev_reactant)
                    .into_iter()
                    .find(|s| s.contains(&rev))
                    .expect("reverse reaction must sit in a CF-subset");
                migrations.extend(rev_subset);
            }
        }
    }

    for &ri in subset {
        let p = &mut state.reactions[ri];
        let change = ReactionChange {
            reaction: ri,
            old_reactant: p.reactant.clone(),
            old_product: p.product.clone(),
            new_reactant: y.scaled(multiplier),
            new_product: p.product.plus(&catalytic),
            multiplier,
        };
        p.reactant = change.new_reactant.clone();
        p.product = change.new_product.clone();
        record.changes.push(change);
    }
    // Migrate the reverse-side subsets with the same catalytic complex so
    // every pair stays reversible.
    for ri in migrations {
        if subset.contains(&ri) {
            continue;
        }
        {
            let p = &mut state.reactions[ri];
            let change = ReactionChange {
                reaction: ri,
                old_reactant: p.reactant.clone(),
                old_product: p.product.clone(),
                new_reactant: p.reactant.plus(&catalytic),
                new_product: p.product.plus(&catalytic),
                multiplier,
            };
            p.reactant = change.new_reactant.clone();
            p.product = change.new_product.clone();
            record.changes.push(change);
        }
    }
}

// Smallest T >= 2 satisfying the variant's exclusion rules.
fn choose_multiplier(
    y: &Complex,
    subset: &[usize],
    variant: CfRmVariant,
    state: &TransformState,
) -> u64 {
    let reactants = state.current_reactants();
    let complexes = state.current_complexes();
    let introduced = state.introduced_complexes();
    'search: for t in 2u64.. {
        let new_reactant = y.scaled(t);
        let catalytic = y.scaled(t - 1);
        match variant {
            CfRmVariant::Generic => {
                if reactants.contains(&new_reactant) {
                    continue;
                }
            }
            CfRmVariant::Plus | CfRmVariant::RiPlus => {
                if complexes.contains(&new_reactant) {
                    continue;
                }
                for &ri in subset {
                    let new_product = state.reactions[ri].product.plus(&catalytic);
                    if introduced.contains(&new_product) {
                        continue 'search;
                    }
                }
                if variant == CfRmVariant::RiPlus {
                    for &ri in subset {
                        if let Some(rev) = state.reactions[ri].reverse_of {
                            let migrated = state.reactions[rev].reactant.plus(&catalytic);
                            if complexes.contains(&migrated) {
                                continue 'search;
                            }
                        }
                    }
                }
            }
        }
        return t;
    }
    unreachable!("multiplier search is over an infinite ascending range")
}

fn rebuild(
    ks: &KineticSystem,
    mut state: TransformState,
    record: &mut TransformRecord,
) -> KineticSystem {
    // The generic and plus variants may rewrite one direction of a
    // reversible pair only; the other direction survives as an independent
    // irreversible reaction (only CF-RI+ keeps pairs intact).
    for i in 0..state.reactions.len() {
        if let Some(j) = state.reactions[i].reverse_of {
            let mirrored = state.reactions[i].reactant == state.reactions[j].product
                && state.reactions[i].product == state.reactions[j].reactant;
            if !mirrored {
                state.reactions[i].reverse_of = None;
                state.reactions[j].reverse_of = None;
                record.notes.push(format!(
                    "reversible pair {} / {} decoupled by the transform",
                    state.reactions[i].id, state.reactions[j].id
                ));
            }
        }
    }
    let mut complexes: Vec<Complex> = Vec::new();
    let intern = |c: &Complex, complexes: &mut Vec<Complex>| match complexes
        .iter()
        .position(|x| x == c)
    {
        Some(i) => i,
        None => {
            complexes.push(c.clone());
            complexes.len() - 1
        }
    };
    let reactions: Vec<Reaction> = state
        .reactions
        .iter()
        .map(|p| Reaction {
            id: p.id.clone(),
            reactant: intern(&p.reactant, &mut complexes),
            product: intern(&p.product, &mut complexes),
            reverse_of: p.reverse_of,
        })
        .collect();
    let net = Network::new(ks.network().species().to_vec(), complexes, reactions)
        .expect("transform preserves network validity");
    KineticSystem::new(net, ks.kinetic_orders().clone(), ks.rate_labels().to_vec())
}

/// True iff every reaction keeps its reaction vector and kinetic row, and
/// the record's entries match the after-state; this implies an identical
/// species formation rate function on all positive states.
pub fn verify_dynamic_equivalence(
    before: &KineticSystem,
    after: &KineticSystem,
    rec: &TransformRecord,
) -> bool {
    let (bn, an) = (before.network(), after.network());
    if bn.num_reactions() != an.num_reactions() {
        return false;
    }
    if before.kinetic_orders() != after.kinetic_orders() {
        return false;
    }
    for ri in 0..bn.num_reactions() {
        if bn.reaction_vector(ri) != an.reaction_vector(ri) {
            return false;
        }
    }
    // A reaction can be rewritten more than once (a migrated subset may be
    // caught by a later node); only the last record entry reflects the
    // final state.
    let mut latest: std::collections::BTreeMap<usize, &ReactionChange> =
        std::collections::BTreeMap::new();
    for change in &rec.changes {
        latest.insert(change.reaction, change);
    }
    for change in latest.values() {
        let r = &an.reactions()[change.reaction];
        if an.complexes()[r.reactant] != change.new_reactant
            || an.complexes()[r.product] != change.new_product
        {
            return false;
        }
    }
    true
}

/// Before/after comparison of the decomposition-level invariants of a
/// reversibility-preserving transform. Incidence-independence is reported
/// on both sides without an agreement claim; it can legitimately change.
#[derive(Clone, Debug, Serialize)]
pub struct TransformInvariantReport {
    pub orientation_size_before: usize,
    pub orientation_size_after: usize,
    pub orientation_size_preserved: bool,
    pub reversibility_preserved: bool,
    pub f_independent_before: bool,
    pub f_independent_after: bool,
    pub f_independence_agrees: bool,
    pub f_incidence_independent_before: bool,
    pub f_incidence_independent_after: bool,
    pub notes: Vec<String>,
}

pub fn check_transform_invariants(
    before: &KineticSystem,
    after: &KineticSystem,
) -> TransformInvariantReport {
    let (bn, an) = (before.network(), after.network());
    let ob = decomp::default_orientation(bn);
    let oa = decomp::default_orientation(an);
    let fb = decomp::build_decomposition(bn, DecompositionKind::F, &ob)
        .expect("F-decomposition of source network");
    let fa = decomp::build_decomposition(an, DecompositionKind::F, &oa)
        .expect("F-decomposition of transformed network");
    let reversibility_preserved = bn.num_reactions() == an.num_reactions()
        && bn
            .reactions()
            .iter()
            .zip(an.reactions())
            .all(|(x, y)| x.reverse_of == y.reverse_of);
    let mut notes = Vec::new();
    if fb.incidence_independent != fa.incidence_independent {
        notes.push(
            "incidence-independence changed under the transform (no agreement is asserted)"
                .to_string(),
        );
    }
    TransformInvariantReport {
        orientation_size_before: ob.len(),
        orientation_size_after: oa.len(),
        orientation_size_preserved: ob.len() == oa.len(),
        reversibility_preserved,
        f_independent_before: fb.independent,
        f_independent_after: fa.independent,
        f_independence_agrees: fb.independent == fa.independent,
        f_incidence_independent_before: fb.incidence_independent,
        f_incidence_independent_after: fa.incidence_independent,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_kinetic_system, parse_network};

    const ABC_PLK: &str = "R1: A -> B\nR2: B -> C\nR3: A -> 0\nR4: B -> 0\nR5: C -> 0\n\
kinetics:\n1 0 0\n0 1 0\n0.5 0 0\n0 0.5 0\n0 0 1\n";

    const AUTOCAT: &str = "R1: 0 -> A1\nR2: A1 -> 0\nR3: A1 -> 2A1\nR4: 2A1 -> 0\n\
kinetics:\n0\n0.5\n1\n0.5\n";

    #[test]
    fn abc_is_plndk_with_branching_nodes_a_and_b() {
        let ks = parse_kinetic_system(ABC_PLK).unwrap();
        let (class, nodes) = classify_plk(&ks);
        assert_eq!(class, PlkClass::PlNdk);
        let nf: Vec<usize> = nodes.nf_nodes().map(|n| n.reactant_complex).collect();
        let names: Vec<String> = nf
            .iter()
            .map(|&c| ks.network().complexes()[c].render(ks.network().species()))
            .collect();
        assert_eq!(names, ["A", "B"]);
    }

    #[test]
    fn mass_action_is_plrdk() {
        let net = parse_network("R1: A -> B\nR2: A -> C\n").unwrap();
        let ks = KineticSystem::mass_action(net);
        assert_eq!(classify_plk(&ks).0, PlkClass::PlRdk);
    }

    #[test]
    fn autocatalytic_example_is_plndk() {
        let ks = parse_kinetic_system(AUTOCAT).unwrap();
        assert_eq!(classify_plk(&ks).0, PlkClass::PlNdk);
    }

    #[test]
    fn cf_rm_plus_on_abc_matches_reference_transform() {
        let ks = parse_kinetic_system(ABC_PLK).unwrap();
        let (after, record) = cf_rm(&ks, CfRmVariant::Plus).unwrap();
        let eqs: Vec<String> = (0..after.network().num_reactions())
            .map(|i| after.network().reaction_equation(i))
            .collect();
        assert!(eqs.contains(&"2A -> A".to_string()), "{eqs:?}");
        assert!(eqs.contains(&"2B -> B".to_string()), "{eqs:?}");
        assert_eq!(record.changes.len(), 2);
        assert_eq!(classify_plk(&after).0, PlkClass::PlRdk);
        assert!(verify_dynamic_equivalence(&ks, &after, &record));
    }

    #[test]
    fn generic_cf_rm_skips_occupied_reactant_multiples() {
        // 2A1 is already a reactant, so A1 -> 2A1 must move to 3A1 -> 4A1.
        let ks = parse_kinetic_system(AUTOCAT).unwrap();
        let (after, record) = cf_rm(&ks, CfRmVariant::Generic).unwrap();
        let eqs: Vec<String> = (0..after.network().num_reactions())
            .map(|i| after.network().reaction_equation(i))
            .collect();
        assert!(eqs.contains(&"3A1 -> 4A1".to_string()), "{eqs:?}");
        assert_eq!(classify_plk(&after).0, PlkClass::PlRdk);
        assert!(verify_dynamic_equivalence(&ks, &after, &record));
    }

    #[test]
    fn plrdk_input_is_identity() {
        let net = parse_network("R1: A -> B\n").unwrap();
        let ks = KineticSystem::mass_action(net);
        let (after, record) = cf_rm(&ks, CfRmVariant::RiPlus).unwrap();
        assert!(record.is_identity());
        assert_eq!(after.network(), ks.network());
        assert!(verify_dynamic_equivalence(&ks, &after, &record));
    }

    #[test]
    fn corrupted_record_fails_verification() {
        let ks = parse_kinetic_system(ABC_PLK).unwrap();
        let (after, mut record) = cf_rm(&ks, CfRmVariant::Plus).unwrap();
        record.changes[0].new_product = Complex::from_terms([(2, 5)]);
        assert!(!verify_dynamic_equivalence(&ks, &after, &record));
    }

    #[test]
    fn ri_plus_preserves_reversible_pairs() {
        // Reversible reaction branching at A with a second, differently
        // ordered branch.
        let text = "R1: A <-> B\nR2: A -> C\nkinetics:\n1 0 0\n0 1 0\n0.5 0 0\n";
        let ks = parse_kinetic_system(text).unwrap();
        assert_eq!(classify_plk(&ks).0, PlkClass::PlNdk);
        let (after, record) = cf_rm(&ks, CfRmVariant::RiPlus).unwrap();
        assert_eq!(classify_plk(&after).0, PlkClass::PlRdk);
        assert!(verify_dynamic_equivalence(&ks, &after, &record));
        let an = after.network();
        assert_eq!(an.reactions()[0].reverse_of, Some(1));
        assert_eq!(an.reactions()[1].reverse_of, Some(0));
        // Pair stays mutually reversed on the transformed complexes.
        let f = &an.reactions()[0];
        let b = &an.reactions()[1];
        assert_eq!(f.reactant, b.product);
        assert_eq!(f.product, b.reactant);
    }

    #[test]
    fn zero_complex_nf_node_is_an_error() {
        let text = "R1: 0 -> A\nR2: 0 -> B\nR3: A -> B\nkinetics:\n0 0\n1 0\n1 0\n";
        let ks = parse_kinetic_system(text).unwrap();
        assert_eq!(classify_plk(&ks).0, PlkClass::PlNdk);
        assert_eq!(
            cf_rm(&ks, CfRmVariant::Generic).unwrap_err(),
            KineticsError::ZeroComplexNfNode
        );
    }

    #[test]
    fn abc_transform_flips_incidence_independence() {
        let ks = parse_kinetic_system(ABC_PLK).unwrap();
        let (after, _) = cf_rm(&ks, CfRmVariant::Plus).unwrap();
        let report = check_transform_invariants(&ks, &after);
        assert!(report.orientation_size_preserved);
        assert!(report.f_independence_agrees);
        assert!(!report.f_incidence_independent_before);
        assert!(report.f_incidence_independent_after);
        assert!(!report.notes.is_empty());
    }
}
