//! Report assembly and rendering. Text and JSON output are generated from
//! the same `AnalysisReport` value; the text form mirrors the layout of
//! the reference program's console output, so its golden runs double as
//! tests here.

use serde::Serialize;

use crate::decomp::{Decomposition, DecompositionTypeSummary};
use crate::kinetics::{PlkClass, TransformInvariantReport, TransformRecord};
use crate::model::Network;
use crate::verdict::Verdict;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct NetworkSummary {
    pub species: Vec<String>,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub l: usize,
    pub sl: usize,
    pub t: usize,
    pub s: usize,
    pub deficiency: i64,
    pub weakly_reversible: bool,
}

impl NetworkSummary {
    pub fn of(net: &Network) -> Self {
        let sn = net.structural_numbers();
        NetworkSummary {
            species: net.species().to_vec(),
            m: sn.m,
            n: sn.n,
            r: sn.r,
            l: sn.l,
            sl: sn.sl,
            t: sn.t,
            s: sn.s,
            deficiency: sn.delta,
            weakly_reversible: sn.weakly_reversible,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PartReport {
    pub index: usize,
    pub reaction_ids: Vec<String>,
    pub equations: Vec<String>,
    pub n: usize,
    pub l: usize,
    pub s: usize,
    pub deficiency: i64,
    pub weakly_reversible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub part_type: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub kind: String,
    pub parts: Vec<PartReport>,
    pub sum_s: usize,
    pub sum_n_minus_l: usize,
    pub whole_s: usize,
    pub whole_n_minus_l: usize,
    pub independent: bool,
    pub incidence_independent: bool,
    pub bi_independent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type_summary: Option<DecompositionTypeSummary>,
    pub notes: Vec<String>,
}

impl DecompositionReport {
    pub fn of(
        net: &Network,
        d: &Decomposition,
        type_summary: Option<DecompositionTypeSummary>,
    ) -> Self {
        let parts: Vec<PartReport> = d
            .parts
            .iter()
            .enumerate()
            .map(|(i, p)| PartReport {
                index: i + 1,
                reaction_ids: p
                    .reactions
                    .iter()
                    .map(|&r| net.reactions()[r].id.clone())
                    .collect(),
                equations: p
                    .reactions
                    .iter()
                    .map(|&r| net.reaction_equation(r))
                    .collect(),
                n: p.numbers.n,
                l: p.numbers.l,
                s: p.numbers.s,
                deficiency: p.numbers.delta,
                weakly_reversible: p.numbers.weakly_reversible,
                part_type: p.part_type.map(|t| t.to_string()),
            })
            .collect();
        let whole = net.subnetwork(&d.decomposed_reactions()).structural_numbers();
        DecompositionReport {
            kind: d.kind.to_string(),
            sum_s: parts.iter().map(|p| p.s).sum(),
            sum_n_minus_l: parts.iter().map(|p| p.n - p.l).sum(),
            whole_s: whole.s,
            whole_n_minus_l: whole.n - whole.l,
            parts,
            independent: d.independent,
            incidence_independent: d.incidence_independent,
            bi_independent: d.bi_independent,
            type_summary,
            notes: d.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChangeReport {
    pub reaction_id: String,
    pub before: String,
    pub after: String,
    pub multiplier: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransformReport {
    pub variant: String,
    pub class_before: String,
    pub class_after: String,
    pub changes: Vec<ChangeReport>,
    pub invariants: TransformInvariantReport,
    pub transformed: String,
    pub notes: Vec<String>,
}

impl TransformReport {
    #[allow(clippy::too_many_arguments)]
    pub fn of(
        variant: &str,
        before_net: &Network,
        after_net: &Network,
        class_before: PlkClass,
        class_after: PlkClass,
        record: &TransformRecord,
        invariants: TransformInvariantReport,
        transformed: String,
    ) -> Self {
        let changes = record
            .changes
            .iter()
            .map(|c| ChangeReport {
                reaction_id: before_net.reactions()[c.reaction].id.clone(),
                before: format!(
                    "{} -> {}",
                    c.old_reactant.render(before_net.species()),
                    c.old_product.render(before_net.species())
                ),
                after: format!(
                    "{} -> {}",
                    c.new_reactant.render(after_net.species()),
                    c.new_product.render(after_net.species())
                ),
                multiplier: c.multiplier,
            })
            .collect();
        TransformReport {
            variant: variant.to_string(),
            class_before: class_before.to_string(),
            class_after: class_after.to_string(),
            changes,
            invariants,
            transformed,
            notes: record.notes.clone(),
        }
    }
}

/// The full report of one CLI invocation.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub command: String,
    pub network: NetworkSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform: Option<TransformReport>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_text(&self, color: bool) -> String {
        let mut out = String::new();
        let net = &self.network;
        out.push_str(&format!(
            "NETWORK: m={} n={} r={} l={} sl={} t={} s={} deficiency={}\n",
            net.m, net.n, net.r, net.l, net.sl, net.t, net.s, net.deficiency
        ));
        out.push_str(&format!(
            "The network is {}weakly reversible.\n",
            if net.weakly_reversible { "" } else { "NOT " }
        ));
        if let Some(d) = &self.decomposition {
            render_decomposition(&mut out, d, color);
        }
        if let Some(t) = &self.transform {
            render_transform(&mut out, t);
        }
        if let Some(v) = &self.verdict {
            render_verdict(&mut out, v);
        }
        out
    }
}

fn paint(line: &str, good: bool, color: bool) -> String {
    if color {
        let code = if good { "32" } else { "31" };
        format!("\x1b[{code}m{line}\x1b[0m")
    } else {
        line.to_string()
    }
}

fn render_decomposition(out: &mut String, d: &DecompositionReport, color: bool) {
    for part in &d.parts {
        out.push_str(&format!("SUBNETWORK {}:\n", part.index));
        for (id, eq) in part.reaction_ids.iter().zip(&part.equations) {
            out.push_str(&format!("{id}: {eq}\n"));
        }
        if let Some(t) = &part.part_type {
            out.push_str(&format!(
                "  n={} l={} s={} deficiency={} type={}\n",
                part.n, part.l, part.s, part.deficiency, t
            ));
        } else {
            out.push_str(&format!(
                "  n={} l={} s={} deficiency={}\n",
                part.n, part.l, part.s, part.deficiency
            ));
        }
    }
    out.push_str(&format!(
        "Summary of the values of s (2ND COL) and n-l (3RD COL) of SUBNETWORK i:\n"
    ));
    for part in &d.parts {
        out.push_str(&format!("  {}  {}  {}\n", part.index, part.s, part.n - part.l));
    }
    out.push_str(&format!(
        "The SUM of the RANKS of the SUBNETWORKS is: {}\n",
        d.sum_s
    ));
    out.push_str(&format!(
        "The SUM of the values of (n-l) of the SUBNETWORKS is: {}\n",
        d.sum_n_minus_l
    ));
    out.push_str(&format!("The rank of the WHOLE NETWORK is: {}\n", d.whole_s));
    out.push_str(&format!(
        "The value of (n-l) for the WHOLE NETWORK is: {}\n",
        d.whole_n_minus_l
    ));
    if d.kind == "F" {
        out.push_str(
            "NOTE: The subnetworks given above correspond to the fundamental classes \
             under the F-decomposition.\n",
        );
    }
    let kind = &d.kind;
    let line1 = format!(
        "CONCLUSION 1: The {kind}-decomposition is {}INDEPENDENT.",
        if d.independent { "" } else { "NOT " }
    );
    let line2 = format!(
        "CONCLUSION 2: The {kind}-decomposition is {}INCIDENCE-INDEPENDENT.",
        if d.incidence_independent { "" } else { "NOT " }
    );
    let line3 = format!(
        "CONCLUSION 3: The {kind}-decomposition is {}BI-INDEPENDENT.",
        if d.bi_independent { "" } else { "NOT " }
    );
    out.push_str(&paint(&line1, d.independent, color));
    out.push('\n');
    out.push_str(&paint(&line2, d.incidence_independent, color));
    out.push('\n');
    out.push_str(&paint(&line3, d.bi_independent, color));
    out.push('\n');
    if let Some(ts) = &d.type_summary {
        out.push_str(&format!(
            "TYPES: w_I={} w_II={} w_III={} overall={:?}\n",
            ts.w_i, ts.w_ii, ts.w_iii, ts.overall
        ));
        if let Some(ok) = ts.delta_le_wii {
            out.push_str(&format!("CHECK (independent => delta <= w_II): {}\n", pass(ok)));
        }
        if let Some(ok) = ts.delta_ge_wii {
            out.push_str(&format!(
                "CHECK (incidence-independent => delta >= w_II): {}\n",
                pass(ok)
            ));
        }
        if let Some(ok) = ts.delta_eq_wii {
            out.push_str(&format!("CHECK (bi-independent => delta = w_II): {}\n", pass(ok)));
        }
    }
    for note in &d.notes {
        out.push_str(&format!("NOTE: {note}\n"));
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn render_transform(out: &mut String, t: &TransformReport) {
    out.push_str(&format!(
        "TRANSFORM {}: {} -> {}\n",
        t.variant, t.class_before, t.class_after
    ));
    if t.changes.is_empty() {
        out.push_str("No reactions modified (input already PL-RDK).\n");
    }
    for c in &t.changes {
        out.push_str(&format!(
            "  {}: {}  =>  {}  (multiplier {})\n",
            c.reaction_id, c.before, c.after, c.multiplier
        ));
    }
    let inv = &t.invariants;
    out.push_str(&format!(
        "|O| before = {}, after = {}: {}\n",
        inv.orientation_size_before,
        inv.orientation_size_after,
        pass(inv.orientation_size_preserved)
    ));
    out.push_str(&format!(
        "Reversibility pattern preserved: {}\n",
        pass(inv.reversibility_preserved)
    ));
    out.push_str(&format!(
        "F-decomposition independent: before={} after={} agreement: {}\n",
        inv.f_independent_before,
        inv.f_independent_after,
        pass(inv.f_independence_agrees)
    ));
    out.push_str(&format!(
        "F-decomposition incidence-independent: before={} after={} (no agreement asserted)\n",
        inv.f_incidence_independent_before, inv.f_incidence_independent_after
    ));
    for note in t.notes.iter().chain(&inv.notes) {
        out.push_str(&format!("NOTE: {note}\n"));
    }
}

fn render_verdict(out: &mut String, v: &Verdict) {
    out.push_str(&format!(
        "VERDICT ({} kinetics): {}\n",
        v.kinetics, v.conclusion
    ));
    for (i, step) in v.justification.iter().enumerate() {
        out.push_str(&format!(
            "  {}. [{}] {}: {}\n",
            i + 1,
            step.theorem,
            step.subject,
            step.detail
        ));
    }
}
