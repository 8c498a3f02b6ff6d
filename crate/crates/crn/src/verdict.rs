//! Structural multistationarity pipeline: fundamental decomposition first,
//! then the Deficiency Zero / Deficiency One Theorems per subnetwork, then
//! composition of the per-subnetwork conclusions across an independent
//! decomposition.

use serde::Serialize;

use crate::decomp::{
    build_decomposition, default_orientation, summarize_types, DecompositionKind, OverallType,
};
use crate::model::Network;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KineticsClass {
    Arbitrary,
    MassAction,
}

impl std::fmt::Display for KineticsClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KineticsClass::Arbitrary => write!(f, "arbitrary"),
            KineticsClass::MassAction => write!(f, "mass-action"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    /// Some deficiency-zero subnetwork of an independent decomposition is
    /// not weakly reversible: no positive equilibrium for any kinetics.
    NoPositiveEquilibrium,
    /// Every subnetwork admits at most one equilibrium per positive
    /// stoichiometric compatibility class, composed across the independent
    /// decomposition.
    NoCapacityForMultistationarity,
    /// The pipeline's hypotheses do not hold; nothing is claimed.
    Inconclusive,
}

impl std::fmt::Display for Conclusion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Conclusion::NoPositiveEquilibrium => write!(f, "no positive equilibrium"),
            Conclusion::NoCapacityForMultistationarity => {
                write!(f, "no capacity for multistationarity")
            }
            Conclusion::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// One cited step of the justification chain.
#[derive(Clone, Debug, Serialize)]
pub struct JustificationStep {
    pub theorem: String,
    pub subject: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub conclusion: Conclusion,
    pub kinetics: KineticsClass,
    pub justification: Vec<JustificationStep>,
}

/// Per-linkage-class deficiency report for the Deficiency One Theorem
/// hypotheses.
#[derive(Clone, Debug, Serialize)]
pub struct DeficiencyOneReport {
    /// (n_theta, s_theta, delta_theta) per linkage class.
    pub per_class: Vec<(usize, usize, i64)>,
    pub delta_sum: i64,
    pub delta: i64,
    pub weakly_reversible: bool,
    /// delta_theta <= 1 everywhere and the per-class deficiencies add up to
    /// delta.
    pub hypotheses_hold: bool,
}

/// Checks the Deficiency One Theorem hypotheses on one (sub)network:
/// delta_theta <= 1 per linkage class and sum of delta_theta equal to
/// delta.
pub fn check_deficiency_one_hypotheses(sub: &Network) -> DeficiencyOneReport {
    let numbers = sub.structural_numbers();
    let labeling = crate::graphs::ComplexGraph::of_network(sub).component_labeling();
    let l = numbers.l;
    let mut per_class = Vec::new();
    for class in 0..l {
        let class_reactions: Vec<usize> = sub
            .reactions()
            .iter()
            .enumerate()
            .filter(|(_, r)| labeling.linkage[r.reactant] == class)
            .map(|(i, _)| i)
            .collect();
        let n_theta = labeling.linkage.iter().filter(|&&c| c == class).count();
        let s_theta = sub
            .stoichiometric_matrix()
            .select_columns(&class_reactions)
            .rank();
        // delta_theta = n_theta - 1 - s_theta: each linkage class is one
        // connected component.
        per_class.push((n_theta, s_theta, n_theta as i64 - 1 - s_theta as i64));
    }
    let delta_sum: i64 = per_class.iter().map(|&(_, _, d)| d).sum();
    let hypotheses_hold =
        per_class.iter().all(|&(_, _, d)| d <= 1) && delta_sum == numbers.delta;
    DeficiencyOneReport {
        per_class,
        delta_sum,
        delta: numbers.delta,
        weakly_reversible: numbers.weakly_reversible,
        hypotheses_hold,
    }
}

/// Runs the three-step pipeline: independence of the F-decomposition,
/// per-subnetwork lower-deficiency theorems, composition across the
/// decomposition.
pub fn analyze_multistationarity(net: &Network, kinetics: KineticsClass) -> Verdict {
    let orientation = default_orientation(net);
    let decomposition = match build_decomposition(net, DecompositionKind::F, &orientation) {
        Ok(d) => d,
        Err(e) => {
            return Verdict {
                conclusion: Conclusion::Inconclusive,
                kinetics,
                justification: vec![JustificationStep {
                    theorem: "Fundamental decomposition".to_string(),
                    subject: "whole network".to_string(),
                    detail: format!("decomposition failed: {e}"),
                }],
            };
        }
    };

    let mut justification = Vec::new();
    if !decomposition.independent {
        justification.push(JustificationStep {
            theorem: "Pipeline step 1".to_string(),
            subject: "F-decomposition".to_string(),
            detail: "not independent; the equilibria-set equality of the FDT is unavailable"
                .to_string(),
        });
        return Verdict {
            conclusion: Conclusion::Inconclusive,
            kinetics,
            justification,
        };
    }
    justification.push(JustificationStep {
        theorem: "Pipeline step 1".to_string(),
        subject: "F-decomposition".to_string(),
        detail: format!(
            "independent with {} subnetwork(s)",
            decomposition.parts.len()
        ),
    });

    let summary = summarize_types(net, &decomposition);
    match summary.overall {
        OverallType::TypeZero => {
            // Every subnetwork has deficiency zero; DZT applies to each.
            let not_wr: Vec<usize> = decomposition
                .parts
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.numbers.weakly_reversible)
                .map(|(i, _)| i + 1)
                .collect();
            if !not_wr.is_empty() {
                for &i in &not_wr {
                    justification.push(JustificationStep {
                        theorem: "Deficiency Zero Theorem (i)".to_string(),
                        subject: format!("subnetwork {i}"),
                        detail: "deficiency 0 and not weakly reversible: no equilibrium \
                                 for arbitrary kinetics"
                            .to_string(),
                    });
                }
                justification.push(JustificationStep {
                    theorem: "Feinberg Decomposition Theorem".to_string(),
                    subject: "F-decomposition".to_string(),
                    detail: "independence makes the network's positive equilibria the \
                             intersection of the subnetworks'; one empty set empties it"
                        .to_string(),
                });
                return Verdict {
                    conclusion: Conclusion::NoPositiveEquilibrium,
                    kinetics,
                    justification,
                };
            }
            if kinetics == KineticsClass::MassAction {
                for (i, _) in decomposition.parts.iter().enumerate() {
                    justification.push(JustificationStep {
                        theorem: "Deficiency Zero Theorem (iii)".to_string(),
                        subject: format!("subnetwork {}", i + 1),
                        detail: "deficiency 0, weakly reversible, mass action: exactly one \
                                 equilibrium per positive stoichiometric compatibility class"
                            .to_string(),
                    });
                }
                justification.push(JustificationStep {
                    theorem: "Feinberg Decomposition Theorem".to_string(),
                    subject: "F-decomposition".to_string(),
                    detail: "Type Zero independent decomposition: the system cannot admit \
                             multiple equilibria"
                        .to_string(),
                });
                return Verdict {
                    conclusion: Conclusion::NoCapacityForMultistationarity,
                    kinetics,
                    justification,
                };
            }
            justification.push(JustificationStep {
                theorem: "Deficiency Zero Theorem (iii)".to_string(),
                subject: "F-decomposition".to_string(),
                detail: "all subnetworks weakly reversible, but uniqueness needs mass \
                         action kinetics"
                    .to_string(),
            });
            Verdict {
                conclusion: Conclusion::Inconclusive,
                kinetics,
                justification,
            }
        }
        OverallType::TypeOne => {
            if kinetics != KineticsClass::MassAction {
                justification.push(JustificationStep {
                    theorem: "Pipeline step 2".to_string(),
                    subject: "F-decomposition".to_string(),
                    detail: "Type One decomposition: the Deficiency One Theorem needs mass \
                             action kinetics"
                        .to_string(),
                });
                return Verdict {
                    conclusion: Conclusion::Inconclusive,
                    kinetics,
                    justification,
                };
            }
            let mut all_unique = true;
            for (i, part) in decomposition.parts.iter().enumerate() {
                let sub = net.subnetwork(&part.reactions);
                if part.numbers.delta == 0 && part.numbers.weakly_reversible {
                    justification.push(JustificationStep {
                        theorem: "Deficiency Zero Theorem (iii)".to_string(),
                        subject: format!("subnetwork {}", i + 1),
                        detail: "deficiency 0, weakly reversible, mass action: exactly one \
                                 equilibrium per positive stoichiometric compatibility class"
                            .to_string(),
                    });
                    continue;
                }
                let report = check_deficiency_one_hypotheses(&sub);
                if report.hypotheses_hold && report.weakly_reversible {
                    justification.push(JustificationStep {
                        theorem: "Deficiency One Theorem".to_string(),
                        subject: format!("subnetwork {}", i + 1),
                        detail: "hypotheses hold and weakly reversible: precisely one \
                                 equilibrium per positive stoichiometric compatibility class"
                            .to_string(),
                    });
                } else {
                    justification.push(JustificationStep {
                        theorem: "Deficiency One Theorem".to_string(),
                        subject: format!("subnetwork {}", i + 1),
                        detail: "hypotheses do not hold; no per-subnetwork uniqueness claim"
                            .to_string(),
                    });
                    all_unique = false;
                }
            }
            if all_unique {
                justification.push(JustificationStep {
                    theorem: "Feinberg Decomposition Theorem (extension)".to_string(),
                    subject: "F-decomposition".to_string(),
                    detail: "composition of per-subnetwork uniqueness across an independent \
                             decomposition; this composition step extends the stated \
                             Type Zero proposition"
                        .to_string(),
                });
                Verdict {
                    conclusion: Conclusion::NoCapacityForMultistationarity,
                    kinetics,
                    justification,
                }
            } else {
                Verdict {
                    conclusion: Conclusion::Inconclusive,
                    kinetics,
                    justification,
                }
            }
        }
    }
}
