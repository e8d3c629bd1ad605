//! c-capability of direct sums: the epicenter dimension criterion and the
//! structural reduction rules.
//!
//! The engine never computes an epicenter. It checks the dimension criterion
//! on explicitly supplied ideals, and reduces direct-sum expressions with
//! three facts about finite-dimensional Lie algebras: every algebra splits as
//! a non-abelian core plus an abelian summand, the sum with an abelian
//! algebra is c-capable iff the core is, and a sum of non-abelian algebras is
//! c-capable iff every summand is. Verdicts for the non-abelian cores are
//! data (a fact table with provenance notes), not computed claims, and a
//! missing verdict yields `unknown`, never a guess.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{IdealHandle, SCAlgebra};
use crate::error::Error;
use crate::multiplier::multiplier_dim_with_budget;
use crate::DEFAULT_BUDGET;

/// A c-capability verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "capable")]
    Capable,
    #[serde(rename = "not-capable")]
    NotCapable,
    #[serde(rename = "unknown")]
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Capable => "capable",
            Verdict::NotCapable => "not-capable",
            Verdict::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// One leaf of a direct-sum expression: a validated algebra with an optional
/// externally supplied verdict.
#[derive(Clone, Debug)]
pub struct Leaf {
    pub algebra: SCAlgebra,
    pub name: String,
    pub verdict: Option<Verdict>,
}

impl Leaf {
    pub fn new(algebra: SCAlgebra) -> Self {
        let name = algebra.name().to_string();
        Leaf {
            algebra,
            name,
            verdict: None,
        }
    }

    pub fn with_verdict(mut self, verdict: Verdict) -> Self {
        self.verdict = Some(verdict);
        self
    }
}

/// A tree of direct-sum nodes over leaves.
#[derive(Clone, Debug)]
pub enum SumExpression {
    Leaf(Leaf),
    Sum(Box<SumExpression>, Box<SumExpression>),
}

impl SumExpression {
    pub fn leaf(leaf: Leaf) -> Self {
        SumExpression::Leaf(leaf)
    }

    pub fn sum(left: SumExpression, right: SumExpression) -> Self {
        SumExpression::Sum(Box::new(left), Box::new(right))
    }

    /// Leaves in left-to-right order; the reduction result does not depend on
    /// this order.
    pub fn leaves(&self) -> Vec<&Leaf> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<&'a Leaf>) {
        match self {
            SumExpression::Leaf(l) => out.push(l),
            SumExpression::Sum(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }
}

/// A recorded fact about the c-capability of a named algebra.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactEntry {
    pub algebra: String,
    pub c: usize,
    pub verdict: Verdict,
    pub provenance: String,
}

/// The verdict fact table shipped with the catalog, or loaded from JSON.
#[derive(Clone, Debug, Default)]
pub struct FactTable {
    entries: Vec<FactEntry>,
}

const BUILTIN_FACTS: &str = include_str!("../resources/capability_facts.json");

impl FactTable {
    pub fn from_json(text: &str) -> Result<FactTable, Error> {
        let entries: Vec<FactEntry> = serde_json::from_str(text)?;
        Ok(FactTable { entries })
    }

    /// The facts shipped with the crate.
    pub fn builtin() -> FactTable {
        FactTable::from_json(BUILTIN_FACTS).expect("builtin fact table parses")
    }

    pub fn entries(&self) -> &[FactEntry] {
        &self.entries
    }

    pub fn lookup(&self, algebra: &str, c: usize) -> Option<&FactEntry> {
        self.entries
            .iter()
            .find(|e| e.algebra == algebra && e.c == c)
    }
}

/// One applied rule in a capability derivation.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: String,
    pub detail: String,
}

fn step(trace: &mut Vec<TraceStep>, rule: &str, detail: String) {
    trace.push(TraceStep {
        rule: rule.to_string(),
        detail,
    });
}

/// Result of reducing a direct-sum expression.
#[derive(Clone, Debug, Serialize)]
pub struct CapabilityOutcome {
    pub verdict: Verdict,
    pub trace: Vec<TraceStep>,
}

/// Applies the reduction rules to a direct-sum expression for a given `c`.
///
/// Per leaf, the abelian summand is split off and the leaf's capability is
/// transferred to its non-abelian core; core verdicts come from the leaf
/// itself or from the fact table. Cores combine by the both-factors rule;
/// abelian summands are absorbed beside any non-abelian core. A purely
/// abelian expression is `unknown` unless it is a single leaf with a supplied
/// verdict.
pub fn reduce_capability(expr: &SumExpression, c: usize, facts: &FactTable) -> CapabilityOutcome {
    let mut trace = Vec::new();
    let mut core_verdicts: Vec<Verdict> = Vec::new();
    let mut core_names: Vec<String> = Vec::new();
    let mut abelian_total = 0usize;
    let leaves = expr.leaves();

    for leaf in &leaves {
        let (core, a_dim) = leaf.algebra.split_abelian_factor();
        if core.dim() == 0 {
            abelian_total += a_dim;
            continue;
        }
        if a_dim > 0 {
            step(
                &mut trace,
                "split-abelian-factor",
                format!(
                    "{} = T + A({a_dim}) with Z(T) = Z(L) meet L^2; it is c-capable if and only if T is c-capable",
                    leaf.name
                ),
            );
            abelian_total += a_dim;
        }
        let verdict = match leaf.verdict {
            Some(v) => {
                step(
                    &mut trace,
                    "supplied-verdict",
                    format!("{}: {} (externally supplied)", leaf.name, v),
                );
                v
            }
            None => match facts.lookup(&leaf.name, c) {
                Some(entry) => {
                    step(
                        &mut trace,
                        "fact-table",
                        format!(
                            "{} at c={c}: {} ({})",
                            leaf.name, entry.verdict, entry.provenance
                        ),
                    );
                    entry.verdict
                }
                None => {
                    step(
                        &mut trace,
                        "missing-verdict",
                        format!("no recorded c={c} verdict for {}; refusing to guess", leaf.name),
                    );
                    Verdict::Unknown
                }
            },
        };
        core_verdicts.push(verdict);
        core_names.push(leaf.name.clone());
    }

    if core_verdicts.is_empty() {
        // Purely abelian expression.
        if leaves.len() == 1 {
            if let Some(v) = leaves[0].verdict {
                step(
                    &mut trace,
                    "supplied-verdict",
                    format!(
                        "abelian {}: {} (externally supplied verdict for the total abelian algebra)",
                        leaves[0].name, v
                    ),
                );
                return CapabilityOutcome { verdict: v, trace };
            }
        }
        step(
            &mut trace,
            "abelian-unclassified",
            format!(
                "expression is abelian of total dimension {abelian_total}; no structural rule decides it and no external verdict was supplied"
            ),
        );
        return CapabilityOutcome {
            verdict: Verdict::Unknown,
            trace,
        };
    }

    if abelian_total > 0 {
        step(
            &mut trace,
            "absorb-abelian",
            format!(
                "abelian summand A({abelian_total}) absorbed next to the non-abelian part: T + A(n) is c-capable if and only if T is c-capable"
            ),
        );
    }

    if core_verdicts.len() > 1 {
        step(
            &mut trace,
            "direct-sum-of-cores",
            format!(
                "{} combine: a direct sum of non-abelian algebras is c-capable if and only if every summand is",
                core_names.join(" + ")
            ),
        );
    }

    let verdict = if core_verdicts.contains(&Verdict::NotCapable) {
        Verdict::NotCapable
    } else if core_verdicts.contains(&Verdict::Unknown) {
        Verdict::Unknown
    } else {
        if core_verdicts.len() > 1 {
            step(
                &mut trace,
                "epicenter-containment",
                "the epicenter of the sum embeds in the sum of the epicenters, which vanishes"
                    .to_string(),
            );
        }
        Verdict::Capable
    };
    CapabilityOutcome { verdict, trace }
}

/// The two sides of the epicenter dimension criterion for an ideal
/// `M <= Z_c(L)`: `lhs = dim M^(c)(L)` against
/// `rhs = dim M^(c)(L/M) - dim(M meet L^{c+1})`. Equality is the necessary
/// condition used for `M <= Z_c^*(L)`; `consistent` records it, the engine
/// never upgrades it to a capability verdict on its own.
#[derive(Clone, Debug)]
pub struct EpicenterCheck {
    pub algebra: SCAlgebra,
    pub ideal: IdealHandle,
    pub c: usize,
    pub lhs: usize,
    pub rhs: i64,
    pub consistent: bool,
}

/// Evaluates the epicenter dimension criterion with the default budget.
pub fn epicenter_criterion(
    l: &SCAlgebra,
    m: &IdealHandle,
    c: usize,
) -> Result<EpicenterCheck, Error> {
    epicenter_criterion_with_budget(l, m, c, DEFAULT_BUDGET)
}

pub fn epicenter_criterion_with_budget(
    l: &SCAlgebra,
    m: &IdealHandle,
    c: usize,
    budget: usize,
) -> Result<EpicenterCheck, Error> {
    assert!(c >= 1);
    if m.parent() != l {
        return Err(Error::ForeignIdeal);
    }
    let zc = l.c_center(c);
    if !zc.space().contains(m.space()) {
        return Err(Error::NotInCenter { c });
    }
    let lhs = multiplier_dim_with_budget(l, c, budget)?;
    let quotient = l.quotient(m)?;
    let mq = multiplier_dim_with_budget(&quotient, c, budget)?;
    let meet = m
        .space()
        .intersection(&l.lower_central_term(c + 1))
        .expect("same ambient");
    let rhs = mq as i64 - meet.dim() as i64;
    Ok(EpicenterCheck {
        algebra: l.clone(),
        ideal: m.clone(),
        c,
        lhs,
        rhs,
        consistent: lhs as i64 == rhs,
    })
}
