//! The theorem registry, instance sweeps, relation searches, and verdict
//! reporting.

pub mod instance;
pub mod registry;
pub mod search;
pub mod suite;

pub use instance::Instance;
pub use registry::{BodyOutcome, Requirement, TheoremDef, KNOWN_GAPS, REGISTRY};
pub use search::{exhaustive_relation_search, random_relation_sample};
pub use suite::{run_suite, SuiteConfig, SuiteReport};

use thiserror::Error;

use crate::sets::{SetError, Subset, Witness};

#[derive(Debug, Error)]
pub enum CheckerError {
    #[error("unknown theorem id `{id}`; valid ids: {valid}")]
    UnknownTheorem { id: String, valid: String },
    #[error("witness does not bind variable `{0}`")]
    UnboundVariable(String),
    #[error("witness minimization requires a FAIL verdict")]
    NotFail,
    #[error("empty configuration: {0}")]
    EmptyConfig(String),
    #[error(transparent)]
    Size(#[from] SetError),
}

fn unknown_theorem(id: &str) -> CheckerError {
    CheckerError::UnknownTheorem {
        id: id.to_string(),
        valid: registry::all_ids().join(", "),
    }
}

/// Resolved outcome of one theorem on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Witness),
    Vacuous,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail(_) => "FAIL",
            Outcome::Vacuous => "VACUOUS",
        }
    }
}

#[derive(Debug, Clone)]
pub struct TheoremVerdict {
    pub theorem: &'static str,
    pub instance: String,
    pub outcome: Outcome,
}

/// Runs one theorem on one instance, quantifying the declared variables over
/// all subsets (leftmost variable outermost, masks ascending). FAIL reports
/// the first violating assignment.
pub fn run_theorem(id: &str, inst: &Instance) -> Result<TheoremVerdict, CheckerError> {
    let def = registry::lookup(id).ok_or_else(|| unknown_theorem(id))?;
    Ok(TheoremVerdict {
        theorem: def.id,
        instance: inst.id().to_string(),
        outcome: evaluate(def, inst),
    })
}

fn evaluate(def: &TheoremDef, inst: &Instance) -> Outcome {
    if !def.requirement.met(inst) {
        return Outcome::Vacuous;
    }
    let sc = inst.universe().subset_count() as u64;
    let k = def.vars.len();
    let total = sc.pow(k as u32);
    let mut assignment = vec![Subset(0); k];
    let mut any_holds = false;
    for idx in 0..total {
        let mut rest = idx;
        for j in (0..k).rev() {
            assignment[j] = Subset((rest % sc) as u32);
            rest /= sc;
        }
        match (def.body)(inst, &assignment) {
            BodyOutcome::Vacuous => {}
            BodyOutcome::Holds => any_holds = true,
            BodyOutcome::Violated(extras) => {
                return Outcome::Fail(compose_witness(def, &assignment, extras));
            }
        }
    }
    if any_holds {
        Outcome::Pass
    } else {
        Outcome::Vacuous
    }
}

fn compose_witness(def: &TheoremDef, assignment: &[Subset], extras: Witness) -> Witness {
    let mut w = Witness::new();
    for (name, s) in def.vars.iter().zip(assignment) {
        w = w.set(name, *s);
    }
    w.items.extend(extras.items);
    w
}

fn extract_assignment(def: &TheoremDef, witness: &Witness) -> Result<Vec<Subset>, CheckerError> {
    def.vars
        .iter()
        .map(|v| {
            witness
                .get_set(v)
                .ok_or_else(|| CheckerError::UnboundVariable(v.to_string()))
        })
        .collect()
}

/// Re-evaluates the theorem body on the witness's variable bindings; true iff
/// the violation reproduces.
pub fn recheck_witness(
    id: &str,
    inst: &Instance,
    witness: &Witness,
) -> Result<bool, CheckerError> {
    let def = registry::lookup(id).ok_or_else(|| unknown_theorem(id))?;
    let assignment = extract_assignment(def, witness)?;
    Ok(matches!(
        (def.body)(inst, &assignment),
        BodyOutcome::Violated(_)
    ))
}

/// Greedy witness shrinking: try removing each element from each bound set,
/// ascending label order, keeping removals under which the violation
/// persists.
pub fn minimize_witness(
    v: &TheoremVerdict,
    inst: &Instance,
) -> Result<TheoremVerdict, CheckerError> {
    let def = registry::lookup(v.theorem).ok_or_else(|| unknown_theorem(v.theorem))?;
    let Outcome::Fail(witness) = &v.outcome else {
        return Err(CheckerError::NotFail);
    };
    let mut assignment = extract_assignment(def, witness)?;
    let n = inst.universe().n();
    for j in 0..assignment.len() {
        for i in 0..n {
            if !assignment[j].contains_point(i) {
                continue;
            }
            let mut trial = assignment.clone();
            trial[j] = Subset(trial[j].mask() & !(1 << i));
            if matches!((def.body)(inst, &trial), BodyOutcome::Violated(_)) {
                assignment = trial;
            }
        }
    }
    let BodyOutcome::Violated(extras) = (def.body)(inst, &assignment) else {
        unreachable!("every kept shrink preserved the violation");
    };
    Ok(TheoremVerdict {
        theorem: v.theorem,
        instance: v.instance.clone(),
        outcome: Outcome::Fail(compose_witness(def, &assignment, extras)),
    })
}
