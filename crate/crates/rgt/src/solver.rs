//! Decision equations and their solutions.
//!
//! Fixing every influence but one turns the group's folded decision
//! function Φ into an equation `x = Ax + B¬x` for the remaining subject,
//! with `A` and `B` the values of Φ at `x = top` and `x = bottom`. The
//! equation is exact per atom: where `A` and `B` agree the atom is forced,
//! where `A` is set and `B` clear the atom is free, and where `A` is clear
//! but `B` set no value works. The solutions therefore form precisely the
//! interval `[B, A]` when `A ⊇ B` and are empty otherwise —
//! [`verify_fixpoints`] re-derives the same set by brute force.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{interval, Alternative};
use crate::group::{PolynomialExpr, Subject};
use crate::group::stratify;
use crate::pad::BasicEmotion;
use crate::reflexion::{build_diagonal, fold, ReflexionError, SymbolicAlt};

/// Errors raised while solving decision equations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("missing influence for subject {0}")]
    MissingInfluence(Subject),
    #[error("controller and target must differ, both are {0}")]
    ControllerIsTarget(Subject),
    #[error("unknown subject {0}")]
    UnknownSubject(Subject),
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error(transparent)]
    Reflexion(#[from] ReflexionError),
}

/// The decision function rearranged around one subject:
/// `x = Ax + B¬x` with `A` and `B` free of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    subject: Subject,
    a: SymbolicAlt,
    b: SymbolicAlt,
}

impl CanonicalForm {
    /// Assembles a form directly from its coefficients. The coefficients
    /// are trusted to be free of the subject's variable, as
    /// [`canonicalize`] guarantees.
    pub fn new(subject: Subject, a: SymbolicAlt, b: SymbolicAlt) -> Self {
        CanonicalForm { subject, a, b }
    }

    pub fn subject(&self) -> &Subject {
        &self.subject
    }

    /// Coefficient of `x`: the function's value at `x = top`.
    pub fn a(&self) -> &SymbolicAlt {
        &self.a
    }

    /// Coefficient of `¬x`: the function's value at `x = bottom`.
    pub fn b(&self) -> &SymbolicAlt {
        &self.b
    }
}

/// Rearranges a decision function around `subject` by evaluating it at
/// the top and bottom elements, the two cofactors of the expansion
/// `Φ = Ax + B¬x`. A function that does not depend on the subject gets
/// `A = B = Φ`.
pub fn canonicalize(phi: &SymbolicAlt, subject: &Subject) -> CanonicalForm {
    let width = phi.width();
    let fix = |value: Alternative| -> SymbolicAlt {
        let assignment: BTreeMap<Subject, Alternative> =
            [(subject.clone(), value)].into_iter().collect();
        phi.substitute(&assignment).expect("value width matches the function")
    };
    CanonicalForm {
        subject: subject.clone(),
        a: fix(Alternative::top(width)),
        b: fix(Alternative::bottom(width)),
    }
}

/// The solution set of one subject's decision equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecisionResult {
    /// Every alternative between the bounds (inclusive) solves the
    /// equation; `lower ⊆ upper` always holds.
    Interval { lower: Alternative, upper: Alternative },
    /// The equation has no solution.
    NoSolution,
}

impl DecisionResult {
    /// All solutions in ascending encoding order.
    pub fn solutions(&self) -> Vec<Alternative> {
        match self {
            DecisionResult::Interval { lower, upper } => interval(lower, upper),
            DecisionResult::NoSolution => Vec::new(),
        }
    }

    /// The solution when there is exactly one.
    pub fn unique(&self) -> Option<Alternative> {
        match self {
            DecisionResult::Interval { lower, upper } if lower == upper => Some(*lower),
            _ => None,
        }
    }

    pub fn is_no_solution(&self) -> bool {
        matches!(self, DecisionResult::NoSolution)
    }

    /// One report line for a subject: the single solution (named at width
    /// 3), a small interval with its members listed, a large interval
    /// with its size, or `NO SOLUTION`.
    pub fn render(&self, subject: &Subject) -> String {
        match self {
            DecisionResult::NoSolution => format!("{subject}: NO SOLUTION"),
            DecisionResult::Interval { lower, upper } => {
                let members = interval(lower, upper);
                if members.len() == 1 {
                    return format!("{subject}: {}", describe(&members[0]));
                }
                let heading = format!("{subject}: interval [{lower}, {upper}]");
                if lower.width() == 3 && members.len() <= 4 {
                    let names: Vec<String> = members
                        .iter()
                        .map(|m| BasicEmotion::from_code(m).expect("width 3").to_string())
                        .collect();
                    format!("{heading} = {{ {} }}", names.join(", "))
                } else {
                    format!("{heading} ({} states)", members.len())
                }
            }
        }
    }
}

/// An alternative with its emotion name when one exists.
fn describe(value: &Alternative) -> String {
    match BasicEmotion::from_code(value) {
        Ok(emotion) => format!("{value} {emotion}"),
        Err(_) => value.to_string(),
    }
}

fn evaluate_coefficient(
    coefficient: &SymbolicAlt,
    influences: &BTreeMap<Subject, Alternative>,
) -> Result<Alternative, SolverError> {
    coefficient.evaluate(influences).map_err(|e| match e {
        ReflexionError::MissingVariable(s) => SolverError::MissingInfluence(s),
        other => SolverError::Reflexion(other),
    })
}

/// Solves `x = Ax + B¬x` under concrete influences: the solutions are the
/// interval `[B, A]`, empty exactly when `A` does not contain `B`.
pub fn solve(
    form: &CanonicalForm,
    influences: &BTreeMap<Subject, Alternative>,
) -> Result<DecisionResult, SolverError> {
    let a = evaluate_coefficient(&form.a, influences)?;
    let b = evaluate_coefficient(&form.b, influences)?;
    if a.contains(&b).map_err(|_| SolverError::WidthMismatch {
        left: a.width(),
        right: b.width(),
    })? {
        Ok(DecisionResult::Interval { lower: b, upper: a })
    } else {
        Ok(DecisionResult::NoSolution)
    }
}

/// Finds the solutions of one subject's equation by trying every
/// alternative, ignoring any entry for the subject itself. The result is
/// ascending; it always matches [`solve`] on the equation's canonical
/// form.
pub fn verify_fixpoints(
    phi: &SymbolicAlt,
    subject: &Subject,
    influences: &BTreeMap<Subject, Alternative>,
) -> Result<Vec<Alternative>, SolverError> {
    let width = phi.width();
    let mut fixed = Vec::new();
    for candidate in Alternative::all(width) {
        let mut assignment = influences.clone();
        assignment.insert(subject.clone(), candidate);
        let image = phi.evaluate(&assignment).map_err(|e| match e {
            ReflexionError::MissingVariable(s) => SolverError::MissingInfluence(s),
            other => SolverError::Reflexion(other),
        })?;
        if image == candidate {
            fixed.push(candidate);
        }
    }
    Ok(fixed)
}

/// Solves the decision equation of every subject of a polynomial's group
/// under one shared influence map (each subject's own entry is ignored
/// for its equation).
pub fn solve_group(
    polynomial: &PolynomialExpr,
    influences: &BTreeMap<Subject, Alternative>,
    width: usize,
) -> Result<BTreeMap<Subject, DecisionResult>, SolverError> {
    let phi = fold(&build_diagonal(&stratify(polynomial)), width)?;
    let mut results = BTreeMap::new();
    for subject in polynomial.subjects() {
        let form = canonicalize(&phi, &subject);
        let mut known = influences.clone();
        known.remove(&subject);
        let result = solve(&form, &known)?;
        results.insert(subject, result);
    }
    Ok(results)
}

/// Influence values for `controller` that force `target`'s equation to
/// have exactly the desired alternative as its unique solution. Scans all
/// alternatives of the width; ascending order.
pub fn control_search(
    polynomial: &PolynomialExpr,
    controller: &Subject,
    target: &Subject,
    desired: &Alternative,
    influences: &BTreeMap<Subject, Alternative>,
    width: usize,
) -> Result<Vec<Alternative>, SolverError> {
    if controller == target {
        return Err(SolverError::ControllerIsTarget(controller.clone()));
    }
    let subjects = polynomial.subjects();
    for end in [controller, target] {
        if !subjects.contains(end) {
            return Err(SolverError::UnknownSubject(end.clone()));
        }
    }
    if desired.width() != width {
        return Err(SolverError::WidthMismatch { left: width, right: desired.width() });
    }
    let phi = fold(&build_diagonal(&stratify(polynomial)), width)?;
    let form = canonicalize(&phi, target);
    let mut admissible = Vec::new();
    for value in Alternative::all(width) {
        let mut known = influences.clone();
        known.insert(controller.clone(), value);
        known.remove(target);
        if solve(&form, &known)?.unique().as_ref() == Some(desired) {
            admissible.push(value);
        }
    }
    Ok(admissible)
}
