//! A symbolic decision engine for groups of interacting subjects.
//!
//! Subjects hold emotional states coded as fixed-width bit vectors over
//! the pleasure/arousal/dominance dimensions ([`pad`]), which form a
//! Boolean lattice of *alternatives* ([`algebra`]). A group is a complete
//! graph of pairwise alliances and conflicts; when the graph decomposes
//! it is equivalent to a relationship polynomial ([`group`]). Raising the
//! polynomial to its own stratification and folding the resulting tower
//! yields the group's decision function ([`reflexion`]), and fixing all
//! influences but one turns that function into a decision equation whose
//! solutions — an interval of the lattice, or nothing — the [`solver`]
//! reports, verifies by brute force, and inverts to find steering
//! influences.
//!
//! The workflow end to end:
//!
//! ```
//! use rgt::{graph_to_polynomial, solve_group, Alternative, RelationshipGraph,
//!           Relation, Subject};
//!
//! let subjects: Vec<Subject> =
//!     ["a", "b", "c"].iter().map(|s| Subject::new(*s).unwrap()).collect();
//! let edges = [
//!     (subjects[0].clone(), subjects[1].clone(), Relation::Conflict),
//!     (subjects[0].clone(), subjects[2].clone(), Relation::Alliance),
//!     (subjects[1].clone(), subjects[2].clone(), Relation::Alliance),
//! ];
//! let graph = RelationshipGraph::new(subjects.clone(), edges).unwrap();
//! let polynomial = graph_to_polynomial(&graph).unwrap();
//! assert_eq!(polynomial.to_string(), "(a+b)c");
//!
//! let influences = [
//!     (subjects[0].clone(), "{1,1,0}".parse::<Alternative>().unwrap()),
//!     (subjects[1].clone(), "{1,0,1}".parse::<Alternative>().unwrap()),
//!     (subjects[2].clone(), "{0,1,0}".parse::<Alternative>().unwrap()),
//! ]
//! .into_iter()
//! .collect();
//! let results = solve_group(&polynomial, &influences, 3).unwrap();
//! assert_eq!(results[&subjects[2]].unique(), Some(Alternative::top(3)));
//! ```

pub mod algebra;
pub mod group;
pub mod pad;
pub mod reflexion;
pub mod solver;

pub use algebra::{interval, Alternative, AlgebraError, Atom, MAX_WIDTH};
pub use group::{
    graph_to_polynomial, parse::parse_polynomial, polynomial_to_graph, stratify, GroupError,
    PolynomialExpr, Relation, RelationshipGraph, StratificationTree, Subject,
};
pub use pad::{basis_decompose, BasicEmotion, PadError, PadTriple, ALL_EMOTIONS, BASIS};
pub use reflexion::{
    annotate_images, build_diagonal, fold, fold_exponent, DiagonalForm, ImageNode,
    ReflexionError, SymbolicAlt, MAX_VARS,
};
pub use solver::{
    canonicalize, control_search, solve, solve_group, verify_fixpoints, CanonicalForm,
    DecisionResult, SolverError,
};
