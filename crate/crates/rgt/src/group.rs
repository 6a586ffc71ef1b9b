//! Groups of subjects, their pairwise relationships, and relationship
//! polynomials.
//!
//! A group is a complete graph over its subjects with every pair labelled
//! either [`Relation::Alliance`] or [`Relation::Conflict`]. When the graph
//! has hierarchical structure it is equivalent to a *relationship
//! polynomial*: `+` joins parts that are in mutual conflict, juxtaposition
//! (product) joins parts in mutual alliance, as in `(a+b)c` — subjects `a`
//! and `b` in conflict, both allied with `c`. [`graph_to_polynomial`]
//! recovers the polynomial by repeatedly splitting the graph into
//! connected components; graphs with no such split (those whose conflict
//! subgraph contains an induced 4-vertex path) are reported as not
//! decomposable.

pub mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors raised while building or decomposing groups and parsing
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("polynomial syntax error at position {position}: {message}")]
    PolynomialSyntax { position: usize, message: String },
    #[error("invalid subject id {0:?}")]
    InvalidSubjectId(String),
    #[error("duplicate subject {0}")]
    DuplicateSubject(String),
    #[error("unknown subject {0}")]
    UnknownSubject(String),
    #[error("subject {0} cannot relate to itself")]
    SelfRelation(String),
    #[error("pair {a},{b} labelled more than once")]
    DuplicatePair { a: String, b: String },
    #[error("incomplete graph: pair {a},{b} unlabeled")]
    IncompleteGraph { a: String, b: String },
    #[error("group has no subjects")]
    EmptyGroup,
    #[error("group is not decomposable: no uniform split of {}", .subjects.iter().map(|s| s.id().to_string()).collect::<Vec<_>>().join(","))]
    NotDecomposable { subjects: Vec<Subject> },
}

/// A named participant of a group.
///
/// Ids are ASCII identifiers: a letter followed by letters, digits or
/// underscores. Ids of the compact letter-plus-digits shape (`a`, `x1`)
/// can also appear in polynomial text; word-like ids are declared through
/// the pairwise relation form and print with explicit `*` separators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subject(String);

impl Subject {
    pub fn new(id: impl Into<String>) -> Result<Self, GroupError> {
        let id = id.into();
        let mut chars = id.chars();
        let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
        if head_ok && chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
            Ok(Subject(id))
        } else {
            Err(GroupError::InvalidSubjectId(id))
        }
    }

    pub fn id(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Subject {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Subject::new(s)
    }
}

/// The label of a pair of subjects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Interests combine by meet (intersection).
    Alliance,
    /// Interests combine by join (union).
    Conflict,
}

/// A relationship polynomial in canonical form.
///
/// Canonical means: sums never directly contain sums, products never
/// directly contain products, every composite node has at least two
/// children, children are ordered by their smallest subject, and each
/// subject appears exactly once in the whole tree. The
/// [`sum`](PolynomialExpr::sum) and [`product`](PolynomialExpr::product)
/// constructors flatten, order and collapse singletons so that trees built
/// from valid parts stay canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PolynomialExpr {
    Variable(Subject),
    Sum(Vec<PolynomialExpr>),
    Product(Vec<PolynomialExpr>),
}

impl PolynomialExpr {
    pub fn variable(subject: Subject) -> Self {
        PolynomialExpr::Variable(subject)
    }

    /// A sum of parts in mutual conflict. Nested sums are flattened,
    /// children ordered, and a singleton collapses to its only child.
    pub fn sum(children: Vec<PolynomialExpr>) -> Self {
        Self::compose(children, true)
    }

    /// A product of parts in mutual alliance, normalised like
    /// [`sum`](PolynomialExpr::sum).
    pub fn product(children: Vec<PolynomialExpr>) -> Self {
        Self::compose(children, false)
    }

    fn compose(children: Vec<PolynomialExpr>, is_sum: bool) -> Self {
        assert!(!children.is_empty(), "a polynomial node needs children");
        let mut flat = Vec::with_capacity(children.len());
        for child in children {
            match child {
                PolynomialExpr::Sum(inner) if is_sum => flat.extend(inner),
                PolynomialExpr::Product(inner) if !is_sum => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            return flat.pop().unwrap();
        }
        flat.sort_by(|x, y| x.min_subject().cmp(y.min_subject()));
        if is_sum {
            PolynomialExpr::Sum(flat)
        } else {
            PolynomialExpr::Product(flat)
        }
    }

    fn min_subject(&self) -> &Subject {
        match self {
            PolynomialExpr::Variable(s) => s,
            PolynomialExpr::Sum(cs) | PolynomialExpr::Product(cs) => {
                cs.iter().map(|c| c.min_subject()).min().expect("non-empty node")
            }
        }
    }

    /// All subjects of the polynomial in ascending id order.
    pub fn subjects(&self) -> Vec<Subject> {
        let mut set = BTreeSet::new();
        self.collect_subjects(&mut set);
        set.into_iter().collect()
    }

    fn collect_subjects(&self, into: &mut BTreeSet<Subject>) {
        match self {
            PolynomialExpr::Variable(s) => {
                into.insert(s.clone());
            }
            PolynomialExpr::Sum(cs) | PolynomialExpr::Product(cs) => {
                for c in cs {
                    c.collect_subjects(into);
                }
            }
        }
    }

    fn leaf_count(&self) -> usize {
        match self {
            PolynomialExpr::Variable(_) => 1,
            PolynomialExpr::Sum(cs) | PolynomialExpr::Product(cs) => {
                cs.iter().map(|c| c.leaf_count()).sum()
            }
        }
    }

    fn any_wordlike_id(&self) -> bool {
        fn compact(id: &str) -> bool {
            let mut chars = id.chars();
            chars.next().is_some_and(|c| c.is_ascii_alphabetic())
                && chars.all(|c| c.is_ascii_digit())
        }
        match self {
            PolynomialExpr::Variable(s) => !compact(s.id()),
            PolynomialExpr::Sum(cs) | PolynomialExpr::Product(cs) => {
                cs.iter().any(|c| c.any_wordlike_id())
            }
        }
    }

    fn fmt_node(&self, f: &mut fmt::Formatter<'_>, star: bool, in_product: bool) -> fmt::Result {
        match self {
            PolynomialExpr::Variable(s) => write!(f, "{s}"),
            PolynomialExpr::Sum(cs) => {
                if in_product {
                    f.write_str("(")?;
                }
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    c.fmt_node(f, star, false)?;
                }
                if in_product {
                    f.write_str(")")?;
                }
                Ok(())
            }
            PolynomialExpr::Product(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 && star {
                        f.write_str("*")?;
                    }
                    c.fmt_node(f, star, true)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for PolynomialExpr {
    /// Prints the canonical textual form: `+` between summands,
    /// juxtaposition inside products (or `*` when any id falls outside the
    /// letter-plus-digits form the parser can re-read), parentheses only
    /// around sums inside products.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_node(f, self.any_wordlike_id(), false)
    }
}

impl FromStr for PolynomialExpr {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_polynomial(s)
    }
}

/// A complete graph of subjects with every pair labelled by a
/// [`Relation`].
///
/// Subjects keep their declaration order (reports follow it); equality
/// ignores that order and compares the subject set and the labelling.
#[derive(Debug, Clone, Eq)]
pub struct RelationshipGraph {
    subjects: Vec<Subject>,
    relations: BTreeMap<(Subject, Subject), Relation>,
}

fn pair_key(a: &Subject, b: &Subject) -> (Subject, Subject) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl RelationshipGraph {
    /// Builds a graph, checking that subjects are distinct, edges refer to
    /// declared subjects, no pair is labelled twice, and every pair is
    /// labelled.
    pub fn new(
        subjects: Vec<Subject>,
        edges: impl IntoIterator<Item = (Subject, Subject, Relation)>,
    ) -> Result<Self, GroupError> {
        if subjects.is_empty() {
            return Err(GroupError::EmptyGroup);
        }
        for (i, s) in subjects.iter().enumerate() {
            if subjects[..i].contains(s) {
                return Err(GroupError::DuplicateSubject(s.id().to_string()));
            }
        }
        let mut relations = BTreeMap::new();
        for (a, b, relation) in edges {
            for end in [&a, &b] {
                if !subjects.contains(end) {
                    return Err(GroupError::UnknownSubject(end.id().to_string()));
                }
            }
            if a == b {
                return Err(GroupError::SelfRelation(a.id().to_string()));
            }
            if relations.insert(pair_key(&a, &b), relation).is_some() {
                let (x, y) = pair_key(&a, &b);
                return Err(GroupError::DuplicatePair {
                    a: x.id().to_string(),
                    b: y.id().to_string(),
                });
            }
        }
        for i in 0..subjects.len() {
            for j in i + 1..subjects.len() {
                if !relations.contains_key(&pair_key(&subjects[i], &subjects[j])) {
                    return Err(GroupError::IncompleteGraph {
                        a: subjects[i].id().to_string(),
                        b: subjects[j].id().to_string(),
                    });
                }
            }
        }
        Ok(RelationshipGraph { subjects, relations })
    }

    pub fn subjects(&self) -> &[Subject] {
        &self.subjects
    }

    pub fn len(&self) -> usize {
        self.subjects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subjects.is_empty()
    }

    /// The label of a pair, or `None` for unknown subjects or `a = b`.
    pub fn relation(&self, a: &Subject, b: &Subject) -> Option<Relation> {
        self.relations.get(&pair_key(a, b)).copied()
    }
}

impl PartialEq for RelationshipGraph {
    fn eq(&self, other: &Self) -> bool {
        let mine: BTreeSet<_> = self.subjects.iter().collect();
        let theirs: BTreeSet<_> = other.subjects.iter().collect();
        mine == theirs && self.relations == other.relations
    }
}

/// Recovers the relationship polynomial of a decomposable graph.
///
/// The graph is split into the connected components of its alliance
/// subgraph (a sum: the components are in mutual conflict) or, failing
/// that, of its conflict subgraph (a product), and each component is
/// decomposed recursively. A subgraph that is connected under both labels
/// has no uniform split and makes the whole graph not decomposable.
pub fn graph_to_polynomial(graph: &RelationshipGraph) -> Result<PolynomialExpr, GroupError> {
    let members: Vec<usize> = (0..graph.len()).collect();
    decompose(graph, &members)
}

fn decompose(graph: &RelationshipGraph, members: &[usize]) -> Result<PolynomialExpr, GroupError> {
    if members.len() == 1 {
        return Ok(PolynomialExpr::variable(graph.subjects[members[0]].clone()));
    }
    for keep in [Relation::Alliance, Relation::Conflict] {
        let parts = components(graph, members, keep);
        if parts.len() >= 2 {
            let children = parts
                .iter()
                .map(|part| decompose(graph, part))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(match keep {
                Relation::Alliance => PolynomialExpr::sum(children),
                Relation::Conflict => PolynomialExpr::product(children),
            });
        }
    }
    Err(GroupError::NotDecomposable {
        subjects: members.iter().map(|&i| graph.subjects[i].clone()).collect(),
    })
}

/// Connected components of the subgraph induced by `members`, keeping only
/// edges labelled `keep`. Components and their members are in ascending
/// index order.
fn components(graph: &RelationshipGraph, members: &[usize], keep: Relation) -> Vec<Vec<usize>> {
    let mut unvisited: BTreeSet<usize> = members.iter().copied().collect();
    let mut parts = Vec::new();
    while let Some(&start) = unvisited.iter().next() {
        unvisited.remove(&start);
        let mut part = vec![start];
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            let linked: Vec<usize> = unvisited
                .iter()
                .copied()
                .filter(|&v| {
                    graph.relation(&graph.subjects[u], &graph.subjects[v]) == Some(keep)
                })
                .collect();
            for v in linked {
                unvisited.remove(&v);
                part.push(v);
                queue.push(v);
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

/// Expands a polynomial back into the complete labelled graph it denotes:
/// subjects of distinct summands are in conflict, subjects of distinct
/// product factors in alliance.
pub fn polynomial_to_graph(polynomial: &PolynomialExpr) -> RelationshipGraph {
    debug_assert_eq!(
        polynomial.leaf_count(),
        polynomial.subjects().len(),
        "polynomial must mention each subject exactly once"
    );
    let mut relations = BTreeMap::new();
    mark_pairs(polynomial, &mut relations);
    RelationshipGraph { subjects: polynomial.subjects(), relations }
}

fn mark_pairs(
    polynomial: &PolynomialExpr,
    relations: &mut BTreeMap<(Subject, Subject), Relation>,
) {
    let (children, relation) = match polynomial {
        PolynomialExpr::Variable(_) => return,
        PolynomialExpr::Sum(cs) => (cs, Relation::Conflict),
        PolynomialExpr::Product(cs) => (cs, Relation::Alliance),
    };
    for (i, left) in children.iter().enumerate() {
        for right in &children[i + 1..] {
            for a in left.subjects() {
                for b in right.subjects() {
                    relations.insert(pair_key(&a, &b), relation);
                }
            }
        }
    }
    for child in children {
        mark_pairs(child, relations);
    }
}

/// The nesting structure of a polynomial: one node per subexpression, with
/// the subjects of inner strata appearing once more at every level that
/// contains them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratificationTree {
    polynomial: PolynomialExpr,
    children: Vec<StratificationTree>,
}

impl StratificationTree {
    pub fn polynomial(&self) -> &PolynomialExpr {
        &self.polynomial
    }

    pub fn children(&self) -> &[StratificationTree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

/// Unfolds a polynomial into its [`StratificationTree`]: every composite
/// node gets one child stratum per operand, and single variables are
/// leaves.
pub fn stratify(polynomial: &PolynomialExpr) -> StratificationTree {
    let children = match polynomial {
        PolynomialExpr::Variable(_) => Vec::new(),
        PolynomialExpr::Sum(cs) | PolynomialExpr::Product(cs) => {
            cs.iter().map(stratify).collect()
        }
    };
    StratificationTree { polynomial: polynomial.clone(), children }
}
