//! Line-oriented scenario files describing a group, its relationships
//! (pairwise labels or a ready polynomial) and declared influences.
//!
//! ```text
//! # a four-subject group
//! subjects: a b c d
//! relation alliance: a-b, a-c, b-c
//! relation conflict: a-d, b-d, c-d
//! influence a: Relaxed
//! influence d: ?
//! ```
//!
//! `polynomial: abc+d` replaces the `relation` lines; the two forms are
//! mutually exclusive. `width: N` (default 3) sets the state width;
//! influences may be emotion names (width 3 only), brace codes like
//! `{1,0,0}`, or `?` to stay symbolic.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rgt::{
    graph_to_polynomial, parse_polynomial, Alternative, BasicEmotion, GroupError, PolynomialExpr,
    Relation, RelationshipGraph, Subject, MAX_WIDTH,
};

/// A validated scenario file.
#[derive(Debug, Clone)]
pub struct Scenario {
    subjects: Vec<Subject>,
    shape: Shape,
    influences: BTreeMap<Subject, Option<Alternative>>,
    width: usize,
}

/// How the scenario describes the group.
#[derive(Debug, Clone)]
enum Shape {
    Pairwise(RelationshipGraph),
    Polynomial(PolynomialExpr),
}

/// A scenario that failed to load: either at a specific line or as a whole.
#[derive(Debug)]
pub enum ScenarioError {
    Line { line: usize, message: String },
    Global(String),
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScenarioError::Line { line, message } => write!(f, "line {line}: {message}"),
            ScenarioError::Global(message) => write!(f, "{message}"),
        }
    }
}

impl std::error::Error for ScenarioError {}

impl Scenario {
    /// Loads and validates a scenario file.
    pub fn load(path: &Path) -> Result<Scenario, ScenarioError> {
        let text = fs::read_to_string(path)
            .map_err(|err| ScenarioError::Global(format!("cannot read scenario: {err}")))?;
        Scenario::parse(&text)
    }

    /// Parses scenario text; see the module doc for the grammar.
    pub fn parse(text: &str) -> Result<Scenario, ScenarioError> {
        let mut declared_subjects: Option<Vec<Subject>> = None;
        let mut edges: Vec<(Subject, Subject, Relation)> = Vec::new();
        let mut edges_line = 0usize;
        let mut polynomial: Option<PolynomialExpr> = None;
        let mut width: Option<usize> = None;
        let mut raw_influences: Vec<(usize, Subject, String)> = Vec::new();

        for (number, raw_line) in text.lines().enumerate() {
            let number = number + 1;
            let line = raw_line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| ScenarioError::Line { line: number, message };
            let (head, value) = line
                .split_once(':')
                .ok_or_else(|| err("expected 'key: value'".to_string()))?;
            let value = value.trim();
            let head: Vec<&str> = head.split_whitespace().collect();
            match head.as_slice() {
                ["subjects"] => {
                    if declared_subjects.is_some() {
                        return Err(err("subjects declared twice".to_string()));
                    }
                    let mut subjects = Vec::new();
                    for id in value.split_whitespace() {
                        subjects.push(Subject::new(id).map_err(|e| err(e.to_string()))?);
                    }
                    if subjects.is_empty() {
                        return Err(err("subjects line names no subjects".to_string()));
                    }
                    declared_subjects = Some(subjects);
                }
                ["relation", kind @ ("alliance" | "conflict")] => {
                    if polynomial.is_some() {
                        return Err(err(
                            "relation lines cannot be mixed with a polynomial".to_string(),
                        ));
                    }
                    let relation = if *kind == "alliance" {
                        Relation::Alliance
                    } else {
                        Relation::Conflict
                    };
                    for pair in value.split(',') {
                        let pair = pair.trim();
                        let (a, b) = pair
                            .split_once('-')
                            .ok_or_else(|| err(format!("expected a pair like x-y, got '{pair}'")))?;
                        let a = Subject::new(a.trim()).map_err(|e| err(e.to_string()))?;
                        let b = Subject::new(b.trim()).map_err(|e| err(e.to_string()))?;
                        edges.push((a, b, relation));
                    }
                    edges_line = number;
                }
                ["relation", other] => {
                    return Err(err(format!(
                        "unknown relation kind '{other}': use alliance or conflict"
                    )));
                }
                ["polynomial"] => {
                    if !edges.is_empty() {
                        return Err(err(
                            "a polynomial cannot be mixed with relation lines".to_string(),
                        ));
                    }
                    if polynomial.is_some() {
                        return Err(err("polynomial declared twice".to_string()));
                    }
                    polynomial =
                        Some(parse_polynomial(value).map_err(|e| err(e.to_string()))?);
                }
                ["width"] => {
                    let parsed: usize = value
                        .parse()
                        .map_err(|_| err(format!("invalid width '{value}'")))?;
                    if parsed < 1 || parsed > MAX_WIDTH {
                        return Err(err(format!(
                            "invalid width {parsed}: must be between 1 and {MAX_WIDTH}"
                        )));
                    }
                    width = Some(parsed);
                }
                ["influence", id] => {
                    let subject = Subject::new(*id).map_err(|e| err(e.to_string()))?;
                    if raw_influences.iter().any(|(_, s, _)| s == &subject) {
                        return Err(err(format!("influence for '{subject}' declared twice")));
                    }
                    raw_influences.push((number, subject, value.to_string()));
                }
                _ => {
                    return Err(err(format!("unknown directive '{}'", head.join(" "))));
                }
            }
        }

        let width = width.unwrap_or(3);

        let (subjects, shape) = match polynomial {
            Some(poly) => {
                let subjects = poly.subjects();
                if let Some(declared) = declared_subjects {
                    let mut sorted = declared.clone();
                    sorted.sort();
                    if sorted != subjects {
                        return Err(ScenarioError::Global(
                            "subjects line does not match the polynomial's subjects".to_string(),
                        ));
                    }
                }
                (subjects, Shape::Polynomial(poly))
            }
            None => {
                let subjects = declared_subjects.ok_or_else(|| {
                    ScenarioError::Global("scenario declares no subjects".to_string())
                })?;
                let graph = RelationshipGraph::new(subjects.clone(), edges).map_err(|e| {
                    if edges_line > 0 && !matches!(e, GroupError::IncompleteGraph { .. }) {
                        ScenarioError::Line { line: edges_line, message: e.to_string() }
                    } else {
                        ScenarioError::Global(e.to_string())
                    }
                })?;
                (subjects, Shape::Pairwise(graph))
            }
        };

        let mut influences = BTreeMap::new();
        for (line, subject, raw) in raw_influences {
            if !subjects.contains(&subject) {
                return Err(ScenarioError::Line {
                    line,
                    message: format!("influence for undeclared subject '{subject}'"),
                });
            }
            let state = resolve_state(&raw, width)
                .map_err(|message| ScenarioError::Line { line, message })?;
            influences.insert(subject, state);
        }

        Ok(Scenario { subjects, shape, influences, width })
    }

    pub fn subjects(&self) -> &[Subject] {
        &self.subjects
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// The group's polynomial: parsed directly, or decomposed from the
    /// pairwise relationship graph (which can fail as not decomposable).
    pub fn polynomial(&self) -> Result<PolynomialExpr, GroupError> {
        match &self.shape {
            Shape::Polynomial(poly) => Ok(poly.clone()),
            Shape::Pairwise(graph) => graph_to_polynomial(graph),
        }
    }

    /// Only the concrete influences; subjects declared `?` are absent.
    pub fn concrete_influences(&self) -> BTreeMap<Subject, Alternative> {
        self.influences
            .iter()
            .filter_map(|(s, v)| v.map(|alt| (s.clone(), alt)))
            .collect()
    }
}

/// Resolves an influence or state word: `?` means symbolic (None), a brace
/// code must match the scenario width, and an emotion name requires width 3.
pub fn resolve_state(raw: &str, width: usize) -> Result<Option<Alternative>, String> {
    let raw = raw.trim();
    if raw == "?" {
        return Ok(None);
    }
    if raw.starts_with('{') {
        let state = Alternative::from_str(raw).map_err(|e| e.to_string())?;
        if state.width() != width {
            return Err(format!(
                "state {state} has width {} but the scenario width is {width}",
                state.width()
            ));
        }
        return Ok(Some(state));
    }
    if width != 3 {
        return Err(format!(
            "emotion names need width 3 (scenario width is {width}); use a brace code"
        ));
    }
    let emotion = BasicEmotion::from_str(raw)
        .map_err(|_| format!("unknown emotion name '{raw}'"))?;
    Ok(Some(emotion.code()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subject(id: &str) -> Subject {
        Subject::new(id).unwrap()
    }

    fn alt(text: &str) -> Alternative {
        text.parse().unwrap()
    }

    const ADVISORS: &str = "\
# four subjects, three allied advisors against a director
subjects: a b c d
relation alliance: a-b, a-c, b-c
relation conflict: a-d, b-d, c-d
influence a: Relaxed
influence b: Docile
influence c: Anxious
influence d: ?
";

    #[test]
    fn pairwise_scenario_loads_and_decomposes() {
        let scenario = Scenario::parse(ADVISORS).unwrap();
        assert_eq!(scenario.subjects().len(), 4);
        assert_eq!(scenario.width(), 3);
        assert_eq!(scenario.polynomial().unwrap().to_string(), "abc+d");
        let concrete = scenario.concrete_influences();
        assert_eq!(concrete.len(), 3);
        assert_eq!(concrete[&subject("a")], alt("{1,0,1}"));
        assert!(!concrete.contains_key(&subject("d")));
    }

    #[test]
    fn polynomial_scenario_needs_no_subject_list() {
        let scenario = Scenario::parse("polynomial: (a+b)c\ninfluence a: Hostile\n").unwrap();
        assert_eq!(scenario.subjects().len(), 3);
        assert_eq!(scenario.polynomial().unwrap().to_string(), "(a+b)c");
    }

    #[test]
    fn subject_list_must_match_the_polynomial() {
        let err = Scenario::parse("subjects: a b\npolynomial: (a+b)c\n").unwrap_err();
        assert_eq!(
            err.to_string(),
            "subjects line does not match the polynomial's subjects"
        );
    }

    #[test]
    fn missing_pair_is_reported_in_the_graphs_words() {
        let text = "subjects: a b c\nrelation alliance: a-b, a-c\n";
        let err = Scenario::parse(text).unwrap_err();
        assert_eq!(err.to_string(), "incomplete graph: pair b,c unlabeled");
    }

    #[test]
    fn unknown_emotion_names_point_at_their_line() {
        let text = "subjects: a b\nrelation conflict: a-b\ninfluence a: Rad\n";
        let err = Scenario::parse(text).unwrap_err();
        assert_eq!(err.to_string(), "line 3: unknown emotion name 'Rad'");
    }

    #[test]
    fn widths_other_than_three_reject_emotion_names() {
        let text = "width: 2\nsubjects: a b\nrelation conflict: a-b\ninfluence a: Bored\n";
        let err = Scenario::parse(text).unwrap_err();
        assert!(err.to_string().contains("emotion names need width 3"));
        let ok = "width: 2\nsubjects: a b\nrelation conflict: a-b\ninfluence a: {1,0}\n";
        let scenario = Scenario::parse(ok).unwrap();
        assert_eq!(scenario.concrete_influences()[&subject("a")], alt("{1,0}"));
    }

    #[test]
    fn influence_width_mismatches_are_rejected() {
        let text = "subjects: a b\nrelation conflict: a-b\ninfluence a: {1,0}\n";
        let err = Scenario::parse(text).unwrap_err();
        assert!(err.to_string().contains("width 2"));
    }

    #[test]
    fn mixing_relations_and_polynomial_is_rejected() {
        let text = "subjects: a b c\nrelation alliance: a-b\npolynomial: (a+b)c\n";
        let err = Scenario::parse(text).unwrap_err();
        assert_eq!(
            err.to_string(),
            "line 3: a polynomial cannot be mixed with relation lines"
        );
    }

    #[test]
    fn single_subject_scenarios_are_complete() {
        let scenario = Scenario::parse("subjects: a\ninfluence a: Bored\n").unwrap();
        assert_eq!(scenario.polynomial().unwrap().to_string(), "a");
    }

    #[test]
    fn comments_blanks_and_spacing_are_tolerated() {
        let text = "\n# comment\n  subjects:  a   b \n relation conflict:  a - b \n";
        let scenario = Scenario::parse(text).unwrap();
        assert_eq!(scenario.polynomial().unwrap().to_string(), "a+b");
    }

    #[test]
    fn malformed_lines_report_their_number() {
        let err = Scenario::parse("subjects: a\nnonsense\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: expected 'key: value'");
        let err = Scenario::parse("subjects: a b\nrelation conflict: ab\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: expected a pair like x-y, got 'ab'");
        let err = Scenario::parse("width: zero\n").unwrap_err();
        assert_eq!(err.to_string(), "line 1: invalid width 'zero'");
        let err = Scenario::parse("relation friendship: a-b\n").unwrap_err();
        assert_eq!(
            err.to_string(),
            "line 1: unknown relation kind 'friendship': use alliance or conflict"
        );
    }

    #[test]
    fn duplicate_declarations_are_rejected() {
        let err = Scenario::parse("subjects: a\nsubjects: b\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: subjects declared twice");
        let text = "subjects: a b\nrelation conflict: a-b\ninfluence a: Bored\ninfluence a: Bored\n";
        let err = Scenario::parse(text).unwrap_err();
        assert_eq!(err.to_string(), "line 4: influence for 'a' declared twice");
    }

    #[test]
    fn influences_must_name_declared_subjects() {
        let text = "subjects: a b\nrelation conflict: a-b\ninfluence z: Bored\n";
        let err = Scenario::parse(text).unwrap_err();
        assert_eq!(err.to_string(), "line 3: influence for undeclared subject 'z'");
    }
}
