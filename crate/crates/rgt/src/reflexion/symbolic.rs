//! Alternative-valued functions of subject variables.
//!
//! A [`SymbolicAlt`] maps assignments of alternatives to its variables to
//! an alternative, one truth table per atom. Because join, meet and
//! complement all act componentwise, atom `i` of the result can only
//! depend on atom `i` of the inputs, so a table over single bits per
//! variable is exact — no cross-atom terms can arise. Functions are kept
//! in a canonical form (variables sorted, tables restricted to variables
//! that actually matter), which makes structural equality coincide with
//! semantic equality.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::Alternative;
use crate::group::PolynomialExpr;
use crate::group::Subject;

use super::ReflexionError;

/// Most variables a symbolic function may depend on; keeps the `2^n`
/// tables at desk scale.
pub const MAX_VARS: usize = 16;

/// How many variables the sum-of-products printer will expand.
const MAX_RENDER_VARS: usize = 8;

/// An alternative-valued function of finitely many subject variables,
/// stored as one truth table per atom.
///
/// The zero-variable case is a plain constant; [`as_constant`]
/// (SymbolicAlt::as_constant) recovers it. Equality is semantic: two
/// functions compare equal exactly when they agree on every assignment.
///
/// [`as_constant`]: SymbolicAlt::as_constant
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicAlt {
    width: usize,
    /// Sorted ascending; only variables the function depends on.
    variables: Vec<Subject>,
    /// `tables[atom][index]` with variable 0 in the most significant
    /// position of `index`.
    tables: Vec<Vec<bool>>,
}

impl SymbolicAlt {
    /// The constant function with the given value.
    pub fn constant(value: Alternative) -> Self {
        let width = value.width();
        SymbolicAlt {
            width,
            variables: Vec::new(),
            tables: (0..width).map(|atom| vec![value.bit(atom)]).collect(),
        }
    }

    pub fn bottom(width: usize) -> Self {
        Self::constant(Alternative::bottom(width))
    }

    pub fn top(width: usize) -> Self {
        Self::constant(Alternative::top(width))
    }

    /// The projection onto one subject's variable.
    pub fn variable(subject: Subject, width: usize) -> Self {
        // Trigger the width range check.
        let _ = Alternative::bottom(width);
        SymbolicAlt {
            width,
            variables: vec![subject],
            tables: (0..width).map(|_| vec![false, true]).collect(),
        }
    }

    /// Interprets a relationship polynomial: `+` as join, product as meet.
    pub fn from_polynomial(
        polynomial: &PolynomialExpr,
        width: usize,
    ) -> Result<Self, ReflexionError> {
        let count = polynomial.subjects().len();
        if count > MAX_VARS {
            return Err(ReflexionError::TooManyVariables { count });
        }
        Self::interpret(polynomial, width)
    }

    fn interpret(polynomial: &PolynomialExpr, width: usize) -> Result<Self, ReflexionError> {
        let (children, is_sum) = match polynomial {
            PolynomialExpr::Variable(s) => return Ok(Self::variable(s.clone(), width)),
            PolynomialExpr::Sum(cs) => (cs, true),
            PolynomialExpr::Product(cs) => (cs, false),
        };
        let mut acc = Self::interpret(&children[0], width)?;
        for child in &children[1..] {
            let rhs = Self::interpret(child, width)?;
            acc = if is_sum { acc.join(&rhs)? } else { acc.meet(&rhs)? };
        }
        Ok(acc)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// The variables the function actually depends on, ascending.
    pub fn variables(&self) -> &[Subject] {
        &self.variables
    }

    pub fn is_constant(&self) -> bool {
        self.variables.is_empty()
    }

    /// The value of a zero-variable function.
    pub fn as_constant(&self) -> Option<Alternative> {
        if self.variables.is_empty() {
            let bits: Vec<bool> = self.tables.iter().map(|t| t[0]).collect();
            Some(Alternative::from_bits(&bits))
        } else {
            None
        }
    }

    /// Componentwise negation. Preserves the variable set: a function and
    /// its complement depend on exactly the same variables.
    pub fn complement(&self) -> Self {
        SymbolicAlt {
            width: self.width,
            variables: self.variables.clone(),
            tables: self
                .tables
                .iter()
                .map(|t| t.iter().map(|&b| !b).collect())
                .collect(),
        }
    }

    /// Pointwise join of two functions over the union of their variables.
    pub fn join(&self, other: &Self) -> Result<Self, ReflexionError> {
        self.zip_with(other, |a, b| a || b)
    }

    /// Pointwise meet of two functions over the union of their variables.
    pub fn meet(&self, other: &Self) -> Result<Self, ReflexionError> {
        self.zip_with(other, |a, b| a && b)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Result<Self, ReflexionError> {
        if self.width != other.width {
            return Err(ReflexionError::WidthMismatch {
                left: self.width,
                right: other.width,
            });
        }
        let variables: Vec<Subject> = self
            .variables
            .iter()
            .chain(other.variables.iter())
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if variables.len() > MAX_VARS {
            return Err(ReflexionError::TooManyVariables { count: variables.len() });
        }
        let tables = (0..self.width)
            .map(|atom| {
                let left = expand(&self.tables[atom], &self.variables, &variables);
                let right = expand(&other.tables[atom], &other.variables, &variables);
                left.into_iter().zip(right).map(|(a, b)| op(a, b)).collect()
            })
            .collect();
        Ok(SymbolicAlt { width: self.width, variables, tables }.pruned())
    }

    /// Drops variables no atom's table depends on, re-indexing the tables.
    fn pruned(self) -> Self {
        let n = self.variables.len();
        if n == 0 {
            return self;
        }
        let essential: Vec<usize> = (0..n)
            .filter(|&j| {
                let stride = 1usize << (n - 1 - j);
                self.tables.iter().any(|t| {
                    (0..t.len()).any(|i| i & stride == 0 && t[i] != t[i | stride])
                })
            })
            .collect();
        if essential.len() == n {
            return self;
        }
        let m = essential.len();
        let variables: Vec<Subject> =
            essential.iter().map(|&j| self.variables[j].clone()).collect();
        let tables = self
            .tables
            .iter()
            .map(|t| {
                (0..1usize << m)
                    .map(|packed| {
                        let mut index = 0usize;
                        for (slot, &j) in essential.iter().enumerate() {
                            index |= ((packed >> (m - 1 - slot)) & 1) << (n - 1 - j);
                        }
                        t[index]
                    })
                    .collect()
            })
            .collect();
        SymbolicAlt { width: self.width, variables, tables }
    }

    /// Applies the function to a complete assignment. Entries for
    /// subjects the function does not depend on are ignored.
    pub fn evaluate(
        &self,
        assignment: &BTreeMap<Subject, Alternative>,
    ) -> Result<Alternative, ReflexionError> {
        let mut values = Vec::with_capacity(self.variables.len());
        for variable in &self.variables {
            let value = assignment
                .get(variable)
                .ok_or_else(|| ReflexionError::MissingVariable(variable.clone()))?;
            if value.width() != self.width {
                return Err(ReflexionError::WidthMismatch {
                    left: self.width,
                    right: value.width(),
                });
            }
            values.push(*value);
        }
        let mut bits = Vec::with_capacity(self.width);
        for atom in 0..self.width {
            let mut index = 0usize;
            for value in &values {
                index = (index << 1) | usize::from(value.bit(atom));
            }
            bits.push(self.tables[atom][index]);
        }
        Ok(Alternative::from_bits(&bits))
    }

    /// Fixes some variables to concrete values, leaving the rest
    /// symbolic. Entries for variables the function does not depend on
    /// are ignored, so one influence map can serve a whole group.
    pub fn substitute(
        &self,
        partial: &BTreeMap<Subject, Alternative>,
    ) -> Result<Self, ReflexionError> {
        let n = self.variables.len();
        let mut fixed: Vec<(usize, Alternative)> = Vec::new();
        for (j, variable) in self.variables.iter().enumerate() {
            if let Some(value) = partial.get(variable) {
                if value.width() != self.width {
                    return Err(ReflexionError::WidthMismatch {
                        left: self.width,
                        right: value.width(),
                    });
                }
                fixed.push((j, *value));
            }
        }
        if fixed.is_empty() {
            return Ok(self.clone());
        }
        let kept: Vec<usize> =
            (0..n).filter(|j| fixed.iter().all(|(f, _)| f != j)).collect();
        let m = kept.len();
        let variables: Vec<Subject> = kept.iter().map(|&j| self.variables[j].clone()).collect();
        let tables = (0..self.width)
            .map(|atom| {
                (0..1usize << m)
                    .map(|packed| {
                        let mut index = 0usize;
                        for (slot, &j) in kept.iter().enumerate() {
                            index |= ((packed >> (m - 1 - slot)) & 1) << (n - 1 - j);
                        }
                        for &(j, value) in &fixed {
                            index |= usize::from(value.bit(atom)) << (n - 1 - j);
                        }
                        self.tables[atom][index]
                    })
                    .collect()
            })
            .collect();
        Ok(SymbolicAlt { width: self.width, variables, tables }.pruned())
    }

    /// Sum-of-products rendering: all prime implicants per atom, merged
    /// across atoms into coefficient alternatives, each coefficient
    /// raised as far as the tables allow. Constants print as their brace
    /// code, and a top coefficient is omitted, so a plain projection
    /// prints as its variable name.
    pub fn render(&self) -> String {
        if let Some(value) = self.as_constant() {
            return value.to_string();
        }
        let n = self.variables.len();
        if n > MAX_RENDER_VARS {
            return format!("<function of {n} subjects>");
        }
        // Monomials as sorted (variable, negated) lists; coefficient bit
        // `atom` set when the monomial's cube lies inside that atom's table.
        let mut terms: BTreeMap<Vec<(usize, bool)>, u16> = BTreeMap::new();
        for table in &self.tables {
            for (mask, values) in prime_implicants(table, n) {
                let monomial: Vec<(usize, bool)> = (0..n)
                    .filter(|j| mask >> j & 1 == 1)
                    .map(|j| (j, values >> j & 1 == 0))
                    .collect();
                terms.entry(monomial).or_insert(0);
            }
        }
        for (monomial, coefficient) in &mut terms {
            for (atom, table) in self.tables.iter().enumerate() {
                if cube_inside(monomial, table, n) {
                    *coefficient |= 1 << atom;
                }
            }
        }
        let star = self
            .variables
            .iter()
            .any(|v| v.id().len() > 1 && !v.id().chars().skip(1).all(|c| c.is_ascii_digit()));
        let top = ((1u32 << self.width) - 1) as u16;
        let rendered: Vec<String> = terms
            .iter()
            .map(|(monomial, &coefficient)| {
                let mut factors: Vec<String> = Vec::new();
                if monomial.is_empty() || coefficient != top {
                    let bits: Vec<bool> =
                        (0..self.width).map(|atom| coefficient >> atom & 1 == 1).collect();
                    factors.push(Alternative::from_bits(&bits).to_string());
                }
                for &(j, negated) in monomial {
                    let id = self.variables[j].id();
                    factors.push(if negated { format!("¬{id}") } else { id.to_string() });
                }
                factors.join(if star { "*" } else { "" })
            })
            .collect();
        rendered.join(" + ")
    }
}

/// Expands a table over `own` variables to one over the superset
/// `target`, both sorted.
fn expand(table: &[bool], own: &[Subject], target: &[Subject]) -> Vec<bool> {
    let m = target.len();
    let positions: Vec<usize> = own
        .iter()
        .map(|v| target.binary_search(v).expect("own variables are in the target set"))
        .collect();
    (0..1usize << m)
        .map(|index| {
            let mut own_index = 0usize;
            for &p in &positions {
                own_index = (own_index << 1) | ((index >> (m - 1 - p)) & 1);
            }
            table[own_index]
        })
        .collect()
}

/// All prime implicants of a truth table by iterated pair merging.
/// Implicants are `(mask, values)` with bit `j` describing variable `j`;
/// a zero mask bit means the variable is free in the cube.
fn prime_implicants(table: &[bool], n: usize) -> BTreeSet<(u32, u32)> {
    let full = ((1u64 << n) - 1) as u32;
    let to_values = |index: usize| -> u32 {
        let mut values = 0u32;
        for j in 0..n {
            values |= (((index >> (n - 1 - j)) & 1) as u32) << j;
        }
        values
    };
    let mut current: BTreeSet<(u32, u32)> = table
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(index, _)| (full, to_values(index)))
        .collect();
    let mut primes = BTreeSet::new();
    while !current.is_empty() {
        let items: Vec<(u32, u32)> = current.iter().copied().collect();
        let mut merged = vec![false; items.len()];
        let mut next = BTreeSet::new();
        for i in 0..items.len() {
            for k in i + 1..items.len() {
                let (mask_a, values_a) = items[i];
                let (mask_b, values_b) = items[k];
                if mask_a != mask_b {
                    continue;
                }
                let diff = values_a ^ values_b;
                if diff.count_ones() == 1 {
                    next.insert((mask_a & !diff, values_a & !diff));
                    merged[i] = true;
                    merged[k] = true;
                }
            }
        }
        for (k, item) in items.into_iter().enumerate() {
            if !merged[k] {
                primes.insert(item);
            }
        }
        current = next;
    }
    primes
}

/// Whether every assignment in the monomial's cube satisfies the table.
fn cube_inside(monomial: &[(usize, bool)], table: &[bool], n: usize) -> bool {
    (0..1usize << n).all(|index| {
        let in_cube = monomial.iter().all(|&(j, negated)| {
            let bit = (index >> (n - 1 - j)) & 1 == 1;
            bit != negated
        });
        !in_cube || table[index]
    })
}

impl fmt::Display for SymbolicAlt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alt(s: &str) -> Alternative {
        s.parse().unwrap()
    }

    fn subject(id: &str) -> Subject {
        Subject::new(id).unwrap()
    }

    fn var(id: &str) -> SymbolicAlt {
        SymbolicAlt::variable(subject(id), 3)
    }

    fn poly(text: &str) -> PolynomialExpr {
        text.parse().unwrap()
    }

    fn assign(pairs: &[(&str, &str)]) -> BTreeMap<Subject, Alternative> {
        pairs.iter().map(|&(s, v)| (subject(s), alt(v))).collect()
    }

    /// `(a+b)c + ¬c`, the folded decision function of two rivals with a
    /// shared ally — the workhorse example below.
    fn rivals_fn() -> SymbolicAlt {
        SymbolicAlt::from_polynomial(&poly("(a+b)c"), 3)
            .unwrap()
            .join(&var("c").complement())
            .unwrap()
    }

    #[test]
    fn constants_and_projections() {
        let c = SymbolicAlt::constant(alt("{1,0,1}"));
        assert!(c.is_constant());
        assert_eq!(c.as_constant(), Some(alt("{1,0,1}")));
        assert_eq!(c.variables().len(), 0);
        assert_eq!(c.evaluate(&assign(&[])).unwrap(), alt("{1,0,1}"));

        let a = var("a");
        assert!(!a.is_constant());
        assert_eq!(a.as_constant(), None);
        assert_eq!(a.evaluate(&assign(&[("a", "{0,1,1}")])).unwrap(), alt("{0,1,1}"));
    }

    #[test]
    fn polynomial_interpretation_matches_direct_algebra() {
        let f = SymbolicAlt::from_polynomial(&poly("(a+b)c"), 3).unwrap();
        for x in Alternative::all(3) {
            for y in Alternative::all(3) {
                for z in Alternative::all(3) {
                    let assignment: BTreeMap<Subject, Alternative> =
                        [(subject("a"), x), (subject("b"), y), (subject("c"), z)]
                            .into_iter()
                            .collect();
                    assert_eq!(f.evaluate(&assignment).unwrap(), (x | y) & z);
                }
            }
        }
    }

    #[test]
    fn evaluation_covers_the_reference_case() {
        let f = rivals_fn();
        let value = f
            .evaluate(&assign(&[("a", "{1,0,0}"), ("b", "{0,0,1}"), ("c", "{1,1,1}")]))
            .unwrap();
        assert_eq!(value, alt("{1,0,1}"));
    }

    #[test]
    fn evaluation_ignores_spare_entries_and_reports_missing_ones() {
        let f = rivals_fn();
        let mut assignment = assign(&[("a", "{1,0,0}"), ("b", "{0,0,1}"), ("c", "{1,1,1}")]);
        assignment.insert(subject("z"), alt("{0,0,0}"));
        assert_eq!(f.evaluate(&assignment).unwrap(), alt("{1,0,1}"));

        let partial = assign(&[("a", "{1,0,0}")]);
        assert_eq!(
            f.evaluate(&partial),
            Err(ReflexionError::MissingVariable(subject("b")))
        );
    }

    #[test]
    fn widths_must_agree() {
        let f = var("a");
        let wide = SymbolicAlt::constant(Alternative::top(4));
        assert_eq!(
            f.join(&wide),
            Err(ReflexionError::WidthMismatch { left: 3, right: 4 })
        );
        let assignment: BTreeMap<Subject, Alternative> =
            [(subject("a"), Alternative::top(4))].into_iter().collect();
        assert!(f.evaluate(&assignment).is_err());
        assert!(f.substitute(&assignment).is_err());
    }

    #[test]
    fn substitution_fixes_only_named_variables() {
        let f = rivals_fn();
        let g = f.substitute(&assign(&[("a", "{1,0,0}")])).unwrap();
        assert_eq!(g.variables(), &[subject("b"), subject("c")]);
        let expected = SymbolicAlt::constant(alt("{1,0,0}"))
            .join(&var("b"))
            .unwrap()
            .meet(&var("c"))
            .unwrap()
            .join(&var("c").complement())
            .unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn substitution_can_collapse_to_a_constant() {
        let f = rivals_fn();
        let g = f.substitute(&assign(&[("c", "{0,0,0}")])).unwrap();
        assert_eq!(g.as_constant(), Some(alt("{1,1,1}")));
    }

    #[test]
    fn empty_substitution_is_identity() {
        let f = rivals_fn();
        assert_eq!(f.substitute(&assign(&[])).unwrap(), f);
        let spare = assign(&[("z", "{1,1,1}")]);
        assert_eq!(f.substitute(&spare).unwrap(), f);
    }

    #[test]
    fn substitute_then_evaluate_agrees_with_full_evaluation() {
        let f = rivals_fn();
        for x in Alternative::all(3) {
            for y in Alternative::all(3) {
                for z in Alternative::all(3) {
                    let full: BTreeMap<Subject, Alternative> =
                        [(subject("a"), x), (subject("b"), y), (subject("c"), z)]
                            .into_iter()
                            .collect();
                    let part: BTreeMap<Subject, Alternative> =
                        [(subject("a"), x)].into_iter().collect();
                    let rest: BTreeMap<Subject, Alternative> =
                        [(subject("b"), y), (subject("c"), z)].into_iter().collect();
                    let direct = f.evaluate(&full).unwrap();
                    let staged = f.substitute(&part).unwrap().evaluate(&rest).unwrap();
                    assert_eq!(direct, staged);
                }
            }
        }
    }

    #[test]
    fn canonical_form_makes_equality_semantic() {
        let one = SymbolicAlt::from_polynomial(&poly("a+b"), 3).unwrap();
        let other = var("b").join(&var("a")).unwrap();
        assert_eq!(one, other);

        let top = var("a").join(&var("a").complement()).unwrap();
        assert!(top.is_constant());
        assert_eq!(top.as_constant(), Some(Alternative::top(3)));

        let bottom = var("a").meet(&SymbolicAlt::bottom(3)).unwrap();
        assert_eq!(bottom, SymbolicAlt::bottom(3));
    }

    #[test]
    fn atom_components_stay_independent() {
        let f = rivals_fn();
        // Changing only dominance components never moves pleasure output.
        let base = assign(&[("a", "{1,0,0}"), ("b", "{0,0,1}"), ("c", "{1,1,0}")]);
        let tweaked = assign(&[("a", "{1,0,1}"), ("b", "{0,0,0}"), ("c", "{1,1,1}")]);
        let left = f.evaluate(&base).unwrap();
        let right = f.evaluate(&tweaked).unwrap();
        assert_eq!(left.bit(0), right.bit(0));
        assert_eq!(left.bit(1), right.bit(1));
    }

    #[test]
    fn rendering_uses_sum_of_products() {
        assert_eq!(var("d").render(), "d");
        assert_eq!(var("c").complement().render(), "¬c");
        assert_eq!(SymbolicAlt::constant(alt("{1,0,1}")).render(), "{1,0,1}");

        let coefficient = SymbolicAlt::constant(alt("{1,0,0}"))
            .meet(&var("c"))
            .unwrap()
            .join(&var("d"))
            .unwrap();
        assert_eq!(coefficient.render(), "{1,0,0}c + d");

        let shifted = SymbolicAlt::constant(alt("{1,0,0}")).join(&var("d")).unwrap();
        assert_eq!(shifted.render(), "{1,0,0} + d");

        assert_eq!(rivals_fn().render(), "a + b + ¬c");
        assert_eq!(rivals_fn().to_string(), "a + b + ¬c");
    }

    #[test]
    fn rendering_round_trips_through_evaluation() {
        // The printed form of the workhorse function evaluates identically.
        let f = rivals_fn();
        let again = SymbolicAlt::from_polynomial(&poly("a+b"), 3)
            .unwrap()
            .join(&var("c").complement())
            .unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn variable_limit_is_enforced() {
        let ids: Vec<String> = (0..MAX_VARS + 1).map(|i| format!("s{i}")).collect();
        let text = ids.join("+");
        let too_many = poly(&text);
        assert_eq!(
            SymbolicAlt::from_polynomial(&too_many, 3),
            Err(ReflexionError::TooManyVariables { count: MAX_VARS + 1 })
        );

        let mut acc = SymbolicAlt::bottom(3);
        for id in &ids[..MAX_VARS] {
            acc = acc.join(&SymbolicAlt::variable(Subject::new(id.clone()).unwrap(), 3)).unwrap();
        }
        let overflow = acc.join(&SymbolicAlt::variable(subject("z"), 3));
        assert_eq!(
            overflow,
            Err(ReflexionError::TooManyVariables { count: MAX_VARS + 1 })
        );
    }
}
