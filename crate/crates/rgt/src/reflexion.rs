//! Reflexive closure of a group: diagonal forms and mutual images.
//!
//! A decomposable group's polynomial stratifies into nested subexpressions;
//! writing each stratum above its own stratification gives the *diagonal
//! form*, a tower like `[(a+b)c]^([a+b]^([a]+[b])*[c])`. Folding the tower
//! from the leaves turns it into a single decision function: a leaf is its
//! own variable, and a node with base polynomial `P` whose exponent strata
//! fold to `W` becomes `P + ¬W` (the exponent strata combine with the base
//! polynomial's own operation first). The fold of the whole tower is the
//! reflexive function Φ of the group; [`annotate_images`] re-reads the
//! tower as the picture each subject holds of the others, one node per
//! stratum.

mod symbolic;

pub use symbolic::{SymbolicAlt, MAX_VARS};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::Alternative;
use crate::group::{PolynomialExpr, StratificationTree, Subject};
use crate::pad::BasicEmotion;

/// Errors raised while folding diagonal forms and handling symbolic
/// functions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReflexionError {
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error("no value bound for subject {0}")]
    MissingVariable(Subject),
    #[error("too many subjects: {count} exceeds the limit of {MAX_VARS}")]
    TooManyVariables { count: usize },
    #[error("viewpoint {0} is not a subject of the group")]
    UnknownViewpoint(Subject),
    #[error("malformed diagonal form: a single-variable stratum carries several exponents")]
    MalformedDiagonal,
}

/// A relationship polynomial raised to the diagonal form of its inner
/// strata: `base` is the polynomial of this stratum, `exponent` the
/// diagonal forms of its immediate substrata (empty at a leaf).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalForm {
    pub base: PolynomialExpr,
    pub exponent: Vec<DiagonalForm>,
}

/// Builds the diagonal form of a stratification tree: each node becomes
/// its polynomial raised to the forms of its children.
pub fn build_diagonal(tree: &StratificationTree) -> DiagonalForm {
    DiagonalForm {
        base: tree.polynomial().clone(),
        exponent: tree.children().iter().map(build_diagonal).collect(),
    }
}

impl fmt::Display for DiagonalForm {
    /// Prints the tower with brackets around each base and `^(...)`
    /// around folded-together exponents, e.g.
    /// `[(a+b)c]^([a+b]^([a]+[b])*[c])`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.base)?;
        if self.exponent.is_empty() {
            return Ok(());
        }
        let op = match self.base {
            PolynomialExpr::Sum(_) => "+",
            PolynomialExpr::Product(_) => "*",
            PolynomialExpr::Variable(_) => "",
        };
        f.write_str("^(")?;
        for (i, child) in self.exponent.iter().enumerate() {
            if i > 0 {
                f.write_str(op)?;
            }
            write!(f, "{child}")?;
        }
        f.write_str(")")
    }
}

/// Folds a diagonal form into its decision function over width-`width`
/// alternatives: a bare leaf is its variable's projection, and a node
/// whose exponent folds to `W` becomes `base + ¬W`.
pub fn fold(form: &DiagonalForm, width: usize) -> Result<SymbolicAlt, ReflexionError> {
    let base = SymbolicAlt::from_polynomial(&form.base, width)?;
    match fold_exponent(form, width)? {
        None => Ok(base),
        Some(w) => base.join(&w.complement()),
    }
}

/// Folds just the exponent strata of a node, combined with the base
/// polynomial's own operation (join under a sum, meet under a product).
/// `None` when the node is a bare leaf with no exponent.
pub fn fold_exponent(
    form: &DiagonalForm,
    width: usize,
) -> Result<Option<SymbolicAlt>, ReflexionError> {
    if form.exponent.is_empty() {
        return Ok(None);
    }
    let folded = form
        .exponent
        .iter()
        .map(|child| fold(child, width))
        .collect::<Result<Vec<_>, _>>()?;
    let combined = match &form.base {
        PolynomialExpr::Variable(_) => {
            if folded.len() > 1 {
                return Err(ReflexionError::MalformedDiagonal);
            }
            folded.into_iter().next().expect("non-empty exponent")
        }
        PolynomialExpr::Sum(_) => {
            let mut acc: Option<SymbolicAlt> = None;
            for part in folded {
                acc = Some(match acc {
                    None => part,
                    Some(w) => w.join(&part)?,
                });
            }
            acc.expect("non-empty exponent")
        }
        PolynomialExpr::Product(_) => {
            let mut acc: Option<SymbolicAlt> = None;
            for part in folded {
                acc = Some(match acc {
                    None => part,
                    Some(w) => w.meet(&part)?,
                });
            }
            acc.expect("non-empty exponent")
        }
    };
    Ok(Some(combined))
}

/// One node of an annotated image tree: a stratum of the diagonal form
/// with the value it takes once the known influences are substituted.
/// Values that come out constant at width 3 are also named as emotions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageNode {
    label: String,
    value: SymbolicAlt,
    emotion: Option<BasicEmotion>,
    children: Vec<ImageNode>,
}

impl ImageNode {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn value(&self) -> &SymbolicAlt {
        &self.value
    }

    pub fn emotion(&self) -> Option<BasicEmotion> {
        self.emotion
    }

    pub fn children(&self) -> &[ImageNode] {
        &self.children
    }

    /// Indented one-node-per-line rendering of the tree. Constant values
    /// print as their code plus emotion name where one exists; symbolic
    /// values print as sum-of-products.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        for _ in 0..depth {
            out.push_str("  ");
        }
        out.push_str(&self.label);
        out.push_str(": ");
        match (self.value.as_constant(), self.emotion) {
            (Some(code), Some(emotion)) => {
                out.push_str(&format!("{code} {emotion}"));
            }
            _ => out.push_str(&self.value.render()),
        }
        out.push('\n');
        for child in &self.children {
            child.render_into(out, depth + 1);
        }
    }

    fn new(label: String, value: SymbolicAlt) -> Self {
        let emotion = value
            .as_constant()
            .filter(|c| c.width() == 3)
            .map(|c| BasicEmotion::from_code(&c).expect("width checked"));
        ImageNode { label, value, emotion, children: Vec::new() }
    }
}

/// Annotates a diagonal form from one subject's point of view.
///
/// Influences of all other subjects are substituted into every stratum;
/// the viewpoint's own variable stays symbolic inside the exponent tower,
/// whose strata become `W` and `Image k` (nested `Image k.j`) nodes. The
/// root node reports the viewpoint's realisable state: the folded
/// function with the viewpoint's variable pushed to the top element, the
/// largest decision the equation admits.
pub fn annotate_images(
    form: &DiagonalForm,
    influences: &BTreeMap<Subject, Alternative>,
    viewpoint: &Subject,
    width: usize,
) -> Result<ImageNode, ReflexionError> {
    if !form.base.subjects().contains(viewpoint) {
        return Err(ReflexionError::UnknownViewpoint(viewpoint.clone()));
    }
    let mut known = influences.clone();
    known.remove(viewpoint);

    let mut ceiling = known.clone();
    ceiling.insert(viewpoint.clone(), Alternative::top(width));
    let mut root = ImageNode::new(
        "Subject".to_string(),
        fold(form, width)?.substitute(&ceiling)?,
    );

    if let Some(w) = fold_exponent(form, width)? {
        let mut w_node = ImageNode::new("W".to_string(), w.substitute(&known)?);
        for (k, child) in form.exponent.iter().enumerate() {
            w_node.children.push(image_node(child, &known, format!("Image {}", k + 1), width)?);
        }
        root.children.push(w_node);
    }
    Ok(root)
}

fn image_node(
    form: &DiagonalForm,
    known: &BTreeMap<Subject, Alternative>,
    label: String,
    width: usize,
) -> Result<ImageNode, ReflexionError> {
    let value = fold(form, width)?.substitute(known)?;
    let mut node = ImageNode::new(label, value);
    for (j, child) in form.exponent.iter().enumerate() {
        let sublabel = format!("{}.{}", node.label, j + 1);
        node.children.push(image_node(child, known, sublabel, width)?);
    }
    Ok(node)
}
