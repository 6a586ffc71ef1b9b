//! Helpers shared by the integration suites: generators for canonical
//! polynomials, complete labelled graphs built from bitmasks, and slow
//! independent oracles (partition search, path detection, direct polynomial
//! evaluation) that the fast library code is checked against.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rgt::{Alternative, PolynomialExpr, Relation, RelationshipGraph, Subject};

/// The first `n` single-letter subjects `a`, `b`, `c`, ...
pub fn subjects(n: usize) -> Vec<Subject> {
    assert!(n <= 26);
    (0..n)
        .map(|i| Subject::new(((b'a' + i as u8) as char).to_string()).unwrap())
        .collect()
}

/// Uniform-ish random canonical polynomial over exactly the given subjects:
/// kinds alternate between levels, every interior node has at least two
/// children, and a single subject yields a bare variable.
pub fn random_polynomial(rng: &mut impl Rng, subjects: &[Subject]) -> PolynomialExpr {
    assert!(!subjects.is_empty());
    build_random(rng, subjects.to_vec(), None)
}

fn build_random(
    rng: &mut impl Rng,
    mut members: Vec<Subject>,
    parent_is_sum: Option<bool>,
) -> PolynomialExpr {
    if members.len() == 1 {
        return PolynomialExpr::variable(members.pop().unwrap());
    }
    members.shuffle(rng);
    let block_count = rng.random_range(2..=members.len());
    let mut blocks: Vec<Vec<Subject>> = vec![Vec::new(); block_count];
    for (i, subject) in members.into_iter().enumerate() {
        let slot = if i < block_count {
            i // every block gets at least one member
        } else {
            rng.random_range(0..block_count)
        };
        blocks[slot].push(subject);
    }
    let is_sum = match parent_is_sum {
        None => rng.random_bool(0.5),
        Some(parent) => !parent,
    };
    let children = blocks
        .into_iter()
        .map(|block| build_random(rng, block, Some(is_sum)))
        .collect();
    if is_sum {
        PolynomialExpr::sum(children)
    } else {
        PolynomialExpr::product(children)
    }
}

/// Every canonical polynomial over exactly the given subjects.
pub fn enumerate_polynomials(subjects: &[Subject]) -> Vec<PolynomialExpr> {
    enumerate_with(subjects, None)
}

fn enumerate_with(members: &[Subject], parent_is_sum: Option<bool>) -> Vec<PolynomialExpr> {
    if members.len() == 1 {
        return vec![PolynomialExpr::variable(members[0].clone())];
    }
    let mut out = Vec::new();
    for partition in partitions(members) {
        if partition.len() < 2 {
            continue;
        }
        let kinds: &[bool] = match parent_is_sum {
            None => &[false, true],
            Some(true) => &[false],
            Some(false) => &[true],
        };
        for &is_sum in kinds {
            let options: Vec<Vec<PolynomialExpr>> = partition
                .iter()
                .map(|block| enumerate_with(block, Some(is_sum)))
                .collect();
            let mut combos: Vec<Vec<PolynomialExpr>> = vec![Vec::new()];
            for block_options in &options {
                let mut next = Vec::new();
                for combo in &combos {
                    for option in block_options {
                        let mut extended = combo.clone();
                        extended.push(option.clone());
                        next.push(extended);
                    }
                }
                combos = next;
            }
            for children in combos {
                out.push(if is_sum {
                    PolynomialExpr::sum(children)
                } else {
                    PolynomialExpr::product(children)
                });
            }
        }
    }
    out
}

/// All set partitions of `items`, including the one-block partition.
fn partitions(items: &[Subject]) -> Vec<Vec<Vec<Subject>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<Subject>> = Vec::new();
    partition_rec(items, 0, &mut current, &mut out);
    out
}

fn partition_rec(
    items: &[Subject],
    index: usize,
    current: &mut Vec<Vec<Subject>>,
    out: &mut Vec<Vec<Vec<Subject>>>,
) {
    if index == items.len() {
        out.push(current.clone());
        return;
    }
    for slot in 0..current.len() {
        current[slot].push(items[index].clone());
        partition_rec(items, index + 1, current, out);
        current[slot].pop();
    }
    current.push(vec![items[index].clone()]);
    partition_rec(items, index + 1, current, out);
    current.pop();
}

/// Index of pair `(i, j)` with `i < j` in lexicographic pair order over `n`
/// vertices: (0,1), (0,2), ..., (0,n-1), (1,2), ...
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Complete labelled graph on the given subjects where bit `pair_index(n,i,j)`
/// of `mask` selects Conflict for that pair (Alliance otherwise).
pub fn graph_from_mask(subjects: &[Subject], mask: u32) -> RelationshipGraph {
    let n = subjects.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let relation = if mask >> pair_index(n, i, j) & 1 == 1 {
                Relation::Conflict
            } else {
                Relation::Alliance
            };
            edges.push((subjects[i].clone(), subjects[j].clone(), relation));
        }
    }
    RelationshipGraph::new(subjects.to_vec(), edges).unwrap()
}

/// Brute-force decomposability oracle, independent of the library algorithm:
/// a vertex set splits iff it can be partitioned into two or more blocks such
/// that every cross-block pair carries one uniform label and every block is
/// itself decomposable. `conflict(i, j)` is queried with `i < j`.
pub fn decomposable_oracle(n: usize, conflict: &dyn Fn(usize, usize) -> bool) -> bool {
    assert!(n >= 1 && n <= 16);
    let mut memo = HashMap::new();
    subset_decomposable((1u32 << n) - 1, conflict, &mut memo)
}

fn subset_decomposable(
    mask: u32,
    conflict: &dyn Fn(usize, usize) -> bool,
    memo: &mut HashMap<u32, bool>,
) -> bool {
    if mask.count_ones() <= 1 {
        return true;
    }
    if let Some(&known) = memo.get(&mask) {
        return known;
    }
    let members: Vec<usize> = (0..32).filter(|i| mask >> i & 1 == 1).collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let ok = split_search(&members, 0, &mut blocks, None, conflict, memo);
    memo.insert(mask, ok);
    ok
}

fn split_search(
    members: &[usize],
    index: usize,
    blocks: &mut Vec<Vec<usize>>,
    cross_is_conflict: Option<bool>,
    conflict: &dyn Fn(usize, usize) -> bool,
    memo: &mut HashMap<u32, bool>,
) -> bool {
    if index == members.len() {
        return blocks.len() >= 2
            && blocks.iter().all(|block| {
                let mask = block.iter().fold(0u32, |m, &i| m | 1 << i);
                subset_decomposable(mask, conflict, memo)
            });
    }
    let vertex = members[index];
    // Placing each vertex either in an existing block or in a fresh one
    // appended at the end enumerates partitions once each (blocks are ordered
    // by their first member).
    for target in 0..=blocks.len() {
        let mut implied = cross_is_conflict;
        let mut consistent = true;
        'blocks: for (b, block) in blocks.iter().enumerate() {
            if b == target {
                continue;
            }
            for &other in block {
                let label = conflict(other.min(vertex), other.max(vertex));
                match implied {
                    Some(existing) if existing != label => {
                        consistent = false;
                        break 'blocks;
                    }
                    _ => implied = Some(label),
                }
            }
        }
        if !consistent {
            continue;
        }
        let fresh = target == blocks.len();
        if fresh {
            blocks.push(vec![vertex]);
        } else {
            blocks[target].push(vertex);
        }
        let found = split_search(members, index + 1, blocks, implied, conflict, memo);
        if fresh {
            blocks.pop();
        } else {
            blocks[target].pop();
        }
        if found {
            return true;
        }
    }
    false
}

/// True when some 4 vertices induce a simple path in the conflict subgraph
/// (exactly three conflict pairs among them, with degrees 1,1,2,2).
pub fn has_induced_conflict_path4(n: usize, conflict: &dyn Fn(usize, usize) -> bool) -> bool {
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let four = [a, b, c, d];
                    let mut degrees = [0u8; 4];
                    let mut edges = 0;
                    for x in 0..4 {
                        for y in x + 1..4 {
                            if conflict(four[x], four[y]) {
                                edges += 1;
                                degrees[x] += 1;
                                degrees[y] += 1;
                            }
                        }
                    }
                    degrees.sort_unstable();
                    if edges == 3 && degrees == [1, 1, 2, 2] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Direct recursive evaluation of a polynomial: sums join, products meet.
/// Independent of the truth-table machinery.
pub fn eval_polynomial(
    polynomial: &PolynomialExpr,
    assignment: &BTreeMap<Subject, Alternative>,
) -> Alternative {
    match polynomial {
        PolynomialExpr::Variable(subject) => assignment[subject].clone(),
        PolynomialExpr::Sum(children) => children
            .iter()
            .map(|child| eval_polynomial(child, assignment))
            .reduce(|x, y| x.join(&y).unwrap())
            .unwrap(),
        PolynomialExpr::Product(children) => children
            .iter()
            .map(|child| eval_polynomial(child, assignment))
            .reduce(|x, y| x.meet(&y).unwrap())
            .unwrap(),
    }
}

/// Direct recursive fold oracle: a leaf contributes its own value, an interior
/// polynomial contributes its plain value joined with the complement of its
/// children's folded values combined by the polynomial's own operation.
pub fn oracle_fold_value(
    polynomial: &PolynomialExpr,
    assignment: &BTreeMap<Subject, Alternative>,
) -> Alternative {
    match polynomial {
        PolynomialExpr::Variable(subject) => assignment[subject].clone(),
        PolynomialExpr::Sum(children) => {
            let exponent = children
                .iter()
                .map(|child| oracle_fold_value(child, assignment))
                .reduce(|x, y| x.join(&y).unwrap())
                .unwrap();
            eval_polynomial(polynomial, assignment)
                .join(&exponent.complement())
                .unwrap()
        }
        PolynomialExpr::Product(children) => {
            let exponent = children
                .iter()
                .map(|child| oracle_fold_value(child, assignment))
                .reduce(|x, y| x.meet(&y).unwrap())
                .unwrap();
            eval_polynomial(polynomial, assignment)
                .join(&exponent.complement())
                .unwrap()
        }
    }
}

/// Every total assignment of width-`width` alternatives to the given subjects.
pub fn all_assignments(
    subjects: &[Subject],
    width: usize,
) -> Vec<BTreeMap<Subject, Alternative>> {
    let states: Vec<Alternative> = Alternative::all(width).collect();
    let mut out: Vec<BTreeMap<Subject, Alternative>> = vec![BTreeMap::new()];
    for subject in subjects {
        let mut next = Vec::with_capacity(out.len() * states.len());
        for assignment in &out {
            for state in &states {
                let mut extended = assignment.clone();
                extended.insert(subject.clone(), state.clone());
                next.push(extended);
            }
        }
        out = next;
    }
    out
}

/// A random assignment for the given subjects.
pub fn random_assignment(
    rng: &mut impl Rng,
    subjects: &[Subject],
    width: usize,
) -> BTreeMap<Subject, Alternative> {
    subjects
        .iter()
        .map(|s| {
            let index = rng.random_range(0..(1u32 << width)) as u16;
            (s.clone(), Alternative::from_index(width, index))
        })
        .collect()
}
