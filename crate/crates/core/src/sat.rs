//! CNF formulas and their reduction to rainbow trees in star-colored graphs.
//!
//! For a formula with `s` variables and `t` clauses the reduced graph has a
//! spine `y_1 .. y_s`, two literal vertices `a_i1` (true) and `a_i2` (false)
//! hanging off each `y_i`, and one vertex `c'_j` per clause joined to the
//! literal vertices of its literals. A rainbow tree of order `2s + q` exists
//! iff some assignment satisfies `q` clauses.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{FormatError, SatError};
use crate::graph::{Color, EdgeColoredGraph, VertexId};
use crate::tree::{check_tree, ColoredTree, TreeMode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    vars: usize,
    clauses: Vec<Vec<i64>>,
}

impl CnfFormula {
    pub fn new(vars: usize, clauses: Vec<Vec<i64>>) -> Result<Self, SatError> {
        for (j, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(SatError::EmptyClause(j + 1));
            }
            let mut seen = BTreeSet::new();
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > vars {
                    return Err(SatError::LiteralOutOfRange { literal: lit, vars });
                }
                if !seen.insert(lit) {
                    return Err(SatError::DuplicateLiteral {
                        clause: j + 1,
                        literal: lit,
                    });
                }
            }
        }
        Ok(CnfFormula { vars, clauses })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[Vec<i64>] {
        &self.clauses
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn satisfied(&self, assignment: &[bool]) -> usize {
        self.clauses
            .iter()
            .filter(|c| c.iter().any(|&lit| literal_true(lit, assignment)))
            .count()
    }

    /// Parses DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>`
    /// header, then signed literals with each clause terminated by `0`.
    pub fn parse_dimacs(text: &str) -> Result<Self, SatError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<i64> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if header.is_some() {
                    return Err(FormatError::new(line_no, "duplicate header").into());
                }
                if parts.len() != 4 || parts[1] != "cnf" {
                    return Err(FormatError::new(line_no, "expected `p cnf <vars> <clauses>`").into());
                }
                let vars = parts[2]
                    .parse()
                    .map_err(|_| FormatError::new(line_no, "bad variable count"))?;
                let count = parts[3]
                    .parse()
                    .map_err(|_| FormatError::new(line_no, "bad clause count"))?;
                header = Some((vars, count));
                continue;
            }
            if header.is_none() {
                return Err(FormatError::new(line_no, "clause before header").into());
            }
            for tok in line.split_whitespace() {
                let lit: i64 = tok
                    .parse()
                    .map_err(|_| FormatError::new(line_no, format!("bad literal {tok:?}")))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(lit);
                }
            }
        }
        let (vars, count) = header.ok_or_else(|| FormatError::new(0, "missing `p cnf` header"))?;
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != count {
            return Err(
                FormatError::new(0, format!("header declares {count} clauses, found {}", clauses.len())).into(),
            );
        }
        CnfFormula::new(vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&lit.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

fn literal_true(lit: i64, assignment: &[bool]) -> bool {
    let value = assignment[lit.unsigned_abs() as usize - 1];
    if lit > 0 {
        value
    } else {
        !value
    }
}

/// Vertex and color roles of a reduced graph. All vectors are indexed from
/// variable or clause 1 at position 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionMap {
    pub formula: CnfFormula,
    pub spine: Vec<VertexId>,
    pub positive: Vec<VertexId>,
    pub negative: Vec<VertexId>,
    pub clause_vertices: Vec<VertexId>,
    pub variable_colors: Vec<Color>,
    pub clause_colors: Vec<Color>,
    /// `spine_colors[i]` colors the spine edge between variables `i + 1` and `i + 2`.
    pub spine_colors: Vec<Color>,
}

impl ReductionMap {
    fn literal_vertex(&self, lit: i64) -> VertexId {
        let i = lit.unsigned_abs() as usize - 1;
        if lit > 0 {
            self.positive[i]
        } else {
            self.negative[i]
        }
    }
}

pub fn reduce(formula: &CnfFormula) -> Result<(EdgeColoredGraph, ReductionMap), SatError> {
    let s = formula.vars();
    let t = formula.clauses().len();
    if s == 0 {
        return Err(SatError::NoVariables);
    }
    let map = ReductionMap {
        formula: formula.clone(),
        spine: (0..s).collect(),
        positive: (0..s).map(|i| s + 2 * i).collect(),
        negative: (0..s).map(|i| s + 2 * i + 1).collect(),
        clause_vertices: (0..t).map(|j| 3 * s + j).collect(),
        variable_colors: (1..=s as Color).collect(),
        clause_colors: (1..=t as Color).map(|j| s as Color + j).collect(),
        spine_colors: (1..s as Color).map(|i| (s + t) as Color + i).collect(),
    };
    let mut edges = Vec::new();
    for i in 0..s {
        edges.push((map.spine[i], map.positive[i], map.variable_colors[i]));
        edges.push((map.spine[i], map.negative[i], map.variable_colors[i]));
        if i + 1 < s {
            edges.push((map.spine[i], map.spine[i + 1], map.spine_colors[i]));
        }
    }
    for (j, clause) in formula.clauses().iter().enumerate() {
        for &lit in clause {
            edges.push((map.clause_vertices[j], map.literal_vertex(lit), map.clause_colors[j]));
        }
    }
    let graph = EdgeColoredGraph::new(3 * s + t, edges).map_err(|e| SatError::ForeignTree(e.to_string()))?;
    debug_assert!(graph.is_star_colored() && graph.is_connected());
    Ok((graph, map))
}

fn check_foreign(graph: &EdgeColoredGraph, map: &ReductionMap) -> Result<(), SatError> {
    let expected = 3 * map.formula.vars() + map.formula.clauses().len();
    if graph.n() != expected {
        return Err(SatError::ForeignTree(format!(
            "graph has {} vertices, reduction has {expected}",
            graph.n()
        )));
    }
    Ok(())
}

/// Reads an assignment off a tree: `x_i` is true iff `a_i1` is in the tree,
/// and unconstrained variables default to false. Returns the assignment and
/// the number of clauses it satisfies.
pub fn extract_assignment(
    graph: &EdgeColoredGraph,
    map: &ReductionMap,
    tree: &ColoredTree,
) -> Result<(Vec<bool>, usize), SatError> {
    check_foreign(graph, map)?;
    check_tree(graph, tree).map_err(|d| SatError::ForeignTree(d.to_string()))?;
    let members: BTreeSet<VertexId> = tree.vertices.iter().copied().collect();
    let assignment: Vec<bool> = map.positive.iter().map(|a| members.contains(a)).collect();
    let satisfied = map.formula.satisfied(&assignment);
    Ok((assignment, satisfied))
}

/// Rainbow tree of order `2s + q` where `q` clauses are satisfied. Each
/// satisfied clause hangs off its lowest-indexed true literal.
pub fn build_tree_from_assignment(
    graph: &EdgeColoredGraph,
    map: &ReductionMap,
    assignment: &[bool],
) -> Result<ColoredTree, SatError> {
    check_foreign(graph, map)?;
    let s = map.formula.vars();
    if assignment.len() != s {
        return Err(SatError::AssignmentLength {
            expected: s,
            got: assignment.len(),
        });
    }
    let edge = |a: VertexId, b: VertexId| graph.edge_between(a, b).expect("reduction edge");
    let mut edges = Vec::new();
    for (i, &value) in assignment.iter().enumerate() {
        let chosen = if value { map.positive[i] } else { map.negative[i] };
        edges.push(edge(map.spine[i], chosen));
        if i + 1 < s {
            edges.push(edge(map.spine[i], map.spine[i + 1]));
        }
    }
    for (j, clause) in map.formula.clauses().iter().enumerate() {
        let true_lits = clause.iter().copied().filter(|&lit| literal_true(lit, assignment));
        if let Some(lit) = true_lits.min_by_key(|lit| lit.unsigned_abs()) {
            edges.push(edge(map.clause_vertices[j], map.literal_vertex(lit)));
        }
    }
    let tree = ColoredTree::from_edges(graph, edges, TreeMode::Rainbow);
    debug_assert!(check_tree(graph, &tree).is_ok());
    Ok(tree)
}
