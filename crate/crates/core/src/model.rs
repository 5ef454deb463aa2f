//! The monomial parameterization of a graphical model as an integer matrix.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::StateGraph;
use crate::ideal::VariableSet;
use crate::scalar::Scalar;

pub const DEFAULT_COLUMN_LIMIT: usize = 1_000_000;

/// Number of global configurations, or a resource error past `limit`.
pub fn configuration_count(states: &[u32], limit: usize) -> Result<usize> {
    let mut n: usize = 1;
    for &d in states {
        n = n
            .checked_mul(d as usize)
            .filter(|&n| n <= limit)
            .ok_or_else(|| Error::resource(format!("more than {limit} configurations")))?;
    }
    Ok(n)
}

/// All configurations (1-based states) in mixed-radix order, last position fastest.
pub fn configurations(states: &[u32]) -> Vec<Vec<u32>> {
    let total: usize = states.iter().map(|&d| d as usize).product();
    let mut out = Vec::with_capacity(total);
    let mut cur = vec![1u32; states.len()];
    for _ in 0..total {
        out.push(cur.clone());
        for p in (0..states.len()).rev() {
            if cur[p] < states[p] {
                cur[p] += 1;
                break;
            }
            cur[p] = 1;
        }
    }
    out
}

/// Mixed-radix index of a configuration.
pub fn configuration_index(states: &[u32], config: &[u32]) -> usize {
    config.iter().zip(states).fold(0, |acc, (&s, &d)| acc * d as usize + (s as usize - 1))
}

/// Inverse of [`configuration_index`].
pub fn configuration_at(states: &[u32], mut index: usize) -> Vec<u32> {
    let mut out = vec![0; states.len()];
    for p in (0..states.len()).rev() {
        let d = states[p] as usize;
        out[p] = (index % d) as u32 + 1;
        index /= d;
    }
    out
}

/// `"x[(1,2,1)]"`.
pub fn configuration_name(prefix: &str, config: &[u32]) -> String {
    let parts: Vec<String> = config.iter().map(u32::to_string).collect();
    format!("{prefix}[({})]", parts.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowLabel {
    /// Index into [`ModelMatrix::cliques`].
    pub clique: usize,
    pub local: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelMatrix {
    pub nodes: Vec<String>,
    pub states: Vec<u32>,
    /// Maximal cliques as sorted node-index lists, sorted.
    pub cliques: Vec<Vec<usize>>,
    pub rows: Vec<RowLabel>,
    /// Column labels; column `c` is configuration `cols[c]`.
    pub cols: Vec<Vec<u32>>,
    /// Dense row-major 0/1 entries.
    pub entries: Vec<Vec<u32>>,
}

pub fn model_matrix(g: &StateGraph) -> Result<ModelMatrix> {
    model_matrix_with_limit(g, DEFAULT_COLUMN_LIMIT)
}

pub fn model_matrix_with_limit(g: &StateGraph, column_limit: usize) -> Result<ModelMatrix> {
    let states = g.states().to_vec();
    let ncols = configuration_count(&states, column_limit)?;
    let cliques = g.maximal_cliques();
    let mut rows = Vec::new();
    let mut offsets = Vec::with_capacity(cliques.len());
    for (ci, c) in cliques.iter().enumerate() {
        offsets.push(rows.len());
        let local_states: Vec<u32> = c.iter().map(|&v| states[v]).collect();
        for local in configurations(&local_states) {
            rows.push(RowLabel { clique: ci, local });
        }
    }
    let cols = configurations(&states);
    debug_assert_eq!(cols.len(), ncols);
    let mut entries = vec![vec![0u32; ncols]; rows.len()];
    for (col, beta) in cols.iter().enumerate() {
        for (ci, c) in cliques.iter().enumerate() {
            let local_states: Vec<u32> = c.iter().map(|&v| states[v]).collect();
            let restricted: Vec<u32> = c.iter().map(|&v| beta[v]).collect();
            entries[offsets[ci] + configuration_index(&local_states, &restricted)][col] = 1;
        }
    }
    Ok(ModelMatrix { nodes: g.nodes().to_vec(), states, cliques, rows, cols, entries })
}

impl ModelMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Coordinate names `x[(β)]`, one per column.
    pub fn variables(&self) -> VariableSet {
        VariableSet::new(self.cols.iter().map(|c| configuration_name("x", c)).collect())
            .expect("configuration names are unique")
    }

    /// `A·u` for a table `u` indexed by columns.
    pub fn apply(&self, u: &[i64]) -> Vec<i64> {
        self.entries.iter().map(|r| r.iter().zip(u).map(|(&a, &x)| a as i64 * x).sum()).collect()
    }

    /// The monomial map: coordinate `β` is the product of the parameters in
    /// the rows where column `β` is nonzero.
    pub fn evaluate<T: Scalar>(&self, theta: &[T]) -> Vec<T> {
        assert_eq!(theta.len(), self.nrows(), "parameter vector length");
        (0..self.ncols())
            .map(|c| {
                let mut acc = T::one();
                for (r, row) in self.entries.iter().enumerate() {
                    acc = acc * crate::scalar::pow(&theta[r], row[c]);
                }
                acc
            })
            .collect()
    }

    /// `"rows cols\n"` followed by the entries row by row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.nrows(), self.ncols());
        for r in &self.entries {
            let line: Vec<String> = r.iter().map(u32::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cliques: Vec<Vec<&str>> =
            self.cliques.iter().map(|c| c.iter().map(|&v| self.nodes[v].as_str()).collect()).collect();
        serde_json::json!({
            "nodes": self.nodes,
            "states": self.states,
            "cliques": cliques,
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.entries,
        })
    }
}

/// Configurations partitioned by their restriction to a set of shared nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupedLayout {
    /// Shared node indices into the graph, in the order given.
    pub shared: Vec<usize>,
    /// `β_0` per group, in mixed-radix order over the shared nodes.
    pub keys: Vec<Vec<u32>>,
    /// Column indices per group, ordered by the remaining coordinates `β'`.
    pub groups: Vec<Vec<usize>>,
}

impl GroupedLayout {
    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    pub fn group_sizes(&self) -> Vec<usize> {
        self.groups.iter().map(Vec::len).collect()
    }
}

pub fn grouped_layout<S: AsRef<str>>(g: &StateGraph, shared: &[S]) -> Result<GroupedLayout> {
    let mut idx = Vec::with_capacity(shared.len());
    for s in shared {
        let i = g
            .node_index(s.as_ref())
            .ok_or_else(|| Error::validation(format!("unknown shared node {:?}", s.as_ref())))?;
        idx.push(i);
    }
    let states = g.states();
    let key_states: Vec<u32> = idx.iter().map(|&i| states[i]).collect();
    let keys = configurations(&key_states);
    let mut groups = vec![Vec::new(); keys.len()];
    configuration_count(states, DEFAULT_COLUMN_LIMIT)?;
    for (c, beta) in configurations(states).iter().enumerate() {
        let key: Vec<u32> = idx.iter().map(|&i| beta[i]).collect();
        groups[configuration_index(&key_states, &key)].push(c);
    }
    Ok(GroupedLayout { shared: idx, keys, groups })
}
