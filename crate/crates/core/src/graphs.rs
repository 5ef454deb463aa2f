//! Finite simple graphs with per-node state counts, maximal cliques, and
//! glueing of copies along a shared induced subgraph.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateGraph {
    name: Option<String>,
    nodes: Vec<String>,
    states: Vec<u32>,
    /// Pairs `(i, j)` of node indices with `i < j`.
    edges: BTreeSet<(usize, usize)>,
    index: HashMap<String, usize>,
}

impl StateGraph {
    /// Builds a graph; node order is the order given and is used for
    /// configuration indexing everywhere.
    pub fn new<S: AsRef<str>>(nodes: &[(S, u32)], edges: &[(S, S)]) -> Result<Self> {
        let mut index = HashMap::new();
        let mut names = Vec::with_capacity(nodes.len());
        let mut states = Vec::with_capacity(nodes.len());
        for (label, d) in nodes {
            let label = label.as_ref().to_string();
            if *d < 1 {
                return Err(Error::validation(format!("node {label:?} has {d} states")));
            }
            if index.insert(label.clone(), names.len()).is_some() {
                return Err(Error::validation(format!("duplicate node {label:?}")));
            }
            names.push(label);
            states.push(*d);
        }
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| Error::validation(format!("edge endpoint {a:?} is not a node")))?;
            let ib = *index.get(b).ok_or_else(|| Error::validation(format!("edge endpoint {b:?} is not a node")))?;
            if ia == ib {
                return Err(Error::validation(format!("self-loop at {a:?}")));
            }
            edge_set.insert((ia.min(ib), ia.max(ib)));
        }
        Ok(StateGraph { name: None, nodes: names, states, edges: edge_set, index })
    }

    /// Uniform state count for every node.
    pub fn uniform<S: AsRef<str>>(nodes: &[S], states: u32, edges: &[(S, S)]) -> Result<Self> {
        let with_states: Vec<(&str, u32)> = nodes.iter().map(|n| (n.as_ref(), states)).collect();
        let edges: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_ref(), b.as_ref())).collect();
        Self::new(&with_states, &edges)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn states(&self) -> &[u32] {
        &self.states
    }

    pub fn state_count(&self, label: &str) -> Option<u32> {
        self.index.get(label).map(|&i| self.states[i])
    }

    pub fn node_index(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges.iter().map(|&(a, b)| (self.nodes[a].clone(), self.nodes[b].clone())).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    fn neighbours(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    /// Subgraph on `nodes`, listed in this graph's node order.
    pub fn induced_subgraph<S: AsRef<str>>(&self, nodes: &[S]) -> Result<StateGraph> {
        let mut keep = BTreeSet::new();
        for n in nodes {
            let i = self
                .node_index(n.as_ref())
                .ok_or_else(|| Error::validation(format!("unknown node {:?}", n.as_ref())))?;
            keep.insert(i);
        }
        let kept: Vec<(&str, u32)> = keep.iter().map(|&i| (self.nodes[i].as_str(), self.states[i])).collect();
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b))
            .map(|&(a, b)| (self.nodes[a].as_str(), self.nodes[b].as_str()))
            .collect();
        StateGraph::new(&kept, &edges)
    }

    /// Inclusion-maximal cliques as sorted node-index lists, the collection
    /// sorted lexicographically. Isolated nodes are singleton cliques.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let adj = self.neighbours();
        let mut out = Vec::new();
        let p: BTreeSet<usize> = (0..self.nodes.len()).collect();
        bron_kerbosch(&adj, &mut Vec::new(), p, BTreeSet::new(), &mut out);
        for c in out.iter_mut() {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    pub fn maximal_clique_labels(&self) -> Vec<Vec<String>> {
        self.maximal_cliques()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.nodes[i].clone()).collect())
            .collect()
    }
}

/// Bron–Kerbosch with Tomita pivoting.
fn bron_kerbosch(
    adj: &[BTreeSet<usize>],
    r: &mut Vec<usize>,
    mut p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&&u| p.intersection(&adj[u]).count())
        .copied()
        .expect("p or x nonempty");
    let candidates: Vec<usize> = p.difference(&adj[pivot]).copied().collect();
    for v in candidates {
        r.push(v);
        let np = p.intersection(&adj[v]).copied().collect();
        let nx = x.intersection(&adj[v]).copied().collect();
        bron_kerbosch(adj, r, np, nx, out);
        r.pop();
        p.remove(&v);
        x.insert(v);
    }
}

/// Graphs glued along the common induced subgraph on `shared`.
#[derive(Clone, Debug)]
pub struct GlueSpec {
    /// Shared node labels, in the order used for the glued graph.
    pub shared: Vec<String>,
    /// Component graphs and how many copies of each to glue.
    pub components: Vec<(StateGraph, usize)>,
}

impl GlueSpec {
    pub fn new(shared: Vec<String>, components: Vec<(StateGraph, usize)>) -> Self {
        GlueSpec { shared, components }
    }

    /// Same spec with different multiplicities.
    pub fn with_copies(&self, copies: &[usize]) -> Result<Self> {
        if copies.len() != self.components.len() {
            return Err(Error::validation("multiplicity vector length does not match components"));
        }
        Ok(GlueSpec {
            shared: self.shared.clone(),
            components: self.components.iter().zip(copies).map(|((g, _), &a)| (g.clone(), a)).collect(),
        })
    }

    pub fn copies(&self) -> Vec<usize> {
        self.components.iter().map(|(_, a)| *a).collect()
    }

    /// Label used for copies of component `i` when naming glued nodes.
    pub fn component_label(&self, i: usize) -> String {
        let base = self.components[i].0.name().map(str::to_string).unwrap_or_else(|| format!("G{}", i + 1));
        let clash = self
            .components
            .iter()
            .enumerate()
            .any(|(k, (g, _))| k != i && g.name().map(str::to_string).unwrap_or_else(|| format!("G{}", k + 1)) == base);
        if clash {
            format!("{base}{}", i + 1)
        } else {
            base
        }
    }

    /// Checks the glueing preconditions and returns the shared graph `H`.
    pub fn validate(&self) -> Result<StateGraph> {
        if self.components.is_empty() {
            return Err(Error::validation("glue spec has no components"));
        }
        let mut seen = BTreeSet::new();
        for s in &self.shared {
            if !seen.insert(s) {
                return Err(Error::validation(format!("shared node {s:?} listed twice")));
            }
        }
        let mut h: Option<StateGraph> = None;
        for (i, (g, _)) in self.components.iter().enumerate() {
            for s in &self.shared {
                if g.node_index(s).is_none() {
                    return Err(Error::validation(format!(
                        "component {} lacks shared node {s:?}",
                        self.component_label(i)
                    )));
                }
            }
            let sub = g.induced_subgraph(&self.shared)?;
            match &h {
                None => h = Some(sub),
                Some(h0) => {
                    for s in &self.shared {
                        if h0.state_count(s) != sub.state_count(s) {
                            return Err(Error::validation(format!(
                                "state count of shared node {s:?} differs in component {}",
                                self.component_label(i)
                            )));
                        }
                    }
                    let e0: BTreeSet<_> = h0.edge_labels().into_iter().collect();
                    let e1: BTreeSet<_> = sub.edge_labels().into_iter().collect();
                    if let Some((a, b)) = e0.symmetric_difference(&e1).next() {
                        return Err(Error::validation(format!(
                            "induced subgraphs on the shared nodes differ at edge {{{a}, {b}}} (component {})",
                            self.component_label(i)
                        )));
                    }
                }
            }
        }
        let h = h.expect("at least one component");
        // H in the order of `shared`
        let nodes: Vec<(&str, u32)> =
            self.shared.iter().map(|s| (s.as_str(), h.state_count(s).expect("validated"))).collect();
        let edge_labels = h.edge_labels();
        let edges: Vec<(&str, &str)> = edge_labels.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        StateGraph::new(&nodes, &edges)
    }
}

/// Name of node `node` in copy `copy` (1-based) of a component.
pub fn copy_node_name(component_label: &str, copy: usize, node: &str) -> String {
    format!("{component_label}#{copy}/{node}")
}

/// The glued graph `Σ^{a_1} G_1 +_H ⋯ +_H Σ^{a_s} G_s`.
///
/// Node order: shared nodes first, then components in order, copies in
/// order, and each copy's non-shared nodes in that component's order.
pub fn glue(spec: &GlueSpec) -> Result<StateGraph> {
    let h = spec.validate()?;
    if spec.components.iter().all(|(_, a)| *a == 0) {
        return Err(Error::validation("all multiplicities are zero"));
    }
    let shared: BTreeSet<&str> = spec.shared.iter().map(String::as_str).collect();
    let mut nodes: Vec<(String, u32)> = h.nodes().iter().cloned().zip(h.states().iter().copied()).collect();
    let mut edges: Vec<(String, String)> = h.edge_labels();
    for (ci, (g, copies)) in spec.components.iter().enumerate() {
        let label = spec.component_label(ci);
        for copy in 1..=*copies {
            let rename = |n: &str| {
                if shared.contains(n) {
                    n.to_string()
                } else {
                    copy_node_name(&label, copy, n)
                }
            };
            for (n, &d) in g.nodes().iter().zip(g.states()) {
                if !shared.contains(n.as_str()) {
                    nodes.push((rename(n), d));
                }
            }
            for (a, b) in g.edge_labels() {
                if shared.contains(a.as_str()) && shared.contains(b.as_str()) {
                    continue;
                }
                edges.push((rename(&a), rename(&b)));
            }
        }
    }
    StateGraph::new(&nodes, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(cliques: Vec<Vec<String>>) -> Vec<Vec<&'static str>> {
        cliques
            .into_iter()
            .map(|c| c.into_iter().map(|s| &*Box::leak(s.into_boxed_str())).collect())
            .collect()
    }

    fn graph(nodes: &[&str], edges: &[(&str, &str)]) -> StateGraph {
        StateGraph::uniform(nodes, 2, edges).unwrap()
    }

    #[test]
    fn cliques_of_small_graphs() {
        let tri = graph(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("1", "3")]);
        assert_eq!(labels(tri.maximal_clique_labels()), vec![vec!["1", "2", "3"]]);
        let c4 = graph(&["1", "2", "3", "4"], &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")]);
        assert_eq!(
            labels(c4.maximal_clique_labels()),
            vec![vec!["1", "2"], vec!["1", "4"], vec!["2", "3"], vec!["3", "4"]]
        );
        let iso = graph(&["1", "2"], &[]);
        assert_eq!(labels(iso.maximal_clique_labels()), vec![vec!["1"], vec!["2"]]);
    }

    #[test]
    fn invalid_graphs_rejected() {
        assert!(StateGraph::uniform(&["a", "a"], 2, &[]).is_err());
        assert!(StateGraph::uniform(&["a"], 2, &[("a", "a")]).is_err());
        assert!(StateGraph::uniform(&["a"], 2, &[("a", "b")]).is_err());
        assert!(StateGraph::new(&[("a", 0)], &[]).is_err());
    }

    #[test]
    fn induced_subgraph_examples() {
        let tri = graph(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("1", "3")]);
        let e = tri.induced_subgraph(&["1", "2"]).unwrap();
        assert_eq!(e.edge_labels(), vec![("1".to_string(), "2".to_string())]);
        let c4 = graph(&["1", "2", "3", "4"], &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")]);
        assert_eq!(c4.induced_subgraph(&["1", "3"]).unwrap().edges().count(), 0);
        assert_eq!(tri.induced_subgraph(&["1", "2", "3"]).unwrap(), tri);
        assert!(tri.induced_subgraph(&["9"]).is_err());
    }

    #[test]
    fn glue_path() {
        let e1 = graph(&["0", "1"], &[("0", "1")]);
        let e2 = graph(&["0", "2"], &[("0", "2")]);
        let g = glue(&GlueSpec::new(vec!["0".into()], vec![(e1, 1), (e2, 1)])).unwrap();
        assert_eq!(g.nodes(), &["0", "G1#1/1", "G2#1/2"]);
        assert_eq!(g.edges().count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && !g.has_edge(1, 2));
    }

    #[test]
    fn glue_k31_twice_is_k32() {
        let k31 = graph(&["a", "b", "c", "x"], &[("a", "x"), ("b", "x"), ("c", "x")]).with_name("K31");
        let spec = GlueSpec::new(vec!["a".into(), "b".into(), "c".into()], vec![(k31, 2)]);
        let g = glue(&spec).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g.edges().count(), 6);
        for s in 0..3 {
            for t in 3..5 {
                assert!(g.has_edge(s, t));
            }
        }
        assert_eq!(g.nodes()[3], "K31#1/x");
        assert_eq!(g.nodes()[4], "K31#2/x");
    }

    #[test]
    fn glue_identity_case() {
        let c4 = graph(&["1", "2", "3", "4"], &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")]);
        let g = glue(&GlueSpec::new(vec!["1".into(), "3".into()], vec![(c4.clone(), 1)])).unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g.edges().count(), 4);
        assert_eq!(g.maximal_cliques().len(), c4.maximal_cliques().len());
    }

    #[test]
    fn glue_rejects_inconsistent_shared_subgraph() {
        let a = graph(&["s", "t", "x"], &[("s", "t"), ("s", "x")]);
        let b = graph(&["s", "t", "y"], &[("s", "y")]);
        let err = glue(&GlueSpec::new(vec!["s".into(), "t".into()], vec![(a, 1), (b, 1)])).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("{s, t}"), "{msg}");
    }

    #[test]
    fn glue_rejects_all_zero() {
        let a = graph(&["s", "x"], &[("s", "x")]);
        assert!(glue(&GlueSpec::new(vec!["s".into()], vec![(a, 0)])).is_err());
    }
}
