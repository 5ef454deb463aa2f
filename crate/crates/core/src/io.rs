//! JSON file formats.
//!
//! Graph: `{"name": "K31", "nodes": [{"id": "a", "states": 2}, ...], "edges": [["a", "b"], ...]}`
//!
//! Glue spec: `{"shared": ["a", ...], "components": [{"graph": <graph or path>, "copies": 2}, ...]}`,
//! relative paths resolved against the spec's directory.
//!
//! Ideal: `{"variables": [...], "generators": ["x*y - z^2", ...]}`.
//!
//! Grouped ideal: `{"factor_dims": [[2], [2]], "generators": [...]}`, or
//! `"groups": [2, 2]` for one factor per group. Generators use the names of
//! [`grouped_variables`].
//!
//! Table: `[1, 0, 2, ...]` or `{"x[(1,1)]": 1, ...}` (missing cells are 0).
//!
//! Monoid matrix: an array of columns, or `{"n": 2, "columns": [...]}`.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graphs::{GlueSpec, StateGraph};
use crate::ideal::text::{format_binomial, parse_binomial};
use crate::ideal::{Binomial, VariableSet};
use crate::model::configuration_name;
use crate::monoid::ColumnSumMatrix;
use crate::tfp::GroupedIdeal;

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

#[derive(Serialize, Deserialize)]
struct NodeJson {
    id: String,
    states: u32,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    nodes: Vec<NodeJson>,
    #[serde(default)]
    edges: Vec<(String, String)>,
}

fn graph_from_json(g: GraphJson) -> Result<StateGraph> {
    let nodes: Vec<(String, u32)> = g.nodes.into_iter().map(|n| (n.id, n.states)).collect();
    let graph = StateGraph::new(&nodes, &g.edges)?;
    Ok(match g.name {
        Some(n) => graph.with_name(n),
        None => graph,
    })
}

pub fn parse_graph(text: &str) -> Result<StateGraph> {
    graph_from_json(parse_json(text, "graph")?)
}

pub fn read_graph(path: &Path) -> Result<StateGraph> {
    parse_graph(&read_file(path)?).map_err(|e| with_path(e, path))
}

pub fn graph_to_json(g: &StateGraph) -> Value {
    let json = GraphJson {
        name: g.name().map(str::to_string),
        nodes: g.nodes().iter().zip(g.states()).map(|(id, &states)| NodeJson { id: id.clone(), states }).collect(),
        edges: g.edge_labels(),
    };
    serde_json::to_value(json).expect("graph serializes")
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GraphRef {
    Path(PathBuf),
    Inline(GraphJson),
}

#[derive(Deserialize)]
struct ComponentJson {
    graph: GraphRef,
    #[serde(default = "one")]
    copies: usize,
}

fn one() -> usize {
    1
}

#[derive(Deserialize)]
struct GlueJson {
    #[serde(default)]
    shared: Vec<String>,
    components: Vec<ComponentJson>,
}

/// Glue spec text; `base` resolves graph paths.
pub fn parse_glue_spec(text: &str, base: &Path) -> Result<GlueSpec> {
    let spec: GlueJson = parse_json(text, "glue spec")?;
    let components = spec
        .components
        .into_iter()
        .map(|c| {
            let g = match c.graph {
                GraphRef::Path(p) => read_graph(&base.join(p))?,
                GraphRef::Inline(g) => graph_from_json(g)?,
            };
            Ok((g, c.copies))
        })
        .collect::<Result<Vec<_>>>()?;
    let spec = GlueSpec::new(spec.shared, components);
    spec.validate()?;
    Ok(spec)
}

pub fn read_glue_spec(path: &Path) -> Result<GlueSpec> {
    let base = path.parent().unwrap_or(Path::new("."));
    parse_glue_spec(&read_file(path)?, base).map_err(|e| with_path(e, path))
}

fn with_path(e: Error, path: &Path) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        Error::Validation(m) => Error::Validation(format!("{}: {m}", path.display())),
        e => e,
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    variables: Vec<String>,
    generators: Vec<String>,
}

pub fn ideal_to_json(vars: &VariableSet, gens: &[Binomial]) -> Value {
    let json = IdealJson {
        variables: vars.names().to_vec(),
        generators: gens.iter().map(|g| format_binomial(g, vars)).collect(),
    };
    serde_json::to_value(json).expect("ideal serializes")
}

pub fn parse_ideal(text: &str) -> Result<(VariableSet, Vec<Binomial>)> {
    let json: IdealJson = parse_json(text, "ideal")?;
    let vars = VariableSet::new(json.variables)?;
    let gens = json.generators.iter().map(|g| parse_binomial(g, &vars)).collect::<Result<_>>()?;
    Ok((vars, gens))
}

/// `{prefix}{j}[{i}]` for one factor, `{prefix}{j}[({i1},{i2},...)]` otherwise,
/// all 1-based.
pub fn grouped_variables(ideal: &GroupedIdeal, prefix: &str) -> VariableSet {
    let names = (0..ideal.nvars())
        .map(|v| {
            let (j, idx) = ideal.label(v);
            let one_based: Vec<u32> = idx.iter().map(|&i| i as u32 + 1).collect();
            if one_based.len() == 1 {
                format!("{prefix}{}[{}]", j + 1, one_based[0])
            } else {
                configuration_name(&format!("{prefix}{}", j + 1), &one_based)
            }
        })
        .collect();
    VariableSet::new(names).expect("labels are distinct")
}

#[derive(Deserialize)]
struct GroupedJson {
    #[serde(default)]
    factor_dims: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    groups: Option<Vec<usize>>,
    #[serde(default)]
    generators: Vec<String>,
}

pub fn parse_grouped_ideal(text: &str, prefix: &str) -> Result<GroupedIdeal> {
    let json: GroupedJson = parse_json(text, "grouped ideal")?;
    let dims = match (json.factor_dims, json.groups) {
        (Some(f), None) => f,
        (None, Some(g)) => g.into_iter().map(|d| vec![d]).collect(),
        _ => return Err(Error::validation("give exactly one of \"factor_dims\" and \"groups\"")),
    };
    let shape = GroupedIdeal::with_factors(dims.clone(), vec![])?;
    let vars = grouped_variables(&shape, prefix);
    let gens = json.generators.iter().map(|g| parse_binomial(g, &vars)).collect::<Result<_>>()?;
    GroupedIdeal::with_factors(dims, gens)
}

pub fn grouped_ideal_to_json(ideal: &GroupedIdeal, prefix: &str) -> Value {
    let vars = grouped_variables(ideal, prefix);
    serde_json::json!({
        "factor_dims": ideal.factor_dims(),
        "variables": vars.names(),
        "generators": ideal.gens().iter().map(|g| format_binomial(g, &vars)).collect::<Vec<_>>(),
    })
}

/// Array of counts or object keyed by variable name.
pub fn parse_table(text: &str, vars: &VariableSet) -> Result<Vec<i64>> {
    let value: Value = parse_json(text, "table")?;
    let table = match value {
        Value::Array(_) => serde_json::from_value::<Vec<i64>>(value).map_err(|e| Error::Parse(format!("table: {e}")))?,
        Value::Object(map) => {
            let mut t = vec![0; vars.len()];
            for (k, v) in map {
                let i = vars.position(&k).ok_or_else(|| Error::validation(format!("unknown cell {k:?}")))?;
                t[i] = v.as_i64().ok_or_else(|| Error::Parse(format!("cell {k:?} is not an integer")))?;
            }
            t
        }
        _ => return Err(Error::Parse("table must be an array or an object".into())),
    };
    if table.len() != vars.len() {
        return Err(Error::validation(format!("table has {} cells, the model has {}", table.len(), vars.len())));
    }
    if table.iter().any(|&x| x < 0) {
        return Err(Error::validation("table entries must be nonnegative"));
    }
    Ok(table)
}

pub fn table_to_json(t: &[i64], vars: &VariableSet) -> Value {
    Value::Object(vars.names().iter().zip(t).map(|(k, &v)| (k.clone(), Value::from(v))).collect())
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixJson {
    Columns(Vec<Vec<u32>>),
    Shaped { n: usize, columns: Vec<Vec<u32>> },
}

pub fn parse_column_matrix(text: &str) -> Result<ColumnSumMatrix> {
    match parse_json::<MatrixJson>(text, "matrix")? {
        MatrixJson::Columns(c) => {
            let n = c.first().map(Vec::len).ok_or_else(|| {
                Error::validation("a matrix without columns needs the form {\"n\": rows, \"columns\": []}")
            })?;
            ColumnSumMatrix::from_columns(n, c)
        }
        MatrixJson::Shaped { n, columns } => ColumnSumMatrix::from_columns(n, columns),
    }
}

pub fn parse_column_matrices(text: &str) -> Result<Vec<ColumnSumMatrix>> {
    let values: Vec<Value> = parse_json(text, "matrix sequence")?;
    values.iter().map(|v| parse_column_matrix(&v.to_string())).collect()
}

/// Dense `A` as an array of rows, or an object with an `"entries"` field.
pub fn parse_integer_matrix(text: &str) -> Result<Vec<Vec<u32>>> {
    let value: Value = parse_json(text, "matrix")?;
    let rows = match value {
        Value::Object(mut m) => m.remove("entries").ok_or_else(|| Error::Parse("matrix: missing \"entries\"".into()))?,
        v => v,
    };
    let rows: Vec<Vec<u32>> = serde_json::from_value(rows).map_err(|e| Error::Parse(format!("matrix: {e}")))?;
    if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
        return Err(Error::validation("matrix rows have different lengths"));
    }
    Ok(rows)
}
