//! Degree-stabilization sweeps: Markov bases of `Σ_H a·G` for a range of
//! multiplicities, with an observed max-degree plateau.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graphs::{glue, GlueSpec};
use crate::ideal::{markov_basis, DegreeHistogram, MarkovOptions};
use crate::model::{configuration_count, model_matrix, DEFAULT_COLUMN_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    /// A degree limit cut the computation short; the histogram is partial.
    Truncated,
    /// A resource limit was hit.
    Skipped,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub multiplicities: Vec<usize>,
    pub n_generators: Option<usize>,
    pub degree_histogram: DegreeHistogram,
    pub max_degree: Option<u32>,
    pub wall_ms: u128,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Plateau {
    /// Multiplicities of the first instance of the final constant run.
    pub from: Vec<usize>,
    pub max_degree: Option<u32>,
    pub length: usize,
    pub note: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilizeReport {
    pub instances: Vec<Instance>,
    pub plateau: Option<Plateau>,
}

#[derive(Clone, Debug, Default)]
pub struct StabilizeOptions {
    /// Per instance.
    pub time_limit: Option<Duration>,
    pub max_variables: Option<usize>,
    pub max_degree: Option<u32>,
    pub markov: MarkovOptions,
}

impl StabilizeOptions {
    fn budget(&self) -> Budget {
        let mut b = Budget::unlimited();
        if let Some(t) = self.time_limit {
            b = b.with_time_limit(t);
        }
        if let Some(v) = self.max_variables {
            b = b.with_max_variables(v);
        }
        if let Some(d) = self.max_degree {
            b = b.with_max_degree(d);
        }
        b
    }
}

/// Multiplicity vectors that vary component `component` over `range` and
/// keep the others as given in `spec`.
pub fn scale_component(spec: &GlueSpec, component: usize, range: std::ops::RangeInclusive<usize>) -> Result<Vec<Vec<usize>>> {
    if component >= spec.components.len() {
        return Err(Error::validation(format!(
            "component {} does not exist (the spec has {})",
            component + 1,
            spec.components.len()
        )));
    }
    let base = spec.copies();
    Ok(range
        .map(|a| {
            let mut m = base.clone();
            m[component] = a;
            m
        })
        .collect())
}

pub fn run_instance(spec: &GlueSpec, multiplicities: &[usize], options: &StabilizeOptions) -> Instance {
    let start = Instant::now();
    let budget = options.budget();
    let result = (|| {
        let g = glue(&spec.with_copies(multiplicities)?)?;
        budget.check_variables(configuration_count(g.states(), DEFAULT_COLUMN_LIMIT)?)?;
        let m = model_matrix(&g)?;
        markov_basis(&m.entries, m.ncols(), &options.markov, &budget)
    })();
    let wall_ms = start.elapsed().as_millis();
    let multiplicities = multiplicities.to_vec();
    match result {
        Ok(mb) => Instance {
            multiplicities,
            n_generators: Some(mb.gens.len()),
            max_degree: mb.max_degree(),
            degree_histogram: mb.histogram,
            wall_ms,
            status: if mb.truncated { Status::Truncated } else { Status::Ok },
            message: None,
        },
        Err(e) => Instance {
            multiplicities,
            n_generators: None,
            degree_histogram: DegreeHistogram::new(),
            max_degree: None,
            wall_ms,
            status: if e.is_resource() { Status::Skipped } else { Status::Error },
            message: Some(e.to_string()),
        },
    }
}

/// The final run of completed instances sharing a max degree, when it has
/// at least two members.
pub fn plateau(instances: &[Instance]) -> Option<Plateau> {
    let done: Vec<&Instance> = instances.iter().filter(|i| i.status == Status::Ok).collect();
    let last = done.last()?;
    let length = done.iter().rev().take_while(|i| i.max_degree == last.max_degree).count();
    (length >= 2).then(|| Plateau {
        from: done[done.len() - length].multiplicities.clone(),
        max_degree: last.max_degree,
        length,
        note: "observed, not proven",
    })
}

pub fn stabilize(spec: &GlueSpec, multiplicities: &[Vec<usize>], options: &StabilizeOptions) -> Result<StabilizeReport> {
    spec.validate()?;
    let instances: Vec<Instance> = multiplicities.iter().map(|m| run_instance(spec, m, options)).collect();
    let plateau = plateau(&instances);
    Ok(StabilizeReport { instances, plateau })
}

impl StabilizeReport {
    /// One row per instance; the histogram is written as `degree:count`
    /// pairs separated by `;`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("multiplicities,n_generators,degree_histogram,max_degree,wall_ms,status\n");
        for i in &self.instances {
            let mult: Vec<String> = i.multiplicities.iter().map(usize::to_string).collect();
            let hist: Vec<String> = i.degree_histogram.iter().map(|(d, c)| format!("{d}:{c}")).collect();
            let opt = |x: Option<String>| x.unwrap_or_default();
            s.push_str(&format!(
                "{},{},{},{},{},{}\n",
                mult.join(";"),
                opt(i.n_generators.map(|n| n.to_string())),
                hist.join(";"),
                opt(i.max_degree.map(|d| d.to_string())),
                i.wall_ms,
                serde_json::to_value(i.status).expect("status serializes").as_str().unwrap_or_default()
            ));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::StateGraph;

    fn instance(m: usize, d: Option<u32>, status: Status) -> Instance {
        Instance {
            multiplicities: vec![m],
            n_generators: None,
            degree_histogram: DegreeHistogram::new(),
            max_degree: d,
            wall_ms: 0,
            status,
            message: None,
        }
    }

    #[test]
    fn plateau_rule() {
        assert!(plateau(&[instance(1, Some(2), Status::Ok)]).is_none());
        let p = plateau(&[
            instance(1, Some(2), Status::Ok),
            instance(2, Some(4), Status::Ok),
            instance(3, Some(4), Status::Ok),
            instance(4, None, Status::Skipped),
        ])
        .unwrap();
        assert_eq!((p.from, p.length, p.max_degree), (vec![2], 2, Some(4)));
    }

    #[test]
    fn isolated_nodes_give_zero_ideals() {
        let one = StateGraph::uniform(&["v"], 3, &[]).unwrap();
        let spec = GlueSpec::new(vec!["v".into()], vec![(one, 1)]);
        let ms = scale_component(&spec, 0, 1..=3).unwrap();
        let r = stabilize(&spec, &ms, &StabilizeOptions::default()).unwrap();
        for i in &r.instances {
            assert_eq!(i.status, Status::Ok);
            assert_eq!(i.n_generators, Some(0));
            assert!(i.degree_histogram.is_empty());
        }
    }

    #[test]
    fn stars_have_degree_two() {
        let edge = StateGraph::uniform(&["0", "1"], 2, &[("0", "1")]).unwrap();
        let spec = GlueSpec::new(vec!["0".into()], vec![(edge, 1)]);
        let ms = scale_component(&spec, 0, 1..=4).unwrap();
        let r = stabilize(&spec, &ms, &StabilizeOptions::default()).unwrap();
        assert_eq!(r.instances[0].max_degree, None);
        for i in &r.instances[1..] {
            assert_eq!(i.max_degree, Some(2), "{:?}", i.multiplicities);
        }
        let p = r.plateau.clone().unwrap();
        assert_eq!(p.from, vec![2]);
        assert!(r.to_csv().lines().nth(2).unwrap().starts_with("2,"));
    }

    #[test]
    fn limits_mark_instances_skipped() {
        let edge = StateGraph::uniform(&["0", "1"], 2, &[("0", "1")]).unwrap();
        let spec = GlueSpec::new(vec!["0".into()], vec![(edge, 1)]);
        let opts = StabilizeOptions { max_variables: Some(8), ..Default::default() };
        let r = stabilize(&spec, &scale_component(&spec, 0, 2..=3).unwrap(), &opts).unwrap();
        assert_eq!(r.instances[0].status, Status::Ok);
        assert_eq!(r.instances[1].status, Status::Skipped);
        assert!(scale_component(&spec, 1, 1..=2).is_err());
    }
}
