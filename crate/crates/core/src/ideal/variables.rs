use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ordered, uniquely named ring variables. Index 0 is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "VariableSetRepr", into = "VariableSetRepr")]
pub struct VariableSet {
    names: Vec<String>,
    groups: Option<Vec<usize>>,
    index: HashMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct VariableSetRepr {
    names: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    groups: Option<Vec<usize>>,
}

impl From<VariableSetRepr> for VariableSet {
    fn from(r: VariableSetRepr) -> Self {
        let mut v = VariableSet::new(r.names).expect("duplicate variable names");
        v.groups = r.groups;
        v
    }
}

impl From<VariableSet> for VariableSetRepr {
    fn from(v: VariableSet) -> Self {
        VariableSetRepr { names: v.names, groups: v.groups }
    }
}

impl VariableSet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains(|c: char| c.is_whitespace() || c == '*' || c == '^') {
                return Err(Error::validation(format!("invalid variable name {n:?}")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::validation(format!("duplicate variable name {n:?}")));
            }
        }
        Ok(VariableSet { names, groups: None, index })
    }

    /// `prefix[0]`, `prefix[1]`, ...
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Self::new((0..n).map(|i| format!("{prefix}[{i}]")).collect()).expect("unique names")
    }

    pub fn with_groups(mut self, groups: Vec<usize>) -> Result<Self> {
        if groups.len() != self.names.len() {
            return Err(Error::validation("group tags do not match variable count"));
        }
        self.groups = Some(groups);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn group(&self, i: usize) -> Option<usize> {
        self.groups.as_ref().map(|g| g[i])
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}
