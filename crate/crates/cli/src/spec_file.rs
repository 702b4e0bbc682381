//! JSON descriptions of `(⊕ S_j) ⋉ (⊕ V_i)` consumed by `build spec-file`.

use std::collections::BTreeMap;

use leibniz_core::builders::{build_semisimple, Built, SemisimpleSpec};
use leibniz_core::modules::{
    canonical_module, tensor_module, Component, ComponentAction, ModuleAction,
};
use leibniz_core::{Matrix, Scalar};
use serde::Deserialize;

use crate::format::{parse_rational, TableBlock};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKindSpec {
    Sl2,
    Simple,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    pub label: String,
    pub kind: ComponentKindSpec,
    #[serde(default)]
    pub table: Option<TableBlock>,
}

/// A rational written as a string or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn value(&self) -> Result<Scalar, CliError> {
        match self {
            Entry::Int(n) => Ok(Scalar::from_integer((*n).into())),
            Entry::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleSpec {
    /// `V(weight)` over one sl2 component, trivial over the others.
    Canonical { component: String, weight: u32 },
    /// Outer tensor product; unlisted components get weight 0.
    Tensor { weights: BTreeMap<String, u32> },
    /// Right-action matrices per component; unlisted components act as zero.
    Explicit {
        dim: usize,
        actions: BTreeMap<String, Vec<Vec<Vec<Entry>>>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub components: Vec<ComponentSpec>,
    #[serde(default)]
    pub modules: Vec<ModuleSpec>,
    #[serde(default)]
    pub irreducible_over: Vec<String>,
}

fn matrix(rows: &[Vec<Entry>], dim: usize) -> Result<Matrix, CliError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(CliError::Format(format!(
            "action matrices must be {dim}x{dim}"
        )));
    }
    let data = rows
        .iter()
        .flatten()
        .map(Entry::value)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_data(dim, dim, data)?)
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Format(e.to_string()))
    }

    pub fn components(&self) -> Result<Vec<Component>, CliError> {
        self.components
            .iter()
            .map(|c| match (&c.kind, &c.table) {
                (ComponentKindSpec::Sl2, None) => Ok(Component::sl2(c.label.clone())),
                (ComponentKindSpec::Simple, Some(t)) => Ok(Component::simple(
                    c.label.clone(),
                    crate::format::table_from_block(&t.basis, &t.brackets)?,
                )),
                (ComponentKindSpec::Sl2, Some(_)) => Err(CliError::Format(format!(
                    "sl2 component `{}` takes no table",
                    c.label
                ))),
                (ComponentKindSpec::Simple, None) => Err(CliError::Format(format!(
                    "simple component `{}` needs a table",
                    c.label
                ))),
            })
            .collect()
    }

    pub fn to_spec(&self) -> Result<SemisimpleSpec, CliError> {
        let comps = self.components()?;
        let index_of = |label: &str| {
            comps
                .iter()
                .position(|c| c.label == label)
                .ok_or_else(|| CliError::Format(format!("unknown component `{label}`")))
        };
        let mut modules = Vec::new();
        for m in &self.modules {
            let module = match m {
                ModuleSpec::Canonical { component, weight } => {
                    let p = index_of(component)?;
                    canonical_module(*weight).lift(&comps, p)?
                }
                ModuleSpec::Tensor { weights } => {
                    for label in weights.keys() {
                        index_of(label)?;
                    }
                    let w: Vec<u32> = comps
                        .iter()
                        .map(|c| weights.get(&c.label).copied().unwrap_or(0))
                        .collect();
                    tensor_module(&comps, &w)?
                }
                ModuleSpec::Explicit { dim, actions } => {
                    for label in actions.keys() {
                        index_of(label)?;
                    }
                    let mut list = Vec::new();
                    for c in &comps {
                        let matrices = match actions.get(&c.label) {
                            Some(ms) => {
                                if ms.len() != c.dim() {
                                    return Err(CliError::Format(format!(
                                        "component `{}` needs {} action matrices",
                                        c.label,
                                        c.dim()
                                    )));
                                }
                                ms.iter()
                                    .map(|rows| matrix(rows, *dim))
                                    .collect::<Result<Vec<_>, _>>()?
                            }
                            None => vec![Matrix::zeros(*dim, *dim); c.dim()],
                        };
                        list.push(ComponentAction {
                            component: c.clone(),
                            matrices,
                        });
                    }
                    ModuleAction::new(*dim, list)?
                }
            };
            modules.push(module);
        }
        let mut spec = SemisimpleSpec::new(comps, modules);
        for label in &self.irreducible_over {
            spec = spec.declare_irreducible(label.clone());
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<Built, CliError> {
        Ok(build_semisimple(&self.to_spec()?)?)
    }
}
