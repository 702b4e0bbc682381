//! The JSON algebra file: a sparse structure-constant table with optional
//! Levi layout and declared attributes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use leibniz_core::builders::{Built, LeviLayout};
use leibniz_core::{AlgebraTable, Scalar};
use num_traits::{One, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

pub const FORMAT_VERSION: &str = "1";

/// Map key `"i,j"` ordered numerically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairKey(pub usize, pub usize);

/// Map key `"k"` ordered numerically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexKey(pub usize);

fn parse_index(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0'))
    {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for PairKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.0, self.1)
    }
}

impl FromStr for PairKey {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (i, j) = s
            .split_once(',')
            .ok_or_else(|| format!("bracket key `{s}` is not `i,j`"))?;
        match (parse_index(i), parse_index(j)) {
            (Some(i), Some(j)) => Ok(PairKey(i, j)),
            _ => Err(format!("bracket key `{s}` is not `i,j`")),
        }
    }
}

impl FromStr for IndexKey {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_index(s)
            .map(IndexKey)
            .ok_or_else(|| format!("coefficient key `{s}` is not an index"))
    }
}

struct KeyVisitor<T>(std::marker::PhantomData<T>);

impl<T: FromStr<Err = String>> Visitor<'_> for KeyVisitor<T> {
    type Value = T;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an index string")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<T, E> {
        v.parse().map_err(E::custom)
    }
}

impl Serialize for PairKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PairKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_str(KeyVisitor(std::marker::PhantomData))
    }
}

impl Serialize for IndexKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for IndexKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_str(KeyVisitor(std::marker::PhantomData))
    }
}

pub type Brackets = BTreeMap<PairKey, BTreeMap<IndexKey, String>>;

/// Basis labels and sparse products, shared by algebra files and component
/// tables inside spec files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableBlock {
    pub basis: Vec<String>,
    pub brackets: Brackets,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayoutBlock {
    pub components: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub ideal: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Attributes {
    pub irreducible_over: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Brackets,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub layout: Option<LayoutBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attributes: Option<Attributes>,
}

/// Parses `p/q` or an integer exactly; no spaces, signs only on `p`.
pub fn parse_rational(s: &str) -> Result<Scalar, CliError> {
    let bad = || CliError::Format(format!("`{s}` is not a rational number"));
    let valid_int = |t: &str, signed: bool| {
        let digits = if signed {
            t.strip_prefix('-').unwrap_or(t)
        } else {
            t
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    let ok = match s.split_once('/') {
        Some((p, q)) => valid_int(p, true) && valid_int(q, false),
        None => valid_int(s, true),
    };
    if !ok {
        return Err(bad());
    }
    let value: Scalar = s.parse().map_err(|_| bad())?;
    Ok(value)
}

pub fn format_rational(x: &Scalar) -> String {
    x.to_string()
}

pub fn table_to_brackets(t: &AlgebraTable) -> Brackets {
    let n = t.dim();
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let terms = t.product_terms(i, j);
            if !terms.is_empty() {
                out.insert(
                    PairKey(i, j),
                    terms
                        .iter()
                        .map(|(k, c)| (IndexKey(*k), format_rational(c)))
                        .collect(),
                );
            }
        }
    }
    out
}

pub fn table_from_block(basis: &[String], brackets: &Brackets) -> Result<AlgebraTable, CliError> {
    let n = basis.len();
    let mut products = Vec::new();
    for (PairKey(i, j), coeffs) in brackets {
        if *i >= n || *j >= n {
            return Err(CliError::Format(format!(
                "bracket `{i},{j}` is out of range for dimension {n}"
            )));
        }
        let mut v = vec![Scalar::zero(); n];
        for (IndexKey(k), c) in coeffs {
            if *k >= n {
                return Err(CliError::Format(format!(
                    "coefficient index {k} is out of range for dimension {n}"
                )));
            }
            v[*k] = parse_rational(c)?;
        }
        products.push((*i, *j, v));
    }
    Ok(AlgebraTable::from_products(basis.to_vec(), products)?)
}

impl AlgebraFile {
    pub fn from_table(t: &AlgebraTable) -> Self {
        AlgebraFile {
            format_version: FORMAT_VERSION.to_string(),
            dim: t.dim(),
            basis: t.labels().to_vec(),
            brackets: table_to_brackets(t),
            layout: None,
            attributes: None,
        }
    }

    /// Layouts must be coordinate layouts: every component basis vector and
    /// the ideal are spanned by basis vectors of the table.
    pub fn from_built(b: &Built) -> Result<Self, CliError> {
        let mut file = Self::from_table(&b.table);
        let unit_index = |v: &Vec<Scalar>| -> Result<usize, CliError> {
            let nonzero: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
            match nonzero.as_slice() {
                [k] if v[*k].is_one() => Ok(*k),
                _ => Err(CliError::Unsupported(
                    "layout is not given by basis vectors".into(),
                )),
            }
        };
        let components = b
            .layout
            .components
            .iter()
            .map(|c| {
                c.basis
                    .iter()
                    .map(unit_index)
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let ideal = b.layout.ideal.pivots().to_vec();
        if b.layout
            .ideal
            .basis_vectors()
            .iter()
            .any(|v| unit_index(v).is_err())
        {
            return Err(CliError::Unsupported(
                "ideal is not spanned by basis vectors".into(),
            ));
        }
        file.layout = Some(LayoutBlock {
            components,
            labels: Some(
                b.layout
                    .components
                    .iter()
                    .map(|c| c.label().to_string())
                    .collect(),
            ),
            ideal,
        });
        if !b.layout.irreducible_over.is_empty() {
            file.attributes = Some(Attributes {
                irreducible_over: b.layout.irreducible_over.iter().cloned().collect(),
            });
        }
        Ok(file)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: AlgebraFile =
            serde_json::from_str(text).map_err(|e| CliError::Format(e.to_string()))?;
        if file.format_version != FORMAT_VERSION {
            return Err(CliError::Format(format!(
                "unsupported format_version `{}`",
                file.format_version
            )));
        }
        if file.basis.len() != file.dim {
            return Err(CliError::Format(format!(
                "dim is {} but {} basis labels are given",
                file.dim,
                file.basis.len()
            )));
        }
        Ok(file)
    }

    /// Pretty JSON with a trailing newline; keys are in a fixed order.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("algebra files serialize");
        s.push('\n');
        s
    }

    pub fn table(&self) -> Result<AlgebraTable, CliError> {
        table_from_block(&self.basis, &self.brackets)
    }

    pub fn irreducible_over(&self) -> BTreeSet<String> {
        self.attributes
            .as_ref()
            .map(|a| a.irreducible_over.iter().cloned().collect())
            .unwrap_or_default()
    }

    pub fn levi_layout(&self, table: &AlgebraTable) -> Result<Option<LeviLayout>, CliError> {
        let Some(l) = &self.layout else {
            return Ok(None);
        };
        Ok(Some(LeviLayout::from_indices(
            table,
            &l.components,
            l.labels.as_deref(),
            &l.ideal,
            self.irreducible_over(),
        )?))
    }
}
