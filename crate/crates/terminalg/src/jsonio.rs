//! JSON wire formats: algebras, cocycles, extension specs, degeneration
//! witnesses, and the catalog dump. Scalars travel as canonical strings like
//! `"1/2-3i"`; entries use 0-based indices with zeros omitted and canonical
//! `(i, j, k)` ordering on write (loose ordering tolerated on read).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::catalog::{self, format_instance};
use crate::cohomology::Cocycle;
use crate::degeneration::{ParametricBasis, Source};
use crate::error::Error;
use crate::exactnum::ratfun::parse_ratfun;
use crate::exactnum::{GaussRat, QMatrix};
use crate::extensions::ExtensionSpec;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    #[serde(default)]
    pub label: String,
    pub entries: Vec<(usize, usize, usize, String)>,
}

impl AlgebraJson {
    pub fn from_algebra(a: &Algebra) -> Self {
        AlgebraJson {
            dim: a.dim(),
            label: a.label().to_string(),
            entries: a
                .entries()
                .into_iter()
                .map(|(i, j, k, v)| (i, j, k, v.format()))
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra, Error> {
        let mut entries = Vec::new();
        for (i, j, k, s) in &self.entries {
            if *i >= self.dim || *j >= self.dim || *k >= self.dim {
                return Err(Error::Parse(format!(
                    "entry index ({i},{j},{k}) out of range for dim {}",
                    self.dim
                )));
            }
            entries.push((*i, *j, *k, GaussRat::parse(s)?));
        }
        Ok(Algebra::from_entries(
            self.dim,
            self.label.clone(),
            &entries,
        ))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CocycleJson {
    pub dim: usize,
    pub coeffs: Vec<Vec<String>>,
}

impl CocycleJson {
    pub fn from_cocycle(c: &Cocycle) -> Self {
        let n = c.dim();
        CocycleJson {
            dim: n,
            coeffs: (0..n)
                .map(|i| (0..n).map(|j| c.coeffs().get(i, j).format()).collect())
                .collect(),
        }
    }

    pub fn to_cocycle(&self) -> Result<Cocycle, Error> {
        if self.coeffs.len() != self.dim || self.coeffs.iter().any(|r| r.len() != self.dim) {
            return Err(Error::Parse("cocycle coefficient grid is ragged".into()));
        }
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                m.set(i, j, GaussRat::parse(s)?);
            }
        }
        Ok(Cocycle::from_matrix(m))
    }
}

/// An algebra referenced either by catalog instance name (`"T3_01(2)"`) or
/// inline.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Inline(AlgebraJson),
}

impl AlgebraRef {
    pub fn resolve(&self) -> Result<Algebra, Error> {
        match self {
            AlgebraRef::Name(s) => {
                let (name, params) = catalog::parse_instance(s)?;
                catalog::catalog().build(&name, &params)
            }
            AlgebraRef::Inline(a) => a.to_algebra(),
        }
    }
}

/// A cocycle given either as a nabla string against the base dictionary
/// (`"n2+a*n6+n7"`) or as an explicit coefficient grid.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CocycleRef {
    Nabla(String),
    Inline(CocycleJson),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtensionSpecJson {
    pub base: AlgebraRef,
    pub cocycles: Vec<CocycleRef>,
    /// Values substituted for identifiers appearing in nabla strings.
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

impl ExtensionSpecJson {
    pub fn resolve(&self) -> Result<ExtensionSpec, Error> {
        let base = self.base.resolve()?;
        // Nabla strings resolve only against named bases.
        let (base_name, base_params) = match &self.base {
            AlgebraRef::Name(s) => {
                let (n, p) = catalog::parse_instance(s)?;
                (Some(n), p)
            }
            AlgebraRef::Inline(_) => (None, Vec::new()),
        };
        let mut params = BTreeMap::new();
        for (k, v) in &self.params {
            params.insert(k.clone(), GaussRat::parse(v)?);
        }
        let mut thetas = Vec::new();
        for c in &self.cocycles {
            match c {
                CocycleRef::Inline(j) => thetas.push(j.to_cocycle()?),
                CocycleRef::Nabla(expr) => {
                    let name = base_name.as_ref().ok_or_else(|| {
                        Error::Other(
                            "nabla strings need a catalog base name, not an inline algebra".into(),
                        )
                    })?;
                    let lambda = base_params.first();
                    thetas.push(catalog::resolve_nabla_string(name, lambda, expr, &params)?);
                }
            }
        }
        ExtensionSpec::new(base, thetas)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessJson {
    /// Source: a catalog family name (parameters come from `index`) or a
    /// concrete instance name like `"T3_01(2)"`.
    pub source: String,
    pub target: AlgebraRef,
    /// Row `i` holds the coordinates of `E_i` as Laurent strings.
    pub basis: Vec<Vec<String>>,
    /// Parametric index: rational-function strings per parameter name.
    #[serde(default)]
    pub index: BTreeMap<String, String>,
}

impl WitnessJson {
    pub fn resolve(&self) -> Result<(Source, Algebra, ParametricBasis), Error> {
        let target = self.target.resolve()?;
        let mut rows = Vec::new();
        for r in &self.basis {
            let mut row = Vec::new();
            for s in r {
                row.push(parse_ratfun(s)?);
            }
            rows.push(row);
        }
        let mut basis = ParametricBasis::new(rows)?;
        let (name, inline_params) = catalog::parse_instance(&self.source)?;
        let mut index = BTreeMap::new();
        for (k, v) in &self.index {
            index.insert(k.clone(), parse_ratfun(v)?);
        }
        // A concrete instance pins its parameters as constant index entries.
        let entry = catalog::catalog().get(&name)?;
        if !inline_params.is_empty() {
            for (pname, val) in entry.params.iter().zip(&inline_params) {
                index.insert(
                    (*pname).to_string(),
                    crate::exactnum::RatFun::constant(val.clone()),
                );
            }
        }
        if !index.is_empty() {
            basis = basis.with_index(index);
        }
        let source = Source::Family { name };
        Ok((source, target, basis))
    }
}

/// One dumped catalog entry: metadata plus the algebra at default samples.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogDumpEntry {
    pub name: String,
    pub dim: usize,
    pub params: Vec<String>,
    pub needs_theta: bool,
    pub excluded: Option<String>,
    pub origin: String,
    pub unresolved: bool,
    pub samples: Vec<CatalogDumpSample>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogDumpSample {
    pub params: BTreeMap<String, String>,
    pub algebra: AlgebraJson,
}

/// The whole catalog at the default deterministic samples.
pub fn dump_catalog() -> Vec<CatalogDumpEntry> {
    let cat = catalog::catalog();
    cat.entries()
        .iter()
        .map(|entry| {
            let sample_points = if entry.unresolved {
                Vec::new()
            } else {
                cat.default_samples(entry)
            };
            let samples = sample_points
                .into_iter()
                .map(|sample| {
                    let mut map = BTreeMap::new();
                    for (name, v) in entry.params.iter().zip(&sample) {
                        map.insert((*name).to_string(), v.format());
                    }
                    let algebra = cat
                        .build(entry.name, &sample)
                        .expect("default samples respect exclusions");
                    CatalogDumpSample {
                        params: map,
                        algebra: AlgebraJson::from_algebra(&algebra),
                    }
                })
                .collect();
            CatalogDumpEntry {
                name: entry.name.to_string(),
                dim: entry.dim,
                params: entry.params.iter().map(|s| s.to_string()).collect(),
                needs_theta: entry.needs_theta,
                excluded: entry.exclusion.map(|(c, _)| c.to_string()),
                origin: entry.origin.to_string(),
                unresolved: entry.unresolved,
                samples,
            }
        })
        .collect()
}

/// Human-readable multiplication table lines, e.g. `e1e1 = e2 + 2e3`.
pub fn describe_algebra(a: &Algebra) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let mut terms = Vec::new();
            for k in 0..a.dim() {
                let c = a.c(i, j, k);
                if c.is_zero() {
                    continue;
                }
                let coeff = if c.is_one() {
                    String::new()
                } else {
                    let s = c.format();
                    if s[1..].contains('+') || s[1..].contains('-') {
                        format!("({s})")
                    } else {
                        s
                    }
                };
                terms.push(format!("{}e{}", coeff, k + 1));
            }
            if !terms.is_empty() {
                out.push(format!("e{}e{} = {}", i + 1, j + 1, terms.join(" + ")));
            }
        }
    }
    out
}

/// Labels an algebra instance like the catalog does.
pub fn instance_label(name: &str, params: &[GaussRat]) -> String {
    format_instance(name, params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_roundtrip() {
        let cat = catalog::catalog();
        let a = cat.build("D4_22", &[GaussRat::from_ratio(1, 2)]).unwrap();
        let j = AlgebraJson::from_algebra(&a);
        let text = serde_json::to_string(&j).unwrap();
        let back: AlgebraJson = serde_json::from_str(&text).unwrap();
        let b = back.to_algebra().unwrap();
        assert_eq!(a.entries(), b.entries());
        // Canonical ordering on write.
        let mut sorted = j.entries.clone();
        sorted.sort();
        assert_eq!(j.entries, sorted);
    }

    #[test]
    fn algebra_ref_by_name() {
        let r = AlgebraRef::Name("T3_01(2)".to_string());
        let a = r.resolve().unwrap();
        assert_eq!(*a.c(0, 1, 2), GaussRat::from_int(2));
        assert!(AlgebraRef::Name("bogus".into()).resolve().is_err());
    }

    #[test]
    fn extension_spec_json() {
        let text = r#"{
            "base": "T3*_01",
            "cocycles": ["n2+a*n6+n7"],
            "params": {"a": "2"}
        }"#;
        let spec: ExtensionSpecJson = serde_json::from_str(text).unwrap();
        let resolved = spec.resolve().unwrap();
        let ext = crate::extensions::central_extension(&resolved);
        // This is T4_07(2).
        let expected = catalog::catalog()
            .build("T4_07", &[GaussRat::from_int(2)])
            .unwrap();
        assert_eq!(ext.entries(), expected.entries());
    }

    #[test]
    fn witness_json_roundtrip() {
        let text = r#"{
            "source": "T3_01",
            "target": "T3*_01",
            "basis": [["t","0","0"],["0","t^2","0"],["0","0","1"]],
            "index": {"lambda": "2"}
        }"#;
        let w: WitnessJson = serde_json::from_str(text).unwrap();
        let (source, target, basis) = w.resolve().unwrap();
        assert!(
            crate::degeneration::verify_degeneration(&source, &target, &basis)
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn dump_has_all_entries() {
        let dump = dump_catalog();
        assert!(dump.iter().any(|e| e.name == "T4_44"));
        assert!(dump.iter().any(|e| e.name == "D4_40"));
        assert!(dump.len() > 90);
        let t403 = dump.iter().find(|e| e.name == "T4_03").unwrap();
        assert_eq!(t403.excluded.as_deref(), Some("alpha != 0"));
    }
}
