//! Wire formats. Every document is rendered through `serde_json::Value`, whose
//! maps keep keys sorted, so equal inputs give byte-identical output.

use std::collections::BTreeMap;

use polyloop_core::homology::BettiTable;
use polyloop_core::{DecompResult, GluingSpec, SimplicialComplex, SphereMultiset, TruncSeries};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Renders `value` as one line of JSON with sorted keys.
pub fn render<T: Serialize>(value: &T) -> CliResult<String> {
    Ok(serde_json::to_string(&serde_json::to_value(value)?)?)
}

/// `{"facets": [[...], ...], "m": n}` with maximal faces in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(k: &SimplicialComplex) -> Self {
        ComplexJson { m: k.ground_size(), facets: k.facets() }
    }
}

impl ComplexJson {
    pub fn to_complex(&self) -> CliResult<SimplicialComplex> {
        Ok(SimplicialComplex::from_facets(self.m, &self.facets)?)
    }
}

/// A gluing specification. `sub_b` defaults to `sub_a`, `psi` to the
/// identity and `phi` to identity relabellings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GlueSpecJson {
    pub base: ComplexJson,
    pub sub_a: Vec<usize>,
    #[serde(default)]
    pub sub_b: Option<Vec<usize>>,
    #[serde(default)]
    pub psi: Option<Vec<usize>>,
    pub copies: usize,
    #[serde(default)]
    pub phi: Option<Vec<Vec<usize>>>,
}

impl GlueSpecJson {
    pub fn to_spec(&self) -> CliResult<GluingSpec> {
        let base = self.base.to_complex()?;
        let psi = self.psi.clone().unwrap_or_else(|| (0..base.ground_size()).collect());
        let sub_b = self.sub_b.as_deref().unwrap_or(&self.sub_a);
        let spec = GluingSpec::new(base, &self.sub_a, sub_b, psi, self.copies)?;
        Ok(match &self.phi {
            Some(phi) => spec.with_phi(phi.clone())?,
            None => spec,
        })
    }
}

/// `{"betti": {"0": 1, "3": 2, ...}, "m": m}`; zero ranks are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub betti: BTreeMap<usize, u64>,
    pub m: usize,
}

impl From<&BettiTable> for BettiJson {
    fn from(t: &BettiTable) -> Self {
        BettiJson {
            betti: t.ranks().iter().filter(|(_, &r)| r > 0).map(|(&d, &r)| (d, r)).collect(),
            m: t.m(),
        }
    }
}

/// `{"N": 16, "coeffs": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub coeffs: Vec<i128>,
}

impl From<&TruncSeries> for SeriesJson {
    fn from(s: &TruncSeries) -> Self {
        SeriesJson { n: s.degree(), coeffs: s.coeffs().to_vec() }
    }
}

pub fn sphere_counts(s: &SphereMultiset) -> BTreeMap<u32, u64> {
    s.counts().clone()
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorJson {
    pub name: String,
    pub term: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub m: usize,
    pub coeffs: Vec<i128>,
}

/// A decomposition. Family parameters sit at the top level next to the
/// fixed keys; `sphere_ceilings` lists the tables that were cut.
#[derive(Debug, Clone, Serialize)]
pub struct DecompJson {
    pub family: String,
    #[serde(flatten)]
    pub params: BTreeMap<String, u64>,
    pub total: String,
    pub factors: Vec<FactorJson>,
    pub spheres: BTreeMap<String, BTreeMap<u32, u64>>,
    pub sphere_ceilings: BTreeMap<String, u32>,
    pub series: Option<SeriesJson>,
    pub circle_witness: Option<WitnessJson>,
    pub provenance: Vec<String>,
}

impl From<&DecompResult> for DecompJson {
    fn from(r: &DecompResult) -> Self {
        DecompJson {
            family: r.family.clone(),
            params: r.params.clone(),
            total: r.total.to_string(),
            factors: r
                .factors
                .iter()
                .map(|(name, e)| FactorJson { name: name.clone(), term: e.to_string() })
                .collect(),
            spheres: r.spheres.iter().map(|(k, s)| (k.clone(), sphere_counts(s))).collect(),
            sphere_ceilings: r.spheres.iter().filter_map(|(k, s)| Some((k.clone(), s.ceiling()?))).collect(),
            series: r.series.as_ref().map(SeriesJson::from),
            circle_witness: r
                .circle_witness
                .as_ref()
                .map(|(m, s)| WitnessJson { m: *m, coeffs: s.coeffs().to_vec() }),
            provenance: r.provenance.iter().map(|s| s.name().to_string()).collect(),
        }
    }
}

pub fn parse_complex(text: &str) -> CliResult<SimplicialComplex> {
    serde_json::from_str::<ComplexJson>(text)
        .map_err(|e| CliError::Invalid(format!("complex file: {e}")))?
        .to_complex()
}

pub fn parse_glue_spec(text: &str) -> CliResult<GluingSpec> {
    serde_json::from_str::<GlueSpecJson>(text)
        .map_err(|e| CliError::Invalid(format!("gluing spec file: {e}")))?
        .to_spec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyloop_core::complex::path_graph;

    #[test]
    fn complex_round_trip() {
        let k = path_graph(4).unwrap();
        let text = render(&ComplexJson::from(&k)).unwrap();
        assert_eq!(text, r#"{"facets":[[0,1],[1,2],[2,3],[3,4]],"m":5}"#);
        assert_eq!(parse_complex(&text).unwrap(), k);
    }

    #[test]
    fn glue_spec_defaults() {
        let text = r#"{"base":{"m":3,"facets":[[0,1],[1,2]]},"sub_a":[0,2],"copies":3}"#;
        let spec = parse_glue_spec(text).unwrap();
        assert_eq!(spec.copies(), 3);
        assert_eq!(spec.psi(), &[0, 1, 2]);
        assert!(parse_glue_spec(r#"{"base":{"m":2,"facets":[[0,1]]},"sub_a":[5],"copies":2}"#).is_err());
    }
}
