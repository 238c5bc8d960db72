//! JSON file formats. Rationals travel as canonical `"p/q"` strings and
//! every writer emits entries in sorted order, so output is byte-stable.

use std::collections::BTreeMap;
use std::collections::btree_map::Entry;

use serde::{Deserialize, Serialize};

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::poisson::PolyFunction;
use crate::rational::{format, parse_canonical, Rational};
use crate::spectral::CirculantClassification;
use crate::wtensor::WTensor;

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn bound(what: &str, index: usize, bound: usize) -> Result<()> {
    if index >= bound {
        return Err(Error::Parse(format!("{what} index {index} out of range (bound {bound})")));
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffJson {
    e: usize,
    value: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketJson {
    a: usize,
    b: usize,
    coeffs: Vec<CoeffJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstantsJson {
    dim: usize,
    #[serde(default)]
    name: String,
    brackets: Vec<BracketJson>,
}

/// Reads structure constants. Requires `a < b`, indices in range, canonical
/// values and no repeated `(a, b)` or `(a, b, e)`.
pub fn structure_constants_from_json(s: &str) -> Result<StructureConstants> {
    let raw: ConstantsJson = serde_json::from_str(s).map_err(parse_err)?;
    if raw.dim == 0 {
        return Err(Error::Parse("dim must be at least 1".into()));
    }
    let mut c = StructureConstants::new(raw.dim)?;
    let mut seen = std::collections::BTreeSet::new();
    for br in &raw.brackets {
        bound("bracket", br.b, raw.dim)?;
        if br.a >= br.b {
            return Err(Error::Parse(format!("bracket ({}, {}) needs a < b", br.a, br.b)));
        }
        if !seen.insert((br.a, br.b)) {
            return Err(Error::Parse(format!("bracket ({}, {}) listed twice", br.a, br.b)));
        }
        let mut es = std::collections::BTreeSet::new();
        for co in &br.coeffs {
            bound("output", co.e, raw.dim)?;
            if !es.insert(co.e) {
                return Err(Error::Parse(format!("coefficient ({}, {}, {}) listed twice", br.a, br.b, co.e)));
            }
            c.set_coeff(br.a, br.b, co.e, parse_canonical(&co.value)?)?;
        }
    }
    c.set_name((!raw.name.is_empty()).then_some(raw.name));
    Ok(c)
}

pub fn structure_constants_to_json(c: &StructureConstants) -> String {
    let brackets = c
        .entries()
        .map(|((a, b), v)| BracketJson {
            a,
            b,
            coeffs: v
                .iter()
                .map(|(e, x)| CoeffJson {
                    e: *e,
                    value: format(x),
                })
                .collect(),
        })
        .collect();
    to_json(&ConstantsJson {
        dim: c.dim(),
        name: c.name().unwrap_or_default().to_string(),
        brackets,
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WEntryJson {
    i: usize,
    j: usize,
    k: usize,
    value: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WJson {
    n: usize,
    entries: Vec<WEntryJson>,
}

/// Reads a W-tensor. Omitted entries are zero and nothing is mirrored
/// automatically; when both `(i,j,k)` and `(j,i,k)` are listed they must agree.
pub fn wtensor_from_json(s: &str) -> Result<WTensor> {
    let raw: WJson = serde_json::from_str(s).map_err(parse_err)?;
    if raw.n == 0 {
        return Err(Error::Parse("n must be at least 1".into()));
    }
    let mut vals: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
    for e in &raw.entries {
        for x in [e.i, e.j, e.k] {
            bound("tensor", x, raw.n)?;
        }
        let v = parse_canonical(&e.value)?;
        match vals.entry((e.i, e.j, e.k)) {
            Entry::Occupied(_) => {
                return Err(Error::Parse(format!("entry ({}, {}, {}) listed twice", e.i, e.j, e.k)));
            }
            Entry::Vacant(slot) => {
                slot.insert(v);
            }
        }
    }
    let mut w = WTensor::zeros(raw.n)?;
    for (&(i, j, k), v) in &vals {
        if let Some(partner) = vals.get(&(j, i, k)) {
            if partner != v {
                return Err(Error::Parse(format!(
                    "entries ({i}, {j}, {k}) and ({j}, {i}, {k}) disagree"
                )));
            }
        }
        w.set(i, j, k, v.clone())?;
    }
    Ok(w)
}

/// Every nonzero entry, mirrors included, sorted by `(i, j, k)`.
pub fn wtensor_to_json(w: &WTensor) -> String {
    let entries = w
        .entries()
        .map(|((i, j, k), v)| WEntryJson {
            i,
            j,
            k,
            value: format(v),
        })
        .collect();
    to_json(&WJson { n: w.n(), entries })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    exps: Vec<u32>,
    value: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    dim: usize,
    terms: Vec<TermJson>,
}

pub fn poly_from_json(s: &str) -> Result<PolyFunction> {
    let raw: PolyJson = serde_json::from_str(s).map_err(parse_err)?;
    let mut seen = std::collections::BTreeSet::new();
    let mut terms = Vec::with_capacity(raw.terms.len());
    for t in raw.terms {
        if t.exps.len() != raw.dim {
            return Err(Error::Parse(format!(
                "exponent vector has length {}, expected {}",
                t.exps.len(),
                raw.dim
            )));
        }
        if !seen.insert(t.exps.clone()) {
            return Err(Error::Parse(format!("monomial {:?} listed twice", t.exps)));
        }
        terms.push((t.exps, parse_canonical(&t.value)?));
    }
    PolyFunction::from_terms(raw.dim, terms)
}

pub fn poly_to_json(f: &PolyFunction) -> String {
    let terms = f
        .terms()
        .map(|(e, c)| TermJson {
            exps: e.clone(),
            value: format(c),
        })
        .collect();
    to_json(&PolyJson { dim: f.dim(), terms })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

/// Machine-readable summary of a circulant classification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumReport {
    pub n: usize,
    pub mu: Vec<ComplexJson>,
    pub zero_count: usize,
    pub m_nonabelian: usize,
}

impl SpectrumReport {
    /// Components smaller than `tolerance` in magnitude are written as `0.0`
    /// so rounding noise and signed zeros never reach the output.
    pub fn new(c: &CirculantClassification, tolerance: f64) -> Self {
        let snap = |x: f64| if x.abs() < tolerance { 0.0 } else { x };
        Self {
            n: c.spectrum.n,
            mu: c
                .spectrum
                .values
                .iter()
                .map(|z| ComplexJson {
                    re: snap(z.re),
                    im: snap(z.im),
                })
                .collect(),
            zero_count: c.spectrum.exact_zero_count,
            m_nonabelian: c.m_nonabelian,
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(parse_err)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin_algebra;
    use crate::rational::{frac, int};
    use crate::spectral::classify_circulant;
    use crate::wtensor::{circulant_w, leibnitz_deform, AlphaVector};

    #[test]
    fn constants_round_trip() {
        for name in ["sl2", "so3", "heisenberg3", "gl(3)", "so(4)", "abelian(2)"] {
            let c = builtin_algebra(name).unwrap();
            let s = structure_constants_to_json(&c);
            let back = structure_constants_from_json(&s).unwrap();
            assert_eq!(back.entries().collect::<Vec<_>>(), c.entries().collect::<Vec<_>>());
            assert_eq!(back.name(), c.name());
            assert_eq!(structure_constants_to_json(&back), s);
        }
    }

    #[test]
    fn constants_rejections() {
        let ok = r#"{"dim":3,"name":"h","brackets":[{"a":0,"b":1,"coeffs":[{"e":2,"value":"1"}]}]}"#;
        assert!(structure_constants_from_json(ok).is_ok());
        for bad in [
            r#"{"dim":3,"name":"h","brackets":[{"a":1,"b":0,"coeffs":[{"e":2,"value":"1"}]}]}"#,
            r#"{"dim":3,"name":"h","brackets":[{"a":0,"b":3,"coeffs":[]}]}"#,
            r#"{"dim":3,"name":"h","brackets":[{"a":0,"b":1,"coeffs":[{"e":2,"value":"2/4"}]}]}"#,
            r#"{"dim":3,"name":"h","brackets":[{"a":0,"b":1,"coeffs":[{"e":2,"value":"1"},{"e":2,"value":"1"}]}]}"#,
            r#"{"dim":3,"name":"h","brackets":[{"a":0,"b":1,"coeffs":[]},{"a":0,"b":1,"coeffs":[]}]}"#,
            r#"{"dim":3,"name":"h","brackets":[],"extra":1}"#,
            r#"{"dim":0,"name":"h","brackets":[]}"#,
            r#"{"dim":3,"name":"h","brackets":[{"a":0,"b":1,"coeffs":[{"e":2,"value":"1.5"}]}]}"#,
            r#"{"dim":3"#,
        ] {
            assert!(matches!(structure_constants_from_json(bad), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn wtensor_round_trip_and_rules() {
        let w = leibnitz_deform(3, &frac(7, 3)).unwrap();
        let s = wtensor_to_json(&w);
        assert_eq!(wtensor_from_json(&s).unwrap(), w);

        let one_sided = r#"{"n":2,"entries":[{"i":0,"j":1,"k":0,"value":"1"}]}"#;
        let w = wtensor_from_json(one_sided).unwrap();
        assert!(!w.is_symmetric());
        assert_eq!(w.get(1, 0, 0), int(0));

        let agree = r#"{"n":2,"entries":[{"i":0,"j":1,"k":0,"value":"1"},{"i":1,"j":0,"k":0,"value":"1"}]}"#;
        assert!(wtensor_from_json(agree).unwrap().is_symmetric());
        let clash = r#"{"n":2,"entries":[{"i":0,"j":1,"k":0,"value":"1"},{"i":1,"j":0,"k":0,"value":"2"}]}"#;
        assert!(wtensor_from_json(clash).is_err());
        let dup = r#"{"n":2,"entries":[{"i":0,"j":0,"k":0,"value":"1"},{"i":0,"j":0,"k":0,"value":"1"}]}"#;
        assert!(wtensor_from_json(dup).is_err());
        let oob = r#"{"n":2,"entries":[{"i":0,"j":2,"k":0,"value":"1"}]}"#;
        assert!(wtensor_from_json(oob).is_err());
        let zero_n = r#"{"n":0,"entries":[]}"#;
        assert!(wtensor_from_json(zero_n).is_err());
        // explicit zeros are accepted and not stored
        let z = r#"{"n":1,"entries":[{"i":0,"j":0,"k":0,"value":"0"}]}"#;
        assert!(wtensor_from_json(z).unwrap().is_zero());
    }

    #[test]
    fn wtensor_output_is_sorted_and_mirrored() {
        let w = circulant_w(&AlphaVector::from_i64(&[0, 1]).unwrap());
        let s = wtensor_to_json(&w);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        let keys: Vec<(u64, u64, u64)> = v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["k"].as_u64().unwrap()))
            .collect();
        assert_eq!(keys, vec![(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]);
    }

    #[test]
    fn poly_round_trip() {
        let s = r#"{"dim":3,"terms":[{"exps":[2,0,0],"value":"1"},{"exps":[0,1,1],"value":"4"}]}"#;
        let f = poly_from_json(s).unwrap();
        assert_eq!(poly_from_json(&poly_to_json(&f)).unwrap(), f);
        assert!(poly_from_json(r#"{"dim":3,"terms":[{"exps":[2,0],"value":"1"}]}"#).is_err());
        assert!(poly_from_json(r#"{"dim":1,"terms":[{"exps":[2],"value":"1"},{"exps":[2],"value":"3"}]}"#).is_err());
        assert!(poly_from_json(r#"{"dim":1,"terms":[{"exps":[-1],"value":"1"}]}"#).is_err());
    }

    #[test]
    fn spectrum_report_snaps_noise() {
        let c = classify_circulant(&AlphaVector::from_i64(&[1, 1, 1]).unwrap(), 1e-9).unwrap();
        let r = SpectrumReport::new(&c, 1e-9);
        assert_eq!(r.zero_count, 2);
        assert_eq!(r.m_nonabelian, 1);
        assert_eq!(r.mu[1], ComplexJson { re: 0.0, im: 0.0 });
        assert_eq!(r.mu[0].re, 3.0);
        assert!(r.mu.iter().all(|z| !z.re.is_sign_negative() || z.re != 0.0));
        assert_eq!(SpectrumReport::from_json(&r.to_json()).unwrap(), r);
    }
}
