use std::collections::BTreeMap;

use levikit_core::almost::{AlmostCRFrame, AlmostComplex, PolyVectorField};
use levikit_core::embedded::{make_tube, EmbeddedCR};
use levikit_core::exact::{parse_rational, GaussianRational, HermitianMatrix, Rational};
use levikit_core::homogeneous::CRAlgebra;
use levikit_core::parser::{AlmostStructureInput, HomogeneousInput, Manifest, Payload};
use levikit_core::poly::PointC;
use levikit_core::{Error, Result};
use num_traits::{One, Zero};
use serde_json::{json, Value};

pub const POINTWISE_WARNING: &str = "pointwise integrability check only";

fn invalid(field: &str, message: impl Into<String>) -> Error {
    Error::ValidationError {
        field: field.into(),
        message: message.into(),
    }
}

fn flag_list<T>(text: &str, flag: &str, parse: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    text.split(',')
        .map(|s| parse(s.trim()).map_err(|e| invalid(flag, format!("`{s}`: {e}"))))
        .collect()
}

pub fn matrix_strings(h: &HermitianMatrix) -> Vec<Vec<String>> {
    (0..h.n())
        .map(|r| h.matrix().row(r).iter().map(ToString::to_string).collect())
        .collect()
}

/// Levi data of an embedded or tube manifest at one point.
pub fn analyze(manifest: &Manifest, point: Option<&str>, conormal: Option<&str>) -> Result<(Value, Vec<String>)> {
    let (cr, m_point, m_conormal) = match &manifest.payload {
        Payload::Embedded(e) => (
            EmbeddedCR::new(manifest.ambient_dim, e.rho.clone())?,
            e.point.clone(),
            e.conormal.clone(),
        ),
        Payload::Tube(t) => (make_tube(&t.base)?, t.point.clone(), t.conormal.clone()),
        _ => return Err(invalid("kind", "analyze expects an embedded or tube manifest")),
    };
    let mut warnings = Vec::new();
    let point = match point {
        Some(text) => {
            let coords = flag_list(text, "--point", |s| s.parse::<GaussianRational>())?;
            if coords.len() != cr.m() {
                return Err(invalid("--point", format!("expected {} coordinates", cr.m())));
            }
            PointC::new(coords)
        }
        None => m_point.ok_or_else(|| invalid("point", "no point in the manifest and no --point given"))?,
    };
    let xi = match conormal {
        Some(text) => {
            let xi = flag_list(text, "--conormal", parse_rational)?;
            if xi.len() != cr.ell() {
                return Err(invalid("--conormal", format!("expected {} coefficients", cr.ell())));
            }
            xi
        }
        None => m_conormal.unwrap_or_else(|| {
            warnings.push("conormal defaulted to (1, ..., 1)".into());
            vec![Rational::one(); cr.ell()]
        }),
    };
    let pd = cr.analyze_point(&point)?;
    let report = cr.report(&pd, &xi)?;
    let mut value = serde_json::to_value(report).expect("report serializes");
    value["point"] = json!(point.coords.iter().map(ToString::to_string).collect::<Vec<_>>());
    value["conormal"] = json!(xi.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok((value, warnings))
}

/// Integrability verdicts for an almost complex structure or an almost CR frame.
pub fn nijenhuis(manifest: &Manifest) -> Result<(Value, Vec<String>)> {
    let Payload::AlmostStructure(input) = &manifest.payload else {
        return Err(invalid("kind", "nijenhuis expects an almost_structure manifest"));
    };
    let d = manifest.ambient_dim;
    let mut warnings = Vec::new();
    let integrable = match &input.j {
        Some(j) => Some(AlmostComplex::new(j.clone())?.is_integrable()),
        None => None,
    };
    let (partial, levi_values) = match frame(input, d)? {
        Some((f, base)) => {
            let verdict = if input.sample_points.is_empty() {
                f.partial_integrability()?
            } else {
                warnings.push(POINTWISE_WARNING.into());
                f.partial_integrability_at(&input.sample_points)?
            };
            let k = f.theta().len();
            let two_n = f.frame().len();
            let mut values = Vec::with_capacity(k);
            for a in 0..k {
                let xi: Vec<Rational> = (0..k).map(|b| if a == b { Rational::one() } else { Rational::zero() }).collect();
                let mut row = Vec::with_capacity(two_n);
                for i in 0..two_n {
                    let c: Vec<Rational> =
                        (0..two_n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect();
                    row.push(f.abstract_levi(&base, &xi, &c)?.to_string());
                }
                values.push(row);
            }
            (Some(verdict), Some(values))
        }
        None => (None, None),
    };
    let value = json!({
        "integrable": integrable,
        "cr2": partial.map(|p| p.cr2),
        "cr3": partial.map(|p| p.cr3),
        "levi_values": levi_values,
    });
    Ok((value, warnings))
}

fn frame(input: &AlmostStructureInput, d: usize) -> Result<Option<(AlmostCRFrame, Vec<Rational>)>> {
    let (Some(rows), Some(jmat)) = (&input.frame, &input.jmat) else {
        return Ok(None);
    };
    let fields = rows
        .iter()
        .map(|r| PolyVectorField::new(r.clone()))
        .collect::<Result<Vec<_>>>()?;
    let base = input
        .sample_points
        .first()
        .cloned()
        .unwrap_or_else(|| vec![Rational::zero(); d]);
    let theta = input.theta.clone().unwrap_or_default();
    let f = AlmostCRFrame::new(fields, theta, jmat.clone(), &base)?;
    Ok(Some((f, base)))
}

/// Parses `name=value` pairs; later duplicates are rejected.
pub fn specialization_values(pairs: &[String]) -> Result<BTreeMap<String, GaussianRational>> {
    let mut out = BTreeMap::new();
    for pair in pairs {
        let (name, value) = pair
            .split_once('=')
            .ok_or_else(|| invalid("--specialize", format!("`{pair}` is not name=value")))?;
        let v: GaussianRational = value
            .trim()
            .parse()
            .map_err(|e| invalid("--specialize", format!("`{pair}`: {e}")))?;
        if out.insert(name.trim().to_string(), v).is_some() {
            return Err(invalid("--specialize", format!("`{name}` given twice")));
        }
    }
    Ok(out)
}

/// CR type and parametrised Levi form of a homogeneous manifest, plus requested specializations.
pub fn homogeneous(manifest: &Manifest, specialize: &[String]) -> Result<(Value, Vec<String>)> {
    let Payload::Homogeneous(input) = &manifest.payload else {
        return Err(invalid("kind", "homogeneous expects a homogeneous manifest"));
    };
    homogeneous_input(input, specialize)
}

pub fn homogeneous_input(input: &HomogeneousInput, specialize: &[String]) -> Result<(Value, Vec<String>)> {
    let values = specialization_values(specialize)?;
    let algebra = CRAlgebra::from_input(input)?;
    let cr_type = algebra.cr_type()?;
    let levi = algebra.param_levi_for(input)?;
    let mut warnings = Vec::new();
    if input.quotient_labels.is_none() {
        warnings.push("parameters are dual to a default real basis of the quotient".into());
    }
    let mut value = serde_json::to_value(levi.report(cr_type)).expect("report serializes");
    value["q_dim"] = json!(algebra.q_basis().len());
    value["q_cap_sigma_q_dim"] = json!(algebra.q_cap_sigma_q().len());
    let mut specializations = Vec::new();
    if !values.is_empty() {
        let h = levi.specialize(&values)?;
        let sig = h.inertia();
        specializations.push(json!({
            "values": values.iter().map(|(k, v)| (k.clone(), v.to_string())).collect::<BTreeMap<_, _>>(),
            "levi_matrix": matrix_strings(&h),
            "signature": sig.as_array(),
        }));
    }
    value["specializations"] = json!(specializations);
    Ok((value, warnings))
}
