//! JSON manifests describing the inputs of every analysis.

use std::path::Path;

use serde_json::{Map, Value};

use super::expr::{parse_real_poly, parse_wpoly};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, CMatrix, GaussianRational, Rational};
use crate::poly::{PointC, RealPoly, WPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ManifestKind {
    Embedded,
    Tube,
    Homogeneous,
    AlmostStructure,
}

impl ManifestKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ManifestKind::Embedded => "embedded",
            ManifestKind::Tube => "tube",
            ManifestKind::Homogeneous => "homogeneous",
            ManifestKind::AlmostStructure => "almost_structure",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjugationFlavor {
    /// `X ↦ −S X* S⁻¹`
    NegStarConj,
    /// entrywise complex conjugation
    Entrywise,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AmbientSpec {
    /// trace-zero matrices
    Sl,
    /// matrices with `Xᵀ F + F X = 0`
    So(CMatrix),
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddedInput {
    pub rho: Vec<WPoly>,
    pub point: Option<PointC>,
    pub conormal: Option<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TubeInput {
    pub base: Vec<RealPoly>,
    pub point: Option<PointC>,
    pub conormal: Option<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousInput {
    pub matrix_size: usize,
    pub ambient: AmbientSpec,
    pub q_basis: Vec<CMatrix>,
    pub flavor: ConjugationFlavor,
    pub s: CMatrix,
    pub t10_complement: Option<Vec<CMatrix>>,
    pub quotient_complement: Option<Vec<CMatrix>>,
    /// Linear-form strings, one per quotient complement matrix.
    pub quotient_labels: Option<Vec<String>>,
    /// Entries `name` (real) or `name:complex`.
    pub param_names: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlmostStructureInput {
    /// Almost complex structure as a `d×d` matrix acting on columns.
    pub j: Option<Vec<Vec<RealPoly>>>,
    pub frame: Option<Vec<Vec<RealPoly>>>,
    pub theta: Option<Vec<Vec<RealPoly>>>,
    pub jmat: Option<Vec<Vec<RealPoly>>>,
    pub sample_points: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Embedded(EmbeddedInput),
    Tube(TubeInput),
    Homogeneous(HomogeneousInput),
    AlmostStructure(AlmostStructureInput),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Manifest {
    pub kind: ManifestKind,
    pub ambient_dim: usize,
    pub payload: Payload,
}

const KNOWN_FIELDS: &[&str] = &[
    "kind",
    "description",
    "ambient_dim",
    "defining_functions",
    "point",
    "conormal",
    "tube_base",
    "matrix_size",
    "ambient",
    "ambient_form",
    "q_basis",
    "conjugation",
    "t10_complement",
    "quotient_complement",
    "quotient_labels",
    "param_names",
    "J",
    "frame",
    "theta",
    "Jmat",
    "sample_points",
];

pub fn load_manifest(path: impl AsRef<Path>) -> Result<Manifest> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::IoError {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_manifest(&text)
}

pub fn parse_manifest(text: &str) -> Result<Manifest> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::validation("<json>", e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::validation("<json>", "top level must be an object"))?;
    for key in obj.keys() {
        if !KNOWN_FIELDS.contains(&key.as_str()) {
            return Err(Error::validation(key, "unknown field"));
        }
    }
    let kind = match req(obj, "kind")?.as_str() {
        Some("embedded") => ManifestKind::Embedded,
        Some("tube") => ManifestKind::Tube,
        Some("homogeneous") => ManifestKind::Homogeneous,
        Some("almost_structure") => ManifestKind::AlmostStructure,
        _ => {
            return Err(Error::validation(
                "kind",
                "expected one of embedded, tube, homogeneous, almost_structure",
            ))
        }
    };
    let (ambient_dim, payload) = match kind {
        ManifestKind::Embedded => {
            let m = positive(obj, "ambient_dim")?;
            (m, Payload::Embedded(embedded(obj, m)?))
        }
        ManifestKind::Tube => {
            let m = positive(obj, "ambient_dim")?;
            (m, Payload::Tube(tube(obj, m)?))
        }
        ManifestKind::Homogeneous => {
            let n = positive(obj, "matrix_size")?;
            if let Some(d) = obj.get("ambient_dim") {
                if d.as_u64() != Some(n as u64) {
                    return Err(Error::validation("ambient_dim", "must equal matrix_size"));
                }
            }
            (n, Payload::Homogeneous(homogeneous(obj, n)?))
        }
        ManifestKind::AlmostStructure => {
            let d = positive(obj, "ambient_dim")?;
            (d, Payload::AlmostStructure(almost(obj, d)?))
        }
    };
    Ok(Manifest {
        kind,
        ambient_dim,
        payload,
    })
}

fn req<'a>(obj: &'a Map<String, Value>, field: &str) -> Result<&'a Value> {
    obj.get(field)
        .ok_or_else(|| Error::validation(field, "required field is missing"))
}

fn positive(obj: &Map<String, Value>, field: &str) -> Result<usize> {
    match req(obj, field)?.as_u64() {
        Some(n) if n >= 1 => Ok(n as usize),
        _ => Err(Error::validation(field, "expected a positive integer")),
    }
}

fn array<'a>(v: &'a Value, field: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::validation(field, "expected an array"))
}

fn string<'a>(v: &'a Value, field: &str) -> Result<&'a str> {
    v.as_str()
        .ok_or_else(|| Error::validation(field, "expected a string"))
}

fn strings(v: &Value, field: &str) -> Result<Vec<String>> {
    array(v, field)?
        .iter()
        .enumerate()
        .map(|(i, s)| string(s, &format!("{field}[{i}]")).map(str::to_owned))
        .collect()
}

fn wrap<T>(field: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::ValidationError { .. } | Error::IoError { .. } => e,
        other => Error::validation(field, other.to_string()),
    })
}

fn complex_polys(v: &Value, field: &str, m: usize) -> Result<Vec<WPoly>> {
    strings(v, field)?
        .iter()
        .enumerate()
        .map(|(i, s)| wrap(&format!("{field}[{i}]"), parse_wpoly(s, m)))
        .collect()
}

fn real_polys(v: &Value, field: &str, d: usize) -> Result<Vec<RealPoly>> {
    strings(v, field)?
        .iter()
        .enumerate()
        .map(|(i, s)| wrap(&format!("{field}[{i}]"), parse_real_poly(s, d)))
        .collect()
}

fn real_poly_rows(v: &Value, field: &str, d: usize, width: usize) -> Result<Vec<Vec<RealPoly>>> {
    let rows = array(v, field)?;
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            let f = format!("{field}[{i}]");
            let row = real_polys(r, &f, d)?;
            if row.len() != width {
                return Err(Error::validation(f, format!("expected {width} entries")));
            }
            Ok(row)
        })
        .collect()
}

fn gaussian(v: &Value, field: &str) -> Result<GaussianRational> {
    wrap(field, string(v, field)?.parse())
}

fn point(obj: &Map<String, Value>, m: usize) -> Result<Option<PointC>> {
    let Some(v) = obj.get("point") else {
        return Ok(None);
    };
    let coords = array(v, "point")?
        .iter()
        .enumerate()
        .map(|(i, s)| gaussian(s, &format!("point[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != m {
        return Err(Error::validation("point", format!("expected {m} coordinates")));
    }
    Ok(Some(PointC::new(coords)))
}

fn rationals(v: &Value, field: &str) -> Result<Vec<Rational>> {
    array(v, field)?
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let f = format!("{field}[{i}]");
            wrap(&f, parse_rational(string(s, &f)?))
        })
        .collect()
}

fn conormal(obj: &Map<String, Value>, ell: usize) -> Result<Option<Vec<Rational>>> {
    let Some(v) = obj.get("conormal") else {
        return Ok(None);
    };
    let xi = rationals(v, "conormal")?;
    if xi.len() != ell {
        return Err(Error::validation("conormal", format!("expected {ell} coefficients")));
    }
    Ok(Some(xi))
}

fn embedded(obj: &Map<String, Value>, m: usize) -> Result<EmbeddedInput> {
    let rho = complex_polys(req(obj, "defining_functions")?, "defining_functions", m)?;
    if rho.is_empty() {
        return Err(Error::validation("defining_functions", "at least one function is required"));
    }
    for (i, r) in rho.iter().enumerate() {
        if !r.is_real_valued() {
            return Err(Error::validation(
                format!("defining_functions[{i}]"),
                format!("defining function {r} is not real-valued"),
            ));
        }
    }
    Ok(EmbeddedInput {
        point: point(obj, m)?,
        conormal: conormal(obj, rho.len())?,
        rho,
    })
}

fn tube(obj: &Map<String, Value>, m: usize) -> Result<TubeInput> {
    let base = real_polys(req(obj, "tube_base")?, "tube_base", m)?;
    if base.is_empty() {
        return Err(Error::validation("tube_base", "at least one function is required"));
    }
    for (i, r) in base.iter().enumerate() {
        if !r.has_real_coefficients() {
            return Err(Error::validation(
                format!("tube_base[{i}]"),
                "base polynomial must have real coefficients",
            ));
        }
    }
    Ok(TubeInput {
        point: point(obj, m)?,
        conormal: conormal(obj, base.len())?,
        base,
    })
}

fn matrix(v: &Value, field: &str, n: usize) -> Result<CMatrix> {
    let rows = array(v, field)?;
    if rows.len() != n {
        return Err(Error::validation(field, format!("expected {n} rows")));
    }
    let mut out = Vec::with_capacity(n);
    for (r, row) in rows.iter().enumerate() {
        let f = format!("{field}[{r}]");
        let row = array(row, &f)?;
        if row.len() != n {
            return Err(Error::validation(f, format!("expected {n} columns")));
        }
        out.push(
            row.iter()
                .enumerate()
                .map(|(c, s)| gaussian(s, &format!("{field}[{r}][{c}]")))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    CMatrix::from_rows(out)
}

fn matrices(v: &Value, field: &str, n: usize) -> Result<Vec<CMatrix>> {
    array(v, field)?
        .iter()
        .enumerate()
        .map(|(i, m)| matrix(m, &format!("{field}[{i}]"), n))
        .collect()
}

fn homogeneous(obj: &Map<String, Value>, n: usize) -> Result<HomogeneousInput> {
    let q_basis = matrices(req(obj, "q_basis")?, "q_basis", n)?;
    let conj = req(obj, "conjugation")?
        .as_object()
        .ok_or_else(|| Error::validation("conjugation", "expected an object"))?;
    let flavor = match conj.get("flavor").and_then(Value::as_str) {
        Some("neg_star_conj") => ConjugationFlavor::NegStarConj,
        Some("entrywise") => ConjugationFlavor::Entrywise,
        _ => {
            return Err(Error::validation(
                "conjugation.flavor",
                "expected neg_star_conj or entrywise",
            ))
        }
    };
    let s = match conj.get("S") {
        Some(v) => matrix(v, "conjugation.S", n)?,
        None => CMatrix::identity(n),
    };
    if s.rank() != n {
        return Err(Error::validation("conjugation.S", "matrix must be invertible"));
    }
    let ambient = match obj.get("ambient").map(|v| string(v, "ambient")).transpose()? {
        None | Some("sl") => AmbientSpec::Sl,
        Some("so") => {
            let form = match obj.get("ambient_form") {
                Some(v) => matrix(v, "ambient_form", n)?,
                None => CMatrix::from_fn(n, n, |r, c| {
                    if r + c == n - 1 {
                        GaussianRational::int(1)
                    } else {
                        GaussianRational::int(0)
                    }
                }),
            };
            AmbientSpec::So(form)
        }
        Some(_) => return Err(Error::validation("ambient", "expected sl or so")),
    };
    let opt = |field: &str| -> Result<Option<Vec<CMatrix>>> {
        obj.get(field).map(|v| matrices(v, field, n)).transpose()
    };
    let quotient_complement = opt("quotient_complement")?;
    let quotient_labels = obj
        .get("quotient_labels")
        .map(|v| strings(v, "quotient_labels"))
        .transpose()?;
    if let Some(labels) = &quotient_labels {
        match &quotient_complement {
            Some(q) if q.len() == labels.len() => {}
            _ => {
                return Err(Error::validation(
                    "quotient_labels",
                    "needs one label per quotient_complement matrix",
                ))
            }
        }
    }
    Ok(HomogeneousInput {
        matrix_size: n,
        ambient,
        q_basis,
        flavor,
        s,
        t10_complement: opt("t10_complement")?,
        quotient_complement,
        quotient_labels,
        param_names: obj
            .get("param_names")
            .map(|v| strings(v, "param_names"))
            .transpose()?
            .unwrap_or_default(),
    })
}

fn almost(obj: &Map<String, Value>, d: usize) -> Result<AlmostStructureInput> {
    let j = obj
        .get("J")
        .map(|v| {
            let rows = real_poly_rows(v, "J", d, d)?;
            if rows.len() != d {
                return Err(Error::validation("J", format!("expected {d} rows")));
            }
            Ok(rows)
        })
        .transpose()?;
    let frame = obj
        .get("frame")
        .map(|v| real_poly_rows(v, "frame", d, d))
        .transpose()?;
    let theta = obj
        .get("theta")
        .map(|v| real_poly_rows(v, "theta", d, d))
        .transpose()?;
    let jmat = match (&frame, obj.get("Jmat")) {
        (Some(f), Some(v)) => {
            let rows = real_poly_rows(v, "Jmat", d, f.len())?;
            if rows.len() != f.len() {
                return Err(Error::validation("Jmat", format!("expected {} rows", f.len())));
            }
            Some(rows)
        }
        (None, Some(_)) => return Err(Error::validation("Jmat", "requires `frame`")),
        (_, None) => None,
    };
    if frame.is_some() && jmat.is_none() {
        return Err(Error::validation("Jmat", "required when `frame` is given"));
    }
    if j.is_none() && frame.is_none() {
        return Err(Error::validation("J", "either `J` or `frame` is required"));
    }
    let sample_points = match obj.get("sample_points") {
        Some(v) => array(v, "sample_points")?
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let f = format!("sample_points[{i}]");
                let p = rationals(p, &f)?;
                if p.len() != d {
                    return Err(Error::validation(f, format!("expected {d} coordinates")));
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    Ok(AlmostStructureInput {
        j,
        frame,
        theta,
        jmat,
        sample_points,
    })
}
