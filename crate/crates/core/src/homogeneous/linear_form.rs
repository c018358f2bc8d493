use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamKind {
    Real,
    /// A complex parameter `w` together with its conjugate `conj(w)`.
    Complex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub kind: ParamKind,
}

impl Param {
    pub fn real(name: &str) -> Self {
        Self {
            name: name.into(),
            kind: ParamKind::Real,
        }
    }

    pub fn complex(name: &str) -> Self {
        Self {
            name: name.into(),
            kind: ParamKind::Complex,
        }
    }

    /// Parses `name`, `name:real` or `name:complex`.
    pub fn parse(spec: &str) -> Result<Self> {
        let (name, kind) = match spec.split_once(':') {
            None => (spec, ParamKind::Real),
            Some((n, "real")) => (n, ParamKind::Real),
            Some((n, "complex")) => (n, ParamKind::Complex),
            Some(_) => return Err(Error::validation("param_names", format!("bad kind in `{spec}`"))),
        };
        if !is_identifier(name) {
            return Err(Error::validation("param_names", format!("bad parameter name `{name}`")));
        }
        Ok(Self {
            name: name.into(),
            kind,
        })
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ParamKind::Real => write!(f, "{}", self.name),
            ParamKind::Complex => write!(f, "{}:complex", self.name),
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && s != "i"
        && s != "conj"
}

/// Linear form `Σ c·p` over parameters and conjugates of complex parameters.
///
/// Keys are `(parameter index, conjugated)`; real parameters never appear conjugated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinearForm {
    terms: BTreeMap<(usize, bool), GaussianRational>,
}

impl LinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn param(index: usize) -> Self {
        Self::term(index, false, GaussianRational::one())
    }

    pub fn term(index: usize, conj: bool, c: GaussianRational) -> Self {
        let mut f = Self::zero();
        f.add_term(index, conj, c);
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, bool, &GaussianRational)> {
        self.terms.iter().map(|(&(i, c), v)| (i, c, v))
    }

    pub fn add_term(&mut self, index: usize, conj: bool, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((index, conj)).or_insert_with(GaussianRational::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&(index, conj));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, c, v) in other.terms() {
            out.add_term(i, c, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero();
        for (i, cj, v) in self.terms() {
            out.add_term(i, cj, v * c);
        }
        out
    }

    /// The form `ξ ↦ conj(f(ξ))`: coefficients conjugated, complex parameters swapped with their conjugates.
    pub fn conj_form(&self, params: &[Param]) -> Self {
        let mut out = Self::zero();
        for (i, c, v) in self.terms() {
            let flip = params[i].kind == ParamKind::Complex && !c;
            out.add_term(i, flip, v.conj());
        }
        out
    }

    pub fn uses(&self, index: usize) -> bool {
        self.terms.keys().any(|&(i, _)| i == index)
    }

    pub fn eval(&self, values: &[Option<GaussianRational>], params: &[Param]) -> Result<GaussianRational> {
        let mut acc = GaussianRational::zero();
        for (i, c, v) in self.terms() {
            let x = values[i]
                .as_ref()
                .ok_or_else(|| Error::MissingParameter(params[i].name.clone()))?;
            let x = if c { x.conj() } else { x.clone() };
            acc += &(v * &x);
        }
        Ok(acc)
    }

    pub fn display(&self, params: &[Param]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (i, c, v)) in self.terms().enumerate() {
            let name = if c {
                format!("conj({})", params[i].name)
            } else {
                params[i].name.clone()
            };
            let negative = v.re < num_rational::BigRational::zero()
                || (v.re.is_zero() && v.im < num_rational::BigRational::zero());
            let mag = if negative { -v.clone() } else { v.clone() };
            let sign = match (k, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            out.push_str(sign);
            if mag.is_one() {
            } else if mag.is_real() || mag.re.is_zero() {
                out.push_str(&format!("{mag}*"));
            } else {
                out.push_str(&format!("({mag})*"));
            }
            out.push_str(&name);
        }
        out
    }

    /// Parses text such as `w1`, `-i*conj(w1)`, `i*t2`, `1/2*p1 - (1+i)*conj(w)`.
    pub fn parse(text: &str, params: &[Param]) -> Result<Self> {
        let err = |m: String| Error::validation("quotient_labels", format!("`{text}`: {m}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty label".into()));
        }
        if s == "0" {
            return Ok(Self::zero());
        }
        // split at top-level signs
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        let mut neg = false;
        for (pos, ch) in s.chars().enumerate() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if (ch == '+' || ch == '-') && depth == 0 {
                let prev = s[..pos].chars().last();
                if prev.is_none() || prev == Some('*') {
                    if ch == '-' {
                        neg = !neg;
                    }
                    continue;
                }
                if !cur.is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                }
                neg = ch == '-';
                continue;
            }
            cur.push(ch);
        }
        if cur.is_empty() {
            return Err(err("dangling sign".into()));
        }
        pieces.push((neg, cur));

        let mut out = Self::zero();
        for (neg, piece) in pieces {
            let mut coef = if neg { -GaussianRational::one() } else { GaussianRational::one() };
            let mut var: Option<(usize, bool)> = None;
            for factor in piece.split('*') {
                let (name, conj) = match factor.strip_prefix("conj(").and_then(|r| r.strip_suffix(')')) {
                    Some(inner) => (inner, true),
                    None => (factor, false),
                };
                if is_identifier(name) {
                    if var.is_some() {
                        return Err(err("a term may contain only one parameter".into()));
                    }
                    let idx = params
                        .iter()
                        .position(|p| p.name == name)
                        .ok_or_else(|| err(format!("unknown parameter `{name}`")))?;
                    if conj && params[idx].kind == ParamKind::Real {
                        var = Some((idx, false));
                    } else {
                        var = Some((idx, conj));
                    }
                } else {
                    let lit = factor.trim_start_matches('(').trim_end_matches(')');
                    let c: GaussianRational = lit.parse().map_err(|_| err(format!("bad factor `{factor}`")))?;
                    coef = &coef * &c;
                }
            }
            let (i, c) = var.ok_or_else(|| err("term without a parameter".into()))?;
            out.add_term(i, c, coef);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> Vec<Param> {
        vec![Param::complex("w1"), Param::real("t2")]
    }

    #[test]
    fn parse_and_display() {
        let ps = params();
        for s in ["i*w1", "-i*conj(w1)", "t2", "-conj(w1)", "(1/2+i)*w1 - 3*t2", "0", "1/2*t2 + w1"] {
            let f = LinearForm::parse(s, &ps).unwrap();
            let printed = f.display(&ps);
            assert_eq!(LinearForm::parse(&printed, &ps).unwrap(), f, "{s} -> {printed}");
        }
        assert_eq!(LinearForm::parse("-i*conj(w1)", &ps).unwrap().display(&ps), "-i*conj(w1)");
        assert_eq!(LinearForm::parse("t2 - 1/2*w1", &ps).unwrap().display(&ps), "-1/2*w1 + t2");
        assert!(LinearForm::parse("u", &ps).is_err());
        assert!(LinearForm::parse("w1*t2", &ps).is_err());
    }

    #[test]
    fn conjugate_form() {
        let ps = params();
        let f = LinearForm::parse("i*w1 + 2*t2", &ps).unwrap();
        assert_eq!(f.conj_form(&ps), LinearForm::parse("-i*conj(w1) + 2*t2", &ps).unwrap());
        let vals = vec![Some(GaussianRational::ints(1, 2)), Some(GaussianRational::int(3))];
        let v = f.eval(&vals, &ps).unwrap();
        assert_eq!(f.conj_form(&ps).eval(&vals, &ps).unwrap(), v.conj());
    }
}
