//! Golden values from the worked examples, recomputed on every run.

use std::collections::BTreeMap;

use levikit_core::almost::{AlmostCRFrame, PolyVectorField};
use levikit_core::embedded::EmbeddedCR;
use levikit_core::exact::{rat_int, GaussianRational, Rational, Signature};
use levikit_core::homogeneous::{so16_quadric_example, su24_flag_example, ParamLevi};
use levikit_core::parser::{parse_real_poly, parse_wpoly, AmbientSpec};
use levikit_core::poly::PointC;
use levikit_core::Result;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, outcome: Result<(bool, String)>) -> Check {
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("{}: {e}", e.name())));
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

fn values(pairs: &[(&str, GaussianRational)]) -> BTreeMap<String, GaussianRational> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn single_term(l: &ParamLevi, a: usize, b: usize, param: &str, conj: bool) -> bool {
    let terms: Vec<_> = l.entries[a][b].terms().collect();
    terms.len() == 1
        && l.params[terms[0].0].name == param
        && terms[0].1 == conj
        && terms[0].2.norm_sqr().is_one()
}

pub fn run_all() -> Vec<Check> {
    let mut out = Vec::new();
    let su24 = su24_flag_example();
    let so16 = so16_quadric_example();

    out.push(check("su24 q is a subalgebra with dim(q cap sigma q) = dim q - 3", {
        let (ok, cap) = su24.algebra.check_cr_algebra();
        let q = su24.algebra.q_basis().len();
        Ok((ok && cap.len() + 3 == q, format!("dim q = {q}, dim q cap sigma q = {}", cap.len())))
    }));
    out.push(check(
        "su24 CR type is (3, 8)",
        su24.algebra.cr_type().map(|t| (t == (3, 8), format!("{t:?}"))),
    ));
    out.push(check("so16 CR type is (4, 3)", so16.algebra.cr_type().map(|t| (t == (4, 3), format!("{t:?}")))));
    out.push(check("so16 basis satisfies z(i,j) = -z(8-j,8-i)", {
        let ok = so16.algebra.q_basis().iter().all(|x| {
            (0..7).all(|i| (0..7).all(|j| x[(i, j)] == -x[(6 - j, 6 - i)].clone()))
        }) && matches!(so16.algebra.ambient(), AmbientSpec::So(_));
        Ok((ok, format!("{} basis matrices", so16.algebra.q_basis().len())))
    }));

    let su24_levi = su24.param_levi();
    out.push(check(
        "su24 Levi form has the printed shape",
        su24_levi.as_ref().map_err(Clone::clone).map(|l| {
            let shape = l.is_hermitian()
                && l.entries[0][0].is_zero()
                && single_term(l, 0, 1, "w1", false)
                && single_term(l, 0, 2, "w2", false)
                && l.entries[1][2].is_zero()
                && l.entries[1][1] == l.entries[2][2];
            let diag: Vec<_> = l.entries[1][1].terms().map(|(i, _, _)| l.params[i].name.clone()).collect();
            (shape && diag.len() == 1, format!("diagonal parameter {}", diag.join(",")))
        }),
    ));
    out.push(check(
        "su24 Levi form vanishes on the 3-plane",
        su24_levi.as_ref().map_err(Clone::clone).and_then(|l| {
            let h = l.specialize(&values(&[
                ("w1", GaussianRational::zero()),
                ("w2", GaussianRational::zero()),
                ("t2", GaussianRational::zero()),
            ]))?;
            Ok((h.matrix().is_zero(), format!("signature {:?}", h.inertia().as_array())))
        }),
    ));

    let so16_levi = so16.param_levi();
    out.push(check(
        "so16 Levi form matches the printed form up to unit factors",
        so16_levi.as_ref().map_err(Clone::clone).map(|l| {
            let zero_block = (0..3).all(|a| (0..3).all(|b| l.entries[a][b].is_zero())) && l.entries[3][3].is_zero();
            let column = single_term(l, 0, 3, "w", false) && single_term(l, 1, 3, "t", false) && single_term(l, 2, 3, "w", true);
            (l.is_hermitian() && zero_block && column, l.entry_strings()[3].join(" | "))
        }),
    ));
    out.push(check(
        "so16 signatures (1,2,1) off zero and (0,4,0) at zero",
        so16_levi.as_ref().map_err(Clone::clone).and_then(|l| {
            let sig = |w: i64, t: i64| -> Result<Signature> {
                Ok(l.specialize(&values(&[("w", GaussianRational::int(w)), ("t", GaussianRational::int(t))]))?
                    .inertia())
            };
            let got = [sig(1, 0)?, sig(0, 1)?, sig(0, 0)?];
            let ok = got == [Signature::new(1, 2, 1), Signature::new(1, 2, 1), Signature::new(0, 4, 0)];
            Ok((ok, format!("{:?}", got.map(|s| s.as_array()))))
        }),
    ));

    out.push(check("Levi values scale by a^2 + b^2 under Z -> (a+bi)Z", change_of_base()));
    out.push(check("frame Levi values scale by a^2 + b^2 under X -> aX + bJX", frame_change_of_base()));
    out
}

fn change_of_base() -> Result<(bool, String)> {
    let sphere = EmbeddedCR::new(2, vec![parse_wpoly("z1*zbar1 + z2*zbar2 - 1", 2)?])?;
    let pd = sphere.analyze_point(&PointC::from_ints(&[1, 0]))?;
    let xi = [rat_int(1)];
    let z = [GaussianRational::one()];
    let base = sphere.bracket_levi_oracle(&pd, &xi, &z)?;
    let mut ok = !base.is_zero();
    for (a, b) in [(2, 0), (1, 1), (3, -2), (0, 5)] {
        let c = GaussianRational::ints(a, b);
        let scaled: Vec<GaussianRational> = z.iter().map(|v| v * &c).collect();
        let v = sphere.bracket_levi_oracle(&pd, &xi, &scaled)?;
        ok &= v == &base * &rat_int(a * a + b * b);
    }
    Ok((ok, format!("base value {base}")))
}

fn frame_change_of_base() -> Result<(bool, String)> {
    let p = |s: &str| parse_real_poly(s, 3);
    let frame = AlmostCRFrame::new(
        vec![
            PolyVectorField::new(vec![p("1")?, p("0")?, p("2*x2")?])?,
            PolyVectorField::new(vec![p("0")?, p("1")?, p("-2*x1")?])?,
        ],
        vec![vec![p("-2*x2")?, p("2*x1")?, p("1")?]],
        vec![vec![p("0")?, p("-1")?], vec![p("1")?, p("0")?]],
        &[rat_int(0), rat_int(0), rat_int(0)],
    )?;
    let origin = vec![Rational::zero(); 3];
    let base = frame.abstract_levi(&origin, &[rat_int(1)], &[rat_int(1), rat_int(0)])?;
    let mut ok = !base.is_zero();
    for (a, b) in [(2, 0), (1, 1), (3, -2)] {
        let v = frame.abstract_levi(&origin, &[rat_int(1)], &[rat_int(a), rat_int(b)])?;
        ok &= v == &base * &rat_int(a * a + b * b);
    }
    Ok((ok, format!("base value {base}")))
}
