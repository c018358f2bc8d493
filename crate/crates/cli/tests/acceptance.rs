//! Acceptance criteria, one line per criterion.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use levikit_core::almost::{AlmostCRFrame, AlmostComplex, PolyVectorField};
use levikit_core::embedded::{make_tube, pushforward, EmbeddedCR, PolyAutomorphism, LEVI_CONSTANT};
use levikit_core::exact::{rat, rat_int, CMatrix, GaussianRational, HermitianMatrix, Rational, Signature};
use levikit_core::homogeneous::{builtin_so16_quadric, builtin_su24_flag, so16_quadric_example, su24_flag_example, ParamKind};
use levikit_core::parser::{parse_real_poly, parse_wpoly};
use levikit_core::poly::{Monomial, PointC, Poly, RealPoly, WPoly};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type G = GaussianRational;
type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e2s<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn values(pairs: &[(&str, G)]) -> BTreeMap<String, G> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn small_rational(rng: &mut StdRng) -> G {
    G::frac(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn small_gaussian(rng: &mut StdRng) -> G {
    &small_rational(rng) + &small_rational(rng).mul_i()
}

fn manifold(m: usize, rho: &[&str]) -> EmbeddedCR {
    EmbeddedCR::new(m, rho.iter().map(|s| parse_wpoly(s, m).unwrap()).collect()).unwrap()
}

fn sphere(m: usize) -> EmbeddedCR {
    let terms: Vec<String> = (1..=m).map(|k| format!("z{k}*zbar{k}")).collect();
    manifold(m, &[&format!("{} - 1", terms.join(" + "))])
}

fn point(coords: &[&str]) -> PointC {
    PointC::new(coords.iter().map(|s| s.parse().unwrap()).collect())
}

fn criterion_1() -> Outcome {
    let a = builtin_su24_flag();
    let (ok, cap) = a.check_cr_algebra();
    ensure(ok, "q is not a subalgebra")?;
    let ty = e2s(a.cr_type())?;
    ensure(ty == (3, 8), format!("type {ty:?}"))?;
    let l = e2s(su24_flag_example().param_levi())?;
    ensure(l.n == 3 && l.is_hermitian(), "not a 3x3 Hermitian form")?;
    let complex = l.params.iter().filter(|p| p.kind == ParamKind::Complex).count();
    let real = l.params.len() - complex;
    ensure(complex == 3 && real >= 1, format!("{complex} complex, {real} real parameters"))?;
    let zero: BTreeMap<String, G> = l.params.iter().map(|p| (p.name.clone(), G::zero())).collect();
    let h = e2s(l.specialize(&zero))?;
    ensure(h.matrix().is_zero(), "nonzero on the 3-plane")?;
    Ok(format!(
        "type (3,8), dim q cap sigma q = {}, diagonal label {}",
        cap.len(),
        l.entry_strings()[1][1]
    ))
}

fn criterion_2() -> Outcome {
    let l = e2s(su24_flag_example().param_levi())?;
    let mut rng = StdRng::seed_from_u64(2024);
    let (mut nondegenerate, samples) = (0, 1500);
    for _ in 0..samples {
        let vals = values(&[
            ("w1", small_gaussian(&mut rng)),
            ("w2", small_gaussian(&mut rng)),
            ("w3", small_gaussian(&mut rng)),
            ("t1", small_rational(&mut rng)),
            ("t2", small_rational(&mut rng)),
        ]);
        let s = e2s(l.specialize(&vals))?.inertia();
        if s.n_zero == 0 {
            nondegenerate += 1;
            ensure(s.n_pos >= 1 && s.n_neg >= 1, format!("definite at {vals:?}: {s:?}"))?;
        }
    }
    ensure(nondegenerate > 0, "no nondegenerate sample")?;
    Ok(format!("{samples} samples, {nondegenerate} nondegenerate, all indefinite"))
}

fn criterion_3() -> Outcome {
    let ty = e2s(builtin_so16_quadric().cr_type())?;
    ensure(ty == (4, 3), format!("type {ty:?}"))?;
    let l = e2s(so16_quadric_example().param_levi())?;
    let sig = |w: G, t: G| -> Result<Signature, String> { Ok(e2s(l.specialize(&values(&[("w", w), ("t", t)])))?.inertia()) };
    ensure(sig(G::zero(), G::zero())? == Signature::new(0, 4, 0), "zero specialization")?;
    let mut rng = StdRng::seed_from_u64(74);
    let mut count = 0;
    while count < 200 {
        let (w, t) = (small_gaussian(&mut rng), small_rational(&mut rng));
        if w.is_zero() && t.is_zero() {
            continue;
        }
        let s = sig(w.clone(), t.clone())?;
        ensure(s == Signature::new(1, 2, 1), format!("w={w}, t={t}: {s:?}"))?;
        count += 1;
    }
    Ok(format!("type (4,3), {count} nonzero samples with (1,2,1), (0,4,0) at zero"))
}

fn criterion_4() -> Outcome {
    for m in 2..=4 {
        let s = sphere(m);
        let mut coords = vec!["0"; m];
        coords[0] = "3/5";
        coords[m - 1] = "4/5*i";
        for x in [point(&coords), PointC::from_ints(&[&[1][..], &vec![0; m - 1]].concat())] {
            let pd = e2s(s.analyze_point(&x))?;
            let sig = e2s(s.levi_signature(&pd, &[rat_int(1)]))?;
            ensure(sig == Signature::new(m - 1, 0, 0), format!("sphere m={m}: {sig:?}"))?;
        }
    }
    let q = manifold(3, &["(z3 - zbar3)*(-1/2)*i - z1*zbar1 + z2*zbar2"]);
    for x in [PointC::origin(3), point(&["1", "1", "2"]), point(&["1+i", "1/2", "3+7/4*i"])] {
        let pd = e2s(q.analyze_point(&x))?;
        let sig = e2s(q.levi_signature(&pd, &[rat_int(1)]))?;
        ensure(sig == Signature::new(1, 0, 1), format!("quadric at {x:?}: {sig:?}"))?;
    }
    let line = manifold(2, &["(z2 + zbar2)*(1/2)", "(z2 - zbar2)*(-1/2)*i"]);
    let pd = e2s(line.analyze_point(&point(&["1/2", "0"])))?;
    for xi in [[1, 0], [0, 1], [3, -2]] {
        let l = e2s(line.scalar_levi(&pd, &[rat_int(xi[0]), rat_int(xi[1])]))?;
        ensure(l.matrix().is_zero(), "complex line has a nonzero Levi form")?;
    }
    Ok("spheres m=2..4 (m-1,0,0), quadric (1,0,1), complex line zero".into())
}

struct Golden {
    manifold: EmbeddedCR,
    points: Vec<PointC>,
    conormals: Vec<Vec<Rational>>,
}

fn goldens() -> Vec<Golden> {
    let ones = |ell: usize| -> Vec<Vec<Rational>> {
        match ell {
            1 => vec![vec![rat_int(1)], vec![rat_int(-1)], vec![rat(3, 2)]],
            _ => vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)], vec![rat_int(2), rat_int(-3)]],
        }
    };
    vec![
        Golden {
            manifold: sphere(2),
            points: vec![PointC::from_ints(&[1, 0]), point(&["3/5", "4/5*i"])],
            conormals: ones(1),
        },
        Golden {
            manifold: sphere(3),
            points: vec![point(&["3/5", "0", "4/5*i"]), point(&["1/3", "2/3", "2/3*i"])],
            conormals: ones(1),
        },
        Golden {
            manifold: sphere(4),
            points: vec![point(&["1/2", "1/2", "1/2*i", "-1/2"])],
            conormals: ones(1),
        },
        Golden {
            manifold: manifold(3, &["(z3 - zbar3)*(-1/2)*i - z1*zbar1 + z2*zbar2"]),
            points: vec![PointC::origin(3), point(&["1+i", "1/2", "3+7/4*i"])],
            conormals: ones(1),
        },
        Golden {
            manifold: manifold(2, &["(z2 - zbar2)*(-1/2)*i - z1*zbar1"]),
            points: vec![PointC::origin(2), point(&["1-2*i", "7+5*i"])],
            conormals: ones(1),
        },
        Golden {
            manifold: manifold(
                4,
                &[
                    "(z3 - zbar3)*(-1/2)*i - z1*zbar1",
                    "(z4 - zbar4)*(-1/2)*i - (z1*zbar2 + z2*zbar1)*(1/2)",
                ],
            ),
            points: vec![PointC::origin(4), point(&["1", "1", "2+i", "-1+i"])],
            conormals: ones(2),
        },
        Golden {
            manifold: manifold(2, &["(z2 + zbar2)*(1/2)", "(z2 - zbar2)*(-1/2)*i"]),
            points: vec![point(&["1/2", "0"])],
            conormals: ones(2),
        },
    ]
}

fn z_vectors(n: usize) -> Vec<Vec<G>> {
    let base = [G::one(), G::ints(1, -2), G::frac(3, 2), G::ints(-1, 1)];
    (0..3)
        .map(|s| (0..n).map(|j| base[(j + s) % base.len()].clone()).collect())
        .collect()
}

fn criterion_5() -> Outcome {
    let mut bracket_ratios = std::collections::BTreeSet::new();
    let mut normal_ratios = std::collections::BTreeSet::new();
    let mut cases = 0;
    for gold in goldens() {
        let m = &gold.manifold;
        for x in &gold.points {
            let pd = e2s(m.analyze_point(x))?;
            for z in z_vectors(pd.n) {
                let normal = e2s(m.normal_levi(&pd, &z))?;
                let sff = e2s(m.second_fundamental_sum(&pd, &z))?;
                for (a, b) in normal.iter().zip(&sff) {
                    ensure(
                        a * rat_int(LEVI_CONSTANT) == *b,
                        format!("normal {a} vs second fundamental {b} at {x:?}"),
                    )?;
                    if !a.is_zero() {
                        normal_ratios.insert(b / a);
                    }
                }
                for xi in &gold.conormals {
                    let quad = e2s(e2s(m.scalar_levi(&pd, xi))?.quadratic_value(&z))?;
                    let bracket = e2s(m.bracket_levi_oracle(&pd, xi, &z))?;
                    ensure(
                        bracket == &quad * &rat_int(LEVI_CONSTANT),
                        format!("bracket {bracket} vs hessian {quad} at {x:?}"),
                    )?;
                    if !quad.is_zero() {
                        bracket_ratios.insert(&bracket / &quad);
                    }
                    cases += 1;
                }
            }
        }
    }
    ensure(bracket_ratios.len() == 1 && normal_ratios.len() == 1, "constant is not shared")?;
    ensure(bracket_ratios == normal_ratios, "oracles use different constants")?;
    Ok(format!("{cases} cases, single constant {}", bracket_ratios.iter().next().unwrap()))
}

fn linear_map(dim: usize, rows: &[Vec<&str>]) -> Vec<WPoly> {
    rows.iter()
        .map(|row| {
            let terms: Vec<String> = row
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != "0")
                .map(|(j, c)| format!("({c})*z{}", j + 1))
                .collect();
            parse_wpoly(&terms.join(" + "), dim).unwrap()
        })
        .collect()
}

fn automorphisms(dim: usize, rng: &mut StdRng) -> Vec<PolyAutomorphism> {
    let mut out = Vec::new();
    for k in 1..=3u32 {
        let c = small_gaussian(rng);
        let mut fwd: Vec<WPoly> = (1..=dim).map(|mu| WPoly::z(dim, mu)).collect();
        let mut inv = fwd.clone();
        let bump = WPoly::z(dim, 1).pow(k).scale(&c);
        fwd[dim - 1] = WPoly::from_poly(dim, fwd[dim - 1].poly() + bump.poly());
        inv[dim - 1] = WPoly::from_poly(dim, inv[dim - 1].poly() - bump.poly());
        out.push(PolyAutomorphism::new(fwd, inv).unwrap());
    }
    // rotation in the (z1, z2) plane and a diagonal unitary
    let mut rot_f: Vec<Vec<&str>> = (0..dim).map(|r| (0..dim).map(|c| if r == c { "1" } else { "0" }).collect()).collect();
    let mut rot_i = rot_f.clone();
    rot_f[0][0] = "3/5";
    rot_f[0][1] = "-4/5";
    rot_f[1][0] = "4/5";
    rot_f[1][1] = "3/5";
    rot_i[0][0] = "3/5";
    rot_i[0][1] = "4/5";
    rot_i[1][0] = "-4/5";
    rot_i[1][1] = "3/5";
    out.push(PolyAutomorphism::new(linear_map(dim, &rot_f), linear_map(dim, &rot_i)).unwrap());
    let mut diag_f: Vec<Vec<&str>> = (0..dim).map(|r| (0..dim).map(|c| if r == c { "1" } else { "0" }).collect()).collect();
    let mut diag_i = diag_f.clone();
    diag_f[0][0] = "i";
    diag_i[0][0] = "-i";
    out.push(PolyAutomorphism::new(linear_map(dim, &diag_f), linear_map(dim, &diag_i)).unwrap());
    out
}

fn criterion_6() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    let mut pushes = 0;
    for gold in goldens().into_iter().filter(|g| g.manifold.m() >= 2) {
        let m = &gold.manifold;
        for x in &gold.points {
            let pd = e2s(m.analyze_point(x))?;
            for phi in automorphisms(m.m(), &mut rng) {
                let (m2, x2) = e2s(pushforward(m, &phi, x))?;
                let pd2 = e2s(m2.analyze_point(&x2))?;
                for xi in &gold.conormals {
                    let s1 = e2s(m.levi_signature(&pd, xi))?;
                    let s2 = e2s(m2.levi_signature(&pd2, xi))?;
                    ensure(s1 == s2, format!("{s1:?} -> {s2:?} at {x:?}"))?;
                }
                pushes += 1;
            }
            for z in z_vectors(pd.n) {
                for _ in 0..3 {
                    let (a, b) = (small_rational(&mut rng), small_rational(&mut rng));
                    let c = &a + &b.mul_i();
                    let cz: Vec<G> = z.iter().map(|v| v * &c).collect();
                    for xi in &gold.conormals {
                        let before = e2s(m.bracket_levi_oracle(&pd, xi, &z))?;
                        let after = e2s(m.bracket_levi_oracle(&pd, xi, &cz))?;
                        ensure(after == &c.norm_sqr() * &before, "change-of-base law fails")?;
                    }
                }
            }
        }
    }
    ensure(pushes >= 20, format!("only {pushes} pushforwards"))?;
    Ok(format!("{pushes} pushforwards preserve signatures; (a+bi)Z scales by a^2+b^2"))
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let bases = 25;
    for _ in 0..bases {
        let d = rng.gen_range(1..=3);
        let nterms = rng.gen_range(1..=5);
        let terms: Vec<(Monomial, G)> = (0..nterms)
            .map(|_| {
                let e: Vec<u32> = (0..d).map(|_| rng.gen_range(0..=3)).collect();
                (Monomial(e), small_rational(&mut rng))
            })
            .collect();
        let r = RealPoly::from_poly(d, Poly::from_terms(d, terms));
        let tube = e2s(make_tube(std::slice::from_ref(&r)))?;
        let xs: Vec<Rational> = (0..d).map(|_| small_rational(&mut rng).re).collect();
        let ys: Vec<Rational> = (0..d).map(|_| small_rational(&mut rng).re).collect();
        let x = PointC::new(xs.iter().zip(&ys).map(|(a, b)| G::new(a.clone(), b.clone())).collect());
        let complex = e2s(tube.rho()[0].complex_hessian(&x))?;
        let real = e2s(r.hessian(&xs))?.scale(&G::frac(1, 4));
        ensure(complex.matrix() == &real, format!("base {r:?}"))?;
    }
    Ok(format!("{bases} random bases"))
}

fn criterion_8() -> Outcome {
    let p = |d: usize, s: &str| parse_real_poly(s, d).unwrap();
    let mat = |d: usize, rows: &[&[&str]]| -> Vec<Vec<RealPoly>> {
        rows.iter().map(|r| r.iter().map(|s| p(d, s)).collect()).collect()
    };
    let j0 = AlmostComplex::standard(2);
    ensure(j0.is_integrable(), "standard structure")?;
    // pullback of J0 by (x1, y1, x2, y2) -> (x1, y1 + x1^2, x2, y2 + x1 x2)
    let dphi = mat(4, &[&["1", "0", "0", "0"], &["2*x1", "1", "0", "0"], &["0", "0", "1", "0"], &["x3", "0", "x1", "1"]]);
    let dphi_inv = mat(4, &[&["1", "0", "0", "0"], &["-2*x1", "1", "0", "0"], &["0", "0", "1", "0"], &["-1*x3", "0", "-1*x1", "1"]]);
    let mul = |a: &Vec<Vec<RealPoly>>, b: &Vec<Vec<RealPoly>>| -> Vec<Vec<RealPoly>> {
        (0..4)
            .map(|r| (0..4).map(|c| (0..4).fold(RealPoly::zero(4), |acc, k| &acc + &(&a[r][k] * &b[k][c]))).collect())
            .collect()
    };
    let conj = e2s(AlmostComplex::new(mul(&dphi_inv, &mul(j0.matrix(), &dphi))))?;
    ensure(conj.is_integrable(), "conjugated structure")?;
    let non_closed = e2s(AlmostComplex::new(mat(
        4,
        &[
            &["0", "-1", "-2*x2", "-2*x1"],
            &["1", "0", "-2*x1", "2*x2"],
            &["0", "0", "0", "-1"],
            &["0", "0", "1", "0"],
        ],
    )))?;
    ensure(!non_closed.is_integrable(), "non-closed structure reported integrable")?;
    let n13 = e2s(non_closed.nijenhuis(&PolyVectorField::coordinate(4, 1), &PolyVectorField::coordinate(4, 3)))?;
    ensure(!n13.is_zero(), "N vanishes on the designated pair")?;
    let heis = e2s(AlmostCRFrame::new(
        vec![
            e2s(PolyVectorField::new(vec![p(3, "1"), p(3, "0"), p(3, "2*x2")]))?,
            e2s(PolyVectorField::new(vec![p(3, "0"), p(3, "1"), p(3, "-2*x1")]))?,
        ],
        mat(3, &[&["-2*x2", "2*x1", "1"]]),
        mat(3, &[&["0", "-1"], &["1", "0"]]),
        &[rat_int(0), rat_int(0), rat_int(0)],
    ))?;
    let verdict = e2s(heis.partial_integrability())?;
    ensure(verdict.cr2 && verdict.cr3, "Heisenberg frame fails")?;
    Ok("J0 and conjugate integrable, non-closed N != 0, Heisenberg (cr2, cr3)".into())
}

fn random_hermitian(rng: &mut StdRng, n: usize) -> HermitianMatrix {
    let mut m = CMatrix::zeros(n, n);
    for r in 0..n {
        m[(r, r)] = G::real(small_rational(rng).re);
        for c in r + 1..n {
            let v = if rng.gen_bool(0.2) { G::zero() } else { small_gaussian(rng) };
            m[(c, r)] = v.conj();
            m[(r, c)] = v;
        }
    }
    HermitianMatrix::new(m).unwrap()
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    for i in 0..600 {
        let n = 1 + i % 6;
        let mut a = random_hermitian(&mut rng, n);
        if i % 5 == 0 && n > 1 {
            // force a kernel by duplicating a row and column
            let mut m = a.matrix().clone();
            for c in 0..n {
                m[(n - 1, c)] = m[(0, c)].clone();
            }
            for r in 0..n {
                m[(r, n - 1)] = m[(r, 0)].clone();
            }
            a = HermitianMatrix::new(m).unwrap();
        }
        let (d, l) = (a.inertia_descartes(), a.inertia_ldl());
        ensure(d == l, format!("Descartes {d:?} vs LDL {l:?}"))?;
    }
    let mut congruences = 0;
    while congruences < 150 {
        let n = rng.gen_range(2..=6);
        let a = random_hermitian(&mut rng, n);
        let p = CMatrix::from_fn(n, n, |_, _| G::ints(rng.gen_range(-2..=2), rng.gen_range(-2..=2)));
        if p.rank() < n {
            continue;
        }
        let b = e2s(a.congruence(&p))?;
        ensure(a.inertia() == b.inertia(), "Sylvester's law fails")?;
        congruences += 1;
    }
    Ok(format!("600 Descartes/LDL agreements, {congruences} congruences"))
}

fn bin_run(args: &[&str]) -> (Option<i32>, Vec<u8>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_levikit")).args(args).output().expect("binary runs");
    (out.status.code(), out.stdout, out.stderr)
}

fn criterion_10() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../manifests");
    let path = |name: &str| dir.join(name).display().to_string();
    let mut runs: Vec<Vec<String>> = vec![vec!["selftest".into()], vec!["selftest".into(), "--json".into()]];
    for name in ["sphere.json", "sphere3.json", "quadric.json", "complex_line.json", "tube.json", "notreal.json"] {
        runs.push(vec!["analyze".into(), path(name)]);
        runs.push(vec!["analyze".into(), path(name), "--json".into()]);
    }
    for name in ["heisenberg.json", "heisenberg_perturbed.json", "heisenberg_pointwise.json", "nonclosed.json", "standard.json"] {
        runs.push(vec!["nijenhuis".into(), path(name), "--json".into()]);
    }
    runs.push(vec![
        "homogeneous".into(),
        path("su24.json"),
        "--specialize".into(),
        "w1=0".into(),
        "--specialize".into(),
        "w2=0".into(),
        "--specialize".into(),
        "t2=0".into(),
        "--json".into(),
    ]);
    runs.push(vec!["homogeneous".into(), path("so16.json"), "--specialize=w=1".into(), "--specialize=t=0".into()]);
    runs.push(vec!["homogeneous".into(), path("su24_auto.json"), "--json".into()]);
    for args in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = bin_run(&args);
        let second = bin_run(&args);
        ensure(first == second, format!("output differs for {args:?}"))?;
        ensure(first.0.is_some(), format!("no exit status for {args:?}"))?;
    }
    let (code, _, _) = bin_run(&["selftest"]);
    ensure(code == Some(0), "selftest failed")?;
    Ok(format!("{} invocations byte-identical", runs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 10] = [
        ("su24 end-to-end", criterion_1, Duration::from_secs(5)),
        ("su24 indefiniteness", criterion_2, Duration::from_secs(30)),
        ("so16 end-to-end", criterion_3, Duration::from_secs(10)),
        ("hypersurface goldens", criterion_4, Duration::MAX),
        ("oracle equivalence", criterion_5, Duration::from_secs(60)),
        ("invariance", criterion_6, Duration::MAX),
        ("tube law", criterion_7, Duration::MAX),
        ("integrability", criterion_8, Duration::MAX),
        ("inertia engine", criterion_9, Duration::MAX),
        ("determinism", criterion_10, Duration::MAX),
    ];
    let mut failures = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *budget => Err(format!("{detail}; over budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
