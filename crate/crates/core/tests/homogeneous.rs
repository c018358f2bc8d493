use std::collections::BTreeMap;

use levikit_core::exact::{CMatrix, GaussianRational, Signature};
use levikit_core::homogeneous::{
    bracket, builtin_so16_quadric, builtin_su24_flag, so16_quadric_example, su24_flag_example, CRAlgebra,
    Conjugation, LinearForm, Param, ParamLevi,
};
use levikit_core::parser::{AmbientSpec, ConjugationFlavor};
use levikit_core::Error;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type G = GaussianRational;

fn g(s: &str) -> G {
    s.parse().unwrap()
}

fn unit(n: usize, r: usize, c: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |i, j| if (i, j) == (r - 1, c - 1) { G::one() } else { G::zero() })
}

fn values(pairs: &[(&str, G)]) -> BTreeMap<String, G> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn form(s: &str, params: &[Param]) -> LinearForm {
    LinearForm::parse(s, params).unwrap()
}

fn small_rational(rng: &mut StdRng) -> G {
    G::frac(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

fn small_gaussian(rng: &mut StdRng) -> G {
    &small_rational(rng) + &small_rational(rng).mul_i()
}

#[test]
fn su24_structure() {
    let a = builtin_su24_flag();
    assert_eq!(a.q_basis().len(), 24);
    assert_eq!(a.ambient_basis().len(), 35);
    let (ok, cap) = a.check_cr_algebra();
    assert!(ok);
    assert_eq!(cap.len(), 21);
    assert_eq!(a.cr_type().unwrap(), (3, 8));
    for x in &cap {
        assert!(a.q_basis().len() == 24 && x.trace().is_zero());
    }
}

#[test]
fn so16_structure() {
    let a = builtin_so16_quadric();
    let AmbientSpec::So(f) = a.ambient() else { panic!("so ambient") };
    for x in a.q_basis() {
        assert!((&(&x.transpose() * f) + &(f * x)).is_zero());
    }
    assert_eq!(a.ambient_basis().len(), 21);
    assert!(a.check_cr_algebra().0);
    assert_eq!(a.cr_type().unwrap(), (4, 3));
}

/// Reads the quotient coordinates straight off the matrix entries, which works because
/// every other entry of sl6 lies in q + σ(q) for the flag example.
fn su24_oracle_entry(za: &CMatrix, zb: &CMatrix, params: &[Param]) -> LinearForm {
    let sigma = builtin_su24_flag();
    let x = bracket(za, &sigma.sigma().apply(zb)).scale(&G::i());
    let slots = [
        ((3, 1), "w1"),
        ((4, 1), "w2"),
        ((5, 1), "w3"),
        ((6, 1), "i*t1"),
        ((5, 2), "i*t2"),
        ((6, 2), "-conj(w3)"),
        ((6, 3), "-conj(w1)"),
        ((6, 4), "-conj(w2)"),
    ];
    let mut f = LinearForm::zero();
    for ((r, c), label) in slots {
        f = f.add(&form(label, params).scale(&x[(r - 1, c - 1)]));
    }
    f
}

#[test]
fn su24_levi_form() {
    let ex = su24_flag_example();
    let l = ex.param_levi().unwrap();
    assert!(l.is_hermitian());
    let ps = &ex.params;
    for a in 0..3 {
        for b in 0..3 {
            assert_eq!(l.entries[a][b], su24_oracle_entry(&ex.t10[a], &ex.t10[b], ps), "({a},{b})");
        }
    }
    let expected = [
        ["0", "i*w1", "i*w2"],
        ["-i*conj(w1)", "t2", "0"],
        ["-i*conj(w2)", "0", "t2"],
    ];
    for a in 0..3 {
        for b in 0..3 {
            assert_eq!(l.entries[a][b], form(expected[a][b], ps));
        }
    }
    // Printed display: zero (1,1), w1 and w2 along the first row, one real label twice on the diagonal.
    // The bracket computation produces t2 there and no t1 anywhere.
    assert_eq!(l.used_params(), vec!["w1", "w2", "t2"]);
    for (a, b, p) in [(0, 1, 0), (0, 2, 1)] {
        let terms: Vec<_> = l.entries[a][b].terms().collect();
        assert_eq!(terms.len(), 1);
        assert_eq!((terms[0].0, terms[0].1), (p, false));
        assert!(terms[0].2.norm_sqr().is_one());
    }
    assert_eq!(l.entries[1][1], l.entries[2][2]);
    assert!(l.entries[1][2].is_zero() && l.entries[0][0].is_zero());
}

#[test]
fn su24_zero_on_degenerate_plane() {
    let l = su24_flag_example().param_levi().unwrap();
    let h = l
        .specialize(&values(&[("w1", G::zero()), ("w2", G::zero()), ("t2", G::zero())]))
        .unwrap();
    assert!(h.matrix().is_zero());
    assert_eq!(h.inertia(), Signature::new(0, 3, 0));
}

#[test]
fn su24_nondegenerate_forms_are_indefinite() {
    let l = su24_flag_example().param_levi().unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    let mut nondegenerate = 0;
    for _ in 0..1200 {
        let vals = values(&[
            ("w1", small_gaussian(&mut rng)),
            ("w2", small_gaussian(&mut rng)),
            ("w3", small_gaussian(&mut rng)),
            ("t1", small_rational(&mut rng)),
            ("t2", small_rational(&mut rng)),
        ]);
        let s = l.specialize(&vals).unwrap().inertia();
        assert_eq!(s.dim(), 3);
        if s.n_zero == 0 {
            nondegenerate += 1;
            assert!(s.n_pos >= 1 && s.n_neg >= 1, "{vals:?} -> {s:?}");
        }
    }
    assert!(nondegenerate > 500);
}

#[test]
fn so16_levi_form() {
    let ex = so16_quadric_example();
    let l = ex.param_levi().unwrap();
    assert!(l.is_hermitian());
    let ps = &ex.params;
    // printed: [[0,0,0,w],[0,0,0,t],[0,0,0,conj w],[conj w,t,w,0]] up to unit factors
    let printed = [[None, None, None, Some("w")], [None, None, None, Some("t")], [None, None, None, Some("conj(w)")]];
    for a in 0..3 {
        for b in 0..3 {
            assert!(l.entries[a][b].is_zero());
        }
        let terms: Vec<_> = l.entries[a][3].terms().collect();
        let want = form(printed[a][3].unwrap(), ps);
        let (wi, wc, _) = want.terms().next().unwrap();
        assert_eq!(terms.len(), 1, "entry ({a},4) = {}", l.entry_strings()[a][3]);
        assert_eq!((terms[0].0, terms[0].1), (wi, wc));
        assert!(terms[0].2.norm_sqr().is_one());
    }
    assert!(l.entries[3][3].is_zero());
    let strings = l.entry_strings();
    assert_eq!(strings[3], vec!["-i*conj(w)", "-i*t", "-i*w", "0"]);
}

#[test]
fn so16_signatures() {
    let l = so16_quadric_example().param_levi().unwrap();
    let sig = |w: G, t: G| l.specialize(&values(&[("w", w), ("t", t)])).unwrap().inertia();
    assert_eq!(sig(G::one(), G::zero()), Signature::new(1, 2, 1));
    assert_eq!(sig(G::zero(), G::one()), Signature::new(1, 2, 1));
    assert_eq!(sig(G::zero(), G::zero()), Signature::new(0, 4, 0));
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let (w, t) = (small_gaussian(&mut rng), small_rational(&mut rng));
        let expected = if w.is_zero() && t.is_zero() {
            Signature::new(0, 4, 0)
        } else {
            Signature::new(1, 2, 1)
        };
        assert_eq!(sig(w, t), expected);
    }
}

#[test]
fn entries_do_not_depend_on_representatives() {
    for ex in [su24_flag_example(), so16_quadric_example()] {
        let base = ex.param_levi().unwrap();
        let cap = ex.algebra.q_cap_sigma_q();
        let shifted: Vec<CMatrix> = ex
            .t10
            .iter()
            .enumerate()
            .map(|(i, z)| {
                let y = &cap[i % cap.len()].scale(&G::ints(2, -1));
                let y2 = &cap[(3 * i + 1) % cap.len()].scale(&g("1/3"));
                &(z + y) + y2
            })
            .collect();
        let moved = ex
            .algebra
            .param_levi(Some(&shifted), Some(&ex.quotient), Some((&ex.labels, &ex.params)))
            .unwrap();
        assert_eq!(moved, base);
    }
}

#[test]
fn default_complements() {
    for (a, n) in [(builtin_su24_flag(), 3), (builtin_so16_quadric(), 4)] {
        let (_, k) = a.cr_type().unwrap();
        let l = a.param_levi(None, None, None).unwrap();
        assert_eq!(l.n, n);
        assert_eq!(l.params.len(), k);
        assert!(l.is_hermitian());
        assert_eq!(l.params[0].name, "p1");
        // repeated calls are identical
        assert_eq!(a.param_levi(None, None, None).unwrap(), l);
    }
    // so16: every nonzero real specialization has signature (1,2,1) in auto mode too
    let l = builtin_so16_quadric().param_levi(None, None, None).unwrap();
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..100 {
        let vals: BTreeMap<String, G> = (1..=3).map(|i| (format!("p{i}"), small_rational(&mut rng))).collect();
        let zero = vals.values().all(Zero::is_zero);
        let s = l.specialize(&vals).unwrap().inertia();
        assert_eq!(s, if zero { Signature::new(0, 4, 0) } else { Signature::new(1, 2, 1) });
    }
}

#[test]
fn abelian_pair_has_zero_levi_form() {
    let swap = CMatrix::from_fn(4, 4, |r, c| if (r + 2) % 4 == c { G::one() } else { G::zero() });
    let sigma = Conjugation::new(ConjugationFlavor::Entrywise, swap).unwrap();
    let a = CRAlgebra::new(4, AmbientSpec::Sl, vec![unit(4, 1, 2)], sigma).unwrap();
    assert_eq!(a.cr_type().unwrap(), (1, 13));
    let l = a.param_levi(None, None, None).unwrap();
    assert!(l.is_zero());
}

#[test]
fn complement_errors() {
    let ex = su24_flag_example();
    let a = &ex.algebra;
    // an element of q ∩ σ(q) is not a valid T10 representative
    let bad_t10 = vec![unit(6, 1, 2), ex.t10[1].clone(), ex.t10[2].clone()];
    assert!(matches!(a.param_levi(Some(&bad_t10), None, None), Err(Error::BadComplement(_))));
    // element of q is not in σ(q)
    let outside = vec![unit(6, 1, 6), ex.t10[1].clone(), ex.t10[2].clone()];
    assert!(matches!(a.param_levi(Some(&outside), None, None), Err(Error::BadComplement(_))));
    // too few quotient elements
    assert!(matches!(
        a.param_levi(None, Some(&ex.quotient[..7]), None),
        Err(Error::BadComplement(_))
    ));
    // labels that ignore the conjugation
    let mut labels = ex.labels.clone();
    labels[3] = "t1".into();
    assert!(matches!(
        a.param_levi(None, Some(&ex.quotient), Some((&labels, &ex.params))),
        Err(Error::BadComplement(_))
    ));
    let mut labels = ex.labels.clone();
    labels[5] = "conj(w3)".into();
    assert!(matches!(
        a.param_levi(None, Some(&ex.quotient), Some((&labels, &ex.params))),
        Err(Error::BadComplement(_))
    ));
}

#[test]
fn specialization_errors() {
    let l = su24_flag_example().param_levi().unwrap();
    assert_eq!(
        l.specialize(&values(&[("w1", G::zero()), ("t2", G::zero())])).unwrap_err(),
        Error::MissingParameter("w2".into())
    );
    assert_eq!(
        l.specialize(&values(&[("w1", G::zero()), ("w2", G::zero()), ("t2", G::i())])).unwrap_err(),
        Error::NonRealValueForRealParam("t2".into())
    );
    assert!(l
        .specialize(&values(&[("w1", G::zero()), ("w2", G::zero()), ("t2", G::zero()), ("t", G::zero())]))
        .unwrap_err()
        .is_validation());
}

fn specialize_all(l: &ParamLevi, w1: G, w2: G, t2: G) -> levikit_core::exact::HermitianMatrix {
    l.specialize(&values(&[("w1", w1), ("w2", w2), ("t2", t2)])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn t10_change_is_a_congruence(
        p in prop::collection::vec((-2i64..=2, -2i64..=2), 9),
        w in (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3),
        t in -3i64..=3,
    ) {
        let pm = CMatrix::from_fn(3, 3, |r, c| {
            let (re, im) = p[3 * r + c];
            G::ints(re, im)
        });
        prop_assume!(pm.rank() == 3);
        let ex = su24_flag_example();
        let base = ex.param_levi().unwrap();
        let z2: Vec<CMatrix> = (0..3)
            .map(|b| {
                let mut acc = CMatrix::zeros(6, 6);
                for a in 0..3 {
                    acc = &acc + &ex.t10[a].scale(&pm[(a, b)]);
                }
                acc
            })
            .collect();
        let moved = ex
            .algebra
            .param_levi(Some(&z2), Some(&ex.quotient), Some((&ex.labels, &ex.params)))
            .unwrap();
        prop_assert!(moved.is_hermitian());
        let (w1, w2, t2) = (G::ints(w.0, w.1), G::ints(w.2, w.3), G::int(t));
        let h = specialize_all(&base, w1.clone(), w2.clone(), t2.clone());
        let h2 = specialize_all(&moved, w1, w2, t2);
        let expected = h.congruence(&pm.conj()).unwrap();
        prop_assert_eq!(h2.matrix(), expected.matrix());
        prop_assert_eq!(h2.inertia(), h.inertia());
    }
}
