//! CR algebras of matrices: subalgebra checks, CR type and the parametrised Levi form.

mod linear_form;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

pub use linear_form::{LinearForm, Param, ParamKind};

use crate::error::{Error, Result};
use crate::exact::{CMatrix, GaussianRational, HermitianMatrix};
use crate::parser::{AmbientSpec, ConjugationFlavor, HomogeneousInput};

type G = GaussianRational;

/// Antilinear involution of the ambient algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Conjugation {
    flavor: ConjugationFlavor,
    s: CMatrix,
    s_inv: CMatrix,
}

impl Conjugation {
    pub fn new(flavor: ConjugationFlavor, s: CMatrix) -> Result<Self> {
        if !s.is_square() {
            return Err(Error::DimensionMismatch("conjugation matrix must be square".into()));
        }
        let s_inv = s
            .inverse()
            .map_err(|_| Error::validation("conjugation.S", "matrix must be invertible"))?;
        Ok(Self { flavor, s, s_inv })
    }

    /// `X ↦ −S X* S⁻¹`
    pub fn neg_star_conj(s: CMatrix) -> Result<Self> {
        Self::new(ConjugationFlavor::NegStarConj, s)
    }

    /// `X ↦ S conj(X) S⁻¹`
    pub fn entrywise(n: usize) -> Self {
        Self::new(ConjugationFlavor::Entrywise, CMatrix::identity(n)).expect("identity")
    }

    pub fn flavor(&self) -> ConjugationFlavor {
        self.flavor
    }

    pub fn s(&self) -> &CMatrix {
        &self.s
    }

    pub fn apply(&self, x: &CMatrix) -> CMatrix {
        match self.flavor {
            ConjugationFlavor::NegStarConj => -&(&(&self.s * &x.adjoint()) * &self.s_inv),
            ConjugationFlavor::Entrywise => &(&self.s * &x.conj()) * &self.s_inv,
        }
    }
}

pub fn bracket(a: &CMatrix, b: &CMatrix) -> CMatrix {
    &(a * b) - &(b * a)
}

fn vectorize(x: &CMatrix) -> Vec<G> {
    x.entries().to_vec()
}

fn unvectorize(v: &[G], n: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |r, c| v[r * n + c].clone())
}

/// Indices of the first maximal independent subfamily, scanning in order.
fn independent_subset(vecs: &[Vec<G>]) -> Vec<usize> {
    if vecs.is_empty() {
        return Vec::new();
    }
    CMatrix::from_columns(vecs, vecs[0].len()).rref().1
}

/// Coordinates with respect to a fixed independent family of vectors.
struct Coordinates {
    basis: CMatrix,
    rows: Vec<usize>,
    inv: CMatrix,
}

impl Coordinates {
    fn new(vecs: &[Vec<G>], len: usize) -> Self {
        let basis = CMatrix::from_columns(vecs, len);
        let rows = basis.transpose().rref().1;
        let inv = basis.select_rows(&rows).inverse().expect("independent family");
        Self { basis, rows, inv }
    }

    /// `None` when `v` is outside the span.
    fn of(&self, v: &[G]) -> Option<Vec<G>> {
        let sub: Vec<G> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inv.mul_vec(&sub).expect("shape");
        (self.basis.mul_vec(&c).expect("shape") == v).then_some(c)
    }
}

fn ambient_contains(ambient: &AmbientSpec, x: &CMatrix) -> bool {
    match ambient {
        AmbientSpec::Sl => x.trace().is_zero(),
        AmbientSpec::So(f) => (&(&x.transpose() * f) + &(f * x)).is_zero(),
    }
}

/// Deterministic basis of the ambient algebra: reduced echelon kernel of its defining equations.
pub fn ambient_basis(ambient: &AmbientSpec, n: usize) -> Vec<CMatrix> {
    let equations = match ambient {
        AmbientSpec::Sl => CMatrix::from_fn(1, n * n, |_, c| {
            if c % (n + 1) == 0 {
                G::one()
            } else {
                G::zero()
            }
        }),
        AmbientSpec::So(f) => {
            let cols: Vec<Vec<G>> = (0..n * n)
                .map(|k| {
                    let e = CMatrix::from_fn(n, n, |r, c| if r * n + c == k { G::one() } else { G::zero() });
                    vectorize(&(&(&e.transpose() * f) + &(f * &e)))
                })
                .collect();
            CMatrix::from_columns(&cols, n * n)
        }
    };
    equations
        .rank_and_kernel()
        .1
        .columns()
        .iter()
        .map(|v| unvectorize(v, n))
        .collect()
}

/// A pair (𝔤₀, 𝔮): 𝔤₀ is the fixed algebra of `sigma` in the ambient 𝔤 and 𝔮 a complex subspace.
#[derive(Clone, Debug)]
pub struct CRAlgebra {
    n: usize,
    q_basis: Vec<CMatrix>,
    sigma: Conjugation,
    ambient: AmbientSpec,
    g_basis: Vec<CMatrix>,
    open_bracket: OnceLock<Option<(usize, usize)>>,
    cap: OnceLock<Vec<CMatrix>>,
}

impl CRAlgebra {
    pub fn new(n: usize, ambient: AmbientSpec, q_basis: Vec<CMatrix>, sigma: Conjugation) -> Result<Self> {
        if sigma.s.rows() != n {
            return Err(Error::DimensionMismatch(format!("conjugation matrix is not {n}x{n}")));
        }
        if let AmbientSpec::So(f) = &ambient {
            if f.rows() != n || f.cols() != n {
                return Err(Error::DimensionMismatch(format!("ambient form is not {n}x{n}")));
            }
        }
        for (i, x) in q_basis.iter().enumerate() {
            if x.rows() != n || x.cols() != n {
                return Err(Error::DimensionMismatch(format!("q_basis[{i}] is not {n}x{n}")));
            }
            if !ambient_contains(&ambient, x) {
                return Err(Error::validation(format!("q_basis[{i}]"), "not in the ambient algebra"));
            }
        }
        let g_basis = ambient_basis(&ambient, n);
        for x in &g_basis {
            let sx = sigma.apply(x);
            if !ambient_contains(&ambient, &sx) || sigma.apply(&sx) != *x {
                return Err(Error::validation(
                    "conjugation",
                    "not an involution of the ambient algebra",
                ));
            }
        }
        let vecs: Vec<Vec<G>> = q_basis.iter().map(vectorize).collect();
        if independent_subset(&vecs).len() != q_basis.len() {
            return Err(Error::DependentBasis);
        }
        Ok(Self {
            n,
            q_basis,
            sigma,
            ambient,
            g_basis,
            open_bracket: OnceLock::new(),
            cap: OnceLock::new(),
        })
    }

    pub fn from_input(input: &HomogeneousInput) -> Result<Self> {
        let sigma = Conjugation::new(input.flavor, input.s.clone())?;
        Self::new(input.matrix_size, input.ambient.clone(), input.q_basis.clone(), sigma)
    }

    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn q_basis(&self) -> &[CMatrix] {
        &self.q_basis
    }

    pub fn sigma(&self) -> &Conjugation {
        &self.sigma
    }

    pub fn ambient(&self) -> &AmbientSpec {
        &self.ambient
    }

    pub fn ambient_basis(&self) -> &[CMatrix] {
        &self.g_basis
    }

    pub fn sigma_q_basis(&self) -> Vec<CMatrix> {
        self.q_basis.iter().map(|x| self.sigma.apply(x)).collect()
    }

    fn q_coordinates(&self) -> Coordinates {
        let vecs: Vec<Vec<G>> = self.q_basis.iter().map(vectorize).collect();
        Coordinates::new(&vecs, self.n * self.n)
    }

    /// First pair (1-based) whose bracket leaves 𝔮.
    fn first_open_bracket(&self) -> Option<(usize, usize)> {
        *self.open_bracket.get_or_init(|| self.search_open_bracket())
    }

    fn search_open_bracket(&self) -> Option<(usize, usize)> {
        let coords = self.q_coordinates();
        for i in 0..self.q_basis.len() {
            for j in i + 1..self.q_basis.len() {
                let b = bracket(&self.q_basis[i], &self.q_basis[j]);
                if coords.of(&vectorize(&b)).is_none() {
                    return Some((i + 1, j + 1));
                }
            }
        }
        None
    }

    /// Basis of 𝔮 ∩ σ(𝔮), from the kernel of `[q | −σq]`.
    pub fn q_cap_sigma_q(&self) -> Vec<CMatrix> {
        self.cap.get_or_init(|| self.compute_cap()).clone()
    }

    fn compute_cap(&self) -> Vec<CMatrix> {
        let d = self.q_basis.len();
        if d == 0 {
            return Vec::new();
        }
        let mut cols: Vec<Vec<G>> = self.q_basis.iter().map(vectorize).collect();
        cols.extend(self.sigma_q_basis().iter().map(|x| vectorize(&-x)));
        let kernel = CMatrix::from_columns(&cols, self.n * self.n).rank_and_kernel().1;
        kernel
            .columns()
            .iter()
            .map(|k| {
                let mut acc = CMatrix::zeros(self.n, self.n);
                for (c, q) in k[..d].iter().zip(&self.q_basis) {
                    if !c.is_zero() {
                        acc = &acc + &q.scale(c);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn check_cr_algebra(&self) -> (bool, Vec<CMatrix>) {
        (self.first_open_bracket().is_none(), self.q_cap_sigma_q())
    }

    fn require_subalgebra(&self) -> Result<()> {
        match self.first_open_bracket() {
            Some((i, j)) => Err(Error::NotSubalgebra(i, j)),
            None => Ok(()),
        }
    }

    /// CR dimension and codimension.
    pub fn cr_type(&self) -> Result<(usize, usize)> {
        self.require_subalgebra()?;
        let q = self.q_basis.len();
        let cap = self.q_cap_sigma_q().len();
        Ok((q - cap, self.g_basis.len() - (2 * q - cap)))
    }

    /// Basis of 𝔮 + σ(𝔮): the 𝔮 basis followed by the independent part of σ(𝔮).
    fn q_plus_sigma_q(&self) -> Vec<Vec<G>> {
        let mut vecs: Vec<Vec<G>> = self.q_basis.iter().map(vectorize).collect();
        vecs.extend(self.sigma_q_basis().iter().map(vectorize));
        let keep = independent_subset(&vecs);
        keep.into_iter().map(|i| vecs[i].clone()).collect()
    }

    /// Default T¹'⁰ representatives: elements of σ(𝔮) completing a basis of 𝔮 ∩ σ(𝔮).
    pub fn default_t10(&self) -> Vec<CMatrix> {
        let cap: Vec<Vec<G>> = self.q_cap_sigma_q().iter().map(vectorize).collect();
        let sq = self.sigma_q_basis();
        let mut vecs = cap.clone();
        vecs.extend(sq.iter().map(vectorize));
        independent_subset(&vecs)
            .into_iter()
            .filter(|&i| i >= cap.len())
            .map(|i| sq[i - cap.len()].clone())
            .collect()
    }

    /// Default quotient representatives: ambient basis elements completing 𝔮 + σ(𝔮).
    pub fn default_quotient(&self) -> Vec<CMatrix> {
        let mut vecs = self.q_plus_sigma_q();
        let base = vecs.len();
        vecs.extend(self.g_basis.iter().map(vectorize));
        independent_subset(&vecs)
            .into_iter()
            .filter(|&i| i >= base)
            .map(|i| self.g_basis[i - base].clone())
            .collect()
    }

    /// Levi form as a Hermitian matrix of linear forms.
    ///
    /// Entry `(a, b)` is the quotient class of `i[Z_a, σ(Z_b)]` paired with the labels of
    /// the quotient representatives. Without labels, real parameters `p1..pk` are dual to a
    /// basis of the σ-fixed part of the quotient.
    pub fn param_levi(
        &self,
        t10: Option<&[CMatrix]>,
        quotient: Option<&[CMatrix]>,
        labels: Option<(&[String], &[Param])>,
    ) -> Result<ParamLevi> {
        let (n_cr, k) = self.cr_type()?;
        let nn = self.n * self.n;
        let z = match t10 {
            None => self.default_t10(),
            Some(z) => {
                self.check_t10(z, n_cr)?;
                z.to_vec()
            }
        };
        let qs = match quotient {
            None => {
                if labels.is_some() {
                    return Err(Error::BadComplement("labels need quotient representatives".into()));
                }
                self.default_quotient()
            }
            Some(qs) => qs.to_vec(),
        };
        let mut vecs = self.q_plus_sigma_q();
        let base = vecs.len();
        for (i, x) in qs.iter().enumerate() {
            if x.rows() != self.n || x.cols() != self.n || !ambient_contains(&self.ambient, x) {
                return Err(Error::BadComplement(format!("quotient element {} is not in the algebra", i + 1)));
            }
        }
        vecs.extend(qs.iter().map(vectorize));
        if qs.len() != k || independent_subset(&vecs).len() != vecs.len() {
            return Err(Error::BadComplement(format!(
                "quotient representatives must complete q + sigma(q) with {k} elements"
            )));
        }
        let coords = Coordinates::new(&vecs, nn);
        let project = |x: &CMatrix| -> Vec<G> {
            coords.of(&vectorize(x)).expect("spanning decomposition")[base..].to_vec()
        };
        // σ acting on quotient coordinates: σ̃(c) = S̃ conj(c)
        let s_tilde = CMatrix::from_columns(&qs.iter().map(|x| project(&self.sigma.apply(x))).collect::<Vec<_>>(), k);

        let (params, label_forms) = match labels {
            Some((names, params)) => {
                if names.len() != k {
                    return Err(Error::BadComplement(format!("expected {k} labels")));
                }
                let forms = names
                    .iter()
                    .map(|s| LinearForm::parse(s, params))
                    .collect::<Result<Vec<_>>>()?;
                check_labels(&forms, params, &s_tilde)?;
                (params.to_vec(), forms)
            }
            None => auto_labels(&s_tilde),
        };

        let sz: Vec<CMatrix> = z.iter().map(|x| self.sigma.apply(x)).collect();
        let mut entries = vec![vec![LinearForm::zero(); n_cr]; n_cr];
        for a in 0..n_cr {
            for b in 0..n_cr {
                let lam = project(&bracket(&z[a], &sz[b]).scale(&G::i()));
                let mut f = LinearForm::zero();
                for (l, form) in lam.iter().zip(&label_forms) {
                    if !l.is_zero() {
                        f = f.add(&form.scale(l));
                    }
                }
                entries[a][b] = f;
            }
        }
        Ok(ParamLevi {
            n: n_cr,
            params,
            entries,
        })
    }

    fn check_t10(&self, z: &[CMatrix], n_cr: usize) -> Result<()> {
        let sq: Vec<Vec<G>> = self.sigma_q_basis().iter().map(vectorize).collect();
        let sq_coords = Coordinates::new(&sq, self.n * self.n);
        for (i, x) in z.iter().enumerate() {
            if x.rows() != self.n || x.cols() != self.n || sq_coords.of(&vectorize(x)).is_none() {
                return Err(Error::BadComplement(format!("t10 element {} is not in sigma(q)", i + 1)));
            }
        }
        let mut vecs: Vec<Vec<G>> = self.q_cap_sigma_q().iter().map(vectorize).collect();
        vecs.extend(z.iter().map(vectorize));
        if z.len() != n_cr || independent_subset(&vecs).len() != vecs.len() {
            return Err(Error::BadComplement(format!(
                "t10 representatives must complete q cap sigma(q) with {n_cr} elements"
            )));
        }
        Ok(())
    }

    /// Levi form for a manifest, honouring its optional bases and labels.
    pub fn param_levi_for(&self, input: &HomogeneousInput) -> Result<ParamLevi> {
        let params = input
            .param_names
            .iter()
            .map(|s| Param::parse(s))
            .collect::<Result<Vec<_>>>()?;
        let labels = input.quotient_labels.as_deref().map(|l| (l, params.as_slice()));
        self.param_levi(
            input.t10_complement.as_deref(),
            input.quotient_complement.as_deref(),
            labels,
        )
    }
}

/// Labels must satisfy `ξ(σQ) = conj(ξ(Q))` and determine the parameters.
fn check_labels(forms: &[LinearForm], params: &[Param], s_tilde: &CMatrix) -> Result<()> {
    let k = forms.len();
    for s in 0..k {
        let mut lhs = LinearForm::zero();
        for (r, form) in forms.iter().enumerate() {
            lhs = lhs.add(&form.scale(&s_tilde[(r, s)]));
        }
        if lhs != forms[s].conj_form(params) {
            return Err(Error::BadComplement(format!(
                "label {} is not compatible with the conjugation",
                s + 1
            )));
        }
    }
    // forms as functions of the real coordinates of the parameters
    let mut cols: Vec<Vec<G>> = Vec::new();
    for (p, param) in params.iter().enumerate() {
        let coef = |conj: bool| -> Vec<G> {
            forms
                .iter()
                .map(|f| {
                    f.terms()
                        .find(|&(i, c, _)| i == p && c == conj)
                        .map(|(_, _, v)| v.clone())
                        .unwrap_or_else(G::zero)
                })
                .collect()
        };
        let (c, d) = (coef(false), coef(true));
        match param.kind {
            ParamKind::Real => cols.push(c),
            ParamKind::Complex => {
                cols.push(c.iter().zip(&d).map(|(a, b)| a + b).collect());
                cols.push(c.iter().zip(&d).map(|(a, b)| (a - b).mul_i()).collect());
            }
        }
    }
    if cols.len() != k || (k > 0 && CMatrix::from_columns(&cols, k).rank() != k) {
        return Err(Error::BadComplement(
            "labels do not match the real dimension of the quotient".into(),
        ));
    }
    Ok(())
}

/// Real parameters dual to the first σ̃-fixed vectors among `e_s + S̃e_s`, `i(e_s − S̃e_s)`.
fn auto_labels(s_tilde: &CMatrix) -> (Vec<Param>, Vec<LinearForm>) {
    let k = s_tilde.rows();
    let mut chosen: Vec<Vec<G>> = Vec::new();
    let realify = |v: &[G]| -> Vec<G> {
        v.iter()
            .flat_map(|x| [G::real(x.re.clone()), G::real(x.im.clone())])
            .collect()
    };
    for s in 0..k {
        let col = s_tilde.column(s);
        let plus: Vec<G> = (0..k).map(|r| if r == s { &col[r] + &G::one() } else { col[r].clone() }).collect();
        let minus: Vec<G> = (0..k)
            .map(|r| {
                let e = if r == s { G::one() } else { G::zero() };
                (&e - &col[r]).mul_i()
            })
            .collect();
        for cand in [plus, minus] {
            if chosen.len() == k {
                break;
            }
            let mut trial: Vec<Vec<G>> = chosen.iter().map(|v| realify(v)).collect();
            trial.push(realify(&cand));
            if CMatrix::from_columns(&trial, 2 * k).rank() == trial.len() {
                chosen.push(cand);
            }
        }
    }
    let params: Vec<Param> = (1..=k).map(|i| Param::real(&format!("p{i}"))).collect();
    if k == 0 {
        return (params, Vec::new());
    }
    let beta = CMatrix::from_columns(&chosen, k).inverse().expect("real basis");
    let forms = (0..k)
        .map(|s| {
            let mut f = LinearForm::zero();
            for r in 0..k {
                f.add_term(r, false, beta[(r, s)].clone());
            }
            f
        })
        .collect();
    (params, forms)
}

/// Hermitian matrix of linear forms in real and complex parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamLevi {
    pub n: usize,
    pub params: Vec<Param>,
    pub entries: Vec<Vec<LinearForm>>,
}

impl ParamLevi {
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|f| f.display(&self.params)).collect())
            .collect()
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.entries[a][b] == self.entries[b][a].conj_form(&self.params)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(LinearForm::is_zero)
    }

    /// Names of parameters that occur in some entry.
    pub fn used_params(&self) -> Vec<&str> {
        (0..self.params.len())
            .filter(|&p| self.entries.iter().flatten().any(|f| f.uses(p)))
            .map(|p| self.params[p].name.as_str())
            .collect()
    }

    /// Substitutes values; conjugated complex parameters take the conjugate value.
    pub fn specialize(&self, values: &BTreeMap<String, G>) -> Result<HermitianMatrix> {
        for name in values.keys() {
            if !self.params.iter().any(|p| &p.name == name) {
                return Err(Error::validation("specialize", format!("unknown parameter `{name}`")));
            }
        }
        let mut vals: Vec<Option<G>> = Vec::with_capacity(self.params.len());
        for p in &self.params {
            let v = values.get(&p.name).cloned();
            if let Some(v) = &v {
                if p.kind == ParamKind::Real && !v.is_real() {
                    return Err(Error::NonRealValueForRealParam(p.name.clone()));
                }
            }
            vals.push(v);
        }
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(|f| f.eval(&vals, &self.params)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Ok(HermitianMatrix::zeros(0));
        }
        HermitianMatrix::new(CMatrix::from_rows(rows)?)
    }

    pub fn report(&self, cr_type: (usize, usize)) -> ParamLeviReport {
        ParamLeviReport {
            cr_type: [cr_type.0, cr_type.1],
            param_names: self.params.iter().map(|p| p.to_string()).collect(),
            levi_entries: self.entry_strings(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamLeviReport {
    pub cr_type: [usize; 2],
    pub param_names: Vec<String>,
    pub levi_entries: Vec<Vec<String>>,
}

fn unit(n: usize, r: usize, c: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |i, j| if (i, j) == (r - 1, c - 1) { G::one() } else { G::zero() })
}

fn permutation(n: usize, pi: impl Fn(usize) -> usize) -> CMatrix {
    CMatrix::from_fn(n, n, |r, c| if pi(c + 1) == r + 1 { G::one() } else { G::zero() })
}

/// Bases, labels and parameters reproducing one of the worked matrix examples.
#[derive(Clone, Debug)]
pub struct WorkedExample {
    pub algebra: CRAlgebra,
    pub t10: Vec<CMatrix>,
    pub quotient: Vec<CMatrix>,
    pub labels: Vec<String>,
    pub params: Vec<Param>,
}

impl WorkedExample {
    pub fn param_levi(&self) -> Result<ParamLevi> {
        self.algebra
            .param_levi(Some(&self.t10), Some(&self.quotient), Some((&self.labels, &self.params)))
    }
}

/// 𝔰𝔲(2,4) with the parabolic 𝔮 fixing the flag ⟨e1⟩ ⊂ ⟨e1,…,e4⟩.
pub fn builtin_su24_flag() -> CRAlgebra {
    su24_flag_example().algebra
}

pub fn su24_flag_example() -> WorkedExample {
    let n = 6;
    let mut q = Vec::new();
    let allowed = |r: usize, c: usize| match r {
        1 => true,
        2..=4 => c >= 2,
        _ => c >= 5,
    };
    for r in 1..=n {
        for c in 1..=n {
            if r != c && allowed(r, c) {
                q.push(unit(n, r, c));
            }
        }
    }
    for d in 1..n {
        q.push(&unit(n, d, d) - &unit(n, n, n));
    }
    let b = permutation(n, |i| match i {
        1 => 6,
        2 => 5,
        5 => 2,
        6 => 1,
        x => x,
    });
    let sigma = Conjugation::neg_star_conj(b).expect("invertible");
    let algebra = CRAlgebra::new(n, AmbientSpec::Sl, q, sigma).expect("valid example");
    let quotient_entries = [
        ((3, 1), "w1"),
        ((4, 1), "w2"),
        ((5, 1), "w3"),
        ((6, 1), "i*t1"),
        ((5, 2), "i*t2"),
        ((6, 2), "-conj(w3)"),
        ((6, 3), "-conj(w1)"),
        ((6, 4), "-conj(w2)"),
    ];
    WorkedExample {
        algebra,
        t10: vec![unit(n, 2, 1), unit(n, 5, 3), unit(n, 5, 4)],
        quotient: quotient_entries.iter().map(|&((r, c), _)| unit(n, r, c)).collect(),
        labels: quotient_entries.iter().map(|&(_, l)| l.to_string()).collect(),
        params: vec![
            Param::complex("w1"),
            Param::complex("w2"),
            Param::complex("w3"),
            Param::real("t1"),
            Param::real("t2"),
        ],
    }
}

/// 𝔰𝔬(1,6) with the quadric's isotropy 𝔮, inside the algebra skew for the antidiagonal form.
pub fn builtin_so16_quadric() -> CRAlgebra {
    so16_quadric_example().algebra
}

pub fn so16_quadric_example() -> WorkedExample {
    let n = 7;
    let skew = |r: usize, c: usize| &unit(n, r, c) - &unit(n, 8 - c, 8 - r);
    let pairs = [
        (1, 1),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (2, 1),
        (2, 2),
        (2, 3),
        (2, 4),
        (2, 5),
        (3, 3),
        (3, 4),
        (4, 3),
    ];
    let q = pairs.iter().map(|&(r, c)| skew(r, c)).collect();
    let antidiagonal = permutation(n, |i| 8 - i);
    let b = permutation(n, |i| match i {
        1 => 7,
        7 => 1,
        x => x,
    });
    let sigma = Conjugation::neg_star_conj(b).expect("invertible");
    let algebra = CRAlgebra::new(n, AmbientSpec::So(antidiagonal), q, sigma).expect("valid example");
    WorkedExample {
        algebra,
        t10: vec![skew(3, 2), skew(4, 2), skew(5, 2), skew(6, 1)],
        quotient: vec![skew(3, 1), skew(4, 1), skew(5, 1)],
        labels: vec!["w".into(), "t".into(), "conj(w)".into()],
        params: vec![Param::complex("w"), Param::real("t")],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_examples() {
        let e = |r, c| unit(2, r, c);
        let h = &e(1, 1) - &e(2, 2);
        let a = CRAlgebra::new(2, AmbientSpec::Sl, vec![h.clone(), e(1, 2)], Conjugation::entrywise(2)).unwrap();
        let (ok, cap) = a.check_cr_algebra();
        assert!(ok);
        assert_eq!(cap.len(), 2);
        assert_eq!(a.cr_type().unwrap(), (0, 1));

        let b = CRAlgebra::new(2, AmbientSpec::Sl, vec![e(1, 2), e(2, 1)], Conjugation::entrywise(2)).unwrap();
        assert!(!b.check_cr_algebra().0);
        assert_eq!(b.cr_type(), Err(Error::NotSubalgebra(1, 2)));

        let all = CRAlgebra::new(2, AmbientSpec::Sl, vec![h, e(1, 2), e(2, 1)], Conjugation::entrywise(2)).unwrap();
        assert_eq!(all.cr_type().unwrap(), (0, 0));

        assert_eq!(
            CRAlgebra::new(2, AmbientSpec::Sl, vec![e(1, 2), e(1, 2)], Conjugation::entrywise(2)).unwrap_err(),
            Error::DependentBasis
        );
    }

    #[test]
    fn conjugation_is_antilinear_involution() {
        let ex = su24_flag_example();
        let sigma = ex.algebra.sigma();
        for x in ex.algebra.ambient_basis() {
            let ix = x.scale(&G::i());
            assert_eq!(sigma.apply(&ix), sigma.apply(x).scale(&-G::i()));
            assert_eq!(sigma.apply(&sigma.apply(x)), *x);
        }
    }
}
