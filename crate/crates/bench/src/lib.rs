//! Fixtures shared by the benchmarks.

use levikit_core::almost::AlmostComplex;
use levikit_core::embedded::EmbeddedCR;
use levikit_core::exact::{CMatrix, GaussianRational, HermitianMatrix};
use levikit_core::parser::{parse_real_poly, parse_wpoly};
use levikit_core::poly::RealPoly;
use num_traits::Zero;

/// Hermitian matrix with deterministic Gaussian rational entries.
pub fn hermitian(n: usize) -> HermitianMatrix {
    let mut m = CMatrix::zeros(n, n);
    for r in 0..n {
        m[(r, r)] = GaussianRational::frac(r as i64 * 3 % 7 - 3, 1 + r as i64 % 3);
        for c in r + 1..n {
            let v = GaussianRational::ints((r * 5 + c) as i64 % 5 - 2, (r + 2 * c) as i64 % 3 - 1);
            let v = if (r + c) % 4 == 0 { GaussianRational::zero() } else { v };
            m[(c, r)] = v.conj();
            m[(r, c)] = v;
        }
    }
    HermitianMatrix::new(m).expect("Hermitian by construction")
}

pub fn sphere(m: usize) -> EmbeddedCR {
    let terms: Vec<String> = (1..=m).map(|k| format!("z{k}*zbar{k}")).collect();
    let rho = parse_wpoly(&format!("{} - 1", terms.join(" + ")), m).expect("valid polynomial");
    EmbeddedCR::new(m, vec![rho]).expect("valid manifold")
}

/// Almost complex structure on R^4 that is not integrable.
pub fn non_closed() -> AlmostComplex {
    let rows = [
        ["0", "-1", "-2*x2", "-2*x1"],
        ["1", "0", "-2*x1", "2*x2"],
        ["0", "0", "0", "-1"],
        ["0", "0", "1", "0"],
    ];
    let j: Vec<Vec<RealPoly>> = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_real_poly(s, 4).expect("valid polynomial")).collect())
        .collect();
    AlmostComplex::new(j).expect("J squares to -1")
}
