//! Fixed inputs shared by the benchmarks.

use curvelab_core::field::parse_poly;
use curvelab_core::hyperelliptic::HyperellipticCurve;
use curvelab_core::Field;

/// First squarefree `y^2 = x^(2g+1) + x + c`, c = 1, 2, .., over GF(p^k).
pub fn sample_curve(p: u64, k: usize, genus: usize) -> HyperellipticCurve {
    let field = Field::new(p, k).expect("valid field");
    (1..p)
        .find_map(|c| {
            let f = parse_poly(&field, &format!("x^{} + x + {c}", 2 * genus + 1)).ok()?;
            HyperellipticCurve::new(f).ok()
        })
        .expect("some constant gives a squarefree polynomial")
}
