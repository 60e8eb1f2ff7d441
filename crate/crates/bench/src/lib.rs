//! Fixtures shared by the benchmarks.

use bigbracket::catalog::{random_graded, random_tensor};
use bigbracket::structures::{derive_pqn_from_pair, PqnQuadruple};
use bigbracket::{builtin, CatalogEntry, CoordinateSystem, GradedPoly, Parity, RandomKind, TensorData};

/// Random odd and even polynomials on `T*ΠA` with `base_dim = 2`, `rank = 4`.
pub fn graded_pair(seed: u64) -> (GradedPoly, GradedPoly) {
    let c = CoordinateSystem::new(2, 4).expect("valid coordinates");
    (random_graded(c, Parity::Odd, seed, 3), random_graded(c, Parity::Even, seed ^ 1, 3))
}

/// A Poisson bivector and a 2-form on `entry`.
pub fn pair(entry: &CatalogEntry, seed: u64) -> (TensorData, TensorData) {
    let pi = random_tensor(RandomKind::Poisson, entry, seed, 3).expect("entry admits a Poisson bivector");
    let omega = random_tensor(RandomKind::TwoForm, entry, seed ^ 1, 3).expect("2-form");
    (pi, omega)
}

/// The quadruple induced by a random pair on `tangent_poly(3,1)`.
pub fn tangent_quadruple(seed: u64) -> (CatalogEntry, PqnQuadruple) {
    let e = builtin("tangent_poly(3,1)").expect("catalog entry");
    let (pi, omega) = pair(&e, seed);
    let q = derive_pqn_from_pair(&pi, &omega, &e.mu()).expect("Poisson pair");
    (e, q)
}
