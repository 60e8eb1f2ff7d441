//! Built-in algebroids and seeded random tensors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::base::BasePoly;
use crate::graded_algebra::{Bidegree, CoordinateSystem, GradedPoly, Parity, Symbol};
use crate::structures::data::increasing_tuples;
use crate::structures::{
    check_poisson, derive_pqn_from_pair, encode_algebroid, CpsTriple, LieAlgebroidData, TensorData, TensorKind,
};
use crate::{q, Error, Rational, Result};

/// How known-Poisson bivectors are produced for an entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PoissonFamily {
    /// Every bivector is Poisson (abelian algebras, rank ≤ 2).
    All,
    /// `span{e_{a} ∧ e_{b}}` for the listed pairs (0-based).
    Span(&'static [(usize, usize)]),
    /// `f(x) e_a ∧ e_b` for one pair.
    TangentSingle,
    /// Rejection sampling only.
    Rejection,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebroid: LieAlgebroidData,
    /// A bivector known to be Poisson, when the entry has a natural one.
    pub poisson: Option<TensorData>,
    pub note: &'static str,
    coeff_degree: u32,
    family: PoissonFamily,
}

impl CatalogEntry {
    pub fn mu(&self) -> GradedPoly {
        encode_algebroid(&self.algebroid)
    }

    pub fn rank(&self) -> usize {
        self.algebroid.rank()
    }

    pub fn base_dim(&self) -> usize {
        self.algebroid.base_dim()
    }
}

/// All names accepted by [`builtin`], with default parameters filled in.
pub const NAMES: &[&str] = &["abelian(n)", "aff1", "heisenberg3", "so3", "sl2", "tangent_poly(n,deg)"];

fn lie_algebra(rank: usize, brackets: &[(usize, usize, usize, i64)]) -> LieAlgebroidData {
    LieAlgebroidData::from_sparse(
        0,
        rank,
        vec![],
        brackets
            .iter()
            .map(|&(a, b, k, c)| (a, b, k, BasePoly::from_int(0, c))),
    )
    .expect("static table")
}

fn single_bivector(base_dim: usize, rank: usize, a: usize, b: usize, c: i64) -> TensorData {
    TensorData::from_components(
        TensorKind::BIVECTOR,
        base_dim,
        rank,
        vec![(vec![a, b], BasePoly::from_int(base_dim, c))],
    )
    .expect("single component")
}

fn parse_args(s: &str) -> Option<(&str, Vec<usize>)> {
    let s = s.trim();
    match s.find('(') {
        None => Some((s, vec![])),
        Some(i) => {
            let inner = s[i + 1..].strip_suffix(')')?;
            let args: Option<Vec<usize>> = inner.split(',').map(|t| t.trim().parse().ok()).collect();
            Some((&s[..i], args?))
        }
    }
}

/// Look up a catalog entry: `abelian(n)`, `aff1`, `heisenberg3`, `so3`,
/// `sl2` or `tangent_poly(n,deg)`.
pub fn builtin(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownCatalog(name.to_string());
    let (head, args) = parse_args(name).ok_or_else(unknown)?;
    let entry = match (head, args.as_slice()) {
        ("abelian", &[n]) if n >= 1 => CatalogEntry {
            name: format!("abelian({n})"),
            algebroid: LieAlgebroidData::abelian(0, n)?,
            poisson: (n >= 2).then(|| single_bivector(0, n, 0, 1, 1)),
            note: "abelian Lie algebra; every bivector is Poisson and μ = 0",
            coeff_degree: 0,
            family: PoissonFamily::All,
        },
        ("aff1", &[]) => CatalogEntry {
            name: "aff1".into(),
            algebroid: lie_algebra(2, &[(0, 1, 1, 1)]),
            poisson: Some(single_bivector(0, 2, 0, 1, 1)),
            note: "[e1,e2] = e2; rank 2, so every bivector is Poisson",
            coeff_degree: 0,
            family: PoissonFamily::All,
        },
        ("heisenberg3", &[]) => CatalogEntry {
            name: "heisenberg3".into(),
            algebroid: lie_algebra(3, &[(0, 1, 2, 1)]),
            poisson: Some(single_bivector(0, 3, 0, 2, 1)),
            note: "[e1,e2] = e3 with e3 central; bivectors e1∧e3, e2∧e3 are Poisson",
            coeff_degree: 0,
            family: PoissonFamily::Span(&[(0, 2), (1, 2)]),
        },
        ("so3", &[]) => CatalogEntry {
            name: "so3".into(),
            algebroid: lie_algebra(3, &[(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)]),
            poisson: None,
            note: "[e1,e2] = e3 and cyclic; no nonzero Poisson bivector",
            coeff_degree: 0,
            family: PoissonFamily::Rejection,
        },
        ("sl2", &[]) => CatalogEntry {
            name: "sl2".into(),
            algebroid: lie_algebra(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]),
            poisson: Some(single_bivector(0, 3, 0, 1, 1)),
            note: "basis (h,e,f): [h,e] = 2e, [h,f] = −2f, [e,f] = h; h∧e and h∧f are Poisson",
            coeff_degree: 0,
            family: PoissonFamily::Span(&[(0, 1)]),
        },
        ("tangent_poly", &[n, deg]) if n >= 1 => CatalogEntry {
            name: format!("tangent_poly({n},{deg})"),
            algebroid: LieAlgebroidData::from_sparse(
                n,
                n,
                (0..n).map(|a| (a, a, BasePoly::one(n))),
                Vec::new(),
            )?,
            poisson: (n >= 2).then(|| single_bivector(n, n, 0, 1, 1)),
            note: "tangent algebroid of an n-dimensional base: ρ = id, c = 0",
            coeff_degree: deg as u32,
            family: PoissonFamily::TangentSingle,
        },
        _ => return Err(unknown()),
    };
    Ok(entry)
}

/// Kinds of random data a suite can request.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomKind {
    Bivector,
    /// A bivector that passes `check_poisson`.
    Poisson,
    Endomorphism,
    TwoForm,
    ThreeForm,
}

/// Random polynomial of degree ≤ `deg` in `nvars` variables with integer
/// coefficients in `[−bound, bound]`.
pub fn random_poly(rng: &mut impl Rng, nvars: usize, deg: u32, bound: i64) -> BasePoly {
    let mut terms = Vec::new();
    terms.push((vec![0; nvars], q(rng.gen_range(-bound..=bound))));
    if nvars > 0 && deg > 0 {
        for _ in 0..2 {
            let mut e = vec![0u32; nvars];
            let total = rng.gen_range(1..=deg);
            for _ in 0..total {
                e[rng.gen_range(0..nvars)] += 1;
            }
            if rng.gen_bool(0.5) {
                terms.push((e, q(rng.gen_range(-bound..=bound))));
            }
        }
    }
    BasePoly::from_terms(nvars, terms)
}

fn random_table(rng: &mut ChaCha8Rng, kind: TensorKind, m: usize, r: usize, deg: u32, bound: i64) -> TensorData {
    let comps: Vec<(Vec<usize>, BasePoly)> = match kind {
        TensorKind::Endomorphism => (0..r)
            .flat_map(|a| (0..r).map(move |b| vec![a, b]))
            .collect::<Vec<_>>()
            .into_iter()
            .map(|idx| (idx, random_poly(rng, m, deg, bound)))
            .collect(),
        _ => increasing_tuples(r, kind.arity())
            .into_iter()
            .map(|idx| (idx, random_poly(rng, m, deg, bound)))
            .collect(),
    };
    TensorData::from_components(kind, m, r, comps).expect("generated in canonical form")
}

const POISSON_ATTEMPTS: usize = 64;

/// Deterministic random tensor for `entry`. Poisson requests draw from the
/// entry's known family and are always validated by `check_poisson`.
pub fn random_tensor(kind: RandomKind, entry: &CatalogEntry, seed: u64, coeff_bound: i64) -> Result<TensorData> {
    if coeff_bound < 1 {
        return Err(Error::Precondition("coefficient bound must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, r, deg) = (entry.base_dim(), entry.rank(), entry.coeff_degree);
    let tk = match kind {
        RandomKind::Bivector | RandomKind::Poisson => TensorKind::BIVECTOR,
        RandomKind::Endomorphism => TensorKind::Endomorphism,
        RandomKind::TwoForm => TensorKind::TWO_FORM,
        RandomKind::ThreeForm => TensorKind::THREE_FORM,
    };
    if kind != RandomKind::Poisson {
        return Ok(random_table(&mut rng, tk, m, r, deg, coeff_bound));
    }
    let mu = entry.mu();
    let is_poisson = |t: &TensorData| -> Result<bool> { Ok(check_poisson(t, &mu)?.passed()) };
    let family = if r <= 2 { PoissonFamily::All } else { entry.family };
    let candidate = match family {
        PoissonFamily::All => Some(random_table(&mut rng, tk, m, r, deg, coeff_bound)),
        PoissonFamily::Span(pairs) => {
            let mut t = TensorData::zeros(tk, m, r);
            for &(a, b) in pairs {
                let c = rng.gen_range(-coeff_bound..=coeff_bound);
                t = t.add(&single_bivector(m, r, a, b, c))?;
            }
            Some(t)
        }
        PoissonFamily::TangentSingle => {
            let a = rng.gen_range(0..r);
            let mut b = rng.gen_range(0..r - 1);
            if b >= a {
                b += 1;
            }
            let f = random_poly(&mut rng, m, deg, coeff_bound);
            Some(TensorData::from_components(tk, m, r, vec![(vec![a, b], f)])?)
        }
        PoissonFamily::Rejection => None,
    };
    if let Some(t) = candidate {
        if is_poisson(&t)? {
            return Ok(t);
        }
    }
    // Rejection sampling over sparse and dense candidates.
    for attempt in 0..POISSON_ATTEMPTS {
        let t = if attempt % 2 == 0 {
            let a = rng.gen_range(0..r);
            let mut b = rng.gen_range(0..r - 1);
            if b >= a {
                b += 1;
            }
            let c = rng.gen_range(1..=coeff_bound);
            single_bivector(m, r, a, b, c)
        } else {
            random_table(&mut rng, tk, m, r, deg, coeff_bound)
        };
        if !t.is_zero() && is_poisson(&t)? {
            return Ok(t);
        }
    }
    Err(Error::NoPoisson {
        entry: entry.name.clone(),
        attempts: POISSON_ATTEMPTS,
    })
}

/// Random anchor and structure constants, antisymmetric by construction
/// but with no attempt at the Jacobi identity.
pub fn random_algebroid(base_dim: usize, rank: usize, seed: u64, coeff_bound: i64) -> Result<LieAlgebroidData> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut anchor = Vec::new();
    for a in 0..rank {
        for i in 0..base_dim {
            if rng.gen_bool(0.5) {
                anchor.push((a, i, random_poly(&mut rng, base_dim, 1, coeff_bound)));
            }
        }
    }
    let mut brackets = Vec::new();
    for a in 0..rank {
        for b in a + 1..rank {
            for k in 0..rank {
                if rng.gen_bool(0.4) {
                    brackets.push((a, b, k, random_poly(&mut rng, base_dim, 1, coeff_bound)));
                }
            }
        }
    }
    LieAlgebroidData::from_sparse(base_dim, rank, anchor, brackets)
}

/// Largest number of generators in a monomial drawn by [`random_graded`].
pub const GRADED_MAX_DEGREE: usize = 3;

fn random_monomial(
    rng: &mut ChaCha8Rng,
    coords: CoordinateSystem,
    n_theta: usize,
    n_xi: usize,
    n_p: usize,
    n_x: usize,
) -> Vec<Symbol> {
    let (m, r) = (coords.base_dim(), coords.rank());
    let pick_subset = |rng: &mut ChaCha8Rng, k: usize| -> Vec<usize> {
        rand::seq::index::sample(rng, r, k).into_vec()
    };
    let mut out: Vec<Symbol> = Vec::new();
    out.extend(pick_subset(rng, n_theta).into_iter().map(Symbol::Theta));
    out.extend(pick_subset(rng, n_xi).into_iter().map(Symbol::Xi));
    if m > 0 {
        out.extend((0..n_p).map(|_| Symbol::P(rng.gen_range(0..m))));
        out.extend((0..n_x).map(|_| Symbol::X(rng.gen_range(0..m))));
    }
    out
}

fn nonzero_coeff(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let c = rng.gen_range(1..=bound);
    q(if rng.gen_bool(0.5) { c } else { -c })
}

/// Random element of fixed parity: up to three terms, each a product of at
/// most [`GRADED_MAX_DEGREE`] generators.
pub fn random_graded(coords: CoordinateSystem, parity: Parity, seed: u64, coeff_bound: i64) -> GradedPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, r) = (coords.base_dim(), coords.rank());
    let mut out = GradedPoly::zero(coords);
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let odd_choices: Vec<usize> = (0..=GRADED_MAX_DEGREE.min(2 * r))
            .filter(|k| (k % 2 == 1) == parity.is_odd())
            .collect();
        let n_odd = odd_choices[rng.gen_range(0..odd_choices.len())];
        let n_theta = rng.gen_range(n_odd.saturating_sub(r)..=n_odd.min(r));
        let n_even = if m > 0 { rng.gen_range(0..=GRADED_MAX_DEGREE - n_odd) } else { 0 };
        let n_p = rng.gen_range(0..=n_even);
        let symbols = random_monomial(&mut rng, coords, n_theta, n_odd - n_theta, n_p, n_even - n_p);
        let c = nonzero_coeff(&mut rng, coeff_bound);
        out = &out + &GradedPoly::normalize(coords, c, &symbols).expect("symbols in range");
    }
    out
}

/// Random bihomogeneous element of bidegree `b`, or `None` when the
/// coordinate system has no monomial of that bidegree.
pub fn random_bihomogeneous(coords: CoordinateSystem, b: Bidegree, seed: u64, coeff_bound: i64) -> Option<GradedPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, r) = (coords.base_dim(), coords.rank());
    let (eps, delta) = (b.eps as usize, b.delta as usize);
    let max_p = if m > 0 { eps.min(delta) } else { 0 };
    let feasible: Vec<usize> = (0..=max_p).filter(|&np| eps - np <= r && delta - np <= r).collect();
    if feasible.is_empty() {
        return None;
    }
    let mut out = GradedPoly::zero(coords);
    for _ in 0..rng.gen_range(1..=3) {
        let n_p = feasible[rng.gen_range(0..feasible.len())];
        let n_x = if m > 0 { rng.gen_range(0..=1) } else { 0 };
        let symbols = random_monomial(&mut rng, coords, eps - n_p, delta - n_p, n_p, n_x);
        let c = nonzero_coeff(&mut rng, coeff_bound);
        out = &out + &GradedPoly::normalize(coords, c, &symbols).expect("symbols in range");
    }
    Some(out)
}

/// Families of almost c.p.s. triples `J = π + N + σ` with a background `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CpsFamily {
    /// `(π, π♯∘ω♭, −ω_N, λ = 0)` on `(A, μ − dω)` for a Poisson `π` and a
    /// random `ω`; always integrable.
    Subtangent,
    /// Rank 2: constant invertible `π`, `σ♭ = −(π♯)⁻¹`, `N = 0`, `λ = −1`.
    ComplexRank2,
    /// Rank 2: `N` a rotation by a quarter turn, `π = σ = 0`, `λ = −1`.
    RotationRank2,
    /// `N = diag(±1)`, `π = σ = 0`, `λ = 1`, random top-degree `H`.
    Product,
    /// `N = c e_i ⊗ e^j` with `i ≠ j`, `π = σ = 0`, `λ = 0`, random
    /// top-degree `H`.
    Nilpotent,
    /// `N = 0`, random `π`, `σ = 0`, `λ = 0`, random top-degree `H`.
    BivectorOnly,
}

impl CpsFamily {
    pub const ALL: [CpsFamily; 6] = [
        CpsFamily::Subtangent,
        CpsFamily::ComplexRank2,
        CpsFamily::RotationRank2,
        CpsFamily::Product,
        CpsFamily::Nilpotent,
        CpsFamily::BivectorOnly,
    ];

    /// Whether the family can be built on `entry`.
    pub fn applies_to(self, entry: &CatalogEntry) -> bool {
        match self {
            CpsFamily::ComplexRank2 | CpsFamily::RotationRank2 => entry.rank() == 2,
            CpsFamily::Subtangent => entry.family != PoissonFamily::Rejection || entry.rank() <= 2,
            _ => true,
        }
    }
}

/// A top-degree form is closed for dimensional reasons, so this is a safe
/// background on any entry of rank 3; other ranks get `H = 0`.
fn random_background(rng: &mut ChaCha8Rng, entry: &CatalogEntry, bound: i64) -> TensorData {
    let (m, r) = (entry.base_dim(), entry.rank());
    let mut h = TensorData::zeros(TensorKind::THREE_FORM, m, r);
    if r == 3 {
        let f = random_poly(rng, m, entry.coeff_degree, bound);
        h = TensorData::from_components(TensorKind::THREE_FORM, m, r, vec![(vec![0, 1, 2], f)])
            .expect("single component");
    }
    h
}

/// Deterministic almost c.p.s. triple of the given family together with
/// its background 3-form.
pub fn random_cps(family: CpsFamily, entry: &CatalogEntry, seed: u64, coeff_bound: i64) -> Result<(CpsTriple, TensorData)> {
    if !family.applies_to(entry) {
        return Err(Error::Precondition(format!("{family:?} does not apply to {}", entry.name)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, r) = (entry.base_dim(), entry.rank());
    let endo = |f: &dyn Fn(usize, usize) -> i64| {
        let comps = (0..r)
            .flat_map(|a| (0..r).map(move |b| (a, b)))
            .map(|(a, b)| (vec![a, b], BasePoly::from_int(m, f(a, b))))
            .collect::<Vec<_>>();
        TensorData::from_components(TensorKind::Endomorphism, m, r, comps).expect("square table")
    };
    match family {
        CpsFamily::Subtangent => {
            let pi = random_tensor(RandomKind::Poisson, entry, rng.gen(), coeff_bound)?;
            let omega = random_tensor(RandomKind::TwoForm, entry, rng.gen(), coeff_bound)?;
            let quad = derive_pqn_from_pair(&pi, &omega, &entry.mu())?;
            let sigma = omega.form_composed(&quad.n)?.scale(&q(-1));
            Ok((CpsTriple::new(pi, quad.n, sigma, 0)?, quad.h))
        }
        CpsFamily::ComplexRank2 => {
            let c = rng.gen_range(1..=coeff_bound) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let pi = single_bivector(m, r, 0, 1, c);
            let sigma = TensorData::from_components(
                TensorKind::TWO_FORM,
                m,
                r,
                vec![(vec![0, 1], BasePoly::constant(m, Rational::new(1.into(), c.into())))],
            )?;
            let n = TensorData::zeros(TensorKind::Endomorphism, m, r);
            Ok((CpsTriple::new(pi, n, sigma, -1)?, TensorData::zeros(TensorKind::THREE_FORM, m, r)))
        }
        CpsFamily::RotationRank2 => {
            let n = endo(&|a, b| match (a, b) {
                (0, 1) => -1,
                (1, 0) => 1,
                _ => 0,
            });
            let mut j = CpsTriple::zero(m, r, -1)?;
            j.n = n;
            Ok((j, TensorData::zeros(TensorKind::THREE_FORM, m, r)))
        }
        CpsFamily::Product => {
            let signs: Vec<i64> = (0..r).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
            let mut j = CpsTriple::zero(m, r, 1)?;
            j.n = endo(&|a, b| if a == b { signs[a] } else { 0 });
            Ok((j, random_background(&mut rng, entry, coeff_bound)))
        }
        CpsFamily::Nilpotent => {
            let i = rng.gen_range(0..r);
            let mut k = rng.gen_range(0..r - 1);
            if k >= i {
                k += 1;
            }
            let c = rng.gen_range(1..=coeff_bound);
            let mut j = CpsTriple::zero(m, r, 0)?;
            j.n = endo(&|a, b| if (a, b) == (i, k) { c } else { 0 });
            Ok((j, random_background(&mut rng, entry, coeff_bound)))
        }
        CpsFamily::BivectorOnly => {
            let mut j = CpsTriple::zero(m, r, 0)?;
            j.pi = random_table(&mut rng, TensorKind::BIVECTOR, m, r, entry.coeff_degree, coeff_bound);
            Ok((j, random_background(&mut rng, entry, coeff_bound)))
        }
    }
}
