//! Algebraic invariants checked on random inputs.

use bigbracket::catalog::{
    builtin, random_algebroid, random_bihomogeneous, random_graded, random_tensor, CpsFamily, RandomKind,
};
use bigbracket::structures::{
    check_pqn_background, decode_tensor, encode_algebroid, encode_tensor, n_squared, CpsTriple, PqnQuadruple,
    Residual,
};
use bigbracket::tensor_oracle::{self as oracle, GeneralizedSection};
use bigbracket::{
    ad, bracket, twist_exp, twist_exp_counted, BasePoly, Bidegree, CoordinateSystem, GradedPoly, Parity, Rational,
    Symbol, TensorData, TensorKind,
};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn parity(odd: bool) -> Parity {
    if odd {
        Parity::Odd
    } else {
        Parity::Even
    }
}

fn sign(f_odd: bool, g_odd: bool) -> Rational {
    q(if f_odd && g_odd { -1 } else { 1 })
}

/// Coordinates with base dimension ≤ 2 and rank ≤ 4.
fn coords() -> impl Strategy<Value = CoordinateSystem> {
    (0usize..=2, 1usize..=4).prop_map(|(m, r)| CoordinateSystem::new(m, r).unwrap())
}

fn graded(c: CoordinateSystem, odd: bool, seed: u64) -> GradedPoly {
    random_graded(c, parity(odd), seed, 3)
}

fn bideg() -> impl Strategy<Value = Bidegree> {
    (0u32..=3, 0u32..=3).prop_map(|(e, d)| Bidegree::new(e, d))
}

/// Constant-plus-linear coefficient from three small integers.
fn coeff(m: usize, c: &[i64]) -> BasePoly {
    let mut f = BasePoly::from_int(m, c[0]);
    if m > 0 {
        f = &f + &BasePoly::var(m, 0).scale(&q(c[1]));
    }
    if m > 1 {
        f = &f + &BasePoly::var(m, 1).scale(&q(c[2]));
    }
    f
}

fn tuples(rank: usize, k: usize, increasing: bool) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                let lo = if increasing { t.last().map_or(0, |&l| l + 1) } else { 0 };
                (lo..rank).map(move |i| [t.clone(), vec![i]].concat())
            })
            .collect();
    }
    out
}

/// A tensor whose independent components are read cyclically from `raw`.
fn tensor(kind: TensorKind, m: usize, r: usize, raw: &[i64]) -> TensorData {
    let antisym = kind.is_antisymmetric();
    let comps = tuples(r, kind.arity(), antisym).into_iter().enumerate().map(|(k, idx)| {
        let c: Vec<i64> = (0..3).map(|j| raw[(3 * k + j) % raw.len()]).collect();
        (idx, coeff(m, &c))
    });
    TensorData::from_components(kind, m, r, comps).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn product_is_supercommutative(c in coords(), fo: bool, go: bool, s1: u64, s2: u64) {
        let (f, g) = (graded(c, fo, s1), graded(c, go, s2));
        prop_assert_eq!(&f * &g, (&g * &f).scale(&sign(fo, go)));
    }

    #[test]
    fn bracket_is_graded_antisymmetric(c in coords(), fo: bool, go: bool, s1: u64, s2: u64) {
        let (f, g) = (graded(c, fo, s1), graded(c, go, s2));
        let fg = bracket(&f, &g).unwrap();
        let gf = bracket(&g, &f).unwrap();
        prop_assert_eq!(fg, -gf.scale(&sign(fo, go)));
    }

    #[test]
    fn bracket_is_a_biderivation(c in coords(), fo: bool, go: bool, ho: bool, s: u64) {
        let (f, g, h) = (graded(c, fo, s), graded(c, go, s ^ 1), graded(c, ho, s ^ 2));
        let lhs = bracket(&f, &(&g * &h)).unwrap();
        let rhs = &(&bracket(&f, &g).unwrap() * &h) + &(&g * &bracket(&f, &h).unwrap()).scale(&sign(fo, go));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_satisfies_jacobi(c in coords(), fo: bool, go: bool, ho: bool, s: u64) {
        let (f, g, h) = (graded(c, fo, s), graded(c, go, s ^ 1), graded(c, ho, s ^ 2));
        let lhs = bracket(&f, &bracket(&g, &h).unwrap()).unwrap();
        let rhs = &bracket(&bracket(&f, &g).unwrap(), &h).unwrap()
            + &bracket(&g, &bracket(&f, &h).unwrap()).unwrap().scale(&sign(fo, go));
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_is_associative(c in coords(), fo: bool, go: bool, ho: bool, s: u64) {
        let (f, g, h) = (graded(c, fo, s), graded(c, go, s ^ 1), graded(c, ho, s ^ 2));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn bidegrees_add_under_product(c in coords(), b1 in bideg(), b2 in bideg(), s: u64) {
        let f = random_bihomogeneous(c, b1, s, 3);
        let g = random_bihomogeneous(c, b2, s ^ 1, 3);
        if let (Some(f), Some(g)) = (f, g) {
            let p = &f * &g;
            prop_assert!(p.is_zero() || p.bidegree() == Some(b1 + b2));
        }
    }

    #[test]
    fn bracket_drops_bidegree_by_one_one(c in coords(), b1 in bideg(), b2 in bideg(), s: u64) {
        let f = random_bihomogeneous(c, b1, s, 3);
        let g = random_bihomogeneous(c, b2, s ^ 1, 3);
        if let (Some(f), Some(g)) = (f, g) {
            let w = bracket(&f, &g).unwrap();
            for (b, _) in w.bidegree_components() {
                prop_assert_eq!(
                    Bidegree::new(b.eps + 1, b.delta + 1),
                    b1 + b2
                );
            }
        }
    }

    #[test]
    fn normal_form_is_stable_and_sparse(c in coords(), fo: bool, go: bool, s1: u64, s2: u64) {
        let (f, g) = (graded(c, fo, s1), graded(c, go, s2));
        for p in [&f + &g, &f * &g, &f - &f, bracket(&f, &g).unwrap()] {
            for (m, k) in p.terms() {
                prop_assert!(*k != q(0));
                // Rebuilding a stored monomial from its own symbols is the identity.
                let mut syms: Vec<Symbol> = m.theta_indices().into_iter().map(Symbol::Theta).collect();
                syms.extend(m.xi_indices().into_iter().map(Symbol::Xi));
                for (i, &e) in m.x_exponents().iter().enumerate() {
                    syms.extend(std::iter::repeat_n(Symbol::X(i), e as usize));
                }
                for (i, &e) in m.p_exponents().iter().enumerate() {
                    syms.extend(std::iter::repeat_n(Symbol::P(i), e as usize));
                }
                let rebuilt = GradedPoly::normalize(c, k.clone(), &syms).unwrap();
                prop_assert_eq!(rebuilt.terms().count(), 1);
                prop_assert_eq!(rebuilt.coefficient(m), k.clone());
            }
        }
    }

    #[test]
    fn twist_is_a_bracket_automorphism(
        c in coords(), use_form: bool, fo: bool, go: bool, s: u64, k in 1i64..=3,
    ) {
        let gen = if use_form { Bidegree::new(0, 2) } else { Bidegree::new(2, 0) };
        prop_assume!(c.rank() >= 2);
        let phi = random_bihomogeneous(c, gen, s, 3).unwrap().scale(&q(k));
        let (f, g) = (graded(c, fo, s ^ 1), graded(c, go, s ^ 2));
        let tw = |x: &GradedPoly| twist_exp(&phi, x).unwrap();
        prop_assert_eq!(bracket(&tw(&f), &tw(&g)).unwrap(), tw(&bracket(&f, &g).unwrap()));
    }

    #[test]
    fn twist_by_a_two_form_terminates_early(c in coords(), b in bideg(), s: u64) {
        prop_assume!(c.rank() >= 2);
        let phi = random_bihomogeneous(c, Bidegree::new(0, 2), s, 3).unwrap();
        if let Some(f) = random_bihomogeneous(c, b, s ^ 1, 3) {
            let (_, steps) = twist_exp_counted(&phi, &f).unwrap();
            prop_assert!(steps <= b.eps as usize + 1, "{} steps for ε = {}", steps, b.eps);
        }
    }

    #[test]
    fn encode_decode_roundtrip(
        m in 0usize..=2, r in 1usize..=4, which in 0usize..5,
        raw in proptest::collection::vec(-3i64..=3, 3..60),
    ) {
        let kind = [
            TensorKind::Multivector(1),
            TensorKind::BIVECTOR,
            TensorKind::Form(1),
            TensorKind::TWO_FORM,
            TensorKind::Endomorphism,
        ][which];
        let t = tensor(kind, m, r, &raw);
        prop_assert_eq!(decode_tensor(&encode_tensor(&t), kind).unwrap(), t);
    }

    #[test]
    fn three_forms_roundtrip(m in 0usize..=2, r in 3usize..=4, raw in proptest::collection::vec(-3i64..=3, 3..40)) {
        let t = tensor(TensorKind::THREE_FORM, m, r, &raw);
        prop_assert_eq!(decode_tensor(&encode_tensor(&t), TensorKind::THREE_FORM).unwrap(), t);
    }

    #[test]
    fn random_generation_is_deterministic(seed: u64, which in 0usize..5) {
        let e = builtin("tangent_poly(2,1)").unwrap();
        let kind = [
            RandomKind::Bivector,
            RandomKind::Poisson,
            RandomKind::Endomorphism,
            RandomKind::TwoForm,
            RandomKind::ThreeForm,
        ][which];
        prop_assert_eq!(random_tensor(kind, &e, seed, 3).unwrap(), random_tensor(kind, &e, seed, 3).unwrap());
    }

    #[test]
    fn orthogonality_of_cps_matrices(
        m in 0usize..=1, r in 1usize..=3, lambda in -1i64..=1,
        raw in proptest::collection::vec(-3i64..=3, 3..40), u in 0usize..6, v in 0usize..6,
    ) {
        let j = CpsTriple::new(
            tensor(TensorKind::BIVECTOR, m, r, &raw),
            tensor(TensorKind::Endomorphism, m, r, &raw[1..]),
            tensor(TensorKind::TWO_FORM, m, r, &raw[2..]),
            lambda,
        )
        .unwrap();
        let x = GeneralizedSection::basis(m, r, u % (2 * r));
        let y = GeneralizedSection::basis(m, r, v % (2 * r));
        prop_assert_eq!(x.pairing(&y), y.pairing(&x));
        let lhs = &oracle::j_apply(&j, &x).pairing(&y) + &x.pairing(&oracle::j_apply(&j, &y));
        prop_assert!(lhs.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// On any table, `{μ,{μ,f}} = {½{μ,μ}, f}`; on a Lie algebroid both vanish.
    #[test]
    fn adjoint_of_mu_squares_to_half_its_square(seed: u64, base in 0usize..=1, fo: bool, s: u64) {
        let alg = random_algebroid(base, 3, seed, 2).unwrap();
        let mu = encode_algebroid(&alg);
        let half = bracket(&mu, &mu).unwrap().scale(&Rational::new(1.into(), 2.into()));
        let f = graded(alg.coords(), fo, s);
        prop_assert_eq!(ad(&mu).apply_n(&f, 2).unwrap(), bracket(&half, &f).unwrap());
    }

    #[test]
    fn differential_squares_to_zero_on_lie_algebroids(which in 0usize..6, s: u64) {
        let names = ["aff1", "heisenberg3", "so3", "sl2", "tangent_poly(2,1)", "tangent_poly(3,1)"];
        let e = builtin(names[which]).unwrap();
        let w = random_tensor(RandomKind::TwoForm, &e, s, 3).unwrap();
        let dd = oracle::cartan_d(&e.algebroid, &oracle::cartan_d(&e.algebroid, &w));
        prop_assert!(dd.is_zero());
        let f = tensor(TensorKind::Form(1), e.base_dim(), e.rank(), &[1, (s % 5) as i64 - 2, 2, -1, 3]);
        let dd = oracle::cartan_d(&e.algebroid, &oracle::cartan_d(&e.algebroid, &f));
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn schouten_is_graded_antisymmetric_and_jacobi(
        which in 0usize..4, k1 in 1usize..=2, k2 in 1usize..=2, k3 in 1usize..=2,
        raw in proptest::collection::vec(-2i64..=2, 6..30),
    ) {
        let names = ["heisenberg3", "so3", "sl2", "tangent_poly(3,1)"];
        let e = builtin(names[which]).unwrap();
        let (m, r, alg) = (e.base_dim(), e.rank(), &e.algebroid);
        let p = tensor(TensorKind::Multivector(k1), m, r, &raw);
        let qq = tensor(TensorKind::Multivector(k2), m, r, &raw[1..]);
        let rr = tensor(TensorKind::Multivector(k3), m, r, &raw[2..]);
        let s = |a: usize, b: usize| q(if (a - 1) * (b - 1) % 2 == 1 { -1 } else { 1 });
        let pq = oracle::schouten(alg, &p, &qq);
        let qp = oracle::schouten(alg, &qq, &p);
        prop_assert!(pq.add(&qp.scale(&s(k1, k2))).unwrap().is_zero());
        if k1 + k2 + k3 <= 4 {
            let lhs = oracle::schouten(alg, &p, &oracle::schouten(alg, &qq, &rr));
            let rhs = oracle::schouten(alg, &pq, &rr)
                .add(&oracle::schouten(alg, &qq, &oracle::schouten(alg, &p, &rr)).scale(&s(k1, k2)))
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    /// With `H = 0` the background terms vanish and each condition is the
    /// one of a Poisson quasi-Nijenhuis structure.
    #[test]
    fn zero_background_reduces_to_the_plain_conditions(which in 0usize..4, s: u64) {
        let names = ["aff1", "heisenberg3", "sl2", "tangent_poly(3,1)"];
        let e = builtin(names[which]).unwrap();
        let mu = e.mu();
        let pi = random_tensor(RandomKind::Bivector, &e, s, 2).unwrap();
        let n = random_tensor(RandomKind::Endomorphism, &e, s ^ 1, 2).unwrap();
        let psi = random_tensor(RandomKind::ThreeForm, &e, s ^ 2, 2).unwrap();
        let zero = TensorData::zeros(TensorKind::THREE_FORM, e.base_dim(), e.rank());
        let report = check_pqn_background(&PqnQuadruple::new(pi.clone(), n.clone(), psi.clone(), zero).unwrap(), &mu).unwrap();
        let br = |a: &GradedPoly, b: &GradedPoly| bracket(a, b).unwrap();
        let (ep, en, es) = (encode_tensor(&pi), encode_tensor(&n), encode_tensor(&psi));
        let pm = br(&ep, &mu);
        let nm = br(&en, &mu);
        let expected = [
            ("c-condition", &br(&pm, &en) + &br(&nm, &ep)),
            ("torsion-condition", &(&br(&nm, &en) + &br(&n_squared(&n), &mu)) - &br(&ep, &es).scale(&q(2))),
            ("closure-condition", br(&nm, &es).scale(&q(2))),
            ("h-closed", GradedPoly::zero(mu.coords())),
        ];
        for (name, want) in expected {
            prop_assert_eq!(&report.get(name).unwrap().residual, &Residual::Hamiltonian(want), "{}", name);
        }
    }
}

#[test]
fn cps_families_are_almost_cps() {
    for name in ["aff1", "abelian(2)", "heisenberg3", "so3", "sl2", "tangent_poly(3,1)"] {
        let e = builtin(name).unwrap();
        for family in CpsFamily::ALL.into_iter().filter(|f| f.applies_to(&e)) {
            for seed in 0..3 {
                let (j, h) = bigbracket::catalog::random_cps(family, &e, seed, 3).unwrap();
                let d = bigbracket::structures::cps_defect(&j, &e.mu(), &h).unwrap();
                for c in d.conditions.iter().filter(|c| c.name != "integrability") {
                    assert!(c.passed(), "{name} {family:?} {seed}: {}", c.name);
                }
            }
        }
    }
}
