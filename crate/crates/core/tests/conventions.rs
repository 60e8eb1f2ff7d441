//! The sign conventions the crate documents, pinned down on small examples.

use bigbracket::catalog::builtin;
use bigbracket::structures::{
    decode_function, decode_tensor, derived_generalized, encode_algebroid, encode_covector, encode_generalized,
    encode_tensor, encode_vector,
};
use bigbracket::tensor_oracle::{self as oracle, GeneralizedSection};
use bigbracket::{bracket, twist_exp, BasePoly, CoordinateSystem, GradedPoly, Rational, Symbol, TensorData, TensorKind};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn sym(c: CoordinateSystem, s: Symbol) -> GradedPoly {
    GradedPoly::symbol(c, s).unwrap()
}

fn mono(c: CoordinateSystem, k: i64, s: &[Symbol]) -> GradedPoly {
    GradedPoly::normalize(c, q(k), s).unwrap()
}

#[test]
fn generator_brackets() {
    let c = CoordinateSystem::new(1, 2).unwrap();
    let one = GradedPoly::one(c);
    assert_eq!(bracket(&sym(c, Symbol::P(0)), &sym(c, Symbol::X(0))).unwrap(), one);
    assert_eq!(bracket(&sym(c, Symbol::X(0)), &sym(c, Symbol::P(0))).unwrap(), -one.clone());
    assert_eq!(bracket(&sym(c, Symbol::Theta(1)), &sym(c, Symbol::Xi(1))).unwrap(), one);
    assert_eq!(bracket(&sym(c, Symbol::Xi(1)), &sym(c, Symbol::Theta(1))).unwrap(), one);
    assert!(bracket(&sym(c, Symbol::Theta(0)), &sym(c, Symbol::Xi(1))).unwrap().is_zero());
    assert!(bracket(&sym(c, Symbol::Theta(0)), &sym(c, Symbol::Theta(0))).unwrap().is_zero());
}

#[test]
fn aff1_hamiltonian_and_derived_bracket() {
    let e = builtin("aff1").unwrap();
    let c = e.algebroid.coords();
    let mu = encode_algebroid(&e.algebroid);
    assert_eq!(mu, mono(c, -1, &[Symbol::Theta(1), Symbol::Xi(0), Symbol::Xi(1)]));
    // [e1, e2] = e2
    let th = |a| sym(c, Symbol::Theta(a));
    assert_eq!(bracket(&bracket(&th(0), &mu).unwrap(), &th(1)).unwrap(), th(1));
}

#[test]
fn identity_endomorphism_is_xi_theta() {
    let c = CoordinateSystem::new(0, 2).unwrap();
    let id = encode_tensor(&TensorData::identity(0, 2));
    let expected = &mono(c, 1, &[Symbol::Xi(0), Symbol::Theta(0)]) + &mono(c, 1, &[Symbol::Xi(1), Symbol::Theta(1)]);
    assert_eq!(id, expected);
    // J(𝒳) = {𝒳, J} with J = N = id acts as (X, α) ↦ (X, −α).
    let x = vec![BasePoly::from_int(0, 2), BasePoly::from_int(0, -1)];
    assert_eq!(bracket(&encode_vector(c, &x), &id).unwrap(), encode_vector(c, &x));
    assert_eq!(bracket(&encode_covector(c, &x), &id).unwrap(), -encode_covector(c, &x));
}

#[test]
fn differential_of_a_function() {
    // Tangent algebroid of a line: d(x²) = 2x ξ¹.
    let e = builtin("tangent_poly(1,2)").unwrap();
    let c = e.algebroid.coords();
    let x = sym(c, Symbol::X(0));
    let x2 = &x * &x;
    let d = bracket(&e.mu(), &x2).unwrap();
    assert_eq!(d, &x.scale(&q(2)) * &sym(c, Symbol::Xi(0)));
    let f = decode_function(&bracket(&bracket(&sym(c, Symbol::Theta(0)), &e.mu()).unwrap(), &x2).unwrap()).unwrap();
    assert_eq!(f, BasePoly::var(1, 0).scale(&q(2)));
}

#[test]
fn endomorphism_acts_on_forms_as_a_derivation() {
    let n = TensorData::from_components(
        TensorKind::Endomorphism,
        0,
        3,
        vec![(vec![0, 1], BasePoly::from_int(0, 2)), (vec![2, 2], BasePoly::from_int(0, 1))],
    )
    .unwrap();
    let w = TensorData::from_components(
        TensorKind::TWO_FORM,
        0,
        3,
        vec![(vec![0, 2], BasePoly::from_int(0, 1)), (vec![1, 2], BasePoly::from_int(0, 3))],
    )
    .unwrap();
    let nw = decode_tensor(&bracket(&encode_tensor(&n), &encode_tensor(&w)).unwrap(), TensorKind::TWO_FORM).unwrap();
    assert_eq!(nw, oracle::interior_n(&w, &n));
    // (i_N ω)(e3, e1) = ω(Ne3, e1) + ω(e3, Ne1) = ω(e3, e1) = −1
    assert_eq!(nw.get(&[2, 0]), &BasePoly::from_int(0, -1));
}

#[test]
fn induced_endomorphism_doubles_the_composed_form() {
    let pi = TensorData::from_components(TensorKind::BIVECTOR, 0, 2, vec![(vec![0, 1], BasePoly::from_int(0, 3))])
        .unwrap();
    let w = TensorData::from_components(TensorKind::TWO_FORM, 0, 2, vec![(vec![0, 1], BasePoly::from_int(0, 2))])
        .unwrap();
    let n = decode_tensor(&bracket(&encode_tensor(&w), &encode_tensor(&pi)).unwrap(), TensorKind::Endomorphism).unwrap();
    let e1 = oracle::basis_section(0, 2, 0);
    assert_eq!(oracle::endo_apply(&n, &e1), oracle::sharp(&pi, &oracle::flat(&w, &e1)));
    let nw = decode_tensor(&bracket(&encode_tensor(&n), &encode_tensor(&w)).unwrap(), TensorKind::TWO_FORM).unwrap();
    assert_eq!(nw, w.form_composed(&n).unwrap().scale(&q(2)));
}

#[test]
fn twist_by_a_two_form_starts_with_its_bracket() {
    let e = builtin("heisenberg3").unwrap();
    let c = e.algebroid.coords();
    let pi = encode_tensor(
        &TensorData::from_components(TensorKind::BIVECTOR, 0, 3, vec![(vec![0, 2], BasePoly::from_int(0, 1))]).unwrap(),
    );
    let w = mono(c, 1, &[Symbol::Xi(0), Symbol::Xi(1)]);
    let f = bracket(&pi, &e.mu()).unwrap();
    let t = twist_exp(&w, &f).unwrap();
    let first = &f + &bracket(&w, &f).unwrap();
    let second = bracket(&w, &bracket(&w, &f).unwrap()).unwrap().scale(&Rational::new(1.into(), 2.into()));
    assert_eq!(t, &first + &second);
}

#[test]
fn dorfman_background_sign() {
    // On abelian(3) with H = ξ¹ξ²ξ³: [e1, e2] = −H(e1, e2, ·) = −e^3.
    let e = builtin("abelian(3)").unwrap();
    let c = e.algebroid.coords();
    let h = TensorData::from_components(TensorKind::THREE_FORM, 0, 3, vec![(vec![0, 1, 2], BasePoly::from_int(0, 1))])
        .unwrap();
    let s = &e.mu() + &encode_tensor(&h);
    let u = GeneralizedSection::basis(0, 3, 0);
    let v = GeneralizedSection::basis(0, 3, 1);
    let got = derived_generalized(&s, &encode_generalized(c, &u), &encode_generalized(c, &v)).unwrap();
    let mut expected = GeneralizedSection::zero(0, 3);
    expected.alpha[2] = BasePoly::from_int(0, -1);
    assert_eq!(got, expected);
    assert_eq!(got, oracle::dorfman(&e.algebroid, &h, &u, &v));
    assert_eq!(oracle::interior_pair(&h, &u.x, &v.x)[2], BasePoly::from_int(0, 1));
}
