//! The canonical bracket on `C∞(T*ΠA)`, adjoint operators and twists.
//!
//! For monomials the bracket is
//!
//! ```text
//! {f, g} = Σ_i (∂f/∂p_i ∂g/∂x^i − ∂f/∂x^i ∂g/∂p_i)
//!        + Σ_a ((f ∂/∂θ_a)(∂g/∂ξ^a) + (f ∂/∂ξ^a)(∂g/∂θ_a))
//! ```
//!
//! with right derivatives on the left factor and left derivatives on the
//! right factor, which is the graded biderivation determined by the
//! generator table.

use crate::graded_algebra::{Bidegree, GradedPoly, SuperMonomial, XI_SHIFT};
use crate::{Error, Rational, Result};

/// `{f, g}`.
pub fn bracket(f: &GradedPoly, g: &GradedPoly) -> Result<GradedPoly> {
    if f.coords() != g.coords() {
        return Err(Error::CoordinateMismatch(f.coords(), g.coords()));
    }
    let coords = f.coords();
    let mut out = GradedPoly::zero(coords);
    for (m1, c1) in f.terms() {
        for (m2, c2) in g.terms() {
            let c = c1 * c2;
            monomial_bracket(m1, m2, &c, &mut out);
        }
    }
    Ok(out)
}

fn monomial_bracket(m1: &SuperMonomial, m2: &SuperMonomial, c: &Rational, out: &mut GradedPoly) {
    let base_dim = m1.x_exponents().len();
    for i in 0..base_dim {
        // ∂f/∂p_i · ∂g/∂x^i
        if let (Some((a, ka)), Some((b, kb))) = (m1.even_derivative(i, true), m2.even_derivative(i, false)) {
            push_product(&a, &b, c * Rational::from_integer((ka * kb).into()), false, out);
        }
        // −∂f/∂x^i · ∂g/∂p_i
        if let (Some((a, ka)), Some((b, kb))) = (m1.even_derivative(i, false), m2.even_derivative(i, true)) {
            push_product(&a, &b, c * Rational::from_integer((ka * kb).into()), true, out);
        }
    }
    // Odd pairs: θ_a in the left factor against ξ^a in the right one, and
    // ξ^a against θ_a.
    let o1 = m1.odd_mask();
    let o2 = m2.odd_mask();
    let pairs = (o1 & (o2 >> XI_SHIFT) & 0xffff_ffff) | ((o1 >> XI_SHIFT) & o2 & 0xffff_ffff);
    let mut rest = pairs;
    while rest != 0 {
        let a = rest.trailing_zeros() as u64;
        rest &= rest - 1;
        let th = 1u64 << a;
        let xi = 1u64 << (XI_SHIFT as u64 + a);
        for (left_bit, right_bit) in [(th, xi), (xi, th)] {
            if o1 & left_bit == 0 || o2 & right_bit == 0 {
                continue;
            }
            let (a1, n1) = m1.odd_derivative(left_bit, false).unwrap();
            let (b1, n2) = m2.odd_derivative(right_bit, true).unwrap();
            push_product(&a1, &b1, c.clone(), n1 ^ n2, out);
        }
    }
}

fn push_product(a: &SuperMonomial, b: &SuperMonomial, c: Rational, negative: bool, out: &mut GradedPoly) {
    if let Some((m, neg)) = a.mul(b) {
        out.add_term(m, if negative ^ neg { -c } else { c });
    }
}

/// The derivation `f ↦ {φ, f}`.
#[derive(Clone, Debug)]
pub struct Adjoint {
    phi: GradedPoly,
}

impl Adjoint {
    pub fn generator(&self) -> &GradedPoly {
        &self.phi
    }

    pub fn apply(&self, f: &GradedPoly) -> Result<GradedPoly> {
        bracket(&self.phi, f)
    }

    /// `ad_φ^k (f)`.
    pub fn apply_n(&self, f: &GradedPoly, k: usize) -> Result<GradedPoly> {
        let mut cur = f.clone();
        for _ in 0..k {
            if cur.is_zero() {
                break;
            }
            cur = self.apply(&cur)?;
        }
        Ok(cur)
    }
}

pub fn ad(phi: &GradedPoly) -> Adjoint {
    Adjoint { phi: phi.clone() }
}

/// The twist `e^{−φ}(f) = Σ_k (1/k!) {φ, ·}^k f` for a 2-form or bivector `φ`.
///
/// Written as a right action this is `f + {f, −φ} + ½{{f, −φ}, −φ} + …`,
/// the automorphism for which `e^{−ω}(μ_π)` reproduces the hamiltonian
/// `{π + N, μ + H} + ψ` with `N = {ω, π}` and `H = {ω, μ}`.
pub fn twist_exp(phi: &GradedPoly, f: &GradedPoly) -> Result<GradedPoly> {
    Ok(twist_exp_counted(phi, f)?.0)
}

/// As [`twist_exp`], also returning the number of bracket applications
/// that produced a nonzero term.
pub fn twist_exp_counted(phi: &GradedPoly, f: &GradedPoly) -> Result<(GradedPoly, usize)> {
    if phi.coords() != f.coords() {
        return Err(Error::CoordinateMismatch(phi.coords(), f.coords()));
    }
    if !phi.is_zero() {
        match phi.bidegree() {
            Some(b) if b == Bidegree::new(0, 2) || b == Bidegree::new(2, 0) => {}
            Some(b) => return Err(Error::NotTwisting(b.to_string())),
            None => return Err(Error::NotTwisting("mixed".into())),
        }
    }
    let mut sum = f.clone();
    let mut term = f.clone();
    let mut k = 0usize;
    loop {
        term = bracket(phi, &term)?;
        if term.is_zero() {
            break;
        }
        k += 1;
        term = term.scale(&Rational::new(1.into(), (k as i64).into()));
        sum = &sum + &term;
    }
    Ok((sum, k))
}
