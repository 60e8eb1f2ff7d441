use crate::base::BasePoly;
use crate::big_bracket::bracket;
use crate::graded_algebra::{Bidegree, CoordinateSystem, GradedPoly, Symbol};
use crate::structures::data::{LieAlgebroidData, TensorData, TensorKind};
use crate::tensor_oracle::GeneralizedSection;
use crate::{Error, Rational, Result};

fn monomial(coords: CoordinateSystem, f: &BasePoly, symbols: &[Symbol]) -> GradedPoly {
    GradedPoly::normalize(coords, Rational::from_integer(1.into()), symbols)
        .expect("symbols built from validated indices")
        .mul_base(f)
}

/// The hamiltonian `μ` of an anchor and bracket.
pub fn encode_algebroid(data: &LieAlgebroidData) -> GradedPoly {
    let coords = data.coords();
    let mut mu = GradedPoly::zero(coords);
    for a in 0..data.rank() {
        for i in 0..data.base_dim() {
            let r = data.anchor(a, i);
            if !r.is_zero() {
                mu = &mu + &monomial(coords, r, &[Symbol::P(i), Symbol::Xi(a)]);
            }
        }
    }
    for a in 0..data.rank() {
        for b in a + 1..data.rank() {
            for k in 0..data.rank() {
                let c = data.structure(a, b, k);
                if !c.is_zero() {
                    mu = &mu - &monomial(coords, c, &[Symbol::Theta(k), Symbol::Xi(a), Symbol::Xi(b)]);
                }
            }
        }
    }
    mu
}

/// Hamiltonian of a tensor: `θ_I` for multivectors, `ξ^I` for forms and
/// `Σ N^a_b ξ^b θ_a` for endomorphisms.
pub fn encode_tensor(t: &TensorData) -> GradedPoly {
    let coords = t.coords();
    let mut out = GradedPoly::zero(coords);
    for (idx, v) in t.components() {
        let symbols: Vec<Symbol> = match t.kind() {
            TensorKind::Multivector(_) => idx.iter().map(|&a| Symbol::Theta(a)).collect(),
            TensorKind::Form(_) => idx.iter().map(|&a| Symbol::Xi(a)).collect(),
            TensorKind::Endomorphism => vec![Symbol::Xi(idx[1]), Symbol::Theta(idx[0])],
        };
        out = &out + &monomial(coords, &v, &symbols);
    }
    out
}

pub fn encode_vector(coords: CoordinateSystem, x: &[BasePoly]) -> GradedPoly {
    let mut out = GradedPoly::zero(coords);
    for (a, v) in x.iter().enumerate() {
        out = &out + &monomial(coords, v, &[Symbol::Theta(a)]);
    }
    out
}

pub fn encode_covector(coords: CoordinateSystem, alpha: &[BasePoly]) -> GradedPoly {
    let mut out = GradedPoly::zero(coords);
    for (a, v) in alpha.iter().enumerate() {
        out = &out + &monomial(coords, v, &[Symbol::Xi(a)]);
    }
    out
}

/// `X + α ↦ X^a θ_a + α_a ξ^a`.
pub fn encode_generalized(coords: CoordinateSystem, u: &GeneralizedSection) -> GradedPoly {
    &encode_vector(coords, &u.x) + &encode_covector(coords, &u.alpha)
}

fn wrong(expected: Bidegree, f: &GradedPoly) -> Error {
    let found = match f.bidegree() {
        Some(b) => b.to_string(),
        None => {
            let bs: Vec<String> = f.bidegree_components().keys().map(|b| b.to_string()).collect();
            format!("mixed {}", bs.join(" + "))
        }
    };
    Error::WrongBidegree { expected, found }
}

/// Inverse of [`encode_tensor`]. Zero decodes to the zero tensor.
pub fn decode_tensor(f: &GradedPoly, kind: TensorKind) -> Result<TensorData> {
    let coords = f.coords();
    let expected = kind.bidegree();
    if !f.is_zero() && f.bidegree() != Some(expected) {
        return Err(wrong(expected, f));
    }
    let mut out = TensorData::zeros(kind, coords.base_dim(), coords.rank());
    if f.terms().any(|(m, _)| m.p_exponents().iter().any(|&k| k > 0)) {
        return Err(Error::WrongBidegree {
            expected,
            found: "terms with momenta (not a tensor)".into(),
        });
    }
    let mut comps: Vec<(Vec<usize>, BasePoly)> = Vec::new();
    for (mono, c) in f.terms() {
        let th = mono.theta_indices();
        let xi = mono.xi_indices();
        let base = BasePoly::from_terms(coords.base_dim(), [(mono.x_exponents().to_vec(), c.clone())]);
        let (idx, v) = match kind {
            TensorKind::Multivector(_) => (th, base),
            TensorKind::Form(_) => (xi, base),
            // ξ^b θ_a = −θ_a ξ^b, so the normal-form coefficient is −N^a_b.
            TensorKind::Endomorphism => (vec![th[0], xi[0]], -&base),
        };
        comps.push((idx, v));
    }
    for (idx, v) in comps {
        let cur = out.get(&idx).clone();
        out.set_component(&idx, &(&cur + &v));
    }
    Ok(out)
}

pub fn decode_vector(f: &GradedPoly) -> Result<Vec<BasePoly>> {
    let t = decode_tensor(f, TensorKind::Multivector(1))?;
    Ok((0..t.rank()).map(|a| t.get(&[a]).clone()).collect())
}

pub fn decode_covector(f: &GradedPoly) -> Result<Vec<BasePoly>> {
    let t = decode_tensor(f, TensorKind::Form(1))?;
    Ok((0..t.rank()).map(|a| t.get(&[a]).clone()).collect())
}

pub fn decode_function(f: &GradedPoly) -> Result<BasePoly> {
    let coords = f.coords();
    let mut out = BasePoly::zero(coords.base_dim());
    for (m, c) in f.terms() {
        if m.bidegree() != Bidegree::new(0, 0) {
            return Err(wrong(Bidegree::new(0, 0), f));
        }
        out = &out + &BasePoly::from_terms(coords.base_dim(), [(m.x_exponents().to_vec(), c.clone())]);
    }
    Ok(out)
}

/// Which bundle a derived bracket acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Sections of `A` (`θ`), from a hamiltonian of bidegree `(1,2)`.
    Primal,
    /// Sections of `A*` (`ξ`), from a hamiltonian of bidegree `(2,1)`.
    Dual,
}

/// Decode a hamiltonian into the anchor and bracket of its derived bracket
/// `[u, v] = {{u, T}, v}`, `ρ(u) f = {{u, T}, f}` on basis sections.
pub fn decode_bracket(t: &GradedPoly, side: Side) -> Result<LieAlgebroidData> {
    let coords = t.coords();
    let expected = match side {
        Side::Primal => Bidegree::new(1, 2),
        Side::Dual => Bidegree::new(2, 1),
    };
    if !t.is_zero() && t.bidegree() != Some(expected) {
        return Err(wrong(expected, t));
    }
    let (m, r) = (coords.base_dim(), coords.rank());
    let gen = |a: usize| {
        let s = match side {
            Side::Primal => Symbol::Theta(a),
            Side::Dual => Symbol::Xi(a),
        };
        GradedPoly::symbol(coords, s).expect("index in range")
    };
    let mut anchor = Vec::new();
    let mut brackets = Vec::new();
    for a in 0..r {
        let ua = bracket(&gen(a), t)?;
        for i in 0..m {
            let xi = GradedPoly::symbol(coords, Symbol::X(i))?;
            anchor.push((a, i, decode_function(&bracket(&ua, &xi)?)?));
        }
        for b in a + 1..r {
            let v = bracket(&ua, &gen(b))?;
            let comps = match side {
                Side::Primal => decode_vector(&v)?,
                Side::Dual => decode_covector(&v)?,
            };
            for (k, p) in comps.into_iter().enumerate() {
                brackets.push((a, b, k, p));
            }
        }
    }
    LieAlgebroidData::from_sparse(m, r, anchor, brackets)
}

/// Encode a bracket table living on `A*` as a `(2,1)` hamiltonian: the
/// mirror image of [`encode_algebroid`] with `θ` and `ξ` exchanged.
pub fn encode_dual_algebroid(data: &LieAlgebroidData) -> GradedPoly {
    let coords = data.coords();
    let mut out = GradedPoly::zero(coords);
    for a in 0..data.rank() {
        for i in 0..data.base_dim() {
            let r = data.anchor(a, i);
            if !r.is_zero() {
                out = &out + &monomial(coords, r, &[Symbol::P(i), Symbol::Theta(a)]);
            }
        }
    }
    for a in 0..data.rank() {
        for b in a + 1..data.rank() {
            for k in 0..data.rank() {
                let c = data.structure(a, b, k);
                if !c.is_zero() {
                    out = &out - &monomial(coords, c, &[Symbol::Xi(k), Symbol::Theta(a), Symbol::Theta(b)]);
                }
            }
        }
    }
    out
}

/// Value of a derived bracket on generalized sections `X + α`:
/// `{{𝒳, T}, 𝒴}` split into its vector and covector parts.
pub fn derived_generalized(
    t: &GradedPoly,
    x: &GradedPoly,
    y: &GradedPoly,
) -> Result<GeneralizedSection> {
    let v = bracket(&bracket(x, t)?, y)?;
    let vec_part = v.component(Bidegree::new(1, 0));
    let cov_part = v.component(Bidegree::new(0, 1));
    let rest = &(&v - &vec_part) - &cov_part;
    if !rest.is_zero() {
        return Err(Error::WrongBidegree {
            expected: Bidegree::new(1, 0),
            found: "derived bracket with components outside A ⊕ A*".into(),
        });
    }
    Ok(GeneralizedSection {
        x: decode_vector(&vec_part)?,
        alpha: decode_covector(&cov_part)?,
    })
}

/// Tensor from its encoding after scaling, used where a bracket produces a
/// fixed multiple of the classical object.
pub fn decode_scaled(f: &GradedPoly, kind: TensorKind, factor: i64) -> Result<TensorData> {
    Ok(decode_tensor(f, kind)?.scale(&Rational::new(1.into(), factor.into())))
}
