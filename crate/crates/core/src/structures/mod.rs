//! Hamiltonians of classical structures and their structural conditions.
//!
//! Every check returns a [`CheckReport`] whose residuals are exact; a
//! condition passes iff its residual is identically zero. Where a
//! condition also has a classical tensor form, the report carries both, the
//! tensor side computed by [`crate::tensor_oracle`].

pub(crate) mod data;
pub mod encode;
mod report;

pub use data::{CpsTriple, LieAlgebroidData, PqnQuadruple, TensorData, TensorEntry, TensorKind};
pub use encode::{
    decode_bracket, decode_covector, decode_function, decode_tensor, decode_vector, derived_generalized,
    encode_algebroid, encode_covector, encode_dual_algebroid, encode_generalized, encode_tensor, encode_vector, Side,
};
pub use report::{CheckReport, Condition, Residual};

use crate::big_bracket::bracket;
use crate::graded_algebra::{Bidegree, GradedPoly};
use crate::tensor_oracle as oracle;
use crate::{q, Error, Rational, Result};
use data::{mat_add, mat_entries, mat_mul, mat_sub, Matrix};

fn br(f: &GradedPoly, g: &GradedPoly) -> GradedPoly {
    bracket(f, g).expect("operands share a coordinate system")
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

fn require_bidegree(f: &GradedPoly, b: Bidegree) -> Result<()> {
    if f.is_zero() || f.bidegree() == Some(b) {
        Ok(())
    } else {
        Err(Error::WrongBidegree {
            expected: b,
            found: f.bidegree().map_or_else(|| "mixed".to_string(), |d| d.to_string()),
        })
    }
}

fn require_lie(mu: &GradedPoly) -> Result<()> {
    require_bidegree(mu, Bidegree::new(1, 2))?;
    if br(mu, mu).is_zero() {
        Ok(())
    } else {
        Err(Error::Precondition("{μ,μ} ≠ 0: not a Lie algebroid".into()))
    }
}

fn require_coords(f: &GradedPoly, t: &TensorData) -> Result<()> {
    if f.coords() == t.coords() {
        Ok(())
    } else {
        Err(Error::CoordinateMismatch(f.coords(), t.coords()))
    }
}

/// Hamiltonian of `N ∘ N`.
pub fn n_squared(n: &TensorData) -> GradedPoly {
    encode_tensor(&n.compose(n).expect("endomorphism"))
}

/// `T_N = ½({N,{N,μ}} − {N²,μ})`.
pub fn nijenhuis_torsion(n: &TensorData, mu: &GradedPoly) -> Result<GradedPoly> {
    require_coords(mu, n)?;
    data::expect_kind(n, TensorKind::Endomorphism, "N")?;
    let en = encode_tensor(n);
    let t = &br(&en, &br(&en, mu)) - &br(&n_squared(n), mu);
    Ok(t.scale(&half()))
}

/// `C_{π,N} = {π,{N,μ}} + {N,{π,μ}}`.
pub fn c_pi_n(pi: &TensorData, n: &TensorData, mu: &GradedPoly) -> Result<GradedPoly> {
    require_coords(mu, pi)?;
    data::same_space(&[pi, n])?;
    let (ep, en) = (encode_tensor(pi), encode_tensor(n));
    Ok(&br(&ep, &br(&en, mu)) + &br(&en, &br(&ep, mu)))
}

pub fn check_lie_algebroid(mu: &GradedPoly) -> Result<CheckReport> {
    require_bidegree(mu, Bidegree::new(1, 2))?;
    let mut r = CheckReport::new("Lie algebroid");
    r.push(Condition::hamiltonian("lie-algebroid", "{μ,μ} = 0", br(mu, mu)));
    Ok(r)
}

pub fn check_poisson(pi: &TensorData, mu: &GradedPoly) -> Result<CheckReport> {
    require_lie(mu)?;
    require_coords(mu, pi)?;
    data::expect_kind(pi, TensorKind::BIVECTOR, "pi")?;
    let ep = encode_tensor(pi);
    let mut r = CheckReport::new("Poisson bivector");
    r.push(Condition::hamiltonian("poisson", "{{π,μ},π} = 0", br(&br(&ep, mu), &ep)));
    let alg = decode_bracket(mu, Side::Primal)?;
    let s = oracle::schouten(&alg, pi, pi);
    r.push(Condition::tensor("poisson (tensor)", "[π,π] = 0", s.nonzero_entries()));
    Ok(r)
}

/// Matrix of `π♯`: column `a` holds `π♯(e^a)`.
fn sharp_matrix(pi: &TensorData) -> Matrix {
    let r = pi.rank();
    (0..r).map(|b| (0..r).map(|a| pi.get(&[a, b]).clone()).collect()).collect()
}

/// Matrix of `ᵗN` on the dual basis.
fn transpose_matrix(n: &TensorData) -> Matrix {
    let m = n.matrix();
    let r = m.len();
    (0..r).map(|b| (0..r).map(|a| m[a][b].clone()).collect()).collect()
}

fn compat_pi_n(pi: &TensorData, n: &TensorData) -> Condition {
    let (p, nm, t) = (sharp_matrix(pi), n.matrix(), transpose_matrix(n));
    let res = mat_sub(&mat_mul(&nm, &p), &mat_mul(&p, &t));
    Condition::tensor("compatibility", "N∘π♯ − π♯∘ᵗN = 0", mat_entries(&res, "M"))
}

fn pqn_hamiltonian_conditions(quad: &PqnQuadruple, mu: &GradedPoly) -> Vec<Condition> {
    let (ep, en, epsi, eh) = (
        encode_tensor(&quad.pi),
        encode_tensor(&quad.n),
        encode_tensor(&quad.psi),
        encode_tensor(&quad.h),
    );
    let n2 = n_squared(&quad.n);
    let pm = br(&ep, mu);
    let nm = br(&en, mu);
    let ph = br(&ep, &eh);
    let nh = br(&en, &eh);
    let c1 = br(&pm, &ep);
    let c2 = &(&br(&pm, &en) + &br(&nm, &ep)) + &br(&ph, &ep);
    let c3 = &(&(&(&br(&nm, &en) + &br(&n2, mu)) - &br(&ep, &epsi).scale(&q(2))) + &br(&ph, &en)) + &br(&nh, &ep);
    let c4 = &br(&nm, &epsi).scale(&q(2)) - &br(mu, &(&br(&en, &nh) - &br(&n2, &eh)));
    vec![
        Condition::hamiltonian("poisson", "{{π,μ},π} = 0", c1),
        Condition::hamiltonian("c-condition", "{{π,μ},N} + {{N,μ},π} + {{π,H},π} = 0", c2),
        Condition::hamiltonian(
            "torsion-condition",
            "{{N,μ},N} + {N²,μ} − 2{π,ψ} + {{π,H},N} + {{N,H},π} = 0",
            c3,
        ),
        Condition::hamiltonian("closure-condition", "2{{N,μ},ψ} = {μ,{N,{N,H}} − {N²,H}}", c4),
        compat_pi_n(&quad.pi, &quad.n),
        Condition::hamiltonian("psi-closed", "dψ = {μ,ψ} = 0", br(mu, &epsi)),
        Condition::hamiltonian("h-closed", "dH = {μ,H} = 0", br(mu, &eh)),
    ]
}

fn pair_entries(rows: &[((usize, usize), oracle::Section)], lhs: &str) -> Vec<TensorEntry> {
    let mut out = Vec::new();
    for ((a, b), v) in rows {
        for (k, p) in v.iter().enumerate() {
            if !p.is_zero() {
                out.push(TensorEntry::new(format!("{lhs}({},{})^{}", a + 1, b + 1, k + 1), p));
            }
        }
    }
    out
}

fn pqn_tensor_conditions(q: &PqnQuadruple, alg: &LieAlgebroidData) -> Vec<Condition> {
    let t = oracle::pqn_residuals(alg, &q.pi, &q.n, &q.psi, &q.h);
    vec![
        Condition::tensor("poisson (tensor)", "[π,π] = 0", t.schouten.nonzero_entries()),
        Condition::tensor(
            "c-condition (tensor)",
            "C_{π,N}(α,β) = 2 i_{π♯α∧π♯β}H",
            pair_entries(&t.c_condition, "C"),
        ),
        Condition::tensor(
            "torsion-condition (tensor)",
            "T_N(X,Y) = −π♯(i_{NX∧Y}H − i_{NY∧X}H + i_{X∧Y}ψ) with i_{X∧Y}H = H(X,Y,·)",
            pair_entries(&t.torsion_condition, "T"),
        ),
        Condition::tensor("closure-condition (tensor)", "d_N ψ = d𝓗", t.closure.nonzero_entries()),
    ]
}

/// The four bracket conditions, the three side conditions and the tensor
/// form of the four conditions evaluated by the oracle.
pub fn check_pqn_background(q: &PqnQuadruple, mu: &GradedPoly) -> Result<CheckReport> {
    require_lie(mu)?;
    require_coords(mu, &q.pi)?;
    let alg = decode_bracket(mu, Side::Primal)?;
    let mut r = CheckReport::new("Poisson quasi-Nijenhuis with background");
    for c in pqn_hamiltonian_conditions(q, mu) {
        r.push(c);
    }
    for c in pqn_tensor_conditions(q, &alg) {
        r.push(c);
    }
    Ok(r)
}

/// Hamiltonian `J = π + N + σ`.
pub fn encode_j(j: &CpsTriple) -> GradedPoly {
    &(&encode_tensor(&j.pi) + &encode_tensor(&j.n)) + &encode_tensor(&j.sigma)
}

fn algebraic_cps(j: &CpsTriple) -> Vec<Condition> {
    let (p, nm, t) = (sharp_matrix(&j.pi), j.n.matrix(), transpose_matrix(&j.n));
    let r = nm.len();
    let s = sharp_matrix(&j.sigma);
    let c2 = mat_sub(&mat_mul(&s, &nm), &mat_mul(&t, &s));
    let id: Matrix = (0..r)
        .map(|a| {
            (0..r)
                .map(|b| crate::BasePoly::from_int(j.n.base_dim(), if a == b { j.lambda } else { 0 }))
                .collect()
        })
        .collect();
    let c3 = mat_sub(&mat_add(&mat_mul(&nm, &nm), &mat_mul(&p, &s)), &id);
    vec![
        compat_pi_n(&j.pi, &j.n),
        Condition::tensor("sigma-compatibility", "σ♭∘N − ᵗN∘σ♭ = 0", mat_entries(&c2, "M")),
        Condition::tensor("square", "N² + π♯∘σ♭ − λ id = 0", mat_entries(&c3, "M")),
    ]
}

/// Algebraic c.p.s. conditions and `{{J,S},J} + λS` with `S = μ + H`.
pub fn cps_defect(j: &CpsTriple, mu: &GradedPoly, h: &TensorData) -> Result<CheckReport> {
    if !(-1..=1).contains(&j.lambda) {
        return Err(Error::InvalidLambda(j.lambda));
    }
    require_coords(mu, &j.pi)?;
    data::expect_kind(h, TensorKind::THREE_FORM, "H")?;
    let s = mu + &encode_tensor(h);
    let ej = encode_j(j);
    let integrability = &br(&br(&ej, &s), &ej) + &s.scale(&q(j.lambda));
    let mut r = CheckReport::new("c.p.s. structure");
    for c in algebraic_cps(j) {
        r.push(c);
    }
    r.push(Condition::hamiltonian("integrability", "{{J,S},J} + λS = 0", integrability));
    Ok(r)
}

/// `(π, N, −dσ, H)` from a c.p.s. triple.
pub fn pqn_from_cps(j: &CpsTriple, mu: &GradedPoly, h: &TensorData) -> Result<PqnQuadruple> {
    let report = cps_defect(j, mu, h)?;
    if !report.passed() {
        let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        return Err(Error::Precondition(format!("not a c.p.s. structure: {}", names.join(", "))));
    }
    let psi = decode_tensor(&-br(mu, &encode_tensor(&j.sigma)), TensorKind::THREE_FORM)?;
    PqnQuadruple::new(j.pi.clone(), j.n.clone(), psi, h.clone())
}

/// The additional conditions that make the converse hold:
/// `σ♭∘N = ᵗN∘σ♭`, `N² + π♯∘σ♭ = λ id` and
/// `2(i_N dσ − 𝓗) = d(i_N σ) + 2λH`, the last both as a hamiltonian
/// identity and through the oracle.
pub fn cps_extra_conditions(j: &CpsTriple, mu: &GradedPoly, h: &TensorData) -> Result<CheckReport> {
    require_coords(mu, &j.pi)?;
    let mut r = CheckReport::new("c.p.s. equivalence conditions");
    for c in algebraic_cps(j).into_iter().skip(1) {
        r.push(c);
    }
    let (en, es, eh) = (encode_tensor(&j.n), encode_tensor(&j.sigma), encode_tensor(h));
    let n2 = n_squared(&j.n);
    let hcal = (&br(&en, &br(&en, &eh)) - &br(&n2, &eh)).scale(&half());
    let lhs = (&br(&en, &br(mu, &es)) - &hcal).scale(&q(2));
    let rhs = &br(mu, &br(&en, &es)) + &eh.scale(&q(2 * j.lambda));
    r.push(Condition::hamiltonian(
        "sigma-closure",
        "2(i_N dσ − 𝓗) − d(i_N σ) − 2λH = 0",
        &lhs - &rhs,
    ));
    let alg = decode_bracket(mu, Side::Primal)?;
    let dsigma = oracle::cartan_d(&alg, &j.sigma);
    let t_lhs = oracle::interior_n(&dsigma, &j.n)
        .sub(&oracle::hcal(h, &j.n))?
        .scale(&q(2));
    let t_rhs = oracle::cartan_d(&alg, &oracle::interior_n(&j.sigma, &j.n)).add(&h.scale(&q(2 * j.lambda)))?;
    r.push(Condition::tensor(
        "sigma-closure (tensor)",
        "2(i_N dσ − 𝓗) − d(i_N σ) − 2λH = 0",
        t_lhs.sub(&t_rhs)?.nonzero_entries(),
    ));
    Ok(r)
}

/// `(π, N = π♯∘ω♭, ψ = dω_N, H = −dω)`, with `ψ` computed both as
/// `½{μ,{N,ω}}` and by the oracle; disagreement is an error.
pub fn derive_pqn_from_pair(pi: &TensorData, omega: &TensorData, mu: &GradedPoly) -> Result<PqnQuadruple> {
    data::expect_kind(omega, TensorKind::TWO_FORM, "omega")?;
    data::same_space(&[pi, omega])?;
    let poisson = check_poisson(pi, mu)?;
    if !poisson.passed() {
        return Err(Error::Precondition("π is not a Poisson bivector".into()));
    }
    let (ep, ew) = (encode_tensor(pi), encode_tensor(omega));
    let n = decode_tensor(&br(&ew, &ep), TensorKind::Endomorphism)?;
    let en = encode_tensor(&n);
    let psi = decode_tensor(&br(mu, &br(&en, &ew)).scale(&half()), TensorKind::THREE_FORM)?;
    let h = decode_tensor(&br(&ew, mu), TensorKind::THREE_FORM)?;

    let alg = decode_bracket(mu, Side::Primal)?;
    let omega_n = omega.form_composed(&n)?;
    let psi_oracle = oracle::cartan_d(&alg, &omega_n);
    if psi_oracle != psi {
        return Err(Error::Inconsistent("½{μ,{N,ω}} differs from d(ω_N)".into()));
    }
    PqnQuadruple::new(pi.clone(), n, psi, h)
}

/// `S̃ = {π + N, μ + H} + ψ`.
pub fn quasi_bialgebroid_hamiltonian(q: &PqnQuadruple, mu: &GradedPoly) -> Result<GradedPoly> {
    require_coords(mu, &q.pi)?;
    let pn = &encode_tensor(&q.pi) + &encode_tensor(&q.n);
    let s = mu + &encode_tensor(&q.h);
    Ok(&br(&pn, &s) + &encode_tensor(&q.psi))
}

/// The deformed hamiltonian `S_J = {J, S}` and the torsion hamiltonian
/// `T_J = ½({J,{J,S}} − λS)` of an almost c.p.s. structure.
#[derive(Clone, Debug)]
pub struct CourantDeformation {
    pub s_j: GradedPoly,
    pub t_j: GradedPoly,
    /// `{S_J, S_J}`.
    pub s_j_square: GradedPoly,
    /// `{S, T_J}`.
    pub s_t_j: GradedPoly,
}

impl CourantDeformation {
    pub fn is_courant(&self) -> bool {
        self.s_j_square.is_zero()
    }

    pub fn torsion_closed(&self) -> bool {
        self.s_t_j.is_zero()
    }

    pub fn integrable(&self) -> bool {
        self.t_j.is_zero()
    }
}

pub fn deformed_courant(j: &CpsTriple, s: &GradedPoly) -> Result<CourantDeformation> {
    if s.coords() != j.pi.coords() {
        return Err(Error::CoordinateMismatch(s.coords(), j.pi.coords()));
    }
    let ej = encode_j(j);
    let s_j = br(&ej, s);
    let t_j = (&br(&ej, &s_j) - &s.scale(&q(j.lambda))).scale(&half());
    let s_j_square = br(&s_j, &s_j);
    let s_t_j = br(s, &t_j);
    Ok(CourantDeformation {
        s_j,
        t_j,
        s_j_square,
        s_t_j,
    })
}

/// Report form of [`deformed_courant`] for `S = μ + H`.
pub fn check_courant(j: &CpsTriple, mu: &GradedPoly, h: &TensorData) -> Result<CheckReport> {
    require_coords(mu, &j.pi)?;
    let s = mu + &encode_tensor(h);
    let def = deformed_courant(j, &s)?;
    let mut r = CheckReport::new("deformed Courant structure");
    r.push(Condition::hamiltonian("courant", "{S,S} = 0", br(&s, &s)));
    r.push(Condition::hamiltonian("deformed-courant", "{S_J,S_J} = 0", def.s_j_square));
    r.push(Condition::hamiltonian("torsion-closed", "{S,T_J} = 0", def.s_t_j));
    Ok(r)
}

/// Which known structure a pair `(π, ω)` induces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairClass {
    /// `dω = 0` and `dω_N = 0`: `(π, N)` is Poisson–Nijenhuis.
    POmega,
    /// `dω = 0`: `(π, N, dω_N)` is Poisson quasi-Nijenhuis.
    PqnWithoutBackground,
    /// `dω_N = 0`: `(π, N, −dω)` is Poisson–Nijenhuis with background.
    PnWithBackground,
    /// Neither differential vanishes.
    PqnWithBackground,
}

impl std::fmt::Display for PairClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PairClass::POmega => "P-Omega (Poisson-Nijenhuis)",
            PairClass::PqnWithoutBackground => "Poisson quasi-Nijenhuis without background",
            PairClass::PnWithBackground => "Poisson-Nijenhuis with background",
            PairClass::PqnWithBackground => "Poisson quasi-Nijenhuis with background",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Compatibility {
    pub report: CheckReport,
    pub class: PairClass,
    pub d_omega_zero: bool,
    pub d_omega_n_zero: bool,
}

/// Identities relating `(π, ω)` and the induced `N`, each as an exact
/// zero-test, plus the classification of the pair.
pub fn compatibility_identities(pi: &TensorData, omega: &TensorData, mu: &GradedPoly) -> Result<Compatibility> {
    let quad = derive_pqn_from_pair(pi, omega, mu)?;
    let alg = decode_bracket(mu, Side::Primal)?;
    let (ep, ew, en, eh, epsi) = (
        encode_tensor(pi),
        encode_tensor(omega),
        encode_tensor(&quad.n),
        encode_tensor(&quad.h),
        encode_tensor(&quad.psi),
    );
    let n2 = n_squared(&quad.n);
    let mut r = CheckReport::new("compatibility identities");

    let aux1 = &(&(&br(&br(&en, &eh), &en) + &br(&n2, &eh)) - &br(&en, &epsi).scale(&q(2)))
        - &br(&br(&n2, &ew), mu);
    r.push(Condition::hamiltonian(
        "n-squared-identity",
        "{{N,H},N} + {N²,H} − 2{N,ψ} − {{N²,ω},μ} = 0",
        aux1,
    ));

    let mu_pi = br(&ep, mu);
    let ww_bb = br(&br(&ew, &mu_pi), &ew);
    let d_w = br(mu, &ew);
    let aux2_bb_rhs = &br(&en, &d_w).scale(&q(2)) - &br(mu, &br(&en, &ew));
    r.push(Condition::hamiltonian(
        "omega-square",
        "{{ω,{π,μ}},ω} = 2{N,{μ,ω}} − {μ,{N,ω}}",
        &ww_bb - &aux2_bb_rhs,
    ));

    // Oracle side: [ω,ω]_π as the Schouten bracket of A*_π, against
    // 2 i_N dω − 2 d(ω_N).
    let dw = oracle::cartan_d(&alg, omega);
    let omega_n = oracle::form_n(omega, &quad.n)?;
    let dwn = oracle::cartan_d(&alg, &omega_n);
    let rhs2 = oracle::interior_n(&dw, &quad.n).sub(&dwn)?.scale(&q(2));
    let a_pi = oracle::pi_algebroid(&alg, pi);
    let w_as_biv = omega.reinterpret(TensorKind::BIVECTOR)?;
    let ww_oracle = oracle::schouten(&a_pi, &w_as_biv, &w_as_biv).reinterpret(TensorKind::THREE_FORM)?;
    r.push(Condition::tensor(
        "omega-square (tensor)",
        "[ω,ω]_π = 2 i_N dω − 2 d(ω_N)",
        ww_oracle.sub(&rhs2)?.nonzero_entries(),
    ));
    r.push(Condition::tensor(
        "omega-square (cross)",
        "decoded {{ω,{π,μ}},ω} = 2 i_N dω − 2 d(ω_N)",
        decode_tensor(&ww_bb, TensorKind::THREE_FORM)?.sub(&rhs2)?.nonzero_entries(),
    ));

    let s_bb = &(-br(&en, &d_w)) + &br(mu, &br(&en, &ew)).scale(&half());
    let rhs3 = dwn.sub(&oracle::interior_n(&dw, &quad.n))?;
    r.push(Condition::tensor(
        "omega-n-concomitant",
        "S(ω,N) = −i_N dω + d(ω_N)",
        decode_tensor(&s_bb, TensorKind::THREE_FORM)?.sub(&rhs3)?.nonzero_entries(),
    ));

    let d_omega_zero = dw.is_zero();
    let d_omega_n_zero = dwn.is_zero();
    let class = match (d_omega_zero, d_omega_n_zero) {
        (true, true) => PairClass::POmega,
        (true, false) => PairClass::PqnWithoutBackground,
        (false, true) => PairClass::PnWithBackground,
        (false, false) => PairClass::PqnWithBackground,
    };
    Ok(Compatibility {
        report: r,
        class,
        d_omega_zero,
        d_omega_n_zero,
    })
}
