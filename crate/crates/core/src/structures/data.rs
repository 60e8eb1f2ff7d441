use std::collections::BTreeMap;
use std::fmt;

use crate::base::BasePoly;
use crate::graded_algebra::{Bidegree, CoordinateSystem};
use crate::{q, Error, Rational, Result};

/// Anchor and structure functions of a (pre-)Lie algebroid over a basis
/// `e_1, …, e_r` and base coordinates `x^1, …, x^m`.
///
/// `rho[a][i]` is the `i`-th component of `ρ(e_a)` and `c[a][b][k]` is the
/// `k`-th component of `[e_a, e_b]`. The same shape is used for derived
/// bracket tables that need not satisfy Jacobi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebroidData {
    base_dim: usize,
    rank: usize,
    rho: Vec<Vec<BasePoly>>,
    c: Vec<Vec<Vec<BasePoly>>>,
}

impl LieAlgebroidData {
    pub fn new(base_dim: usize, rank: usize, rho: Vec<Vec<BasePoly>>, c: Vec<Vec<Vec<BasePoly>>>) -> Result<Self> {
        CoordinateSystem::new(base_dim, rank)?;
        let shape_ok = rho.len() == rank
            && rho.iter().all(|r| r.len() == base_dim && r.iter().all(|p| p.nvars() == base_dim))
            && c.len() == rank
            && c.iter().all(|row| {
                row.len() == rank
                    && row
                        .iter()
                        .all(|v| v.len() == rank && v.iter().all(|p| p.nvars() == base_dim))
            });
        if !shape_ok {
            return Err(Error::DimensionMismatch(format!(
                "algebroid tables must be {rank}x{base_dim} (anchor) and {rank}x{rank}x{rank} (bracket) over {base_dim} base variables"
            )));
        }
        for a in 0..rank {
            for b in 0..rank {
                for k in 0..rank {
                    if c[a][b][k] != -&c[b][a][k] {
                        return Err(Error::NotAntisymmetric(
                            "structure functions".into(),
                            format!("c^{}_{{{}{}}}", k + 1, a + 1, b + 1),
                        ));
                    }
                }
            }
        }
        Ok(LieAlgebroidData { base_dim, rank, rho, c })
    }

    pub fn abelian(base_dim: usize, rank: usize) -> Result<Self> {
        let z = BasePoly::zero(base_dim);
        Self::new(
            base_dim,
            rank,
            vec![vec![z.clone(); base_dim]; rank],
            vec![vec![vec![z; rank]; rank]; rank],
        )
    }

    /// Build from sparse 0-based entries: anchor `(a, i, ρ^i_a)` and bracket
    /// `(a, b, k, c^k_{ab})`. Each bracket entry also sets `c^k_{ba}`.
    pub fn from_sparse<A, B>(base_dim: usize, rank: usize, anchor: A, brackets: B) -> Result<Self>
    where
        A: IntoIterator<Item = (usize, usize, BasePoly)>,
        B: IntoIterator<Item = (usize, usize, usize, BasePoly)>,
    {
        let mut data = Self::abelian(base_dim, rank)?;
        let check = |idx: &[usize], bounds: &[usize]| -> Result<()> {
            if idx.iter().zip(bounds).all(|(i, b)| i < b) {
                Ok(())
            } else {
                Err(Error::DimensionMismatch(format!("index {idx:?} out of range {bounds:?}")))
            }
        };
        for (a, i, p) in anchor {
            check(&[a, i], &[rank, base_dim])?;
            poly_arity(&p, base_dim)?;
            data.rho[a][i] = &data.rho[a][i] + &p;
        }
        for (a, b, k, p) in brackets {
            check(&[a, b, k], &[rank, rank, rank])?;
            poly_arity(&p, base_dim)?;
            if a == b {
                if p.is_zero() {
                    continue;
                }
                return Err(Error::NotAntisymmetric(
                    "structure functions".into(),
                    format!("[e{0}, e{0}] must vanish", a + 1),
                ));
            }
            data.c[a][b][k] = &data.c[a][b][k] + &p;
            data.c[b][a][k] = &data.c[b][a][k] - &p;
        }
        Ok(data)
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coords(&self) -> CoordinateSystem {
        CoordinateSystem::new(self.base_dim, self.rank).expect("validated on construction")
    }

    /// `ρ^i_a`.
    pub fn anchor(&self, a: usize, i: usize) -> &BasePoly {
        &self.rho[a][i]
    }

    /// `c^k_{ab}`.
    pub fn structure(&self, a: usize, b: usize, k: usize) -> &BasePoly {
        &self.c[a][b][k]
    }

    pub fn is_zero(&self) -> bool {
        self.rho.iter().flatten().all(BasePoly::is_zero)
            && self.c.iter().flatten().flatten().all(BasePoly::is_zero)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.base_dim, self.rank) != (other.base_dim, other.rank) {
            return Err(Error::DimensionMismatch("algebroid tables of different shape".into()));
        }
        let rho = zip2(&self.rho, &other.rho, |a, b| a - b);
        let c = self
            .c
            .iter()
            .zip(&other.c)
            .map(|(x, y)| zip2(x, y, |a, b| a - b))
            .collect();
        Ok(LieAlgebroidData {
            base_dim: self.base_dim,
            rank: self.rank,
            rho,
            c,
        })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        LieAlgebroidData {
            base_dim: self.base_dim,
            rank: self.rank,
            rho: self.rho.iter().map(|r| r.iter().map(|p| p.scale(s)).collect()).collect(),
            c: self
                .c
                .iter()
                .map(|row| row.iter().map(|v| v.iter().map(|p| p.scale(s)).collect()).collect())
                .collect(),
        }
    }

    /// Nonzero entries as labelled polynomials, for residual reporting.
    pub fn nonzero_entries(&self) -> Vec<TensorEntry> {
        let mut out = Vec::new();
        for a in 0..self.rank {
            for i in 0..self.base_dim {
                if !self.rho[a][i].is_zero() {
                    out.push(TensorEntry::new(format!("rho(e{})^{}", a + 1, i + 1), &self.rho[a][i]));
                }
            }
        }
        for a in 0..self.rank {
            for b in a + 1..self.rank {
                for k in 0..self.rank {
                    if !self.c[a][b][k].is_zero() {
                        out.push(TensorEntry::new(
                            format!("[e{},e{}]^{}", a + 1, b + 1, k + 1),
                            &self.c[a][b][k],
                        ));
                    }
                }
            }
        }
        out
    }
}

fn zip2(x: &[Vec<BasePoly>], y: &[Vec<BasePoly>], f: impl Fn(&BasePoly, &BasePoly) -> BasePoly) -> Vec<Vec<BasePoly>> {
    x.iter()
        .zip(y)
        .map(|(r, s)| r.iter().zip(s).map(|(a, b)| f(a, b)).collect())
        .collect()
}

fn poly_arity(p: &BasePoly, base_dim: usize) -> Result<()> {
    if p.nvars() == base_dim {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "polynomial in {} variables over a {}-dimensional base",
            p.nvars(),
            base_dim
        )))
    }
}

/// Which classical tensor a table holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TensorKind {
    /// Section of `∧^k A`, stored as the full antisymmetric table `P^{a_1…a_k}`.
    Multivector(usize),
    /// Section of `∧^k A*`, stored as `ω_{a_1…a_k} = ω(e_{a_1}, …, e_{a_k})`.
    Form(usize),
    /// `(1,1)`-tensor, stored as `N^a_b`, the `a`-th component of `N e_b`.
    Endomorphism,
}

impl TensorKind {
    pub const BIVECTOR: TensorKind = TensorKind::Multivector(2);
    pub const TWO_FORM: TensorKind = TensorKind::Form(2);
    pub const THREE_FORM: TensorKind = TensorKind::Form(3);

    pub fn arity(&self) -> usize {
        match *self {
            TensorKind::Multivector(k) | TensorKind::Form(k) => k,
            TensorKind::Endomorphism => 2,
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        !matches!(self, TensorKind::Endomorphism)
    }

    /// Bidegree of the encoded hamiltonian.
    pub fn bidegree(&self) -> Bidegree {
        match *self {
            TensorKind::Multivector(k) => Bidegree::new(k as u32, 0),
            TensorKind::Form(k) => Bidegree::new(0, k as u32),
            TensorKind::Endomorphism => Bidegree::new(1, 1),
        }
    }
}

impl fmt::Display for TensorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorKind::Multivector(k) => write!(f, "{k}-vector"),
            TensorKind::Form(k) => write!(f, "{k}-form"),
            TensorKind::Endomorphism => write!(f, "endomorphism"),
        }
    }
}

/// One labelled coefficient of a tensor residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorEntry {
    pub index: String,
    pub value: BasePoly,
}

impl TensorEntry {
    pub fn new(index: String, value: &BasePoly) -> Self {
        TensorEntry {
            index,
            value: value.clone(),
        }
    }
}

/// Dense coefficient table of a classical tensor, row-major over `rank^arity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorData {
    kind: TensorKind,
    base_dim: usize,
    rank: usize,
    entries: Vec<BasePoly>,
}

impl TensorData {
    pub fn zeros(kind: TensorKind, base_dim: usize, rank: usize) -> Self {
        let n = rank.pow(kind.arity() as u32);
        TensorData {
            kind,
            base_dim,
            rank,
            entries: vec![BasePoly::zero(base_dim); n],
        }
    }

    /// Fill every index tuple from `f`; antisymmetry is validated.
    pub fn from_fn(
        kind: TensorKind,
        base_dim: usize,
        rank: usize,
        mut f: impl FnMut(&[usize]) -> BasePoly,
    ) -> Result<Self> {
        let mut t = Self::zeros(kind, base_dim, rank);
        for (pos, idx) in all_tuples(rank, kind.arity()).enumerate() {
            t.entries[pos] = f(&idx);
        }
        t.validate()?;
        Ok(t)
    }

    /// Build from sparse 0-based components. For antisymmetric kinds an
    /// index tuple in any order sets the whole orbit with the permutation
    /// sign; a tuple with a repeated index must carry zero, and each orbit may
    /// be given at most once.
    pub fn from_components<I>(kind: TensorKind, base_dim: usize, rank: usize, comps: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, BasePoly)>,
    {
        let mut t = Self::zeros(kind, base_dim, rank);
        let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
        for (idx, p) in comps {
            if idx.len() != kind.arity() || idx.iter().any(|&i| i >= rank) {
                return Err(Error::DimensionMismatch(format!(
                    "index {idx:?} invalid for a {kind} of rank {rank}"
                )));
            }
            poly_arity(&p, base_dim)?;
            if !kind.is_antisymmetric() {
                let pos = t.offset(&idx);
                t.entries[pos] = &t.entries[pos] + &p;
                continue;
            }
            let (sorted, sign) = match sort_with_sign(&idx) {
                Some(s) => s,
                None if p.is_zero() => continue,
                None => {
                    return Err(Error::NotAntisymmetric(
                        kind.to_string(),
                        format!("repeated index in {idx:?}"),
                    ))
                }
            };
            if seen.insert(sorted.clone(), ()).is_some() {
                return Err(Error::NotAntisymmetric(
                    kind.to_string(),
                    format!("component {sorted:?} given more than once"),
                ));
            }
            let v = if sign { -&p } else { p };
            t.set_antisymmetric(&sorted, &v);
        }
        Ok(t)
    }

    fn set_antisymmetric(&mut self, sorted: &[usize], v: &BasePoly) {
        for perm in permutations(sorted.len()) {
            let idx: Vec<usize> = perm.iter().map(|&i| sorted[i]).collect();
            let pos = self.offset(&idx);
            self.entries[pos] = if perm_sign(&perm) { -v } else { v.clone() };
        }
    }

    /// Set the orbit of an increasing index tuple.
    pub(crate) fn set_component(&mut self, idx: &[usize], v: &BasePoly) {
        if self.kind.is_antisymmetric() {
            self.set_antisymmetric(idx, v);
        } else {
            let pos = self.offset(idx);
            self.entries[pos] = v.clone();
        }
    }

    pub fn kind(&self) -> TensorKind {
        self.kind
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coords(&self) -> CoordinateSystem {
        CoordinateSystem::new(self.base_dim, self.rank).expect("rank validated")
    }

    fn offset(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.rank + i)
    }

    pub fn get(&self, idx: &[usize]) -> &BasePoly {
        assert_eq!(idx.len(), self.kind.arity(), "wrong number of indices");
        &self.entries[self.offset(idx)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BasePoly::is_zero)
    }

    pub fn validate(&self) -> Result<()> {
        if self.entries.iter().any(|p| p.nvars() != self.base_dim) {
            return Err(Error::DimensionMismatch("entry over the wrong base".into()));
        }
        if !self.kind.is_antisymmetric() {
            return Ok(());
        }
        let k = self.kind.arity();
        for idx in all_tuples(self.rank, k) {
            let v = self.get(&idx);
            match sort_with_sign(&idx) {
                None => {
                    if !v.is_zero() {
                        return Err(Error::NotAntisymmetric(
                            self.kind.to_string(),
                            format!("nonzero diagonal entry at {idx:?}"),
                        ));
                    }
                }
                Some((sorted, sign)) => {
                    let base = self.get(&sorted);
                    let expect = if sign { -base } else { base.clone() };
                    if *v != expect {
                        return Err(Error::NotAntisymmetric(
                            self.kind.to_string(),
                            format!("entries {idx:?} and {sorted:?}"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Independent components: increasing tuples for antisymmetric kinds,
    /// all pairs for endomorphisms. Zero entries are skipped.
    pub fn components(&self) -> Vec<(Vec<usize>, BasePoly)> {
        let k = self.kind.arity();
        all_tuples(self.rank, k)
            .filter(|idx| !self.kind.is_antisymmetric() || idx.windows(2).all(|w| w[0] < w[1]))
            .filter_map(|idx| {
                let v = self.get(&idx);
                (!v.is_zero()).then(|| (idx.clone(), v.clone()))
            })
            .collect()
    }

    pub fn nonzero_entries(&self) -> Vec<TensorEntry> {
        let name = match self.kind {
            TensorKind::Multivector(_) => "P",
            TensorKind::Form(_) => "w",
            TensorKind::Endomorphism => "N",
        };
        self.components()
            .into_iter()
            .map(|(idx, v)| {
                let s: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
                TensorEntry {
                    index: format!("{name}[{}]", s.join(",")),
                    value: v,
                }
            })
            .collect()
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.kind == other.kind && self.rank == other.rank && self.base_dim == other.base_dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{} of rank {} vs {} of rank {}",
                self.kind, self.rank, other.kind, other.rank
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = &*a + b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.scale(s);
        }
        out
    }

    pub fn identity(base_dim: usize, rank: usize) -> Self {
        Self::from_fn(TensorKind::Endomorphism, base_dim, rank, |i| {
            BasePoly::from_int(base_dim, (i[0] == i[1]) as i64)
        })
        .expect("endomorphisms need no validation")
    }

    /// Matrix product `N ∘ M` of two endomorphisms.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        if self.kind != TensorKind::Endomorphism {
            return Err(Error::DimensionMismatch("compose needs endomorphisms".into()));
        }
        let r = self.rank;
        Self::from_fn(TensorKind::Endomorphism, self.base_dim, r, |i| {
            let mut acc = BasePoly::zero(self.base_dim);
            for k in 0..r {
                acc = &acc + &(self.get(&[i[0], k]) * other.get(&[k, i[1]]));
            }
            acc
        })
    }

    /// The same table read as another kind of equal arity, e.g. a 2-form on
    /// `A` as a bivector on `A*`.
    pub fn reinterpret(&self, kind: TensorKind) -> Result<TensorData> {
        if kind.arity() != self.kind.arity() || kind.is_antisymmetric() != self.kind.is_antisymmetric() {
            return Err(Error::DimensionMismatch(format!("cannot read a {} as a {kind}", self.kind)));
        }
        let mut out = self.clone();
        out.kind = kind;
        Ok(out)
    }

    /// Endomorphism matrix as rows `m[a][b] = N^a_b`.
    pub(crate) fn matrix(&self) -> Matrix {
        let r = self.rank;
        match self.kind {
            TensorKind::Endomorphism => (0..r).map(|a| (0..r).map(|b| self.get(&[a, b]).clone()).collect()).collect(),
            _ => panic!("matrix() is defined for endomorphisms"),
        }
    }

    /// `ω_N = ω(N·, ·)` for a 2-form; fails if the result is not antisymmetric.
    pub fn form_composed(&self, n: &TensorData) -> Result<TensorData> {
        if self.kind != TensorKind::TWO_FORM || n.kind != TensorKind::Endomorphism {
            return Err(Error::DimensionMismatch("ω_N needs a 2-form and an endomorphism".into()));
        }
        let r = self.rank;
        TensorData::from_fn(TensorKind::TWO_FORM, self.base_dim, r, |i| {
            let mut acc = BasePoly::zero(self.base_dim);
            for k in 0..r {
                acc = &acc + &(n.get(&[k, i[0]]) * self.get(&[k, i[1]]));
            }
            acc
        })
    }
}

pub(crate) type Matrix = Vec<Vec<BasePoly>>;

pub(crate) fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let nv = a[0][0].nvars();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = BasePoly::zero(nv);
                    for (k, row) in b.iter().enumerate() {
                        acc = &acc + &(&a[i][k] * &row[j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub(crate) fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    zip2(a, b, |x, y| x - y)
}

pub(crate) fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    zip2(a, b, |x, y| x + y)
}

pub(crate) fn mat_entries(m: &Matrix, name: &str) -> Vec<TensorEntry> {
    let mut out = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                out.push(TensorEntry::new(format!("{name}[{},{}]", i + 1, j + 1), v));
            }
        }
    }
    out
}

/// All `rank^k` index tuples in row-major order.
pub(crate) fn all_tuples(rank: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = rank.pow(k as u32);
    (0..total).map(move |mut n| {
        let mut idx = vec![0; k];
        for slot in idx.iter_mut().rev() {
            *slot = n % rank;
            n /= rank;
        }
        idx
    })
}

/// Strictly increasing `k`-subsets of `0..rank`.
pub(crate) fn increasing_tuples(rank: usize, k: usize) -> Vec<Vec<usize>> {
    all_tuples(rank, k)
        .filter(|idx| idx.windows(2).all(|w| w[0] < w[1]))
        .collect()
}

/// Sort distinct indices, returning the sorted tuple and whether the
/// permutation was odd; `None` on a repeated index.
pub(crate) fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = idx.to_vec();
    let mut odd = false;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                odd = !odd;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, odd))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn perm_sign(p: &[usize]) -> bool {
    sort_with_sign(p).map(|(_, s)| s).unwrap_or(false)
}

/// `(π, N, σ, λ)` describing `J = [[N, π♯], [σ♭, −ᵗN]]` on `A ⊕ A*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CpsTriple {
    pub pi: TensorData,
    pub n: TensorData,
    pub sigma: TensorData,
    pub lambda: i64,
}

impl CpsTriple {
    pub fn new(pi: TensorData, n: TensorData, sigma: TensorData, lambda: i64) -> Result<Self> {
        if !(-1..=1).contains(&lambda) {
            return Err(Error::InvalidLambda(lambda));
        }
        expect_kind(&pi, TensorKind::BIVECTOR, "pi")?;
        expect_kind(&n, TensorKind::Endomorphism, "N")?;
        expect_kind(&sigma, TensorKind::TWO_FORM, "sigma")?;
        same_space(&[&pi, &n, &sigma])?;
        Ok(CpsTriple { pi, n, sigma, lambda })
    }

    pub fn zero(base_dim: usize, rank: usize, lambda: i64) -> Result<Self> {
        Self::new(
            TensorData::zeros(TensorKind::BIVECTOR, base_dim, rank),
            TensorData::zeros(TensorKind::Endomorphism, base_dim, rank),
            TensorData::zeros(TensorKind::TWO_FORM, base_dim, rank),
            lambda,
        )
    }
}

/// `(π, N, ψ, H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqnQuadruple {
    pub pi: TensorData,
    pub n: TensorData,
    pub psi: TensorData,
    pub h: TensorData,
}

impl PqnQuadruple {
    pub fn new(pi: TensorData, n: TensorData, psi: TensorData, h: TensorData) -> Result<Self> {
        expect_kind(&pi, TensorKind::BIVECTOR, "pi")?;
        expect_kind(&n, TensorKind::Endomorphism, "N")?;
        expect_kind(&psi, TensorKind::THREE_FORM, "psi")?;
        expect_kind(&h, TensorKind::THREE_FORM, "H")?;
        same_space(&[&pi, &n, &psi, &h])?;
        Ok(PqnQuadruple { pi, n, psi, h })
    }

    pub fn zero(base_dim: usize, rank: usize) -> Self {
        PqnQuadruple {
            pi: TensorData::zeros(TensorKind::BIVECTOR, base_dim, rank),
            n: TensorData::zeros(TensorKind::Endomorphism, base_dim, rank),
            psi: TensorData::zeros(TensorKind::THREE_FORM, base_dim, rank),
            h: TensorData::zeros(TensorKind::THREE_FORM, base_dim, rank),
        }
    }
}

pub(crate) fn expect_kind(t: &TensorData, kind: TensorKind, name: &str) -> Result<()> {
    if t.kind() == kind {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("{name} must be a {kind}, got a {}", t.kind())))
    }
}

pub(crate) fn same_space(ts: &[&TensorData]) -> Result<()> {
    let first = ts[0];
    for t in ts {
        if t.rank() != first.rank() || t.base_dim() != first.base_dim() {
            return Err(Error::DimensionMismatch(format!(
                "tensors over (base_dim={}, rank={}) and (base_dim={}, rank={})",
                first.base_dim(),
                first.rank(),
                t.base_dim(),
                t.rank()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_components_fill_the_orbit() {
        let t = TensorData::from_components(
            TensorKind::THREE_FORM,
            0,
            3,
            vec![(vec![2, 0, 1], BasePoly::from_int(0, 5))],
        )
        .unwrap();
        assert_eq!(*t.get(&[0, 1, 2]), BasePoly::from_int(0, 5));
        assert_eq!(*t.get(&[1, 0, 2]), BasePoly::from_int(0, -5));
        assert!(t.validate().is_ok());
    }

    #[test]
    fn antisymmetry_violations_are_rejected() {
        let bad = TensorData::from_fn(TensorKind::BIVECTOR, 0, 2, |i| BasePoly::from_int(0, (i[0] + i[1]) as i64));
        assert!(matches!(bad, Err(Error::NotAntisymmetric(..))));
        let dup = TensorData::from_components(
            TensorKind::BIVECTOR,
            0,
            2,
            vec![(vec![0, 1], BasePoly::from_int(0, 1)), (vec![1, 0], BasePoly::from_int(0, 1))],
        );
        assert!(dup.is_err());
        let c = LieAlgebroidData::from_sparse(0, 2, vec![], vec![(0, 0, 1, BasePoly::from_int(0, 1))]);
        assert!(c.is_err());
    }

    #[test]
    fn lambda_is_restricted() {
        assert!(matches!(CpsTriple::zero(0, 2, 2), Err(Error::InvalidLambda(2))));
        assert!(CpsTriple::zero(0, 2, -1).is_ok());
    }

    #[test]
    fn sort_sign() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], false)));
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], true)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
    }
}
