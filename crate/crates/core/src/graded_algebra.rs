//! Sparse exact polynomials on the graded coordinate ring of `T*ΠA`.
//!
//! Coordinates: even base coordinates `x^i` and their momenta `p_i`, odd
//! fibre coordinates `ξ^a` and their momenta `θ_a`. A monomial is stored in
//! normal form: even part `x^α p^β`, then the odd part with every `θ` before
//! every `ξ`, each block strictly increasing. Odd factors are kept as a
//! bitmask (`θ_a` at bit `a`, `ξ^a` at bit `32 + a`) so that the bit order is
//! the normal-form order and Koszul signs reduce to popcounts.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::base::{fmt_exponents, fmt_rational_coeff, BasePoly};
use crate::{Error, Rational, Result};

pub(crate) const XI_SHIFT: u32 = 32;
const MAX_RANK: usize = 32;

/// Dimensions of the base and of the fibre of `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordinateSystem {
    base_dim: usize,
    rank: usize,
}

impl CoordinateSystem {
    pub fn new(base_dim: usize, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidCoordinates("rank must be at least 1".into()));
        }
        if rank > MAX_RANK {
            return Err(Error::InvalidCoordinates(format!(
                "rank {rank} exceeds the supported maximum {MAX_RANK}"
            )));
        }
        Ok(CoordinateSystem { base_dim, rank })
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn check_symbol(&self, s: Symbol) -> Result<()> {
        let ok = match s {
            Symbol::X(i) | Symbol::P(i) => i < self.base_dim,
            Symbol::Theta(a) | Symbol::Xi(a) => a < self.rank,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownSymbol(format!("{s} in {self}")))
        }
    }
}

impl fmt::Display for CoordinateSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(base_dim={}, rank={})", self.base_dim, self.rank)
    }
}

/// A generator of the coordinate ring. Indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    X(usize),
    P(usize),
    Theta(usize),
    Xi(usize),
}

impl Symbol {
    pub fn is_odd(&self) -> bool {
        matches!(self, Symbol::Theta(_) | Symbol::Xi(_))
    }

    fn odd_bit(&self) -> Option<u64> {
        match *self {
            Symbol::Theta(a) => Some(1u64 << a),
            Symbol::Xi(a) => Some(1u64 << (XI_SHIFT as usize + a)),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::X(i) => write!(f, "x{}", i + 1),
            Symbol::P(i) => write!(f, "p{}", i + 1),
            Symbol::Theta(a) => write!(f, "θ{}", a + 1),
            Symbol::Xi(a) => write!(f, "ξ{}", a + 1),
        }
    }
}

/// `(ε, δ)`: degree in `(θ, p)` and degree in `(ξ, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub eps: u32,
    pub delta: u32,
}

impl Bidegree {
    pub const fn new(eps: u32, delta: u32) -> Self {
        Bidegree { eps, delta }
    }

    /// `(ε − 1, δ − 1)`.
    pub fn shifted(&self) -> (i64, i64) {
        (self.eps as i64 - 1, self.delta as i64 - 1)
    }

    pub fn total_shifted(&self) -> i64 {
        self.eps as i64 + self.delta as i64 - 2
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.eps + rhs.eps, self.delta + rhs.delta)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.eps, self.delta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// Monomial in normal form (coefficient kept separately).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMonomial {
    x: Box<[u32]>,
    p: Box<[u32]>,
    odd: u64,
}

impl SuperMonomial {
    pub fn one(coords: CoordinateSystem) -> Self {
        SuperMonomial {
            x: vec![0; coords.base_dim].into(),
            p: vec![0; coords.base_dim].into(),
            odd: 0,
        }
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.x
    }

    pub fn p_exponents(&self) -> &[u32] {
        &self.p
    }

    pub fn theta_indices(&self) -> Vec<usize> {
        bits(self.odd & 0xffff_ffff).collect()
    }

    pub fn xi_indices(&self) -> Vec<usize> {
        bits(self.odd >> XI_SHIFT).collect()
    }

    pub(crate) fn odd_mask(&self) -> u64 {
        self.odd
    }

    pub fn odd_degree(&self) -> u32 {
        self.odd.count_ones()
    }

    pub fn parity(&self) -> Parity {
        if self.odd.count_ones() % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn bidegree(&self) -> Bidegree {
        let pdeg: u32 = self.p.iter().sum();
        let th = (self.odd & 0xffff_ffff).count_ones();
        let xi = (self.odd >> XI_SHIFT).count_ones();
        Bidegree::new(th + pdeg, xi + pdeg)
    }

    /// Product in normal form; `None` if an odd generator repeats. The flag
    /// is `true` when the Koszul sign is negative.
    pub(crate) fn mul(&self, other: &SuperMonomial) -> Option<(SuperMonomial, bool)> {
        if self.odd & other.odd != 0 {
            return None;
        }
        // Inversions: pairs (u from self, v from other) with v < u.
        let mut inv = 0u32;
        let mut rest = other.odd;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            inv += (self.odd >> v >> 1).count_ones();
        }
        let m = SuperMonomial {
            x: add_exps(&self.x, &other.x),
            p: add_exps(&self.p, &other.p),
            odd: self.odd | other.odd,
        };
        Some((m, inv % 2 == 1))
    }

    /// Derivative with respect to the odd generator at `bit`. Left
    /// derivatives pick up the parity of the odd factors before it, right
    /// derivatives the parity of those after it.
    pub(crate) fn odd_derivative(&self, bit: u64, left: bool) -> Option<(SuperMonomial, bool)> {
        if self.odd & bit == 0 {
            return None;
        }
        let before = (self.odd & (bit - 1)).count_ones();
        let after = self.odd.count_ones() - before - 1;
        let n = if left { before } else { after };
        let mut m = self.clone();
        m.odd &= !bit;
        Some((m, n % 2 == 1))
    }

    /// Derivative with respect to `x^i` (`momentum == false`) or `p_i`.
    pub(crate) fn even_derivative(&self, i: usize, momentum: bool) -> Option<(SuperMonomial, u32)> {
        let e = if momentum { &self.p } else { &self.x };
        let k = e[i];
        if k == 0 {
            return None;
        }
        let mut m = self.clone();
        if momentum {
            m.p = dec(&m.p, i);
        } else {
            m.x = dec(&m.x, i);
        }
        Some((m, k))
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

fn add_exps(a: &[u32], b: &[u32]) -> Box<[u32]> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn dec(a: &[u32], i: usize) -> Box<[u32]> {
    let mut v: Vec<u32> = a.to_vec();
    v[i] -= 1;
    v.into()
}

/// Finite sum of normal-form monomials with nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedPoly {
    coords: CoordinateSystem,
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl GradedPoly {
    pub fn zero(coords: CoordinateSystem) -> Self {
        GradedPoly {
            coords,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(coords: CoordinateSystem, c: Rational) -> Self {
        let mut p = Self::zero(coords);
        p.add_term(SuperMonomial::one(coords), c);
        p
    }

    pub fn one(coords: CoordinateSystem) -> Self {
        Self::constant(coords, Rational::one())
    }

    /// A single generator as a polynomial.
    pub fn symbol(coords: CoordinateSystem, s: Symbol) -> Result<Self> {
        Self::normalize(coords, Rational::one(), &[s])
    }

    /// Bring `coeff · s_1 s_2 ⋯ s_k` to normal form.
    pub fn normalize(coords: CoordinateSystem, coeff: Rational, symbols: &[Symbol]) -> Result<Self> {
        let mut x = vec![0u32; coords.base_dim];
        let mut p = vec![0u32; coords.base_dim];
        let mut odd = 0u64;
        let mut negative = false;
        for &s in symbols {
            coords.check_symbol(s)?;
            match s {
                Symbol::X(i) => x[i] += 1,
                Symbol::P(i) => p[i] += 1,
                _ => {
                    let bit = s.odd_bit().unwrap();
                    if odd & bit != 0 {
                        return Ok(Self::zero(coords));
                    }
                    // Moving the new odd factor left past the larger ones.
                    if (odd & !(bit | (bit - 1))).count_ones() % 2 == 1 {
                        negative = !negative;
                    }
                    odd |= bit;
                }
            }
        }
        let m = SuperMonomial {
            x: x.into(),
            p: p.into(),
            odd,
        };
        let mut out = Self::zero(coords);
        out.add_term(m, if negative { -coeff } else { coeff });
        Ok(out)
    }

    /// A base polynomial viewed as a function on `T*ΠA`.
    pub fn from_base(coords: CoordinateSystem, f: &BasePoly) -> Self {
        assert_eq!(f.nvars(), coords.base_dim, "base polynomial has wrong arity");
        let mut out = Self::zero(coords);
        for (e, c) in f.terms() {
            let m = SuperMonomial {
                x: e.into(),
                p: vec![0; coords.base_dim].into(),
                odd: 0,
            };
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn coords(&self) -> CoordinateSystem {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &SuperMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: SuperMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_coords(&self, other: &Self) -> Result<()> {
        if self.coords == other.coords {
            Ok(())
        } else {
            Err(Error::CoordinateMismatch(self.coords, other.coords))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_coords(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_coords(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Supercommutative product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_coords(other)?;
        let mut out = Self::zero(self.coords);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, neg)) = m1.mul(m2) {
                    let c = c1 * c2;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.coords);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    /// Multiply by a function of the base coordinates.
    pub fn mul_base(&self, f: &BasePoly) -> Self {
        self * &Self::from_base(self.coords, f)
    }

    /// Unique decomposition into bihomogeneous components.
    pub fn bidegree_components(&self) -> BTreeMap<Bidegree, GradedPoly> {
        let mut out: BTreeMap<Bidegree, GradedPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree())
                .or_insert_with(|| Self::zero(self.coords))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// The component of a given bidegree (possibly zero).
    pub fn component(&self, b: Bidegree) -> GradedPoly {
        let mut out = Self::zero(self.coords);
        for (m, c) in &self.terms {
            if m.bidegree() == b {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// `Some(b)` when every term has bidegree `b`; `None` for zero or mixed.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.keys().map(|m| m.bidegree());
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// Total odd degree mod 2; `None` for mixed parity. Zero is even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| m.parity());
        let first = match it.next() {
            Some(p) => p,
            None => return Some(Parity::Even),
        };
        it.all(|p| p == first).then_some(first)
    }

    /// Split into parity-homogeneous parts `(even, odd)`.
    pub fn split_parity(&self) -> (GradedPoly, GradedPoly) {
        let mut even = Self::zero(self.coords);
        let mut odd = Self::zero(self.coords);
        for (m, c) in &self.terms {
            let target = if m.parity().is_odd() { &mut odd } else { &mut even };
            target.terms.insert(m.clone(), c.clone());
        }
        (even, odd)
    }

    /// Left derivative for odd generators, ordinary derivative for even ones.
    pub fn partial_derivative(&self, s: Symbol) -> Result<Self> {
        self.coords.check_symbol(s)?;
        Ok(self.derivative(s, true))
    }

    /// Right derivative: `f = Σ (∂^R f/∂η) η` for odd `η`.
    pub fn right_derivative(&self, s: Symbol) -> Result<Self> {
        self.coords.check_symbol(s)?;
        Ok(self.derivative(s, false))
    }

    pub(crate) fn derivative(&self, s: Symbol, left: bool) -> Self {
        let mut out = Self::zero(self.coords);
        for (m, c) in &self.terms {
            match s {
                Symbol::X(i) | Symbol::P(i) => {
                    if let Some((m2, k)) = m.even_derivative(i, matches!(s, Symbol::P(_))) {
                        out.add_term(m2, c * Rational::from_integer(k.into()));
                    }
                }
                _ => {
                    if let Some((m2, neg)) = m.odd_derivative(s.odd_bit().unwrap(), left) {
                        out.add_term(m2, if neg { -c.clone() } else { c.clone() });
                    }
                }
            }
        }
        out
    }

    /// Group terms by their momentum/odd part, collecting the base
    /// coefficient of each group.
    pub fn base_coefficients(&self) -> BTreeMap<(Box<[u32]>, u64), BasePoly> {
        let mut out: BTreeMap<(Box<[u32]>, u64), BasePoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry((m.p.clone(), m.odd))
                .or_insert_with(|| BasePoly::zero(self.coords.base_dim))
                .add_term(m.x.to_vec(), c.clone());
        }
        out
    }
}

impl Add for &GradedPoly {
    type Output = GradedPoly;
    /// Panics on a coordinate mismatch; use [`GradedPoly::checked_add`] to
    /// get an error instead.
    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        self.checked_add(rhs).expect("coordinate mismatch in add")
    }
}

impl Sub for &GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        self.checked_sub(rhs).expect("coordinate mismatch in sub")
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        self.checked_mul(rhs).expect("coordinate mismatch in mul")
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        GradedPoly {
            coords: self.coords,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        -&self
    }
}

impl Add for GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: GradedPoly) -> GradedPoly {
        &self + &rhs
    }
}

impl Sub for GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: GradedPoly) -> GradedPoly {
        &self - &rhs
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = fmt_exponents(f, &self.x, "x", false)?;
        sep = fmt_exponents(f, &self.p, "p", sep)?;
        for a in self.theta_indices() {
            if sep {
                write!(f, "*")?;
            }
            write!(f, "θ{}", a + 1)?;
            sep = true;
        }
        for a in self.xi_indices() {
            if sep {
                write!(f, "*")?;
            }
            write!(f, "ξ{}", a + 1)?;
            sep = true;
        }
        if !sep {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Display for GradedPoly {
    /// Terms grouped by bidegree so that a failing component is easy to spot.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| a.0.bidegree().cmp(&b.0.bidegree()).then(a.0.cmp(b.0)));
        for (n, (m, c)) in ordered.into_iter().enumerate() {
            let constant = m.x.iter().all(|&k| k == 0) && m.p.iter().all(|&k| k == 0) && m.odd == 0;
            fmt_rational_coeff(f, c, n == 0, !constant)?;
            if !constant {
                let unit = {
                    use num_traits::Signed;
                    c.abs().is_one()
                };
                if !unit {
                    write!(f, "*")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn cs() -> CoordinateSystem {
        CoordinateSystem::new(2, 3).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn sym(s: &[Symbol]) -> GradedPoly {
        GradedPoly::normalize(cs(), q(1), s).unwrap()
    }

    use Symbol::*;

    #[test]
    fn normalize_sorts_odd_symbols_with_sign() {
        let a = sym(&[Theta(1), Theta(0), Xi(0)]);
        let b = sym(&[Theta(0), Theta(1), Xi(0)]);
        assert_eq!(a, -&b);
        assert!(sym(&[Xi(0), Xi(0)]).is_zero());
        let c = sym(&[X(0), P(0), Theta(0)]);
        let (m, coeff) = c.terms().next().unwrap();
        assert_eq!(*coeff, q(1));
        assert_eq!(m.theta_indices(), vec![0]);
        assert_eq!(m.x_exponents(), &[1, 0]);
    }

    #[test]
    fn normalize_rejects_unknown_symbols() {
        assert!(matches!(
            GradedPoly::normalize(cs(), q(1), &[Xi(3)]),
            Err(Error::UnknownSymbol(_))
        ));
        assert!(GradedPoly::symbol(cs(), X(2)).is_err());
    }

    #[test]
    fn add_examples() {
        let t = sym(&[Theta(0)]);
        assert!((&t + &(-&t)).is_zero());
        let half = Rational::new(1.into(), 2.into());
        let h = sym(&[Xi(0), Xi(1)]).scale(&half);
        assert_eq!(&h + &h, sym(&[Xi(0), Xi(1)]));
        let s = &sym(&[X(0), Theta(0)]) + &t;
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn add_rejects_mismatched_systems() {
        let other = CoordinateSystem::new(1, 3).unwrap();
        let f = GradedPoly::one(cs());
        let g = GradedPoly::one(other);
        assert!(matches!(f.checked_add(&g), Err(Error::CoordinateMismatch(..))));
        assert!(f.checked_mul(&g).is_err());
    }

    #[test]
    fn odd_generators_anticommute() {
        let t = sym(&[Theta(0)]);
        let x = sym(&[Xi(0)]);
        assert_eq!(&t * &x, sym(&[Theta(0), Xi(0)]));
        assert_eq!(&x * &t, -&sym(&[Theta(0), Xi(0)]));
        assert!((&t * &t).is_zero());
    }

    #[test]
    fn product_sign_matches_transposition_count() {
        // (θ1 ξ2)(θ2 ξ1): move θ2 left past ξ2 -> one swap, giving
        // -θ1 θ2 ξ2 ξ1 = +θ1 θ2 ξ1 ξ2.
        let f = sym(&[Theta(0), Xi(1)]);
        let g = sym(&[Theta(1), Xi(0)]);
        let fg = &f * &g;
        assert_eq!(fg, sym(&[Theta(0), Theta(1), Xi(0), Xi(1)]));
        assert_eq!(fg, &g * &f);
    }

    #[test]
    fn bidegree_components_examples() {
        let pi = sym(&[Theta(0), Theta(1)]);
        let comps = pi.bidegree_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[&Bidegree::new(2, 0)], pi);

        let mu = &sym(&[P(0), Xi(0)]) + &sym(&[Xi(0), Xi(1), Theta(1)]);
        let comps = mu.bidegree_components();
        assert_eq!(comps.keys().copied().collect::<Vec<_>>(), vec![Bidegree::new(1, 2)]);

        let mixed = &pi + &sym(&[Xi(0), Xi(1)]);
        let comps = mixed.bidegree_components();
        assert_eq!(comps[&Bidegree::new(0, 2)], sym(&[Xi(0), Xi(1)]));
        assert_eq!(comps[&Bidegree::new(2, 0)], pi);
        assert_eq!(mixed.bidegree(), None);
    }

    #[test]
    fn derivative_examples() {
        let f = sym(&[Theta(0), Xi(0)]);
        assert_eq!(f.partial_derivative(Theta(0)).unwrap(), sym(&[Xi(0)]));
        assert_eq!(f.partial_derivative(Xi(0)).unwrap(), -&sym(&[Theta(0)]));
        let g = sym(&[X(0), X(0), Theta(0)]);
        assert_eq!(
            g.partial_derivative(X(0)).unwrap(),
            sym(&[X(0), Theta(0)]).scale(&q(2))
        );
        assert!(f.partial_derivative(Xi(7)).is_err());
    }

    #[test]
    fn left_derivative_satisfies_leibniz_on_monomial() {
        // θ1 ξ1 = θ1 · ξ1; ∂_ξ1(θ1 ξ1) = (∂_ξ1 θ1) ξ1 + (-1)^{|θ1|} θ1 ∂_ξ1 ξ1 = -θ1.
        let t = sym(&[Theta(0)]);
        let x = sym(&[Xi(0)]);
        let leibniz = &(&t.partial_derivative(Xi(0)).unwrap() * &x)
            + &(-&(&t * &x.partial_derivative(Xi(0)).unwrap()));
        assert_eq!((&t * &x).partial_derivative(Xi(0)).unwrap(), leibniz);
    }

    #[test]
    fn display_groups_by_bidegree() {
        let f = &sym(&[Theta(0), Theta(1)]) + &sym(&[X(0), P(1), Xi(2)]).scale(&q(-3));
        assert_eq!(f.to_string(), "-3*x1*p2*ξ3 + θ1*θ2");
    }
}
