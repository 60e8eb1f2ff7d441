//! The JSON structure file.
//!
//! ```json
//! {
//!   "base_dim": 0, "rank": 2,
//!   "anchor": [],
//!   "brackets": [{"index": [1, 2, 2], "value": [[[], 1, 1]]}],
//!   "pi": [{"index": [1, 2], "value": [[[], 1, 1]]}]
//! }
//! ```
//!
//! Indices are 1-based. An anchor entry `[a, i]` is `ρ(e_a)^i`, a bracket
//! entry `[a, b, k]` is `c^k_{ab}` (and sets `c^k_{ba} = −c^k_{ab}`), tensor
//! entries list independent components (increasing indices for multivectors
//! and forms, `[row, column]` for `n`). A polynomial is a list of
//! `[exponents, numerator, denominator]` terms; integers may be written as
//! strings when they do not fit 64 bits. `"catalog": "aff1"` replaces the
//! base tables by a built-in entry.

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use bigbracket::structures::{CpsTriple, LieAlgebroidData, PqnQuadruple, TensorData, TensorKind};
use bigbracket::{builtin, BasePoly, Rational};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub anchor: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub index: Vec<usize>,
    pub value: Vec<(Vec<u32>, Int, Int)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Int {
    Small(i64),
    Big(String),
}

impl Int {
    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            Int::Small(n) => Ok((*n).into()),
            Int::Big(s) => s.trim().parse().map_err(|_| anyhow!("`{s}` is not an integer")),
        }
    }

    fn from_bigint(n: &BigInt) -> Int {
        i64::try_from(n).map_or_else(|_| Int::Big(n.to_string()), Int::Small)
    }
}

/// Parse a structure file; syntax errors carry the line and column.
pub fn parse(text: &str) -> Result<StructureFile> {
    serde_json::from_str(text).context("malformed structure file")
}

fn poly(value: &[(Vec<u32>, Int, Int)], base_dim: usize, field: &str) -> Result<BasePoly> {
    let mut terms = Vec::with_capacity(value.len());
    for (t, (exps, num, den)) in value.iter().enumerate() {
        if exps.len() != base_dim {
            bail!("{field}[{t}]: exponent list has length {}, expected base_dim = {base_dim}", exps.len());
        }
        let den = den.to_bigint().with_context(|| format!("{field}[{t}] denominator"))?;
        if den == BigInt::from(0) {
            bail!("{field}[{t}]: zero denominator");
        }
        let num = num.to_bigint().with_context(|| format!("{field}[{t}] numerator"))?;
        terms.push((exps.clone(), Rational::new(num, den)));
    }
    Ok(BasePoly::from_terms(base_dim, terms))
}

fn zero_based(idx: &[usize], arity: usize, bound: &[usize], field: &str) -> Result<Vec<usize>> {
    if idx.len() != arity {
        bail!("{field}.index: expected {arity} indices, got {}", idx.len());
    }
    idx.iter()
        .zip(bound)
        .map(|(&i, &b)| {
            if (1..=b).contains(&i) {
                Ok(i - 1)
            } else {
                Err(anyhow!("{field}.index: {i} is outside 1..={b}"))
            }
        })
        .collect()
}

impl StructureFile {
    /// The Lie algebroid data (structure functions need not satisfy Jacobi).
    pub fn algebroid(&self) -> Result<LieAlgebroidData> {
        if let Some(name) = &self.catalog {
            let entry = builtin(name).with_context(|| format!("catalog: `{name}`"))?;
            let alg = entry.algebroid;
            for (field, given, actual) in [("base_dim", self.base_dim, alg.base_dim()), ("rank", self.rank, alg.rank())] {
                if given.is_some_and(|g| g != actual) {
                    bail!("{field}: {} disagrees with catalog entry `{name}` ({actual})", given.unwrap());
                }
            }
            if !self.anchor.is_empty() || !self.brackets.is_empty() {
                bail!("anchor/brackets: not allowed together with `catalog`");
            }
            return Ok(alg);
        }
        let m = self.base_dim.ok_or_else(|| anyhow!("base_dim: missing"))?;
        let r = self.rank.ok_or_else(|| anyhow!("rank: missing"))?;
        let mut anchor = Vec::new();
        for (e, entry) in self.anchor.iter().enumerate() {
            let field = format!("anchor[{e}]");
            let i = zero_based(&entry.index, 2, &[r, m], &field)?;
            anchor.push((i[0], i[1], poly(&entry.value, m, &format!("{field}.value"))?));
        }
        let mut brackets = Vec::new();
        for (e, entry) in self.brackets.iter().enumerate() {
            let field = format!("brackets[{e}]");
            let i = zero_based(&entry.index, 3, &[r, r, r], &field)?;
            brackets.push((i[0], i[1], i[2], poly(&entry.value, m, &format!("{field}.value"))?));
        }
        LieAlgebroidData::from_sparse(m, r, anchor, brackets).map_err(|e| anyhow!("brackets: {e}"))
    }

    /// The algebroid, after validating every tensor block and `lambda`.
    pub fn load(&self) -> Result<LieAlgebroidData> {
        let alg = self.algebroid()?;
        for name in ["pi", "n", "omega", "sigma", "psi", "h"] {
            self.tensor(&alg, name, true)?;
        }
        self.lambda()?;
        Ok(alg)
    }

    fn block(&self, name: &str) -> Option<&Vec<Entry>> {
        match name {
            "pi" => self.pi.as_ref(),
            "n" => self.n.as_ref(),
            "omega" => self.omega.as_ref(),
            "sigma" => self.sigma.as_ref(),
            "psi" => self.psi.as_ref(),
            "h" => self.h.as_ref(),
            _ => None,
        }
    }

    /// The tensor block `name`, or zero when `optional` and absent.
    pub fn tensor(&self, alg: &LieAlgebroidData, name: &str, optional: bool) -> Result<TensorData> {
        let kind = kind_of(name);
        let (m, r) = (alg.base_dim(), alg.rank());
        let Some(entries) = self.block(name) else {
            if optional {
                return Ok(TensorData::zeros(kind, m, r));
            }
            bail!("{name}: missing");
        };
        let mut comps = Vec::new();
        for (e, entry) in entries.iter().enumerate() {
            let field = format!("{name}[{e}]");
            let idx = zero_based(&entry.index, kind.arity(), &vec![r; kind.arity()], &field)?;
            comps.push((idx, poly(&entry.value, m, &format!("{field}.value"))?));
        }
        TensorData::from_components(kind, m, r, comps).map_err(|e| anyhow!("{name}: {e}"))
    }

    pub fn lambda(&self) -> Result<i64> {
        match self.lambda.unwrap_or(0) {
            l @ -1..=1 => Ok(l),
            l => bail!("lambda: must be -1, 0 or 1, got {l}"),
        }
    }

    pub fn cps(&self, alg: &LieAlgebroidData) -> Result<CpsTriple> {
        let t = |name| self.tensor(alg, name, true);
        CpsTriple::new(t("pi")?, t("n")?, t("sigma")?, self.lambda()?).map_err(|e| anyhow!("{e}"))
    }

    pub fn quadruple(&self, alg: &LieAlgebroidData) -> Result<PqnQuadruple> {
        let t = |name| self.tensor(alg, name, true);
        PqnQuadruple::new(t("pi")?, t("n")?, t("psi")?, t("h")?).map_err(|e| anyhow!("{e}"))
    }

    /// A file that reproduces `alg` with the given tensor blocks.
    pub fn from_parts(alg: &LieAlgebroidData, tensors: &[(&str, &TensorData)]) -> StructureFile {
        let mut f = StructureFile {
            base_dim: Some(alg.base_dim()),
            rank: Some(alg.rank()),
            ..Default::default()
        };
        for a in 0..alg.rank() {
            for i in 0..alg.base_dim() {
                let v = alg.anchor(a, i);
                if !v.is_zero() {
                    f.anchor.push(entry(&[a, i], v));
                }
            }
        }
        for a in 0..alg.rank() {
            for b in a + 1..alg.rank() {
                for k in 0..alg.rank() {
                    let v = alg.structure(a, b, k);
                    if !v.is_zero() {
                        f.brackets.push(entry(&[a, b, k], v));
                    }
                }
            }
        }
        for (name, t) in tensors {
            let block = Some(t.components().iter().map(|(idx, v)| entry(idx, v)).collect());
            match *name {
                "pi" => f.pi = block,
                "n" => f.n = block,
                "omega" => f.omega = block,
                "sigma" => f.sigma = block,
                "psi" => f.psi = block,
                "h" => f.h = block,
                _ => unreachable!("unknown tensor block {name}"),
            }
        }
        f
    }
}

fn kind_of(name: &str) -> TensorKind {
    match name {
        "pi" => TensorKind::BIVECTOR,
        "n" => TensorKind::Endomorphism,
        "omega" | "sigma" => TensorKind::TWO_FORM,
        "psi" | "h" => TensorKind::THREE_FORM,
        _ => unreachable!("unknown tensor block {name}"),
    }
}

fn entry(idx: &[usize], v: &BasePoly) -> Entry {
    Entry {
        index: idx.iter().map(|i| i + 1).collect(),
        value: v
            .terms()
            .map(|(e, c)| (e.to_vec(), Int::from_bigint(c.numer()), Int::from_bigint(c.denom())))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const AFF1: &str = r#"{"base_dim": 0, "rank": 2,
        "brackets": [{"index": [1, 2, 2], "value": [[[], 1, 1]]}]}"#;

    #[test]
    fn aff1_file_matches_the_catalog() {
        let alg = parse(AFF1).unwrap().algebroid().unwrap();
        assert_eq!(alg, builtin("aff1").unwrap().algebroid);
    }

    #[test]
    fn files_roundtrip_through_from_parts() {
        let e = builtin("tangent_poly(2,1)").unwrap();
        let pi = bigbracket::catalog::random_tensor(bigbracket::RandomKind::Bivector, &e, 3, 3).unwrap();
        let f = StructureFile::from_parts(&e.algebroid, &[("pi", &pi)]);
        let back = parse(&serde_json::to_string(&f).unwrap()).unwrap();
        let alg = back.algebroid().unwrap();
        assert_eq!(alg, e.algebroid);
        assert_eq!(back.tensor(&alg, "pi", false).unwrap(), pi);
    }

    #[test]
    fn errors_name_the_field() {
        let bad = r#"{"base_dim": 0, "rank": 2, "pi": [{"index": [1, 3], "value": []}]}"#;
        let f = parse(bad).unwrap();
        let alg = f.algebroid().unwrap();
        let err = f.tensor(&alg, "pi", false).unwrap_err().to_string();
        assert!(err.starts_with("pi[0].index"), "{err}");
        let err = format!("{:#}", parse("{\"rank\": 2,\n \"base_dim\": }").unwrap_err());
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn big_integers_may_be_strings() {
        let text = r#"{"base_dim": 1, "rank": 1,
            "anchor": [{"index": [1, 1], "value": [[[1], "123456789012345678901234567890", 7]]}]}"#;
        let alg = parse(text).unwrap().algebroid().unwrap();
        let want: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(alg.anchor(0, 0).terms().next().unwrap().1, &Rational::new(want, 7.into()));
    }
}
