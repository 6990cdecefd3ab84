//! JSON (de)serialization of Hopf data, cocycles, σ tables, free
//! polynomials, and specialization assignments.  All coefficients are
//! strings in the arith grammar; rationals print as `p` or `p/q`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{parse_ratexpr, parse_rational, RatExpr, Rational, VarId};
use crate::error::HopfError;
use crate::hopf::{Coalgebra, HopfData};
use crate::identities::FreePoly;
use crate::twist::{Cocycle, SigmaTable};

#[derive(Debug, Serialize, Deserialize)]
pub struct DeltaRow {
    pub of: usize,
    pub terms: Vec<(usize, usize, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MultRow {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<(usize, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HopfJson {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub counit: Vec<String>,
    pub delta: Vec<DeltaRow>,
    pub mult: Vec<MultRow>,
    pub unit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
    #[serde(default)]
    pub params: Vec<String>,
}

/// Parses a Hopf algebra from the JSON schema; axioms are validated on
/// construction and violations reported as errors.
pub fn hopf_from_json(j: &HopfJson) -> Result<HopfData, HopfError> {
    let d = j.dim;
    if j.basis.len() != d {
        return Err(HopfError::Invalid("basis length != dim".into()));
    }
    // a throwaway coalgebra-free variable table for parsing coefficients
    let vars = crate::arith::VarTable::new(&j.basis, &j.params);
    let parse = |s: &str| parse_ratexpr(s, &vars);
    let mut delta = vec![Vec::new(); d];
    for row in &j.delta {
        if row.of >= d {
            return Err(HopfError::Invalid(format!("delta row index {}", row.of)));
        }
        for (p, q, c) in &row.terms {
            if *p >= d || *q >= d {
                return Err(HopfError::Invalid("delta term index out of range".into()));
            }
            delta[row.of].push((*p, *q, parse(c)?));
        }
    }
    let counit = j
        .counit
        .iter()
        .map(|s| parse(s))
        .collect::<Result<Vec<_>, _>>()?;
    let coalg = Coalgebra::new(j.basis.clone(), delta, counit, &j.params)?;
    let mut mult = vec![vec![Vec::new(); d]; d];
    for row in &j.mult {
        if row.left >= d || row.right >= d {
            return Err(HopfError::Invalid("mult row index out of range".into()));
        }
        for (i, c) in &row.terms {
            if *i >= d {
                return Err(HopfError::Invalid("mult term index out of range".into()));
            }
            mult[row.left][row.right].push((*i, parse_ratexpr(c, &coalg.vars)?));
        }
    }
    let unit = j
        .unit
        .iter()
        .map(|s| parse_ratexpr(s, &coalg.vars))
        .collect::<Result<Vec<_>, _>>()?;
    let antipode = j
        .antipode
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| parse_ratexpr(s, &coalg.vars))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    HopfData::new(j.name.clone(), coalg, mult, unit, antipode)
}

pub fn hopf_to_json(h: &HopfData) -> HopfJson {
    let d = h.dim();
    let vars = h.vars();
    let fmt = |e: &RatExpr| e.to_string_with(vars);
    HopfJson {
        name: h.name.clone(),
        dim: d,
        basis: h.coalg.labels.clone(),
        counit: h.coalg.counit.iter().map(&fmt).collect(),
        delta: (0..d)
            .map(|i| DeltaRow {
                of: i,
                terms: h.coalg.delta[i]
                    .iter()
                    .map(|(p, q, c)| (*p, *q, fmt(c)))
                    .collect(),
            })
            .collect(),
        mult: (0..d)
            .flat_map(|p| (0..d).map(move |q| (p, q)))
            .filter(|&(p, q)| !h.mult[p][q].is_empty())
            .map(|(p, q)| MultRow {
                left: p,
                right: q,
                terms: h.mult[p][q].iter().map(|(i, c)| (*i, fmt(c))).collect(),
            })
            .collect(),
        unit: h.unit.iter().map(&fmt).collect(),
        antipode: h
            .antipode
            .iter()
            .map(|row| row.iter().map(&fmt).collect())
            .collect(),
        params: h
            .vars()
            .param_ids()
            .into_iter()
            .map(|id| h.vars().name(id).to_string())
            .collect(),
    }
}

/// Cocycle file: the algebra is referenced by name or inlined.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
    Name(String),
    Inline(HopfJson),
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CocycleJson {
    pub hopf: HopfRef,
    pub values: Vec<Vec<String>>,
}

pub fn cocycle_from_values(h: &HopfData, values: &[Vec<String>]) -> Result<Cocycle, HopfError> {
    let d = h.dim();
    if values.len() != d || values.iter().any(|r| r.len() != d) {
        return Err(HopfError::Invalid("cocycle values must be d x d".into()));
    }
    let parsed = values
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| parse_ratexpr(s, h.vars()))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Cocycle::new(parsed))
}

pub fn cocycle_values_to_json(h: &HopfData, c: &Cocycle) -> Vec<Vec<String>> {
    c.values
        .iter()
        .map(|row| row.iter().map(|e| e.to_string_with(h.vars())).collect())
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SigmaJson {
    pub sigma: Vec<Vec<String>>,
    #[serde(rename = "sigmaInv")]
    pub sigma_inv: Vec<Vec<String>>,
}

pub fn sigma_to_json(h: &HopfData, s: &SigmaTable) -> SigmaJson {
    SigmaJson {
        sigma: cocycle_values_to_json(h, &s.sigma),
        sigma_inv: cocycle_values_to_json(h, &s.sigma_inv),
    }
}

pub fn sigma_from_json(h: &HopfData, j: &SigmaJson) -> Result<SigmaTable, HopfError> {
    Ok(SigmaTable {
        sigma: cocycle_from_values(h, &j.sigma)?,
        sigma_inv: cocycle_from_values(h, &j.sigma_inv)?,
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FreeTermJson {
    pub coeff: String,
    pub word: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FreePolyJson {
    pub terms: Vec<FreeTermJson>,
}

pub fn freepoly_from_json(h: &HopfData, j: &FreePolyJson) -> Result<FreePoly, HopfError> {
    let d = h.dim();
    let mut p = FreePoly::zero();
    for t in &j.terms {
        if t.word.iter().any(|&i| i >= d) {
            return Err(HopfError::Invalid("word index out of range".into()));
        }
        p.add_term(t.word.clone(), parse_ratexpr(&t.coeff, h.vars())?);
    }
    Ok(p)
}

pub fn freepoly_to_json(h: &HopfData, p: &FreePoly) -> FreePolyJson {
    FreePolyJson {
        terms: p
            .terms
            .iter()
            .map(|(w, c)| FreeTermJson {
                coeff: c.to_string_with(h.vars()),
                word: w.clone(),
            })
            .collect(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SearchJson {
    pub degree: usize,
    #[serde(rename = "kernelDim")]
    pub kernel_dim: usize,
    pub basis: Vec<FreePolyJson>,
    pub verified: bool,
}

/// Specialization assignment {"t_<label>": "p/q"}; entries for every
/// t-variable of the algebra are required.
pub fn assignment_from_json(
    h: &HopfData,
    map: &BTreeMap<String, String>,
) -> Result<Vec<Rational>, HopfError> {
    let d = h.dim();
    let mut out = Vec::with_capacity(d);
    for i in 0..d {
        let name = h.vars().name(i as VarId);
        let s = map
            .get(name)
            .ok_or(HopfError::UnassignedVariable(i as VarId))?;
        out.push(parse_rational(s)?);
    }
    Ok(out)
}
