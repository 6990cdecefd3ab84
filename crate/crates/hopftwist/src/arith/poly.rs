use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{coeff_prefix, rational_to_string, Rational, VarTable};

pub type VarId = u32;

/// Sparse monomial: sorted `(variable, exponent)` pairs, no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VarId) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn from_pairs(mut pairs: Vec<(VarId, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        // merge repeated variables
        let mut exps: Vec<(VarId, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match exps.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => exps.push((v, e)),
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    /// Componentwise quotient; `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                return None; // divisor has a variable absent from self
            }
            if j < other.exps.len() && other.exps[j].0 == v {
                let eb = other.exps[j].1;
                if eb > e {
                    return None;
                }
                if e > eb {
                    out.push((v, e - eb));
                }
                j += 1;
            } else {
                out.push((v, e));
            }
        }
        if j < other.exps.len() {
            return None;
        }
        Some(Monomial { exps: out })
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        for &(v, e) in &self.exps {
            let eb = other.exponent(v);
            let m = e.min(eb);
            if m > 0 {
                out.push((v, m));
            }
        }
        Monomial { exps: out }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    pub fn to_string_with(&self, vars: &VarTable) -> String {
        if self.exps.is_empty() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    vars.name(v).to_string()
                } else {
                    format!("{}^{}", vars.name(v), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

// Graded lexicographic: total degree first, then lex with smaller ids more
// significant.  This is the canonical term order for the whole crate.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va < vb {
                        return Ordering::Greater; // earlier variable present only here
                    }
                    if va > vb {
                        return Ordering::Less;
                    }
                    match ea.cmp(&eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => {
                            // Same variable, larger exponent wins lex; the tail
                            // degrees compensate but lex looks at this position first.
                            return ord;
                        }
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the rationals, graded-lex term order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        SparsePoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        SparsePoly { terms }
    }

    pub fn var(v: VarId) -> Self {
        SparsePoly::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(Monomial::is_one)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Leading (maximal) term in the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> SparsePoly {
        let mut base = self.clone();
        let mut acc = SparsePoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn vars(&self) -> Vec<VarId> {
        let mut out: Vec<VarId> = Vec::new();
        for m in self.terms.keys() {
            for v in m.vars() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// GCD of monomials, i.e. the largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let mut acc = match it.next() {
            Some(m) => m.clone(),
            None => return Monomial::one(),
        };
        for m in it {
            acc = acc.gcd(m);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &SparsePoly) -> Option<SparsePoly> {
        let (dm, dc) = d.leading_term()?;
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(&dm)?;
            let qc = rc.clone() / dc.clone();
            let t = SparsePoly::monomial(qm, qc);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Euclidean remainder for univariate polynomials in variable `v`.
    fn rem_univariate(&self, d: &SparsePoly, v: VarId) -> SparsePoly {
        let dd = d.degree();
        let (dm, dc) = d.leading_term().expect("nonzero divisor");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.degree() >= dd {
            let (rm, rc) = rem.leading_term().unwrap();
            let qm = match rm.div(&dm) {
                Some(q) => q,
                None => break,
            };
            debug_assert!(qm.vars().all(|w| w == v));
            let t = SparsePoly::monomial(qm, rc.clone() / dc.clone());
            rem = &rem - &(&t * d);
        }
        rem
    }

    /// Monic univariate gcd, defined only when both polynomials involve a
    /// single common variable.
    pub fn univariate_gcd(&self, other: &SparsePoly) -> Option<SparsePoly> {
        let va = self.vars();
        let vb = other.vars();
        if va.len() != 1 || vb.len() != 1 || va[0] != vb[0] {
            return None;
        }
        let v = va[0];
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem_univariate(&b, v);
            a = b;
            b = r;
        }
        let lc = a.leading_term()?.1.clone();
        Some(a.scale(&(Rational::one() / lc)))
    }

    /// Full evaluation at a rational point; panics if a variable is missing
    /// from `assign` (callers validate first).
    pub fn eval(&self, assign: &dyn Fn(VarId) -> Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let x = assign(v);
                for _ in 0..e {
                    t *= x.clone();
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes a subset of variables by polynomials.
    pub fn substitute_polys(&self, map: &dyn Fn(VarId) -> Option<SparsePoly>) -> SparsePoly {
        let mut acc = SparsePoly::zero();
        for (m, c) in &self.terms {
            let mut term = SparsePoly::constant(c.clone());
            let mut kept = Vec::new();
            for &(v, e) in m.pairs() {
                match map(v) {
                    Some(p) => term = &term * &p.pow(e),
                    None => kept.push((v, e)),
                }
            }
            let term = term.mul_monomial(&Monomial::from_pairs(kept));
            acc = &acc + &term;
        }
        acc
    }

    pub fn to_string_with(&self, vars: &VarTable) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        // descending canonical order
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let prefix = coeff_prefix(c, i == 0);
            if m.is_one() {
                // bare coefficient, including +/-1
                let abs = c.abs();
                if i == 0 {
                    s.push_str(&if c.is_negative() {
                        format!("-{}", rational_to_string(&abs))
                    } else {
                        rational_to_string(&abs)
                    });
                } else if c.is_negative() {
                    s.push_str(&format!(" - {}", rational_to_string(&abs)));
                } else {
                    s.push_str(&format!(" + {}", rational_to_string(&abs)));
                }
            } else {
                s.push_str(&prefix);
                if !prefix.is_empty() && !prefix.ends_with(' ') && !prefix.ends_with('-') {
                    s.push('*');
                }
                s.push_str(&m.to_string_with(vars));
            }
        }
        s
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn monomial_order_is_graded_lex() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        let x2 = x.pow(2);
        let xy = x.mul(&y);
        let y2 = y.pow(2);
        assert!(x2 > xy);
        assert!(xy > y2);
        assert!(y2 > x); // degree dominates
        assert!(x > y);
        assert!(y > Monomial::one());
    }

    #[test]
    fn div_exact_multivariate() {
        // (x^2 - y^2) / (x - y) = x + y
        let x = SparsePoly::var(0);
        let y = SparsePoly::var(1);
        let num = &(&x * &x) - &(&y * &y);
        let den = &x - &y;
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q, &x + &y);
        assert!(num.div_exact(&(&x + &SparsePoly::one())).is_none());
    }

    #[test]
    fn univariate_gcd_monic() {
        // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1
        let x = SparsePoly::var(0);
        let a = &(&x * &x) - &SparsePoly::one();
        let b = &(&(&x * &x) - &x.scale(&rat(2))) + &SparsePoly::one();
        let g = a.univariate_gcd(&b).unwrap();
        assert_eq!(g, &x - &SparsePoly::one());
    }
}
