//! The free comodule algebra on the basis letters X_h, its coaction, the
//! universal evaluation morphisms μ_α and μ_σ, and decision procedures for
//! H-identities, coinvariance, centrality, and degree-bounded kernel search.

use std::collections::{BTreeMap, HashMap};

use crate::arith::{split_t_monomial, Monomial, RatExpr, SparsePoly};
use crate::error::HopfError;
use crate::hopf::{HopfData, TensorElt};
use crate::linalg;
use crate::twist::{phi, PhiDir, TwistedAlgebra};

/// Noncommutative polynomial in the letters X_{x_i}: linear combination of
/// words over basis indices.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FreePoly {
    pub terms: BTreeMap<Vec<usize>, RatExpr>,
}

impl FreePoly {
    pub fn zero() -> Self {
        FreePoly::default()
    }

    pub fn one() -> Self {
        FreePoly::word(Vec::new())
    }

    pub fn word(w: Vec<usize>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, RatExpr::one());
        FreePoly { terms }
    }

    pub fn letter(i: usize) -> Self {
        FreePoly::word(vec![i])
    }

    pub fn add_term(&mut self, w: Vec<usize>, c: RatExpr) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = &c + e.get();
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &RatExpr) -> FreePoly {
        let mut out = FreePoly::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximal word length.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn to_string_with(&self, h: &HopfData) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (w, c) in &self.terms {
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter()
                    .map(|&i| format!("X_{}", h.coalg.labels[i]))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            parts.push(format!("({}) {}", c.to_string_with(h.vars()), word));
        }
        parts.join(" + ")
    }
}

/// Element of T(X_H) ⊗ H: linear combination of (word, basis index) pairs.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CoactedPoly {
    pub terms: BTreeMap<(Vec<usize>, usize), RatExpr>,
}

impl CoactedPoly {
    pub fn add_term(&mut self, w: Vec<usize>, i: usize, c: RatExpr) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((w, i)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = &c + e.get();
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}

/// Iterates Δ across the letters of a word: returns the terms
/// (word of first legs, H-coefficient vector of the product of second legs).
fn coact_word(h: &HopfData, word: &[usize]) -> Vec<(Vec<usize>, Vec<RatExpr>)> {
    let d = h.dim();
    let mut acc: Vec<(Vec<usize>, Vec<RatExpr>)> = vec![(Vec::new(), h.unit.clone())];
    for &letter in word {
        let mut next: Vec<(Vec<usize>, Vec<RatExpr>)> = Vec::new();
        for (w, v) in &acc {
            for (p, q, c) in &h.coalg.delta[letter] {
                let mut w2 = w.clone();
                w2.push(*p);
                // v · x_q
                let mut v2 = vec![RatExpr::zero(); d];
                for (i, vi) in v.iter().enumerate() {
                    if vi.is_zero() {
                        continue;
                    }
                    for (u, m) in &h.mult[i][*q] {
                        v2[*u] = &v2[*u] + &(&(vi * c) * m);
                    }
                }
                // merge into next
                if let Some(entry) = next.iter_mut().find(|(w3, _)| w3 == &w2) {
                    for (a, b) in entry.1.iter_mut().zip(&v2) {
                        *a = &*a + b;
                    }
                } else {
                    next.push((w2, v2));
                }
            }
        }
        acc = next;
    }
    acc
}

/// The coaction δ(X_{h¹} ⋯ X_{hʳ}) = Σ X_{h¹(1)} ⋯ X_{hʳ(1)} ⊗ h¹(2) ⋯ hʳ(2),
/// extended linearly.
pub fn free_coaction(h: &HopfData, p: &FreePoly) -> CoactedPoly {
    let mut out = CoactedPoly::default();
    for (word, coeff) in &p.terms {
        for (w, v) in coact_word(h, word) {
            for (i, vi) in v.iter().enumerate() {
                out.add_term(w.clone(), i, coeff * vi);
            }
        }
    }
    out
}

/// The coinvariant generator P_{h¹,…,hʳ} = Σ X_{h¹(1)} ⋯ X_{hʳ(1)}
/// X_{S(h¹(2) ⋯ hʳ(2))}; its coaction is P ⊗ 1 (verified).
pub fn coinv_generator(h: &HopfData, word: &[usize]) -> FreePoly {
    let mut out = FreePoly::zero();
    for (w, v) in coact_word(h, word) {
        let sv = h.antipode_vec(&v);
        for (u, c) in sv.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut w2 = w.clone();
            w2.push(u);
            out.add_term(w2, c.clone());
        }
    }
    debug_assert!({
        let coact = free_coaction(h, &out);
        let mut expect = CoactedPoly::default();
        for (w, c) in &out.terms {
            for (i, ui) in h.unit.iter().enumerate() {
                expect.add_term(w.clone(), i, c * ui);
            }
        }
        coact == expect
    });
    out
}

/// μ(X_{x_i}) = Σ t_{x_i(1)} ⊗ x_i(2) as an element of S(t_H) ⊗ H.
pub fn mu_generator(h: &HopfData, i: usize) -> TensorElt {
    let d = h.dim();
    let mut t = TensorElt::zero(d);
    for (p, q, c) in &h.coalg.delta[i] {
        t.coords[*q] = &t.coords[*q] + &(c * &RatExpr::var(*p as u32));
    }
    t
}

/// Word-level cache for μ_α: values of prefixes are reused.
pub struct MuEvaluator<'a> {
    pub hopf: &'a HopfData,
    pub alg: &'a TwistedAlgebra,
    cache: HashMap<Vec<usize>, TensorElt>,
}

impl<'a> MuEvaluator<'a> {
    pub fn new(hopf: &'a HopfData, alg: &'a TwistedAlgebra) -> Self {
        MuEvaluator {
            hopf,
            alg,
            cache: HashMap::new(),
        }
    }

    pub fn word(&mut self, w: &[usize]) -> TensorElt {
        if w.is_empty() {
            return self.alg.unit.clone();
        }
        if let Some(v) = self.cache.get(w) {
            return v.clone();
        }
        let prefix = self.word(&w[..w.len() - 1]);
        let last = mu_generator(self.hopf, w[w.len() - 1]);
        let v = self.alg.mul(&prefix, &last);
        self.cache.insert(w.to_vec(), v.clone());
        v
    }

    pub fn eval(&mut self, p: &FreePoly) -> TensorElt {
        let d = self.hopf.dim();
        let mut out = TensorElt::zero(d);
        for (w, c) in &p.terms {
            out = out.add(&self.word(w).scale(c));
        }
        out
    }
}

/// The universal evaluation μ_α(P) ∈ S(t_H) ⊗ ^αH.
pub fn mu_alpha(h: &HopfData, alg: &TwistedAlgebra, p: &FreePoly) -> TensorElt {
    MuEvaluator::new(h, alg).eval(p)
}

/// μ_σ = φ⁻¹ ∘ μ_α; sends each letter X_h to 1 ⊗ h.
pub fn mu_sigma(h: &HopfData, alg: &TwistedAlgebra, p: &FreePoly) -> Result<TensorElt, HopfError> {
    phi(h, &mu_alpha(h, alg, p), PhiDir::Inverse)
}

/// H-identity test: P ∈ Ker μ_α (exact, over an infinite coefficient field).
pub fn is_identity(h: &HopfData, alg: &TwistedAlgebra, p: &FreePoly) -> bool {
    mu_alpha(h, alg, p).is_zero()
}

/// Coinvariance test: μ_α(P) lies in S(t_H) ⊗ k·1.
pub fn is_coinvariant(h: &HopfData, alg: &TwistedAlgebra, p: &FreePoly) -> bool {
    let v = mu_alpha(h, alg, p);
    in_line_of_unit(h, &v)
}

fn in_line_of_unit(h: &HopfData, v: &TensorElt) -> bool {
    // v must be an S(t)-multiple of the unit vector of H
    let Some(pivot) = h.unit.iter().position(|u| !u.is_zero()) else {
        return v.is_zero();
    };
    let lambda = &v.coords[pivot] / &h.unit[pivot];
    for (c, u) in v.coords.iter().zip(&h.unit) {
        if c != &(&lambda * u) {
            return false;
        }
    }
    true
}

/// Centrality test: [P, X_h] is an H-identity for every basis letter.
pub fn is_central(h: &HopfData, alg: &TwistedAlgebra, p: &FreePoly) -> bool {
    let v = mu_alpha(h, alg, p);
    for i in 0..h.dim() {
        let g = mu_generator(h, i);
        let comm = alg.mul(&v, &g).sub(&alg.mul(&g, &v));
        if !comm.is_zero() {
            return false;
        }
    }
    true
}

/// Center-membership test: every t-monomial component of μ_α(P) has its
/// H-coefficient vector in the span of the given central elements.
pub fn center_membership(
    h: &HopfData,
    alg: &TwistedAlgebra,
    center_basis: &[Vec<RatExpr>],
    p: &FreePoly,
) -> Result<bool, HopfError> {
    let v = mu_alpha(h, alg, p);
    let d = h.dim();
    let is_param = |id: u32| h.vars().is_param(id);
    // common denominator across the coordinates (denominators involve only
    // parameters for the inputs in scope; reject anything else)
    let mut den = SparsePoly::one();
    for c in &v.coords {
        let cd = c.den();
        if cd.vars().iter().any(|&w| !is_param(w)) {
            return Err(HopfError::Invalid(
                "t-variable denominator in a universal image".into(),
            ));
        }
        if den.div_exact(cd).is_none() {
            den = &den * cd;
        }
    }
    let den = RatExpr::from_poly(den);
    let cleared: Vec<SparsePoly> = v
        .coords
        .iter()
        .map(|c| (c * &den).as_poly().expect("cleared denominator").clone())
        .collect();
    // group by pure t-monomial
    let mut groups: BTreeMap<Monomial, Vec<RatExpr>> = BTreeMap::new();
    for (i, poly) in cleared.iter().enumerate() {
        for (m, coeff) in poly.terms() {
            let (t_part, p_part) = split_t_monomial(m, &is_param);
            let entry = groups
                .entry(t_part)
                .or_insert_with(|| vec![RatExpr::zero(); d]);
            let term = RatExpr::from_poly(SparsePoly::monomial(p_part, coeff.clone()));
            entry[i] = &entry[i] + &term;
        }
    }
    for vec in groups.values() {
        if !linalg::in_span(center_basis, vec) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of a degree-bounded kernel search.
pub struct SearchResult {
    pub degree: usize,
    pub kernel_dim: usize,
    pub basis: Vec<FreePoly>,
}

/// Default cap on the number of columns (words) of the search matrix.
pub const DEFAULT_COLUMN_CAP: usize = 10_000;

/// Exact kernel of μ_α restricted to words of length `degree`.  One column
/// per word; rows indexed by ((t, parameter)-monomial, basis index) pairs.
/// Every kernel basis element is re-verified by `is_identity`.
pub fn identity_search(
    h: &HopfData,
    alg: &TwistedAlgebra,
    degree: usize,
    column_cap: usize,
) -> Result<SearchResult, HopfError> {
    let d = h.dim();
    let ncols = d.checked_pow(degree as u32).ok_or(HopfError::ResourceLimit(usize::MAX, column_cap))?;
    if ncols > column_cap {
        return Err(HopfError::ResourceLimit(ncols, column_cap));
    }
    let mut eval = MuEvaluator::new(h, alg);
    let words: Vec<Vec<usize>> = all_words(d, degree);
    let is_param = |id: u32| h.vars().is_param(id);
    // row key: (t-monomial, basis index); entries live in the parameter field
    let mut row_index: BTreeMap<(Monomial, usize), usize> = BTreeMap::new();
    let mut columns: Vec<Vec<(usize, RatExpr)>> = Vec::with_capacity(ncols);
    for w in &words {
        let v = eval.word(w);
        let mut col: BTreeMap<usize, RatExpr> = BTreeMap::new();
        for (i, c) in v.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.den().vars().iter().any(|&x| !is_param(x)) {
                return Err(HopfError::Invalid(
                    "t-variable denominator in a universal image".into(),
                ));
            }
            let den = RatExpr::from_poly(c.den().clone());
            let num = c.num().clone();
            for (m, coeff) in num.terms() {
                let (t_part, p_part) = split_t_monomial(m, &is_param);
                let next = row_index.len();
                let row = *row_index.entry((t_part, i)).or_insert(next);
                let entry =
                    &RatExpr::from_poly(SparsePoly::monomial(p_part, coeff.clone())) / &den;
                let acc = col.entry(row).or_insert_with(RatExpr::zero);
                *acc = &*acc + &entry;
            }
        }
        columns.push(col.into_iter().collect());
    }
    let nrows = row_index.len();
    let mut m = vec![vec![RatExpr::zero(); ncols]; nrows];
    for (j, col) in columns.iter().enumerate() {
        for (row, e) in col {
            m[*row][j] = e.clone();
        }
    }
    let kernel = linalg::nullspace(&m, ncols);
    let mut basis = Vec::with_capacity(kernel.len());
    for k in &kernel {
        let mut p = FreePoly::zero();
        for (j, c) in k.iter().enumerate() {
            p.add_term(words[j].clone(), c.clone());
        }
        if !is_identity(h, alg, &p) {
            return Err(HopfError::Invalid(
                "kernel element failed identity re-verification".into(),
            ));
        }
        basis.push(p);
    }
    Ok(SearchResult {
        degree,
        kernel_dim: basis.len(),
        basis,
    })
}

/// All words of fixed length over d letters, lexicographic.
pub fn all_words(d: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * d);
        for w in &out {
            for i in 0..d {
                let mut w2 = w.clone();
                w2.push(i);
                next.push(w2);
            }
        }
        out = next;
    }
    out
}

/// Comodule-morphism law (μ_α ⊗ id)∘δ = (id ⊗ Δ)∘μ_α, as a d×d matrix
/// identity over the fraction field.
pub fn comodule_law_holds(h: &HopfData, alg: &TwistedAlgebra, p: &FreePoly) -> bool {
    let d = h.dim();
    let mut eval = MuEvaluator::new(h, alg);
    // LHS: apply μ to the word part of δ(p)
    let mut lhs = vec![vec![RatExpr::zero(); d]; d];
    for ((w, j), c) in &free_coaction(h, p).terms {
        let v = eval.word(w);
        for (i, vi) in v.coords.iter().enumerate() {
            lhs[i][*j] = &lhs[i][*j] + &(c * vi);
        }
    }
    // RHS: apply id ⊗ Δ to μ(p)
    let v = eval.eval(p);
    let mut rhs = vec![vec![RatExpr::zero(); d]; d];
    for (i, vi) in v.coords.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (p2, q2, c) in &h.coalg.delta[i] {
            rhs[*p2][*q2] = &rhs[*p2][*q2] + &(vi * c);
        }
    }
    lhs == rhs
}
