//! Finite-dimensional coalgebras and Hopf algebras given by structure
//! constants, the convolution algebra on linear maps, the generic inverse
//! `t⁻¹`, and the canonical determinant Θ.

use num_traits::One;

use crate::arith::{Monomial, RatExpr, Rational, SparsePoly, VarTable};
use crate::error::HopfError;
use crate::linalg;

/// Coalgebra by structure constants: Δ(x_i) = Σ c_i^{p,q} x_p ⊗ x_q.
#[derive(Debug, Clone)]
pub struct Coalgebra {
    pub dim: usize,
    pub labels: Vec<String>,
    /// delta[i] lists (p, q, c_i^{p,q}).
    pub delta: Vec<Vec<(usize, usize, RatExpr)>>,
    pub counit: Vec<RatExpr>,
    /// Variable table: t-variable for basis i has id i; parameters follow.
    pub vars: VarTable,
}

impl Coalgebra {
    pub fn new(
        labels: Vec<String>,
        delta: Vec<Vec<(usize, usize, RatExpr)>>,
        counit: Vec<RatExpr>,
        params: &[String],
    ) -> Result<Self, HopfError> {
        let dim = labels.len();
        if dim == 0 {
            return Err(HopfError::Invalid("dimension 0 coalgebra".into()));
        }
        if delta.len() != dim || counit.len() != dim {
            return Err(HopfError::Invalid("delta/counit length mismatch".into()));
        }
        let vars = VarTable::new(&labels, params);
        let c = Coalgebra {
            dim,
            labels,
            delta,
            counit,
            vars,
        };
        let report = c.validate();
        if !report.is_empty() {
            return Err(HopfError::Invalid(format!(
                "coalgebra axioms violated: {}",
                report.join("; ")
            )));
        }
        Ok(c)
    }

    /// Axiom check without construction-time rejection; returns violations.
    pub fn validate(&self) -> Vec<String> {
        let mut bad = Vec::new();
        // coassociativity
        for i in 0..self.dim {
            let lhs = self.delta2_left(i);
            let rhs = self.delta2_right(i);
            if lhs != rhs {
                bad.push(format!("coassociativity fails at basis {}", self.labels[i]));
            }
        }
        // counit laws
        for i in 0..self.dim {
            let mut left = vec![RatExpr::zero(); self.dim];
            let mut right = vec![RatExpr::zero(); self.dim];
            for (p, q, c) in &self.delta[i] {
                left[*q] = &left[*q] + &(c * &self.counit[*p]);
                right[*p] = &right[*p] + &(c * &self.counit[*q]);
            }
            let mut expect = vec![RatExpr::zero(); self.dim];
            expect[i] = RatExpr::one();
            if left != expect || right != expect {
                bad.push(format!("counit law fails at basis {}", self.labels[i]));
            }
        }
        bad
    }

    fn delta2_left(&self, i: usize) -> Vec<Vec<Vec<RatExpr>>> {
        // (Δ ⊗ id)Δ as a dense 3-tensor
        let mut t = vec![vec![vec![RatExpr::zero(); self.dim]; self.dim]; self.dim];
        for (p, q, c) in &self.delta[i] {
            for (r, s, c2) in &self.delta[*p] {
                t[*r][*s][*q] = &t[*r][*s][*q] + &(c * c2);
            }
        }
        t
    }

    fn delta2_right(&self, i: usize) -> Vec<Vec<Vec<RatExpr>>> {
        let mut t = vec![vec![vec![RatExpr::zero(); self.dim]; self.dim]; self.dim];
        for (p, q, c) in &self.delta[i] {
            for (r, s, c2) in &self.delta[*q] {
                t[*p][*r][*s] = &t[*p][*r][*s] + &(c * c2);
            }
        }
        t
    }

    /// Iterated comultiplication Δ² as a list of (p, q, r, coeff).
    pub fn delta2(&self, i: usize) -> Vec<(usize, usize, usize, RatExpr)> {
        let mut out = Vec::new();
        for (p, q, c) in &self.delta[i] {
            for (r, s, c2) in &self.delta[*p] {
                out.push((*r, *s, *q, c * c2));
            }
        }
        out
    }
}

/// Linear map from a coalgebra to the working field, by basis values.
#[derive(Debug, Clone, PartialEq)]
pub struct LinMap {
    pub values: Vec<RatExpr>,
}

impl LinMap {
    pub fn new(values: Vec<RatExpr>) -> Self {
        LinMap { values }
    }

    /// The convolution unit εη.
    pub fn counit_unit(c: &Coalgebra) -> Self {
        LinMap {
            values: c.counit.clone(),
        }
    }

    /// The generic map t sending x_i to the variable t_i.
    pub fn generic_t(c: &Coalgebra) -> Self {
        LinMap {
            values: (0..c.dim).map(|i| RatExpr::var(i as u32)).collect(),
        }
    }
}

/// (f * g)(x_i) = Σ c_i^{p,q} f(x_p) g(x_q).
pub fn convolution(c: &Coalgebra, f: &LinMap, g: &LinMap) -> LinMap {
    assert_eq!(f.values.len(), c.dim);
    assert_eq!(g.values.len(), c.dim);
    let mut values = vec![RatExpr::zero(); c.dim];
    for i in 0..c.dim {
        for (p, q, coeff) in &c.delta[i] {
            let term = &(coeff * &f.values[*p]) * &g.values[*q];
            values[i] = &values[i] + &term;
        }
    }
    LinMap { values }
}

/// The matrix M_{i,q} = Σ_p c_i^{p,q} f(x_p) used to invert f in convolution.
pub fn convolution_matrix(c: &Coalgebra, f: &LinMap) -> linalg::Matrix {
    let mut m = vec![vec![RatExpr::zero(); c.dim]; c.dim];
    for i in 0..c.dim {
        for (p, q, coeff) in &c.delta[i] {
            m[i][*q] = &m[i][*q] + &(coeff * &f.values[*p]);
        }
    }
    m
}

/// Convolution inverse: solves M g = ε and checks both one-sided identities.
pub fn convolution_inverse(c: &Coalgebra, f: &LinMap) -> Result<LinMap, HopfError> {
    let m = convolution_matrix(c, f);
    let rhs: Vec<RatExpr> = c.counit.clone();
    let g = linalg::solve(&m, &rhs).ok_or(HopfError::NotConvolutionInvertible)?;
    let g = LinMap { values: g };
    let unit = LinMap::counit_unit(c);
    if convolution(c, f, &g) != unit || convolution(c, &g, f) != unit {
        return Err(HopfError::NotConvolutionInvertible);
    }
    Ok(g)
}

/// Θ_C: determinant of the matrix M with entries Σ_p c_i^{p,q} t_{x_p},
/// computed fraction-free over the polynomial ring.
pub fn theta(c: &Coalgebra) -> SparsePoly {
    let mut m = vec![vec![SparsePoly::zero(); c.dim]; c.dim];
    for i in 0..c.dim {
        for (p, q, coeff) in &c.delta[i] {
            let cp = coeff
                .as_poly()
                .expect("polynomial structure constants")
                .clone();
            let term = &cp * &SparsePoly::var(*p as u32);
            m[i][*q] = &m[i][*q] + &term;
        }
    }
    let det = linalg::det_bareiss(&m);
    // The determinant of the dual left-regular representation repeats each
    // irreducible block; reduce perfect powers so Θ generates the same
    // localization with the smallest polynomial (e.g. the matrix coalgebra
    // yields the generic determinant, not its n-th power).  The counit
    // normalization ε(Θ) = 1 is preserved by fixing the sign afterwards.
    let mut theta = det;
    'reduce: loop {
        let d = theta.degree();
        if d < 2 {
            break;
        }
        for k in 2..=d {
            if d % k == 0 {
                if let Some(q) = perfect_power_root(&theta, k) {
                    theta = q;
                    continue 'reduce;
                }
            }
        }
        break;
    }
    let eps = theta.eval(&|v| {
        c.counit
            .get(v as usize)
            .and_then(RatExpr::as_constant)
            .unwrap_or_else(Rational::one)
    });
    if eps == -Rational::one() {
        theta = theta.scale(&-Rational::one());
    }
    theta
}

/// Returns q with q^k = p, if such a polynomial exists over ℚ.
fn perfect_power_root(p: &SparsePoly, k: u32) -> Option<SparsePoly> {
    let (lm, lc) = p.leading_term()?;
    if p.degree() % k != 0 || lm.pairs().iter().any(|&(_, e)| e % k != 0) {
        return None;
    }
    let root_lc = rational_kth_root(lc, k)?;
    let root_lm = Monomial::from_pairs(lm.pairs().iter().map(|&(v, e)| (v, e / k)).collect());
    // greedy completion: the next term of q is leading(p - q^k) / (k lead(q)^{k-1})
    let head = root_lm.pow(k - 1);
    let mut head_coeff = Rational::from_integer(k.into());
    for _ in 0..k - 1 {
        head_coeff *= &root_lc;
    }
    let mut q = SparsePoly::zero();
    let mut last = root_lm.clone();
    q.add_term(root_lm, root_lc);
    loop {
        let r = p - &q.pow(k);
        if r.is_zero() {
            return Some(q);
        }
        let (rm, rc) = r.leading_term()?;
        let tm = rm.div(&head)?;
        if tm >= last {
            return None;
        }
        let tc = rc / &head_coeff;
        last = tm.clone();
        q.add_term(tm, tc);
    }
}

/// Exact k-th root of a rational, when it exists.
fn rational_kth_root(c: &Rational, k: u32) -> Option<Rational> {
    use num_traits::Signed;
    if c.is_negative() && k % 2 == 0 {
        return None;
    }
    let n = c.numer().nth_root(k);
    let d = c.denom().nth_root(k);
    let root = Rational::new(n, d);
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= &root;
    }
    if &acc == c {
        Some(root)
    } else {
        None
    }
}

/// Tensor coalgebra C1 ⊗ C2: basis pairs, Δ with the middle flip.
pub fn tensor_coalgebra(c1: &Coalgebra, c2: &Coalgebra) -> Coalgebra {
    let dim = c1.dim * c2.dim;
    let idx = |i: usize, j: usize| i * c2.dim + j;
    let mut labels = Vec::with_capacity(dim);
    for i in 0..c1.dim {
        for j in 0..c2.dim {
            labels.push(format!("{}__{}", c1.labels[i], c2.labels[j]));
        }
    }
    let mut delta = vec![Vec::new(); dim];
    let mut counit = vec![RatExpr::zero(); dim];
    for i in 0..c1.dim {
        for j in 0..c2.dim {
            counit[idx(i, j)] = &c1.counit[i] * &c2.counit[j];
            for (p, q, ca) in &c1.delta[i] {
                for (r, s, cb) in &c2.delta[j] {
                    delta[idx(i, j)].push((idx(*p, *r), idx(*q, *s), ca * cb));
                }
            }
        }
    }
    let vars = VarTable::new(&labels, &params_of(&c1.vars));
    Coalgebra {
        dim,
        labels,
        delta,
        counit,
        vars,
    }
}

fn params_of(vars: &VarTable) -> Vec<String> {
    vars.param_ids()
        .into_iter()
        .map(|id| vars.name(id).to_string())
        .collect()
}

/// Doubled variable table and the algebra-morphism extension of
/// Δ(t_x) = Σ t'_{x(1)} t''_{x(2)}.
pub fn free_hopf_coproduct(p: &SparsePoly, c: &Coalgebra) -> (SparsePoly, VarTable) {
    let d = c.dim as u32;
    let mut vars = VarTable::new(&[], &[]);
    for l in &c.labels {
        vars.push(format!("tp_{l}"), false);
    }
    for l in &c.labels {
        vars.push(format!("tpp_{l}"), false);
    }
    let map = |v: u32| -> Option<SparsePoly> {
        let i = v as usize;
        let mut out = SparsePoly::zero();
        for (pp, qq, coeff) in &c.delta[i] {
            let cp = coeff.as_poly().expect("polynomial structure constants");
            let m = Monomial::var(*pp as u32).mul(&Monomial::var(d + *qq as u32));
            out = &out + &(cp.mul_monomial(&m));
        }
        Some(out)
    };
    (p.substitute_polys(&map), vars)
}

/// Applies Δ to a polynomial in the primed image, seen as taking the t'
/// variables only: helper used to compare Θ' · Θ''.
pub fn embed_primed(p: &SparsePoly, offset: u32) -> SparsePoly {
    p.substitute_polys(&|v| Some(SparsePoly::var(v + offset)))
}

/// Finite-dimensional Hopf algebra by structure constants.
#[derive(Debug, Clone)]
pub struct HopfData {
    pub coalg: Coalgebra,
    pub name: String,
    /// mult[p][q] lists (i, coeff) with x_p x_q = Σ coeff x_i.
    pub mult: Vec<Vec<Vec<(usize, RatExpr)>>>,
    pub unit: Vec<RatExpr>,
    /// antipode[i] is the coefficient vector of S(x_i).
    pub antipode: Vec<Vec<RatExpr>>,
}

impl HopfData {
    pub fn new(
        name: String,
        coalg: Coalgebra,
        mult: Vec<Vec<Vec<(usize, RatExpr)>>>,
        unit: Vec<RatExpr>,
        antipode: Vec<Vec<RatExpr>>,
    ) -> Result<Self, HopfError> {
        let h = HopfData {
            coalg,
            name,
            mult,
            unit,
            antipode,
        };
        let report = h.validate();
        if !report.is_empty() {
            return Err(HopfError::Invalid(format!(
                "Hopf axioms violated: {}",
                report.join("; ")
            )));
        }
        Ok(h)
    }

    /// Builds without validating; used by `validate_report` on raw input.
    pub fn new_unchecked(
        name: String,
        coalg: Coalgebra,
        mult: Vec<Vec<Vec<(usize, RatExpr)>>>,
        unit: Vec<RatExpr>,
        antipode: Vec<Vec<RatExpr>>,
    ) -> Self {
        HopfData {
            coalg,
            name,
            mult,
            unit,
            antipode,
        }
    }

    pub fn dim(&self) -> usize {
        self.coalg.dim
    }

    pub fn vars(&self) -> &VarTable {
        &self.coalg.vars
    }

    /// Product of two coefficient vectors in H.
    pub fn mul_vec(&self, a: &[RatExpr], b: &[RatExpr]) -> Vec<RatExpr> {
        let d = self.dim();
        let mut out = vec![RatExpr::zero(); d];
        for (p, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (q, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let cab = ca * cb;
                for (i, m) in &self.mult[p][q] {
                    out[*i] = &out[*i] + &(&cab * m);
                }
            }
        }
        out
    }

    pub fn basis_vec(&self, i: usize) -> Vec<RatExpr> {
        let mut v = vec![RatExpr::zero(); self.dim()];
        v[i] = RatExpr::one();
        v
    }

    /// S applied to a coefficient vector.
    pub fn antipode_vec(&self, a: &[RatExpr]) -> Vec<RatExpr> {
        let d = self.dim();
        let mut out = vec![RatExpr::zero(); d];
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                out[j] = &out[j] + &(c * &self.antipode[i][j]);
            }
        }
        out
    }

    /// Axiom report; empty means every Hopf axiom holds.
    pub fn validate(&self) -> Vec<String> {
        let d = self.dim();
        let labels = &self.coalg.labels;
        let mut bad = self.coalg.validate();
        // associativity
        'outer: for p in 0..d {
            for q in 0..d {
                for r in 0..d {
                    let left = self.mul_vec(
                        &self.mul_vec(&self.basis_vec(p), &self.basis_vec(q)),
                        &self.basis_vec(r),
                    );
                    let right = self.mul_vec(
                        &self.basis_vec(p),
                        &self.mul_vec(&self.basis_vec(q), &self.basis_vec(r)),
                    );
                    if left != right {
                        bad.push(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[p], labels[q], labels[r]
                        ));
                        break 'outer;
                    }
                }
            }
        }
        // unit laws
        for i in 0..d {
            let e = self.basis_vec(i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                bad.push(format!("unit law fails at basis {}", labels[i]));
            }
        }
        // counit is an algebra morphism
        for p in 0..d {
            for q in 0..d {
                let mut lhs = RatExpr::zero();
                for (i, c) in &self.mult[p][q] {
                    lhs = &lhs + &(c * &self.coalg.counit[*i]);
                }
                let rhs = &self.coalg.counit[p] * &self.coalg.counit[q];
                if lhs != rhs {
                    bad.push(format!(
                        "counit not multiplicative at ({}, {})",
                        labels[p], labels[q]
                    ));
                }
            }
        }
        // Δ is an algebra morphism
        for p in 0..d {
            for q in 0..d {
                let mut lhs = vec![vec![RatExpr::zero(); d]; d];
                for (i, c) in &self.mult[p][q] {
                    for (a, b, c2) in &self.coalg.delta[*i] {
                        lhs[*a][*b] = &lhs[*a][*b] + &(c * c2);
                    }
                }
                let mut rhs = vec![vec![RatExpr::zero(); d]; d];
                for (a1, b1, c1) in &self.coalg.delta[p] {
                    for (a2, b2, c2) in &self.coalg.delta[q] {
                        let c12 = c1 * c2;
                        for (a, ca) in &self.mult[*a1][*a2] {
                            for (b, cb) in &self.mult[*b1][*b2] {
                                rhs[*a][*b] = &rhs[*a][*b] + &(&(&c12 * ca) * cb);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    bad.push(format!(
                        "comultiplication not multiplicative at ({}, {})",
                        labels[p], labels[q]
                    ));
                }
            }
        }
        // Δ(1) = 1 ⊗ 1, ε(1) = 1
        {
            let mut d1 = vec![vec![RatExpr::zero(); d]; d];
            let mut e1 = RatExpr::zero();
            for (i, c) in self.unit.iter().enumerate() {
                e1 = &e1 + &(c * &self.coalg.counit[i]);
                for (a, b, c2) in &self.coalg.delta[i] {
                    d1[*a][*b] = &d1[*a][*b] + &(c * c2);
                }
            }
            let mut unit_tensor = vec![vec![RatExpr::zero(); d]; d];
            for (a, ca) in self.unit.iter().enumerate() {
                for (b, cb) in self.unit.iter().enumerate() {
                    unit_tensor[a][b] = ca * cb;
                }
            }
            if d1 != unit_tensor {
                bad.push("comultiplication does not preserve the unit".into());
            }
            if e1 != RatExpr::one() {
                bad.push("counit does not preserve the unit".into());
            }
        }
        // antipode axiom m(S ⊗ id)Δ = m(id ⊗ S)Δ = εη
        for i in 0..d {
            let mut left = vec![RatExpr::zero(); d];
            let mut right = vec![RatExpr::zero(); d];
            for (p, q, c) in &self.coalg.delta[i] {
                let sp = self.antipode_vec(&self.basis_vec(*p));
                let l = self.mul_vec(&sp, &self.basis_vec(*q));
                let sq = self.antipode_vec(&self.basis_vec(*q));
                let r = self.mul_vec(&self.basis_vec(*p), &sq);
                for j in 0..d {
                    left[j] = &left[j] + &(c * &l[j]);
                    right[j] = &right[j] + &(c * &r[j]);
                }
            }
            let expect: Vec<RatExpr> = self
                .unit
                .iter()
                .map(|u| u * &self.coalg.counit[i])
                .collect();
            if left != expect {
                bad.push(format!("antipode axiom (left) fails at basis {}", labels[i]));
            }
            if right != expect {
                bad.push(format!(
                    "antipode axiom (right) fails at basis {}",
                    labels[i]
                ));
            }
        }
        bad
    }

    /// t⁻¹ : H → K_H, the convolution inverse of the generic map t.
    pub fn t_inverse(&self) -> Result<LinMap, HopfError> {
        convolution_inverse(&self.coalg, &LinMap::generic_t(&self.coalg))
    }

    /// Basis of the right integrals N with (N ⊗ id)Δ = N(·) 1.
    pub fn right_integral_space(&self) -> Vec<LinMap> {
        let d = self.dim();
        let mut rows = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![RatExpr::zero(); d];
                for (p, q, c) in &self.coalg.delta[i] {
                    if *q == j {
                        row[*p] = &row[*p] + c;
                    }
                }
                row[i] = &row[i] - &self.unit[j];
                rows.push(row);
            }
        }
        linalg::nullspace(&rows, d)
            .into_iter()
            .map(LinMap::new)
            .collect()
    }
}

/// Element of R ⊗ H with coordinates in the working fraction field.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorElt {
    pub coords: Vec<RatExpr>,
}

impl TensorElt {
    pub fn zero(d: usize) -> Self {
        TensorElt {
            coords: vec![RatExpr::zero(); d],
        }
    }

    pub fn basis(d: usize, i: usize) -> Self {
        let mut t = TensorElt::zero(d);
        t.coords[i] = RatExpr::one();
        t
    }

    pub fn scale(&self, c: &RatExpr) -> TensorElt {
        TensorElt {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &TensorElt) -> TensorElt {
        TensorElt {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &TensorElt) -> TensorElt {
        TensorElt {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RatExpr::is_zero)
    }

    pub fn to_string_with(&self, vars: &VarTable, labels: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(format!("({}) (x) {}", c.to_string_with(vars), labels[i]));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Counit specialization ε(t_x) = ε(x) of a polynomial in t-variables.
pub fn counit_specialize(p: &SparsePoly, c: &Coalgebra) -> RatExpr {
    let mut acc = RatExpr::zero();
    for (m, coeff) in p.terms() {
        let mut term = RatExpr::constant(coeff.clone());
        for &(v, e) in m.pairs() {
            if c.vars.is_param(v) {
                term = &term * &RatExpr::var(v).pow(e);
            } else {
                let eps = &c.counit[v as usize];
                term = &term * &eps.pow(e);
            }
        }
        acc = &acc + &term;
    }
    acc
}

pub fn one_rat() -> Rational {
    Rational::one()
}
