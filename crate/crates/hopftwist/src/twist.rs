//! Two-cocycles, twisted algebras, the universal cocycle σ with its inverse,
//! the φ isomorphism, specialization, lazy transport, centers, and the
//! trace-form Gram determinant.

use crate::arith::{RatExpr, Rational, VarId, VarTable};
use crate::error::HopfError;
use crate::hopf::{
    convolution, convolution_inverse, tensor_coalgebra, HopfData, LinMap, TensorElt,
};
use crate::linalg;

/// Bilinear map H × H → R on the basis; paired with a [`HopfData`] by every
/// operation that uses it.
#[derive(Debug, Clone, PartialEq)]
pub struct Cocycle {
    pub values: Vec<Vec<RatExpr>>,
}

impl Cocycle {
    pub fn new(values: Vec<Vec<RatExpr>>) -> Self {
        Cocycle { values }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// The trivial cocycle ε ⊗ ε.
    pub fn trivial(h: &HopfData) -> Self {
        let eps = &h.coalg.counit;
        Cocycle {
            values: eps
                .iter()
                .map(|a| eps.iter().map(|b| a * b).collect())
                .collect(),
        }
    }

    /// Bilinear extension to coefficient vectors.
    pub fn apply(&self, x: &[RatExpr], y: &[RatExpr]) -> RatExpr {
        let mut acc = RatExpr::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc = &acc + &(&(xi * yj) * &self.values[i][j]);
            }
        }
        acc
    }

    /// As a linear map on the tensor coalgebra H ⊗ H (row-major basis order).
    pub fn as_linmap(&self) -> LinMap {
        let d = self.dim();
        let mut values = Vec::with_capacity(d * d);
        for row in &self.values {
            values.extend(row.iter().cloned());
        }
        debug_assert_eq!(values.len(), d * d);
        LinMap::new(values)
    }

    pub fn from_linmap(f: &LinMap, d: usize) -> Self {
        let values = (0..d)
            .map(|i| (0..d).map(|j| f.values[i * d + j].clone()).collect())
            .collect();
        Cocycle { values }
    }
}

/// α(x_q x_s, x_k) as a precomputable contraction with the multiplication.
fn apply_left_product(h: &HopfData, c: &Cocycle, q: usize, s: usize, k: usize) -> RatExpr {
    let mut acc = RatExpr::zero();
    for (u, m) in &h.mult[q][s] {
        acc = &acc + &(m * &c.values[*u][k]);
    }
    acc
}

fn apply_right_product(h: &HopfData, c: &Cocycle, i: usize, s: usize, w: usize) -> RatExpr {
    let mut acc = RatExpr::zero();
    for (u, m) in &h.mult[s][w] {
        acc = &acc + &(m * &c.values[i][*u]);
    }
    acc
}

/// Evaluates the cocycle equation on all d³ basis triples; `Some(triple)` is
/// the first counterexample in lexicographic order.
pub fn check_cocycle(h: &HopfData, c: &Cocycle) -> Option<(usize, usize, usize)> {
    let d = h.dim();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut lhs = RatExpr::zero();
                for (p, q, ci) in &h.coalg.delta[i] {
                    for (r, s, cj) in &h.coalg.delta[j] {
                        let coeff = ci * cj;
                        let term = &c.values[*p][*r] * &apply_left_product(h, c, *q, *s, k);
                        lhs = &lhs + &(&coeff * &term);
                    }
                }
                let mut rhs = RatExpr::zero();
                for (r, s, cj) in &h.coalg.delta[j] {
                    for (v, w, ck) in &h.coalg.delta[k] {
                        let coeff = cj * ck;
                        let term = &c.values[*r][*v] * &apply_right_product(h, c, i, *s, *w);
                        rhs = &rhs + &(&coeff * &term);
                    }
                }
                if lhs != rhs {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// α(x,1) = α(1,x) = ε(x)·1 on the basis.
pub fn check_normalized(h: &HopfData, c: &Cocycle) -> bool {
    let d = h.dim();
    for i in 0..d {
        let e = h.basis_vec(i);
        let eps = &h.coalg.counit[i];
        if &c.apply(&e, &h.unit) != eps || &c.apply(&h.unit, &e) != eps {
            return false;
        }
    }
    true
}

/// Convolution inverse of a bilinear map, computed on the tensor coalgebra
/// H ⊗ H.
pub fn cocycle_inverse(h: &HopfData, c: &Cocycle) -> Result<Cocycle, HopfError> {
    let tc = tensor_coalgebra(&h.coalg, &h.coalg);
    let inv = convolution_inverse(&tc, &c.as_linmap())?;
    Ok(Cocycle::from_linmap(&inv, h.dim()))
}

/// Twisted algebra R ⊗ ^αH: full basis product table and unit.
#[derive(Debug, Clone)]
pub struct TwistedAlgebra {
    pub cocycle: Cocycle,
    /// table[i][j] = (1 ⊗ x_i) ·_α (1 ⊗ x_j).
    pub table: Vec<Vec<TensorElt>>,
    pub unit: TensorElt,
}

impl TwistedAlgebra {
    pub fn dim(&self) -> usize {
        self.table.len()
    }

    /// Product of two elements of R ⊗ H (the product is R-bilinear).
    pub fn mul(&self, a: &TensorElt, b: &TensorElt) -> TensorElt {
        let d = self.dim();
        let mut out = TensorElt::zero(d);
        for (i, ai) in a.coords.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coords.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                out = out.add(&self.table[i][j].scale(&c));
            }
        }
        out
    }
}

/// Builds the twisted algebra.  The cocycle equation is checked first;
/// associativity on all basis triples and two-sidedness of the unit are
/// verified on the constructed table.
pub fn twist(h: &HopfData, c: &Cocycle) -> Result<TwistedAlgebra, HopfError> {
    if let Some((i, j, k)) = check_cocycle(h, c) {
        return Err(HopfError::CocycleCheckFailed(i, j, k));
    }
    let d = h.dim();
    let mut table = vec![vec![TensorElt::zero(d); d]; d];
    for i in 0..d {
        for j in 0..d {
            let mut t = TensorElt::zero(d);
            for (p, q, ci) in &h.coalg.delta[i] {
                for (r, s, cj) in &h.coalg.delta[j] {
                    let coeff = &(ci * cj) * &c.values[*p][*r];
                    if coeff.is_zero() {
                        continue;
                    }
                    for (u, m) in &h.mult[*q][*s] {
                        t.coords[*u] = &t.coords[*u] + &(&coeff * m);
                    }
                }
            }
            table[i][j] = t;
        }
    }
    // unit: α(1,x) = u·ε(x) with u = α(1,1) invertible forces u⁻¹·1_H
    let u = c.apply(&h.unit, &h.unit);
    if u.is_zero() {
        return Err(HopfError::Invalid("cocycle vanishes at (1,1)".into()));
    }
    for i in 0..d {
        let e = h.basis_vec(i);
        let expect = &u * &h.coalg.counit[i];
        if c.apply(&h.unit, &e) != expect || c.apply(&e, &h.unit) != expect {
            return Err(HopfError::Invalid(
                "cocycle is not normalized up to a unit at (1, ·)".into(),
            ));
        }
    }
    let unit = TensorElt {
        coords: h.unit.iter().map(|x| x * &u.inv()).collect(),
    };
    let alg = TwistedAlgebra {
        cocycle: c.clone(),
        table,
        unit,
    };
    // verify the unit and associativity on the basis
    for i in 0..d {
        let e = TensorElt::basis(d, i);
        if alg.mul(&alg.unit, &e) != e || alg.mul(&e, &alg.unit) != e {
            return Err(HopfError::Invalid(format!(
                "twisted unit fails at basis {}",
                h.coalg.labels[i]
            )));
        }
    }
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let left = alg.mul(&alg.table[i][j], &TensorElt::basis(d, k));
                let right = alg.mul(&TensorElt::basis(d, i), &alg.table[j][k]);
                if left != right {
                    return Err(HopfError::Invalid(format!(
                        "twisted product not associative at ({}, {}, {})",
                        h.coalg.labels[i], h.coalg.labels[j], h.coalg.labels[k]
                    )));
                }
            }
        }
    }
    Ok(alg)
}

/// The universal cocycle σ and its convolution inverse σ⁻¹.
#[derive(Debug, Clone)]
pub struct SigmaTable {
    pub sigma: Cocycle,
    pub sigma_inv: Cocycle,
}

/// σ(x,y) = Σ t_{x(1)} t_{y(1)} α(x(2),y(2)) t⁻¹_{x(3) y(3)} and the closed
/// σ⁻¹ formula; both verified convolution-inverse to each other, and σ
/// verified to be a cocycle.
pub fn universal_sigma(h: &HopfData, alpha: &Cocycle) -> Result<SigmaTable, HopfError> {
    let d = h.dim();
    let tinv = h.t_inverse()?;
    let alpha_inv = cocycle_inverse(h, alpha)?;
    let t_of = |v: &[(usize, RatExpr)]| -> RatExpr {
        let mut acc = RatExpr::zero();
        for (u, m) in v {
            acc = &acc + &(m * &RatExpr::var(*u as u32));
        }
        acc
    };
    let tinv_of = |v: &[(usize, RatExpr)]| -> RatExpr {
        let mut acc = RatExpr::zero();
        for (u, m) in v {
            acc = &acc + &(m * &tinv.values[*u]);
        }
        acc
    };
    let mut sigma = vec![vec![RatExpr::zero(); d]; d];
    let mut sigma_inv = vec![vec![RatExpr::zero(); d]; d];
    for i in 0..d {
        let di = h.coalg.delta2(i);
        for j in 0..d {
            let dj = h.coalg.delta2(j);
            let mut s = RatExpr::zero();
            let mut si = RatExpr::zero();
            for (p1, p2, p3, ci) in &di {
                for (q1, q2, q3, cj) in &dj {
                    let coeff = ci * cj;
                    // σ: t_{p1} t_{q1} α(p2,q2) t⁻¹_{p3·q3}
                    let a = &alpha.values[*p2][*q2];
                    if !a.is_zero() {
                        let term = &(&RatExpr::var(*p1 as u32) * &RatExpr::var(*q1 as u32))
                            * &(a * &tinv_of(&h.mult[*p3][*q3]));
                        s = &s + &(&coeff * &term);
                    }
                    // σ⁻¹: t_{p1·q1} α⁻¹(p2,q2) t⁻¹_{p3} t⁻¹_{q3}
                    let ai = &alpha_inv.values[*p2][*q2];
                    if !ai.is_zero() {
                        let term = &(&t_of(&h.mult[*p1][*q1]) * ai)
                            * &(&tinv.values[*p3] * &tinv.values[*q3]);
                        si = &si + &(&coeff * &term);
                    }
                }
            }
            sigma[i][j] = s;
            sigma_inv[i][j] = si;
        }
    }
    let sigma = Cocycle::new(sigma);
    let sigma_inv = Cocycle::new(sigma_inv);
    // verify σ * σ⁻¹ = σ⁻¹ * σ = εη on H ⊗ H
    let tc = tensor_coalgebra(&h.coalg, &h.coalg);
    let unit = LinMap::counit_unit(&tc);
    let f = sigma.as_linmap();
    let g = sigma_inv.as_linmap();
    if convolution(&tc, &f, &g) != unit || convolution(&tc, &g, &f) != unit {
        return Err(HopfError::Invalid(
            "universal cocycle inverse check failed".into(),
        ));
    }
    if let Some((i, j, k)) = check_cocycle(h, &sigma) {
        return Err(HopfError::CocycleCheckFailed(i, j, k));
    }
    Ok(SigmaTable { sigma, sigma_inv })
}

/// ε(t_x) = ε(t⁻¹_x) = ε(x) entrywise; recovers α from σ.  Also checks that
/// the same augmentation of σ⁻¹ equals α⁻¹.
pub fn augment(h: &HopfData, s: &SigmaTable) -> Result<Cocycle, HopfError> {
    let assign = counit_assignment(h);
    let alpha = substitute_cocycle(&s.sigma, &assign)?;
    let alpha_check = substitute_cocycle(&s.sigma_inv, &assign)?;
    let alpha_inv = cocycle_inverse(h, &alpha)?;
    if alpha_check != alpha_inv {
        return Err(HopfError::Invalid(
            "augmented sigma inverse does not match the cocycle inverse".into(),
        ));
    }
    Ok(alpha)
}

/// The counit specialization t_b ↦ ε(b).
pub fn counit_assignment(h: &HopfData) -> Vec<Rational> {
    h.coalg
        .counit
        .iter()
        .map(|e| e.as_constant().expect("rational counit"))
        .collect()
}

fn substitute_cocycle(c: &Cocycle, assign: &[Rational]) -> Result<Cocycle, HopfError> {
    let f = |v: VarId| -> Option<Rational> { assign.get(v as usize).cloned() };
    let mut values = Vec::with_capacity(c.dim());
    for row in &c.values {
        let mut out = Vec::with_capacity(row.len());
        for e in row {
            out.push(e.substitute_partial(&f)?);
        }
        values.push(out);
    }
    Ok(Cocycle::new(values))
}

/// Direction of the φ isomorphism between the σ- and α-twisted algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiDir {
    Forward,
    Inverse,
}

/// φ(b ⊗ h) = Σ b t_{h(1)} ⊗ h(2); the inverse uses t⁻¹ instead.
pub fn phi(h: &HopfData, e: &TensorElt, dir: PhiDir) -> Result<TensorElt, HopfError> {
    let d = h.dim();
    let tmap = match dir {
        PhiDir::Forward => LinMap::generic_t(&h.coalg),
        PhiDir::Inverse => h.t_inverse()?,
    };
    let mut out = TensorElt::zero(d);
    for (i, b) in e.coords.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        for (p, q, c) in &h.coalg.delta[i] {
            out.coords[*q] = &out.coords[*q] + &(&(b * c) * &tmap.values[*p]);
        }
    }
    Ok(out)
}

/// Specializes σ at a t-variable assignment, yielding a cocycle β over the
/// base field, and builds twist(H, β).  Parameters stay symbolic.
pub fn specialize(
    h: &HopfData,
    s: &SigmaTable,
    assign: &[Rational],
) -> Result<(Cocycle, TwistedAlgebra), HopfError> {
    let f = |v: VarId| -> Option<Rational> { assign.get(v as usize).cloned() };
    let labels = &h.coalg.labels;
    let mut values = Vec::with_capacity(s.sigma.dim());
    for (i, row) in s.sigma.values.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (j, e) in row.iter().enumerate() {
            match e.substitute_partial(&f) {
                Ok(v) => out.push(v),
                Err(HopfError::DenominatorVanishes(_)) => {
                    return Err(HopfError::DenominatorVanishes(format!(
                        "sigma({}, {})",
                        labels[i], labels[j]
                    )))
                }
                Err(e) => return Err(e),
            }
        }
        values.push(out);
    }
    // σ⁻¹ entries must also specialize (their denominators may differ)
    for (i, row) in s.sigma_inv.values.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if let Err(HopfError::DenominatorVanishes(_)) = e.substitute_partial(&f) {
                return Err(HopfError::DenominatorVanishes(format!(
                    "sigmaInv({}, {})",
                    labels[i], labels[j]
                )));
            }
        }
    }
    let beta = Cocycle::new(values);
    let alg = twist(h, &beta)?;
    Ok((beta, alg))
}

/// Transports α along a lazy convolution-invertible linear form λ:
/// β(x,y) = Σ λ(x(1)) λ(y(1)) α(x(2),y(2)) λ⁻¹(x(3) y(3)).
pub fn lazy_transport(h: &HopfData, alpha: &Cocycle, lam: &LinMap) -> Result<Cocycle, HopfError> {
    let d = h.dim();
    // laziness: Σ λ(x(1)) x(2) = Σ x(1) λ(x(2)) for every basis element
    for i in 0..d {
        let mut left = vec![RatExpr::zero(); d];
        let mut right = vec![RatExpr::zero(); d];
        for (p, q, c) in &h.coalg.delta[i] {
            left[*q] = &left[*q] + &(c * &lam.values[*p]);
            right[*p] = &right[*p] + &(c * &lam.values[*q]);
        }
        if left != right {
            return Err(HopfError::NotLazy(i));
        }
    }
    let lam_inv = convolution_inverse(&h.coalg, lam)?;
    let mut values = vec![vec![RatExpr::zero(); d]; d];
    for i in 0..d {
        let di = h.coalg.delta2(i);
        for j in 0..d {
            let dj = h.coalg.delta2(j);
            let mut acc = RatExpr::zero();
            for (p1, p2, p3, ci) in &di {
                for (q1, q2, q3, cj) in &dj {
                    let a = &alpha.values[*p2][*q2];
                    if a.is_zero() {
                        continue;
                    }
                    let mut linv = RatExpr::zero();
                    for (u, m) in &h.mult[*p3][*q3] {
                        linv = &linv + &(m * &lam_inv.values[*u]);
                    }
                    let term = &(&lam.values[*p1] * &lam.values[*q1]) * &(a * &linv);
                    acc = &acc + &(&(ci * cj) * &term);
                }
            }
            values[i][j] = acc;
        }
    }
    let beta = Cocycle::new(values);
    if let Some((i, j, k)) = check_cocycle(h, &beta) {
        return Err(HopfError::CocycleCheckFailed(i, j, k));
    }
    Ok(beta)
}

/// Basis of the central elements of a twisted algebra, as coefficient
/// vectors over the basis of H.
pub fn center(a: &TwistedAlgebra) -> Vec<Vec<RatExpr>> {
    let d = a.dim();
    let mut rows = Vec::new();
    for j in 0..d {
        for u in 0..d {
            let mut row = vec![RatExpr::zero(); d];
            for (i, r) in row.iter_mut().enumerate() {
                *r = &a.table[i][j].coords[u] - &a.table[j][i].coords[u];
            }
            rows.push(row);
        }
    }
    linalg::nullspace(&rows, d)
}

/// Gram determinant of the trace form ⟨x_i, x_j⟩ = Tr(R_{x_i ·_α x_j});
/// nonzero iff the twisted algebra is semisimple (characteristic 0).
pub fn trace_gram_det(a: &TwistedAlgebra) -> RatExpr {
    let d = a.dim();
    let mut gram = vec![vec![RatExpr::zero(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let prod = &a.table[i][j];
            let mut tr = RatExpr::zero();
            for k in 0..d {
                let img = a.mul(&TensorElt::basis(d, k), prod);
                tr = &tr + &img.coords[k];
            }
            gram[i][j] = tr;
        }
    }
    linalg::det_field(&gram)
}

/// Pretty-prints a cocycle value table.
pub fn cocycle_to_strings(h: &HopfData, c: &Cocycle) -> Vec<Vec<String>> {
    c.values
        .iter()
        .map(|row| row.iter().map(|e| e.to_string_with(h.vars())).collect())
        .collect()
}

pub fn vars_of(h: &HopfData) -> &VarTable {
    h.vars()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn trivial_cocycle_twist_recovers_multiplication() {
        let (h, _) = presets::sweedler_symbolic();
        let c = Cocycle::trivial(&h);
        assert!(check_cocycle(&h, &c).is_none());
        assert!(check_normalized(&h, &c));
        let a = twist(&h, &c).unwrap();
        let d = h.dim();
        for i in 0..d {
            for j in 0..d {
                let mut expect = TensorElt::zero(d);
                for (u, m) in &h.mult[i][j] {
                    expect.coords[*u] = m.clone();
                }
                assert_eq!(a.table[i][j], expect);
            }
        }
        assert_eq!(a.unit.coords, h.unit);
    }

    #[test]
    fn trivial_cocycle_is_self_inverse() {
        let (h, _) = presets::sweedler_symbolic();
        let c = Cocycle::trivial(&h);
        let inv = cocycle_inverse(&h, &c).unwrap();
        assert_eq!(inv, c);
    }
}
