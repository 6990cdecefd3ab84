use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Monomial, Rational, SparsePoly, VarId, VarTable};
use crate::error::HopfError;

/// Element of the fraction field of [`SparsePoly`].
///
/// The representation is not required to be fully reduced; equality is
/// semantic (cross-multiplication).  After normalization the denominator is
/// nonzero and monic under the canonical term order.
#[derive(Debug, Clone)]
pub struct RatExpr {
    num: SparsePoly,
    den: SparsePoly,
}

impl RatExpr {
    pub fn new(num: SparsePoly, den: SparsePoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatExpr { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(num: SparsePoly) -> Self {
        RatExpr {
            num,
            den: SparsePoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatExpr::from_poly(SparsePoly::constant(c))
    }

    pub fn zero() -> Self {
        RatExpr::constant(Rational::zero())
    }

    pub fn one() -> Self {
        RatExpr::constant(Rational::one())
    }

    pub fn var(v: VarId) -> Self {
        RatExpr::from_poly(SparsePoly::var(v))
    }

    pub fn num(&self) -> &SparsePoly {
        &self.num
    }

    pub fn den(&self) -> &SparsePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn as_poly(&self) -> Option<&SparsePoly> {
        if self.den.as_constant().map(|c| c.is_one()) == Some(true) {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Variables occurring in numerator or denominator.
    pub fn vars(&self) -> Vec<VarId> {
        let mut v = self.num.vars();
        for w in self.den.vars() {
            if !v.contains(&w) {
                v.push(w);
            }
        }
        v.sort_unstable();
        v
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = SparsePoly::one();
            return;
        }
        // monomial content
        let g = self.num.monomial_content().gcd(&self.den.monomial_content());
        if !g.is_one() {
            let gp = SparsePoly::monomial(g, Rational::one());
            self.num = self.num.div_exact(&gp).unwrap();
            self.den = self.den.div_exact(&gp).unwrap();
        }
        // exact polynomial division, either direction
        if !self.den.is_constant() {
            if let Some(q) = self.num.div_exact(&self.den) {
                self.num = q;
                self.den = SparsePoly::one();
            } else if let Some(g) = self.num.univariate_gcd(&self.den) {
                if !g.is_constant() {
                    self.num = self.num.div_exact(&g).unwrap();
                    self.den = self.den.div_exact(&g).unwrap();
                }
            }
        }
        // monic denominator
        let lc = self.den.leading_term().unwrap().1.clone();
        if !lc.is_one() {
            let inv = Rational::one() / lc;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    /// Best-effort reduction; always preserves semantic equality.
    pub fn reduced(&self) -> RatExpr {
        let mut r = self.clone();
        r.normalize();
        r
    }

    pub fn inv(&self) -> RatExpr {
        assert!(!self.is_zero(), "inverting zero");
        RatExpr::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> RatExpr {
        RatExpr::new(self.num.pow(k), self.den.pow(k))
    }

    pub fn scale(&self, c: &Rational) -> RatExpr {
        RatExpr::new(self.num.scale(c), self.den.clone())
    }

    /// Full evaluation; every variable must be assigned.
    pub fn substitute(
        &self,
        assign: &dyn Fn(VarId) -> Option<Rational>,
    ) -> Result<Rational, HopfError> {
        for v in self.vars() {
            if assign(v).is_none() {
                return Err(HopfError::UnassignedVariable(v));
            }
        }
        let f = |v: VarId| assign(v).unwrap();
        let d = self.den.eval(&f);
        if d.is_zero() {
            return Err(HopfError::DenominatorVanishes(String::new()));
        }
        Ok(self.num.eval(&f) / d)
    }

    /// Substitutes a subset of the variables, keeping the rest symbolic.
    pub fn substitute_partial(
        &self,
        assign: &dyn Fn(VarId) -> Option<Rational>,
    ) -> Result<RatExpr, HopfError> {
        let map = |v: VarId| assign(v).map(|c| SparsePoly::constant(c));
        let num = self.num.substitute_polys(&map);
        let den = self.den.substitute_polys(&map);
        if den.is_zero() {
            return Err(HopfError::DenominatorVanishes(String::new()));
        }
        Ok(RatExpr::new(num, den))
    }

    pub fn to_string_with(&self, vars: &VarTable) -> String {
        let r = self.reduced();
        if r.den.as_constant().map(|c| c.is_one()) == Some(true) {
            return r.num.to_string_with(vars);
        }
        let num_s = r.num.to_string_with(vars);
        let den_s = r.den.to_string_with(vars);
        let num_w = if r.num.num_terms() > 1 {
            format!("({num_s})")
        } else {
            num_s
        };
        let den_w = if r.den.num_terms() > 1 || r.den.leading_term().map(|(m, _)| m.pairs().len() > 1) == Some(true) {
            format!("({den_s})")
        } else {
            den_s
        };
        format!("{num_w}/{den_w}")
    }
}

/// Semantic equality by cross-multiplication.
impl PartialEq for RatExpr {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatExpr {}

impl Add for &RatExpr {
    type Output = RatExpr;
    fn add(self, rhs: &RatExpr) -> RatExpr {
        if self.den == rhs.den {
            return RatExpr::new(&self.num + &rhs.num, self.den.clone());
        }
        RatExpr::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatExpr {
    type Output = RatExpr;
    fn sub(self, rhs: &RatExpr) -> RatExpr {
        self + &(-rhs)
    }
}

impl Neg for &RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        RatExpr {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatExpr {
    type Output = RatExpr;
    fn mul(self, rhs: &RatExpr) -> RatExpr {
        if self.is_zero() || rhs.is_zero() {
            return RatExpr::zero();
        }
        RatExpr::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatExpr {
    type Output = RatExpr;
    fn div(self, rhs: &RatExpr) -> RatExpr {
        self * &rhs.inv()
    }
}

impl Zero for RatExpr {
    fn zero() -> Self {
        RatExpr::zero()
    }
    fn is_zero(&self) -> bool {
        RatExpr::is_zero(self)
    }
}

impl Add for RatExpr {
    type Output = RatExpr;
    fn add(self, rhs: RatExpr) -> RatExpr {
        &self + &rhs
    }
}

impl From<Rational> for RatExpr {
    fn from(c: Rational) -> Self {
        RatExpr::constant(c)
    }
}

/// Monomial in t-variables only, used to group tensor components by t-degree.
pub fn split_t_monomial(m: &Monomial, is_param: &dyn Fn(VarId) -> bool) -> (Monomial, Monomial) {
    let mut t_part = Vec::new();
    let mut p_part = Vec::new();
    for &(v, e) in m.pairs() {
        if is_param(v) {
            p_part.push((v, e));
        } else {
            t_part.push((v, e));
        }
    }
    (Monomial::from_pairs(t_part), Monomial::from_pairs(p_part))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn v(i: VarId) -> RatExpr {
        RatExpr::var(i)
    }

    #[test]
    fn frac_eq_semantic() {
        // t1/t1 == 1
        let a = &v(0) / &v(0);
        assert_eq!(a, RatExpr::one());
        // t_y/(t1 t_x) == (t1 t_y)/(t1^2 t_x)
        let lhs = &v(2) / &(&v(0) * &v(1));
        let rhs = &(&v(0) * &v(2)) / &(&(&v(0) * &v(0)) * &v(1));
        assert_eq!(lhs, rhs);
        assert_ne!(&v(1) / &v(0), &v(2) / &v(0));
    }

    #[test]
    fn reduce_difference_of_squares() {
        let te = v(0);
        let tg = v(1);
        let q = &(&(&te * &te) - &(&tg * &tg)) / &(&te - &tg);
        assert_eq!(q, &te + &tg);
        assert!(q.as_poly().is_some(), "must reduce to a polynomial");
    }

    #[test]
    fn substitute_is_morphism() {
        let a = &(&v(0) * &v(0)) / &v(1);
        let b = &v(1) + &RatExpr::one();
        let assign = |x: VarId| -> Option<Rational> {
            match x {
                0 => Some(rat(3)),
                1 => Some(rat(2)),
                _ => None,
            }
        };
        let ab = &a * &b;
        assert_eq!(
            ab.substitute(&assign).unwrap(),
            a.substitute(&assign).unwrap() * b.substitute(&assign).unwrap()
        );
    }

    #[test]
    fn substitute_zero_denominator() {
        let a = &v(2) / &(&v(0) * &v(1));
        let assign = |x: VarId| -> Option<Rational> { Some(if x == 1 { rat(0) } else { rat(1) }) };
        assert!(matches!(
            a.substitute(&assign),
            Err(HopfError::DenominatorVanishes(_))
        ));
    }
}
