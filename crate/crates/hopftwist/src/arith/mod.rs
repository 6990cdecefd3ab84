//! Exact scalar, sparse multivariate polynomial, and fraction-field arithmetic.
//!
//! All coefficients are arbitrary-precision rationals.  Variables are small
//! integer ids managed by a [`VarTable`]; ids are assigned deterministically,
//! basis variables first (in basis order) and declared parameters after them.

mod parse;
mod poly;
mod ratexpr;

pub use parse::{parse_poly, parse_ratexpr, parse_rational};
pub use poly::{Monomial, SparsePoly, VarId};
pub use ratexpr::{split_t_monomial, RatExpr};

use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Exact rational scalar: arbitrary-precision, always reduced, positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `p` or `p/q`.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Registry of variable names for one computation context.
///
/// Basis t-variables occupy ids `0..dim`; parameters (which survive
/// specialization) follow in declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    is_param: Vec<bool>,
}

impl VarTable {
    /// Builds a table with one `t_<label>` variable per basis label, followed
    /// by the named parameters.
    pub fn new(basis_labels: &[String], params: &[String]) -> Self {
        let mut names: Vec<String> = basis_labels.iter().map(|l| format!("t_{l}")).collect();
        let mut is_param = vec![false; names.len()];
        for p in params {
            names.push(p.clone());
            is_param.push(true);
        }
        VarTable { names, is_param }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: VarId) -> &str {
        &self.names[id as usize]
    }

    pub fn is_param(&self, id: VarId) -> bool {
        self.is_param[id as usize]
    }

    pub fn lookup(&self, name: &str) -> Option<VarId> {
        self.names.iter().position(|n| n == name).map(|i| i as VarId)
    }

    /// Registers an extra variable (used for the doubled `t'`/`t''` sets).
    pub fn push(&mut self, name: String, is_param: bool) -> VarId {
        self.names.push(name);
        self.is_param.push(is_param);
        (self.names.len() - 1) as VarId
    }

    pub fn param_ids(&self) -> Vec<VarId> {
        (0..self.len())
            .filter(|&i| self.is_param[i])
            .map(|i| i as VarId)
            .collect()
    }
}

/// Formats a coefficient for use inside a monomial product.
pub(crate) fn coeff_prefix(c: &Rational, first: bool) -> String {
    let abs = c.abs();
    let sign = if c.is_negative() {
        if first {
            "-".to_string()
        } else {
            " - ".to_string()
        }
    } else if first {
        String::new()
    } else {
        " + ".to_string()
    };
    if abs.is_one() {
        sign
    } else {
        format!("{}{}", sign, rational_to_string(&abs))
    }
}
