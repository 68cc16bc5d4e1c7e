//! Two-sided operators acting on constant forms.
//!
//! On constant forms the orbital part of the angular momentum components
//! vanishes, so `J_l` reduces to its spin part
//! `J_l U = ½ (w^l U − U w^l)` and the total operator is
//! `(K+1) U = Σ_l (J_l U) w^l`. Both are computed from the Clifford product;
//! nothing is tabulated.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg};

use num_traits::Zero;
use thiserror::Error;

use crate::blade::{Axis, Blade, Signature};
use crate::elements::{dr, dt, w};
use crate::multivector::Multivector;
use crate::rational::{half, Rational};

/// Spin part of the angular momentum component about `axis`.
pub fn apply_j(axis: Axis, u: &Multivector, sig: &Signature) -> Multivector {
    let w = w(axis);
    (w.mul_with(u, sig) - u.mul_with(&w, sig)).scale(&half())
}

/// Total angular momentum operator `K+1`.
pub fn apply_k1(u: &Multivector, sig: &Signature) -> Multivector {
    Axis::ALL.iter().fold(Multivector::zero(), |acc, l| {
        acc + apply_j(*l, u, sig).mul_with(&w(*l), sig)
    })
}

/// Expression tree of two-sided operators.
///
/// `Compose` applies its rightmost member first, so
/// `Compose([KPlusOne, LeftMul(dr)])` is `(K+1) dr`: multiply by `dr`, then
/// apply `K+1`. `Scale(c)` is `c` times the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorExpr {
    J(Axis),
    KPlusOne,
    LeftMul(Multivector),
    RightMul(Multivector),
    Compose(Vec<OperatorExpr>),
    Sum(Vec<OperatorExpr>),
    Scale(Rational),
}

impl OperatorExpr {
    pub fn identity() -> Self {
        OperatorExpr::Scale(crate::rational::one())
    }

    /// `(K+1) dr`.
    pub fn total_space() -> Self {
        OperatorExpr::Compose(alloc::vec![OperatorExpr::KPlusOne, OperatorExpr::LeftMul(dr())])
    }

    /// `dr (K+1)`, the other ordering.
    pub fn total_space_reversed() -> Self {
        OperatorExpr::Compose(alloc::vec![OperatorExpr::LeftMul(dr()), OperatorExpr::KPlusOne])
    }

    /// `T = (−dt)(K+1) dr`.
    pub fn total_spacetime() -> Self {
        OperatorExpr::Compose(alloc::vec![
            OperatorExpr::LeftMul(-dt()),
            OperatorExpr::KPlusOne,
            OperatorExpr::LeftMul(dr()),
        ])
    }

    /// `self + c·Id`.
    pub fn shifted(self, c: Rational) -> Self {
        OperatorExpr::Sum(alloc::vec![self, OperatorExpr::Scale(c)])
    }

    /// `self ∘ inner` (inner applied first).
    pub fn then_after(self, inner: OperatorExpr) -> Self {
        OperatorExpr::Compose(alloc::vec![self, inner])
    }

    pub fn apply(&self, u: &Multivector, sig: &Signature) -> Multivector {
        match self {
            OperatorExpr::J(axis) => apply_j(*axis, u, sig),
            OperatorExpr::KPlusOne => apply_k1(u, sig),
            OperatorExpr::LeftMul(m) => m.mul_with(u, sig),
            OperatorExpr::RightMul(m) => u.mul_with(m, sig),
            OperatorExpr::Compose(ops) => ops
                .iter()
                .rev()
                .fold(u.clone(), |acc, op| op.apply(&acc, sig)),
            OperatorExpr::Sum(ops) => ops
                .iter()
                .fold(Multivector::zero(), |acc, op| acc + op.apply(u, sig)),
            OperatorExpr::Scale(c) => u.scale(c),
        }
    }
}

/// Canonical operator text, accepted back by the expression parser.
impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(f: &mut fmt::Formatter<'_>, ops: &[OperatorExpr], sep: &str) -> fmt::Result {
            f.write_str("(")?;
            for (n, op) in ops.iter().enumerate() {
                if n > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{op}")?;
            }
            f.write_str(")")
        }
        match self {
            OperatorExpr::J(axis) => write!(f, "J{axis}"),
            OperatorExpr::KPlusOne => f.write_str("K1"),
            OperatorExpr::LeftMul(m) => write!(f, "Lmul({m})"),
            OperatorExpr::RightMul(m) => write!(f, "Rmul({m})"),
            OperatorExpr::Compose(ops) if ops.is_empty() => f.write_str("scale(1)"),
            OperatorExpr::Compose(ops) => join(f, ops, " ∘ "),
            OperatorExpr::Sum(ops) if ops.is_empty() => f.write_str("scale(0)"),
            OperatorExpr::Sum(ops) => join(f, ops, " + "),
            OperatorExpr::Scale(c) => write!(f, "scale({c})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("image of basis element {column} has a term on {blade:?} outside the coordinate blades")]
    ImageOutsideCoords { column: usize, blade: Blade },
}

/// Coordinatizes `op` over `basis`: entry `[r][a]` is the coefficient of
/// `coords[r]` in `op(basis[a])`.
pub fn operator_matrix(
    op: &OperatorExpr,
    basis: &[Multivector],
    coords: &[Blade],
    sig: &Signature,
) -> Result<Vec<Vec<Rational>>, OperatorError> {
    let mut matrix = alloc::vec![alloc::vec![Rational::zero(); basis.len()]; coords.len()];
    for (column, x) in basis.iter().enumerate() {
        let image = op.apply(x, sig);
        if let Some(blade) = image.support().find(|b| !coords.contains(b)) {
            return Err(OperatorError::ImageOutsideCoords { column, blade });
        }
        for (row, blade) in coords.iter().enumerate() {
            matrix[row][column] = image.coefficient(blade);
        }
    }
    Ok(matrix)
}

/// `constant + mu_coeff · μ` with exact parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AffineRational {
    pub constant: Rational,
    pub mu_coeff: Rational,
}

impl AffineRational {
    pub fn new(constant: Rational, mu_coeff: Rational) -> Self {
        AffineRational { constant, mu_coeff }
    }

    pub fn constant(value: Rational) -> Self {
        AffineRational { constant: value, mu_coeff: Rational::zero() }
    }

    pub fn eval(&self, mu: &Rational) -> Rational {
        &self.constant + &self.mu_coeff * mu
    }

    pub fn scale(&self, c: &Rational) -> Self {
        AffineRational { constant: &self.constant * c, mu_coeff: &self.mu_coeff * c }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.mu_coeff.is_zero()
    }
}

impl Add for AffineRational {
    type Output = AffineRational;

    fn add(self, rhs: AffineRational) -> AffineRational {
        AffineRational { constant: self.constant + rhs.constant, mu_coeff: self.mu_coeff + rhs.mu_coeff }
    }
}

impl Neg for AffineRational {
    type Output = AffineRational;

    fn neg(self) -> AffineRational {
        AffineRational { constant: -self.constant, mu_coeff: -self.mu_coeff }
    }
}

impl Mul<&Rational> for &AffineRational {
    type Output = AffineRational;

    fn mul(self, rhs: &Rational) -> AffineRational {
        self.scale(rhs)
    }
}

/// `c`, `c μ` or `c + m μ`.
impl fmt::Display for AffineRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        match (self.constant.is_zero(), self.mu_coeff.is_zero()) {
            (_, true) => write!(f, "{}", self.constant),
            (true, false) => write!(f, "{}μ", self.mu_coeff),
            (false, false) => {
                let sign = if self.mu_coeff.is_negative() { '-' } else { '+' };
                write!(f, "{} {sign} {}μ", self.constant, self.mu_coeff.abs())
            }
        }
    }
}
