//! Sparse multivectors with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::iter::Sum;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::blade::{blade_mul, Blade, Generator, Sign, Signature};
use crate::rational::Rational;

/// Sparse map `Blade → Rational` with no stored zeros.
///
/// Equality is exact term-by-term equality. Operator overloads (`*`, `+`,
/// `-`) use [`Signature::ALL_PLUS`]; use [`Multivector::mul_with`] for other
/// signatures.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multivector {
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(value: Rational) -> Self {
        Self::term(Blade::IDENTITY, value)
    }

    pub fn blade(blade: Blade) -> Self {
        Self::term(blade, Rational::one())
    }

    pub fn term(blade: Blade, coeff: Rational) -> Self {
        let mut mv = Self::zero();
        mv.add_term(blade, coeff);
        mv
    }

    /// Sums the given terms; repeated blades accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = (Blade, Rational)>) -> Self {
        let mut mv = Self::zero();
        for (blade, coeff) in terms {
            mv.add_term(blade, coeff);
        }
        mv
    }

    pub fn add_term(&mut self, blade: Blade, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(blade).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&blade);
        }
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

    /// Terms in canonical blade order.
    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = Blade> + '_ {
        self.terms.keys().copied()
    }

    pub fn coefficient(&self, blade: &Blade) -> Rational {
        self.terms.get(blade).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scalar_part(&self) -> Rational {
        self.coefficient(&Blade::IDENTITY)
    }

    /// Everything except the scalar term.
    pub fn non_scalar_part(&self) -> Multivector {
        self.filter(|b| !b.is_identity())
    }

    pub fn scale(&self, c: &Rational) -> Multivector {
        if c.is_zero() {
            return Self::zero();
        }
        Multivector {
            terms: self.terms.iter().map(|(b, v)| (*b, v * c)).collect(),
        }
    }

    /// Terms whose blade has total size `grade` (cotangent plus tangent).
    pub fn grade_part(&self, grade: usize) -> Multivector {
        self.filter(|b| b.grade() == grade)
    }

    /// Non-empty grade components keyed by blade size.
    pub fn grades(&self) -> BTreeMap<usize, Multivector> {
        let mut out: BTreeMap<usize, Multivector> = BTreeMap::new();
        for (b, v) in &self.terms {
            out.entry(b.grade()).or_default().add_term(*b, v.clone());
        }
        out
    }

    pub fn filter(&self, keep: impl Fn(&Blade) -> bool) -> Multivector {
        Multivector {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, v)| (*b, v.clone()))
                .collect(),
        }
    }

    /// Clifford product under an explicit signature.
    pub fn mul_with(&self, other: &Multivector, sig: &Signature) -> Multivector {
        let mut out = Multivector::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (sign, blade) = blade_mul(*a, *b, sig);
                let c = x * y;
                out.add_term(blade, if sign == Sign::Minus { -c } else { c });
            }
        }
        out
    }

    /// True iff every blade is diagonal, i.e. `u` lies in the commutative
    /// subalgebra generated by `dt⊗a0` and `dx^l⊗a_l`.
    pub fn is_commutative_element(&self) -> bool {
        self.terms.keys().all(|b| b.is_diagonal())
    }

    /// True when `self * self == self` under `sig`.
    pub fn is_idempotent(&self, sig: &Signature) -> bool {
        &self.mul_with(self, sig) == self
    }

    pub fn commutes_with(&self, other: &Multivector, sig: &Signature) -> bool {
        self.mul_with(other, sig) == other.mul_with(self, sig)
    }

    /// Canonical text form (see the `Display` impl).
    pub fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

/// Text for a single blade: bold shorthand (`dx12`, `dt dx3`) for diagonal
/// blades and `cot ⊗ tan` otherwise, e.g. `dx^{3} ⊗ a_{1}`.
pub fn render_blade(blade: &Blade) -> String {
    let mut out = String::new();
    if blade.is_identity() {
        out.push('1');
    } else if blade.is_diagonal() {
        let mut parts: Vec<String> = Vec::new();
        if blade.cot.contains(Generator::T) {
            parts.push("dt".into());
        }
        let digits = blade.cot.spatial_digits();
        if !digits.is_empty() {
            parts.push(alloc::format!("dx{digits}"));
        }
        out.push_str(&parts.join(" "));
    } else {
        let mut cot: Vec<String> = Vec::new();
        if blade.cot.contains(Generator::T) {
            cot.push("dt".into());
        }
        let digits = blade.cot.spatial_digits();
        if !digits.is_empty() {
            cot.push(alloc::format!("dx^{{{digits}}}"));
        }
        let mut tan: Vec<String> = Vec::new();
        if blade.tan.contains(Generator::T) {
            tan.push("a0".into());
        }
        let digits = blade.tan.spatial_digits();
        if !digits.is_empty() {
            tan.push(alloc::format!("a_{{{digits}}}"));
        }
        let _ = write!(
            out,
            "{} ⊗ {}",
            if cot.is_empty() { "1".into() } else { cot.join(" ") },
            if tan.is_empty() { "1".into() } else { tan.join(" ") }
        );
    }
    out
}

/// Terms in blade order, `p/q` coefficients, unit coefficients omitted:
/// `1/4 + 1/4 dx1 - dx12`. The zero multivector prints as `0`.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (blade, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = coeff.abs();
            if blade.is_identity() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&render_blade(blade))?;
            } else {
                write!(f, "{magnitude} {}", render_blade(blade))?;
            }
        }
        Ok(())
    }
}

impl Add<&Multivector> for &Multivector {
    type Output = Multivector;

    fn add(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Multivector {
    type Output = Multivector;

    fn add(mut self, rhs: Multivector) -> Multivector {
        self += &rhs;
        self
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        for (b, v) in &rhs.terms {
            self.add_term(*b, v.clone());
        }
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        Multivector {
            terms: self.terms.iter().map(|(b, v)| (*b, -v)).collect(),
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        -&self
    }
}

impl Sub<&Multivector> for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        self + &(-rhs)
    }
}

impl Sub for Multivector {
    type Output = Multivector;

    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Mul<&Multivector> for &Multivector {
    type Output = Multivector;

    fn mul(self, rhs: &Multivector) -> Multivector {
        self.mul_with(rhs, &Signature::ALL_PLUS)
    }
}

impl Mul for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl From<Rational> for Multivector {
    fn from(value: Rational) -> Self {
        Multivector::scalar(value)
    }
}

impl<'a> Sum<&'a Multivector> for Multivector {
    fn sum<I: Iterator<Item = &'a Multivector>>(iter: I) -> Self {
        iter.fold(Multivector::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::{Axis, GeneratorSet};
    use crate::elements::{bold, dx, dx_set, w};
    use crate::idempotents::{i_plane, Plane};
    use crate::rational::{half, int, rat};

    #[test]
    fn scalar_part_of_plane_idempotent() {
        let i12 = i_plane(Plane::P12, Sign::Plus);
        assert_eq!(i12.scalar_part(), half());
        assert_eq!(i12, (&Multivector::one() + &dx_set(&[Axis::X1, Axis::X2])).scale(&half()));
    }

    #[test]
    fn pure_blade_has_no_scalar_part() {
        assert_eq!(dx_set(&Axis::ALL).scalar_part(), int(0));
    }

    #[test]
    fn scaling_by_zero_clears_everything() {
        let u = &dx(Axis::X1) + &w(Axis::X2);
        assert!(u.scale(&int(0)).is_zero());
    }

    #[test]
    fn bold_absorption_product() {
        // dx^1 dx^{12} = dx^2 in the bold algebra
        assert_eq!(&dx(Axis::X1) * &dx_set(&[Axis::X1, Axis::X2]), dx(Axis::X2));
    }

    #[test]
    fn commutative_element_detection() {
        assert!(dx_set(&[Axis::X1, Axis::X2]).is_commutative_element());
        assert!(!w(Axis::X1).is_commutative_element());
        assert!(bold(GeneratorSet::FULL).is_commutative_element());
    }

    #[test]
    fn rendering() {
        let u = Multivector::from_terms([
            (Blade::IDENTITY, rat(1, 4)),
            (Blade::diagonal(GeneratorSet::from_axes([Axis::X1])), rat(-1, 4)),
            (Blade::diagonal(GeneratorSet::from_axes([Axis::X1, Axis::X2])), int(1)),
        ]);
        assert_eq!(u.render(), "1/4 - 1/4 dx1 + dx12");
        assert_eq!(Multivector::zero().render(), "0");
        assert_eq!((-&w(Axis::X1)).render(), "-dx^{23} ⊗ 1");
        assert_eq!(bold(GeneratorSet::FULL).render(), "dt dx123");
    }

    #[test]
    fn grade_decomposition() {
        let u = &(&Multivector::one() + &dx(Axis::X1)) + &w(Axis::X3);
        let grades = u.grades();
        assert_eq!(grades.len(), 2);
        assert_eq!(grades[&0], Multivector::one());
        assert_eq!(grades[&2], &dx(Axis::X1) + &w(Axis::X3));
    }
}
