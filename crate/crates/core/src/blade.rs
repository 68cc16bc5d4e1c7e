//! Generators, basis blades and the metric signature.
//!
//! A [`Blade`] is a pair of generator subsets, one per tensor factor. The
//! cotangent subset names a product of `dt, dx^1, dx^2, dx^3` and the tangent
//! subset a product of `a_0, a_1, a_2, a_3`, both in ascending order
//! `t < 1 < 2 < 3`. There are 256 blades.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

/// One of the four generators, ordered `t < x1 < x2 < x3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    T,
    X1,
    X2,
    X3,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::T, Generator::X1, Generator::X2, Generator::X3];

    pub const fn bit(self) -> u8 {
        1 << self as u8
    }

    /// Name used by the JSON term format.
    pub const fn name(self) -> &'static str {
        match self {
            Generator::T => "t",
            Generator::X1 => "x1",
            Generator::X2 => "x2",
            Generator::X3 => "x3",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.name() == name)
    }
}

/// A spatial axis `1, 2, 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X1,
    X2,
    X3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X1, Axis::X2, Axis::X3];

    pub const fn index(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_index(index: u8) -> Option<Self> {
        match index {
            1 => Some(Axis::X1),
            2 => Some(Axis::X2),
            3 => Some(Axis::X3),
            _ => None,
        }
    }

    pub const fn generator(self) -> Generator {
        match self {
            Axis::X1 => Generator::X1,
            Axis::X2 => Generator::X2,
            Axis::X3 => Generator::X3,
        }
    }

    /// `(j, k)` such that `(self, j, k)` is a cyclic permutation of `(1, 2, 3)`.
    pub const fn cyclic(self) -> (Axis, Axis) {
        match self {
            Axis::X1 => (Axis::X2, Axis::X3),
            Axis::X2 => (Axis::X3, Axis::X1),
            Axis::X3 => (Axis::X1, Axis::X2),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub const fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub const fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub const fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self.flip()
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Subset of `{t, 1, 2, 3}` stored as a 4-bit mask (bit 0 is `t`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSet(u8);

impl GeneratorSet {
    pub const EMPTY: GeneratorSet = GeneratorSet(0);
    pub const FULL: GeneratorSet = GeneratorSet(0b1111);

    pub const fn from_bits(bits: u8) -> Self {
        GeneratorSet(bits & 0b1111)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub fn from_generators(gens: impl IntoIterator<Item = Generator>) -> Self {
        GeneratorSet(gens.into_iter().fold(0, |acc, g| acc | g.bit()))
    }

    pub fn from_axes(axes: impl IntoIterator<Item = Axis>) -> Self {
        Self::from_generators(axes.into_iter().map(Axis::generator))
    }

    pub const fn contains(self, g: Generator) -> bool {
        self.0 & g.bit() != 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn symmetric_difference(self, other: GeneratorSet) -> GeneratorSet {
        GeneratorSet(self.0 ^ other.0)
    }

    pub const fn intersection(self, other: GeneratorSet) -> GeneratorSet {
        GeneratorSet(self.0 & other.0)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = Generator> {
        Generator::ALL.into_iter().filter(move |g| self.contains(*g))
    }

    /// Spatial members as digits, e.g. `"12"` for `{t, 1, 2}`.
    pub fn spatial_digits(self) -> alloc::string::String {
        Axis::ALL
            .into_iter()
            .filter(|a| self.contains(a.generator()))
            .map(|a| (b'0' + a.index()) as char)
            .collect()
    }

    pub fn all() -> impl Iterator<Item = GeneratorSet> {
        (0..16u8).map(GeneratorSet)
    }
}

/// Basis element `cot ⊗ tan`.
///
/// Ordering is lexicographic on the two bit masks, cotangent first, which is
/// the canonical term order for rendering and serialization.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade {
    pub cot: GeneratorSet,
    pub tan: GeneratorSet,
}

impl Blade {
    pub const IDENTITY: Blade = Blade { cot: GeneratorSet::EMPTY, tan: GeneratorSet::EMPTY };

    pub const fn new(cot: GeneratorSet, tan: GeneratorSet) -> Self {
        Blade { cot, tan }
    }

    /// Diagonal ("bold") blade `(set, set)`.
    pub const fn diagonal(set: GeneratorSet) -> Self {
        Blade { cot: set, tan: set }
    }

    pub const fn is_identity(self) -> bool {
        self.cot.is_empty() && self.tan.is_empty()
    }

    /// True when the cotangent and tangent parts coincide.
    pub fn is_diagonal(self) -> bool {
        self.cot == self.tan
    }

    pub const fn grade(self) -> usize {
        self.cot.len() + self.tan.len()
    }

    /// All 256 blades in canonical order.
    pub fn all() -> impl Iterator<Item = Blade> {
        GeneratorSet::all().flat_map(|cot| GeneratorSet::all().map(move |tan| Blade { cot, tan }))
    }

    /// The 16 diagonal blades in canonical order.
    pub fn all_diagonal() -> impl Iterator<Item = Blade> {
        GeneratorSet::all().map(Blade::diagonal)
    }
}

/// Which generators square to `-1` in each factor; all others square to `+1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Signature {
    pub cot_negative: GeneratorSet,
    pub tan_negative: GeneratorSet,
}

impl Signature {
    /// Every generator squares to `+1` in both factors.
    pub const ALL_PLUS: Signature = Signature {
        cot_negative: GeneratorSet::EMPTY,
        tan_negative: GeneratorSet::EMPTY,
    };

    /// Cotangent generators square to `-1`, tangent ones to `+1`.
    pub const ALL_MINUS_COTANGENT: Signature = Signature {
        cot_negative: GeneratorSet::FULL,
        tan_negative: GeneratorSet::EMPTY,
    };

    pub const fn cot_square(&self, g: Generator) -> i64 {
        if self.cot_negative.contains(g) {
            -1
        } else {
            1
        }
    }

    pub const fn tan_square(&self, g: Generator) -> i64 {
        if self.tan_negative.contains(g) {
            -1
        } else {
            1
        }
    }
}

/// Product of two ascending monomials inside a single Clifford factor.
/// Returns `true` in the first slot when the result is negated.
fn factor_product(a: GeneratorSet, b: GeneratorSet, negative: GeneratorSet) -> (bool, GeneratorSet) {
    // pairs (x in a, y in b) with x > y each cost one transposition
    let mut swaps = 0;
    let mut shifted = a.bits() >> 1;
    while shifted != 0 {
        swaps += (shifted & b.bits()).count_ones();
        shifted >>= 1;
    }
    let squares = a.intersection(b).intersection(negative).len() as u32;
    ((swaps + squares) % 2 == 1, a.symmetric_difference(b))
}

/// Clifford product of two blades. The factors multiply independently,
/// `(A⊗B)(C⊗D) = (AC)⊗(BD)`, with no sign between them.
pub fn blade_mul(a: Blade, b: Blade, sig: &Signature) -> (Sign, Blade) {
    let (neg_cot, cot) = factor_product(a.cot, b.cot, sig.cot_negative);
    let (neg_tan, tan) = factor_product(a.tan, b.tan, sig.tan_negative);
    let sign = if neg_cot ^ neg_tan { Sign::Minus } else { Sign::Plus };
    (sign, Blade { cot, tan })
}

/// Every blade as a list, for exhaustive checks.
pub fn all_blades() -> Vec<Blade> {
    Blade::all().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cot(axes: &[Generator]) -> Blade {
        Blade::new(GeneratorSet::from_generators(axes.iter().copied()), GeneratorSet::EMPTY)
    }

    /// Reference sign: write both monomials as generator lists, bubble sort
    /// the concatenation counting swaps, then cancel equal neighbours.
    fn brute_force_sign(a: GeneratorSet, b: GeneratorSet, negative: GeneratorSet) -> (i64, GeneratorSet) {
        let mut word: Vec<Generator> = a.iter().chain(b.iter()).collect();
        let mut sign = 1;
        for i in 0..word.len() {
            for j in 0..word.len() - 1 - i {
                if word[j] > word[j + 1] {
                    word.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        let mut out: Vec<Generator> = Vec::new();
        for g in word {
            if out.last() == Some(&g) {
                out.pop();
                if negative.contains(g) {
                    sign = -sign;
                }
            } else {
                out.push(g);
            }
        }
        (sign, GeneratorSet::from_generators(out))
    }

    #[test]
    fn generator_square_is_plus_one() {
        let x1 = cot(&[Generator::X1]);
        assert_eq!(blade_mul(x1, x1, &Signature::ALL_PLUS), (Sign::Plus, Blade::IDENTITY));
        assert_eq!(blade_mul(x1, x1, &Signature::ALL_MINUS_COTANGENT), (Sign::Minus, Blade::IDENTITY));
    }

    #[test]
    fn two_form_squares_to_minus_one() {
        let x12 = cot(&[Generator::X1, Generator::X2]);
        assert_eq!(blade_mul(x12, x12, &Signature::ALL_PLUS), (Sign::Minus, Blade::IDENTITY));
    }

    #[test]
    fn set_level_product_of_two_forms() {
        // dx^{13} dx^{23} = -dx^{12}; with w^2 = dx^{31} = -dx^{13} this is w^2 w^1 = w^3
        let x13 = cot(&[Generator::X1, Generator::X3]);
        let x23 = cot(&[Generator::X2, Generator::X3]);
        assert_eq!(
            blade_mul(x13, x23, &Signature::ALL_PLUS),
            (Sign::Minus, cot(&[Generator::X1, Generator::X2]))
        );
    }

    #[test]
    fn no_cross_factor_sign() {
        let w1 = cot(&[Generator::X2, Generator::X3]);
        let a23 = Blade::new(GeneratorSet::EMPTY, GeneratorSet::from_axes([Axis::X2, Axis::X3]));
        let (sign, out) = blade_mul(w1, a23, &Signature::ALL_PLUS);
        assert_eq!(sign, Sign::Plus);
        assert_eq!(out, Blade::diagonal(GeneratorSet::from_axes([Axis::X2, Axis::X3])));
    }

    #[test]
    fn matches_brute_force_on_all_pairs() {
        for sig in [Signature::ALL_PLUS, Signature::ALL_MINUS_COTANGENT] {
            for a in GeneratorSet::all() {
                for b in GeneratorSet::all() {
                    let (neg, set) = factor_product(a, b, sig.cot_negative);
                    let (s, expected) = brute_force_sign(a, b, sig.cot_negative);
                    assert_eq!(set, expected);
                    assert_eq!(if neg { -1 } else { 1 }, s, "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn blade_order_is_cot_then_tan() {
        let all = all_blades();
        assert_eq!(all.len(), 256);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], Blade::IDENTITY);
    }
}
