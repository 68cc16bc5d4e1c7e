//! Named elements: bold generators `dx^l = dx^l ⊗ a_l`, `dt = dt ⊗ a0`, the
//! cotangent two-forms `w^i = dx^{jk}`, tangent products and the translation
//! elements `dr`, `dr'`.

use crate::blade::{Axis, Blade, Generator, GeneratorSet, Signature};
use crate::multivector::Multivector;

/// Ordered product of cotangent generators, e.g. `cot(&[X3, X1]) = -dx^{13}`.
pub fn cot(gens: &[Generator]) -> Multivector {
    gens.iter().fold(Multivector::one(), |acc, g| {
        acc.mul_with(
            &Multivector::blade(Blade::new(GeneratorSet::from_generators([*g]), GeneratorSet::EMPTY)),
            &Signature::ALL_PLUS,
        )
    })
}

/// Ordered product of tangent generators, e.g. `tan(&[X2, X1]) = -a_{12}`.
pub fn tan(gens: &[Generator]) -> Multivector {
    gens.iter().fold(Multivector::one(), |acc, g| {
        acc.mul_with(
            &Multivector::blade(Blade::new(GeneratorSet::EMPTY, GeneratorSet::from_generators([*g]))),
            &Signature::ALL_PLUS,
        )
    })
}

/// Tangent product over spatial axes in the given order: `a_{ij}`.
pub fn a(axes: &[Axis]) -> Multivector {
    let gens: alloc::vec::Vec<Generator> = axes.iter().map(|a| a.generator()).collect();
    tan(&gens)
}

/// The bold generator for `g`: `dt⊗a0` or `dx^l⊗a_l`.
pub fn bold_generator(g: Generator) -> Multivector {
    let set = GeneratorSet::from_generators([g]);
    Multivector::blade(Blade::diagonal(set))
}

/// Product of bold generators in ascending order. Under the default
/// signature this is the diagonal blade `(set, set)` with coefficient one.
pub fn bold(set: GeneratorSet) -> Multivector {
    set.iter()
        .fold(Multivector::one(), |acc, g| &acc * &bold_generator(g))
}

/// Bold `dx^l`.
pub fn dx(axis: Axis) -> Multivector {
    bold_generator(axis.generator())
}

/// Bold product `dx^{i j …}` taken in the given order (bold elements commute,
/// so order does not matter under the default signature).
pub fn dx_set(axes: &[Axis]) -> Multivector {
    axes.iter().fold(Multivector::one(), |acc, a| &acc * &dx(*a))
}

/// Bold time element `dt⊗a0`.
pub fn dt() -> Multivector {
    bold_generator(Generator::T)
}

/// `w^i = dx^j ∧ dx^k` for cyclic `(i, j, k)`; purely cotangent.
pub fn w(axis: Axis) -> Multivector {
    let (j, k) = axis.cyclic();
    cot(&[j.generator(), k.generator()])
}

/// `dr = dx^1 + dx^2 + dx^3` (bold).
pub fn dr() -> Multivector {
    Axis::ALL.iter().map(|a| dx(*a)).fold(Multivector::zero(), |acc, x| acc + x)
}

/// `dr' = dx^1 + dx^2` (bold).
pub fn dr_prime() -> Multivector {
    dx(Axis::X1) + dx(Axis::X2)
}

/// Bold pseudoscalar `dx^{123}`.
pub fn dx123() -> Multivector {
    dx_set(&Axis::ALL)
}

/// The eight spatial bold blades in canonical order, scalar first.
pub fn spatial_bold_blades() -> alloc::vec::Vec<Blade> {
    Blade::all_diagonal()
        .filter(|b| !b.cot.contains(Generator::T))
        .collect()
}
