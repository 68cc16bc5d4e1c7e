//! The idempotent families `ε^±`, `I_ij^±`, `P_l^±`, their products, and the
//! named constituents.
//!
//! * `ε^± = ½(1 ∓ dt)`
//! * `I_ij^± = ½(1 ± dx^{ij})`
//! * `P_l^± = ½(1 ± dx^l)`
//!
//! All three families live in the bold subalgebra and commute with each
//! other. A product `ε I P` is described by an [`IdempotentDescriptor`].

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::blade::{Axis, Sign};
use crate::elements::{dt, dx, dx_set};
use crate::multivector::Multivector;
use crate::rational::{half, int};

/// Coordinate plane of an `I` factor, written with its cyclic index order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Plane {
    P12,
    P23,
    P31,
}

impl Plane {
    pub const ALL: [Plane; 3] = [Plane::P12, Plane::P23, Plane::P31];

    /// `(i, j)` in the order of the label.
    pub const fn axes(self) -> (Axis, Axis) {
        match self {
            Plane::P12 => (Axis::X1, Axis::X2),
            Plane::P23 => (Axis::X2, Axis::X3),
            Plane::P31 => (Axis::X3, Axis::X1),
        }
    }

    /// The axis `k` not in the plane.
    pub const fn normal(self) -> Axis {
        match self {
            Plane::P12 => Axis::X3,
            Plane::P23 => Axis::X1,
            Plane::P31 => Axis::X2,
        }
    }

    /// Plane orthogonal to `axis`.
    pub const fn orthogonal_to(axis: Axis) -> Plane {
        match axis {
            Axis::X1 => Plane::P23,
            Axis::X2 => Plane::P31,
            Axis::X3 => Plane::P12,
        }
    }

    /// Plane spanned by two distinct axes, in either order.
    pub fn from_axes(a: Axis, b: Axis) -> Plane {
        assert_ne!(a, b, "a plane needs two distinct axes");
        Axis::ALL
            .into_iter()
            .find(|k| *k != a && *k != b)
            .map(Plane::orthogonal_to)
            .unwrap()
    }

    pub fn contains(self, axis: Axis) -> bool {
        axis != self.normal()
    }

    pub const fn label(self) -> &'static str {
        match self {
            Plane::P12 => "12",
            Plane::P23 => "23",
            Plane::P31 => "31",
        }
    }

    pub fn from_label(label: &str) -> Option<Plane> {
        Plane::ALL.into_iter().find(|p| p.label() == label)
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `ε^± = ½(1 ∓ dt)`.
pub fn eps(sign: Sign) -> Multivector {
    (Multivector::one() - dt().scale(&int(sign.value()))).scale(&half())
}

/// `I_ij^± = ½(1 ± dx^{ij})`.
pub fn i_plane(plane: Plane, sign: Sign) -> Multivector {
    let (i, j) = plane.axes();
    (Multivector::one() + dx_set(&[i, j]).scale(&int(sign.value()))).scale(&half())
}

/// `P_l^± = ½(1 ± dx^l)`.
pub fn p_axis(axis: Axis, sign: Sign) -> Multivector {
    (Multivector::one() + dx(axis).scale(&int(sign.value()))).scale(&half())
}

/// A `P_l^±` factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PFactor {
    pub axis: Axis,
    pub sign: Sign,
}

/// `overall_sign · [ε^±] · I_plane^± · [P_axis^±]`.
///
/// A primed descriptor stands for the pair `I P_k^+ ⊕ I P_k^-` whose halves
/// are kept apart elsewhere; algebraically it is just the `I` factor, so it
/// carries no `P` factor. Primed descriptors always have overall sign `-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdempotentDescriptor {
    pub eps: Option<Sign>,
    pub plane: Plane,
    pub i_sign: Sign,
    pub p: Option<PFactor>,
    pub primed: bool,
    pub overall_sign: Sign,
}

impl IdempotentDescriptor {
    /// `I_plane^{i_sign} P_axis^{p_sign}`.
    pub const fn ip(plane: Plane, i_sign: Sign, axis: Axis, p_sign: Sign) -> Self {
        IdempotentDescriptor {
            eps: None,
            plane,
            i_sign,
            p: Some(PFactor { axis, sign: p_sign }),
            primed: false,
            overall_sign: Sign::Plus,
        }
    }

    /// `I_plane^{i_sign}` alone.
    pub const fn i_only(plane: Plane, i_sign: Sign) -> Self {
        IdempotentDescriptor { eps: None, plane, i_sign, p: None, primed: false, overall_sign: Sign::Plus }
    }

    /// `−I'_plane^{i_sign}`.
    pub const fn primed(plane: Plane, i_sign: Sign) -> Self {
        IdempotentDescriptor { eps: None, plane, i_sign, p: None, primed: true, overall_sign: Sign::Minus }
    }

    pub const fn with_eps(mut self, sign: Sign) -> Self {
        self.eps = Some(sign);
        self
    }

    pub fn expand(&self) -> Multivector {
        let mut out = i_plane(self.plane, self.i_sign);
        if let Some(s) = self.eps {
            out = &eps(s) * &out;
        }
        if let (Some(p), false) = (self.p, self.primed) {
            out = &out * &p_axis(p.axis, p.sign);
        }
        out.scale(&int(self.overall_sign.value()))
    }

    /// Whether `expand()` is expected to be idempotent.
    pub fn is_plain(&self) -> bool {
        !self.primed && self.overall_sign == Sign::Plus
    }

    /// Canonical representative under the absorption identities
    /// `I^+ P_i^± = I^+ P_j^±` and `I^- P_i^± = I^- P_j^∓`: an in-plane `P`
    /// axis is moved to the smaller index of the plane.
    pub fn absorption_normal_form(&self) -> IdempotentDescriptor {
        let mut out = *self;
        if let Some(p) = self.p {
            let (i, j) = self.plane.axes();
            let target = i.min(j);
            if self.plane.contains(p.axis) && p.axis != target {
                let sign = match self.i_sign {
                    Sign::Plus => p.sign,
                    Sign::Minus => p.sign.flip(),
                };
                out.p = Some(PFactor { axis: target, sign });
            }
        }
        out
    }

    /// Reverses both superscript signs (`I` and `P`). Primed descriptors keep
    /// their prime and overall sign.
    pub fn bar(&self) -> IdempotentDescriptor {
        let mut out = *self;
        out.i_sign = self.i_sign.flip();
        out.p = self.p.map(|p| PFactor { axis: p.axis, sign: p.sign.flip() });
        out
    }

    /// Label such as `eps+ I12+ P1-` or `-eps- I12'+`. Unprimed labels are
    /// valid multivector expressions.
    pub fn label(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if let Some(s) = self.eps {
            parts.push(alloc::format!("eps{s}"));
        }
        let prime = if self.primed { "'" } else { "" };
        parts.push(alloc::format!("I{}{prime}{}", self.plane, self.i_sign));
        if let (Some(p), false) = (self.p, self.primed) {
            parts.push(alloc::format!("P{}{}", p.axis, p.sign));
        }
        let body = parts.join(" ");
        match self.overall_sign {
            Sign::Plus => body,
            Sign::Minus => alloc::format!("-{body}"),
        }
    }
}

impl IdempotentDescriptor {
    /// Inverse of [`IdempotentDescriptor::label`].
    pub fn parse_label(text: &str) -> Option<Self> {
        let text = text.trim();
        let (overall_sign, body) = match text.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest.trim_start()),
            None => (Sign::Plus, text),
        };
        fn sign_of(c: char) -> Option<Sign> {
            match c {
                '+' => Some(Sign::Plus),
                '-' => Some(Sign::Minus),
                _ => None,
            }
        }
        let mut eps = None;
        let mut ip: Option<(Plane, Sign, bool)> = None;
        let mut p = None;
        for tok in body.split_whitespace() {
            let sign = sign_of(tok.chars().last()?)?;
            let head = &tok[..tok.len() - 1];
            if head == "eps" && eps.is_none() && ip.is_none() {
                eps = Some(sign);
            } else if let (Some(rest), None) = (head.strip_prefix('I'), ip) {
                let (digits, primed) = match rest.strip_suffix('\'') {
                    Some(d) => (d, true),
                    None => (rest, false),
                };
                ip = Some((Plane::from_label(digits)?, sign, primed));
            } else if let (Some(digit), Some((_, _, false)), None) = (head.strip_prefix('P'), ip, p) {
                let axis = Axis::from_index(digit.parse().ok()?)?;
                p = Some(PFactor { axis, sign });
            } else {
                return None;
            }
        }
        let (plane, i_sign, primed) = ip?;
        Some(IdempotentDescriptor { eps, plane, i_sign, p, primed, overall_sign })
    }
}

impl fmt::Display for IdempotentDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// All 72 formal products `ε^± I_ij^± P_l^±`, ordered by ε, plane, `I` sign,
/// `P` axis, `P` sign.
pub fn formal_descriptors() -> Vec<IdempotentDescriptor> {
    let mut out = Vec::with_capacity(72);
    for e in Sign::BOTH {
        for plane in Plane::ALL {
            for i_sign in Sign::BOTH {
                for axis in Axis::ALL {
                    for p_sign in Sign::BOTH {
                        out.push(IdempotentDescriptor::ip(plane, i_sign, axis, p_sign).with_eps(e));
                    }
                }
            }
        }
    }
    out
}

/// The formal products with equal expansions removed (first occurrence
/// kept).
pub fn distinct_descriptors() -> Vec<IdempotentDescriptor> {
    dedup_by_expansion(formal_descriptors())
}

/// The 24 distinct `I·P` products without an `ε` factor.
pub fn distinct_ip_descriptors() -> Vec<IdempotentDescriptor> {
    let mut seen = BTreeSet::new();
    formal_descriptors()
        .into_iter()
        .filter(|d| d.eps == Some(Sign::Plus))
        .map(|mut d| {
            d.eps = None;
            d
        })
        .filter(|d| seen.insert(d.expand()))
        .collect()
}

fn dedup_by_expansion(items: Vec<IdempotentDescriptor>) -> Vec<IdempotentDescriptor> {
    let mut seen = BTreeSet::new();
    items.into_iter().filter(|d| seen.insert(d.expand())).collect()
}

/// Enumeration depth for [`enumerate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Formal,
    Distinct,
    Constituents,
}

/// One enumerated element with its expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumerated {
    pub name: Option<ConstituentName>,
    pub descriptor: IdempotentDescriptor,
    pub expansion: Multivector,
}

pub fn enumerate(level: Level) -> Vec<Enumerated> {
    match level {
        Level::Formal | Level::Distinct => {
            let items = if level == Level::Formal { formal_descriptors() } else { distinct_descriptors() };
            items
                .into_iter()
                .map(|d| Enumerated { name: None, expansion: d.expand(), descriptor: d })
                .collect()
        }
        Level::Constituents => constituents()
            .into_iter()
            .map(|(n, d)| Enumerated { name: Some(n), expansion: d.expand(), descriptor: d })
            .collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstituentKind {
    A,
    B,
    U,
    D,
    DBar,
    UBar,
}

impl ConstituentKind {
    pub const fn label(self) -> &'static str {
        match self {
            ConstituentKind::A => "a",
            ConstituentKind::B => "b",
            ConstituentKind::U => "u",
            ConstituentKind::D => "d",
            ConstituentKind::DBar => "dbar",
            ConstituentKind::UBar => "ubar",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        use ConstituentKind::*;
        [A, B, U, D, DBar, UBar].into_iter().find(|k| k.label() == label)
    }

    /// Row order of the ε-extended table: `u, d, dbar, ubar`.
    pub const EPS_ROWS: [ConstituentKind; 4] =
        [ConstituentKind::U, ConstituentKind::D, ConstituentKind::DBar, ConstituentKind::UBar];
}

/// `kind^m_l`: `m` is the axis normal to the `I` plane, `l` the column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConstituentName {
    pub kind: ConstituentKind,
    pub m: Axis,
    pub l: Axis,
}

impl ConstituentName {
    pub const fn new(kind: ConstituentKind, m: Axis, l: Axis) -> Self {
        ConstituentName { kind, m, l }
    }

    /// Parses `u^3_1`, `dbar^2_3`, ...
    pub fn parse(text: &str) -> Option<Self> {
        let (kind, rest) = text.split_once('^')?;
        let (m, l) = rest.split_once('_')?;
        Some(ConstituentName {
            kind: ConstituentKind::from_label(kind)?,
            m: Axis::from_index(m.parse().ok()?)?,
            l: Axis::from_index(l.parse().ok()?)?,
        })
    }
}

impl fmt::Display for ConstituentName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}_{}", self.kind.label(), self.m, self.l)
    }
}

use Axis::{X1, X2, X3};
use Sign::{Minus as M, Plus as P};

const fn ip(plane: Plane, i: Sign, axis: Axis, p: Sign) -> IdempotentDescriptor {
    IdempotentDescriptor::ip(plane, i, axis, p)
}

/// The `a`/`b` naming of the three-part μ = 0 solutions, indexed
/// `[m - 1][a or b][l - 1]`.
const AB_LAYER: [[[IdempotentDescriptor; 3]; 2]; 3] = [
    // m = 1, plane 23
    [
        [IdempotentDescriptor::primed(Plane::P23, P), ip(Plane::P23, P, X2, P), ip(Plane::P23, P, X2, M)],
        [IdempotentDescriptor::primed(Plane::P23, M), ip(Plane::P23, M, X3, P), ip(Plane::P23, M, X3, M)],
    ],
    // m = 2, plane 31
    [
        [ip(Plane::P31, P, X3, M), IdempotentDescriptor::primed(Plane::P31, P), ip(Plane::P31, P, X3, P)],
        [ip(Plane::P31, M, X1, M), IdempotentDescriptor::primed(Plane::P31, M), ip(Plane::P31, M, X1, P)],
    ],
    // m = 3, plane 12
    [
        [ip(Plane::P12, P, X1, P), ip(Plane::P12, P, X1, M), IdempotentDescriptor::primed(Plane::P12, P)],
        [ip(Plane::P12, M, X2, P), ip(Plane::P12, M, X2, M), IdempotentDescriptor::primed(Plane::P12, M)],
    ],
];

/// Descriptor of a named constituent.
///
/// `u = ε^+ a`, `d = ε^+ b`, `ubar = ε^- ā`, `dbar = ε^- b̄`, where the bar
/// reverses both superscript signs.
pub fn constituent(name: ConstituentName) -> IdempotentDescriptor {
    let row = &AB_LAYER[(name.m.index() - 1) as usize];
    let col = (name.l.index() - 1) as usize;
    match name.kind {
        ConstituentKind::A => row[0][col],
        ConstituentKind::B => row[1][col],
        ConstituentKind::U => row[0][col].with_eps(Sign::Plus),
        ConstituentKind::D => row[1][col].with_eps(Sign::Plus),
        ConstituentKind::UBar => row[0][col].bar().with_eps(Sign::Minus),
        ConstituentKind::DBar => row[1][col].bar().with_eps(Sign::Minus),
    }
}

/// The `a`/`b` layer for the plane normal to `m` (six names).
pub fn ab_table(m: Axis) -> Vec<(ConstituentName, IdempotentDescriptor)> {
    [ConstituentKind::A, ConstituentKind::B]
        .into_iter()
        .flat_map(|kind| Axis::ALL.into_iter().map(move |l| ConstituentName::new(kind, m, l)))
        .map(|n| (n, constituent(n)))
        .collect()
}

/// The ε-extended layer for the plane normal to `m` (twelve names, rows
/// `u, d, dbar, ubar`).
pub fn eps_table(m: Axis) -> Vec<(ConstituentName, IdempotentDescriptor)> {
    ConstituentKind::EPS_ROWS
        .into_iter()
        .flat_map(|kind| Axis::ALL.into_iter().map(move |l| ConstituentName::new(kind, m, l)))
        .map(|n| (n, constituent(n)))
        .collect()
}

/// All 36 ε-extended constituents, ordered by `m`, then row, then `l`.
pub fn constituents() -> Vec<(ConstituentName, IdempotentDescriptor)> {
    Axis::ALL.into_iter().flat_map(eps_table).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::Signature;
    use crate::rational::rat;

    fn bold_sum(terms: &[(&[Axis], i64)], den: i64) -> Multivector {
        terms
            .iter()
            .fold(Multivector::zero(), |acc, (axes, c)| acc + dx_set(axes).scale(&rat(*c, den)))
    }

    #[test]
    fn expansions_of_products() {
        let d = IdempotentDescriptor::ip(Plane::P12, P, X1, P);
        assert_eq!(d.expand(), bold_sum(&[(&[], 1), (&[X1], 1), (&[X2], 1), (&[X1, X2], 1)], 4));
        let d = IdempotentDescriptor::ip(Plane::P12, M, X1, M);
        assert_eq!(d.expand(), bold_sum(&[(&[], 1), (&[X1], -1), (&[X2], 1), (&[X1, X2], -1)], 4));
        let d = IdempotentDescriptor::ip(Plane::P12, P, X3, M);
        assert_eq!(d.expand(), bold_sum(&[(&[], 1), (&[X3], -1), (&[X1, X2], 1), (&[X1, X2, X3], -1)], 4));
    }

    #[test]
    fn eps_plus_expansion() {
        assert_eq!(eps(P), (Multivector::one() - dt()).scale(&half()));
    }

    #[test]
    fn absorption_examples() {
        let n = IdempotentDescriptor::ip(Plane::P12, P, X2, P).absorption_normal_form();
        assert_eq!(n, IdempotentDescriptor::ip(Plane::P12, P, X1, P));
        let n = IdempotentDescriptor::ip(Plane::P12, M, X2, M).absorption_normal_form();
        assert_eq!(n, IdempotentDescriptor::ip(Plane::P12, M, X1, P));
        let d = IdempotentDescriptor::ip(Plane::P12, P, X3, M);
        assert_eq!(d.absorption_normal_form(), d);
        // plane 31 normalizes to axis 1
        let n = IdempotentDescriptor::ip(Plane::P31, M, X3, P).absorption_normal_form();
        assert_eq!(n, IdempotentDescriptor::ip(Plane::P31, M, X1, M));
    }

    #[test]
    fn absorption_is_sound_on_all_formal() {
        for d in formal_descriptors() {
            assert_eq!(d.expand(), d.absorption_normal_form().expand(), "{d}");
        }
    }

    #[test]
    fn counts() {
        assert_eq!(formal_descriptors().len(), 72);
        assert_eq!(distinct_descriptors().len(), 48);
        assert_eq!(distinct_ip_descriptors().len(), 24);
        let c = constituents();
        assert_eq!(c.len(), 36);
        let set: BTreeSet<Multivector> = c.iter().map(|(_, d)| d.expand()).collect();
        assert_eq!(set.len(), 36);
    }

    #[test]
    fn normal_forms_agree_with_expansion_classes() {
        let normals: BTreeSet<IdempotentDescriptor> =
            formal_descriptors().iter().map(|d| d.absorption_normal_form()).collect();
        assert_eq!(normals.len(), 48);
    }

    #[test]
    fn all_distinct_are_idempotent() {
        for d in distinct_descriptors().into_iter().chain(distinct_ip_descriptors()) {
            assert!(d.expand().is_idempotent(&Signature::ALL_PLUS), "{d}");
        }
    }

    #[test]
    fn pairs_annihilate_and_complete() {
        let one = Multivector::one();
        assert!((&eps(P) * &eps(M)).is_zero());
        assert_eq!(&eps(P) + &eps(M), one);
        for plane in Plane::ALL {
            assert!((&i_plane(plane, P) * &i_plane(plane, M)).is_zero());
            assert_eq!(&i_plane(plane, P) + &i_plane(plane, M), one);
        }
        for l in Axis::ALL {
            assert!((&p_axis(l, P) * &p_axis(l, M)).is_zero());
            assert_eq!(&p_axis(l, P) + &p_axis(l, M), one);
        }
    }

    #[test]
    fn primed_is_sum_of_p_halves() {
        for plane in Plane::ALL {
            for s in Sign::BOTH {
                for k in Axis::ALL {
                    let sum = IdempotentDescriptor::ip(plane, s, k, P).expand()
                        + IdempotentDescriptor::ip(plane, s, k, M).expand();
                    assert_eq!(sum, IdempotentDescriptor::i_only(plane, s).expand());
                }
                assert_eq!(
                    IdempotentDescriptor::primed(plane, s).expand(),
                    -IdempotentDescriptor::i_only(plane, s).expand()
                );
            }
        }
    }

    #[test]
    fn named_constituents() {
        let name = |k, m, l| constituent(ConstituentName::new(k, m, l));
        assert_eq!(name(ConstituentKind::U, X3, X1), ip(Plane::P12, P, X1, P).with_eps(P));
        assert_eq!(name(ConstituentKind::DBar, X3, X1), ip(Plane::P12, P, X2, M).with_eps(M));
        assert_eq!(name(ConstituentKind::B, X3, X3), IdempotentDescriptor::primed(Plane::P12, M));
        assert_eq!(name(ConstituentKind::A, X1, X2), ip(Plane::P23, P, X2, P));
        assert_eq!(name(ConstituentKind::UBar, X3, X3).label(), "-eps- I12'-");
    }

    #[test]
    fn bar_is_an_involution() {
        for m in Axis::ALL {
            for (_, d) in ab_table(m) {
                assert_eq!(d.bar().bar(), d);
            }
        }
    }

    #[test]
    fn name_round_trip() {
        for (n, _) in constituents() {
            assert_eq!(ConstituentName::parse(&alloc::format!("{n}")), Some(n));
        }
    }

    #[test]
    fn label_round_trip() {
        let all = formal_descriptors()
            .into_iter()
            .chain(constituents().into_iter().map(|(_, d)| d))
            .chain(Plane::ALL.into_iter().map(|p| IdempotentDescriptor::i_only(p, M)));
        for d in all {
            assert_eq!(IdempotentDescriptor::parse_label(&d.label()), Some(d), "{d}");
        }
        assert_eq!(IdempotentDescriptor::parse_label("I13+"), None);
        assert_eq!(IdempotentDescriptor::parse_label("P1+ I12+"), None);
        assert_eq!(IdempotentDescriptor::parse_label("I12'+ P1+"), None);
    }

    #[test]
    fn plane_helpers() {
        assert_eq!(Plane::from_axes(X1, X3), Plane::P31);
        assert_eq!(Plane::P23.normal(), X1);
        assert!(!Plane::P12.contains(X3));
    }
}
