//! Relative ideals of a numerical semigroup: cofinite sets `E ⊆ ℤ` with
//! `E + S ⊆ E`, possibly containing negative integers.
//!
//! Every ideal carries its ambient semigroup and binary operations refuse
//! ideals over different semigroups.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cofinite::CofiniteSet;
use crate::error::{Error, Result};
use crate::semigroup::{write_cofinite, NumericalSemigroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct RelativeIdeal {
    ambient: NumericalSemigroup,
    set: CofiniteSet,
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    ambient: NumericalSemigroup,
    elements: Vec<i64>,
    conductor: i64,
}

impl TryFrom<IdealRepr> for RelativeIdeal {
    type Error = Error;

    fn try_from(repr: IdealRepr) -> Result<Self> {
        RelativeIdeal::new(&repr.ambient, &repr.elements, repr.conductor)
    }
}

impl From<RelativeIdeal> for IdealRepr {
    fn from(e: RelativeIdeal) -> Self {
        IdealRepr {
            elements: e.elements_below().to_vec(),
            conductor: e.conductor(),
            ambient: e.ambient,
        }
    }
}

impl RelativeIdeal {
    /// Validates `elems` (ascending, below `conductor`, without
    /// `conductor - 1`) and the absorption `E + S ⊆ E`. On failure the
    /// witness is the first pair `(e, g)` with `g` a minimal generator.
    pub fn new(ambient: &NumericalSemigroup, elems: &[i64], conductor: i64) -> Result<Self> {
        for w in elems.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::MalformedElements { element: w[1], conductor });
            }
        }
        if let Some(&last) = elems.last() {
            if last >= conductor {
                return Err(Error::MalformedElements { element: last, conductor });
            }
            if last == conductor - 1 {
                return Err(Error::FrobeniusInSet(last));
            }
        }
        let set = CofiniteSet::from_parts(elems.to_vec(), conductor);
        let gens = ambient.minimal_generators();
        for &e in elems {
            for &g in &gens {
                if !set.contains(e + g) {
                    return Err(Error::NotAnIdeal { element: e, generator: g });
                }
            }
        }
        Ok(Self {
            ambient: ambient.clone(),
            set,
        })
    }

    /// Trusted constructor; the caller guarantees `set + ambient ⊆ set`.
    pub(crate) fn from_set(ambient: &NumericalSemigroup, set: CofiniteSet) -> Self {
        debug_assert!(
            ambient
                .minimal_generators()
                .iter()
                .all(|&g| set.elements().iter().all(|&e| set.contains(e + g))),
            "not an ideal"
        );
        Self {
            ambient: ambient.clone(),
            set,
        }
    }

    /// The semigroup itself, viewed as an ideal.
    pub fn principal(ambient: &NumericalSemigroup) -> Self {
        Self::from_set(ambient, ambient.as_set().clone())
    }

    /// `ℕ` as an ideal of `ambient` (always valid since `S ⊆ ℕ`).
    pub fn naturals(ambient: &NumericalSemigroup) -> Self {
        Self::from_set(ambient, CofiniteSet::from_parts(Vec::new(), 0))
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    pub fn elements_below(&self) -> &[i64] {
        self.set.elements()
    }

    pub fn conductor(&self) -> i64 {
        self.set.conductor()
    }

    /// `f(E) = max(ℤ ∖ E)`.
    pub fn frobenius(&self) -> i64 {
        self.set.conductor() - 1
    }

    /// `m(E)`, the smallest element.
    pub fn min(&self) -> i64 {
        self.set.least()
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        self.set.contains(x)
    }

    pub fn is_subset(&self, other: &RelativeIdeal) -> bool {
        self.set.is_subset(&other.set)
    }

    /// Same set of integers, regardless of ambient.
    pub fn same_set(&self, other: &RelativeIdeal) -> bool {
        self.set == other.set
    }

    fn check_ambient(&self, other: &RelativeIdeal) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn translate(&self, by: i64) -> Self {
        Self {
            ambient: self.ambient.clone(),
            set: self.set.shift(by),
        }
    }

    /// `E + F = {e + f}`.
    pub fn sum(&self, other: &RelativeIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        let (me, mf) = (self.min(), other.min());
        let lo = me + mf;
        let hi = (self.conductor() + mf).min(other.conductor() + me);
        let set = CofiniteSet::from_predicate(lo, hi, |x| {
            (me..=x - mf).any(|e| self.contains(e) && other.contains(x - e))
        });
        Ok(Self::from_set(&self.ambient, set))
    }

    /// `E - F = {x : x + F ⊆ E}`.
    ///
    /// Every `x >= c_E - m(F)` is inside and every `x < m(E) - m(F)` is
    /// outside; in between, `x` is inside iff `x + c_F >= c_E` and `x + f ∈ E`
    /// for each listed element `f` of `F`.
    pub fn difference(&self, other: &RelativeIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        let lo = self.min() - other.min();
        let hi = self.conductor() - other.min();
        let set = CofiniteSet::from_predicate(lo, hi, |x| {
            x + other.conductor() >= self.conductor()
                && other.elements_below().iter().all(|&f| self.contains(x + f))
        });
        Ok(Self::from_set(&self.ambient, set))
    }

    /// `Ẽ = E - (f(E) - f(S))`, so that `f(Ẽ) = f(S)`.
    pub fn tilde(&self) -> Self {
        self.translate(-self.tilde_shift())
    }

    /// `e = f(E) - f(S)`.
    pub fn tilde_shift(&self) -> i64 {
        self.frobenius() - self.ambient.frobenius()
    }

    /// `Some(x)` iff `E = K(S) + x`.
    pub fn canonical_offset(&self) -> Option<i64> {
        let k = canonical_ideal(&self.ambient);
        let x = self.min() - k.min();
        (k.set.shift(x) == self.set).then_some(x)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_offset().is_some()
    }

    /// `K - E` computed directly as `{x : f(S) - x ∉ E}`.
    pub fn jager_dual(&self) -> Self {
        let f = self.ambient.frobenius();
        let lo = f - self.conductor() + 1;
        let hi = f - self.min() + 1;
        let set = CofiniteSet::from_predicate(lo, hi, |x| !self.contains(f - x));
        Self::from_set(&self.ambient, set)
    }

    /// The set as a numerical semigroup, if it is one.
    pub fn to_semigroup(&self) -> Option<NumericalSemigroup> {
        NumericalSemigroup::from_small_elements(self.elements_below(), self.conductor()).ok()
    }

    pub fn is_numerical_semigroup(&self) -> bool {
        self.to_semigroup().is_some()
    }
}

/// `M(S) = S ∖ {0}`.
pub fn maximal_ideal(s: &NumericalSemigroup) -> RelativeIdeal {
    let set = CofiniteSet::from_predicate(1, s.conductor().max(1), |x| s.contains(x));
    RelativeIdeal::from_set(s, set)
}

/// Standard canonical ideal `K(S) = {x : f(S) - x ∉ S}`.
pub fn canonical_ideal(s: &NumericalSemigroup) -> RelativeIdeal {
    let f = s.frobenius();
    let set = CofiniteSet::from_predicate(0, s.conductor(), |x| !s.contains(f - x));
    RelativeIdeal::from_set(s, set)
}

/// True iff the set of `x` is a numerical semigroup: contained in ℕ,
/// contains 0 and is closed under addition.
pub fn is_numerical_semigroup_set(x: &RelativeIdeal) -> bool {
    x.is_numerical_semigroup()
}

/// All ideals `E` of `s` with `m(E) = 0` and `f(E) = frobenius`.
///
/// Such an ideal contains `S`, so `f(E)` is either -1 or a gap of `S`, and
/// `E = S ∪ X ∪ [f(E) + 1, ∞)` for some `X` among the gaps below `f(E)`.
/// Ascending gaps are decided one by one; a gap is forced in once it is
/// `x + g` for a chosen `x` and a generator `g`.
pub fn ideals_containing_zero(s: &NumericalSemigroup, frobenius: i64) -> Vec<RelativeIdeal> {
    if frobenius == -1 {
        return vec![RelativeIdeal::naturals(s)];
    }
    if frobenius < -1 || s.contains(frobenius) {
        return Vec::new();
    }
    let gaps: Vec<i64> = s.gaps().into_iter().filter(|&g| g < frobenius).collect();
    let gens = s.minimal_generators();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_ideals(s, frobenius, &gaps, &gens, &mut chosen, &mut out);
    out.sort_by(|a, b| a.set.cmp(&b.set));
    out
}

fn extend_ideals(
    s: &NumericalSemigroup,
    frobenius: i64,
    gaps: &[i64],
    gens: &[i64],
    chosen: &mut Vec<i64>,
    out: &mut Vec<RelativeIdeal>,
) {
    let Some((&gap, rest)) = gaps.split_first() else {
        let set = CofiniteSet::from_predicate(0, frobenius + 1, |x| {
            s.contains(x) || chosen.binary_search(&x).is_ok()
        });
        out.push(RelativeIdeal::from_set(s, set));
        return;
    };
    let forced = chosen
        .iter()
        .any(|&x| gens.iter().any(|&g| x + g == gap));
    // Including `gap` must not push f(E) into E.
    if gens.iter().all(|&g| gap + g != frobenius) {
        chosen.push(gap);
        extend_ideals(s, frobenius, rest, gens, chosen, out);
        chosen.pop();
    }
    if !forced {
        extend_ideals(s, frobenius, rest, gens, chosen, out);
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cofinite(f, self.elements_below(), self.conductor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s1() -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(&[0, 3], 5).unwrap()
    }

    fn s2() -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(&[0, 4, 5, 6], 8).unwrap()
    }

    fn st1() -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(&[0, 5, 7, 9, 10, 12], 14).unwrap()
    }

    fn ideal(s: &NumericalSemigroup, elems: &[i64], c: i64) -> RelativeIdeal {
        RelativeIdeal::new(s, elems, c).unwrap()
    }

    #[test]
    fn construction_and_witness() {
        let e = ideal(&st1(), &[2, 5, 7, 9, 10, 11, 12], 14);
        assert!(!e.is_subset(&RelativeIdeal::principal(&st1())));
        let e4 = ideal(&s1(), &[0, 1], 3);
        assert_eq!(e4.frobenius(), 2);
        assert_eq!(
            RelativeIdeal::new(&s1(), &[0, 1, 2], 4),
            Err(Error::NotAnIdeal { element: 0, generator: 3 })
        );
        assert_eq!(
            RelativeIdeal::new(&s1(), &[0, 2], 3),
            Err(Error::FrobeniusInSet(2))
        );
    }

    #[test]
    fn maximal_ideals() {
        let m = maximal_ideal(&s1());
        assert_eq!(m.elements_below(), &[3]);
        assert_eq!(m.conductor(), 5);
        let m = maximal_ideal(&NumericalSemigroup::naturals());
        assert!(m.elements_below().is_empty());
        assert_eq!(m.conductor(), 1);
        let m = maximal_ideal(&s2());
        assert_eq!((m.elements_below(), m.conductor()), (&[4i64, 5, 6][..], 8));
    }

    #[test]
    fn canonical_ideals() {
        let k = canonical_ideal(&s1());
        assert_eq!((k.elements_below(), k.conductor()), (&[0i64, 2, 3][..], 5));
        assert!(canonical_ideal(&s2()).same_set(&RelativeIdeal::principal(&s2())));
        let n = NumericalSemigroup::naturals();
        assert!(canonical_ideal(&n).same_set(&RelativeIdeal::naturals(&n)));
    }

    #[test]
    fn translations() {
        let e2 = ideal(&s1(), &[0], 2);
        let shifted = e2.translate(1);
        assert_eq!((shifted.elements_below(), shifted.conductor()), (&[1i64][..], 3));
        let k1 = canonical_ideal(&s1());
        assert_eq!(k1.translate(0), k1);
        let f2 = ideal(&s2(), &[2, 3, 4], 6);
        assert!(f2.translate(2).same_set(&maximal_ideal(&s2())));
    }

    #[test]
    fn sums() {
        let e2 = ideal(&s1(), &[0], 2);
        assert_eq!(e2.sum(&e2).unwrap(), e2);
        let e1 = RelativeIdeal::naturals(&s1());
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        // {2,3,4,6→} + itself: 4,5,6,7(=3+4),8,... all present
        let f2 = ideal(&s2(), &[2, 3, 4], 6);
        let ff = f2.sum(&f2).unwrap();
        assert!(ff.elements_below().is_empty());
        assert_eq!(ff.conductor(), 4);
        let other = RelativeIdeal::naturals(&s2());
        assert_eq!(e2.sum(&other), Err(Error::AmbientMismatch));
    }

    #[test]
    fn differences_from_worked_example() {
        let m = maximal_ideal(&s1());
        let e1 = RelativeIdeal::naturals(&s1());
        let e2 = ideal(&s1(), &[0], 2);
        let d = m.difference(&e1).unwrap();
        assert_eq!((d.elements_below(), d.conductor()), (&[][..], 5));
        let d = e1.difference(&m).unwrap();
        assert_eq!((d.elements_below(), d.conductor()), (&[][..], -3));
        let d = m.difference(&e2).unwrap();
        assert_eq!((d.elements_below(), d.conductor()), (&[3i64][..], 5));
        let d = e2.difference(&m).unwrap();
        assert_eq!((d.elements_below(), d.conductor()), (&[-3i64][..], -1));
    }

    #[test]
    fn tilde_normalization() {
        let f2 = ideal(&s2(), &[2, 3, 4], 6);
        assert!(f2.tilde().same_set(&maximal_ideal(&s2())));
        let k1 = canonical_ideal(&s1());
        assert_eq!(k1.tilde(), k1);
        let e2 = ideal(&s1(), &[0], 2);
        let t = e2.tilde();
        assert_eq!((t.elements_below(), t.conductor()), (&[3i64][..], 5));
        assert_eq!(t.frobenius(), s1().frobenius());
    }

    #[test]
    fn canonical_detection() {
        assert_eq!(canonical_ideal(&s1()).canonical_offset(), Some(0));
        assert!(!RelativeIdeal::naturals(&s1()).is_canonical());
        let shifted = RelativeIdeal::principal(&s2()).translate(3);
        assert_eq!(shifted.canonical_offset(), Some(3));
    }

    #[test]
    fn jager_dual_examples() {
        let e1 = RelativeIdeal::naturals(&s1());
        let d = e1.jager_dual();
        assert_eq!((d.elements_below(), d.conductor()), (&[][..], 5));
        let k = canonical_ideal(&s1());
        assert_eq!(d, k.difference(&e1).unwrap());
        assert!(k.jager_dual().same_set(&RelativeIdeal::principal(&s1())));
        let n = NumericalSemigroup::naturals();
        assert!(RelativeIdeal::naturals(&n)
            .jager_dual()
            .same_set(&RelativeIdeal::naturals(&n)));
    }

    #[test]
    fn semigroup_sets() {
        let k = canonical_ideal(&s1());
        assert!(is_numerical_semigroup_set(&k.difference(&k).unwrap()));
        let neg = RelativeIdeal::naturals(&s1()).translate(-3);
        assert!(!is_numerical_semigroup_set(&neg));
        let m = maximal_ideal(&s1());
        let mm = m.difference(&m).unwrap();
        assert_eq!((mm.elements_below(), mm.conductor()), (&[0i64][..], 2));
        assert!(is_numerical_semigroup_set(&mm));
        // K itself is not closed: 2 + 2 = 4 is missing
        assert!(!is_numerical_semigroup_set(&k));
    }

    #[test]
    fn example_ideal_self_differences() {
        let s = s1();
        let k = canonical_ideal(&s);
        let e1 = RelativeIdeal::naturals(&s);
        let e2 = ideal(&s, &[0], 2);
        let e3 = ideal(&s, &[0], 3);
        for (i, e) in [e1, e2, e3].iter().enumerate() {
            let ee = e.difference(e).unwrap();
            assert_eq!(&ee, e);
            assert_eq!(k.is_subset(&ee), i < 2);
        }
    }

    #[test]
    fn ideals_containing_zero_census() {
        let s = s1();
        let e = ideals_containing_zero(&s, -1);
        assert_eq!(e, vec![RelativeIdeal::naturals(&s)]);
        assert_eq!(ideals_containing_zero(&s, 1), vec![ideal(&s, &[0], 2)]);
        let two = ideals_containing_zero(&s, 2);
        assert_eq!(two.len(), 2);
        assert!(two.contains(&ideal(&s, &[0], 3)));
        assert!(two.contains(&ideal(&s, &[0, 1], 3)));
        assert!(ideals_containing_zero(&s, 3).is_empty());
        assert!(ideals_containing_zero(&s, 0).is_empty());
    }

    #[test]
    fn json_shape() {
        let e2 = ideal(&s1(), &[0], 2);
        let v = serde_json::to_value(&e2).unwrap();
        assert_eq!(v["elements"], serde_json::json!([0]));
        assert_eq!(v["conductor"], 2);
        assert_eq!(v["ambient"]["small"], serde_json::json!([0, 3]));
        let back: RelativeIdeal = serde_json::from_value(v).unwrap();
        assert_eq!(back, e2);
    }
}
