//! Numerical duplication `S ⋈^b E = 2·S ∪ (2·E + b)` with respect to a
//! relative ideal, the one-half operator and the inverse decomposition.

use serde::{Deserialize, Serialize};

use crate::cofinite::CofiniteSet;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// A validated triple `(S, E, b)`: `b` odd, `b ∈ S`, `E + E + b ⊆ S`.
/// `S` is the ambient semigroup of `E`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpecRepr", into = "SpecRepr")]
pub struct DuplicationSpec {
    ideal: RelativeIdeal,
    b: i64,
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    s: NumericalSemigroup,
    e: RelativeIdeal,
    b: i64,
}

impl TryFrom<SpecRepr> for DuplicationSpec {
    type Error = Error;

    fn try_from(repr: SpecRepr) -> Result<Self> {
        if repr.e.ambient() != &repr.s {
            return Err(Error::AmbientMismatch);
        }
        DuplicationSpec::new(repr.e, repr.b)
    }
}

impl From<DuplicationSpec> for SpecRepr {
    fn from(spec: DuplicationSpec) -> Self {
        SpecRepr {
            s: spec.ideal.ambient().clone(),
            e: spec.ideal,
            b: spec.b,
        }
    }
}

impl DuplicationSpec {
    pub fn new(ideal: RelativeIdeal, b: i64) -> Result<Self> {
        let s = ideal.ambient();
        if b % 2 == 0 {
            return Err(Error::InvalidB { b, reason: "b must be odd" });
        }
        if !s.contains(b) {
            return Err(Error::InvalidB { b, reason: "b must belong to S" });
        }
        // A missing e + e' + b lies below c(S), which bounds both summands.
        let lo = ideal.min();
        let hi = s.conductor() - b - lo;
        for first in (lo..hi).filter(|&x| ideal.contains(x)) {
            for second in (first..hi).filter(|&x| ideal.contains(x)) {
                if !s.contains(first + second + b) {
                    return Err(Error::SumNotInS { first, second, b });
                }
            }
        }
        Ok(Self { ideal, b })
    }

    pub fn base(&self) -> &NumericalSemigroup {
        self.ideal.ambient()
    }

    pub fn ideal(&self) -> &RelativeIdeal {
        &self.ideal
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `T = 2·S ∪ (2·E + b)`.
    pub fn duplicate(&self) -> NumericalSemigroup {
        let s = self.base();
        let hi = (2 * s.conductor()).max(2 * self.ideal.conductor() + self.b).max(0);
        let set = CofiniteSet::from_predicate(0, hi, |x| self.contains_in_duplicate(x));
        NumericalSemigroup::from_set(set)
    }

    fn contains_in_duplicate(&self, x: i64) -> bool {
        if x.rem_euclid(2) == 0 {
            self.base().contains(x / 2)
        } else {
            self.ideal.contains((x - self.b) / 2)
        }
    }

    /// `f(T) = max(2 f(S), 2 f(E) + b)`.
    pub fn frobenius(&self) -> i64 {
        (2 * self.base().frobenius()).max(2 * self.ideal.frobenius() + self.b)
    }

    /// `K(T)` from the parity description: `z = f(T) - a` is in `K(T)` iff
    /// `a` is even with `a/2 ∉ S`, or `a` is odd with `(a - b)/2 ∉ E`.
    /// The result is an ideal of `T = self.duplicate()`.
    pub fn canonical_ideal(&self) -> RelativeIdeal {
        let t = self.duplicate();
        let ft = self.frobenius();
        let set = CofiniteSet::from_predicate(0, ft + 1, |z| {
            let a = ft - z;
            if a.rem_euclid(2) == 0 {
                !self.base().contains(a / 2)
            } else {
                !self.ideal.contains((a - self.b) / 2)
            }
        });
        RelativeIdeal::from_set(&t, set)
    }

    /// Equivalent spec `(S, E - m(E), b + 2 m(E))` with `m(E') = 0`.
    pub fn normalized(&self) -> Self {
        let m = self.ideal.min();
        Self {
            ideal: self.ideal.translate(-m),
            b: self.b + 2 * m,
        }
    }
}

/// `T/2 = {s ∈ ℕ : 2s ∈ T}`.
pub fn half(t: &NumericalSemigroup) -> NumericalSemigroup {
    let hi = (t.conductor() + 1) / 2;
    NumericalSemigroup::from_set(CofiniteSet::from_predicate(0, hi, |x| t.contains(2 * x)))
}

/// Writes `T` as `half(T) ⋈^b E` with `E = (T - b)/2`. Any odd `b` with
/// `2b ∈ T` works.
pub fn decompose(t: &NumericalSemigroup, b: i64) -> Result<DuplicationSpec> {
    if b % 2 == 0 {
        return Err(Error::InvalidB { b, reason: "b must be odd" });
    }
    if b < 0 || !t.contains(2 * b) {
        return Err(Error::InvalidB { b, reason: "b must belong to T/2" });
    }
    let ideal = odd_part(t, b)?;
    Ok(DuplicationSpec { ideal, b })
}

/// `(T - b)/2 = {x : 2x + b ∈ T}` as a relative ideal of `T/2`, for any odd
/// `b`. Negative elements appear as soon as `b` exceeds the smallest odd
/// element of `T`.
pub fn odd_part(t: &NumericalSemigroup, b: i64) -> Result<RelativeIdeal> {
    if b % 2 == 0 {
        return Err(Error::InvalidB { b, reason: "b must be odd" });
    }
    let s = half(t);
    let lo = -(b - 1) / 2;
    let hi = ((t.conductor() - b + 1) / 2).max(lo);
    let set = CofiniteSet::from_predicate(lo, hi, |e| t.contains(2 * e + b));
    Ok(RelativeIdeal::from_set(&s, set))
}
