//! Brute-force reference implementations for cross-validation.
//!
//! Nothing here touches the kernel's set algebra: membership is decided by
//! plain loops over element lists, doubles are found by searching odd parts
//! directly, and classification follows the definitions verbatim. Kernel
//! types appear only as output containers.

use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::{ClassificationReport, NumericalSemigroup, SymmetryClass};

/// Hard limits on the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest Frobenius number for semigroup and ideal enumeration.
    pub semigroup_frobenius: i64,
    /// Largest Frobenius number for double search.
    pub double_frobenius: i64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            semigroup_frobenius: 20,
            double_frobenius: 40,
        }
    }
}

impl Limits {
    /// `SGDOUBLE_LIMIT=N` sets the semigroup limit to `N` and the double
    /// limit to `2N`. Intended for tests only.
    pub fn from_env() -> Self {
        std::env::var("SGDOUBLE_LIMIT")
            .ok()
            .and_then(|v| v.trim().parse::<i64>().ok())
            .map(|n| Self {
                semigroup_frobenius: n,
                double_frobenius: 2 * n,
            })
            .unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
    Any,
}

impl Parity {
    fn admits(self, frobenius: i64) -> bool {
        match self {
            Parity::Even => frobenius.rem_euclid(2) == 0,
            Parity::Odd => frobenius.rem_euclid(2) == 1,
            Parity::Any => true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Oracle {
    pub limits: Limits,
}

/// Naive membership in `small ∪ [conductor, ∞)`.
fn member(small: &[i64], conductor: i64, x: i64) -> bool {
    x >= conductor || small.contains(&x)
}

fn in_semigroup(s: &NumericalSemigroup, x: i64) -> bool {
    x >= 0 && member(s.small_elements(), s.conductor(), x)
}

impl Oracle {
    pub fn new(limits: Limits) -> Self {
        Self { limits }
    }

    /// Every numerical semigroup with Frobenius number `frobenius`
    /// (`-1` gives ℕ), in canonical order.
    pub fn enum_semigroups_with_frobenius(&self, frobenius: i64) -> Result<Vec<NumericalSemigroup>> {
        if frobenius == -1 {
            return Ok(vec![NumericalSemigroup::naturals()]);
        }
        if frobenius < 1 {
            return Err(Error::InvalidFrobenius(frobenius));
        }
        if frobenius > self.limits.semigroup_frobenius {
            return Err(Error::BoundTooLarge {
                bound: frobenius,
                limit: self.limits.semigroup_frobenius,
            });
        }
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        semigroup_search(frobenius, 1, &mut chosen, &mut out);
        out.sort();
        Ok(out)
    }

    /// Every numerical semigroup with `-1 <= f(S) <= max_frobenius`.
    pub fn enum_semigroups_up_to(&self, max_frobenius: i64) -> Result<Vec<NumericalSemigroup>> {
        let mut out = vec![NumericalSemigroup::naturals()];
        for f in 1..=max_frobenius {
            out.extend(self.enum_semigroups_with_frobenius(f)?);
        }
        Ok(out)
    }

    /// Every relative ideal `E` of `s` with `m(E) = 0` and `f(E) = frobenius`,
    /// by scanning all subsets of `(0, f(E))`.
    pub fn enum_relative_ideals(&self, s: &NumericalSemigroup, frobenius: i64) -> Result<Vec<RelativeIdeal>> {
        if frobenius == -1 {
            return Ok(vec![RelativeIdeal::naturals(s)]);
        }
        if frobenius < 1 {
            return Err(Error::InvalidFrobenius(frobenius));
        }
        if frobenius > self.limits.semigroup_frobenius {
            return Err(Error::BoundTooLarge {
                bound: frobenius,
                limit: self.limits.semigroup_frobenius,
            });
        }
        let interior: Vec<i64> = (1..frobenius).collect();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << interior.len()) {
            let mut elems = vec![0];
            elems.extend(
                interior
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &x)| x),
            );
            let absorbs = elems.iter().all(|&e| {
                (0..=frobenius + 1)
                    .filter(|&x| in_semigroup(s, x))
                    .all(|x| member(&elems, frobenius + 1, e + x))
            });
            if absorbs {
                out.push(RelativeIdeal::new(s, &elems, frobenius + 1).expect("checked absorption"));
            }
        }
        out.sort_by(|a, b| a.elements_below().cmp(b.elements_below()));
        Ok(out)
    }

    /// Every numerical semigroup `T` with `T/2 = s` and `f(T) <= max_frobenius`,
    /// found by fixing the even part to `2·s` and searching odd parts.
    pub fn all_doubles(&self, s: &NumericalSemigroup, max_frobenius: i64) -> Result<Vec<NumericalSemigroup>> {
        if max_frobenius > self.limits.double_frobenius {
            return Err(Error::BoundTooLarge {
                bound: max_frobenius,
                limit: self.limits.double_frobenius,
            });
        }
        // 2 f(S) is never in T.
        if max_frobenius < 2 * s.frobenius() {
            return Ok(Vec::new());
        }
        let odds: Vec<i64> = (1..=max_frobenius).filter(|x| x % 2 == 1).collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        double_search(s, max_frobenius, &odds, &mut chosen, &mut out);
        out.sort();
        Ok(out)
    }

    /// Almost symmetric doubles of `s` with the requested Frobenius parity,
    /// classified by [`brute_classify`].
    pub fn brute_doubles(
        &self,
        s: &NumericalSemigroup,
        parity: Parity,
        max_frobenius: i64,
    ) -> Result<Vec<NumericalSemigroup>> {
        Ok(self
            .all_doubles(s, max_frobenius)?
            .into_iter()
            .filter(|t| {
                let report = brute_classify(t);
                report.almost_symmetric && parity.admits(report.frobenius)
            })
            .collect())
    }
}

fn semigroup_search(frobenius: i64, next: i64, chosen: &mut Vec<i64>, out: &mut Vec<NumericalSemigroup>) {
    if next == frobenius {
        let mut small = vec![0];
        small.extend(chosen.iter().copied());
        out.push(
            NumericalSemigroup::from_small_elements(&small, frobenius + 1)
                .expect("search only emits closed sets"),
        );
        return;
    }
    let forced = chosen
        .iter()
        .any(|&a| chosen.iter().any(|&b| a + b == next));
    let allowed = 2 * next != frobenius && chosen.iter().all(|&a| a + next != frobenius);
    if allowed {
        chosen.push(next);
        semigroup_search(frobenius, next + 1, chosen, out);
        chosen.pop();
    }
    if !forced {
        semigroup_search(frobenius, next + 1, chosen, out);
    }
}

fn double_search(
    s: &NumericalSemigroup,
    max_frobenius: i64,
    odds: &[i64],
    chosen: &mut Vec<i64>,
    out: &mut Vec<NumericalSemigroup>,
) {
    let Some((&odd, rest)) = odds.split_first() else {
        if let Some(t) = assemble_double(s, max_frobenius, chosen) {
            out.push(t);
        }
        return;
    };
    // odd + odd is even, so it must halve into S
    let compatible = in_semigroup(s, odd) && chosen.iter().all(|&o| in_semigroup(s, (o + odd) / 2));
    if compatible {
        chosen.push(odd);
        double_search(s, max_frobenius, rest, chosen, out);
        chosen.pop();
    }
    double_search(s, max_frobenius, rest, chosen, out);
}

/// `2·s ∪ chosen ∪ {odd > max_frobenius}` if it is closed under addition.
fn assemble_double(s: &NumericalSemigroup, max_frobenius: i64, chosen: &[i64]) -> Option<NumericalSemigroup> {
    let in_t = |x: i64| -> bool {
        if x < 0 {
            false
        } else if x > max_frobenius {
            true
        } else if x % 2 == 0 {
            in_semigroup(s, x / 2)
        } else {
            chosen.contains(&x)
        }
    };
    for x in 0..=max_frobenius {
        for y in x..=max_frobenius - x {
            if in_t(x) && in_t(y) && !in_t(x + y) {
                return None;
            }
        }
    }
    let mut conductor = (max_frobenius + 1).max(0);
    while conductor > 0 && in_t(conductor - 1) {
        conductor -= 1;
    }
    let small: Vec<i64> = (0..conductor).filter(|&x| in_t(x)).collect();
    let t = NumericalSemigroup::from_small_elements(&small, conductor).expect("closure checked");
    // one half of T, recomputed by hand
    let halves = (0..=max_frobenius).all(|x| in_t(2 * x) == in_semigroup(s, x));
    debug_assert!(halves);
    halves.then_some(t)
}

/// Definitional classification using only naive loops.
pub fn brute_classify(s: &NumericalSemigroup) -> ClassificationReport {
    let c = s.conductor();
    let f = c - 1;
    let in_s = |x: i64| in_semigroup(s, x);

    let gaps: Vec<i64> = (0..c).filter(|&x| !in_s(x)).collect();
    let pseudo_frobenius: Vec<i64> = (-c - 1..=c)
        .filter(|&x| !in_s(x))
        .filter(|&x| (1..=2 * c + 2).filter(|&y| in_s(y)).all(|y| in_s(x + y)))
        .collect();
    let second_type_gaps: Vec<i64> = gaps.iter().copied().filter(|&x| !in_s(f - x)).collect();
    let almost_symmetric = second_type_gaps.iter().all(|x| pseudo_frobenius.contains(x));

    let window = -c - 2..=c + 2;
    let symmetric = window.clone().all(|x| in_s(x) == !in_s(f - x));
    let pseudo_symmetric =
        f >= 0 && f % 2 == 0 && window.filter(|&x| 2 * x != f).all(|x| in_s(x) == !in_s(f - x));
    let symmetry_class = if symmetric {
        SymmetryClass::Symmetric
    } else if pseudo_symmetric {
        SymmetryClass::PseudoSymmetric
    } else if almost_symmetric {
        SymmetryClass::AlmostSymmetricProper
    } else {
        SymmetryClass::None
    };
    ClassificationReport {
        frobenius: f,
        gaps,
        second_type_gaps,
        type_number: pseudo_frobenius.len(),
        pseudo_frobenius,
        symmetry_class,
        almost_symmetric,
        criteria_agreement: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(elems: &[i64], c: i64) -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(elems, c).unwrap()
    }

    #[test]
    fn small_frobenius_censuses() {
        let o = Oracle::default();
        assert_eq!(o.enum_semigroups_with_frobenius(1).unwrap(), vec![sg(&[0], 2)]);
        assert_eq!(o.enum_semigroups_with_frobenius(2).unwrap(), vec![sg(&[0], 3)]);
        assert!(o.enum_semigroups_with_frobenius(4).unwrap().contains(&sg(&[0, 3], 5)));
        assert_eq!(
            o.enum_semigroups_with_frobenius(-1).unwrap(),
            vec![NumericalSemigroup::naturals()]
        );
        assert_eq!(o.enum_semigroups_with_frobenius(0), Err(Error::InvalidFrobenius(0)));
        assert!(matches!(
            o.enum_semigroups_with_frobenius(21),
            Err(Error::BoundTooLarge { bound: 21, limit: 20 })
        ));
    }

    #[test]
    fn ideal_census() {
        let o = Oracle::default();
        let s1 = sg(&[0, 3], 5);
        assert_eq!(o.enum_relative_ideals(&s1, -1).unwrap(), vec![RelativeIdeal::naturals(&s1)]);
        let one = o.enum_relative_ideals(&s1, 1).unwrap();
        assert_eq!(one, vec![RelativeIdeal::new(&s1, &[0], 2).unwrap()]);
        let two = o.enum_relative_ideals(&s1, 2).unwrap();
        assert_eq!(
            two,
            vec![
                RelativeIdeal::new(&s1, &[0], 3).unwrap(),
                RelativeIdeal::new(&s1, &[0, 1], 3).unwrap()
            ]
        );
        assert_eq!(o.enum_relative_ideals(&s1, 0), Err(Error::InvalidFrobenius(0)));
    }

    #[test]
    fn even_doubles_of_pseudo_symmetric_base() {
        let o = Oracle::default();
        let s1 = sg(&[0, 3], 5);
        let found = o.brute_doubles(&s1, Parity::Even, 8).unwrap();
        assert_eq!(found, vec![sg(&[0, 3, 6, 7], 9), sg(&[0, 5, 6, 7], 9), sg(&[0, 6, 7], 9)]);
        let n = NumericalSemigroup::naturals();
        assert!(o.brute_doubles(&n, Parity::Even, 20).unwrap().is_empty());
        let s2 = sg(&[0, 4, 5, 6], 8);
        let found = o.brute_doubles(&s2, Parity::Even, 14).unwrap();
        assert!(found.contains(&sg(&[0, 8, 9, 10, 11, 12, 13], 15)));
        assert!(o.brute_doubles(&s2, Parity::Any, 41).is_err());
    }

    #[test]
    fn classification_fixtures() {
        let r = brute_classify(&sg(&[0, 3], 5));
        assert_eq!(r.symmetry_class, SymmetryClass::PseudoSymmetric);
        assert_eq!(r.type_number, 2);
        let r = brute_classify(&sg(&[0, 8, 9, 10, 11, 12, 13], 16));
        assert!(!r.almost_symmetric);
        assert!(r.second_type_gaps.contains(&1) && !r.pseudo_frobenius.contains(&1));
        let r = brute_classify(&NumericalSemigroup::naturals());
        assert_eq!(r.symmetry_class, SymmetryClass::Symmetric);
        assert_eq!(r.pseudo_frobenius, vec![-1]);
    }
}
