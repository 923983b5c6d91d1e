//! Almost symmetric doubles: semigroups `T` with `T/2 = S` that are almost
//! symmetric, built as numerical duplications `S ⋈^b E`.
//!
//! The checkers decide almost symmetry of `S ⋈^b E` from set conditions on
//! `S`, `E` and `b` alone; the enumerators search the finite space of
//! normalized parameters (`m(E) = 0`) and keep the specs that pass.
//!
//! Writing `f = f(S)`, `M = M(S)`, `K = K(S)`, `Ẽ = E - (f(E) - f)`:
//!
//! * symmetric: `2f(E) + b > 2f` and `E` is a translate of `K`;
//! * odd type: `f(T) = 2f(E) + b`, `K - (M - M) ⊆ Ẽ ⊆ K`, `K - Ẽ` is a
//!   numerical semigroup and `b + e + E + K ⊆ M` with `e = f(E) - f`;
//! * even type, when `2f > 2f(E) + b`: `S` almost symmetric,
//!   `M - E ⊆ (E - M) + b` and `K ⊆ E - E`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::duplication::{half, DuplicationSpec};
use crate::error::{Error, Result};
use crate::ideal::{self, canonical_ideal, maximal_ideal, RelativeIdeal};
use crate::semigroup::{ClassificationReport, ClassifyMethod, NumericalSemigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DoubleKind {
    Symmetric,
    OddAlmostSymmetric,
    EvenAlmostSymmetric,
}

impl fmt::Display for DoubleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DoubleKind::Symmetric => "symmetric",
            DoubleKind::OddAlmostSymmetric => "odd-almost-symmetric",
            DoubleKind::EvenAlmostSymmetric => "even-almost-symmetric",
        })
    }
}

/// An almost symmetric `T = S ⋈^b E` together with the spec producing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CertificateRepr", into = "CertificateRepr")]
pub struct DoubleCertificate {
    pub double: NumericalSemigroup,
    pub spec: DuplicationSpec,
    pub report: ClassificationReport,
    pub kind: DoubleKind,
}

impl DoubleCertificate {
    /// `None` if the duplicate is not almost symmetric.
    pub fn from_spec(spec: DuplicationSpec) -> Option<Self> {
        let double = spec.duplicate();
        let report = double.classify(ClassifyMethod::All);
        if !report.almost_symmetric {
            return None;
        }
        let kind = if report.is_symmetric() {
            DoubleKind::Symmetric
        } else if report.frobenius % 2 != 0 {
            DoubleKind::OddAlmostSymmetric
        } else {
            DoubleKind::EvenAlmostSymmetric
        };
        Some(Self {
            double,
            spec,
            report,
            kind,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateRepr {
    t: NumericalSemigroup,
    spec: DuplicationSpec,
    class: String,
    #[serde(rename = "type")]
    type_number: usize,
}

impl TryFrom<CertificateRepr> for DoubleCertificate {
    type Error = String;

    fn try_from(repr: CertificateRepr) -> std::result::Result<Self, String> {
        let cert = DoubleCertificate::from_spec(repr.spec)
            .ok_or_else(|| "spec does not produce an almost symmetric semigroup".to_string())?;
        if cert.double != repr.t {
            return Err(format!("spec produces {} rather than {}", cert.double, repr.t));
        }
        if cert.report.symmetry_class.as_str() != repr.class
            || cert.report.type_number != repr.type_number
        {
            return Err(format!("class/type of {} do not match", repr.t));
        }
        Ok(cert)
    }
}

impl From<DoubleCertificate> for CertificateRepr {
    fn from(cert: DoubleCertificate) -> Self {
        CertificateRepr {
            t: cert.double,
            spec: cert.spec,
            class: cert.report.symmetry_class.as_str().to_string(),
            type_number: cert.report.type_number,
        }
    }
}

/// Doubles of `base`, sorted by canonical order of `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleFamily {
    pub base: NumericalSemigroup,
    pub exhaustive: bool,
    pub members: Vec<DoubleCertificate>,
}

impl DoubleFamily {
    pub fn doubles(&self) -> Vec<NumericalSemigroup> {
        self.members.iter().map(|c| c.double.clone()).collect()
    }

    fn collect(base: &NumericalSemigroup, exhaustive: bool, certs: Vec<DoubleCertificate>) -> Self {
        // One certificate per T, the smallest (b, E) wins.
        let mut by_double: BTreeMap<NumericalSemigroup, DoubleCertificate> = BTreeMap::new();
        for cert in certs {
            debug_assert_eq!(&half(&cert.double), base);
            match by_double.get(&cert.double) {
                Some(kept) if spec_key(&kept.spec) <= spec_key(&cert.spec) => {}
                _ => {
                    by_double.insert(cert.double.clone(), cert);
                }
            }
        }
        Self {
            base: base.clone(),
            exhaustive,
            members: by_double.into_values().collect(),
        }
    }
}

fn spec_key(spec: &DuplicationSpec) -> (i64, i64, Vec<i64>) {
    let e = spec.ideal();
    (spec.b(), e.conductor(), e.elements_below().to_vec())
}

/// `2f(E) + b > 2f(S)` and `E` is a canonical ideal.
pub fn symmetric_double_check(spec: &DuplicationSpec) -> bool {
    2 * spec.ideal().frobenius() + spec.b() > 2 * spec.base().frobenius() && spec.ideal().is_canonical()
}

/// The five conditions characterizing odd-type almost symmetric duplicates.
/// The first four are necessary on their own but not sufficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OddConditions {
    /// `f(T) = 2f(E) + b`.
    pub frobenius_from_ideal: bool,
    /// `K - (M - M) ⊆ Ẽ`.
    pub tilde_lower: bool,
    /// `Ẽ ⊆ K`.
    pub tilde_upper: bool,
    /// `K - Ẽ` is a numerical semigroup.
    pub dual_is_semigroup: bool,
    /// `b + e + E + K ⊆ M`.
    pub absorbs_canonical: bool,
}

impl OddConditions {
    pub fn necessary(&self) -> bool {
        self.frobenius_from_ideal && self.tilde_lower && self.tilde_upper && self.dual_is_semigroup
    }

    pub fn all(&self) -> bool {
        self.necessary() && self.absorbs_canonical
    }
}

pub fn odd_conditions(spec: &DuplicationSpec) -> OddConditions {
    let s = spec.base();
    let e = spec.ideal();
    let m = maximal_ideal(s);
    let k = canonical_ideal(s);
    let tilde = e.tilde();
    let mm = m.difference(&m).expect("same ambient");
    let lower = k.difference(&mm).expect("same ambient");
    let dual = k.difference(&tilde).expect("same ambient");
    let absorbed = e
        .sum(&k)
        .expect("same ambient")
        .translate(spec.b() + e.tilde_shift());
    OddConditions {
        frobenius_from_ideal: spec.frobenius() == 2 * e.frobenius() + spec.b(),
        tilde_lower: lower.is_subset(&tilde),
        tilde_upper: tilde.is_subset(&k),
        dual_is_semigroup: ideal::is_numerical_semigroup_set(&dual),
        absorbs_canonical: absorbed.is_subset(&m),
    }
}

/// True iff `S ⋈^b E` is almost symmetric with odd type.
pub fn odd_double_check(spec: &DuplicationSpec) -> bool {
    odd_conditions(spec).all()
}

/// The three conditions characterizing even-type almost symmetric
/// duplicates under `2f(S) > 2f(E) + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EvenConditions {
    pub base_almost_symmetric: bool,
    /// `M - E ⊆ (E - M) + b`.
    pub dual_shift: bool,
    /// `K ⊆ E - E`.
    pub canonical_in_self_difference: bool,
}

impl EvenConditions {
    pub fn all(&self) -> bool {
        self.base_almost_symmetric && self.dual_shift && self.canonical_in_self_difference
    }
}

/// Refuses with `HypothesisViolated` when `2f(S) <= 2f(E) + b`.
pub fn even_conditions(spec: &DuplicationSpec) -> Result<EvenConditions> {
    let s = spec.base();
    let e = spec.ideal();
    let lhs = 2 * s.frobenius();
    let rhs = 2 * e.frobenius() + spec.b();
    if lhs <= rhs {
        return Err(Error::HypothesisViolated { lhs, rhs });
    }
    let m = maximal_ideal(s);
    let k = canonical_ideal(s);
    let m_minus_e = m.difference(e)?;
    let e_minus_m = e.difference(&m)?.translate(spec.b());
    let ee = e.difference(e)?;
    Ok(EvenConditions {
        base_almost_symmetric: s.is_almost_symmetric(ClassifyMethod::Definition),
        dual_shift: m_minus_e.is_subset(&e_minus_m),
        canonical_in_self_difference: k.is_subset(&ee),
    })
}

/// True iff `S ⋈^b E` is almost symmetric (necessarily of even type).
pub fn even_double_check(spec: &DuplicationSpec) -> Result<bool> {
    Ok(even_conditions(spec)?.all())
}

/// Normalized specs `(S, E, b)` with `m(E) = 0` and `f(E) = frobenius`.
fn normalized_specs(s: &NumericalSemigroup, frobenius: i64, b: i64) -> Vec<DuplicationSpec> {
    if b % 2 == 0 || !s.contains(b) {
        return Vec::new();
    }
    ideal::ideals_containing_zero(s, frobenius)
        .into_iter()
        .filter_map(|e| DuplicationSpec::new(e, b).ok())
        .collect()
}

/// Possible `f(E)` for ideals containing 0.
fn ideal_frobenius_candidates(s: &NumericalSemigroup) -> Vec<i64> {
    std::iter::once(-1).chain(s.gaps()).collect()
}

/// Every normalized spec `(S, E, b)` (`m(E) = 0`, `b` odd in `S`,
/// `E + E + b ⊆ S`) whose duplicate has Frobenius number at most
/// `max_double_frobenius`, ordered by `(f(E), b)`.
pub fn admissible_specs(s: &NumericalSemigroup, max_double_frobenius: i64) -> Vec<DuplicationSpec> {
    let f = s.frobenius();
    if max_double_frobenius < 2 * f {
        return Vec::new();
    }
    ideal_frobenius_candidates(s)
        .into_iter()
        .flat_map(|fe| {
            (1..=max_double_frobenius - 2 * fe)
                .filter(|b| b % 2 == 1)
                .flat_map(move |b| normalized_specs(s, fe, b))
        })
        .collect()
}

fn check_bound(s: &NumericalSemigroup, max_frobenius: i64) -> Result<()> {
    let required = 2 * s.frobenius() + 1;
    if max_frobenius < required {
        Err(Error::BoundTooSmall {
            bound: max_frobenius,
            required,
        })
    } else {
        Ok(())
    }
}

/// All symmetric `T` with `T/2 = S` and `f(T) <= max_frobenius`, namely
/// `S ⋈^b K` for odd `b` with `K + K + b ⊆ S` (translates of `K` reduce to
/// `K` itself by normalization).
pub fn enumerate_symmetric_doubles(s: &NumericalSemigroup, max_frobenius: i64) -> Result<DoubleFamily> {
    check_bound(s, max_frobenius)?;
    let k = canonical_ideal(s);
    let top_b = max_frobenius - 2 * s.frobenius();
    let certs: Vec<DoubleCertificate> = (1..=top_b)
        .into_par_iter()
        .filter(|&b| b % 2 == 1 && s.contains(b))
        .filter_map(|b| DuplicationSpec::new(k.clone(), b).ok())
        .filter(symmetric_double_check)
        .filter_map(DoubleCertificate::from_spec)
        .collect();
    debug_assert!(certs.iter().all(|c| c.kind == DoubleKind::Symmetric));
    Ok(DoubleFamily::collect(s, false, certs))
}

/// All almost symmetric `T` of odd type with `T/2 = S` and
/// `f(T) <= max_frobenius`.
///
/// Every such `T` is `S ⋈^b E` with `b` the smallest odd element of `T`,
/// which makes `m(E) = 0`; then `f(T) = 2f(E) + b > 2f(S)`.
pub fn enumerate_odd_doubles(s: &NumericalSemigroup, max_frobenius: i64) -> Result<DoubleFamily> {
    check_bound(s, max_frobenius)?;
    let f = s.frobenius();
    let candidates: Vec<(i64, i64)> = ideal_frobenius_candidates(s)
        .into_iter()
        .flat_map(|fe| {
            (1..=max_frobenius - 2 * fe)
                .filter(move |&b| b % 2 == 1 && 2 * fe + b > 2 * f)
                .map(move |b| (fe, b))
        })
        .collect();
    let certs: Vec<DoubleCertificate> = candidates
        .into_par_iter()
        .flat_map_iter(|(fe, b)| normalized_specs(s, fe, b))
        .filter(odd_double_check)
        .filter_map(DoubleCertificate::from_spec)
        .collect();
    Ok(DoubleFamily::collect(s, false, certs))
}

/// The complete, finite family of almost symmetric `T` of even type with
/// `T/2 = S`. Empty iff `S = ℕ` or `S` is not almost symmetric; every
/// member has `f(T) = 2f(S)`.
///
/// Search space after normalization: odd `b ∈ S` with `b < 2f(S) + 2`,
/// and `f(E) ∈ {-1} ∪ gaps(S)` with `2f(E) + b < 2f(S)`.
pub fn enumerate_even_doubles(s: &NumericalSemigroup) -> DoubleFamily {
    if s.is_naturals() || !s.is_almost_symmetric(ClassifyMethod::Definition) {
        return DoubleFamily::collect(s, true, Vec::new());
    }
    let f = s.frobenius();
    let candidates: Vec<(i64, i64)> = ideal_frobenius_candidates(s)
        .into_iter()
        .flat_map(|fe| {
            (3..2 * f + 2)
                .filter(move |&b| b % 2 == 1 && 2 * fe + b < 2 * f)
                .map(move |b| (fe, b))
        })
        .collect();
    let certs: Vec<DoubleCertificate> = candidates
        .into_par_iter()
        .flat_map_iter(|(fe, b)| normalized_specs(s, fe, b))
        .filter(|spec| even_double_check(spec).unwrap_or(false))
        .filter_map(DoubleCertificate::from_spec)
        .collect();
    DoubleFamily::collect(s, true, certs)
}

/// `(S, ℕ, b)` with `b = f + 1` if odd and `f + 2` otherwise; its duplicate
/// is almost symmetric of even type.
pub fn witness_even_double(s: &NumericalSemigroup) -> Result<DuplicationSpec> {
    if s.is_naturals() {
        return Err(Error::IsNaturals);
    }
    if !s.is_almost_symmetric(ClassifyMethod::Definition) {
        return Err(Error::NotAlmostSymmetric);
    }
    let f = s.frobenius();
    let b = if (f + 1) % 2 == 1 { f + 1 } else { f + 2 };
    DuplicationSpec::new(RelativeIdeal::naturals(s), b)
}

/// Type relations between `T` and `S = T/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HalfTypeReport {
    pub t_t: usize,
    pub t_s: usize,
    pub even_pf_count: usize,
    /// `T` almost symmetric of odd type ⟹ `t(S) >= (t(T) - 1)/2`.
    pub bound_ok: bool,
    /// `T` almost symmetric of even type ⟹ `t(S)` = number of even `PF(T)`.
    pub count_ok: bool,
    /// `t(S) >=` number of even `PF(T)`, for every `T`.
    pub even_pf_bound_ok: bool,
    /// `f(T)` even ⟹ `f(S) = f(T)/2`, for every `T`.
    pub half_frobenius_ok: bool,
}

impl HalfTypeReport {
    pub fn all_ok(&self) -> bool {
        self.bound_ok && self.count_ok && self.even_pf_bound_ok && self.half_frobenius_ok
    }
}

pub fn half_type_report(t: &NumericalSemigroup) -> HalfTypeReport {
    let s = half(t);
    let pf = t.pseudo_frobenius();
    let t_t = pf.len();
    let t_s = s.type_number();
    let even_pf_count = pf.iter().filter(|&&x| x.rem_euclid(2) == 0).count();
    let almost_symmetric = t.is_almost_symmetric(ClassifyMethod::Definition);
    let ft = t.frobenius();
    let odd_type = t_t % 2 == 1;
    HalfTypeReport {
        t_t,
        t_s,
        even_pf_count,
        bound_ok: !(almost_symmetric && odd_type) || 2 * t_s + 1 >= t_t,
        count_ok: !(almost_symmetric && !odd_type) || t_s == even_pf_count,
        even_pf_bound_ok: t_s >= even_pf_count,
        half_frobenius_ok: ft % 2 != 0 || s.frobenius() * 2 == ft,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::SymmetryClass;

    fn sg(elems: &[i64], c: i64) -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(elems, c).unwrap()
    }

    fn s1() -> NumericalSemigroup {
        sg(&[0, 3], 5)
    }

    fn s2() -> NumericalSemigroup {
        sg(&[0, 4, 5, 6], 8)
    }

    fn spec(s: &NumericalSemigroup, elems: &[i64], c: i64, b: i64) -> DuplicationSpec {
        DuplicationSpec::new(RelativeIdeal::new(s, elems, c).unwrap(), b).unwrap()
    }

    #[test]
    fn symmetric_checks() {
        let d = DuplicationSpec::new(canonical_ideal(&s2()), 5).unwrap();
        assert!(symmetric_double_check(&d));
        assert!(d.duplicate().classify(ClassifyMethod::All).is_symmetric());
        assert!(!symmetric_double_check(&spec(&s1(), &[0], 2, 3)));
        let n = NumericalSemigroup::naturals();
        assert!(symmetric_double_check(&spec(&n, &[], 0, 1)));
    }

    #[test]
    fn necessary_conditions_are_not_sufficient() {
        let d = spec(&s2(), &[2, 3, 4], 6, 5);
        let c = odd_conditions(&d);
        assert!(c.necessary());
        assert!(!c.absorbs_canonical);
        assert!(!odd_double_check(&d));
        assert!(!d.duplicate().is_almost_symmetric(ClassifyMethod::All));
    }

    #[test]
    fn odd_conditions_on_even_duplicate() {
        let c = odd_conditions(&spec(&s1(), &[], 0, 7));
        assert!(!c.frobenius_from_ideal);
        let n = NumericalSemigroup::naturals();
        let c = odd_conditions(&spec(&n, &[], 0, 1));
        assert!(c.all());
    }

    #[test]
    fn even_checks_from_worked_example() {
        assert_eq!(even_double_check(&spec(&s1(), &[0], 2, 3)), Ok(true));
        assert_eq!(even_double_check(&spec(&s1(), &[0], 2, 5)), Ok(false));
        assert_eq!(even_double_check(&spec(&s1(), &[], 0, 9)), Ok(false));
        assert_eq!(even_double_check(&spec(&s1(), &[], 0, 5)), Ok(true));
        assert_eq!(even_double_check(&spec(&s1(), &[], 0, 7)), Ok(true));
        assert!(matches!(
            even_double_check(&spec(&s1(), &[], 0, 11)),
            Err(Error::HypothesisViolated { lhs: 8, rhs: 9 })
        ));
    }

    #[test]
    fn even_family_of_pseudo_symmetric_base() {
        let family = enumerate_even_doubles(&s1());
        assert!(family.exhaustive);
        assert_eq!(
            family.doubles(),
            vec![sg(&[0, 3, 6, 7], 9), sg(&[0, 5, 6, 7], 9), sg(&[0, 6, 7], 9)]
        );
        let classes: Vec<_> = family.members.iter().map(|c| c.report.symmetry_class).collect();
        assert_eq!(
            classes,
            vec![
                SymmetryClass::PseudoSymmetric,
                SymmetryClass::PseudoSymmetric,
                SymmetryClass::AlmostSymmetricProper
            ]
        );
        assert!(enumerate_even_doubles(&NumericalSemigroup::naturals()).members.is_empty());
        let not_as = sg(&[0, 8, 9, 10, 11, 12, 13], 16);
        assert!(!not_as.is_almost_symmetric(ClassifyMethod::All));
        assert!(enumerate_even_doubles(&not_as).members.is_empty());
    }

    #[test]
    fn symmetric_family() {
        let family = enumerate_symmetric_doubles(&s1(), 30).unwrap();
        assert!(!family.members.is_empty());
        for c in &family.members {
            assert!(c.report.is_symmetric());
            assert_eq!(half(&c.double), s1());
        }
        let n = NumericalSemigroup::naturals();
        let family = enumerate_symmetric_doubles(&n, 5).unwrap();
        assert_eq!(family.members.len(), 4);
        assert_eq!(family.members[0].double, n);
        let family = enumerate_symmetric_doubles(&s2(), 40).unwrap();
        assert!(family.members.iter().all(|c| c.report.frobenius % 2 == 1));
        assert!(matches!(
            enumerate_symmetric_doubles(&s1(), 8),
            Err(Error::BoundTooSmall { bound: 8, required: 9 })
        ));
    }

    #[test]
    fn odd_family_respects_type_bound() {
        let family = enumerate_odd_doubles(&s1(), 17).unwrap();
        assert!(family.members.iter().any(|c| c.kind == DoubleKind::Symmetric));
        assert!(family.members.iter().all(|c| c.report.type_number <= 5));
        assert!(family.members.iter().all(|c| c.report.frobenius % 2 == 1));
    }

    #[test]
    fn witnesses() {
        let w = witness_even_double(&s1()).unwrap();
        assert_eq!(w.b(), 5);
        assert_eq!(w.duplicate(), sg(&[0, 5, 6, 7], 9));
        let w = witness_even_double(&s2()).unwrap();
        assert_eq!(w.b(), 9);
        let t = w.duplicate();
        assert_eq!(t.frobenius(), 14);
        assert_eq!(t.pseudo_frobenius(), vec![7, 14]);
        assert_eq!(t.classify(ClassifyMethod::All).symmetry_class, SymmetryClass::PseudoSymmetric);
        assert_eq!(witness_even_double(&NumericalSemigroup::naturals()), Err(Error::IsNaturals));
        let not_as = sg(&[0, 8, 9, 10, 11, 12, 13], 16);
        assert_eq!(witness_even_double(&not_as), Err(Error::NotAlmostSymmetric));
    }

    #[test]
    fn half_type_reports() {
        let r = half_type_report(&sg(&[0, 6, 7], 9));
        assert_eq!((r.t_t, r.t_s, r.even_pf_count), (4, 2, 2));
        assert!(r.count_ok && r.all_ok());
        let r = half_type_report(&sg(&[0, 8, 9, 10, 11, 12, 13], 16));
        assert!(r.even_pf_bound_ok);
        assert!(r.all_ok());
        assert!(half_type_report(&NumericalSemigroup::naturals()).all_ok());
    }

    #[test]
    fn family_json_round_trip() {
        let family = enumerate_even_doubles(&s1());
        let json = serde_json::to_value(&family).unwrap();
        assert_eq!(json["exhaustive"], true);
        assert_eq!(json["members"][2]["class"], "almost-symmetric-proper");
        assert_eq!(json["members"][2]["type"], 4);
        assert!(json["members"][0]["t"]["small"].is_array());
        let back: DoubleFamily = serde_json::from_value(json).unwrap();
        assert_eq!(back, family);
    }
}
