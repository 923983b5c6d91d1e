//! Invariant sweep behind the `verify` command: kernel results are compared
//! against the theorems they encode and against the brute-force oracle, over
//! every semigroup up to a Frobenius bound.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::doubles::{self, admissible_specs};
use crate::duplication::{decompose, half};
use crate::error::Result;
use crate::ideal::{self, canonical_ideal, maximal_ideal};
use crate::oracle::{brute_classify, Oracle, Parity};
use crate::semigroup::{ClassifyMethod, NumericalSemigroup, SymmetryClass};

/// Largest `f(S)` for which the odd-family oracle comparison is exhaustive;
/// above it semigroups are sampled.
pub const ODD_ORACLE_EXHAUSTIVE: i64 = 7;
/// Semigroups sampled per run above [`ODD_ORACLE_EXHAUSTIVE`].
pub const ODD_ORACLE_SAMPLES: usize = 8;
/// The odd families are compared up to `f(T) <= 2 f(S) + ODD_MARGIN`.
pub const ODD_MARGIN: i64 = 9;

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub violations: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub max_frobenius: i64,
    pub seed: u64,
    pub semigroups: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

/// Runs `check` on every item in parallel and gathers violation messages.
fn sweep<T: Sync>(
    name: &'static str,
    items: &[T],
    check: impl Fn(&T) -> (usize, Vec<String>) + Sync + Send,
) -> CheckOutcome {
    let results: Vec<(usize, Vec<String>)> = items.par_iter().map(check).collect();
    CheckOutcome {
        name,
        cases: results.iter().map(|r| r.0).sum(),
        violations: results.into_iter().flat_map(|r| r.1).collect(),
    }
}

fn classification(s: &NumericalSemigroup) -> (usize, Vec<String>) {
    let mut bad = Vec::new();
    let report = s.classify(ClassifyMethod::All);
    if report != brute_classify(s) {
        bad.push(format!("{s}: kernel and oracle classifications differ"));
    }
    let f = report.frobenius;
    if report.almost_symmetric && f >= 1 && (report.type_number % 2 == 1) != (f % 2 != 0) {
        bad.push(format!("{s}: type parity differs from Frobenius parity"));
    }
    if report.is_symmetric() != (report.type_number == 1) {
        bad.push(format!("{s}: symmetric but type != 1"));
    }
    let pseudo = report.symmetry_class == SymmetryClass::PseudoSymmetric;
    if pseudo != (report.type_number == 2 && report.almost_symmetric) {
        bad.push(format!("{s}: pseudo-symmetry differs from almost symmetric of type 2"));
    }
    if !report
        .pseudo_frobenius
        .iter()
        .all(|x| *x == f || report.second_type_gaps.contains(x))
    {
        bad.push(format!("{s}: PF not inside L ∪ {{f}}"));
    }
    if NumericalSemigroup::from_small_elements(s.small_elements(), s.conductor()).as_ref() != Ok(s) {
        bad.push(format!("{s}: canonical form does not round-trip"));
    }
    if !s.is_naturals() {
        let m = maximal_ideal(s);
        let mm = m.difference(&m).expect("same ambient");
        let pf = &report.pseudo_frobenius;
        let ok = (-2..=s.conductor() + 1)
            .all(|x| mm.contains(x) == (s.contains(x) || pf.contains(&x)));
        if !ok {
            bad.push(format!("{s}: M - M != S ∪ PF(S)"));
        }
    }
    (1, bad)
}

fn ideal_dualities(s: &NumericalSemigroup, oracle: &Oracle) -> (usize, Vec<String>) {
    let mut bad = Vec::new();
    let mut cases = 0;
    let k = canonical_ideal(s);
    for fe in std::iter::once(-1).chain(1..=s.frobenius()) {
        let kernel = ideal::ideals_containing_zero(s, fe);
        match oracle.enum_relative_ideals(s, fe) {
            Ok(brute) if brute.len() == kernel.len() && brute.iter().all(|e| kernel.contains(e)) => {}
            _ => bad.push(format!("{s}: ideal census differs at f(E) = {fe}")),
        }
        for e in kernel {
            cases += 1;
            let dual = k.difference(&e).expect("same ambient");
            if dual != e.jager_dual() {
                bad.push(format!("{s}, E = {e}: K - E differs from the direct dual"));
            }
            if k.difference(&dual).expect("same ambient") != e {
                bad.push(format!("{s}, E = {e}: K - (K - E) != E"));
            }
        }
    }
    (cases, bad)
}

fn spec_equivalences(s: &NumericalSemigroup) -> (usize, Vec<String>) {
    let mut bad = Vec::new();
    let specs = admissible_specs(s, 2 * s.frobenius() + ODD_MARGIN);
    for spec in &specs {
        let t = spec.duplicate();
        let report = t.classify(ClassifyMethod::All);
        let label = || format!("S = {s}, E = {}, b = {}", spec.ideal(), spec.b());
        if spec.frobenius() != t.frobenius() {
            bad.push(format!("{}: Frobenius formula", label()));
        }
        if half(&t) != *s {
            bad.push(format!("{}: half(T) != S", label()));
        }
        if spec.canonical_ideal() != canonical_ideal(&t) {
            bad.push(format!("{}: canonical ideal formula", label()));
        }
        let odd_type = report.almost_symmetric && report.type_number % 2 == 1;
        if doubles::odd_double_check(spec) != odd_type {
            bad.push(format!("{}: odd-type characterization", label()));
        }
        if doubles::symmetric_double_check(spec) != report.is_symmetric() {
            bad.push(format!("{}: symmetric characterization", label()));
        }
        if let Ok(even) = doubles::even_double_check(spec) {
            if even != report.almost_symmetric {
                bad.push(format!("{}: even-type characterization", label()));
            }
        }
        let odd_b = t.small_elements().iter().copied().find(|x| x % 2 == 1).unwrap_or_else(|| {
            let c = t.conductor();
            if c % 2 == 1 { c } else { c + 1 }
        });
        match decompose(&t, odd_b) {
            Ok(d) if d.duplicate() == t && d == *spec => {}
            _ => bad.push(format!("{}: decomposition at the smallest odd element", label())),
        }
    }
    (specs.len(), bad)
}

fn even_family(s: &NumericalSemigroup, oracle: &Oracle) -> (usize, Vec<String>) {
    let family = doubles::enumerate_even_doubles(s);
    let mut bad = Vec::new();
    match oracle.brute_doubles(s, Parity::Even, 2 * s.frobenius()) {
        Ok(brute) if brute == family.doubles() => {}
        Ok(_) => bad.push(format!("{s}: even family differs from oracle")),
        Err(e) => bad.push(format!("{s}: oracle failed: {e}")),
    }
    let nonempty = !family.members.is_empty();
    let expected = !s.is_naturals() && s.is_almost_symmetric(ClassifyMethod::All);
    if nonempty != expected {
        bad.push(format!("{s}: even family emptiness does not track almost symmetry"));
    }
    for cert in &family.members {
        let r = doubles::half_type_report(&cert.double);
        if !r.all_ok() || cert.report.frobenius != 2 * s.frobenius() {
            bad.push(format!("{s}: type relations fail on {}", cert.double));
        }
    }
    (family.members.len().max(1), bad)
}

fn odd_family(s: &NumericalSemigroup, oracle: &Oracle) -> (usize, Vec<String>) {
    let bound = 2 * s.frobenius() + ODD_MARGIN;
    let mut bad = Vec::new();
    let family = match doubles::enumerate_odd_doubles(s, bound) {
        Ok(f) => f,
        Err(e) => return (1, vec![format!("{s}: {e}")]),
    };
    match oracle.brute_doubles(s, Parity::Odd, bound) {
        Ok(brute) if brute == family.doubles() => {}
        Ok(_) => bad.push(format!("{s}: odd family differs from oracle")),
        Err(e) => bad.push(format!("{s}: oracle failed: {e}")),
    }
    let t_s = s.type_number();
    for cert in &family.members {
        if cert.report.type_number > 2 * t_s + 1 || !doubles::half_type_report(&cert.double).all_ok() {
            bad.push(format!("{s}: type bound fails on {}", cert.double));
        }
    }
    (family.members.len().max(1), bad)
}

/// Runs the whole sweep for every semigroup with `f(S) <= max_frobenius`.
pub fn run(max_frobenius: i64, seed: u64, oracle: &Oracle) -> Result<VerifyReport> {
    let semigroups = oracle.enum_semigroups_up_to(max_frobenius)?;

    let mut odd_pool: Vec<NumericalSemigroup> = semigroups
        .iter()
        .filter(|s| s.frobenius() <= ODD_ORACLE_EXHAUSTIVE)
        .cloned()
        .collect();
    let mut extra: Vec<NumericalSemigroup> = semigroups
        .iter()
        .filter(|s| s.frobenius() > ODD_ORACLE_EXHAUSTIVE)
        .filter(|s| 2 * s.frobenius() + ODD_MARGIN <= oracle.limits.double_frobenius)
        .cloned()
        .collect();
    extra.shuffle(&mut StdRng::seed_from_u64(seed));
    odd_pool.extend(extra.into_iter().take(ODD_ORACLE_SAMPLES));

    let checks = vec![
        sweep("classification", &semigroups, classification),
        sweep("ideal-dualities", &semigroups, |s| ideal_dualities(s, oracle)),
        sweep("duplication-characterizations", &semigroups, spec_equivalences),
        sweep("even-family-oracle", &semigroups, |s| even_family(s, oracle)),
        sweep("odd-family-oracle", &odd_pool, |s| odd_family(s, oracle)),
    ];
    Ok(VerifyReport {
        max_frobenius,
        seed,
        semigroups: semigroups.len(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let report = run(5, 1, &Oracle::default()).unwrap();
        for c in &report.checks {
            assert!(c.passed(), "{}: {:?}", c.name, c.violations);
            assert!(c.cases > 0, "{}", c.name);
        }
    }
}
