//! Exhaustive checks over every semigroup with a small Frobenius number.

use sgdouble::doubles::{enumerate_symmetric_doubles, half_type_report, witness_even_double};
use sgdouble::ideal::{canonical_ideal, ideals_containing_zero, is_numerical_semigroup_set};
use sgdouble::oracle::{brute_classify, Oracle, Parity};
use sgdouble::{verify, ClassifyMethod, NumericalSemigroup, SymmetryClass};

fn all(max_frobenius: i64) -> Vec<NumericalSemigroup> {
    Oracle::default().enum_semigroups_up_to(max_frobenius).unwrap()
}

#[test]
fn semigroup_counts_by_frobenius() {
    let oracle = Oracle::default();
    let counts: Vec<usize> = (1..=12)
        .map(|f| oracle.enum_semigroups_with_frobenius(f).unwrap().len())
        .collect();
    // OEIS A124506
    assert_eq!(counts, [1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51, 40]);
}

#[test]
fn verify_sweep_passes() {
    let report = verify::run(8, 11, &Oracle::default()).unwrap();
    for c in &report.checks {
        assert!(c.passed(), "{}: {:?}", c.name, &c.violations[..c.violations.len().min(5)]);
    }
}

#[test]
fn symmetric_family_is_complete() {
    let oracle = Oracle::default();
    for s in all(7) {
        let bound = 2 * s.frobenius() + 9;
        let family = enumerate_symmetric_doubles(&s, bound).unwrap();
        let brute: Vec<NumericalSemigroup> = oracle
            .brute_doubles(&s, Parity::Any, bound)
            .unwrap()
            .into_iter()
            .filter(|t| brute_classify(t).symmetry_class == SymmetryClass::Symmetric)
            .collect();
        assert_eq!(family.doubles(), brute, "S = {s}");
    }
}

#[test]
fn ideal_arithmetic_laws() {
    for s in all(7) {
        let k = canonical_ideal(&s);
        let ideals: Vec<_> = std::iter::once(-1)
            .chain(1..=s.frobenius())
            .flat_map(|fe| ideals_containing_zero(&s, fe))
            .collect();
        for e in &ideals {
            assert_eq!(e.tilde().frobenius(), s.frobenius().max(-1), "f(Ẽ) for {e}");
            let ee = e.difference(e).unwrap();
            assert_eq!(ee.to_semigroup().is_some(), is_numerical_semigroup_set(&ee));
            assert!(ee.is_numerical_semigroup(), "E - E is a semigroup for {e}");
            for f in &ideals {
                let sum = e.sum(f).unwrap();
                assert_eq!(sum, f.sum(e).unwrap());
                assert!(e.is_subset(&sum.difference(f).unwrap()), "E ⊆ (E + F) - F");
                // K - (E + F) = (K - E) - F
                assert_eq!(
                    k.difference(&sum).unwrap(),
                    k.difference(e).unwrap().difference(f).unwrap(),
                    "S = {s}, E = {e}, F = {f}"
                );
            }
        }
    }
}

#[test]
fn type_two_does_not_imply_pseudo_symmetry() {
    let found = all(9).into_iter().find(|s| {
        let r = s.classify(ClassifyMethod::All);
        r.type_number == 2 && r.symmetry_class == SymmetryClass::None
    });
    let s = found.expect("a type-2 semigroup that is not almost symmetric");
    assert!(!s.is_almost_symmetric(ClassifyMethod::All));
}

#[test]
fn witnesses_for_every_almost_symmetric_base() {
    for s in all(10) {
        let r = s.classify(ClassifyMethod::All);
        match witness_even_double(&s) {
            Ok(spec) => {
                assert!(r.almost_symmetric && !s.is_naturals());
                let t = spec.duplicate();
                let tr = t.classify(ClassifyMethod::All);
                assert!(tr.almost_symmetric && tr.frobenius % 2 == 0, "S = {s}");
                assert!(half_type_report(&t).all_ok());
            }
            Err(_) => assert!(!r.almost_symmetric || s.is_naturals()),
        }
    }
}
