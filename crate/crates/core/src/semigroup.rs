//! Numerical semigroups and their basic invariants.
//!
//! A semigroup is stored by its elements below the conductor `c`; membership
//! of `x >= c` is implicit, negative integers are never members. The whole of
//! ℕ is the empty element list with conductor 0.
//!
//! Conventions for ℕ: `f(ℕ) = -1`, `PF(ℕ) = {-1}`, type 1, classified
//! symmetric. These keep `type = |PF|` and `f = max PF` total.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cofinite::CofiniteSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SemigroupRepr", into = "SemigroupRepr")]
pub struct NumericalSemigroup {
    set: CofiniteSet,
}

#[derive(Serialize, Deserialize)]
struct SemigroupRepr {
    small: Vec<i64>,
    conductor: i64,
}

impl TryFrom<SemigroupRepr> for NumericalSemigroup {
    type Error = Error;

    fn try_from(repr: SemigroupRepr) -> Result<Self> {
        NumericalSemigroup::from_small_elements(&repr.small, repr.conductor)
    }
}

impl From<NumericalSemigroup> for SemigroupRepr {
    fn from(s: NumericalSemigroup) -> Self {
        SemigroupRepr {
            small: s.small_elements().to_vec(),
            conductor: s.conductor(),
        }
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl NumericalSemigroup {
    pub fn naturals() -> Self {
        Self {
            set: CofiniteSet::from_parts(Vec::new(), 0),
        }
    }

    /// Smallest numerical semigroup containing `gens`.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::NonCoprimeGenerators(d));
        }
        let smallest = *gens.iter().min().unwrap();

        // A run of `smallest` consecutive members means everything after is in.
        let mut member: Vec<bool> = Vec::new();
        let mut run = 0;
        let mut x = 0i64;
        while run < smallest {
            let inside = x == 0
                || gens
                    .iter()
                    .any(|&g| g <= x && member[(x - g) as usize]);
            member.push(inside);
            run = if inside { run + 1 } else { 0 };
            x += 1;
        }
        let conductor = x - smallest;
        Ok(Self {
            set: CofiniteSet::from_predicate(0, conductor, |y| member[y as usize]),
        })
    }

    /// Validates and wraps the canonical representation: `elems` ascending,
    /// containing 0, all below `conductor`, closed under addition below it.
    pub fn from_small_elements(elems: &[i64], conductor: i64) -> Result<Self> {
        if conductor < 0 {
            return Err(Error::InvalidConductor(conductor));
        }
        if conductor == 0 {
            return match elems.first() {
                None => Ok(Self::naturals()),
                Some(&e) => Err(Error::MalformedElements { element: e, conductor }),
            };
        }
        if elems.first() != Some(&0) {
            return Err(Error::MissingZero);
        }
        for w in elems.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::MalformedElements { element: w[1], conductor });
            }
        }
        let last = *elems.last().unwrap();
        if last >= conductor {
            return Err(Error::MalformedElements { element: last, conductor });
        }
        if last == conductor - 1 {
            return Err(Error::FrobeniusInSet(last));
        }
        let set = CofiniteSet::from_parts(elems.to_vec(), conductor);
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i..] {
                if a + b >= conductor {
                    break;
                }
                if !set.contains(a + b) {
                    return Err(Error::NotClosed(a, b));
                }
            }
        }
        Ok(Self { set })
    }

    /// Trusted constructor for sets already known to be numerical semigroups.
    pub(crate) fn from_set(set: CofiniteSet) -> Self {
        debug_assert_eq!(set.least(), 0);
        let s = Self { set };
        debug_assert!(
            Self::from_small_elements(s.small_elements(), s.conductor()).is_ok(),
            "not a numerical semigroup: {s}"
        );
        s
    }

    pub(crate) fn as_set(&self) -> &CofiniteSet {
        &self.set
    }

    pub fn small_elements(&self) -> &[i64] {
        self.set.elements()
    }

    pub fn conductor(&self) -> i64 {
        self.set.conductor()
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor() == 0
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        self.set.contains(x)
    }

    pub fn frobenius(&self) -> i64 {
        self.conductor() - 1
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> i64 {
        match self.small_elements().get(1) {
            Some(&m) => m,
            None => self.conductor().max(1),
        }
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..self.conductor()).filter(|&x| !self.contains(x)).collect()
    }

    pub fn genus(&self) -> usize {
        self.conductor() as usize - self.small_elements().len()
    }

    /// Gaps `s` with `f - s` also a gap.
    pub fn second_type_gaps(&self) -> Vec<i64> {
        let f = self.frobenius();
        (1..self.conductor())
            .filter(|&x| !self.contains(x) && !self.contains(f - x))
            .collect()
    }

    pub fn minimal_generators(&self) -> Vec<i64> {
        let bound = self.conductor().max(1) + self.multiplicity();
        (1..bound)
            .filter(|&x| {
                self.contains(x)
                    && !self
                        .small_elements()
                        .iter()
                        .skip(1)
                        .take_while(|&&a| a < x)
                        .any(|&a| self.contains(x - a))
            })
            .collect()
    }

    /// Ascending pseudo-Frobenius numbers; `[-1]` for ℕ.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.is_naturals() {
            return vec![-1];
        }
        let gens = self.minimal_generators();
        (1..self.conductor())
            .filter(|&x| !self.contains(x) && gens.iter().all(|&g| self.contains(x + g)))
            .collect()
    }

    pub fn type_number(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// Almost symmetry decided by one criterion. `ClassifyMethod::All` runs
    /// all three and panics if they disagree.
    pub fn is_almost_symmetric(&self, method: ClassifyMethod) -> bool {
        let pf = self.pseudo_frobenius();
        self.almost_symmetric_with(method, &pf)
    }

    fn almost_symmetric_with(&self, method: ClassifyMethod, pf: &[i64]) -> bool {
        match method {
            ClassifyMethod::Definition => self.second_type_gaps().iter().all(|x| pf.contains(x)),
            ClassifyMethod::Biconditional => {
                let f = self.frobenius();
                let c = self.conductor();
                (-(c + 1)..=(c + 1))
                    .filter(|&s| s != 0)
                    .all(|s| self.contains(s) == !(self.contains(f - s) || pf.contains(&(f - s))))
            }
            ClassifyMethod::Pairing => {
                let t = pf.len();
                let f = pf[t - 1];
                (1..t).all(|i| pf[i - 1] + pf[t - i - 1] == f)
            }
            ClassifyMethod::All => {
                let verdicts = [
                    self.almost_symmetric_with(ClassifyMethod::Definition, pf),
                    self.almost_symmetric_with(ClassifyMethod::Biconditional, pf),
                    self.almost_symmetric_with(ClassifyMethod::Pairing, pf),
                ];
                assert!(
                    verdicts.iter().all(|&v| v == verdicts[0]),
                    "almost-symmetry criteria disagree on {self}: {verdicts:?}"
                );
                verdicts[0]
            }
        }
    }

    pub fn classify(&self, method: ClassifyMethod) -> ClassificationReport {
        let frobenius = self.frobenius();
        let pseudo_frobenius = self.pseudo_frobenius();
        let second_type_gaps = self.second_type_gaps();
        let almost_symmetric = self.almost_symmetric_with(method, &pseudo_frobenius);
        let symmetry_class = if second_type_gaps.is_empty() {
            SymmetryClass::Symmetric
        } else if frobenius % 2 == 0 && second_type_gaps == [frobenius / 2] {
            SymmetryClass::PseudoSymmetric
        } else if almost_symmetric {
            SymmetryClass::AlmostSymmetricProper
        } else {
            SymmetryClass::None
        };
        ClassificationReport {
            frobenius,
            gaps: self.gaps(),
            second_type_gaps,
            type_number: pseudo_frobenius.len(),
            pseudo_frobenius,
            symmetry_class,
            almost_symmetric,
            criteria_agreement: true,
        }
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.set.cmp(&other.set)
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `{0,3,5→}` notation.
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cofinite(f, self.small_elements(), self.conductor())
    }
}

pub(crate) fn write_cofinite(f: &mut fmt::Formatter<'_>, elems: &[i64], conductor: i64) -> fmt::Result {
    f.write_str("{")?;
    for x in elems {
        write!(f, "{x},")?;
    }
    write!(f, "{conductor}→}}")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassifyMethod {
    /// `L(S) ⊆ PF(S)`.
    Definition,
    /// `s ∈ S ⟺ f - s ∉ S ∪ PF(S)` for every nonzero `s`.
    Biconditional,
    /// `f_i + f_{t-i} = f` over the sorted pseudo-Frobenius numbers.
    Pairing,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryClass {
    Symmetric,
    PseudoSymmetric,
    AlmostSymmetricProper,
    None,
}

impl SymmetryClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SymmetryClass::Symmetric => "symmetric",
            SymmetryClass::PseudoSymmetric => "pseudo-symmetric",
            SymmetryClass::AlmostSymmetricProper => "almost-symmetric-proper",
            SymmetryClass::None => "none",
        }
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub frobenius: i64,
    pub gaps: Vec<i64>,
    pub second_type_gaps: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    pub type_number: usize,
    pub symmetry_class: SymmetryClass,
    pub almost_symmetric: bool,
    pub criteria_agreement: bool,
}

impl ClassificationReport {
    pub fn is_symmetric(&self) -> bool {
        self.symmetry_class == SymmetryClass::Symmetric
    }
}
