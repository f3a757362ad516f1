//! Regular nilpotent Hessenberg varieties with `h = (3, 3, 4, 5, ..., n, n)`.
//!
//! Every fixed point falls into one of four classes, read off its filling
//! `w^{-1}`: an increasing sequence of decreasing staircases (with or
//! without the string `321`), or a filling containing `... 3 1 2 ...` or
//! `2 ... 3 1 ...`. Each fixed point carries an associated subset of
//! `{1, ..., n-1}` which determines its reduced word, its rolldown and the
//! value `p_{roll(w)}(w)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::billey::{billey_summands, p_restriction_with_word, restriction_matrix, check_upper_triangular, S1Value};
use crate::error::{Error, Result};
use crate::fillings::{HessenbergFunction, YoungDiagram};
use crate::perm::{bruhat_leq_unchecked, Permutation, ReducedWord, Word};
use crate::pinball::{fixed_point_filling, fixed_points, rolldown, verify_pinball, RolldownTable};
use crate::report::{all_passed, Check};

/// `h = (3, 3, 4, 5, ..., n, n)`.
pub fn h334(n: usize) -> Result<HessenbergFunction> {
    if n < 4 {
        return Err(Error::TrivialHessenberg { n });
    }
    HessenbergFunction::new((1..=n).map(|i| if i <= 2 { 3 } else { (i + 1).min(n) }).collect())
}

/// `h = (2, 3, ..., n, n)`.
pub fn peterson_h(n: usize) -> HessenbergFunction {
    HessenbergFunction::peterson(n)
}

pub fn is_334_fixed_point(w: &Permutation) -> Result<bool> {
    let h = h334(w.n())?;
    match fixed_point_filling(w, &YoungDiagram::single_row(w.n()), &h) {
        Ok(_) => Ok(true),
        Err(Error::NotFixedPoint { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

fn require_fixed_point(w: &Permutation) -> Result<()> {
    let h = h334(w.n())?;
    fixed_point_filling(w, &YoungDiagram::single_row(w.n()), &h).map(|_| ())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FixedPointClass {
    PetersonNo321,
    Peterson321,
    Type312,
    Type231,
}

impl FixedPointClass {
    pub const ALL: [FixedPointClass; 4] = [
        FixedPointClass::PetersonNo321,
        FixedPointClass::Peterson321,
        FixedPointClass::Type312,
        FixedPointClass::Type231,
    ];

    pub fn is_peterson(self) -> bool {
        matches!(self, FixedPointClass::PetersonNo321 | FixedPointClass::Peterson321)
    }
}

impl fmt::Display for FixedPointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixedPointClass::PetersonNo321 => "peterson",
            FixedPointClass::Peterson321 => "peterson-321",
            FixedPointClass::Type312 => "312",
            FixedPointClass::Type231 => "231",
        })
    }
}

/// True iff the one-line notation splits into decreasing runs of
/// consecutive values whose value ranges increase left to right, e.g. `3215476`.
pub fn is_staircase_sequence(w: &Permutation) -> bool {
    let v = w.one_line();
    let mut i = 0;
    let mut prev_max = 0;
    while i < v.len() {
        let mut j = i;
        while j + 1 < v.len() && v[j + 1] + 1 == v[j] {
            j += 1;
        }
        if v[j] != prev_max + 1 {
            return false;
        }
        prev_max = v[i];
        i = j + 1;
    }
    true
}

/// `{ i : w(i) = w(i+1) + 1 }`.
pub fn peterson_subset(w: &Permutation) -> BTreeSet<usize> {
    (1..w.n()).filter(|&i| w.get(i) == w.get(i + 1) + 1).collect()
}

pub fn classify(w: &Permutation) -> Result<FixedPointClass> {
    require_fixed_point(w)?;
    if is_staircase_sequence(w) {
        let a = peterson_subset(w);
        return Ok(if a.contains(&1) && a.contains(&2) {
            FixedPointClass::Peterson321
        } else {
            FixedPointClass::PetersonNo321
        });
    }
    let f = w.inverse().one_line();
    let at = f
        .windows(2)
        .position(|p| p == [3, 1])
        .ok_or_else(|| Error::Unclassifiable(w.to_string()))?;
    if f.get(at + 2) == Some(&2) {
        Ok(FixedPointClass::Type312)
    } else if f[0] == 2 {
        Ok(FixedPointClass::Type231)
    } else {
        Err(Error::Unclassifiable(w.to_string()))
    }
}

/// A subset of `{1, ..., n-1}` with its maximal runs of consecutive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AssociatedSubset {
    elements: BTreeSet<usize>,
    substrings: Vec<(usize, usize)>,
}

impl AssociatedSubset {
    pub fn new(elements: impl IntoIterator<Item = usize>) -> Self {
        let elements: BTreeSet<usize> = elements.into_iter().collect();
        let mut substrings: Vec<(usize, usize)> = Vec::new();
        for &a in &elements {
            match substrings.last_mut() {
                Some((_, hi)) if *hi + 1 == a => *hi = a,
                _ => substrings.push((a, a)),
            }
        }
        Self { elements, substrings }
    }

    pub fn elements(&self) -> &BTreeSet<usize> {
        &self.elements
    }

    /// Maximal consecutive runs `[lo, hi]`, sorted.
    pub fn substrings(&self) -> &[(usize, usize)] {
        &self.substrings
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_subset(&self, other: &AssociatedSubset) -> bool {
        self.elements.is_subset(&other.elements)
    }

    fn run_of(&self, j: usize) -> Option<(usize, usize)> {
        self.substrings.iter().copied().find(|&(lo, hi)| lo <= j && j <= hi)
    }

    /// Largest element of the run containing `j`.
    pub fn head(&self, j: usize) -> Option<usize> {
        self.run_of(j).map(|(_, hi)| hi)
    }

    /// Smallest element of the run containing `j`.
    pub fn tail(&self, j: usize) -> Option<usize> {
        self.run_of(j).map(|(lo, _)| lo)
    }

    /// Upper end of the run starting at 1, if `1` belongs to the subset.
    fn initial_head(&self) -> Option<usize> {
        self.head(1)
    }
}

impl fmt::Display for AssociatedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.substrings.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self
            .substrings
            .iter()
            .map(|&(lo, hi)| if lo == hi { format!("{{{lo}}}") } else { format!("[{lo},{hi}]") })
            .collect();
        f.write_str(&parts.join(" u "))
    }
}

pub fn associated_subset(w: &Permutation) -> Result<AssociatedSubset> {
    let normalized = match classify(w)? {
        FixedPointClass::PetersonNo321 | FixedPointClass::Peterson321 => w.clone(),
        FixedPointClass::Type312 => w.mul_simple_right(1),
        FixedPointClass::Type231 => {
            let a2 = w.inverse().get(2) - 1;
            (2..=a2).fold(w.clone(), |acc, i| acc.mul_simple_right(i))
        }
    };
    Ok(AssociatedSubset::new(peterson_subset(&normalized)))
}

/// Letters of `w_[a,b] = s_a (s_{a+1} s_a) ... (s_b ... s_a)`.
pub fn standard_word(a: usize, b: usize) -> Vec<usize> {
    (a..=b).flat_map(|top| (a..=top).rev()).collect()
}

fn product(n: usize, letters: Vec<usize>) -> Result<Permutation> {
    Ok(Word::new(n, letters)?.product())
}

fn standard_tail(a: &AssociatedSubset) -> Vec<usize> {
    a.substrings().iter().skip(1).flat_map(|&(lo, hi)| standard_word(lo, hi)).collect()
}

fn require_initial_run(a: &AssociatedSubset) -> Result<usize> {
    match a.initial_head() {
        Some(a2) if a2 >= 2 => Ok(a2),
        _ => Err(Error::InvalidPermutation(format!(
            "subset {a} does not contain {{1,2}}"
        ))),
    }
}

/// The Peterson-type fixed point with associated subset `a`: the product of
/// the longest elements of the runs of `a`.
pub fn w_a(a: &AssociatedSubset, n: usize) -> Result<Permutation> {
    product(n, a.substrings().iter().flat_map(|&(lo, hi)| standard_word(lo, hi)).collect())
}

/// The 312-type fixed point with associated subset `a` (which must contain `{1,2}`).
pub fn u_a(a: &AssociatedSubset, n: usize) -> Result<Permutation> {
    let a2 = require_initial_run(a)?;
    // a, a+1, a-1, ..., 1, a+2, ..., n
    let mut head = vec![a2, a2 + 1];
    head.extend((1..a2).rev());
    head.extend(a2 + 2..=n);
    Permutation::new(head)?.compose(&product(n, standard_tail(a))?)
}

/// The 231-type fixed point with associated subset `a` (which must contain `{1,2}`).
pub fn v_a(a: &AssociatedSubset, n: usize) -> Result<Permutation> {
    let a2 = require_initial_run(a)?;
    // a+1, 1, a, a-1, ..., 2, a+2, ..., n
    let mut head = vec![a2 + 1, 1];
    head.extend((2..=a2).rev());
    head.extend(a2 + 2..=n);
    Permutation::new(head)?.compose(&product(n, standard_tail(a))?)
}

/// The reduced word of `w` used for restriction computations.
pub fn catalog_reduced_word(w: &Permutation) -> Result<ReducedWord> {
    let class = classify(w)?;
    let a = associated_subset(w)?;
    let mut letters = Vec::new();
    match class {
        FixedPointClass::PetersonNo321 | FixedPointClass::Peterson321 => {
            for &(lo, hi) in a.substrings() {
                letters.extend(standard_word(lo, hi));
            }
        }
        FixedPointClass::Type312 => {
            // s_1 (s_2 s_1) ... (s_{a2-1} ... s_1) (s_{a2} ... s_2)
            let a2 = require_initial_run(&a)?;
            letters.push(1);
            for k in 2..a2 {
                letters.extend((1..=k).rev());
            }
            letters.extend((2..=a2).rev());
            letters.extend(standard_tail(&a));
        }
        FixedPointClass::Type231 => {
            // s_2 (s_3 s_2) ... (s_{a2-1} ... s_2) (s_{a2} ... s_2 s_1)
            let a2 = require_initial_run(&a)?;
            for k in 2..a2 {
                letters.extend((2..=k).rev());
            }
            letters.extend((1..=a2).rev());
            letters.extend(standard_tail(&a));
        }
    }
    let word = ReducedWord::new(Word::new(w.n(), letters)?)?;
    let got = word.product();
    if &got != w {
        return Err(Error::WordMismatch {
            word: word.to_string(),
            product: got.to_string(),
            expected: w.to_string(),
        });
    }
    Ok(word)
}

/// Reduced word for the rolldown read off the associated subset.
pub fn rolldown_closed_form_word(w: &Permutation) -> Result<ReducedWord> {
    let class = classify(w)?;
    let a = associated_subset(w)?;
    let descending: Vec<usize> = a.elements().iter().rev().copied().collect();
    let letters: Vec<usize> = match class {
        FixedPointClass::PetersonNo321 => descending,
        other => {
            let mut l: Vec<usize> = descending.into_iter().filter(|&j| j > 2).collect();
            l.extend_from_slice(match other {
                FixedPointClass::Peterson321 => &[1, 2, 1],
                FixedPointClass::Type312 => &[1, 2],
                _ => &[2, 1],
            });
            l
        }
    };
    ReducedWord::new(Word::new(w.n(), letters)?)
}

pub fn rolldown_closed_form(w: &Permutation) -> Result<Permutation> {
    Ok(rolldown_closed_form_word(w)?.product())
}

/// `p_{roll(w)}(w)` from the associated subset alone.
pub fn closed_form_restriction(w: &Permutation) -> Result<S1Value> {
    let class = classify(w)?;
    let a = associated_subset(w)?;
    let run_factor = |i: usize| BigInt::from(i - a.tail(i).expect("member") + 1);
    let size = a.len() as u32;
    let value = match class {
        FixedPointClass::PetersonNo321 => {
            S1Value::new(a.elements().iter().map(|&i| run_factor(i)).product::<BigInt>(), size)
        }
        FixedPointClass::Peterson321 | FixedPointClass::Type312 => {
            let h1 = require_initial_run(&a)?;
            let prod: BigInt = a.elements().iter().map(|&i| run_factor(i)).product();
            let degree = if class == FixedPointClass::Peterson321 { size + 1 } else { size };
            S1Value::new(BigInt::from(h1 - 1) * prod, degree)
        }
        FixedPointClass::Type231 => {
            let h1 = require_initial_run(&a)?;
            let t1 = a.tail(1).expect("member");
            let mut c = BigInt::from(h1);
            for i in 2..=h1 {
                c *= i - 1;
            }
            for &i in a.elements() {
                if !(t1..=h1).contains(&i) {
                    c *= run_factor(i);
                }
            }
            S1Value::new(c, size)
        }
    };
    Ok(value)
}

/// The common value of every summand of `p_{s_i}(w)` on the catalog word
/// (zero when `i` is not in the associated subset).
pub fn simple_summand_value(w: &Permutation, i: usize) -> Result<S1Value> {
    let class = classify(w)?;
    let a = associated_subset(w)?;
    let Some(tail) = a.tail(i) else {
        return Ok(S1Value::zero());
    };
    if class == FixedPointClass::Type231 {
        let a2 = require_initial_run(&a)?;
        if i == 1 {
            return Ok(S1Value::new(a2, 1));
        }
        if i <= a2 {
            return Ok(S1Value::new(i - 1, 1));
        }
    }
    Ok(S1Value::new(i - tail + 1, 1))
}

/// Number and values of Billey summands of `p_{roll(w)}(w)` on the catalog word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandCensus {
    pub fixed_point: Permutation,
    pub class: FixedPointClass,
    pub rolldown: Permutation,
    pub word: ReducedWord,
    pub count: usize,
    pub expected_count: usize,
    pub values: Vec<S1Value>,
    pub all_equal: bool,
}

impl SummandCensus {
    pub fn passed(&self) -> bool {
        self.count == self.expected_count && self.all_equal
    }
}

pub fn summand_census(w: &Permutation) -> Result<SummandCensus> {
    let class = classify(w)?;
    let a = associated_subset(w)?;
    let word = catalog_reduced_word(w)?;
    let roll = rolldown_closed_form(w)?;
    let summands = billey_summands(&roll, &word)?;
    let values: Vec<S1Value> = summands.into_iter().map(|s| s.value).collect();
    let expected_count = match class {
        FixedPointClass::Peterson321 | FixedPointClass::Type312 => require_initial_run(&a)? - 1,
        _ => 1,
    };
    Ok(SummandCensus {
        fixed_point: w.clone(),
        class,
        rolldown: roll,
        count: values.len(),
        expected_count,
        all_equal: values.windows(2).all(|p| p[0] == p[1]),
        values,
        word,
    })
}

/// Everything known about one fixed point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointData {
    pub fixed_point: Permutation,
    pub class: FixedPointClass,
    pub subset: AssociatedSubset,
    pub word: ReducedWord,
    pub rolldown: Permutation,
}

fn fixed_point_data(w: &Permutation, h: &HessenbergFunction) -> Result<FixedPointData> {
    Ok(FixedPointData {
        fixed_point: w.clone(),
        class: classify(w)?,
        subset: associated_subset(w)?,
        word: catalog_reduced_word(w)?,
        rolldown: rolldown(w, &YoungDiagram::single_row(w.n()), h)?,
    })
}

/// Outcome of [`verify_334_theorem`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub n: usize,
    pub fixed_points: usize,
    pub class_counts: BTreeMap<FixedPointClass, usize>,
    pub checks: Vec<Check>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

fn failures<T: Sync>(items: &[T], f: impl Fn(&T) -> Option<String> + Sync + Send) -> Vec<String> {
    items.par_iter().filter_map(f).collect()
}

/// Checks the pinball conditions, upper triangularity of the restriction
/// matrix, and the structural Bruhat facts about the four classes.
pub fn verify_334_theorem(n: usize) -> Result<TheoremReport> {
    let h = h334(n)?;
    let shape = YoungDiagram::single_row(n);
    let mut checks = verify_pinball(&shape, &h)?.checks();

    let points = fixed_points(&shape, &h)?;
    let data: Vec<FixedPointData> = points
        .par_iter()
        .map(|w| fixed_point_data(w, &h))
        .collect::<Result<_>>()?;
    let mut class_counts = BTreeMap::new();
    for d in &data {
        *class_counts.entry(d.class).or_insert(0) += 1;
    }
    let pairs: Vec<(&FixedPointData, &FixedPointData)> =
        data.iter().flat_map(|x| data.iter().map(move |y| (x, y))).collect();
    let leq = |a: &Permutation, b: &Permutation| bruhat_leq_unchecked(a, b);

    checks.push(Check::from_failures(
        "class census 3*2^(n-3) Peterson without 321, 2^(n-3) per other class",
        4,
        FixedPointClass::ALL
            .iter()
            .filter_map(|c| {
                let expected = if *c == FixedPointClass::PetersonNo321 { 3 << (n - 3) } else { 1 << (n - 3) };
                let got = class_counts.get(c).copied().unwrap_or(0);
                (got != expected).then(|| format!("{c}: {got} fixed points, expected {expected}"))
            })
            .collect(),
    ));
    checks.push(Check::from_failures(
        "Peterson with 321 iff {1,2} in A(w)",
        data.len(),
        failures(&data, |d| {
            let by_string = d.fixed_point.contains_string(&[3, 2, 1]);
            (d.class.is_peterson() && by_string != (d.class == FixedPointClass::Peterson321))
                .then(|| format!("{} classified {}", d.fixed_point, d.class))
        }),
    ));
    checks.push(Check::from_failures(
        "rolldown matches closed form",
        data.len(),
        failures(&data, |d| match rolldown_closed_form(&d.fixed_point) {
            Ok(r) if r == d.rolldown => None,
            Ok(r) => Some(format!("roll({}) = {} but closed form gives {}", d.fixed_point, d.rolldown, r)),
            Err(e) => Some(format!("{}: {e}", d.fixed_point)),
        }),
    ));
    checks.push(Check::from_failures(
        "{1,2} in A(w) for 312 and 231 types",
        data.len(),
        failures(&data, |d| {
            (!d.class.is_peterson() && !(d.subset.contains(1) && d.subset.contains(2)))
                .then(|| format!("{} ({}) has A = {}", d.fixed_point, d.class, d.subset))
        }),
    ));
    checks.push(Check::from_failures(
        "s_i <= w iff s_i <= roll(w) iff i in A(w)",
        data.len() * (n - 1),
        failures(&data, |d| {
            (1..n)
                .find(|&i| {
                    let s = Permutation::simple(i, n).expect("in range");
                    let in_a = d.subset.contains(i);
                    leq(&s, &d.fixed_point) != in_a || leq(&s, &d.rolldown) != in_a
                })
                .map(|i| format!("i = {i}, w = {}, A = {}", d.fixed_point, d.subset))
        }),
    ));
    checks.push(Check::from_failures(
        "non-Peterson w below the Peterson point of A(w)",
        data.len(),
        failures(&data, |d| {
            if d.class.is_peterson() {
                return None;
            }
            let top = w_a(&d.subset, n).ok()?;
            (!leq(&d.fixed_point, &top)).then(|| format!("{} not below {top}", d.fixed_point))
        }),
    ));

    checks.push(Check::from_failures(
        "roll(w) <= w' iff w <= w'",
        pairs.len(),
        failures(&pairs, |(x, y)| {
            (leq(&x.rolldown, &y.fixed_point) != leq(&x.fixed_point, &y.fixed_point))
                .then(|| format!("w = {}, w' = {}", x.fixed_point, y.fixed_point))
        }),
    ));
    checks.push(Check::from_failures(
        "forbidden relations between classes",
        pairs.len(),
        failures(&pairs, |(x, y)| {
            use FixedPointClass::*;
            let forbidden = (y.class == PetersonNo321 && x.class != PetersonNo321)
                || (y.class == Type231 && matches!(x.class, Peterson321 | Type312));
            (forbidden && (leq(&x.fixed_point, &y.fixed_point) || leq(&x.rolldown, &y.fixed_point)))
                .then(|| format!("{} ({}) below {} ({})", x.fixed_point, x.class, y.fixed_point, y.class))
        }),
    ));
    checks.push(Check::from_failures(
        "Bruhat order equals subset containment where the classes allow it",
        pairs.len(),
        failures(&pairs, |(x, y)| {
            use FixedPointClass::*;
            let applies = (x.class.is_peterson() && y.class.is_peterson())
                || x.class == y.class
                || (x.class == PetersonNo321 && matches!(y.class, Type312 | Type231))
                || (matches!(x.class, Type312 | Type231) && y.class.is_peterson());
            (applies && leq(&x.fixed_point, &y.fixed_point) != x.subset.is_subset(&y.subset))
                .then(|| format!("w = {}, w' = {}", x.fixed_point, y.fixed_point))
        }),
    ));
    checks.push(Check::from_failures(
        "w below a 312-type point iff containment and longer initial run",
        pairs.len(),
        failures(&pairs, |(x, y)| {
            use FixedPointClass::*;
            if y.class != Type312 || x.class == Type312 || !(x.subset.contains(1) && x.subset.contains(2)) {
                return None;
            }
            let a2 = x.subset.initial_head()?;
            let b2 = y.subset.initial_head()?;
            let expected = x.subset.is_subset(&y.subset) && b2 > a2;
            (leq(&x.fixed_point, &y.fixed_point) != expected)
                .then(|| format!("w = {}, w' = {}", x.fixed_point, y.fixed_point))
        }),
    ));

    let table: RolldownTable = data.iter().map(|d| (d.fixed_point.clone(), d.rolldown.clone())).collect();
    let matrix = restriction_matrix(&points, &table)?;
    checks.extend(check_upper_triangular(&matrix, leq));
    checks.push(Check::from_failures(
        "diagonal equals closed form",
        data.len(),
        failures(&(0..data.len()).collect::<Vec<_>>(), |&i| {
            let w = &matrix.fixed_points[i];
            let diag = matrix.get(i, i);
            match closed_form_restriction(w) {
                Ok(c) if &c == diag => None,
                Ok(c) => Some(format!("p_roll({w})({w}) = {diag}, closed form {c}")),
                Err(e) => Some(format!("{w}: {e}")),
            }
        }),
    ));
    checks.push(Check::from_failures(
        "summands of p_(s_i)(w) all equal the predicted value",
        data.len() * (n - 1),
        failures(&data, |d| {
            (1..n).find_map(|i| {
                let s = Permutation::simple(i, n).ok()?;
                let summands = billey_summands(&s, &d.word).ok()?;
                let expected = simple_summand_value(&d.fixed_point, i).ok()?;
                let ok = if expected.is_zero() {
                    summands.is_empty()
                } else {
                    !summands.is_empty() && summands.iter().all(|x| x.value == expected)
                };
                (!ok).then(|| format!("w = {}, i = {i}: expected {expected}", d.fixed_point))
            })
        }),
    ));
    checks.push(Check::from_failures(
        "summand counts of p_roll(w)(w)",
        data.len(),
        failures(&data, |d| match summand_census(&d.fixed_point) {
            Ok(c) if c.passed() => None,
            Ok(c) => Some(format!(
                "{} ({}): {} summands, expected {}, equal = {}",
                c.fixed_point, c.class, c.count, c.expected_count, c.all_equal
            )),
            Err(e) => Some(format!("{}: {e}", d.fixed_point)),
        }),
    ));

    Ok(TheoremReport {
        n,
        fixed_points: data.len(),
        class_counts,
        checks,
    })
}

/// `p_{roll(w)}(w)` by Billey's formula on the catalog word.
pub fn billey_diagonal(w: &Permutation) -> Result<S1Value> {
    let word = catalog_reduced_word(w)?;
    let roll = rolldown(w, &YoungDiagram::single_row(w.n()), &h334(w.n())?)?;
    p_restriction_with_word(&roll, w, &word)
}
