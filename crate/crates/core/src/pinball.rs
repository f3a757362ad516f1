//! The dimension pair algorithm and the Betti poset pinball conditions.
//!
//! For a fixed point `w`, the rolldown is `roll(w) = omega(x)^{-1}` where `x`
//! counts top parts of the dimension pairs of the filling attached to `w`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::{
    dimension_pairs, enumerate_permissible, filling_of_fixed_point, first_violation, omega_word,
    reading_word, top_parts, DimensionPairSet, Filling, HessenbergFunction, TopParts, YoungDiagram,
};
use crate::perm::{bruhat_leq_unchecked, Permutation, ReducedWord, Word};
use crate::report::Check;

/// Fixed points `w` (one per permissible filling, via `w^{-1}` = reading
/// word), sorted by one-line notation.
pub fn fixed_points(shape: &YoungDiagram, h: &HessenbergFunction) -> Result<Vec<Permutation>> {
    let mut out: Vec<Permutation> = enumerate_permissible(shape, h)?
        .iter()
        .map(|f| reading_word(f).inverse())
        .collect();
    out.sort();
    Ok(out)
}

/// The permissible filling of `w`, or an error naming the first adjacency
/// that breaks permissibility.
pub fn fixed_point_filling(
    w: &Permutation,
    shape: &YoungDiagram,
    h: &HessenbergFunction,
) -> Result<Filling> {
    if w.n() != h.n() {
        return Err(Error::SizeMismatch {
            left: w.n(),
            right: h.n(),
        });
    }
    let f = filling_of_fixed_point(w, shape)?;
    if let Some((left, right)) = first_violation(&f, h)? {
        return Err(Error::NotFixedPoint {
            perm: w.to_string(),
            left,
            right,
            bound: h.get(right),
        });
    }
    Ok(f)
}

/// Dimension pairs of the filling attached to the fixed point `w`.
pub fn fixed_point_dimension_pairs(
    w: &Permutation,
    shape: &YoungDiagram,
    h: &HessenbergFunction,
) -> Result<DimensionPairSet> {
    dimension_pairs(&fixed_point_filling(w, shape, h)?, h)
}

/// Dimension of the affine cell of `w`: its number of dimension pairs.
pub fn degree(w: &Permutation, shape: &YoungDiagram, h: &HessenbergFunction) -> Result<usize> {
    Ok(fixed_point_dimension_pairs(w, shape, h)?.len())
}

/// Top-parts vector of the fixed point `w`.
pub fn fixed_point_top_parts(
    w: &Permutation,
    shape: &YoungDiagram,
    h: &HessenbergFunction,
) -> Result<TopParts> {
    top_parts(&fixed_point_dimension_pairs(w, shape, h)?, w.n())
}

/// A reduced word for `roll(w)`: the reversed omega word.
pub fn rolldown_word(
    w: &Permutation,
    shape: &YoungDiagram,
    h: &HessenbergFunction,
) -> Result<ReducedWord> {
    let x = fixed_point_top_parts(w, shape, h)?;
    let mut letters = omega_word(&x).letters().to_vec();
    letters.reverse();
    ReducedWord::new(Word::new(w.n(), letters)?)
}

/// `roll(w) = omega(x)^{-1}`.
pub fn rolldown(w: &Permutation, shape: &YoungDiagram, h: &HessenbergFunction) -> Result<Permutation> {
    Ok(rolldown_word(w, shape, h)?.product())
}

/// Map from fixed point to its rolldown, ordered by one-line notation.
pub type RolldownTable = BTreeMap<Permutation, Permutation>;

pub fn rolldown_table(shape: &YoungDiagram, h: &HessenbergFunction) -> Result<RolldownTable> {
    fixed_points(shape, h)?
        .into_par_iter()
        .map(|w| rolldown(&w, shape, h).map(|r| (w, r)))
        .collect()
}

/// `b_k` = number of fixed points with exactly `k` dimension pairs. Trailing
/// zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Vec::new();
        for d in degrees {
            if b.len() <= d {
                b.resize(d + 1, 0);
            }
            b[d] += 1;
        }
        BettiVector(b)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn betti_numbers(shape: &YoungDiagram, h: &HessenbergFunction) -> Result<BettiVector> {
    let degrees = enumerate_permissible(shape, h)?
        .par_iter()
        .map(|f| dimension_pairs(f, h).map(|dp| dp.len()))
        .collect::<Result<Vec<_>>>()?;
    Ok(BettiVector::from_degrees(degrees))
}

/// Two fixed points sharing a rolldown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collision {
    pub first: Permutation,
    pub second: Permutation,
    pub rolldown: Permutation,
}

/// Outcome of the three pinball success conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PinballReport {
    pub fixed_points: usize,
    pub injective: bool,
    pub collisions: Vec<Collision>,
    pub bruhat_decreasing: bool,
    /// Pairs `(w, roll(w))` with `roll(w)` not below `w`.
    pub bruhat_violations: Vec<(Permutation, Permutation)>,
    pub betti_match: bool,
    pub betti: BettiVector,
    pub rolldown_betti: BettiVector,
}

impl PinballReport {
    pub fn passed(&self) -> bool {
        self.injective && self.bruhat_decreasing && self.betti_match
    }

    pub fn checks(&self) -> Vec<Check> {
        let n = self.fixed_points;
        vec![
            Check::from_failures(
                "rolldown is injective",
                n,
                self.collisions
                    .iter()
                    .map(|c| format!("roll({}) = roll({}) = {}", c.first, c.second, c.rolldown))
                    .collect(),
            ),
            Check::from_failures(
                "roll(w) <= w in Bruhat order",
                n,
                self.bruhat_violations
                    .iter()
                    .map(|(w, r)| format!("roll({w}) = {r} is not below {w}"))
                    .collect(),
            ),
            Check::from_failures(
                "Betti numbers match rolldown lengths",
                self.betti.0.len().max(self.rolldown_betti.0.len()),
                if self.betti_match {
                    vec![]
                } else {
                    vec![format!("betti {} vs rolldown lengths {}", self.betti, self.rolldown_betti)]
                },
            ),
        ]
    }
}

/// Runs the dimension pair algorithm on every fixed point and reports
/// injectivity, the Bruhat condition and Betti matching.
pub fn verify_pinball(shape: &YoungDiagram, h: &HessenbergFunction) -> Result<PinballReport> {
    let fillings = enumerate_permissible(shape, h)?;
    let rows: Vec<(Permutation, usize, Permutation)> = fillings
        .par_iter()
        .map(|f| {
            let w = reading_word(f).inverse();
            let dp = dimension_pairs(f, h)?;
            let x = top_parts(&dp, w.n())?;
            let roll = crate::fillings::omega(&x).inverse();
            Ok((w, dp.len(), roll))
        })
        .collect::<Result<_>>()?;

    let mut by_roll: BTreeMap<&Permutation, &Permutation> = BTreeMap::new();
    let mut collisions = Vec::new();
    for (w, _, r) in &rows {
        if let Some(prev) = by_roll.insert(r, w) {
            collisions.push(Collision {
                first: prev.clone(),
                second: w.clone(),
                rolldown: r.clone(),
            });
        }
    }
    let bruhat_violations: Vec<_> = rows
        .iter()
        .filter(|(w, _, r)| !bruhat_leq_unchecked(r, w))
        .map(|(w, _, r)| (w.clone(), r.clone()))
        .collect();
    let betti = BettiVector::from_degrees(rows.iter().map(|(_, d, _)| *d));
    let rolldown_betti = BettiVector::from_degrees(rows.iter().map(|(_, _, r)| r.length()));

    Ok(PinballReport {
        fixed_points: rows.len(),
        injective: collisions.is_empty(),
        collisions,
        bruhat_decreasing: bruhat_violations.is_empty(),
        bruhat_violations,
        betti_match: betti == rolldown_betti,
        betti,
        rolldown_betti,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn h334_5() -> HessenbergFunction {
        "3,3,4,5,5".parse().unwrap()
    }

    #[test]
    fn rolldown_example() {
        let shape = YoungDiagram::single_row(5);
        let r = rolldown(&p("43215"), &shape, &h334_5()).unwrap();
        assert_eq!(r, Word::new(5, vec![3, 1, 2, 1]).unwrap().product());
        assert_eq!(
            rolldown_word(&p("43215"), &shape, &h334_5()).unwrap().letters(),
            &[3, 1, 2, 1]
        );
        assert_eq!(degree(&p("43215"), &shape, &h334_5()).unwrap(), 4);
        assert!(rolldown(&Permutation::identity(5), &shape, &h334_5())
            .unwrap()
            .is_identity());
    }

    #[test]
    fn non_fixed_point_names_adjacency() {
        let shape = YoungDiagram::single_row(5);
        let err = rolldown(&p("23415").inverse(), &shape, &h334_5()).unwrap_err();
        assert_eq!(
            err,
            Error::NotFixedPoint {
                perm: p("23415").inverse().to_string(),
                left: 4,
                right: 1,
                bound: 3
            }
        );
    }

    #[test]
    fn betti_examples() {
        let shape = YoungDiagram::single_row(4);
        assert_eq!(
            betti_numbers(&shape, &HessenbergFunction::peterson(4)).unwrap().0,
            vec![1, 3, 3, 1]
        );
        let full = betti_numbers(&shape, &HessenbergFunction::full(4)).unwrap();
        assert_eq!(full.0, vec![1, 3, 5, 6, 5, 3, 1]);
        let one = YoungDiagram::single_row(1);
        assert_eq!(betti_numbers(&one, &HessenbergFunction::full(1)).unwrap().0, vec![1]);
    }

    #[test]
    fn pinball_passes_small_cases() {
        for n in 4..=5 {
            let h: HessenbergFunction = crate::hess334::h334(n).unwrap();
            let report = verify_pinball(&YoungDiagram::single_row(n), &h).unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.betti.total(), report.fixed_points);
        }
        let springer = verify_pinball(&"2,2".parse().unwrap(), &HessenbergFunction::identity(4)).unwrap();
        assert!(springer.injective);
    }

    #[test]
    fn table_is_sorted_and_complete() {
        let shape = YoungDiagram::single_row(5);
        let table = rolldown_table(&shape, &h334_5()).unwrap();
        assert_eq!(table.len(), 24);
        assert_eq!(table[&p("43215")], Word::new(5, vec![3, 1, 2, 1]).unwrap().product());
    }
}
