//! Equivariant Schubert class restrictions via Billey's formula.
//!
//! For a reduced word `b` of `w`, `sigma_v(w)` is the sum over subwords of `b`
//! that are reduced words for `v` of the product of the roots `r(j, b)` at the
//! chosen positions. Projecting along the circle `t_i -> (n + 1 - i) t` turns
//! each root `t_l - t_k` into `(k - l) t`.
//!
//! Evaluation is a memoized recursion over (position, remaining permutation),
//! pruned by remaining length and by Bruhat comparison with the suffix product.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hess334;
use crate::perm::{bruhat_leq_unchecked, canonical_reduced_word, Permutation, ReducedWord};
use crate::pinball::RolldownTable;
use crate::poly::MultivariatePolynomial;
use crate::report::Check;

/// The root `t_lower - t_upper`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub lower: usize,
    pub upper: usize,
}

impl Root {
    pub fn polynomial(&self, n: usize) -> MultivariatePolynomial {
        &MultivariatePolynomial::variable(n, self.lower) - &MultivariatePolynomial::variable(n, self.upper)
    }

    /// Coefficient of `t` after projecting to the circle.
    pub fn projected(&self) -> i64 {
        self.upper as i64 - self.lower as i64
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{} - t{}", self.lower, self.upper)
    }
}

/// `coefficient * t^degree`; zero is stored as `(0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct S1Value {
    coefficient: BigInt,
    degree: u32,
}

impl S1Value {
    pub fn new(coefficient: impl Into<BigInt>, degree: u32) -> Self {
        let coefficient = coefficient.into();
        let degree = if coefficient.is_zero() { 0 } else { degree };
        Self { coefficient, degree }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn coefficient(&self) -> &BigInt {
        &self.coefficient
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }
}

impl fmt::Display for S1Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            _ if self.is_zero() => f.write_str("0"),
            0 => write!(f, "{}", self.coefficient),
            1 => write!(f, "{}*t", self.coefficient),
            d => write!(f, "{}*t^{d}", self.coefficient),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct S1Record {
    coeff: String,
    deg: u32,
}

impl Serialize for S1Value {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        S1Record {
            coeff: self.coefficient.to_string(),
            deg: self.degree,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for S1Value {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = S1Record::deserialize(d)?;
        let c: BigInt = rec.coeff.parse().map_err(serde::de::Error::custom)?;
        Ok(S1Value::new(c, rec.deg))
    }
}

/// `r(j, b)`: the prefix `s_{b_1} ... s_{b_{j-1}}` applied to `t_{b_j} - t_{b_j + 1}`.
pub fn billey_r(j: usize, b: &ReducedWord) -> Result<Root> {
    if j == 0 || j > b.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: b.len(),
        });
    }
    Ok(roots(b)[j - 1])
}

/// All roots `r(1, b), ..., r(len b, b)`.
pub fn roots(b: &ReducedWord) -> Vec<Root> {
    let mut prefix = Permutation::identity(b.n());
    b.letters()
        .iter()
        .map(|&i| {
            let r = Root {
                lower: prefix.get(i),
                upper: prefix.get(i + 1),
            };
            prefix = prefix.mul_simple_right(i);
            r
        })
        .collect()
}

fn check_word(w: &Permutation, b: &ReducedWord) -> Result<()> {
    if b.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: b.n(),
            right: w.n(),
        });
    }
    let product = b.product();
    if &product != w {
        return Err(Error::WordMismatch {
            word: b.to_string(),
            product: product.to_string(),
            expected: w.to_string(),
        });
    }
    Ok(())
}

trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn is_zero_value(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
}

impl Ring for MultivariatePolynomial {
    fn zero_like(&self) -> Self {
        MultivariatePolynomial::zero(self.nvars())
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

struct Evaluator<'a, T: Ring> {
    letters: &'a [usize],
    weights: Vec<T>,
    one: T,
    suffixes: Vec<Permutation>,
    memo: HashMap<(usize, Permutation), T>,
}

impl<'a, T: Ring> Evaluator<'a, T> {
    fn new(b: &'a ReducedWord, weights: Vec<T>, one: T) -> Self {
        let letters = b.letters();
        let mut suffixes = vec![Permutation::identity(b.n()); letters.len() + 1];
        for j in (0..letters.len()).rev() {
            suffixes[j] = suffixes[j + 1].mul_simple_left(letters[j]);
        }
        Self {
            letters,
            weights,
            one,
            suffixes,
            memo: HashMap::new(),
        }
    }

    // Sum over subwords of letters[j..] spelling `rest`.
    fn eval(&mut self, j: usize, rest: Permutation) -> T {
        if rest.is_identity() {
            return self.one.clone();
        }
        if rest.length() > self.letters.len() - j || !bruhat_leq_unchecked(&rest, &self.suffixes[j]) {
            return self.one.zero_like();
        }
        let key = (j, rest);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let rest = &key.1;
        let b = self.letters[j];
        let skip = self.eval(j + 1, rest.clone());
        let value = if rest.has_left_descent(b) {
            let take = self.eval(j + 1, rest.mul_simple_left(b));
            if take.is_zero_value() {
                skip
            } else {
                skip.plus(&self.weights[j].times(&take))
            }
        } else {
            skip
        };
        self.memo.insert(key, value.clone());
        value
    }
}

/// `sigma_v(w)` computed from the reduced word `b` of `w`.
pub fn sigma_restriction(v: &Permutation, w: &Permutation, b: &ReducedWord) -> Result<MultivariatePolynomial> {
    check_word(w, b)?;
    if v.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    let n = w.n();
    let weights = roots(b).iter().map(|r| r.polynomial(n)).collect();
    Ok(Evaluator::new(b, weights, MultivariatePolynomial::one(n)).eval(0, v.clone()))
}

/// Substitutes `t_i -> (n + 1 - i) t` in a homogeneous polynomial.
pub fn project_s1(p: &MultivariatePolynomial) -> Result<S1Value> {
    if p.is_zero() {
        return Ok(S1Value::zero());
    }
    let degree = p.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
    let n = p.nvars();
    let values: Vec<BigInt> = (1..=n).map(|i| BigInt::from(n + 1 - i)).collect();
    Ok(S1Value::new(p.evaluate(&values), degree))
}

/// `p_v(w)` evaluated directly on projected roots along the word `b`.
pub fn p_restriction_with_word(v: &Permutation, w: &Permutation, b: &ReducedWord) -> Result<S1Value> {
    check_word(w, b)?;
    if v.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    let weights = roots(b).iter().map(|r| BigInt::from(r.projected())).collect();
    let c = Evaluator::new(b, weights, BigInt::one()).eval(0, v.clone());
    Ok(S1Value::new(c, v.length() as u32))
}

/// The word used for `w`: the catalog word for fixed points of the 334-type
/// Hessenberg variety, the canonical word otherwise.
pub fn preferred_word(w: &Permutation) -> ReducedWord {
    if w.n() >= 4 && hess334::is_334_fixed_point(w).unwrap_or(false) {
        if let Ok(b) = hess334::catalog_reduced_word(w) {
            return b;
        }
    }
    canonical_reduced_word(w)
}

pub fn p_restriction(v: &Permutation, w: &Permutation) -> Result<S1Value> {
    p_restriction_with_word(v, w, &preferred_word(w))
}

/// One term of Billey's formula: chosen positions (1-indexed) and the
/// projected product of their roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub positions: Vec<usize>,
    pub value: S1Value,
}

/// Lists every subword of `b` that is a reduced word for `v`, with its
/// projected value.
pub fn billey_summands(v: &Permutation, b: &ReducedWord) -> Result<Vec<Summand>> {
    if v.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: v.n(),
            right: b.n(),
        });
    }
    let letters = b.letters();
    let weights: Vec<i64> = roots(b).iter().map(Root::projected).collect();
    let mut suffixes = vec![Permutation::identity(b.n()); letters.len() + 1];
    for j in (0..letters.len()).rev() {
        suffixes[j] = suffixes[j + 1].mul_simple_left(letters[j]);
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let degree = v.length() as u32;
    walk(letters, &suffixes, 0, v.clone(), &mut chosen, &mut |pos| {
        let c: BigInt = pos.iter().map(|&j| BigInt::from(weights[j])).product();
        out.push(Summand {
            positions: pos.iter().map(|j| j + 1).collect(),
            value: S1Value::new(c, degree),
        });
    });
    Ok(out)
}

fn walk(
    letters: &[usize],
    suffixes: &[Permutation],
    j: usize,
    rest: Permutation,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if rest.is_identity() {
        emit(chosen);
        return;
    }
    if rest.length() > letters.len() - j || !bruhat_leq_unchecked(&rest, &suffixes[j]) {
        return;
    }
    let b = letters[j];
    if rest.has_left_descent(b) {
        chosen.push(j);
        walk(letters, suffixes, j + 1, rest.mul_simple_left(b), chosen, emit);
        chosen.pop();
    }
    walk(letters, suffixes, j + 1, rest, chosen, emit);
}

/// Rows and columns are fixed points in one-line order; entry `(v, w)` is
/// `p_{roll(v)}(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionMatrix {
    pub fixed_points: Vec<Permutation>,
    pub rolldowns: Vec<Permutation>,
    pub entries: Vec<Vec<S1Value>>,
}

impl RestrictionMatrix {
    pub fn size(&self) -> usize {
        self.fixed_points.len()
    }

    pub fn get(&self, row: usize, col: usize) -> &S1Value {
        &self.entries[row][col]
    }
}

fn ordered_rolldowns(fixed_points: &[Permutation], rolldowns: &RolldownTable) -> Result<(Vec<Permutation>, Vec<Permutation>)> {
    let mut labels = fixed_points.to_vec();
    labels.sort();
    labels.dedup();
    let rolls = labels
        .iter()
        .map(|w| {
            rolldowns
                .get(w)
                .cloned()
                .ok_or_else(|| Error::MissingRolldown(w.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((labels, rolls))
}

pub fn restriction_matrix(fixed_points: &[Permutation], rolldowns: &RolldownTable) -> Result<RestrictionMatrix> {
    let (labels, rolls) = ordered_rolldowns(fixed_points, rolldowns)?;
    let words: Vec<ReducedWord> = labels.par_iter().map(preferred_word).collect();
    let entries = rolls
        .par_iter()
        .map(|r| {
            labels
                .iter()
                .zip(&words)
                .map(|(w, b)| p_restriction_with_word(r, w, b))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RestrictionMatrix {
        fixed_points: labels,
        rolldowns: rolls,
        entries,
    })
}

/// Full-torus version of [`restriction_matrix`]: entry `(v, w)` is `sigma_{roll(v)}(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialMatrix {
    pub fixed_points: Vec<Permutation>,
    pub rolldowns: Vec<Permutation>,
    pub entries: Vec<Vec<MultivariatePolynomial>>,
}

pub fn sigma_matrix(fixed_points: &[Permutation], rolldowns: &RolldownTable) -> Result<PolynomialMatrix> {
    let (labels, rolls) = ordered_rolldowns(fixed_points, rolldowns)?;
    let words: Vec<ReducedWord> = labels.par_iter().map(preferred_word).collect();
    let entries = rolls
        .par_iter()
        .map(|r| {
            labels
                .iter()
                .zip(&words)
                .map(|(w, b)| sigma_restriction(r, w, b))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolynomialMatrix {
        fixed_points: labels,
        rolldowns: rolls,
        entries,
    })
}

/// Checks nonzero diagonal and vanishing of `(v, w)` whenever `v` is not
/// below `w` in the supplied order.
pub fn check_upper_triangular(
    m: &RestrictionMatrix,
    leq: impl Fn(&Permutation, &Permutation) -> bool + Sync,
) -> Vec<Check> {
    let labels = &m.fixed_points;
    let diagonal: Vec<String> = (0..m.size())
        .filter(|&i| m.get(i, i).is_zero())
        .map(|i| format!("p_roll({0})({0}) = 0", labels[i]))
        .collect();
    let vanishing: Vec<String> = (0..m.size())
        .into_par_iter()
        .flat_map_iter(|i| {
            let leq = &leq;
            (0..m.size()).filter_map(move |j| {
                let entry = m.get(i, j);
                (!entry.is_zero() && !leq(&labels[i], &labels[j]))
                    .then(|| format!("p_roll({})({}) = {entry} but {} is not below {}", labels[i], labels[j], labels[i], labels[j]))
            })
        })
        .collect();
    vec![
        Check::from_failures("diagonal entries nonzero", m.size(), diagonal),
        Check::from_failures("entries vanish off the Bruhat interval", m.size() * m.size(), vanishing),
    ]
}
