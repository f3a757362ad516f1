//! Hessenberg functions, Young diagrams and their fillings, dimension pairs,
//! top-parts vectors and the bijection `omega` between top-parts vectors and
//! permutations.
//!
//! Box coordinates are `(row, column)`, 1-indexed, English notation (row 1 on
//! top). A filling's reading word reads each column bottom to top, columns
//! left to right.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Permutation, ReducedWord, Word};

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    s.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

fn join(values: impl IntoIterator<Item = usize>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A weakly increasing `h: {1..n} -> {1..n}` with `h(i) >= i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidHessenberg("empty".into()));
        }
        for (idx, &v) in values.iter().enumerate() {
            let i = idx + 1;
            if v > n {
                return Err(Error::InvalidHessenberg(format!(
                    "h({i}) = {v} exceeds n = {n} at index {i}"
                )));
            }
            if v < i {
                return Err(Error::InvalidHessenberg(format!(
                    "h({i}) = {v} violates h(i) >= i at index {i}"
                )));
            }
            if idx > 0 && v < values[idx - 1] {
                return Err(Error::InvalidHessenberg(format!(
                    "h({i}) = {v} < h({}) = {} violates h(i+1) >= h(i) at index {i}",
                    i - 1,
                    values[idx - 1],
                )));
            }
        }
        Ok(Self { values })
    }

    /// `h(i) = n` for all `i`: the full flag variety.
    pub fn full(n: usize) -> Self {
        Self { values: vec![n; n] }
    }

    /// `h(i) = i`: the Springer case.
    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n).collect(),
        }
    }

    /// `h = (2, 3, ..., n, n)`.
    pub fn peterson(n: usize) -> Self {
        Self {
            values: (1..=n).map(|i| (i + 1).min(n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h(i)` for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Pointwise `self <= other`.
    pub fn leq(&self, other: &HessenbergFunction) -> bool {
        self.n() == other.n() && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

impl TryFrom<Vec<usize>> for HessenbergFunction {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<HessenbergFunction> for Vec<usize> {
    fn from(h: HessenbergFunction) -> Self {
        h.values
    }
}

impl FromStr for HessenbergFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(self.values.iter().copied()))
    }
}

/// A Young diagram given by weakly decreasing positive row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidDiagram("no rows".into()));
        }
        if let Some(r) = rows.iter().position(|&len| len == 0) {
            return Err(Error::InvalidDiagram(format!("row {} is empty", r + 1)));
        }
        if let Some(r) = rows.windows(2).position(|p| p[1] > p[0]) {
            return Err(Error::InvalidDiagram(format!(
                "row {} is longer than row {}",
                r + 2,
                r + 1
            )));
        }
        Ok(Self { rows })
    }

    /// The single row `(n)`, the regular nilpotent shape.
    pub fn single_row(n: usize) -> Self {
        Self { rows: vec![n] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn num_columns(&self) -> usize {
        self.rows[0]
    }

    /// Height of column `c` (1-indexed).
    pub fn column_len(&self, c: usize) -> usize {
        self.rows.iter().take_while(|&&len| len >= c).count()
    }

    pub fn is_single_row(&self) -> bool {
        self.rows.len() == 1
    }

    /// Boxes in reading order: columns left to right, each bottom to top.
    pub fn reading_order(&self) -> Vec<(usize, usize)> {
        (1..=self.num_columns())
            .flat_map(|c| (1..=self.column_len(c)).rev().map(move |r| (r, c)))
            .collect()
    }
}

impl TryFrom<Vec<usize>> for YoungDiagram {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<YoungDiagram> for Vec<usize> {
    fn from(d: YoungDiagram) -> Self {
        d.rows
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(self.rows.iter().copied()))
    }
}

/// A bijective placement of `1..=n` into the boxes of a Young diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Filling {
    diagram: YoungDiagram,
    rows: Vec<Vec<usize>>,
}

impl Filling {
    pub fn new(diagram: YoungDiagram, rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        if shape != diagram.rows {
            return Err(Error::InvalidFilling(format!(
                "row lengths {shape:?} do not match diagram {diagram}"
            )));
        }
        let n = diagram.n();
        let mut seen = vec![false; n];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n {
                return Err(Error::InvalidFilling(format!("entry {x} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidFilling(format!("entry {x} repeated")));
            }
        }
        Ok(Self { diagram, rows })
    }

    /// Infers the diagram from the row lengths.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let diagram = YoungDiagram::new(rows.iter().map(Vec::len).collect())?;
        Self::new(diagram, rows)
    }

    pub fn single_row(entries: Vec<usize>) -> Result<Self> {
        Self::from_rows(vec![entries])
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.diagram.n()
    }

    /// Entry in box `(row, column)`, if the box exists.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// Box `(row, column)` containing `value`.
    pub fn box_of(&self, value: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&x| x == value).map(|c| (r + 1, c + 1))
        })
    }

    /// Horizontal adjacencies `(k, j)` with `k` directly left of `j`.
    pub fn adjacencies(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .flat_map(|row| row.windows(2).map(|p| (p[0], p[1])))
    }
}

impl fmt::Display for Filling {
    /// Rows separated by `/`; entries concatenated when `n <= 9`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { " " };
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

fn check_sizes(f: &Filling, h: &HessenbergFunction) -> Result<()> {
    if f.n() != h.n() {
        return Err(Error::SizeMismatch {
            left: f.n(),
            right: h.n(),
        });
    }
    Ok(())
}

impl TryFrom<Vec<Vec<usize>>> for Filling {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<Filling> for Vec<Vec<usize>> {
    fn from(f: Filling) -> Self {
        f.rows
    }
}

/// First horizontal adjacency `(k, j)` with `k > h(j)`, if any.
pub fn first_violation(f: &Filling, h: &HessenbergFunction) -> Result<Option<(usize, usize)>> {
    check_sizes(f, h)?;
    Ok(f.adjacencies().find(|&(k, j)| k > h.get(j)))
}

/// True iff every horizontal adjacency `k | j` has `k <= h(j)`.
pub fn is_permissible(f: &Filling, h: &HessenbergFunction) -> Result<bool> {
    Ok(first_violation(f, h)?.is_none())
}

/// All `h`-permissible fillings of `shape`, in lexicographic order of reading word.
pub fn enumerate_permissible(shape: &YoungDiagram, h: &HessenbergFunction) -> Result<Vec<Filling>> {
    let n = shape.n();
    if n != h.n() {
        return Err(Error::SizeMismatch {
            left: n,
            right: h.n(),
        });
    }
    let order = shape.reading_order();
    // Index in reading order of the box directly left of each box.
    let left_of: Vec<Option<usize>> = order
        .iter()
        .map(|&(r, c)| (c > 1).then(|| order.iter().position(|&b| b == (r, c - 1)).unwrap()))
        .collect();

    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    extend(h, &left_of, &mut word, &mut used, &mut |w| out.push(w.to_vec()));
    out.into_iter()
        .map(|w| fill_by_reading_word(&w, shape))
        .collect()
}

fn extend(
    h: &HessenbergFunction,
    left_of: &[Option<usize>],
    word: &mut Vec<usize>,
    used: &mut [bool],
    emit: &mut impl FnMut(&[usize]),
) {
    let pos = word.len();
    if pos == left_of.len() {
        emit(word);
        return;
    }
    for v in 1..used.len() {
        if used[v] || left_of[pos].is_some_and(|l| word[l] > h.get(v)) {
            continue;
        }
        used[v] = true;
        word.push(v);
        extend(h, left_of, word, used, emit);
        word.pop();
        used[v] = false;
    }
}

fn fill_by_reading_word(word: &[usize], shape: &YoungDiagram) -> Result<Filling> {
    let mut rows: Vec<Vec<usize>> = shape.rows.iter().map(|&len| vec![0; len]).collect();
    for (&(r, c), &x) in shape.reading_order().iter().zip(word) {
        rows[r - 1][c - 1] = x;
    }
    Filling::new(shape.clone(), rows)
}

/// The permutation whose one-line notation is the reading word of `f`.
pub fn reading_word(f: &Filling) -> Permutation {
    let word: Vec<usize> = f
        .diagram
        .reading_order()
        .into_iter()
        .map(|(r, c)| f.rows[r - 1][c - 1])
        .collect();
    Permutation::new(word).expect("filling entries form a bijection")
}

/// Inverse of [`reading_word`]: the filling of `shape` whose reading word is `w`.
pub fn filling_from_reading_word(w: &Permutation, shape: &YoungDiagram) -> Result<Filling> {
    if w.n() != shape.n() {
        return Err(Error::SizeMismatch {
            left: w.n(),
            right: shape.n(),
        });
    }
    fill_by_reading_word(&w.one_line(), shape)
}

/// The filling attached to the fixed point `w`: the filling whose reading
/// word is `w^{-1}`. The correspondence with torus fixed points is only
/// meaningful for the regular nilpotent shape `(n)`; other shapes are purely
/// combinatorial.
pub fn filling_of_fixed_point(w: &Permutation, shape: &YoungDiagram) -> Result<Filling> {
    filling_from_reading_word(&w.inverse(), shape)
}

/// A set of dimension pairs `(a, b)`, `a < b`, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimensionPairSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl DimensionPairSet {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self {
            pairs: pairs.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }
}

impl fmt::Display for DimensionPairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(a, b)| format!("({a},{b})")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// All pairs `(a, b)` with `b > a` such that `b` sits below `a` in its
/// column or anywhere in a column strictly to the left, and, when a box `c`
/// sits directly right of `a`, `b <= h(c)`.
pub fn dimension_pairs(f: &Filling, h: &HessenbergFunction) -> Result<DimensionPairSet> {
    check_sizes(f, h)?;
    let mut pairs = BTreeSet::new();
    let boxes: Vec<(usize, usize, usize)> = f
        .rows
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &x)| (r + 1, c + 1, x)))
        .collect();
    for &(ra, ca, a) in &boxes {
        let bound = f.entry(ra, ca + 1).map_or(usize::MAX, |c| h.get(c));
        for &(rb, cb, b) in &boxes {
            let placed = (cb == ca && rb > ra) || cb < ca;
            if b > a && placed && b <= bound {
                pairs.insert((a, b));
            }
        }
    }
    Ok(DimensionPairSet { pairs })
}

/// Top-parts vector `x = (x_2, ..., x_n)` with `0 <= x_l <= l - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct TopParts {
    x: Vec<usize>,
}

impl TopParts {
    /// `x` lists `x_2, ..., x_n`, so `n = x.len() + 1`.
    pub fn new(x: Vec<usize>) -> Result<Self> {
        for (idx, &value) in x.iter().enumerate() {
            let ell = idx + 2;
            if value > ell - 1 {
                return Err(Error::TopPartsOutOfRange { ell, value });
            }
        }
        Ok(Self { x })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            x: vec![0; n.saturating_sub(1)],
        }
    }

    pub fn n(&self) -> usize {
        self.x.len() + 1
    }

    /// `x_l` for `2 <= l <= n`.
    pub fn get(&self, ell: usize) -> usize {
        self.x[ell - 2]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.x
    }

    pub fn total(&self) -> usize {
        self.x.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &TopParts) -> bool {
        self.x.len() == other.x.len() && self.x.iter().zip(&other.x).all(|(a, b)| a <= b)
    }

    /// Every valid vector for `S_n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<TopParts> {
        let mut out = vec![Vec::new()];
        for ell in 2..=n {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..ell).map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(|x| TopParts { x }).collect()
    }
}

impl TryFrom<Vec<usize>> for TopParts {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<TopParts> for Vec<usize> {
    fn from(t: TopParts) -> Self {
        t.x
    }
}

impl fmt::Display for TopParts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(self.x.iter().copied()))
    }
}

/// `x_l` = number of pairs with top part `l`.
pub fn top_parts(dp: &DimensionPairSet, n: usize) -> Result<TopParts> {
    let mut x = vec![0; n.saturating_sub(1)];
    for (_, b) in dp.iter() {
        if b < 2 || b > n {
            return Err(Error::IndexOutOfRange { index: b, len: n });
        }
        x[b - 2] += 1;
    }
    TopParts::new(x)
}

/// The reduced word `u_2(x) u_3(x) ... u_n(x)` with
/// `u_l(x) = s_{l-1} s_{l-2} ... s_{l-x_l}`.
pub fn omega_word(x: &TopParts) -> ReducedWord {
    let letters: Vec<usize> = (2..=x.n())
        .flat_map(|ell| (ell - x.get(ell)..ell).rev())
        .collect();
    ReducedWord::new(Word::new(x.n(), letters).expect("letters below n"))
        .expect("omega word is reduced")
}

pub fn omega(x: &TopParts) -> Permutation {
    omega_word(x).product()
}

/// `x_l` = number of inversions of `w` whose larger value is `l`.
pub fn omega_inverse(w: &Permutation) -> TopParts {
    let n = w.n();
    let mut x = vec![0; n.saturating_sub(1)];
    for (_, b) in w.inversion_pairs() {
        x[b - 2] += 1;
    }
    TopParts { x }
}
