//! Permutations of `{1, ..., n}` in one-line notation, words in the simple
//! transpositions `s_i = (i, i+1)`, and Bruhat order on `S_n`.
//!
//! Products follow function composition: `(u * v)(i) = u(v(i))`. Multiplying
//! on the right by `s_i` swaps the entries in positions `i` and `i + 1` of the
//! one-line notation, so the word `s_1 s_2` is the permutation `231`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported rank. Entries are stored as `u8`.
pub const MAX_N: usize = u8::MAX as usize;

/// An element of `S_n`, stored by its one-line notation `w(1) w(2) ... w(n)`.
///
/// The derived ordering is lexicographic on the one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation (values `1..=n`).
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line notation".into()));
        }
        if n > MAX_N {
            return Err(Error::InvalidPermutation(format!("n = {n} exceeds {MAX_N}")));
        }
        let mut seen = vec![false; n];
        for &x in &one_line {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!(
                    "entry {x} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("entry {x} repeated")));
            }
        }
        Ok(Self {
            one_line: one_line.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_N).contains(&n), "n = {n} out of range");
        Self {
            one_line: (1..=n as u8).collect(),
        }
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::LetterOutOfRange { letter: i, n });
        }
        Ok(Self::identity(n).mul_simple_right(i))
    }

    /// The longest element `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        let mut w = Self::identity(n);
        w.one_line.reverse();
        w
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> usize {
        self.one_line[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.one_line.iter().map(|&x| x as usize).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.one_line.iter().map(|&x| x as usize)
    }

    /// Position of `value` in the one-line notation, i.e. `w^{-1}(value)`.
    pub fn position(&self, value: usize) -> usize {
        self.one_line
            .iter()
            .position(|&x| x as usize == value)
            .expect("value in range")
            + 1
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// `self * other`, the permutation `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            one_line: other
                .one_line
                .iter()
                .map(|&j| self.one_line[j as usize - 1])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.one_line.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u8;
        }
        Permutation { one_line: inv }
    }

    /// `w * s_i`: swaps positions `i` and `i + 1`.
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        let mut w = self.clone();
        w.one_line.swap(i - 1, i);
        w
    }

    /// `s_i * w`: swaps the values `i` and `i + 1`.
    pub fn mul_simple_left(&self, i: usize) -> Permutation {
        let mut w = self.clone();
        for x in w.one_line.iter_mut() {
            if *x as usize == i {
                *x += 1;
            } else if *x as usize == i + 1 {
                *x -= 1;
            }
        }
        w
    }

    /// True iff `w(i) > w(i + 1)`, i.e. `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.one_line[i - 1] > self.one_line[i]
    }

    /// True iff `l(s_i w) < l(w)`, i.e. `i + 1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.position(i + 1) < self.position(i)
    }

    /// Bruhat length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&y| y < w[i]).count())
            .sum()
    }

    /// Inversions as value pairs `(a, b)` with `a < b` and `b` appearing
    /// before `a` in the one-line notation. Sorted lexicographically.
    pub fn inversion_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &b) in self.one_line.iter().enumerate() {
            for &a in &self.one_line[i + 1..] {
                if a < b {
                    out.push((a as usize, b as usize));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn descents(&self) -> DescentSet {
        DescentSet {
            n: self.n(),
            positions: (1..self.n()).filter(|&i| self.has_right_descent(i)).collect(),
        }
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Permutation::identity(n)),
        }
    }

    /// Whether the one-line notation contains `pattern` as a contiguous string.
    pub fn contains_string(&self, pattern: &[usize]) -> bool {
        self.one_line
            .windows(pattern.len())
            .any(|win| win.iter().zip(pattern).all(|(&x, &p)| x as usize == p))
    }
}

impl fmt::Display for Permutation {
    /// Concatenated digits when `n <= 9` (e.g. `43215`), space separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for x in &self.one_line {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.one_line.iter().map(|x| x.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `43215`, `4,3,2,1,5` or `4 3 2 1 5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("unexpected character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        Permutation::new(v).map_err(serde::de::Error::custom)
    }
}

/// Lexicographic iterator over `S_n`.
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.one_line.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(Permutation { one_line: succ });
        }
        Some(current)
    }
}

/// Advances `v` to its lexicographic successor; false when `v` was the last.
pub(crate) fn next_lexicographic<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[i] < v[j]).expect("pivot");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Right descent set `D_R(w) = { i : w(i) > w(i+1) }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentSet {
    pub n: usize,
    pub positions: Vec<usize>,
}

impl DescentSet {
    pub fn contains(&self, i: usize) -> bool {
        self.positions.binary_search(&i).is_ok()
    }
}

/// A word `s_{b_1} s_{b_2} ... s_{b_k}` in the simple transpositions of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WordRecord")]
pub struct Word {
    n: usize,
    letters: Vec<usize>,
}

#[derive(Deserialize)]
struct WordRecord {
    n: usize,
    letters: Vec<usize>,
}

impl TryFrom<WordRecord> for Word {
    type Error = Error;
    fn try_from(r: WordRecord) -> Result<Self> {
        Word::new(r.n, r.letters)
    }
}

impl Word {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&b| b == 0 || b >= n) {
            return Err(Error::LetterOutOfRange { letter: bad, n });
        }
        Ok(Self { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            letters: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn product(&self) -> Permutation {
        self.letters
            .iter()
            .fold(Permutation::identity(self.n), |w, &b| w.mul_simple_right(b))
    }

    pub fn is_reduced(&self) -> bool {
        self.product().length() == self.len()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { n: self.n, letters })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.letters.iter().map(|b| format!("s_{b}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[{self}]")
    }
}

/// A word whose product has length equal to the number of letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Word", into = "Word")]
pub struct ReducedWord(Word);

impl TryFrom<Word> for ReducedWord {
    type Error = Error;
    fn try_from(w: Word) -> Result<Self> {
        ReducedWord::new(w)
    }
}

impl From<ReducedWord> for Word {
    fn from(r: ReducedWord) -> Self {
        r.0
    }
}

impl ReducedWord {
    pub fn new(word: Word) -> Result<Self> {
        if !word.is_reduced() {
            return Err(Error::NotReduced {
                word: word.to_string(),
            });
        }
        Ok(Self(word))
    }

    pub fn from_letters(n: usize, letters: Vec<usize>) -> Result<Self> {
        Self::new(Word::new(n, letters)?)
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn letters(&self) -> &[usize] {
        self.0.letters()
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn product(&self) -> Permutation {
        self.0.product()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Multiplies out `s_{b_1} ... s_{b_k}` and reports whether the word was reduced.
pub fn from_reduced_word(n: usize, letters: &[usize]) -> Result<(Permutation, bool)> {
    let word = Word::new(n, letters.to_vec())?;
    let w = word.product();
    let reduced = w.length() == word.len();
    Ok((w, reduced))
}

/// Reduced word built by repeatedly stripping a right descent chosen by `pick`
/// from the current descent positions (given in increasing order).
pub fn reduced_word_by(w: &Permutation, mut pick: impl FnMut(&[usize]) -> usize) -> ReducedWord {
    let mut cur = w.clone();
    let mut rev = Vec::with_capacity(w.length());
    loop {
        let descents = cur.descents().positions;
        if descents.is_empty() {
            break;
        }
        let d = pick(&descents);
        debug_assert!(descents.contains(&d));
        cur = cur.mul_simple_right(d);
        rev.push(d);
    }
    rev.reverse();
    ReducedWord(Word {
        n: w.n(),
        letters: rev,
    })
}

/// Deterministic reduced word: always strip the leftmost descent.
pub fn canonical_reduced_word(w: &Permutation) -> ReducedWord {
    reduced_word_by(w, |d| d[0])
}

/// Bruhat comparison `v <= w` by the tableau criterion: for every descent
/// `k` of `v`, the sorted prefix `v(1..k)` is entrywise at most the sorted
/// prefix `w(1..k)`.
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    if v.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    Ok(bruhat_leq_unchecked(v, w))
}

pub(crate) fn bruhat_leq_unchecked(v: &Permutation, w: &Permutation) -> bool {
    let n = v.n();
    let mut pv: Vec<u8> = Vec::with_capacity(n);
    let mut pw: Vec<u8> = Vec::with_capacity(n);
    for k in 1..n {
        let (x, y) = (v.one_line[k - 1], w.one_line[k - 1]);
        let at = pv.partition_point(|&e| e < x);
        pv.insert(at, x);
        let at = pw.partition_point(|&e| e < y);
        pw.insert(at, y);
        if v.one_line[k - 1] > v.one_line[k] && pv.iter().zip(&pw).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

/// Bruhat comparison by the subword property: `v <= w` iff some subword of a
/// fixed reduced word of `w` is a reduced word for `v`. Exponential in the
/// worst case; intended for cross-checking [`bruhat_leq`] on small `n`.
pub fn bruhat_leq_oracle(v: &Permutation, w: &Permutation) -> Result<bool> {
    if v.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    let word = canonical_reduced_word(w);
    let mut dead = HashSet::new();
    Ok(subword_search(word.letters(), 0, v.clone(), &mut dead))
}

// `rest` is what remains to be spelled; letter b can start it iff s_b is a
// left descent of `rest`.
fn subword_search(
    letters: &[usize],
    j: usize,
    rest: Permutation,
    dead: &mut HashSet<(usize, Permutation)>,
) -> bool {
    if rest.is_identity() {
        return true;
    }
    if rest.length() > letters.len() - j || dead.contains(&(j, rest.clone())) {
        return false;
    }
    let b = letters[j];
    let found = (rest.has_left_descent(b)
        && subword_search(letters, j + 1, rest.mul_simple_left(b), dead))
        || subword_search(letters, j + 1, rest.clone(), dead);
    if !found {
        dead.insert((j, rest));
    }
    found
}
