//! Brute-force reference implementations used to cross-check the library.
//! Permutations here are plain `Vec<usize>` in one-line notation.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use hesspin::Permutation;

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn to_vec(w: &Permutation) -> Vec<usize> {
    w.one_line()
}

pub fn from_vec(v: Vec<usize>) -> Permutation {
    Permutation::new(v).unwrap()
}

/// All permutations of `1..=n` (order irrelevant).
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}

/// `i -> u(v(i))`.
pub fn compose(u: &[usize], v: &[usize]) -> Vec<usize> {
    v.iter().map(|&j| u[j - 1]).collect()
}

pub fn inverse(w: &[usize]) -> Vec<usize> {
    let mut out = vec![0; w.len()];
    for (i, &x) in w.iter().enumerate() {
        out[x - 1] = i + 1;
    }
    out
}

/// Transposition matrix product: `s_{b_1} * ... * s_{b_k}` as functions.
pub fn word_product(n: usize, letters: &[usize]) -> Vec<usize> {
    let mut w: Vec<usize> = (1..=n).collect();
    for &b in letters {
        let mut s: Vec<usize> = (1..=n).collect();
        s.swap(b - 1, b);
        w = compose(&w, &s);
    }
    w
}

pub fn inversions(w: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

/// Bruhat order from its definition: `v <= w` iff `v` is reached from `w`
/// by repeatedly multiplying by transpositions that lower the length.
pub fn bruhat_by_definition(v: &[usize], w: &[usize]) -> bool {
    let target_len = inversions(v);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut stack = vec![w.to_vec()];
    while let Some(x) = stack.pop() {
        if x == v {
            return true;
        }
        if !seen.insert(x.clone()) {
            continue;
        }
        let lx = inversions(&x);
        for i in 0..x.len() {
            for j in i + 1..x.len() {
                if x[i] > x[j] {
                    let mut y = x.clone();
                    y.swap(i, j);
                    if inversions(&y) < lx && inversions(&y) >= target_len {
                        stack.push(y);
                    }
                }
            }
        }
    }
    false
}

/// Permissibility of a single-row filling: every adjacency `k | j` has `k <= h(j)`.
pub fn row_permissible(f: &[usize], h: &[usize]) -> bool {
    f.windows(2).all(|p| p[0] <= h[p[1] - 1])
}

/// Fixed points of the regular nilpotent variety: `w` whose inverse is permissible.
pub fn fixed_points(n: usize, h: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = all_perms(n)
        .into_iter()
        .filter(|f| row_permissible(f, h))
        .map(|f| inverse(&f))
        .collect();
    out.sort();
    out
}

/// Dimension pairs of a single-row filling.
pub fn row_dimension_pairs(f: &[usize], h: &[usize]) -> Vec<(usize, usize)> {
    let n = f.len();
    let mut out = Vec::new();
    for p in 0..n {
        let a = f[p];
        for &b in &f[..p] {
            if b > a && (p + 1 == n || b <= h[f[p + 1] - 1]) {
                out.push((a, b));
            }
        }
    }
    out.sort();
    out
}

/// `roll(w)` computed from scratch for the single-row diagram.
pub fn rolldown(w: &[usize], h: &[usize]) -> Vec<usize> {
    let n = w.len();
    let f = inverse(w);
    let mut x = vec![0; n + 1];
    for (_, b) in row_dimension_pairs(&f, h) {
        x[b] += 1;
    }
    let mut letters = Vec::new();
    for (ell, &count) in x.iter().enumerate().skip(2) {
        for k in 0..count {
            letters.push(ell - 1 - k);
        }
    }
    inverse(&word_product(n, &letters))
}

pub fn h334(n: usize) -> Vec<usize> {
    (1..=n).map(|i| if i <= 2 { 3 } else { (i + 1).min(n) }).collect()
}

pub fn peterson(n: usize) -> Vec<usize> {
    (1..=n).map(|i| (i + 1).min(n)).collect()
}

/// Polynomial in `t_1..t_n` with `i128` coefficients, keyed by exponent vector.
pub type Poly = BTreeMap<Vec<u32>, i128>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_add(a: &mut Poly, b: &Poly) {
    for (e, c) in b {
        *a.entry(e.clone()).or_insert(0) += c;
    }
    a.retain(|_, c| *c != 0);
}

/// The root at position `j` (0-based): the prefix permutation, acting on
/// variable indices, applied to `t_{b_j} - t_{b_j + 1}`.
fn root(n: usize, letters: &[usize], j: usize) -> Poly {
    // Act by swapping variable names one letter at a time, right to left.
    let (mut lo, mut hi) = (letters[j], letters[j] + 1);
    for &b in letters[..j].iter().rev() {
        let swap = |x: usize| if x == b { b + 1 } else if x == b + 1 { b } else { x };
        lo = swap(lo);
        hi = swap(hi);
    }
    let mut p = Poly::new();
    let mut e = vec![0; n];
    e[lo - 1] = 1;
    p.insert(e, 1);
    let mut e = vec![0; n];
    e[hi - 1] = 1;
    p.insert(e, -1);
    p
}

/// Billey's formula by enumerating every subset of positions.
pub fn billey_brute(v: &[usize], letters: &[usize]) -> Poly {
    let n = v.len();
    let lv = inversions(v);
    let len = letters.len();
    let mut total = Poly::new();
    if lv > len {
        return total;
    }
    let mut idx: Vec<usize> = (0..lv).collect();
    loop {
        let sub: Vec<usize> = idx.iter().map(|&j| letters[j]).collect();
        if word_product(n, &sub) == v {
            let mut term = Poly::new();
            term.insert(vec![0; n], 1);
            for &j in &idx {
                term = poly_mul(&term, &root(n, letters, j));
            }
            poly_add(&mut total, &term);
        }
        // next combination
        let mut k = lv;
        loop {
            if k == 0 {
                return total;
            }
            k -= 1;
            if idx[k] < len - lv + k {
                idx[k] += 1;
                for m in k + 1..lv {
                    idx[m] = idx[m - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Projected summands of Billey's formula, one per reduced subword.
pub fn billey_brute_summands(v: &[usize], letters: &[usize]) -> Vec<i128> {
    let n = v.len();
    let lv = inversions(v);
    let mut out = Vec::new();
    let len = letters.len();
    for mask in 0u64..(1u64 << len) {
        if mask.count_ones() as usize != lv {
            continue;
        }
        let idx: Vec<usize> = (0..len).filter(|j| mask >> j & 1 == 1).collect();
        let sub: Vec<usize> = idx.iter().map(|&j| letters[j]).collect();
        if word_product(n, &sub) == v {
            let mut c: i128 = 1;
            for &j in &idx {
                let r = root(n, letters, j);
                c *= project(&r).0;
            }
            out.push(c);
        }
    }
    out
}

/// Substitutes `t_i -> (n + 1 - i)`; returns (value, degree).
pub fn project(p: &Poly) -> (i128, u32) {
    let Some((e0, _)) = p.iter().next() else {
        return (0, 0);
    };
    let n = e0.len();
    let degree: u32 = e0.iter().sum();
    let mut total = 0i128;
    for (e, c) in p {
        let mut term = *c;
        for (i, &k) in e.iter().enumerate() {
            term *= ((n - i) as i128).pow(k);
        }
        total += term;
    }
    if total == 0 {
        (0, 0)
    } else {
        (total, degree)
    }
}

/// Reduced word obtained by bubble-sorting the one-line notation from the right.
pub fn some_reduced_word(w: &[usize]) -> Vec<usize> {
    let mut x = w.to_vec();
    let mut rev = Vec::new();
    while let Some(i) = (0..x.len().saturating_sub(1)).rev().find(|&i| x[i] > x[i + 1]) {
        x.swap(i, i + 1);
        rev.push(i + 1);
    }
    rev.reverse();
    rev
}

/// Whether `w` splits into decreasing runs of consecutive values with
/// increasing value ranges.
pub fn is_staircases(w: &[usize]) -> bool {
    let mut i = 0;
    let mut top = 0;
    while i < w.len() {
        let mut j = i;
        while j + 1 < w.len() && w[j + 1] + 1 == w[j] {
            j += 1;
        }
        if w[j] != top + 1 {
            return false;
        }
        top = w[i];
        i = j + 1;
    }
    true
}

pub fn staircase_subset(w: &[usize]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] == w[i] + 1).collect()
}

/// Class label ("P", "P321", "312", "231") of a 334-type fixed point.
pub fn class_of(w: &[usize]) -> &'static str {
    if is_staircases(w) {
        return if w.windows(3).any(|t| t == [3, 2, 1]) { "P321" } else { "P" };
    }
    let f = inverse(w);
    let p = f.windows(2).position(|t| t == [3, 1]).expect("3 1 adjacency");
    if f.get(p + 2) == Some(&2) {
        "312"
    } else {
        assert_eq!(f[0], 2, "unclassifiable {w:?}");
        "231"
    }
}

/// Associated subset, by normalizing to a staircase sequence.
pub fn subset_of(w: &[usize]) -> Vec<usize> {
    let mut x = w.to_vec();
    match class_of(w) {
        "312" => x.swap(0, 1),
        "231" => {
            let a2 = inverse(w)[1] - 1;
            for i in 2..=a2 {
                x.swap(i - 1, i);
            }
        }
        _ => {}
    }
    assert!(is_staircases(&x));
    staircase_subset(&x)
}

/// Maximal runs `[lo, hi]` of a sorted subset.
pub fn runs(a: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &x in a {
        match out.last_mut() {
            Some((_, hi)) if *hi + 1 == x => *hi = x,
            _ => out.push((x, x)),
        }
    }
    out
}

pub fn run_containing(a: &[usize], j: usize) -> Option<(usize, usize)> {
    runs(a).into_iter().find(|&(lo, hi)| lo <= j && j <= hi)
}
