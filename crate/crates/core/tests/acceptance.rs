//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::Instant;

use hesspin::fillings::{omega_word, TopParts};
use hesspin::hess334::{self, FixedPointClass};
use hesspin::perm::reduced_word_by;
use hesspin::pinball::{fixed_points, rolldown_word};
use hesspin::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{
    billey_brute, billey_brute_summands, bruhat_by_definition, class_of, from_vec, h334, inverse,
    inversions, is_staircases, perm, peterson, project, row_dimension_pairs, run_containing,
    some_reduced_word, staircase_subset, subset_of, to_vec, word_product,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn word(n: usize, letters: &[usize]) -> Permutation {
    Word::new(n, letters.to_vec()).unwrap().product()
}

fn row(s: &str) -> Filling {
    Filling::single_row(s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()).unwrap()
}

fn lib(e: hesspin::Error) -> String {
    e.to_string()
}

fn worked_examples() -> Outcome {
    let h5: HessenbergFunction = "3,3,4,5,5".parse().map_err(lib)?;
    ensure!(is_permissible(&row("24315"), &h5).map_err(lib)?, "24315 should be permissible");
    ensure!(!is_permissible(&row("23415"), &h5).map_err(lib)?, "23415 should not be permissible");

    let dp = dimension_pairs(&row("24315"), &h5).map_err(lib)?;
    ensure!(dp == DimensionPairSet::new([(1, 2), (1, 3), (1, 4)]), "pairs of 24315: {dp}");
    let x = top_parts(&dp, 5).map_err(lib)?;
    ensure!(x.as_slice() == [1, 1, 1, 0], "x of 24315: {x}");
    ensure!(omega_word(&x).letters() == [1, 2, 3], "omega(1,1,1,0)");

    let dp = dimension_pairs(&row("43215"), &h5).map_err(lib)?;
    ensure!(dp == DimensionPairSet::new([(1, 2), (1, 3), (1, 4), (2, 3)]), "pairs of 43215: {dp}");
    let x = top_parts(&dp, 5).map_err(lib)?;
    ensure!(x.as_slice() == [1, 2, 1, 0], "x of 43215: {x}");
    ensure!(omega_word(&x).letters() == [1, 2, 1, 3], "omega(1,2,1,0)");
    ensure!(omega_inverse(&word(5, &[1, 2, 1, 3])) == x, "omega inverse of s1 s2 s1 s3");

    let single5 = YoungDiagram::single_row(5);
    let w = perm("43215");
    ensure!(filling_of_fixed_point(&w, &single5).map_err(lib)? == row("43215"), "filling of 43215");
    ensure!(rolldown(&w, &single5, &h5).map_err(lib)? == word(5, &[3, 1, 2, 1]), "roll(43215)");
    ensure!(degree(&w, &single5, &h5).map_err(lib)? == 4, "degree of 43215");

    let f = Filling::from_rows(vec![vec![1, 2, 3], vec![4, 5], vec![6]]).map_err(lib)?;
    ensure!(reading_word(&f).to_string() == "641523", "reading word");
    ensure!(perm("641523").inverse().to_string() == "356241", "inverse of 641523");

    ensure!(!bruhat_leq(&perm("368475912"), &perm("694287531")).map_err(lib)?, "tableau criterion");
    ensure!(word(5, &[1, 2, 1, 3]) == omega(&TopParts::new(vec![1, 2, 1, 0]).map_err(lib)?), "product convention");

    let subsets: [(&str, FixedPointClass, &[usize]); 3] = [
        ("54321876", FixedPointClass::Peterson321, &[1, 2, 3, 4, 6, 7]),
        ("34217658", FixedPointClass::Type312, &[1, 2, 3, 5, 6]),
        ("51432768", FixedPointClass::Type231, &[1, 2, 3, 4, 6]),
    ];
    for (w, class, a) in subsets {
        let w = perm(w);
        ensure!(is_334_fixed_point(&w).map_err(lib)?, "{w} is a fixed point");
        ensure!(classify(&w).map_err(lib)? == class, "class of {w}");
        let got = associated_subset(&w).map_err(lib)?;
        ensure!(got == AssociatedSubset::new(a.iter().copied()), "A({w}) = {got}");
    }

    let h8 = hess334::h334(8).map_err(lib)?;
    let single8 = YoungDiagram::single_row(8);
    let rolls: [(&str, &[usize]); 3] = [
        ("54321876", &[7, 6, 4, 3, 1, 2, 1]),
        ("45321876", &[7, 6, 4, 3, 1, 2]),
        ("51432876", &[7, 6, 4, 3, 2, 1]),
    ];
    for (w, letters) in rolls {
        let w = perm(w);
        let expected = word(8, letters);
        ensure!(rolldown(&w, &single8, &h8).map_err(lib)? == expected, "roll({w})");
        ensure!(rolldown_closed_form(&w).map_err(lib)? == expected, "closed-form roll({w})");
    }
    ensure!(
        rolldown_word(&perm("54321876"), &single8, &h8).map_err(lib)?.letters() == [7, 6, 4, 3, 1, 2, 1],
        "rolldown word of 54321876"
    );

    let catalog: [(&str, &[usize]); 3] = [
        ("4321765", &[1, 2, 1, 3, 2, 1, 5, 6, 5]),
        ("3421765", &[1, 2, 1, 3, 2, 5, 6, 5]),
        ("4132765", &[2, 3, 2, 1, 5, 6, 5]),
    ];
    for (w, letters) in catalog {
        let got = catalog_reduced_word(&perm(w)).map_err(lib)?;
        ensure!(got.letters() == letters, "catalog word of {w}: {got}");
    }
    Ok("all worked examples reproduced".into())
}

fn pinball_success() -> Outcome {
    for n in 4..=6 {
        let h = hess334::h334(n).map_err(lib)?;
        let shape = YoungDiagram::single_row(n);
        let report = verify_pinball(&shape, &h).map_err(lib)?;
        ensure!(report.injective, "n = {n}: collisions {:?}", report.collisions);
        ensure!(report.bruhat_decreasing, "n = {n}: {:?}", report.bruhat_violations);
        ensure!(report.betti_match, "n = {n}: {} vs {}", report.betti, report.rolldown_betti);

        // Oracle: Betti numbers and rolldowns from scratch.
        let hv = h334(n);
        let oracle_points = fixed_points_oracle(n, &hv);
        let mut betti = vec![0usize; 1 + n * (n - 1) / 2];
        let mut rolls = std::collections::BTreeSet::new();
        for w in &oracle_points {
            betti[row_dimension_pairs(&inverse(w), &hv).len()] += 1;
            let r = common::rolldown(w, &hv);
            ensure!(bruhat_by_definition(&r, w), "n = {n}: oracle roll({w:?}) not below");
            rolls.insert(r);
        }
        while betti.last() == Some(&0) {
            betti.pop();
        }
        ensure!(report.betti.0 == betti, "n = {n}: betti {} vs oracle {betti:?}", report.betti);
        ensure!(rolls.len() == oracle_points.len(), "n = {n}: oracle rolldown not injective");
        ensure!(report.fixed_points == 3 << (n - 2), "n = {n}: {} fixed points", report.fixed_points);
    }
    Ok("n = 4, 5, 6 injective, Bruhat-decreasing, Betti-matching".into())
}

fn fixed_points_oracle(n: usize, h: &[usize]) -> Vec<Vec<usize>> {
    common::fixed_points(n, h)
}

fn upper_triangular_basis() -> Outcome {
    for n in 4..=5 {
        let report = verify_334_theorem(n).map_err(lib)?;
        if !report.passed() {
            let failed: Vec<String> = report.checks.iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
            return Err(format!("n = {n}: {}", failed.join("; ")));
        }
        // Oracle: restriction matrix from brute-force Billey on a different
        // reduced word, Bruhat order from its definition.
        let hv = h334(n);
        let points = fixed_points_oracle(n, &hv);
        for w in &points {
            let rw = common::rolldown(w, &hv);
            for w2 in &points {
                let value = project(&billey_brute(&rw, &some_reduced_word(w2)));
                let below = bruhat_by_definition(w, w2);
                if w == w2 {
                    ensure!(value.0 != 0, "n = {n}: zero diagonal at {w:?}");
                }
                if !below {
                    ensure!(value.0 == 0, "n = {n}: p_roll({w:?})({w2:?}) = {value:?} nonzero");
                }
                ensure!(
                    bruhat_by_definition(&rw, w2) == below,
                    "n = {n}: Bruhat equivalence fails at {w:?}, {w2:?}"
                );
            }
        }
    }
    Ok("n = 4, 5 upper-triangular with Bruhat equivalence".into())
}

fn closed_form_vs_oracle() -> Outcome {
    let mut count = 0;
    for n in 4..=6 {
        let hv = h334(n);
        for w in fixed_points_oracle(n, &hv) {
            let r = common::rolldown(&w, &hv);
            let (coeff, deg) = project(&billey_brute(&r, &some_reduced_word(&w)));
            let closed = closed_form_restriction(&from_vec(w.clone())).map_err(lib)?;
            ensure!(
                closed.coefficient().to_string() == coeff.to_string() && closed.degree() == deg,
                "{w:?}: closed form {closed}, oracle {coeff} t^{deg}"
            );
            count += 1;
        }
    }
    // Peterson-with-321 branch at A = [1,4] u [6,7]: (4 - 1) * (1*2*3*4) * (1*2) t^7.
    let w = perm("54321876");
    ensure!(closed_form_restriction(&w).map_err(lib)? == S1Value::new(3 * 24 * 2, 7), "54321876");
    let (coeff, deg) = project(&billey_brute(&to_vec(&rolldown_closed_form(&w).map_err(lib)?), &some_reduced_word(&to_vec(&w))));
    ensure!((coeff, deg) == (144, 7), "oracle at 54321876: {coeff} t^{deg}");
    ensure!(p_restriction(&rolldown_closed_form(&w).map_err(lib)?, &w).map_err(lib)? == S1Value::new(144, 7), "library at 54321876");
    Ok(format!("{count} fixed points agree; 54321876 gives 144 t^7"))
}

fn expected_simple_summand(w: &[usize], i: usize) -> Option<i128> {
    let a = subset_of(w);
    let (lo, _) = run_containing(&a, i)?;
    let a2 = run_containing(&a, 1).map(|r| r.1);
    if class_of(w) == "231" {
        let a2 = a2.expect("1 in A");
        if i == 1 {
            return Some(a2 as i128);
        }
        if i <= a2 {
            return Some(i as i128 - 1);
        }
    }
    Some((i - lo + 1) as i128)
}

fn summand_values_and_counts() -> Outcome {
    let mut cases = 0;
    for n in 4..=6 {
        let hv = h334(n);
        for w in fixed_points_oracle(n, &hv) {
            let pw = from_vec(w.clone());
            let catalog = catalog_reduced_word(&pw).map_err(lib)?;
            ensure!(
                word_product(n, catalog.letters()) == w && catalog.len() == inversions(&w),
                "catalog word of {w:?} is not a reduced word"
            );
            for i in 1..n {
                let terms = billey_brute_summands(&word_product(n, &[i]), catalog.letters());
                match expected_simple_summand(&w, i) {
                    None => ensure!(terms.is_empty(), "{w:?}, i = {i}: expected no summands"),
                    Some(v) => ensure!(
                        !terms.is_empty() && terms.iter().all(|&t| t == v),
                        "{w:?}, i = {i}: summands {terms:?}, expected each {v}"
                    ),
                }
                cases += 1;
            }
            let r = common::rolldown(&w, &hv);
            let terms = billey_brute_summands(&r, catalog.letters());
            let a = subset_of(&w);
            let expected = match class_of(&w) {
                "P321" | "312" => run_containing(&a, 1).unwrap().1 - 1,
                _ => 1,
            };
            ensure!(terms.len() == expected, "{w:?}: {} summands, expected {expected}", terms.len());
            ensure!(terms.windows(2).all(|t| t[0] == t[1]), "{w:?}: unequal summands {terms:?}");
            let census = summand_census(&pw).map_err(lib)?;
            ensure!(census.count == expected && census.all_equal, "{w:?}: library census {census:?}");
        }
    }
    Ok(format!("{cases} simple-reflection restrictions and all summand counts match"))
}

fn peterson_cross_check() -> Outcome {
    for n in 1..=7 {
        let h = HessenbergFunction::peterson(n);
        let shape = YoungDiagram::single_row(n);
        let points = fixed_points(&shape, &h).map_err(lib)?;
        ensure!(points.len() == 1 << (n - 1), "n = {n}: {} fixed points", points.len());
        let oracle: Vec<Permutation> = fixed_points_oracle(n, &peterson(n)).into_iter().map(from_vec).collect();
        ensure!(points == oracle, "n = {n}: fixed points differ from brute force");
        for w in &points {
            let v = to_vec(w);
            ensure!(is_staircases(&v), "{w} is not a staircase sequence");
            let mut letters = staircase_subset(&v);
            letters.reverse();
            let r = rolldown(w, &shape, &h).map_err(lib)?;
            ensure!(r == word(n, &letters), "roll({w}) = {r}, expected s_j product {letters:?}");
        }
    }
    Ok("n <= 7: 2^(n-1) staircase fixed points with descending-subset rolldowns".into())
}

fn combinatorial_core() -> Outcome {
    for n in 1..=5 {
        let all = TopParts::all(n);
        let images: std::collections::BTreeSet<Permutation> = all.iter().map(omega).collect();
        ensure!(images.len() == (1..=n).product::<usize>(), "omega not bijective for n = {n}");
        for x in &all {
            let w = omega(x);
            ensure!(omega_inverse(&w) == *x, "round trip fails at {x}");
            ensure!(inversions(&to_vec(&w)) == x.total(), "length of omega({x})");
        }
    }
    let all4 = TopParts::all(4);
    for x in &all4 {
        for y in &all4 {
            if x.leq(y) {
                ensure!(bruhat_by_definition(&to_vec(&omega(x)), &to_vec(&omega(y))), "monotonicity at {x} <= {y}");
            }
        }
    }
    let s4: Vec<Permutation> = Permutation::all(4).collect();
    for v in &s4 {
        for w in &s4 {
            let t = bruhat_leq(v, w).map_err(lib)?;
            ensure!(t == bruhat_leq_oracle(v, w).map_err(lib)?, "tableau vs subword at {v}, {w}");
            ensure!(t == bruhat_by_definition(&to_vec(v), &to_vec(w)), "tableau vs definition at {v}, {w}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let s5: Vec<Permutation> = Permutation::all(5).collect();
    let mut pairs = 0;
    while pairs < 200 {
        let w = &s5[rng.gen_range(0..s5.len())];
        let below: Vec<&Permutation> = s5.iter().filter(|v| bruhat_leq(v, w).unwrap()).collect();
        let v = below[rng.gen_range(0..below.len())];
        let b1 = reduced_word_by(w, |d| d[rng.gen_range(0..d.len())]);
        let b2 = reduced_word_by(w, |d| d[rng.gen_range(0..d.len())]);
        let s1 = sigma_restriction(v, w, &b1).map_err(lib)?;
        let s2 = sigma_restriction(v, w, &b2).map_err(lib)?;
        ensure!(s1 == s2, "word dependence at v = {v}, w = {w}: {b1} vs {b2}");
        let oracle = billey_brute(&to_vec(v), &some_reduced_word(&to_vec(w)));
        let lib_terms: std::collections::BTreeMap<Vec<u32>, String> =
            s1.terms().map(|(e, c)| (e.clone(), c.to_string())).collect();
        let oracle_terms: std::collections::BTreeMap<Vec<u32>, String> =
            oracle.iter().map(|(e, c)| (e.clone(), c.to_string())).collect();
        ensure!(lib_terms == oracle_terms, "sigma_{v}({w}) differs from brute force");
        pairs += 1;
    }
    Ok("omega bijection, monotonicity, Bruhat oracles and 200 word-independence pairs".into())
}

fn degenerate_inputs() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_hesspin");
    let out = Command::new(bin)
        .args(["verify", "--n", "3", "--mode", "basis334"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.code() == Some(2), "n = 3 basis334 exit {:?}", out.status.code());

    let out = Command::new(bin)
        .args(["fillings", "--n", "4", "--h", "2,3,2,4"])
        .output()
        .map_err(|e| e.to_string())?;
    let stderr = String::from_utf8_lossy(&out.stderr);
    ensure!(out.status.code() == Some(2), "invalid h exit {:?}", out.status.code());
    ensure!(stderr.contains("index 3"), "message does not name index 3: {stderr}");
    let err = "1,2,2".parse::<HessenbergFunction>().unwrap_err().to_string();
    ensure!(err.contains("index 3"), "h(3) < 3 not named: {err}");

    let h5: HessenbergFunction = "3,3,4,5,5".parse().map_err(lib)?;
    let w = perm("23415").inverse();
    match rolldown(&w, &YoungDiagram::single_row(5), &h5) {
        Err(Error::NotFixedPoint { left: 4, right: 1, .. }) => {}
        other => return Err(format!("expected adjacency 4|1, got {other:?}")),
    }
    Ok("n = 3 rejected, failing index named, violating adjacency reported".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("worked examples", worked_examples),
        ("pinball success for 334-type, n = 4..6", pinball_success),
        ("poset-upper-triangular basis, n = 4, 5", upper_triangular_basis),
        ("closed-form restriction vs Billey oracle, n = 4..6", closed_form_vs_oracle),
        ("Billey summand values and counts, n = 4..6", summand_values_and_counts),
        ("Peterson cross-check, n <= 7", peterson_cross_check),
        ("combinatorial core properties", combinatorial_core),
        ("degenerate input handling", degenerate_inputs),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({secs:.2}s): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
