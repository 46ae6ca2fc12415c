//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use lyndon_order::factor::duval_count_by_table;
use lyndon_order::io::{rank_histogram, run_rank_experiment, synthetic_sequence};
use lyndon_order::search::exhaustive_counts;
use lyndon_order::umff::{
    check_co_lyndon_concat, check_intersection, check_lyndon_concat, enumerate_family,
    max_factorization_suite, Family,
};
use lyndon_order::{
    compute_ep, duval_factorize, exhaustive_search, greedy_order, lyndon_array,
    lyndon_factorization_array, Objective, OrderedAlphabet, RankingReport,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXAMPLE_FACTORIZE_BUDGET: Duration = Duration::from_millis(1);
const ORACLE_SWEEP_BUDGET: Duration = Duration::from_secs(60);
const LARGE_FACTORIZE_BUDGET: Duration = Duration::from_secs(1);
const RANK_EXPERIMENT_BUDGET: Duration = Duration::from_secs(30);
const LARGE_LEN: usize = 5_000_000;
const EXAMPLE_2: &[u8] = b"aabdcaacdaabdbabaabcaacaacab";

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn order(s: &[u8]) -> OrderedAlphabet {
    OrderedAlphabet::from_ascending(s).unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn show(w: &[u8]) -> String {
    String::from_utf8_lossy(w).into_owned()
}

fn factor_strings(text: &[u8], o: &OrderedAlphabet) -> Vec<String> {
    duval_factorize(text, o)
        .unwrap()
        .factors(text)
        .into_iter()
        .map(show)
        .collect()
}

fn worked_example() -> Outcome {
    let text = b"abcabcdabcaba";
    let start = Instant::now();
    let f = duval_factorize(text, &order(b"abcd")).unwrap();
    let elapsed = start.elapsed();
    let natural: Vec<String> = f.factors(text).into_iter().map(show).collect();
    check(natural == ["abcabcd", "abc", "ab", "a"], || {
        format!("a<b<c<d gave {natural:?}")
    })?;
    let other = factor_strings(text, &order(b"bcad"));
    check(other == ["a", "bcabcdabcaba"], || {
        format!("b<c<a<d gave {other:?}")
    })?;
    check(elapsed < EXAMPLE_FACTORIZE_BUDGET, || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("both factorizations exact, {elapsed:?}"))
}

fn ep_example() -> Outcome {
    let ep = compute_ep(b"bbbffbbcf");
    check(ep.letters() == b"bfc", || {
        format!("letters {:?}", show(ep.letters()))
    })?;
    let lists = ep.exponent_lists();
    check(lists == [vec![3, 2], vec![2, 1], vec![1]], || {
        format!("exponents {lists:?}")
    })?;
    let sums: Vec<u64> = lists.iter().map(|l| l.iter().sum()).collect();
    check(sums == [5, 3, 1], || format!("sums {sums:?}"))?;
    let parikh: Vec<usize> = (0..3).map(|r| ep.parikh(r)).collect();
    check(parikh == [5, 3, 1], || format!("parikh {parikh:?}"))?;
    Ok("letters b,f,c; exponents (3,2),(2,1),(1); sums 5/3/1".into())
}

fn example_two() -> Outcome {
    let out = greedy_order(EXAMPLE_2, Objective::Minimize, true).map_err(|e| e.to_string())?;
    let got = out.order.ascending();
    check(got == b"dcab", || format!("greedy chose {}", show(got)))?;
    let ours = duval_factorize(EXAMPLE_2, &out.order).unwrap().count();
    let natural = duval_factorize(EXAMPLE_2, &order(b"abcd")).unwrap().count();
    check(ours == common::factorize(EXAMPLE_2, b"dcab").len(), || {
        "oracle disagrees".into()
    })?;
    check(ours < natural, || {
        format!("{ours} factors vs {natural} under a<b<c<d")
    })?;
    Ok(format!("d<c<a<b, {ours} factors < {natural} under a<b<c<d"))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut cases = 0usize;
    for (letters, max_len) in [(&b"ab"[..], 12), (&b"abc"[..], 8)] {
        let o = order(letters);
        for w in common::words_up_to(letters, max_len) {
            let ours: Vec<Vec<u8>> = duval_factorize(&w, &o)
                .unwrap()
                .factors(&w)
                .into_iter()
                .map(<[u8]>::to_vec)
                .collect();
            check(ours == common::factorize(&w, letters), || {
                format!("factorization of {}", show(&w))
            })?;
            check(
                lyndon_array(&w, &o).unwrap() == common::lyndon_array(&w, letters),
                || format!("lyndon array of {}", show(&w)),
            )?;
            check(
                lyndon_factorization_array(&w, &o).unwrap()
                    == common::factorization_array(&w, letters),
                || format!("factorization array of {}", show(&w)),
            )?;
            cases += 1;
        }
    }
    let w = b"abaababaab";
    let o = order(b"ab");
    let lambda = lyndon_array(w, &o).unwrap();
    let f = lyndon_factorization_array(w, &o).unwrap();
    check(lambda == [2, 1, 5, 2, 1, 2, 1, 3, 2, 1], || {
        format!("lambda {lambda:?}")
    })?;
    check(f == [3, 3, 2, 3, 3, 2, 2, 1, 1, 1], || format!("F {f:?}"))?;
    let elapsed = start.elapsed();
    check(elapsed < ORACLE_SWEEP_BUDGET, || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{cases} strings agree, {elapsed:.2?}"))
}

fn law_suites() -> Outcome {
    let mut pairs = 0usize;
    for (letters, family) in [
        (b"ab", Family::Lyndon),
        (b"ba", Family::Lyndon),
        (b"ab", Family::CoLyndon),
        (b"ba", Family::CoLyndon),
    ] {
        let o = order(letters);
        let words = enumerate_family(family, 6, &o).map_err(|e| e.to_string())?;
        for u in &words {
            for v in &words {
                let r = match family {
                    Family::Lyndon => check_lyndon_concat(u, v, &o),
                    Family::CoLyndon => check_co_lyndon_concat(u, v, &o),
                };
                r.map_err(|e| e.to_string())?;
                pairs += 1;
            }
        }
    }
    check(check_intersection(&order(b"ab"), 10), || {
        "intersection over 2 letters".into()
    })?;
    check(check_intersection(&order(b"abc"), 6), || {
        "intersection over 3 letters".into()
    })?;
    let mut lists = 0;
    for (family, seed) in [(Family::Lyndon, 1), (Family::CoLyndon, 2)] {
        let outcome = max_factorization_suite(family, 10_000, seed);
        check(outcome.passed(), || {
            format!("{}: {:?}", outcome.law, outcome.violations.first())
        })?;
        lists += outcome.cases;
    }
    Ok(format!(
        "{pairs} concatenation pairs, intersections, {lists} factor lists"
    ))
}

fn recurrence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut positions = 0usize;
    for t in 0..1000 {
        let k = rng.gen_range(1..=4);
        let letters = &b"abcd"[..k];
        let len = rng.gen_range(1..=2000);
        let text = common::random_text(&mut rng, letters, len);
        let o = order(&common::shuffled(&mut rng, letters));
        let lambda = lyndon_array(&text, &o).unwrap();
        let f = lyndon_factorization_array(&text, &o).unwrap();
        for i in 0..len {
            let next = f.get(i + lambda[i]).copied().unwrap_or(0);
            check(f[i] == 1 + next, || format!("text {t}, position {i}"))?;
        }
        let count = duval_factorize(&text, &o).unwrap().count();
        check(f[0] == count, || {
            format!("text {t}: F[0] {} vs {count}", f[0])
        })?;
        positions += len;
    }
    Ok(format!("{positions} positions over 1000 texts"))
}

fn sandwich() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let texts: Vec<Vec<u8>> = (0..500)
        .map(|_| common::random_text(&mut rng, b"ACGT", 10_000))
        .collect();
    let run = || -> Result<Vec<RankingReport>, String> {
        texts
            .iter()
            .map(|t| run_rank_experiment(t, 8).map_err(|e| e.to_string()))
            .collect()
    };
    let reports = run()?;
    for (i, r) in reports.iter().enumerate() {
        let (min, max) = (r.min_count().unwrap(), r.max_count().unwrap());
        for g in [&r.greedy, &r.greedy_no_backtrack] {
            let g = g.as_ref().ok_or("missing greedy placement")?;
            check(min <= g.factor_count && g.factor_count <= max, || {
                format!("text {i}: {min} <= {} <= {max} fails", g.factor_count)
            })?;
            let recount = duval_factorize(&texts[i], &order(&g.permutation))
                .unwrap()
                .count();
            check(recount == g.factor_count, || {
                format!("text {i}: greedy count mismatch")
            })?;
        }
    }
    let histogram = rank_histogram(&reports);
    check(histogram == rank_histogram(&run()?), || {
        "histogram differs between runs".into()
    })?;
    let best = histogram.with_backtracking.get(&1).copied().unwrap_or(0);
    let best_plain = histogram.without_backtracking.get(&1).copied().unwrap_or(0);
    Ok(format!(
        "500 texts, greedy at rank 1: {best} with backtracking, {best_plain} without"
    ))
}

fn performance() -> Outcome {
    let text = synthetic_sequence(b"ACGT", LARGE_LEN, 8);
    let start = Instant::now();
    let f = duval_factorize(&text, &order(b"ACGT")).unwrap();
    let single = start.elapsed();
    check(f.text_len() == LARGE_LEN, || {
        "factorization does not cover the text".into()
    })?;
    check(single < LARGE_FACTORIZE_BUDGET, || {
        format!("factorization took {single:?}")
    })?;

    let start = Instant::now();
    let report = run_rank_experiment(&text, 8).map_err(|e| e.to_string())?;
    let experiment = start.elapsed();
    check(report.entries.len() == 24, || {
        "expected 24 orderings".into()
    })?;
    check(experiment < RANK_EXPERIMENT_BUDGET, || {
        format!("rank experiment took {experiment:?}")
    })?;

    let parallel = exhaustive_counts(&text, 8).map_err(|e| e.to_string())?;
    for (perm, count) in &parallel {
        let mut table = [0u8; 256];
        for (r, &l) in perm.iter().enumerate() {
            table[l as usize] = r as u8;
        }
        let serial = duval_count_by_table(&text, &table);
        check(serial == *count, || {
            format!("{}: parallel {count}, serial {serial}", show(perm))
        })?;
        let generic = duval_factorize(&text, &order(perm)).unwrap().count();
        check(generic == *count, || {
            format!("{}: table {count}, generic {generic}", show(perm))
        })?;
    }
    Ok(format!(
        "5M factorization {single:.2?}, 24-ordering experiment {experiment:.2?}"
    ))
}

fn border_rule() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for t in 0..1000 {
        let k = rng.gen_range(1..=4);
        let len = rng.gen_range(2..=300);
        let mut text = common::random_text(&mut rng, &b"abcd"[..k], len);
        text[len - 1] = text[0];
        let report = exhaustive_search(&text, Objective::Minimize, 8).map_err(|e| e.to_string())?;
        check(report.entries.iter().all(|e| e.factor_count >= 2), || {
            format!("text {t} ({}) has a single-factor ordering", show(&text))
        })?;
    }
    Ok("1000 bordered texts, every ordering gives at least 2 factors".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 example factorizations", worked_example),
        ("2 exponent Parikh example", ep_example),
        ("3 greedy on the four-letter example", example_two),
        ("4 exhaustive oracle equivalence", oracle_equivalence),
        ("5 factorization law suites", law_suites),
        ("6 factorization array recurrence", recurrence),
        ("7 greedy sandwich and histogram determinism", sandwich),
        ("8 performance", performance),
        ("9 border rule", border_rule),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{secs:.2}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} [{secs:.2}s]");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
