//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::{HashMap, VecDeque};
use std::process::Command;
use std::time::{Duration, Instant};

use adorn::alexander::{
    alexander_matrix, alexander_polynomial, h1prime_rank, knot_adorability_verdict,
};
use adorn::catalog;
use adorn::cosets::{reidemeister_schreier, todd_coxeter, DEFAULT_MAX_COSETS};
use adorn::engine::{explore_derived_series, Budgets, Verdict};
use adorn::finite::{
    derived_series, direct_product, doa_finite, is_perfect, normal_subgroups, quotient,
    FiniteGroup, DEFAULT_MAX_ORDER,
};
use adorn::fpcore::{Presentation, Word};
use adorn::intlin::{h2_rank_abelian, smith_normal_form, AbelianGroupData, IntMatrix};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome>;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn model(name: &str) -> FiniteGroup {
    catalog::get(name)
        .unwrap_or_else(|e| panic!("{e}"))
        .model
        .expect("catalog model")
}

fn doa(g: &FiniteGroup) -> usize {
    doa_finite(g).0
}

/// Catalog permutation and matrix models of order at most `limit`.
fn pool(limit: usize) -> Vec<(String, FiniteGroup)> {
    catalog::list()
        .into_iter()
        .filter_map(|name| {
            let g = catalog::get(&name).ok()?.model?;
            (g.order() <= limit).then_some((name, g))
        })
        .collect()
}

fn within(limit: Duration, start: Instant) -> (bool, String) {
    let t = start.elapsed();
    (
        t < limit,
        format!("{:.2}s (limit {}s)", t.as_secs_f64(), limit.as_secs()),
    )
}

fn symmetric_degree_one() -> Outcome {
    let start = Instant::now();
    let doas: Vec<usize> = (5..=7)
        .map(|n| doa(&model(&format!("symmetric{n}"))))
        .collect();
    let (fast, time) = within(Duration::from_secs(10), start);
    outcome(
        doas == [1, 1, 1] && fast,
        format!("doa(S5, S6, S7) = {doas:?}; {time}"),
    )
}

fn alternating_perfect() -> Outcome {
    let start = Instant::now();
    let a5 = model("alternating5");
    let (d, perfect) = (doa(&a5), is_perfect(&a5));
    let (fast, time) = within(Duration::from_secs(1), start);
    outcome(
        d == 0 && perfect && fast,
        format!("doa(A5) = {d}, perfect = {perfect}; {time}"),
    )
}

/// Derived length by brute force: the subgroup generated by all commutators, iterated.
fn brute_doa(g: &FiniteGroup) -> usize {
    let mut current = g.clone();
    let mut d = 0;
    loop {
        let mut comms = Vec::new();
        for x in current.elements() {
            for y in current.elements() {
                let c = x.commutator(y);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        let next = current.subgroup(&comms).unwrap();
        if next.order() == current.order() {
            return d;
        }
        current = next;
        d += 1;
    }
}

fn small_named_degrees() -> Outcome {
    let start = Instant::now();
    let names = ["symmetric3", "symmetric4", "quaternion8"];
    let expected = [2, 3, 2];
    let got: Vec<usize> = names.iter().map(|n| doa(&model(n))).collect();
    let brute: Vec<usize> = names.iter().map(|n| brute_doa(&model(n))).collect();
    let (fast, time) = within(Duration::from_secs(1), start);
    outcome(
        got == expected && brute == expected && fast,
        format!("doa(S3, S4, Q8) = {got:?}, brute force {brute:?}; {time}"),
    )
}

fn product_law(rng: &mut ChaCha8Rng) -> Outcome {
    let pool = pool(100_000);
    let mut violations = Vec::new();
    let mut checked = 0;
    while checked < 50 {
        let (a, g) = pool.choose(rng).unwrap();
        let (b, h) = pool.choose(rng).unwrap();
        if g.order() * h.order() > 100_000 {
            continue;
        }
        checked += 1;
        let p = direct_product(g, h, DEFAULT_MAX_ORDER).unwrap();
        if doa(&p) != doa(g).max(doa(h)) {
            violations.push(format!("{a} x {b}"));
        }
    }
    outcome(
        violations.is_empty(),
        format!(
            "{checked} pairs, {} violations {violations:?}",
            violations.len()
        ),
    )
}

fn quotient_monotonicity(rng: &mut ChaCha8Rng) -> Outcome {
    let pool = pool(2000);
    let mut normals: HashMap<usize, Vec<FiniteGroup>> = HashMap::new();
    let mut violations = Vec::new();
    let mut nontrivial = 0;
    for _ in 0..100 {
        let i = rng.gen_range(0..pool.len());
        let (name, g) = &pool[i];
        let ns = normals.entry(i).or_insert_with(|| normal_subgroups(g));
        let n = &ns[rng.gen_range(0..ns.len())];
        if n.order() > 1 && n.order() < g.order() {
            nontrivial += 1;
        }
        let q = quotient(g, n).unwrap();
        if q.order() * n.order() != g.order() || doa(&q) > doa(g) {
            violations.push(format!("{name} / (order {})", n.order()));
        }
    }
    outcome(
        violations.is_empty(),
        format!(
            "100 pairs ({nontrivial} with proper nontrivial N), {} violations {violations:?}",
            violations.len()
        ),
    )
}

fn perfect_by_perfect() -> Outcome {
    let mut groups = pool(2000);
    let perfect: Vec<(String, FiniteGroup)> = pool(400)
        .into_iter()
        .filter(|(_, g)| is_perfect(g) && g.order() > 1)
        .collect();
    for (i, (a, g)) in perfect.iter().enumerate() {
        for (b, h) in &perfect[i..] {
            if g.order() * h.order() <= 20_000 {
                groups.push((
                    format!("{a} x {b}"),
                    direct_product(g, h, DEFAULT_MAX_ORDER).unwrap(),
                ));
            }
        }
    }
    let mut configurations = 0;
    let mut proper = 0;
    let mut violations = Vec::new();
    for (name, g) in &groups {
        for n in normal_subgroups(g) {
            let q = quotient(g, &n).unwrap();
            if is_perfect(&n) && is_perfect(&q) {
                configurations += 1;
                if n.order() > 1 && n.order() < g.order() {
                    proper += 1;
                }
                if !is_perfect(g) {
                    violations.push(format!("{name} / (order {})", n.order()));
                }
            }
        }
    }
    outcome(
        violations.is_empty() && proper > 0,
        format!(
            "{} groups, {configurations} configurations ({proper} with proper nontrivial N), {} violations",
            groups.len(),
            violations.len()
        ),
    )
}

fn pipeline_vs_oracle() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    for name in catalog::list() {
        let e = catalog::get(&name).unwrap();
        let (Some(p), Some(g)) = (e.presentation, e.model) else {
            continue;
        };
        if g.order() > 200 {
            continue;
        }
        checked += 1;
        let (trace, verdict) = explore_derived_series(&p, &Budgets::default());
        let series = derived_series(&g);
        let mut ratios: Vec<BigInt> = series
            .windows(2)
            .map(|w| BigInt::from(w[0].order() / w[1].order()))
            .collect();
        ratios.push(BigInt::from(1));
        let orders: Vec<BigInt> = trace
            .iter()
            .filter_map(|s| s.quotient.order().ok())
            .collect();
        if verdict.doa() != Some(series.len() - 1) || orders != ratios {
            failures.push(name);
        }
    }
    let (fast, time) = within(Duration::from_secs(60), start);
    outcome(
        checked >= 10 && failures.is_empty() && fast,
        format!("{checked} presented groups, mismatches {failures:?}; {time}"),
    )
}

fn snf_certificate(m: &IntMatrix) -> Result<(), String> {
    let s = smith_normal_form(m);
    let d = s.left.mul(m).mul(&s.right);
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            let want = if i == j && i < s.diag.len() {
                s.diag[i].clone()
            } else {
                BigInt::from(0)
            };
            if *d.get(i, j) != want {
                return Err(format!("U*M*V entry ({i},{j})"));
            }
        }
    }
    let one = BigInt::from(1);
    if s.left.determinant().magnitude() != one.magnitude()
        || s.right.determinant().magnitude() != one.magnitude()
    {
        return Err("transform not unimodular".into());
    }
    if s.diag.iter().any(|x| *x <= BigInt::from(0)) {
        return Err("nonpositive invariant".into());
    }
    if s.diag.windows(2).any(|w| &w[1] % &w[0] != BigInt::from(0)) {
        return Err("divisibility chain broken".into());
    }
    Ok(())
}

fn smith_form(rng: &mut ChaCha8Rng) -> Outcome {
    let mut violations = Vec::new();
    for k in 0..500 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..c).map(|_| rng.gen_range(-20..=20)).collect())
            .collect();
        if let Err(e) = snf_certificate(&IntMatrix::from_i64_rows(r, c, &rows)) {
            violations.push(format!("matrix {k}: {e}"));
        }
    }
    outcome(
        violations.is_empty(),
        format!(
            "500 matrices, {} violations {violations:?}",
            violations.len()
        ),
    )
}

/// Schreier generators of the stabilizer of point 0 under a transitive action.
fn stabilizer_generators(perms: &[Vec<usize>]) -> Option<Vec<Word>> {
    let k = perms[0].len();
    let mut rep: Vec<Option<Word>> = vec![None; k];
    rep[0] = Some(Word::empty());
    let mut tree = vec![vec![false; perms.len()]; k];
    let mut queue = VecDeque::from([0]);
    while let Some(c) = queue.pop_front() {
        for (g, p) in perms.iter().enumerate() {
            if rep[p[c]].is_none() {
                rep[p[c]] = Some(rep[c].as_ref().unwrap().concat(&Word::generator(g)));
                tree[c][g] = true;
                queue.push_back(p[c]);
            }
        }
    }
    let rep: Vec<Word> = rep.into_iter().collect::<Option<_>>()?;
    let mut gens = Vec::new();
    for c in 0..k {
        for (g, p) in perms.iter().enumerate() {
            if !tree[c][g] {
                gens.push(
                    rep[c]
                        .concat(&Word::generator(g))
                        .concat(&rep[p[c]].inverse()),
                );
            }
        }
    }
    Some(gens)
}

fn nielsen_schreier(rng: &mut ChaCha8Rng) -> Outcome {
    let mut checked = 0;
    let mut violations = Vec::new();
    while checked < 200 {
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=8);
        let perms: Vec<Vec<usize>> = (0..n)
            .map(|_| {
                let mut p: Vec<usize> = (0..k).collect();
                p.shuffle(rng);
                p
            })
            .collect();
        let Some(gens) = stabilizer_generators(&perms) else {
            continue;
        };
        checked += 1;
        let free = Presentation::with_numbered_generators("x", n, vec![]).unwrap();
        let ok = todd_coxeter(&free, &gens, DEFAULT_MAX_COSETS)
            .ok()
            .and_then(|t| {
                let sub = reidemeister_schreier(&free, &t).ok()?;
                Some(t.index() == k && sub.ngens() == k * (n - 1) + 1 && sub.relators().is_empty())
            });
        if ok != Some(true) {
            violations.push(format!("rank {n} index {k}"));
        }
    }
    outcome(
        violations.is_empty(),
        format!(
            "{checked} subgroups, {} violations {violations:?}",
            violations.len()
        ),
    )
}

/// `|Δ(−1)|` from the Alexander matrix evaluated at `t = −1`, first column deleted.
fn determinant_at_minus_one(p: &Presentation) -> BigInt {
    let m = alexander_matrix(p).unwrap();
    let rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row[1..].iter().map(|x| x.eval(-1).unwrap()).collect())
        .collect();
    let n = rows.len();
    IntMatrix::from_rows(rows, n)
        .unwrap()
        .determinant()
        .magnitude()
        .clone()
        .into()
}

fn alexander_suite() -> Outcome {
    let start = Instant::now();
    let knot = |name: &str| catalog::get(name).unwrap().presentation.unwrap();
    let mut notes = Vec::new();
    let mut ok = true;

    let unknot = knot("unknot");
    let d = alexander_polynomial(&unknot).unwrap();
    let v = knot_adorability_verdict(&unknot).unwrap();
    ok &= d.polynomial.is_one() && matches!(v, Verdict::Adorable { .. });
    notes.push(format!("unknot {} -> {}", d.polynomial, v.label()));

    for (name, want, det) in [
        ("trefoil", "t^2 - t + 1", 3),
        ("figure_eight", "t^2 - 3t + 1", 5),
    ] {
        let p = knot(name);
        let d = alexander_polynomial(&p).unwrap();
        let v = knot_adorability_verdict(&p).unwrap();
        let at = d.polynomial.eval(-1).unwrap();
        let oracle = determinant_at_minus_one(&p);
        ok &= d.polynomial.to_string() == want
            && matches!(v, Verdict::NotAdorable { .. })
            && at.magnitude() == oracle.magnitude()
            && oracle == BigInt::from(det);
        notes.push(format!(
            "{name} {} -> {}, |D(-1)| = {oracle}",
            d.polynomial,
            v.label()
        ));
    }
    let trefoil = knot("trefoil");
    let rank = h1prime_rank(&trefoil).unwrap();
    let degree = alexander_polynomial(&trefoil).unwrap().degree;
    ok &= rank == 2 && degree == 2;
    notes.push(format!("trefoil rank {rank} degree {degree}"));

    let (fast, time) = within(Duration::from_secs(1), start);
    notes.push(time);
    outcome(ok && fast, notes.join("; "))
}

fn h2_rank() -> Outcome {
    let r3 = h2_rank_abelian(&AbelianGroupData::free(3));
    let r5 = h2_rank_abelian(&AbelianGroupData::free(5));
    outcome(
        r3 == 3 && r5 == 10,
        format!("rank 3 -> {r3}, rank 5 -> {r5}"),
    )
}

fn verify_is_deterministic(suite_start: Instant) -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_adorn"))
            .args(["verify", "--format", "json"])
            .output()
            .expect("adorn binary runs")
    };
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    let (fast, time) = within(Duration::from_secs(60), suite_start);
    outcome(
        same && a.status.success() && b.status.success() && fast,
        format!(
            "{} bytes, identical = {same}, exit {:?}; suite {time}",
            a.stdout.len(),
            a.status.code()
        ),
    )
}

fn main() {
    let suite_start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "symmetric groups S5..S7 have degree 1",
            Box::new(|_| symmetric_degree_one()),
        ),
        (
            "A5 is perfect with degree 0",
            Box::new(|_| alternating_perfect()),
        ),
        (
            "S3, S4, Q8 have degrees 2, 3, 2",
            Box::new(|_| small_named_degrees()),
        ),
        (
            "product law over random catalog pairs",
            Box::new(product_law),
        ),
        (
            "quotient monotonicity over random normal subgroups",
            Box::new(quotient_monotonicity),
        ),
        (
            "perfect-by-perfect extensions are perfect",
            Box::new(|_| perfect_by_perfect()),
        ),
        (
            "presentation pipeline agrees with finite enumeration",
            Box::new(|_| pipeline_vs_oracle()),
        ),
        ("Smith normal form certificates", Box::new(smith_form)),
        (
            "Nielsen-Schreier rank of finite-index free subgroups",
            Box::new(nielsen_schreier),
        ),
        (
            "Alexander polynomial suite",
            Box::new(|_| alexander_suite()),
        ),
        ("H2 rank of free abelian groups", Box::new(|_| h2_rank())),
        (
            "verify JSON output is byte-identical",
            Box::new(move |_| verify_is_deterministic(suite_start)),
        ),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.into_iter().enumerate() {
        let r = check(&mut rng);
        if !r.passed {
            failed += 1;
        }
        println!(
            "{} criterion {:>2}: {title}: {}",
            if r.passed { "PASS" } else { "FAIL" },
            i + 1,
            r.detail
        );
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
