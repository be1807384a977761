//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ties_core::algebra::{
    e_pair, flip, gen, gram_report, moebius_report, t_w_inverse, verify_formulas, verify_relations, AlgebraElement,
    BasisKey, Letter,
};
use ties_core::combinatorics::{enumerate_labels, Permutation, SetPartition};
use ties_core::exactmath::{RankMode, RatFunc, Rational};
use ties_core::specht::{
    algebra_dim, classification_report, dominance_filter, e_action_check, form_diagnostic, simplicity_witness,
    specht_module, symmetrizer_checks,
};
use ties_core::tensor::{faithfulness_certificate, quotient_checks, verify_tensor_relations};

const SEED: u64 = 0x5eed;

/// Wall-clock budgets, one per criterion.
const BUDGETS: [Duration; 10] = [
    Duration::from_secs(1),
    Duration::from_secs(120),
    Duration::from_secs(600),
    Duration::from_secs(600),
    Duration::from_secs(600),
    Duration::from_secs(600),
    Duration::from_secs(600),
    Duration::from_secs(900),
    Duration::from_secs(600),
    Duration::from_secs(600),
];

const FORM_TRIPLES: usize = 200;
const EXTENSION_SETS: usize = 120;
const SCHUR_SAMPLES: usize = 100;
const TENSOR_FORM_SAMPLES: usize = 200;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn random_element(n: usize, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let keys = BasisKey::all(n);
    let mut x = AlgebraElement::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let c = RatFunc::from_int(rng.gen_range(-3..=3)) * &RatFunc::u_pow(rng.gen_range(-1..=1));
        x = &x + &AlgebraElement::term(keys.choose(rng).unwrap().clone(), c);
    }
    x
}

fn dimension() -> Outcome {
    let dims: Vec<usize> = (1..=4).map(algebra_dim).collect();
    let keys: Vec<usize> = (1..=4).map(|n| BasisKey::all(n).len()).collect();
    check(dims == [1, 4, 30, 360] && keys == dims, format!("dims {dims:?}"))
}

fn relations() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in 2..=4 {
        let r = verify_relations(n).map_err(err)?;
        let count: usize = r.summary.values().map(|(c, _)| c).sum();
        ok &= r.pass;
        notes.push(format!("n={n} symbolic {count}"));
    }
    for n in 2..=3 {
        let t = verify_tensor_relations(n, 0, SEED, false).map_err(err)?;
        ok &= t.pass;
        notes.push(format!("n={n} tensor exact on {} probes", t.probes));
    }
    let t = verify_tensor_relations(4, 3, SEED, true).map_err(err)?;
    ok &= t.pass;
    notes.push(format!("n=4 tensor at {} on {} probes", t.points.join(", "), t.probes));
    check(ok, notes.join("; "))
}

fn faithfulness() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (n, points) in [(2, 0), (3, 0), (4, 2)] {
        let r = faithfulness_certificate(n, points, SEED).map_err(err)?;
        ok &= r.pass && r.rank == algebra_dim(n);
        notes.push(format!("n={n} rank {}/{}", r.rank, r.expected));
    }
    check(ok, notes.join("; "))
}

fn structural() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut count = 0usize;
    let mut fail = Vec::new();
    let mut expect = |ok: bool, what: String| {
        count += 1;
        if !ok {
            fail.push(what);
        }
    };
    for n in 1..=5 {
        let perms = Permutation::all(n);
        let parts = SetPartition::enumerate(n);
        // all instances up to four strands, a random sample at five
        let pairs: Vec<(usize, usize)> = if n <= 4 {
            (0..perms.len()).flat_map(|i| (0..parts.len()).map(move |j| (i, j))).collect()
        } else {
            (0..60).map(|_| (rng.gen_range(0..perms.len()), rng.gen_range(0..parts.len()))).collect()
        };
        for (i, j) in pairs {
            let (w, a) = (&perms[i], &parts[j]);
            let lhs = &(&AlgebraElement::t_w(w) * &AlgebraElement::e_a(a)) * &t_w_inverse(w).map_err(err)?;
            expect(lhs == AlgebraElement::e_a(&a.apply(w).map_err(err)?), format!("conjugation {w:?} {a}"));
        }
        let joins: Vec<(usize, usize)> = if n <= 4 {
            (0..parts.len()).flat_map(|i| (0..parts.len()).map(move |j| (i, j))).collect()
        } else {
            (0..60).map(|_| (rng.gen_range(0..parts.len()), rng.gen_range(0..parts.len()))).collect()
        };
        for (i, j) in joins {
            let (a, b) = (&parts[i], &parts[j]);
            let prod = &AlgebraElement::e_a(a) * &AlgebraElement::e_a(b);
            expect(prod == AlgebraElement::e_a(&a.join(b).map_err(err)?), format!("join {a} {b}"));
        }
        if n >= 2 {
            expect(verify_formulas(n).map_err(err)?.pass, format!("formulas n={n}"));
            for i in 1..n {
                let si = Permutation::simple(i, n).map_err(err)?;
                let t = gen(Letter::T(i), n).map_err(err)?;
                let tinv = gen(Letter::Tinv(i), n).map_err(err)?;
                for j in 1..=n {
                    for k in j + 1..=n {
                        let lhs = &(&t * &e_pair(j, k, n).map_err(err)?) * &tinv;
                        let (a, b) = (si.apply(j), si.apply(k));
                        expect(lhs == e_pair(a.min(b), a.max(b), n).map_err(err)?, format!("reflection {i} {j} {k}"));
                    }
                }
            }
            let sets = if n == 2 { 10 } else { EXTENSION_SETS / 3 };
            for _ in 0..sets {
                let rel: Vec<(usize, usize)> = (0..rng.gen_range(0..=n))
                    .map(|_| {
                        let i = rng.gen_range(1..n);
                        (i, rng.gen_range(i + 1..=n))
                    })
                    .collect();
                let mut prod = AlgebraElement::one(n);
                for &(i, j) in &rel {
                    prod = &prod * &e_pair(i, j, n).map_err(err)?;
                }
                expect(prod == AlgebraElement::e_a(&SetPartition::closure(n, &rel).map_err(err)?), format!("extension {rel:?}"));
            }
        }
        let flips = if n <= 3 { 100 } else { 40 };
        for _ in 0..flips {
            let (x, y) = (random_element(n, &mut rng), random_element(n, &mut rng));
            let fx = flip(&x).map_err(err)?;
            expect(flip(&fx).map_err(err)? == x, format!("flip involution n={n}"));
            let lhs = flip(&(&x * &y)).map_err(err)?;
            expect(lhs == &fx * &flip(&y).map_err(err)?, format!("flip automorphism n={n}"));
        }
    }
    check(fail.is_empty(), format!("{count} identities, {} failed {:?}", fail.len(), fail.iter().take(3).collect::<Vec<_>>()))
}

fn involution_and_form() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let mut held = 0;
    for t in 0..FORM_TRIPLES {
        let n = 1 + t % 3;
        let (x, y, z) = (random_element(n, &mut rng), random_element(n, &mut rng), random_element(n, &mut rng));
        let anti = (&x * &y).star() == &y.star() * &x.star() && x.star().star() == x;
        let form = (&x * &y).form(&z).map_err(err)? == y.form(&(&x.star() * &z)).map_err(err)?;
        held += usize::from(anti && form);
    }
    let one = Rational::from_integer(1.into());
    let mut ranks = Vec::new();
    for n in 1..=3 {
        let g = gram_report(n, Some(&one)).map_err(err)?;
        ranks.push((g.rank, g.size));
    }
    let full = ranks.iter().all(|(r, s)| r == s);
    check(held == FORM_TRIPLES && full, format!("{held}/{FORM_TRIPLES} triples; Gram ranks at u=1 {ranks:?}"))
}

fn moebius() -> Outcome {
    let mut ok = true;
    let mut classical = true;
    let mut factorial_k = true;
    let mut norm = 0;
    for n in 1..=4 {
        let r = moebius_report(n).map_err(err)?;
        ok &= r.brute_force_matches_lattice;
        classical &= r.matches_classical;
        factorial_k &= r.matches_factorial_k;
        norm = r.normalization;
    }
    check(
        ok,
        format!(
            "expansion = {norm}·μ(A0,⊤) for n≤4; (-1)^(k-1)(k-1)! {}; (-1)^(k-1)k! {}",
            if classical { "matches" } else { "differs" },
            if factorial_k { "matches" } else { "differs" }
        ),
    )
}

fn quotients() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=3 {
        let q = quotient_checks(n).map_err(err)?;
        ok &= q.pass;
        notes.push(format!("n={n} ranks M {} N {} of {}", q.m_rank, q.n_rank, q.expected_rank));
    }
    check(ok, notes.join("; "))
}

fn classification() -> Outcome {
    let r2 = classification_report(2, RankMode::Exact).map_err(err)?;
    let r3 = classification_report(3, RankMode::Exact).map_err(err)?;
    let r4 = classification_report(4, RankMode::Specialized { seed: SEED }).map_err(err)?;
    let mut ok = r2.labels.len() == 4 && r2.dims == [1, 1, 1, 1] && r2.sum_squares == 4;
    ok &= r3.labels.len() == 8 && r3.dims == [1, 2, 1, 3, 3, 1, 2, 1] && r3.sum_squares == 30;
    ok &= r4.sum_squares <= 360;
    let mut pairs = 0;
    let mut witnesses = 0;
    for n in 1..=3 {
        for l in enumerate_labels(n) {
            for b in SetPartition::enumerate(n) {
                ok &= e_action_check(&l, &b).map_err(err)?;
                pairs += 1;
            }
            let w = simplicity_witness(&specht_module(&l).map_err(err)?).map_err(err)?;
            ok &= w.pass;
            witnesses += 1;
        }
    }
    check(
        ok,
        format!(
            "n=3 dims {:?}; n=4 {} labels, sum of squares {} ({}); {pairs} (Λ,B) pairs; {witnesses} witnesses",
            r3.dims,
            r4.labels.len(),
            r4.sum_squares,
            if r4.equal { "equal to 360" } else { "below 360" }
        ),
    )
}

fn symmetrizers() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=3 {
        let s = symmetrizer_checks(n, SCHUR_SAMPLES, SEED).map_err(err)?;
        let d = dominance_filter(n).map_err(err)?;
        ok &= s.pass && d.pass;
        notes.push(format!(
            "n={n} hecke {}/{} group {}/{} dominance {}",
            s.hecke_held,
            s.checked,
            s.group_held,
            s.checked,
            if d.sharp { "sharp" } else { "one-sided" }
        ));
    }
    check(ok, notes.join("; "))
}

fn tensor_form() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=3 {
        let d = form_diagnostic(n, TENSOR_FORM_SAMPLES, SEED).map_err(err)?;
        ok &= d.pass;
        notes.push(format!("n={n} {}/{} nonzero norms {}/{}", d.invariance_held, d.invariance_checked, d.norms_nonzero, d.labels));
    }
    notes.push("form read with v = u; a diagnostic of that reading only".into());
    check(ok, notes.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("dimension", dimension),
        ("relations", relations),
        ("faithfulness", faithfulness),
        ("structural identities", structural),
        ("involution and form", involution_and_form),
        ("Möbius coefficient", moebius),
        ("quotient checks", quotients),
        ("classification", classification),
        ("symmetrizers", symmetrizers),
        ("tensor form", tensor_form),
    ];
    let mut failures = 0;
    for (i, ((name, run), budget)) in criteria.iter().zip(BUDGETS).enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (pass, detail) = match result {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {budget:?}")),
            Err(d) => (false, d),
        };
        failures += usize::from(!pass);
        println!(
            "{} {:>2} {name:<22} {:>8.2?}  {detail}",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            elapsed
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
