use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{TensorAction, TensorError, TensorKey, TensorVector};
use crate::algebra::{relation_instances, word_expand, BasisKey, RelationReport, RelationResult, WordSum};
use crate::combinatorics::{Permutation, SetPartition};
use crate::exactmath::{format_rational, random_rational, EchelonBasis, Field, RatFunc, Rational};

/// Pure tensors whose upper-index sequence is a restricted growth string
/// (first occurrences of upper values appear in increasing order). Every
/// pure tensor is the image of exactly one of these under an upper
/// relabeling, and relabelings commute with the action.
pub fn upper_canonical_keys(n: usize) -> Vec<TensorKey> {
    TensorKey::all(n)
        .into_iter()
        .filter(|k| {
            let mut max = 0;
            k.uppers().into_iter().all(|j| {
                let ok = j <= max + 1;
                max = max.max(j);
                ok
            })
        })
        .collect()
}

/// One probe per set partition: lower indices `1..n`, upper index of
/// position `p` equal to the number of the block containing `p`.
pub fn partition_probes(n: usize) -> Vec<TensorKey> {
    SetPartition::enumerate(n)
        .iter()
        .map(|a| {
            let labels = a.labels();
            TensorKey::new(&(0..n).map(|p| (p + 1, labels[p] + 1)).collect::<Vec<_>>())
        })
        .collect()
}

fn apply_sum<F: Field>(
    action: &TensorAction<F>,
    sum: &WordSum,
    v: &TensorVector<F>,
) -> Result<TensorVector<F>, TensorError> {
    let mut out = TensorVector::zero(v.n());
    for (c, w) in sum {
        let c = F::eval_ratfunc(c, action.u())?;
        out.axpy(&c, &action.act_word(w, v)?);
    }
    Ok(out)
}

fn relations_on<F: Field>(action: &TensorAction<F>, probes: &[TensorKey]) -> Result<Vec<RelationResult>, TensorError> {
    relation_instances(action.n())
        .into_par_iter()
        .map(|r| {
            let mut holds = true;
            for key in probes {
                let v = TensorVector::pure(key.clone());
                if apply_sum(action, &r.lhs, &v)? != apply_sum(action, &r.rhs, &v)? {
                    holds = false;
                    break;
                }
            }
            Ok(RelationResult { name: r.name, indices: r.indices, holds })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorRelationReport {
    pub n: usize,
    /// `"generic"` or the rational points used.
    pub points: Vec<String>,
    pub probes: usize,
    pub pass: bool,
    pub per_point: Vec<RelationReport>,
}

/// Checks every relation instance as an operator identity on pure tensors.
///
/// With `points == 0` the check is exact over Q(u); otherwise it runs at
/// that many random rational values of `u`. `canonical` restricts the
/// probes to [`upper_canonical_keys`].
pub fn verify_tensor_relations(
    n: usize,
    points: usize,
    seed: u64,
    canonical: bool,
) -> Result<TensorRelationReport, TensorError> {
    let probes = if canonical { upper_canonical_keys(n) } else { TensorKey::all(n) };
    let mut per_point = Vec::new();
    let mut labels = Vec::new();
    if points == 0 {
        let results = relations_on(&TensorAction::generic(n), &probes)?;
        per_point.push(RelationReport::from_results(n, results));
        labels.push("generic".to_string());
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..points {
            let q = random_rational(&mut rng);
            let results = relations_on(&TensorAction::at(n, &q)?, &probes)?;
            per_point.push(RelationReport::from_results(n, results));
            labels.push(format_rational(&q));
        }
    }
    Ok(TensorRelationReport {
        n,
        pass: per_point.iter().all(|r| r.pass),
        points: labels,
        probes: probes.len(),
        per_point,
    })
}

type ProbeKey = (u32, TensorKey);

/// Row of `g`: the concatenated images `g · p` over the probes.
fn image_row<F: Field>(
    action: &TensorAction<F>,
    key: &BasisKey,
    probes: &[TensorKey],
) -> Result<crate::exactmath::SparseVec<ProbeKey, F>, TensorError> {
    let word = word_expand(key);
    let mut row = crate::exactmath::SparseVec::new();
    for (idx, p) in probes.iter().enumerate() {
        let image = action.act_word(&word, &TensorVector::pure(p.clone()))?;
        for (k, c) in image.into_terms() {
            row.insert((idx as u32, k), c);
        }
    }
    Ok(row)
}

fn image_rank<F: Field>(action: &TensorAction<F>, keys: &[BasisKey], probes: &[TensorKey]) -> Result<usize, TensorError> {
    let rows = keys
        .par_iter()
        .map(|k| image_row(action, k, probes))
        .collect::<Result<Vec<_>, _>>()?;
    let mut basis = EchelonBasis::new();
    for r in rows {
        basis.insert(r);
    }
    Ok(basis.dim())
}

#[derive(Clone, Debug, Serialize)]
pub struct RankWitness {
    /// `"generic"` or the value of `u` as `p/q`.
    pub point: String,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaithfulnessReport {
    pub n: usize,
    pub rank: usize,
    pub expected: usize,
    pub pass: bool,
    pub probes: usize,
    pub strategy: String,
    pub witnesses: Vec<RankWitness>,
}

/// Rank of the images of all basis elements `E_A T_w` on a probe set.
///
/// For `n ≤ 3` the probes are all pure tensors and the rank is exact over
/// Q(u). Beyond that there is one probe per set partition (distinct lower
/// indices, upper pattern equal to the partition); the rank is computed at
/// `u = 1`, where a full rank lifts to generic `u`, and confirmed at
/// `points` random rational values.
pub fn faithfulness_certificate(n: usize, points: usize, seed: u64) -> Result<FaithfulnessReport, TensorError> {
    let keys = BasisKey::all(n);
    let expected = keys.len();
    if n <= 3 {
        let probes = TensorKey::all(n);
        let rank = image_rank(&TensorAction::generic(n), &keys, &probes)?;
        return Ok(FaithfulnessReport {
            n,
            rank,
            expected,
            pass: rank == expected,
            probes: probes.len(),
            strategy: "all pure tensors, exact over Q(u)".into(),
            witnesses: vec![RankWitness { point: "generic".into(), rank }],
        });
    }
    let probes = partition_probes(n);
    let one = Rational::from_integer(1.into());
    let rank = image_rank(&TensorAction::at(n, &one)?, &keys, &probes)?;
    let mut witnesses = vec![RankWitness { point: format_rational(&one), rank }];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..points {
        let q = random_rational(&mut rng);
        let r = image_rank(&TensorAction::at(n, &q)?, &keys, &probes)?;
        witnesses.push(RankWitness { point: format_rational(&q), rank: r });
    }
    Ok(FaithfulnessReport {
        n,
        rank,
        expected,
        pass: witnesses.iter().all(|w| w.rank == expected),
        probes: probes.len(),
        strategy: "one probe per set partition at u = 1, random-point confirmation".into(),
        witnesses,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub n: usize,
    pub m_probes: usize,
    pub m_e_vanishes: bool,
    pub m_t_squared_is_identity: bool,
    pub m_rank: usize,
    pub n_probes: usize,
    pub n_e_is_identity: bool,
    pub n_hecke_quadratic: bool,
    pub n_rank: usize,
    pub expected_rank: usize,
    pub pass: bool,
}

/// Checks on the submodules `M` (upper indices pairwise distinct) and `N`
/// (all upper indices equal to 1), exact over Q(u).
///
/// On `M` every `E_k` vanishes and `T_k^2 = 1`; on `N` every `E_k` is the
/// identity and `(T_k - u)(T_k + 1) = 0`. In both the images of `{T_w}` have
/// rank `n!`. For `n ≥ 4` the `M` probes fix all lower indices to 1.
pub fn quotient_checks(n: usize) -> Result<QuotientReport, TensorError> {
    let a = TensorAction::generic(n);
    let m_probes: Vec<TensorKey> = TensorKey::all(n)
        .into_iter()
        .filter(|k| {
            let mut u = k.uppers();
            u.sort_unstable();
            u.dedup();
            u.len() == n && (n <= 3 || k.lowers().iter().all(|&i| i == 1))
        })
        .collect();
    let n_probes: Vec<TensorKey> =
        TensorKey::all(n).into_iter().filter(|k| k.uppers().iter().all(|&j| j == 1)).collect();

    let mut m_e_vanishes = true;
    let mut m_t_squared_is_identity = true;
    for p in &m_probes {
        let v = TensorVector::pure(p.clone());
        for k in 1..n {
            m_e_vanishes &= a.act_e(k, &v)?.is_zero();
            m_t_squared_is_identity &= a.act_t(k, &a.act_t(k, &v)?)? == v;
        }
    }
    let mut n_e_is_identity = true;
    let mut n_hecke_quadratic = true;
    let u = RatFunc::u();
    for p in &n_probes {
        let v = TensorVector::pure(p.clone());
        for k in 1..n {
            n_e_is_identity &= a.act_e(k, &v)? == v;
            let tv = a.act_t(k, &v)?;
            let t_plus_one = tv.add(&v);
            let quad = a.act_t(k, &t_plus_one)?.sub(&t_plus_one.scale(&u));
            n_hecke_quadratic &= quad.is_zero();
        }
    }
    let t_keys: Vec<BasisKey> = Permutation::all(n)
        .into_iter()
        .map(|w| BasisKey { a: SetPartition::bottom(n), w })
        .collect();
    let m_rank = image_rank(&a, &t_keys, &m_probes)?;
    let n_rank = image_rank(&a, &t_keys, &n_probes)?;
    let expected_rank = t_keys.len();
    Ok(QuotientReport {
        n,
        m_probes: m_probes.len(),
        m_e_vanishes,
        m_t_squared_is_identity,
        m_rank,
        n_probes: n_probes.len(),
        n_e_is_identity,
        n_hecke_quadratic,
        n_rank,
        expected_rank,
        pass: m_e_vanishes
            && m_t_squared_is_identity
            && n_e_is_identity
            && n_hecke_quadratic
            && m_rank == expected_rank
            && n_rank == expected_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probe_sets() {
        assert_eq!(partition_probes(3).len(), 5);
        assert_eq!(upper_canonical_keys(2).len(), 2 * 4);
        assert_eq!(upper_canonical_keys(3).len(), 5 * 27);
    }

    #[test]
    fn faithful_small() {
        assert_eq!(faithfulness_certificate(1, 0, 1).unwrap().rank, 1);
        let r = faithfulness_certificate(2, 0, 1).unwrap();
        assert_eq!((r.rank, r.pass), (4, true));
    }

    #[test]
    fn relations_n2() {
        assert!(verify_tensor_relations(2, 0, 0, false).unwrap().pass);
        assert!(verify_tensor_relations(2, 2, 7, false).unwrap().pass);
    }

    #[test]
    fn quotients_n2() {
        let r = quotient_checks(2).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.m_rank, 2);
    }
}
