use std::collections::BTreeMap;

use num_traits::One;
use serde::Serialize;

use super::{eval_word, AlgebraElement, AlgebraError, GeneratorWord, Letter};
use crate::exactmath::RatFunc;

/// A linear combination of generator words.
pub type WordSum = Vec<(RatFunc, GeneratorWord)>;

/// One instance of a defining relation or derived identity, `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub name: &'static str,
    pub indices: Vec<usize>,
    pub lhs: WordSum,
    pub rhs: WordSum,
}

fn word(letters: &[Letter]) -> WordSum {
    vec![(RatFunc::one(), letters.to_vec())]
}

fn inst(name: &'static str, indices: &[usize], lhs: WordSum, rhs: WordSum) -> RelationInstance {
    RelationInstance { name, indices: indices.to_vec(), lhs, rhs }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |i| (1..n).map(move |j| (i, j)))
}

/// Every instance of the nine defining relations at size `n`, plus
/// `T_i T_i^{-1} = T_i^{-1} T_i = 1`.
pub fn relation_instances(n: usize) -> Vec<RelationInstance> {
    use Letter::{Tinv, E, T};
    let mut out = Vec::new();
    for (i, j) in pairs(n) {
        let far = i.abs_diff(j) > 1;
        let adjacent = i.abs_diff(j) == 1;
        if far && i < j {
            out.push(inst("E1", &[i, j], word(&[T(i), T(j)]), word(&[T(j), T(i)])));
        }
        if i < j {
            out.push(inst("E2", &[i, j], word(&[E(i), E(j)]), word(&[E(j), E(i)])));
        }
        if far {
            out.push(inst("E3", &[i, j], word(&[E(i), T(j)]), word(&[T(j), E(i)])));
        }
        if adjacent {
            if i < j {
                out.push(inst("E6", &[i, j], word(&[T(i), T(j), T(i)]), word(&[T(j), T(i), T(j)])));
            }
            out.push(inst("E7", &[i, j], word(&[E(j), T(i), T(j)]), word(&[T(i), T(j), E(i)])));
            out.push(inst("E8", &[i, j], word(&[E(i), E(j), T(j)]), word(&[E(i), T(j), E(i)])));
            out.push(inst("E8", &[i, j], word(&[E(i), T(j), E(i)]), word(&[T(j), E(i), E(j)])));
        }
    }
    for i in 1..n {
        out.push(inst("E4", &[i], word(&[E(i), E(i)]), word(&[E(i)])));
        out.push(inst("E5", &[i], word(&[E(i), T(i)]), word(&[T(i), E(i)])));
        let um1 = RatFunc::u_minus_one();
        out.push(inst(
            "E9",
            &[i],
            word(&[T(i), T(i)]),
            vec![(RatFunc::one(), vec![]), (um1.clone(), vec![E(i)]), (um1, vec![E(i), T(i)])],
        ));
        out.push(inst("inverse", &[i], word(&[T(i), Tinv(i)]), word(&[])));
        out.push(inst("inverse", &[i], word(&[Tinv(i), T(i)]), word(&[])));
    }
    out.sort_by(|a, b| (a.name, &a.indices).cmp(&(b.name, &b.indices)));
    out
}

/// The three conjugation identities for adjacent `i, j`:
/// (a) `T_j E_i T_j^{-1} = T_i^{-1} E_j T_i`,
/// (b) `T_i^{-1} T_j E_i = E_j T_i^{-1} T_j`,
/// (c) `T_j E_i T_j^{-1} = T_i E_j T_i^{-1}`.
pub fn formula_instances(n: usize) -> Vec<RelationInstance> {
    use Letter::{Tinv, E, T};
    let mut out = Vec::new();
    for (i, j) in pairs(n).filter(|(i, j)| i.abs_diff(*j) == 1) {
        out.push(inst("formula-a", &[i, j], word(&[T(j), E(i), Tinv(j)]), word(&[Tinv(i), E(j), T(i)])));
        out.push(inst("formula-b", &[i, j], word(&[Tinv(i), T(j), E(i)]), word(&[E(j), Tinv(i), T(j)])));
        out.push(inst("formula-c", &[i, j], word(&[T(j), E(i), Tinv(j)]), word(&[T(i), E(j), Tinv(i)])));
    }
    out
}

pub fn eval_word_sum(sum: &WordSum, n: usize) -> Result<AlgebraElement, AlgebraError> {
    let mut acc = AlgebraElement::zero(n);
    for (c, w) in sum {
        acc = acc.try_add(&eval_word(w, n)?.scale(c))?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationResult {
    pub name: &'static str,
    pub indices: Vec<usize>,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub pass: bool,
    /// Relation name to (instances checked, instances holding).
    pub summary: BTreeMap<&'static str, (usize, usize)>,
    pub results: Vec<RelationResult>,
}

impl RelationReport {
    pub fn from_results(n: usize, results: Vec<RelationResult>) -> Self {
        let mut summary: BTreeMap<&'static str, (usize, usize)> = BTreeMap::new();
        for r in &results {
            let e = summary.entry(r.name).or_default();
            e.0 += 1;
            e.1 += r.holds as usize;
        }
        RelationReport { n, pass: results.iter().all(|r| r.holds), summary, results }
    }
}

fn check(instances: Vec<RelationInstance>, n: usize) -> Result<RelationReport, AlgebraError> {
    let results = instances
        .into_iter()
        .map(|r| {
            let holds = eval_word_sum(&r.lhs, n)? == eval_word_sum(&r.rhs, n)?;
            Ok(RelationResult { name: r.name, indices: r.indices, holds })
        })
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    Ok(RelationReport::from_results(n, results))
}

/// Evaluates both sides of every relation instance in normal form.
pub fn verify_relations(n: usize) -> Result<RelationReport, AlgebraError> {
    check(relation_instances(n), n)
}

pub fn verify_formulas(n: usize) -> Result<RelationReport, AlgebraError> {
    check(formula_instances(n), n)
}
