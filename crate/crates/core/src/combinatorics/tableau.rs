use super::{IntPartition, Permutation};

/// Row-filled tableau `t^λ`, its stabilizers, and the permutation `w_λ`
/// carrying it to the column-filled tableau `t_λ`.
#[derive(Clone, Debug)]
pub struct TableauData {
    pub shape: IntPartition,
    /// Entries of `t^λ`, row by row.
    pub rows: Vec<Vec<usize>>,
    /// Entries of `t^λ`, column by column.
    pub columns: Vec<Vec<usize>>,
    /// All elements of the row stabilizer `R(λ)`.
    pub row_stabilizer: Vec<Permutation>,
    /// All elements of the column stabilizer `C(λ)`.
    pub col_stabilizer: Vec<Permutation>,
    /// `w_λ t^λ = t_λ`.
    pub w_lambda: Permutation,
}

/// Every permutation of `{1..n}` that maps each set in `sets` to itself.
fn young_subgroup(n: usize, sets: &[Vec<usize>]) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(n)];
    for set in sets {
        let local = Permutation::all(set.len());
        let mut next = Vec::with_capacity(out.len() * local.len());
        for g in &out {
            for h in &local {
                let mut images = g.images();
                for (k, &x) in set.iter().enumerate() {
                    images[x - 1] = set[h.apply(k + 1) - 1];
                }
                next.push(Permutation::from_images(&images).expect("block permutation"));
            }
        }
        out = next;
    }
    out.sort();
    out
}

impl TableauData {
    pub fn new(shape: &IntPartition) -> Self {
        let n = shape.size();
        let mut rows = Vec::new();
        let mut next = 1;
        for &len in shape.parts() {
            rows.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
        let columns: Vec<Vec<usize>> = shape
            .conjugate()
            .parts()
            .iter()
            .enumerate()
            .map(|(c, &h)| (0..h).map(|r| rows[r][c]).collect())
            .collect();
        // t_λ fills the same cells column by column
        let mut images = vec![0; n];
        let mut next = 1;
        for col in &columns {
            for &x in col {
                images[x - 1] = next;
                next += 1;
            }
        }
        TableauData {
            shape: shape.clone(),
            row_stabilizer: young_subgroup(n, &rows),
            col_stabilizer: young_subgroup(n, &columns),
            w_lambda: Permutation::from_images(&images).expect("bijection of cells"),
            rows,
            columns,
        }
    }
}
