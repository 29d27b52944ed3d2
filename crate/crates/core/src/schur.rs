//! Young diagrams, Schur-module dimensions and the `GL_2` decompositions
//! of `∧^k W^{⊕n}` and `W^{⊗m}` for `dim W = 2`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::scalar::binomial;

/// Weakly decreasing list of positive row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct YoungDiagram(Vec<u32>);

impl YoungDiagram {
    /// Returns `None` unless `rows` is weakly decreasing; trailing zeros are dropped.
    pub fn new(mut rows: Vec<u32>) -> Option<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        rows.windows(2).all(|w| w[0] >= w[1]).then_some(YoungDiagram(rows))
    }

    pub fn rows(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn first_row(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    fn column_length(&self, j: u32) -> u32 {
        self.0.iter().take_while(|&&r| r > j).count() as u32
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", rows.join(","))
    }
}

/// Partitions of `total` with at most `max_rows` parts, each part at most
/// `max_part`, first part at least `min_first`, optionally all parts even.
/// Lexicographically decreasing.
fn partitions(total: u32, max_rows: usize, max_part: u32, min_first: u32, even: bool) -> Vec<YoungDiagram> {
    fn rec(left: u32, rows_left: usize, cap: u32, step: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if rows_left == 0 {
            return;
        }
        let mut p = cap.min(left);
        p -= p % step;
        while p > 0 {
            cur.push(p);
            rec(left - p, rows_left - 1, p, step, cur, out);
            cur.pop();
            p -= step;
        }
    }
    let step = if even { 2 } else { 1 };
    if even && total % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(total, max_rows, max_part, step, &mut Vec::new(), &mut out);
    out.into_iter().filter(|r| r.first().copied().unwrap_or(0) >= min_first).map(YoungDiagram).collect()
}

/// Diagrams indexing `N^k(A^e)`: `2k` boxes, even rows, at most `e` rows,
/// first row at most `2n`.
pub fn enumerate_hodge_diagrams(n: u32, e: usize, k: u32) -> Vec<YoungDiagram> {
    partitions(2 * k, e, 2 * n, 0, true)
}

/// Diagrams indexing `Sym^k N¹(A^e) = Sym^k Sym² W`.
pub fn enumerate_sym_diagrams(e: usize, k: u32) -> Vec<YoungDiagram> {
    partitions(2 * k, e, 2 * k, 0, true)
}

/// Diagrams of the degree-`k` slice of the ideal generated in degree `kmin`.
pub fn ideal_slice_diagrams(e: usize, k: u32, kmin: u32) -> Vec<YoungDiagram> {
    partitions(2 * k, e, 2 * k, 2 * kmin, true)
}

/// `dim S_σ(R^e)` by the hook-content formula.
pub fn schur_dim(sigma: &YoungDiagram, e: usize) -> u128 {
    if sigma.num_rows() > e {
        return 0;
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in sigma.rows().iter().enumerate() {
        for j in 0..row {
            let content = e as i64 + j as i64 - i as i64;
            num *= content as u64;
            let hook = (row - j - 1) + (sigma.column_length(j) - i as u32 - 1) + 1;
            den *= hook;
        }
    }
    (num / den).to_u128().expect("dimension fits in u128")
}

/// The irreducible `GL_2`-module `det^{⊗l} ⊗ Sym^m W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IrredLabel {
    pub l: u32,
    pub m: u32,
}

impl IrredLabel {
    pub fn new(l: u32, m: u32) -> Self {
        IrredLabel { l, m }
    }

    pub fn dim(&self) -> u128 {
        self.m as u128 + 1
    }

    /// Total degree `2l + m` in `W`.
    pub fn weight(&self) -> u32 {
        2 * self.l + self.m
    }
}

impl fmt::Display for IrredLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l, self.m)
    }
}

/// `W^{⊗m} = ⊕_i (det^{⊗i} ⊗ Sym^{m−2i} W)^{⊕ C(m,i) − C(m,i−1)}`.
pub fn tensor_power_decomposition(m: u32) -> Vec<(IrredLabel, u128)> {
    let m64 = m as i64;
    (0..=m / 2)
        .map(|i| {
            let i64_ = i as i64;
            (IrredLabel::new(i, m - 2 * i), binomial(m64, i64_) - binomial(m64, i64_ - 1))
        })
        .collect()
}

/// `∧^k W^{⊕n}` as a sum of irreducibles, sorted by label.
///
/// Choosing which of the `n` summands contribute `∧² W = det`, `W` or
/// nothing gives `Σ_s C(n,s) C(n−s,k−2s) · det^{⊗s} ⊗ W^{⊗(k−2s)}`.
pub fn wedge_decomposition(n: u32, k: u32) -> Vec<(IrredLabel, u128)> {
    let mut acc: BTreeMap<IrredLabel, u128> = BTreeMap::new();
    for s in 0..=k / 2 {
        let ways = binomial(n as i64, s as i64) * binomial(n as i64 - s as i64, k as i64 - 2 * s as i64);
        if ways == 0 {
            continue;
        }
        for (label, mult) in tensor_power_decomposition(k - 2 * s) {
            *acc.entry(IrredLabel::new(label.l + s, label.m)).or_default() += ways * mult;
        }
    }
    acc.into_iter().filter(|(_, m)| *m > 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn diagram_examples() {
        assert_eq!(enumerate_hodge_diagrams(2, 2, 3), vec![d(&[4, 2])]);
        assert_eq!(enumerate_hodge_diagrams(5, 2, 1), vec![d(&[2])]);
        assert_eq!(enumerate_hodge_diagrams(1, 2, 2), vec![d(&[2, 2])]);
        assert_eq!(enumerate_sym_diagrams(2, 2), vec![d(&[4]), d(&[2, 2])]);
        assert_eq!(enumerate_sym_diagrams(3, 2), vec![d(&[4]), d(&[2, 2])]);
        assert_eq!(enumerate_sym_diagrams(3, 3), vec![d(&[6]), d(&[4, 2]), d(&[2, 2, 2])]);
        assert_eq!(ideal_slice_diagrams(2, 3, 3), vec![d(&[6])]);
        assert!(YoungDiagram::new(vec![1, 2]).is_none());
        assert_eq!(YoungDiagram::new(vec![3, 1, 0]).unwrap().rows(), &[3, 1]);
    }

    #[test]
    fn schur_dim_examples() {
        assert_eq!(schur_dim(&d(&[2]), 2), 3);
        assert_eq!(schur_dim(&d(&[2, 2]), 2), 1);
        assert_eq!(schur_dim(&d(&[4, 2]), 2), 3);
        assert_eq!(schur_dim(&d(&[4]), 3), 15);
        assert_eq!(schur_dim(&d(&[2, 2]), 3), 6);
        assert_eq!(schur_dim(&d(&[1, 1, 1]), 2), 0);
        assert_eq!(schur_dim(&d(&[]), 4), 1);
        // ∧^3 R^5 and Sym^3 R^4
        assert_eq!(schur_dim(&d(&[1, 1, 1]), 5), 10);
        assert_eq!(schur_dim(&d(&[3]), 4), 20);
    }

    #[test]
    fn sym_diagrams_account_for_sym_k_sym2() {
        for e in 1..=4usize {
            let n1 = binomial(e as i64 + 1, 2) as i64;
            for k in 0..=5u32 {
                let total: u128 = enumerate_sym_diagrams(e, k).iter().map(|s| schur_dim(s, e)).sum();
                assert_eq!(total, binomial(n1 + k as i64 - 1, k as i64), "e={e} k={k}");
            }
        }
    }

    #[test]
    fn hodge_is_sym_minus_ideal() {
        for n in 1..=3u32 {
            for e in 1..=3usize {
                for k in 0..=n * e as u32 {
                    let mut sym = enumerate_sym_diagrams(e, k);
                    let ideal = ideal_slice_diagrams(e, k, n + 1);
                    sym.retain(|s| !ideal.contains(s));
                    assert_eq!(sym, enumerate_hodge_diagrams(n, e, k));
                }
            }
        }
    }

    #[test]
    fn mu_graded_dimension_count() {
        for k in 0..=8u32 {
            let graded: u128 = (0..=k / 2).map(|i| (2 * k - 4 * i + 1) as u128).sum();
            assert_eq!(graded, binomial(k as i64 + 2, 2));
        }
    }

    #[test]
    fn tensor_power_examples() {
        assert_eq!(tensor_power_decomposition(0), vec![(IrredLabel::new(0, 0), 1)]);
        assert_eq!(tensor_power_decomposition(2), vec![(IrredLabel::new(0, 2), 1), (IrredLabel::new(1, 0), 1)]);
        assert_eq!(tensor_power_decomposition(3), vec![(IrredLabel::new(0, 3), 1), (IrredLabel::new(1, 1), 2)]);
        for m in 0..=8 {
            let total: u128 = tensor_power_decomposition(m).iter().map(|(l, c)| l.dim() * c).sum();
            assert_eq!(total, 1 << m);
        }
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(wedge_decomposition(3, 2), vec![(IrredLabel::new(0, 2), 3), (IrredLabel::new(1, 0), 6)]);
        assert_eq!(wedge_decomposition(3, 3), vec![(IrredLabel::new(0, 3), 1), (IrredLabel::new(1, 1), 8)]);
        assert_eq!(wedge_decomposition(3, 4), vec![(IrredLabel::new(1, 2), 3), (IrredLabel::new(2, 0), 6)]);
        assert_eq!(wedge_decomposition(2, 4), vec![(IrredLabel::new(2, 0), 1)]);
        for n in 0..=5u32 {
            for k in 0..=2 * n {
                let total: u128 = wedge_decomposition(n, k).iter().map(|(l, c)| l.dim() * c).sum();
                assert_eq!(total, binomial(2 * n as i64, k as i64), "n={n} k={k}");
            }
        }
    }
}
