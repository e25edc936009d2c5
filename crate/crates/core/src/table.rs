//! The multiplication table of a Lie algebra in a basis
//! `{e_alpha : alpha in Phi} ∪ {h_i : i in I}`.
//!
//! Adjoint basis indices: `0..R` are the root vectors in root-system order,
//! `R..R+n` are the Cartan elements `h_1..h_n`.

use crate::cartan::SignFunction;
use crate::error::{Error, Result};
use crate::roots::RootSystem;

/// A coefficient on one adjoint basis element.
pub type Term = (usize, i64);

#[derive(Debug, Clone)]
pub struct BracketTable {
    rs: RootSystem,
    eps: SignFunction,
    /// `N_{alpha,beta}`, dense `R x R`; zero when `alpha + beta` is not a root.
    constants: Vec<i64>,
    /// `alpha(h_i)`, stored `[i][alpha]`.
    cartan_action: Vec<Vec<i64>>,
    /// `c` with `[e_alpha, e_-alpha] = (-1)^ht(alpha) sum_i c_i h_i`.
    opposite: Vec<Vec<i64>>,
}

impl BracketTable {
    /// An all-zero table with the Cartan action of `rs` filled in.
    pub(crate) fn empty(rs: RootSystem, eps: SignFunction) -> Self {
        let r = rs.len();
        let n = rs.rank();
        let cartan_action = (0..n).map(|i| (0..r).map(|b| rs.simple_pairing(i, b)).collect()).collect();
        BracketTable { constants: vec![0; r * r], cartan_action, opposite: vec![vec![0; n]; r], rs, eps }
    }

    pub fn from_parts(
        rs: RootSystem,
        eps: SignFunction,
        constants: Vec<i64>,
        cartan_action: Vec<Vec<i64>>,
        opposite: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let r = rs.len();
        let n = rs.rank();
        let ok = constants.len() == r * r
            && cartan_action.len() == n
            && cartan_action.iter().all(|row| row.len() == r)
            && opposite.len() == r
            && opposite.iter().all(|row| row.len() == n)
            && eps.len() == n;
        if !ok {
            return Err(Error::InternalInconsistency("table parts have inconsistent sizes".into()));
        }
        Ok(BracketTable { rs, eps, constants, cartan_action, opposite })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn epsilon(&self) -> &SignFunction {
        &self.eps
    }

    pub(crate) fn set_epsilon(&mut self, eps: SignFunction) {
        self.eps = eps;
    }

    /// Dimension of the algebra, `|Phi| + rank`.
    pub fn dim(&self) -> usize {
        self.rs.len() + self.rs.rank()
    }

    #[inline]
    pub fn constant(&self, a: usize, b: usize) -> i64 {
        self.constants[a * self.rs.len() + b]
    }

    /// Overwrites one ordered entry. Only the `(a, b)` slot changes, so this
    /// can break antisymmetry; the verification suites rely on that for
    /// their negative controls.
    pub fn set_constant(&mut self, a: usize, b: usize, value: i64) {
        let r = self.rs.len();
        self.constants[a * r + b] = value;
    }

    pub fn constants(&self) -> &[i64] {
        &self.constants
    }

    /// Coordinates `c` with `[e_alpha, e_-alpha] = (-1)^ht(alpha) sum c_i h_i`.
    pub fn opposite(&self, a: usize) -> &[i64] {
        &self.opposite[a]
    }

    pub fn set_opposite(&mut self, a: usize, coords: Vec<i64>) {
        self.opposite[a] = coords;
    }

    /// `alpha(h_i)`.
    #[inline]
    pub fn cartan_action(&self, i: usize, a: usize) -> i64 {
        self.cartan_action[i][a]
    }

    pub fn cartan_action_rows(&self) -> &[Vec<i64>] {
        &self.cartan_action
    }

    pub fn set_cartan_action(&mut self, i: usize, a: usize, value: i64) {
        self.cartan_action[i][a] = value;
    }

    /// Appends the terms of `c * [b_x, b_y]` to `out`.
    pub fn bracket_basis_into(&self, x: usize, y: usize, c: i64, out: &mut Vec<Term>) {
        let r = self.rs.len();
        match (x < r, y < r) {
            (true, true) => {
                if y == self.rs.neg(x) {
                    let sign = if self.rs.height(x) % 2 == 0 { 1 } else { -1 };
                    for (i, &v) in self.opposite[x].iter().enumerate() {
                        if v != 0 {
                            out.push((r + i, c * sign * v));
                        }
                    }
                } else if let Some(s) = self.rs.sum(x, y) {
                    let n = self.constant(x, y);
                    if n != 0 {
                        out.push((s, c * n));
                    }
                }
            }
            (true, false) => {
                let v = self.cartan_action[y - r][x];
                if v != 0 {
                    out.push((x, -c * v));
                }
            }
            (false, true) => {
                let v = self.cartan_action[x - r][y];
                if v != 0 {
                    out.push((y, c * v));
                }
            }
            (false, false) => {}
        }
    }

    /// `[b_x, b_y]` as a normalized sparse vector.
    pub fn bracket_basis(&self, x: usize, y: usize) -> Vec<Term> {
        let mut out = Vec::new();
        self.bracket_basis_into(x, y, 1, &mut out);
        out
    }

    /// Bilinear extension of the bracket to sparse vectors.
    pub fn bracket(&self, x: &[Term], y: &[Term]) -> Vec<Term> {
        let mut out = Vec::new();
        for &(i, a) in x {
            for &(j, b) in y {
                self.bracket_basis_into(i, j, a * b, &mut out);
            }
        }
        normalize(out)
    }

    /// All unordered pairs `a < b` with `alpha_a + alpha_b` a root, as
    /// `(a, b, sum, N_ab)`.
    pub fn sum_pairs(&self) -> impl Iterator<Item = (usize, usize, usize, i64)> + '_ {
        let r = self.rs.len();
        (0..r).flat_map(move |a| {
            ((a + 1)..r).filter_map(move |b| self.rs.sum(a, b).map(|s| (a, b, s, self.constant(a, b))))
        })
    }

    /// Same as [`BracketTable::sum_pairs`] but over ordered pairs.
    pub fn ordered_sum_pairs(&self) -> impl Iterator<Item = (usize, usize, usize, i64)> + '_ {
        let r = self.rs.len();
        (0..r).flat_map(move |a| (0..r).filter_map(move |b| self.rs.sum(a, b).map(|s| (a, b, s, self.constant(a, b)))))
    }
}

/// Sorts by basis index, merges duplicates and drops zeros.
pub fn normalize(mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_unstable_by_key(|t| t.0);
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == k => last.1 += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|t| t.1 != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_merges_and_drops() {
        assert_eq!(normalize(vec![(3, 1), (1, 2), (3, -1), (1, 1)]), vec![(1, 3)]);
        assert!(normalize(vec![]).is_empty());
    }
}
