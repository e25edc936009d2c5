//! Root systems generated from a Cartan matrix.
//!
//! Roots are integer coefficient vectors over the simple roots. A
//! [`RootSystem`] stores them in a fixed order: positive roots sorted by
//! height and then by descending coefficient vector (so the simple roots
//! come first, in node order), followed by their negatives in the same
//! order. Index `k + P` is always the negative of index `k` for
//! `k < P = positive_count`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::cartan::CartanMatrix;
use crate::error::{Error, Result};

/// `alpha = sum_i n_i alpha_i`; all nonzero coefficients share one sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root(coeffs)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().any(|&c| c > 0)
    }

    /// `+1` for positive roots and `-1` for negative ones, read off the
    /// first nonzero coefficient.
    pub fn sign(&self) -> i64 {
        self.0.iter().find(|&&c| c != 0).map_or(0, |c| c.signum())
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Root {
    /// Compact form: `1110`, `-0110`. Coefficients above 9 are separated
    /// by commas instead.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let negative = self.sign() < 0;
        if negative {
            f.write_str("-")?;
        }
        let wide = self.0.iter().any(|c| c.abs() > 9);
        for (k, c) in self.0.iter().enumerate() {
            if wide && k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c.abs())?;
        }
        Ok(())
    }
}

impl FromStr for Root {
    type Err = Error;

    /// Accepts the compact form (`1110`, `-0110`) or comma separated signed
    /// coefficients (`1,1,1,0`, `0,-1,-1,0`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::NotARoot(format!("cannot parse {s:?}"));
        if s.contains(',') {
            let coeffs = s
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Root(coeffs));
        }
        let (sign, digits) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s.strip_prefix('+').unwrap_or(s)),
        };
        if digits.is_empty() {
            return Err(bad());
        }
        let coeffs = digits
            .chars()
            .map(|c| c.to_digit(10).map(|d| sign * d as i64).ok_or_else(bad))
            .collect::<Result<Vec<_>>>()?;
        Ok(Root(coeffs))
    }
}

/// Coordinates `c` with `h_alpha = sum_i c_i h_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CorootVector(pub Vec<i64>);

const NO_ROOT: u32 = u32::MAX;

/// The full root system of a Cartan matrix with index lookups.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanMatrix,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    positive_count: usize,
    /// `<alpha_i, beta> = beta(h_i)`, stored `[beta][i]`.
    simple_pairings: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    /// Dense `R x R` table of `alpha + beta`.
    sums: Vec<u32>,
}

impl RootSystem {
    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    #[inline]
    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn find(&self, root: &Root) -> Option<usize> {
        self.index.get(root.coeffs()).copied()
    }

    pub fn find_coeffs(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// Index of the simple root `alpha_i` (0-based node).
    #[inline]
    pub fn simple(&self, i: usize) -> usize {
        i
    }

    #[inline]
    pub fn neg(&self, k: usize) -> usize {
        if k < self.positive_count {
            k + self.positive_count
        } else {
            k - self.positive_count
        }
    }

    #[inline]
    pub fn is_positive(&self, k: usize) -> bool {
        k < self.positive_count
    }

    #[inline]
    pub fn height(&self, k: usize) -> i64 {
        self.roots[k].height()
    }

    /// Index of `alpha + beta` when it is a root.
    #[inline]
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        match self.sums[a * self.roots.len() + b] {
            NO_ROOT => None,
            s => Some(s as usize),
        }
    }

    /// `<alpha_i, beta> = beta(h_i) = sum_j a_ij m_j`.
    #[inline]
    pub fn simple_pairing(&self, i: usize, b: usize) -> i64 {
        self.simple_pairings[b][i]
    }

    /// Coroot coordinates of root `a`.
    pub fn coroot(&self, a: usize) -> CorootVector {
        CorootVector(self.coroots[a].clone())
    }

    pub fn coroot_coords(&self, a: usize) -> &[i64] {
        &self.coroots[a]
    }

    /// `<alpha, beta> = beta(h_alpha)`.
    pub fn pairing(&self, a: usize, b: usize) -> i64 {
        self.coroots[a].iter().zip(&self.simple_pairings[b]).map(|(c, p)| c * p).sum()
    }

    /// Lengths `(p, q)` of the `alpha`-string through `beta`:
    /// `beta - q alpha, .., beta, .., beta + p alpha`.
    pub fn string_lengths(&self, a: usize, b: usize) -> Result<(i64, i64)> {
        if a == b || self.neg(a) == b {
            return Err(Error::DegeneratePair);
        }
        let na = self.neg(a);
        let walk = |step: usize| {
            let mut k = 0;
            let mut cur = b;
            while let Some(next) = self.sum(step, cur) {
                k += 1;
                cur = next;
            }
            k
        };
        Ok((walk(a), walk(na)))
    }

    /// `q_{alpha,beta}` for a pair whose sum is a root.
    pub fn q(&self, a: usize, b: usize) -> i64 {
        self.string_lengths(a, b).map(|(_, q)| q).unwrap_or(0)
    }

    /// `alpha(h_i)` for all nodes `i`.
    pub fn simple_pairings_of(&self, b: usize) -> &[i64] {
        &self.simple_pairings[b]
    }
}

/// Generates all roots by height induction. A positive root `beta` and a
/// node `i` with `beta != alpha_i` give the root `beta + alpha_i` exactly
/// when the `alpha_i`-string through `beta` extends upward, i.e. when
/// `p = q - <alpha_i, beta>` is positive; `q` is read off the roots of lower
/// height.
pub fn generate_roots(cm: &CartanMatrix) -> RootSystem {
    let n = cm.rank();
    let pair_simple = |coeffs: &[i64], i: usize| -> i64 { (0..n).map(|j| cm.entry(i, j) * coeffs[j]).sum() };

    let mut positive: Vec<Vec<i64>> = (0..n).map(|i| Root::simple(n, i).0).collect();
    let mut known: std::collections::HashSet<Vec<i64>> = positive.iter().cloned().collect();
    let mut level: Vec<Vec<i64>> = positive.clone();
    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            for i in 0..n {
                let is_simple_i = beta[i] == 1 && beta.iter().sum::<i64>() == 1;
                if is_simple_i {
                    continue;
                }
                let mut q = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                let p = q - pair_simple(beta, i);
                if p > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort_by(|a, b| b.cmp(a));
        positive.extend(next.iter().cloned());
        level = next;
    }
    positive.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });

    let positive_count = positive.len();
    let mut roots: Vec<Root> = positive.iter().cloned().map(Root).collect();
    roots.extend(positive.iter().map(|c| Root(c.iter().map(|v| -v).collect())));
    let index: HashMap<Vec<i64>, usize> = roots.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();

    let simple_pairings: Vec<Vec<i64>> =
        roots.iter().map(|r| (0..n).map(|i| pair_simple(&r.0, i)).collect()).collect();

    let s = cm.symmetrizer();
    let coroots: Vec<Vec<i64>> = roots
        .iter()
        .map(|r| {
            // (alpha, alpha)/2 in units where (alpha_i, alpha_j) = s_i a_ij.
            let norm: i64 = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| r.0[i] * r.0[j] * s[i] * cm.entry(i, j))
                .sum::<i64>()
                / 2;
            r.0.iter()
                .zip(&s)
                .map(|(ni, si)| {
                    debug_assert_eq!(ni * si % norm, 0);
                    ni * si / norm
                })
                .collect()
        })
        .collect();

    let len = roots.len();
    let mut sums = vec![NO_ROOT; len * len];
    let mut buf = vec![0i64; n];
    for a in 0..len {
        for b in 0..len {
            for ((dst, x), y) in buf.iter_mut().zip(&roots[a].0).zip(&roots[b].0) {
                *dst = x + y;
            }
            if let Some(&k) = index.get(&buf) {
                sums[a * len + b] = k as u32;
            }
        }
    }

    RootSystem { cartan: cm.clone(), roots, index, positive_count, simple_pairings, coroots, sums }
}
