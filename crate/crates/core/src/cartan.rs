//! Cartan matrices of finite type, sign functions on the Dynkin diagram and
//! diagram automorphisms usable for folding.
//!
//! Nodes are stored 0-based internally; the public labels are `1..=n`, with
//! the numbering of the usual tables:
//!
//! * `A_n`: a chain `1 - 2 - ... - n`.
//! * `B_n`: a chain with a double edge between 1 and 2, arrow towards 1
//!   (`a_12 = -2`, `a_21 = -1`; node 1 is the short simple root).
//! * `C_n`: a chain with a double edge between 1 and 2, arrow towards 2
//!   (`a_12 = -1`, `a_21 = -2`; node 1 is the long simple root).
//! * `D_n`: nodes 1 and 2 both attached to 3, then a chain `3 - 4 - ... - n`.
//! * `E_n`: the chain `1 - 3 - 4 - 5 - ... - n` with node 2 attached to 4.
//! * `F_4`: the chain `1 - 2 => 3 - 4` with `a_23 = -1`, `a_32 = -2`.
//! * `G_2`: `a_12 = -1`, `a_21 = -3`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The seven families of finite-type Dynkin diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A legal (family, rank) pair such as `E8` or `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let legal = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if legal {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::IllegalType(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::IllegalType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::IllegalType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An indecomposable Cartan matrix of finite type, `a_ij = <alpha_i, alpha_j>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    cartan_type: CartanType,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// `a_ij` for 0-based node indices.
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Symmetric with off-diagonal entries in {0, -1}.
    pub fn is_simply_laced(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| i == j || matches!(self.entries[i][j], 0 | -1)))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.entries[i][j] != 0
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| self.adjacent(i, j))
    }

    /// Minimal positive integers `s` with `s_i a_ij = s_j a_ji`.
    pub fn symmetrizer(&self) -> Vec<i64> {
        let n = self.rank();
        // Every ratio along an edge is 1, 2, 3 or its inverse and a finite
        // diagram has at most one multiple edge, so starting from 6 keeps
        // everything integral.
        let mut s = vec![0i64; n];
        s[0] = 6;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in self.neighbors(i).collect::<Vec<_>>() {
                if s[j] == 0 {
                    s[j] = s[i] * self.entries[i][j] / self.entries[j][i];
                    queue.push_back(j);
                }
            }
        }
        let g = s.iter().copied().fold(0, num_integer::gcd);
        s.iter().map(|v| v / g).collect()
    }
}

/// Checks the structural invariants of a finite-type Cartan matrix: diagonal
/// 2, non-positive off-diagonal entries with symmetric zero pattern, bond
/// multiplicities `a_ij a_ji` in {1,2,3} with one of the two entries `-1`,
/// and a connected diagram.
pub fn validate_entries(entries: &[Vec<i64>]) -> Result<()> {
    let n = entries.len();
    if n == 0 {
        return Err(Error::InvalidCartan("empty matrix".into()));
    }
    for (i, row) in entries.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidCartan(format!("row {} has length {}", i + 1, row.len())));
        }
        if row[i] != 2 {
            return Err(Error::InvalidCartan(format!("a_{0}{0} = {1} != 2", i + 1, row[i])));
        }
    }
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (entries[i][j], entries[j][i]);
            if a > 0 || b > 0 {
                return Err(Error::InvalidCartan(format!("positive off-diagonal entry at ({}, {})", i + 1, j + 1)));
            }
            if (a == 0) != (b == 0) {
                return Err(Error::InvalidCartan(format!("a_{0}{1} and a_{1}{0} disagree on zero", i + 1, j + 1)));
            }
            if a != 0 && !((a == -1 && (-3..=-1).contains(&b)) || (b == -1 && (-3..=-1).contains(&a))) {
                return Err(Error::InvalidCartan(format!("illegal bond ({a}, {b}) between {} and {}", i + 1, j + 1)));
            }
        }
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if !seen[j] && entries[i][j] != 0 {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::InvalidCartan("diagram is not connected".into()));
    }
    Ok(())
}

/// Builds the Cartan matrix of the given type with the node numbering
/// documented at the top of this module.
pub fn build_cartan(ty: CartanType) -> CartanMatrix {
    let n = ty.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match ty.family() {
        Family::A | Family::B | Family::C => (1..n).for_each(|i| bond(i, i + 1)),
        Family::D => {
            bond(1, 3);
            bond(2, 3);
            (3..n).for_each(|i| bond(i, i + 1));
        }
        Family::E => {
            bond(1, 3);
            bond(2, 4);
            (3..n).for_each(|i| bond(i, i + 1));
        }
        Family::F => {
            bond(1, 2);
            bond(2, 3);
            bond(3, 4);
        }
        Family::G => bond(1, 2),
    }
    match ty.family() {
        Family::B => a[0][1] = -2,
        Family::C => a[1][0] = -2,
        Family::F => a[2][1] = -2,
        Family::G => a[1][0] = -3,
        _ => {}
    }
    debug_assert!(validate_entries(&a).is_ok());
    CartanMatrix { cartan_type: ty, entries: a }
}

impl FromStr for CartanMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(build_cartan(s.parse()?))
    }
}

/// A sign function on the nodes; valid when it is a proper 2-coloring of
/// the Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignFunction {
    values: Vec<i64>,
}

impl SignFunction {
    /// Wraps raw values. Entries must be `+1` or `-1`; use
    /// [`SignFunction::validate`] to check the coloring property.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| v.abs() != 1) {
            return Err(Error::InvalidEpsilon(format!("value {v} is not \u{b1}1")));
        }
        Ok(SignFunction { values })
    }

    #[inline]
    pub fn get(&self, i: usize) -> i64 {
        self.values[i]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn flip(&self) -> SignFunction {
        SignFunction { values: self.values.iter().map(|v| -v).collect() }
    }

    pub fn validate(&self, cm: &CartanMatrix) -> Result<()> {
        if self.values.len() != cm.rank() {
            return Err(Error::InvalidEpsilon(format!(
                "{} values for rank {}",
                self.values.len(),
                cm.rank()
            )));
        }
        for i in 0..cm.rank() {
            for j in cm.neighbors(i) {
                if self.values[i] == self.values[j] {
                    return Err(Error::InvalidEpsilon(format!(
                        "adjacent nodes {} and {} have the same sign",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Restriction to the given nodes, in that order.
    pub fn restrict(&self, nodes: &[usize]) -> SignFunction {
        SignFunction { values: nodes.iter().map(|&i| self.values[i]).collect() }
    }
}

impl fmt::Display for SignFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", i + 1, if *v > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// The tabulated sign function of each type: anchored at one node and
/// propagated by 2-coloring.
///
/// `A`, `D`, `E`, `B`: node 1 is `+`; `C_n`: node `n` is `+`;
/// `F_4`, `G_2`: node 1 is `-`. These agree with the signs obtained by
/// restricting the simply-laced signs along the standard foldings.
pub fn default_epsilon(cm: &CartanMatrix) -> SignFunction {
    let n = cm.rank();
    let (anchor, sign) = match cm.cartan_type().family() {
        Family::A | Family::B | Family::D | Family::E => (0, 1),
        Family::C => (n - 1, 1),
        Family::F | Family::G => (0, -1),
    };
    let mut values = vec![0i64; n];
    values[anchor] = sign;
    let mut queue = VecDeque::from([anchor]);
    while let Some(i) = queue.pop_front() {
        for j in cm.neighbors(i) {
            if values[j] == 0 {
                values[j] = -values[i];
                queue.push_back(j);
            }
        }
    }
    SignFunction { values }
}

/// A permutation `i -> i'` of the nodes satisfying `a_ij = a_i'j'` and
/// `a_ii' = 0` whenever `i' != i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    perm: Vec<usize>,
    orbits: Vec<Vec<usize>>,
    order: usize,
}

impl DiagramAutomorphism {
    /// Builds the automorphism from its cycles, given with 0-based nodes.
    /// Each cycle `[c0, c1, ..]` maps `c0 -> c1 -> .. -> c0`; the listing
    /// order of the cycles is kept as the orbit order.
    pub fn from_cycles(cm: &CartanMatrix, cycles: &[Vec<usize>]) -> Result<Self> {
        let n = cm.rank();
        let mut perm = vec![usize::MAX; n];
        for cycle in cycles {
            if cycle.is_empty() {
                return Err(Error::InvalidAutomorphism("empty cycle".into()));
            }
            for (k, &i) in cycle.iter().enumerate() {
                if i >= n || perm[i] != usize::MAX {
                    return Err(Error::InvalidAutomorphism(format!("node {} repeated or out of range", i + 1)));
                }
                perm[i] = cycle[(k + 1) % cycle.len()];
            }
        }
        if perm.contains(&usize::MAX) {
            return Err(Error::InvalidAutomorphism("cycles do not cover every node".into()));
        }
        let order = cycles.iter().map(|c| c.len()).fold(1, num_integer::lcm);
        let auto = DiagramAutomorphism { perm, orbits: cycles.to_vec(), order };
        auto.check_conditions(cm)?;
        Ok(auto)
    }

    pub fn identity(cm: &CartanMatrix) -> Self {
        let n = cm.rank();
        DiagramAutomorphism { perm: (0..n).collect(), orbits: (0..n).map(|i| vec![i]).collect(), order: 1 }
    }

    /// Verifies symmetry of the diagram, disconnected orbits and `d <= 3`.
    pub fn check_conditions(&self, cm: &CartanMatrix) -> Result<()> {
        let n = cm.rank();
        if self.perm.len() != n {
            return Err(Error::InvalidAutomorphism(format!("permutation of {} nodes for rank {n}", self.perm.len())));
        }
        for i in 0..n {
            for j in 0..n {
                if cm.entry(i, j) != cm.entry(self.perm[i], self.perm[j]) {
                    return Err(Error::InvalidAutomorphism(format!(
                        "a_{}{} != a_{}{}",
                        i + 1,
                        j + 1,
                        self.perm[i] + 1,
                        self.perm[j] + 1
                    )));
                }
            }
            for &j in self.orbit_of_node(i) {
                if j != i && cm.entry(i, j) != 0 {
                    return Err(Error::InvalidAutomorphism(format!(
                        "nodes {} and {} lie in one orbit but are joined",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if self.order > 3 {
            return Err(Error::InvalidAutomorphism(format!("order {} exceeds 3", self.order)));
        }
        Ok(())
    }

    /// `i'` for a 0-based node `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Node orbits in listing order; the first element of each is its
    /// representative.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of_node(&self, i: usize) -> &[usize] {
        self.orbits.iter().find(|o| o.contains(&i)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Orbits written with 1-based labels, e.g. `[[3], [1, 2, 4]]`.
    pub fn labelled_orbits(&self) -> Vec<Vec<usize>> {
        self.orbits.iter().map(|o| o.iter().map(|i| i + 1).collect()).collect()
    }
}

/// The tabulated foldable symmetry of `A_{2n-1}` (n >= 2), `D_{n+1}`
/// (n >= 3, order 2), `D_4` (triality) and `E_6`, with orbits in the
/// tabulated order.
pub fn standard_automorphism(cm: &CartanMatrix) -> Result<DiagramAutomorphism> {
    let ty = cm.cartan_type();
    let r = ty.rank();
    let cycles: Vec<Vec<usize>> = match ty.family() {
        Family::A if r >= 3 && r % 2 == 1 => {
            let n = r.div_ceil(2);
            let mut c = vec![vec![n - 1]];
            for k in 1..n {
                c.push(vec![n - 1 - k, n - 1 + k]);
            }
            c
        }
        Family::D if r == 4 => vec![vec![2], vec![0, 1, 3]],
        Family::D if r >= 5 => d_swap_cycles(r),
        Family::E if r == 6 => vec![vec![1], vec![3], vec![2, 4], vec![0, 5]],
        _ => return Err(Error::NoFoldableSymmetry(ty.to_string())),
    };
    DiagramAutomorphism::from_cycles(cm, &cycles)
}

fn d_swap_cycles(rank: usize) -> Vec<Vec<usize>> {
    let mut c = vec![vec![0, 1]];
    c.extend((2..rank).map(|i| vec![i]));
    c
}

/// The simply-laced type and automorphism whose fold produces `target`:
/// `C_n <- A_{2n-1}`, `B_n <- D_{n+1}`, `G_2 <- D_4` (triality),
/// `F_4 <- E_6`.
///
/// `B_2` is obtained from `D_3` by the same swap of nodes 1 and 2.
pub fn folding_source(target: CartanType) -> Result<(CartanMatrix, DiagramAutomorphism)> {
    let n = target.rank();
    match target.family() {
        Family::C => {
            let parent = build_cartan(CartanType::new(Family::A, 2 * n - 1)?);
            let auto = standard_automorphism(&parent)?;
            Ok((parent, auto))
        }
        Family::B => {
            let parent = build_cartan(CartanType::new(Family::D, n + 1)?);
            let auto = DiagramAutomorphism::from_cycles(&parent, &d_swap_cycles(n + 1))?;
            Ok((parent, auto))
        }
        Family::G => {
            let parent = build_cartan(CartanType::new(Family::D, 4)?);
            let auto = standard_automorphism(&parent)?;
            Ok((parent, auto))
        }
        Family::F => {
            let parent = build_cartan(CartanType::new(Family::E, 6)?);
            let auto = standard_automorphism(&parent)?;
            Ok((parent, auto))
        }
        _ => Err(Error::IllegalType(format!("{target} is simply laced and is not obtained by folding"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(s: &str) -> CartanMatrix {
        s.parse().unwrap()
    }

    fn all_types() -> Vec<CartanType> {
        let mut v = Vec::new();
        for n in 1..=8 {
            v.push(CartanType::new(Family::A, n).unwrap());
        }
        for n in 2..=6 {
            v.push(CartanType::new(Family::B, n).unwrap());
            v.push(CartanType::new(Family::C, n).unwrap());
        }
        for n in 3..=7 {
            v.push(CartanType::new(Family::D, n).unwrap());
        }
        for n in 6..=8 {
            v.push(CartanType::new(Family::E, n).unwrap());
        }
        v.push(CartanType::new(Family::F, 4).unwrap());
        v.push(CartanType::new(Family::G, 2).unwrap());
        v
    }

    #[test]
    fn small_matrices() {
        assert_eq!(cm("A2").entries(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(cm("G2").entries(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(cm("A1").entries(), &[vec![2]]);
        assert_eq!(cm("B2").entries(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(cm("C2").entries(), &[vec![2, -1], vec![-2, 2]]);
    }

    #[test]
    fn e_series_branch_node() {
        let e6 = cm("E6");
        let nbrs: Vec<usize> = e6.neighbors(1).collect();
        assert_eq!(nbrs, vec![3]);
        let nbrs: Vec<usize> = e6.neighbors(3).collect();
        assert_eq!(nbrs, vec![1, 2, 4]);
    }

    #[test]
    fn illegal_types() {
        assert!(matches!("B1".parse::<CartanType>(), Err(Error::IllegalType(_))));
        assert!(matches!("E9".parse::<CartanType>(), Err(Error::IllegalType(_))));
        assert!(matches!("D2".parse::<CartanType>(), Err(Error::IllegalType(_))));
        assert!(matches!("F5".parse::<CartanType>(), Err(Error::IllegalType(_))));
        assert!(matches!("X3".parse::<CartanType>(), Err(Error::IllegalType(_))));
        assert!(matches!("A".parse::<CartanType>(), Err(Error::IllegalType(_))));
        assert_eq!("e8".parse::<CartanType>().unwrap().to_string(), "E8");
    }

    #[test]
    fn every_type_is_valid_and_simply_laced_iff_symmetric() {
        for ty in all_types() {
            let m = build_cartan(ty);
            validate_entries(m.entries()).unwrap();
            assert_eq!(m.is_simply_laced(), m.is_symmetric(), "{ty}");
            assert_eq!(m.is_simply_laced(), ty.is_simply_laced(), "{ty}");
            let s = m.symmetrizer();
            for i in 0..m.rank() {
                for j in 0..m.rank() {
                    assert_eq!(s[i] * m.entry(i, j), s[j] * m.entry(j, i));
                }
            }
            assert!(s.iter().all(|&v| v > 0));
        }
    }

    #[test]
    fn validation_rejects_bad_matrices() {
        assert!(validate_entries(&[vec![2, -1], vec![0, 2]]).is_err());
        assert!(validate_entries(&[vec![2, 0], vec![0, 2]]).is_err());
        assert!(validate_entries(&[vec![2, 1], vec![1, 2]]).is_err());
        assert!(validate_entries(&[vec![2, -2], vec![-2, 2]]).is_err());
        assert!(validate_entries(&[vec![3]]).is_err());
    }

    #[test]
    fn tabulated_signs() {
        assert_eq!(default_epsilon(&cm("F4")).values(), &[-1, 1, -1, 1]);
        assert_eq!(default_epsilon(&cm("G2")).values(), &[-1, 1]);
        assert_eq!(default_epsilon(&cm("A3")).values(), &[1, -1, 1]);
        assert_eq!(default_epsilon(&cm("E6")).values(), &[1, -1, -1, 1, -1, 1]);
        assert_eq!(default_epsilon(&cm("E8")).values(), &[1, -1, -1, 1, -1, 1, -1, 1]);
        // 2-coloring forces node 7 of E7 to be negative.
        assert_eq!(default_epsilon(&cm("E7")).values(), &[1, -1, -1, 1, -1, 1, -1]);
        assert_eq!(default_epsilon(&cm("D5")).values(), &[1, 1, -1, 1, -1]);
        assert_eq!(default_epsilon(&cm("C3")).values(), &[1, -1, 1]);
        assert_eq!(default_epsilon(&cm("C4")).values(), &[-1, 1, -1, 1]);
        assert_eq!(default_epsilon(&cm("B3")).values(), &[1, -1, 1]);
    }

    #[test]
    fn default_signs_are_colorings() {
        for ty in all_types() {
            let m = build_cartan(ty);
            default_epsilon(&m).validate(&m).unwrap();
            default_epsilon(&m).flip().validate(&m).unwrap();
        }
    }

    #[test]
    fn flip_is_an_involution() {
        let e = SignFunction::new(vec![1, -1]).unwrap();
        assert_eq!(e.flip().values(), &[-1, 1]);
        assert_eq!(e.flip().flip(), e);
        assert_eq!(default_epsilon(&cm("F4")).flip().values(), &[1, -1, 1, -1]);
    }

    #[test]
    fn non_coloring_rejected() {
        let m = cm("A3");
        let bad = SignFunction::new(vec![1, 1, -1]).unwrap();
        assert!(matches!(bad.validate(&m), Err(Error::InvalidEpsilon(_))));
        assert!(SignFunction::new(vec![1, 0]).is_err());
    }

    #[test]
    fn tabulated_automorphisms() {
        let d4 = standard_automorphism(&cm("D4")).unwrap();
        assert_eq!(d4.order(), 3);
        assert_eq!(d4.labelled_orbits(), vec![vec![3], vec![1, 2, 4]]);
        assert_eq!((d4.image(0), d4.image(1), d4.image(3), d4.image(2)), (1, 3, 0, 2));

        let e6 = standard_automorphism(&cm("E6")).unwrap();
        assert_eq!(e6.order(), 2);
        assert_eq!(e6.labelled_orbits(), vec![vec![2], vec![4], vec![3, 5], vec![1, 6]]);

        let a5 = standard_automorphism(&cm("A5")).unwrap();
        assert_eq!(a5.labelled_orbits(), vec![vec![3], vec![2, 4], vec![1, 5]]);

        let d6 = standard_automorphism(&cm("D6")).unwrap();
        assert_eq!(d6.order(), 2);
        assert_eq!(d6.labelled_orbits()[0], vec![1, 2]);

        for t in ["A4", "A2", "A1", "E7", "E8", "B3", "G2", "D3"] {
            assert!(matches!(standard_automorphism(&cm(t)), Err(Error::NoFoldableSymmetry(_))), "{t}");
        }
    }

    #[test]
    fn even_a_symmetry_fails_disconnected_orbits() {
        let a4 = cm("A4");
        let err = DiagramAutomorphism::from_cycles(&a4, &[vec![0, 3], vec![1, 2]]).unwrap_err();
        assert!(matches!(err, Error::InvalidAutomorphism(_)));
        let a2 = cm("A2");
        assert!(DiagramAutomorphism::from_cycles(&a2, &[vec![0, 1]]).is_err());
    }

    #[test]
    fn non_symmetry_rejected() {
        let a3 = cm("A3");
        assert!(DiagramAutomorphism::from_cycles(&a3, &[vec![0, 1], vec![2]]).is_err());
        let b3 = cm("B3");
        assert!(DiagramAutomorphism::from_cycles(&b3, &[vec![0, 2], vec![1]]).is_err());
    }

    #[test]
    fn default_signs_constant_on_orbits() {
        for t in ["A3", "A5", "A7", "D4", "D5", "D6", "E6"] {
            let m = cm(t);
            let eps = default_epsilon(&m);
            let auto = standard_automorphism(&m).unwrap();
            for orbit in auto.orbits() {
                assert!(orbit.iter().all(|&i| eps.get(i) == eps.get(orbit[0])), "{t}");
            }
        }
        let d4 = cm("D4");
        let (_, swap) = folding_source("B3".parse().unwrap()).unwrap();
        let eps = default_epsilon(&d4);
        assert_eq!(eps.get(0), eps.get(1));
        assert_eq!(swap.order(), 2);
    }

    #[test]
    fn folding_sources() {
        let (p, a) = folding_source("B2".parse().unwrap()).unwrap();
        assert_eq!(p.cartan_type().to_string(), "D3");
        assert_eq!(a.order(), 2);
        let (p, _) = folding_source("C4".parse().unwrap()).unwrap();
        assert_eq!(p.cartan_type().to_string(), "A7");
        let (p, a) = folding_source("G2".parse().unwrap()).unwrap();
        assert_eq!((p.cartan_type().to_string(), a.order()), ("D4".to_string(), 3));
        assert!(folding_source("E6".parse().unwrap()).is_err());
    }
}
