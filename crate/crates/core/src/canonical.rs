//! Structure constants of the epsilon-canonical Chevalley basis for any
//! finite type, computed by height recursion.
//!
//! The canonical root vectors are pinned down by
//!
//! * `e_{alpha_i} = eps(i) e_i`, `e_{-alpha_i} = -eps(i) f_i`,
//! * `[e_i, e_alpha] = (q_{alpha_i,alpha} + 1) e_{alpha + alpha_i}`,
//! * `[f_i, e_alpha] = (p_{alpha_i,alpha} + 1) e_{alpha - alpha_i}`.
//!
//! The rows of the simple root vectors follow directly from these. Any
//! other root splits as `alpha = alpha_l + gamma` (resp. `-alpha_l + gamma`
//! for negative roots) with `|ht(gamma)| = |ht(alpha)| - 1`, so
//! `e_alpha = [e_{±alpha_l}, e_gamma] / N_{±alpha_l, gamma}` and the Jacobi
//! identity gives every bracket `[e_alpha, y]` from rows already known:
//!
//! `N [e_alpha, y] = [e_{±l}, [e_gamma, y]] - [e_gamma, [e_{±l}, y]]`.
//!
//! Brackets landing in the Cartan subalgebra are carried as coordinate
//! vectors, so `[e_alpha, e_-alpha]` falls out of the same expansion.

use crate::cartan::SignFunction;
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::roots::RootSystem;
use crate::table::{normalize, BracketTable, Term};

/// Which simple root is split off a non-simple root during the recursion.
/// The canonical basis is unique, so both rules give the same table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitRule {
    #[default]
    SmallestNode,
    LargestNode,
}

pub fn build_inductive(rs: &RootSystem, eps: &SignFunction) -> Result<BracketTable> {
    build_inductive_with(rs, eps, SplitRule::SmallestNode)
}

pub fn build_inductive_with(rs: &RootSystem, eps: &SignFunction, rule: SplitRule) -> Result<BracketTable> {
    eps.validate(rs.cartan())?;
    let n = rs.rank();
    let r = rs.len();
    let p = rs.positive_count();
    let mut t = BracketTable::empty(rs.clone(), eps.clone());

    for i in 0..n {
        let pos = rs.simple(i);
        let neg = rs.neg(pos);
        for b in 0..r {
            if b == pos || b == neg {
                continue;
            }
            let (up, down) = rs.string_lengths(pos, b)?;
            if rs.sum(pos, b).is_some() {
                t.set_constant(pos, b, eps.get(i) * (down + 1));
            }
            if rs.sum(neg, b).is_some() {
                t.set_constant(neg, b, -eps.get(i) * (up + 1));
            }
        }
        let mut unit = vec![0; n];
        unit[i] = 1;
        // [e_{alpha_i}, e_{-alpha_i}] = -h_i and ht = 1.
        t.set_opposite(pos, unit.clone());
        t.set_opposite(neg, unit.iter().map(|v| -v).collect());
    }

    let mut scratch = Vec::new();
    for alpha in n..p {
        let (l, gamma) = split(rs, alpha, rule);
        for (a, l, g) in [(alpha, l, gamma), (rs.neg(alpha), rs.neg(l), rs.neg(gamma))] {
            let row = compute_row(&t, a, l, g, &mut scratch)?;
            for (b, v) in row.constants {
                t.set_constant(a, b, v);
            }
            t.set_opposite(a, row.opposite);
        }
    }

    for a in 0..r {
        if t.opposite(a) != rs.coroot_coords(a) {
            return Err(Error::InternalInconsistency(format!(
                "[e_a, e_-a] for {} gives {:?}, coroot is {:?}",
                rs.root(a),
                t.opposite(a),
                rs.coroot_coords(a)
            )));
        }
    }
    Ok(t)
}

/// `(l, gamma)` with `alpha = alpha_l + gamma`, `gamma` positive.
fn split(rs: &RootSystem, alpha: usize, rule: SplitRule) -> (usize, usize) {
    let candidates = (0..rs.rank()).filter_map(|i| {
        let gamma = rs.sum(alpha, rs.neg(rs.simple(i)))?;
        rs.is_positive(gamma).then_some((rs.simple(i), gamma))
    });
    let found = match rule {
        SplitRule::SmallestNode => candidates.min_by_key(|c| c.0),
        SplitRule::LargestNode => candidates.max_by_key(|c| c.0),
    };
    found.expect("every non-simple positive root has a simple root below it")
}

struct Row {
    constants: Vec<(usize, i64)>,
    opposite: Vec<i64>,
}

fn compute_row(t: &BracketTable, alpha: usize, l: usize, gamma: usize, scratch: &mut Vec<Term>) -> Result<Row> {
    let rs = t.root_system();
    let r = rs.len();
    let mut row = Row { constants: Vec::new(), opposite: Vec::new() };
    let divisor = t.constant(l, gamma);
    if divisor == 0 {
        return Err(Error::InternalInconsistency(format!("N(l, gamma) vanishes while building {}", rs.root(alpha))));
    }
    for b in 0..r {
        if b == alpha {
            continue;
        }
        scratch.clear();
        let mut inner = Vec::new();
        t.bracket_basis_into(gamma, b, 1, &mut inner);
        for &(k, c) in &inner {
            t.bracket_basis_into(l, k, c, scratch);
        }
        inner.clear();
        t.bracket_basis_into(l, b, 1, &mut inner);
        for &(k, c) in &inner {
            t.bracket_basis_into(gamma, k, -c, scratch);
        }
        let terms = normalize(std::mem::take(scratch));
        let mut divided = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            if c % divisor != 0 {
                return Err(Error::InternalInconsistency(format!(
                    "non-integral bracket [{}, {}]",
                    rs.root(alpha),
                    rs.root(b)
                )));
            }
            divided.push((k, c / divisor));
        }

        if b == rs.neg(alpha) {
            if divided.iter().any(|&(k, _)| k < r) {
                return Err(Error::InternalInconsistency(format!("[e_a, e_-a] leaves the Cartan part for {}", rs.root(alpha))));
            }
            let sign = if rs.height(alpha) % 2 == 0 { 1 } else { -1 };
            let mut coords = vec![0; rs.rank()];
            for (k, c) in divided {
                coords[k - r] = sign * c;
            }
            row.opposite = coords;
        } else if let Some(s) = rs.sum(alpha, b) {
            let value = match divided.as_slice() {
                [(k, c)] if *k == s => *c,
                _ => {
                    return Err(Error::InternalInconsistency(format!(
                        "[{}, {}] is not a multiple of e_(a+b): {divided:?}",
                        rs.root(alpha),
                        rs.root(b)
                    )))
                }
            };
            let q = rs.q(alpha, b);
            if value.abs() != q + 1 {
                return Err(Error::InternalInconsistency(format!(
                    "|N({}, {})| = {} but q + 1 = {}",
                    rs.root(alpha),
                    rs.root(b),
                    value.abs(),
                    q + 1
                )));
            }
            row.constants.push((b, value));
        } else if !divided.is_empty() {
            return Err(Error::InternalInconsistency(format!(
                "[{}, {}] should vanish, got {divided:?}",
                rs.root(alpha),
                rs.root(b)
            )));
        }
    }
    Ok(row)
}

/// The table for `-eps`: every canonical root vector changes sign, so
/// every structure constant does while the Cartan part stays.
pub fn flip_epsilon_table(t: &BracketTable) -> BracketTable {
    let mut out = t.clone();
    let r = t.root_system().len();
    for a in 0..r {
        for b in 0..r {
            out.set_constant(a, b, -t.constant(a, b));
        }
    }
    out.set_epsilon(t.epsilon().flip());
    out
}

/// Checks `N_{-a,-b} = -N_{a,b}` on every pair with a root sum, and
/// `h_{-a} = -h_a` on the Cartan part.
pub fn omega_check(t: &BracketTable) -> VerificationReport {
    let rs = t.root_system();
    let mut report = VerificationReport::new("omega");
    for (a, b, _, n) in t.ordered_sum_pairs() {
        let (na, nb) = (rs.neg(a), rs.neg(b));
        report.expect_eq(|| format!("N({}, {})", rs.root(na), rs.root(nb)), -n, t.constant(na, nb));
    }
    for a in 0..rs.len() {
        let expected: Vec<i64> = t.opposite(a).iter().map(|v| -v).collect();
        report.expect_eq(|| format!("h({})", rs.root(rs.neg(a))), expected, t.opposite(rs.neg(a)).to_vec());
    }
    report
}
