//! Checks that a [`BracketTable`] is a Lie algebra, that it is a Chevalley
//! basis, and that it is the canonical one; plus comparisons between
//! tables and against the matrix model of `sl_n`.

mod differential;
mod jacobi;
mod sl_n;

pub use differential::{differential, RootMap};
pub use jacobi::jacobi_sweep;
pub use sl_n::{sl_n_compare, sl_n_oracle, MatrixModel};

use crate::report::VerificationReport;
use crate::table::BracketTable;

/// `|N_{alpha,beta}| = q_{alpha,beta} + 1` on every pair with a root sum,
/// `N = 0` elsewhere, `N_{beta,alpha} = -N_{alpha,beta}`,
/// `N_{-alpha,-beta} = -N_{alpha,beta}` and `[e_alpha, e_-alpha] =
/// (-1)^ht(alpha) h_alpha` with the coroot of the root system.
pub fn chevalley_audit(t: &BracketTable) -> VerificationReport {
    let rs = t.root_system();
    let r = rs.len();
    let mut report = VerificationReport::new("chevalley");
    for a in 0..r {
        for b in 0..r {
            let loc = || format!("N({}, {})", rs.root(a), rs.root(b));
            let n = t.constant(a, b);
            if rs.sum(a, b).is_none() {
                report.expect_eq(loc, 0, n);
                continue;
            }
            report.expect_eq(loc, rs.q(a, b) + 1, n.abs());
            report.expect_eq(|| format!("N({}, {}) vs swapped", rs.root(a), rs.root(b)), -n, t.constant(b, a));
            report.expect_eq(
                || format!("N({}, {}) vs negated", rs.root(a), rs.root(b)),
                -n,
                t.constant(rs.neg(a), rs.neg(b)),
            );
        }
        report.expect_eq(|| format!("h({})", rs.root(a)), rs.coroot_coords(a), t.opposite(a));
    }
    report
}

/// The defining relations of the canonical basis with `e_i = eps(i)
/// e_{alpha_i}` and `f_i = -eps(i) e_{-alpha_i}`:
///
/// * `[e_i, e_alpha] = (q_{alpha_i,alpha} + 1) e_{alpha + alpha_i}`,
/// * `[f_i, e_alpha] = (p_{alpha_i,alpha} + 1) e_{alpha - alpha_i}`,
/// * `[h_i, e_alpha] = alpha(h_i) e_alpha`,
/// * `[e_alpha, e_-alpha] = (-1)^ht(alpha) h_alpha`,
///
/// and `eps` a proper 2-coloring. The basis satisfying these is unique, so
/// passing certifies the table.
pub fn canonical_relations(t: &BracketTable) -> VerificationReport {
    let rs = t.root_system();
    let eps = t.epsilon();
    let mut report = VerificationReport::new("canonical-relations");
    report.tick();
    if let Err(e) = eps.validate(rs.cartan()) {
        report.fail("epsilon", "a proper 2-coloring", e);
    }
    for i in 0..rs.rank() {
        let pos = rs.simple(i);
        let neg = rs.neg(pos);
        for a in 0..rs.len() {
            report.expect_eq(
                || format!("{}(h_{})", rs.root(a), i + 1),
                rs.simple_pairing(i, a),
                t.cartan_action(i, a),
            );
            if a == pos || a == neg {
                continue;
            }
            let (p, q) = rs.string_lengths(pos, a).expect("a != ±alpha_i");
            if rs.sum(pos, a).is_some() {
                report.expect_eq(|| format!("[e_{}, e({})]", i + 1, rs.root(a)), q + 1, eps.get(i) * t.constant(pos, a));
            }
            if rs.sum(neg, a).is_some() {
                report.expect_eq(|| format!("[f_{}, e({})]", i + 1, rs.root(a)), p + 1, -eps.get(i) * t.constant(neg, a));
            }
        }
    }
    for a in 0..rs.len() {
        report.expect_eq(|| format!("[e({0}), e(-{0})]", rs.root(a)), rs.coroot_coords(a), t.opposite(a));
    }
    report
}

/// `N_{beta,alpha} = -N_{alpha,beta}` on every ordered pair with a root sum.
pub fn antisymmetry_check(t: &BracketTable) -> VerificationReport {
    let rs = t.root_system();
    let mut report = VerificationReport::new("antisymmetry");
    for (a, b, _, n) in t.ordered_sum_pairs() {
        report.expect_eq(|| format!("N({}, {})", rs.root(b), rs.root(a)), -n, t.constant(b, a));
    }
    report
}
