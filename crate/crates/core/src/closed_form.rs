//! Closed-form structure constants for the simply-laced types.
//!
//! For `alpha = sum n_i alpha_i`, `beta = sum m_j alpha_j` with
//! `alpha + beta` a root,
//!
//! `eta(alpha, beta) = sgn(alpha) sgn(beta) sgn(alpha + beta) prod_{i,j} eps(i)^(a_ij n_i m_j)`
//!
//! and in types A, D, E the canonical constant is `N_{alpha,beta} = eta(alpha, beta)`.
//! Only the parity of each exponent matters, so both the double sum and the
//! equivalent single sum `sum_i n_i <alpha_i, beta>` are reduced mod 2.

use crate::canonical::build_inductive;
use crate::cartan::SignFunction;
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::roots::{Root, RootSystem};
use crate::table::BracketTable;

fn require_simply_laced(rs: &RootSystem) -> Result<()> {
    if rs.cartan().is_simply_laced() {
        Ok(())
    } else {
        Err(Error::NotSimplyLaced(rs.cartan().cartan_type().to_string()))
    }
}

fn sign_prefactor(a: &Root, b: &Root) -> i64 {
    a.sign() * b.sign() * a.add(b).sign()
}

/// `prod_{i,j} eps(i)^(a_ij n_i m_j)` from the double sum.
pub fn eta_hat_double_sum(rs: &RootSystem, eps: &SignFunction, a: &Root, b: &Root) -> i64 {
    let cm = rs.cartan();
    let n = rs.rank();
    let mut parity = 0i64;
    for i in 0..n {
        if eps.get(i) > 0 {
            continue;
        }
        for j in 0..n {
            parity += cm.entry(i, j) * a.coeffs()[i] * b.coeffs()[j];
        }
    }
    sign_prefactor(a, b) * if parity.rem_euclid(2) == 0 { 1 } else { -1 }
}

/// `prod_i eps(i)^(n_i <alpha_i, beta>)`, the regrouped form.
pub fn eta_hat_single_sum(rs: &RootSystem, eps: &SignFunction, a: &Root, b_index: usize) -> i64 {
    let b = rs.root(b_index);
    let parity: i64 = (0..rs.rank())
        .filter(|&i| eps.get(i) < 0)
        .map(|i| a.coeffs()[i] * rs.simple_pairing(i, b_index))
        .sum();
    sign_prefactor(a, b) * if parity.rem_euclid(2) == 0 { 1 } else { -1 }
}

/// The sign `eta(alpha, beta)` for root indices `a`, `b` with `a + b` a root.
pub fn eta_hat(rs: &RootSystem, eps: &SignFunction, a: usize, b: usize) -> Result<i64> {
    require_simply_laced(rs)?;
    if rs.sum(a, b).is_none() {
        return Err(Error::NotARoot(format!("{} + {}", rs.root(a), rs.root(b))));
    }
    let value = eta_hat_single_sum(rs, eps, rs.root(a), b);
    debug_assert_eq!(value, eta_hat_double_sum(rs, eps, rs.root(a), rs.root(b)));
    Ok(value)
}

/// Like [`eta_hat`] but without the simply-laced precondition; folding
/// evaluates the sign in the simply-laced parent only.
pub(crate) fn eta_hat_unchecked(rs: &RootSystem, eps: &SignFunction, a: usize, b: usize) -> i64 {
    eta_hat_single_sum(rs, eps, rs.root(a), b)
}

/// `eta(alpha, beta) (q_{alpha,beta} + 1)`; `q` is always 0 when simply laced.
pub fn closed_constant(rs: &RootSystem, eps: &SignFunction, a: usize, b: usize) -> Result<i64> {
    let eta = eta_hat(rs, eps, a, b)?;
    Ok(eta * (rs.q(a, b) + 1))
}

/// The whole table from the closed formula; Cartan part from the coroots.
pub fn build_closed_table(rs: &RootSystem, eps: &SignFunction) -> Result<BracketTable> {
    require_simply_laced(rs)?;
    eps.validate(rs.cartan())?;
    let mut t = BracketTable::empty(rs.clone(), eps.clone());
    let r = rs.len();
    for a in 0..r {
        for b in 0..r {
            if rs.sum(a, b).is_some() {
                t.set_constant(a, b, closed_constant(rs, eps, a, b)?);
            }
        }
        t.set_opposite(a, rs.coroot_coords(a).to_vec());
    }
    Ok(t)
}

/// Constant source used by the lemma checks: the inductive table when `eps`
/// is a valid coloring, otherwise the closed formula evaluated anyway.
fn constants_for(rs: &RootSystem, eps: &SignFunction, report: &mut VerificationReport) -> Box<dyn Fn(usize, usize) -> i64> {
    match build_inductive(rs, eps) {
        Ok(t) => {
            let t = std::sync::Arc::new(t);
            Box::new(move |a, b| t.constant(a, b))
        }
        Err(e) => {
            report.fail("epsilon", "a proper 2-coloring", e);
            let rs = rs.clone();
            let eps = eps.clone();
            Box::new(move |a, b| if rs.sum(a, b).is_some() { eta_hat_unchecked(&rs, &eps, a, b) } else { 0 })
        }
    }
}

/// For `l`, `alpha`, `beta` with `alpha_l + alpha` and `alpha_l + alpha + beta`
/// roots, `alpha != ±beta`, `beta != ±alpha_l`: exactly one of
/// `alpha + beta`, `alpha_l + beta` is a root and
/// `N(alpha_l + alpha, beta)` equals `N(alpha, beta)` or
/// `-N(alpha, alpha_l + beta)` accordingly.
pub fn check_lemma_lem1(rs: &RootSystem, eps: &SignFunction) -> Result<VerificationReport> {
    require_simply_laced(rs)?;
    let mut report = VerificationReport::new("lemma-recursion");
    let n_of = constants_for(rs, eps, &mut report);
    let r = rs.len();
    for l in 0..rs.rank() {
        let al = rs.simple(l);
        for a in 0..r {
            let Some(la) = rs.sum(al, a) else { continue };
            for b in 0..r {
                if b == a || b == rs.neg(a) || b == al || b == rs.neg(al) {
                    continue;
                }
                if rs.sum(la, b).is_none() {
                    continue;
                }
                let ab = rs.sum(a, b);
                let lb = rs.sum(al, b);
                let loc = || format!("l={} a={} b={}", l + 1, rs.root(a), rs.root(b));
                match (ab, lb) {
                    (Some(_), None) => report.expect_eq(loc, n_of(a, b), n_of(la, b)),
                    (None, Some(lb)) => report.expect_eq(loc, -n_of(a, lb), n_of(la, b)),
                    _ => {
                        report.tick();
                        report.fail(loc(), "exactly one of a+b, a_l+b in Phi", format!("{:?}", (ab.is_some(), lb.is_some())));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `eta(beta, alpha) = eta(-alpha, -beta) = -eta(alpha, beta)`.
pub fn check_eta_symmetries(rs: &RootSystem, eps: &SignFunction) -> Result<VerificationReport> {
    require_simply_laced(rs)?;
    let mut report = VerificationReport::new("eta-symmetries");
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            if rs.sum(a, b).is_none() {
                continue;
            }
            let e = eta_hat(rs, eps, a, b)?;
            let loc = || format!("({}, {})", rs.root(a), rs.root(b));
            report.expect_eq(loc, -e, eta_hat(rs, eps, b, a)?);
            report.expect_eq(loc, -e, eta_hat(rs, eps, rs.neg(a), rs.neg(b))?);
        }
    }
    Ok(report)
}

/// The sign-level version of the recursion: with `l`, `alpha`, `beta` as in
/// [`check_lemma_lem1`] (the dichotomy there needs `alpha != -beta` too),
/// `eta(alpha_l + alpha, beta)` is `eta(alpha, beta)` or
/// `-eta(alpha, alpha_l + beta)`.
pub fn check_eta_recursion(rs: &RootSystem, eps: &SignFunction) -> Result<VerificationReport> {
    require_simply_laced(rs)?;
    let mut report = VerificationReport::new("eta-recursion");
    let r = rs.len();
    for l in 0..rs.rank() {
        let al = rs.simple(l);
        for a in 0..r {
            let Some(la) = rs.sum(al, a) else { continue };
            for b in 0..r {
                if b == a || b == rs.neg(a) || b == al || b == rs.neg(al) || rs.sum(la, b).is_none() {
                    continue;
                }
                let lhs = eta_hat(rs, eps, la, b)?;
                let loc = || format!("l={} a={} b={}", l + 1, rs.root(a), rs.root(b));
                match (rs.sum(a, b), rs.sum(al, b)) {
                    (Some(_), None) => report.expect_eq(loc, eta_hat(rs, eps, a, b)?, lhs),
                    (None, Some(lb)) => report.expect_eq(loc, -eta_hat(rs, eps, a, lb)?, lhs),
                    other => {
                        report.tick();
                        report.fail(loc(), "exactly one root sum", format!("{:?}", (other.0.is_some(), other.1.is_some())));
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{build_cartan, default_epsilon};
    use crate::roots::generate_roots;

    fn setup(t: &str) -> (RootSystem, SignFunction) {
        let cm = build_cartan(t.parse().unwrap());
        let eps = default_epsilon(&cm);
        (generate_roots(&cm), eps)
    }

    fn idx(rs: &RootSystem, s: &str) -> usize {
        rs.find(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn simple_root_sign_is_eps() {
        for t in ["A4", "D5", "E6"] {
            let (rs, eps) = setup(t);
            for i in 0..rs.rank() {
                for b in 0..rs.len() {
                    if rs.sum(i, b).is_some() {
                        assert_eq!(eta_hat(&rs, &eps, i, b).unwrap(), eps.get(i));
                        assert_eq!(closed_constant(&rs, &eps, i, b).unwrap(), eps.get(i));
                    }
                }
            }
        }
    }

    #[test]
    fn d4_lemma_value() {
        let (rs, eps) = setup("D4");
        let a = idx(&rs, "1110");
        let b = idx(&rs, "-0110");
        assert_eq!(eta_hat(&rs, &eps, a, b).unwrap(), 1);
        assert_eq!(eta_hat(&rs, &eps, b, a).unwrap(), -1);
    }

    #[test]
    fn preconditions() {
        let (rs, eps) = setup("B3");
        assert!(matches!(eta_hat(&rs, &eps, 0, 1), Err(Error::NotSimplyLaced(_))));
        let (rs, eps) = setup("A3");
        assert!(matches!(eta_hat(&rs, &eps, 0, 0), Err(Error::NotARoot(_))));
        assert!(matches!(eta_hat(&rs, &eps, 0, 2), Err(Error::NotARoot(_))));
    }

    #[test]
    fn both_forms_agree() {
        for t in ["A5", "D5", "E7"] {
            let (rs, eps) = setup(t);
            for a in 0..rs.len() {
                for b in 0..rs.len() {
                    if rs.sum(a, b).is_some() {
                        assert_eq!(
                            eta_hat_double_sum(&rs, &eps, rs.root(a), rs.root(b)),
                            eta_hat_single_sum(&rs, &eps, rs.root(a), b)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lemma_checks_pass() {
        for t in ["A3", "D4", "A5", "E6"] {
            let (rs, eps) = setup(t);
            let rep = check_lemma_lem1(&rs, &eps).unwrap();
            assert!(rep.passed() && rep.checked > 0, "{t}: {rep}");
            assert!(check_eta_symmetries(&rs, &eps).unwrap().passed());
            assert!(check_eta_recursion(&rs, &eps).unwrap().passed());
        }
    }

    #[test]
    fn corrupted_epsilon_is_flagged() {
        let (rs, _) = setup("A3");
        let bad = SignFunction::new(vec![1, 1, -1]).unwrap();
        assert!(!check_lemma_lem1(&rs, &bad).unwrap().passed());
    }
}
