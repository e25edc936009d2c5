//! Folding a simply-laced algebra along a diagram automorphism.
//!
//! The automorphism `tau` permutes the canonical basis (`tau(e_alpha) =
//! e_alpha'`), so the orbit sums `e~_alpha = sum_{beta in orbit(alpha)} e_beta`
//! and `h~_i = sum_{j in orbit(i)} h_j` span the fixed subalgebra. Its Cartan
//! matrix is `a~_ij = d_i a_ij` when `d_i > d_j = 1` and `a_ij` otherwise,
//! and in this basis
//!
//! `[e~_alpha, e~_beta] = eta(alpha, beta) (q~ + 1) e~_(alpha+beta)`
//!
//! for representatives with `alpha + beta` a root, where `q~ + 1` counts the
//! pairs `(alpha0, beta0)` of the two orbits with `alpha0 + beta0 = alpha + beta`.

use std::fmt;

use crate::cartan::{build_cartan, default_epsilon, folding_source, CartanMatrix, CartanType, DiagramAutomorphism, Family, SignFunction};
use crate::closed_form::eta_hat_unchecked;
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::roots::{generate_roots, Root, RootSystem};
use crate::table::BracketTable;

/// A simply-laced system together with its fold.
#[derive(Debug, Clone)]
pub struct FoldedSystem {
    parent: RootSystem,
    eps: SignFunction,
    auto: DiagramAutomorphism,
    /// Parent node representing each folded node.
    reps: Vec<usize>,
    /// Parent node -> folded node.
    node_orbit: Vec<usize>,
    folded_rs: RootSystem,
    folded_eps: SignFunction,
    /// Parent root -> its image `alpha'`.
    root_perm: Vec<usize>,
    /// Parent root -> folded root.
    restriction: Vec<usize>,
    /// Folded root -> parent orbit `[alpha, alpha', alpha'', ..]`.
    orbits: Vec<Vec<usize>>,
}

/// The type of the folded Cartan matrix for a parent type and an
/// automorphism order.
pub fn folded_type(parent: CartanType, order: usize) -> Result<CartanType> {
    let n = parent.rank();
    match (parent.family(), order) {
        (_, 1) => Ok(parent),
        (Family::A, 2) if n >= 3 && n % 2 == 1 => CartanType::new(Family::C, n.div_ceil(2)),
        (Family::D, 2) => CartanType::new(Family::B, n - 1),
        (Family::D, 3) if n == 4 => CartanType::new(Family::G, 2),
        (Family::E, 2) if n == 6 => CartanType::new(Family::F, 4),
        _ => Err(Error::FoldingPreconditionViolated(format!("no fold of {parent} by an automorphism of order {order}"))),
    }
}

pub fn fold(rs: &RootSystem, eps: &SignFunction, auto: &DiagramAutomorphism) -> Result<FoldedSystem> {
    let cm = rs.cartan();
    let precondition = |e: Error| Error::FoldingPreconditionViolated(e.to_string());
    if !cm.is_simply_laced() {
        return Err(Error::FoldingPreconditionViolated(format!("{} is not simply laced", cm.cartan_type())));
    }
    auto.check_conditions(cm).map_err(precondition)?;
    eps.validate(cm).map_err(precondition)?;
    let n = cm.rank();
    for i in 0..n {
        if eps.get(i) != eps.get(auto.image(i)) {
            return Err(Error::FoldingPreconditionViolated(format!("epsilon differs on nodes {} and {}", i + 1, auto.image(i) + 1)));
        }
    }

    let orbits = auto.orbits();
    let reps: Vec<usize> = orbits.iter().map(|o| o[0]).collect();
    let mut node_orbit = vec![0; n];
    for (k, o) in orbits.iter().enumerate() {
        for &j in o {
            node_orbit[j] = k;
        }
    }
    let folded_cm = folded_cartan(cm, auto)?;
    let folded_rs = generate_roots(&folded_cm);
    let folded_eps = eps.restrict(&reps);

    let permuted = |r: &Root| {
        let mut c = vec![0; n];
        for (j, &v) in r.coeffs().iter().enumerate() {
            c[auto.image(j)] = v;
        }
        c
    };
    let root_perm: Vec<usize> = rs
        .roots()
        .iter()
        .map(|r| rs.find_coeffs(&permuted(r)).ok_or_else(|| Error::InternalInconsistency(format!("image of {r} is not a root"))))
        .collect::<Result<_>>()?;

    let mut restriction = vec![usize::MAX; rs.len()];
    let mut folded_orbits = vec![Vec::new(); folded_rs.len()];
    for a in 0..rs.len() {
        if restriction[a] != usize::MAX {
            continue;
        }
        let mut coords = vec![0; reps.len()];
        for (j, &v) in rs.root(a).coeffs().iter().enumerate() {
            coords[node_orbit[j]] += v;
        }
        let k = folded_rs.find_coeffs(&coords).ok_or_else(|| {
            Error::InternalInconsistency(format!("restriction of {} is not a root of {}", rs.root(a), folded_cm.cartan_type()))
        })?;
        if !folded_orbits[k].is_empty() {
            return Err(Error::InternalInconsistency(format!("two orbits restrict to {}", folded_rs.root(k))));
        }
        let mut cur = a;
        loop {
            restriction[cur] = k;
            folded_orbits[k].push(cur);
            cur = root_perm[cur];
            if cur == a {
                break;
            }
        }
    }
    if let Some(k) = folded_orbits.iter().position(Vec::is_empty) {
        return Err(Error::InternalInconsistency(format!("folded root {} is not a restriction", folded_rs.root(k))));
    }

    Ok(FoldedSystem {
        parent: rs.clone(),
        eps: eps.clone(),
        auto: auto.clone(),
        reps,
        node_orbit,
        folded_rs,
        folded_eps,
        root_perm,
        restriction,
        orbits: folded_orbits,
    })
}

/// `a~_kl` over the orbits in listing order, checked against the tabulated
/// matrix of the expected type.
fn folded_cartan(cm: &CartanMatrix, auto: &DiagramAutomorphism) -> Result<CartanMatrix> {
    let orbits = auto.orbits();
    let m = orbits.len();
    let mut entries = vec![vec![0; m]; m];
    for (k, ok) in orbits.iter().enumerate() {
        for (l, ol) in orbits.iter().enumerate() {
            let (dk, dl) = (ok.len() as i64, ol.len() as i64);
            let a = cm.entry(ok[0], ol[0]);
            entries[k][l] = if dk > dl && dl == 1 { dk * a } else { a };
        }
    }
    let ty = folded_type(cm.cartan_type(), auto.order())?;
    let expected = build_cartan(ty);
    if expected.entries() != entries.as_slice() {
        return Err(Error::FoldingPreconditionViolated(format!(
            "folded matrix {entries:?} is not the {ty} matrix {:?}; list the orbits in the standard order",
            expected.entries()
        )));
    }
    Ok(expected)
}

/// The fold producing a non-simply-laced `target` from its standard parent
/// with the parent's default sign function.
pub fn fold_for(target: CartanType) -> Result<FoldedSystem> {
    let (cm, auto) = folding_source(target)?;
    let rs = generate_roots(&cm);
    fold(&rs, &default_epsilon(&cm), &auto)
}

impl FoldedSystem {
    pub fn parent(&self) -> &RootSystem {
        &self.parent
    }

    pub fn epsilon(&self) -> &SignFunction {
        &self.eps
    }

    pub fn automorphism(&self) -> &DiagramAutomorphism {
        &self.auto
    }

    /// Order `d` of the automorphism.
    pub fn order(&self) -> usize {
        self.auto.order()
    }

    /// Parent nodes representing the folded nodes, in folded order.
    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    /// Folded node containing parent node `j`.
    pub fn node_orbit(&self, j: usize) -> usize {
        self.node_orbit[j]
    }

    pub fn folded_cartan(&self) -> &CartanMatrix {
        self.folded_rs.cartan()
    }

    pub fn folded_root_system(&self) -> &RootSystem {
        &self.folded_rs
    }

    /// `eps` restricted to the representatives.
    pub fn folded_epsilon(&self) -> &SignFunction {
        &self.folded_eps
    }

    /// `alpha'` for a parent root index.
    pub fn root_image(&self, a: usize) -> usize {
        self.root_perm[a]
    }

    /// Folded root index of the restriction of parent root `a`.
    pub fn restriction(&self, a: usize) -> usize {
        self.restriction[a]
    }

    /// Parent orbit `[alpha, alpha', ..]` restricting to folded root `k`.
    pub fn orbit(&self, k: usize) -> &[usize] {
        &self.orbits[k]
    }

    /// Coordinates of the restriction over the folded simple roots.
    pub fn restrict_root(&self, alpha: &Root) -> Result<Root> {
        let a = self.parent.find(alpha).ok_or_else(|| Error::NotARoot(alpha.to_string()))?;
        Ok(self.folded_rs.root(self.restriction[a]).clone())
    }

    /// Positive orbits with their restrictions, ordered by the first
    /// member in parent root order.
    pub fn orbit_table(&self) -> Vec<OrbitRow> {
        let mut ks: Vec<usize> = (0..self.folded_rs.positive_count()).collect();
        ks.sort_by_key(|&k| self.orbits[k].iter().min().copied());
        ks.into_iter()
            .map(|k| {
                let mut members: Vec<Root> = self.orbits[k].iter().map(|&a| self.parent.root(a).clone()).collect();
                members.sort_by(|x, y| y.coeffs().cmp(x.coeffs()));
                let mut restriction: Vec<(usize, i64)> = self
                    .folded_rs
                    .root(k)
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (self.reps[i] + 1, c))
                    .collect();
                restriction.sort();
                OrbitRow { members, restriction }
            })
            .collect()
    }

    /// `S(alpha, beta)`: pairs of orbit members whose sum is a root.
    pub fn orbit_pairs(&self, a: usize, b: usize) -> Vec<(usize, usize, usize)> {
        let (oa, ob) = (&self.orbits[self.restriction[a]], &self.orbits[self.restriction[b]]);
        let mut out = Vec::new();
        for &x in oa {
            for &y in ob {
                if let Some(s) = self.parent.sum(x, y) {
                    out.push((x, y, s));
                }
            }
        }
        out
    }

    /// Representatives `(alpha, beta)` of folded roots `ka`, `kb` with
    /// `alpha + beta` a root: `alpha` is the first orbit member, `beta` is
    /// tried as `beta`, `beta'`, `beta''`.
    pub fn representative_pair(&self, ka: usize, kb: usize) -> Result<(usize, usize)> {
        let alpha = self.orbits[ka][0];
        self.orbits[kb]
            .iter()
            .find(|&&b| self.parent.sum(alpha, b).is_some())
            .map(|&b| (alpha, b))
            .ok_or_else(|| {
                Error::RepresentativeNotFound(format!("{} + {}", self.folded_rs.root(ka), self.folded_rs.root(kb)))
            })
    }

    /// `q~` for parent roots with `alpha + beta` a root, by three routes.
    pub fn q_tilde(&self, a: usize, b: usize) -> Result<QTilde> {
        let s = self.parent.sum(a, b).ok_or_else(|| Error::NotARoot(format!("{} + {}", self.parent.root(a), self.parent.root(b))))?;
        let by_count = self.orbit_pairs(a, b).iter().filter(|p| p.2 == s).count() as i64 - 1;

        let (fa, fb) = (self.root_perm[a] == a, self.root_perm[b] == b);
        let by_cases = if fa || fb {
            0
        } else if self.parent.sum(self.root_perm[a], self.root_perm[b]) == Some(s) {
            self.order() as i64 - 1
        } else if self.order() == 2 {
            0
        } else {
            // d = 3, alpha + beta not fixed: short + short = short in G2.
            1
        };

        let (ka, kb) = (self.restriction[a], self.restriction[b]);
        let by_string = self.folded_rs.q(ka, kb);
        Ok(QTilde { by_count, by_cases, by_string })
    }

    /// `h~_alpha = sum_{beta in orbit} h_beta` over `h~_i`, asserting the
    /// parent coefficients are constant along each node orbit.
    pub fn orbit_coroot(&self, k: usize) -> Result<Vec<i64>> {
        let n = self.parent.rank();
        let mut flat = vec![0i64; n];
        for &b in &self.orbits[k] {
            for (j, c) in self.parent.coroot_coords(b).iter().enumerate() {
                flat[j] += c;
            }
        }
        let mut out = vec![0; self.reps.len()];
        for (i, o) in self.auto.orbits().iter().enumerate() {
            out[i] = flat[o[0]];
            if o.iter().any(|&j| flat[j] != out[i]) {
                return Err(Error::InternalInconsistency(format!(
                    "orbit coroot of {} is not constant on node orbit {:?}",
                    self.folded_rs.root(k),
                    o.iter().map(|j| j + 1).collect::<Vec<_>>()
                )));
            }
        }
        Ok(out)
    }

    /// `alpha(h~_i) = sum_{j in orbit(i)} alpha(h_j)` for a parent root.
    fn parent_cartan_action(&self, i: usize, a: usize) -> i64 {
        self.auto.orbits()[i].iter().map(|&j| self.parent.simple_pairing(j, a)).sum()
    }
}

/// One row of the orbit table: parent orbit members and the restriction
/// as `(parent node label, coefficient)` terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRow {
    pub members: Vec<Root>,
    pub restriction: Vec<(usize, i64)>,
}

impl fmt::Display for OrbitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members.iter().map(Root::to_string).collect();
        let terms: Vec<String> = self
            .restriction
            .iter()
            .map(|&(i, c)| match c {
                1 => format!("a~{i}"),
                -1 => format!("-a~{i}"),
                c => format!("{c}a~{i}"),
            })
            .collect();
        write!(f, "{{{}}}  {}", members.join(","), terms.join("+").replace("+-", "-"))
    }
}

/// `q~` computed by counting orbit pairs, by the case table, and from the
/// folded root string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QTilde {
    pub by_count: i64,
    pub by_cases: i64,
    pub by_string: i64,
}

impl QTilde {
    pub fn agrees(&self) -> bool {
        self.by_count == self.by_cases && self.by_count == self.by_string
    }
}

/// The multiplication table of the orbit-sum basis, indexed by the folded
/// root system.
pub fn folded_table(fs: &FoldedSystem) -> Result<BracketTable> {
    let frs = fs.folded_root_system();
    let mut t = BracketTable::empty(frs.clone(), fs.folded_epsilon().clone());
    for ka in 0..frs.len() {
        for kb in 0..frs.len() {
            if frs.sum(ka, kb).is_none() {
                continue;
            }
            let (a, b) = fs.representative_pair(ka, kb)?;
            let q = fs.q_tilde(a, b)?;
            if !q.agrees() {
                return Err(Error::InternalInconsistency(format!(
                    "q~ for ({}, {}) disagrees: {q:?}",
                    fs.parent.root(a),
                    fs.parent.root(b)
                )));
            }
            let eta = eta_hat_unchecked(&fs.parent, &fs.eps, a, b);
            t.set_constant(ka, kb, eta * (q.by_count + 1));
        }
        let a = fs.orbits[ka][0];
        for i in 0..frs.rank() {
            let via_parent = fs.parent_cartan_action(i, a);
            if via_parent != t.cartan_action(i, ka) {
                return Err(Error::InternalInconsistency(format!(
                    "{}(h~_{}) is {via_parent} in the parent, {} in the folded system",
                    frs.root(ka),
                    i + 1,
                    t.cartan_action(i, ka)
                )));
            }
        }
        t.set_opposite(ka, fs.orbit_coroot(ka)?);
    }
    Ok(t)
}

/// `q~` by counting against the case table and the folded string, for every
/// ordered parent pair with a root sum.
pub fn q_tilde_check(fs: &FoldedSystem) -> VerificationReport {
    let rs = fs.parent();
    let mut report = VerificationReport::new("q-tilde");
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            if rs.sum(a, b).is_none() {
                continue;
            }
            let q = fs.q_tilde(a, b).expect("sum checked above");
            let loc = || format!("({}, {})", rs.root(a), rs.root(b));
            report.expect_eq(loc, q.by_count, q.by_cases);
            report.expect_eq(loc, q.by_count, q.by_string);
        }
    }
    report
}

/// `N_{alpha',beta'} = N_{alpha,beta}` and `h_alpha' = tau(h_alpha)` on a
/// parent table.
pub fn tau_check(auto: &DiagramAutomorphism, table: &BracketTable) -> VerificationReport {
    let rs = table.root_system();
    let n = rs.rank();
    let mut report = VerificationReport::new("tau");
    let image = |a: usize| {
        let mut c = vec![0; n];
        for (j, &v) in rs.root(a).coeffs().iter().enumerate() {
            c[auto.image(j)] = v;
        }
        rs.find_coeffs(&c)
    };
    let perm: Vec<Option<usize>> = (0..rs.len()).map(image).collect();
    for (a, b, _, nab) in table.ordered_sum_pairs() {
        let loc = || format!("N({}, {})", rs.root(a), rs.root(b));
        match (perm[a], perm[b]) {
            (Some(x), Some(y)) => report.expect_eq(loc, nab, table.constant(x, y)),
            _ => {
                report.tick();
                report.fail(loc(), "image roots", "not a root");
            }
        }
    }
    for (a, x) in perm.iter().enumerate() {
        let Some(x) = *x else { continue };
        let mut moved = vec![0; n];
        for (j, &v) in table.opposite(a).iter().enumerate() {
            moved[auto.image(j)] = v;
        }
        report.expect_eq(|| format!("h({})", rs.root(x)), moved, table.opposite(x).to_vec());
    }
    report
}

/// Every pair of `S(alpha, beta)` has the same `eta`, for all parent pairs
/// with a root sum. `eps` is used as given so that a corrupted sign
/// function shows up as violations rather than an error.
pub fn lemheta_check(rs: &RootSystem, eps: &SignFunction, auto: &DiagramAutomorphism) -> Result<VerificationReport> {
    if !rs.cartan().is_simply_laced() {
        return Err(Error::NotSimplyLaced(rs.cartan().cartan_type().to_string()));
    }
    auto.check_conditions(rs.cartan())?;
    let n = rs.rank();
    let perm: Vec<usize> = (0..rs.len())
        .map(|a| {
            let mut c = vec![0; n];
            for (j, &v) in rs.root(a).coeffs().iter().enumerate() {
                c[auto.image(j)] = v;
            }
            rs.find_coeffs(&c).expect("diagram automorphisms permute the roots")
        })
        .collect();
    let orbit = |a: usize| {
        let mut o = vec![a];
        let mut cur = perm[a];
        while cur != a {
            o.push(cur);
            cur = perm[cur];
        }
        o
    };
    let mut report = VerificationReport::new("eta-orbit-constancy");
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            if rs.sum(a, b).is_none() {
                continue;
            }
            let eta = eta_hat_unchecked(rs, eps, a, b);
            for &x in &orbit(a) {
                for &y in &orbit(b) {
                    if rs.sum(x, y).is_some() {
                        report.expect_eq(
                            || format!("S({}, {}) at ({}, {})", rs.root(a), rs.root(b), rs.root(x), rs.root(y)),
                            eta,
                            eta_hat_unchecked(rs, eps, x, y),
                        );
                    }
                }
            }
        }
    }
    Ok(report)
}

/// For non-fixed `alpha`: `alpha ± alpha'`, `alpha ± alpha''` are not roots;
/// the orbit coroot satisfies `alpha~(h~_alpha) = 2` and equals the coroot
/// of the folded root system.
pub fn orbit_coroot_check(fs: &FoldedSystem) -> VerificationReport {
    let rs = fs.parent();
    let frs = fs.folded_root_system();
    let mut report = VerificationReport::new("orbit-coroots");
    for a in 0..rs.len() {
        let mut others = vec![];
        let mut cur = fs.root_image(a);
        while cur != a {
            others.push(cur);
            cur = fs.root_image(cur);
        }
        for o in others {
            for x in [o, rs.neg(o)] {
                report.tick();
                if rs.sum(a, x).is_some() {
                    report.fail(format!("{} + {}", rs.root(a), rs.root(x)), "not a root", "a root");
                }
            }
        }
    }
    for k in 0..frs.len() {
        let loc = || format!("h~({})", frs.root(k));
        match fs.orbit_coroot(k) {
            Ok(c) => {
                let value: i64 = c.iter().enumerate().map(|(i, ci)| ci * frs.simple_pairing(i, k)).sum();
                report.expect_eq(loc, 2, value);
                report.expect_eq(loc, frs.coroot_coords(k).to_vec(), c);
            }
            Err(e) => {
                report.tick();
                report.fail(loc(), "orbit-constant coefficients", e);
            }
        }
    }
    report
}

/// Expands `[e~_alpha, e~_beta]` in the parent table and checks that every
/// member of the orbit of `alpha + beta` gets the folded constant, with no
/// cancellation and nothing outside the orbit.
pub fn orbit_sum_check(fs: &FoldedSystem, parent: &BracketTable, folded: &BracketTable) -> VerificationReport {
    let frs = fs.folded_root_system();
    let mut report = VerificationReport::new("orbit-sums");
    for (ka, kb, ks, n) in folded.ordered_sum_pairs() {
        let mut coeff = vec![0i64; fs.parent().len()];
        for &x in fs.orbit(ka) {
            for &y in fs.orbit(kb) {
                if let Some(s) = fs.parent().sum(x, y) {
                    coeff[s] += parent.constant(x, y);
                }
            }
        }
        let loc = || format!("[e~({}), e~({})]", frs.root(ka), frs.root(kb));
        let mut expected = vec![0i64; fs.parent().len()];
        for &m in fs.orbit(ks) {
            expected[m] = n;
        }
        report.expect_eq(loc, expected, coeff);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::build_inductive;
    use crate::cartan::standard_automorphism;

    fn parent(t: &str) -> (RootSystem, SignFunction, DiagramAutomorphism) {
        let cm: CartanMatrix = t.parse().unwrap();
        let auto = standard_automorphism(&cm).unwrap();
        (generate_roots(&cm), default_epsilon(&cm), auto)
    }

    #[test]
    fn folded_types() {
        for (p, target) in [("A3", "C2"), ("A5", "C3"), ("D4", "G2"), ("D5", "B4"), ("E6", "F4")] {
            let (rs, eps, auto) = parent(p);
            let fs = fold(&rs, &eps, &auto).unwrap();
            assert_eq!(fs.folded_cartan().cartan_type().to_string(), target);
            assert_eq!(fs.folded_epsilon(), &default_epsilon(fs.folded_cartan()));
        }
    }

    #[test]
    fn d4_triality_data() {
        let (rs, eps, auto) = parent("D4");
        let fs = fold(&rs, &eps, &auto).unwrap();
        assert_eq!(fs.folded_cartan().entries(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(fs.representatives(), &[2, 0]);
        let rows: Vec<String> = fs.orbit_table().iter().map(|r| r.to_string()).collect();
        assert_eq!(
            rows,
            [
                "{1000,0100,0001}  a~1",
                "{0010}  a~3",
                "{1010,0110,0011}  a~1+a~3",
                "{1110,1011,0111}  2a~1+a~3",
                "{1111}  3a~1+a~3",
                "{1121}  3a~1+2a~3",
            ]
        );
        let r = fs.restrict_root(&"1121".parse().unwrap()).unwrap();
        assert_eq!(r.coeffs(), &[2, 3]);
    }

    #[test]
    fn triple_orbit_gives_three() {
        let (rs, eps, auto) = parent("D4");
        let fs = fold(&rs, &eps, &auto).unwrap();
        let t = folded_table(&fs).unwrap();
        let frs = fs.folded_root_system();
        // short + short = long: the sum is fixed by triality.
        let a = frs.find(&Root::new(vec![1, 2])).unwrap();
        let b = frs.find(&Root::new(vec![0, 1])).unwrap();
        assert_eq!(t.constant(b, a).abs(), 3);
    }

    #[test]
    fn matches_inductive() {
        for p in ["A3", "A5", "D4", "D5", "E6"] {
            let (rs, eps, auto) = parent(p);
            let fs = fold(&rs, &eps, &auto).unwrap();
            let folded = folded_table(&fs).unwrap();
            let direct = build_inductive(fs.folded_root_system(), fs.folded_epsilon()).unwrap();
            assert_eq!(folded.constants(), direct.constants(), "{p}");
            for k in 0..fs.folded_root_system().len() {
                assert_eq!(folded.opposite(k), direct.opposite(k));
            }
            assert!(q_tilde_check(&fs).passed());
            assert!(orbit_coroot_check(&fs).passed());
            let parent_table = build_inductive(&rs, &eps).unwrap();
            assert!(orbit_sum_check(&fs, &parent_table, &folded).passed());
            assert!(tau_check(&auto, &parent_table).passed());
            assert!(lemheta_check(&rs, &eps, &auto).unwrap().passed());
        }
    }

    #[test]
    fn preconditions() {
        let (rs, _, auto) = parent("D4");
        let bad = SignFunction::new(vec![1, -1, -1, 1]).unwrap();
        assert!(matches!(fold(&rs, &bad, &auto), Err(Error::FoldingPreconditionViolated(_))));
        let cm: CartanMatrix = "B3".parse().unwrap();
        let rs = generate_roots(&cm);
        let id = DiagramAutomorphism::identity(&cm);
        assert!(matches!(fold(&rs, &default_epsilon(&cm), &id), Err(Error::FoldingPreconditionViolated(_))));
    }

    #[test]
    fn negative_controls() {
        let (rs, eps, auto) = parent("D4");
        let mut t = build_inductive(&rs, &eps).unwrap();
        let a = rs.find(&"1010".parse().unwrap()).unwrap();
        let b = rs.find(&"0100".parse().unwrap()).unwrap();
        t.set_constant(a, b, -t.constant(a, b));
        assert!(!tau_check(&auto, &t).passed());
        let bad = SignFunction::new(vec![-1, 1, -1, 1]).unwrap();
        assert!(!lemheta_check(&rs, &bad, &auto).unwrap().passed());
    }

    #[test]
    fn b2_from_d3() {
        let fs = fold_for("B2".parse().unwrap()).unwrap();
        let t = folded_table(&fs).unwrap();
        let direct = build_inductive(fs.folded_root_system(), fs.folded_epsilon()).unwrap();
        assert_eq!(t.constants(), direct.constants());
    }
}
