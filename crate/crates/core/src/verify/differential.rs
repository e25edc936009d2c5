use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::roots::RootSystem;
use crate::table::BracketTable;

/// Identification of two root-vector bases: root `a` of the first table
/// corresponds to root `perm[a]` of the second, with
/// `e1_a = signs[a] * e2_perm[a]`. Cartan elements `h_i` are identified
/// directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootMap {
    pub perm: Vec<usize>,
    pub signs: Vec<i64>,
}

impl RootMap {
    pub fn identity(len: usize) -> Self {
        RootMap { perm: (0..len).collect(), signs: vec![1; len] }
    }

    /// Same roots, every root vector negated: the passage `eps -> -eps`.
    pub fn negation(len: usize) -> Self {
        RootMap { perm: (0..len).collect(), signs: vec![-1; len] }
    }

    /// Matches roots with equal coordinates.
    pub fn by_coordinates(from: &RootSystem, to: &RootSystem) -> Result<Self> {
        if from.rank() != to.rank() || from.len() != to.len() {
            return Err(Error::IncompatibleTables(format!(
                "{} roots of rank {} against {} roots of rank {}",
                from.len(),
                from.rank(),
                to.len(),
                to.rank()
            )));
        }
        let perm = from
            .roots()
            .iter()
            .map(|r| to.find(r).ok_or_else(|| Error::IncompatibleTables(format!("{r} has no counterpart"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(RootMap { signs: vec![1; perm.len()], perm })
    }
}

/// Compares every structure constant, Cartan action and opposite bracket
/// of `t1` with those of `t2` transported along `map`.
pub fn differential(t1: &BracketTable, t2: &BracketTable, map: &RootMap) -> Result<VerificationReport> {
    let (rs1, rs2) = (t1.root_system(), t2.root_system());
    let r = rs1.len();
    if rs2.len() != r || rs1.rank() != rs2.rank() || map.perm.len() != r || map.signs.len() != r {
        return Err(Error::IncompatibleTables("sizes differ".into()));
    }
    let mut seen = vec![false; r];
    for (a, &b) in map.perm.iter().enumerate() {
        if b >= r || seen[b] || map.signs[a].abs() != 1 {
            return Err(Error::IncompatibleTables("root map is not a signed bijection".into()));
        }
        seen[b] = true;
        if rs1.height(a) != rs2.height(b) {
            return Err(Error::IncompatibleTables(format!("{} and {} have different heights", rs1.root(a), rs2.root(b))));
        }
    }

    let mut report = VerificationReport::new("differential");
    let (p, s) = (&map.perm, &map.signs);
    for a in 0..r {
        for b in 0..r {
            let loc = || format!("N({}, {})", rs1.root(a), rs1.root(b));
            match (rs1.sum(a, b), rs2.sum(p[a], p[b])) {
                (Some(c), Some(d)) if p[c] == d => {
                    // N1 e1_c = s_a s_b N2 e2_d and e1_c = s_c e2_d.
                    report.expect_eq(loc, t1.constant(a, b), s[a] * s[b] * s[c] * t2.constant(p[a], p[b]));
                }
                (None, None) => {}
                _ => return Err(Error::IncompatibleTables(format!("root sums do not correspond at {}", loc()))),
            }
        }
        let factor = s[a] * s[rs1.neg(a)];
        let transported: Vec<i64> = t2.opposite(p[a]).iter().map(|c| factor * c).collect();
        report.expect_eq(|| format!("h({})", rs1.root(a)), t1.opposite(a).to_vec(), transported);
        for i in 0..rs1.rank() {
            report.expect_eq(|| format!("{}(h_{})", rs1.root(a), i + 1), t1.cartan_action(i, a), t2.cartan_action(i, p[a]));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{build_inductive, flip_epsilon_table};
    use crate::closed_form::build_closed_table;
    use crate::cartan::{build_cartan, default_epsilon};
    use crate::roots::generate_roots;

    #[test]
    fn closed_matches_inductive_d5() {
        let cm = build_cartan("D5".parse().unwrap());
        let rs = generate_roots(&cm);
        let eps = default_epsilon(&cm);
        let a = build_closed_table(&rs, &eps).unwrap();
        let b = build_inductive(&rs, &eps).unwrap();
        assert!(differential(&a, &b, &RootMap::identity(rs.len())).unwrap().passed());
    }

    #[test]
    fn flip_is_negation() {
        let cm = build_cartan("F4".parse().unwrap());
        let rs = generate_roots(&cm);
        let t = build_inductive(&rs, &default_epsilon(&cm)).unwrap();
        let f = build_inductive(&rs, &default_epsilon(&cm).flip()).unwrap();
        assert_eq!(f.constants(), flip_epsilon_table(&t).constants());
        assert!(differential(&t, &f, &RootMap::negation(rs.len())).unwrap().passed());
        assert!(!differential(&t, &f, &RootMap::identity(rs.len())).unwrap().passed());
    }

    #[test]
    fn incompatible() {
        let a = generate_roots(&build_cartan("B3".parse().unwrap()));
        let c = generate_roots(&build_cartan("C3".parse().unwrap()));
        let d = generate_roots(&build_cartan("A3".parse().unwrap()));
        assert!(RootMap::by_coordinates(&a, &d).is_err());
        assert!(matches!(RootMap::by_coordinates(&a, &c), Err(Error::IncompatibleTables(_))));
    }
}
