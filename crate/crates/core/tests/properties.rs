use proptest::prelude::*;

use chevalley::closed_form::{closed_constant, eta_hat};
use chevalley::io::{Provenance, TableDocument};
use chevalley::{build_cartan, build_inductive, default_epsilon, generate_roots, BracketTable, CartanType, SignFunction};

const TYPES: &[&str] = &["A1", "A3", "A5", "B3", "C3", "D4", "D5", "E6", "F4", "G2"];
const SIMPLY_LACED: &[&str] = &["A2", "A4", "D4", "D6", "E6", "E7"];

fn table(ty: &str, flip: bool) -> BracketTable {
    let cm = build_cartan(ty.parse::<CartanType>().unwrap());
    let eps = if flip { default_epsilon(&cm).flip() } else { default_epsilon(&cm) };
    build_inductive(&generate_roots(&cm), &eps).unwrap()
}

fn basis_vector(dim: usize, coeffs: &[i64]) -> Vec<(usize, i64)> {
    coeffs.iter().take(dim).enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k, c)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jacobi_on_random_elements(
        ty in prop::sample::select(TYPES),
        flip: bool,
        seed in prop::collection::vec(-3i64..=3, 3 * 78),
    ) {
        let t = table(ty, flip);
        let d = t.dim();
        let (x, rest) = seed.split_at(seed.len() / 3);
        let (y, z) = rest.split_at(rest.len() / 2);
        let (x, y, z) = (basis_vector(d, x), basis_vector(d, y), basis_vector(d, z));
        let mut sum = std::collections::BTreeMap::new();
        for (a, b, c) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
            for (k, v) in t.bracket(a, &t.bracket(b, c)) {
                *sum.entry(k).or_insert(0i64) += v;
            }
        }
        prop_assert!(sum.values().all(|&v| v == 0), "{ty}: {sum:?}");
    }

    #[test]
    fn bracket_is_bilinear_and_alternating(
        ty in prop::sample::select(TYPES),
        seed in prop::collection::vec(-4i64..=4, 2 * 78),
    ) {
        let t = table(ty, false);
        let d = t.dim();
        let (x, y) = seed.split_at(seed.len() / 2);
        let (x, y) = (basis_vector(d, x), basis_vector(d, y));
        let xy = t.bracket(&x, &y);
        let yx: Vec<(usize, i64)> = t.bracket(&y, &x).into_iter().map(|(k, v)| (k, -v)).collect();
        prop_assert_eq!(xy, yx);
        prop_assert!(t.bracket(&x, &x).is_empty());
    }

    #[test]
    fn constants_are_chevalley(ty in prop::sample::select(TYPES), flip: bool, a in 0usize..1000, b in 0usize..1000) {
        let t = table(ty, flip);
        let rs = t.root_system();
        let (a, b) = (a % rs.len(), b % rs.len());
        let n = t.constant(a, b);
        match rs.sum(a, b) {
            Some(_) => prop_assert_eq!(n.abs(), rs.q(a, b) + 1),
            None => prop_assert_eq!(n, 0),
        }
        prop_assert_eq!(t.constant(b, a), -n);
        prop_assert_eq!(t.constant(rs.neg(a), rs.neg(b)), -n);
        prop_assert_eq!(table(ty, !flip).constant(a, b), -n);
    }

    #[test]
    fn eta_symmetries(ty in prop::sample::select(SIMPLY_LACED), a in 0usize..1000, b in 0usize..1000) {
        let cm = build_cartan(ty.parse::<CartanType>().unwrap());
        let rs = generate_roots(&cm);
        let eps = default_epsilon(&cm);
        let (a, b) = (a % rs.len(), b % rs.len());
        prop_assume!(rs.sum(a, b).is_some());
        let e = eta_hat(&rs, &eps, a, b).unwrap();
        prop_assert_eq!(eta_hat(&rs, &eps, b, a).unwrap(), -e);
        prop_assert_eq!(eta_hat(&rs, &eps, rs.neg(a), rs.neg(b)).unwrap(), -e);
        prop_assert_eq!(closed_constant(&rs, &eps, a, b).unwrap(), e);
    }

    #[test]
    fn non_colorings_are_rejected(ty in prop::sample::select(SIMPLY_LACED), signs in prop::collection::vec(prop::bool::ANY, 7)) {
        let cm = build_cartan(ty.parse::<CartanType>().unwrap());
        let values: Vec<i64> = signs.iter().take(cm.rank()).map(|&s| if s { 1 } else { -1 }).collect();
        prop_assume!(values.len() == cm.rank());
        let eps = SignFunction::new(values).unwrap();
        let d = default_epsilon(&cm);
        let is_coloring = eps == d || eps == d.flip();
        prop_assert_eq!(eps.validate(&cm).is_ok(), is_coloring);
        prop_assert_eq!(build_inductive(&generate_roots(&cm), &eps).is_ok(), is_coloring);
    }

    #[test]
    fn json_round_trip(ty in prop::sample::select(TYPES), flip: bool) {
        let t = table(ty, flip);
        let json = TableDocument::from_table(&t, Provenance::Inductive).to_json();
        let back = TableDocument::from_json(&json).unwrap().to_table().unwrap();
        prop_assert_eq!(back.constants(), t.constants());
        prop_assert_eq!(TableDocument::from_table(&back, Provenance::Inductive).to_json(), json);
    }
}
