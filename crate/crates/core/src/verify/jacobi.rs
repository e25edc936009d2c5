use crate::report::{VerificationReport, Violation};
use crate::table::{BracketTable, Term};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// The Jacobi identity over every triple of adjoint basis elements, in
/// exact integer arithmetic.
///
/// The bracket is first checked to be alternating (`[x, x] = 0`,
/// `[x, y] = -[y, x]`). Given that, the Jacobi sum is alternating in
/// `(x, y, z)`, so it is evaluated on `x <= y <= z` only; the report counts
/// the `dim^3` ordered triples this covers.
pub fn jacobi_sweep(t: &BracketTable) -> VerificationReport {
    let dim = t.dim();
    let rs = t.root_system();
    let label = |x: usize| {
        if x < rs.len() {
            format!("e({})", rs.root(x))
        } else {
            format!("h_{}", x - rs.len() + 1)
        }
    };

    let brackets: Vec<Vec<Term>> = (0..dim * dim).map(|k| t.bracket_basis(k / dim, k % dim)).collect();
    let br = |x: usize, y: usize| &brackets[x * dim + y];

    let mut report = VerificationReport::new("jacobi");
    for x in 0..dim {
        if !br(x, x).is_empty() {
            report.fail(format!("[{0}, {0}]", label(x)), "0", format!("{:?}", br(x, x)));
        }
        for y in (x + 1)..dim {
            let neg: Vec<Term> = br(y, x).iter().map(|&(k, c)| (k, -c)).collect();
            if *br(x, y) != neg {
                report.fail(format!("[{}, {}]", label(x), label(y)), format!("{neg:?}"), format!("{:?}", br(x, y)));
            }
        }
    }

    let row = |x: usize| -> Vec<Violation> {
        let mut acc = vec![0i64; dim];
        let mut touched: Vec<usize> = Vec::new();
        let mut out = Vec::new();
        let add = |inner: &[Term], outer: usize, acc: &mut Vec<i64>, touched: &mut Vec<usize>| {
            for &(k, c) in inner {
                for &(m, d) in br(outer, k) {
                    if acc[m] == 0 {
                        touched.push(m);
                    }
                    acc[m] += c * d;
                }
            }
        };
        for y in x..dim {
            for z in y..dim {
                add(br(y, z), x, &mut acc, &mut touched);
                add(br(z, x), y, &mut acc, &mut touched);
                add(br(x, y), z, &mut acc, &mut touched);
                let mut residue: Vec<Term> = Vec::new();
                for &m in &touched {
                    if acc[m] != 0 {
                        residue.push((m, acc[m]));
                    }
                    acc[m] = 0;
                }
                touched.clear();
                if !residue.is_empty() {
                    residue.sort_unstable();
                    out.push(Violation {
                        location: format!("({}, {}, {})", label(x), label(y), label(z)),
                        expected: "0".into(),
                        got: format!("{residue:?}"),
                    });
                }
            }
        }
        out
    };

    #[cfg(feature = "parallel")]
    let rows: Vec<Vec<Violation>> = (0..dim).into_par_iter().map(row).collect();
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<Vec<Violation>> = (0..dim).map(row).collect();

    for v in rows {
        report.violations.extend(v);
    }
    report.checked = (dim as u64).pow(3);
    report
}
