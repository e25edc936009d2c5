use crate::canonical::build_inductive;
use crate::cartan::{build_cartan, CartanType, Family, SignFunction};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::roots::generate_roots;
use crate::table::{normalize, BracketTable, Term};

/// Trace-zero `n x n` integer matrices with
/// `e_alpha = -(-1)^ht(alpha) eps(i) E_ij` for `alpha = delta_i - delta_j`
/// and `h_k = E_kk - E_(k+1)(k+1)`.
///
/// `eps` is given on the nodes `1..n-1`; the formula also reads `eps(n)`,
/// which is fixed by continuing the alternation.
#[derive(Debug, Clone)]
pub struct MatrixModel {
    n: usize,
    eps: Vec<i64>,
    /// Root index -> `(i, j)`, 0-based matrix position.
    positions: Vec<(usize, usize)>,
    /// Root index -> scalar in front of `E_ij`.
    scalars: Vec<i64>,
}

impl MatrixModel {
    pub fn new(t: &BracketTable) -> Result<Self> {
        let rs = t.root_system();
        let ty = rs.cartan().cartan_type();
        if ty.family() != Family::A {
            return Err(Error::IllegalType(format!("the matrix model needs type A, got {ty}")));
        }
        let n = ty.rank() + 1;
        let mut eps = t.epsilon().values().to_vec();
        eps.push(-eps[n - 2]);
        let mut positions = Vec::with_capacity(rs.len());
        let mut scalars = Vec::with_capacity(rs.len());
        for root in rs.roots() {
            let c = root.coeffs();
            let first = c.iter().position(|&v| v != 0).expect("roots are nonzero");
            let last = c.iter().rposition(|&v| v != 0).expect("roots are nonzero");
            let (i, j) = if root.is_positive() { (first, last + 1) } else { (last + 1, first) };
            let sign = if root.height() % 2 == 0 { 1 } else { -1 };
            positions.push((i, j));
            scalars.push(-sign * eps[i]);
        }
        Ok(MatrixModel { n, eps, positions, scalars })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `eps` on `1..n`, including the extended value at `n`.
    pub fn extended_epsilon(&self) -> &[i64] {
        &self.eps
    }

    /// `delta_i - delta_j` (0-based) of a root index.
    pub fn position(&self, a: usize) -> (usize, usize) {
        self.positions[a]
    }

    /// Dense matrix of an adjoint basis element.
    pub fn matrix(&self, x: usize) -> Vec<i64> {
        let n = self.n;
        let r = self.positions.len();
        let mut m = vec![0; n * n];
        if x < r {
            let (i, j) = self.positions[x];
            m[i * n + j] = self.scalars[x];
        } else {
            let k = x - r;
            m[k * n + k] = 1;
            m[(k + 1) * n + k + 1] = -1;
        }
        m
    }

    /// Coordinates of a trace-zero matrix in the adjoint basis, or `None`
    /// if an entry is not a multiple of the basis scalar.
    pub fn decompose(&self, m: &[i64]) -> Option<Vec<Term>> {
        let n = self.n;
        let r = self.positions.len();
        let mut out = Vec::new();
        for (a, &(i, j)) in self.positions.iter().enumerate() {
            let v = m[i * n + j];
            if v % self.scalars[a] != 0 {
                return None;
            }
            out.push((a, v / self.scalars[a]));
        }
        // diag(d) = sum c_k h_k with c_k = d_1 + .. + d_k.
        let mut running = 0;
        for k in 0..n {
            running += m[k * n + k];
            if k + 1 < n {
                out.push((r + k, running));
            }
        }
        if running != 0 {
            return None;
        }
        Some(normalize(out))
    }

    pub fn commutator(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let (xik, yik) = (x[i * n + k], y[i * n + k]);
                if xik == 0 && yik == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += xik * y[k * n + j] - yik * x[k * n + j];
                }
            }
        }
        out
    }
}

/// Compares every bracket of an `A_{n-1}` table with matrix commutators in
/// the model, and checks `N(delta_i - delta_j, delta_j - delta_k) = -eps(j)`.
pub fn sl_n_compare(t: &BracketTable) -> Result<VerificationReport> {
    let model = MatrixModel::new(t)?;
    let rs = t.root_system();
    let dim = t.dim();
    let mats: Vec<Vec<i64>> = (0..dim).map(|x| model.matrix(x)).collect();
    let mut report = VerificationReport::new(format!("sl{}", model.size()));
    let label = |x: usize| if x < rs.len() { rs.root(x).to_string() } else { format!("h_{}", x - rs.len() + 1) };
    for x in 0..dim {
        for y in 0..dim {
            let loc = || format!("[{}, {}]", label(x), label(y));
            match model.decompose(&model.commutator(&mats[x], &mats[y])) {
                Some(terms) => report.expect_eq(loc, terms, t.bracket_basis(x, y)),
                None => {
                    report.tick();
                    report.fail(loc(), "a combination of the basis", "non-integral coordinates");
                }
            }
        }
    }
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            let ((i, j), (j2, k)) = (model.position(a), model.position(b));
            if j == j2 && i != k {
                report.expect_eq(
                    || format!("N(d{}-d{}, d{}-d{})", i + 1, j + 1, j + 1, k + 1),
                    -model.extended_epsilon()[j],
                    t.constant(a, b),
                );
            }
        }
    }
    Ok(report)
}

/// [`sl_n_compare`] on the inductive table of `A_{n-1}` with `eps`.
pub fn sl_n_oracle(n: usize, eps: &SignFunction) -> Result<VerificationReport> {
    if !(2..=8).contains(&n) {
        return Err(Error::IllegalType(format!("sl_{n}: the oracle covers 2 <= n <= 8")));
    }
    let cm = build_cartan(CartanType::new(Family::A, n - 1)?);
    let rs = generate_roots(&cm);
    sl_n_compare(&build_inductive(&rs, eps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::default_epsilon;

    #[test]
    fn sl2_opposite() {
        let cm = build_cartan("A1".parse().unwrap());
        let eps = default_epsilon(&cm);
        let t = build_inductive(&generate_roots(&cm), &eps).unwrap();
        // [e_a, e_-a] = -h_1 at height 1.
        assert_eq!(t.bracket_basis(0, 1), vec![(2, -1)]);
        assert!(sl_n_compare(&t).unwrap().passed());
    }

    #[test]
    fn small_n() {
        for n in 2..=5 {
            let cm = build_cartan(CartanType::new(Family::A, n - 1).unwrap());
            let eps = default_epsilon(&cm);
            assert!(sl_n_oracle(n, &eps).unwrap().passed(), "n = {n}");
            assert!(sl_n_oracle(n, &eps.flip()).unwrap().passed(), "n = {n}, flipped");
        }
    }

    #[test]
    fn sl3_boxed_value() {
        let cm = build_cartan("A2".parse().unwrap());
        let eps = default_epsilon(&cm);
        let t = build_inductive(&generate_roots(&cm), &eps).unwrap();
        // d1-d2 = alpha_1, d2-d3 = alpha_2: N = -eps(2).
        assert_eq!(t.constant(0, 1), -eps.get(1));
    }

    #[test]
    fn injected_flip_is_caught() {
        let cm = build_cartan("A3".parse().unwrap());
        let mut t = build_inductive(&generate_roots(&cm), &default_epsilon(&cm)).unwrap();
        t.set_constant(0, 1, -t.constant(0, 1));
        assert!(!sl_n_compare(&t).unwrap().passed());
        assert!(sl_n_oracle(9, &default_epsilon(&cm)).is_err());
    }
}
