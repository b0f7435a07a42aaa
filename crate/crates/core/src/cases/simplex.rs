use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::system::{LpSystem, Relation};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Nonnegative combination of the normalized constraints `h_k >= 0`
/// (equalities take any sign) claimed to equal `alpha * δ - bound * alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    #[serde(serialize_with = "serialize_all")]
    pub multipliers: Vec<Rational>,
    #[serde(serialize_with = "crate::serde_rational")]
    pub bound: Rational,
}

fn serialize_all<S: serde::Serializer>(
    v: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(crate::exact::format_rational))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub optimum: Rational,
    pub point: Vec<Rational>,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateCheck {
    pub passed: bool,
    /// `beta / alpha` when the combination has the right shape.
    pub implied_bound: Option<Rational>,
    pub reason: Option<String>,
}

/// Checks a certificate purely by linear algebra on the constraint
/// coefficients; it never consults a solver.
pub fn verify_certificate(system: &LpSystem, cert: &Certificate) -> Result<CertificateCheck> {
    let k = system.constraints.len();
    if cert.multipliers.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            got: cert.multipliers.len(),
        });
    }
    let fail = |reason: String, implied: Option<Rational>| CertificateCheck {
        passed: false,
        implied_bound: implied,
        reason: Some(reason),
    };
    let nvars = system.variables.len();
    let mut combo = vec![Rational::zero(); nvars];
    let mut constant = Rational::zero();
    for (idx, (c, y)) in system.constraints.iter().zip(&cert.multipliers).enumerate() {
        if c.relation != Relation::Eq && y.is_negative() {
            return Ok(fail(
                format!("multiplier {} on `{}` is negative", idx + 1, c.text),
                None,
            ));
        }
        let (h, h0) = c.normalized();
        for (acc, coef) in combo.iter_mut().zip(&h) {
            *acc += y * coef;
        }
        constant += y * h0;
    }
    if let Some(v) = (1..nvars).find(|&v| !combo[v].is_zero()) {
        return Ok(fail(
            format!(
                "combination leaves variable {} with coefficient {}",
                system.variables[v], combo[v]
            ),
            None,
        ));
    }
    let alpha = &combo[0];
    if !alpha.is_positive() {
        return Ok(fail(
            format!(
                "coefficient of {} is {alpha}, not positive",
                system.variables[0]
            ),
            None,
        ));
    }
    let implied = -constant / alpha;
    if implied != cert.bound {
        return Ok(fail(
            format!(
                "combination implies {implied}, certificate claims {}",
                cert.bound
            ),
            Some(implied),
        ));
    }
    Ok(CertificateCheck {
        passed: true,
        implied_bound: Some(implied),
        reason: None,
    })
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        self.rhs[r] /= &p;
        let (pivot_row, pivot_rhs) = (self.rows[r].clone(), self.rhs[r].clone());
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        self.basis[r] = col;
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        (0..cost.len())
            .map(|j| {
                let mut d = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() {
                        d -= &cost[b] * &self.rows[i][j];
                    }
                }
                d
            })
            .collect()
    }

    /// Bland's rule: lowest-index improving column, then lowest basic index
    /// among tied ratios.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Result<()> {
        loop {
            let d = self.reduced_costs(cost);
            let Some(col) = (0..allowed).find(|&j| d[j].is_negative()) else {
                return Ok(());
            };
            let mut best: Option<(Rational, usize)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][col].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][col];
                let better = match &best {
                    None => true,
                    Some((r, bi)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((ratio, i));
                }
            }
            let Some((_, r)) = best else {
                return Err(Error::Unbounded);
            };
            self.pivot(r, col);
        }
    }
}

/// Minimizes the first variable of `system` exactly, returning an optimal
/// point and a dual certificate for the optimum.
///
/// Free variables are split as `x+ - x-`, every row gets a slack (unless
/// it is an equality) and an artificial, and the two phases use Bland's rule,
/// so the method terminates.
pub fn lp_minimize_exact(system: &LpSystem) -> Result<LpSolution> {
    let nv = system.variables.len();
    let k = system.constraints.len();
    let slack_cols: Vec<Option<usize>> = {
        let mut next = 2 * nv;
        system
            .constraints
            .iter()
            .map(|c| {
                (c.relation != Relation::Eq).then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    };
    let structural = 2 * nv + slack_cols.iter().flatten().count();
    let width = structural + k;
    let mut rows = Vec::with_capacity(k);
    let mut rhs = Vec::with_capacity(k);
    let mut flips = Vec::with_capacity(k);
    for (r, c) in system.constraints.iter().enumerate() {
        let mut row = vec![Rational::zero(); width];
        for (v, coef) in c.coeffs.iter().enumerate() {
            row[v] = coef.clone();
            row[nv + v] = -coef.clone();
        }
        if let Some(s) = slack_cols[r] {
            row[s] = if c.relation == Relation::Ge {
                -Rational::one()
            } else {
                Rational::one()
            };
        }
        let mut b = c.constant.clone();
        let flip = b.is_negative();
        if flip {
            row.iter_mut().for_each(|x| *x = -x.clone());
            b = -b;
        }
        row[structural + r] = Rational::one();
        rows.push(row);
        rhs.push(b);
        flips.push(flip);
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis: (structural..width).collect(),
    };

    let mut phase_one = vec![Rational::zero(); width];
    phase_one[structural..]
        .iter_mut()
        .for_each(|x| *x = Rational::one());
    t.optimize(&phase_one, structural)?;
    let infeasibility: Rational = t
        .rhs
        .iter()
        .zip(&t.basis)
        .filter(|(_, &b)| b >= structural)
        .map(|(v, _)| v.clone())
        .sum();
    if !infeasibility.is_zero() {
        return Err(Error::Infeasible);
    }
    // Drive zero-level artificials out of the basis where possible; rows
    // where that fails are redundant and stay inert.
    for r in 0..k {
        if t.basis[r] >= structural {
            if let Some(col) = (0..structural).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, col);
            }
        }
    }

    let mut cost = vec![Rational::zero(); width];
    cost[0] = Rational::one();
    cost[nv] = -Rational::one();
    t.optimize(&cost, structural)?;

    let mut z = vec![Rational::zero(); width];
    for (i, &b) in t.basis.iter().enumerate() {
        z[b] = t.rhs[i].clone();
    }
    let point: Vec<Rational> = (0..nv).map(|v| &z[v] - &z[nv + v]).collect();
    let optimum = point[0].clone();

    // Duals of the equality-form rows are minus the reduced costs of the
    // artificial columns; undo the row flips and the `<=` sign convention.
    let d = t.reduced_costs(&cost);
    let multipliers = system
        .constraints
        .iter()
        .enumerate()
        .map(|(r, c)| {
            let mut y = -d[structural + r].clone();
            if flips[r] {
                y = -y;
            }
            if c.relation == Relation::Le {
                y = -y;
            }
            y
        })
        .collect();
    Ok(LpSolution {
        optimum: optimum.clone(),
        point,
        certificate: Certificate {
            multipliers,
            bound: optimum,
        },
    })
}
