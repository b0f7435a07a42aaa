use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, QuadraticNumber, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coeffs . x  REL  constant`, with `x[0]` always the balance variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub constant: Rational,
    pub text: String,
}

impl Constraint {
    /// The constraint as `h(x) >= 0` (or `= 0`): coefficients of `h` and
    /// its constant term. `>=` gives `lhs - rhs`, `<=` gives `rhs - lhs`.
    pub fn normalized(&self) -> (Vec<Rational>, Rational) {
        let sign = if self.relation == Relation::Le {
            -Rational::one()
        } else {
            Rational::one()
        };
        (
            self.coeffs.iter().map(|c| c * &sign).collect(),
            -(&self.constant * &sign),
        )
    }

    fn holds(&self, x: &[QuadraticNumber]) -> Result<bool> {
        let mut lhs = QuadraticNumber::rational(-self.constant.clone());
        for (c, v) in self.coeffs.iter().zip(x) {
            lhs = lhs.try_add(&QuadraticNumber::rational(c.clone()).try_mul(v)?)?;
        }
        let sign = lhs.signum();
        Ok(match self.relation {
            Relation::Ge => sign.is_ge(),
            Relation::Le => sign.is_le(),
            Relation::Eq => sign.is_eq(),
        })
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// Minimize the first variable subject to linear constraints. All
/// variables are free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSystem {
    pub variables: Vec<String>,
    pub constraints: Vec<Constraint>,
}

/// `x[p] * x[q] >= x[r] * x[s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductConstraint {
    pub lhs: (usize, usize),
    pub rhs: (usize, usize),
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonlinearSystem {
    pub linear: LpSystem,
    pub products: Vec<ProductConstraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseSystem {
    Linear(LpSystem),
    Nonlinear(NonlinearSystem),
}

impl CaseSystem {
    pub fn linear_part(&self) -> &LpSystem {
        match self {
            CaseSystem::Linear(s) => s,
            CaseSystem::Nonlinear(s) => &s.linear,
        }
    }

    pub fn relation_count(&self) -> usize {
        match self {
            CaseSystem::Linear(s) => s.constraints.len(),
            CaseSystem::Nonlinear(s) => s.linear.constraints.len() + s.products.len(),
        }
    }

    /// Exact membership test for a point in a common quadratic field.
    pub fn satisfied_by(&self, x: &[QuadraticNumber]) -> Result<bool> {
        let lin = self.linear_part();
        if x.len() != lin.variables.len() {
            return Err(Error::DimensionMismatch {
                expected: lin.variables.len(),
                got: x.len(),
            });
        }
        for c in &lin.constraints {
            if !c.holds(x)? {
                return Ok(false);
            }
        }
        if let CaseSystem::Nonlinear(s) = self {
            for p in &s.products {
                let l = x[p.lhs.0].try_mul(&x[p.lhs.1])?;
                let r = x[p.rhs.0].try_mul(&x[p.rhs.1])?;
                if l.try_sub(&r)?.signum().is_lt() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl LpSystem {
    /// Builds a system from relations written as in `"2c + d >= 1 - δ"`.
    pub fn parse(variables: &[&str], relations: &[&str]) -> Result<Self> {
        let constraints = relations
            .iter()
            .enumerate()
            .map(|(idx, text)| parse_relation(variables, text, idx + 1))
            .collect::<Result<_>>()?;
        Ok(Self {
            variables: variables.iter().map(|s| s.to_string()).collect(),
            constraints,
        })
    }
}

fn parse_relation(variables: &[&str], text: &str, line: usize) -> Result<Constraint> {
    let err = |message: String| Error::Parse { line, message };
    let (relation, op) = [
        (Relation::Ge, ">="),
        (Relation::Le, "<="),
        (Relation::Eq, "="),
    ]
    .into_iter()
    .find(|(_, op)| text.contains(op))
    .ok_or_else(|| err(format!("no relation in `{text}`")))?;
    let (left, right) = text.split_once(op).expect("found above");
    let (lc, lk) = parse_side(variables, left).map_err(err)?;
    let (rc, rk) = parse_side(variables, right).map_err(err)?;
    Ok(Constraint {
        coeffs: lc.iter().zip(&rc).map(|(l, r)| l - r).collect(),
        relation,
        constant: rk - lk,
        text: text.to_string(),
    })
}

/// A sum of terms like `3a`, `-b`, `2/5`, `δ`.
fn parse_side(
    variables: &[&str],
    side: &str,
) -> std::result::Result<(Vec<Rational>, Rational), String> {
    let mut coeffs = vec![Rational::zero(); variables.len()];
    let mut constant = Rational::zero();
    let normalized = side.replace('-', " + -");
    for term in normalized
        .split('+')
        .map(str::trim)
        .filter(|t| !t.is_empty())
    {
        let (neg, body) = match term.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, term),
        };
        let split = body
            .find(|c: char| !(c.is_ascii_digit() || c == '/'))
            .unwrap_or(body.len());
        let (num, name) = body.split_at(split);
        let mut value = if num.is_empty() {
            Rational::one()
        } else if let Some((p, q)) = num.split_once('/') {
            let p: i64 = p.parse().map_err(|_| format!("bad number `{num}`"))?;
            let q: i64 = q.parse().map_err(|_| format!("bad number `{num}`"))?;
            rat(p, q)
        } else {
            rat(num.parse().map_err(|_| format!("bad number `{num}`"))?, 1)
        };
        if neg {
            value = -value;
        }
        let name = name.trim();
        if name.is_empty() {
            constant += value;
        } else {
            let idx = variables
                .iter()
                .position(|v| *v == name)
                .ok_or_else(|| format!("unknown variable `{name}`"))?;
            coeffs[idx] += value;
        }
    }
    Ok((coeffs, constant))
}

const FOUR: [&str; 5] = ["δ", "a", "b", "c", "d"];
const FIVE: [&str; 6] = ["δ", "a", "b", "c", "d", "e"];

/// The constraint system of case `k` in `1..=9`, relation by relation in
/// the order they are usually displayed.
pub fn build_case_system(k: usize) -> Result<CaseSystem> {
    let lp = |vars: &[&str], rels: &[&str]| LpSystem::parse(vars, rels);
    let product = |vars: &[&str], text: &str, l: (&str, &str), r: (&str, &str)| {
        let idx = |name: &str| {
            vars.iter()
                .position(|v| *v == name)
                .expect("known variable")
        };
        ProductConstraint {
            lhs: (idx(l.0), idx(l.1)),
            rhs: (idx(r.0), idx(r.1)),
            text: text.to_string(),
        }
    };
    let system = match k {
        1 => CaseSystem::Linear(lp(
            &FOUR,
            &[
                "δ >= b + d",
                "2c + d >= 1 - δ",
                "a >= b",
                "b >= c",
                "d >= c",
                "c >= 0",
                "a + b + d = 1",
            ],
        )?),
        2 => CaseSystem::Linear(lp(
            &FOUR,
            &[
                "δ >= b + d",
                "2d >= 1 - δ",
                "a + 2b + 2c >= 1 - δ",
                "a >= b",
                "b >= c",
                "d >= c",
                "c >= 0",
                "a + 2b + 2d = 1",
            ],
        )?),
        3 => CaseSystem::Linear(lp(
            &FOUR[..4],
            &["a >= 0", "b >= a", "c >= b", "b >= 1 - δ", "b + c = 1"],
        )?),
        4 => CaseSystem::Nonlinear(NonlinearSystem {
            linear: lp(
                &FIVE,
                &[
                    "δ >= e",
                    "δ >= a + c",
                    "a + 3b + δ >= 1",
                    "a >= b",
                    "b >= 0",
                    "e >= d",
                    "d >= c",
                    "c >= b",
                    "a + c + d + e >= 1",
                ],
            )?,
            products: vec![product(&FIVE, "c^2 >= bd", ("c", "c"), ("b", "d"))],
        }),
        5 => CaseSystem::Linear(lp(
            &FIVE,
            &[
                "a >= b",
                "b >= 0",
                "e >= d",
                "d >= c",
                "c >= b",
                "3a + 3c + 2d + e = 1",
                "2a + 2c + d >= 1 - δ",
                "a + c <= δ",
                "3a >= 1 - δ",
                "3b + 3c + 2d + e >= 1 - δ",
            ],
        )?),
        6 => CaseSystem::Linear(lp(
            &FOUR,
            &[
                "a >= b",
                "b >= 0",
                "d >= c",
                "c >= b",
                "3a + 3c + 2d = 1",
                "2a + 2c + d >= 1 - δ",
                "a + c <= δ",
                "3a >= 1 - δ",
                "3b + 3c + 2d >= 1 - δ",
            ],
        )?),
        7 => CaseSystem::Linear(lp(
            &FIVE,
            &[
                "a >= b",
                "b >= c",
                "c >= 0",
                "e >= d",
                "d >= c",
                "a + 2b + 2d + e = 1",
                "b + d + e <= δ",
                "a <= δ",
                "a + 2b >= 1 - δ",
                "3c + 2d + e >= 1 - δ",
            ],
        )?),
        8 => CaseSystem::Linear(lp(
            &FOUR,
            &[
                "a >= b",
                "b >= c",
                "c >= 0",
                "d >= c",
                "a + 3b + 3d = 1",
                "b + d <= δ",
                "a + b + d <= δ",
                "a + 3b <= δ",
                "a + 3b + 3c >= 1 - δ",
            ],
        )?),
        9 => CaseSystem::Nonlinear(NonlinearSystem {
            linear: lp(
                &FOUR,
                &[
                    "δ >= b + d",
                    "δ >= a",
                    "δ >= 2d",
                    "3c + 2d + δ >= 1",
                    "a >= b",
                    "b >= c",
                    "c >= 0",
                    "d >= c",
                    "a + 2b + 2d >= 1",
                ],
            )?,
            products: vec![product(&FOUR, "b^2 >= ac", ("b", "b"), ("a", "c"))],
        }),
        _ => {
            return Err(Error::Precondition(format!(
                "case must be in 1..=9, got {k}"
            )))
        }
    };
    Ok(system)
}
