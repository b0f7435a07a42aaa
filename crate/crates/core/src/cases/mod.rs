//! Lower bounds on the balance constant from the nine case systems.
//!
//! Seven systems are linear and are solved exactly by [`lp_minimize_exact`],
//! which also returns a dual certificate checked by [`verify_certificate`].
//! Cases 4 and 9 carry one product constraint each and are handled by the
//! dedicated analyses below.

mod simplex;
mod system;

use std::cmp::Ordering;

use serde::Serialize;

pub use simplex::{
    lp_minimize_exact, verify_certificate, Certificate, CertificateCheck, LpSolution,
};
pub use system::{
    build_case_system, CaseSystem, Constraint, LpSystem, NonlinearSystem, ProductConstraint,
    Relation,
};

use crate::error::{Error, Result};
use crate::exact::{case4_optimum, format_rational, lambda, rat, QuadraticNumber, Rational};

/// Optimal values of the linear cases.
pub const LINEAR_OPTIMA: [(usize, i64, i64); 7] = [
    (1, 2, 5),
    (2, 2, 5),
    (3, 1, 2),
    (5, 2, 5),
    (6, 5, 13),
    (7, 7, 19),
    (8, 9, 23),
];

fn q(x: Rational) -> QuadraticNumber {
    QuadraticNumber::rational(x)
}

fn qi(p: i64, r: i64) -> QuadraticNumber {
    q(rat(p, r))
}

fn is_neg(x: &QuadraticNumber) -> bool {
    x.signum() == Ordering::Less
}

fn min_q(x: QuadraticNumber, y: QuadraticNumber) -> Result<QuadraticNumber> {
    Ok(if is_neg(&x.try_sub(&y)?) { x } else { y })
}

fn max_q(x: QuadraticNumber, y: QuadraticNumber) -> Result<QuadraticNumber> {
    Ok(if is_neg(&x.try_sub(&y)?) { y } else { x })
}

/// The larger root of `a x^2 + b x + c` with `a > 0`, exactly.
pub fn larger_root(a: i64, b: i64, c: i64) -> Result<QuadraticNumber> {
    if a <= 0 {
        return Err(Error::Precondition(
            "leading coefficient must be positive".into(),
        ));
    }
    let disc = b * b - 4 * a * c;
    if disc < 0 {
        return Err(Error::Precondition("no real root".into()));
    }
    let mut square = 1i64;
    let mut free = disc;
    let mut p = 2i64;
    while p * p <= free {
        while free % (p * p) == 0 {
            free /= p * p;
            square *= p;
        }
        p += 1;
    }
    let half = rat(1, 2 * a);
    if free <= 1 {
        let s = if disc == 0 { 0 } else { square };
        return Ok(q(rat(-b + s, 1) * half));
    }
    QuadraticNumber::new(rat(-b, 2 * a), rat(square, 2 * a), free as u64)
}

/// A point of the case 4 system with balance variable `delta`, or `None`
/// when no point exists. Every returned point has been substituted back
/// into the full system.
///
/// With `e = δ` and `a = δ - c`, the system reduces to finding `b` in
/// `[(1-2δ)/2, δ/2]` with `U(b)^2 >= (1-2δ) b`, where
/// `U(b) = min(δ - b, 3b - (1-2δ))` caps `c`. The left side minus the right
/// is convex on each linear piece of `U`, so only the interval ends and
/// the breakpoint `(1-δ)/4` need testing. The interval is empty below 1/3.
pub fn case4_point(delta: &QuadraticNumber) -> Result<Option<Vec<QuadraticNumber>>> {
    let system = build_case_system(4)?;
    let one = qi(1, 1);
    let slack = one.try_sub(&delta.try_add(delta)?)?; // 1 - 2δ
    if is_neg(&delta.try_sub(&qi(1, 3))?) {
        return Ok(None);
    }
    let candidates = [
        slack.try_mul(&qi(1, 2))?,
        one.try_sub(delta)?.try_mul(&qi(1, 4))?,
        delta.try_mul(&qi(1, 2))?,
    ];
    for b in candidates {
        let u = min_q(delta.try_sub(&b)?, b.try_mul(&qi(3, 1))?.try_sub(&slack)?)?;
        let gap = u.try_mul(&u)?.try_sub(&slack.try_mul(&b)?)?;
        if is_neg(&gap) || is_neg(&u.try_sub(&b)?) {
            continue;
        }
        let c = u;
        let d = max_q(c.clone(), slack.clone())?;
        let a = delta.try_sub(&c)?;
        let point = vec![delta.clone(), a, b, c, d, delta.clone()];
        if !system.satisfied_by(&point)? {
            return Err(Error::Verification(format!(
                "case 4 reduction produced a point outside the system at δ = {delta}"
            )));
        }
        return Ok(Some(point));
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct Case4Report {
    #[serde(serialize_with = "crate::serde_display")]
    pub threshold: QuadraticNumber,
    /// The threshold is the root of `17δ^2 + 2δ - 3`.
    pub root_of_quadratic: bool,
    pub matches_closed_form: bool,
    pub feasible_at_threshold: bool,
    pub infeasible_at_9_25: bool,
    /// A rational just below the threshold admits no point.
    pub infeasible_just_below: bool,
}

impl Case4Report {
    pub fn passed(&self) -> bool {
        self.root_of_quadratic
            && self.matches_closed_form
            && self.feasible_at_threshold
            && self.infeasible_at_9_25
            && self.infeasible_just_below
    }
}

/// Locates the case 4 threshold as the breakpoint condition
/// `17δ^2 + 2δ - 3 = 0` and checks it from both sides.
pub fn case4_analyze() -> Result<Case4Report> {
    let threshold = larger_root(17, 2, -3)?;
    let poly = threshold
        .pow(2)
        .try_mul(&qi(17, 1))?
        .try_add(&threshold.try_mul(&qi(2, 1))?)?
        .try_sub(&qi(3, 1))?;
    let scale = num_bigint::BigInt::from(10u64.pow(9));
    let below = Rational::new(
        (threshold.try_mul(&q(Rational::from_integer(scale.clone())))?).floor(),
        scale,
    );
    Ok(Case4Report {
        root_of_quadratic: poly.signum() == Ordering::Equal,
        matches_closed_form: threshold.quad_compare(&case4_optimum())? == Ordering::Equal,
        feasible_at_threshold: case4_point(&threshold)?.is_some(),
        infeasible_at_9_25: case4_point(&qi(9, 25))?.is_none(),
        infeasible_just_below: case4_point(&q(below))?.is_none(),
        threshold,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Case9Report {
    #[serde(serialize_with = "crate::serde_display")]
    pub low_root: QuadraticNumber,
    #[serde(serialize_with = "crate::serde_display")]
    pub high_root: QuadraticNumber,
    pub checks: Vec<NamedCheck>,
}

impl Case9Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Case 9 with `x = λ`: the quadratic
/// `Q(y) = 3(λ - y)^2 - (1 - 2λ)(1 - λ - 2y)` has roots `(1-λ)/5` and
/// `(53λ - 13)/15`, the larger root exceeds `λ/2` and the smaller does not,
/// which rules out every `δ < λ`. The system is feasible at `δ = λ` itself,
/// so λ is exactly the case 9 threshold.
pub fn case9_analyze() -> Result<Case9Report> {
    let l = lambda();
    let one = qi(1, 1);
    let slack = one.try_sub(&l.try_add(&l)?)?; // 1 - 2λ
    let quad_at = |y: &QuadraticNumber| -> Result<QuadraticNumber> {
        let diff = l.try_sub(y)?;
        let lin = one.try_sub(&l)?.try_sub(&y.try_add(y)?)?;
        diff.try_mul(&diff)?
            .try_mul(&qi(3, 1))?
            .try_sub(&slack.try_mul(&lin)?)
    };
    let low = one.try_sub(&l)?.try_mul(&qi(1, 5))?;
    let high = l
        .try_mul(&qi(53, 1))?
        .try_sub(&qi(13, 1))?
        .try_mul(&qi(1, 15))?;
    let half = l.try_mul(&qi(1, 2))?;
    // Vieta: 3(y - low)(y - high) has the same coefficients as Q.
    let sum = low.try_add(&high)?.try_mul(&qi(3, 1))?;
    let product = low.try_mul(&high)?.try_mul(&qi(3, 1))?;
    let expect_sum = l.try_mul(&qi(10, 1))?.try_sub(&qi(2, 1))?;
    let expect_product = l.pow(2).try_add(&l.try_mul(&qi(3, 1))?)?.try_sub(&one)?;
    let lambda_poly = l
        .pow(2)
        .try_mul(&qi(26, 1))?
        .try_add(&l.try_mul(&qi(3, 1))?)?
        .try_sub(&qi(4, 1))?;

    let tight = vec![
        l.clone(),
        slack.clone(),
        l.try_mul(&qi(6, 1))?.try_sub(&one)?.try_mul(&qi(1, 5))?,
        low.clone(),
        low.clone(),
    ];
    let system = build_case_system(9)?;

    let eq = |x: &QuadraticNumber, y: &QuadraticNumber| -> Result<bool> {
        Ok(x.quad_compare(y)? == Ordering::Equal)
    };
    let lt = |x: &QuadraticNumber, y: &QuadraticNumber| -> Result<bool> {
        Ok(x.quad_compare(y)? == Ordering::Less)
    };
    let checks = vec![
        (
            "lambda-root-of-26x2+3x-4",
            lambda_poly.signum() == Ordering::Equal,
        ),
        (
            "low-root-vanishes",
            quad_at(&low)?.signum() == Ordering::Equal,
        ),
        (
            "high-root-vanishes",
            quad_at(&high)?.signum() == Ordering::Equal,
        ),
        ("root-sum", eq(&sum, &expect_sum)?),
        ("root-product", eq(&product, &expect_product)?),
        ("high-root-above-half-lambda", lt(&half, &high)?),
        ("low-root-below-half-lambda", lt(&low, &half)?),
        ("lambda-above-2/7", lt(&qi(2, 7), &l)?),
        ("lambda-below-1/2", lt(&l, &qi(1, 2))?),
        ("feasible-at-lambda", system.satisfied_by(&tight)?),
    ]
    .into_iter()
    .map(|(name, passed)| NamedCheck {
        name: name.to_string(),
        passed,
    })
    .collect();
    Ok(Case9Report {
        low_root: low,
        high_root: high,
        checks,
    })
}

/// Solves `2(1 - 2δ) <= δ` for its least `δ`.
pub fn twofifths_bound() -> Rational {
    // δ - 2(1 - 2δ) >= 0, i.e. slope * δ + intercept >= 0
    let (slope, intercept) = (rat(1, 1) + rat(4, 1), rat(-2, 1));
    -intercept / slope
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseOutcome {
    pub case: usize,
    pub bound: String,
    pub approx: f64,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub value: QuadraticNumber,
}

impl std::fmt::Display for CaseOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CASE {} BOUND {} STATUS {}",
            self.case,
            self.bound,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

/// Runs one case: linear cases are solved, certified and compared with
/// their known optimum; cases 4 and 9 run their analyses.
pub fn verify_case(k: usize) -> Result<CaseOutcome> {
    let system = build_case_system(k)?;
    let outcome = match k {
        4 => {
            let report = case4_analyze()?;
            CaseOutcome {
                case: 4,
                bound: report.threshold.fraction_string(),
                approx: report.threshold.to_f64(),
                passed: report.passed(),
                detail: format!("{report:?}"),
                value: report.threshold,
            }
        }
        9 => {
            let report = case9_analyze()?;
            let failed: Vec<&str> = report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name.as_str())
                .collect();
            CaseOutcome {
                case: 9,
                bound: format!("lambda={}", lambda().fraction_string()),
                approx: lambda().to_f64(),
                passed: report.passed(),
                detail: if failed.is_empty() {
                    "all checks pass".into()
                } else {
                    failed.join(", ")
                },
                value: lambda(),
            }
        }
        _ => {
            let lp = system.linear_part();
            let sol = lp_minimize_exact(lp)?;
            let check = verify_certificate(lp, &sol.certificate)?;
            let &(_, p, r) = LINEAR_OPTIMA
                .iter()
                .find(|(c, _, _)| *c == k)
                .expect("linear case");
            let point: Vec<QuadraticNumber> = sol.point.iter().cloned().map(q).collect();
            let feasible = system.satisfied_by(&point)?;
            let expected = rat(p, r);
            let mut notes = Vec::new();
            if !check.passed {
                notes.push(check.reason.unwrap_or_default());
            }
            if !feasible {
                notes.push("optimal point violates the system".into());
            }
            if sol.optimum != expected {
                notes.push(format!(
                    "optimum {} differs from {}",
                    format_rational(&sol.optimum),
                    format_rational(&expected)
                ));
            }
            CaseOutcome {
                case: k,
                bound: format_rational(&sol.optimum),
                approx: q(sol.optimum.clone()).to_f64(),
                passed: notes.is_empty(),
                detail: if notes.is_empty() {
                    "certificate verified".into()
                } else {
                    notes.join("; ")
                },
                value: q(sol.optimum),
            }
        }
    };
    Ok(outcome)
}

pub fn verify_cases() -> Result<Vec<CaseOutcome>> {
    (1..=9).map(verify_case).collect()
}

/// Cases 1 to 8 bound δ strictly above λ; case 9 certifies exactly `δ >= λ`.
pub fn bounds_reach_lambda(outcomes: &[CaseOutcome]) -> Result<bool> {
    let l = lambda();
    for o in outcomes {
        let ord = crate::exact::quad_compare(&o.value, &l)?;
        let ok = if o.case == 9 {
            ord != Ordering::Less
        } else {
            ord == Ordering::Greater
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(outcomes.len() == 9)
}

/// Multipliers for cases 1 and 2 as they are usually written.
pub fn published_certificate(k: usize) -> Option<Certificate> {
    let m = |v: &[(i64, i64)]| v.iter().map(|&(p, r)| rat(p, r)).collect::<Vec<_>>();
    match k {
        1 => Some(Certificate {
            multipliers: m(&[(3, 5), (2, 5), (0, 1), (3, 5), (1, 5), (0, 1), (0, 1)]),
            bound: rat(2, 5),
        }),
        2 => Some(Certificate {
            multipliers: m(&[
                (2, 5),
                (2, 5),
                (1, 5),
                (0, 1),
                (2, 5),
                (0, 1),
                (0, 1),
                (-1, 5),
            ]),
            bound: rat(2, 5),
        }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_optima_and_certificates() {
        for &(k, p, r) in &LINEAR_OPTIMA {
            let sys = build_case_system(k).unwrap();
            let sol = lp_minimize_exact(sys.linear_part()).unwrap();
            assert_eq!(sol.optimum, rat(p, r), "case {k}");
            let check = verify_certificate(sys.linear_part(), &sol.certificate).unwrap();
            assert!(check.passed, "case {k}: {:?}", check.reason);
        }
    }

    #[test]
    fn published_multipliers() {
        for k in [1, 2] {
            let sys = build_case_system(k).unwrap();
            let cert = published_certificate(k).unwrap();
            assert!(
                verify_certificate(sys.linear_part(), &cert).unwrap().passed,
                "case {k}"
            );
        }
        let one = build_case_system(1).unwrap();
        let zero = Certificate {
            multipliers: vec![rat(0, 1); 7],
            bound: rat(2, 5),
        };
        assert!(!verify_certificate(one.linear_part(), &zero).unwrap().passed);
        assert!(published_certificate(3).is_none());
    }

    #[test]
    fn case4() {
        let report = case4_analyze().unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.threshold.fraction_string(), "(-1+2*sqrt(13))/17");
        assert!(case4_point(&qi(1, 2)).unwrap().is_some());
        assert!(case4_point(&qi(1, 3)).unwrap().is_none());
        assert!(case4_point(&qi(3, 10)).unwrap().is_none());
        assert!(case4_point(&qi(2, 5)).unwrap().is_some());
    }

    #[test]
    fn case4_monotone_on_samples() {
        let t = case4_optimum();
        for i in 0..100 {
            let d = qi(30 + i, 200);
            let feasible = case4_point(&d).unwrap().is_some();
            let above = d.quad_compare(&t).unwrap() != Ordering::Less;
            assert_eq!(feasible, above, "δ = {d}");
        }
    }

    #[test]
    fn case9() {
        let report = case9_analyze().unwrap();
        assert!(report.passed(), "{:?}", report.checks);
        assert_eq!(report.checks.len(), 10);
    }

    #[test]
    fn roots_and_small_bounds() {
        assert_eq!(
            larger_root(1, 0, -4).unwrap().to_rational(),
            Some(rat(2, 1))
        );
        assert_eq!(
            larger_root(1, -2, 1).unwrap().to_rational(),
            Some(rat(1, 1))
        );
        assert_eq!(
            larger_root(26, 3, -4)
                .unwrap()
                .quad_compare(&lambda())
                .unwrap(),
            Ordering::Equal
        );
        assert!(larger_root(1, 0, 1).is_err());
        assert!(larger_root(0, 1, 1).is_err());
        let b = twofifths_bound();
        assert_eq!(b, rat(2, 5));
        let holds = |d: Rational| rat(2, 1) * (rat(1, 1) - rat(2, 1) * &d) <= d;
        assert!(holds(b.clone()));
        assert!(!holds(rat(1, 3)));
    }

    #[test]
    fn summary() {
        let outcomes = verify_cases().unwrap();
        assert!(outcomes.iter().all(|o| o.passed), "{outcomes:?}");
        assert!(bounds_reach_lambda(&outcomes).unwrap());
        assert_eq!(outcomes[5].to_string(), "CASE 6 BOUND 5/13 STATUS PASS");
        assert_eq!(
            outcomes[3].to_string(),
            "CASE 4 BOUND (-1+2*sqrt(13))/17 STATUS PASS"
        );
        assert!(!bounds_reach_lambda(&outcomes[..8]).unwrap());
    }
}
