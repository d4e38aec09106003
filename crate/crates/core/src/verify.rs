//! Seeded random verification.
//!
//! Each identity is checked at `trials` independent, non-degenerate points.
//! A point is a pure function of the config seed and a [`StreamIndex`], so
//! reports do not depend on how trials are scheduled across threads.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{cor_d2_lhs_variant, Constraints, CorD2Lhs, IdentityId, CATALOG_VERSION};
use crate::error::{EvalError, VerifyError};
use crate::exact::{fmt_fraction, Rational};
use crate::point::{ParamPoint, PointRecord};
use crate::report::{
    ConfigEcho, CorD2Check, FailureRecord, IdentityResult, VerificationReport, SCHEMA_VERSION,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleConfig {
    pub seed: u64,
    pub trials: usize,
    pub n_max: usize,
    pub eps_max: usize,
    /// Numerators and denominators of `q`, `A`, `C` are drawn from `1..=height`.
    pub height: u64,
    /// Degenerate draws allowed per trial before giving up.
    pub max_resamples: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: 42,
            trials: 100,
            n_max: 8,
            eps_max: 4,
            height: 10,
            max_resamples: 64,
        }
    }
}

impl SampleConfig {
    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            seed: self.seed,
            trials: self.trials,
            n_max: self.n_max,
            eps_max: self.eps_max,
            rational_height: self.height,
        }
    }
}

/// Addresses one draw: which identity slot, which trial, which resample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamIndex {
    pub slot: u16,
    pub trial: u32,
    pub attempt: u16,
}

impl StreamIndex {
    pub fn new(id: IdentityId, trial: usize, attempt: usize) -> Self {
        StreamIndex {
            slot: id.index() as u16,
            trial: trial as u32,
            attempt: attempt as u16,
        }
    }

    pub fn as_u64(self) -> u64 {
        (u64::from(self.slot) << 48) | (u64::from(self.trial) << 16) | u64::from(self.attempt)
    }
}

/// Admissible `(n, eps)` box for an identity under a config.
#[derive(Debug, Clone, Copy)]
struct Window {
    n_lo: usize,
    n_hi: usize,
    eps_lo: usize,
    eps_hi: usize,
    eps_le_n: bool,
}

impl Window {
    fn new(config: &SampleConfig, c: &Constraints) -> Result<Self, String> {
        let (eps_lo, eps_cap) = c.eps_range();
        let eps_hi = eps_cap.unwrap_or(config.eps_max);
        let n_lo = if c.eps_le_n {
            c.n_min.max(eps_lo)
        } else {
            c.n_min
        };
        if config.height < 2 {
            return Err(format!(
                "rational height {} only yields q in {{1, -1}}",
                config.height
            ));
        }
        if n_lo > config.n_max {
            return Err(format!("needs n >= {n_lo} but n-max is {}", config.n_max));
        }
        if eps_lo > eps_hi {
            return Err(format!("needs eps >= {eps_lo} but eps-max is {eps_hi}"));
        }
        Ok(Window {
            n_lo,
            n_hi: config.n_max,
            eps_lo,
            eps_hi,
            eps_le_n: c.eps_le_n,
        })
    }

    fn eps_top(&self, n: usize) -> usize {
        if self.eps_le_n {
            self.eps_hi.min(n)
        } else {
            self.eps_hi
        }
    }

    /// Boundary cases first (`n` at its minimum, `n = 1`, `eps = n`), then uniform.
    fn pick<R: Rng>(&self, trial: u32, rng: &mut R) -> (usize, usize) {
        match trial {
            0 => (self.n_lo, self.eps_lo),
            1 => (1.clamp(self.n_lo, self.n_hi), self.eps_lo),
            2 => {
                let lo = self.n_lo.max(self.eps_lo);
                let hi = self.n_hi.min(self.eps_hi);
                if lo <= hi {
                    let n = rng.gen_range(lo..=hi);
                    (n, n)
                } else {
                    self.uniform(rng)
                }
            }
            _ => self.uniform(rng),
        }
    }

    fn uniform<R: Rng>(&self, rng: &mut R) -> (usize, usize) {
        let n = rng.gen_range(self.n_lo..=self.n_hi);
        let eps = rng.gen_range(self.eps_lo..=self.eps_top(n));
        (n, eps)
    }
}

/// Uniform over the distinct nonzero rationals `p/r` with `max(|p|, r) <= height`.
fn draw_rational<R: Rng>(rng: &mut R, height: u64) -> Rational {
    let (p, r) = loop {
        let p = rng.gen_range(1..=height);
        let r = rng.gen_range(1..=height);
        if p.gcd(&r) == 1 {
            break (p, r);
        }
    };
    let x = Rational::new(BigInt::from(p), BigInt::from(r));
    if rng.gen_bool(0.5) {
        -x
    } else {
        x
    }
}

/// Draws a rational other than `0, 1, -1`. Needs `height >= 2`.
fn draw_base<R: Rng>(rng: &mut R, height: u64) -> Rational {
    loop {
        let x = draw_rational(rng, height);
        if x.abs() != Rational::from_integer(BigInt::from(1)) {
            return x;
        }
    }
}

/// Samples a point satisfying `constraints`. Jain-type constraints get
/// `q = Q^2` for a sampled `Q`.
pub fn sample_point(
    config: &SampleConfig,
    stream: StreamIndex,
    constraints: &Constraints,
) -> Result<ParamPoint, String> {
    let window = Window::new(config, constraints)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(stream.as_u64());

    let base = draw_base(&mut rng, config.height);
    let q = if constraints.square_q {
        &base * &base
    } else {
        base
    };
    let sqrt_a = draw_rational(&mut rng, config.height);
    let sqrt_c = draw_rational(&mut rng, config.height);
    let (n, eps) = window.pick(stream.trial, &mut rng);
    Ok(ParamPoint::new(q, sqrt_a, sqrt_c, n, eps).expect("sampler respects point invariants"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub outcome: Outcome,
    pub point: ParamPoint,
    /// Present on `Fail`.
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
}

fn compare(
    point: &ParamPoint,
    sides: Result<(Rational, Rational), EvalError>,
) -> Result<CheckResult, EvalError> {
    let result = |outcome, lhs, rhs| CheckResult {
        outcome,
        point: point.clone(),
        lhs,
        rhs,
    };
    match sides {
        Ok((l, r)) if l == r => Ok(result(Outcome::Pass, None, None)),
        Ok((l, r)) => Ok(result(Outcome::Fail, Some(l), Some(r))),
        Err(e) if e.is_degenerate() => Ok(result(Outcome::Degenerate, None, None)),
        Err(e) => Err(e),
    }
}

/// Evaluates both sides of `id` at `point` and compares them exactly.
/// Constraint violations are errors; vanishing denominators are an outcome.
pub fn check_identity(id: IdentityId, point: &ParamPoint) -> Result<CheckResult, EvalError> {
    let case = id.case();
    case.constraints.check(point)?;
    let sides = case.lhs(point).and_then(|l| Ok((l, case.rhs(point)?)));
    compare(point, sides)
}

/// Like [`check_identity`] but with the id's documented mutation applied.
pub fn check_mutated(id: IdentityId, point: &ParamPoint) -> Result<CheckResult, EvalError> {
    let case = id.case();
    case.constraints.check(point)?;
    compare(point, case.mutated_sides(point))
}

/// Outcome of the cor-d2 left-hand-side comparison at one point.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct CorD2Tally {
    points: usize,
    printed: usize,
    shifted: usize,
}

fn cor_d2_tally(point: &ParamPoint) -> Result<CorD2Tally, EvalError> {
    let rhs = IdentityId::CorD2.case().rhs(point)?;
    let matches = |v| -> Result<usize, EvalError> {
        match cor_d2_lhs_variant(v, point) {
            Ok(l) => Ok(usize::from(l == rhs)),
            Err(e) if e.is_degenerate() => Ok(0),
            Err(e) => Err(e),
        }
    };
    Ok(CorD2Tally {
        points: 1,
        printed: matches(CorD2Lhs::Printed)?,
        shifted: matches(CorD2Lhs::Shifted)?,
    })
}

#[derive(Debug, Clone)]
struct TrialOutcome {
    result: CheckResult,
    degeneracies: usize,
    micros: u128,
    cor_d2: Option<CorD2Tally>,
}

type Checker = fn(IdentityId, &ParamPoint) -> Result<CheckResult, EvalError>;

fn run_trial(
    config: &SampleConfig,
    id: IdentityId,
    trial: usize,
    checker: Checker,
) -> Result<TrialOutcome, VerifyError> {
    let start = Instant::now();
    let constraints = id.case().constraints;
    let unsat = |reason| VerifyError::UnsatisfiableConstraints {
        id: id.key().to_string(),
        reason,
    };
    let mut last = None;
    for attempt in 0..=config.max_resamples {
        let point = sample_point(config, StreamIndex::new(id, trial, attempt), &constraints)
            .map_err(unsat)?;
        let result = checker(id, &point)?;
        if result.outcome == Outcome::Degenerate {
            last = Some(point);
            continue;
        }
        let cor_d2 = if id == IdentityId::CorD2 {
            Some(cor_d2_tally(&point)?)
        } else {
            None
        };
        return Ok(TrialOutcome {
            result,
            degeneracies: attempt,
            micros: start.elapsed().as_micros(),
            cor_d2,
        });
    }
    Err(VerifyError::ResampleBudgetExhausted {
        id: id.key().to_string(),
        attempts: config.max_resamples + 1,
        last_point: last.map(|p| p.to_string()).unwrap_or_default(),
    })
}

fn validate(config: &SampleConfig, ids: &[IdentityId]) -> Result<(), VerifyError> {
    if ids.is_empty() {
        return Err(VerifyError::NoIds);
    }
    for &id in ids {
        Window::new(config, &id.case().constraints).map_err(|reason| {
            VerifyError::UnsatisfiableConstraints {
                id: id.key().to_string(),
                reason,
            }
        })?;
    }
    Ok(())
}

fn jobs(config: &SampleConfig, ids: &[IdentityId]) -> Vec<(IdentityId, usize)> {
    ids.iter()
        .flat_map(|&id| (0..config.trials).map(move |t| (id, t)))
        .collect()
}

fn assemble(
    config: &SampleConfig,
    ids: &[IdentityId],
    outcomes: Vec<TrialOutcome>,
) -> VerificationReport {
    let mut results = Vec::with_capacity(ids.len());
    let mut d2: Option<CorD2Tally> = None;
    for (chunk, &id) in outcomes.chunks(config.trials.max(1)).zip(ids) {
        let mut res = IdentityResult {
            id: id.key().to_string(),
            paper_ref: id.case().paper_ref.to_string(),
            trials: chunk.len(),
            passes: 0,
            failures: Vec::new(),
            degeneracies: 0,
            wall_time_ms: 0,
        };
        let mut micros = 0u128;
        for t in chunk {
            res.degeneracies += t.degeneracies;
            micros += t.micros;
            match t.result.outcome {
                Outcome::Pass => res.passes += 1,
                _ => res.failures.push(FailureRecord {
                    point: PointRecord::from(&t.result.point),
                    lhs: t.result.lhs.as_ref().map(fmt_fraction).unwrap_or_default(),
                    rhs: t.result.rhs.as_ref().map(fmt_fraction).unwrap_or_default(),
                }),
            }
            if let Some(tally) = t.cor_d2 {
                let acc = d2.get_or_insert_with(CorD2Tally::default);
                acc.points += tally.points;
                acc.printed += tally.printed;
                acc.shifted += tally.shifted;
            }
        }
        res.wall_time_ms = (micros / 1000) as u64;
        results.push(res);
    }
    let cor_d2_lhs_check = d2.map(|t| {
        let full = |m| m == t.points && t.points > 0;
        let matching = match (full(t.printed), full(t.shifted)) {
            (true, false) => Some(CorD2Lhs::Printed.label().to_string()),
            (false, true) => Some(CorD2Lhs::Shifted.label().to_string()),
            _ => None,
        };
        CorD2Check {
            points: t.points,
            printed_matches: t.printed,
            shifted_matches: t.shifted,
            matching,
        }
    });
    VerificationReport {
        schema: SCHEMA_VERSION,
        catalog_version: CATALOG_VERSION,
        config: config.echo(),
        results,
        cor_d2_lhs_check,
    }
}

/// Runs every trial on the calling thread.
pub fn run_suite_sequential(
    config: &SampleConfig,
    ids: &[IdentityId],
) -> Result<VerificationReport, VerifyError> {
    validate(config, ids)?;
    let outcomes = jobs(config, ids)
        .into_iter()
        .map(|(id, t)| run_trial(config, id, t, check_identity))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(assemble(config, ids, outcomes))
}

/// Fans trials out over the rayon pool; the report matches the sequential one.
#[cfg(feature = "parallel")]
pub fn run_suite_parallel(
    config: &SampleConfig,
    ids: &[IdentityId],
) -> Result<VerificationReport, VerifyError> {
    use rayon::prelude::*;

    validate(config, ids)?;
    let outcomes = jobs(config, ids)
        .into_par_iter()
        .map(|(id, t)| run_trial(config, id, t, check_identity))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(assemble(config, ids, outcomes))
}

/// Runs the suite, in parallel when the `parallel` feature is enabled.
pub fn run_suite(
    config: &SampleConfig,
    ids: &[IdentityId],
) -> Result<VerificationReport, VerifyError> {
    #[cfg(feature = "parallel")]
    {
        run_suite_parallel(config, ids)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_suite_sequential(config, ids)
    }
}

/// Index of the first trial (out of `max_trials`) at which the id's documented
/// mutation is caught, if any.
pub fn mutation_catch_trial(
    config: &SampleConfig,
    id: IdentityId,
    max_trials: usize,
) -> Result<Option<usize>, VerifyError> {
    validate(config, &[id])?;
    for trial in 0..max_trials {
        let t = run_trial(config, id, trial, check_mutated)?;
        if t.result.outcome == Outcome::Fail {
            return Ok(Some(trial));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::EpsRule;
    use crate::exact::{int, rat};

    fn cfg() -> SampleConfig {
        SampleConfig {
            trials: 12,
            ..SampleConfig::default()
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        let c = IdentityId::ThmC.case().constraints;
        let s = StreamIndex::new(IdentityId::ThmC, 7, 0);
        assert_eq!(
            sample_point(&cfg(), s, &c).unwrap(),
            sample_point(&cfg(), s, &c).unwrap()
        );
        let other = StreamIndex::new(IdentityId::ThmC, 8, 0);
        assert_ne!(
            sample_point(&cfg(), s, &c).unwrap(),
            sample_point(&cfg(), other, &c).unwrap()
        );
    }

    #[test]
    fn sampler_respects_eps_le_n() {
        let config = SampleConfig {
            n_max: 4,
            eps_max: 6,
            ..cfg()
        };
        let c = IdentityId::ThmD.case().constraints;
        for t in 0..200 {
            let p = sample_point(&config, StreamIndex::new(IdentityId::ThmD, t, 0), &c).unwrap();
            assert!(p.eps() <= p.n() && p.n() <= 4, "{p}");
            assert!(p.sqrt_q().is_ok());
            assert!(!p.q().is_integer() || p.q().abs() > int(1));
        }
    }

    #[test]
    fn forced_boundaries_come_first() {
        let c = IdentityId::ThmA.case().constraints;
        let at = |t| sample_point(&cfg(), StreamIndex::new(IdentityId::ThmA, t, 0), &c).unwrap();
        assert_eq!((at(0).n(), at(0).eps()), (0, 0));
        assert_eq!((at(1).n(), at(1).eps()), (1, 0));
        assert_eq!(at(2).n(), at(2).eps());

        let c2 = IdentityId::CorC2.case().constraints;
        let p = sample_point(&cfg(), StreamIndex::new(IdentityId::CorC2, 0, 0), &c2).unwrap();
        assert_eq!((p.n(), p.eps()), (2, 2));
    }

    #[test]
    fn height_one_is_unsatisfiable() {
        // the only rationals of height 1 are +-1, so q cannot avoid {1, -1}
        let config = SampleConfig { height: 1, ..cfg() };
        let c = Constraints {
            n_min: 0,
            eps: EpsRule::Free,
            eps_le_n: false,
            square_q: false,
        };
        assert!(sample_point(&config, StreamIndex::new(IdentityId::Andrews, 0, 0), &c).is_err());
        assert!(matches!(
            run_suite(&config, &[IdentityId::Andrews]),
            Err(VerifyError::UnsatisfiableConstraints { .. })
        ));
    }

    #[test]
    fn corollary_needing_n_two_is_unsatisfiable_at_n_max_one() {
        let config = SampleConfig { n_max: 1, ..cfg() };
        assert!(matches!(
            run_suite(&config, &[IdentityId::CorD2]),
            Err(VerifyError::UnsatisfiableConstraints { .. })
        ));
    }

    #[test]
    fn empty_id_list_is_rejected() {
        assert_eq!(run_suite(&cfg(), &[]), Err(VerifyError::NoIds));
    }

    #[test]
    fn check_identity_examples() {
        let p = ParamPoint::new(rat(1, 2), rat(1, 3), rat(1, 5), 3, 0).unwrap();
        let r = check_identity(IdentityId::Andrews, &p).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert_eq!(r.lhs, None);
        let r = check_identity(IdentityId::ThmA, &p).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert!(check_identity(IdentityId::CorA2, &p).is_err());
    }

    #[test]
    fn degenerate_point_is_an_outcome() {
        // c = 1 makes (1 - c) vanish in the denominator of shift_coefficient at i = 1
        let p = ParamPoint::new(rat(1, 2), rat(1, 3), int(1), 3, 1).unwrap();
        let r = check_identity(IdentityId::ThmA, &p).unwrap();
        assert_eq!(r.outcome, Outcome::Degenerate);
    }

    #[test]
    fn unity_single_trial() {
        let config = SampleConfig { trials: 1, ..cfg() };
        let report = run_suite(&config, &[IdentityId::UnityA]).unwrap();
        assert_eq!(report.results[0].passes, 1);
    }

    #[test]
    fn sequential_and_default_agree() {
        let ids = [IdentityId::RelB, IdentityId::CorD2, IdentityId::Jain];
        let a = run_suite_sequential(&cfg(), &ids).unwrap().without_timing();
        let b = run_suite(&cfg(), &ids).unwrap().without_timing();
        assert_eq!(a, b);
        assert!(a.all_passed());
        let d2 = a.cor_d2_lhs_check.unwrap();
        assert_eq!(d2.matching.as_deref(), Some("q^{2-n}"));
    }
}
