use qwatson::catalog::lhs_eval;
use qwatson::point::PointRecord;
use qwatson::report::VerificationReport;
use qwatson::verify::{check_mutated, run_suite_sequential, sample_point, Outcome, StreamIndex};
use qwatson::{run_suite, IdentityId, ParamPoint, SampleConfig, VerifyError};

fn config(trials: usize) -> SampleConfig {
    SampleConfig {
        trials,
        ..SampleConfig::default()
    }
}

#[test]
fn default_suite_rarely_hits_degenerate_points() {
    let report = run_suite(&config(100), &IdentityId::ALL).unwrap();
    let degen = report.total_degeneracies() as f64;
    let drawn = degen + (21 * 100) as f64;
    assert!(degen / drawn < 0.05, "{degen} degenerate of {drawn}");
}

#[test]
fn failures_reproduce_on_reevaluation() {
    let cfg = config(1);
    for id in IdentityId::ALL {
        let c = id.case().constraints;
        let caught = (0..20).find_map(|t| {
            let p = sample_point(&cfg, StreamIndex::new(id, t, 0), &c).unwrap();
            check_mutated(id, &p)
                .ok()
                .filter(|r| r.outcome == Outcome::Fail)
        });
        let r = caught.unwrap_or_else(|| panic!("{id}: mutation never caught"));
        // round-trip the witness through its serialized form
        let json = serde_json::to_string(&PointRecord::from(&r.point)).unwrap();
        let record: PointRecord = serde_json::from_str(&json).unwrap();
        let p = ParamPoint::try_from(&record).unwrap();
        assert_eq!(p, r.point);

        let (l, m) = id.case().mutated_sides(&p).unwrap();
        assert_ne!(l, m, "{id}");
        assert_eq!(Some(&l), r.lhs.as_ref());
        assert_eq!(Some(&m), r.rhs.as_ref());
        // the unmutated identity holds at the same witness
        let case = id.case();
        assert_eq!(case.lhs(&p).unwrap(), case.rhs(&p).unwrap(), "{id}");
        assert_eq!(case.lhs(&p).unwrap(), lhs_eval(id, &p).unwrap());
    }
}

#[test]
fn json_report_round_trips() {
    let report = run_suite(&config(5), &IdentityId::ALL).unwrap();
    let text = report.to_json();
    let back = VerificationReport::from_json(&text).unwrap();
    assert_eq!(back, report);
    assert_eq!(back.to_json(), text);

    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["config"]["rationalHeight"], 10);
    assert_eq!(v["results"][0]["paperRef"], "Andrews q-Watson formula");
    assert!(v["corD2LhsCheck"]["matching"].is_string());
}

#[test]
fn thread_count_does_not_change_the_report() {
    let cfg = SampleConfig {
        seed: 7,
        ..config(10)
    };
    let a = run_suite(&cfg, &IdentityId::ALL).unwrap().without_timing();
    let b = run_suite_sequential(&cfg, &IdentityId::ALL)
        .unwrap()
        .without_timing();
    assert_eq!(a.to_json(), b.to_json());
    let other = run_suite(&SampleConfig { seed: 8, ..cfg }, &IdentityId::ALL).unwrap();
    assert_ne!(a.to_json(), other.without_timing().to_json());
}

#[test]
fn eps_is_capped_by_n_for_jain_identities() {
    let cfg = SampleConfig {
        eps_max: 6,
        n_max: 4,
        ..config(1)
    };
    let c = IdentityId::ThmC.case().constraints;
    for t in 0..100 {
        let p = sample_point(&cfg, StreamIndex::new(IdentityId::ThmC, t, 0), &c).unwrap();
        assert!(p.eps() <= p.n() && p.n() <= 4);
    }
    assert!(run_suite(&cfg, &[IdentityId::ThmC]).unwrap().all_passed());
}

#[test]
fn single_unity_trial() {
    let report = run_suite(&config(1), &[IdentityId::UnityA]).unwrap();
    assert_eq!(report.results.len(), 1);
    assert_eq!(report.results[0].passes, 1);
    assert!(matches!(
        run_suite(&config(1), &[]),
        Err(VerifyError::NoIds)
    ));
}
