use alloc::vec;
use alloc::vec::Vec;

use super::*;

fn xyz_setup() -> SingularSetup {
    SingularSetup {
        d0: Some(3),
        components: vec![ComponentData::homogeneous(1, 1, 2); 3],
        ..SingularSetup::new(2, 4)
    }
}

fn cp(f: &[(u64, u64)]) -> CycloProduct {
    CycloProduct::from_factors(f.iter().copied()).unwrap()
}

#[test]
fn lambda1_sums() {
    let mut s = SingularSetup::new(2, 10);
    s.components = vec![ComponentData::new(1, 1)];
    assert_eq!(lambda1_from_components(&s), 1);
    s.components = vec![ComponentData::new(1, 1); 3];
    assert_eq!(lambda1_from_components(&s), 3);
    s.components = vec![ComponentData::new(2, 3)];
    assert_eq!(lambda1_from_components(&s), 6);
}

#[test]
fn divisor_bounds() {
    assert_eq!(
        divisibility_bound(&xyz_setup()).unwrap(),
        Some(cp(&[(1, 2)]))
    );
    let mut s = xyz_setup();
    s.components.clear();
    assert_eq!(divisibility_bound(&s).unwrap(), Some(CycloProduct::one()));
    let mut s = xyz_setup();
    s.components[1] = ComponentData::new(1, 1);
    assert_eq!(divisibility_bound(&s).unwrap(), None);
}

#[test]
fn rank_bounds() {
    assert_eq!(rank_bound(&xyz_setup()).unwrap(), 3);
    let mut s = xyz_setup();
    for c in &mut s.components {
        c.fixed_rank = Some(1);
    }
    assert_eq!(rank_bound(&s).unwrap(), 3);
    let mut s = SingularSetup::new(2, 2);
    s.components = vec![ComponentData::new(1, 5)];
    assert_eq!(rank_bound(&s).unwrap(), 2);
    // a vertical monodromy without fixed vectors kills the bound
    let mut s = xyz_setup();
    for c in &mut s.components {
        c.tau = Some(IntMatrix::from_i64(1, 1, &[-1]).unwrap());
    }
    assert_eq!(rank_bound(&s).unwrap(), 0);
}

#[test]
fn application1_cases() {
    assert_eq!(
        application1(1, 1).unwrap().verdict,
        App1Verdict::NonSplitting
    );
    assert_eq!(
        application1(4, 3).unwrap().verdict,
        App1Verdict::NotApplicable
    );
    let degenerate = application1(0, 0).unwrap();
    assert_eq!(degenerate.verdict, App1Verdict::NonSplitting);
    assert_eq!(degenerate.warnings.len(), 1);
    assert!(application1(1, 2).is_err());
}

#[test]
fn application2_table() {
    let s = |mu0, l1| {
        let a = application2(2, mu0, l1).unwrap();
        a.s.values().collect::<Vec<_>>()
    };
    assert_eq!(s(5, 5), [1]);
    assert_eq!(s(5, 4), [2]);
    assert_eq!(s(6, 3), [2, 3, 4]);
    assert!(application2(2, 1, 2).is_err());
    assert!(application2(2, 4, 3).unwrap().notes[1].contains("equal to -1"));
    assert!(application2(3, 4, 3).unwrap().notes[1].contains("equal to 1"));
}

#[test]
fn trace_validation() {
    for d in 2..=9 {
        let s = SingularSetup {
            d0: Some(d),
            ..SingularSetup::new(2, (d - 1) * (d - 1))
        };
        assert!(acampo_validate(&s).unwrap().is_empty());
    }
    let s = SingularSetup {
        components: vec![ComponentData {
            char_h: Some(cp(&[(1, 2)])),
            ..ComponentData::new(1, 2)
        }],
        ..SingularSetup::new(2, 0)
    };
    let v = acampo_validate(&s).unwrap();
    assert_eq!(v.len(), 1);
    assert_eq!((v[0].trace, v[0].expected), (2, 1));
    assert!(acampo_validate(&SingularSetup::new(2, 0))
        .unwrap()
        .is_empty());
}

#[test]
fn validation_rejects_mismatches() {
    let mut s = xyz_setup();
    s.components[0].char_h = Some(cp(&[(2, 1)]));
    assert!(matches!(s.validate(), Err(Error::Inconsistent(_))));
    let mut s = xyz_setup();
    s.components[0].mu = 2;
    assert!(s.validate().is_err());
    let mut s = xyz_setup();
    s.char_h0 = Some(cp(&[(1, 4)]));
    assert!(s.validate().is_err());
    let mut s = xyz_setup();
    s.components[0].tau = Some(IntMatrix::identity(2).unwrap());
    assert!(s.validate().is_err());
    let mut s = xyz_setup();
    s.components[0].tau = Some(IntMatrix::identity(1).unwrap());
    s.components[0].fixed_rank = Some(0);
    assert!(s.validate().is_err());
    let mut s = xyz_setup();
    s.lambda0 = Some(2);
    s.omega = Some(2);
    assert!(s.validate().is_err());
}

#[test]
fn xyz_report() {
    let r = full_report(&xyz_setup(), None).unwrap();
    assert_eq!(r.lambda1, 3);
    assert_eq!(r.divisor_bound, Some(cp(&[(1, 2)])));
    assert_eq!(r.rank_bound, 3);
    assert_eq!(r.application1.verdict, App1Verdict::NotApplicable);
    assert!(r.trace_violations.is_empty());
}

#[test]
fn empty_components_report() {
    let s = SingularSetup {
        d0: Some(3),
        ..SingularSetup::new(2, 4)
    };
    let r = full_report(&s, None).unwrap();
    assert_eq!(r.divisor_bound, Some(CycloProduct::one()));
    assert!(r.warnings.iter().any(|w| w == NO_COMPONENTS_WARNING));
}

fn le(mu0: u64, lambda0: u64, lambda1: u64, omega: u64) -> LeInvariants {
    use crate::local::Colength::Finite;
    LeInvariants {
        mu0: Finite(mu0),
        lambda0: Finite(lambda0),
        lambda1: Finite(lambda1),
        omega: Finite(omega),
        polar_multiplicity: Finite(mu0 - lambda1),
        genericity_ok: true,
        balanced: true,
        warnings: Vec::new(),
    }
}

#[test]
fn reports_with_le_numbers() {
    let r = full_report(&xyz_setup(), Some(&le(4, 2, 3, 3))).unwrap();
    assert_eq!((r.lambda0, r.omega), (Some(2), Some(3)));
    let mut bad = xyz_setup();
    bad.components.pop();
    assert!(matches!(
        full_report(&bad, Some(&le(4, 2, 3, 3))),
        Err(Error::Inconsistent(_))
    ));
    // components not supplied: bound unknown
    let node = SingularSetup {
        d0: Some(2),
        ..SingularSetup::new(2, 1)
    };
    let r = full_report(&node, Some(&le(1, 0, 1, 0))).unwrap();
    assert_eq!(r.application1.verdict, App1Verdict::NonSplitting);
    assert_eq!(r.divisor_bound, None);
    assert_eq!(r.rank_bound, 1);
    let mut with_component = node.clone();
    with_component.components = vec![ComponentData::homogeneous(1, 1, 2)];
    let r = full_report(&with_component, Some(&le(1, 0, 1, 0))).unwrap();
    assert_eq!(r.divisor_bound, Some(cp(&[(1, 1)])));
}

#[test]
fn steep_components_lower_the_rank() {
    let s = SingularSetup {
        components: vec![ComponentData::new(2, 1)],
        ..SingularSetup::new(2, 3)
    };
    let r = full_report(&s, None).unwrap();
    assert!(r
        .findings
        .iter()
        .any(|f| f.starts_with("rank H^(n-1)(F) < lambda1")));
}

#[test]
fn torsion_is_reported_not_used() {
    let mut s = xyz_setup();
    s.components[1].tau = Some(IntMatrix::from_i64(1, 1, &[-1]).unwrap());
    assert_eq!(
        s.components[1].kernel_torsion().unwrap(),
        Some(vec![BigInt::from(2)])
    );
    assert_eq!(s.components[0].kernel_torsion().unwrap(), None);
    let r = full_report(&s, None).unwrap();
    assert_eq!(r.rank_bound, 3);
    assert!(r
        .warnings
        .iter()
        .any(|w| w
            == "components[1]: coker(id - tau^k) has torsion Z/2; the rank bound does not use it"));

    // tau = identity has no torsion: id - tau is zero
    s.components[1].tau = Some(IntMatrix::identity(1).unwrap());
    assert_eq!(s.components[1].kernel_torsion().unwrap(), None);
}
