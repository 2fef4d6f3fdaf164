use num_bigint::BigInt;
use plethyx::chern::{expand_column_case, expand_row_case};
use plethyx::homology::{
    c_nk, chain_dims, character_direct, character_hopf, check_vanishing, frobenius_ch, homology_dims, r_nk,
    ChainComplex, ComplexKind, CycleType, RankCertificate, VanishingStatus,
};
use plethyx::scalar::{binomial, falling};

const GUARD: usize = 1_000_000;

#[test]
fn column_complex_matches_column_case() {
    for k in 1..=4 {
        for n in k..=k + 2 {
            let c = ChainComplex::standard(ComplexKind::Column, k, n - k + 1, GUARD).unwrap();
            for (i, &d) in c.dims().iter().enumerate() {
                let want = binomial((n - k + i) as i64, i as i64) * falling(k, i);
                assert_eq!(BigInt::from(d), want, "dim C_{i} k={k} n={n}");
            }
            let h = homology_dims(&c).unwrap();
            assert!(h.vanishes_below_top(), "k={k} n={n}: {:?}", h.homology);
            assert_eq!(c.euler_characteristic(), if k % 2 == 0 { h.top() as i64 } else { -(h.top() as i64) });
            let ch = frobenius_ch(&c, &h).unwrap();
            assert_eq!(ch, c_nk(n, k).unwrap(), "k={k} n={n}");
            assert_eq!(ch.coeffs(), expand_column_case(k, n).unwrap().coeffs(), "k={k} n={n}");
            let identity = CycleType::new(plethyx::Partition::column(k));
            assert_eq!(character_hopf(&c, &identity).unwrap(), BigInt::from(h.top()));
        }
    }
}

#[test]
fn hopf_trace_matches_kernel_trace() {
    for kind in [ComplexKind::Column, ComplexKind::Row] {
        for k in 1..=3 {
            for m in 1..=2 * k + 1 {
                let c = ChainComplex::standard(kind, k, m, GUARD).unwrap();
                if !homology_dims(&c).unwrap().vanishes_below_top() {
                    continue;
                }
                for rho in CycleType::all(k) {
                    assert_eq!(
                        character_hopf(&c, &rho).unwrap(),
                        character_direct(&c, &rho).unwrap(),
                        "{kind:?} k={k} m={m} rho={}",
                        rho.rho
                    );
                }
            }
        }
    }
}

#[test]
fn row_complex_evidence() {
    for a in 1..=4usize {
        for m in (2 * a - 1)..=(2 * a + 1) {
            let report = check_vanishing(ComplexKind::Row, a, m, GUARD, true).unwrap();
            assert_eq!(report.status, VanishingStatus::Vanishes, "A={a} M={m}: {:?}", report.homology);
            assert_eq!(report.certificate, RankCertificate::ModularSandwich);
            let n = m + 1 - a;
            let ch = report.ch_top.unwrap();
            assert_eq!(ch, r_nk(n, a).unwrap(), "A={a} M={m}");
            assert_eq!(ch.coeffs(), expand_row_case(a, n).unwrap().coeffs(), "A={a} M={m}");
        }
    }
}

#[test]
fn euler_characteristic_matches_dims() {
    for kind in [ComplexKind::Column, ComplexKind::Row] {
        for a in 1..=3 {
            for m in 1..=4 {
                let c = ChainComplex::standard(kind, a, m, GUARD).unwrap();
                let h = homology_dims(&c).unwrap();
                let euler: i64 = h.homology.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
                assert_eq!(euler, c.euler_characteristic(), "{kind:?} A={a} M={m}");
                let predicted: Vec<usize> = chain_dims(kind, a, m).iter().map(|d| usize::try_from(d).unwrap()).collect();
                assert_eq!(predicted, c.dims());
            }
        }
    }
}

#[test]
fn small_row_complexes_below_range_are_reported_not_failed() {
    let report = check_vanishing(ComplexKind::Row, 2, 2, GUARD, true).unwrap();
    assert_eq!(report.conjecture_hypothesis, Some(false));
    assert_ne!(report.status, VanishingStatus::CounterexampleCandidate);
    assert_eq!(report.certificate, RankCertificate::Exact);
}
