//! Every route to the Schur coefficients of s̄_λ against direct substitution.

use num_bigint::BigInt;
use plethyx::chern::{
    coeff_alternating, coeff_column, coeff_column_jacobi_trudi, coeff_single_row, coeff_two_rows,
    coeff_two_rows_monomial, column_fillings, expand_column_case, expand_row_case, is_positive_of_degree,
    sbar_alternating, sbar_direct, AltForm, ColumnVariant,
};
use plethyx::paths::{count_sequences, lgv_determinant, nonintersecting_tuples, GraphVariant, PathGraph};
use plethyx::shapes::{partitions_of, partitions_up_to};
use plethyx::tableaux::g_pairs;
use plethyx::{Partition, SkewShape};

#[test]
fn alternating_matches_substitution() {
    for lam in partitions_up_to(5) {
        for n in lam.len().max(1)..=6 {
            let direct = sbar_direct(&lam, n);
            assert_eq!(sbar_alternating(&lam, n), direct, "lam={lam} n={n}");
            assert!(is_positive_of_degree(&direct, lam.size()), "lam={lam} n={n}");
        }
    }
}

#[test]
fn hook_content_form_matches_skew_form() {
    for lam in partitions_up_to(4) {
        for n in lam.len().max(1)..=5 {
            for mu in partitions_of(lam.size(), n) {
                assert_eq!(
                    coeff_alternating(&lam, &mu, n, AltForm::HookContent),
                    coeff_alternating(&lam, &mu, n, AltForm::Skew),
                    "lam={lam} mu={mu} n={n}"
                );
            }
        }
    }
}

#[test]
fn column_case_counts_parity_tableaux() {
    for n in 1..=6 {
        for k in 1..=n {
            assert_eq!(expand_column_case(k, n).unwrap(), sbar_direct(&Partition::column(k), n), "k={k} n={n}");
        }
    }
}

#[test]
fn row_case_counts_g_pairs() {
    for n in 1..=6 {
        for k in 1..=5 {
            let row = Partition::row(k);
            let expansion = expand_row_case(k, n).unwrap();
            assert_eq!(expansion, sbar_direct(&row, n), "k={k} n={n}");
            for mu in partitions_of(k, n) {
                let pairs = g_pairs(&SkewShape::straight(&row), &SkewShape::straight(&mu), n as u32).unwrap().count();
                assert_eq!(BigInt::from(pairs), expansion.coeff(&mu), "k={k} mu={mu} n={n}");
            }
        }
    }
}

#[test]
fn one_and_two_row_coefficients() {
    for lam in partitions_up_to(5) {
        for n in 1..=5 {
            let direct = sbar_direct(&lam, n);
            let size = lam.size();
            assert_eq!(coeff_single_row(&lam, n).unwrap(), direct.coeff(&Partition::row(size)), "lam={lam} n={n}");
            for b in 0..=size / 2 {
                let a = size - b;
                let mu = Partition::new(vec![a, b]).unwrap();
                let want = direct.coeff(&mu);
                assert_eq!(coeff_two_rows(&lam, a, b, n).unwrap(), want, "lam={lam} ({a},{b}) n={n}");
                if n >= 2 {
                    assert_eq!(coeff_two_rows_monomial(&lam, a, b, n).unwrap(), want, "lam={lam} ({a},{b}) n={n}");
                }
            }
        }
    }
}

#[test]
fn column_multiplicity_routes_agree() {
    for lam in partitions_up_to(4).into_iter().filter(|l| !l.is_empty()) {
        for n in 1usize..=5 {
            let lo = lam.len();
            let hi = n.saturating_sub(lam.part(0));
            if lo > hi {
                continue;
            }
            let want = sbar_direct(&lam, n).coeff(&Partition::column(lam.size()));
            assert_eq!(coeff_column_jacobi_trudi(&lam, n), want, "jacobi-trudi lam={lam} n={n}");
            for p in lo..=hi {
                let fillings = column_fillings(&lam, n, p, ColumnVariant::Corrected).unwrap();
                assert_eq!(BigInt::from(fillings.len()), want, "fillings lam={lam} n={n} p={p}");
                assert_eq!(lgv_determinant(&lam, p, n, GraphVariant::Split).unwrap(), want, "lgv lam={lam} n={n} p={p}");
                let tuples = nonintersecting_tuples(&lam, p, n).unwrap();
                let images: Vec<_> = tuples.iter().map(|t| t.to_filling()).collect();
                assert_eq!(images, fillings, "tuple images lam={lam} n={n} p={p}");
                for t in &tuples {
                    assert!(t.heights_noncrossing(), "height criterion lam={lam} n={n} p={p}");
                }
            }
        }
    }
}

#[test]
fn split_graph_counts_sequences() {
    for n in 1..=7 {
        let g = PathGraph::new(n, GraphVariant::Split);
        for p in 1..=n {
            for k in 0..=n - p {
                assert_eq!(g.count_paths(p, p + k), count_sequences(p, k, n), "p={p} k={k} n={n}");
            }
        }
    }
}

#[test]
fn printed_variant_exhibits() {
    let lam = Partition::new(vec![1, 1]).unwrap();
    assert_eq!(coeff_column(&lam, 3, 2, ColumnVariant::Printed).unwrap(), BigInt::from(1));
    assert_eq!(coeff_column(&lam, 3, 2, ColumnVariant::Corrected).unwrap(), BigInt::from(2));
    assert_eq!(PathGraph::new(3, GraphVariant::Printed).count_paths(1, 3), BigInt::from(3));
    assert_eq!(PathGraph::new(3, GraphVariant::Split).count_paths(1, 3), BigInt::from(2));
}
