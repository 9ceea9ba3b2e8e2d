//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Every comparison is exact equality of exact values; there are no
//! tolerances anywhere.

use etaforms::algnum::{FieldElement, NumberField};
use etaforms::bqf::{self, Form};
use etaforms::formulas::{self, Level};
use etaforms::qseries::{eta_quotient, phi_neg, psi, psi_neg, EtaQuotientSpec, QSeries};
use etaforms::verify;

fn monomial(e: usize, order: usize) -> QSeries {
    QSeries::monomial(
        NumberField::Rational,
        FieldElement::one(NumberField::Rational),
        e,
        order,
    )
}

fn coeff_int(s: &QSeries, n: usize) -> i64 {
    i64::try_from(s.coeff(n).to_integer().expect("integral coefficient")).unwrap()
}

#[test]
fn criterion_01_theorem_grids() {
    let order = 400;
    let mut count = 0;
    for m in 1..=12 {
        for s in 1..=12 {
            if 24 * s > m {
                let r = verify::verify_thm1(m, s, order);
                assert!(r.passed(), "{}", r.line());
                count += 1;
            }
        }
    }
    for m in 1..=10 {
        for s in 1..=10 {
            if 8 * s > m {
                let r = verify::verify_thm2(m, s, order);
                assert!(r.passed(), "{}", r.line());
                count += 1;
            }
        }
    }
    for m in 1..=10 {
        for k in 1..=10 {
            let r = verify::verify_thm3(m, k, order);
            assert!(r.passed(), "{}", r.line());
            count += 1;
        }
    }
    for m in 1..=8 {
        for s in 1..=8 {
            let r = verify::verify_thm4(m, s, order);
            assert!(r.passed(), "{}", r.line());
            count += 1;
        }
    }
    println!("criterion 01 theorem-grids ({count} instances, order {order}, exact): PASS");
}

#[test]
fn criterion_02_level_47_coefficients() {
    let bound = 5000;
    let direct = eta_quotient(&EtaQuotientSpec::new(2, &[(1, 1), (47, 1)]), bound);
    for n in 1..=bound {
        assert_eq!(
            formulas::level47::a(n as u64),
            coeff_int(&direct, n),
            "a47({n}) vs direct expansion"
        );
    }
    assert_eq!(formulas::level47::a(2), 1);
    assert_eq!(formulas::level47::a(6), 0);
    assert_eq!(formulas::level47::a(49), -1);
    // the completions themselves also match their formula route, for every
    // level and every n in range
    for level in formulas::ALL_LEVELS {
        for (i, series) in formulas::completions(level, bound).iter().enumerate() {
            for n in 1..=bound as u64 {
                assert_eq!(
                    &formulas::completion_coefficient(level, i, n),
                    series.coeff(n as usize),
                    "completion {i} of level {} at {n}",
                    level.number()
                );
            }
        }
    }
    println!("criterion 02 level-47 a(n) = [q^n] q^2 E(q) E(q^47) for n <= {bound}, and formula = completion series on all levels, exact: PASS");
}

#[test]
fn criterion_03_level_71_coefficients() {
    let bound = 5000;
    let direct = eta_quotient(&EtaQuotientSpec::new(3, &[(1, 1), (71, 1)]), bound);
    for n in 1..=bound {
        assert_eq!(
            formulas::level71::a(n as u64),
            coeff_int(&direct, n),
            "a71({n}) vs direct expansion"
        );
    }
    // a(p^nu) table, smallest prime per class column, two full periods
    let expected: [[i64; 4]; 7] = [
        [0, 0, 0, 0],
        [0, 0, -1, 1],
        [0, -1, 1, 0],
        [0, 1, -1, 0],
        [0, 0, 1, -1],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
    ];
    let smallest = formulas::smallest_primes_per_pair(Level::L71);
    for (col, &p) in smallest.iter().enumerate() {
        for nu in 1..=14u32 {
            assert_eq!(
                formulas::level71::a_factored(&[(p, nu)]),
                expected[(nu % 7) as usize][col],
                "a({p}^{nu})"
            );
        }
    }
    println!(
        "criterion 03 level-71 a(n) for n <= {bound} and a(p^nu) table at p = {smallest:?}, exact: PASS"
    );
}

#[test]
fn criterion_04_extractors_match_expansions() {
    let bound = 5000;
    // level 135: q E(q^9) E(q^15) and q^2 E(q^3) E(q^45)
    let first = eta_quotient(&EtaQuotientSpec::new(1, &[(9, 1), (15, 1)]), bound);
    let second = eta_quotient(&EtaQuotientSpec::new(2, &[(3, 1), (45, 1)]), bound);
    for n in 1..=bound {
        assert_eq!(
            formulas::level135::coeff_q_e9_e15(n as u64),
            coeff_int(&first, n),
            "135/1 at {n}"
        );
        assert_eq!(
            formulas::level135::coeff_q2_e3_e45(n as u64),
            coeff_int(&second, n),
            "135/2 at {n}"
        );
        assert_eq!(
            formulas::level135::coeff_q_e9_e15_signed(n as u64),
            coeff_int(&first, n)
        );
        assert_eq!(
            formulas::level135::coeff_q2_e3_e45_signed(n as u64),
            coeff_int(&second, n)
        );
    }
    // level 648: the two eta-quotient cusp forms g and h
    let g = eta_quotient(
        &EtaQuotientSpec::new(
            1,
            &[
                (6, 2),
                (9, 1),
                (72, 1),
                (108, 2),
                (3, -1),
                (12, -1),
                (54, -1),
                (216, -1),
            ],
        ),
        bound,
    );
    let h = eta_quotient(
        &EtaQuotientSpec::new(
            2,
            &[
                (9, 1),
                (12, 2),
                (54, 2),
                (72, 1),
                (6, -1),
                (24, -1),
                (27, -1),
                (108, -1),
            ],
        ),
        bound,
    );
    for n in 1..=bound {
        assert_eq!(
            formulas::level648::coeff_g(n as u64),
            coeff_int(&g, n),
            "648 g at {n}"
        );
        assert_eq!(
            formulas::level648::coeff_h(n as u64),
            coeff_int(&h, n),
            "648 h at {n}"
        );
    }
    // level 1024: q psi(q^8) phi(-q^64) and q^5 psi(-q^8) psi(-q^32);
    // the completion coefficients live in Q(sqrt 2) exactly
    let pp = &monomial(1, bound) * &(&psi(8, bound) * &phi_neg(64, bound));
    let ppn = &monomial(5, bound) * &(&psi_neg(8, bound) * &psi_neg(32, bound));
    let sqrt2 = FieldElement::sqrt2();
    for n in 1..=bound {
        assert_eq!(
            formulas::level1024::coeff_psi_phi(n as u64),
            coeff_int(&pp, n),
            "1024/1 at {n}"
        );
        assert_eq!(
            formulas::level1024::coeff_psi_psi(n as u64),
            coeff_int(&ppn, n),
            "1024/2 at {n}"
        );
        // [q^n]A = [q^n](first) + sqrt2 [q^n](second), exactly in Q(sqrt2)
        let recombined = &pp.coeff(n).promote(NumberField::Sqrt2)
            + &(&sqrt2 * &ppn.coeff(n).promote(NumberField::Sqrt2));
        assert_eq!(
            formulas::level1024::a(n as u64),
            recombined,
            "1024 completion at {n}"
        );
    }
    // level 1872: q^7 E(q^12) E(q^156), plus the two-route discrepancy
    // flag, which must report no n at all
    let eta = eta_quotient(&EtaQuotientSpec::new(7, &[(12, 1), (156, 1)]), bound);
    for n in 1..=bound {
        assert_eq!(
            formulas::level1872::coeff_eta(n as u64),
            coeff_int(&eta, n),
            "1872 at {n}"
        );
    }
    let flagged = formulas::level1872::discrepancies(bound as u64);
    assert!(
        flagged.is_empty(),
        "level-1872 coefficient routes disagree at n = {flagged:?}"
    );
    println!(
        "criterion 04 extractors = direct expansions (135, 648, 1024, 1872) for n <= {bound}, \
         exact; 1872 t1/t2 discrepancy list empty: PASS"
    );
}

#[test]
fn criterion_05_eigenform_sweeps() {
    let (bound, order) = (100, 2000);
    let mut count = 0;
    for level in formulas::ALL_LEVELS {
        for report in verify::verify_completion_eigen(level, bound, order).unwrap() {
            assert!(report.passed(), "{}", report.line());
            count += 1;
        }
    }
    // the tabulated T_p actions themselves, same bound and order
    for level in [Level::L47, Level::L71, Level::L135, Level::L648] {
        for report in verify::verify_hecke_tables(level, bound, order) {
            assert!(report.passed(), "{}", report.line());
            count += 1;
        }
    }
    // the tabulated ramified and conductor cases, by name
    use formulas::{classify, eigenvalue};
    let ramified_cases: [(Level, u64, i64); 7] = [
        (Level::L47, 47, 1),
        (Level::L71, 71, 1),
        (Level::L135, 5, -1),
        (Level::L135, 3, 0),
        (Level::L648, 2, 1),
        (Level::L1024, 2, 0),
        (Level::L1872, 13, 1),
    ];
    for (level, p, expected) in ramified_cases {
        let verdict = classify(level, p).verdict;
        assert_eq!(
            eigenvalue(level, 0, verdict),
            FieldElement::from_int(level.field(), expected),
            "T_{p} eigenvalue at level {}",
            level.number()
        );
    }
    println!("criterion 05 eigenform sweeps, all completions, p <= {bound} at order {order}, exact ({count} checks): PASS");
}

#[test]
fn criterion_06_gordon_hughes_negative_control() {
    let reports = verify::verify_gordon_hughes(2000).unwrap();
    assert_eq!(reports.len(), 5);
    for report in &reports {
        assert!(report.passed(), "{}", report.line());
    }
    println!("criterion 06 gordon-hughes control (no eigenform at 7, 11, 17; theta simplification holds to 2000): PASS");
}

#[test]
fn criterion_07_classification_oracle_agreement() {
    let bound = 2000;
    let primes: Vec<u64> = (2..bound)
        .filter(|&p| etaforms::ntheory::is_prime(p))
        .collect();
    for level in formulas::ALL_LEVELS {
        for &p in &primes {
            let verdict = formulas::classify_uncached(level, p);
            let pairs = level.class_pairs();
            let represented: Vec<usize> = (0..pairs.len())
                .filter(|&i| pairs[i].represents(p))
                .collect();
            match verdict {
                formulas::Verdict::ClassPair(i) | formulas::Verdict::Ramified(i) => {
                    assert_eq!(represented, vec![i], "level {} p={p}", level.number());
                }
                formulas::Verdict::Inert | formulas::Verdict::Conductor => {
                    assert!(represented.is_empty(), "level {} p={p}", level.number());
                }
            }
        }
    }
    // the remainder criteria themselves, for every applicable prime
    let mut exercised = 0;
    for level in [Level::L47, Level::L71] {
        for &p in &primes {
            if etaforms::ntheory::kronecker(level.discriminant(), p) != 1
                || (2 * level.number()) % p == 0
            {
                continue;
            }
            match formulas::remainder_criteria(level, p) {
                Some(formulas::Verdict::ClassPair(i)) => {
                    assert_eq!(
                        i,
                        formulas::representation_pair(level, p),
                        "criteria at p={p}"
                    );
                    exercised += 1;
                }
                other => panic!("criteria inapplicable at p={p}: {other:?}"),
            }
        }
    }
    println!(
        "criterion 07 classification matches representation oracle for p < {bound} on all six \
         discriminants; remainder criteria exercised on {exercised} primes: PASS"
    );
}

#[test]
fn criterion_08_class_group_tables() {
    // forms, genus partitions, and structures against the reference tables
    let f = Form::new;
    struct Expected {
        d: i64,
        structure: Vec<u64>,
        genera: Vec<(Vec<i32>, Vec<Form>)>,
    }
    let table = [
        Expected {
            d: -47,
            structure: vec![5],
            genera: vec![(
                vec![1],
                vec![
                    f(1, 1, 12),
                    f(2, -1, 6),
                    f(2, 1, 6),
                    f(3, -1, 4),
                    f(3, 1, 4),
                ],
            )],
        },
        Expected {
            d: -71,
            structure: vec![7],
            genera: vec![(
                vec![1],
                vec![
                    f(1, 1, 18),
                    f(2, -1, 9),
                    f(2, 1, 9),
                    f(3, -1, 6),
                    f(3, 1, 6),
                    f(4, -3, 5),
                    f(4, 3, 5),
                ],
            )],
        },
        Expected {
            d: -135,
            structure: vec![6],
            genera: vec![
                (vec![1, 1], vec![f(1, 1, 34), f(4, -3, 9), f(4, 3, 9)]),
                (vec![-1, -1], vec![f(2, -1, 17), f(2, 1, 17), f(5, 5, 8)]),
            ],
        },
        Expected {
            d: -648,
            structure: vec![6],
            genera: vec![
                (vec![1, 1], vec![f(1, 0, 162), f(9, -6, 19), f(9, 6, 19)]),
                (
                    vec![-1, 1],
                    vec![f(2, 0, 81), f(11, -10, 17), f(11, 10, 17)],
                ),
            ],
        },
        Expected {
            d: -1024,
            structure: vec![8],
            genera: vec![
                (
                    vec![1, 1],
                    vec![f(1, 0, 256), f(4, 4, 65), f(16, -8, 17), f(16, 8, 17)],
                ),
                (
                    vec![1, -1],
                    vec![f(5, -4, 52), f(5, 4, 52), f(13, -4, 20), f(13, 4, 20)],
                ),
            ],
        },
        Expected {
            d: -1872,
            structure: vec![4, 4],
            genera: vec![
                (
                    vec![1, 1, 1],
                    vec![f(1, 0, 468), f(4, 0, 117), f(9, 0, 52), f(13, 0, 36)],
                ),
                (
                    vec![1, -1, -1],
                    vec![f(7, -2, 67), f(7, 2, 67), f(19, -16, 28), f(19, 16, 28)],
                ),
                (
                    vec![-1, -1, -1],
                    vec![f(8, -4, 59), f(8, 4, 59), f(11, -8, 44), f(11, 8, 44)],
                ),
                (
                    vec![-1, 1, 1],
                    vec![f(9, -6, 53), f(9, 6, 53), f(17, -10, 29), f(17, 10, 29)],
                ),
            ],
        },
    ];
    for expected in &table {
        let group = bqf::class_group(expected.d).unwrap();
        assert_eq!(
            group.structure, expected.structure,
            "structure of {}",
            expected.d
        );
        let mut all: Vec<Form> = expected
            .genera
            .iter()
            .flat_map(|(_, forms)| forms.iter().copied())
            .collect();
        all.sort();
        assert_eq!(group.classes, all, "class list of {}", expected.d);
        let chars = bqf::character_system(expected.d);
        for (vector, forms) in &expected.genera {
            for form in forms {
                assert_eq!(
                    &bqf::genus_characters(form, &chars).unwrap(),
                    vector,
                    "characters of {form} for {}",
                    expected.d
                );
            }
        }
        // group axioms, exhaustively
        let classes = &group.classes;
        let id = bqf::principal_form(expected.d);
        for x in classes {
            assert_eq!(bqf::compose(x, &id).unwrap(), *x);
            assert_eq!(bqf::compose(x, &x.conjugate()).unwrap(), id.reduce().0);
            for y in classes {
                let xy = bqf::compose(x, y).unwrap();
                assert!(classes.contains(&xy), "closure");
                assert_eq!(xy, bqf::compose(y, x).unwrap(), "commutativity");
                for z in classes {
                    let left = bqf::compose(&xy, z).unwrap();
                    let right = bqf::compose(x, &bqf::compose(y, z).unwrap()).unwrap();
                    assert_eq!(left, right, "associativity at {x}, {y}, {z}");
                }
            }
        }
    }
    println!("criterion 08 class group tables (forms, genera, structures C5 C7 C6 C6 C8 C4xC4) and group axioms: PASS");
}

#[test]
fn criterion_09_multiplicativity() {
    let bound = 5000;
    for level in formulas::ALL_LEVELS {
        for report in verify::verify_multiplicativity(level, bound) {
            assert!(report.passed(), "{}", report.line());
        }
    }
    println!(
        "criterion 09 [q^mn] = [q^m][q^n] for coprime mn <= {bound}, all completions, exact: PASS"
    );
}

#[test]
fn criterion_10_builder_identities() {
    let order = 400;
    let reports = verify::verify_builder_identities(order);
    assert!(reports.len() >= 14);
    for report in &reports {
        assert!(report.passed(), "{}", report.line());
    }
    println!(
        "criterion 10 builder identities ({} identities at order {order}, exact): PASS",
        reports.len()
    );
}
