use coxeter_restrict::arrangement::LatticeGuard;
use coxeter_restrict::chambers::{enumerate_chambers, ChamberGuard};
use coxeter_restrict::poly::{f_product, factors_as};
use coxeter_restrict::roots::{CoxeterType, GroupGuard};
use coxeter_restrict::theorem::{
    antipodal_representatives, candidate_bases_via_restricted_roots, first_factoring_base, restriction_by_name,
    theorem_table, Corpus, RowOutcome, SearchOptions,
};
use num_bigint::BigInt;

#[test]
fn builtin_corpus_verdicts_and_invariants() {
    let opts = SearchOptions {
        reduced_first: true,
        ..SearchOptions::default()
    };
    let rows = theorem_table(&Corpus::builtin(), &opts);
    let mut done = 0;
    for row in &rows {
        match &row.outcome {
            RowOutcome::Done(r) => {
                done += 1;
                assert!(row.matches(), "{}: got {}, expected {}", row.name, r.verdict(), row.expected);
                let sum: u32 = r.exponents.iter().sum();
                assert_eq!(sum as usize, r.hyperplanes, "{}", row.name);
                let product: BigInt = r.exponents.iter().map(|&e| BigInt::from(e + 1)).product();
                assert_eq!(product, BigInt::from(r.chambers), "{}", row.name);
                assert_eq!(r.exponents.len(), r.rank, "{}", row.name);
                match &r.witness_zeta {
                    Some(z) => assert_eq!(z, &f_product(&r.exponents)),
                    None => {
                        assert_eq!(r.zetas.values().sum::<usize>() * 2, r.chambers);
                        assert!(r.zetas.keys().all(|z| !factors_as(z, &r.exponents)));
                    }
                }
            }
            RowOutcome::Skipped(why) => assert_eq!(row.name, "E8/A1", "{why}"),
            RowOutcome::Failed { message, .. } => panic!("{}: {message}", row.name),
        }
    }
    assert_eq!(done + 1, rows.len());
}

/// On small cases the restricted-root candidates decide exactly as the
/// exhaustive search does.
#[test]
fn reduced_search_agrees_with_exhaustive() {
    let small = [CoxeterType::A(4), CoxeterType::D(4), CoxeterType::E(6), CoxeterType::E(7)];
    let mut checked = 0;
    for p in Corpus::builtin().presets() {
        if p.skip.is_some() || !small.contains(&p.group) {
            continue;
        }
        let r = restriction_by_name(p).unwrap();
        if r.restricted.rank() > 3 {
            continue;
        }
        let set = enumerate_chambers(&r.restricted, ChamberGuard::default()).unwrap();
        let exps = r.restricted.exponents(LatticeGuard::default()).unwrap().values;
        let cands = candidate_bases_via_restricted_roots(&r, &set, GroupGuard::default()).unwrap();
        assert!(!cands.is_empty(), "{}", p.name);
        let reduced = first_factoring_base(&set, &exps, &cands).is_some();
        let full = first_factoring_base(&set, &exps, &antipodal_representatives(&set)).is_some();
        assert_eq!(reduced, full, "{}", p.name);
        checked += 1;
    }
    assert!(checked >= 6, "only {checked} presets checked");
}
