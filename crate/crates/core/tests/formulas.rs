use cayrec_core::oracle::{count, Budget, Class, Model};
use cayrec_core::psi::{cay_count, end_count, psi_general, BranchSpec, RecurrentLabel, RecurrentSpec};
use cayrec_core::species::Series;
use cayrec_core::verify::verify;
use cayrec_core::BigInt;

#[test]
fn every_class_matches_enumeration() {
    let budget = Budget::default();
    for class in [Class::All, Class::Tree, Class::Forest, Class::Connected, Class::Derangement] {
        for model in [Model::Cayley, Model::Endofunctions] {
            let nmax = if model == Model::Cayley { 7 } else { 6 };
            for row in verify(model, class, nmax, &budget).unwrap() {
                assert!(row.matches(), "{model} {class} n={} i={} j={}", row.n, row.i, row.j);
            }
        }
    }
}

#[test]
fn cayley_class_itself_counts_cayley_maps() {
    let s = RecurrentSpec::new(RecurrentLabel::S, 7).unwrap();
    for n in 0..=7 {
        let o = count(n, Model::Endofunctions, &Class::Cayley.into(), &Budget::default()).unwrap();
        assert_eq!(cay_count(n, &s).unwrap(), BigInt::from(o), "n = {n}");
    }
}

// f^k = f forces every cycle length to divide k - 1, not k.
#[test]
fn periodic_maps_use_divisors_of_k_minus_one() {
    let n_max = 6;
    let one = BranchSpec::new(Series::one(n_max));
    for k in 2..=5 {
        let spec = RecurrentSpec::cycle_divisors(k - 1, n_max).unwrap();
        let diag = psi_general(&spec, &one, n_max).unwrap().diag();
        for n in 0..=n_max {
            let o = count(n, Model::Endofunctions, &Class::Idempotent(k).into(), &Budget::default()).unwrap();
            assert_eq!(diag.coeff(n), BigInt::from(o), "k = {k}, n = {n}");
        }
    }
    let wrong = psi_general(&RecurrentSpec::cycle_divisors(3, n_max).unwrap(), &one, n_max).unwrap().diag();
    let o = count(3, Model::Endofunctions, &Class::Idempotent(3).into(), &Budget::default()).unwrap();
    assert_ne!(wrong.coeff(3), BigInt::from(o));
}

#[test]
fn structures_beyond_the_standard_five() {
    for label in [RecurrentLabel::ESize(3), RecurrentLabel::SSize(3)] {
        let spec = RecurrentSpec::new(label.clone(), 8).unwrap();
        for n in 0..=8 {
            let e = end_count(n, &spec).unwrap();
            let c = cay_count(n, &spec).unwrap();
            assert!(c <= e, "{label} n = {n}");
        }
    }
}
