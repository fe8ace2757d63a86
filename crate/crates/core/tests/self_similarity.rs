use coxeter_restrict::arrangement::find_isomorphism;
use coxeter_restrict::roots::RootSystem;

/// Restricting `A(A_n)` or `A(B_n)` to any of its hyperplanes gives the
/// arrangement of the same type and rank one less.
fn restrictions_match(family: char, max: usize) {
    for n in 2..=max {
        let a = RootSystem::from_label(&format!("{family}{n}")).unwrap().coxeter_arrangement();
        let smaller = RootSystem::from_label(&format!("{family}{}", n - 1)).unwrap().coxeter_arrangement();
        for i in 0..a.len() {
            let r = a.restrict(&a.flat_of(&[i])).unwrap();
            let iso = find_isomorphism(&r, &smaller);
            assert!(iso.is_some(), "{family}{n}, hyperplane {i}");
        }
    }
}

#[test]
fn type_a() {
    restrictions_match('A', 5);
}

#[test]
fn type_b() {
    restrictions_match('B', 4);
}

#[test]
fn type_d_is_not_self_similar() {
    // D4 restricted to a hyperplane has 7 hyperplanes, between D3 = A3 (6)
    // and B3 (9).
    let a = RootSystem::from_label("D4").unwrap().coxeter_arrangement();
    let r = a.restrict(&a.flat_of(&[0])).unwrap();
    assert_eq!(r.len(), 7);
    assert!(find_isomorphism(&r, &RootSystem::from_label("A3").unwrap().coxeter_arrangement()).is_none());
}
