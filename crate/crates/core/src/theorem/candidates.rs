use super::Restriction;
use crate::chambers::ChamberSet;
use crate::error::{Error, Result};
use crate::roots::GroupGuard;
use crate::scalar::{Scalar, Vector};

/// Base candidates for `A(W)^X` from the subsets `J` of simple roots of the
/// stabilizer's type.
///
/// For each such `J` the face of the dominant chamber fixed by `W_J`
/// contains the point `λ_J`. Some `W`-translate `wλ_J` lies in `X`; its
/// stabilizer is a conjugate of `W_J` containing `W_X`, hence equal to it,
/// so `wλ_J` is off every hyperplane of `A^X` and picks out a chamber there.
/// The result is sorted and deduplicated indices into `set`.
pub fn candidate_bases_via_restricted_roots(r: &Restriction, set: &ChamberSet, guard: GroupGuard) -> Result<Vec<usize>> {
    let rs = &r.root_system;
    rs.check_order(guard)?;
    let mut out = Vec::new();
    for j in rs.simple_subsets_of_type(&r.stabilizer) {
        let Some(y) = translate_into(r, &j, guard)? else {
            continue;
        };
        let coords = r.flat.coordinates(&y).expect("point lies in the flat");
        match set.locate(&r.restricted, &coords) {
            Some(i) => out.push(i),
            None => return Err(Error::BaseNotAChamber),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// A point `wλ_J` lying in `X`, if the orbit reaches it. Crystallographic
/// types walk the orbit in integral pairing coordinates.
fn translate_into(r: &Restriction, j: &[usize], guard: GroupGuard) -> Result<Option<Vector>> {
    let rs = &r.root_system;
    let n = rs.rank();
    let half_norms: Vec<Scalar> = rs
        .simple_roots()
        .iter()
        .map(|a| &rs.inner(a, a) / &Scalar::from_int(2))
        .collect();
    // <x, β> = Σ_k b_k c_k |α_k|²/2 for β = Σ_k b_k α_k.
    let equations: Option<Vec<Vec<i64>>> = r
        .stabilizer_simple
        .iter()
        .map(|b| {
            let w: Vec<Scalar> = rs.coefficients(b).iter().zip(&half_norms).map(|(x, h)| x * h).collect();
            Vector(w).clear_denominators().0.iter().map(Scalar::to_i64).collect()
        })
        .collect();
    let start: Vec<i64> = (0..n).map(|i| i64::from(!j.contains(&i))).collect();
    if let Some(eqs) = equations {
        let hit = |c: &[i64]| eqs.iter().all(|e| e.iter().zip(c).map(|(a, b)| a * b).sum::<i64>() == 0);
        if let Some(found) = rs.orbit_find_pairings(&start, guard, hit) {
            return Ok(found?.map(|c| {
                let t: Vec<Scalar> = c.iter().zip(&half_norms).map(|(&ci, h)| &Scalar::from_int(ci) * h).collect();
                rs.point_with_pairings(&t)
            }));
        }
    }
    let lambda = rs.parabolic_point(j);
    rs.orbit_find(&lambda, guard, |x| r.flat.contains_point(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chambers::{enumerate_chambers, ChamberGuard};
    use crate::roots::RootSystem;
    use crate::theorem::{first_factoring_base, antipodal_representatives, restrict_by_roots};
    use crate::arrangement::LatticeGuard;

    fn check(w: &str, simple: &[usize]) -> (usize, bool, bool) {
        let rs = RootSystem::from_label(w).unwrap();
        let roots: Vec<_> = simple.iter().map(|&i| rs.simple_roots()[i].clone()).collect();
        let r = restrict_by_roots(w, &rs, &roots).unwrap();
        let set = enumerate_chambers(&r.restricted, ChamberGuard::default()).unwrap();
        let exps = r.restricted.exponents(LatticeGuard::default()).unwrap().values;
        let cands = candidate_bases_via_restricted_roots(&r, &set, GroupGuard::default()).unwrap();
        let reduced = first_factoring_base(&set, &exps, &cands).is_some();
        let full = first_factoring_base(&set, &exps, &antipodal_representatives(&set)).is_some();
        (cands.len(), reduced, full)
    }

    #[test]
    fn a3_end_node() {
        let (n, reduced, full) = check("A3", &[0]);
        assert!(n >= 1 && n <= 3);
        assert_eq!(reduced, full);
    }

    #[test]
    fn a3_middle_node_and_d4_center() {
        let (_, reduced, full) = check("A3", &[1]);
        assert_eq!(reduced, full);
        let (_, reduced, full) = check("D4", &[1]);
        assert_eq!(reduced, full);
    }

    #[test]
    fn e8_is_refused() {
        let rs = RootSystem::from_label("E8").unwrap();
        let roots: Vec<_> = [0usize, 2, 4, 5, 6].iter().map(|&i| rs.simple_roots()[i].clone()).collect();
        let r = restrict_by_roots("E8/A2A3", &rs, &roots).unwrap();
        let set = enumerate_chambers(&r.restricted, ChamberGuard::default()).unwrap();
        assert!(matches!(
            candidate_bases_via_restricted_roots(&r, &set, GroupGuard::default()),
            Err(Error::GroupTooLarge(_))
        ));
    }
}
