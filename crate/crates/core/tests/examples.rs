use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::json;

use superchar::characters::spo_character;
use superchar::symfunc::{Alphabet, Monomial};
use superchar::tensor::{super_tensor_coeffs, verify_stability};
use superchar::verify::{compare_series, identity_sides, verify_identity, Status};
use superchar::{IdentityId, Partition, SuperKind};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn trivial_spo_character_in_one_one() {
    let c = spo_character(&p(&[]), 1, 1, 1, 4).unwrap();
    assert_eq!(c.series.to_string(), "1 + y1*z1 + y1^2 + y1^3*z1 + y1^4");
    assert_eq!(c.prefactor.to_json(), json!({"y": "1/2", "z": "-1/2"}));
}

#[test]
fn glgl_rhs_is_geometric() {
    // d = m = n = 1: Σ_r x^r (y^r + y^{r-1} z)
    let (lhs, rhs) = identity_sides(IdentityId::Glgl, 1, 1, 1, 3).unwrap();
    assert_eq!(lhs, rhs);
    let alph = Alphabet::new(1, 1, 1, false);
    for r in 1..=3 {
        let y = Monomial::new(&alph, &[r], &[r], &[0], 0).unwrap();
        let yz = Monomial::new(&alph, &[r], &[r - 1], &[1], 0).unwrap();
        assert_eq!(rhs.coeff(&y), BigInt::from(1));
        assert_eq!(rhs.coeff(&yz), BigInt::from(1));
    }
    assert_eq!(rhs.len(), 7);
}

#[test]
fn perturbed_side_is_caught() {
    let (lhs, mut rhs) = identity_sides(IdentityId::OSp, 1, 1, 0, 6).unwrap();
    let alph = *rhs.alphabet();
    let y2 = Monomial::new(&alph, &[], &[2], &[], 0).unwrap();
    rhs.add_term(y2, BigInt::from(1));
    let rep = compare_series("o-sp", json!({}), &lhs, &rhs);
    assert_eq!(rep.status, Status::Mismatch);
    assert_eq!(rep.first_mismatch.unwrap().monomial, "y1^2");
}

#[test]
fn odd_orthogonal_in_one_variable() {
    let rep = verify_identity(IdentityId::OSp, 1, 1, 0, 6).unwrap();
    assert!(rep.passed());
    let (lhs, _) = identity_sides(IdentityId::OSp, 1, 1, 0, 6).unwrap();
    // 1/(1 - eps y)
    assert_eq!(lhs.to_string(), "1 + eps*y1 + y1^2 + eps*y1^3 + y1^4 + eps*y1^5 + y1^6");
}

#[test]
fn tensor_with_trivial() {
    for kind in [SuperKind::Spo, SuperKind::Osp] {
        let t = super_tensor_coeffs(&p(&[1]), &p(&[]), 2, 2, 1, 1, kind, None).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(p(&[1]), BigInt::from(1))]));
    }
    let t = super_tensor_coeffs(&p(&[]), &p(&[]), 1, 1, 1, 1, SuperKind::Spo, None).unwrap();
    assert_eq!(t.entries, BTreeMap::from([(p(&[]), BigInt::from(1))]));
}

#[test]
fn osp_square_of_the_vector_module() {
    // hook (1|0) keeps one-row shapes only
    let t = super_tensor_coeffs(&p(&[1]), &p(&[1]), 2, 2, 1, 0, SuperKind::Osp, Some(2)).unwrap();
    assert!(t.entries.keys().all(|l| l.len() <= 1));
    assert_eq!(t.get(&p(&[2])), BigInt::from(1));
    assert_eq!(t.get(&p(&[1, 1])), BigInt::from(0));
}

#[test]
fn stability_examples() {
    assert!(verify_stability(&p(&[1]), &p(&[1]), 1, 1, SuperKind::Spo, 1).unwrap().passed());
    assert!(verify_stability(&p(&[2]), &p(&[1]), 3, 1, SuperKind::Spo, 2).unwrap().passed());
    assert!(verify_stability(&p(&[]), &p(&[]), 2, 2, SuperKind::Osp, 1).unwrap().passed());
}
