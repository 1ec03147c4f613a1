use super::*;
use crate::fusion::FusionData;

fn int_matrix(rows: &[[i64; 4]]) -> CycMatrix {
    CycMatrix::from_rows(rows.iter().map(|r| r.iter().map(|x| Cyclotomic::from_integer(*x)).collect()).collect())
}

/// Brute-force Verlinde for integer S with S_0d = 1: dual from S^2 = 4C.
fn oracle_fusion(s: &[[i64; 4]; 4]) -> Vec<Vec<Vec<u64>>> {
    let mut dual = [0usize; 4];
    for i in 0..4 {
        for j in 0..4 {
            let v: i64 = (0..4).map(|k| s[i][k] * s[k][j]).sum();
            if v == 4 {
                dual[i] = j;
            }
        }
    }
    let mut n = vec![vec![vec![0u64; 4]; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let sum: i64 = (0..4).map(|d| s[a][d] * s[b][d] * s[dual[c]][d] / s[0][d]).sum();
                assert_eq!(sum % 4, 0);
                n[a][b][c] = (sum / 4) as u64;
            }
        }
    }
    n
}

const TORIC_S: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];
const SEMION_S: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, -1, 1], [1, -1, 1, -1]];

#[test]
fn toric_code_matches_explicit_matrices() {
    let a = catalog("toric_code").unwrap();
    assert_eq!(a.rank(), 4);
    assert_eq!(*a.s_matrix(), int_matrix(&TORIC_S));
    let t: Vec<Cyclotomic> = [1, 1, 1, -1].iter().map(|x| Cyclotomic::from_integer(*x)).collect();
    assert_eq!(a.omegas(), &t[..]);
    assert_eq!(a.fs_exponent(), 2);
    assert_eq!(a.conductor(), 24);
    assert_eq!(a.gauss_sums(), (Cyclotomic::from_integer(2), Cyclotomic::from_integer(2)));
    assert_eq!(*a.dim(), Cyclotomic::from_integer(4));
    assert_eq!(a.fusion().table(), oracle_fusion(&TORIC_S));
    assert_eq!(a.fusion().table(), FusionData::abelian_group(&[2, 2]).table());
}

#[test]
fn double_semion_matches_explicit_matrices() {
    let a = catalog("double_semion").unwrap();
    assert_eq!(*a.s_matrix(), int_matrix(&SEMION_S));
    let i = Cyclotomic::root(4, 1);
    let t = [Cyclotomic::one(), Cyclotomic::one(), i.clone(), -&i];
    assert_eq!(a.omegas(), &t[..]);
    assert_eq!(a.fs_exponent(), 4);
    assert_eq!(a.conductor(), 48);
    assert_eq!(a.gauss_sums(), (Cyclotomic::from_integer(2), Cyclotomic::from_integer(2)));
    assert_eq!(a.fusion().table(), oracle_fusion(&SEMION_S));
    for x in 0..4 {
        assert_eq!(a.dual(x), x);
    }
}

#[test]
fn fibonacci_passes() {
    let a = catalog("fibonacci").unwrap();
    assert_eq!(a.fs_exponent(), 5);
    assert_eq!(a.fusion().fusion_matrix(1).unwrap(), vec![vec![0, 1], vec![1, 1]]);
    let phi = &(&Cyclotomic::one() + &Cyclotomic::root(5, 1)) + &Cyclotomic::root(5, 4);
    assert_eq!(a.dims()[1], phi);
    assert_eq!(*a.dim(), &Cyclotomic::from_integer(2) + &phi);
    let (p, q) = a.gauss_sums();
    assert_eq!(&p * &q, *a.dim());
    assert_eq!(q, p.conj());
    assert!(matches!(catalog("nope"), Err(ModularError::UnknownCatalog(_))));
}

#[test]
fn trivial_twists_give_dim_gauss_sums() {
    let a = dw_abelian(&[3], 1, &vec![vec![0; 3]; 3]).unwrap();
    let b = catalog("toric_code").unwrap();
    // all omega = 1 only for the trivial category, check the formula on it
    let triv = dw_abelian(&[], 1, &[vec![0]]).unwrap();
    assert_eq!(triv.rank(), 1);
    assert_eq!(triv.gauss_sums(), (Cyclotomic::one(), Cyclotomic::one()));
    assert_eq!(a.rank(), 9);
    assert_eq!(a.fs_exponent(), 3);
    assert_eq!(b.dims().iter().filter(|d| d.is_one()).count(), 4);
}

#[test]
fn asymmetric_s_is_reported() {
    let mut p = catalog("toric_code").unwrap().parts().clone();
    p.s.set(1, 2, Cyclotomic::from_integer(1).lift(24));
    let err = ModularData::new(p).unwrap_err();
    let v = err.violations();
    assert!(v.iter().any(|x| x.identity == "S symmetric" && x.indices == vec![1, 2]));
}

#[test]
fn corrupted_s_breaks_verlinde() {
    let mut p = catalog("toric_code").unwrap().parts().clone();
    p.s.set(3, 3, Cyclotomic::from_integer(2).lift(24));
    let err = ModularData::new(p).unwrap_err();
    assert!(err.violations().iter().any(|x| x.identity == "Verlinde integrality"));
}

#[test]
fn expected_blocks_are_cross_checked() {
    let mut p = catalog("toric_code").unwrap().parts().clone();
    p.expected_dual = Some(vec![0, 1, 2, 3]);
    p.expected_fusion = Some(FusionData::abelian_group(&[2, 2]).table());
    assert!(ModularData::new(p.clone()).is_ok());
    p.expected_dual = Some(vec![0, 2, 1, 3]);
    let err = ModularData::new(p).unwrap_err();
    assert!(err.violations().iter().any(|x| x.identity == "expected dual"));
}

#[test]
fn center_double_properties() {
    for name in CATALOG_NAMES {
        let a = catalog(name).unwrap();
        let z = center_double(&a);
        let r = a.rank();
        assert_eq!(z.rank(), r * r);
        let (p, q) = z.gauss_sums();
        assert_eq!(p, *a.dim());
        assert_eq!(q, *a.dim());
        assert_eq!(*z.dim(), a.dim() * a.dim());
        assert_eq!(a.fs_exponent() % z.fs_exponent(), 0);
        for x in 0..r * r {
            for y in 0..r * r {
                for w in 0..r * r {
                    let expect = a.n(x / r, y / r, w / r) * a.n(x % r, y % r, w % r);
                    assert_eq!(z.n(x, y, w), expect, "{name} {x} {y} {w}");
                }
            }
        }
    }
    let t = center_double(&catalog("toric_code").unwrap());
    assert!(t.omegas().iter().all(|w| w.as_rational().is_some()));
    assert_eq!(*t.dim(), Cyclotomic::from_integer(16));
    let triv = center_double(&dw_abelian(&[], 1, &[vec![0]]).unwrap());
    assert_eq!(triv.rank(), 1);
}

#[test]
fn regular_representation_on_catalog() {
    for name in CATALOG_NAMES {
        let f = catalog(name).unwrap().fusion().clone();
        let r = f.rank();
        let mats: Vec<Vec<Vec<u64>>> = (0..r).map(|a| f.fusion_matrix(a).unwrap()).collect();
        for a in 0..r {
            for b in 0..r {
                for i in 0..r {
                    for j in 0..r {
                        let lhs: u64 = (0..r).map(|k| mats[a][i][k] * mats[b][k][j]).sum();
                        let rhs: u64 = (0..r).map(|c| f.n(a, b, c) * mats[c][i][j]).sum();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn degenerate_bicharacter_is_rejected() {
    // t_x(x) = zeta_8 is not a coboundary twist; the data is not modular
    let err = dw_abelian(&[2], 8, &[vec![0, 0], vec![0, 1]]).unwrap_err();
    assert!(matches!(err, ModularError::Invalid(_)));
}

#[test]
fn mdata_round_trip() {
    for name in CATALOG_NAMES {
        let a = catalog(name).unwrap();
        let text = emit_mdata(&a);
        let b = load_mdata(&text).unwrap();
        assert_eq!(emit_mdata(&b), text);
        assert_eq!(b.fusion(), a.fusion());
    }
    let z = center_double(&catalog("double_semion").unwrap());
    let text = emit_mdata(&z);
    assert_eq!(emit_mdata(&load_mdata(&text).unwrap()), text);
}

#[test]
fn mdata_canonicalizes_input() {
    let text = r#"{"name": "fib", "conductor": 5, "labels": ["1", "tau"],
        "S": [[[[0,1,1]], [[0,1,1],[1,1,1],[4,1,1]]], [[[0,2,2],[1,1,1],[4,1,1]], [[0,-1,1]]]],
        "T": [0, 2]}"#;
    let a = load_mdata(text).unwrap();
    let out = emit_mdata(&a);
    assert!(out.contains("[[2,-1,1],[3,-1,1]]"), "{out}");
    assert_eq!(emit_mdata(&load_mdata(&out).unwrap()), out);
}

#[test]
fn mdata_errors() {
    assert!(matches!(load_mdata("{"), Err(ModularError::Parse(_))));
    let small = r#"{"name": "x", "conductor": 2, "labels": ["1","s"],
        "S": [[[[0,1,1]],[[0,1,1]]],[[[0,1,1]],[[0,-1,1]]]], "T": [0, 3]}"#;
    assert!(matches!(load_mdata(small), Err(ModularError::Conductor(_))));
}
