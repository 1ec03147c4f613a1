use super::{dw_abelian, ModularData, ModularError, ModularParts};
use crate::exactnum::{CycMatrix, Cyclotomic};

pub const CATALOG_NAMES: [&str; 3] = ["toric_code", "double_semion", "fibonacci"];

fn z2_labels() -> Vec<String> {
    ["(1,1)", "(a,1)", "(1,x)", "(a,x)"].iter().map(|s| s.to_string()).collect()
}

/// Built-in validated data.
pub fn catalog(name: &str) -> Result<ModularData, ModularError> {
    match name {
        "toric_code" => Ok(dw_abelian(&[2], 1, &[vec![0, 0], vec![0, 0]])?.renamed(name, Some(z2_labels()))),
        "double_semion" => Ok(dw_abelian(&[2], 4, &[vec![0, 0], vec![0, 1]])?.renamed(name, Some(z2_labels()))),
        "fibonacci" => {
            let m = 60;
            let phi = &(&Cyclotomic::one() + &Cyclotomic::root(5, 1)) + &Cyclotomic::root(5, 4);
            let s = CycMatrix::from_rows(vec![
                vec![Cyclotomic::one(), phi.clone()],
                vec![phi, Cyclotomic::from_integer(-1)],
            ])
            .lift(m);
            ModularData::new(ModularParts {
                name: name.to_string(),
                conductor: m,
                labels: vec!["1".into(), "tau".into()],
                s,
                t: vec![0, 24],
                expected_fusion: None,
                expected_dual: None,
            })
        }
        _ => Err(ModularError::UnknownCatalog(name.to_string())),
    }
}
