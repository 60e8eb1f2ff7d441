//! Hamiltonian computations decoded back to tensors agree with the classical
//! formulas evaluated by the tensor oracle.

use bigbracket::catalog::{builtin, random_tensor, RandomKind};
use bigbracket::structures::{
    c_pi_n, check_pqn_background, check_poisson, compatibility_identities, decode_bracket, derive_pqn_from_pair,
    encode_tensor, nijenhuis_torsion, Side,
};
use bigbracket::tensor_oracle as oracle;
use bigbracket::{bracket, CatalogEntry};

const ENTRIES: &[&str] = &["aff1", "heisenberg3", "sl2", "so3", "abelian(3)", "tangent_poly(2,1)", "tangent_poly(3,1)", "tangent_poly(3,2)"];

fn entries() -> Vec<CatalogEntry> {
    ENTRIES.iter().map(|n| builtin(n).unwrap()).collect()
}

#[test]
fn pi_bracket_decodes_to_the_cotangent_bracket() {
    for e in entries() {
        for seed in 0..4 {
            let pi = random_tensor(RandomKind::Bivector, &e, seed, 3).unwrap();
            let hp = bracket(&encode_tensor(&pi), &e.mu()).unwrap();
            let decoded = decode_bracket(&hp, Side::Dual).unwrap();
            assert_eq!(decoded, oracle::pi_algebroid(&e.algebroid, &pi), "{} seed {seed}", e.name);
        }
    }
}

#[test]
fn deformed_bracket_decodes_to_the_deformed_algebroid() {
    for e in entries() {
        for seed in 0..4 {
            let n = random_tensor(RandomKind::Endomorphism, &e, seed, 3).unwrap();
            let hn = bracket(&encode_tensor(&n), &e.mu()).unwrap();
            let decoded = decode_bracket(&hn, Side::Primal).unwrap();
            assert_eq!(decoded, oracle::deform_by(&e.algebroid, &n), "{} seed {seed}", e.name);
        }
    }
}

#[test]
fn torsion_hamiltonian_decodes_to_the_nijenhuis_torsion() {
    for e in entries() {
        for seed in 0..4 {
            let n = random_tensor(RandomKind::Endomorphism, &e, seed, 3).unwrap();
            let t = nijenhuis_torsion(&n, &e.mu()).unwrap();
            let decoded = decode_bracket(&t, Side::Primal).unwrap();
            assert_eq!(decoded, oracle::torsion(&e.algebroid, &n), "{} seed {seed}", e.name);
        }
    }
}

#[test]
fn concomitant_hamiltonian_decodes_to_the_classical_concomitant() {
    for e in entries() {
        for seed in 0..4 {
            let pi = random_tensor(RandomKind::Bivector, &e, seed, 3).unwrap();
            let n = random_tensor(RandomKind::Endomorphism, &e, seed + 100, 3).unwrap();
            let c = c_pi_n(&pi, &n, &e.mu()).unwrap();
            let decoded = decode_bracket(&c, Side::Dual).unwrap();
            assert_eq!(decoded, oracle::c_pi_n(&e.algebroid, &pi, &n), "{} seed {seed}", e.name);
        }
    }
}

#[test]
fn poisson_check_agrees_with_schouten() {
    for e in entries() {
        for seed in 0..6 {
            let pi = random_tensor(RandomKind::Bivector, &e, seed, 2).unwrap();
            let r = check_poisson(&pi, &e.mu()).unwrap();
            assert_eq!(
                r.get("poisson").unwrap().passed(),
                r.get("poisson (tensor)").unwrap().passed(),
                "{} seed {seed}\n{r}",
                e.name
            );
        }
    }
}

#[test]
fn pairs_induce_quadruples_passing_both_forms() {
    for e in entries() {
        for seed in 0..4 {
            let Ok(pi) = random_tensor(RandomKind::Poisson, &e, seed, 3) else { continue };
            let omega = random_tensor(RandomKind::TwoForm, &e, seed + 50, 3).unwrap();
            let quad = derive_pqn_from_pair(&pi, &omega, &e.mu()).unwrap();
            let r = check_pqn_background(&quad, &e.mu()).unwrap();
            assert!(r.passed(), "{} seed {seed}\n{r}", e.name);
            let c = compatibility_identities(&pi, &omega, &e.mu()).unwrap();
            assert!(c.report.passed(), "{} seed {seed}\n{}", e.name, c.report);
        }
    }
}
