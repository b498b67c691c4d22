use num_traits::One;
use ufo7::algebra::{all_words, check_confluence, BraidingData, RootLetter};
use ufo7::relations::{check_composites, verify_relations, CheckStatus, RelationKind};
use ufo7::verma::{algebra_for, build_verma};
use ufo7::weights::WeightParams;
use ufo7::CycNum;

fn weight(q12: CycNum) -> WeightParams {
    WeightParams::new(
        CycNum::from_int(2),
        CycNum::from_int(3),
        CycNum::frac(5, 7),
        CycNum::from_int(-4),
        BraidingData::new(q12).unwrap(),
    )
    .unwrap()
}

#[test]
fn catalog_holds_at_three_braidings() {
    for q12 in [CycNum::one(), CycNum::zeta(), CycNum::frac(3, 2)] {
        let r = verify_relations(&build_verma(&weight(q12.clone())));
        for c in &r.checks {
            assert_ne!(c.status, CheckStatus::Fail, "{} at q12 = {q12}", c.printed);
            if c.status == CheckStatus::Quarantined {
                assert_eq!(c.correction_residual, Some(0), "{}", c.printed);
            }
        }
        let cross = r.checks.iter().filter(|c| c.kind == RelationKind::Cross).count();
        assert!(cross > 0);
    }
}

#[test]
fn defining_relations_off_only_where_expected() {
    let r = verify_relations(&build_verma(&weight(CycNum::zeta())));
    let off: Vec<&str> = r
        .checks
        .iter()
        .filter(|c| matches!(c.kind, RelationKind::Defining | RelationKind::Nilpotency))
        .filter(|c| c.status != CheckStatus::Pass)
        .map(|c| c.printed.as_str())
        .collect();
    assert_eq!(off, ["E1^2 = 0", "F1^2 = 0", "F11212 F12 = (z^4) p F12 F11212"]);
}

#[test]
fn straightening_is_confluent() {
    for q12 in [CycNum::one(), CycNum::zeta_pow(5)] {
        let alg = algebra_for(&BraidingData::new(q12).unwrap());
        let words = all_words(&[RootLetter::E1, RootLetter::E2], 4);
        let rep = check_confluence(words.iter().map(Vec::as_slice), &alg);
        assert!(rep.is_confluent());
        assert_eq!(rep.words_checked, 31);
    }
}

#[test]
fn composites_from_single_swaps() {
    let alg = algebra_for(&BraidingData::new(CycNum::zeta()).unwrap());
    let bad: Vec<String> = check_composites(&alg)
        .into_iter()
        .filter(|c| c.printed.starts_with("E1 E12^") || c.printed.starts_with("E112 E12^"))
        .filter(|c| !c.holds_as_printed())
        .map(|c| c.printed)
        .collect();
    assert_eq!(bad.len(), 1);
    assert!(bad[0].starts_with("E1 E12^3"));
}
