//! Checks the stored 3x4 rank-distance-3 code tables: all 37 codes reach
//! the size bound for their distance, the linear/nonlinear split is 7/30,
//! and the inner automorphism group orders come out as recorded.

use std::collections::BTreeMap;

use rankcodes::{inner_automorphism_group, read_matrix_lists, RankCode};

fn load(name: &str) -> Vec<Vec<gf2core::GF2Matrix>> {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap();
    read_matrix_lists(&text).unwrap()
}

fn linear_codes() -> Vec<RankCode> {
    load("mrd_linear.txt")
        .into_iter()
        .map(|gens| RankCode::from_generators(3, 4, &gens).unwrap())
        .collect()
}

fn nonlinear_codes() -> Vec<RankCode> {
    load("mrd_nonlinear.txt")
        .into_iter()
        .map(|words| RankCode::new(3, 4, words).unwrap())
        .collect()
}

#[test]
fn all_thirty_seven_codes_are_maximum_size_distance_three() {
    let linear = linear_codes();
    let nonlinear = nonlinear_codes();
    assert_eq!(linear.len(), 7);
    assert_eq!(nonlinear.len(), 30);
    for code in linear.iter().chain(&nonlinear) {
        assert_eq!(code.len(), 16);
        assert!(code.is_mrd(3));
    }
}

#[test]
fn linearity_matches_the_file_split() {
    for code in linear_codes() {
        assert!(code.is_linear_class());
    }
    for code in nonlinear_codes() {
        assert!(!code.is_linear_class());
    }
}

#[test]
fn linear_codes_have_the_recorded_group_orders() {
    let orders: Vec<u128> = linear_codes()
        .iter()
        .map(|c| inner_automorphism_group(c).unwrap().order())
        .collect();
    assert_eq!(orders, [2688, 960, 384, 288, 112, 96, 64]);
}

#[test]
fn nonlinear_group_orders_have_the_recorded_distribution() {
    let mut dist: BTreeMap<u128, usize> = BTreeMap::new();
    for code in nonlinear_codes() {
        *dist
            .entry(inner_automorphism_group(&code).unwrap().order())
            .or_default() += 1;
    }
    let expected: BTreeMap<u128, usize> = [
        (48, 3),
        (42, 1),
        (36, 1),
        (24, 4),
        (20, 1),
        (18, 1),
        (16, 1),
        (12, 2),
        (9, 1),
        (8, 2),
        (6, 6),
        (4, 2),
        (3, 2),
        (2, 3),
    ]
    .into_iter()
    .collect();
    assert_eq!(dist, expected);
}

#[test]
fn all_codes_are_pairwise_nonequivalent() {
    let linear = linear_codes();
    let nonlinear = nonlinear_codes();
    let keys: Vec<String> = linear
        .iter()
        .chain(&nonlinear)
        .map(|c| {
            let lifted = rankcodes::lift(c).unwrap();
            isomorph::canonical_key(&isomorph::ColoredConfiguration::plain(7, &lifted).unwrap())
                .as_str()
                .to_string()
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), 37);
}
