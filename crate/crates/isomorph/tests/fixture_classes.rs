//! The two published complete spreads and the self-dual 34-member code
//! from fixtures/ pin down canonical keys, automorphism orders and word
//! orbit structures in the full-size geometry.

use gf2core::{GF2Matrix, Subspace};
use isomorph::{canonical_key, canonicalize, is_iso_dual, ColoredConfiguration, PointPerm};

fn load_words(name: &str) -> Vec<Subspace> {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    text.lines()
        .filter(|l| !l.starts_with('%') && !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (_, rows) = l.split_once(':').expect("dimension prefix");
            let rows: Vec<u32> = rows
                .split(',')
                .map(|r| r.trim().parse().expect("decimal row"))
                .collect();
            Subspace::span(&GF2Matrix::new(7, rows))
        })
        .collect()
}

#[test]
fn published_spreads_have_symmetric_group_s4() {
    let a = ColoredConfiguration::plain(7, &load_words("complete16_a.ssc")).unwrap();
    let b = ColoredConfiguration::plain(7, &load_words("complete16_b.ssc")).unwrap();
    let ca = canonicalize(&a);
    let cb = canonicalize(&b);
    assert_eq!(ca.group.order(), 24);
    assert_eq!(cb.group.order(), 24);
    assert_ne!(ca.key, cb.key);
    assert_eq!(ca.group.word_orbit_sizes(&a), vec![8, 6, 1, 1]);
    assert_eq!(cb.group.word_orbit_sizes(&b), vec![8, 4, 3, 1]);
}

#[test]
fn keys_survive_a_change_of_basis() {
    let blocks = load_words("complete16_a.ssc");
    let cfg = ColoredConfiguration::plain(7, &blocks).unwrap();
    let key = canonical_key(&cfg);
    // A companion-style matrix of full order mixes all coordinates.
    let mut rows: Vec<u32> = (1..7).map(|i| 1 << (6 - i)).collect();
    rows.push(0b1100000);
    let g = PointPerm::from_matrix(&GF2Matrix::new(7, rows));
    assert_eq!(canonical_key(&cfg.transformed(&g)), key);
}

#[test]
fn published_34_member_code_is_iso_dual() {
    let words = load_words("iso_dual_34.ssc");
    assert_eq!(words.len(), 34);
    let cfg = ColoredConfiguration::plain(7, &words).unwrap();
    assert!(is_iso_dual(&cfg));
}
