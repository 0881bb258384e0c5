use std::fs;
use std::path::PathBuf;

use ac_core::cert_text::{parse, serialize};
use ac_core::{replay, script_4n1, script_4n3};

const NS: [usize; 7] = [0, 1, 2, 3, 5, 10, 50];

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", "golden", name]
        .iter()
        .collect();
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn fixtures_match_generated_scripts() {
    for n in NS {
        for (tag, cert) in [("f4n1", script_4n1(n)), ("f4n3", script_4n3(n))] {
            let text = fixture(&format!("{tag}_{n}.cert"));
            let parsed = parse(&text).unwrap();
            assert_eq!(parsed, cert, "{tag}:{n}");
            assert_eq!(serialize(&parsed), text, "{tag}:{n}");
            assert!(replay(&parsed).unwrap().passed(), "{tag}:{n}");
        }
    }
}

#[test]
fn tampered_checkpoint_fails_at_the_right_step() {
    let text = fixture("f4n1_1.cert");
    let bad = text.replacen("CHECK 1 YYX", "CHECK 1 YYx", 1);
    assert_ne!(bad, text);
    let report = replay(&parse(&bad).unwrap()).unwrap();
    assert!(!report.passed());
    let failed: Vec<_> = report.checkpoints.iter().filter(|c| !c.passed()).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0].mismatch, Some(2));
}

#[test]
fn dropped_move_is_detected() {
    let text = fixture("f4n3_2.cert");
    let bad = text.replacen("\nMUL 2 1\n", "\n", 1);
    let report = replay(&parse(&bad).unwrap());
    assert!(report.map_or(true, |r| !r.passed()));
}
