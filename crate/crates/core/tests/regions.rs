use nagumo_atlas::gde::ContinuationConfig;
use nagumo_atlas::regions::{self, d_max, scan_region, Terminal, DEFAULT_D_CAP};
use nagumo_atlas::Word;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

#[test]
fn halving_the_initial_step_moves_no_boundary() {
    let coarse = ContinuationConfig::default();
    let fine = ContinuationConfig {
        d_step_init: coarse.d_step_init / 2.0,
        ..coarse
    };
    let grid = regions::uniform_grid(0.05, 0.95, 19);
    for word in ["01", "0a", "011", "0a1", "0aa1"] {
        let a = scan_region(&w(word), &grid, &coarse, DEFAULT_D_CAP).unwrap();
        let b = scan_region(&w(word), &grid, &fine, DEFAULT_D_CAP).unwrap();
        for (x, y) in a.samples.iter().zip(&b.samples) {
            assert!(
                (x.d_max - y.d_max).abs() <= 1e-8,
                "{word} at {}: {} vs {}",
                x.a,
                x.d_max,
                y.d_max
            );
        }
    }
}

#[test]
fn doubled_letters_stretch_the_region() {
    let cfg = ContinuationConfig::default();
    for a in [0.1, 0.3, 0.5, 0.77] {
        let short = d_max(&w("01"), a, &cfg, DEFAULT_D_CAP).unwrap();
        let long = d_max(&w("0011"), a, &cfg, DEFAULT_D_CAP).unwrap();
        assert!((long.d_max - 2.0 * short.d_max).abs() <= 1e-6);
    }
}

#[test]
fn repeated_words_collapse_onto_their_root() {
    let cfg = ContinuationConfig::default();
    let grid = regions::uniform_grid(0.05, 0.95, 10);
    let root = scan_region(&w("0a"), &grid, &cfg, DEFAULT_D_CAP).unwrap();
    let long = scan_region(&w("0a0a"), &grid, &cfg, DEFAULT_D_CAP).unwrap();
    for (x, y) in root.samples.iter().zip(&long.samples) {
        assert!((x.d_max - y.d_max).abs() <= 1e-8);
    }
}

#[test]
fn homogeneous_words_never_stop() {
    let cfg = ContinuationConfig::default();
    let grid = regions::uniform_grid(0.01, 0.99, 25);
    for word in ["0", "aa", "111", "aaaa", "00000"] {
        let b = scan_region(&w(word), &grid, &cfg, DEFAULT_D_CAP).unwrap();
        assert!(
            b.samples
                .iter()
                .all(|s| s.terminal == Terminal::DmaxCap && s.d_max == DEFAULT_D_CAP),
            "{word}"
        );
    }
}

#[test]
fn mirror_and_rotation_symmetry_of_small_words() {
    let cfg = ContinuationConfig::default();
    let grid = regions::uniform_grid(0.05, 0.95, 19);
    for word in ["001", "011", "0a1", "00a1"] {
        let report =
            regions::verify_region_symmetries(&w(word), &grid, &cfg, DEFAULT_D_CAP).unwrap();
        assert!(report.max_deviation() <= 1e-8, "{report:?}");
    }
    let two = scan_region(
        &w("01"),
        &regions::uniform_grid(0.01, 0.99, 99),
        &cfg,
        DEFAULT_D_CAP,
    )
    .unwrap();
    for (x, y) in two.samples.iter().zip(two.samples.iter().rev()) {
        assert!((x.d_max - y.d_max).abs() <= 1e-6);
    }
}

#[test]
fn reference_point_lies_inside() {
    let cfg = ContinuationConfig::default();
    for word in ["0a", "011", "0a1", "0a11"] {
        let s = d_max(&w(word), 0.475, &cfg, DEFAULT_D_CAP).unwrap();
        assert!(s.d_max > 0.025, "{word}: {}", s.d_max);
        assert_eq!(s.terminal, Terminal::Fold, "{word}");
        assert!(s.det_ratio < cfg.det_guard);
    }
}
