//! Scan the interference phase for each preset and print both theories'
//! correlation curves side by side — the testable disagreement.
//!
//! Run with: cargo run --example qm_vs_multisim_scan

use std::f64::consts::PI;

use triphoton::experiment::{linspace, scan, Preset};

fn main() {
    let grid = linspace(0.0, 2.0 * PI, 13);
    for preset in Preset::ALL {
        let cfg = preset.config();
        let rows = scan(&cfg, &grid).expect("preset geometry is valid");
        println!(
            "preset {:?} (regime {}):",
            preset.name(),
            rows[0].regime
        );
        println!("  delta/pi    E_qm        E_ms        |gap|");
        for r in &rows {
            println!(
                "  {:>8.4}  {:+.6}   {:+.6}   {:.6}",
                r.delta / PI,
                r.e_qm,
                r.e_ms,
                (r.e_qm - r.e_ms).abs()
            );
        }
        println!();
    }

    // Locate the maximal disagreement on a dense grid.
    let dense = linspace(0.0, 2.0 * PI, 100_001);
    for preset in Preset::ALL {
        let rows = scan(&preset.config(), &dense).unwrap();
        let (argmax, max) = rows
            .iter()
            .map(|r| (r.delta, (r.e_qm - r.e_ms).abs()))
            .fold((0.0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        println!(
            "preset {:?}: max |E_qm - E_ms| = {:.6} at delta = {:.6} rad",
            preset.name(),
            max,
            argmax
        );
    }
    println!("\nbbb/aab: the full correlation amplitude separates the theories.");
    println!("aaa: sin vs sin^3 differ at most by 2/(3*sqrt(3)) = 0.384900.");
}
