//! Evaluate the separation bound D > c²·δt / V over laboratory-plausible
//! parameters and validate the three presets against it.
//!
//! Run with: cargo run --example feasibility_bounds

use triphoton::experiment::{validate, Preset};
use triphoton::spacetime::{check_feasibility, min_distance};

fn main() {
    println!("minimum separation D_min = c^2 * dt / V (meters):\n");
    println!("  dt \\ V      1.0 km/s    1.77 km/s   2.5 km/s    5.0 km/s");
    for (label, dt) in [("1 ps", 1e-12), ("2 ps", 2e-12), ("5 ps", 5e-12)] {
        print!("  {label:>6}  ");
        for v in [1000.0, 1767.766952966369, 2500.0, 5000.0] {
            print!("  {:>10.2}", min_distance(dt, v).unwrap());
        }
        println!();
    }

    println!("\nheadline: dt = 2 ps at V = 2.5 km/s needs D > {:.4} m (~72 m)",
        min_distance(2e-12, 2500.0).unwrap());
    for d in [50.0, 100.0] {
        println!(
            "  D = {d} m: {}",
            if check_feasibility(d, 2e-12, 2500.0).unwrap() { "PASS" } else { "FAIL" }
        );
    }

    println!("\npreset validation at nominal numbers:");
    for preset in Preset::ALL {
        let report = validate(&preset.config()).expect("preset geometry is valid");
        println!("  preset {:?} -> regime {}", preset.name(), report.regime);
        for c in &report.checks {
            println!(
                "    {}: {} ({})",
                c.name,
                if c.pass { "PASS" } else { "FAIL" },
                c.detail
            );
        }
    }
}
