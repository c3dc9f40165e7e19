//! Boost the choice events of each preset into every device's rest frame
//! and show how the timing labels fall out of the orderings.
//!
//! Run with: cargo run --example classify_timing

use triphoton::experiment::Preset;
use triphoton::spacetime::{boost_time, classify_all};

fn main() {
    for preset in Preset::ALL {
        let cfg = preset.config();
        let regime = classify_all(&cfg.devices).expect("preset geometry is valid");
        println!("preset {:?}  ->  regime {}", preset.name(), regime);
        for judge in &cfg.devices {
            print!("  in the frame of device {} (", judge.id);
            print!(
                "v = [{:.0}, {:.0}, {:.0}] m/s):",
                judge.velocity.vx(),
                judge.velocity.vy(),
                judge.velocity.vz()
            );
            for d in &cfg.devices {
                print!("  T{} = {:+.3e} s", d.id, boost_time(&d.choice_event, &judge.velocity));
            }
            println!("  =>  {}", regime.label(judge.id).describe());
        }
        println!();
    }
    println!("note: the moving devices' labels hinge on boost corrections of");
    println!("order v*D/c^2 (a few picoseconds here) beating the lab-time leads.");
}
