//! Write the three preset configurations as JSON files for the `triphoton`
//! binary, with sampler and scan blocks filled in.
//!
//! Run with: cargo run --example export_preset_configs
//! Then e.g.: cargo run -- classify bbb.json

use std::f64::consts::PI;
use std::fs;

use triphoton::cli::{ConfigFile, SamplerSettings, ScanSettings};
use triphoton::experiment::Preset;

fn main() -> std::io::Result<()> {
    for preset in Preset::ALL {
        let cfg = preset.config();
        let file = ConfigFile::from_experiment(
            &cfg,
            Some(SamplerSettings {
                n: 1_000_000,
                seed: 42,
            }),
            Some(ScanSettings {
                start: 0.0,
                stop: 2.0 * PI,
                steps: 25,
            }),
        );
        let path = format!("{}.json", preset.name());
        fs::write(&path, serde_json::to_string_pretty(&file).expect("serializable"))?;
        println!("wrote {path}");
    }
    println!("\ntry:");
    println!("  cargo run -- classify bbb.json");
    println!("  cargo run -- scan aab.json --out aab.csv");
    println!("  cargo run -- sample aaa.json --theory ms");
    Ok(())
}
