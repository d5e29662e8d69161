#![no_main]

use dccodes_cli::config::{parse_config, resolve, SearchFlags};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(file) = parse_config(text) {
        // validation must reject, never panic
        let _ = resolve(&SearchFlags::default(), &file, None);
    }
});
