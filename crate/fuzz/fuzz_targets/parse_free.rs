#![no_main]

use dccodes::parse_free;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(p) = parse_free(text) {
        assert_eq!(parse_free(&p.to_string()).unwrap(), p);
    }
});
