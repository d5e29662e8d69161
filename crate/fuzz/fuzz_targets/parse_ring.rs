#![no_main]

use dccodes::parse_ring;
use dccodes::text::to_hex;
use libfuzzer_sys::fuzz_target;

// First byte picks the modulus (0 = take it from hex), the rest is text.
fuzz_target!(|data: &[u8]| {
    let Some((&m, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let m = (m != 0).then_some(m as usize);
    if let Ok(f) = parse_ring(text, m) {
        if let Some(m) = m {
            assert_eq!(f.modulus(), m);
        }
        // both printed forms must read back to the same element
        assert_eq!(parse_ring(&f.to_string(), Some(f.modulus())).unwrap(), f);
        assert_eq!(parse_ring(&to_hex(&f), None).unwrap(), f);
    }
});
