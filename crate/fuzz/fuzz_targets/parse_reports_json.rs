#![no_main]

use dccodes::search::{emit, parse_reports_json, OutputFormat};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(reports) = parse_reports_json(data) {
        let again = emit(&reports, OutputFormat::Json);
        assert_eq!(parse_reports_json(&again).unwrap(), reports);
        let _ = emit(&reports, OutputFormat::Csv);
    }
});
