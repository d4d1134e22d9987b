#![no_main]

use libfuzzer_sys::fuzz_target;
use plethyon::json::{series_from_json, series_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = series_from_json(text) {
        let v = series_to_json(&f, None).unwrap();
        assert_eq!(series_from_json(&v.to_string()).unwrap(), f);
    }
});
