#![no_main]

use libfuzzer_sys::fuzz_target;
use plethyon::FiniteCategory;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = FiniteCategory::from_json(text) {
        assert_eq!(FiniteCategory::from_json(&c.to_json().to_string()).unwrap(), c);
    }
});
