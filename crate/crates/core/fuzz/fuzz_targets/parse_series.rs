#![no_main]

use libfuzzer_sys::fuzz_target;
use plethyon::series::{format_series, parse_series};
use plethyon::{BaseCategory, ShapeKind};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let base = BaseCategory::classical();
    for kind in [ShapeKind::Multiset, ShapeKind::Word] {
        if let Ok(f) = parse_series(&base, kind, 6, text) {
            // printing a parsed series must parse back to the same series
            let again = parse_series(&base, kind, 6, &format_series(&f).unwrap()).unwrap();
            assert_eq!(again, f);
        }
    }
});
