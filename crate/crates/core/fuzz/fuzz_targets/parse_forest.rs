#![no_main]

use libfuzzer_sys::fuzz_target;
use plethyon::surjections::{forest_aut_order, parse_forest};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_forest(text) {
        let printed: Vec<String> = f.iter().map(|t| t.to_string()).collect();
        assert_eq!(parse_forest(&printed.join(";")).unwrap(), f);
        let _ = forest_aut_order(&f, true);
        let _ = forest_aut_order(&f, false);
    }
});
