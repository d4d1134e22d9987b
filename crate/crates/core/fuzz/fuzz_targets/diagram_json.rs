#![no_main]

use libfuzzer_sys::fuzz_target;
use plethyon::surjections::{Decoration, Level1};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(d) = Level1::from_json(text) {
        if d.t01() <= 64 {
            let nf = d.normal_form(Decoration::PLAIN);
            assert!(nf.is_monotone_form());
        }
    }
});
