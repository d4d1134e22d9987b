#![no_main]

use libfuzzer_sys::fuzz_target;
use plethyon::surjections::Decoration;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(d) = text.parse::<Decoration>() {
        let _ = d.flavor(1);
    }
});
