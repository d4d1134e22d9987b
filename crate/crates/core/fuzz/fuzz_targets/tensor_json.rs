#![no_main]

use libfuzzer_sys::fuzz_target;
use plethyon::json::{tensor_from_json, tensor_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((f, s, t)) = tensor_from_json(text) {
        let v = tensor_to_json(&f, s.as_ref(), &t);
        let (f2, s2, t2) = tensor_from_json(&v.to_string()).unwrap();
        assert_eq!((f2, s2, t2), (f, s, t));
    }
});
