#![no_main]

use libfuzzer_sys::fuzz_target;
use plethyon::incidence::Flavor;
use plethyon::shape::{parse_arrow, parse_shape};
use plethyon::ShapeKind;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for f in Flavor::all() {
        if let Ok(g) = f.parse_generator(text) {
            assert_eq!(f.parse_generator(&f.format_generator(&g)).unwrap(), g);
        }
        let _ = parse_arrow(&f.base, text);
        for kind in [ShapeKind::Multiset, ShapeKind::Word] {
            let _ = parse_shape(&f.base, kind, text);
        }
    }
});
