#![no_main]

use libfuzzer_sys::fuzz_target;
use lie_ext::formats::{poly_from_json, poly_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = poly_from_json(s) {
        let again = poly_from_json(&poly_to_json(&f)).expect("own output parses");
        assert_eq!(poly_to_json(&again), poly_to_json(&f));
    }
});
