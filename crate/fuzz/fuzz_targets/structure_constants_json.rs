#![no_main]

use libfuzzer_sys::fuzz_target;
use lie_ext::formats::{structure_constants_from_json, structure_constants_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = structure_constants_from_json(s) {
        let again = structure_constants_from_json(&structure_constants_to_json(&c)).expect("own output parses");
        assert!(again == c, "round trip changed the constants");
    }
});
