#![no_main]

use libfuzzer_sys::fuzz_target;
use lie_ext::formats::{wtensor_from_json, wtensor_to_json};
use lie_ext::wtensor::wtensor_validate;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = wtensor_from_json(s) {
        assert_eq!(wtensor_from_json(&wtensor_to_json(&w)).expect("own output parses"), w);
        if w.n() <= 6 {
            let _ = wtensor_validate(&w);
        }
    }
});
