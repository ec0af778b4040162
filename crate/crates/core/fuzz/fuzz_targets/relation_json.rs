#![no_main]

use hkl_core::borcherds::Relation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(r) = Relation::from_json(s) {
            assert_eq!(Relation::from_json(&r.to_json().to_string()).unwrap(), r);
        }
    }
});
