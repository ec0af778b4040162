#![no_main]

use std::str::FromStr;

use hkl_core::divisor::Space;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(sp) = Space::from_str(s) {
            assert_eq!(Space::from_str(&sp.to_string()).unwrap(), sp);
        }
    }
});
