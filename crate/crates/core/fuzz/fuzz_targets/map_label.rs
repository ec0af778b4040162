#![no_main]

use std::str::FromStr;

use hkl_core::divisor::MapLabel;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(m) = MapLabel::from_str(s) {
            assert_eq!(MapLabel::from_str(&m.to_string()).unwrap(), m);
        }
    }
});
