#![no_main]

use hkl_core::divisor::Space;
use hkl_core::expr::{parse_class, parse_terms};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse_terms(s);
        for sp in [Space::F(19), Space::F(20), Space::F(21), Space::FStable(18), Space::FIIA1(1)] {
            let _ = parse_class(s, sp);
        }
    }
});
