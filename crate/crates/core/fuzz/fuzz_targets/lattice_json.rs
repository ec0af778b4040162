#![no_main]

use hkl_core::lattice::Lattice;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(l) = Lattice::from_json(s) {
            let _ = Lattice::from_json(&l.to_json().unwrap()).unwrap();
        }
    }
});
