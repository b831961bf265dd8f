//! Fuzz the two CLI input grammars: curve specifications and member
//! windows. Any input may be rejected, but none may panic, hang, or blow
//! the stack.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = manin_g2::parse::parse_curve_spec(text);
        let _ = manin_g2::parse::parse_n_range(text);
    }
});
