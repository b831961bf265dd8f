//! Fuzz the verification-report JSON decoder. Any input may be rejected,
//! but acceptance must never panic, and an accepted report must survive a
//! render/parse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use manin_g2::report::ReportJson;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = ReportJson::parse(text) {
        let again = ReportJson::parse(&report.render()).expect("round trip");
        assert_eq!(report, again);
    }
});
