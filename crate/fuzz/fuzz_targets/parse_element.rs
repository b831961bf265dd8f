//! Fuzz field-element text parsing over a rotation of small fields. The
//! first byte selects the field; the rest is the element text.

#![no_main]

use libfuzzer_sys::fuzz_target;
use manin_g2::field::{element_text, FieldSpec, Fq};

fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let field = match sel % 4 {
        0 => FieldSpec::prime(3),
        1 => FieldSpec::prime(11),
        2 => FieldSpec::new(3, 2, None),
        _ => FieldSpec::new(7, 2, None),
    }
    .expect("fixed fields construct");
    if let Ok(e) = Fq::parse(&field, text) {
        // element text is self-delimiting and canonical
        let again = Fq::parse(&field, &element_text(&e)).expect("round trip");
        assert_eq!(e, again);
    }
});
