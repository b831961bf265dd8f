//! Fuzz polynomial text parsing over a rotation of small fields (prime and
//! extension). The first byte selects the field; the rest is the text.

#![no_main]

use libfuzzer_sys::fuzz_target;
use manin_g2::field::FieldSpec;
use manin_g2::poly::parse_poly;

fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let field = match sel % 4 {
        0 => FieldSpec::prime(3),
        1 => FieldSpec::prime(7),
        2 => FieldSpec::new(3, 2, None),
        _ => FieldSpec::new(7, 2, None),
    }
    .expect("fixed fields construct");
    if let Ok(p) = parse_poly(&field, text) {
        // what parses must re-parse to the same value from its own text
        let again = parse_poly(&field, &p.to_string()).expect("round trip");
        assert_eq!(p, again);
    }
});
