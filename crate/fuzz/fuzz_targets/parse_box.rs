#![no_main]

use libfuzzer_sys::fuzz_target;

// first byte picks the rank, the rest is the box text in either form
fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else {
        return;
    };
    let n = 3 + sel as usize % 6;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(b) = dnca::textio::parse_box(n, text) {
        let rendered = dnca::textio::format_box(&b);
        assert_eq!(dnca::textio::parse_box(n, &rendered).unwrap(), b);
        let zeta = dnca::textio::format_box_zeta(&b);
        assert_eq!(dnca::textio::parse_box(n, &zeta).unwrap(), b);
    }
});
