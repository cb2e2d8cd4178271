#![no_main]

use libfuzzer_sys::fuzz_target;

// first byte picks the rank, the rest is a '|'-separated path
fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else {
        return;
    };
    let n = 3 + sel as usize % 6;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(p) = dnca::textio::parse_path(n, text) {
        let rendered = dnca::textio::format_path(&p);
        assert_eq!(dnca::textio::parse_path(n, &rendered).unwrap(), p);
    }
});
