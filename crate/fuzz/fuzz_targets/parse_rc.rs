#![no_main]

use libfuzzer_sys::fuzz_target;

// first byte picks the rank, the rest is a list of (color,length,rigging)
fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else {
        return;
    };
    let n = 3 + sel as usize % 6;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(rc) = dnca::rigged::parse_rc(n, text) {
        assert_eq!(rc.n(), n);
        for s in rc.strings() {
            assert!((1..=n).contains(&s.color) && s.length >= 1);
        }
        // the charge is a plain quadratic form; it must evaluate whenever the
        // configuration is small enough for its double sum
        if rc.strings().len() <= 64 {
            let _ = rc.charge();
        }
    }
});
