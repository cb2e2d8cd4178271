#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((p, rc)) = dnca::textio::parse_pair(text) {
        assert_eq!(p.n(), rc.n());
        // small inputs only: the tau evaluation walks subsets of the strings
        if rc.strings().len() <= 12 && p.len() <= 12 {
            let _ = rc.tau(&p.shape(), 0, p.len().min(3));
        }
    }
});
