#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((n, rows)) = dnca::textio::parse_trace(text) {
        // a parsed trace re-renders into an equal trace
        let mut out = format!("n {n}\n");
        for row in &rows {
            out.push_str(&dnca::textio::format_path(row));
            out.push('\n');
        }
        let (m, back) = dnca::textio::parse_trace(&out).unwrap();
        assert_eq!((m, back), (n, rows));
    }
});
