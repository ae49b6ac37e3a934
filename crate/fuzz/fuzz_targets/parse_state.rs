#![no_main]

use landauer::wavegrid::{parse_state, write_state};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(state) = parse_state(text) {
        let again = parse_state(&write_state(&state)).expect("written state parses");
        assert_eq!(again, state);
    }
});
