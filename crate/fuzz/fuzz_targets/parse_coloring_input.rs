#![no_main]

use caring_core::io::{read_coloring_input, ColoringInput};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: &str| {
    match read_coloring_input(input) {
        Ok(ColoringInput::Kts(ks)) => assert_eq!(ks.n() % 6, 3),
        Ok(ColoringInput::Rounds(r)) => assert!(r.rounds().iter().all(|c| c.n() == r.n())),
        Err(_) => {}
    }
});
