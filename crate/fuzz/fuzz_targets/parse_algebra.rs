#![no_main]

use arthom::pathalg::parse_algebra_with_cap;
use libfuzzer_sys::fuzz_target;

// small cap keeps completion of adversarial relations cheap
const PATH_CAP: usize = 10;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(file) = parse_algebra_with_cap(text, PATH_CAP) else { return };
    let again = parse_algebra_with_cap(&file.algebra.to_text(), PATH_CAP).expect("printed form reparses");
    assert!(again.algebra.same(&file.algebra));
});
