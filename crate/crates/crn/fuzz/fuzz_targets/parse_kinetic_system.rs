#![no_main]

use libfuzzer_sys::fuzz_target;

// The kinetic-system parser must never panic, and any accepted system must
// round-trip through the canonical text form.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(ks) = crn::parse_kinetic_system(text) {
        let printed = crn::pretty_print(ks.network(), Some(ks.kinetic_orders()));
        let reparsed =
            crn::parse_kinetic_system(&printed).expect("canonical form must reparse");
        assert_eq!(reparsed.kinetic_orders(), ks.kinetic_orders());
        assert_eq!(
            reparsed.network().num_reactions(),
            ks.network().num_reactions()
        );
    }
});
