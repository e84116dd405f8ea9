//! The complex of a four-variable identity has second homology a quotient
//! of that of each three-variable specialization.

use bmhom::corpus::corpus_entry;
use bmhom::homology::h2;
use bmhom::identities::{satisfies, BmIdentity, LetterPattern};

#[test]
fn x14_quotients() {
    let x14: BmIdentity = "X14".parse().unwrap();
    let mut checked = 0;
    for (name, expected) in [("A3", "0"), ("A6", "Z/2"), ("A7", "Z/2")] {
        let q = &corpus_entry(name).unwrap().table;
        assert!(satisfies(q, &x14), "{name} satisfies X14");
        for (t, s) in [(1, 1), (1, -1)] {
            let gx = h2(q, &x14, t, s).unwrap();
            assert_eq!(gx.to_string(), expected, "{name} ({t},{s})");
            for p in LetterPattern::CLASSIC {
                let v = BmIdentity::new(p, 1, 4).unwrap();
                let gv = h2(q, &v, t, s).unwrap();
                assert!(gx.is_quotient_of(&gv), "{name} {v} ({t},{s}): {gx} vs {gv}");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 36);
}
