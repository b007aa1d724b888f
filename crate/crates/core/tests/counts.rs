use nagumo_atlas::counting::{class_count, count_table, total_regions, Count};
use nagumo_atlas::numtheory;
use nagumo_atlas::words::{Alphabet, GroupKind};

#[test]
fn lengths_split_by_primitive_period() {
    for alphabet in [Alphabet::A2, Alphabet::A3] {
        for group in GroupKind::ALL {
            for n in 1..=64u64 {
                let by_period: Count = numtheory::divisors(n)
                    .unwrap()
                    .into_iter()
                    .map(|m| class_count(alphabet, group, true, m).unwrap())
                    .sum();
                assert_eq!(
                    class_count(alphabet, group, false, n).unwrap(),
                    by_period,
                    "{alphabet} {group} n={n}"
                );
            }
        }
    }
}

#[test]
fn totals_accumulate() {
    for alphabet in [Alphabet::A2, Alphabet::A3] {
        for n in 2..64u64 {
            let next = count_table(n + 1).unwrap();
            let here = total_regions(alphabet, n).unwrap();
            let c = next.for_alphabet(alphabet);
            assert_eq!(c.total, Some(here + c.permuted_lyndon_bracelets));
        }
    }
}

#[test]
fn larger_groups_have_fewer_classes() {
    for n in 1..=64u64 {
        let t = count_table(n).unwrap();
        for c in [t.a2, t.a3] {
            assert!(c.bracelets <= c.necklaces);
            assert!(c.permuted_necklaces <= c.necklaces);
            assert!(c.permuted_bracelets <= c.bracelets);
            assert!(c.permuted_bracelets <= c.permuted_necklaces);
            assert!(c.lyndon_necklaces <= c.necklaces);
            assert!(c.permuted_lyndon_bracelets <= c.lyndon_bracelets);
            assert!(c.permuted_lyndon_bracelets >= 0);
            assert_eq!(c.total.is_some(), n >= 2);
        }
        assert!(t.a2.necklaces <= t.a3.necklaces);
    }
}

#[test]
fn table_is_exact_at_the_top_of_the_range() {
    let t = count_table(64).unwrap();
    assert_eq!(t.a2.necklaces, 288_230_376_218_822_676);
    assert!(t.a3.total.unwrap() > 0);
}
