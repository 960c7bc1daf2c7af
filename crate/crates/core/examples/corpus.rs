//! Generates a seeded corpus and prints each entry with its digest.

use novikov::format::{canonical_algebra, sha256_hex};
use novikov::generators::{corpus, CorpusProfile};
use novikov::FieldDescriptor;

fn main() -> novikov::Result<()> {
    let profile = CorpusProfile {
        fields: vec![FieldDescriptor::PrimeField(5), FieldDescriptor::Rationals],
        dims: vec![2, 3, 5],
        count: 8,
        negatives: 3,
        seed: 7,
    };
    for e in corpus(&profile)? {
        let digest = sha256_hex(&canonical_algebra(&e.algebra));
        println!("{:<32} {}  {}", e.name, &digest[..16], e.origin);
    }
    Ok(())
}
