//! Reads a semigroup given by generators, writes it back as a table and
//! reads that again.

use greenstone::format::{
    biact_to_json, parse_document, parse_semigroup, semigroup_to_json, Document,
};
use greenstone::FiniteBiact;

fn main() -> greenstone::Result<()> {
    let s = parse_semigroup(r#"{"kind":"transformations","degree":2,"generators":[[1,0],[0,0]]}"#)?;
    let text = semigroup_to_json(&s);
    print!("{text}");
    assert_eq!(parse_semigroup(&text)?.table(), s.table());
    let a = biact_to_json(&FiniteBiact::regular(&s));
    match parse_document(&a)? {
        Document::Biact(b) => println!("biact of size {}", greenstone::Actions::size(&b)),
        Document::Semigroup(_) => unreachable!(),
    }
    match parse_semigroup(r#"{"kind":"table","order":2,"table":[[0,1],[1,?]]}"#) {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
