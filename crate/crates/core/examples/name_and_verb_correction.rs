// Find inconsistently translated words and rewrite them to one form.
//
// Names get the copyable treatment (replace variants, insert when the
// translation is missing); verbs are only replaced.
//
// ```bash
// cargo run --example name_and_verb_correction
// ```

use std::collections::BTreeSet;

use parcorp::bible::{align_by_verse, parse_bible_xml};
use parcorp::consistency::{
    build_translation_table, canonicalize_names, canonicalize_verbs, detect_inconsistencies, select_canonical,
    CanonicalizationRule,
};
use parcorp::synth::BibleFixture;
use parcorp::PipelineConfig;

pub fn run_example() -> parcorp::Result<()> {
    let config = PipelineConfig::default();
    let (ceb, tl) = BibleFixture { shared_verses: 2000, ..Default::default() }.generate();
    let (pairs, _) = align_by_verse(&parse_bible_xml(ceb.as_bytes(), None)?, &parse_bible_xml(tl.as_bytes(), None)?, &config)?;

    let watch: BTreeSet<String> = ["dios", "jehova", "moises", "ngadto"].map(String::from).into();
    let table = build_translation_table(&pairs, &watch, &config)?;
    print!("{}", table.to_tsv());

    for found in detect_inconsistencies(&table, 10) {
        println!("{}: {} occurrences, {} untranslated", found.source_word, found.total_occurrences, found.none_count);
    }

    let god = select_canonical(&table, "dios")?;
    let go = select_canonical(&table, "ngadto")?;
    println!("canonical: dios -> {god}, ngadto -> {go}");

    let names = CanonicalizationRule::names("dios", god.clone(), ["panginoon"])?;
    let verbs = CanonicalizationRule::verbs("ngadto", go, ["pumaroon", "yumaon"])?;
    let (pairs, name_changes) = canonicalize_names(pairs, &names)?;
    let (pairs, verb_changes) = canonicalize_verbs(pairs, &verbs)?;
    println!("{} name changes, {} verb changes", name_changes.len(), verb_changes.len());

    let missing = pairs.iter().filter(|p| p.source.contains_token("dios") && !p.target.contains_token(&god)).count();
    assert_eq!(missing, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> parcorp::Result<()> {
    run_example()
}
