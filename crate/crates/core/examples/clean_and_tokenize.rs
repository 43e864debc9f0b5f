// Cleaning and tokenizing raw verse text.
//
// ```bash
// cargo run --example clean_and_tokenize
// ```

use parcorp::{clean, detokenize, tokenize, PipelineConfig, Sentence};

pub fn run_example() -> parcorp::Result<()> {
    let config = PipelineConfig::default();
    let raw = "  Ug si <i>Faraon</i> nagdamgo:\tAng damgo\u{0007} ni Faraon, siya'y nagbarog sa Nilo. ";

    let cleaned = clean(raw);
    println!("cleaned:   {cleaned}");
    let tokens = tokenize(&cleaned, &config);
    println!("tokens:    {tokens:?}");
    let line = detokenize(&tokens);
    println!("spaced:    {line}");
    // tokenizing the spaced form again gives the same tokens
    assert_eq!(tokenize(&line, &config), tokens);

    let keep_case = PipelineConfig { lowercase: false, ..PipelineConfig::default() };
    let sentence = Sentence::new(raw, &keep_case);
    println!("with case: {}", detokenize(sentence.tokens()));
    assert!(sentence.contains_token("siya'y"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> parcorp::Result<()> {
    run_example()
}
