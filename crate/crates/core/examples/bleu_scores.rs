// Corpus-level and smoothed sentence-level BLEU.
//
// ```bash
// cargo run --example bleu_scores
// ```

use parcorp::eval::{bleu_corpus, bleu_sentence};
use parcorp::{tokenize, PipelineConfig};

pub fn run_example() -> parcorp::Result<()> {
    let config = PipelineConfig::default();
    let lines = |text: &[&str]| text.iter().map(|l| tokenize(l, &config)).collect::<Vec<_>>();
    let references = lines(&[
        "At nagkahapon at nagkaumaga ang ikatlong araw.",
        "At sinabi ng Dios, Magkaroon ng liwanag: at nagkaroon ng liwanag.",
        "Siya'y lumakad sa lupain.",
    ]);
    let hypotheses = lines(&[
        "At nagkahapon at nagkaumaga ang ikatlong araw.",
        "At sinabi ng Panginoon, Magkaroon ng liwanag.",
        "Lumakad siya sa lupain.",
    ]);

    println!("{}", bleu_corpus(&hypotheses, &references)?);
    for (h, r) in hypotheses.iter().zip(&references) {
        println!("{:>6}  {}", bleu_sentence(h, r)?.display_score(), h.join(" "));
    }

    let short = bleu_corpus(&[vec!["a", "b", "c", "d"]], &[vec!["a", "b", "c", "d", "e"]])?;
    println!("brevity penalty {:.4} -> {}", short.brevity_penalty, short.display_score());
    Ok(())
}

#[allow(dead_code)]
fn main() -> parcorp::Result<()> {
    run_example()
}
