//! The matrix document format: write, read back, and reject bad input.
//!
//!     cargo run --example matrix_io

use aous::format::{parse_matrices, parse_matrix, to_json, to_json_pretty};
use aous::models::{generate, SampleRecipe};

fn main() -> aous::Result<()> {
    let recipe: SampleRecipe = "random-hermitian:3:42".parse()?;
    let sample = generate(&recipe)?;
    let h = sample.matrices()[0].clone();
    let text = to_json_pretty(&h);
    println!("{text}");

    let back = parse_matrix(&text)?;
    println!("round trip exact: {}", back == h && to_json(&back) == to_json(&h));

    let pair: SampleRecipe = "commuting-pair:2:1".parse()?;
    let docs: Vec<String> = generate(&pair)?.matrices().iter().map(|m| to_json(m)).collect();
    let array = format!("[{}]", docs.join(","));
    println!("array of {} matrices parsed", parse_matrices(&array)?.len());

    for bad in [
        r#"{"dim": 2, "re": [[1, 2], [3, 4]]}"#,
        r#"{"dim": 2, "re": [[1, 0]]}"#,
        "{\"dim\": 2,\n \"re\": [[1, 0], [0, 1]],\n \"extra\": 1}",
        "{\"dim\": 2, \"re\": [[1, 0],\n [0, 1]",
    ] {
        match parse_matrix(bad) {
            Ok(_) => println!("accepted"),
            Err(e) => println!("rejected: {e}"),
        }
    }
    Ok(())
}
