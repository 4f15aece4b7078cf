//! A user-supplied graph in the plain-text format. The Petersen graph is
//! written out as the Kneser graph on 2-subsets of `{0..5}`, with the
//! 5-cycle and a transposition of the underlying points as generators.

use std::error::Error;
use std::fmt::Write;

use gfrust::graph::{check_symmetric_graph, parse_symmetric_graph, to_text};
use gfrust::solver::emax_for_custom_graph;

fn petersen_text() -> String {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let index = |a: usize, b: usize| {
        let key = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == key).unwrap()
    };
    let mut text = format!("# Kneser graph K(5,2)\nn {}\n", pairs.len());
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                writeln!(text, "e {i} {j}").unwrap();
            }
        }
    }
    let point_maps: [fn(usize) -> usize; 2] = [|x| (x + 1) % 5, |x| [1, 0, 2, 3, 4][x]];
    for f in point_maps {
        let images: Vec<String> = pairs
            .iter()
            .map(|&(a, b)| index(f(a), f(b)).to_string())
            .collect();
        writeln!(text, "g {}", images.join(" ")).unwrap();
    }
    text
}

pub fn run() -> Result<(), Box<dyn Error>> {
    let mut g = parse_symmetric_graph(&petersen_text())?;
    g.set_label("petersen");
    let sym = check_symmetric_graph(&g)?;
    println!("{sym:?}");
    let r = emax_for_custom_graph(&g)?;
    println!(
        "{}: N={} d={} E0={:.12} E_max={:.6} ebits ({})",
        r.graph,
        r.n,
        r.degree,
        r.e0,
        r.e_max,
        r.method.tag()
    );
    print!("{}", to_text(&g));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
