//! Arc diagrams for juggling patterns, in ASCII and SVG.
//!
//! The pattern is unrolled over `periods` repetitions into beats
//! `0, 1, ..., periods * n - 1`. Every beat strictly before the last whose
//! throw height is positive contributes an arc from its beat to the beat it
//! lands on; arcs that land past the rendered window are drawn clipped at
//! the right edge but keep their true landing beat in the summary. Invalid
//! patterns still render, with a note naming the first pair of beats whose
//! throws collide.
//!
//! Both renderers are deterministic byte for byte: same word, same
//! `periods`, same output.

use std::fmt::Write as _;

use crate::error::ParameterError;
use crate::juggling::{validate_juggling, JugglingSequence};
use crate::word::Word;

/// One throw in the unrolled pattern: launched at beat `from`, landing at
/// beat `to = from + height`. `clipped` marks arcs whose landing lies past
/// the rendered window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub clipped: bool,
}

/// Unrolls a pattern into its arcs. Returns the arcs in beat order
/// together with the index of the last rendered beat.
pub fn diagram_arcs(word: &Word, periods: usize) -> Result<(Vec<Arc>, usize), ParameterError> {
    if periods == 0 {
        return Err(ParameterError::ZeroPeriod);
    }
    let n = word.len();
    let last = periods * n - 1;
    let mut arcs = Vec::new();
    for from in 0..last {
        let height = word.get(from % n).expect("index reduced") as usize;
        if height > 0 {
            let to = from + height;
            arcs.push(Arc {
                from,
                to,
                clipped: to > last,
            });
        }
    }
    Ok((arcs, last))
}

/// First throw collision in the unrolled window, as the two beats and their
/// shared landing beat.
fn first_collision(word: &Word, last: usize) -> Option<(usize, usize, usize)> {
    let n = word.len();
    let mut landings: Vec<Option<usize>> = vec![None; last + last.max(1) + n];
    for from in 0..=last {
        let height = word.get(from % n).expect("index reduced") as usize;
        if height == 0 {
            continue;
        }
        let to = from + height;
        if to >= landings.len() {
            continue;
        }
        match landings[to] {
            Some(earlier) => return Some((earlier, from, to)),
            None => landings[to] = Some(from),
        }
    }
    None
}

/// Compact siteswap notation when every height is a single digit, the
/// space-separated form otherwise.
pub fn pattern_name(word: &Word) -> String {
    if word.symbols().iter().all(|&t| t <= 9) {
        word.symbols().iter().map(|t| t.to_string()).collect()
    } else {
        word.to_string()
    }
}

fn headline(word: &Word, periods: usize, last: usize) -> String {
    let name = pattern_name(word);
    let period_phrase = format!("{periods} period{}", if periods == 1 { "" } else { "s" });
    if validate_juggling(word) {
        let balls = JugglingSequence::new(word.clone())
            .expect("validated")
            .ball_count();
        let ball_phrase = format!("{balls} ball{}", if balls == 1 { "" } else { "s" });
        format!("pattern {name}, {ball_phrase}, {period_phrase}")
    } else {
        let detail = match first_collision(word, last) {
            Some((a, b, at)) => format!(": beats {a} and {b} both land at beat {at}"),
            None => String::new(),
        };
        format!("pattern {name}, {period_phrase} (not a valid juggling sequence{detail})")
    }
}

fn arc_summary(arcs: &[Arc]) -> String {
    if arcs.is_empty() {
        return "arcs: none".into();
    }
    let mut out = String::from("arcs: ");
    for (i, arc) in arcs.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{}->{}", arc.from, arc.to);
        if arc.clipped {
            out.push_str(" (clipped)");
        }
    }
    out
}

/// Renders the pattern as stacked ASCII arcs over a row of throw heights.
pub fn ascii_diagram(word: &Word, periods: usize) -> Result<String, ParameterError> {
    let (arcs, last) = diagram_arcs(word, periods)?;
    let n = word.len();
    let col = |beat: usize| 4 * beat;
    let labels: Vec<String> = (0..=last)
        .map(|i| word.get(i % n).expect("index reduced").to_string())
        .collect();
    let width = col(last) + labels[last].len() + 1;

    // Column span each arc occupies, clipped arcs running off the edge.
    let span = |arc: &Arc| {
        let start = col(arc.from) + 1;
        let end = if arc.clipped { width - 1 } else { col(arc.to) - 1 };
        (start, end)
    };

    // Stack short arcs low: sort by span length, placing each arc in the
    // lowest row where it fits.
    let mut order: Vec<&Arc> = arcs.iter().collect();
    order.sort_by_key(|arc| {
        let (start, end) = span(arc);
        (end - start, arc.from)
    });
    let mut rows: Vec<Vec<(usize, usize, bool)>> = Vec::new();
    for arc in order {
        let (start, end) = span(arc);
        let row = rows
            .iter()
            .position(|row| row.iter().all(|&(s, e, _)| end < s || e < start))
            .unwrap_or_else(|| {
                rows.push(Vec::new());
                rows.len() - 1
            });
        rows[row].push((start, end, arc.clipped));
    }

    let mut out = headline(word, periods, last);
    out.push_str("\n\n");
    for row in rows.iter().rev() {
        let mut line = vec![' '; width];
        for &(start, end, clipped) in row {
            line[start] = '/';
            for cell in line.iter_mut().take(end).skip(start + 1) {
                *cell = '_';
            }
            line[end] = if clipped { '_' } else { '\\' };
        }
        let text: String = line.into_iter().collect();
        out.push_str(text.trim_end());
        out.push('\n');
    }
    let mut label_row = String::new();
    for (i, label) in labels.iter().enumerate() {
        while label_row.len() < col(i) {
            label_row.push(' ');
        }
        label_row.push_str(label);
    }
    out.push_str(&label_row);
    out.push_str("\n\n");
    out.push_str(&arc_summary(&arcs));
    out.push('\n');
    Ok(out)
}

/// Renders the pattern as an SVG ladder of quadratic arcs, each peaking in
/// proportion to its throw height. Clipped arcs are subdivided exactly at
/// the right edge.
pub fn svg_diagram(word: &Word, periods: usize) -> Result<String, ParameterError> {
    let (arcs, last) = diagram_arcs(word, periods)?;
    let n = word.len();
    let x = |beat: usize| 20.0 + 40.0 * beat as f64;
    let t_max = arcs
        .iter()
        .map(|arc| arc.to - arc.from)
        .max()
        .unwrap_or(1)
        .max(1);
    let width = 40 * last + 40;
    let y_base = (12 * t_max + 40) as f64;
    let height = y_base as usize + 40;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(out, "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>");
    let _ = writeln!(
        out,
        "<text x=\"16\" y=\"20\" font-family=\"monospace\" font-size=\"12\" fill=\"#333\">{}</text>",
        headline(word, periods, last)
    );

    for arc in &arcs {
        let t = (arc.to - arc.from) as f64;
        let (x0, y0) = (x(arc.from), y_base);
        let (x2, y2) = (x(arc.to), y_base);
        let (x1, y1) = ((x0 + x2) / 2.0, y_base - 24.0 * t);
        let d = if arc.clipped {
            // The control point sits midway in x, so the curve's x is
            // linear in the parameter and the edge crossing is exact.
            let edge = (width - 4) as f64;
            let u = (edge - x0) / (x2 - x0);
            let lerp = |a: f64, b: f64| a + u * (b - a);
            let (qx1, qy1) = (lerp(x0, x1), lerp(y0, y1));
            let (mx, my) = (lerp(x1, x2), lerp(y1, y2));
            let (qx2, qy2) = (lerp(qx1, mx), lerp(qy1, my));
            format!("M {x0:.1} {y0:.1} Q {qx1:.1} {qy1:.1} {qx2:.1} {qy2:.1}")
        } else {
            format!("M {x0:.1} {y0:.1} Q {x1:.1} {y1:.1} {x2:.1} {y2:.1}")
        };
        let _ = writeln!(
            out,
            "<path d=\"{d}\" fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\"/>"
        );
    }

    for beat in 0..=last {
        let _ = writeln!(
            out,
            "<circle cx=\"{:.1}\" cy=\"{y_base:.1}\" r=\"3\" fill=\"#333\"/>",
            x(beat)
        );
    }
    for beat in 0..=last {
        let _ = writeln!(
            out,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"12\" \
             fill=\"#333\" text-anchor=\"middle\">{}</text>",
            x(beat),
            y_base + 20.0,
            word.get(beat % n).expect("index reduced")
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn arcs_unroll_with_clipping_at_the_window_edge() {
        let (arcs, last) = diagram_arcs(&w("015"), 3).unwrap();
        assert_eq!(last, 8);
        let expected = [
            (1, 2, false),
            (2, 7, false),
            (4, 5, false),
            (5, 10, true),
            (7, 8, false),
        ];
        let got: Vec<(usize, usize, bool)> =
            arcs.iter().map(|a| (a.from, a.to, a.clipped)).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn zero_heights_throw_no_arcs() {
        let (arcs, last) = diagram_arcs(&w("0"), 1).unwrap();
        assert_eq!(last, 0);
        assert!(arcs.is_empty());
        let text = ascii_diagram(&w("0"), 1).unwrap();
        assert!(text.contains("arcs: none"));
        assert!(text.contains("0 balls"));
    }

    #[test]
    fn zero_periods_are_rejected() {
        assert!(matches!(
            diagram_arcs(&w("3"), 0),
            Err(ParameterError::ZeroPeriod)
        ));
    }

    #[test]
    fn ascii_layout_is_frozen_for_the_canonical_pattern() {
        let text = ascii_diagram(&w("015"), 3).unwrap();
        let expected = "pattern 015, 2 balls, 3 periods\n\
                        \n\
                        \x20        /_________________\\\n\
                        \x20                    /____________\n\
                        \x20    /_\\         /_\\         /_\\\n\
                        0   1   5   0   1   5   0   1   5\n\
                        \n\
                        arcs: 1->2, 2->7, 4->5, 5->10 (clipped), 7->8\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn ascii_notes_the_first_collision_of_an_invalid_pattern() {
        let text = ascii_diagram(&w("105"), 3).unwrap();
        assert!(
            text.contains("not a valid juggling sequence: beats 2 and 6 both land at beat 7"),
            "{text}"
        );
        // It still draws the throws it was given.
        assert!(text.contains("arcs: 0->1, 2->7, 3->4, 5->10 (clipped), 6->7"));
    }

    #[test]
    fn renderers_are_deterministic() {
        for word in ["015", "441", "105", "0"] {
            let a = ascii_diagram(&w(word), 4).unwrap();
            let b = ascii_diagram(&w(word), 4).unwrap();
            assert_eq!(a, b);
            let c = svg_diagram(&w(word), 4).unwrap();
            let d = svg_diagram(&w(word), 4).unwrap();
            assert_eq!(c, d);
        }
    }

    #[test]
    fn svg_structure_for_a_single_arc() {
        let svg = svg_diagram(&w("1"), 2).unwrap();
        assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"80\" height=\"92\""));
        assert!(svg.contains("pattern 1, 1 ball, 2 periods"));
        assert!(svg.contains("<path d=\"M 20.0 52.0 Q 40.0 28.0 60.0 52.0\""));
        assert_eq!(svg.matches("<circle").count(), 2);
        assert_eq!(svg.matches("text-anchor").count(), 2);
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn clipped_svg_arcs_stop_at_the_right_edge() {
        let svg = svg_diagram(&w("015"), 3).unwrap();
        assert_eq!(svg.matches("<path").count(), 5);
        // The clipped arc from beat 5 would land at x = 420; its subdivided
        // endpoint must sit exactly on the edge at width - 4 = 356.
        assert!(svg.contains("356.0"), "{svg}");
        assert!(!svg.contains("420.0"), "{svg}");
        assert!(!svg.contains("NaN"));
    }
}
