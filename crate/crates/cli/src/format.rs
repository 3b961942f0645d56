//! Line-oriented definition files.
//!
//! ```text
//! # comment
//! algebra broken
//! elements O I
//! zero O
//! one I
//! wedge
//! O O O
//! ...
//! vee
//! ...
//! complement      # optional
//! O I
//! I O
//! end
//!
//! lattice diamond
//! elements 0 a b 1
//! cover 0 a
//! ...
//! end
//!
//! family F
//! universe x1 x2
//! assign x1 classical2
//! assign x2 diamond
//! end
//!
//! set A over F
//! x1 I
//! x2 a
//! end
//! ```
//!
//! Names must be defined before use; built-in algebras are always visible.

use std::sync::Arc;

use modset::{
    Algebra, AlgebraFamily, AlgebraKind, FiniteAlgebraTable, FiniteLattice, ModernSet, Universe,
};

use crate::error::CliError;
use crate::workspace::{parse_element, Workspace};

pub fn load_file(ws: &mut Workspace, path: &str) -> Result<(), CliError> {
    let src = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })?;
    load_str(ws, path, &src)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Wedge,
    Vee,
    Complement,
}

#[derive(Default)]
struct AlgebraBlock {
    elements: Option<Vec<String>>,
    zero: Option<String>,
    one: Option<String>,
    wedge: Vec<(String, String, String)>,
    vee: Vec<(String, String, String)>,
    complement: Option<Vec<(String, String)>>,
}

enum Block {
    Algebra {
        name: String,
        body: AlgebraBlock,
        section: Section,
    },
    Lattice {
        name: String,
        elements: Option<Vec<String>>,
        covers: Vec<(String, String)>,
    },
    Family {
        name: String,
        universe: Option<Vec<String>>,
        assign: Vec<(String, String)>,
    },
    Set {
        name: String,
        family: String,
        rows: Vec<(String, String)>,
    },
}

struct Loader<'a> {
    path: &'a str,
    line: usize,
}

impl Loader<'_> {
    fn err(&self, message: impl Into<String>) -> CliError {
        CliError::Syntax {
            path: self.path.to_string(),
            line: self.line,
            message: message.into(),
        }
    }

    fn once<T>(&self, slot: &mut Option<T>, key: &str, value: T) -> Result<(), CliError> {
        if slot.replace(value).is_some() {
            return Err(self.err(format!("`{key}` given twice")));
        }
        Ok(())
    }

    fn header(&self, words: &[&str]) -> Result<Block, CliError> {
        match words {
            ["algebra", name] => Ok(Block::Algebra {
                name: name.to_string(),
                body: AlgebraBlock::default(),
                section: Section::None,
            }),
            ["lattice", name] => Ok(Block::Lattice {
                name: name.to_string(),
                elements: None,
                covers: Vec::new(),
            }),
            ["family", name] => Ok(Block::Family {
                name: name.to_string(),
                universe: None,
                assign: Vec::new(),
            }),
            ["set", name, "over", family] => Ok(Block::Set {
                name: name.to_string(),
                family: family.to_string(),
                rows: Vec::new(),
            }),
            _ => Err(self.err(format!(
                "expected `algebra`, `lattice`, `family` or `set ... over ...`, found `{}`",
                words.join(" ")
            ))),
        }
    }

    /// Adds one body line to `block`. `raw` is the comment-stripped line.
    fn body(&self, block: &mut Block, words: &[&str], raw: &str) -> Result<(), CliError> {
        let owned = |ws: &[&str]| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>();
        match block {
            Block::Algebra { body, section, .. } => match words {
                ["elements", rest @ ..] if !rest.is_empty() => {
                    self.once(&mut body.elements, "elements", owned(rest))
                }
                ["zero", z] => self.once(&mut body.zero, "zero", z.to_string()),
                ["one", o] => self.once(&mut body.one, "one", o.to_string()),
                ["wedge"] => {
                    *section = Section::Wedge;
                    Ok(())
                }
                ["vee"] => {
                    *section = Section::Vee;
                    Ok(())
                }
                ["complement"] => {
                    *section = Section::Complement;
                    self.once(&mut body.complement, "complement", Vec::new())
                }
                [a, b, c] if matches!(*section, Section::Wedge | Section::Vee) => {
                    let row = (a.to_string(), b.to_string(), c.to_string());
                    match section {
                        Section::Wedge => body.wedge.push(row),
                        _ => body.vee.push(row),
                    }
                    Ok(())
                }
                [a, b] if *section == Section::Complement => {
                    if let Some(rows) = body.complement.as_mut() {
                        rows.push((a.to_string(), b.to_string()));
                    }
                    Ok(())
                }
                _ => Err(self.err(format!(
                    "unexpected line `{}` in algebra block",
                    words.join(" ")
                ))),
            },
            Block::Lattice {
                elements, covers, ..
            } => match words {
                ["elements", rest @ ..] if !rest.is_empty() => {
                    self.once(elements, "elements", owned(rest))
                }
                ["cover", lo, hi] => {
                    covers.push((lo.to_string(), hi.to_string()));
                    Ok(())
                }
                _ => Err(self.err(format!(
                    "unexpected line `{}` in lattice block",
                    words.join(" ")
                ))),
            },
            Block::Family {
                universe, assign, ..
            } => match words {
                ["universe", rest @ ..] if !rest.is_empty() => {
                    self.once(universe, "universe", owned(rest))
                }
                ["assign", pt, alg] => {
                    assign.push((pt.to_string(), alg.to_string()));
                    Ok(())
                }
                _ => Err(self.err(format!(
                    "unexpected line `{}` in family block",
                    words.join(" ")
                ))),
            },
            Block::Set { rows, .. } => {
                let point = words[0];
                let literal = raw.trim()[point.len()..].trim();
                if literal.is_empty() {
                    return Err(self.err(format!("point `{point}` has no value")));
                }
                rows.push((point.to_string(), literal.to_string()));
                Ok(())
            }
        }
    }

    fn finish(&self, ws: &mut Workspace, block: Block) -> Result<(), CliError> {
        let core = |e: modset::Error| self.err(e.to_string());
        let named = |e: CliError| self.err(e.to_string());
        match block {
            Block::Algebra { name, body, .. } => {
                let missing = |key: &str| self.err(format!("algebra `{name}` has no `{key}` line"));
                let elements = body.elements.ok_or_else(|| missing("elements"))?;
                let zero = body.zero.ok_or_else(|| missing("zero"))?;
                let one = body.one.ok_or_else(|| missing("one"))?;
                let table = FiniteAlgebraTable::new(
                    &elements,
                    &zero,
                    &one,
                    &body.wedge,
                    &body.vee,
                    body.complement.as_deref(),
                )
                .map_err(core)?;
                ws.add_algebra(Algebra::new(name, AlgebraKind::Table(table)).map_err(core)?)
                    .map_err(named)
            }
            Block::Lattice {
                name,
                elements,
                covers,
            } => {
                let elements = elements
                    .ok_or_else(|| self.err(format!("lattice `{name}` has no `elements` line")))?;
                let lattice = FiniteLattice::from_hasse(&elements, &covers).map_err(core)?;
                ws.add_lattice(&name, lattice).map_err(named)
            }
            Block::Family {
                name,
                universe,
                assign,
            } => {
                let points = universe
                    .ok_or_else(|| self.err(format!("family `{name}` has no `universe` line")))?;
                let universe = Universe::new(&points).map_err(core)?;
                let mut slots = vec![None; points.len()];
                for (pt, alg) in &assign {
                    let i = universe.index_of(pt).map_err(core)?;
                    if slots[i].is_some() {
                        return Err(self.err(format!("point `{pt}` assigned twice")));
                    }
                    slots[i] = Some(ws.algebra(alg).map_err(named)?);
                }
                let algebras = slots
                    .into_iter()
                    .zip(&points)
                    .map(|(a, p)| a.ok_or_else(|| self.err(format!("point `{p}` has no algebra"))))
                    .collect::<Result<Vec<_>, _>>()?;
                let family = AlgebraFamily::new(universe, algebras).map_err(core)?;
                ws.add_family(&name, family).map_err(named)
            }
            Block::Set { name, family, rows } => {
                let fam: Arc<AlgebraFamily> = ws.family(&family).map_err(named)?;
                let mut pairs = Vec::with_capacity(rows.len());
                for (pt, literal) in rows {
                    let alg = fam.algebra_at(&pt).map_err(core)?;
                    let value = parse_element(alg, &literal)
                        .map_err(|m| self.err(format!("set `{name}`, point `{pt}`: {m}")))?;
                    pairs.push((pt, value));
                }
                let set = ModernSet::from_pairs(fam, pairs).map_err(core)?;
                ws.add_set(&name, &family, set).map_err(named)
            }
        }
    }
}

/// Loads definitions from `src`; `path` only labels error messages.
pub fn load_str(ws: &mut Workspace, path: &str, src: &str) -> Result<(), CliError> {
    let mut loader = Loader { path, line: 0 };
    let mut open: Option<(usize, Block)> = None;
    for (i, raw) in src.lines().enumerate() {
        loader.line = i + 1;
        let text = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = text.split_whitespace().collect();
        if words.is_empty() {
            continue;
        }
        match open.as_mut() {
            None => open = Some((loader.line, loader.header(&words)?)),
            Some(_) if words == ["end"] => {
                let (_, block) = open.take().expect("block is open");
                loader.finish(ws, block)?;
            }
            Some((_, block)) => loader.body(block, &words, text)?,
        }
    }
    if let Some((start, _)) = open {
        loader.line = start;
        return Err(loader.err("block is never closed with `end`"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOOD: &str = "\
# two-element algebra with a reversed vee row order
algebra b2
elements O I
zero O
one I
wedge
O O O
O I O
I O O
I I I
vee
I I I
O O O
O I I
I O I
complement
O I
I O
end

lattice diamond
elements 0 a b 1
cover 0 a
cover 0 b
cover a 1
cover b 1
end

family F
universe p q
assign p b2
assign q diamond
end

set A over F
p I
q a   # trailing comment
end

set M over mat2^1
x1 [[1, 2], [3, 4]]
end
";

    #[test]
    fn loads_every_kind() {
        let mut ws = Workspace::new();
        load_str(&mut ws, "good", GOOD).unwrap();
        assert_eq!(ws.items().len(), 5);
        assert_eq!(ws.set("A").unwrap().set.to_string(), "{p: I, q: a}");
        assert_eq!(ws.algebra("diamond").unwrap().name(), "diamond");
    }

    fn error_line(src: &str) -> usize {
        match load_str(&mut Workspace::new(), "t", src) {
            Err(CliError::Syntax { line, .. }) => line,
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn partial_tables_are_rejected() {
        let src = "algebra p\nelements O I\nzero O\none I\nwedge\nO O O\nvee\nO O O\nend\n";
        assert_eq!(error_line(src), 9);
    }

    #[test]
    fn structural_errors_carry_lines() {
        assert_eq!(error_line("bogus line\n"), 1);
        assert_eq!(error_line("\n\nlattice l\nelements a\n"), 3);
        assert_eq!(error_line("set S over nowhere\nx1 I\nend\n"), 3);
        assert_eq!(
            error_line("family F\nuniverse a b\nassign a fuzzy\nend\n"),
            4
        );
        assert_eq!(error_line("set S over mat2^1\nx1 [[2,0],[0,2]]\nend\n"), 3);
        assert_eq!(
            error_line("lattice v\nelements 0 a b\ncover 0 a\ncover 0 b\nend\n"),
            5
        );
    }
}
