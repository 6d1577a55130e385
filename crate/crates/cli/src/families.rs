use anyhow::{bail, Result};

use twinedge::{Graph, VertexColoring};

/// A named graph and a proper coloring of it with the fewest colors.
pub fn build(name: &str, args: &[usize]) -> Result<(Graph, VertexColoring)> {
    let size = |min: usize| -> Result<usize> {
        match args {
            [n] if *n >= min => Ok(*n),
            [n] => bail!("{name} needs at least {min} vertices, got {n}"),
            _ => bail!("{name} takes exactly one size argument"),
        }
    };
    let no_args = || -> Result<()> {
        if !args.is_empty() {
            bail!("{name} takes no arguments");
        }
        Ok(())
    };
    let (g, k, colors) = match name {
        "complete" => {
            let n = size(1)?;
            (Graph::complete(n), n, (0..n).collect())
        }
        "cycle" => {
            let n = size(3)?;
            let mut colors: Vec<usize> = (0..n).map(|v| v % 2).collect();
            if n % 2 == 1 {
                colors[n - 1] = 2;
            }
            (Graph::cycle(n), 2 + n % 2, colors)
        }
        "path" => {
            let n = size(1)?;
            let k = if n == 1 { 1 } else { 2 };
            (Graph::path(n), k, (0..n).map(|v| v % 2).collect())
        }
        "petersen" => {
            no_args()?;
            (Graph::petersen(), 3, vec![0, 1, 0, 1, 2, 1, 2, 2, 0, 0])
        }
        "k4k2" => {
            no_args()?;
            let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)];
            (Graph::new(6, edges)?, 4, vec![0, 1, 2, 3, 0, 1])
        }
        other => bail!("unknown family {other:?} (complete, cycle, path, petersen, k4k2)"),
    };
    Ok((g, VertexColoring::new(k, colors)?))
}
