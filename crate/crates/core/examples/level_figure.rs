//! Level spectra at the rigid point, written as CSV for plotting.
use hedge_iep::io::write_csv;
use hedge_iep::rigid::{level_figure_data, solve_rigid};
use hedge_iep::scalar::fmt_f64;

fn main() -> hedge_iep::Result<()> {
    let fig = level_figure_data(&solve_rigid(0)?, 40)?;
    let rows: Vec<Vec<String>> = fig
        .points
        .iter()
        .map(|p| vec![p.level.to_string(), p.index.to_string(), fmt_f64(p.value)])
        .collect();
    let out = std::env::temp_dir().join("levels.csv");
    write_csv(&out, &["level", "index", "value"], &rows)?;
    println!("{} points to {}", rows.len(), out.display());
    println!("b_i > 0: {}, min interlacing gap {:e}", fig.b_positive, fig.min_interlace_gap);
    Ok(())
}
