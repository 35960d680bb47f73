//! Edge-list files: write, read back, and reject malformed input.

use additive_spanner::{parse_edge_list, random_weighted_graph, read_edge_list, write_edge_list};

fn main() -> additive_spanner::Result<()> {
    let g = random_weighted_graph(6, 8, 1.0, 3.0, 4)?;
    let path = std::env::temp_dir().join("additive_spanner_example.el");
    write_edge_list(&path, &g)?;
    print!("{}", std::fs::read_to_string(&path).unwrap());
    assert_eq!(read_edge_list(&path)?, g);
    std::fs::remove_file(&path).ok();

    for bad in [
        "3 1\n0 0\n",
        "3 2\n0 1\n1 0\n",
        "2 1\n0 5\n",
        "2 1\n0 1 -2\n",
        "3 2\n0 1\n",
    ] {
        println!("{:?} -> {}", bad, parse_edge_list(bad).unwrap_err());
    }
    Ok(())
}
