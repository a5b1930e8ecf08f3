use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use monok_core::graph::parse_graph;
use monok_core::{EdgeColouring, Graph, GraphFormat};

use crate::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Edge lists start with the vertex count; graph6 never starts with a digit.
pub fn detect_format(text: &str) -> GraphFormat {
    match text.trim_start().chars().next() {
        Some(c) if c.is_ascii_digit() => GraphFormat::EdgeList,
        _ => GraphFormat::Graph6,
    }
}

pub fn parse_graph_text(text: &str, format: Option<GraphFormat>, origin: &Path) -> Result<Graph, CliError> {
    let format = format.unwrap_or_else(|| detect_format(text));
    parse_graph(text, format).map_err(|e| CliError::Parse { path: origin.to_path_buf(), message: e.to_string() })
}

pub fn load_graph(path: &Path, format: Option<GraphFormat>) -> Result<Graph, CliError> {
    parse_graph_text(&read_text(path)?, format, path)
}

pub fn load_colouring(g: &Graph, path: &Path) -> Result<EdgeColouring, CliError> {
    EdgeColouring::from_csv(g, &read_text(path)?)
        .map_err(|e| CliError::Parse { path: PathBuf::from(path), message: e.to_string() })
}
