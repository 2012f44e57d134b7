//! Instance generation, file formats, experiment runs and result tables.

mod config;
mod experiment;
mod generators;
mod graph_io;
mod instance_file;
mod tables;

pub use config::{
    load_config, parse_config, AlgorithmKind, ConvexGsemoSection, ConvexMuEaSection,
    ExperimentConfig, ProblemSpec, RandomGraph, TableFormat, DEFAULT_BETAS, DEFAULT_BUDGET,
    PAPER_BUDGET,
};
pub use experiment::{mean_std, run_experiment, AlgorithmStats, ExperimentReport, ResultRow};
pub use generators::{
    classify_instance_i, erdos_renyi, gen_domset_setting, gen_instance_i, instance_i_k,
    random_uniform_instance, DomsetSetting, InstanceIOutcome,
};
pub use graph_io::{load_graph, parse_graph, write_edge_list, GraphFormat, LoadedGraph};
pub use instance_file::{parse_instance, read_instance, render_instance, write_instance, Instance};
pub use tables::{
    emit_tables, parse_csv, read_csv, render_csv, render_markdown, render_table, CSV_HEADER,
};
