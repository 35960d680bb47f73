fn main() -> std::process::ExitCode {
    additive_spanner::cli::main()
}
