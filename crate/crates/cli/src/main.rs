fn main() -> std::process::ExitCode {
    lietame_cli::main_with_args()
}
