use inconic::cli;
use inconic::Tolerances;

fn main() {
    let env_tol = std::env::var(Tolerances::ENV_VAR).ok();
    let code = cli::run(
        std::env::args_os(),
        env_tol.as_deref(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    std::process::exit(code);
}
