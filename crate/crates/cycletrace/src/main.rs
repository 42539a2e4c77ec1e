use clap::Parser;
use cycletrace::cli::{run, Cli};

fn main() {
    // die quietly when the consumer closes the pipe (e.g. `| head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    std::process::exit(run(cli));
}
