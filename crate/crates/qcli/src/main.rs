//! qblocks binary entry point.

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, out, err) = qcli::dispatch(&args);
    if !out.is_empty() {
        if out.ends_with('\n') {
            print!("{out}");
        } else {
            println!("{out}");
        }
    }
    if !err.is_empty() {
        eprint!("{err}");
    }
    std::process::exit(code);
}
