// Subprocess helpers for the CLI-level tests: run the built tool, capture
// stdout/stderr/exit code, and read golden files.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace freepairs::testing {

struct RunResult {
    std::string out;
    std::string err;
    int code = -1;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << data;
}

inline const std::string& cli_path() {
    static const std::string path = [] {
        if (const char* env = std::getenv("FREEPAIRS_CLI")) return std::string(env);
        return read_file(FREEPAIRS_CLI_PATH_FILE);
    }();
    return path;
}

inline std::string golden_path(const std::string& name) {
    return std::string(FREEPAIRS_GOLDEN_DIR) + "/" + name;
}

inline std::string work_path(const std::string& name) {
    return std::string(FREEPAIRS_WORK_DIR) + "/" + name;
}

// args is a shell fragment; inputs in this suite never contain single quotes.
inline RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    static int counter = 0;
    const std::string tag = std::to_string(++counter);
    const std::string in_file = work_path("cli_in_" + tag);
    const std::string out_file = work_path("cli_out_" + tag);
    const std::string err_file = work_path("cli_err_" + tag);
    write_file(in_file, stdin_data);

    const std::string command = "'" + cli_path() + "' " + args + " < '" + in_file + "' > '" +
                                out_file + "' 2> '" + err_file + "'";
    const int status = std::system(command.c_str());

    RunResult r;
    r.out = read_file(out_file);
    r.err = read_file(err_file);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::remove(in_file.c_str());
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

}  // namespace freepairs::testing
