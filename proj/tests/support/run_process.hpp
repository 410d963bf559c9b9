#pragma once

// Runs a shell command and captures its exit status, stdout and stderr.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testing_support {

struct ProcessResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string r = "'";
    for (char c : s) {
        if (c == '\'') {
            r += "'\\''";
        } else {
            r += c;
        }
    }
    return r + "'";
}

inline ProcessResult run_process(const std::string& command) {
    namespace fs = std::filesystem;
    static int counter = 0;
    const fs::path err_path =
        fs::temp_directory_path() / ("skein_stderr_" + std::to_string(::getpid()) + "_" +
                                     std::to_string(counter++) + ".txt");
    const std::string full = command + " 2>" + shell_quote(err_path.string());
    FILE* pipe = ::popen(full.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    ProcessResult r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(err_path);
    std::ostringstream es;
    es << in.rdbuf();
    r.err = es.str();
    std::error_code ec;
    fs::remove(err_path, ec);
    return r;
}

}  // namespace testing_support
