#pragma once

// Test-only helpers: independent oracles and a runner for the CLI binary.
// The oracles deliberately take different computational routes from the
// library so that agreement is meaningful.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

namespace support {

using int64 = std::int64_t;

// Forward convergent recurrence: h_k = a_k h_{k-1} + h_{k-2}. The library
// evaluates continued fractions backwards, so this is an independent route.
inline std::pair<int64, int64> convergent_value(const std::vector<int64>& entries) {
    int64 h_prev = 1, h_prev2 = 0;  // numerators
    int64 k_prev = 0, k_prev2 = 1;  // denominators
    for (int64 a : entries) {
        int64 h = a * h_prev + h_prev2;
        int64 k = a * k_prev + k_prev2;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    return {h_prev, k_prev};
}

inline int64 brute_mod_inverse(int64 q, int64 p) {
    for (int64 k = 1; k < p; ++k)
        if ((q * k) % p == 1) return k;
    return 0;
}

// All canonical continued fractions (a_1 >= 2, a_n >= 2, n >= 2) with entry
// sum at most max_sum, visited in a deterministic order.
inline void for_each_canonical_cf(int64 max_sum,
                                  const std::function<void(const std::vector<int64>&)>& visit) {
    std::vector<int64> prefix;
    std::function<void(int64)> extend = [&](int64 sum) {
        for (int64 last = 2; sum + last <= max_sum; ++last) {
            prefix.push_back(last);
            visit(prefix);
            prefix.pop_back();
        }
        for (int64 mid = 1; sum + mid + 2 <= max_sum; ++mid) {
            prefix.push_back(mid);
            extend(sum + mid);
            prefix.pop_back();
        }
    };
    for (int64 first = 2; first + 2 <= max_sum; ++first) {
        prefix.push_back(first);
        extend(first);
        prefix.pop_back();
    }
}

struct cli_result {
    int status;
    std::string out;
    std::string err;
};

inline std::string read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::filesystem::path temp_file(const std::string& tag) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("twobridge_test_" + std::to_string(::getpid()) + "_" + tag + "_" +
            std::to_string(counter++));
}

// Runs the built CLI with the given argument string, capturing stdout,
// stderr and the exit status.
inline cli_result run_cli(const std::string& args) {
    auto out_path = temp_file("out");
    auto err_path = temp_file("err");
    std::string cmd = std::string("\"") + TWOBRIDGE_CLI_PATH + "\" " + args + " >" +
                      out_path.string() + " 2>" + err_path.string();
    int rc = std::system(cmd.c_str());
    cli_result result;
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    result.out = read_all(out_path);
    result.err = read_all(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return result;
}

inline std::filesystem::path write_temp_file(const std::string& tag, const std::string& content) {
    auto path = temp_file(tag);
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace support
