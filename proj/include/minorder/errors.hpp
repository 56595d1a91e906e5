#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace minorder {

// Bad caller input: malformed files, out-of-range vertices, violated
// preconditions, refused brute-force sizes. The CLI maps these to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction produced something its own validator rejects. Callers are
// never expected to see this; the CLI maps it to exit code 3.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct NotBipartiteError : InputError {
    NotBipartiteError(const std::string& msg, std::vector<int> cycle)
        : InputError(msg), odd_cycle(std::move(cycle)) {}
    std::vector<int> odd_cycle;
};

struct NotOneDirectionalError : InputError {
    NotOneDirectionalError(const std::string& msg, int from_, int to_)
        : InputError(msg), from(from_), to(to_) {}
    int from;
    int to;
};

}  // namespace minorder
