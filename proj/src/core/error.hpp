#pragma once

#include <stdexcept>
#include <string>

namespace sarchroma {

enum class ErrorCode {
    argument = 1,  // caller passed an invalid value or violated a precondition
    format = 2,    // file contents do not match the container / scene grammar
    io = 3,        // the operating system refused a read or write
    domain = 4,    // the math is undefined for this input (not a usage bug)
    internal = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace sarchroma
