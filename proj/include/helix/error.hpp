#pragma once

#include <stdexcept>
#include <string>

namespace helix {

// Error categories map onto CLI exit codes: usage -> 2, cap -> 3,
// check/internal -> 1.
enum class ErrorKind { usage, cap, check, internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void usage_error(const std::string& msg) { throw Error(ErrorKind::usage, msg); }
[[noreturn]] inline void cap_error(const std::string& msg) { throw Error(ErrorKind::cap, msg); }
[[noreturn]] inline void internal_error(const std::string& msg) { throw Error(ErrorKind::internal, msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) usage_error(msg);
}

} // namespace helix
