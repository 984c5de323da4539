#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cc3d {

// Error type carrying a short machine-readable code plus a human message.
// Codes are stable strings used by tests and the CLI ("EmptyScene",
// "UnknownInstance", "NonFiniteLoss", ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool cond, const std::string& code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;
using u8 = std::uint8_t;

}  // namespace cc3d
