#pragma once

#include <stdexcept>
#include <string>

namespace crystalline {

// Error kinds shared by every module; the C API maps these 1:1 to status codes.
enum class Errc {
    ok = 0,
    param_mismatch,
    non_unit,
    precision_increase,
    precision_overflow,
    not_a_crystal,
    invalid_slope,
    index_out_of_range,
    not_a_subfield,
    insufficient_precision,
    rank_mismatch,
    cap_exceeded,
    not_stabilized,
    parse_error,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace crystalline
