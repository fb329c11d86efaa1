#pragma once

#include <stdexcept>
#include <string>

namespace ogr {

enum class Errc {
    argument,
    dimension,
    not_skew,
    domain,
    not_in_chart,
    limit,
    not_recognized,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ogr
