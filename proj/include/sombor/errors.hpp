#pragma once

#include <stdexcept>
#include <string>

namespace sombor {

// All domain failures derive from Error so the CLI can catch one type and
// map it to exit code 1. Message text is what the user sees; keep it concrete.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what), pos(position) {}
    std::size_t pos; // byte offset (expression text) or line number (edge lists, family files)
};

struct ValidationError : Error {
    using Error::Error;
};

struct UnknownFamily : Error {
    explicit UnknownFamily(const std::string& name)
        : Error("unknown family: " + name) {}
};

struct UnknownTheorem : Error {
    using Error::Error;
};

struct NoCoveringPiece : Error {
    using Error::Error;
};

struct RegionMismatch : Error {
    using Error::Error;
};

struct NegativeCount : Error {
    NegativeCount(const std::string& family, int i, int j, long long p, long long q,
                  const std::string& value)
        : Error("negative edge count in " + family + ": E{" + std::to_string(i) + "," +
                std::to_string(j) + "} = " + value + " at (p,q)=(" + std::to_string(p) +
                "," + std::to_string(q) + ")"),
          family_name(family), du(i), dv(j), p_at(p), q_at(q) {}
    std::string family_name;
    int du, dv;
    long long p_at, q_at;
};

struct NotRadicalClosed : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NegativeSqrt : Error {
    using Error::Error;
};

struct ZeroVertices : Error {
    ZeroVertices() : Error("partition has no vertices; average degree undefined") {}
};

} // namespace sombor
