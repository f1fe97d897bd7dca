#ifndef HOPSET_TYPES_HPP
#define HOPSET_TYPES_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace hopset {

// Nodes are 0-based internally. Every file format and the CLI use 1-based ids.
using Node = std::uint32_t;
using Weight = std::int64_t;

constexpr Weight kInfinity = std::numeric_limits<Weight>::max();
constexpr Node kNoNode = std::numeric_limits<Node>::max();

/// Saturating addition against kInfinity.
inline Weight add_dist(Weight a, Weight b) {
    if (a == kInfinity || b == kInfinity) return kInfinity;
    if (a > kInfinity - b) return kInfinity;
    return a + b;
}

// Unordered pair key used by hash tables (smaller id in the high word).
inline std::uint64_t pair_key(Node a, Node b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

/// Exact non-negative rational with 64-bit parts, always reduced.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Ratio() = default;
    Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Ratio with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        auto g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

class HopsetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public HopsetError {
public:
    ParseError(const std::string& what, std::size_t line)
        : HopsetError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

#define HOPSET_ERROR(Name)                    \
    class Name : public HopsetError {         \
    public:                                   \
        using HopsetError::HopsetError;       \
    }

HOPSET_ERROR(ConnectivityError);
HOPSET_ERROR(GraphError);
HOPSET_ERROR(UspFailure);
HOPSET_ERROR(MissingUspCertificate);
HOPSET_ERROR(InfeasibleParams);
HOPSET_ERROR(InvalidShortcut);
HOPSET_ERROR(NoCover);
HOPSET_ERROR(InvalidDecomposition);
HOPSET_ERROR(BlowupExceeded);
HOPSET_ERROR(OracleBuildFailed);
HOPSET_ERROR(Infeasible);
HOPSET_ERROR(SolverFailure);
HOPSET_ERROR(RoundingFailed);

#undef HOPSET_ERROR

}  // namespace hopset

#endif  // HOPSET_TYPES_HPP
