#pragma once

#include <stdexcept>
#include <string>

namespace loopsoup {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct VariableMismatch : Error {
    VariableMismatch() : Error("series variables differ; refusing to combine") {}
};

struct NegativeLeadingExponent : Error {
    NegativeLeadingExponent() : Error("series_exp requires a non-negative leading exponent") {}
};

struct ZeroLeadingCoefficient : Error {
    ZeroLeadingCoefficient() : Error("series_pow requires a non-zero leading coefficient") {}
};

struct PoleAtNonpositiveInteger : Error {
    explicit PoleAtNonpositiveInteger(const std::string& where)
        : Error("gamma pole at non-positive integer argument in " + where) {}
};

struct ParameterPole : Error {
    explicit ParameterPole(const std::string& what) : Error(what) {}
};

struct IntegerExponentGap : Error {
    IntegerExponentGap()
        : Error("hyp2f1_unit_connection: c-a-b is an integer (logarithmic case unsupported)") {}
};

struct ReversionFailure : Error {
    ReversionFailure() : Error("series reversion failed: vanishing leading coefficient") {}
};

struct NearPole : Error {
    int m, n;
    std::string distance;
    NearPole(int m_, int n_, const std::string& dist)
        : Error("recursion denominator near pole at (m,n)=(" + std::to_string(m_) + "," +
                std::to_string(n_) + "), |Delta - Delta_(m,n)| = " + dist),
          m(m_), n(n_), distance(dist) {}
};

struct SingularGram : Error {
    explicit SingularGram(int level)
        : Error("Gram matrix singular at level " + std::to_string(level) +
                " (null vector present)") {}
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& what) : Error(what) {}
};

struct ValidationFailed : Error {
    explicit ValidationFailed(const std::string& what) : Error(what) {}
};

struct ResidualTooLarge : Error {
    explicit ResidualTooLarge(const std::string& what) : Error(what) {}
};

struct SlowConvergence : Error {
    explicit SlowConvergence(const std::string& what) : Error(what) {}
};

struct ExtrapolationUnstable : Error {
    explicit ExtrapolationUnstable(const std::string& what) : Error(what) {}
};

// Identity-check failure; `identity` is an id from docs/IDENTITIES.md.
struct AssertionFailed : Error {
    std::string identity;
    AssertionFailed(const std::string& identity_, const std::string& detail)
        : Error("identity check failed [" + identity_ + "]: " + detail), identity(identity_) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace loopsoup
