#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace toruslift {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct NotAlternating : Error {
    NotAlternating() : Error("matrix is not alternating") {}
};

struct NotSymmetric : Error {
    NotSymmetric() : Error("matrix is not symmetric") {}
};

struct NotNilpotent : Error {
    NotNilpotent() : Error("matrix is not nilpotent") {}
};

struct NonUnitDeterminant : Error {
    NonUnitDeterminant() : Error("determinant is not a nonzero constant") {}
};

struct NotComplexStructure : Error {
    NotComplexStructure() : Error("J^2 != -I") {}
};

struct NotOneOne : Error {
    NotOneOne() : Error("form is not of type (1,1)") {}
};

struct TorusMismatch : Error {
    TorusMismatch() : Error("operands live on different tori") {}
};

struct SingularOmega : Error {
    SingularOmega() : Error("symplectic form is singular") {}
};

struct NotGCS : Error {
    NotGCS() : Error("matrix is not an almost generalized complex structure") {}
};

struct NotPositiveDefinite : Error {
    NotPositiveDefinite() : Error("metric is not positive-definite") {}
};

struct UnequalChernClass : Error {
    UnequalChernClass() : Error("bundles have unequal first Chern class") {}
};

struct InconsistentBlocks : Error {
    InconsistentBlocks() : Error("matrix is not of generalized-metric form") {}
};

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int result = 1;
    for (long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

/// Canonical representative of a rational modulo 1, in [0, 1).
inline Rat mod1(const Rat& x) {
    Int n = numerator(x), d = denominator(x);
    Int r = n % d;
    if (r < 0) r += d;
    return Rat(r, d);
}

} // namespace toruslift
