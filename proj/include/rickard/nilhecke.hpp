#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rickard/check.hpp"

namespace rickard {

/// Integer polynomial in x_1, x_2, ... . Exponent vectors carry no trailing
/// zeros, so the same polynomial compares equal regardless of how many
/// variables were in play when it was built.
class IntPoly {
public:
    using Exponents = std::vector<int>;  // slot 0 is x_1

    IntPoly() = default;
    IntPoly(std::int64_t constant);  // NOLINT
    static IntPoly variable(int i);
    static IntPoly monomial(Exponents exps, std::int64_t coeff = 1);

    bool isZero() const noexcept { return terms_.empty(); }
    const std::map<Exponents, std::int64_t>& terms() const noexcept { return terms_; }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Highest variable index that occurs (0 for constants).
    int variableCount() const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly operator-() const;
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Exchange x_i and x_{i+1}.
    IntPoly swapped(int i) const;

    /// "3*x1^2*x2 - x3": highest degree first, lexicographically descending
    /// within a degree.
    std::string toString() const;
    static IntPoly parse(std::string_view text);

private:
    void addTerm(Exponents exps, std::int64_t coeff);
    std::map<Exponents, std::int64_t> terms_;
};

/// Divided difference (p - s_i p) / (x_i - x_{i+1}). Throws InvalidArgument
/// for i < 1 and IntegrityError if the division leaves a remainder.
IntPoly demazure(int i, const IntPoly& p);

/// x_i * p.
IntPoly multX(int i, const IntPoly& p);

/// All monomials in x_1..x_n of total degree <= maxDegree.
std::vector<IntPoly> monomialsUpTo(int n, int maxDegree);

/**
 * nilHecke relations in the polynomial representation, checked on every
 * monomial of degree <= maxDegree in n variables and on `samples` random
 * polynomials:
 *   d_i d_i = 0,  d_i d_{i+1} d_i = d_{i+1} d_i d_{i+1},  d_i d_j = d_j d_i,
 *   x_i d_i - d_i x_{i+1} = id = -x_{i+1} d_i + d_i x_i.
 */
std::vector<CheckResult> nilHeckeSuite(int n, int maxDegree, int samples, std::uint64_t seed = 1);

}  // namespace rickard
