#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "rickard/laurent.hpp"

namespace rickard {

/**
 * Direct-sum multiplicity in two formal shift variables: g stands for the
 * grading twist {1} and h for the homological shift [1]. Elements live in
 * N[g^+-1, h^+-1]; there is deliberately no subtraction.
 */
class BiGrade {
public:
    using Key = std::pair<int, int>;  // (exponent of g, exponent of h)

    BiGrade() = default;
    BiGrade(std::int64_t constant);  // NOLINT: 0 and 1 are common literals

    /// coeff * g^gExp h^hExp; coeff must be positive.
    static BiGrade monomial(int gExp, int hExp, std::int64_t coeff = 1);
    /// h^k g^-k, i.e. the shift [k]{-k}; decategorifies to q^-k.
    static BiGrade diagonal(int k) { return monomial(-k, k); }
    /// Substitute q -> h g^-1 into a Laurent polynomial with nonnegative
    /// coefficients. Throws InvalidArgument on a negative coefficient.
    static BiGrade liftDiagonal(const LaurentScalar& x);

    bool isZero() const noexcept { return coeffs_.empty(); }
    const std::map<Key, std::int64_t>& terms() const noexcept { return coeffs_; }
    std::int64_t coefficient(int gExp, int hExp) const;

    BiGrade& operator+=(const BiGrade& rhs);
    friend BiGrade operator+(BiGrade a, const BiGrade& b) { return a += b; }
    friend BiGrade operator*(const BiGrade& a, const BiGrade& b);
    friend bool operator==(const BiGrade&, const BiGrade&) = default;
    friend bool operator<(const BiGrade& a, const BiGrade& b) { return a.coeffs_ < b.coeffs_; }

    /// Multiply by g^gShift h^hShift.
    BiGrade shifted(int gShift, int hShift) const;

    /// "g h^-1 + g^-1 h": terms ordered by h exponent, then g exponent.
    std::string toString() const;

private:
    std::map<Key, std::int64_t> coeffs_;
};

/// Graded dimension of H*(P^r): sum_{i=0..r} h^(r-2i) g^(2i-r). Zero for r = -1.
BiGrade pGradedDim(int r);

/// Ring map g -> -q, h -> -1.
LaurentScalar decategorify(const BiGrade& x);

/// Bigraded quantum binomial: qbinom(n, k) with q -> h g^-1. Zero when k > n.
BiGrade biBinom(int n, int k);

}  // namespace rickard
