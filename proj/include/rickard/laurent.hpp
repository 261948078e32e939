#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rickard {

/**
 * Integer Laurent polynomial in one variable q, i.e. an element of Z[q, q^-1].
 *
 * Terms are kept sorted by exponent with no zero coefficients, so two values
 * compare equal exactly when they are equal as polynomials. All arithmetic is
 * exact; coefficient overflow throws std::overflow_error rather than wrapping.
 */
class LaurentScalar {
public:
    using Term = std::pair<int, std::int64_t>;  // (exponent, coefficient)

    LaurentScalar() = default;
    LaurentScalar(std::int64_t constant);  // NOLINT: implicit on purpose, 2 * x reads naturally

    static LaurentScalar monomial(std::int64_t coeff, int exponent);
    /// The variable q itself.
    static LaurentScalar q() { return monomial(1, 1); }

    bool isZero() const noexcept { return terms_.empty(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::int64_t coefficient(int exponent) const;

    /// Lowest / highest exponent present. Undefined on zero.
    int minExponent() const { return terms_.front().first; }
    int maxExponent() const { return terms_.back().first; }

    LaurentScalar operator-() const;
    LaurentScalar& operator+=(const LaurentScalar& rhs);
    LaurentScalar& operator-=(const LaurentScalar& rhs);
    LaurentScalar& operator*=(const LaurentScalar& rhs);

    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
    friend bool operator==(const LaurentScalar&, const LaurentScalar&) = default;

    /// Multiply by q^shift.
    LaurentScalar shifted(int shift) const;
    /// The bar involution q -> q^-1.
    LaurentScalar bar() const;
    /// q^e for any integer e (negative allowed).
    static LaurentScalar qPower(int e) { return monomial(1, e); }
    LaurentScalar pow(unsigned e) const;

    /// Exact quotient this / divisor, or nullopt when the division leaves a
    /// remainder (or the divisor is zero).
    std::optional<LaurentScalar> divideExact(const LaurentScalar& divisor) const;

    /// Canonical text, exponents ascending: "q^-2 + 2 + q^2", "-q^-1 + 3*q".
    std::string toString() const;
    /// Parses the canonical format (and tolerates unsorted / repeated terms).
    static LaurentScalar parse(std::string_view text);

private:
    explicit LaurentScalar(std::vector<Term> terms);  // normalizes
    void normalize();

    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentScalar& x);

/// Balanced quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n);
/// [0] = 0 and [-n] = -[n].
LaurentScalar qint(int n);
/// [n]! = [1][2]...[n]; [0]! = 1.
LaurentScalar qfact(int n);
/// Balanced quantum binomial [n choose k] = [n]! / ([k]! [n-k]!), 0 <= k <= n.
/// Computed by exact division; a nonzero remainder throws IntegrityError.
LaurentScalar qbinom(int n, int k);

namespace detail {
std::int64_t checkedAdd(std::int64_t a, std::int64_t b);
std::int64_t checkedMul(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace rickard
