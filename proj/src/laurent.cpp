#include "rickard/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "rickard/errors.hpp"

namespace rickard {

namespace detail {

std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow (add)");
    return r;
}

std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow (mul)");
    return r;
}

}  // namespace detail

using detail::checkedAdd;
using detail::checkedMul;

LaurentScalar::LaurentScalar(std::int64_t constant) {
    if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentScalar::LaurentScalar(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

void LaurentScalar::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        if (!out.empty() && out.back().first == e) {
            out.back().second = checkedAdd(out.back().second, c);
        } else {
            out.emplace_back(e, c);
        }
        if (out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

LaurentScalar LaurentScalar::monomial(std::int64_t coeff, int exponent) {
    LaurentScalar r;
    if (coeff != 0) r.terms_.emplace_back(exponent, coeff);
    return r;
}

std::int64_t LaurentScalar::coefficient(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    return (it != terms_.end() && it->first == exponent) ? it->second : 0;
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r = *this;
    for (auto& t : r.terms_) t.second = checkedMul(t.second, -1);
    return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& rhs) {
    if (rhs.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            std::int64_t c = checkedAdd(a->second, b->second);
            if (c != 0) merged.emplace_back(a->first, c);
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& rhs) { return *this += -rhs; }

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    if (a.isZero() || b.isZero()) return {};
    const int lo = a.minExponent() + b.minExponent();
    const int hi = a.maxExponent() + b.maxExponent();
    std::vector<std::int64_t> dense(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            auto& slot = dense[static_cast<std::size_t>(ea + eb - lo)];
            slot = checkedAdd(slot, checkedMul(ca, cb));
        }
    }
    LaurentScalar r;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i), dense[i]);
    }
    return r;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& rhs) { return *this = *this * rhs; }

LaurentScalar LaurentScalar::shifted(int shift) const {
    LaurentScalar r = *this;
    for (auto& t : r.terms_) t.first += shift;
    return r;
}

LaurentScalar LaurentScalar::bar() const {
    LaurentScalar r = *this;
    for (auto& t : r.terms_) t.first = -t.first;
    std::reverse(r.terms_.begin(), r.terms_.end());
    return r;
}

LaurentScalar LaurentScalar::pow(unsigned e) const {
    LaurentScalar result(1);
    LaurentScalar base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

std::optional<LaurentScalar> LaurentScalar::divideExact(const LaurentScalar& divisor) const {
    if (divisor.isZero()) return std::nullopt;
    if (isZero()) return LaurentScalar{};
    // Long division from the top; the leading term of the divisor must divide
    // every leading coefficient encountered.
    LaurentScalar rem = *this;
    std::vector<Term> quotient;
    const auto [dTop, dCoeff] = divisor.terms_.back();
    const int dSpan = divisor.maxExponent() - divisor.minExponent();
    while (!rem.isZero()) {
        if (rem.maxExponent() - rem.minExponent() < dSpan) return std::nullopt;
        const auto [rTop, rCoeff] = rem.terms_.back();
        if (rCoeff % dCoeff != 0) return std::nullopt;
        const Term qt{rTop - dTop, rCoeff / dCoeff};
        quotient.push_back(qt);
        rem -= divisor * monomial(qt.second, qt.first);
    }
    return LaurentScalar(std::move(quotient));
}

std::string LaurentScalar::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

namespace {

class LaurentParser {
public:
    explicit LaurentParser(std::string_view s) : s_(s) {}

    LaurentScalar run() {
        std::vector<LaurentScalar::Term> terms;
        skipSpace();
        if (pos_ == s_.size()) throw ParseError("empty Laurent polynomial", pos_);
        bool firstTerm = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            skipSpace();
            if (peek() == '+' || peek() == '-') {
                sign = (s_[pos_] == '-') ? -1 : 1;
                ++pos_;
                skipSpace();
            } else if (!firstTerm) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            firstTerm = false;
            terms.push_back(term(sign));
            skipSpace();
        }
        LaurentScalar r;
        for (const auto& [e, c] : terms) r += LaurentScalar::monomial(c, e);
        return r;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skipSpace() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::int64_t integer() {
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = checkedAdd(checkedMul(v, 10), s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected digits", pos_);
        return v;
    }

    LaurentScalar::Term term(int sign) {
        std::int64_t coeff = 1;
        int exponent = 0;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = integer();
            skipSpace();
            if (peek() != '*') return {0, sign * coeff};
            ++pos_;
            skipSpace();
        }
        if (peek() != 'q') throw ParseError("expected 'q'", pos_);
        ++pos_;
        exponent = 1;
        if (peek() == '^') {
            ++pos_;
            int expSign = 1;
            if (peek() == '-') {
                expSign = -1;
                ++pos_;
            }
            exponent = expSign * static_cast<int>(integer());
        }
        return {exponent, sign * coeff};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentScalar LaurentScalar::parse(std::string_view text) { return LaurentParser(text).run(); }

std::ostream& operator<<(std::ostream& os, const LaurentScalar& x) { return os << x.toString(); }

LaurentScalar qint(int n) {
    if (n < 0) return -qint(-n);
    LaurentScalar r;
    for (int e = n - 1; e >= 1 - n; e -= 2) r += LaurentScalar::monomial(1, e);
    return r;
}

LaurentScalar qfact(int n) {
    if (n < 0) throw InvalidArgument("qfact: negative argument " + std::to_string(n));
    LaurentScalar r(1);
    for (int j = 2; j <= n; ++j) r *= qint(j);
    return r;
}

LaurentScalar qbinom(int n, int k) {
    if (k < 0 || k > n) {
        throw InvalidArgument("qbinom: need 0 <= k <= n, got n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
    }
    // [n k] = q^k [n-1 k] + q^-(n-k) [n-1 k-1]; qfact(n) overflows from n = 22 on
    std::vector<LaurentScalar> row{LaurentScalar(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<LaurentScalar> next(static_cast<std::size_t>(m + 1));
        for (int j = 0; j <= m && j <= k; ++j) {
            if (j < m) next[j] += LaurentScalar::qPower(j) * row[j];
            if (j > 0) next[j] += LaurentScalar::qPower(-(m - j)) * row[j - 1];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace rickard
