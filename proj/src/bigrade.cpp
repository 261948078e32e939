#include "rickard/bigrade.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "rickard/errors.hpp"

namespace rickard {

BiGrade::BiGrade(std::int64_t constant) {
    if (constant < 0) throw InvalidArgument("BiGrade: negative multiplicity");
    if (constant > 0) coeffs_[{0, 0}] = constant;
}

BiGrade BiGrade::monomial(int gExp, int hExp, std::int64_t coeff) {
    if (coeff < 0) throw InvalidArgument("BiGrade: negative multiplicity");
    BiGrade r;
    if (coeff > 0) r.coeffs_[{gExp, hExp}] = coeff;
    return r;
}

BiGrade BiGrade::liftDiagonal(const LaurentScalar& x) {
    BiGrade r;
    for (const auto& [e, c] : x.terms()) {
        if (c < 0) throw InvalidArgument("BiGrade::liftDiagonal: negative coefficient in " + x.toString());
        r += monomial(-e, e, c);
    }
    return r;
}

std::int64_t BiGrade::coefficient(int gExp, int hExp) const {
    auto it = coeffs_.find({gExp, hExp});
    return it == coeffs_.end() ? 0 : it->second;
}

BiGrade& BiGrade::operator+=(const BiGrade& rhs) {
    for (const auto& [k, c] : rhs.coeffs_) {
        auto& slot = coeffs_[k];
        slot = detail::checkedAdd(slot, c);
    }
    return *this;
}

BiGrade operator*(const BiGrade& a, const BiGrade& b) {
    BiGrade r;
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) {
            auto& slot = r.coeffs_[{ka.first + kb.first, ka.second + kb.second}];
            slot = detail::checkedAdd(slot, detail::checkedMul(ca, cb));
        }
    }
    return r;
}

BiGrade BiGrade::shifted(int gShift, int hShift) const {
    BiGrade r;
    for (const auto& [k, c] : coeffs_) r.coeffs_[{k.first + gShift, k.second + hShift}] = c;
    return r;
}

std::string BiGrade::toString() const {
    if (coeffs_.empty()) return "0";
    std::vector<std::pair<Key, std::int64_t>> ordered(coeffs_.begin(), coeffs_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        if (x.first.second != y.first.second) return x.first.second < y.first.second;
        return x.first.first < y.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : ordered) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> factors;
        if (c != 1 || (k.first == 0 && k.second == 0)) factors.push_back(std::to_string(c));
        auto power = [&](char var, int e) {
            if (e == 0) return;
            std::string f(1, var);
            if (e != 1) f += "^" + std::to_string(e);
            factors.push_back(f);
        };
        power('g', k.first);
        power('h', k.second);
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " " : "") << factors[i];
    }
    return os.str();
}

BiGrade pGradedDim(int r) {
    if (r < -1) throw InvalidArgument("pGradedDim: r must be >= -1, got " + std::to_string(r));
    BiGrade out;
    for (int i = 0; i <= r; ++i) out += BiGrade::monomial(-r + 2 * i, r - 2 * i);
    return out;
}

LaurentScalar decategorify(const BiGrade& x) {
    LaurentScalar out;
    for (const auto& [k, c] : x.terms()) {
        // (-q)^a (-1)^b = (-1)^(a+b) q^a
        const bool negative = ((k.first + k.second) % 2) != 0;
        out += LaurentScalar::monomial(negative ? -c : c, k.first);
    }
    return out;
}

BiGrade biBinom(int n, int k) {
    if (k < 0) throw InvalidArgument("biBinom: negative k");
    if (k > n) return {};
    return BiGrade::liftDiagonal(qbinom(n, k));
}

}  // namespace rickard
