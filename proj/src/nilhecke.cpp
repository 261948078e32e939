#include "rickard/nilhecke.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "rickard/errors.hpp"
#include "rickard/laurent.hpp"

namespace rickard {

using detail::checkedAdd;
using detail::checkedMul;

namespace {

void trim(IntPoly::Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

int totalDegree(const IntPoly::Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

}  // namespace

IntPoly::IntPoly(std::int64_t constant) {
    if (constant != 0) terms_.emplace(Exponents{}, constant);
}

IntPoly IntPoly::variable(int i) {
    if (i < 1) throw InvalidArgument("IntPoly::variable: index must be >= 1");
    Exponents e(static_cast<std::size_t>(i), 0);
    e.back() = 1;
    return monomial(std::move(e));
}

IntPoly IntPoly::monomial(Exponents exps, std::int64_t coeff) {
    for (int x : exps) {
        if (x < 0) throw InvalidArgument("IntPoly::monomial: negative exponent");
    }
    IntPoly p;
    p.addTerm(std::move(exps), coeff);
    return p;
}

void IntPoly::addTerm(Exponents exps, std::int64_t coeff) {
    if (coeff == 0) return;
    trim(exps);
    auto [it, inserted] = terms_.try_emplace(std::move(exps), coeff);
    if (!inserted) {
        it->second = checkedAdd(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

int IntPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, totalDegree(e));
    return d;
}

int IntPoly::variableCount() const {
    int n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, static_cast<int>(e.size()));
    return n;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) addTerm(e, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) addTerm(e, checkedMul(c, -1));
    return *this;
}

IntPoly IntPoly::operator-() const { return IntPoly{} - *this; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            IntPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.addTerm(std::move(e), checkedMul(ca, cb));
        }
    }
    return out;
}

IntPoly IntPoly::swapped(int i) const {
    if (i < 1) throw InvalidArgument("IntPoly::swapped: index must be >= 1");
    IntPoly out;
    const auto a = static_cast<std::size_t>(i - 1);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        if (f.size() < a + 2) f.resize(a + 2, 0);
        std::swap(f[a], f[a + 1]);
        out.addTerm(std::move(f), c);
    }
    return out;
}

std::string IntPoly::toString() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, std::int64_t>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        const int dx = totalDegree(x.first), dy = totalDegree(y.first);
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        const std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || e.empty()) {
            os << mag;
            wrote = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (wrote) os << '*';
            os << 'x' << v + 1;
            if (e[v] != 1) os << '^' << e[v];
            wrote = true;
        }
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    IntPoly run() {
        IntPoly out;
        skip();
        if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
        bool firstTerm = true;
        while (pos_ < s_.size()) {
            std::int64_t sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!firstTerm) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            firstTerm = false;
            out += term() * IntPoly(sign);
            skip();
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::int64_t number() {
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = checkedAdd(checkedMul(v, 10), s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected digits", pos_);
        return v;
    }
    IntPoly factor() {
        if (std::isdigit(static_cast<unsigned char>(peek()))) return IntPoly(number());
        if (peek() != 'x') throw ParseError("expected a number or x<i>", pos_);
        ++pos_;
        const std::size_t at = pos_;
        const auto index = number();
        if (index < 1 || index > 64) throw ParseError("variable index out of range", at);
        int exp = 1;
        if (peek() == '^') {
            ++pos_;
            exp = static_cast<int>(number());
        }
        IntPoly::Exponents e(static_cast<std::size_t>(index), 0);
        e.back() = exp;
        return IntPoly::monomial(std::move(e));
    }
    IntPoly term() {
        IntPoly t = factor();
        skip();
        while (peek() == '*') {
            ++pos_;
            skip();
            t = t * factor();
            skip();
        }
        return t;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly IntPoly::parse(std::string_view text) { return PolyParser(text).run(); }

IntPoly demazure(int i, const IntPoly& p) {
    if (i < 1) throw InvalidArgument("demazure: index must be >= 1");
    IntPoly rem = p - p.swapped(i);
    const IntPoly divisor = IntPoly::variable(i) - IntPoly::variable(i + 1);
    const auto slot = static_cast<std::size_t>(i - 1);
    auto xiExp = [slot](const IntPoly::Exponents& e) { return slot < e.size() ? e[slot] : 0; };
    IntPoly quotient;
    // Long division in x_i: always clear the term of highest x_i degree.
    while (!rem.isZero()) {
        auto lead = rem.terms().begin();
        for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it) {
            if (xiExp(it->first) > xiExp(lead->first)) lead = it;
        }
        if (xiExp(lead->first) == 0) {
            throw IntegrityError("demazure: remainder " + rem.toString() + " after dividing by x" +
                                 std::to_string(i) + " - x" + std::to_string(i + 1));
        }
        IntPoly::Exponents e = lead->first;
        --e[slot];
        const IntPoly q = IntPoly::monomial(std::move(e), lead->second);
        quotient += q;
        rem -= q * divisor;
    }
    return quotient;
}

IntPoly multX(int i, const IntPoly& p) { return IntPoly::variable(i) * p; }

std::vector<IntPoly> monomialsUpTo(int n, int maxDegree) {
    if (n < 1) throw InvalidArgument("monomialsUpTo: need at least one variable");
    std::vector<IntPoly> out;
    IntPoly::Exponents e(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int slot, int left) {
        if (slot == n) {
            out.push_back(IntPoly::monomial(e));
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[static_cast<std::size_t>(slot)] = a;
            rec(slot + 1, left - a);
        }
        e[static_cast<std::size_t>(slot)] = 0;
    };
    rec(0, maxDegree);
    return out;
}

namespace {

using Op = std::function<IntPoly(const IntPoly&)>;

CheckResult checkIdentity(std::string name, const std::vector<IntPoly>& inputs, const Op& lhs, const Op& rhs) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult c{std::move(name), true, "holds on " + std::to_string(inputs.size()) + " inputs", 0};
    for (const auto& p : inputs) {
        if (!(lhs(p) == rhs(p))) {
            c.passed = false;
            c.detail = "fails on " + p.toString();
            break;
        }
    }
    c.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return c;
}

}  // namespace

std::vector<CheckResult> nilHeckeSuite(int n, int maxDegree, int samples, std::uint64_t seed) {
    if (n < 2) throw InvalidArgument("nilHeckeSuite: need n >= 2");
    if (maxDegree < 0 || samples < 0) throw InvalidArgument("nilHeckeSuite: negative degree or sample count");
    std::vector<IntPoly> inputs = monomialsUpTo(n, maxDegree);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-5, 5), nterms(1, 6), exp(0, std::max(1, maxDegree / 2));
    for (int t = 0; t < samples; ++t) {
        IntPoly p;
        const int k = nterms(rng);
        for (int j = 0; j < k; ++j) {
            IntPoly::Exponents e(static_cast<std::size_t>(n));
            for (auto& x : e) x = exp(rng);
            p += IntPoly::monomial(std::move(e), coeff(rng));
        }
        inputs.push_back(p);
    }

    const auto id = [](const IntPoly& p) { return p; };
    const auto zero = [](const IntPoly&) { return IntPoly{}; };
    std::vector<CheckResult> out;
    for (int i = 1; i < n; ++i) {
        const std::string s = std::to_string(i);
        out.push_back(checkIdentity("nilpotent d" + s + "^2", inputs,
                                    [i](const IntPoly& p) { return demazure(i, demazure(i, p)); }, zero));
        out.push_back(checkIdentity(
            "XI T - T IX = I (" + s + ")", inputs,
            [i](const IntPoly& p) { return multX(i, demazure(i, p)) - demazure(i, multX(i + 1, p)); }, id));
        out.push_back(checkIdentity(
            "-IX T + T XI = I (" + s + ")", inputs,
            [i](const IntPoly& p) { return demazure(i, multX(i, p)) - multX(i + 1, demazure(i, p)); }, id));
        if (i + 1 < n) {
            out.push_back(checkIdentity(
                "braid d" + s + "d" + std::to_string(i + 1) + "d" + s, inputs,
                [i](const IntPoly& p) { return demazure(i, demazure(i + 1, demazure(i, p))); },
                [i](const IntPoly& p) { return demazure(i + 1, demazure(i, demazure(i + 1, p))); }));
        }
        for (int j = i + 2; j < n; ++j) {
            out.push_back(checkIdentity("commute d" + s + "d" + std::to_string(j), inputs,
                                        [i, j](const IntPoly& p) { return demazure(i, demazure(j, p)); },
                                        [i, j](const IntPoly& p) { return demazure(j, demazure(i, p)); }));
        }
    }
    return out;
}

}  // namespace rickard
