#include "rickard/complex_shape.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "rickard/errors.hpp"
#include "rickard/reflection.hpp"

namespace rickard {

namespace {

double msSince(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Letter letter(Generator kind, int power) { return Letter{kind, 1, power}; }

// u^k = h^k g^-k, the diagonal shift [k]{-k}.
BiGrade u(int k) { return BiGrade::diagonal(k); }

KernelWord fe(int lambda) { return KernelWord(lambda, {letter(Generator::F, 1), letter(Generator::E, 1)}); }

void requireBounded(const Window& window, const char* who) {
    if (!window.isBounded()) throw InvalidArgument(std::string(who) + ": window must be bounded");
}

}  // namespace

ComplexShape ComplexShape::identity(const KernelWord& anchor, const Window& window) {
    ComplexShape s(window);
    s.add(0, anchor.identityAtSource(), BiGrade(1));
    return s;
}

void ComplexShape::add(int position, const KernelWord& word, const BiGrade& multiplicity) {
    if (multiplicity.isZero()) return;
    terms_[position].add(word, multiplicity);
}

void ComplexShape::add(int position, const FormalSum& sum) {
    if (sum.isZero()) return;
    terms_[position] += sum;
}

const FormalSum& ComplexShape::at(int position) const {
    static const FormalSum empty;
    auto it = terms_.find(position);
    return it == terms_.end() ? empty : it->second;
}

std::map<KernelWord, LaurentScalar> ComplexShape::formalEuler() const {
    std::map<KernelWord, LaurentScalar> out;
    for (const auto& [pos, sum] : terms_) {
        for (const auto& [w, m] : sum.terms()) {
            LaurentScalar c = decategorify(m);
            if (pos % 2 != 0) c = -c;
            out[w] += c;
            if (out[w].isZero()) out.erase(w);
        }
    }
    return out;
}

BlockOperator ComplexShape::eulerClass(OperatorCache& cache) const {
    BlockOperator out;
    for (const auto& [pos, sum] : terms_) {
        out += decategorifySum(sum, cache).scaled(LaurentScalar(pos % 2 == 0 ? 1 : -1));
    }
    return out;
}

std::string ComplexShape::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pos, sum] : terms_) {
        if (!first) os << " | ";
        first = false;
        os << '[' << pos << "] " << sum.toString();
    }
    return os.str();
}

ComplexShape rickardComplex(int lambda, const Window& window) {
    requireBounded(window, "rickardComplex");
    ComplexShape out(window);
    const int p = lambda >= 0 ? lambda : -lambda;
    // E^(s) (or F^(s)) first moves by 2s away from zero; past the bound every term is dead
    for (int s = 0; p + 2 * s <= *window.bound(); ++s) {
        std::vector<Letter> ls = lambda >= 0
                                     ? std::vector<Letter>{letter(Generator::F, p + s), letter(Generator::E, s)}
                                     : std::vector<Letter>{letter(Generator::E, p + s), letter(Generator::F, s)};
        out.add(-s, normalForm(KernelWord(lambda, std::move(ls)), window).scaled(BiGrade::monomial(s, -s)));
    }
    return out;
}

ComplexShape inverseRickardComplex(int lambda, const Window& window) {
    requireBounded(window, "inverseRickardComplex");
    ComplexShape out(window);
    const int p = lambda >= 0 ? lambda : -lambda;
    for (int s = 0; p + 2 * s <= *window.bound(); ++s) {
        std::vector<Letter> ls = lambda >= 0
                                     ? std::vector<Letter>{letter(Generator::F, s), letter(Generator::E, p + s)}
                                     : std::vector<Letter>{letter(Generator::E, s), letter(Generator::F, p + s)};
        out.add(s, normalForm(KernelWord(-lambda, std::move(ls)), window).scaled(BiGrade::monomial(-s, s)));
    }
    return out;
}

ComplexShape composeAndCancel(const ComplexShape& a, const ComplexShape& b) {
    if (!(a.window() == b.window())) throw InvalidArgument("composeAndCancel: windows differ");
    const Window& window = a.window();
    ComplexShape raw(window);
    for (const auto& [pa, sa] : a.terms()) {
        for (const auto& [pb, sb] : b.terms()) {
            for (const auto& [wa, ma] : sa.terms()) {
                for (const auto& [wb, mb] : sb.terms()) {
                    raw.add(pa + pb, normalForm(wa.after(wb), window).scaled(ma * mb));
                }
            }
        }
    }

    // counts[(word, g, h)][position]
    std::map<std::tuple<KernelWord, int, int>, std::map<int, std::int64_t>> counts;
    for (const auto& [pos, sum] : raw.terms()) {
        for (const auto& [w, m] : sum.terms()) {
            for (const auto& [key, c] : m.terms()) counts[{w, key.first, key.second}][pos] += c;
        }
    }
    ComplexShape out(window);
    for (auto& [key, byPos] : counts) {
        for (auto it = byPos.begin(); it != byPos.end(); ++it) {
            auto next = byPos.find(it->first + 1);
            if (next == byPos.end()) continue;
            const std::int64_t c = std::min(it->second, next->second);
            it->second -= c;
            next->second -= c;
        }
        const auto& [w, g, h] = key;
        for (const auto& [pos, c] : byPos) {
            if (c > 0) out.add(pos, w, BiGrade::monomial(g, h, c));
        }
    }
    if (out.formalEuler() != raw.formalEuler()) {
        throw IntegrityError("composeAndCancel: Euler characteristic changed by cancellation");
    }
    return out;
}

ComplexShape negativeTwistClosedForm(int ell, int n) {
    if (ell < 1 || n < 1) throw InvalidArgument("negativeTwistClosedForm: need l >= 1 and n >= 1");
    ComplexShape out(Window::symmetric(n + 1));
    out.add(0, KernelWord(n - 1, {}), BiGrade(1));
    for (int j = 1; j <= ell; ++j) {
        const int base = (2 * j - 1) * (n + 1);
        out.add(2 * j - 1, fe(n - 1), u(base - 1));
        out.add(2 * j, fe(n - 1), u(base + 1));
    }
    return out;
}

ComplexShape negativeTwistPower(int ell, int n) {
    if (ell < 1 || n < 1) throw InvalidArgument("negativeTwistPower: need l >= 1 and n >= 1");
    const Window window = Window::symmetric(n + 1);
    // T^-2 = T(n-1)^-1 after T(-n+1)^-1, from n-1 back to n-1
    const ComplexShape step =
        composeAndCancel(inverseRickardComplex(n - 1, window), inverseRickardComplex(-n + 1, window));
    ComplexShape power = step;
    for (int k = 1; k < ell; ++k) power = composeAndCancel(step, power);
    const ComplexShape expected = negativeTwistClosedForm(ell, n);
    if (!(power == expected)) {
        throw IntegrityError("negativeTwistPower(l=" + std::to_string(ell) + ", n=" + std::to_string(n) +
                             "): iterated " + power.toString() + " but closed form " + expected.toString());
    }
    return power;
}

std::vector<CheckResult> stabilizationCheck(int n, int ellMax, int maxDegree) {
    if (ellMax < 2) throw InvalidArgument("stabilizationCheck: need l_max >= 2");
    std::vector<ComplexShape> shapes;
    for (int ell = 1; ell <= ellMax; ++ell) shapes.push_back(negativeTwistPower(ell, n));
    std::vector<CheckResult> out;
    for (int d = 0; d <= maxDegree; ++d) {
        const auto start = std::chrono::steady_clock::now();
        const FormalSum& last = shapes.back().at(d);
        int from = ellMax;
        while (from > 1 && shapes[static_cast<std::size_t>(from - 2)].at(d) == last) --from;
        std::string name = "degree " + std::string(d < 10 ? "0" : "") + std::to_string(d);
        CheckResult c{std::move(name), from < ellMax, "", 0};
        c.detail = c.passed ? "stable from l=" + std::to_string(from) + ": " + last.toString()
                            : "not constant over two values of l <= " + std::to_string(ellMax);
        c.elapsedMs = msSince(start);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CheckResult> dividedSquareCheck(int n) {
    if (n < 2) throw InvalidArgument("dividedSquareCheck: need N >= 2");
    const int lambda = n - 2;
    const Window window = Window::symmetric(n);
    const KernelWord word(lambda, {letter(Generator::E, lambda), letter(Generator::F, lambda)});
    FormalSum expected;
    expected.add(word.identityAtSource(), BiGrade(1));
    expected.add(fe(lambda), pGradedDim(lambda - 1));

    std::vector<CheckResult> out;
    auto start = std::chrono::steady_clock::now();
    const FormalSum got = normalForm(word, window);
    out.push_back({"E^(l)F^(l) rewrite N=" + std::to_string(n), got == expected,
                   word.toString() + " at " + std::to_string(lambda) + " = " + got.toString(), msSince(start)});

    start = std::chrono::steady_clock::now();
    const TensorModel model = buildModel(2, n);
    OperatorCache cache(model);
    const BlockOperator lhs = decategorifyWord(word, cache);
    const BlockOperator rhs = decategorifySum(expected, cache);
    const auto diff = lhs.firstDifference(rhs);
    out.push_back({"E^(l)F^(l) matrix N=" + std::to_string(n), !diff.has_value(),
                   diff ? "differs on block " + diff->toString() : "exact on block " + modelWeight(word, model).toString(),
                   msSince(start)});
    return out;
}

std::vector<AbstractTerm> pnTwistShape(bool spherical) {
    std::vector<AbstractTerm> out;
    if (!spherical) out.push_back({-2, "P·P_R", u(-2)});
    out.push_back({-1, "P·P_R", BiGrade(1)});
    out.push_back({0, "id", BiGrade(1)});
    return out;
}

ComplexShape instantiateTwist(const std::vector<AbstractTerm>& shape, int n) {
    if (n < 1) throw InvalidArgument("instantiateTwist: need n >= 1");
    ComplexShape out(Window::symmetric(n + 1));
    for (const auto& t : shape) {
        if (t.label == "id") {
            out.add(t.position, KernelWord(n - 1, {}), t.grade);
        } else if (t.label == "P·P_R") {
            out.add(t.position, fe(n - 1), t.grade * u(-n));
        } else {
            throw InvalidArgument("instantiateTwist: unknown label " + t.label);
        }
    }
    return out;
}

std::vector<CheckResult> twistSuite(int nMax, int ellMax, int maxDegree) {
    if (nMax < 1 || nMax > 5) throw InvalidArgument("twistSuite: need 1 <= n <= 5");
    if (ellMax < 2 || ellMax > 12) throw InvalidArgument("twistSuite: need 2 <= l <= 12");
    if (maxDegree < 0 || maxDegree > 2 * ellMax) throw InvalidArgument("twistSuite: need 0 <= deg <= 2l");
    std::vector<CheckResult> out;
    for (int n = 1; n <= nMax; ++n) {
        const std::string tag = "n=" + std::to_string(n) + " ";
        auto start = std::chrono::steady_clock::now();
        const Window window = Window::symmetric(n + 1);
        const auto a = rickardComplex(-n + 1, window);
        const auto b = rickardComplex(n - 1, window);
        const auto composite = composeAndCancel(a, b);
        const auto expected = instantiateTwist(pnTwistShape(), n);
        out.push_back({tag + "composite shape", composite == expected, composite.toString(), msSince(start)});

        start = std::chrono::steady_clock::now();
        const TensorModel model = buildModel(2, n + 1);
        OperatorCache cache(model);
        const BlockOperator t = reflectionOperator(cache, 1).op;
        const BlockOperator tt = t.after(t);
        BlockOperator product;
        if (const auto* block = tt.block(sl2Weight(n - 1, n + 1))) product.setBlock(*block);
        const auto diff = composite.eulerClass(cache).firstDifference(product);
        out.push_back({tag + "composite euler", !diff.has_value(),
                       diff ? "differs on block " + diff->toString() : "equals t*t on the block " + sl2Weight(n - 1, n + 1).toString(),
                       msSince(start)});

        for (int ell = 1; ell <= ellMax; ++ell) {
            start = std::chrono::steady_clock::now();
            CheckResult c{tag + "power l=" + (ell < 10 ? "0" : "") + std::to_string(ell), true, "", 0};
            try {
                const auto power = negativeTwistPower(ell, n);
                c.detail = power.toString();
                if (ell == 2) {
                    const auto d3 = power.at(3).multiplicity(fe(n - 1));
                    const auto d4 = power.at(4).multiplicity(fe(n - 1));
                    CheckResult shifts{tag + "degrees 3,4", d3 == u(3 * n + 2) && d4 == u(3 * n + 4),
                                       "⟨" + d3.toString() + "⟩·F*E -> ⟨" + d4.toString() + "⟩·F*E", 0};
                    out.push_back(std::move(shifts));
                }
            } catch (const IntegrityError& e) {
                c.passed = false;
                c.detail = e.what();
            }
            c.elapsedMs = msSince(start);
            out.push_back(std::move(c));
        }
        for (auto& c : stabilizationCheck(n, ellMax, maxDegree)) {
            c.name = tag + c.name;
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace rickard
