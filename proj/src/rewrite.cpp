#include "rickard/rewrite.hpp"

#include <chrono>
#include <optional>
#include <random>
#include <sstream>

#include "rickard/errors.hpp"

namespace rickard {

namespace {

struct Site {
    std::size_t at;     // index of the leftmost letter involved
    std::size_t width;  // 2 for pairs, 3 for Serre triples
};

using Expansion = std::vector<std::pair<std::vector<Letter>, BiGrade>>;

Letter letter(Generator kind, int node, int power) { return Letter{kind, node, power}; }

// Local sl_2 weight at node `node` in front of letters[from..end).
int localWeight(const KernelWord& w, std::size_t from, int node) {
    if (w.isSl2()) {
        int lambda = w.sl2Source();
        const auto& ls = w.letters();
        for (std::size_t k = ls.size(); k-- > from;) lambda += (ls[k].kind == Generator::E ? 2 : -2) * ls[k].power;
        return lambda;
    }
    Weight lambda = w.composition();
    const auto& ls = w.letters();
    for (std::size_t k = ls.size(); k-- > from;) {
        lambda = lambda.shifted(ls[k].node, ls[k].kind == Generator::E ? ls[k].power : -ls[k].power);
    }
    return lambda.pairing(node);
}

// Rewrite of the pair (left, right) acting on local weight mu, or nullopt if normal.
std::optional<Expansion> pairRule(const Letter& left, const Letter& right, const KernelWord& w, std::size_t at) {
    if (left.node == right.node) {
        if (left.kind == right.kind) {
            return Expansion{{{letter(left.kind, left.node, left.power + right.power)},
                              biBinom(left.power + right.power, left.power)}};
        }
        const int mu = localWeight(w, at + 2, left.node);
        const bool eLeft = left.kind == Generator::E;
        const int a = eLeft ? left.power : right.power;
        const int b = eLeft ? right.power : left.power;
        const int d = mu + a - b;
        if (eLeft == (d < 0)) return std::nullopt;
        const int node = left.node;
        const int reach = d >= 0 ? d : -d;
        Expansion out;
        for (int j = 0; j <= std::min(a, b); ++j) {
            BiGrade c = biBinom(reach, j);
            if (c.isZero()) continue;
            std::vector<Letter> ls;
            if (eLeft) {
                if (b - j > 0) ls.push_back(letter(Generator::F, node, b - j));
                if (a - j > 0) ls.push_back(letter(Generator::E, node, a - j));
            } else {
                if (a - j > 0) ls.push_back(letter(Generator::E, node, a - j));
                if (b - j > 0) ls.push_back(letter(Generator::F, node, b - j));
            }
            out.emplace_back(std::move(ls), std::move(c));
        }
        return out;
    }
    if (left.kind == Generator::E && right.kind == Generator::F) {
        return Expansion{{{right, left}, BiGrade(1)}};
    }
    if (left.kind == right.kind) {
        const int gap = left.node > right.node ? left.node - right.node : right.node - left.node;
        if (gap > 1 && left.node > right.node) return Expansion{{{right, left}, BiGrade(1)}};
    }
    return std::nullopt;
}

std::optional<Expansion> serreRule(const Letter& x, const Letter& y, const Letter& z) {
    if (x != z || x.kind != y.kind || x.power != 1 || y.power != 1) return std::nullopt;
    const int gap = x.node > y.node ? x.node - y.node : y.node - x.node;
    if (gap != 1) return std::nullopt;
    const Letter sq = letter(x.kind, x.node, 2);
    return Expansion{{{sq, y}, BiGrade(1)}, {{y, sq}, BiGrade(1)}};
}

std::vector<std::pair<Site, Expansion>> sites(const KernelWord& w, bool firstOnly) {
    std::vector<std::pair<Site, Expansion>> out;
    const auto& ls = w.letters();
    for (std::size_t k = 0; k + 1 < ls.size(); ++k) {
        if (auto e = pairRule(ls[k], ls[k + 1], w, k)) {
            out.push_back({{k, 2}, std::move(*e)});
            if (firstOnly) return out;
        }
        if (!w.isSl2() && k + 2 < ls.size()) {
            if (auto e = serreRule(ls[k], ls[k + 1], ls[k + 2])) {
                out.push_back({{k, 3}, std::move(*e)});
                if (firstOnly) return out;
            }
        }
    }
    return out;
}

void checkSupported(const KernelWord& w) {
    const auto& ls = w.letters();
    for (std::size_t a = 0; a < ls.size(); ++a) {
        for (std::size_t b = a + 2; b < ls.size(); ++b) {
            if (ls[a].node == ls[b].node && ls[a].kind == ls[b].kind) {
                throw UnsupportedRewrite("no normal form for " + w.toString() + " at " + w.sourceString() +
                                         ": letters " + std::string(ls[a].kind == Generator::E ? "E" : "F") +
                                         std::to_string(ls[a].node) + " at positions " + std::to_string(a) +
                                         " and " + std::to_string(b) + " cannot be brought together");
            }
        }
    }
}

}  // namespace

bool isNormal(const KernelWord& word) { return sites(word, true).empty(); }

FormalSum normalForm(const KernelWord& word, const Window& window, RewriteOrder order, std::uint64_t seed,
                     long maxSteps) {
    std::mt19937_64 rng(seed);
    std::map<KernelWord, BiGrade> pending;
    pending.emplace(word, BiGrade(1));
    FormalSum result;
    long steps = 0;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const KernelWord& w = node.key();
        const BiGrade& mult = node.mapped();
        if (w.isDead(window)) continue;
        auto found = sites(w, order == RewriteOrder::Leftmost);
        if (found.empty()) {
            if (!w.isSl2()) checkSupported(w);
            result.add(w, mult);
            continue;
        }
        if (++steps > maxSteps) {
            throw UnsupportedRewrite("rewrite cap of " + std::to_string(maxSteps) + " steps reached on " +
                                     word.toString());
        }
        std::size_t pick = 0;
        if (order == RewriteOrder::Random) {
            pick = std::uniform_int_distribution<std::size_t>(0, found.size() - 1)(rng);
        }
        const auto& [site, expansion] = found[pick];
        const auto& ls = w.letters();
        for (const auto& [middle, coeff] : expansion) {
            std::vector<Letter> next(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(site.at));
            next.insert(next.end(), middle.begin(), middle.end());
            next.insert(next.end(), ls.begin() + static_cast<std::ptrdiff_t>(site.at + site.width), ls.end());
            pending[w.withLetters(std::move(next))] += mult * coeff;
        }
    }
    return result;
}

FormalSum normalForm(const FormalSum& sum, const Window& window, RewriteOrder order, std::uint64_t seed) {
    FormalSum out;
    for (const auto& [w, m] : sum.terms()) out += normalForm(w, window, order, seed).scaled(m);
    return out;
}

Weight modelWeight(const KernelWord& word, const TensorModel& model) {
    if (word.isSl2()) {
        if (model.rank() != 2) throw InvalidArgument("sl2 word needs an m = 2 model");
        return sl2Weight(word.sl2Source(), model.length());
    }
    const Weight& w = word.composition();
    if (w.rank() != model.rank() || !model.hasWeight(w)) {
        throw InvalidArgument("weight " + w.toString() + " is not a weight of the model");
    }
    return w;
}

BlockOperator decategorifyWord(const KernelWord& word, OperatorCache& cache) {
    const auto& model = cache.model();
    const Weight source = modelWeight(word, model);
    const auto& ls = word.letters();
    Weight current = source;
    SparseMatrix mat = SparseMatrix::identity(model.block(source).size());
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        const OperatorMatrix* b = cache.block(it->node, it->kind, it->power, current);
        if (b == nullptr) return {};
        mat = b->matrix * mat;
        current = b->target;
    }
    BlockOperator out;
    out.setBlock({source, current, std::move(mat)});
    return out;
}

BlockOperator decategorifyWord(const KernelWord& word, const TensorModel& model) {
    OperatorCache cache(model);
    return decategorifyWord(word, cache);
}

BlockOperator decategorifySum(const FormalSum& sum, OperatorCache& cache) {
    BlockOperator out;
    for (const auto& [w, m] : sum.terms()) out += decategorifyWord(w, cache).scaled(decategorify(m));
    return out;
}

namespace {

struct OracleTally {
    int total = 0;
    int agree = 0;
    std::string firstFailure;
    double ms = 0;

    void record(const KernelWord& w, bool ok) {
        ++total;
        if (ok) {
            ++agree;
        } else if (firstFailure.empty()) {
            firstFailure = w.toString() + " at " + w.sourceString();
        }
    }
    CheckResult result(std::string name) const {
        std::string detail = std::to_string(agree) + "/" + std::to_string(total) + " agree";
        if (!firstFailure.empty()) detail += "; first mismatch " + firstFailure;
        return {std::move(name), agree == total, detail, ms};
    }
};

bool agrees(const KernelWord& w, OperatorCache& cache, int n) {
    return decategorifyWord(w, cache).sameAs(decategorifySum(normalForm(w, Window::symmetric(n)), cache));
}

}  // namespace

std::vector<CheckResult> rewriteOracleSuite(int maxN, int samples, std::uint64_t seed) {
    if (maxN < 1 || maxN > 10) throw InvalidArgument("rewriteOracleSuite: need 1 <= N <= 10");
    if (samples < 0) throw InvalidArgument("rewriteOracleSuite: negative sample count");
    std::vector<TensorModel> models;
    std::vector<OperatorCache> caches;
    models.reserve(static_cast<std::size_t>(maxN));
    caches.reserve(static_cast<std::size_t>(maxN));
    for (int n = 1; n <= maxN; ++n) {
        models.push_back(buildModel(2, n));
        caches.emplace_back(models.back());
    }
    std::vector<CheckResult> out;

    const std::vector<Letter> alphabet{{Generator::E, 1, 1}, {Generator::F, 1, 1}, {Generator::E, 1, 2}, {Generator::F, 1, 2}};
    for (int n = 1; n <= maxN; ++n) {
        const auto start = std::chrono::steady_clock::now();
        OracleTally tally;
        for (int lambda = -n; lambda <= n; lambda += 2) {
            for (int len = 0; len <= 4; ++len) {
                std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
                while (true) {
                    std::vector<Letter> ls;
                    for (auto i : idx) ls.push_back(alphabet[i]);
                    const KernelWord w(lambda, ls);
                    tally.record(w, agrees(w, caches[static_cast<std::size_t>(n - 1)], n));
                    std::size_t k = 0;
                    while (k < idx.size() && ++idx[k] == alphabet.size()) idx[k++] = 0;
                    if (k == idx.size()) break;
                }
            }
        }
        tally.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.push_back(tally.result("exhaustive N=" + std::to_string(n)));
    }

    std::mt19937_64 rng(seed);
    std::vector<OracleTally> random(static_cast<std::size_t>(maxN));
    OracleTally confluence;
    for (int t = 0; t < samples; ++t) {
        const auto start = std::chrono::steady_clock::now();
        const int n = std::uniform_int_distribution<int>(1, maxN)(rng);
        const int lambda = -n + 2 * std::uniform_int_distribution<int>(0, n)(rng);
        std::vector<Letter> ls(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 6)(rng)));
        for (auto& l : ls) {
            l.kind = std::uniform_int_distribution<int>(0, 1)(rng) ? Generator::E : Generator::F;
            l.power = std::uniform_int_distribution<int>(1, 3)(rng);
        }
        const KernelWord w(lambda, std::move(ls));
        auto& tally = random[static_cast<std::size_t>(n - 1)];
        tally.record(w, agrees(w, caches[static_cast<std::size_t>(n - 1)], n));
        tally.ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const Window window = Window::symmetric(n);
        const auto reference = normalForm(w, window);
        confluence.record(w, normalForm(w, window, RewriteOrder::Random, seed + 2 * static_cast<std::uint64_t>(t)) == reference &&
                                 normalForm(w, window, RewriteOrder::Random, seed + 2 * static_cast<std::uint64_t>(t) + 1) == reference);
    }
    for (int n = 1; n <= maxN; ++n) out.push_back(random[static_cast<std::size_t>(n - 1)].result("random N=" + std::to_string(n)));
    out.push_back(confluence.result("confluence"));
    return out;
}

}  // namespace rickard
