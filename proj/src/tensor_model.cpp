#include "rickard/tensor_model.hpp"

#include <chrono>
#include <sstream>

#include "rickard/errors.hpp"

namespace rickard {

namespace {

// Pairing of a single letter's weight with alpha_i.
int letterPairing(int letter, int node) { return (letter == node + 1 ? 1 : 0) - (letter == node ? 1 : 0); }

double msSince(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

TensorModel buildModel(int m, int n, std::size_t maxBasis) {
    if (m < 2) throw InvalidArgument("buildModel: m must be >= 2");
    if (n < 1) throw InvalidArgument("buildModel: N must be >= 1");
    std::size_t dim = 1;
    for (int i = 0; i < n; ++i) {
        if (dim > maxBasis / static_cast<std::size_t>(m)) {
            throw CapacityError("buildModel: m^N exceeds basis bound " + std::to_string(maxBasis));
        }
        dim *= static_cast<std::size_t>(m);
    }
    if (dim > maxBasis) throw CapacityError("buildModel: m^N exceeds basis bound " + std::to_string(maxBasis));

    TensorModel model;
    model.m_ = m;
    model.n_ = n;
    model.letters_.resize(dim * static_cast<std::size_t>(n));
    std::vector<Weight> weightOfIndex;
    weightOfIndex.reserve(dim);
    std::map<Weight, std::vector<std::size_t>> blocks;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t rest = idx;
        std::vector<int> counts(static_cast<std::size_t>(m), 0);
        for (int p = n - 1; p >= 0; --p) {
            const int letter = static_cast<int>(rest % static_cast<std::size_t>(m)) + 1;
            rest /= static_cast<std::size_t>(m);
            model.letters_[idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(p)] =
                static_cast<std::uint8_t>(letter);
            ++counts[static_cast<std::size_t>(letter - 1)];
        }
        Weight w(std::move(counts));
        blocks[w].push_back(idx);
        weightOfIndex.push_back(std::move(w));
    }
    model.positionInBlock_.resize(dim);
    for (auto& [w, indices] : blocks) {
        model.blockIndex_.emplace(w, model.weights_.size());
        model.weights_.push_back(w);
        for (std::size_t pos = 0; pos < indices.size(); ++pos) model.positionInBlock_[indices[pos]] = pos;
        model.blocks_.push_back(std::move(indices));
    }
    model.weightOf_.resize(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) model.weightOf_[idx] = model.blockIndex_.at(weightOfIndex[idx]);
    return model;
}

std::vector<int> TensorModel::letters(std::size_t index) const {
    if (index >= dimension()) throw InvalidArgument("basis index out of range");
    const auto* p = letters_.data() + index * static_cast<std::size_t>(n_);
    return {p, p + n_};
}

std::size_t TensorModel::indexOf(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) != n_) throw InvalidArgument("indexOf: wrong word length");
    std::size_t idx = 0;
    for (int letter : word) {
        if (letter < 1 || letter > m_) throw InvalidArgument("indexOf: letter out of range");
        idx = idx * static_cast<std::size_t>(m_) + static_cast<std::size_t>(letter - 1);
    }
    return idx;
}

const std::vector<std::size_t>& TensorModel::block(const Weight& w) const {
    auto it = blockIndex_.find(w);
    if (it == blockIndex_.end()) throw InvalidArgument("no weight block " + w.toString() + " in model");
    return blocks_[it->second];
}

BlockOperator TensorModel::identity() const {
    return diagonal([](const Weight&) { return LaurentScalar(1); });
}

BlockOperator chevalley(const TensorModel& model, int node, Generator kind) {
    if (node < 1 || node >= model.rank()) {
        throw InvalidArgument("chevalley: node " + std::to_string(node) + " out of range 1.." +
                              std::to_string(model.rank() - 1));
    }
    const int from = kind == Generator::E ? node : node + 1;
    const int to = kind == Generator::E ? node + 1 : node;
    const int shift = kind == Generator::E ? 1 : -1;
    BlockOperator out;
    for (const auto& source : model.weights()) {
        const Weight target = source.shifted(node, shift);
        if (!model.hasWeight(target)) continue;
        const auto& srcBlock = model.block(source);
        SparseMatrix mat(model.block(target).size(), srcBlock.size());
        for (std::size_t col = 0; col < srcBlock.size(); ++col) {
            std::vector<int> word = model.letters(srcBlock[col]);
            const int n = static_cast<int>(word.size());
            for (int p = 0; p < n; ++p) {
                if (word[static_cast<std::size_t>(p)] != from) continue;
                // E acts at p with K on the factors before it; F with K^-1 on the factors after it.
                int exponent = 0;
                if (kind == Generator::E) {
                    for (int t = 0; t < p; ++t) exponent += letterPairing(word[static_cast<std::size_t>(t)], node);
                } else {
                    for (int t = p + 1; t < n; ++t) exponent -= letterPairing(word[static_cast<std::size_t>(t)], node);
                }
                word[static_cast<std::size_t>(p)] = to;
                const std::size_t row = model.positionInBlock(model.indexOf(word));
                word[static_cast<std::size_t>(p)] = from;
                mat.add(row, col, LaurentScalar::qPower(exponent));
            }
        }
        out.setBlock({source, target, std::move(mat)});
    }
    return out;
}

BlockOperator dividedPower(const TensorModel& model, int node, Generator kind, int r) {
    if (r < 0) throw InvalidArgument("dividedPower: r must be >= 0");
    if (r == 0) return model.identity();
    const BlockOperator gen = chevalley(model, node, kind);
    BlockOperator power = gen;
    for (int i = 1; i < r; ++i) power = gen.after(power);
    const LaurentScalar denom = qfact(r);
    BlockOperator out;
    for (const auto& [src, b] : power.blocks()) {
        auto divided = b.matrix.divideExact(denom);
        if (!divided) {
            throw IntegrityError("dividedPower: entry of " + std::string(kind == Generator::E ? "E" : "F") +
                                 std::to_string(node) + "^" + std::to_string(r) + " on block " +
                                 src.toString() + " not divisible by [" + std::to_string(r) + "]!");
        }
        out.setBlock({b.source, b.target, std::move(*divided)});
    }
    return out;
}

const BlockOperator& OperatorCache::dividedPower(int node, Generator kind, int r) {
    const auto key = std::make_tuple(node, static_cast<int>(kind), r);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, rickard::dividedPower(*model_, node, kind, r)).first->second;
}

const OperatorMatrix* OperatorCache::block(int node, Generator kind, int r, const Weight& source) {
    if (r > model_->length()) return nullptr;
    return dividedPower(node, kind, r).block(source);
}

namespace {

std::string genName(Generator g, int node) { return (g == Generator::E ? "E" : "F") + std::to_string(node); }

CheckResult compareOperators(std::string name, const BlockOperator& lhs, const BlockOperator& rhs,
                             std::chrono::steady_clock::time_point start) {
    CheckResult c;
    c.name = std::move(name);
    auto diff = lhs.firstDifference(rhs);
    c.passed = !diff.has_value();
    c.detail = diff ? "counterexample block " + diff->toString() : "holds on all blocks";
    c.elapsedMs = msSince(start);
    return c;
}

}  // namespace

std::vector<CheckResult> relationSuite(const TensorModel& model) {
    std::vector<CheckResult> out;
    const int m = model.rank();
    const int n = model.length();
    OperatorCache cache(model);
    for (int i = 1; i < m; ++i) {
        for (Generator g : {Generator::E, Generator::F}) {
            const auto start = std::chrono::steady_clock::now();
            const BlockOperator& gen = cache.dividedPower(i, g, 1);
            bool ok = true;
            std::string detail = "holds for r = 0.." + std::to_string(n);
            for (int r = 0; r <= n && ok; ++r) {
                BlockOperator left = gen.after(cache.dividedPower(i, g, r));
                BlockOperator right = cache.dividedPower(i, g, r + 1).scaled(qint(r + 1));
                if (auto d = left.firstDifference(right)) {
                    ok = false;
                    detail = "r=" + std::to_string(r) + ", counterexample block " + d->toString();
                }
            }
            out.push_back({"merge " + genName(g, i), ok, detail, msSince(start)});
        }
        {
            const auto start = std::chrono::steady_clock::now();
            const auto& e = cache.dividedPower(i, Generator::E, 1);
            const auto& f = cache.dividedPower(i, Generator::F, 1);
            BlockOperator lhs = e.after(f);
            lhs -= f.after(e);
            BlockOperator rhs = model.diagonal([i](const Weight& w) { return qint(w.pairing(i)); });
            out.push_back(compareOperators("commutator E" + std::to_string(i) + "F" + std::to_string(i), lhs, rhs, start));
        }
        for (int j = 1; j < m; ++j) {
            if (j == i) continue;
            const int dist = i > j ? i - j : j - i;
            for (Generator g : {Generator::E, Generator::F}) {
                const auto start = std::chrono::steady_clock::now();
                const auto& gi = cache.dividedPower(i, g, 1);
                const auto& gj = cache.dividedPower(j, g, 1);
                if (dist == 1) {
                    BlockOperator lhs = gi.after(gi).after(gj);
                    lhs -= gi.after(gj).after(gi).scaled(qint(2));
                    lhs += gj.after(gi).after(gi);
                    out.push_back(compareOperators("serre " + genName(g, i) + "^2 " + genName(g, j), lhs,
                                                   BlockOperator{}, start));
                } else if (i < j) {
                    out.push_back(compareOperators("commute " + genName(g, i) + " " + genName(g, j),
                                                   gi.after(gj), gj.after(gi), start));
                }
            }
            const auto start = std::chrono::steady_clock::now();
            const auto& ei = cache.dividedPower(i, Generator::E, 1);
            const auto& fj = cache.dividedPower(j, Generator::F, 1);
            out.push_back(compareOperators("commute F" + std::to_string(j) + " E" + std::to_string(i),
                                           fj.after(ei), ei.after(fj), start));
        }
    }
    return out;
}

std::vector<CheckResult> dividedPowerExactness(const TensorModel& model, int maxR) {
    std::vector<CheckResult> out;
    const int top = std::min(model.length(), maxR);
    for (int i = 1; i < model.rank(); ++i) {
        for (Generator g : {Generator::E, Generator::F}) {
            const auto start = std::chrono::steady_clock::now();
            const BlockOperator gen = chevalley(model, i, g);
            BlockOperator power = model.identity();
            bool ok = true;
            std::string detail = "exact for r = 1.." + std::to_string(top);
            for (int r = 1; r <= top && ok; ++r) {
                power = gen.after(power);
                const LaurentScalar f = qfact(r);
                for (const auto& [src, b] : power.blocks()) {
                    if (!b.matrix.divideExact(f)) {
                        ok = false;
                        detail = "r=" + std::to_string(r) + " not divisible on block " + src.toString();
                        break;
                    }
                }
            }
            out.push_back({"divisible " + genName(g, i), ok, detail, msSince(start)});
        }
    }
    return out;
}

}  // namespace rickard
