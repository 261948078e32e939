#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "rickard/check.hpp"
#include "rickard/operator_matrix.hpp"
#include "rickard/weight.hpp"

namespace rickard {

enum class Generator { E, F };

inline constexpr std::size_t kDefaultMaxBasis = std::size_t{1} << 20;

/**
 * The N-fold tensor power of the vector representation of U_q(sl_m).
 *
 * Basis vectors are words a_1 ... a_N over {1..m}, ordered lexicographically
 * (index = base-m value with a_1 most significant). The weight of a word counts
 * its letters; weight blocks list basis indices in increasing order.
 */
class TensorModel {
public:
    int rank() const noexcept { return m_; }
    int length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return weightOf_.size(); }

    /// Letters of basis vector `index`, each in 1..m.
    std::vector<int> letters(std::size_t index) const;
    std::size_t indexOf(const std::vector<int>& letters) const;

    const Weight& weightOf(std::size_t index) const { return weights_[weightOf_.at(index)]; }
    /// All weights with a nonempty block, sorted.
    const std::vector<Weight>& weights() const noexcept { return weights_; }
    bool hasWeight(const Weight& w) const { return blockIndex_.count(w) != 0; }
    /// Basis indices of the weight block, ascending. Throws for an absent weight.
    const std::vector<std::size_t>& block(const Weight& w) const;
    /// Position of a basis vector within its own weight block.
    std::size_t positionInBlock(std::size_t index) const { return positionInBlock_.at(index); }

    BlockOperator identity() const;
    /// Block-diagonal operator acting on block lambda by f(lambda) * identity.
    template <typename F>
    BlockOperator diagonal(F&& f) const {
        BlockOperator out;
        for (const auto& w : weights_) {
            out.setBlock({w, w, SparseMatrix::identity(block(w).size()) * f(w)});
        }
        return out;
    }

    friend TensorModel buildModel(int m, int n, std::size_t maxBasis);

private:
    TensorModel() = default;

    int m_ = 0;
    int n_ = 0;
    std::vector<std::uint8_t> letters_;      // dimension * n, row-major
    std::vector<std::size_t> weightOf_;      // basis index -> index into weights_
    std::vector<std::size_t> positionInBlock_;
    std::vector<Weight> weights_;
    std::map<Weight, std::size_t> blockIndex_;
    std::vector<std::vector<std::size_t>> blocks_;
};

/// Throws InvalidArgument for m < 2 or N < 1 and CapacityError when m^N > maxBasis.
TensorModel buildModel(int m, int n, std::size_t maxBasis = kDefaultMaxBasis);

/// E_i or F_i under the coproduct Delta(E) = E (x) 1 + K (x) E,
/// Delta(F) = F (x) K^-1 + 1 (x) F, with K_i = q^(pairing with alpha_i).
BlockOperator chevalley(const TensorModel& model, int node, Generator kind);

/// chevalley(node, kind)^r divided exactly by [r]!. r = 0 is the identity.
BlockOperator dividedPower(const TensorModel& model, int node, Generator kind, int r);

/// Memoizes divided powers for a single model; not thread-safe.
class OperatorCache {
public:
    explicit OperatorCache(const TensorModel& model) : model_(&model) {}
    const TensorModel& model() const noexcept { return *model_; }
    const BlockOperator& dividedPower(int node, Generator kind, int r);
    const OperatorMatrix* block(int node, Generator kind, int r, const Weight& source);

private:
    const TensorModel* model_;
    std::map<std::tuple<int, int, int>, BlockOperator> cache_;
};

/**
 * Exact quantum-group identities on every weight block:
 *  merge      E_i E_i^(r) = [r+1] E_i^(r+1) (and for F),
 *  commutator E_i F_i - F_i E_i = [pairing_i] id,
 *  serre      E_i^2 E_j - [2] E_i E_j E_i + E_j E_i^2 = 0 for |i-j| = 1 (and for F),
 *  commute    E_i E_j = E_j E_i (|i-j| > 1), F_j E_i = E_i F_j (i != j).
 */
std::vector<CheckResult> relationSuite(const TensorModel& model);

/// Every entry of E_i^r (and F_i^r) divisible by [r]! for r <= min(N, maxR).
std::vector<CheckResult> dividedPowerExactness(const TensorModel& model, int maxR);

}  // namespace rickard
