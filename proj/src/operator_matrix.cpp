#include "rickard/operator_matrix.hpp"

#include <set>
#include <sstream>

#include "rickard/errors.hpp"

namespace rickard {

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, LaurentScalar(1));
    return m;
}

std::size_t SparseMatrix::nonZeros() const noexcept {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

void SparseMatrix::checkIndex(std::size_t i, std::size_t j) const {
    if (i >= rows() || j >= cols_) throw InvalidArgument("SparseMatrix index out of range");
}

LaurentScalar SparseMatrix::at(std::size_t i, std::size_t j) const {
    checkIndex(i, j);
    auto it = data_[i].find(j);
    return it == data_[i].end() ? LaurentScalar{} : it->second;
}

void SparseMatrix::set(std::size_t i, std::size_t j, const LaurentScalar& v) {
    checkIndex(i, j);
    if (v.isZero()) {
        data_[i].erase(j);
    } else {
        data_[i][j] = v;
    }
}

void SparseMatrix::add(std::size_t i, std::size_t j, const LaurentScalar& v) {
    checkIndex(i, j);
    if (v.isZero()) return;
    auto [it, inserted] = data_[i].try_emplace(j, v);
    if (!inserted) {
        it->second += v;
        if (it->second.isZero()) data_[i].erase(it);
    }
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& rhs) {
    if (rows() != rhs.rows() || cols_ != rhs.cols_) throw InvalidArgument("SparseMatrix shape mismatch in +");
    for (std::size_t i = 0; i < rows(); ++i) {
        for (const auto& [j, v] : rhs.data_[i]) add(i, j, v);
    }
    return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& rhs) {
    if (rows() != rhs.rows() || cols_ != rhs.cols_) throw InvalidArgument("SparseMatrix shape mismatch in -");
    for (std::size_t i = 0; i < rows(); ++i) {
        for (const auto& [j, v] : rhs.data_[i]) add(i, j, -v);
    }
    return *this;
}

SparseMatrix& SparseMatrix::operator*=(const LaurentScalar& s) {
    if (s.isZero()) {
        for (auto& r : data_) r.clear();
        return *this;
    }
    for (auto& r : data_) {
        for (auto& [j, v] : r) v *= s;
    }
    return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("SparseMatrix shape mismatch in *");
    SparseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (const auto& [l, x] : a.data_[i]) {
            for (const auto& [j, y] : b.data_[l]) out.add(i, j, x * y);
        }
    }
    return out;
}

std::optional<SparseMatrix> SparseMatrix::divideExact(const LaurentScalar& d) const {
    SparseMatrix out(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i) {
        for (const auto& [j, v] : data_[i]) {
            auto qv = v.divideExact(d);
            if (!qv) return std::nullopt;
            out.data_[i].emplace(j, *qv);
        }
    }
    return out;
}

std::string SparseMatrix::dump() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows(); ++i) {
        for (const auto& [j, v] : data_[i]) os << i << ' ' << j << ' ' << v.toString() << '\n';
    }
    return os.str();
}

void BlockOperator::setBlock(OperatorMatrix block) {
    const Weight key = block.source;
    blocks_.insert_or_assign(key, std::move(block));
}

const OperatorMatrix* BlockOperator::block(const Weight& source) const {
    auto it = blocks_.find(source);
    return it == blocks_.end() ? nullptr : &it->second;
}

BlockOperator BlockOperator::after(const BlockOperator& rhs) const {
    BlockOperator out;
    for (const auto& [src, inner] : rhs.blocks_) {
        const OperatorMatrix* outer = block(inner.target);
        if (outer == nullptr) continue;
        out.setBlock({src, outer->target, outer->matrix * inner.matrix});
    }
    return out;
}

BlockOperator& BlockOperator::operator+=(const BlockOperator& rhs) {
    for (const auto& [src, b] : rhs.blocks_) {
        auto it = blocks_.find(src);
        if (it == blocks_.end()) {
            blocks_.emplace(src, b);
            continue;
        }
        if (it->second.target != b.target) {
            if (b.matrix.isZero()) continue;
            if (it->second.matrix.isZero()) {
                it->second = b;
                continue;
            }
            throw InvalidArgument("BlockOperator sum: target mismatch at " + src.toString());
        }
        it->second.matrix += b.matrix;
    }
    return *this;
}

BlockOperator& BlockOperator::operator-=(const BlockOperator& rhs) { return *this += rhs.scaled(LaurentScalar(-1)); }

BlockOperator BlockOperator::scaled(const LaurentScalar& s) const {
    BlockOperator out = *this;
    for (auto& [src, b] : out.blocks_) b.matrix *= s;
    return out;
}

std::optional<Weight> BlockOperator::firstDifference(const BlockOperator& other) const {
    std::set<Weight> sources;
    for (const auto& [w, b] : blocks_) sources.insert(w);
    for (const auto& [w, b] : other.blocks_) sources.insert(w);
    for (const auto& w : sources) {
        const OperatorMatrix* a = block(w);
        const OperatorMatrix* b = other.block(w);
        const bool aZero = a == nullptr || a->matrix.isZero();
        const bool bZero = b == nullptr || b->matrix.isZero();
        if (aZero && bZero) continue;
        if (aZero != bZero) return w;
        if (a->target != b->target || !(a->matrix == b->matrix)) return w;
    }
    return std::nullopt;
}

bool BlockOperator::sameAs(const BlockOperator& other) const { return !firstDifference(other).has_value(); }

}  // namespace rickard
