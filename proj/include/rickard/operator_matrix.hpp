#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rickard/laurent.hpp"
#include "rickard/weight.hpp"

namespace rickard {

/// Row-major sparse matrix over Z[q, q^-1]. Stored entries are never zero.
class SparseMatrix {
public:
    using Row = std::map<std::size_t, LaurentScalar>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}
    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return data_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonZeros() const noexcept;
    bool isZero() const noexcept { return nonZeros() == 0; }

    const Row& row(std::size_t i) const { return data_.at(i); }
    LaurentScalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const LaurentScalar& v);
    void add(std::size_t i, std::size_t j, const LaurentScalar& v);

    SparseMatrix& operator+=(const SparseMatrix& rhs);
    SparseMatrix& operator-=(const SparseMatrix& rhs);
    SparseMatrix& operator*=(const LaurentScalar& s);
    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
    friend SparseMatrix operator*(SparseMatrix a, const LaurentScalar& s) { return a *= s; }
    friend SparseMatrix operator*(const LaurentScalar& s, SparseMatrix a) { return a *= s; }
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

    /// Divides every entry exactly; nullopt if any entry leaves a remainder.
    std::optional<SparseMatrix> divideExact(const LaurentScalar& d) const;

    /// Coordinate triples "row col laurent", one per line, row-major.
    std::string dump() const;

private:
    void checkIndex(std::size_t i, std::size_t j) const;

    std::size_t cols_ = 0;
    std::vector<Row> data_;
};

/// A single weight-block map: matrix from the source block to the target block.
struct OperatorMatrix {
    Weight source;
    Weight target;
    SparseMatrix matrix;

    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;
};

/**
 * An operator on the whole model, given block by block: each source weight
 * has at most one target block. A missing source block means the operator
 * is zero there.
 */
class BlockOperator {
public:
    BlockOperator() = default;

    void setBlock(OperatorMatrix block);
    const OperatorMatrix* block(const Weight& source) const;
    const std::map<Weight, OperatorMatrix>& blocks() const noexcept { return blocks_; }

    /// (*this) after rhs.
    BlockOperator after(const BlockOperator& rhs) const;
    BlockOperator& operator+=(const BlockOperator& rhs);
    BlockOperator& operator-=(const BlockOperator& rhs);
    BlockOperator scaled(const LaurentScalar& s) const;

    /// Equality as linear maps: zero blocks and missing blocks agree.
    bool sameAs(const BlockOperator& other) const;
    /// First source weight where the two differ, if any.
    std::optional<Weight> firstDifference(const BlockOperator& other) const;

private:
    std::map<Weight, OperatorMatrix> blocks_;
};

}  // namespace rickard
