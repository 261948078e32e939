#include "rickard/reflection.hpp"

#include <chrono>
#include <map>
#include <optional>

#include "rickard/errors.hpp"

namespace rickard {

namespace {

double msSince(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

LaurentScalar minusQPower(int s) {
    LaurentScalar r = LaurentScalar::qPower(s);
    return s % 2 == 0 ? r : -r;
}

// sum_s coeff(s) * Outer^(outerBase+s) Inner^(innerBase+s) restricted to `source`.
SparseMatrix alternatingSum(OperatorCache& cache, int node, const Weight& source, Generator outer, int outerBase,
                            Generator inner, int innerBase, int qSign, const Weight& target) {
    const auto& model = cache.model();
    SparseMatrix total(model.block(target).size(), model.block(source).size());
    for (int s = 0;; ++s) {
        const OperatorMatrix* first = cache.block(node, inner, innerBase + s, source);
        if (first == nullptr) break;
        const OperatorMatrix* second = cache.block(node, outer, outerBase + s, first->target);
        if (second == nullptr) continue;
        if (second->target != target) throw IntegrityError("reflection term lands in " + second->target.toString());
        total += (second->matrix * first->matrix) * minusQPower(qSign * s);
    }
    return total;
}

void checkNode(const TensorModel& model, int node) {
    if (node < 1 || node >= model.rank()) {
        throw InvalidArgument("reflection: node " + std::to_string(node) + " out of range 1.." +
                              std::to_string(model.rank() - 1));
    }
}

}  // namespace

Weight weylReflect(const Weight& lambda, int node) { return lambda.reflected(node); }

ReflectionOperator reflectionOperator(OperatorCache& cache, int node) {
    const auto& model = cache.model();
    checkNode(model, node);
    ReflectionOperator out{node, {}};
    for (const auto& w : model.weights()) {
        const int p = w.pairing(node);
        const Weight target = w.reflected(node);
        SparseMatrix mat = p >= 0 ? alternatingSum(cache, node, w, Generator::F, p, Generator::E, 0, 1, target)
                                  : alternatingSum(cache, node, w, Generator::E, -p, Generator::F, 0, 1, target);
        out.op.setBlock({w, target, std::move(mat)});
    }
    return out;
}

ReflectionOperator reflectionOperator(const TensorModel& model, int node) {
    OperatorCache cache(model);
    return reflectionOperator(cache, node);
}

ReflectionOperator inverseReflection(OperatorCache& cache, int node) {
    const auto& model = cache.model();
    checkNode(model, node);
    ReflectionOperator out{node, {}};
    for (const auto& w : model.weights()) {
        const int p = w.pairing(node);
        const Weight target = w.reflected(node);
        SparseMatrix mat = p <= 0 ? alternatingSum(cache, node, w, Generator::F, 0, Generator::E, -p, -1, target)
                                  : alternatingSum(cache, node, w, Generator::E, 0, Generator::F, p, -1, target);
        out.op.setBlock({w, target, std::move(mat)});
    }
    const ReflectionOperator forward = reflectionOperator(cache, node);
    const BlockOperator id = model.identity();
    if (auto bad = out.op.after(forward.op).firstDifference(id)) {
        throw IntegrityError("inverseReflection: inverse after T" + std::to_string(node) +
                             " is not the identity on block " + bad->toString());
    }
    if (auto bad = forward.op.after(out.op).firstDifference(id)) {
        throw IntegrityError("inverseReflection: T" + std::to_string(node) +
                             " after inverse is not the identity on block " + bad->toString());
    }
    return out;
}

ReflectionOperator inverseReflection(const TensorModel& model, int node) {
    OperatorCache cache(model);
    return inverseReflection(cache, node);
}

namespace {

CheckResult braidCheck(const TensorModel& model, const std::map<int, ReflectionOperator>& t, int i, int j) {
    const auto start = std::chrono::steady_clock::now();
    const int dist = i > j ? i - j : j - i;
    CheckResult c;
    const auto& ti = t.at(i).op;
    const auto& tj = t.at(j).op;
    std::optional<Weight> diff;
    if (dist == 1) {
        c.name = "braid T" + std::to_string(i) + "T" + std::to_string(j) + "T" + std::to_string(i);
        diff = ti.after(tj).after(ti).firstDifference(tj.after(ti).after(tj));
    } else {
        c.name = "commute T" + std::to_string(i) + "T" + std::to_string(j);
        diff = ti.after(tj).firstDifference(tj.after(ti));
    }
    c.passed = !diff.has_value();
    c.detail = diff ? "counterexample block " + diff->toString()
                    : "exact on all " + std::to_string(model.weights().size()) + " blocks";
    c.elapsedMs = msSince(start);
    return c;
}

}  // namespace

CheckResult verifyBraid(const TensorModel& model, int i, int j) {
    checkNode(model, i);
    checkNode(model, j);
    if (i == j) throw InvalidArgument("verifyBraid: need two distinct nodes");
    OperatorCache cache(model);
    std::map<int, ReflectionOperator> t;
    t.emplace(i, reflectionOperator(cache, i));
    t.emplace(j, reflectionOperator(cache, j));
    return braidCheck(model, t, i, j);
}

std::vector<CheckResult> braidSuite(const TensorModel& model) {
    std::vector<CheckResult> out;
    OperatorCache cache(model);
    std::map<int, ReflectionOperator> t;
    for (int i = 1; i < model.rank(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        t.emplace(i, reflectionOperator(cache, i));
        CheckResult bookkeeping{"weyl T" + std::to_string(i), true, "target block is s_i(source) on every block", 0};
        for (const auto& [src, b] : t.at(i).op.blocks()) {
            if (b.target != weylReflect(src, i) || b.matrix.rows() != b.matrix.cols()) {
                bookkeeping.passed = false;
                bookkeeping.detail = "block " + src.toString() + " maps to " + b.target.toString();
                break;
            }
        }
        bookkeeping.elapsedMs = msSince(start);
        out.push_back(bookkeeping);

        const auto invStart = std::chrono::steady_clock::now();
        CheckResult inv{"inverse T" + std::to_string(i), true, "inverse formula composes to the identity", 0};
        try {
            inverseReflection(cache, i);
        } catch (const IntegrityError& e) {
            inv.passed = false;
            inv.detail = e.what();
        }
        inv.elapsedMs = msSince(invStart);
        out.push_back(inv);
    }
    for (int i = 1; i < model.rank(); ++i) {
        for (int j = i + 1; j < model.rank(); ++j) out.push_back(braidCheck(model, t, i, j));
    }
    return out;
}

}  // namespace rickard
