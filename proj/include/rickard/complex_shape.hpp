#pragma once

#include <map>
#include <string>
#include <vector>

#include "rickard/check.hpp"
#include "rickard/rewrite.hpp"

namespace rickard {

/// Term content of a complex of kernels: homological position -> direct sum.
/// Differentials are not tracked. Empty positions are never stored.
class ComplexShape {
public:
    ComplexShape() = default;
    explicit ComplexShape(Window window) : window_(window) {}
    /// id at position 0.
    static ComplexShape identity(const KernelWord& anchor, const Window& window);

    void add(int position, const KernelWord& word, const BiGrade& multiplicity);
    void add(int position, const FormalSum& sum);

    const Window& window() const noexcept { return window_; }
    const std::map<int, FormalSum>& terms() const noexcept { return terms_; }
    const FormalSum& at(int position) const;
    bool empty() const noexcept { return terms_.empty(); }

    /// Formal Euler characteristic: word -> sum_pos (-1)^pos decategorify(mult).
    std::map<KernelWord, LaurentScalar> formalEuler() const;
    /// The same, as an operator on the tensor model.
    BlockOperator eulerClass(OperatorCache& cache) const;

    /// One "[pos] sum" entry per position, ascending, joined by " | ".
    std::string toString() const;

    friend bool operator==(const ComplexShape&, const ComplexShape&) = default;

private:
    Window window_;
    std::map<int, FormalSum> terms_;
};

/**
 * Rickard complex T(lambda) from lambda to -lambda: for lambda >= 0 the terms
 * F^(lambda+s)E^(s) at position -s with multiplicity g^s h^-s; for lambda < 0
 * E^(-lambda+s)F^(s) likewise. Terms are normal-formed and dead ones dropped.
 * Throws InvalidArgument for an unbounded window.
 */
ComplexShape rickardComplex(int lambda, const Window& window);

/**
 * Inverse of rickardComplex(lambda), from -lambda to lambda: F^(s)E^(lambda+s)
 * (lambda >= 0) or E^(s)F^(-lambda+s) (lambda < 0) at position +s with
 * multiplicity g^-s h^s.
 */
ComplexShape inverseRickardComplex(int lambda, const Window& window);

/**
 * A after B: termwise normal-formed products at summed positions, then greedy
 * cancellation of equal (word, monomial) summands in adjacent positions,
 * sweeping upward. Throws IntegrityError if the formal Euler characteristic
 * changes, InvalidArgument if the windows differ.
 */
ComplexShape composeAndCancel(const ComplexShape& a, const ComplexShape& b);

/// Closed form of T^(-2l) for the P^n twist: id at 0, and F*E at positions
/// 2j-1, 2j carrying [(2j-1)(n+1)-1] and [(2j-1)(n+1)+1] for j = 1..l.
ComplexShape negativeTwistClosedForm(int ell, int n);

/**
 * T^(-2l) by iterating composeAndCancel of the two inverse Rickard complexes
 * in the window |lambda| <= n+1. Throws IntegrityError if it differs from
 * negativeTwistClosedForm.
 */
ComplexShape negativeTwistPower(int ell, int n);

/// One check per homological degree 0..maxDegree: the term there is the same
/// for at least two consecutive l up to ellMax.
std::vector<CheckResult> stabilizationCheck(int n, int ellMax, int maxDegree);

/**
 * E^(l)F^(l) at lambda = l = N-2 in the window |lambda| <= N equals
 * id + pGradedDim(N-3)*F E, checked in the rewrite engine and as matrices
 * on (C^2)^N.
 */
std::vector<CheckResult> dividedSquareCheck(int n);

/// Abstract term of a twist shape: "P·P_R" or "id".
struct AbstractTerm {
    int position;
    std::string label;
    BiGrade grade;
    friend bool operator==(const AbstractTerm&, const AbstractTerm&) = default;
};

/// {P·P_R[-2] @ -2, P·P_R @ -1, id @ 0}, or {P·P_R @ -1, id @ 0} if spherical.
std::vector<AbstractTerm> pnTwistShape(bool spherical = false);

/// P·P_R -> F E at lambda = n-1 with an extra [-n]{n}; id -> id; window |lambda| <= n+1.
ComplexShape instantiateTwist(const std::vector<AbstractTerm>& shape, int n);

/**
 * For each n in 1..nMax: the composite of the two Rickard complexes against
 * the P^n shape and against the product of reflection blocks, T^(-2l) for
 * l = 1..ellMax, the terms in degrees 3 and 4, and stabilizationCheck up to
 * maxDegree. Check names start with "n=<n> ".
 */
std::vector<CheckResult> twistSuite(int nMax, int ellMax, int maxDegree);

}  // namespace rickard
