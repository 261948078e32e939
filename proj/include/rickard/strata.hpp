#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rickard/check.hpp"
#include "rickard/nilhecke.hpp"

namespace rickard {

/// One component Z_s(k,N) of the flop correspondence.
struct StratumRow {
    int s = 0;
    int baseDim = 0;   // orbit of square-zero X with rank k-s
    int fiberDim = 0;  // V and V' between im X and ker X
    int totalDim = 0;
    std::int64_t chi = 0;        // fixedPointCount(k, N, s, false)
    std::int64_t chiStrict = 0;  // fixedPointCount(k, N, s, true)
    friend bool operator==(const StratumRow&, const StratumRow&) = default;
};

struct StrataDescriptor {
    int k = 0;
    int n = 0;
    std::vector<StratumRow> rows;  // s = 0..k
};

/// Dimension of the nilpotent orbit with Jordan type `partition` in gl_N:
/// N^2 - sum of squared column lengths.
int nilpotentOrbitDim(const std::vector<int>& partition);

/// dim G(a, b) = a(b - a), and the square-zero orbit of rank r in gl_n,
/// 2r(n - r). Written once so the same expression serves integers and IntPoly.
template <class R>
R grassmannianDim(const R& a, const R& b) {
    return a * (b - a);
}
template <class R>
R squareZeroOrbitDim(const R& r, const R& n) {
    return n * n - (n - r) * (n - r) - r * r;
}
template <class R>
R stratumBaseDim(const R& k, const R& n, const R& s) {
    return squareZeroOrbitDim(k - s, n);
}
/// im X has dimension r = k-s and ker X dimension n-r: V/im X is an
/// s-plane and V'/im X an (n-2k+s)-plane in the (n-2k+2s)-dimensional ker X / im X.
/// Note this is G(s, N-2k+2s), not G(s, N-k+s); the two agree only at s = k or k = 1.
template <class R>
R stratumFiberDim(const R& k, const R& n, const R& s) {
    const R quotient = n - R(2) * k + R(2) * s;
    return grassmannianDim(s, quotient) + grassmannianDim(n - R(2) * k + s, quotient);
}

/**
 * k+1 rows with baseDim, fiberDim, totalDim and fixed-point counts.
 * Throws InvalidArgument unless 1 <= k and 2k <= N, and IntegrityError if the
 * orbit formula disagrees with the Jordan-type computation or baseDim(0)
 * differs from dim T*G(k,N) = 2k(N-k).
 */
StrataDescriptor componentTable(int k, int n);

enum class Incidence { Self, Divisor, Deeper };
std::string toString(Incidence incidence);

/// Self if s = s', Divisor if |s - s'| = 1, Deeper otherwise.
Incidence incidence(int k, int n, int s, int sPrime);

/// dimKer + dimIntersect <= N + 1. Throws InvalidArgument unless
/// 0 <= dimIntersect <= k and N-k <= dimKer <= N.
bool openLocus(int dimKer, int dimIntersect, int k, int n);

/// Pairs (S, S') of coordinate subsets with |S| = k, |S'| = N-k and
/// |S n S'| >= k-s, or exactly k-s when strict.
std::int64_t fixedPointCount(int k, int n, int s, bool strict);

/// baseDim + fiberDim - 2k(N-k) as a polynomial in x1 = k, x2 = N, x3 = s.
IntPoly equidimensionalityDefect();

/// Components, dimensions and fixed-point partition for 1 <= k <= N/2,
/// N <= maxN (only k = onlyK if it is positive), plus the symbolic identity.
std::vector<CheckResult> strataSuite(int maxN, int onlyK = 0);

}  // namespace rickard
