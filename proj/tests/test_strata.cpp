#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "rickard/errors.hpp"
#include "rickard/strata.hpp"

using namespace rickard;

namespace {

// Enumerate coordinate subsets as bitmasks.
std::int64_t bruteFixedPoints(int k, int n, int s, bool strict) {
    std::int64_t count = 0;
    for (unsigned a = 0; a < (1u << n); ++a) {
        if (std::popcount(a) != k) continue;
        for (unsigned b = 0; b < (1u << n); ++b) {
            if (std::popcount(b) != n - k) continue;
            const int meet = std::popcount(a & b);
            if (strict ? meet == k - s : meet >= k - s) ++count;
        }
    }
    return count;
}

// Dimension of {im X in V in ker X} counted directly: X of rank r has
// 2r(n-r) parameters; V, V' are Grassmannians of the middle quotient.
int directDimension(int k, int n, int s) {
    const int r = k - s;
    const int middle = n - 2 * r;
    const int vPart = (k - r) * (middle - (k - r));
    const int vPrimePart = (n - k - r) * (middle - (n - k - r));
    return 2 * r * (n - r) + vPart + vPrimePart;
}

}  // namespace

TEST_CASE("component table examples") {
    const auto t12 = componentTable(1, 2);
    REQUIRE(t12.rows.size() == 2);
    CHECK(t12.rows[0].totalDim == 2);
    CHECK(t12.rows[1].totalDim == 2);

    const auto t24 = componentTable(2, 4);
    REQUIRE(t24.rows.size() == 3);
    for (const auto& r : t24.rows) CHECK(r.totalDim == 8);

    const auto t25 = componentTable(2, 5);
    CHECK(t25.rows[1].baseDim == 8);
    CHECK(t25.rows[1].fiberDim == 4);
    CHECK(t25.rows[1].totalDim == 12);

    CHECK_THROWS_AS(componentTable(0, 4), InvalidArgument);
    CHECK_THROWS_AS(componentTable(3, 5), InvalidArgument);
}

TEST_CASE("nilpotent orbit dimensions") {
    CHECK(nilpotentOrbitDim({1, 1, 1}) == 0);
    CHECK(nilpotentOrbitDim({3}) == 6);  // regular orbit: N^2 - N
    CHECK(nilpotentOrbitDim({2, 1}) == 4);
    for (int n = 1; n <= 12; ++n) {
        for (int r = 0; 2 * r <= n; ++r) {
            std::vector<int> jordan(static_cast<std::size_t>(r), 2);
            jordan.resize(static_cast<std::size_t>(n - r), 1);
            CHECK(nilpotentOrbitDim(jordan) == squareZeroOrbitDim(r, n));
        }
    }
}

TEST_CASE("equidimensionality on the grid and symbolically") {
    for (int n = 2; n <= 12; ++n) {
        for (int k = 1; 2 * k <= n; ++k) {
            const auto t = componentTable(k, n);
            CHECK(t.rows.size() == static_cast<std::size_t>(k + 1));
            for (const auto& r : t.rows) {
                INFO("k=" << k << " N=" << n << " s=" << r.s);
                CHECK(r.totalDim == 2 * k * (n - k));
                CHECK(r.totalDim == r.baseDim + r.fiberDim);
                CHECK(r.totalDim == directDimension(k, n, r.s));
            }
        }
    }
    CHECK(equidimensionalityDefect().isZero());
    // the fibration G(s, N-k+s) would break the identity
    const IntPoly k = IntPoly::variable(1), n = IntPoly::variable(2), s = IntPoly::variable(3);
    const IntPoly alternative =
        stratumBaseDim(k, n, s) + IntPoly(2) * grassmannianDim(s, n - k + s) - IntPoly(2) * k * (n - k);
    CHECK_FALSE(alternative.isZero());
    CHECK(stratumFiberDim(2, 4, 1) != 2 * grassmannianDim(1, 4 - 2 + 1));
    CHECK(stratumFiberDim(1, 5, 1) == 2 * grassmannianDim(1, 5 - 1 + 1));
}

TEST_CASE("incidence") {
    CHECK(toString(incidence(2, 4, 0, 1)) == "divisor");
    CHECK(toString(incidence(2, 4, 0, 2)) == "deeper");
    CHECK(toString(incidence(2, 4, 1, 1)) == "self");
    CHECK(toString(incidence(3, 6, 3, 2)) == "divisor");
    CHECK_THROWS_AS(incidence(2, 4, 0, 3), InvalidArgument);
    CHECK_THROWS_AS(incidence(2, 4, -1, 0), InvalidArgument);
}

TEST_CASE("open locus") {
    CHECK(openLocus(3, 0, 1, 4));
    CHECK_FALSE(openLocus(4, 2, 2, 4));
    CHECK(openLocus(4, 1, 2, 4));  // boundary N+1
    CHECK_THROWS_AS(openLocus(1, 0, 2, 4), InvalidArgument);
    CHECK_THROWS_AS(openLocus(4, 3, 2, 4), InvalidArgument);
}

TEST_CASE("fixed points against enumeration") {
    CHECK(fixedPointCount(1, 2, 1, false) == 4);
    CHECK(fixedPointCount(1, 2, 0, false) == 2);
    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; 2 * k <= n && k <= 4; ++k) {
            std::int64_t partition = 0;
            std::int64_t previous = 0;
            for (int s = 0; s <= k; ++s) {
                INFO("k=" << k << " N=" << n << " s=" << s);
                const auto loose = fixedPointCount(k, n, s, false);
                CHECK(loose == bruteFixedPoints(k, n, s, false));
                CHECK(fixedPointCount(k, n, s, true) == bruteFixedPoints(k, n, s, true));
                CHECK(loose >= previous);
                previous = loose;
                partition += fixedPointCount(k, n, s, true);
            }
            const auto all = bruteFixedPoints(k, n, k, false);
            CHECK(partition == all);
            CHECK(previous == all);
        }
    }
}

TEST_CASE("strata suite") {
    const auto checks = strataSuite(12);
    CHECK(allPassed(checks));
    // 1 symbolic + 3 per (k, N)
    int pairs = 0;
    for (int n = 2; n <= 12; ++n) pairs += n / 2;
    CHECK(checks.size() == static_cast<std::size_t>(1 + 3 * pairs));
    CHECK_THROWS_AS(strataSuite(1), InvalidArgument);
}
