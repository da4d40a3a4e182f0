#include "support.hpp"

#include <gtest/gtest.h>

using namespace toric;
using namespace toric::testing;

namespace {

IntMatrix mat(std::vector<std::vector<long>> rows) {
    IntMatrix out;
    for (auto& r : rows) out.push_back(to_int_vector(r));
    return out;
}

IntMatrix diagonal(const IntVector& d, std::size_t rows, std::size_t cols) {
    IntMatrix out(rows, IntVector(cols, Int(0)));
    for (std::size_t i = 0; i < d.size(); ++i) out[i][i] = d[i];
    return out;
}

Int det(IntMatrix a) {
    // fraction-free elimination
    const std::size_t n = a.size();
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

void expect_smith(const IntMatrix& a, std::size_t cols) {
    auto s = smith_normal_form(a, cols);
    const std::size_t rows = a.size();
    EXPECT_EQ(multiply(multiply(s.left, a), s.right), diagonal(s.diag, rows, cols));
    EXPECT_EQ(abs(det(s.left)), 1);
    EXPECT_EQ(abs(det(s.right)), 1);
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
        EXPECT_GE(s.diag[i], 0);
        if (s.diag[i] != 0) {
            EXPECT_EQ(s.diag[i + 1] % s.diag[i], 0);
        } else {
            EXPECT_EQ(s.diag[i + 1], 0);
        }
    }
}

}  // namespace

TEST(Smith, Identity) {
    auto s = smith_normal_form(identity_matrix(2));
    EXPECT_EQ(s.diag, to_int_vector({1, 1}));
    EXPECT_EQ(s.left, identity_matrix(2));
    EXPECT_EQ(s.right, identity_matrix(2));
}

TEST(Smith, SmallExample) {
    auto a = mat({{2, 4}, {6, 8}});
    EXPECT_EQ(smith_normal_form(a).diag, to_int_vector({2, 4}));
    expect_smith(a, 2);
}

TEST(Smith, Zero) { EXPECT_EQ(smith_normal_form(mat({{0, 0}, {0, 0}})).diag, to_int_vector({0, 0})); }

TEST(Smith, RandomMatricesSatisfyDecomposition) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-6, 6), size(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = size(rng), cols = size(rng);
        IntMatrix a(rows, IntVector(cols));
        for (auto& r : a)
            for (auto& x : r) x = entry(rng);
        expect_smith(a, cols);
    }
}

TEST(Smith, DeterminantIsProductOfDiagonal) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix a(3, IntVector(3));
        for (auto& r : a)
            for (auto& x : r) x = entry(rng);
        auto s = smith_normal_form(a);
        EXPECT_EQ(abs(det(a)), s.diag[0] * s.diag[1] * s.diag[2]);
    }
}

TEST(Primitive, Examples) {
    EXPECT_EQ(primitive(to_int_vector({2, 4})), to_int_vector({1, 2}));
    EXPECT_EQ(primitive(to_int_vector({-3, 0})), to_int_vector({-1, 0}));
    EXPECT_EQ(primitive(to_int_vector({1, 1, 1})), to_int_vector({1, 1, 1}));
}

TEST(Kernel, BasisIsInKernelAndSaturated) {
    auto a = mat({{1, 2, 3}, {2, 4, 6}});
    auto k = kernel_basis(a, 3);
    ASSERT_EQ(k.size(), 2u);
    for (const auto& v : k) EXPECT_EQ(toric::apply(a, v), to_int_vector({0, 0}));
    // saturated: the basis extends to a lattice basis
    auto s = smith_normal_form(k);
    EXPECT_EQ(s.diag, to_int_vector({1, 1}));
}

TEST(UnimodularInverse, RoundTrip) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto u = random_unimodular(4, rng);
        EXPECT_EQ(multiply(u, unimodular_inverse(u)), identity_matrix(4));
    }
}

TEST(AffineReduction, EvenSegmentKeepsBothPoints) {
    // 1 + t^2 = 0 has two roots in C*; the saturation of 2Z is Z and the
    // reduced support stays {0, 2}
    auto red = affine_lattice_reduction({support({{0, 0}, {2, 0}})});
    EXPECT_EQ(red.rank, 1u);
    ASSERT_EQ(red.supports.size(), 1u);
    EXPECT_EQ(red.supports[0], support({{0}, {2}}));
}

TEST(AffineReduction, FullRankUnchangedUpToTranslation) {
    auto red = affine_lattice_reduction({support({{0, 0}, {1, 0}, {0, 1}})});
    EXPECT_EQ(red.rank, 2u);
    // reduced supports come back sorted
    EXPECT_EQ(red.supports[0], support({{0, 0}, {0, 1}, {1, 0}}));
    auto shifted = affine_lattice_reduction({support({{5, 3}, {6, 3}, {5, 4}})});
    EXPECT_EQ(shifted.supports, red.supports);
}

TEST(AffineReduction, Singleton) {
    auto red = affine_lattice_reduction({support({{1, 1}})});
    EXPECT_EQ(red.rank, 0u);
    ASSERT_EQ(red.supports.size(), 1u);
    EXPECT_EQ(red.supports[0], SupportSet{IntVector{}});
}

TEST(AffineReduction, IdempotentOnRandomSupports) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coord(-3, 3), count(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<SupportSet> supports;
        int k = 1 + trial % 2;
        for (int i = 0; i < k; ++i) {
            SupportSet s;
            int n = count(rng);
            for (int j = 0; j < n; ++j) s.push_back(to_int_vector({coord(rng), coord(rng), 2L * coord(rng)}));
            supports.push_back(canonical(s));
        }
        auto once = affine_lattice_reduction(supports);
        auto twice = affine_lattice_reduction(once.supports);
        EXPECT_EQ(twice.rank, once.rank);
        EXPECT_EQ(twice.supports, once.supports);
    }
}

TEST(Binomial, SignedUpperArgument) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(2, 5), 0);
    EXPECT_EQ(binomial_signed(-1, 3), -1);
    EXPECT_EQ(binomial_signed(-2, 2), 3);
}
