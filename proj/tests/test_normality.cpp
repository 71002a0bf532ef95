#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "padelog/normality.hpp"

using namespace padelog;

namespace {

TruncSeries geometric(int trunc) {
    return TruncSeries(std::vector<Rat>(trunc + 1, Rat(1)));
}

}  // namespace

TEST_CASE("hankel block layout") {
    // single series 1/(1-z), index (1): [[1,0],[1,1]]
    Matrix H = hankel_build({geometric(4)}, {1}, 2);
    CHECK(H == Matrix{{Rat(1), Rat(0)}, {Rat(1), Rat(1)}});

    // two blocks: exp and geometric with indices (1,0)
    Matrix H2 = hankel_build({gen_exp(Rat(1), 4), geometric(4)}, {1, 0}, 3);
    CHECK(H2 == Matrix{{Rat(1), Rat(0), Rat(1)},
                       {Rat(1), Rat(1), Rat(1)},
                       {make_rat(1, 2), Rat(1), Rat(1)}});

    CHECK_THROWS_AS(hankel_build({geometric(1)}, {1}, 4), InconclusiveTruncation);
}

TEST_CASE("normality detection") {
    CHECK(normality_test({geometric(6), gen_exp(Rat(1), 6)}, {1, 1}));
    // duplicated series can never be normal
    CHECK_FALSE(normality_test({geometric(6), geometric(6)}, {0, 0}));
    // a single series with nonzero constant term is always normal
    // (lower-triangular Toeplitz); kill the diagonal to break it
    TruncSeries shifted({Rat(0), Rat(0), Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK_FALSE(normality_test({shifted}, {1}));
    CHECK(normality_test({TruncSeries({Rat(1), Rat(2), Rat(1), Rat(0), Rat(0)})}, {4}));
}

TEST_CASE("kernel vectors give approximants of high order") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<TruncSeries> fs;
        std::vector<int> nvec = {2, 1};
        int N = 5;
        for (size_t j = 0; j < nvec.size(); ++j) {
            std::vector<Rat> c(2 * N, Rat(0));
            for (auto& x : c) x = make_rat(num(rng), den(rng));
            fs.push_back(TruncSeries(std::move(c)));
        }
        Matrix H = hankel_build(fs, nvec, N - 1);
        auto basis = kernel_basis(std::move(H));
        REQUIRE_FALSE(basis.empty());
        auto polys = kernel_to_polys(basis.front(), nvec);
        TruncSeries combo = TruncSeries::zero(2 * N - 1);
        for (size_t j = 0; j < fs.size(); ++j)
            combo = combo + polys[j].as_series(2 * N - 1) * fs[j];
        auto ord = combo.ord();
        if (ord) CHECK(*ord >= N - 1);
    }
}

TEST_CASE("determinant of the full construction is a monomial") {
    {
        auto cert = delta_certificate(build_all({Rat(0)}, {1}, 0));
        CHECK(cert.monomial_ok);
        CHECK(cert.exponent == 1);
        CHECK(cert.gamma == 1);
    }
    std::vector<std::tuple<std::vector<Rat>, std::vector<int>, int>> cases = {
        {{Rat(0)}, {2}, 1},
        {{Rat(0)}, {3}, 1},
        {{make_rat(1, 2)}, {2}, 2},
        {{Rat(0), make_rat(1, 2)}, {1, 1}, 1},
        {{Rat(0), make_rat(1, 2)}, {2, 1}, 1},
    };
    for (const auto& [om, rs, n] : cases) {
        auto sys = build_all(om, rs, n);
        auto cert = delta_certificate(sys);
        int total = 0;
        for (int r : rs) total += r;
        CHECK(cert.monomial_ok);
        CHECK(cert.exponent == (n + 1) * total);
        CHECK(cert.gamma != 0);
    }
}

TEST_CASE("small polylog-type determinants") {
    CHECK(polylog_hankel_det(1, 2) == make_rat(1, 12));
    CHECK(polylog_hankel_det(2, 2) == make_rat(7, 144));
    CHECK(polylog_hankel_det(1, 1) == 1);
}

TEST_CASE("polylog-type determinants are positive") {
    for (int r = 1; r <= 4; ++r)
        for (int n = 1; n <= 8; ++n) CHECK(polylog_hankel_det(r, n) > 0);
}

TEST_CASE("Laurent approximants of Li_1") {
    auto f = polylog_laurent_coeffs(1, 12);
    auto pa = laurent_pade(f, 1);
    REQUIRE(pa.P.degree() == 1);
    // kernel direction p_0 + p_1/2 = 0
    CHECK(Rat(pa.P[0] + pa.P[1] * make_rat(1, 2)) == 0);
    CHECK(pa.order == 2);
    CHECK(pa.order_exactly_known);
    CHECK(pa.normal);
    // Q has the right degree and the right leading behaviour
    CHECK(pa.Q.degree() == 0);
    CHECK(pa.Q[0] == pa.P[1] * f[0]);
}

TEST_CASE("Laurent approximants of Li_2 are normal up to n = 5") {
    auto f = polylog_laurent_coeffs(2, 24);
    for (int n = 0; n <= 5; ++n) {
        auto pa = laurent_pade(f, n);
        CHECK(pa.P.degree() <= n);
        CHECK(pa.normal);
        CHECK(pa.order == n + 1);
        CHECK(pa.order_exactly_known);
        CHECK(polylog_hankel_det(2, n + 1) != 0);
    }
}

TEST_CASE("1/z is normal at n = 0 but not at n = 1") {
    std::vector<Rat> f = {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    auto p0 = laurent_pade(f, 0);
    CHECK(p0.normal);
    auto p1 = laurent_pade(f, 1);
    CHECK_FALSE(p1.normal);
    CHECK(p1.order >= 2);
    CHECK_FALSE(p1.order_exactly_known);  // remainder vanishes identically
}

TEST_CASE("normality matches the square-determinant criterion") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + trial % 3;
        std::vector<Rat> f(2 * n + 4);
        for (auto& x : f) x = make_rat(num(rng), den(rng));
        if (f[0] == 0) f[0] = 1;
        auto pa = laurent_pade(f, n);
        Matrix Hs = make_matrix(n + 1, n + 1);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) Hs[i][j] = f[i + j];
        bool det_nonzero = determinant(std::move(Hs)) != 0;
        CHECK(pa.normal == det_nonzero);
        if (pa.normal) {
            CHECK(pa.order == n + 1);
            CHECK(pa.order_exactly_known);
        } else {
            CHECK(pa.order >= n + 2);
        }
    }
}

TEST_CASE("laurent_pade needs enough coefficients") {
    CHECK_THROWS_AS(laurent_pade({Rat(1), Rat(1), Rat(1)}, 1), InconclusiveTruncation);
}
