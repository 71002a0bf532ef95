#include <catch2/catch_amalgamated.hpp>

#include "padelog/pade_exp.hpp"

using namespace padelog;

TEST_CASE("partial fractions of 1/(x(x-1))") {
    PoleConfig cfg{{Rat(0), Rat(1)}, {1, 1}};
    auto t = partial_fractions(cfg);
    CHECK(t.coeff[0][0] == -1);
    CHECK(t.coeff[1][0] == 1);
    CHECK(verify_recombination(cfg, t));
}

TEST_CASE("partial fractions of 1/(x^2 (x-1)^2)") {
    // 2/x + 1/x^2 - 2/(x-1) + 1/(x-1)^2
    PoleConfig cfg{{Rat(0), Rat(1)}, {2, 2}};
    auto t = partial_fractions(cfg);
    CHECK(t.coeff[0][0] == 2);
    CHECK(t.coeff[0][1] == 1);
    CHECK(t.coeff[1][0] == -2);
    CHECK(t.coeff[1][1] == 1);
    CHECK(verify_recombination(cfg, t));
}

TEST_CASE("recombination oracle across random-ish pole layouts") {
    std::vector<PoleConfig> cases = {
        {{Rat(0), make_rat(1, 2), Rat(2)}, {1, 2, 1}},
        {{make_rat(-1, 3), Rat(1), make_rat(5, 2)}, {2, 2, 2}},
        {{Rat(0), Rat(1), Rat(2), Rat(3)}, {1, 1, 1, 1}},
        {{Rat(0), make_rat(1, 3), make_rat(4, 3)}, {3, 1, 2}},
    };
    for (const auto& cfg : cases) CHECK(verify_recombination(cfg, partial_fractions(cfg)));
}

TEST_CASE("pole config validation") {
    CHECK_THROWS_AS(partial_fractions(PoleConfig{{Rat(0), Rat(0)}, {1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(partial_fractions(PoleConfig{{Rat(0)}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(partial_fractions(PoleConfig{{}, {}}), std::invalid_argument);
}

TEST_CASE("explicit approximants for (1, e^z) at weight (1,1)") {
    auto sys = mahler_approximants({Rat(0), Rat(1)}, {1, 1}, 8);
    REQUIRE(sys.approximants.size() == 2);
    CHECK(sys.approximants[0] == Poly({Rat(2), Rat(1)}));
    CHECK(sys.approximants[1] == Poly({Rat(-2), Rat(1)}));
    CHECK(sys.expected_order == 3);
    CHECK(sys.remainder.ord() == 3);
    CHECK(sys.remainder[3] == make_rat(1, 6));
}

TEST_CASE("remainder order matches the weight count") {
    std::vector<std::pair<std::vector<Rat>, std::vector<int>>> cases = {
        {{Rat(0), Rat(1)}, {2, 2}},
        {{Rat(0), Rat(1), Rat(2)}, {1, 1, 1}},
        {{Rat(0), make_rat(1, 2)}, {2, 1}},
        {{Rat(0), Rat(1), Rat(3)}, {2, 1, 1}},
        {{make_rat(-1, 2), make_rat(1, 2), make_rat(3, 2)}, {1, 2, 1}},
    };
    for (const auto& [om, wt] : cases) {
        int expect = -1;
        for (int r : wt) expect += r + 1;
        auto sys = mahler_approximants(om, wt, expect + 4);
        CHECK(sys.remainder.ord() == expect);
    }
}

TEST_CASE("degree bounds deg P_h <= r_h") {
    auto sys = mahler_approximants({Rat(0), Rat(1), Rat(2)}, {2, 1, 3}, 12);
    for (size_t h = 0; h < sys.approximants.size(); ++h)
        CHECK(sys.approximants[h].degree() <= sys.weights[h]);
}

TEST_CASE("perfectness over all distinct-integer-node systems up to total weight 8") {
    // omegas subsets of {0,1,2,3}, each weight vector with sum (r_h+1) <= 8
    std::vector<Rat> nodes = {Rat(0), Rat(1), Rat(2), Rat(3)};
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<Rat> om;
        for (int b = 0; b < 4; ++b)
            if (mask & (1u << b)) om.push_back(nodes[b]);
        if (om.size() < 2) continue;
        size_t m = om.size();
        std::vector<int> wt(m, 0);
        while (true) {
            int total = 0;
            for (int r : wt) total += r + 1;
            if (total <= 8) CHECK(check_perfectness(om, wt));
            size_t pos = 0;
            while (pos < m) {
                if (++wt[pos] <= 3) break;
                wt[pos++] = 0;
            }
            if (pos == m) break;
        }
    }
}
