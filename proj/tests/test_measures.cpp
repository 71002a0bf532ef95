#include <catch2/catch_amalgamated.hpp>

#include "padelog/measures.hpp"

using namespace padelog;
using Catch::Matchers::WithinAbs;

namespace {

double dbl(const Real& x) { return static_cast<double>(x); }

MeasureInputs corollary_inputs(int r, const Rat& alpha, double eps) {
    MeasureInputs in;
    in.omegas = {Rat(0)};
    in.rs = {r};
    in.alpha = alpha;
    in.place = PlaceSpec::infinite_place();
    in.epsilon = Real(eps);
    return in;
}

}  // namespace

TEST_CASE("constant C(omega)") {
    set_precision_bits(256);
    // m = 1: no pair terms, C = (r+1) log 2 + r
    CHECK_THAT(dbl(c_omega({Rat(0)}, {5}) - (Real(6) * log(Real(2)) + 5)),
               WithinAbs(0.0, 1e-30));
    // m = 2, gap 1/2: pair term 3 * 1 * (2/1) * (1/1) = 6
    Real expect = Real(3) * log(Real(2)) + 6 + 1;
    CHECK_THAT(dbl(c_omega({Rat(0), make_rat(1, 2)}, {1, 1}) - expect), WithinAbs(0.0, 1e-30));
    // m = 2, gap 1/3: den 3, phi 2, coprime harmonic 1 + 1/2
    Real expect3 = Real(4) * log(Real(2)) + Real(2) +
                   Real(3 * 2) * to_real(make_rat(3, 2) * make_rat(3, 2));
    CHECK_THAT(dbl(c_omega({Rat(0), make_rat(1, 3)}, {2, 1}) - expect3), WithinAbs(0.0, 1e-30));
}

TEST_CASE("heights at places") {
    set_precision_bits(256);
    CHECK_THAT(dbl(height_at(Rat(100), PlaceSpec::infinite_place())), WithinAbs(std::log(100.0), 1e-12));
    CHECK(height_at(make_rat(1, 2), PlaceSpec::infinite_place()) == 0);
    CHECK_THAT(dbl(height_at(make_rat(1, 8), PlaceSpec::finite_place(Int(2)))),
               WithinAbs(3 * std::log(2.0), 1e-12));
    CHECK(height_at(Rat(8), PlaceSpec::finite_place(Int(2))) == 0);
    CHECK_THAT(dbl(height_total(make_rat(-3, 2))), WithinAbs(std::log(3.0), 1e-12));
}

TEST_CASE("exponent table for powers of ten") {
    set_precision_bits(256);
    const double expect_mu[] = {1740.6055, 81.2650, 43.9892, 31.1889, 24.7161, 20.8088, 18.1940};
    for (int e = 16; e <= 22; ++e) {
        Rat alpha = pow_rat(Rat(10), e);
        auto rep = measure(corollary_inputs(5, alpha, 0.1));
        REQUIRE(rep.valid);
        CHECK_THAT(dbl(rep.mu), WithinAbs(expect_mu[e - 16], 0.01));
        // sign of alpha does not matter
        auto neg = measure(corollary_inputs(5, -alpha, 0.1));
        REQUIRE(neg.valid);
        CHECK_THAT(dbl(neg.mu - rep.mu), WithinAbs(0.0, 1e-25));
    }
}

TEST_CASE("report agrees with the specialized display") {
    set_precision_bits(256);
    for (int r = 3; r <= 6; ++r) {
        Rat alpha = pow_rat(Rat(10), 25);
        auto rep = measure(corollary_inputs(r, alpha, 0.5));
        REQUIRE(rep.valid);
        Real h_inf = height_at(alpha, PlaceSpec::infinite_place());
        // V = r h_inf - (r-1)(h + (r+1) log 2 + r)
        CHECK_THAT(dbl(rep.V - corollary_V(r, alpha)), WithinAbs(0.0, 1e-25));
        // mu = r h_inf / (V - eps)
        CHECK_THAT(dbl(rep.mu - Real(r) * h_inf / (rep.V - Real(0.5))), WithinAbs(0.0, 1e-25));
        // B + U = (sum r - 1)(h + C(omega))
        CHECK_THAT(dbl(rep.B + rep.U - Real(r - 1) * (height_total(alpha) + rep.C_omega)),
                   WithinAbs(0.0, 1e-25));
    }
}

TEST_CASE("log C is reproducible from the reported constants") {
    set_precision_bits(256);
    Rat alpha = pow_rat(Rat(10), 17);
    auto rep = measure(corollary_inputs(5, alpha, 0.1));
    REQUIRE(rep.valid);
    Real Vme = rep.V - Real(0.1);
    Real logC = -log(Real(2)) - (Vme + log(Real(2))) * (rep.B + rep.U + Real(0.1)) / Vme;
    CHECK_THAT(dbl(log(rep.C_eps) - logC), WithinAbs(0.0, 1e-7));
}

TEST_CASE("epsilon window") {
    set_precision_bits(256);
    Rat alpha = pow_rat(Rat(10), 17);
    auto base = measure(corollary_inputs(5, alpha, 0.1));
    REQUIRE(base.valid);
    double V = dbl(base.V);
    // invalid outside (0, V)
    CHECK_FALSE(measure(corollary_inputs(5, alpha, 0.0)).valid);
    CHECK_FALSE(measure(corollary_inputs(5, alpha, V + 1)).valid);
    CHECK_THROWS_AS(criterion_eval(base.A, base.B, base.U, base.V), std::range_error);
    // mu grows as eps approaches V
    double prev = 0;
    for (double eps : {0.1, 0.5 * V, 0.9 * V, 0.99 * V}) {
        auto rep = measure(corollary_inputs(5, alpha, eps));
        REQUIRE(rep.valid);
        CHECK(dbl(rep.mu) > prev);
        prev = dbl(rep.mu);
    }
}

TEST_CASE("mu decreases in |alpha|") {
    set_precision_bits(256);
    double prev = 1e9;
    for (int e = 16; e <= 22; ++e) {
        auto rep = measure(corollary_inputs(5, pow_rat(Rat(10), e), 0.1));
        REQUIRE(rep.valid);
        CHECK(dbl(rep.mu) < prev);
        prev = dbl(rep.mu);
    }
}

TEST_CASE("threshold exponents") {
    set_precision_bits(256);
    // r = 3: smallest integer |alpha| is ceil(e^{2(4 log 2 + 3)}) = 103278
    Real t3 = exp(corollary_threshold_exponent(3));
    CHECK(floor(t3) == 103277);
    CHECK_THAT(dbl(corollary_threshold_exponent(4)), WithinAbs(22.3973, 5e-4));
    CHECK_THAT(dbl(corollary_threshold_exponent(5)), WithinAbs(36.6355, 5e-4));
    // V just past the r=3 threshold turns positive
    CHECK(dbl(corollary_V(3, Rat(103278))) > 0);
    CHECK(dbl(corollary_V(3, Rat(103277))) < 0);
}

TEST_CASE("hypotheses are enforced") {
    set_precision_bits(256);
    CHECK_THROWS_AS(measure(corollary_inputs(5, Rat(0), 0.1)), HypothesisViolation);
    CHECK_THROWS_AS(measure(corollary_inputs(5, Rat(-1), 0.1)), HypothesisViolation);
    CHECK_THROWS_AS(measure(corollary_inputs(5, make_rat(1, 2), 0.1)), HypothesisViolation);

    MeasureInputs in;
    in.omegas = {Rat(0)};
    in.rs = {2};
    in.place = PlaceSpec::finite_place(Int(2));
    in.epsilon = Real(0.1);
    in.alpha = Rat(8);  // |8|_2 = 1/8 < 1
    CHECK_THROWS_AS(measure(in), HypothesisViolation);
    in.alpha = make_rat(1, 8);
    CHECK_NOTHROW(measure(in));
}

TEST_CASE("p-adic correction term when p divides den(omega)") {
    set_precision_bits(256);
    MeasureInputs in;
    in.omegas = {make_rat(1, 2)};
    in.rs = {1};
    in.place = PlaceSpec::finite_place(Int(2));
    in.epsilon = Real(0.1);
    // needs |alpha|_2 > 2^{2/(2-1)}: valuation at most -3
    in.alpha = make_rat(1, 4);
    CHECK_THROWS_AS(measure(in), HypothesisViolation);
    in.alpha = make_rat(1, 8);
    auto rep = measure(in);
    for (const auto& [label, value] : rep.terms)
        if (label == "A.padic_correction")
            CHECK_THAT(dbl(value + Real(2) * log(Real(2))), WithinAbs(0.0, 1e-25));
}
