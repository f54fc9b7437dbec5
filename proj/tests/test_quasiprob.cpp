#include <doctest.h>

#include <cmath>

#include "inaccess/quasiprob.hpp"

using namespace inaccess;

TEST_CASE("additive valuation") {
    const Valuation v({0.5, 0.5, 0.0, 0.0}, 4);
    CHECK(value(v, Statement::from_atoms({0, 1}, 4)) == 1.0);
    CHECK(value(v, Statement::top(4)) == 1.0);
    CHECK(value(v, Statement::bottom(4)) == 0.0);

    const Valuation b3({-1.0 / 16, 3.0 / 8, -1.0 / 16, 3.0 / 4}, 4);
    CHECK(value(b3, Statement::from_atoms({0, 2}, 4)) == doctest::Approx(-0.125).epsilon(1e-15));

    CHECK_THROWS_AS(value(v, Statement::top(3)), std::invalid_argument);
    CHECK_THROWS_AS(Valuation({0.5, 0.1}, 2), std::invalid_argument);
}

TEST_CASE("valuation identity on all statement pairs") {
    const Valuation v({0.4, -0.2, 0.5, 0.3}, 4);
    for (std::uint32_t a = 0; a < 16; ++a) {
        for (std::uint32_t b = 0; b < 16; ++b) {
            const Statement x(a, 4), y(b, 4);
            const double lhs = value(v, join(x, y)) + value(v, meet(x, y));
            const double rhs = value(v, x) + value(v, y);
            CHECK(std::abs(lhs - rhs) <= 1e-15);
        }
    }
}

TEST_CASE("conditionals") {
    const Valuation v({0.5, 0.5, 0.0, 0.0}, 4);
    const Statement a = Statement::atom(0, 4);
    const Statement b = Statement::atom(1, 4);
    CHECK(conditional(v, a, join(a, b)) == 0.5);
    CHECK(conditional(v, Statement::top(4), join(a, b)) == 1.0);  // implication gives exactly 1
    CHECK(conditional(v, b, a) == 0.0);                           // disjoint atoms give exactly 0
    CHECK_THROWS_AS(conditional(v, a, Statement::atom(2, 4)), std::domain_error);
}

TEST_CASE("sum, product and Bayes rules on random triples") {
    const Valuation plain({0.5, 0.5, 0.0, 0.0}, 4);
    const RuleReport r1 = check_rules(plain, 1000, 11);
    CHECK(r1.pass);
    CHECK(r1.triples == 1000);

    const double s = (1.0 + 1.0 / std::sqrt(3.0)) / 4.0;
    const Valuation bloch({s, s, s, (1.0 - std::sqrt(3.0)) / 4.0}, 4);
    const RuleReport r2 = check_rules(bloch, 2000, 12);
    CHECK(r2.pass);

    QuasiState wide = {0.3, -0.4, 0.55, 0.2, -0.15, 0.5};
    const Valuation negative(wide, 6);
    const RuleReport r3 = check_rules(negative, 2000, 13);
    CHECK(r3.pass);
    CHECK(r3.sum_worst <= 1e-12);
    CHECK(r3.product_worst <= 1e-12);
    CHECK(r3.bayes_worst <= 1e-12);
}

TEST_CASE("restriction to accessible statements") {
    const MesModel m2 = MesModel::build(2);
    CHECK(accessible_restriction_ok(m2, Valuation({0.5, 0.5, 0.0, 0.0}, 4)));
    CHECK(accessible_restriction_ok(m2, Valuation({0.25, 0.25, 0.25, 0.25}, 4)));
    CHECK_FALSE(accessible_restriction_ok(m2, Valuation({1.2, -0.2, 0.0, 0.0}, 4)));
}

TEST_CASE("combination-function counterexample family") {
    const GCounterexample g = g_counterexample(0.5);
    CHECK(g.q[0] == doctest::Approx(-1.0 / 16).epsilon(1e-15));
    CHECK(g.q[1] == doctest::Approx(3.0 / 8).epsilon(1e-15));
    CHECK(g.q[2] == doctest::Approx(-1.0 / 16).epsilon(1e-15));
    CHECK(g.q[3] == 0.75);
    CHECK(g.qab_given_c == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(g.qb_given_c == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(g.qa_given_bc == doctest::Approx(0.5).epsilon(1e-15));

    // the family is normalized for every x
    for (double x = 1.0 - std::sqrt(3.0); x <= 1.0 + std::sqrt(3.0); x += 0.37) {
        if (std::abs(x - 1.0) < 1e-9) continue;
        const GCounterexample gx = g_counterexample(x);
        CHECK(std::abs(sum(gx.q) - 1.0) <= 1e-15);
        CHECK(std::abs(gx.qab_given_c - gx.qb_given_c * gx.qa_given_bc) <= 1e-12);
    }

    CHECK_THROWS_AS(g_counterexample(1.0), std::domain_error);     // conditioning value 0
    CHECK_THROWS_AS(g_counterexample(3.0), std::invalid_argument); // outside the interval
    CHECK_THROWS_AS(g_counterexample(-1.0), std::invalid_argument);
}

TEST_CASE("combination decreases while both arguments increase below 1/2") {
    double prev_ab = 0.0, prev_b = 0.0, prev_a = 0.0;
    bool first = true;
    for (int i = 0; i <= 40; ++i) {
        const double x = (1.0 - std::sqrt(3.0)) + (0.5 - (1.0 - std::sqrt(3.0))) * i / 40.0;
        const GCounterexample g = g_counterexample(x);
        if (!first) {
            CHECK(g.qab_given_c < prev_ab);
            CHECK(g.qb_given_c > prev_b);
            CHECK(g.qa_given_bc > prev_a);
        }
        prev_ab = g.qab_given_c;
        prev_b = g.qb_given_c;
        prev_a = g.qa_given_bc;
        first = false;
    }
}
