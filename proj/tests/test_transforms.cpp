#include <catch2/catch_amalgamated.hpp>

#include "fbent/bpa_json.hpp"
#include "fbent/process.hpp"
#include "random_bpa.hpp"

using namespace fbent;
using Catch::Approx;

namespace {

MassAssignment eppf() { return parse_bpa(R"({"frame":["a","b"],"masses":{"a":0.2,"b":0.4,"a|b":0.4}})"); }

MassAssignment two(double m1, double m2, double m12) {
    return MassAssignment(Frame({"x1", "x2"}), {{FocalSet{1}, m1}, {FocalSet{2}, m2}, {FocalSet{3}, m12}});
}

// Reference negation sequence rounded to four decimals, steps 1..10.
constexpr double kNegationReference[3][10] = {
    {0.6000, 0.0500, 0.1500, 0.0125, 0.0375, 0.0031, 0.0094, 0.0008, 0.0023, 0.0002},
    {0.1000, 0.3000, 0.0250, 0.0750, 0.0063, 0.0187, 0.0016, 0.0047, 0.0004, 0.0012},
    {0.3000, 0.6500, 0.8250, 0.9125, 0.9562, 0.9781, 0.9891, 0.9945, 0.9973, 0.9986},
};

}  // namespace

TEST_CASE("betp") {
    auto vac = betp(MassAssignment::vacuous(Frame::letters(3)));
    for (std::size_t i = 0; i < 3; ++i) CHECK(vac[i] == Approx(1.0 / 3).margin(1e-15));

    auto p = betp(eppf());
    CHECK(p[0] == Approx(0.4).margin(1e-15));
    CHECK(p[1] == Approx(0.6).margin(1e-15));

    auto bayes = two(0.3, 0.7, 0.0);
    CHECK(betp(bayes)[0] == 0.3);
    CHECK(betp(bayes)[1] == 0.7);
}

TEST_CASE("pnpl") {
    auto p = pnpl(eppf());
    CHECK(std::abs(p[0] - 3.0 / 7) <= 1e-12);
    CHECK(std::abs(p[1] - 4.0 / 7) <= 1e-12);

    auto vac = pnpl(MassAssignment::vacuous(Frame::letters(4)));
    for (std::size_t i = 0; i < 4; ++i) CHECK(vac[i] == 0.25);
}

TEST_CASE("uniform_split_step") {
    const Frame f = Frame::letters(2);
    auto s = uniform_split_step(MassAssignment::vacuous(f));
    for (auto set : enumerate_powerset(f)) CHECK(s.mass(set) == Approx(1.0 / 3).margin(1e-15));

    auto x = uniform_split_step(two(0.2, 0.2, 0.6));
    CHECK(x.mass(FocalSet{1}) == Approx(0.4).margin(1e-15));
    CHECK(x.mass(FocalSet{2}) == Approx(0.4).margin(1e-15));
    CHECK(x.mass(FocalSet{3}) == Approx(0.2).margin(1e-15));

    auto bayes = two(0.25, 0.75, 0.0);
    CHECK(uniform_split_step(bayes) == bayes);

    CHECK_THROWS_AS(uniform_split_step(MassAssignment::vacuous(Frame::numbered("t", 25))), Error);
}

TEST_CASE("parametrized_split_step_3") {
    const Frame f = Frame::letters(3);
    auto vac = MassAssignment::vacuous(f);
    auto s = parametrized_split_step_3(vac, 3.0);
    for (auto set : enumerate_powerset(f)) CHECK(s.mass(set) == Approx(1.0 / 7).margin(1e-15));
    auto u = uniform_split_step(vac);
    for (auto set : enumerate_powerset(f)) CHECK(s.mass(set) == Approx(u.mass(set)).margin(1e-15));

    // one pair at p = 5 keeps 3/5 and sends 1/5 to each singleton
    auto pair = MassAssignment(f, {{f.set_of({"a", "b"}), 1.0}});
    auto t = parametrized_split_step_3(pair, 5.0);
    CHECK(t.mass(f.set_of({"a", "b"})) == Approx(0.6).margin(1e-15));
    CHECK(t.mass(f.set_of({"a"})) == Approx(0.2).margin(1e-15));
    CHECK(t.mass(f.set_of({"b"})) == Approx(0.2).margin(1e-15));

    auto bayes = MassAssignment::from_probabilities(f, std::vector{0.2, 0.3, 0.5});
    CHECK(parametrized_split_step_3(bayes, 11.0) == bayes);

    CHECK_THROWS_MATCHES(parametrized_split_step_3(vac, 2.5), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::ParamOutOfRange;
                         }));
    CHECK_THROWS_MATCHES(parametrized_split_step_3(MassAssignment::vacuous(Frame::letters(2)), 3.0), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::NotThreeElementFrame;
                         }));
}

TEST_CASE("negation_step reproduces the reference negation sequence") {
    auto b = two(0.6, 0.1, 0.3);
    for (int col = 0; col < 10; ++col) {
        INFO("column " << col + 1);
        // four decimals: half a unit in the last place plus rounding slack
        CHECK(std::abs(b.mass(FocalSet{1}) - kNegationReference[0][col]) <= 5e-5 + 1e-12);
        CHECK(std::abs(b.mass(FocalSet{2}) - kNegationReference[1][col]) <= 5e-5 + 1e-12);
        CHECK(std::abs(b.mass(FocalSet{3}) - kNegationReference[2][col]) <= 5e-5 + 1e-12);
        b = negation_step(b);
    }
    auto first = negation_step(two(0.6, 0.1, 0.3));
    CHECK(first.mass(FocalSet{1}) == Approx(0.05).margin(1e-15));
    CHECK(first.mass(FocalSet{2}) == Approx(0.30).margin(1e-15));
    CHECK(first.mass(FocalSet{3}) == Approx(0.65).margin(1e-15));

    auto vac = MassAssignment::vacuous(Frame::letters(3));
    CHECK(negation_step(vac) == vac);
}

TEST_CASE("property: pignistic probability is invariant under a uniform split") {
    testing::BpaGenerator gen(21);
    for (int trial = 0; trial < 500; ++trial) {
        auto b = gen.bpa(gen.uniform_int(1, 10), 12);
        auto before = betp(b);
        auto after = betp(uniform_split_step(b));
        for (std::size_t i = 0; i < before.size(); ++i) CHECK(std::abs(before[i] - after[i]) <= 1e-12);
    }
}

TEST_CASE("property: uniform splitting shrinks multi-element mass by a fixed factor per step") {
    testing::BpaGenerator gen(22);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = gen.uniform_int(2, 6);
        auto b = gen.bpa(n);
        // the whole frame keeps the largest non-singleton share, 1 - n / (2^n - 1)
        const double rate = 1.0 - static_cast<double>(n) / static_cast<double>(full_mask(n));
        double bound = non_singleton_mass(b);
        double hartley = measure(MeasureId::hartley, b);
        for (int t = 1; t <= 15; ++t) {
            b = uniform_split_step(b);
            bound *= rate;
            CHECK(non_singleton_mass(b) <= bound + 1e-12);
            const double h = measure(MeasureId::hartley, b);
            CHECK(h <= hartley + 1e-15);
            hartley = h;
        }
    }
}

TEST_CASE("property: negation keeps normalization and never lowers m(frame)") {
    testing::BpaGenerator gen(23);
    for (int trial = 0; trial < 300; ++trial) {
        auto b = gen.bpa(gen.uniform_int(1, 6));
        auto next = negation_step(b);
        double total = 0.0;
        for (const auto& e : next) total += e.mass;
        CHECK(std::abs(total - 1.0) <= 1e-12);
        CHECK(next.mass(b.frame().full()) >= b.mass(b.frame().full()));
    }
}

TEST_CASE("property: pnpl and betp agree on Bayesian BPAs") {
    testing::BpaGenerator gen(24);
    for (int trial = 0; trial < 300; ++trial) {
        auto b = gen.bayesian(gen.uniform_int(1, 8));
        auto p = pnpl(b), q = betp(b);
        for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(p[i] - q[i]) <= 1e-14);
    }
}
