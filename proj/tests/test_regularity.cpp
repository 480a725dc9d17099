#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hpisot/error.hpp"
#include "hpisot/regularity.hpp"

using namespace hpisot;
using fixtures::sub;

namespace {

std::vector<Rational> q(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("tile geometry") {
    auto f = fixtures::fibonacci();
    auto g = tile_geometry(f);
    auto lambda = FieldElement::lambda(g.field);
    CHECK(g.lengths[0] == lambda);
    CHECK(g.lengths[1] == FieldElement(g.field, 1));
    CHECK(g.unit_letter == 1);
    CHECK(g.base_length == FieldElement(g.field, 1));

    auto t = tile_geometry(fixtures::thue_morse());
    CHECK(t.lengths[0] == FieldElement(t.field, 1));
    CHECK(t.lengths[1] == FieldElement(t.field, 1));

    // Oracle: the eigen-equation residual vanishes exactly.
    for (const auto& s : {fixtures::ex2_phi1(), fixtures::ex1_phi2(), fixtures::intro_example(), fixtures::tribonacci(),
                          fixtures::ex3_phi1()}) {
        auto pr = minimal_polynomial_of_dilatation(s);
        auto geo = tile_geometry(s, pr);
        const IntMatrix a = abelianization(s);
        for (Letter j = 0; j < s.size(); ++j) {
            FieldElement sum(geo.field, 0);
            for (Letter i = 0; i < s.size(); ++i) sum += Rational(a(i, j)) * geo.lengths[i];
            CHECK(sum == pr.dilatation * geo.lengths[j]);
            CHECK_FALSE(geo.lengths[j] < FieldElement(geo.field, 1));
        }
    }
}

TEST_CASE("coordinates") {
    auto g = tile_geometry(fixtures::fibonacci());
    auto lambda = FieldElement::lambda(g.field);
    CHECK(coordinates(g.base_length, g) == q({1, 0}));
    CHECK(coordinates(lambda, g) == q({0, 1}));
    CHECK(coordinates(Rational(3) * FieldElement(g.field, 1) + Rational(2) * lambda, g) == q({3, 2}));

    // Reconstruction: L * sum c_i lambda^i = x on random elements.
    auto e = tile_geometry(fixtures::ex3_phi1());
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> v;
        for (int i = 0; i < e.field->degree(); ++i) v.emplace_back(coef(rng), 1 + (coef(rng) + 50));
        FieldElement x(e.field, v);
        auto c = coordinates(x, e);
        FieldElement back(e.field, 0), power(e.field, 1);
        for (const auto& ci : c) {
            back += ci * power;
            power *= FieldElement::lambda(e.field);
        }
        CHECK(e.base_length * back == x);
    }
}

TEST_CASE("count occurrences") {
    auto f = fixtures::fibonacci();
    Word w = f.parse_word("abaab");
    CHECK(count_occurrences(w, f.parse_word("ab"), 0, 5) == 2);
    CHECK(count_occurrences(w, f.parse_word("ab"), 1, 3) == 0);
    CHECK(count_occurrences(w, f.parse_word("ab"), 3, 4) == 1);  // anchor inside, tail outside
    CHECK(count_occurrences(w, f.parse_word("abaaba"), 0, 5) == 0);
    CHECK_THROWS_AS(count_occurrences(w, f.parse_word("a"), 2, 9), PreconditionError);

    Word u = iterate(f, 0, 20);
    auto a = abelianization(f).pow(20);
    CHECK(Integer(static_cast<unsigned long>(count_occurrences(u, Word{1}, 0, u.size()))) == a(1, 0));
}

TEST_CASE("Fibonacci ERP fits") {
    auto f = fixtures::fibonacci();
    struct Case {
        const char* patch;
        std::vector<Rational> alphas;
    };
    for (const auto& c : {Case{"a", q({0, 1})}, Case{"b", q({1, 0})}, Case{"ab", q({1, 0})}, Case{"aa", q({-1, 1})}}) {
        auto fit = fit_erp_functional(f, f.parse_word(c.patch), 10'000);
        CHECK(fit.residual_zero);
        CHECK(fit.alphas == c.alphas);
        CHECK(fit.sample_count >= kMinReturnSamples);
        CHECK(fit.rank == 2);
        CHECK(fit.a0_membership == std::vector<bool>{true, true});
    }
    CHECK_THROWS_AS(fit_erp_functional(f, f.parse_word("bb"), 10'000), PreconditionError);
}

TEST_CASE("fitted functional matches brute-force counts between arbitrary anchor returns") {
    auto f = fixtures::fibonacci();
    auto g = tile_geometry(f);
    Word p = f.parse_word("aa");
    auto fit = fit_erp_functional(f, p, 10'000);
    REQUIRE(fit.residual_zero);
    Word w = fixed_point(f, 10'000).prefix;
    std::vector<std::size_t> anchors;
    for (std::size_t i = 0; i + fit.anchor.size() <= w.size(); ++i)
        if (std::equal(fit.anchor.begin(), fit.anchor.end(), w.begin() + static_cast<std::ptrdiff_t>(i)))
            anchors.push_back(i + fit.anchor_offset);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, anchors.size() - 40);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t i = pick(rng), j = i + 1 + pick(rng) % 30;
        FieldElement tau(g.field, 0);
        for (std::size_t t = anchors[i]; t < anchors[j]; ++t) tau += g.lengths[w[t]];
        auto c = coordinates(tau, g);
        Rational predicted = fit.alphas[0] * c[0] + fit.alphas[1] * c[1];
        CHECK(predicted == Rational(static_cast<unsigned long>(count_occurrences(w, p, anchors[i], anchors[j]))));
    }
}

TEST_CASE("letter fits conserve length") {
    for (const auto& s : {fixtures::fibonacci(), fixtures::tribonacci(), fixtures::ex1_phi2()}) {
        auto pr = minimal_polynomial_of_dilatation(s);
        auto g = tile_geometry(s, pr);
        const std::size_t d = static_cast<std::size_t>(pr.degree);
        // sum over letters of alpha(letter) * omega_letter must be the identity functional.
        std::vector<FieldElement> total(d, FieldElement(g.field, 0));
        for (Letter x = 0; x < s.size(); ++x) {
            auto fit = fit_erp_functional(s, g, pr.a0, Word{x}, 10'000);
            REQUIRE(fit.residual_zero);
            for (std::size_t i = 0; i < d; ++i) total[i] += fit.alphas[i] * g.lengths[x];
        }
        FieldElement power(g.field, 1);
        for (std::size_t i = 0; i < d; ++i) {
            CHECK(total[i] == g.base_length * power);
            power *= FieldElement::lambda(g.field);
        }
    }
}

TEST_CASE("verify ERP") {
    auto fib = verify_erp(fixtures::fibonacci(), 10, 10'000);
    CHECK(fib.all_exact);
    CHECK_FALSE(fib.flag);
    CHECK(fib.verdict == "ERP verified (empirically)");
    for (const auto& fit : fib.fits)
        for (const auto& a : fit.alphas) CHECK(a.get_den() == 1);

    auto e = verify_erp(fixtures::ex1_phi2(), 10, 10'000);
    CHECK(e.fits.size() == 10);
    CHECK(e.all_exact);
    for (const auto& fit : e.fits)
        for (const auto& a : fit.alphas) {
            Integer den = a.get_den();
            while (den % 3 == 0) den /= 3;
            CHECK(den == 1);
        }

    auto t = verify_erp(fixtures::thue_morse(), 10, 10'000);
    CHECK_FALSE(t.homological_pisot);
    CHECK_FALSE(t.flag);
}

TEST_CASE("homological Pisot corpus: ERP exact on every patch of length <= 3") {
    for (const auto& s : {fixtures::fibonacci(), fixtures::tribonacci(), fixtures::ex1_phi2(), fixtures::ex1_phi1()}) {
        auto r = verify_erp(s, 0, 10'000);
        REQUIRE(r.homological_pisot);
        CHECK(r.all_exact);
        CHECK_FALSE(r.flag);
        for (const auto& fit : r.fits) CHECK(fit.rank == static_cast<std::size_t>(minimal_polynomial_of_dilatation(s).degree));
    }
}
