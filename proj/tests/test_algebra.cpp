#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "hpisot/error.hpp"
#include "hpisot/factor.hpp"
#include "hpisot/linalg.hpp"
#include "hpisot/pisot.hpp"
#include "hpisot/roots.hpp"

using namespace hpisot;

namespace {

using P = IntPolynomial;

FieldPtr golden() { return NumberField::create(P{-1, -1, 1}, Rational(3, 2), Rational(2)); }

FieldElement fe(const FieldPtr& f, std::vector<Rational> c) { return FieldElement(f, std::move(c)); }

}  // namespace

TEST_CASE("characteristic polynomial") {
    CHECK(char_poly(IntMatrix{{1, 1}, {1, 0}}) == P{-1, -1, 1});
    CHECK(char_poly(IntMatrix{{6, 3}, {6, 3}}) == P{0, -9, 1});
    CHECK(char_poly(IntMatrix{{9, 6}, {6, 3}}) == P{-9, -12, 1});
    CHECK(char_poly(IntMatrix::identity(3)) == P{-1, 3, -3, 1});
}

TEST_CASE("characteristic polynomial agrees with determinant oracle") {
    // p(t) = det(tI - A) at integer points, via Bareiss.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> entry(-4, 6);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
        P cp = char_poly(a);
        for (long t = -3; t <= 3; ++t) {
            IntMatrix m = Integer(-1) * a;
            for (std::size_t i = 0; i < n; ++i) m(i, i) += t;
            CHECK(cp.eval(Integer(t)) == m.determinant());
        }
    }
}

TEST_CASE("integer rank agrees with rational elimination") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 1 + static_cast<std::size_t>(trial % 6), c = 1 + static_cast<std::size_t>((trial / 6) % 6);
        IntMatrix a(r, c);
        std::vector<std::vector<Rational>> q(r, std::vector<Rational>(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                long v = trial % 3 == 0 && j == 0 ? 0 : entry(rng);
                a(i, j) = v;
                q[i][j] = v;
            }
        CHECK(a.rank() == rational_rank(q, c));
    }
}

TEST_CASE("factorization over Z") {
    auto f = factor_over_integers(P{0, -9, 1});
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].factor == P{-9, 1});
    CHECK(f.factors[1].factor == P{0, 1});

    CHECK(factor_over_integers(P{-1, -1, 1}).factors.size() == 1);

    auto g = factor_over_integers(P{9, -1, 0, 0, 0, -9, 1});
    REQUIRE(g.factors.size() == 3);
    CHECK(g.factors[0].factor == P{-9, 1});
    CHECK(g.factors[1].factor == P{-1, 1});
    CHECK(g.factors[2].factor == P{1, 1, 1, 1, 1});

    auto h = factor_over_integers(Integer(-6) * (P{-1, 2} * P{-1, 2} * P{2, 0, 1} * P{2, 0, 1} * P{2, 0, 1}));
    CHECK(h.unit == -6);
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0].factor == P{-1, 2});
    CHECK(h.factors[0].multiplicity == 2);
    CHECK(h.factors[1].multiplicity == 3);

    // x^4 + 1 is irreducible over Z but reducible mod every prime.
    CHECK(factor_over_integers(P{1, 0, 0, 0, 1}).factors.size() == 1);
    // (x^2 - 2)(x^2 - 3): only the pairing of roots into conjugate sets decides.
    CHECK(factor_over_integers(P{-2, 0, 1} * P{-3, 0, 1}).factors.size() == 2);
}

TEST_CASE("factorization reproduces random products") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 25; ++trial) {
        P p{1};
        for (int k = 0; k < 3; ++k) {
            std::vector<Integer> c;
            const int deg = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < deg; ++i) c.emplace_back(coef(rng));
            c.emplace_back(1 + static_cast<long>(rng() % 2));
            p = p * P(c);
        }
        auto f = factor_over_integers(p);
        CHECK(f.product() == p);
        for (const auto& fp : f.factors) {
            // Each factor is square-free and primitive.
            CHECK(fp.factor.content() == 1);
            CHECK(squarefree_decomposition(fp.factor).size() == 1);
        }
    }
}

TEST_CASE("root isolation") {
    auto iso = isolate_roots(P{-1, -1, 1});
    REQUIRE(iso.disks.size() == 2);
    CHECK(iso.disks[0].real);
    CHECK(iso.disks[1].real);
    CHECK(iso.disks[1].center.re.convert_to<double>() == doctest::Approx(1.6180339887));
    auto c = isolate_roots(P{1, 0, 1});
    REQUIRE(c.disks.size() == 2);
    CHECK_FALSE(c.disks[0].real);
    CHECK(conjugate_partners(c) == std::vector<std::size_t>{1, 0});
}

TEST_CASE("Pisot check") {
    auto a = pisot_check(P{-1, -1, 1});
    CHECK(a.is_pisot);
    REQUIRE(a.modulus_bound);
    CHECK(*a.modulus_bound >= Rational(618033, 1000000));
    CHECK(*a.modulus_bound < 1);
    CHECK_FALSE(pisot_check(P{-3, -1, 1}).is_pisot);
    auto b = pisot_check(P{-9, 1});
    CHECK(b.is_pisot);
    CHECK(*b.modulus_bound == 0);
    // Salem number: reciprocal, conjugates on the unit circle.
    auto salem = pisot_check(P{1, -1, 0, -1, 1});
    CHECK_FALSE(salem.is_pisot);
    CHECK(salem.method == "reciprocal");
    CHECK(pisot_check(P{-1, -1, -1, 1}).is_pisot);
}

TEST_CASE("Pisot verdict agrees with 200-digit numeric oracle") {
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<long> coef(-4, 4);
    int tested = 0, pisot = 0;
    while (tested < 50) {
        const int deg = 1 + static_cast<int>(rng() % 6);
        std::vector<Integer> c;
        for (int i = 0; i < deg; ++i) c.emplace_back(coef(rng));
        c.emplace_back(1);
        P p(c);
        if (p.coeff(0) == 0) continue;
        for (const auto& fp : factor_over_integers(p).factors) {
            if (tested >= 50) break;
            const P& q = fp.factor;
            if (SturmSequence(q).count(Rational(1), cauchy_root_bound(q)) == 0) continue;
            // Candidate dilatation: largest real root > 1.
            bool expected = oracles::is_pisot(q);
            auto got = pisot_check(q);
            CHECK_MESSAGE(got.is_pisot == expected, q.to_string());
            ++tested;
            pisot += expected;
        }
    }
    CHECK(pisot > 5);
    CHECK(pisot < 45);
}

TEST_CASE("roots below a radius") {
    CHECK(count_roots_below(P{-1, -1, 1}, Rational(1)) == 1);
    CHECK(count_roots_below(P{-1, -1, 1}, Rational(2)) == 2);
    CHECK(count_roots_below(P{-1, -1, 1}, Rational(1, 2)) == 0);
    // Fibonacci cubed: conjugate modulus 0.236 < 1/3.
    CHECK(count_roots_below(char_poly(IntMatrix{{3, 2}, {2, 1}}), Rational(1, 3)) == 1);
    // Root exactly on the circle falls back to root disks and stays undecided.
    CHECK_THROWS_AS(count_roots_below(P{-1, 1}, Rational(1)), PrecisionError);
}

TEST_CASE("field arithmetic") {
    auto f = golden();
    auto l = FieldElement::lambda(f);
    CHECK(l * l == fe(f, {1, 1}));
    auto x = fe(f, {2, 1});
    CHECK(x.inverse() == fe(f, {Rational(3, 5), Rational(-1, 5)}));
    CHECK(l.sign() == 1);
    CHECK(fe(f, {1, -1}).sign() == -1);
    CHECK(l.to_double() == doctest::Approx(1.6180339887));
    CHECK_THROWS_AS((void)FieldElement(f, 0).inverse(), std::domain_error);

    std::mt19937_64 rng(14);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    auto cubic = NumberField::create(P{-1, -1, -1, 1}, Rational(1), Rational(2));
    auto rnd = [&](const FieldPtr& field) {
        std::vector<Rational> c;
        for (int i = 0; i < field->degree(); ++i) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            c.push_back(q);
        }
        return FieldElement(field, c);
    };
    for (const FieldPtr& field : {f, cubic}) {
        for (int i = 0; i < 100; ++i) {
            auto a = rnd(field);
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == FieldElement(field, 1));
        }
        for (int i = 0; i < 30; ++i) {
            auto a = rnd(field), b = rnd(field), c = rnd(field);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b).coords().size() == static_cast<std::size_t>(field->degree()));
            // Sign agrees with the double embedding away from zero.
            double v = a.to_double();
            if (std::abs(v) > 1e-9) CHECK(a.sign() == (v > 0 ? 1 : -1));
        }
    }
}

TEST_CASE("p'(lambda)") {
    CHECK(p_prime_at_lambda(golden()) == fe(golden(), {-1, 2}));
    auto lin = NumberField::create(P{-2, 1}, Rational(0), Rational(3));
    CHECK(p_prime_at_lambda(lin) == FieldElement(lin, 1));
    auto g = NumberField::create(P{-9, -12, 1}, Rational(12), Rational(13));
    CHECK(p_prime_at_lambda(g) == fe(g, {-12, 2}));
}

TEST_CASE("kernel over Q(lambda)") {
    auto f = golden();
    auto l = FieldElement::lambda(f);
    FieldElement zero(f, 0), one(f, 1);
    std::vector<std::vector<FieldElement>> m{{one - l, one}, {one, zero - l}};
    auto k = kernel_basis(m, 2, zero, one);
    REQUIRE(k.size() == 1);
    // Proportional to (lambda, 1).
    CHECK(k[0][0] == l * k[0][1]);
    for (const auto& row : m) CHECK((row[0] * k[0][0] + row[1] * k[0][1]).is_zero());

    std::vector<std::vector<Rational>> id{{1, 0}, {0, 1}};
    CHECK(kernel_basis(id, 2, Rational(0), Rational(1)).empty());
    std::vector<std::vector<Rational>> z{{0, 0}, {0, 0}};
    CHECK(kernel_basis(z, 2, Rational(0), Rational(1)).size() == 2);

    std::mt19937_64 rng(15);
    std::uniform_int_distribution<long> e(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<Rational>> a(3, std::vector<Rational>(5));
        for (auto& row : a)
            for (auto& v : row) v = e(rng);
        for (const auto& v : kernel_basis(a, 5, Rational(0), Rational(1)))
            for (const auto& row : a) {
                Rational s = 0;
                for (std::size_t j = 0; j < 5; ++j) s += row[j] * v[j];
                CHECK(s == 0);
            }
    }
}

TEST_CASE("linear solve") {
    std::vector<std::vector<Rational>> a{{1, 1}, {1, -1}, {2, 0}};
    auto s = solve_linear<Rational>(a, {3, 1, 4}, 2, 0, 1);
    CHECK(s.consistent);
    CHECK(s.rank == 2);
    CHECK(s.x == std::vector<Rational>{2, 1});
    auto t = solve_linear<Rational>(a, {3, 1, 5}, 2, 0, 1);
    CHECK_FALSE(t.consistent);
}

TEST_CASE("Z[1/a0] membership") {
    CHECK(in_Z_one_over_a0(Rational(5, 27), Integer(-9)));
    CHECK_FALSE(in_Z_one_over_a0(Rational(1, 2), Integer(-9)));
    CHECK(in_Z_one_over_a0(Rational(7), Integer(5)));
    CHECK(in_Z_one_over_a0(Rational(1, 12), Integer(6)));
}

TEST_CASE("dilatation reports") {
    auto fib = minimal_polynomial_of_dilatation(fixtures::fibonacci());
    CHECK(fib.degree == 2);
    CHECK(fib.min_poly == P{-1, -1, 1});
    CHECK(fib.a0 == -1);
    CHECK(fib.norm == -1);
    CHECK(fib.is_pisot);

    auto e1 = minimal_polynomial_of_dilatation(fixtures::ex1_phi1());
    CHECK(e1.degree == 1);
    CHECK(e1.min_poly == P{-9, 1});
    CHECK(e1.a0 == -9);
    CHECK(e1.norm == 9);
    CHECK(e1.is_pisot);

    auto e2 = minimal_polynomial_of_dilatation(fixtures::ex2_phi1());
    CHECK(e2.min_poly == P{-9, -12, 1});
    CHECK(e2.dilatation.to_double() == doctest::Approx(6 + 3 * std::sqrt(5.0)));

    auto p2 = minimal_polynomial_of_dilatation(fixtures::ex1_phi2());
    CHECK(p2.min_poly == P{-9, 1});
    CHECK(p2.char_poly_factors.to_string() == "(x - 9) * (x - 1)^2 * (x)^3");

    CHECK_THROWS_AS(minimal_polynomial_of_dilatation(fixtures::sub(R"({"alphabet":["a","b"],"rules":{"a":"ab","b":"b"}})")),
                    PreconditionError);

    for (auto s : {fixtures::fibonacci(), fixtures::thue_morse(), fixtures::tribonacci(), fixtures::intro_example(),
                   fixtures::ex1_phi1(), fixtures::ex2_phi1(), fixtures::ex3_phi1(), fixtures::ex1_phi2()}) {
        auto r = minimal_polynomial_of_dilatation(s);
        CHECK(r.char_poly.divide_exact(r.min_poly).has_value());
        CHECK(r.norm == (r.degree % 2 ? Integer(-r.a0) : r.a0));
    }
}

TEST_CASE("dilatation of the d = 3 example is 3 theta^4") {
    // Oracle: the minimal polynomial of 3 theta^4 is the characteristic
    // polynomial of multiplication by 3 theta^4 on Q(theta), theta^3 = theta^2 + theta + 1.
    auto tri = NumberField::create(P{-1, -1, -1, 1}, Rational(1), Rational(2));
    auto theta = FieldElement::lambda(tri);
    FieldElement m = Rational(3) * theta * theta * theta * theta;
    P oracle = oracles::multiplication_char_poly(m);
    CHECK(oracle == P{-27, -45, -33, 1});

    auto r = minimal_polynomial_of_dilatation(fixtures::ex3_phi1());
    CHECK(r.min_poly == oracle);
    CHECK(r.degree == 3);
    CHECK(r.is_pisot);
    CHECK(r.norm == 27);
    CHECK(r.dilatation.to_double() == doctest::Approx(3 * std::pow(1.839286755214161, 4)));
}
