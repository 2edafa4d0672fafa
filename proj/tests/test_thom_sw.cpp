#include <stdexcept>
#include <random>

#include "doctest.h"
#include "steenrod/thom_sw.hpp"

using namespace steenrod;

namespace {

SWPolynomial w(int i) {
    return SWPolynomial::w(i);
}

SWPolynomial random_poly(std::mt19937& rng, int degree) {
    // A random homogeneous polynomial of the given degree.
    SWPolynomial out = SWPolynomial::zero(degree);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        SWMonomial m;
        int left = degree;
        while (left > 0) {
            int i = 1 + static_cast<int>(rng() % left);
            m = m * SWMonomial::w(i);
            left -= i;
        }
        out += SWPolynomial::monomial(m);
    }
    return out;
}

}  // namespace

TEST_CASE("wu formula examples") {
    for (int n = 1; n <= 8; ++n)
        CHECK(wu_sq(n, n) == SWPolynomial::monomial(SWMonomial::w(n, 2)));
    for (int j = 1; j <= 8; ++j)
        for (int i = j + 1; i <= 12; ++i)
            CHECK(wu_sq(i, j).is_zero());
    CHECK(wu_sq(1, 2) == w(3) + SWPolynomial::monomial(SWMonomial::w(1) * SWMonomial::w(2)));
    for (int j = 1; j <= 12; ++j) {
        CHECK(wu_sq(0, j) == w(j));
        for (int i = 0; i <= j; ++i)
            CHECK(wu_sq(i, j).degree == i + j);
    }
    CHECK_THROWS_AS(wu_sq(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(wu_sq(1, 1, SWModel::bso), std::invalid_argument);
}

TEST_CASE("squares on polynomials") {
    SWPolynomial w2sq = SWPolynomial::monomial(SWMonomial::w(2, 2));
    CHECK(sq_on_polynomial(1, w2sq).is_zero());
    CHECK(sq_on_polynomial(2, w(2)) == w2sq);
    SWPolynomial w2w3 = w(2) * w(3);
    CHECK(sq_on_polynomial(1, w2w3) == SWPolynomial::monomial(SWMonomial::w(3, 2)));
    CHECK(sq_on_polynomial(0, w2w3) == w2w3);
    // Additivity.
    SWPolynomial p = w(2) * w(2);
    CHECK(sq_on_polynomial(2, p + w2sq) == SWPolynomial::zero(6));
    // In the w_1 = 0 model, Sq^1 w_2 = w_3 on the nose.
    CHECK(sq_on_polynomial(1, w(2), SWModel::bso) == w(3));
}

TEST_CASE("thom class rules") {
    ThomElement u = ThomElement::thom_class();
    CHECK(sq_on_thom(4, u).poly == w(4));
    ThomElement up{w(3) * w(2)};
    CHECK(sq_on_thom(0, up) == up);
    ThomElement uw1{w(1)};
    CHECK(sq_on_thom(1, uw1).poly.is_zero());
}

TEST_CASE("monomial order") {
    SWMonomial m1 = SWMonomial::w(4);
    SWMonomial m2 = SWMonomial::w(4) * SWMonomial::w(1, 2);
    SWMonomial m3 = SWMonomial::w(4) * SWMonomial::w(2) * SWMonomial::w(1);
    SWMonomial m4 = SWMonomial::w(4) * SWMonomial::w(3);
    CHECK(monomial_order(m1, m2) == std::strong_ordering::less);
    CHECK(monomial_order(m2, m3) == std::strong_ordering::less);
    CHECK(monomial_order(m3, m4) == std::strong_ordering::less);
    CHECK(monomial_order(m3, m3) == std::strong_ordering::equal);
    CHECK(monomial_order(m4, m3) == std::strong_ordering::greater);
    // Exponents unfold: w_2^2 vs w_3 w_1 in degree 4.
    CHECK(monomial_order(SWMonomial::w(2, 2), SWMonomial::w(3) * SWMonomial::w(1)) ==
          std::strong_ordering::less);
}

TEST_CASE("leading monomial of Sq^I(U)") {
    CHECK(verify_thom_lemma({4}));
    CHECK(verify_thom_lemma({2, 1}));
    CHECK(verify_thom_lemma({5, 2, 1}));
    CHECK_THROWS_AS(verify_thom_lemma({1, 2}), std::invalid_argument);
    for (int d = 1; d <= 10; ++d)
        for (const Seq& s : admissible_basis(d))
            CHECK(verify_thom_lemma(s));
}

TEST_CASE("indecomposable formulas in the w_1 = 0 model") {
    BSpinReport report = verify_bspin_formulas(3, 3);
    CHECK(report.pass);
    CHECK(report.cases.size() == 6);
    // Spot checks: k = 1 and the iterated word for n = 1.
    CHECK(mod_decomposables(sq_on_polynomial(2, w(3), SWModel::bso)) == w(5));
    CHECK(mod_decomposables(sq_word_on_polynomial({2, 1}, w(2), SWModel::bso)) == w(5));
    CHECK(mod_decomposables(sq_on_polynomial(8, w(9), SWModel::bso)) == w(17));
}

TEST_CASE("geometric action factors through the Adem relations") {
    std::mt19937 rng(4242);
    int trials = 0;
    while (trials < 60) {
        int b = 1 + static_cast<int>(rng() % 5);
        int a = 1 + static_cast<int>(rng() % (2 * b - 1 > 0 ? 2 * b - 1 : 1));
        if (a >= 2 * b || a + b > 10)
            continue;
        ++trials;
        SWPolynomial p = random_poly(rng, 1 + static_cast<int>(rng() % 5));
        SWPolynomial direct = sq_on_polynomial(a, sq_on_polynomial(b, p));
        SWPolynomial via_adem = SWPolynomial::zero(p.degree + a + b);
        for (const Seq& term : adem_expand(a, b).terms) {
            SWPolynomial acc = p;
            for (auto it = term.rbegin(); it != term.rend(); ++it)
                acc = sq_on_polynomial(*it, acc);
            via_adem += acc;
        }
        CHECK(direct == via_adem);
    }
}
