#pragma once

#include <compare>
#include <string>

#include "steenrod/serre_cartan.hpp"

namespace steenrod {

// Which polynomial algebra of Stiefel-Whitney classes the action lives in:
// all w_i (i >= 1), or the orientable model where w_1 = 0.
enum class SWModel { bo, bso };

// Monomial in the w_i: (generator index, exponent) pairs with ascending
// indices and positive exponents; degree is sum i * e_i. The empty factor
// list is 1.
struct SWMonomial {
    std::vector<std::pair<int, int>> factors;

    static SWMonomial one() { return {}; }
    static SWMonomial w(int index, int exp = 1);

    int degree() const;
    bool is_unit() const { return factors.empty(); }
    SWMonomial operator*(const SWMonomial& other) const;

    friend bool operator==(const SWMonomial&, const SWMonomial&) = default;
};

// Total monomial order: lower degree first; within a degree, compare the
// descending multisets of generator indices lexicographically (the monomial
// with the largest w_n wins, then the next largest, and so on).
std::strong_ordering monomial_order(const SWMonomial& a, const SWMonomial& b);

struct SWPolynomial {
    int degree = 0;
    std::vector<SWMonomial> terms;  // descending under monomial_order

    static SWPolynomial zero(int degree) { return SWPolynomial{degree, {}}; }
    static SWPolynomial one() { return SWPolynomial{0, {SWMonomial::one()}}; }
    static SWPolynomial w(int index) { return SWPolynomial{index, {SWMonomial::w(index)}}; }
    static SWPolynomial monomial(SWMonomial m);

    bool is_zero() const { return terms.empty(); }
    const SWMonomial& leading() const { return terms.front(); }

    SWPolynomial& operator+=(const SWPolynomial& other);
    friend SWPolynomial operator+(SWPolynomial a, const SWPolynomial& b) {
        a += b;
        return a;
    }
    SWPolynomial operator*(const SWPolynomial& other) const;

    friend bool operator==(const SWPolynomial&, const SWPolynomial&) = default;
};

// Wu formula: Sq^i(w_j) = sum_t C(j + t - i - 1, t) w_{i-t} w_{j+t}, with
// w_0 = 1 and the binomial taken mod 2 in the generalized sense for negative
// upper entry. Satisfies Sq^0 w_j = w_j, Sq^j w_j = w_j^2, and Sq^i w_j = 0
// for i > j.
SWPolynomial wu_sq(int i, int j, SWModel model = SWModel::bo);

// Total-square expansion over monomial factors via the Cartan rule.
SWPolynomial sq_on_polynomial(int a, const SWPolynomial& p, SWModel model = SWModel::bo);
// Iterated application, rightmost exponent first.
SWPolynomial sq_word_on_polynomial(const Seq& word, const SWPolynomial& p, SWModel model = SWModel::bo);

// Polynomial carried on the Thom class: U * poly, with Sq^a(U * p) =
// sum_j U * w_{a-j} * Sq^j(p).
struct ThomElement {
    SWPolynomial poly;

    static ThomElement thom_class() { return ThomElement{SWPolynomial::one()}; }
    friend bool operator==(const ThomElement&, const ThomElement&) = default;
};

ThomElement sq_on_thom(int a, const ThomElement& u);
ThomElement sq_word_on_thom(const Seq& word, const ThomElement& u);

// Projection onto indecomposables: keep the monomials consisting of a single
// generator with exponent 1.
SWPolynomial mod_decomposables(const SWPolynomial& p);

// The maximal monomial of Sq^I(U) is exactly w_{i1} w_{i2} ... w_{ik}.
bool verify_thom_lemma(const Seq& admissible);

// In the w_1 = 0 model: Sq^{2^k}(w_{2^k+1}) and Sq^{(2^n,...,4,2,1)}(w_2)
// both equal w_{2^{k+1}+1} (resp. w_{2^{n+1}+1}) modulo decomposables.
struct BSpinCase {
    std::string label;
    bool pass = false;
};
struct BSpinReport {
    bool pass = true;
    std::vector<BSpinCase> cases;
};
BSpinReport verify_bspin_formulas(int max_k, int max_n);

}  // namespace steenrod
