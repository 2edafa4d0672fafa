#include "steenrod/thom_sw.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace steenrod {

SWMonomial SWMonomial::w(int index, int exp) {
    if (index < 1 || exp < 1)
        throw std::invalid_argument("SWMonomial::w: index and exponent must be positive");
    SWMonomial m;
    m.factors.emplace_back(index, exp);
    return m;
}

int SWMonomial::degree() const {
    int d = 0;
    for (auto [index, exp] : factors)
        d += index * exp;
    return d;
}

SWMonomial SWMonomial::operator*(const SWMonomial& other) const {
    SWMonomial out;
    auto a = factors.begin(), b = other.factors.begin();
    while (a != factors.end() || b != other.factors.end()) {
        if (b == other.factors.end() || (a != factors.end() && a->first < b->first))
            out.factors.push_back(*a++);
        else if (a == factors.end() || b->first < a->first)
            out.factors.push_back(*b++);
        else {
            out.factors.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return out;
}

std::strong_ordering monomial_order(const SWMonomial& a, const SWMonomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da <=> db;
    // Descending index multisets, largest first; exponents unfold into
    // repeated indices.
    auto ia = a.factors.rbegin();
    auto ib = b.factors.rbegin();
    int ra = 0, rb = 0;  // repetitions left at the current factor
    while (true) {
        while (ia != a.factors.rend() && ra == 0)
            ra = ia->second, ++ia;
        while (ib != b.factors.rend() && rb == 0)
            rb = ib->second, ++ib;
        if (ra == 0 && rb == 0)
            return std::strong_ordering::equal;
        if (ra == 0)
            return std::strong_ordering::less;  // a exhausted: equal degree forbids this, kept for safety
        if (rb == 0)
            return std::strong_ordering::greater;
        int va = std::prev(ia)->first;
        int vb = std::prev(ib)->first;
        if (va != vb)
            return va <=> vb;
        --ra, --rb;
    }
}

namespace {

struct MonomialDesc {
    bool operator()(const SWMonomial& a, const SWMonomial& b) const {
        return monomial_order(a, b) == std::strong_ordering::greater;
    }
};

}  // namespace

SWPolynomial SWPolynomial::monomial(SWMonomial m) {
    int d = m.degree();
    return SWPolynomial{d, {std::move(m)}};
}

SWPolynomial& SWPolynomial::operator+=(const SWPolynomial& other) {
    if (degree != other.degree)
        throw std::invalid_argument("SWPolynomial sum: degrees differ");
    std::vector<SWMonomial> merged;
    merged.reserve(terms.size() + other.terms.size());
    std::set_symmetric_difference(terms.begin(), terms.end(), other.terms.begin(), other.terms.end(),
                                  std::back_inserter(merged), MonomialDesc{});
    terms = std::move(merged);
    return *this;
}

SWPolynomial SWPolynomial::operator*(const SWPolynomial& other) const {
    SWPolynomial out = SWPolynomial::zero(degree + other.degree);
    for (const SWMonomial& a : terms)
        for (const SWMonomial& b : other.terms)
            out += SWPolynomial{out.degree, {a * b}};
    return out;
}

namespace {

// C(n, t) mod 2 with n allowed negative: for n < 0 the generalized value is
// (+/-) C(t - n - 1, t), and the sign vanishes mod 2.
bool binom_mod2_signed(long long n, long long t) {
    if (t < 0)
        return false;
    if (t == 0)
        return true;
    if (n < 0)
        return binom_mod2(static_cast<std::uint64_t>(t - n - 1), static_cast<std::uint64_t>(t));
    if (t > n)
        return false;
    return binom_mod2(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t));
}

bool model_kills(int index, SWModel model) {
    return model == SWModel::bso && index == 1;
}

}  // namespace

SWPolynomial wu_sq(int i, int j, SWModel model) {
    if (i < 0 || j < 1)
        throw std::invalid_argument("wu_sq: requires i >= 0 and j >= 1");
    if (model == SWModel::bso && j < 2)
        throw std::invalid_argument("wu_sq: w_1 is zero in the bso model");
    SWPolynomial out = SWPolynomial::zero(i + j);
    for (int t = 0; t <= i; ++t) {
        if (!binom_mod2_signed(j + t - i - 1, t))
            continue;
        int low = i - t, high = j + t;
        if (model_kills(low, model) || model_kills(high, model))
            continue;
        SWMonomial m;
        if (low == 0)
            m = SWMonomial::w(high);
        else if (low == high)
            m = SWMonomial::w(low, 2);
        else if (low < high)
            m = SWMonomial::w(low) * SWMonomial::w(high);
        else
            m = SWMonomial::w(high) * SWMonomial::w(low);
        out += SWPolynomial{out.degree, {std::move(m)}};
    }
    return out;
}

namespace {

// Sq^a over an unfolded factor list via the Cartan rule, with a small
// memo table on (suffix index, remaining exponent).
SWPolynomial sq_on_factors(const std::vector<int>& factors, std::size_t idx, int a, SWModel model,
                           std::vector<std::vector<std::optional<SWPolynomial>>>& memo) {
    int tail_degree = 0;
    for (std::size_t i = idx; i < factors.size(); ++i)
        tail_degree += factors[i];
    if (idx == factors.size())
        return a == 0 ? SWPolynomial::one() : SWPolynomial::zero(a);
    auto& slot = memo[idx][a];
    if (slot)
        return *slot;
    SWPolynomial out = SWPolynomial::zero(tail_degree + a);
    for (int part = 0; part <= std::min(a, factors[idx]); ++part) {
        SWPolynomial head = wu_sq(part, factors[idx], model);
        if (head.is_zero())
            continue;
        SWPolynomial rest = sq_on_factors(factors, idx + 1, a - part, model, memo);
        if (rest.is_zero())
            continue;
        out += head * rest;
    }
    slot = out;
    return out;
}

}  // namespace

SWPolynomial sq_on_polynomial(int a, const SWPolynomial& p, SWModel model) {
    if (a < 0)
        throw std::invalid_argument("sq_on_polynomial: negative operation");
    if (a == 0)
        return p;
    SWPolynomial out = SWPolynomial::zero(p.degree + a);
    for (const SWMonomial& m : p.terms) {
        std::vector<int> factors;
        for (auto [index, exp] : m.factors)
            factors.insert(factors.end(), exp, index);
        std::vector<std::vector<std::optional<SWPolynomial>>> memo(
            factors.size(), std::vector<std::optional<SWPolynomial>>(a + 1));
        out += sq_on_factors(factors, 0, a, model, memo);
    }
    return out;
}

SWPolynomial sq_word_on_polynomial(const Seq& word, const SWPolynomial& p, SWModel model) {
    SWPolynomial cur = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = sq_on_polynomial(*it, cur, model);
    return cur;
}

ThomElement sq_on_thom(int a, const ThomElement& u) {
    // Sq^a(U p) = sum_{j=0}^{a} U w_{a-j} Sq^j(p), with w_0 = 1.
    SWPolynomial out = SWPolynomial::zero(u.poly.degree + a);
    for (int j = 0; j <= a; ++j) {
        SWPolynomial part = sq_on_polynomial(j, u.poly, SWModel::bo);
        if (part.is_zero())
            continue;
        if (a - j > 0)
            part = SWPolynomial::w(a - j) * part;
        out += part;
    }
    return ThomElement{std::move(out)};
}

ThomElement sq_word_on_thom(const Seq& word, const ThomElement& u) {
    ThomElement cur = u;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = sq_on_thom(*it, cur);
    return cur;
}

SWPolynomial mod_decomposables(const SWPolynomial& p) {
    SWPolynomial out = SWPolynomial::zero(p.degree);
    for (const SWMonomial& m : p.terms)
        if (m.factors.size() == 1 && m.factors[0].second == 1)
            out += SWPolynomial{p.degree, {m}};
    return out;
}

bool verify_thom_lemma(const Seq& admissible) {
    if (!is_admissible(admissible))
        throw std::invalid_argument("verify_thom_lemma: sequence is not admissible");
    ThomElement image = sq_word_on_thom(admissible, ThomElement::thom_class());
    if (image.poly.is_zero())
        return false;
    SWMonomial expected;
    // Admissible entries strictly decrease, so the product is squarefree.
    for (auto it = admissible.rbegin(); it != admissible.rend(); ++it)
        expected.factors.emplace_back(*it, 1);
    return image.poly.leading() == expected;
}

BSpinReport verify_bspin_formulas(int max_k, int max_n) {
    BSpinReport report;
    for (int k = 1; k <= max_k; ++k) {
        int target = (1 << (k + 1)) + 1;
        SWPolynomial image = sq_on_polynomial(1 << k, SWPolynomial::w((1 << k) + 1), SWModel::bso);
        bool ok = mod_decomposables(image) == SWPolynomial::w(target);
        report.cases.push_back({"Sq^" + std::to_string(1 << k) + "(w_" + std::to_string((1 << k) + 1) +
                                    ") = w_" + std::to_string(target) + " mod decomposables",
                                ok});
        report.pass = report.pass && ok;
    }
    for (int n = 1; n <= max_n; ++n) {
        int target = (1 << (n + 1)) + 1;
        Seq word;
        for (int e = n; e >= 0; --e)
            word.push_back(1 << e);
        SWPolynomial image = sq_word_on_polynomial(word, SWPolynomial::w(2), SWModel::bso);
        bool ok = mod_decomposables(image) == SWPolynomial::w(target);
        report.cases.push_back({"Sq^(2^" + std::to_string(n) + ",...,2,1)(w_2) = w_" +
                                    std::to_string(target) + " mod decomposables",
                                ok});
        report.pass = report.pass && ok;
    }
    return report;
}

}  // namespace steenrod
