// Acceptance suite: runs every headline verification at full scale and
// prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "steenrod/basis_theorem.hpp"
#include "steenrod/expr.hpp"
#include "steenrod/milnor.hpp"
#include "steenrod/quotients.hpp"
#include "steenrod/thom_sw.hpp"

using namespace steenrod;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& message) {
        pass = false;
        if (!detail.empty())
            detail += "; ";
        detail += message;
    }
};

std::vector<Seq> headed_sequences(int head, int degree_cap) {
    std::vector<Seq> out;
    for (int d = head; d <= degree_cap; ++d)
        for (const Seq& tail : enumerate_admissible_capped(d - head, head / 2, nullptr, 1)) {
            Seq j{head};
            j.insert(j.end(), tail.begin(), tail.end());
            out.push_back(std::move(j));
        }
    return out;
}

Seq random_word(std::mt19937& rng, int max_degree) {
    int d = 1 + static_cast<int>(rng() % max_degree);
    Seq w;
    while (d > 0) {
        int e = 1 + static_cast<int>(rng() % d);
        w.push_back(e);
        d -= e;
    }
    return w;
}

SWPolynomial random_sw_poly(std::mt19937& rng, int degree) {
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

int main() {
    constexpr int kDegreeCap = 56;
    QuotientContext a1(SubalgebraSpec::a(1), kDegreeCap);
    QuotientContext e1(SubalgebraSpec::e1(), kDegreeCap);
    QuotientContext a2(SubalgebraSpec::a(2), 49);

    struct Criterion {
        std::string name;
        std::function<void(Outcome&)> run;
    };

    std::vector<Criterion> criteria;

    // 1. Triple equality plus spanning for bo through degree 56, within the
    //    five-minute single-worker budget.
    criteria.push_back({"theorem-bo d<=56 (count = dim = rank, spanning, <=300s)", [&](Outcome& out) {
        auto start = std::chrono::steady_clock::now();
        a1.prepare_all(1);
        for (int d = 0; d <= kDegreeCap; ++d) {
            BasisReport r = verify_theorem(a1, "bo", d);
            if (!r.pass || !r.spanning)
                out.fail("degree " + std::to_string(d) + ": count " + std::to_string(r.count) +
                         ", dim " + std::to_string(r.quotient_dim) + ", rank " + std::to_string(r.rank));
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > 300.0)
            out.fail("runtime " + std::to_string(elapsed) + "s exceeds 300s");
    }});

    // 2. The same for bu, plus the suffix-basis property through degree 40.
    criteria.push_back({"theorem-bu d<=56 with suffix basis d<=40", [&](Outcome& out) {
        e1.prepare_all(1);
        for (int d = 0; d <= kDegreeCap; ++d) {
            BasisReport r = verify_theorem(e1, "bu", d);
            if (!r.pass || !r.spanning)
                out.fail("degree " + std::to_string(d));
        }
        for (int d = 0; d <= 40; ++d)
            if (!verify_suffix_basis(e1, d))
                out.fail("suffix basis fails at degree " + std::to_string(d));
    }});

    // 3. Generating-function oracle equals row reduction, both modules.
    criteria.push_back({"oracle agreement d<=56 (gf = row reduction)", [&](Outcome& out) {
        std::vector<long long> bo = gf_dims_bo(kDegreeCap);
        std::vector<long long> bu = gf_dims_bu(kDegreeCap);
        for (int d = 0; d <= kDegreeCap; ++d) {
            if (bo[d] != a1.quotient_dim(d))
                out.fail("bo degree " + std::to_string(d));
            if (bu[d] != e1.quotient_dim(d))
                out.fail("bu degree " + std::to_string(d));
        }
    }});

    // 4. Degree-49 refutation.
    criteria.push_back({"degree 49: antipode of Sq(8,4,2,1) nonzero, pattern empty", [&](Outcome& out) {
        a2.prepare({49}, 1);
        Degree49Report r = verify_degree49(a2);
        if (r.antipode_degree != 49)
            out.fail("antipode degree " + std::to_string(r.antipode_degree));
        if (!r.reduces_nonzero)
            out.fail("antipode image reduces to zero in A//A(2)");
        if (r.conjecture_count != 0)
            out.fail("conjectured pattern nonempty in degree 49");
        if (r.quotient_dim < 1)
            out.fail("quotient dimension " + std::to_string(r.quotient_dim));
    }});

    // 5. Leading-entry bounds for Sq^a T_b with sharpness through b = 12.
    criteria.push_back({"leading-entry bounds a,b<=24, |I|<=48; 2b-1 attained for b<=12", [&](Outcome& out) {
        PropBasicResult r = check_prop_basic(24, 24, 48, 12);
        for (const auto& [a, b, seq] : r.violations)
            out.fail("bound violated at a=" + std::to_string(a) + " b=" + std::to_string(b) + " I=" +
                     sq_string(seq));
        for (int b : r.not_attained)
            out.fail("bound 2b-1 not attained for b=" + std::to_string(b));
        if (!r.pass && out.pass)
            out.fail("sweep failed");
    }});

    // 6. Sq^{m+1} in T_m: A(1) for m <= 48 with alpha(m) <= 1, A(2) for
    //    m <= 40 with alpha(m) <= 2.
    criteria.push_back({"Sq^{m+1} in T_m: A(1) m<=48, A(2) m<=40", [&](Outcome& out) {
        for (int m = 1; m <= 48; ++m)
            if (alpha(m) <= 1 && !verify_prop_an(a1, m))
                out.fail("A(1) m=" + std::to_string(m));
        std::vector<int> degrees;
        for (int m = 1; m <= 40; ++m)
            if (alpha(m) <= 2)
                degrees.push_back(m + 1);
        a2.prepare(degrees, 1);
        for (int m = 1; m <= 40; ++m)
            if (alpha(m) <= 2 && !verify_prop_an(a2, m))
                out.fail("A(2) m=" + std::to_string(m));
    }});

    // 7. Stringk and the excess lemma for n+1 <= 4, |J| <= 40, in A//A(1).
    criteria.push_back({"stringk and excess lemma, n+1<=4, |J|<=40", [&](Outcome& out) {
        for (int n = 0; n <= 3; ++n) {
            int head = (1 << (n + 1)) + 1;
            for (const Seq& j : headed_sequences(head, 40)) {
                if (!verify_stringk(a1, n, j).pass)
                    out.fail("stringk n=" + std::to_string(n) + " J=" + sq_string(j));
                if (!verify_excess_lemma(a1, n, j).pass)
                    out.fail("excess n=" + std::to_string(n) + " J=" + sq_string(j));
            }
        }
    }});

    // 8. The intermediate induction step for n <= 3 and total degree <= 36.
    criteria.push_back({"induction step, n<=3, degree<=36", [&](Outcome& out) {
        for (int n = 0; n <= 3; ++n) {
            int head = (1 << (n + 1)) + 1;
            for (const Seq& j : headed_sequences(head, 36)) {
                if (j.size() < 2)
                    continue;
                Seq tail(j.begin() + 1, j.end());
                if (!verify_induction(a1, n, tail))
                    out.fail("n=" + std::to_string(n) + " tail=" + sq_string(tail));
            }
        }
    }});

    // 9. Thom's leading-monomial lemma through degree 18, plus the order chain.
    criteria.push_back({"Thom lemma |I|<=18 and the w4 chain", [&](Outcome& out) {
        for (int d = 1; d <= 18; ++d)
            for (const Seq& s : admissible_basis(d))
                if (!verify_thom_lemma(s))
                    out.fail("I=" + sq_string(s));
        SWMonomial m1 = SWMonomial::w(4);
        SWMonomial m2 = SWMonomial::w(4) * SWMonomial::w(1, 2);
        SWMonomial m3 = SWMonomial::w(4) * SWMonomial::w(2) * SWMonomial::w(1);
        SWMonomial m4 = SWMonomial::w(4) * SWMonomial::w(3);
        if (!(monomial_order(m1, m2) == std::strong_ordering::less &&
              monomial_order(m2, m3) == std::strong_ordering::less &&
              monomial_order(m3, m4) == std::strong_ordering::less))
            out.fail("monomial order chain broken");
    }});

    // 10. Indecomposable formulas for k <= 4 and n <= 4.
    criteria.push_back({"indecomposable formulas k<=4, n<=4", [&](Outcome& out) {
        BSpinReport r = verify_bspin_formulas(4, 4);
        for (const BSpinCase& c : r.cases)
            if (!c.pass)
                out.fail(c.label);
    }});

    // 11. Algebra self-consistency: confluence, associativity, basis
    //     round-trip, antipode laws, and the geometric Adem compatibility.
    criteria.push_back({"self-consistency (confluence, associativity, round-trip, antipode, SW)",
                        [&](Outcome& out) {
        std::mt19937 rng(20260810);
        for (int trial = 0; trial < 10000; ++trial) {
            Seq w = random_word(rng, 30);
            if (normalize(w, RewriteStrategy::rightmost_first) !=
                normalize(w, RewriteStrategy::leftmost_first)) {
                out.fail("confluence fails on a word of degree " + std::to_string(seq_degree(w)));
                break;
            }
        }
        for (int trial = 0; trial < 1000; ++trial) {
            int a = 1 + static_cast<int>(rng() % 14);
            int b = 1 + static_cast<int>(rng() % 14);
            int c = 1 + static_cast<int>(rng() % std::max(1, 30 - a - b));
            if (a + b + c > 30)
                continue;
            Element left = product(product(Element::sq(a), Element::sq(b)), Element::sq(c));
            Element right = product(Element::sq(a), product(Element::sq(b), Element::sq(c)));
            if (left != right) {
                out.fail("associativity fails");
                break;
            }
        }
        for (int d = 0; d <= 30 && out.pass; ++d) {
            if (milnor_basis(d).size() != admissible_basis(d).size()) {
                out.fail("basis counts differ in degree " + std::to_string(d));
                break;
            }
            for (const Seq& s : admissible_basis(d)) {
                Element x = Element::basis(s);
                if (milnor_to_admissible(admissible_to_milnor(x)) != x) {
                    out.fail("round-trip fails in degree " + std::to_string(d));
                    break;
                }
            }
        }
        for (int d = 0; d <= 20 && out.pass; ++d)
            for (const Seq& s : admissible_basis(d)) {
                Element x = Element::basis(s);
                if (antipode(antipode(x)) != x) {
                    out.fail("antipode involution fails in degree " + std::to_string(d));
                    break;
                }
            }
        for (int a = 1; a <= 19 && out.pass; ++a)
            for (int b = 1; a + b <= 20; ++b) {
                Element lhs = antipode(product(Element::sq(a), Element::sq(b)));
                Element rhs = product(antipode(Element::sq(b)), antipode(Element::sq(a)));
                if (lhs != rhs) {
                    out.fail("antipode anti-multiplicativity fails");
                    break;
                }
            }
        int trials = 0;
        while (trials < 200 && out.pass) {
            int b = 1 + static_cast<int>(rng() % 6);
            int a = 1 + static_cast<int>(rng() % (2 * b));
            if (a >= 2 * b || a + b > 14)
                continue;
            ++trials;
            SWPolynomial p = random_sw_poly(rng, 1 + static_cast<int>(rng() % 8));
            SWPolynomial direct = sq_on_polynomial(a, sq_on_polynomial(b, p));
            SWPolynomial via = SWPolynomial::zero(p.degree + a + b);
            for (const Seq& term : adem_expand(a, b).terms) {
                SWPolynomial acc = p;
                for (auto it = term.rbegin(); it != term.rend(); ++it)
                    acc = sq_on_polynomial(*it, acc);
                via += acc;
            }
            if (direct != via)
                out.fail("geometric Adem compatibility fails at a=" + std::to_string(a) +
                         " b=" + std::to_string(b));
        }
    }});

    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        criteria[i].run(out);
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%2zu/%zu] %s  %s (%.2fs)\n", i + 1, criteria.size(),
                    out.pass ? "PASS" : "FAIL", criteria[i].name.c_str(), elapsed);
        if (!out.pass) {
            all_pass = false;
            std::printf("        %s\n", out.detail.c_str());
        }
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
