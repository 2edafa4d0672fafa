#pragma once

#include <optional>
#include <string>

#include "steenrod/f2linalg.hpp"
#include "steenrod/serre_cartan.hpp"

namespace steenrod {

// Descriptor of the subalgebra A(n) (generated by Sq^1, Sq^2, ..., Sq^{2^n})
// or E(1) (generated by Q0 = Sq^1 and Q1 = Sq^1 Sq^2 + Sq^2 Sq^1).
struct SubalgebraSpec {
    enum class Kind { a_family, e1 };
    Kind kind = Kind::a_family;
    int n = 1;

    static SubalgebraSpec a(int n);
    static SubalgebraSpec e1() { return SubalgebraSpec{Kind::e1, 0}; }

    std::vector<Element> generators() const;
    std::string name() const;  // "A(1)", "E(1)"

    friend bool operator==(const SubalgebraSpec&, const SubalgebraSpec&) = default;
};

// Per-degree maximal independent sets of products of the generators
// (multiplicative closure in admissible coordinates); degree 0 is the unit.
std::vector<std::vector<Element>> subalgebra_basis(const SubalgebraSpec& spec, int max_degree);

// Degree slices of the left ideal A.S+ together with a chosen complement
// realizing quotient coordinates. Slices are independent per degree and can
// be built by parallel workers; afterwards the context is read-only.
class QuotientContext {
public:
    QuotientContext(SubalgebraSpec spec, int max_degree);

    const SubalgebraSpec& spec() const { return spec_; }
    int max_degree() const { return max_degree_; }

    void prepare(const std::vector<int>& degrees, int jobs = 1);
    void prepare_all(int jobs = 1);

    const std::vector<Element>& subalgebra_slice(int d) const;
    int subalgebra_dim() const;

    // Echelonized span of { Sq^I . s : s positive-degree subalgebra basis }.
    const EchelonForm& ideal(int d);
    int ideal_rank(int d) { return static_cast<int>(ideal(d).rank()); }
    int quotient_dim(int d);
    // Admissible sequences extending the ideal slice to full rank, chosen
    // greedily in canonical order.
    const std::vector<Seq>& complement(int d);

    // Coordinates of x over complement(x.degree); zero exactly on the ideal.
    BitVector reduce(const Element& x);
    bool in_ideal(const Element& x);

private:
    struct Slice {
        EchelonForm ideal;
        std::vector<Seq> complement;
        EchelonForm augmented;  // width n_d + |complement|
    };

    Slice build_slice(int d) const;
    const Slice& slice(int d);

    SubalgebraSpec spec_;
    int max_degree_;
    std::vector<std::vector<Element>> sub_basis_;
    std::vector<std::optional<Slice>> slices_;
};

// Membership of x in span{ admissible K of the same degree, k1 <= b }.
bool in_t_span(const Element& x, int b);
// Same modulo the ideal slice of ctx.
bool in_t_mod_ideal(const Element& x, int b, QuotientContext& ctx);
// A set of admissible K with k1 <= b such that x + sum Sq^K lies in the
// ideal; nullopt when x is not in the span plus ideal.
std::optional<std::vector<Seq>> t_representation(const Element& x, int b, QuotientContext& ctx);

// Binary-block decomposition m = 2a + b used for the induction on
// Sq^{m+1}: with exponents k1 > ... > kl of m and s the first index with
// k_s > k_{s+1} + 1 (s = l if none), a sums 2^{k_i - 1} for i <= s and b the
// remaining powers. The shape m + 1 = 2^l terminates the induction instead.
struct AnDecomposition {
    bool terminating = false;
    int a = 0;
    int b = 0;
};
AnDecomposition an_decompose(int m);  // throws std::domain_error for m <= 0

// Sq^{m+1} lies in T_m modulo the ideal (requires alpha(m) <= n for A(n)).
bool verify_prop_an(QuotientContext& ctx, int m);

// For admissible J with j1 = 2^{n+1} + 1: Sq^J lies in T_{2^{n+1}} modulo the
// ideal. `strengthened` reports the same at bound 2^{n+1} - 1 (observed, not
// required).
struct StringkResult {
    bool pass = false;
    bool strengthened = false;
};
StringkResult verify_stringk(QuotientContext& ctx, int n, const Seq& j);

// Both halves of the intermediate induction step for tail (i0,...,ik):
// the staircase product Sq^{2^n+i0} ... Sq^{2^{n-k}+ik} Sq^{2^{n-k}+1} lies in
// T_{2^{n+1}} modulo the ideal, and so does its difference with
// Sq^{2^{n+1}+1} Sq^{i0} ... Sq^{ik}.
bool verify_induction(QuotientContext& ctx, int n, const Seq& tail);

// For admissible J with j1 = 2^{n+1} + 1: Sq^J lies in the span of admissible
// K with e(K) <= e(J) - 2, modulo the ideal. excess_gap reports
// e(J) - max e(K) over a witness representation (nullopt when Sq^J reduces
// to zero).
struct ExcessLemmaResult {
    bool pass = false;
    std::optional<int> excess_gap;
};
ExcessLemmaResult verify_excess_lemma(QuotientContext& ctx, int n, const Seq& j);

}  // namespace steenrod
