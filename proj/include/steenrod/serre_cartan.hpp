#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "steenrod/f2linalg.hpp"

namespace steenrod {

// A sequence of exponents (i1,...,ik) standing for the composition
// Sq^{i1} Sq^{i2} ... Sq^{ik}. The empty sequence is the unit. A sequence is
// admissible when i_s >= 2 i_{s+1} throughout; the admissible compositions
// form the Serre-Cartan basis of the mod-2 Steenrod algebra.
using Seq = std::vector<int>;

int seq_degree(const Seq& s);                        // sum of entries
inline int seq_length(const Seq& s) { return static_cast<int>(s.size()); }
int seq_excess(const Seq& s);                        // i1 - i2 - ... - ik, 0 for the unit
bool is_admissible(const Seq& s);

// Canonical order on sequences of one degree: descending lexicographic.
struct SeqDescLex {
    bool operator()(const Seq& a, const Seq& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Homogeneous F2-linear combination of admissible sequences. Terms are kept
// in canonical order with no duplicates; the zero element is an empty term
// list with an explicit degree.
struct Element {
    int degree = 0;
    std::vector<Seq> terms;

    static Element zero(int degree) { return Element{degree, {}}; }
    static Element unit() { return Element{0, {Seq{}}}; }
    static Element sq(int n);       // Sq^n; sq(0) is the unit
    static Element basis(Seq seq);  // single admissible term

    bool is_zero() const { return terms.empty(); }
    bool is_unit() const { return degree == 0 && terms.size() == 1; }

    Element& operator+=(const Element& other);  // F2 sum; degrees must agree
    friend Element operator+(Element a, const Element& b) {
        a += b;
        return a;
    }
    friend bool operator==(const Element&, const Element&) = default;
};

// Binomial coefficient C(n, k) mod 2 (Lucas: 1 iff the binary digits of k
// are dominated by those of n).
bool binom_mod2(std::uint64_t n, std::uint64_t k);

// Adem expansion of the inadmissible product Sq^a Sq^b, a < 2b:
//   sum over i of C(b-1-i, a-2i) Sq^{a+b-i} Sq^i,  max(0, a-b+1) <= i <= a/2,
// with Sq^0 absorbed into the unit. Memoized per thread; the returned
// reference stays valid for the thread's lifetime. Throws when a >= 2b or
// either exponent is nonpositive.
const Element& adem_expand(int a, int b);

// Installs a precomputed expansion table consulted before computing. Must be
// called before any worker threads start; entries are trusted verbatim.
void adem_install_seed(std::map<std::pair<int, int>, Element> table);

// All expansions with a < 2b and a + b <= degree_cap, in sorted key order.
std::map<std::pair<int, int>, Element> adem_expansions_upto(int degree_cap);

enum class RewriteStrategy { rightmost_first, leftmost_first };

// Unique expression of Sq^w in the admissible basis. Entries must be
// positive. The strategy picks which inadmissible adjacent pair is expanded
// first; both strategies agree (checked by test, not assumed).
Element normalize(const Seq& word, RewriteStrategy strategy = RewriteStrategy::rightmost_first);

// Bilinear product: concatenate representatives and normalize.
Element product(const Element& x, const Element& y);

using EntryPredicate = std::function<bool(int)>;

// Admissible sequences of the given degree in canonical order, filtered by an
// optional per-entry predicate, a lower bound on the last entry, a cap on the
// first entry, and an optional excess bound. Degree 0 yields the unit
// regardless of min_last.
std::vector<Seq> enumerate_admissible(int degree, const EntryPredicate& allowed, int min_last,
                                      std::optional<int> max_excess = std::nullopt);
std::vector<Seq> enumerate_admissible_capped(int degree, int max_first, const EntryPredicate& allowed,
                                             int min_last, std::optional<int> max_excess = std::nullopt);

// Full admissible basis of a degree, memoized per thread.
const std::vector<Seq>& admissible_basis(int degree);
int admissible_dim(int degree);
// Position of an admissible sequence in admissible_basis(degree).
std::size_t admissible_index(int degree, const Seq& s);

// Coordinates of an element over the admissible basis of its degree.
BitVector element_coords(const Element& x);
Element element_from_coords(int degree, const BitVector& coords);

// Leading-entry check for products Sq^a * Sq^I with i1 = b: every term of the
// normal form must have first entry at most a (a >= 2b), 2b-1 (2b > a >= b),
// or a+b (b > a). checked counts (a, I) pairs; sharpness records, for each
// b <= sharpness_b_max, whether the middle-case bound 2b-1 is attained by
// some a and some I with first entry at most b.
struct PropBasicResult {
    bool pass = true;
    long long checked = 0;
    std::vector<std::tuple<int, int, Seq>> violations;  // (a, b, I)
    std::vector<int> attained;
    std::vector<int> not_attained;
};
PropBasicResult check_prop_basic(int a_max, int b_max, int degree_cap, int sharpness_b_max);

}  // namespace steenrod
