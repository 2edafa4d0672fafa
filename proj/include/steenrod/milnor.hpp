#pragma once

#include "steenrod/serre_cartan.hpp"

namespace steenrod {

// Milnor basis exponent sequence (r1, r2, ...) for Sq(r1, r2, ...), trailing
// zeros trimmed; degree is sum r_i (2^i - 1). The empty sequence is Sq() = 1.
using MilnorSeq = std::vector<int>;

int milnor_degree(const MilnorSeq& r);
MilnorSeq milnor_trim(MilnorSeq r);

struct MilnorElement {
    int degree = 0;
    std::vector<MilnorSeq> terms;  // canonical descending-lex order, no duplicates

    static MilnorElement zero(int degree) { return MilnorElement{degree, {}}; }
    static MilnorElement unit() { return MilnorElement{0, {MilnorSeq{}}}; }
    static MilnorElement sq(int n);  // Sq(n) = Sq^n
    static MilnorElement basis(MilnorSeq r);

    bool is_zero() const { return terms.empty(); }

    MilnorElement& operator+=(const MilnorElement& other);
    friend MilnorElement operator+(MilnorElement a, const MilnorElement& b) {
        a += b;
        return a;
    }
    friend bool operator==(const MilnorElement&, const MilnorElement&) = default;
};

// Milnor matrix product: sum over nonnegative matrices (x_ij) with weighted
// row sums x_i0 + sum_j 2^j x_ij = r_i and column sums sum_i x_ij = s_j,
// contributing Sq(T) with t_n = sum_{i+j=n} x_ij whenever every diagonal
// multinomial is odd (digit-disjointness).
MilnorElement milnor_product(const MilnorElement& x, const MilnorElement& y);

// Milnor basis of a degree in canonical order, memoized per thread.
const std::vector<MilnorSeq>& milnor_basis(int degree);
std::size_t milnor_index(int degree, const MilnorSeq& r);

// Mutually inverse change of basis per degree. The forward direction
// multiplies out Sq(i1)...Sq(ik); the inverse solves the resulting
// full-rank system with the incremental echelon structure.
MilnorElement admissible_to_milnor(const Element& x);
Element milnor_to_admissible(const MilnorElement& x);

// Hopf algebra antipode: linear, anti-multiplicative, involutive,
// degree-preserving. Computed on the admissible basis via the recursion
// chi(Sq^n) = sum_{i=1..n} Sq^i chi(Sq^{n-i}); the Milnor form goes through
// the change of basis.
Element antipode(const Element& x);
MilnorElement antipode(const MilnorElement& x);

}  // namespace steenrod
