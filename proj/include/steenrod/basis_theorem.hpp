#pragma once

#include <cstdint>
#include <string>

#include "steenrod/milnor.hpp"
#include "steenrod/quotients.hpp"

namespace steenrod {

// Number of ones in the binary expansion.
int alpha(std::uint64_t n);

// Candidate bases: admissible sequences of degree d with no entry of the
// form 2^n + 1 (n >= 1) and last entry >= 4 (bo) or >= 2 (bu).
std::vector<Seq> candidate_basis_bo(int d);
std::vector<Seq> candidate_basis_bu(int d);
// Conjectured A(n) pattern: last entry >= 2^{n+1}, every entry i with
// alpha(i - 1) > n.
std::vector<Seq> conjecture_basis_an(int n, int d);

// Dimension oracle for A//A(1): coefficients of prod 1/(1 - t^w) over
// weights {4, 6} then 2^i - 1 for i >= 3, truncated past max_d.
std::vector<long long> gf_dims_bo(int max_d);
// A//E(1) dimensions via dims_bu(d) = dims_bo(d) + dims_bo(d - 2).
std::vector<long long> gf_dims_bu(int max_d);

struct BasisReport {
    std::string module;  // "bo", "bu", or "an(n)"
    int degree = 0;
    std::vector<Seq> candidates;
    int count = 0;
    int quotient_dim = 0;
    int rank = 0;       // rank of [ideal + candidate rows] minus ideal rank
    bool spanning = false;
    bool pass = false;  // count == quotient_dim == rank
};

// Degree-by-degree verification: counts the candidates, measures the
// quotient, and row-reduces the candidate images. The context spec must
// match the module tag (A(1) for bo, E(1) for bu, A(n) for an(n)).
BasisReport verify_theorem(QuotientContext& ctx, const std::string& module, int d);

// The images of candidates_bo(d) and candidates_bo(d-2) * Sq^2 form a basis
// of A//E(1) in degree d.
bool verify_suffix_basis(QuotientContext& e1_ctx, int d);

struct Degree49Report {
    int antipode_degree = 0;
    int antipode_terms = 0;
    bool reduces_nonzero = false;
    int conjecture_count = 0;
    int quotient_dim = 0;
    bool pass = false;
};

// The antipode of Sq(8,4,2,1) is nonzero in A//A(2) at degree 49 while the
// conjectured pattern has no elements there.
Degree49Report verify_degree49(QuotientContext& a2_ctx);

}  // namespace steenrod
