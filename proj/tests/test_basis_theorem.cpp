#include <stdexcept>
#include "doctest.h"
#include "steenrod/basis_theorem.hpp"

using namespace steenrod;

namespace {

// Independent partition-count oracle for the generating function.
long long partitions_into(int d, const std::vector<int>& weights, std::size_t idx) {
    if (d == 0)
        return 1;
    if (idx == weights.size())
        return 0;
    long long total = 0;
    for (int used = 0; used * weights[idx] <= d; ++used)
        total += partitions_into(d - used * weights[idx], weights, idx + 1);
    return total;
}

}  // namespace

TEST_CASE("alpha") {
    CHECK(alpha(0) == 0);
    CHECK(alpha(7) == 3);
    CHECK(alpha(49) == 3);  // 110001
    CHECK(alpha(1 << 20) == 1);
}

TEST_CASE("candidate bases") {
    CHECK(candidate_basis_bo(0) == std::vector<Seq>{{}});
    CHECK(candidate_basis_bo(4) == std::vector<Seq>{{4}});
    CHECK(candidate_basis_bo(5).empty());
    CHECK(candidate_basis_bo(12) == std::vector<Seq>{{12}, {8, 4}});
    CHECK(candidate_basis_bu(2) == std::vector<Seq>{{2}});
    CHECK(candidate_basis_bu(3).empty());
    CHECK(candidate_basis_bu(6) == std::vector<Seq>{{6}, {4, 2}});
    CHECK(candidate_basis_bu(10) == std::vector<Seq>{{10}, {8, 2}});
}

TEST_CASE("conjectured A(n) pattern") {
    CHECK(conjecture_basis_an(1, 4) == std::vector<Seq>{{4}});
    CHECK(conjecture_basis_an(2, 49).empty());
    CHECK(conjecture_basis_an(0, 6) == std::vector<Seq>{{6}, {4, 2}});
    // The n = 1 pattern is exactly the bo candidate basis.
    for (int d = 0; d <= 40; ++d)
        CHECK(conjecture_basis_an(1, d) == candidate_basis_bo(d));
}

TEST_CASE("generating-function oracles") {
    std::vector<long long> bo = gf_dims_bo(40);
    CHECK(std::vector<long long>(bo.begin(), bo.begin() + 9) ==
          std::vector<long long>{1, 0, 0, 0, 1, 0, 1, 1, 1});
    CHECK(bo[10] == 1);
    CHECK(bo[11] == 1);
    CHECK(bo[12] == 2);
    std::vector<long long> bu = gf_dims_bu(40);
    CHECK(bu[0] == 1);
    CHECK(bu[2] == 1);
    CHECK(bu[4] == 1);
    CHECK(bu[10] == 2);
    // Independent oracle: count partitions into {4, 6, 7, 15, 31} directly.
    std::vector<int> weights{4, 6, 7, 15, 31};
    for (int d = 0; d <= 40; ++d) {
        CHECK(bo[d] == partitions_into(d, weights, 0));
        CHECK(bu[d] == bo[d] + (d >= 2 ? bo[d - 2] : 0));
    }
}

TEST_CASE("candidate counts match the generating function") {
    std::vector<long long> bo = gf_dims_bo(40);
    std::vector<long long> bu = gf_dims_bu(40);
    for (int d = 0; d <= 40; ++d) {
        CHECK(static_cast<long long>(candidate_basis_bo(d).size()) == bo[d]);
        CHECK(static_cast<long long>(candidate_basis_bu(d).size()) == bu[d]);
    }
}

TEST_CASE("verify_theorem examples") {
    QuotientContext a1(SubalgebraSpec::a(1), 12);
    BasisReport r4 = verify_theorem(a1, "bo", 4);
    CHECK(r4.count == 1);
    CHECK(r4.quotient_dim == 1);
    CHECK(r4.rank == 1);
    CHECK(r4.spanning);
    CHECK(r4.pass);
    BasisReport r5 = verify_theorem(a1, "bo", 5);
    CHECK(r5.count == 0);
    CHECK(r5.quotient_dim == 0);
    CHECK(r5.pass);

    QuotientContext e1(SubalgebraSpec::e1(), 12);
    BasisReport b3 = verify_theorem(e1, "bu", 3);
    CHECK(b3.count == 0);
    CHECK(b3.quotient_dim == 0);
    CHECK(b3.pass);

    CHECK_THROWS_AS(verify_theorem(a1, "bu", 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(e1, "bo", 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(a1, "nonsense", 3), std::invalid_argument);
}

TEST_CASE("bu suffix basis in low degrees") {
    QuotientContext e1(SubalgebraSpec::e1(), 20);
    for (int d = 0; d <= 20; ++d)
        CHECK(verify_suffix_basis(e1, d));
}

TEST_CASE("degree 49 refutation") {
    QuotientContext a2(SubalgebraSpec::a(2), 49);
    a2.prepare({49});
    Degree49Report report = verify_degree49(a2);
    CHECK(report.antipode_degree == 49);
    CHECK(report.reduces_nonzero);
    CHECK(report.conjecture_count == 0);
    CHECK(report.quotient_dim >= 1);
    CHECK(report.pass);
}
