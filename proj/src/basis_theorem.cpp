#include "steenrod/basis_theorem.hpp"

#include <bit>
#include <stdexcept>

namespace steenrod {

int alpha(std::uint64_t n) {
    return std::popcount(n);
}

namespace {

bool is_power_of_two(int x) {
    return x > 0 && (x & (x - 1)) == 0;
}

// Entries of the form 2^n + 1 with n >= 1, i.e. 3, 5, 9, 17, ...
bool excluded_entry(int i) {
    return i >= 3 && is_power_of_two(i - 1);
}

}  // namespace

std::vector<Seq> candidate_basis_bo(int d) {
    return enumerate_admissible(d, [](int i) { return !excluded_entry(i); }, 4);
}

std::vector<Seq> candidate_basis_bu(int d) {
    return enumerate_admissible(d, [](int i) { return !excluded_entry(i); }, 2);
}

std::vector<Seq> conjecture_basis_an(int n, int d) {
    return enumerate_admissible(
        d, [n](int i) { return alpha(static_cast<std::uint64_t>(i) - 1) > n; }, 1 << (n + 1));
}

std::vector<long long> gf_dims_bo(int max_d) {
    if (max_d < 0)
        throw std::invalid_argument("gf_dims_bo: negative degree cap");
    std::vector<long long> dims(max_d + 1, 0);
    dims[0] = 1;
    std::vector<int> weights{4, 6};
    for (int i = 3; (1 << i) - 1 <= max_d; ++i)
        weights.push_back((1 << i) - 1);
    for (int w : weights)
        for (int d = w; d <= max_d; ++d)
            dims[d] += dims[d - w];
    return dims;
}

std::vector<long long> gf_dims_bu(int max_d) {
    std::vector<long long> bo = gf_dims_bo(max_d);
    std::vector<long long> out(max_d + 1, 0);
    for (int d = 0; d <= max_d; ++d)
        out[d] = bo[d] + (d >= 2 ? bo[d - 2] : 0);
    return out;
}

BasisReport verify_theorem(QuotientContext& ctx, const std::string& module, int d) {
    BasisReport report;
    report.module = module;
    report.degree = d;
    if (module == "bo") {
        if (ctx.spec() != SubalgebraSpec::a(1))
            throw std::invalid_argument("verify_theorem: bo requires an A(1) context");
        report.candidates = candidate_basis_bo(d);
    } else if (module == "bu") {
        if (ctx.spec() != SubalgebraSpec::e1())
            throw std::invalid_argument("verify_theorem: bu requires an E(1) context");
        report.candidates = candidate_basis_bu(d);
    } else if (module.rfind("an(", 0) == 0 && module.back() == ')') {
        int n = std::stoi(module.substr(3, module.size() - 4));
        if (ctx.spec() != SubalgebraSpec::a(n))
            throw std::invalid_argument("verify_theorem: an(n) requires the matching A(n) context");
        report.candidates = conjecture_basis_an(n, d);
    } else {
        throw std::invalid_argument("verify_theorem: unknown module tag " + module);
    }
    report.count = static_cast<int>(report.candidates.size());
    report.quotient_dim = ctx.quotient_dim(d);
    EchelonForm probe = ctx.ideal(d);
    int grown = 0;
    for (const Seq& c : report.candidates)
        if (probe.insert(element_coords(Element::basis(c))))
            ++grown;
    report.rank = grown;
    report.spanning = ctx.ideal_rank(d) + report.count == admissible_dim(d);
    report.pass = report.count == report.quotient_dim && report.quotient_dim == report.rank;
    return report;
}

bool verify_suffix_basis(QuotientContext& e1_ctx, int d) {
    if (e1_ctx.spec() != SubalgebraSpec::e1())
        throw std::invalid_argument("verify_suffix_basis: requires an E(1) context");
    std::vector<Element> images;
    for (const Seq& c : candidate_basis_bo(d))
        images.push_back(Element::basis(c));
    if (d >= 2)
        for (const Seq& c : candidate_basis_bo(d - 2)) {
            Seq w(c);
            w.push_back(2);
            images.push_back(normalize(w));
        }
    EchelonForm probe = e1_ctx.ideal(d);
    int grown = 0;
    for (const Element& x : images)
        if (!x.is_zero() && probe.insert(element_coords(x)))
            ++grown;
    // Basis of the quotient: independent modulo the ideal and of full count.
    return grown == static_cast<int>(images.size()) && grown == e1_ctx.quotient_dim(d);
}

Degree49Report verify_degree49(QuotientContext& a2_ctx) {
    if (a2_ctx.spec() != SubalgebraSpec::a(2))
        throw std::invalid_argument("verify_degree49: requires an A(2) context");
    if (a2_ctx.max_degree() < 49)
        throw std::out_of_range("verify_degree49: context must reach degree 49");
    Degree49Report report;
    MilnorElement m = MilnorElement::basis({8, 4, 2, 1});
    Element chi = antipode(milnor_to_admissible(m));
    report.antipode_degree = chi.degree;
    report.antipode_terms = static_cast<int>(chi.terms.size());
    report.reduces_nonzero = !a2_ctx.reduce(chi).is_zero();
    report.conjecture_count = static_cast<int>(conjecture_basis_an(2, 49).size());
    report.quotient_dim = a2_ctx.quotient_dim(49);
    report.pass = report.reduces_nonzero && report.conjecture_count == 0;
    return report;
}

}  // namespace steenrod
