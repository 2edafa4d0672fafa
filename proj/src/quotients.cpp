#include "steenrod/quotients.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "steenrod/parallel.hpp"

namespace steenrod {

SubalgebraSpec SubalgebraSpec::a(int n) {
    if (n < 0)
        throw std::invalid_argument("SubalgebraSpec::a: n must be nonnegative");
    return SubalgebraSpec{Kind::a_family, n};
}

std::vector<Element> SubalgebraSpec::generators() const {
    std::vector<Element> out;
    if (kind == Kind::a_family) {
        for (int i = 0; i <= n; ++i)
            out.push_back(Element::sq(1 << i));
    } else {
        out.push_back(Element::sq(1));                       // Q0
        out.push_back(Element{3, {Seq{3}, Seq{2, 1}}});      // Q1 = Sq^1 Sq^2 + Sq^2 Sq^1
    }
    return out;
}

std::string SubalgebraSpec::name() const {
    if (kind == Kind::e1)
        return "E(1)";
    return "A(" + std::to_string(n) + ")";
}

std::vector<std::vector<Element>> subalgebra_basis(const SubalgebraSpec& spec, int max_degree) {
    std::vector<Element> gens = spec.generators();
    std::vector<std::vector<Element>> basis(max_degree + 1);
    basis[0].push_back(Element::unit());
    for (int d = 1; d <= max_degree; ++d) {
        EchelonForm ech(admissible_basis(d).size());
        for (const Element& g : gens) {
            if (g.degree > d)
                continue;
            for (const Element& b : basis[d - g.degree]) {
                Element candidate = product(b, g);
                if (candidate.is_zero())
                    continue;
                if (ech.insert(element_coords(candidate)))
                    basis[d].push_back(std::move(candidate));
            }
        }
    }
    return basis;
}

QuotientContext::QuotientContext(SubalgebraSpec spec, int max_degree)
    : spec_(spec), max_degree_(max_degree), slices_(max_degree + 1) {
    if (max_degree < 0)
        throw std::invalid_argument("QuotientContext: negative max degree");
    sub_basis_ = subalgebra_basis(spec_, max_degree_);
}

const std::vector<Element>& QuotientContext::subalgebra_slice(int d) const {
    if (d < 0 || d > max_degree_)
        throw std::out_of_range("subalgebra_slice: degree out of range");
    return sub_basis_[d];
}

int QuotientContext::subalgebra_dim() const {
    int total = 0;
    for (const auto& slice : sub_basis_)
        total += static_cast<int>(slice.size());
    return total;
}

QuotientContext::Slice QuotientContext::build_slice(int d) const {
    const auto& basis_d = admissible_basis(d);
    Slice slice;
    slice.ideal = EchelonForm(basis_d.size());
    for (int e = 1; e <= d; ++e) {
        for (const Element& s : sub_basis_[e]) {
            for (const Seq& left : admissible_basis(d - e)) {
                Element prod = product(Element::basis(left), s);
                if (!prod.is_zero())
                    slice.ideal.insert(element_coords(prod));
            }
        }
    }
    EchelonForm probe = slice.ideal;
    for (std::size_t idx = 0; idx < basis_d.size(); ++idx) {
        BitVector row(basis_d.size());
        row.set(idx);
        if (probe.insert(std::move(row)))
            slice.complement.push_back(basis_d[idx]);
    }
    // Augmented rows (coords | quotient coordinates) make reduce() a single
    // elimination pass.
    std::size_t k = slice.complement.size();
    slice.augmented = EchelonForm(basis_d.size() + k);
    for (const BitVector& row : slice.ideal.rows()) {
        BitVector wide(basis_d.size() + k);
        for (std::size_t i : row.support())
            wide.set(i);
        slice.augmented.insert(std::move(wide));
    }
    for (std::size_t j = 0; j < k; ++j) {
        BitVector wide(basis_d.size() + k);
        wide.set(admissible_index(d, slice.complement[j]));
        wide.set(basis_d.size() + j);
        slice.augmented.insert(std::move(wide));
    }
    return slice;
}

const QuotientContext::Slice& QuotientContext::slice(int d) {
    if (d < 0 || d > max_degree_)
        throw std::out_of_range("QuotientContext: degree out of range");
    if (!slices_[d])
        slices_[d] = build_slice(d);
    return *slices_[d];
}

void QuotientContext::prepare(const std::vector<int>& degrees, int jobs) {
    std::vector<int> todo;
    for (int d : degrees) {
        if (d < 0 || d > max_degree_)
            throw std::out_of_range("QuotientContext::prepare: degree out of range");
        if (!slices_[d])
            todo.push_back(d);
    }
    std::sort(todo.begin(), todo.end());
    todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
    parallel_for_index(jobs, todo.size(), [&](std::size_t i) { slices_[todo[i]] = build_slice(todo[i]); });
}

void QuotientContext::prepare_all(int jobs) {
    std::vector<int> degrees(max_degree_ + 1);
    for (int d = 0; d <= max_degree_; ++d)
        degrees[d] = d;
    prepare(degrees, jobs);
}

const EchelonForm& QuotientContext::ideal(int d) {
    return slice(d).ideal;
}

int QuotientContext::quotient_dim(int d) {
    return admissible_dim(d) - ideal_rank(d);
}

const std::vector<Seq>& QuotientContext::complement(int d) {
    return slice(d).complement;
}

BitVector QuotientContext::reduce(const Element& x) {
    const Slice& s = slice(x.degree);
    std::size_t n = admissible_basis(x.degree).size();
    std::size_t k = s.complement.size();
    BitVector wide(n + k);
    for (const Seq& t : x.terms)
        wide.set(admissible_index(x.degree, t));
    BitVector residue = s.augmented.reduce(std::move(wide));
    BitVector coords(k);
    for (std::size_t i : residue.support()) {
        if (i < n)
            throw std::logic_error("QuotientContext::reduce: complement does not reach full rank");
        coords.set(i - n);
    }
    return coords;
}

bool QuotientContext::in_ideal(const Element& x) {
    return slice(x.degree).ideal.contains(element_coords(x));
}

namespace {

// Indices of the admissible basis of degree d with first entry <= b. In
// canonical order these form a suffix of the basis list.
std::size_t t_span_start(int d, int b) {
    const auto& basis = admissible_basis(d);
    std::size_t lo = 0;
    while (lo < basis.size() && !basis[lo].empty() && basis[lo][0] > b)
        ++lo;
    return lo;
}

}  // namespace

bool in_t_span(const Element& x, int b) {
    // T_b is a coordinate subspace: check the support directly.
    std::size_t start = t_span_start(x.degree, b);
    for (std::size_t i : element_coords(x).support())
        if (i < start)
            return false;
    return true;
}

bool in_t_mod_ideal(const Element& x, int b, QuotientContext& ctx) {
    EchelonForm probe = ctx.ideal(x.degree);
    const auto& basis = admissible_basis(x.degree);
    for (std::size_t idx = t_span_start(x.degree, b); idx < basis.size(); ++idx) {
        BitVector row(basis.size());
        row.set(idx);
        probe.insert(std::move(row));
    }
    return probe.contains(element_coords(x));
}

std::optional<std::vector<Seq>> t_representation(const Element& x, int b, QuotientContext& ctx) {
    const auto& basis = admissible_basis(x.degree);
    std::size_t n = basis.size();
    std::size_t start = t_span_start(x.degree, b);
    std::size_t k = n - start;
    EchelonForm aug(n + k);
    for (const BitVector& row : ctx.ideal(x.degree).rows()) {
        BitVector wide(n + k);
        for (std::size_t i : row.support())
            wide.set(i);
        aug.insert(std::move(wide));
    }
    for (std::size_t j = 0; j < k; ++j) {
        BitVector wide(n + k);
        wide.set(start + j);
        wide.set(n + j);
        aug.insert(std::move(wide));
    }
    BitVector v(n + k);
    for (const Seq& t : x.terms)
        v.set(admissible_index(x.degree, t));
    BitVector residue = aug.reduce(std::move(v));
    std::vector<Seq> rep;
    for (std::size_t i : residue.support()) {
        if (i < n)
            return std::nullopt;
        rep.push_back(basis[start + (i - n)]);
    }
    return rep;
}

AnDecomposition an_decompose(int m) {
    if (m <= 0)
        throw std::domain_error("an_decompose: m must be positive");
    std::vector<int> exponents;  // k1 > k2 > ... > kl
    for (int k = 30; k >= 0; --k)
        if (m & (1 << k))
            exponents.push_back(k);
    int l = static_cast<int>(exponents.size());
    int s = l;
    for (int i = 0; i + 1 < l; ++i)
        if (exponents[i] > exponents[i + 1] + 1) {
            s = i + 1;
            break;
        }
    if (s == l && exponents.back() == 0)
        return AnDecomposition{true, 0, 0};
    AnDecomposition out;
    for (int i = 0; i < s; ++i)
        out.a += 1 << (exponents[i] - 1);
    for (int i = s; i < l; ++i)
        out.b += 1 << exponents[i];
    return out;
}

bool verify_prop_an(QuotientContext& ctx, int m) {
    if (m + 1 > ctx.max_degree())
        throw std::out_of_range("verify_prop_an: degree exceeds context cap");
    return in_t_mod_ideal(Element::sq(m + 1), m, ctx);
}

StringkResult verify_stringk(QuotientContext& ctx, int n, const Seq& j) {
    int head = (1 << (n + 1)) + 1;
    if (!is_admissible(j) || j.empty() || j[0] != head)
        throw std::invalid_argument("verify_stringk: J must be admissible with j1 = 2^{n+1} + 1");
    Element x = Element::basis(j);
    StringkResult out;
    out.pass = in_t_mod_ideal(x, head - 1, ctx);
    out.strengthened = in_t_mod_ideal(x, head - 2, ctx);
    return out;
}

bool verify_induction(QuotientContext& ctx, int n, const Seq& tail) {
    if (tail.empty())
        throw std::invalid_argument("verify_induction: tail must be nonempty");
    Seq j{(1 << (n + 1)) + 1};
    j.insert(j.end(), tail.begin(), tail.end());
    if (!is_admissible(j))
        throw std::invalid_argument("verify_induction: (2^{n+1}+1, tail) must be admissible");
    int k = static_cast<int>(tail.size()) - 1;
    Seq staircase;
    for (int idx = 0; idx <= k; ++idx)
        staircase.push_back((1 << (n - idx)) + tail[idx]);
    staircase.push_back((1 << (n - k)) + 1);
    Element lhs = normalize(staircase);
    int bound = 1 << (n + 1);
    if (!in_t_mod_ideal(lhs, bound, ctx))
        return false;
    Element difference = lhs + Element::basis(j);
    return in_t_mod_ideal(difference, bound, ctx);
}

ExcessLemmaResult verify_excess_lemma(QuotientContext& ctx, int n, const Seq& j) {
    int head = (1 << (n + 1)) + 1;
    if (!is_admissible(j) || j.empty() || j[0] != head)
        throw std::invalid_argument("verify_excess_lemma: J must be admissible with j1 = 2^{n+1} + 1");
    Element x = Element::basis(j);
    int d = x.degree;
    int target = seq_excess(j) - 2;
    // Span of admissible K with e(K) <= target, modulo the ideal. Excess is
    // 2 k1 - d, so the span is again a suffix of the canonical basis.
    const auto& basis = admissible_basis(d);
    std::size_t n_d = basis.size();
    EchelonForm aug(2 * n_d);
    for (const BitVector& row : ctx.ideal(d).rows()) {
        BitVector wide(2 * n_d);
        for (std::size_t i : row.support())
            wide.set(i);
        aug.insert(std::move(wide));
    }
    for (std::size_t idx = 0; idx < n_d; ++idx) {
        if (seq_excess(basis[idx]) > target)
            continue;
        BitVector wide(2 * n_d);
        wide.set(idx);
        wide.set(n_d + idx);
        aug.insert(std::move(wide));
    }
    BitVector v(2 * n_d);
    for (const Seq& t : x.terms)
        v.set(admissible_index(d, t));
    BitVector residue = aug.reduce(std::move(v));
    ExcessLemmaResult out;
    int max_e = INT_MIN;
    for (std::size_t i : residue.support()) {
        if (i < n_d)
            return out;  // pass = false
        max_e = std::max(max_e, seq_excess(basis[i - n_d]));
    }
    out.pass = true;
    if (max_e != INT_MIN)
        out.excess_gap = seq_excess(j) - max_e;
    return out;
}

}  // namespace steenrod
