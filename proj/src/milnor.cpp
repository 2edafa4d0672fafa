#include "steenrod/milnor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace steenrod {

int milnor_degree(const MilnorSeq& r) {
    int d = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        d += r[i] * ((1 << (i + 1)) - 1);
    return d;
}

MilnorSeq milnor_trim(MilnorSeq r) {
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    return r;
}

MilnorElement MilnorElement::sq(int n) {
    if (n < 0)
        throw std::invalid_argument("MilnorElement::sq: negative exponent");
    if (n == 0)
        return unit();
    return MilnorElement{n, {MilnorSeq{n}}};
}

MilnorElement MilnorElement::basis(MilnorSeq r) {
    r = milnor_trim(std::move(r));
    for (int v : r)
        if (v < 0)
            throw std::invalid_argument("MilnorElement::basis: negative entry");
    int d = milnor_degree(r);
    return MilnorElement{d, {std::move(r)}};
}

MilnorElement& MilnorElement::operator+=(const MilnorElement& other) {
    if (degree != other.degree)
        throw std::invalid_argument("MilnorElement sum: degrees differ");
    std::vector<MilnorSeq> merged;
    merged.reserve(terms.size() + other.terms.size());
    std::set_symmetric_difference(terms.begin(), terms.end(), other.terms.begin(), other.terms.end(),
                                  std::back_inserter(merged), SeqDescLex{});
    terms = std::move(merged);
    return *this;
}

namespace {

// One product of Milnor basis terms, toggled into `out`.
//
// The matrix (x_ij), i = 0..p, j = 0..q, is enumerated row by row; x_i0 is
// the weighted-row-sum remainder and row 0 is the column-sum remainder.
struct MatrixProduct {
    const MilnorSeq& r;
    const MilnorSeq& s;
    int p, q;
    std::vector<std::vector<int>> x;  // (p+1) x (q+1), x[0][j] filled at the end
    std::vector<int> col_used;        // sum over rows >= 1 of x[i][j]
    std::vector<MilnorSeq>* out;
    int degree;

    MatrixProduct(const MilnorSeq& r_, const MilnorSeq& s_, std::vector<MilnorSeq>* out_, int degree_)
        : r(r_), s(s_), p(static_cast<int>(r_.size())), q(static_cast<int>(s_.size())),
          x(p + 1, std::vector<int>(q + 1, 0)), col_used(q + 1, 0), out(out_), degree(degree_) {}

    void run() { choose_row(1); }

    void choose_row(int i) {
        if (i > p) {
            emit();
            return;
        }
        choose_entry(i, q, r[i - 1]);
    }

    // Pick x[i][j] for j = q down to 1; whatever weight is left becomes x[i][0].
    void choose_entry(int i, int j, int budget) {
        if (j == 0) {
            x[i][0] = budget;
            choose_row(i + 1);
            return;
        }
        int weight = 1 << j;
        int cap = std::min(budget / weight, s[j - 1] - col_used[j]);
        for (int v = 0; v <= cap; ++v) {
            x[i][j] = v;
            col_used[j] += v;
            choose_entry(i, j - 1, budget - v * weight);
            col_used[j] -= v;
        }
        x[i][j] = 0;
    }

    void emit() {
        for (int j = 1; j <= q; ++j)
            x[0][j] = s[j - 1] - col_used[j];
        MilnorSeq t(p + q, 0);
        for (int n = 1; n <= p + q; ++n) {
            int acc = 0;
            int total = 0;
            for (int i = std::max(0, n - q); i <= std::min(n, p); ++i) {
                int v = x[i][n - i];
                if (acc & v)
                    return;  // even multinomial on this diagonal
                acc |= v;
                total += v;
            }
            t[n - 1] = total;
        }
        t = milnor_trim(std::move(t));
        auto it = std::lower_bound(out->begin(), out->end(), t, SeqDescLex{});
        if (it != out->end() && *it == t)
            out->erase(it);
        else
            out->insert(it, std::move(t));
    }
};

}  // namespace

MilnorElement milnor_product(const MilnorElement& x, const MilnorElement& y) {
    MilnorElement out = MilnorElement::zero(x.degree + y.degree);
    for (const MilnorSeq& r : x.terms)
        for (const MilnorSeq& s : y.terms) {
            if (r.empty()) {
                out += MilnorElement{out.degree, {s}};
                continue;
            }
            if (s.empty()) {
                out += MilnorElement{out.degree, {r}};
                continue;
            }
            MatrixProduct(r, s, &out.terms, out.degree).run();
        }
    return out;
}

namespace {

void milnor_enum_rec(int remaining, int index, int weight, MilnorSeq& prefix,
                     std::vector<MilnorSeq>& out) {
    if (weight > remaining) {
        if (remaining == 0)
            out.push_back(milnor_trim(prefix));
        return;
    }
    // Entries are chosen from the last coordinate down so that the output is
    // already in descending-lex order after a final sort; recursion instead
    // fixes r_index and moves to higher weights.
    for (int v = remaining / weight; v >= 0; --v) {
        prefix[index] = v;
        milnor_enum_rec(remaining - v * weight, index + 1, 2 * weight + 1, prefix, out);
    }
    prefix[index] = 0;
}

thread_local std::vector<std::optional<std::vector<MilnorSeq>>> t_milnor_basis_cache;

}  // namespace

const std::vector<MilnorSeq>& milnor_basis(int degree) {
    if (degree < 0)
        throw std::invalid_argument("milnor_basis: negative degree");
    if (static_cast<std::size_t>(degree) >= t_milnor_basis_cache.size())
        t_milnor_basis_cache.resize(degree + 1);
    auto& slot = t_milnor_basis_cache[degree];
    if (!slot) {
        std::vector<MilnorSeq> out;
        if (degree == 0) {
            out.push_back(MilnorSeq{});
        } else {
            // Longest possible profile: weights 1, 3, 7, ...
            int len = 0;
            while (((1 << (len + 1)) - 1) <= degree)
                ++len;
            MilnorSeq prefix(len, 0);
            milnor_enum_rec(degree, 0, 1, prefix, out);
            std::sort(out.begin(), out.end(), SeqDescLex{});
        }
        slot = std::move(out);
    }
    return *slot;
}

std::size_t milnor_index(int degree, const MilnorSeq& r) {
    const auto& basis = milnor_basis(degree);
    auto it = std::lower_bound(basis.begin(), basis.end(), r, SeqDescLex{});
    if (it == basis.end() || *it != r)
        throw std::invalid_argument("milnor_index: sequence not in basis");
    return static_cast<std::size_t>(it - basis.begin());
}

namespace {

// Per-degree change of basis between the admissible and Milnor pictures.
// Rows are (milnor coords of Sq^I | admissible unit vector), held in a single
// augmented echelon structure: reducing a Milnor coordinate vector through it
// leaves the admissible coordinates of the preimage in the tail block.
struct ConversionSlice {
    std::vector<MilnorElement> images;  // per admissible basis index
    EchelonForm augmented;
};

thread_local std::vector<std::optional<ConversionSlice>> t_conversion_cache;

const ConversionSlice& conversion_slice(int degree) {
    if (static_cast<std::size_t>(degree) >= t_conversion_cache.size())
        t_conversion_cache.resize(degree + 1);
    auto& slot = t_conversion_cache[degree];
    if (!slot) {
        const auto& adm = admissible_basis(degree);
        const auto& mil = milnor_basis(degree);
        ConversionSlice slice;
        slice.images.reserve(adm.size());
        slice.augmented = EchelonForm(mil.size() + adm.size());
        for (std::size_t idx = 0; idx < adm.size(); ++idx) {
            MilnorElement image = MilnorElement::unit();
            for (int e : adm[idx])
                image = milnor_product(image, MilnorElement::sq(e));
            BitVector row(mil.size() + adm.size());
            for (const MilnorSeq& t : image.terms)
                row.set(milnor_index(degree, t));
            row.set(mil.size() + idx);
            slice.augmented.insert(std::move(row));
            slice.images.push_back(std::move(image));
        }
        slot = std::move(slice);
    }
    return *slot;
}

}  // namespace

MilnorElement admissible_to_milnor(const Element& x) {
    const ConversionSlice& slice = conversion_slice(x.degree);
    MilnorElement out = MilnorElement::zero(x.degree);
    for (const Seq& t : x.terms)
        out += slice.images[admissible_index(x.degree, t)];
    return out;
}

Element milnor_to_admissible(const MilnorElement& x) {
    const ConversionSlice& slice = conversion_slice(x.degree);
    const auto& mil = milnor_basis(x.degree);
    const auto& adm = admissible_basis(x.degree);
    BitVector v(mil.size() + adm.size());
    for (const MilnorSeq& t : x.terms)
        v.set(milnor_index(x.degree, t));
    BitVector residue = slice.augmented.reduce(std::move(v));
    Element out = Element::zero(x.degree);
    for (std::size_t i : residue.support()) {
        if (i < mil.size())
            throw std::logic_error("milnor_to_admissible: change of basis is not surjective");
        out.terms.push_back(adm[i - mil.size()]);
    }
    std::sort(out.terms.begin(), out.terms.end(), SeqDescLex{});
    return out;
}

namespace {

thread_local std::map<Seq, Element, SeqDescLex> t_chi_memo;

// chi(Sq^n) by the unit-counit recursion; memoized with the other prefixes.
const Element& chi_single(int n);

const Element& chi_prefix(const Seq& seq) {
    if (auto it = t_chi_memo.find(seq); it != t_chi_memo.end())
        return it->second;
    Element value = Element::unit();
    if (!seq.empty()) {
        // chi is an anti-homomorphism: peel the last factor to share work
        // across basis elements with a common prefix.
        Seq prefix(seq.begin(), seq.end() - 1);
        value = product(chi_single(seq.back()), chi_prefix(prefix));
    }
    return t_chi_memo.emplace(seq, std::move(value)).first->second;
}

const Element& chi_single(int n) {
    Seq key{n};
    if (auto it = t_chi_memo.find(key); it != t_chi_memo.end())
        return it->second;
    Element value = Element::zero(n);
    for (int i = 1; i <= n; ++i)
        value += product(Element::sq(i), i == n ? Element::unit() : chi_single(n - i));
    return t_chi_memo.emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace

Element antipode(const Element& x) {
    Element out = Element::zero(x.degree);
    for (const Seq& t : x.terms)
        out += chi_prefix(t);
    return out;
}

MilnorElement antipode(const MilnorElement& x) {
    return admissible_to_milnor(antipode(milnor_to_admissible(x)));
}

}  // namespace steenrod
