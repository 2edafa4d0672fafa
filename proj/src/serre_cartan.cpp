#include "steenrod/serre_cartan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace steenrod {

int seq_degree(const Seq& s) {
    int d = 0;
    for (int i : s)
        d += i;
    return d;
}

int seq_excess(const Seq& s) {
    if (s.empty())
        return 0;
    int e = s[0];
    for (std::size_t i = 1; i < s.size(); ++i)
        e -= s[i];
    return e;
}

bool is_admissible(const Seq& s) {
    for (int i : s)
        if (i <= 0)
            return false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] < 2 * s[i + 1])
            return false;
    return true;
}

Element Element::sq(int n) {
    if (n < 0)
        throw std::invalid_argument("Element::sq: negative exponent");
    if (n == 0)
        return unit();
    return Element{n, {Seq{n}}};
}

Element Element::basis(Seq seq) {
    if (!is_admissible(seq))
        throw std::invalid_argument("Element::basis: sequence is not admissible");
    int d = seq_degree(seq);
    return Element{d, {std::move(seq)}};
}

Element& Element::operator+=(const Element& other) {
    if (degree != other.degree)
        throw std::invalid_argument("Element sum: degrees differ");
    std::vector<Seq> merged;
    merged.reserve(terms.size() + other.terms.size());
    std::set_symmetric_difference(terms.begin(), terms.end(), other.terms.begin(), other.terms.end(),
                                  std::back_inserter(merged), SeqDescLex{});
    terms = std::move(merged);
    return *this;
}

bool binom_mod2(std::uint64_t n, std::uint64_t k) {
    return (n & k) == k;
}

namespace {

using AdemKey = std::uint32_t;

AdemKey adem_key(int a, int b) {
    return (static_cast<AdemKey>(a) << 16) | static_cast<AdemKey>(b);
}

std::unordered_map<AdemKey, Element> g_adem_seed;

thread_local std::unordered_map<AdemKey, Element> t_adem_memo;

Element compute_adem(int a, int b) {
    Element out = Element::zero(a + b);
    int lo = std::max(0, a - b + 1);
    int hi = a / 2;
    for (int i = lo; i <= hi; ++i) {
        if (!binom_mod2(static_cast<std::uint64_t>(b - 1 - i), static_cast<std::uint64_t>(a - 2 * i)))
            continue;
        Seq term;
        if (i == 0)
            term = {a + b};
        else
            term = {a + b - i, i};
        out += Element{a + b, {std::move(term)}};
    }
    return out;
}

}  // namespace

const Element& adem_expand(int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("adem_expand: exponents must be positive");
    if (a >= 2 * b)
        throw std::invalid_argument("adem_expand: Sq^a Sq^b is already admissible");
    AdemKey key = adem_key(a, b);
    if (auto it = t_adem_memo.find(key); it != t_adem_memo.end())
        return it->second;
    if (auto it = g_adem_seed.find(key); it != g_adem_seed.end())
        return it->second;
    return t_adem_memo.emplace(key, compute_adem(a, b)).first->second;
}

void adem_install_seed(std::map<std::pair<int, int>, Element> table) {
    g_adem_seed.clear();
    for (auto& [key, value] : table)
        g_adem_seed.emplace(adem_key(key.first, key.second), std::move(value));
}

std::map<std::pair<int, int>, Element> adem_expansions_upto(int degree_cap) {
    std::map<std::pair<int, int>, Element> out;
    for (int b = 1; b <= degree_cap; ++b)
        for (int a = 1; a < 2 * b && a + b <= degree_cap; ++a)
            out.emplace(std::make_pair(a, b), adem_expand(a, b));
    return out;
}

namespace {

// Index of the pair to expand, or -1 if the word is admissible.
int find_inadmissible(const Seq& w, RewriteStrategy strategy) {
    if (strategy == RewriteStrategy::rightmost_first) {
        for (int s = static_cast<int>(w.size()) - 2; s >= 0; --s)
            if (w[s] < 2 * w[s + 1])
                return s;
    } else {
        for (int s = 0; s + 1 < static_cast<int>(w.size()); ++s)
            if (w[s] < 2 * w[s + 1])
                return s;
    }
    return -1;
}

void toggle(std::set<Seq, SeqDescLex>& parity_set, Seq value) {
    auto it = parity_set.find(value);
    if (it != parity_set.end())
        parity_set.erase(it);
    else
        parity_set.insert(std::move(value));
}

}  // namespace

Element normalize(const Seq& word, RewriteStrategy strategy) {
    for (int x : word)
        if (x <= 0)
            throw std::invalid_argument("normalize: word entries must be positive");
    int degree = seq_degree(word);
    if (is_admissible(word))
        return Element{degree, {word}};

    std::set<Seq, SeqDescLex> work;
    std::set<Seq, SeqDescLex> done;
    work.insert(word);
    while (!work.empty()) {
        Seq cur = std::move(work.extract(work.begin()).value());
        int pos = find_inadmissible(cur, strategy);
        if (pos < 0) {
            toggle(done, std::move(cur));
            continue;
        }
        const Element& expansion = adem_expand(cur[pos], cur[pos + 1]);
        for (const Seq& t : expansion.terms) {
            Seq child;
            child.reserve(cur.size() + t.size() - 2);
            child.insert(child.end(), cur.begin(), cur.begin() + pos);
            child.insert(child.end(), t.begin(), t.end());
            child.insert(child.end(), cur.begin() + pos + 2, cur.end());
            toggle(work, std::move(child));
        }
    }
    return Element{degree, {done.begin(), done.end()}};
}

Element product(const Element& x, const Element& y) {
    Element out = Element::zero(x.degree + y.degree);
    for (const Seq& s : x.terms) {
        for (const Seq& t : y.terms) {
            Seq w;
            w.reserve(s.size() + t.size());
            w.insert(w.end(), s.begin(), s.end());
            w.insert(w.end(), t.begin(), t.end());
            out += normalize(w);
        }
    }
    return out;
}

namespace {

void enum_rec(int remaining, int max_first, const EntryPredicate& allowed, int min_last, Seq& prefix,
              std::vector<Seq>& out) {
    int hi = std::min(remaining, max_first);
    for (int i = hi; i >= 1; --i) {
        if (allowed && !allowed(i))
            continue;
        if (i == remaining) {
            if (i >= min_last) {
                prefix.push_back(i);
                out.push_back(prefix);
                prefix.pop_back();
            }
            continue;
        }
        if (i < 2)  // next entry would need to be at most i/2 = 0
            continue;
        prefix.push_back(i);
        enum_rec(remaining - i, i / 2, allowed, min_last, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Seq> enumerate_admissible_capped(int degree, int max_first, const EntryPredicate& allowed,
                                             int min_last, std::optional<int> max_excess) {
    if (degree < 0)
        throw std::invalid_argument("enumerate_admissible: negative degree");
    if (degree == 0)
        return {Seq{}};
    // Excess depends only on the first entry: e = 2 i1 - degree.
    int hi = std::min(degree, max_first);
    if (max_excess)
        hi = std::min(hi, (degree + *max_excess) / 2);
    std::vector<Seq> out;
    Seq prefix;
    for (int i = hi; i >= 1; --i) {
        if (allowed && !allowed(i))
            continue;
        if (i == degree) {
            if (i >= min_last)
                out.push_back(Seq{i});
            continue;
        }
        if (i < 2)
            continue;
        prefix.push_back(i);
        enum_rec(degree - i, i / 2, allowed, min_last, prefix, out);
        prefix.pop_back();
    }
    return out;
}

std::vector<Seq> enumerate_admissible(int degree, const EntryPredicate& allowed, int min_last,
                                      std::optional<int> max_excess) {
    return enumerate_admissible_capped(degree, degree, allowed, min_last, max_excess);
}

namespace {

thread_local std::vector<std::optional<std::vector<Seq>>> t_basis_cache;

}  // namespace

const std::vector<Seq>& admissible_basis(int degree) {
    if (degree < 0)
        throw std::invalid_argument("admissible_basis: negative degree");
    if (static_cast<std::size_t>(degree) >= t_basis_cache.size())
        t_basis_cache.resize(degree + 1);
    auto& slot = t_basis_cache[degree];
    if (!slot)
        slot = enumerate_admissible(degree, nullptr, 1);
    return *slot;
}

int admissible_dim(int degree) {
    return static_cast<int>(admissible_basis(degree).size());
}

std::size_t admissible_index(int degree, const Seq& s) {
    const auto& basis = admissible_basis(degree);
    auto it = std::lower_bound(basis.begin(), basis.end(), s, SeqDescLex{});
    if (it == basis.end() || *it != s)
        throw std::invalid_argument("admissible_index: sequence not in basis");
    return static_cast<std::size_t>(it - basis.begin());
}

BitVector element_coords(const Element& x) {
    const auto& basis = admissible_basis(x.degree);
    BitVector v(basis.size());
    for (const Seq& t : x.terms)
        v.flip(admissible_index(x.degree, t));
    return v;
}

Element element_from_coords(int degree, const BitVector& coords) {
    const auto& basis = admissible_basis(degree);
    if (coords.length() != basis.size())
        throw std::invalid_argument("element_from_coords: length mismatch");
    Element out = Element::zero(degree);
    for (std::size_t i : coords.support())
        out.terms.push_back(basis[i]);
    std::sort(out.terms.begin(), out.terms.end(), SeqDescLex{});
    return out;
}

PropBasicResult check_prop_basic(int a_max, int b_max, int degree_cap, int sharpness_b_max) {
    PropBasicResult result;
    std::vector<bool> attained(static_cast<std::size_t>(sharpness_b_max) + 1, false);
    for (int b = 1; b <= b_max; ++b) {
        // All admissible I with first entry exactly b and degree <= degree_cap.
        std::vector<Seq> heads;
        for (int rest = 0; rest + b <= degree_cap; ++rest)
            for (Seq tail : enumerate_admissible_capped(rest, b / 2, nullptr, 1)) {
                Seq seq{b};
                seq.insert(seq.end(), tail.begin(), tail.end());
                heads.push_back(std::move(seq));
            }
        for (int a = 1; a <= a_max; ++a) {
            int bound = a >= 2 * b ? a : (a >= b ? 2 * b - 1 : a + b);
            for (const Seq& head : heads) {
                Seq w;
                w.reserve(head.size() + 1);
                w.push_back(a);
                w.insert(w.end(), head.begin(), head.end());
                Element nf = normalize(w);
                ++result.checked;
                for (const Seq& term : nf.terms) {
                    if (!term.empty() && term[0] > bound) {
                        result.pass = false;
                        result.violations.emplace_back(a, b, head);
                        break;
                    }
                    if (b <= sharpness_b_max && a >= b && a < 2 * b && !term.empty() && term[0] == 2 * b - 1)
                        attained[b] = true;
                }
            }
        }
    }
    // The middle-case bound can also be realized on sequences with smaller
    // first entry (for b = 1 only the unit works: Sq^1 * 1).
    for (int b = 1; b <= sharpness_b_max; ++b) {
        if (attained[b])
            continue;
        for (int a = b; a < 2 * b && !attained[b]; ++a)
            for (int rest = 0; rest + a <= degree_cap && !attained[b]; ++rest)
                for (const Seq& tail : enumerate_admissible_capped(rest, b, nullptr, 1)) {
                    Seq w{a};
                    w.insert(w.end(), tail.begin(), tail.end());
                    Element nf = normalize(w);
                    bool hit = false;
                    for (const Seq& term : nf.terms)
                        if (!term.empty() && term[0] == 2 * b - 1) {
                            hit = true;
                            break;
                        }
                    if (hit) {
                        attained[b] = true;
                        break;
                    }
                }
    }
    for (int b = 1; b <= sharpness_b_max; ++b) {
        if (attained[b])
            result.attained.push_back(b);
        else {
            result.not_attained.push_back(b);
            result.pass = false;
        }
    }
    return result;
}

}  // namespace steenrod
