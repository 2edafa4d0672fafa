#include "steenrod/expr.hpp"

#include <cctype>
#include <optional>

namespace steenrod {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    bool consume_word(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) != word)
            return false;
        pos_ += word.size();
        return true;
    }
    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(message, pos_);
    }
    int integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected an integer", start);
        long v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            v = v * 10 + (text_[i] - '0');
            if (v > 1'000'000)
                throw ParseError("integer too large", start);
        }
        return static_cast<int>(v);
    }
    std::vector<int> bracket_list() {
        if (!consume('['))
            fail("expected '['");
        std::vector<int> out;
        if (consume(']'))
            return out;
        out.push_back(integer());
        while (consume(','))
            out.push_back(integer());
        if (!consume(']'))
            fail("expected ',' or ']'");
        return out;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// One multiplicand; nullopt encodes the literal 0.
std::optional<Element> element_factor(Cursor& cur, ParsedElement& flags) {
    if (cur.consume_word("Sq")) {
        flags.saw_sq = true;
        std::size_t at = cur.pos();
        std::vector<int> entries = cur.bracket_list();
        for (int e : entries)
            if (e <= 0)
                throw ParseError("Sq entries must be positive", at);
        return normalize(entries);
    }
    if (cur.consume_word("M")) {
        flags.saw_milnor = true;
        std::size_t at = cur.pos();
        std::vector<int> entries = cur.bracket_list();
        for (int e : entries)
            if (e < 0)
                throw ParseError("M entries must be nonnegative", at);
        return milnor_to_admissible(MilnorElement::basis(entries));
    }
    if (cur.consume('1'))
        return Element::unit();
    if (cur.consume('0'))
        return std::nullopt;
    cur.fail("expected Sq[...], M[...], 1 or 0");
}

std::optional<Element> element_term(Cursor& cur, ParsedElement& flags) {
    std::optional<Element> acc = element_factor(cur, flags);
    while (cur.peek() == '*') {
        cur.consume('*');
        std::optional<Element> next = element_factor(cur, flags);
        if (acc && next)
            acc = product(*acc, *next);
        else
            acc = std::nullopt;
    }
    return acc;
}

}  // namespace

ParsedElement parse_element(std::string_view text) {
    Cursor cur(text);
    ParsedElement out;
    std::optional<Element> acc = element_term(cur, out);
    while (cur.peek() == '+') {
        std::size_t at = cur.pos();
        cur.consume('+');
        std::optional<Element> next = element_term(cur, out);
        if (!next)
            continue;
        if (!acc) {
            acc = next;
            continue;
        }
        if (acc->degree != next->degree)
            throw ParseError("sum is not homogeneous", at);
        *acc += *next;
    }
    if (!cur.done())
        cur.fail("unexpected trailing input");
    out.value = acc.value_or(Element::zero(0));
    return out;
}

namespace {

std::optional<SWPolynomial> sw_factor(Cursor& cur, SWModel model) {
    if (cur.consume_word("w")) {
        std::size_t at = cur.pos();
        std::vector<int> entries = cur.bracket_list();
        if (entries.size() != 1 || entries[0] < 1)
            throw ParseError("w takes a single positive index", at);
        if (model == SWModel::bso && entries[0] < 2)
            throw ParseError("w[1] is zero in the bso model", at);
        int exp = 1;
        if (cur.consume('^')) {
            exp = cur.integer();
            if (exp < 1)
                throw ParseError("exponent must be positive", at);
        }
        return SWPolynomial::monomial(SWMonomial::w(entries[0], exp));
    }
    if (cur.consume('1'))
        return SWPolynomial::one();
    if (cur.consume('0'))
        return std::nullopt;
    cur.fail("expected w[...], 1 or 0");
}

}  // namespace

SWPolynomial parse_sw_polynomial(std::string_view text, SWModel model) {
    Cursor cur(text);
    auto term = [&]() {
        std::optional<SWPolynomial> acc = sw_factor(cur, model);
        while (cur.peek() == '*') {
            cur.consume('*');
            std::optional<SWPolynomial> next = sw_factor(cur, model);
            if (acc && next)
                acc = *acc * *next;
            else
                acc = std::nullopt;
        }
        return acc;
    };
    std::optional<SWPolynomial> acc = term();
    while (cur.peek() == '+') {
        std::size_t at = cur.pos();
        cur.consume('+');
        std::optional<SWPolynomial> next = term();
        if (!next)
            continue;
        if (!acc) {
            acc = next;
            continue;
        }
        if (acc->degree != next->degree)
            throw ParseError("sum is not homogeneous", at);
        *acc += *next;
    }
    if (!cur.done())
        cur.fail("unexpected trailing input");
    return acc.value_or(SWPolynomial::zero(0));
}

namespace {

std::string int_list(const std::vector<int>& entries) {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(entries[i]);
    }
    return out;
}

}  // namespace

std::string sq_string(const Seq& seq) {
    if (seq.empty())
        return "1";
    return "Sq[" + int_list(seq) + "]";
}

std::string milnor_string(const MilnorSeq& r) {
    if (r.empty())
        return "1";
    return "M[" + int_list(r) + "]";
}

std::string to_string(const Element& x) {
    if (x.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < x.terms.size(); ++i) {
        if (i)
            out += " + ";
        out += sq_string(x.terms[i]);
    }
    return out;
}

std::string to_string(const MilnorElement& x) {
    if (x.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < x.terms.size(); ++i) {
        if (i)
            out += " + ";
        out += milnor_string(x.terms[i]);
    }
    return out;
}

std::string to_string(const SWMonomial& m) {
    if (m.is_unit())
        return "1";
    std::string out;
    bool first = true;
    // Print largest generator first, matching the monomial order.
    for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
        if (!first)
            out += "*";
        first = false;
        out += "w[" + std::to_string(it->first) + "]";
        if (it->second > 1)
            out += "^" + std::to_string(it->second);
    }
    return out;
}

std::string to_string(const SWPolynomial& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        if (i)
            out += " + ";
        out += to_string(p.terms[i]);
    }
    return out;
}

}  // namespace steenrod
