#include "steenrod/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace steenrod {

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_)
        throw std::invalid_argument("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        blocks_[i] ^= other.blocks_[i];
    return *this;
}

bool BitVector::is_zero() const {
    for (std::uint64_t b : blocks_)
        if (b)
            return false;
    return true;
}

std::size_t BitVector::first_set() const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i])
            return (i << 6) + std::countr_zero(blocks_[i]);
    return len_;
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t b : blocks_)
        n += std::popcount(b);
    return n;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        std::uint64_t b = blocks_[i];
        while (b) {
            out.push_back((i << 6) + std::countr_zero(b));
            b &= b - 1;
        }
    }
    return out;
}

BitVector EchelonForm::reduce(BitVector v) const {
    if (v.length() != width_)
        throw std::invalid_argument("EchelonForm: width mismatch");
    // Rows are reduced with increasing pivots, so one forward pass suffices.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i]))
            v ^= rows_[i];
    return v;
}

bool EchelonForm::insert(BitVector v) {
    v = reduce(std::move(v));
    if (v.is_zero())
        return false;
    std::size_t p = v.first_set();
    // Clear the new pivot column in the existing rows to stay fully reduced.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(p))
            rows_[i] ^= v;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

BitMatrix echelonize(const BitMatrix& m) {
    EchelonForm ech(m.column_count);
    for (const BitVector& r : m.rows)
        ech.insert(r);
    return BitMatrix{m.column_count, ech.rows()};
}

std::size_t rank(const BitMatrix& m) {
    EchelonForm ech(m.column_count);
    for (const BitVector& r : m.rows)
        ech.insert(r);
    return ech.rank();
}

bool in_span(const BitVector& v, const BitMatrix& m) {
    if (v.length() != m.column_count)
        throw std::invalid_argument("in_span: vector length does not match column count");
    EchelonForm ech(m.column_count);
    for (const BitVector& r : m.rows)
        ech.insert(r);
    return ech.contains(v);
}

}  // namespace steenrod
