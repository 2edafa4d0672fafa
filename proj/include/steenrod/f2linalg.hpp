#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace steenrod {

// Coordinate vector over the two-element field, packed into 64-bit blocks.
// Addition is xor, so v + v = 0.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : len_(length), blocks_((length + 63) >> 6, 0) {}

    std::size_t length() const { return len_; }

    bool get(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void flip(std::size_t i) { blocks_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& other);

    bool is_zero() const;
    std::size_t first_set() const;  // length() when the vector is zero
    std::size_t popcount() const;
    std::vector<std::size_t> support() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> blocks_;
};

struct BitMatrix {
    std::size_t column_count = 0;
    std::vector<BitVector> rows;  // each of length column_count
};

// Incremental reduced row-echelon structure. Rows are kept fully reduced with
// pivot columns strictly increasing; inserting a row reports whether the rank
// grew. All membership and quotient bookkeeping in the project is built on
// this.
class EchelonForm {
public:
    EchelonForm() = default;
    explicit EchelonForm(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<BitVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Residue of v after elimination against the stored rows.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
    // Inserts v, returns true iff v was independent of the stored rows.
    bool insert(BitVector v);

private:
    std::size_t width_ = 0;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

// Row-echelon form with the same row span; zero rows dropped. Idempotent.
BitMatrix echelonize(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);
// True iff v lies in the row span of m. Throws std::invalid_argument when
// v.length() != m.column_count.
bool in_span(const BitVector& v, const BitMatrix& m);

}  // namespace steenrod
