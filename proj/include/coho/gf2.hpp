#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coho/base.hpp"

// Dense bit-packed linear algebra over GF(2). Row vectors are packed into
// 64-bit words; all maps and spans in the resolution machinery reduce to
// rank / kernel / solve calls on these matrices.

namespace coho::gf2 {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec unit(std::size_t n, std::size_t i)
    {
        BitVec v(n);
        v.set(i);
        return v;
    }

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b = true)
    {
        if (b)
            w_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_with(const BitVec& o);
    bool is_zero() const;
    std::size_t popcount() const;
    // Index of the highest set bit, or -1 when zero.
    long highest_set() const;
    long lowest_set() const;

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }
    bool operator<(const BitVec& o) const { return w_ < o.w_; }

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0)
    {
    }

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool b = true)
    {
        if (b)
            w_[r * wpr_ + (c >> 6)] |= std::uint64_t(1) << (c & 63);
        else
            w_[r * wpr_ + (c >> 6)] &= ~(std::uint64_t(1) << (c & 63));
    }
    void flip(std::size_t r, std::size_t c)
    {
        w_[r * wpr_ + (c >> 6)] ^= std::uint64_t(1) << (c & 63);
    }

    const std::uint64_t* row_words(std::size_t r) const { return w_.data() + r * wpr_; }
    std::uint64_t* row_words(std::size_t r) { return w_.data() + r * wpr_; }

    void row_xor(std::size_t dst, std::size_t src);           // row dst ^= row src
    void row_xor_vec(std::size_t dst, const BitVec& v);       // row dst ^= v
    void swap_rows(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t r) const;
    BitVec row_copy(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);
    void append_row(const BitVec& v);

    BitMatrix transposed() const;
    // v * this, where v has length rows().
    BitVec apply_row(const BitVec& v) const;
    bool operator==(const BitMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

BitMatrix mul(const BitMatrix& a, const BitMatrix& b);

struct RrefResult {
    std::size_t rank = 0;
    BitMatrix reduced;
    std::vector<std::size_t> pivot_cols;  // one per pivot row, ascending
};

// Reduced row echelon form with deterministic pivoting: leftmost column,
// topmost remaining row.
RrefResult rref(const BitMatrix& m);

// Basis of the right null space {x : m x = 0}, one solution per row in the
// canonical free-column form. Row count = cols - rank.
BitMatrix kernel_basis(const BitMatrix& m);

// One solution of m x = rhs with all free coordinates zero, or nullopt when
// the system is inconsistent.
std::optional<BitVec> solve(const BitMatrix& m, const BitVec& rhs);

// Batched variant: one elimination of [m | rhs_0 .. rhs_k] for many right
// hand sides over the same matrix.
std::vector<std::optional<BitVec>> solve_batch(const BitMatrix& m,
                                               const std::vector<BitVec>& rhs);

// Row space membership and span accumulation: a small online echelon used for
// rank bookkeeping while scanning candidate vectors.
class RowSpan {
public:
    explicit RowSpan(std::size_t cols) : cols_(cols) {}
    std::size_t dim() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    // Reduces v against the span; returns the residue.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }
    // Adds v if independent; returns true when the span grew.
    bool add(BitVec v);

private:
    std::size_t cols_;
    std::vector<BitVec> rows_;        // echelonized, distinct leading bits
    std::vector<long> leads_;         // leading (lowest set) bit per row
};

}  // namespace coho::gf2
