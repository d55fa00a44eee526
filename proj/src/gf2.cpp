#include "coho/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace coho::gf2 {

void BitVec::xor_with(const BitVec& o)
{
    for (std::size_t i = 0; i < w_.size(); ++i)
        w_[i] ^= o.w_[i];
}

bool BitVec::is_zero() const
{
    for (auto w : w_)
        if (w)
            return false;
    return true;
}

std::size_t BitVec::popcount() const
{
    std::size_t c = 0;
    for (auto w : w_)
        c += std::popcount(w);
    return c;
}

long BitVec::highest_set() const
{
    for (std::size_t i = w_.size(); i-- > 0;)
        if (w_[i])
            return long(i * 64 + 63 - std::countl_zero(w_[i]));
    return -1;
}

long BitVec::lowest_set() const
{
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i])
            return long(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

void BitMatrix::row_xor(std::size_t dst, std::size_t src)
{
    std::uint64_t* d = w_.data() + dst * wpr_;
    const std::uint64_t* s = w_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i)
        d[i] ^= s[i];
}

void BitMatrix::row_xor_vec(std::size_t dst, const BitVec& v)
{
    std::uint64_t* d = w_.data() + dst * wpr_;
    const auto& s = v.words();
    for (std::size_t i = 0; i < wpr_; ++i)
        d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    std::uint64_t* pa = w_.data() + a * wpr_;
    std::uint64_t* pb = w_.data() + b * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i)
        std::swap(pa[i], pb[i]);
}

bool BitMatrix::row_is_zero(std::size_t r) const
{
    const std::uint64_t* p = w_.data() + r * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i)
        if (p[i])
            return false;
    return true;
}

BitVec BitMatrix::row_copy(std::size_t r) const
{
    BitVec v(cols_);
    std::memcpy(v.words().data(), w_.data() + r * wpr_, wpr_ * 8);
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v)
{
    std::memcpy(w_.data() + r * wpr_, v.words().data(), wpr_ * 8);
}

void BitMatrix::append_row(const BitVec& v)
{
    rows_ += 1;
    w_.resize(rows_ * wpr_, 0);
    set_row(rows_ - 1, v);
}

BitMatrix BitMatrix::transposed() const
{
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* p = w_.data() + r * wpr_;
        for (std::size_t wi = 0; wi < wpr_; ++wi) {
            std::uint64_t w = p[wi];
            while (w) {
                unsigned b = std::countr_zero(w);
                t.set(wi * 64 + b, r);
                w &= w - 1;
            }
        }
    }
    return t;
}

BitVec BitMatrix::apply_row(const BitVec& v) const
{
    BitVec out(cols_);
    const auto& vw = v.words();
    for (std::size_t wi = 0; wi < vw.size(); ++wi) {
        std::uint64_t w = vw[wi];
        while (w) {
            unsigned b = std::countr_zero(w);
            std::size_t r = wi * 64 + b;
            const std::uint64_t* p = w_.data() + r * wpr_;
            auto& ow = out.words();
            for (std::size_t i = 0; i < wpr_; ++i)
                ow[i] ^= p[i];
            w &= w - 1;
        }
    }
    return out;
}

BitMatrix mul(const BitMatrix& a, const BitMatrix& b)
{
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const std::uint64_t* p = a.row_words(r);
        std::uint64_t* o = out.row_words(r);
        for (std::size_t wi = 0; wi < a.words_per_row(); ++wi) {
            std::uint64_t w = p[wi];
            while (w) {
                unsigned bit = std::countr_zero(w);
                const std::uint64_t* q = b.row_words(wi * 64 + bit);
                for (std::size_t i = 0; i < b.words_per_row(); ++i)
                    o[i] ^= q[i];
                w &= w - 1;
            }
        }
    }
    return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns. `stop_col`
// bounds the pivot search (extra columns beyond it ride along, which is how
// the batched solver carries its right hand sides).
std::vector<std::size_t> rref_in_place(BitMatrix& m, std::size_t stop_col)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < stop_col && row < m.rows(); ++col) {
        std::size_t wi = col >> 6;
        std::uint64_t mask = std::uint64_t(1) << (col & 63);
        std::size_t p = row;
        while (p < m.rows() && !(m.row_words(p)[wi] & mask))
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(row, p);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != row && (m.row_words(r)[wi] & mask))
                m.row_xor(r, row);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const BitMatrix& m)
{
    RrefResult res;
    res.reduced = m;
    res.pivot_cols = rref_in_place(res.reduced, m.cols());
    res.rank = res.pivot_cols.size();
    return res;
}

BitMatrix kernel_basis(const BitMatrix& m)
{
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_cols)
        is_pivot[c] = true;
    BitMatrix out(m.cols() - r.rank, m.cols());
    std::size_t k = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        out.set(k, f);
        for (std::size_t j = 0; j < r.rank; ++j)
            if (r.reduced.get(j, f))
                out.set(k, r.pivot_cols[j]);
        ++k;
    }
    return out;
}

std::vector<std::optional<BitVec>> solve_batch(const BitMatrix& m,
                                               const std::vector<BitVec>& rhs)
{
    std::size_t nb = rhs.size();
    BitMatrix aug(m.rows(), m.cols() + nb);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::memcpy(aug.row_words(r), m.row_words(r), m.words_per_row() * 8);
        for (std::size_t j = 0; j < nb; ++j)
            if (rhs[j].get(r))
                aug.set(r, m.cols() + j);
    }
    auto pivots = rref_in_place(aug, m.cols());
    std::vector<std::optional<BitVec>> out(nb);
    for (std::size_t j = 0; j < nb; ++j) {
        bool ok = true;
        for (std::size_t r = pivots.size(); r < m.rows() && ok; ++r)
            if (aug.get(r, m.cols() + j))
                ok = false;
        if (!ok)
            continue;
        BitVec x(m.cols());
        for (std::size_t p = 0; p < pivots.size(); ++p)
            if (aug.get(p, m.cols() + j))
                x.set(pivots[p]);
        out[j] = std::move(x);
    }
    return out;
}

std::optional<BitVec> solve(const BitMatrix& m, const BitVec& rhs)
{
    return solve_batch(m, {rhs})[0];
}

BitVec RowSpan::reduce(BitVec v) const
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        long l = leads_[i];
        if (l >= 0 && v.get(std::size_t(l)))
            v.xor_with(rows_[i]);
    }
    return v;
}

bool RowSpan::add(BitVec v)
{
    v = reduce(std::move(v));
    long l = v.lowest_set();
    if (l < 0)
        return false;
    // keep the stored basis reduced
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(std::size_t(l)))
            rows_[i].xor_with(v);
    rows_.push_back(std::move(v));
    leads_.push_back(l);
    return true;
}

}  // namespace coho::gf2
