#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "fiblie/errors.hpp"

namespace fiblie::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kNoBit = std::numeric_limits<std::size_t>::max();

inline std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

/// Bit-packed vector over GF(2).  Bit j is coordinate j; padding bits stay zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), w_(words_for(bits), 0) {}

    static BitVec unit(std::size_t bits, std::size_t i) {
        BitVec v(bits);
        v.set(i);
        return v;
    }

    std::size_t size() const { return bits_; }

    bool get(std::size_t i) const {
        return (w_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        Word mask = Word(1) << (i % kWordBits);
        if (value)
            w_[i / kWordBits] |= mask;
        else
            w_[i / kWordBits] &= ~mask;
    }

    void flip(std::size_t i) { w_[i / kWordBits] ^= Word(1) << (i % kWordBits); }

    BitVec& operator^=(const BitVec& o) {
        if (o.bits_ != bits_)
            throw DimensionMismatch("BitVec xor: length mismatch");
        for (std::size_t k = 0; k < w_.size(); ++k)
            w_[k] ^= o.w_[k];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool any() const {
        for (Word w : w_)
            if (w) return true;
        return false;
    }
    bool zero() const { return !any(); }

    std::size_t lowest_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k])
                return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w_[k]));
        return kNoBit;
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (Word w : w_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<Word> w_;
};

/// Row-major bit matrix; entry (i,j) = bit j of row i.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t n_rows, std::size_t n_cols)
        : n_cols_(n_cols), rows_(n_rows, BitVec(n_cols)) {}

    std::size_t n_rows() const { return rows_.size(); }
    std::size_t n_cols() const { return n_cols_; }

    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }

    const BitVec& row(std::size_t i) const { return rows_[i]; }
    BitVec& row(std::size_t i) { return rows_[i]; }
    const std::vector<BitVec>& rows() const { return rows_; }

    void append_row(BitVec r) {
        if (r.size() != n_cols_)
            throw DimensionMismatch("BitMatrix append: column count mismatch");
        rows_.push_back(std::move(r));
    }

    static BitMatrix from_rows(std::vector<BitVec> rows, std::size_t n_cols) {
        BitMatrix m;
        m.n_cols_ = n_cols;
        for (auto& r : rows) {
            if (r.size() != n_cols)
                throw DimensionMismatch("BitMatrix from_rows: column count mismatch");
            m.rows_.push_back(std::move(r));
        }
        return m;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Reduced row-echelon form; zero rows dropped, one pivot column per row.
struct EchelonForm {
    BitMatrix matrix;
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const { return pivot_cols.size(); }
};

/// Deterministic Gauss-Jordan elimination, columns scanned left to right.
inline EchelonForm echelonize(const BitMatrix& m) {
    BitMatrix work = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.n_cols() && r < work.n_rows(); ++c) {
        std::size_t p = kNoBit;
        for (std::size_t i = r; i < work.n_rows(); ++i) {
            if (work.get(i, c)) {
                p = i;
                break;
            }
        }
        if (p == kNoBit)
            continue;
        std::swap(work.row(r), work.row(p));
        for (std::size_t i = 0; i < work.n_rows(); ++i)
            if (i != r && work.get(i, c))
                work.row(i) ^= work.row(r);
        pivots.push_back(c);
        ++r;
    }
    BitMatrix reduced;
    std::vector<BitVec> nonzero(work.rows().begin(), work.rows().begin() + static_cast<std::ptrdiff_t>(r));
    return EchelonForm{BitMatrix::from_rows(std::move(nonzero), work.n_cols()), std::move(pivots)};
}

inline std::size_t rank(const BitMatrix& m) { return echelonize(m).rank(); }

inline BitMatrix identity_matrix(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

/// m x for a column vector x (length n_cols); result has length n_rows.
inline BitVec multiply(const BitMatrix& m, const BitVec& x) {
    if (x.size() != m.n_cols())
        throw DimensionMismatch("multiply: vector length mismatch");
    BitVec out(m.n_rows());
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
        BitVec t = m.row(i);
        t ^= x;
        // parity of AND = (|row| + |x| - |row xor x|) / 2 mod 2
        std::size_t and_count = (m.row(i).popcount() + x.popcount() - t.popcount()) / 2;
        if (and_count & 1)
            out.set(i);
    }
    return out;
}

inline BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.n_cols() != b.n_rows())
        throw DimensionMismatch("multiply: inner dimension mismatch");
    BitMatrix out(a.n_rows(), b.n_cols());
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (std::size_t k = 0; k < a.n_cols(); ++k)
            if (a.get(i, k))
                out.row(i) ^= b.row(k);
    return out;
}

/// Basis of {x : m x = 0}, x indexed by columns.  One vector per free column,
/// free columns in ascending order.
inline std::vector<BitVec> kernel_basis(const BitMatrix& m) {
    EchelonForm e = echelonize(m);
    std::vector<bool> is_pivot(m.n_cols(), false);
    for (std::size_t c : e.pivot_cols)
        is_pivot[c] = true;
    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < m.n_cols(); ++f) {
        if (is_pivot[f])
            continue;
        BitVec v(m.n_cols());
        v.set(f);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            if (e.matrix.get(r, f))
                v.set(e.pivot_cols[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Incremental reduced row-echelon span of vectors of a fixed length.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t n_cols) : n_cols_(n_cols) {}

    std::size_t n_cols() const { return n_cols_; }
    std::size_t dim() const { return rows_.size(); }

    /// Reduce v against the current span; the remainder has no pivot in common.
    BitVec residual(BitVec v) const {
        if (v.size() != n_cols_)
            throw DimensionMismatch("SpanBuilder: vector length mismatch");
        for (std::size_t k = 0; k < rows_.size(); ++k)
            if (v.get(pivots_[k]))
                v ^= rows_[k];
        return v;
    }

    bool contains(const BitVec& v) const { return residual(v).zero(); }

    /// Insert v; returns true when the span grew.
    bool insert(const BitVec& v) {
        BitVec r = residual(v);
        std::size_t p = r.lowest_set();
        if (p == kNoBit)
            return false;
        for (std::size_t k = 0; k < rows_.size(); ++k)
            if (rows_[k].get(p))
                rows_[k] ^= r;
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p)
            ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        return true;
    }

    const std::vector<BitVec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    BitMatrix to_matrix() const { return BitMatrix::from_rows(rows_, n_cols_); }

private:
    std::size_t n_cols_;
    std::vector<BitVec> rows_;      // reduced, sorted by pivot column
    std::vector<std::size_t> pivots_;
};

inline bool member(const BitVec& v, const std::vector<BitVec>& span_of) {
    SpanBuilder span(v.size());
    for (const BitVec& s : span_of) {
        if (s.size() != v.size())
            throw DimensionMismatch("member: vector length mismatch");
        span.insert(s);
    }
    return span.contains(v);
}

/// dim span(ambient) - dim span(sub); every sub vector must lie in span(ambient).
inline std::size_t quotient_dim(const std::vector<BitVec>& sub,
                                const std::vector<BitVec>& ambient) {
    std::size_t n_cols = ambient.empty() ? (sub.empty() ? 0 : sub.front().size())
                                         : ambient.front().size();
    SpanBuilder amb(n_cols);
    for (const BitVec& v : ambient)
        amb.insert(v);
    SpanBuilder s(n_cols);
    for (const BitVec& v : sub) {
        if (!amb.contains(v))
            throw ContainmentViolation("quotient_dim: sub vector outside ambient span");
        s.insert(v);
    }
    return amb.dim() - s.dim();
}

/// Expresses vectors as combinations of a fixed generating list.
class LinearSolver {
public:
    LinearSolver(const std::vector<BitVec>& generators, std::size_t n_cols)
        : n_cols_(n_cols), n_gens_(generators.size()) {
        for (std::size_t g = 0; g < generators.size(); ++g) {
            if (generators[g].size() != n_cols)
                throw DimensionMismatch("LinearSolver: generator length mismatch");
            BitVec row = generators[g];
            BitVec combo(n_gens_);
            combo.set(g);
            reduce(row, combo);
            std::size_t p = row.lowest_set();
            if (p == kNoBit)
                continue;
            rows_.push_back(std::move(row));
            combos_.push_back(std::move(combo));
            pivots_.push_back(p);
        }
    }

    /// Coefficients over the generator list, or empty optional when v is
    /// outside the span.  Deterministic: reduction order is fixed.
    std::optional<BitVec> express(BitVec v) const {
        if (v.size() != n_cols_)
            throw DimensionMismatch("LinearSolver: vector length mismatch");
        BitVec combo(n_gens_);
        reduce(v, combo);
        if (v.any())
            return std::nullopt;
        return combo;
    }

private:
    void reduce(BitVec& v, BitVec& combo) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (v.get(pivots_[k])) {
                v ^= rows_[k];
                combo ^= combos_[k];
            }
        }
    }

    std::size_t n_cols_;
    std::size_t n_gens_;
    std::vector<BitVec> rows_;
    std::vector<BitVec> combos_;
    std::vector<std::size_t> pivots_;
};

}  // namespace fiblie::gf2
