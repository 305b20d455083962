#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anbim {

/// Exact rational scalar. All linear algebra in the library is over Q;
/// nothing is ever rounded.
using Rat = mpq_class;

bool rat_is_integer(const Rat& x);

/// Dense matrix over Q. Row-major, sizes are small (at most a few hundred
/// rows) so no sparsity tricks are needed; exactness is the point.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static RatMat identity(int k);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const RatMat& o) const;

    RatMat mul(const RatMat& o) const;
    RatMat add(const RatMat& o) const;
    RatMat scale(const Rat& s) const;
    RatMat transpose() const;

    /// Reduce to reduced row echelon form in place; returns pivot columns
    /// in increasing order.
    std::vector<int> rref();

    int rank() const;

    /// Basis of the right kernel {v : A v = 0}, one vector per free column.
    std::vector<std::vector<Rat>> kernel_basis() const;

    /// One solution of A x = b, if any.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

    std::optional<RatMat> inverse() const;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    bool all_integer() const;

    std::string to_string() const;

private:
    int rows_;
    int cols_;
    std::vector<Rat> data_;
};

/// Integer matrix used as a fast path for rank computations. Entries in this
/// project are tiny (almost always -1, 0, 1), so fraction-free elimination in
/// 64-bit words with overflow detection covers everything in practice; the
/// caller falls back to RatMat on overflow.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    std::int64_t at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    /// Rank over Q via Bareiss fraction-free elimination. Returns nullopt if
    /// an intermediate value leaves the int64 range.
    std::optional<int> bareiss_rank() const;

    RatMat to_ratmat() const;

private:
    int rows_;
    int cols_;
    std::vector<std::int64_t> data_;
};

}  // namespace anbim
