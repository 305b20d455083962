#include "anbim/ratmat.hpp"

#include <sstream>
#include <stdexcept>

namespace anbim {

bool rat_is_integer(const Rat& x) {
    return x.get_den() == 1;
}

RatMat RatMat::identity(int k) {
    RatMat m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMat::is_zero() const {
    for (const Rat& x : data_)
        if (x != 0) return false;
    return true;
}

bool RatMat::operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RatMat RatMat::mul(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat::mul: shape mismatch");
    RatMat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& b = o.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

RatMat RatMat::add(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat::add: shape mismatch");
    RatMat out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

RatMat RatMat::scale(const Rat& s) const {
    RatMat out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

RatMat RatMat::transpose() const {
    RatMat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<int> RatMat::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        Rat inv = 1 / at(r, c);
        for (int j = c; j < cols_; ++j) at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const Rat f = at(i, c);
            if (f == 0) continue;
            for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int RatMat::rank() const {
    RatMat copy = *this;
    return static_cast<int>(copy.rref().size());
}

std::vector<std::vector<Rat>> RatMat::kernel_basis() const {
    RatMat red = *this;
    std::vector<int> pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols_);
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> RatMat::solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("RatMat::solve: size mismatch");
    RatMat aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<Rat> x(cols_);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
}

std::optional<RatMat> RatMat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    RatMat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    std::vector<int> pivots = aug.rref();
    // pivots escaping into the adjoined identity block mean the left block
    // was singular
    if (static_cast<int>(pivots.size()) != rows_ || (rows_ > 0 && pivots.back() >= cols_))
        return std::nullopt;
    RatMat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
    return out;
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RatMat::apply: size mismatch");
    std::vector<Rat> out(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

bool RatMat::all_integer() const {
    for (const Rat& x : data_)
        if (!rat_is_integer(x)) return false;
    return true;
}

std::string RatMat::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).get_str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

namespace {

bool fits_i64(__int128 v) {
    return v <= INT64_MAX && v >= INT64_MIN;
}

}  // namespace

std::optional<int> IntMat::bareiss_rank() const {
    IntMat m = *this;
    const int R = m.rows(), C = m.cols();
    std::int64_t prev = 1;
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int p = -1;
        for (int i = r; i < R; ++i)
            if (m.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < C; ++j) std::swap(m.at(p, j), m.at(r, j));
        for (int i = r + 1; i < R; ++i) {
            for (int j = c + 1; j < C; ++j) {
                __int128 num = static_cast<__int128>(m.at(i, j)) * m.at(r, c) -
                               static_cast<__int128>(m.at(i, c)) * m.at(r, j);
                __int128 q = num / prev;  // exact by Bareiss
                if (!fits_i64(q)) return std::nullopt;
                m.at(i, j) = static_cast<std::int64_t>(q);
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

RatMat IntMat::to_ratmat() const {
    RatMat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = static_cast<long>(at(i, j));
    return out;
}

}  // namespace anbim
