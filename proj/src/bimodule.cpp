#include "anbim/bimodule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace anbim {

GenericBimodule::GenericBimodule(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("GenericBimodule: n must be >= 1");
    dims_.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
    left_.assign(dims_.size(), RatMat(0, 0));
    right_.assign(dims_.size(), RatMat(0, 0));
}

void GenericBimodule::set_dim(int i, int j, int d) {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("set_dim: vertex outside grid");
    if (d < 0) throw std::invalid_argument("set_dim: negative dimension");
    dims_[idx(i, j)] = d;
}

int GenericBimodule::total_dim() const {
    int t = 0;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) t += dim(i, j);
    return t;
}

RatMat& GenericBimodule::left_map(int i, int j) {
    if (i < 1 || i > n_ - 1 || j < 1 || j > n_) throw std::out_of_range("left_map index");
    return left_[idx(i, j)];
}

const RatMat& GenericBimodule::left_map(int i, int j) const {
    if (i < 1 || i > n_ - 1 || j < 1 || j > n_) throw std::out_of_range("left_map index");
    return left_[idx(i, j)];
}

RatMat& GenericBimodule::right_map(int i, int j) {
    if (i < 1 || i > n_ || j < 1 || j > n_ - 1) throw std::out_of_range("right_map index");
    return right_[idx(i, j)];
}

const RatMat& GenericBimodule::right_map(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_ - 1) throw std::out_of_range("right_map index");
    return right_[idx(i, j)];
}

void GenericBimodule::shape_maps() {
    for (int i = 1; i <= n_ - 1; ++i)
        for (int j = 1; j <= n_; ++j) left_[idx(i, j)] = RatMat(dim(i + 1, j), dim(i, j));
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_ - 1; ++j) right_[idx(i, j)] = RatMat(dim(i, j), dim(i, j + 1));
}

bool GenericBimodule::all_integer_actions() const {
    auto ok = [](const RatMat& m) {
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (!rat_is_integer(m.at(r, c))) return false;
        return true;
    };
    for (int i = 1; i <= n_ - 1; ++i)
        for (int j = 1; j <= n_; ++j)
            if (!ok(left_map(i, j))) return false;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_ - 1; ++j)
            if (!ok(right_map(i, j))) return false;
    return true;
}

std::vector<std::string> validate_diagnostics(const GenericBimodule& x) {
    std::vector<std::string> out;
    const int n = x.n();
    auto tag = [](int i, int j) {
        std::ostringstream os;
        os << "(" << i << "," << j << ")";
        return os.str();
    };

    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            const RatMat& m = x.left_map(i, j);
            if (m.rows() != x.dim(i + 1, j) || m.cols() != x.dim(i, j))
                out.push_back("left map at " + tag(i, j) + " has wrong shape");
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            const RatMat& m = x.right_map(i, j);
            if (m.rows() != x.dim(i, j) || m.cols() != x.dim(i, j + 1))
                out.push_back("right map at " + tag(i, j) + " has wrong shape");
        }
    if (!out.empty()) return out;  // composite checks need correct shapes

    for (int i = 1; i <= n - 2; ++i)
        for (int j = 1; j <= n; ++j)
            if (!x.left_map(i + 1, j).mul(x.left_map(i, j)).is_zero())
                out.push_back("left-left composite at " + tag(i, j) + " is nonzero");
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 2; ++j)
            if (!x.right_map(i, j).mul(x.right_map(i, j + 1)).is_zero())
                out.push_back("right-right composite at " + tag(i, j) + " is nonzero");
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            RatMat lr = x.left_map(i, j).mul(x.right_map(i, j));
            RatMat rl = x.right_map(i + 1, j).mul(x.left_map(i, j + 1));
            if (!(lr == rl)) out.push_back("square at " + tag(i, j) + " does not commute");
        }
    return out;
}

bool validate(const GenericBimodule& x) { return validate_diagnostics(x).empty(); }

GenericBimodule direct_sum(const GenericBimodule& x, const GenericBimodule& y) {
    if (x.n() != y.n()) throw std::invalid_argument("direct_sum: mismatched n");
    const int n = x.n();
    GenericBimodule s(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) s.set_dim(i, j, x.dim(i, j) + y.dim(i, j));
    s.shape_maps();

    auto fill = [&](RatMat& dst, const RatMat& a, const RatMat& b) {
        for (int r = 0; r < a.rows(); ++r)
            for (int c = 0; c < a.cols(); ++c) dst.at(r, c) = a.at(r, c);
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) dst.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    };
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) fill(s.left_map(i, j), x.left_map(i, j), y.left_map(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j) fill(s.right_map(i, j), x.right_map(i, j), y.right_map(i, j));
    return s;
}

GenericBimodule regular_bimodule(int n) {
    GenericBimodule a(n);
    for (int i = 1; i <= n; ++i) a.set_dim(i, i, 1);
    for (int i = 1; i <= n - 1; ++i) a.set_dim(i + 1, i, 1);
    a.shape_maps();
    // e_i spans the (i, i) piece and a_i spans (i+1, i); a_i . e_i = a_i and
    // e_{i+1} . a_i = a_i give the two unit entries.
    for (int i = 1; i <= n - 1; ++i) {
        a.left_map(i, i).at(0, 0) = 1;
        a.right_map(i + 1, i).at(0, 0) = 1;
    }
    return a;
}

GenericBimodule outer_product(const LeftModule& k, const RightModule& m) {
    if (k.n != m.n) throw std::invalid_argument("outer_product: mismatched n");
    const int n = k.n;
    GenericBimodule x(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) x.set_dim(i, j, k.dims[i] * m.dims[j]);
    x.shape_maps();
    // Basis of X_{i,j}: pairs (u, v) with u in K_i, v in M_j, ordered u-major.
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            const RatMat& lk = k.maps[i];  // K_i -> K_{i+1}
            RatMat& dst = x.left_map(i, j);
            for (int u2 = 0; u2 < k.dims[i + 1]; ++u2)
                for (int u = 0; u < k.dims[i]; ++u)
                    for (int v = 0; v < m.dims[j]; ++v)
                        dst.at(u2 * m.dims[j] + v, u * m.dims[j] + v) = lk.at(u2, u);
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            const RatMat& rm = m.maps[j];  // M_{j+1} -> M_j
            RatMat& dst = x.right_map(i, j);
            for (int u = 0; u < k.dims[i]; ++u)
                for (int v2 = 0; v2 < m.dims[j]; ++v2)
                    for (int v = 0; v < m.dims[j + 1]; ++v)
                        dst.at(u * m.dims[j] + v2, u * m.dims[j + 1] + v) = rm.at(v2, v);
        }
    return x;
}

LeftModule column_left_module(const GenericBimodule& x, int p) {
    const int n = x.n();
    LeftModule col;
    col.n = n;
    col.dims.assign(n + 1, 0);
    col.maps.assign(n + 1, RatMat(0, 0));
    for (int i = 1; i <= n; ++i) col.dims[i] = x.dim(i, p);
    for (int i = 1; i <= n - 1; ++i) col.maps[i] = x.left_map(i, p);
    return col;
}

RightModule row_right_module(const GenericBimodule& x, int i) {
    const int n = x.n();
    RightModule row;
    row.n = n;
    row.dims.assign(n + 1, 0);
    row.maps.assign(n + 1, RatMat(0, 0));
    for (int j = 1; j <= n; ++j) row.dims[j] = x.dim(i, j);
    for (int j = 1; j <= n - 1; ++j) row.maps[j] = x.right_map(i, j);
    return row;
}

SupportProfile support_profile(const GenericBimodule& x) {
    SupportProfile sp;
    const int n = x.n();
    for (int i = 1; i <= n; ++i) {
        int t = 0;
        for (int j = 1; j <= n; ++j) t += x.dim(i, j);
        if (t > 0) sp.lsupp.push_back(i);
    }
    for (int j = 1; j <= n; ++j) {
        int t = 0;
        for (int i = 1; i <= n; ++i) t += x.dim(i, j);
        if (t > 0) sp.rsupp.push_back(j);
    }
    if (!sp.lsupp.empty()) sp.height = sp.lsupp.back() - sp.lsupp.front() + 1;
    if (!sp.rsupp.empty()) sp.width = sp.rsupp.back() - sp.rsupp.front() + 1;
    return sp;
}

GenericBimodule twist(const GenericBimodule& x, Side side, TwistKind kind) {
    const int n = x.n();
    GenericBimodule y(n);
    const int d = (kind == TwistKind::Phi) ? +1 : -1;
    auto src = [&](int i, int j) -> std::pair<int, int> {
        return (side == Side::Left) ? std::make_pair(i - d, j) : std::make_pair(i, j - d);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            auto [si, sj] = src(i, j);
            y.set_dim(i, j, x.dim(si, sj));
        }
    y.shape_maps();
    auto in_grid = [&](int i, int j) { return i >= 1 && i <= n && j >= 1 && j <= n; };
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            auto [si, sj] = src(i, j);
            // The map sits between shifted copies; both endpoints must come
            // from the grid and the source arrow must exist there.
            if (in_grid(si, sj) && si >= 1 && si <= n - 1 && y.dim(i, j) > 0 && y.dim(i + 1, j) > 0)
                y.left_map(i, j) = x.left_map(si, sj);
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            auto [si, sj] = src(i, j);
            if (in_grid(si, sj) && sj >= 1 && sj <= n - 1 && y.dim(i, j) > 0 && y.dim(i, j + 1) > 0)
                y.right_map(i, j) = x.right_map(si, sj);
        }
    return y;
}

bool is_left_projective(const GenericBimodule& x) {
    const int n = x.n();
    int cover = 0;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) {
            int top = x.dim(i, j);
            if (i >= 2) top -= x.left_map(i - 1, j).rank();
            cover += top * (i < n ? 2 : 1);
        }
    return cover == x.total_dim();
}

BlockMap zero_block_map(const GenericBimodule& x, const GenericBimodule& y) {
    const int n = x.n();
    BlockMap f;
    f.n = n;
    f.blocks.assign(static_cast<size_t>(n + 1) * (n + 1), RatMat(0, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) f.block(i, j) = RatMat(y.dim(i, j), x.dim(i, j));
    return f;
}

BlockMap compose(const BlockMap& g, const BlockMap& f) {
    BlockMap h;
    h.n = f.n;
    h.blocks.assign(f.blocks.size(), RatMat(0, 0));
    for (int i = 1; i <= f.n; ++i)
        for (int j = 1; j <= f.n; ++j) h.block(i, j) = g.block(i, j).mul(f.block(i, j));
    return h;
}

namespace {

// Sparse linear system cutting out Hom(X, Y) inside prod_{i,j} Mat(Y_ij, X_ij).
struct HomSystem {
    int unknowns = 0;
    int rows = 0;
    std::vector<int> offset;  // per grid vertex, into the unknown vector
    std::vector<std::tuple<int, int, Rat>> entries;
};

HomSystem build_hom_system(const GenericBimodule& x, const GenericBimodule& y) {
    if (x.n() != y.n()) throw std::invalid_argument("hom: mismatched n");
    const int n = x.n();
    HomSystem s;
    s.offset.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
    auto off = [&](int i, int j) -> int& { return s.offset[static_cast<size_t>(i) * (n + 1) + j]; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            off(i, j) = s.unknowns;
            s.unknowns += x.dim(i, j) * y.dim(i, j);
        }
    auto unknown = [&](int i, int j, int r, int c) { return off(i, j) + r * x.dim(i, j) + c; };

    // f_{i+1,j} LX(i,j) = LY(i,j) f_{i,j}
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            const RatMat& lx = x.left_map(i, j);
            const RatMat& ly = y.left_map(i, j);
            for (int r = 0; r < y.dim(i + 1, j); ++r)
                for (int c = 0; c < x.dim(i, j); ++c) {
                    bool any = false;
                    for (int t = 0; t < x.dim(i + 1, j); ++t)
                        if (lx.at(t, c) != 0) {
                            s.entries.emplace_back(s.rows, unknown(i + 1, j, r, t), lx.at(t, c));
                            any = true;
                        }
                    for (int t = 0; t < y.dim(i, j); ++t)
                        if (ly.at(r, t) != 0) {
                            s.entries.emplace_back(s.rows, unknown(i, j, t, c), -ly.at(r, t));
                            any = true;
                        }
                    if (any) ++s.rows;
                }
        }
    // f_{i,j} RX(i,j) = RY(i,j) f_{i,j+1}
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            const RatMat& rx = x.right_map(i, j);
            const RatMat& ry = y.right_map(i, j);
            for (int r = 0; r < y.dim(i, j); ++r)
                for (int c = 0; c < x.dim(i, j + 1); ++c) {
                    bool any = false;
                    for (int t = 0; t < x.dim(i, j); ++t)
                        if (rx.at(t, c) != 0) {
                            s.entries.emplace_back(s.rows, unknown(i, j, r, t), rx.at(t, c));
                            any = true;
                        }
                    for (int t = 0; t < y.dim(i, j + 1); ++t)
                        if (ry.at(r, t) != 0) {
                            s.entries.emplace_back(s.rows, unknown(i, j + 1, t, c), -ry.at(r, t));
                            any = true;
                        }
                    if (any) ++s.rows;
                }
        }
    return s;
}

std::optional<int> system_rank_int64(const HomSystem& s) {
    IntMat m(s.rows, s.unknowns);
    for (const auto& [r, c, v] : s.entries) {
        if (!rat_is_integer(v) || !mpz_fits_slong_p(v.get_num().get_mpz_t())) return std::nullopt;
        m.at(r, c) += v.get_num().get_si();
    }
    return m.bareiss_rank();
}

int system_rank_exact(const HomSystem& s) {
    RatMat m(s.rows, s.unknowns);
    for (const auto& [r, c, v] : s.entries) m.at(r, c) += v;
    return m.rank();
}

}  // namespace

int hom_dim(const GenericBimodule& x, const GenericBimodule& y) {
    HomSystem s = build_hom_system(x, y);
    if (s.rows == 0) return s.unknowns;
    if (auto r = system_rank_int64(s)) return s.unknowns - *r;
    return s.unknowns - system_rank_exact(s);
}

std::vector<BlockMap> hom_basis(const GenericBimodule& x, const GenericBimodule& y) {
    HomSystem s = build_hom_system(x, y);
    const int n = x.n();
    RatMat m(std::max(s.rows, 1), s.unknowns);
    for (const auto& [r, c, v] : s.entries) m.at(r, c) += v;
    std::vector<std::vector<Rat>> ker = m.kernel_basis();

    std::vector<BlockMap> out;
    out.reserve(ker.size());
    for (const auto& vec : ker) {
        BlockMap f = zero_block_map(x, y);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                int base = s.offset[static_cast<size_t>(i) * (n + 1) + j];
                for (int r = 0; r < y.dim(i, j); ++r)
                    for (int c = 0; c < x.dim(i, j); ++c)
                        f.block(i, j).at(r, c) = vec[base + r * x.dim(i, j) + c];
            }
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

// Coordinates of v in the column space spanned by basis (columns), or nullopt.
std::optional<std::vector<Rat>> coords_in(const RatMat& basis, const std::vector<Rat>& v) {
    return basis.solve(v);
}

RatMat columns_from_vectors(const std::vector<std::vector<Rat>>& cols, int dim) {
    RatMat m(dim, static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        for (int r = 0; r < dim; ++r) m.at(r, c) = cols[c][r];
    return m;
}

}  // namespace

GenericBimodule kernel_sub_bimodule(const GenericBimodule& x, const BlockMap& e) {
    const int n = x.n();
    GenericBimodule k(n);
    // Kernel basis per vertex, stored as columns of a dim(X_ij) x dim(K_ij) matrix.
    std::vector<RatMat> kb(static_cast<size_t>(n + 1) * (n + 1), RatMat(0, 0));
    auto at = [&](int i, int j) -> RatMat& { return kb[static_cast<size_t>(i) * (n + 1) + j]; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::vector<std::vector<Rat>> basis = e.block(i, j).kernel_basis();
            at(i, j) = columns_from_vectors(basis, x.dim(i, j));
            k.set_dim(i, j, static_cast<int>(basis.size()));
        }
    k.shape_maps();

    auto induce = [&](const RatMat& action, const RatMat& src_basis, const RatMat& dst_basis,
                      RatMat& out) {
        // action(src_basis) must land in span(dst_basis); solve columnwise.
        for (int c = 0; c < src_basis.cols(); ++c) {
            std::vector<Rat> v(static_cast<size_t>(src_basis.rows()));
            for (int r = 0; r < src_basis.rows(); ++r) v[r] = src_basis.at(r, c);
            std::vector<Rat> img = action.apply(v);
            auto coords = coords_in(dst_basis, img);
            if (!coords) throw std::logic_error("kernel_sub_bimodule: kernel is not action-stable");
            for (int r = 0; r < dst_basis.cols(); ++r) out.at(r, c) = (*coords)[r];
        }
    };
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j)
            induce(x.left_map(i, j), at(i, j), at(i + 1, j), k.left_map(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j)
            induce(x.right_map(i, j), at(i, j + 1), at(i, j), k.right_map(i, j));
    return k;
}

std::vector<std::vector<RatMat>> hom_left_modules(const LeftModule& x, const LeftModule& y) {
    const int n = x.n;
    if (y.n != n) throw std::invalid_argument("hom_left_modules: mismatched n");
    int unknowns = 0;
    std::vector<int> off(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
        off[i] = unknowns;
        unknowns += x.dims[i] * y.dims[i];
    }
    auto unknown = [&](int i, int r, int c) { return off[i] + r * x.dims[i] + c; };

    std::vector<std::tuple<int, int, Rat>> entries;
    int rows = 0;
    for (int i = 1; i <= n - 1; ++i) {
        const RatMat& lx = x.maps[i];
        const RatMat& ly = y.maps[i];
        for (int r = 0; r < y.dims[i + 1]; ++r)
            for (int c = 0; c < x.dims[i]; ++c) {
                bool any = false;
                for (int t = 0; t < x.dims[i + 1]; ++t)
                    if (lx.at(t, c) != 0) {
                        entries.emplace_back(rows, unknown(i + 1, r, t), lx.at(t, c));
                        any = true;
                    }
                for (int t = 0; t < y.dims[i]; ++t)
                    if (ly.at(r, t) != 0) {
                        entries.emplace_back(rows, unknown(i, t, c), -ly.at(r, t));
                        any = true;
                    }
                if (any) ++rows;
            }
    }
    RatMat m(std::max(rows, 1), unknowns);
    for (const auto& [r, c, v] : entries) m.at(r, c) += v;
    std::vector<std::vector<Rat>> ker = m.kernel_basis();

    std::vector<std::vector<RatMat>> out;
    for (const auto& vec : ker) {
        std::vector<RatMat> g(n + 1, RatMat(0, 0));
        for (int i = 1; i <= n; ++i) {
            g[i] = RatMat(y.dims[i], x.dims[i]);
            for (int r = 0; r < y.dims[i]; ++r)
                for (int c = 0; c < x.dims[i]; ++c) g[i].at(r, c) = vec[unknown(i, r, c)];
        }
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

std::vector<Rat> flatten_left_hom(const std::vector<RatMat>& g, int n) {
    std::vector<Rat> v;
    for (int i = 1; i <= n; ++i)
        for (int r = 0; r < g[i].rows(); ++r)
            for (int c = 0; c < g[i].cols(); ++c) v.push_back(g[i].at(r, c));
    return v;
}

}  // namespace

GenericBimodule left_hom_to_A(const GenericBimodule& x) {
    const int n = x.n();
    GenericBimodule h(n);

    // basis[p][q]: maps X e_p -> A e_q of left modules, as row-degree blocks.
    std::vector<std::vector<std::vector<std::vector<RatMat>>>> basis(
        n + 1, std::vector<std::vector<std::vector<RatMat>>>(n + 1));
    std::vector<LeftModule> proj(n + 1);
    for (int q = 1; q <= n; ++q) proj[q] = left_projective(n, q);

    for (int p = 1; p <= n; ++p) {
        LeftModule col = column_left_module(x, p);
        for (int q = 1; q <= n; ++q) {
            basis[p][q] = hom_left_modules(col, proj[q]);
            h.set_dim(p, q, static_cast<int>(basis[p][q].size()));
        }
    }
    h.shape_maps();

    auto coords = [&](int p, int q, const std::vector<RatMat>& g) {
        std::vector<Rat> target = flatten_left_hom(g, n);
        std::vector<std::vector<Rat>> cols;
        for (const auto& b : basis[p][q]) cols.push_back(flatten_left_hom(b, n));
        RatMat bm = columns_from_vectors(cols, static_cast<int>(target.size()));
        auto c = bm.solve(target);
        if (!c) throw std::logic_error("left_hom_to_A: image escapes the hom basis");
        return *c;
    };

    // Left action: precompose with right multiplication by a_p, X e_{p+1} -> X e_p.
    for (int p = 1; p <= n - 1; ++p)
        for (int q = 1; q <= n; ++q) {
            RatMat& dst = h.left_map(p, q);  // H_{p,q} -> H_{p+1,q}
            for (int b = 0; b < h.dim(p, q); ++b) {
                const auto& g = basis[p][q][b];
                std::vector<RatMat> comp(n + 1, RatMat(0, 0));
                for (int i = 1; i <= n; ++i) comp[i] = g[i].mul(x.right_map(i, p));
                auto c = coords(p + 1, q, comp);
                for (int r = 0; r < h.dim(p + 1, q); ++r) dst.at(r, b) = c[r];
            }
        }
    // Right action: postcompose with A e_{q+1} -> A e_q sending e_{q+1} to a_q.
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n - 1; ++q) {
            RatMat& dst = h.right_map(p, q);  // H_{p,q+1} -> H_{p,q}
            for (int b = 0; b < h.dim(p, q + 1); ++b) {
                const auto& g = basis[p][q + 1][b];
                // A e_{q+1} has basis e_{q+1} in degree q+1 (and a_{q+1} in
                // degree q+2, killed by the composition); the image lands in
                // the a_q line of A e_q, i.e. row degree q+1, slot index 1.
                std::vector<RatMat> comp(n + 1, RatMat(0, 0));
                for (int i = 1; i <= n; ++i) comp[i] = RatMat(proj[q].dims[i], x.dim(i, p));
                for (int c2 = 0; c2 < x.dim(q + 1, p); ++c2)
                    comp[q + 1].at(proj[q].dims[q + 1] - 1, c2) = g[q + 1].at(0, c2);
                auto c = coords(p, q, comp);
                for (int r = 0; r < h.dim(p, q); ++r) dst.at(r, b) = c[r];
            }
        }
    return h;
}

}  // namespace anbim
