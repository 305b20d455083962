#include "anbim/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace anbim {

AnAlgebra::AnAlgebra(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("AnAlgebra: n must be >= 1");
}

int AnAlgebra::idem(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("AnAlgebra::idem");
    return i - 1;
}

int AnAlgebra::arrow(int i) const {
    if (i < 1 || i > n_ - 1) throw std::out_of_range("AnAlgebra::arrow");
    return n_ - 1 + i;
}

int AnAlgebra::product(int a, int b) const {
    if (a < 0 || b < 0 || a >= dim() || b >= dim()) throw std::out_of_range("AnAlgebra::product");
    if (is_idem(a) && is_idem(b)) return a == b ? a : -1;
    if (is_idem(a)) {
        // e_j * a_i = a_i iff j = i + 1
        int j = a + 1;
        int i = b - (n_ - 1);
        return j == i + 1 ? b : -1;
    }
    if (is_idem(b)) {
        // a_i * e_j = a_i iff j = i
        int i = a - (n_ - 1);
        int j = b + 1;
        return j == i ? a : -1;
    }
    return -1;  // radical square is zero
}

std::string AnAlgebra::basis_name(int b) const {
    if (is_idem(b)) return "e" + std::to_string(b + 1);
    return "a" + std::to_string(b - (n_ - 1) + 1);
}

int LeftModule::total_dim() const {
    int s = 0;
    for (int i = 1; i <= n; ++i) s += dims[i];
    return s;
}

bool LeftModule::valid() const {
    for (int i = 1; i + 2 <= n; ++i)
        if (!maps[i + 1].mul(maps[i]).is_zero()) return false;
    return true;
}

int RightModule::total_dim() const {
    int s = 0;
    for (int j = 1; j <= n; ++j) s += dims[j];
    return s;
}

bool RightModule::valid() const {
    for (int j = 1; j + 2 <= n; ++j)
        if (!maps[j].mul(maps[j + 1]).is_zero()) return false;
    return true;
}

namespace {

LeftModule make_left(int n) {
    LeftModule m;
    m.n = n;
    m.dims.assign(n + 1, 0);
    m.maps.assign(n, RatMat());
    return m;
}

RightModule make_right(int n) {
    RightModule m;
    m.n = n;
    m.dims.assign(n + 1, 0);
    m.maps.assign(n, RatMat());
    return m;
}

void shape_left_maps(LeftModule& m) {
    for (int i = 1; i <= m.n - 1; ++i) m.maps[i] = RatMat(m.dims[i + 1], m.dims[i]);
}

void shape_right_maps(RightModule& m) {
    for (int j = 1; j <= m.n - 1; ++j) m.maps[j] = RatMat(m.dims[j], m.dims[j + 1]);
}

}  // namespace

LeftModule left_simple(int n, int i) {
    LeftModule m = make_left(n);
    m.dims[i] = 1;
    shape_left_maps(m);
    return m;
}

LeftModule left_projective(int n, int i) {
    LeftModule m = make_left(n);
    m.dims[i] = 1;
    if (i < n) m.dims[i + 1] = 1;
    shape_left_maps(m);
    if (i < n) m.maps[i].at(0, 0) = 1;
    return m;
}

RightModule right_simple(int n, int j) {
    RightModule m = make_right(n);
    m.dims[j] = 1;
    shape_right_maps(m);
    return m;
}

RightModule right_projective(int n, int j) {
    RightModule m = make_right(n);
    m.dims[j] = 1;
    if (j > 1) m.dims[j - 1] = 1;
    shape_right_maps(m);
    if (j > 1) m.maps[j - 1].at(0, 0) = 1;
    return m;
}

GridQuiver grid_quiver(int n) {
    if (n < 1) throw std::invalid_argument("grid_quiver: n must be >= 1");
    GridQuiver q;
    q.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) q.vertices.push_back({i, j});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i < n) q.arrows.push_back({{i, j}, {i + 1, j}});
            if (j > 1) q.arrows.push_back({{i, j}, {i, j - 1}});
        }
    return q;
}

namespace {

std::vector<GridVertex> arrows_out(int n, GridVertex v) {
    std::vector<GridVertex> out;
    if (v.i < n) out.push_back({v.i + 1, v.j});
    if (v.j > 1) out.push_back({v.i, v.j - 1});
    return out;
}

std::vector<GridVertex> arrows_in(int n, GridVertex v) {
    std::vector<GridVertex> in;
    if (v.i > 1) in.push_back({v.i - 1, v.j});
    if (v.j < n) in.push_back({v.i, v.j + 1});
    return in;
}

struct Walk {
    std::vector<GridVertex> verts;
    std::vector<GridArrow> edges;
    bool last_direct = false;  // last step traversed an arrow forwards
};

// Extend the walk at its end as long as the alternation condition allows.
// After a direct step the end vertex must become a sink, so the continuation
// traverses another incoming arrow backwards; after an inverse step the end
// must become a source. In the grid each vertex has at most two arrows per
// direction, so the continuation is unique when it exists.
void extend_to_end(int n, Walk& w) {
    for (;;) {
        GridVertex v = w.verts.back();
        GridVertex prev = w.verts[w.verts.size() - 2];
        bool extended = false;
        if (w.last_direct) {
            for (GridVertex x : arrows_in(n, v)) {
                if (x == prev) continue;
                w.verts.push_back(x);
                w.edges.push_back({x, v});
                w.last_direct = false;
                extended = true;
                break;
            }
        } else {
            for (GridVertex x : arrows_out(n, v)) {
                if (x == prev) continue;
                w.verts.push_back(x);
                w.edges.push_back({v, x});
                w.last_direct = true;
                extended = true;
                break;
            }
        }
        if (!extended) return;
        if (w.verts.size() > static_cast<size_t>(n) * n)
            throw std::logic_error("maximal_strings: walk revisits vertices (band?)");
    }
}

bool start_is_maximal(int n, const Walk& w) {
    GridVertex v0 = w.verts[0];
    GridVertex v1 = w.verts[1];
    bool first_direct = (w.edges[0].from == v0);
    if (first_direct) {
        // v0 would become a source; any unused outgoing arrow extends it.
        for (GridVertex x : arrows_out(n, v0))
            if (!(x == v1)) return false;
    } else {
        for (GridVertex x : arrows_in(n, v0))
            if (!(x == v1)) return false;
    }
    return true;
}

std::vector<GridVertex> canonical_key(const std::vector<GridVertex>& seq) {
    std::vector<GridVertex> rev(seq.rbegin(), seq.rend());
    return std::min(seq, rev);
}

}  // namespace

std::vector<MaximalString> maximal_strings(int n) {
    if (n < 1) throw std::invalid_argument("maximal_strings: n must be >= 1");
    GridQuiver q = grid_quiver(n);
    std::map<std::vector<GridVertex>, MaximalString> found;
    for (const GridArrow& a : q.arrows) {
        for (int dir = 0; dir < 2; ++dir) {
            Walk w;
            if (dir == 0) {
                w.verts = {a.from, a.to};
                w.last_direct = true;
            } else {
                w.verts = {a.to, a.from};
                w.last_direct = false;
            }
            w.edges = {a};
            extend_to_end(n, w);
            if (!start_is_maximal(n, w)) continue;
            MaximalString s;
            s.vertices = w.verts;
            s.edges = w.edges;
            found.emplace(canonical_key(w.verts), std::move(s));
        }
    }
    std::vector<MaximalString> out;
    out.reserve(found.size());
    for (auto& [key, s] : found) out.push_back(std::move(s));
    return out;
}

long string_module_count(int n) {
    long total = 0;
    for (const MaximalString& s : maximal_strings(n)) {
        long k = s.length();
        total += k * (k + 1) / 2;
    }
    // Every vertex except the corners 1|1 and n|n lies on two maximal strings
    // and is counted twice as a singleton substring. (For n = 1 there are no
    // strings at all and the lone vertex still supports a simple, which the
    // same correction accounts for.)
    return total - (static_cast<long>(n) * n - 2);
}

}  // namespace anbim
