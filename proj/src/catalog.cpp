#include "anbim/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace anbim {

std::string family_name(Family f) {
    switch (f) {
        case Family::L: return "L";
        case Family::V: return "V";
        case Family::H: return "H";
        case Family::PI: return "PI";
        case Family::M: return "M";
        case Family::W: return "W";
        case Family::N: return "N";
        case Family::S: return "S";
    }
    throw std::logic_error("family_name: bad family");
}

bool family_has_t(Family f) {
    return f == Family::M || f == Family::W || f == Family::N || f == Family::S;
}

std::string IndecLabel::str() const {
    std::ostringstream os;
    os << family_name(fam);
    if (family_has_t(fam)) os << ":" << t;
    os << "," << i << "," << j;
    return os.str();
}

IndecLabel make_label(Family f, int i, int j) {
    if (family_has_t(f)) throw std::invalid_argument("make_label: family needs t");
    return IndecLabel{f, 0, i, j};
}

IndecLabel make_label(Family f, int t, int i, int j) {
    if (!family_has_t(f)) throw std::invalid_argument("make_label: family has no t");
    return IndecLabel{f, t, i, j};
}

IndecLabel parse_label(const std::string& s) {
    auto fail = [&]() -> IndecLabel {
        throw std::invalid_argument("cannot parse label '" + s + "'");
    };
    std::string str;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) str += c;

    size_t colon = str.find(':');
    std::string fam_part = (colon == std::string::npos) ? str.substr(0, str.find(','))
                                                        : str.substr(0, colon);
    Family fam;
    if (fam_part == "L") fam = Family::L;
    else if (fam_part == "V") fam = Family::V;
    else if (fam_part == "H") fam = Family::H;
    else if (fam_part == "PI") fam = Family::PI;
    else if (fam_part == "M") fam = Family::M;
    else if (fam_part == "W") fam = Family::W;
    else if (fam_part == "N") fam = Family::N;
    else if (fam_part == "S") fam = Family::S;
    else return fail();

    if (family_has_t(fam) != (colon != std::string::npos)) return fail();

    std::string rest = str.substr((colon == std::string::npos ? fam_part.size() : colon + 1));
    if (colon == std::string::npos) {
        if (rest.empty() || rest[0] != ',') return fail();
        rest = rest.substr(1);
    }
    std::vector<long> nums;
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return fail();
        nums.push_back(std::stol(tok));
    }
    size_t expect = family_has_t(fam) ? 3 : 2;
    if (nums.size() != expect) return fail();
    if (!rest.empty() && rest.back() == ',') return fail();

    IndecLabel l;
    l.fam = fam;
    if (family_has_t(fam)) {
        l.t = static_cast<int>(nums[0]);
        l.i = static_cast<int>(nums[1]);
        l.j = static_cast<int>(nums[2]);
    } else {
        l.i = static_cast<int>(nums[0]);
        l.j = static_cast<int>(nums[1]);
    }
    return l;
}

bool label_valid(const IndecLabel& l, int n) {
    const int t = l.t, i = l.i, j = l.j;
    switch (l.fam) {
        case Family::L: return t == 0 && i >= 1 && i <= n && j >= 1 && j <= n;
        case Family::V: return t == 0 && i >= 1 && i <= n - 1 && j >= 1 && j <= n;
        case Family::H: return t == 0 && i >= 1 && i <= n && j >= 1 && j <= n - 1;
        case Family::PI: return t == 0 && i >= 1 && i <= n - 1 && j >= 1 && j <= n - 1;
        case Family::W: return t >= 1 && t <= n - 1 && i >= 1 && i <= n - t && j >= 1 && j <= n - t;
        case Family::S:
            return t >= 1 && t <= n - 2 && i >= 1 && i <= n - t - 1 && j >= 1 && j <= n - t;
        case Family::N:
            return t >= 1 && t <= n - 2 && i >= 1 && i <= n - t && j >= 1 && j <= n - t - 1;
        case Family::M:
            return t >= 0 && t <= n - 2 && i >= 1 && i <= n - t - 1 && j >= 1 && j <= n - t - 1;
    }
    return false;
}

long count_formula(int n) {
    if (n < 1) throw std::invalid_argument("count_formula: n must be >= 1");
    long nn = n;
    long num = 4 * nn * nn * nn + 3 * nn * nn - 7 * nn + 3;
    if (num % 3 != 0) throw std::logic_error("count_formula: not divisible by 3");
    return num / 3;
}

bool ActionGraph::has_vertex(GridVertex v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
}

void ActionGraph::normalize() {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::sort(arrows.begin(), arrows.end());
    arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
    for (const auto& a : arrows) {
        if (!has_vertex(a.from) || !has_vertex(a.to))
            throw std::invalid_argument("ActionGraph: arrow endpoint not in vertex set");
        bool vstep = a.to.i == a.from.i + 1 && a.to.j == a.from.j;
        bool hstep = a.to.i == a.from.i && a.to.j == a.from.j - 1;
        if (!vstep && !hstep)
            throw std::invalid_argument("ActionGraph: arrow is not a unit grid step");
    }
    for (const auto& v : verts)
        if (v.i < 1 || v.i > n || v.j < 1 || v.j > n)
            throw std::invalid_argument("ActionGraph: vertex outside grid");
}

namespace {

void add_vert(ActionGraph& g, int i, int j) { g.verts.push_back({i, j}); }

void add_varrow(ActionGraph& g, int i, int j) { g.arrows.push_back({{i, j}, {i + 1, j}}); }

void add_harrow(ActionGraph& g, int i, int j) { g.arrows.push_back({{i, j}, {i, j - 1}}); }

}  // namespace

ActionGraph label_graph(const IndecLabel& l, int n) {
    if (!label_valid(l, n)) throw std::invalid_argument("label_graph: invalid label " + l.str());
    ActionGraph g;
    g.n = n;
    const int t = l.t, i = l.i, j = l.j;
    switch (l.fam) {
        case Family::L:
            add_vert(g, i, j);
            break;
        case Family::V:
            add_vert(g, i, j);
            add_vert(g, i + 1, j);
            add_varrow(g, i, j);
            break;
        case Family::H:
            add_vert(g, i, j);
            add_vert(g, i, j + 1);
            add_harrow(g, i, j + 1);
            break;
        case Family::PI:
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) add_vert(g, i + a, j + b);
            add_varrow(g, i, j);
            add_varrow(g, i, j + 1);
            add_harrow(g, i, j + 1);
            add_harrow(g, i + 1, j + 1);
            break;
        case Family::W:
            for (int s = 0; s <= t; ++s) add_vert(g, i + s, j + s);
            for (int s = 0; s <= t - 1; ++s) add_vert(g, i + s + 1, j + s);
            for (int s = 0; s <= t - 1; ++s) add_varrow(g, i + s, j + s);
            for (int s = 1; s <= t; ++s) add_harrow(g, i + s, j + s);
            break;
        case Family::S:
            for (int s = 0; s <= t; ++s) {
                add_vert(g, i + s, j + s);
                add_vert(g, i + s + 1, j + s);
                add_varrow(g, i + s, j + s);
            }
            for (int s = 1; s <= t; ++s) add_harrow(g, i + s, j + s);
            break;
        case Family::N:
            for (int s = 0; s <= t; ++s) {
                add_vert(g, i + s, j + s);
                add_vert(g, i + s, j + s + 1);
                add_harrow(g, i + s, j + s + 1);
            }
            for (int s = 0; s <= t - 1; ++s) add_varrow(g, i + s, j + s + 1);
            break;
        case Family::M:
            for (int s = 0; s <= t; ++s) {
                add_vert(g, i + s, j + s);
                add_vert(g, i + s, j + s + 1);
                add_harrow(g, i + s, j + s + 1);
                add_varrow(g, i + s, j + s + 1);
            }
            add_vert(g, i + t + 1, j + t + 1);
            break;
    }
    g.normalize();
    return g;
}

GenericBimodule realize_graph(const ActionGraph& g) {
    GenericBimodule x(g.n);
    for (const auto& v : g.verts) x.set_dim(v.i, v.j, 1);
    x.shape_maps();
    for (const auto& a : g.arrows) {
        if (a.vertical())
            x.left_map(a.from.i, a.from.j).at(0, 0) = 1;
        else
            x.right_map(a.to.i, a.to.j).at(0, 0) = 1;
    }
    return x;
}

std::vector<ActionGraph> graph_components(const ActionGraph& g) {
    std::map<GridVertex, int> comp;
    int next = 0;
    for (const auto& v : g.verts) comp[v] = next++;
    // union-find, tiny sizes
    std::vector<int> parent(next);
    for (int k = 0; k < next; ++k) parent[k] = k;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& a : g.arrows) parent[find(comp[a.from])] = find(comp[a.to]);

    std::map<int, ActionGraph> buckets;
    for (const auto& v : g.verts) {
        ActionGraph& b = buckets[find(comp[v])];
        b.n = g.n;
        b.verts.push_back(v);
    }
    for (const auto& a : g.arrows) buckets[find(comp[a.from])].arrows.push_back(a);

    std::vector<ActionGraph> out;
    for (auto& [root, b] : buckets) {
        b.normalize();
        out.push_back(std::move(b));
    }
    // deterministic order: by smallest vertex
    std::sort(out.begin(), out.end(),
              [](const ActionGraph& a, const ActionGraph& b) { return a.verts[0] < b.verts[0]; });
    return out;
}

int graph_valleys(const ActionGraph& g) {
    std::map<GridVertex, int> indeg;
    for (const auto& a : g.arrows) ++indeg[a.to];
    int v = 0;
    for (const auto& [vert, d] : indeg)
        if (d == 2) ++v;
    return v;
}

IndecLabel classify_component(const ActionGraph& g0) {
    ActionGraph g = g0;
    g.normalize();
    if (g.verts.empty()) throw std::invalid_argument("classify_component: empty graph");

    const int n = g.n;
    IndecLabel guess;

    if (g.verts.size() == 1) {
        guess = make_label(Family::L, g.verts[0].i, g.verts[0].j);
    } else if (g.verts.size() == 4 && g.arrows.size() == 4) {
        guess = make_label(Family::PI, g.verts[0].i, g.verts[0].j);
    } else {
        // a string: count degrees, find the two ends
        std::map<GridVertex, int> indeg, outdeg;
        for (const auto& a : g.arrows) {
            ++outdeg[a.from];
            ++indeg[a.to];
        }
        std::vector<GridVertex> ends;
        for (const auto& v : g.verts) {
            int di = indeg.count(v) ? indeg[v] : 0;
            int dout = outdeg.count(v) ? outdeg[v] : 0;
            if (di > 0 && dout > 0)
                throw std::invalid_argument("classify_component: vertex is neither source nor sink");
            if (di + dout == 1) ends.push_back(v);
            if (di + dout > 2 || di + dout == 0)
                throw std::invalid_argument("classify_component: bad vertex degree");
        }
        if (ends.size() != 2) throw std::invalid_argument("classify_component: not a walk");
        GridVertex nw = std::min(ends[0], ends[1]);
        GridVertex se = std::max(ends[0], ends[1]);

        auto end_edge_vertical = [&](GridVertex v) {
            for (const auto& a : g.arrows)
                if (a.from == v || a.to == v) return a.vertical();
            throw std::logic_error("classify_component: endpoint has no edge");
        };
        bool sv = end_edge_vertical(nw);
        bool ev = end_edge_vertical(se);
        int t = graph_valleys(g);

        if (g.verts.size() == 2) {
            guess = make_label(sv ? Family::V : Family::H, nw.i, nw.j);
        } else if (sv && !ev) {
            guess = make_label(Family::W, t, nw.i, nw.j);
        } else if (sv && ev) {
            guess = make_label(Family::S, t, nw.i, nw.j);
        } else if (!sv && !ev) {
            guess = make_label(Family::N, t, nw.i, nw.j);
        } else {
            guess = make_label(Family::M, t, nw.i, nw.j);
        }
    }

    if (!label_valid(guess, n))
        throw std::invalid_argument("classify_component: shape out of range: " + guess.str());
    ActionGraph expect = label_graph(guess, n);
    if (!(expect.verts == g.verts && expect.arrows == g.arrows))
        throw std::invalid_argument("classify_component: graph is not a catalogued shape");
    return guess;
}

ActionGraph reflect_graph(const ActionGraph& g) {
    const int n = g.n;
    auto rv = [n](GridVertex v) { return GridVertex{n + 1 - v.j, n + 1 - v.i}; };
    ActionGraph out;
    out.n = n;
    for (const auto& v : g.verts) out.verts.push_back(rv(v));
    for (const auto& a : g.arrows) out.arrows.push_back({rv(a.from), rv(a.to)});
    out.normalize();
    return out;
}

Catalog::Catalog(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Catalog: n must be >= 1");

    auto emit = [&](IndecLabel l) { labels_.push_back(l); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) emit(make_label(Family::L, i, j));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) emit(make_label(Family::V, i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j) emit(make_label(Family::H, i, j));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) emit(make_label(Family::PI, i, j));
    for (int t = 0; t <= n - 2; ++t)
        for (int i = 1; i <= n - t - 1; ++i)
            for (int j = 1; j <= n - t - 1; ++j) emit(make_label(Family::M, t, i, j));
    for (int t = 1; t <= n - 1; ++t)
        for (int i = 1; i <= n - t; ++i)
            for (int j = 1; j <= n - t; ++j) emit(make_label(Family::W, t, i, j));
    for (int t = 1; t <= n - 2; ++t)
        for (int i = 1; i <= n - t; ++i)
            for (int j = 1; j <= n - t - 1; ++j) emit(make_label(Family::N, t, i, j));
    for (int t = 1; t <= n - 2; ++t)
        for (int i = 1; i <= n - t - 1; ++i)
            for (int j = 1; j <= n - t; ++j) emit(make_label(Family::S, t, i, j));

    std::sort(labels_.begin(), labels_.end());
    if (static_cast<long>(labels_.size()) != count_formula(n))
        throw std::logic_error("Catalog: enumeration does not match the counting formula");

    graphs_.reserve(labels_.size());
    reals_.reserve(labels_.size());
    for (int idx = 0; idx < size(); ++idx) {
        const IndecLabel& l = labels_[idx];
        index_[l] = idx;
        graphs_.push_back(label_graph(l, n));
        reals_.push_back(realize_graph(graphs_.back()));
        if (!validate(reals_.back()))
            throw std::logic_error("Catalog: realization of " + l.str() + " is not a bimodule");
        if (classify_component(graphs_[idx]) != l)
            throw std::logic_error("Catalog: classify does not round-trip " + l.str());
    }
}

int Catalog::index_of(const IndecLabel& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw std::out_of_range("Catalog: unknown label " + l.str());
    return it->second;
}

IndecLabel Catalog::involution(const IndecLabel& l) const {
    return classify_component(reflect_graph(label_graph(l, n_)));
}

std::vector<int> Catalog::fingerprint(const GenericBimodule& x) const {
    std::vector<int> h(size());
    for (int a = 0; a < size(); ++a) h[a] = hom_dim(reals_[a], x);
    return h;
}

IndecLabel Catalog::identify(const GenericBimodule& x) const {
    ensure_hom_data();
    std::vector<int> h = fingerprint(x);
    int total = x.total_dim();
    for (int b = 0; b < size(); ++b) {
        if (reals_[b].total_dim() != total) continue;
        bool match = true;
        for (int a = 0; a < size() && match; ++a) match = (h[a] == hom_[a][b]);
        if (match) return labels_[b];
    }
    throw std::invalid_argument("identify: no catalog label matches (input decomposable?)");
}

std::optional<std::vector<long>> Catalog::solve_fingerprint(const std::vector<int>& h) const {
    ensure_hom_data();
    if (static_cast<int>(h.size()) != size())
        throw std::invalid_argument("solve_fingerprint: wrong length");
    std::vector<Rat> rh(h.begin(), h.end());
    std::vector<Rat> m = hom_inv_.apply(rh);
    std::vector<long> out(m.size());
    for (size_t k = 0; k < m.size(); ++k) {
        if (!rat_is_integer(m[k]) || m[k] < 0) return std::nullopt;
        out[k] = static_cast<long>(m[k].get_num().get_si());
    }
    return out;
}

const std::vector<std::vector<int>>& Catalog::hom_matrix() const {
    ensure_hom_data();
    return hom_;
}

void Catalog::ensure_hom_data() const {
    if (hom_ready_) return;
    const int k = size();
    hom_.assign(k, std::vector<int>(k, 0));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) hom_[a][b] = hom_dim(reals_[a], reals_[b]);
    for (int a = 0; a < k; ++a)
        if (hom_[a][a] != 1)
            throw std::logic_error("Catalog: endomorphism ring of " + labels_[a].str() +
                                   " is not one-dimensional");
    RatMat hm(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) hm.at(a, b) = hom_[a][b];
    auto inv = hm.inverse();
    if (!inv) throw std::logic_error("Catalog: hom dimension matrix is singular");
    hom_inv_ = std::move(*inv);
    hom_ready_ = true;
}

std::string Catalog::content_hash() const {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    mix("n=" + std::to_string(n_));
    for (const auto& l : labels_) mix(";" + l.str());
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace anbim
