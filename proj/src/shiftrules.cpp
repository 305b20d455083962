#include "anbim/shiftrules.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace anbim {

namespace {

bool in_grid(GridVertex v, int n) { return v.i >= 1 && v.i <= n && v.j >= 1 && v.j <= n; }

ActionGraph translated(const ActionGraph& g, int di, int dj) {
    ActionGraph out;
    out.n = g.n;
    out.verts.reserve(g.verts.size());
    for (GridVertex v : g.verts) out.verts.push_back({v.i + di, v.j + dj});
    out.arrows.reserve(g.arrows.size());
    for (const GridArrow& a : g.arrows)
        out.arrows.push_back({{a.from.i + di, a.from.j + dj}, {a.to.i + di, a.to.j + dj}});
    return out;  // deliberately not normalized: vertices may sit off the grid
}

ActionGraph remove_vertices(const ActionGraph& g, const std::set<GridVertex>& gone) {
    ActionGraph out;
    out.n = g.n;
    for (GridVertex v : g.verts)
        if (!gone.count(v)) out.verts.push_back(v);
    for (const GridArrow& a : g.arrows)
        if (!gone.count(a.from) && !gone.count(a.to)) out.arrows.push_back(a);
    out.normalize();
    return out;
}

std::set<GridVertex> escaped_vertices(const ActionGraph& g) {
    std::set<GridVertex> out;
    for (GridVertex v : g.verts)
        if (!in_grid(v, g.n)) out.insert(v);
    return out;
}

// Smallest vertex set containing the seed and closed under following
// arrows: x -> y with x in the set forces y in.
std::set<GridVertex> thick_closure(const ActionGraph& g, std::set<GridVertex> seed) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (const GridArrow& a : g.arrows)
            if (seed.count(a.from) && !seed.count(a.to)) {
                seed.insert(a.to);
                grew = true;
            }
    }
    return seed;
}

ActionGraph plain_cut(const ActionGraph& g) { return remove_vertices(g, escaped_vertices(g)); }

ActionGraph thick_cut(const ActionGraph& g) {
    return remove_vertices(g, thick_closure(g, escaped_vertices(g)));
}

int column_dim(const ActionGraph& g, int j) {
    int d = 0;
    for (GridVertex v : g.verts)
        if (v.j == j) ++d;
    return d;
}

int row_dim(const ActionGraph& g, int i) {
    int d = 0;
    for (GridVertex v : g.verts)
        if (v.i == i) ++d;
    return d;
}

// The walk endpoints of a staircase diagram: rows and columns both weakly
// increase along the walk, so the north-west end is the lexicographically
// least vertex and the south-east end the greatest.
GridVertex northwest_corner(const ActionGraph& g) {
    if (g.verts.empty())
        throw std::logic_error("shift rule: no vertex to anchor the corner");
    return *std::min_element(g.verts.begin(), g.verts.end());
}

GridVertex southeast_corner(const ActionGraph& g) {
    if (g.verts.empty())
        throw std::logic_error("shift rule: no vertex to anchor the corner");
    return *std::max_element(g.verts.begin(), g.verts.end());
}

ActionGraph append_vertex(ActionGraph g, GridVertex anchor, GridVertex fresh) {
    if (!in_grid(fresh, g.n))
        throw std::logic_error("shift rule: appended vertex falls off the grid");
    if (g.has_vertex(fresh))
        throw std::logic_error("shift rule: appended vertex already present");
    g.verts.push_back(fresh);
    g.arrows.push_back({anchor, fresh});
    g.normalize();
    return g;
}

void reject_split(const ActionGraph& x, const char* who) {
    if (classify_component(x).ksplit())
        throw std::invalid_argument(std::string(who) + ": split input is outside the rule's scope");
}

}  // namespace

std::string generator_name(GeneratorName g) {
    switch (g) {
        case GeneratorName::W21: return "W21";
        case GeneratorName::N11: return "N11";
        case GeneratorName::S12: return "S12";
    }
    throw std::logic_error("unknown generator");
}

GeneratorName parse_generator(const std::string& s) {
    if (s == "W21") return GeneratorName::W21;
    if (s == "N11") return GeneratorName::N11;
    if (s == "S12") return GeneratorName::S12;
    throw std::invalid_argument("unknown generator name: " + s);
}

IndecLabel generator_label(GeneratorName g, int n) {
    if (n < 3) throw std::invalid_argument("generators require n >= 3");
    switch (g) {
        case GeneratorName::W21: return make_label(Family::W, n - 2, 2, 1);
        case GeneratorName::N11: return make_label(Family::N, n - 2, 1, 1);
        case GeneratorName::S12: return make_label(Family::S, n - 2, 1, 2);
    }
    throw std::logic_error("unknown generator");
}

ActionGraph shift_W21(const ActionGraph& x, Side side) {
    return side == Side::Left ? plain_cut(translated(x, 1, 0)) : plain_cut(translated(x, 0, -1));
}

ActionGraph shift_N11(const ActionGraph& x, Side side) {
    reject_split(x, "shift_N11");
    if (side == Side::Left) return plain_cut(translated(x, -1, 0));
    bool reattach = column_dim(x, 1) == 2;
    ActionGraph cut = thick_cut(translated(x, 0, 1));
    if (!reattach) return cut;
    GridVertex nw = northwest_corner(cut);
    return append_vertex(std::move(cut), nw, {nw.i, nw.j - 1});
}

ActionGraph shift_S12(const ActionGraph& x, Side side) {
    reject_split(x, "shift_S12");
    if (side == Side::Right) return plain_cut(translated(x, 0, 1));
    bool reattach = row_dim(x, x.n) == 2;
    ActionGraph cut = thick_cut(translated(x, -1, 0));
    if (!reattach) return cut;
    GridVertex se = southeast_corner(cut);
    return append_vertex(std::move(cut), se, {se.i + 1, se.j});
}

bool shift_applicable(GeneratorName g, const IndecLabel& x) {
    return g == GeneratorName::W21 || !x.ksplit();
}

Decomposition shift_tensor(GeneratorName g, Side side, const IndecLabel& x, const Catalog& cat) {
    const ActionGraph& graph = cat.graph(cat.index_of(x));
    ActionGraph shifted;
    switch (g) {
        case GeneratorName::W21: shifted = shift_W21(graph, side); break;
        case GeneratorName::N11: shifted = shift_N11(graph, side); break;
        case GeneratorName::S12: shifted = shift_S12(graph, side); break;
    }
    Decomposition out;
    for (const ActionGraph& comp : graph_components(shifted)) out.add(classify_component(comp));
    return out;
}

std::pair<LeftModule, RightModule> ksplit_factors(const IndecLabel& l, int n) {
    switch (l.fam) {
        case Family::L: return {left_simple(n, l.i), right_simple(n, l.j)};
        case Family::V: return {left_projective(n, l.i), right_simple(n, l.j)};
        case Family::H: return {left_simple(n, l.i), right_projective(n, l.j + 1)};
        case Family::PI: return {left_projective(n, l.i), right_projective(n, l.j + 1)};
        default: throw std::invalid_argument("ksplit_factors: " + l.str() + " is not split");
    }
}

Decomposition ksplit_tensor(const IndecLabel& a, const IndecLabel& b, const Catalog& cat) {
    const int n = cat.n();
    auto [k1, n1] = ksplit_factors(a, n);
    auto [k2, n2] = ksplit_factors(b, n);
    int mult = module_pairing(n1, k2);
    Decomposition out;
    if (mult == 0) return out;
    Decomposition outer = decompose(outer_product(k1, n2), cat);
    for (const auto& [l, m] : outer.parts) out.add(l, m * mult);
    return out;
}

}  // namespace anbim
