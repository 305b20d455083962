#include "anbim/cells.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace anbim {

namespace {

// Transitive closure in place; returns true when it was a no-op.
bool close_transitively(std::vector<std::vector<char>>& leq) {
    const int s = static_cast<int>(leq.size());
    std::vector<std::vector<char>> before = leq;
    for (int k = 0; k < s; ++k)
        for (int x = 0; x < s; ++x)
            if (leq[x][k])
                for (int y = 0; y < s; ++y)
                    if (leq[k][y]) leq[x][y] = 1;
    return leq == before;
}

std::vector<std::vector<char>> reflexive(int s) {
    std::vector<std::vector<char>> m(s, std::vector<char>(s, 0));
    for (int x = 0; x < s; ++x) m[x][x] = 1;
    return m;
}

// Mutual-reachability classes of a transitively closed relation, each class
// sorted, classes ordered by smallest member.
std::vector<std::vector<int>> classes_of(const std::vector<std::vector<char>>& leq) {
    const int s = static_cast<int>(leq.size());
    std::vector<char> seen(s, 0);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < s; ++x) {
        if (seen[x]) continue;
        out.emplace_back();
        for (int y = x; y < s; ++y)
            if (!seen[y] && leq[x][y] && leq[y][x]) {
                seen[y] = 1;
                out.back().push_back(y);
            }
    }
    return out;
}

void canonicalize(std::vector<std::vector<int>>& cells) {
    for (auto& c : cells) std::sort(c.begin(), c.end());
    std::sort(cells.begin(), cells.end());
}

}  // namespace

Preorder left_preorder(ProductTable& table) {
    const Catalog& cat = table.catalog();
    const int s = cat.size();
    Preorder p;
    p.leq = reflexive(s);
    for (int x = 0; x < s; ++x)
        for (int z = 0; z < s; ++z)
            for (const auto& [l, m] : table.product(z, x).parts) p.leq[x][cat.index_of(l)] = 1;
    p.one_step_transitive = close_transitively(p.leq);
    return p;
}

Preorder right_preorder(ProductTable& table) {
    const Catalog& cat = table.catalog();
    const int s = cat.size();
    Preorder p;
    p.leq = reflexive(s);
    for (int x = 0; x < s; ++x)
        for (int z = 0; z < s; ++z)
            for (const auto& [l, m] : table.product(x, z).parts) p.leq[x][cat.index_of(l)] = 1;
    p.one_step_transitive = close_transitively(p.leq);
    return p;
}

Preorder two_sided_preorder(ProductTable& table) {
    Preorder l = left_preorder(table);
    Preorder r = right_preorder(table);
    Preorder j;
    j.leq = l.leq;
    const int s = static_cast<int>(j.leq.size());
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y)
            if (r.leq[x][y]) j.leq[x][y] = 1;
    j.one_step_transitive = close_transitively(j.leq);
    return j;
}

Preorder two_sided_preorder_direct(ProductTable& table) {
    const Catalog& cat = table.catalog();
    const int s = cat.size();
    Preorder p;
    p.leq = reflexive(s);
    for (int x = 0; x < s; ++x)
        for (int z1 = 0; z1 < s; ++z1) {
            GenericBimodule half = tensor(cat.realization(z1), cat.realization(x));
            for (int z2 = 0; z2 < s; ++z2) {
                GenericBimodule full = tensor(half, cat.realization(z2));
                if (full.total_dim() == 0) continue;
                for (const auto& [l, m] : decompose(full, cat).parts)
                    p.leq[x][cat.index_of(l)] = 1;
            }
        }
    p.one_step_transitive = close_transitively(p.leq);
    return p;
}

CellStructure expected_cells(const Catalog& cat) {
    const int n = cat.n();
    CellStructure cs;
    cs.n = n;

    auto idx = [&cat](Family f, int t, int i, int j) {
        return cat.index_of(t >= 0 ? make_label(f, t, i, j) : make_label(f, i, j));
    };

    // Two-sided chain: the split cell, then valley counts ascending (which
    // is descending in the J-order).
    std::vector<int> split_cell;
    for (int a = 0; a < cat.size(); ++a)
        if (cat.label(a).ksplit()) split_cell.push_back(a);
    cs.two_sided_cells.push_back(split_cell);
    cs.idempotent.push_back(true);
    for (int v = 0; v <= n - 1; ++v) {
        std::vector<int> cell;
        for (int a = 0; a < cat.size(); ++a)
            if (!cat.label(a).ksplit() && cat.label(a).t == v) cell.push_back(a);
        if (cell.empty()) continue;
        cs.two_sided_cells.push_back(cell);
        cs.idempotent.push_back(v != 0);
    }

    // Left cells fix the right-hand data: the right tensor factor for split
    // labels, the right support for staircases (W with S, M with N).
    for (int j = 1; j <= n; ++j) {  // right factor = j-th simple
        std::vector<int> cell;
        for (int i = 1; i <= n; ++i) cell.push_back(idx(Family::L, -1, i, j));
        for (int i = 1; i <= n - 1; ++i) cell.push_back(idx(Family::V, -1, i, j));
        cs.left_cells.push_back(cell);
    }
    for (int j = 1; j <= n - 1; ++j) {  // right factor = (j+1)-st projective
        std::vector<int> cell;
        for (int i = 1; i <= n; ++i) cell.push_back(idx(Family::H, -1, i, j));
        for (int i = 1; i <= n - 1; ++i) cell.push_back(idx(Family::PI, -1, i, j));
        cs.left_cells.push_back(cell);
    }
    for (int v = 1; v <= n - 1; ++v)
        for (int j = 1; j <= n - v; ++j) {
            std::vector<int> cell;
            for (int i = 1; i <= n - v; ++i) cell.push_back(idx(Family::W, v, i, j));
            if (v <= n - 2)
                for (int i = 1; i <= n - v - 1; ++i) cell.push_back(idx(Family::S, v, i, j));
            cs.left_cells.push_back(cell);
        }
    for (int v = 0; v <= n - 2; ++v)
        for (int j = 1; j <= n - v - 1; ++j) {
            std::vector<int> cell;
            for (int i = 1; i <= n - v - 1; ++i) cell.push_back(idx(Family::M, v, i, j));
            if (v >= 1)
                for (int i = 1; i <= n - v; ++i) cell.push_back(idx(Family::N, v, i, j));
            cs.left_cells.push_back(cell);
        }

    // Right cells mirror it with the left-hand data (W with N, M with S).
    for (int i = 1; i <= n; ++i) {  // left factor = i-th simple
        std::vector<int> cell;
        for (int j = 1; j <= n; ++j) cell.push_back(idx(Family::L, -1, i, j));
        for (int j = 1; j <= n - 1; ++j) cell.push_back(idx(Family::H, -1, i, j));
        cs.right_cells.push_back(cell);
    }
    for (int i = 1; i <= n - 1; ++i) {  // left factor = i-th projective
        std::vector<int> cell;
        for (int j = 1; j <= n; ++j) cell.push_back(idx(Family::V, -1, i, j));
        for (int j = 1; j <= n - 1; ++j) cell.push_back(idx(Family::PI, -1, i, j));
        cs.right_cells.push_back(cell);
    }
    for (int v = 1; v <= n - 1; ++v)
        for (int i = 1; i <= n - v; ++i) {
            std::vector<int> cell;
            for (int j = 1; j <= n - v; ++j) cell.push_back(idx(Family::W, v, i, j));
            if (v <= n - 2)
                for (int j = 1; j <= n - v - 1; ++j) cell.push_back(idx(Family::N, v, i, j));
            cs.right_cells.push_back(cell);
        }
    for (int v = 0; v <= n - 2; ++v)
        for (int i = 1; i <= n - v - 1; ++i) {
            std::vector<int> cell;
            for (int j = 1; j <= n - v - 1; ++j) cell.push_back(idx(Family::M, v, i, j));
            if (v >= 1)
                for (int j = 1; j <= n - v; ++j) cell.push_back(idx(Family::S, v, i, j));
            cs.right_cells.push_back(cell);
        }

    canonicalize(cs.left_cells);
    canonicalize(cs.right_cells);
    for (auto& c : cs.two_sided_cells) std::sort(c.begin(), c.end());
    return cs;
}

bool is_idempotent_cell(const std::vector<int>& cell, ProductTable& table) {
    const Catalog& cat = table.catalog();
    std::set<int> members(cell.begin(), cell.end());
    for (int g : cell)
        for (int h : cell)
            for (const auto& [l, m] : table.product(g, h).parts)
                if (members.count(cat.index_of(l))) return true;
    return false;
}

CellStructure cells(ProductTable& table) {
    const Catalog& cat = table.catalog();
    Preorder l = left_preorder(table);
    Preorder r = right_preorder(table);
    Preorder j = two_sided_preorder(table);

    CellStructure cs;
    cs.n = cat.n();
    cs.left_cells = classes_of(l.leq);
    cs.right_cells = classes_of(r.leq);
    canonicalize(cs.left_cells);
    canonicalize(cs.right_cells);
    cs.left_one_step_transitive = l.one_step_transitive;
    cs.right_one_step_transitive = r.one_step_transitive;

    CellStructure want = expected_cells(cat);
    if (cs.left_cells != want.left_cells)
        throw std::logic_error("cells: computed left cells contradict the predicted partition");
    if (cs.right_cells != want.right_cells)
        throw std::logic_error("cells: computed right cells contradict the predicted partition");

    // Two-sided classes must match the predicted chain as sets...
    std::vector<std::vector<int>> jclasses = classes_of(j.leq);
    canonicalize(jclasses);
    std::vector<std::vector<int>> want_sorted = want.two_sided_cells;
    canonicalize(want_sorted);
    if (jclasses != want_sorted)
        throw std::logic_error("cells: computed two-sided cells contradict the predicted partition");

    // ... and must be strictly linearly ordered along it: anything strictly
    // lower reaches everything above it and never conversely.
    const auto& chain = want.two_sided_cells;
    for (size_t a = 0; a < chain.size(); ++a)
        for (size_t b = a + 1; b < chain.size(); ++b)
            for (int x : chain[b])
                for (int y : chain[a]) {
                    if (!j.leq[x][y])
                        throw std::logic_error("cells: two-sided chain is not monotone");
                    if (j.leq[y][x])
                        throw std::logic_error("cells: two-sided chain collapses");
                }
    cs.two_sided_cells = chain;

    // Refinement of the two-sided partition by the one-sided ones.
    std::vector<int> jclass_of(cat.size(), -1);
    for (size_t c = 0; c < chain.size(); ++c)
        for (int x : chain[c]) jclass_of[x] = static_cast<int>(c);
    for (const auto& part : {cs.left_cells, cs.right_cells})
        for (const auto& cell : part)
            for (int x : cell)
                if (jclass_of[x] != jclass_of[cell[0]])
                    throw std::logic_error("cells: one-sided cell crosses a two-sided cell");

    // Inside each two-sided cell, every left cell meets every right cell in
    // exactly one label.
    for (const auto& lc : cs.left_cells)
        for (const auto& rc : cs.right_cells) {
            if (jclass_of[lc[0]] != jclass_of[rc[0]]) continue;
            std::vector<int> meet;
            std::set_intersection(lc.begin(), lc.end(), rc.begin(), rc.end(),
                                  std::back_inserter(meet));
            if (meet.size() != 1)
                throw std::logic_error("cells: left/right cells do not intersect in one label");
        }

    for (size_t c = 0; c < chain.size(); ++c) {
        bool idem = is_idempotent_cell(chain[c], table);
        if (idem != want.idempotent[c])
            throw std::logic_error("cells: idempotency pattern contradicts the prediction");
        cs.idempotent.push_back(idem);
    }
    return cs;
}

namespace {

std::string two_sided_key(const CellStructure& cs, const Catalog& cat, size_t c) {
    const IndecLabel& l = cat.label(cs.two_sided_cells[c][0]);
    if (l.ksplit()) return "split";
    return std::to_string(l.t);
}

}  // namespace

std::string export_cells_dot(const CellStructure& cs, const Catalog& cat) {
    // Right-cell index per label for the node annotations.
    std::vector<int> rcell(cat.size(), -1);
    for (size_t c = 0; c < cs.right_cells.size(); ++c)
        for (int x : cs.right_cells[c]) rcell[x] = static_cast<int>(c);

    std::ostringstream os;
    os << "digraph cell_structure {\n";
    os << "  rankdir=TB;\n  compound=true;\n  node [shape=box];\n";
    for (size_t c = 0; c < cs.two_sided_cells.size(); ++c) {
        os << "  subgraph cluster_ts" << c << " {\n";
        os << "    label=\"J_" << two_sided_key(cs, cat, c)
           << (cs.idempotent[c] ? " (idempotent)" : " (not idempotent)") << "\";\n";
        int sub = 0;
        for (const auto& lc : cs.left_cells) {
            if (std::find(cs.two_sided_cells[c].begin(), cs.two_sided_cells[c].end(), lc[0]) ==
                cs.two_sided_cells[c].end())
                continue;
            os << "    subgraph cluster_ts" << c << "_l" << sub++ << " {\n";
            os << "      label=\"left cell\";\n";
            for (int x : lc)
                os << "      \"" << cat.label(x).str() << "\" [label=\"" << cat.label(x).str()
                   << "\\nR" << rcell[x] << "\"];\n";
            os << "    }\n";
        }
        os << "  }\n";
    }
    for (size_t c = 0; c + 1 < cs.two_sided_cells.size(); ++c) {
        const std::string a = cat.label(cs.two_sided_cells[c][0]).str();
        const std::string b = cat.label(cs.two_sided_cells[c + 1][0]).str();
        os << "  \"" << a << "\" -> \"" << b << "\" [ltail=cluster_ts" << c << ", lhead=cluster_ts"
           << c + 1 << ", style=bold];\n";
    }
    os << "}\n";
    return os.str();
}

std::string cells_json(const CellStructure& cs, const Catalog& cat) {
    nlohmann::json two_sided = nlohmann::json::array();
    for (size_t c = 0; c < cs.two_sided_cells.size(); ++c) {
        nlohmann::json labels = nlohmann::json::array();
        for (int x : cs.two_sided_cells[c]) labels.push_back(cat.label(x).str());
        two_sided.push_back({{"key", two_sided_key(cs, cat, c)},
                             {"labels", labels},
                             {"idempotent", static_cast<bool>(cs.idempotent[c])}});
    }
    auto part_json = [&cat](const std::vector<std::vector<int>>& part) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& cell : part) {
            nlohmann::json labels = nlohmann::json::array();
            for (int x : cell) labels.push_back(cat.label(x).str());
            out.push_back(labels);
        }
        return out;
    };
    nlohmann::json doc = {{"n", cs.n},
                          {"two_sided", two_sided},
                          {"left_cells", part_json(cs.left_cells)},
                          {"right_cells", part_json(cs.right_cells)}};
    return doc.dump(1) + "\n";
}

}  // namespace anbim
