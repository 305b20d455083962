#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "anbim/cells.hpp"
#include "anbim/tensor.hpp"

using namespace anbim;

namespace {

std::set<std::set<IndecLabel>> as_label_sets(const std::vector<std::vector<int>>& part,
                                             const Catalog& cat) {
    std::set<std::set<IndecLabel>> out;
    for (const auto& cell : part) {
        std::set<IndecLabel> s;
        for (int x : cell) s.insert(cat.label(x));
        out.insert(s);
    }
    return out;
}

}  // namespace

TEST_CASE("the two-sided order is a chain with the split cell on top") {
    for (int n = 2; n <= 4; ++n) {
        Catalog cat(n);
        ProductTable table(cat);
        CellStructure cs = cells(table);  // throws on any structural mismatch
        CHECK(cs.n == n);
        // split cell, then one cell per valley count 0..n-1
        CHECK(cs.two_sided_cells.size() == static_cast<size_t>(n + 1));
        CHECK(cat.label(cs.two_sided_cells[0][0]).ksplit());
        for (int v = 0; v <= n - 1; ++v) {
            for (int x : cs.two_sided_cells[v + 1]) {
                CHECK_FALSE(cat.label(x).ksplit());
                CHECK(cat.label(x).t == v);
            }
        }
        // the bottom cell is the regular bimodule alone
        const auto& bottom = cs.two_sided_cells.back();
        REQUIRE(bottom.size() == 1);
        CHECK(cat.label(bottom[0]) == make_label(Family::W, n - 1, 1, 1));
        // every cell except the zero-valley one is idempotent
        for (size_t c = 0; c < cs.idempotent.size(); ++c)
            CHECK(cs.idempotent[c] == (c != 1));
    }
}

TEST_CASE("three two-sided cells appear at n=2") {
    Catalog cat(2);
    ProductTable table(cat);
    CellStructure cs = cells(table);
    REQUIRE(cs.two_sided_cells.size() == 3);
    CHECK(cs.two_sided_cells[0].size() == 9);   // all split labels
    CHECK(cs.two_sided_cells[1].size() == 1);   // the elbow M:0,1,1
    CHECK(cs.two_sided_cells[2].size() == 1);   // the regular bimodule W:1,1,1
    CHECK(cat.label(cs.two_sided_cells[1][0]) == make_label(Family::M, 0, 1, 1));
    CHECK(cs.left_cells.size() == 5);   // three split cells, the M cell, the W cell
    CHECK(cs.right_cells.size() == 5);
}

TEST_CASE("one tensor step already generates the transitive preorders") {
    for (int n = 2; n <= 4; ++n) {
        Catalog cat(n);
        ProductTable table(cat);
        CHECK(left_preorder(table).one_step_transitive);
        CHECK(right_preorder(table).one_step_transitive);
    }
    // A sandwich of a sandwich is again a sandwich, so the direct two-sided
    // relation needs no closure either.
    Catalog cat(2);
    ProductTable table(cat);
    CHECK(two_sided_preorder_direct(table).one_step_transitive);
}

TEST_CASE("a staircase and its truncation share a left cell") {
    Catalog cat(3);
    ProductTable table(cat);
    Preorder l = left_preorder(table);
    int w11 = cat.index_of(make_label(Family::W, 1, 1, 1));
    int w21 = cat.index_of(make_label(Family::W, 1, 2, 1));
    int s11 = cat.index_of(make_label(Family::S, 1, 1, 1));
    int w12 = cat.index_of(make_label(Family::W, 1, 1, 2));
    CHECK((l.leq[w11][w21] && l.leq[w21][w11]));
    CHECK((l.leq[w11][s11] && l.leq[s11][w11]));
    // a different right support is a different left cell
    CHECK_FALSE((l.leq[w11][w12] && l.leq[w12][w11]));
}

TEST_CASE("the involution carries the left preorder to the right preorder") {
    for (int n = 2; n <= 4; ++n) {
        Catalog cat(n);
        ProductTable table(cat);
        Preorder l = left_preorder(table);
        Preorder r = right_preorder(table);
        for (int x = 0; x < cat.size(); ++x)
            for (int y = 0; y < cat.size(); ++y) {
                int ix = cat.index_of(cat.involution(cat.label(x)));
                int iy = cat.index_of(cat.involution(cat.label(y)));
                CHECK(l.leq[x][y] == r.leq[ix][iy]);
            }
    }
}

TEST_CASE("sandwich products land exactly in the closed two-sided preorder") {
    // Full direct check at n=2; the sandwich relation must coincide with the
    // transitive closure of the one-sided union.
    {
        Catalog cat(2);
        ProductTable table(cat);
        CHECK(two_sided_preorder_direct(table).leq == two_sided_preorder(table).leq);
    }
    // Sampled consistency at n=3: every sampled sandwich summand is related,
    // and every related pair is witnessed by some sandwich with Z2 = A.
    {
        Catalog cat(3);
        ProductTable table(cat);
        Preorder j = two_sided_preorder(table);
        std::mt19937 rng(271828);
        std::uniform_int_distribution<int> pick(0, cat.size() - 1);
        for (int trial = 0; trial < 500; ++trial) {
            int x = pick(rng), z1 = pick(rng), z2 = pick(rng);
            GenericBimodule prod =
                tensor(tensor(cat.realization(z1), cat.realization(x)), cat.realization(z2));
            if (prod.total_dim() == 0) continue;
            for (const auto& [l, m] : decompose(prod, cat).parts)
                CHECK(j.leq[x][cat.index_of(l)]);
        }
    }
}

TEST_CASE("left and right cells meet in a single label inside each two-sided cell") {
    for (int n = 2; n <= 4; ++n) {
        Catalog cat(n);
        ProductTable table(cat);
        CellStructure cs = cells(table);
        std::vector<int> jclass(cat.size(), -1);
        for (size_t c = 0; c < cs.two_sided_cells.size(); ++c)
            for (int x : cs.two_sided_cells[c]) jclass[x] = static_cast<int>(c);
        long pairs_checked = 0;
        for (const auto& lc : cs.left_cells)
            for (const auto& rc : cs.right_cells) {
                if (jclass[lc[0]] != jclass[rc[0]]) continue;
                std::vector<int> meet;
                std::set_intersection(lc.begin(), lc.end(), rc.begin(), rc.end(),
                                      std::back_inserter(meet));
                CHECK(meet.size() == 1);
                ++pairs_checked;
            }
        CHECK(pairs_checked > 0);
        // consistency: the cells constructor performed the same check
    }
}

TEST_CASE("the predicted partitions match the computed ones label by label") {
    for (int n = 1; n <= 4; ++n) {
        Catalog cat(n);
        ProductTable table(cat);
        CellStructure computed = cells(table);
        CellStructure predicted = expected_cells(cat);
        CHECK(as_label_sets(computed.left_cells, cat) == as_label_sets(predicted.left_cells, cat));
        CHECK(as_label_sets(computed.right_cells, cat) ==
              as_label_sets(predicted.right_cells, cat));
        CHECK(computed.two_sided_cells == predicted.two_sided_cells);
    }
}

TEST_CASE("only the zero-valley cell fails to be idempotent") {
    Catalog cat(3);
    ProductTable table(cat);
    CellStructure cs = cells(table);
    REQUIRE(cs.two_sided_cells.size() == 4);
    CHECK(is_idempotent_cell(cs.two_sided_cells[0], table));        // split
    CHECK_FALSE(is_idempotent_cell(cs.two_sided_cells[1], table));  // valley 0
    CHECK(is_idempotent_cell(cs.two_sided_cells[2], table));        // valley 1
    CHECK(is_idempotent_cell(cs.two_sided_cells[3], table));        // valley 2
}

TEST_CASE("the single label at n=1 forms one split cell") {
    Catalog cat(1);
    ProductTable table(cat);
    CellStructure cs = cells(table);
    REQUIRE(cs.two_sided_cells.size() == 1);
    CHECK(cs.two_sided_cells[0] == std::vector<int>{0});
    CHECK(cs.idempotent[0]);
    std::string dot = export_cells_dot(cs, cat);
    CHECK(dot.find("\"L,1,1\"") != std::string::npos);
    CHECK(dot.find("->") == std::string::npos);  // no chain edges
}

TEST_CASE("the dot export nests left cells inside the two-sided chain") {
    Catalog cat(2);
    ProductTable table(cat);
    CellStructure cs = cells(table);
    std::string dot = export_cells_dot(cs, cat);
    CHECK(dot.rfind("digraph cell_structure {", 0) == 0);
    CHECK(dot.find("subgraph cluster_ts0") != std::string::npos);
    CHECK(dot.find("subgraph cluster_ts2") != std::string::npos);
    CHECK(dot.find("J_split (idempotent)") != std::string::npos);
    CHECK(dot.find("J_0 (not idempotent)") != std::string::npos);
    CHECK(dot.find("J_1 (idempotent)") != std::string::npos);
    // two chain edges for three cells
    CHECK(std::count(dot.begin(), dot.end(), '>') == 2);
    // every label is annotated with its right cell
    CHECK(dot.find("M:0,1,1\\nR") != std::string::npos);
    // deterministic output
    CHECK(dot == export_cells_dot(cs, cat));
}

TEST_CASE("the json export lists the chain with its idempotency flags") {
    Catalog cat(2);
    ProductTable table(cat);
    CellStructure cs = cells(table);
    std::string txt = cells_json(cs, cat);
    auto doc = nlohmann::json::parse(txt);
    CHECK(doc["n"] == 2);
    REQUIRE(doc["two_sided"].size() == 3);
    CHECK(doc["two_sided"][0]["key"] == "split");
    CHECK(doc["two_sided"][0]["idempotent"] == true);
    CHECK(doc["two_sided"][1]["key"] == "0");
    CHECK(doc["two_sided"][1]["idempotent"] == false);
    CHECK(doc["two_sided"][2]["key"] == "1");
    CHECK(doc["two_sided"][2]["labels"] == nlohmann::json::array({"W:1,1,1"}));
    CHECK(doc["left_cells"].size() == 5);
    CHECK(doc["right_cells"].size() == 5);
}
