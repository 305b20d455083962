#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <random>

#include "anbim/generators.hpp"

using namespace anbim;

TEST_CASE("the four standard generators reach the whole catalog") {
    for (int n = 3; n <= 4; ++n) {
        Catalog cat(n);
        ProductTable table(cat);
        ClosureResult cr = closure(standard_generators(n), table);
        CHECK(cr.full(cat));
        CHECK(cr.discoveries.size() == static_cast<size_t>(cat.size()));
        // seed entries carry round 0 and no witnessing product
        for (const DiscoveryRecord& r : cr.discoveries) {
            CHECK((r.round == 0) == !r.via.has_value());
            CHECK((r.round == 0) == (standard_generators(n).count(r.label) > 0));
        }
    }
}

TEST_CASE("closure of nothing is nothing and the catalog is already closed") {
    Catalog cat(3);
    ProductTable table(cat);
    CHECK(closure({}, table).members.empty());
    std::set<IndecLabel> all(cat.labels().begin(), cat.labels().end());
    ClosureResult cr = closure(all, table);
    CHECK(cr.members == all);
    CHECK(cr.rounds == 0);
}

TEST_CASE("closure is monotone in the seed") {
    Catalog cat(3);
    ProductTable table(cat);
    std::mt19937 rng(55501);
    std::uniform_int_distribution<int> pick(0, cat.size() - 1);
    for (int trial = 0; trial < 6; ++trial) {
        std::set<IndecLabel> small, large;
        for (int k = 0; k < 3; ++k) small.insert(cat.label(pick(rng)));
        large = small;
        for (int k = 0; k < 2; ++k) large.insert(cat.label(pick(rng)));
        std::set<IndecLabel> cs = closure(small, table).members;
        std::set<IndecLabel> cl = closure(large, table).members;
        CHECK(std::includes(cl.begin(), cl.end(), cs.begin(), cs.end()));
    }
}

TEST_CASE("the elbow generator appears by the second round") {
    for (int n = 3; n <= 5; ++n) {
        Catalog cat(n);
        ProductTable table(cat);
        ClosureResult cr = closure(standard_generators(n), table);
        IndecLabel elbow = make_label(Family::M, n - 2, 1, 1);
        bool seen = false;
        for (const DiscoveryRecord& r : cr.discoveries)
            if (r.label == elbow) {
                seen = true;
                CHECK(r.round <= 2);
            }
        CHECK(seen);
    }
}

TEST_CASE("every three-element subset falls short in the predicted way") {
    for (int n = 3; n <= 4; ++n) {
        Catalog cat(n);
        ProductTable table(cat);
        MinimalityReport rep = verify_minimality(table);
        CHECK(rep.full_set_generates);
        CHECK(rep.minimal());
        REQUIRE(rep.drops.size() == 4);
        const IndecLabel identity = make_label(Family::W, n - 1, 1, 1);
        for (const DropResult& d : rep.drops) {
            CHECK(d.proper);
            CHECK(d.shape_ok);
            if (d.dropped == identity) {
                CHECK_FALSE(d.members.count(identity));
            } else if (d.dropped == generator_label(GeneratorName::W21, n)) {
                CHECK_FALSE(d.members.count(d.dropped));
            } else if (d.dropped == generator_label(GeneratorName::N11, n)) {
                for (const IndecLabel& l : d.members) {
                    CHECK(l.fam != Family::N);
                    CHECK(l.fam != Family::M);
                }
            } else {
                REQUIRE(d.dropped == generator_label(GeneratorName::S12, n));
                for (const IndecLabel& l : d.members) {
                    CHECK(l.fam != Family::S);
                    CHECK(l.fam != Family::M);
                }
            }
        }
    }
}

TEST_CASE("closure routes agree with the exact product table") {
    // The closure drives products through the pairing formula and the shift
    // rules wherever they apply; replaying the discovery certificate against
    // the exact tensor validates every witnessing product.
    Catalog cat(4);
    ProductTable table(cat);
    ClosureResult cr = closure(standard_generators(4), table);
    for (const DiscoveryRecord& r : cr.discoveries) {
        if (!r.via) continue;
        Decomposition exact = tensor_decomposed(r.via->first, r.via->second, cat);
        CHECK(exact.parts.count(r.label));
    }
}

TEST_CASE("generator sets below the threshold rank are rejected") {
    CHECK_THROWS_AS(standard_generators(2), std::invalid_argument);
}

TEST_CASE("the json certificate records rounds, witnesses, and drops") {
    Catalog cat(3);
    ProductTable table(cat);
    auto doc = nlohmann::json::parse(generators_json(table));
    CHECK(doc["n"] == 3);
    CHECK(doc["generates_all"] == true);
    CHECK(doc["catalog_size"] == 39);
    CHECK(doc["discoveries"].size() == 39);
    CHECK(doc["seed"].size() == 4);
    CHECK(doc["rounds"].get<int>() >= 2);
    int seeded = 0;
    for (const auto& e : doc["discoveries"]) {
        if (e["via"].is_null())
            ++seeded;
        else
            CHECK(e["via"].size() == 2);
    }
    CHECK(seeded == 4);
    CHECK(doc["minimality"]["minimal"] == true);
    REQUIRE(doc["minimality"]["drops"].size() == 4);
    for (const auto& d : doc["minimality"]["drops"]) {
        CHECK(d["proper"] == true);
        CHECK(d["shape_ok"] == true);
        CHECK(d["closure_size"].get<int>() + d["missing_count"].get<int>() == 39);
    }
    CHECK(generators_json(table) == generators_json(table));  // deterministic
}
