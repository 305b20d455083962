#include "anbim/generators.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace anbim {

namespace {

// Product of two catalog labels, dispatching to the cheapest valid route.
Decomposition closure_product(const IndecLabel& a, const IndecLabel& b, ProductTable& table) {
    const Catalog& cat = table.catalog();
    const int n = cat.n();
    const IndecLabel identity =
        n >= 2 ? make_label(Family::W, n - 1, 1, 1) : make_label(Family::L, 1, 1);
    if (a == identity) {
        Decomposition d;
        d.add(b);
        return d;
    }
    if (b == identity) {
        Decomposition d;
        d.add(a);
        return d;
    }
    if (a.ksplit() && b.ksplit()) return ksplit_tensor(a, b, cat);
    if (n >= 3) {
        for (GeneratorName g : {GeneratorName::W21, GeneratorName::N11, GeneratorName::S12}) {
            const IndecLabel gl = generator_label(g, n);
            if (a == gl && shift_applicable(g, b)) return shift_tensor(g, Side::Left, b, cat);
            if (b == gl && shift_applicable(g, a)) return shift_tensor(g, Side::Right, a, cat);
        }
    }
    return table.product(cat.index_of(a), cat.index_of(b));
}

}  // namespace

ClosureResult closure(const std::set<IndecLabel>& seed, ProductTable& table) {
    ClosureResult res;
    std::map<IndecLabel, int> round_of;
    for (const IndecLabel& l : seed) {
        res.members.insert(l);
        res.discoveries.push_back({l, 0, std::nullopt});
        round_of[l] = 0;
    }
    for (int round = 1; !res.members.empty(); ++round) {
        // Process every ordered pair with at least one factor from the
        // previous round, in canonical label order for a stable certificate.
        std::vector<IndecLabel> current(res.members.begin(), res.members.end());
        std::vector<DiscoveryRecord> found;
        for (const IndecLabel& a : current)
            for (const IndecLabel& b : current) {
                if (round_of[a] != round - 1 && round_of[b] != round - 1) continue;
                for (const auto& [l, m] : closure_product(a, b, table).parts)
                    if (!res.members.count(l) &&
                        std::none_of(found.begin(), found.end(),
                                     [&l](const DiscoveryRecord& r) { return r.label == l; }))
                        found.push_back({l, round, std::make_pair(a, b)});
            }
        if (found.empty()) break;
        for (const DiscoveryRecord& r : found) {
            res.members.insert(r.label);
            round_of[r.label] = round;
            res.discoveries.push_back(r);
        }
        res.rounds = round;
    }
    return res;
}

std::set<IndecLabel> standard_generators(int n) {
    return {make_label(Family::W, n - 1, 1, 1), generator_label(GeneratorName::W21, n),
            generator_label(GeneratorName::N11, n), generator_label(GeneratorName::S12, n)};
}

bool MinimalityReport::minimal() const {
    return !drops.empty() && std::all_of(drops.begin(), drops.end(), [](const DropResult& d) {
        return d.proper && d.shape_ok;
    });
}

MinimalityReport verify_minimality(ProductTable& table) {
    const Catalog& cat = table.catalog();
    const int n = cat.n();
    std::set<IndecLabel> seed = standard_generators(n);
    MinimalityReport rep;
    rep.full_set_generates = closure(seed, table).full(cat);

    const IndecLabel identity = make_label(Family::W, n - 1, 1, 1);
    for (const IndecLabel& dropped : seed) {
        std::set<IndecLabel> rest = seed;
        rest.erase(dropped);
        DropResult d;
        d.dropped = dropped;
        d.members = closure(rest, table).members;
        d.proper = static_cast<int>(d.members.size()) < cat.size();
        auto families_within = [&d](std::set<Family> allowed) {
            return std::all_of(d.members.begin(), d.members.end(),
                               [&allowed](const IndecLabel& l) { return allowed.count(l.fam); });
        };
        if (dropped == identity)
            d.shape_ok = !d.members.count(identity);
        else if (dropped == generator_label(GeneratorName::W21, n))
            d.shape_ok = !d.members.count(dropped);
        else if (dropped == generator_label(GeneratorName::N11, n))
            d.shape_ok = families_within({Family::L, Family::V, Family::H, Family::PI, Family::W,
                                          Family::S});
        else  // dropped the down-staircase generator
            d.shape_ok = families_within({Family::L, Family::V, Family::H, Family::PI, Family::W,
                                          Family::N});
        rep.drops.push_back(d);
    }
    return rep;
}

std::string generators_json(ProductTable& table) {
    const Catalog& cat = table.catalog();
    std::set<IndecLabel> seed = standard_generators(cat.n());
    ClosureResult cr = closure(seed, table);
    MinimalityReport rep = verify_minimality(table);

    nlohmann::json seed_arr = nlohmann::json::array();
    for (const IndecLabel& l : seed) seed_arr.push_back(l.str());
    nlohmann::json disc = nlohmann::json::array();
    for (const DiscoveryRecord& r : cr.discoveries) {
        nlohmann::json e = {{"label", r.label.str()}, {"round", r.round}};
        e["via"] = r.via ? nlohmann::json::array({r.via->first.str(), r.via->second.str()})
                         : nlohmann::json();
        disc.push_back(e);
    }
    nlohmann::json drops = nlohmann::json::array();
    for (const DropResult& d : rep.drops) {
        nlohmann::json members = nlohmann::json::array();
        for (const IndecLabel& l : d.members) members.push_back(l.str());
        drops.push_back({{"dropped", d.dropped.str()},
                         {"closure_size", d.members.size()},
                         {"missing_count", cat.size() - static_cast<int>(d.members.size())},
                         {"proper", d.proper},
                         {"shape_ok", d.shape_ok},
                         {"members", members}});
    }
    nlohmann::json doc = {{"n", cat.n()},
                          {"seed", seed_arr},
                          {"rounds", cr.rounds},
                          {"generates_all", cr.full(cat)},
                          {"catalog_size", cat.size()},
                          {"discoveries", disc},
                          {"minimality", {{"minimal", rep.minimal()}, {"drops", drops}}}};
    return doc.dump(1) + "\n";
}

}  // namespace anbim
