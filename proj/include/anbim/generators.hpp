#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "anbim/shiftrules.hpp"
#include "anbim/tensor.hpp"

namespace anbim {

// First discovery of a label during closure: the round it appeared in and
// the ordered product responsible (absent for seed members).
struct DiscoveryRecord {
    IndecLabel label;
    int round = 0;
    std::optional<std::pair<IndecLabel, IndecLabel>> via;
};

struct ClosureResult {
    std::set<IndecLabel> members;
    std::vector<DiscoveryRecord> discoveries;  // discovery order
    int rounds = 0;                            // rounds that added something

    bool full(const Catalog& cat) const {
        return static_cast<int>(members.size()) == cat.size();
    }
};

// Least set containing the seed and closed under taking summands of
// pairwise tensor products in both orders. Products of two outer-product
// labels use the closed pairing formula, products with a shift generator
// use the combinatorial rules, everything else the exact tensor.
ClosureResult closure(const std::set<IndecLabel>& seed, ProductTable& table);

// The four-element generating set: the regular bimodule and the three
// twisted truncations of it. Throws for n < 3.
std::set<IndecLabel> standard_generators(int n);

struct DropResult {
    IndecLabel dropped;
    std::set<IndecLabel> members;  // closure of the other three generators
    bool proper = false;           // misses part of the catalog
    bool shape_ok = false;         // missing families match the prediction
};

struct MinimalityReport {
    bool full_set_generates = false;
    std::vector<DropResult> drops;  // one per generator, in seed order

    bool minimal() const;  // every drop is proper with the predicted shape
};

MinimalityReport verify_minimality(ProductTable& table);

// JSON certificate: the seed, every first discovery with its witnessing
// product, and the four drop results.
std::string generators_json(ProductTable& table);

}  // namespace anbim
