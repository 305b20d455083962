#pragma once

#include <string>
#include <vector>

#include "anbim/tensor.hpp"

namespace anbim {

struct CheckResult {
    std::string name;
    bool pass = false;
    long millis = 0;
    std::string detail;
};

// Runs every theorem check at the table's rank: catalog count and label
// identification, tensor support containment, cell partitions with their
// chain and idempotency pattern, adjoint-pair classification, generating-set
// closure with minimality (rank >= 3), shift rules against the exact tensor
// (rank >= 3), and agreement of the two decomposition routes (exhaustive
// through rank 3, sampled above).
std::vector<CheckResult> verify_all(ProductTable& table);

bool verify_ok(const std::vector<CheckResult>& results);

// Fixed-width pass/fail matrix, one row per check.
std::string verify_report(const std::vector<CheckResult>& results);

}  // namespace anbim
