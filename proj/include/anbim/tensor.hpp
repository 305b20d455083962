#pragma once

#include <map>
#include <string>
#include <utility>

#include "anbim/catalog.hpp"

namespace anbim {

// Tensor product over A: forms the middle space (+)_i X e_i (x) e_i Y in
// every Peirce degree, quotients by x.a_j (x) y - x (x) a_j.y as an exact
// cokernel, and carries the left action of X and the right action of Y
// through chosen representatives.
GenericBimodule tensor(const GenericBimodule& x, const GenericBimodule& y);

// dim(N (x)_A K) for one-sided data, same cokernel construction.
int module_pairing(const RightModule& nmod, const LeftModule& kmod);

struct Decomposition {
    std::map<IndecLabel, long> parts;  // multiplicities, all >= 1

    bool operator==(const Decomposition&) const = default;

    long total_multiplicity() const;
    long total_dim(const Catalog& cat) const;
    void add(const IndecLabel& l, long mult = 1);
    std::string str() const;  // "0" when empty, else "a + 2*b + ..."
};

enum class DecomposeMethod { Fingerprint, Splitting, Both };

// Krull-Schmidt decomposition of X against the catalog. The fingerprint
// route solves H m = h(X) and cross-checks graded dimensions, falling back
// to idempotent splitting when the solve fails; the splitting route peels
// off one summand at a time via a nonzero composition Z -> X -> Z. With
// Both, the two must agree exactly or a logic_error is thrown.
Decomposition decompose(const GenericBimodule& x, const Catalog& cat,
                        DecomposeMethod method = DecomposeMethod::Fingerprint);

Decomposition tensor_decomposed(const IndecLabel& a, const IndecLabel& b, const Catalog& cat,
                                DecomposeMethod method = DecomposeMethod::Fingerprint);

// Memoized pairwise products of catalog labels with optional JSON
// persistence keyed by n and the catalog content hash.
class ProductTable {
public:
    explicit ProductTable(const Catalog& cat) : cat_(cat) {}

    const Catalog& catalog() const { return cat_; }

    const Decomposition& product(int a, int b);
    const Decomposition& product(const IndecLabel& a, const IndecLabel& b);

    size_t computed() const { return table_.size(); }

    // Returns false (and loads nothing) when the file is missing or was
    // written for a different n / catalog ordering.
    bool load(const std::string& path);
    void save(const std::string& path) const;

private:
    const Catalog& cat_;
    std::map<std::pair<int, int>, Decomposition> table_;
};

}  // namespace anbim
