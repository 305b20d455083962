#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anbim/tensor.hpp"

namespace anbim {

// An adjoint pair of tensor endofunctors: the left factor is projective as a
// left module and the partner is its module dual Hom(left factor, A) with
// the induced bimodule structure.
struct AdjunctionPair {
    IndecLabel left;
    Decomposition right;      // the partner; a single label unless decomposable
    bool ksplit = false;      // left factor is an outer product
    bool classified = false;  // member of the closed-form non-split list

    bool right_indecomposable() const;
    IndecLabel right_label() const;  // throws when the partner is decomposable
};

// Partner of one label, or nothing when its realization is not left
// projective.
std::optional<AdjunctionPair> adjoint_partner(const IndecLabel& x, const Catalog& cat);

// Every adjoint pair, in catalog order of the left factor.
std::vector<AdjunctionPair> all_adjoint_pairs(const Catalog& cat);

// The closed-form list of non-split pairs: the regular bimodule with itself,
// the bottom-row staircases W(t,n-t,j) with their N-duals, and the S-family
// with W-duals (first row) or N-duals (lower rows).
std::vector<AdjunctionPair> expected_nonsplit_pairs(const Catalog& cat);

// Checks dim Hom(X ⊗ Z, Z') == dim Hom(Z, Y ⊗ Z') over `samples` random
// catalog pairs (Z, Z'); false on the first violation.
bool check_adjunction_dims(const AdjunctionPair& pair, const Catalog& cat, int samples,
                           unsigned seed);

// Report of all pairs with flags, plus the non-split pairs falling outside
// the closed-form classification (and classified labels that fail the
// projectivity criterion, which would contradict it).
std::string adjunctions_json(const Catalog& cat);

}  // namespace anbim
