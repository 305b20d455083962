#pragma once

#include <string>
#include <vector>

#include "anbim/tensor.hpp"

namespace anbim {

// A preorder on catalog indices: leq[x][y] means y occurs in some product
// with x on the swept side, i.e. x is below y.
struct Preorder {
    std::vector<std::vector<char>> leq;
    // Whether the one-step relation was already transitive (the closure
    // changed nothing). A theorem for the one-sided preorders; recorded so
    // tests can assert it.
    bool one_step_transitive = true;
};

Preorder left_preorder(ProductTable& table);
Preorder right_preorder(ProductTable& table);

// Two-sided preorder as the transitive closure of (left union right);
// sound because a summand of Z1 (x) X (x) Z2 is a summand of Z1 (x) T for
// some summand T of X (x) Z2.
Preorder two_sided_preorder(ProductTable& table);

// Independent slow route: sweep both sides at once with explicit triple
// tensors. Exponentially many more tensor computations; intended for small n
// as a cross-check of the closure construction.
Preorder two_sided_preorder_direct(ProductTable& table);

struct CellStructure {
    int n = 0;
    // Partitions of {0..size-1} as sorted index lists; cells sorted by their
    // smallest member.
    std::vector<std::vector<int>> left_cells;
    std::vector<std::vector<int>> right_cells;
    // Two-sided cells in strictly descending order: the split cell first,
    // then valley counts 0..n-1.
    std::vector<std::vector<int>> two_sided_cells;
    std::vector<bool> idempotent;  // per two-sided cell
    bool left_one_step_transitive = true;
    bool right_one_step_transitive = true;
};

// The closed-form cell structure: split labels form the top two-sided cell,
// the rest split by valley count into a descending chain; left cells fix
// the right support (W/S together, M/N together, and split labels by their
// right tensor factor), right cells mirror this.
CellStructure expected_cells(const Catalog& cat);

// Computes the cell structure from tensor products and validates every
// structural theorem against expected_cells: partition equality, the
// strictly linear two-sided chain, refinement, singleton intersections of
// left and right cells inside each two-sided cell, one-step transitivity
// bookkeeping, and the idempotency pattern (all two-sided cells except
// valley count 0 contain a summand of a product of two of their members).
// Throws std::logic_error on any mismatch.
CellStructure cells(ProductTable& table);

bool is_idempotent_cell(const std::vector<int>& cell, ProductTable& table);

std::string export_cells_dot(const CellStructure& cs, const Catalog& cat);
std::string cells_json(const CellStructure& cs, const Catalog& cat);

}  // namespace anbim
