#pragma once

#include <string>
#include <utility>

#include "anbim/tensor.hpp"

namespace anbim {

// The three non-identity tensor generators, all of corank one inside the
// regular bimodule. Each acts on diagrams by a pure translate-and-cut rule,
// so tensoring with them never needs linear algebra.
enum class GeneratorName { W21, N11, S12 };

std::string generator_name(GeneratorName g);
GeneratorName parse_generator(const std::string& s);

// Catalog label of a generator; requires n >= 3 (below that the shapes
// degenerate into split bimodules).
IndecLabel generator_label(GeneratorName g, int n);

// Diagram of g (x) X (side Left) or X (x) g (side Right).
//
// W21 translates the diagram one row down (left) or one column left (right)
// and drops whatever leaves the grid. N11 translates one row up (left,
// plain cut) or one column right (right, cutting the thick subgraph grown
// from the escaped vertices, and re-attaching one vertex west of the
// north-west corner when the original first column was two-dimensional).
// S12 is the mirror: one row up with a thick cut on the left (re-attaching
// south of the south-east corner when the original last row was
// two-dimensional), one column right with a plain cut on the right.
//
// N11 and S12 reject split inputs: the rules' hypotheses exclude them and
// the caller must use the exact tensor instead.
ActionGraph shift_W21(const ActionGraph& x, Side side);
ActionGraph shift_N11(const ActionGraph& x, Side side);
ActionGraph shift_S12(const ActionGraph& x, Side side);

// True when the shift rule for g applies to the label (always for W21,
// non-split only for N11/S12).
bool shift_applicable(GeneratorName g, const IndecLabel& x);

// Label-level product with a generator via the shift rules: classifies the
// components of the shifted diagram. Side Left computes g (x) X, side Right
// computes X (x) g.
Decomposition shift_tensor(GeneratorName g, Side side, const IndecLabel& x, const Catalog& cat);

// The left and right one-sided factors of a split label:
// L(i,j) = S_i (x) S_j, V(i,j) = Ae_i (x) S_j, H(i,j) = S_i (x) e_{j+1}A,
// PI(i,j) = Ae_i (x) e_{j+1}A. Throws on non-split labels.
std::pair<LeftModule, RightModule> ksplit_factors(const IndecLabel& l, int n);

// Product of two split labels without forming the tensor: (K1 (x) N1) times
// (K2 (x) N2) collapses to K1 (x) N2 with multiplicity dim(N1 (x)_A K2).
Decomposition ksplit_tensor(const IndecLabel& a, const IndecLabel& b, const Catalog& cat);

}  // namespace anbim
