#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "anbim/ratmat.hpp"

namespace anbim {

// The base algebra A = A_n is the path algebra of the linearly oriented
// quiver 1 -> 2 -> ... -> n modulo all paths of length two. Its basis is
// e_1..e_n, a_1..a_{n-1} where a_i is the arrow i -> i+1. Products compose
// like functions: e_{i+1} a_i = a_i = a_i e_i, and a_j a_i = 0 always.
class AnAlgebra {
public:
    explicit AnAlgebra(int n);

    int n() const { return n_; }
    int dim() const { return 2 * n_ - 1; }

    // Basis indexing: 0..n-1 are e_1..e_n, n-1+i is a_i (1 <= i <= n-1).
    int idem(int i) const;
    int arrow(int i) const;
    bool is_idem(int b) const { return b < n_; }

    // Product of two basis elements; -1 encodes zero.
    int product(int a, int b) const;

    std::string basis_name(int b) const;

private:
    int n_;
};

// A finite-dimensional left A-module presented by its vertex grading:
// dims[i] for i = 1..n, with the action of a_i given as a map from the
// degree-i piece to the degree-(i+1) piece.
struct LeftModule {
    int n = 0;
    std::vector<int> dims;      // index 1..n (slot 0 unused)
    std::vector<RatMat> maps;   // maps[i]: piece i -> piece i+1, for i = 1..n-1

    int total_dim() const;
    bool valid() const;  // consecutive maps compose to zero
};

// A right A-module: dims[j] for j = 1..n, with the action of a_j mapping the
// degree-(j+1) piece to the degree-j piece.
struct RightModule {
    int n = 0;
    std::vector<int> dims;
    std::vector<RatMat> maps;   // maps[j]: piece j+1 -> piece j, for j = 1..n-1

    int total_dim() const;
    bool valid() const;
};

LeftModule left_simple(int n, int i);
LeftModule left_projective(int n, int i);      // A e_i
RightModule right_simple(int n, int j);
RightModule right_projective(int n, int j);    // e_j A

// The quiver of the enveloping algebra A (x) A^op: the n x n grid with one
// vertex i|j per pair, horizontal arrows (i|j+1) -> (i|j), vertical arrows
// (i|j) -> (i+1|j), two consecutive horizontals or verticals zero, and every
// unit square commuting.
struct GridVertex {
    int i = 0;  // row, 1-based
    int j = 0;  // column, 1-based

    auto operator<=>(const GridVertex&) const = default;
};

struct GridArrow {
    GridVertex from;
    GridVertex to;

    bool vertical() const { return from.j == to.j; }
    auto operator<=>(const GridArrow&) const = default;
};

struct GridQuiver {
    int n = 0;
    std::vector<GridVertex> vertices;
    std::vector<GridArrow> arrows;
};

GridQuiver grid_quiver(int n);

// A maximal string for the grid algebra: a maximal walk whose every vertex is
// a source or a sink of the walk (the associated string algebra kills all
// length-two compositions, so letters strictly alternate).
struct MaximalString {
    std::vector<GridVertex> vertices;  // in walk order
    std::vector<GridArrow> edges;      // edges[k] joins vertices[k], vertices[k+1]

    int length() const { return static_cast<int>(vertices.size()); }
};

std::vector<MaximalString> maximal_strings(int n);

// Number of string modules: every connected substring of a maximal string
// supports one, and a string with k vertices has k(k+1)/2 substrings. All
// grid vertices except the two extreme corners 1|1 and n|n lie on exactly two
// maximal strings, so their singleton substrings are counted twice.
long string_module_count(int n);

}  // namespace anbim
