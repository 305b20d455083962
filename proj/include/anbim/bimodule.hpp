#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anbim/algebra.hpp"
#include "anbim/ratmat.hpp"

namespace anbim {

// A finite-dimensional A-A-bimodule X in terms of its Peirce grading
// X_{i,j} = e_i X e_j. Left multiplication by a_i maps X_{i,j} to X_{i+1,j}
// (one row down); right multiplication by a_j maps X_{i,j+1} to X_{i,j} (one
// column left). Two consecutive left or right arrow maps compose to zero and
// each unit square commutes; validate() checks exactly that.
class GenericBimodule {
public:
    GenericBimodule() : n_(0) {}
    explicit GenericBimodule(int n);

    static GenericBimodule zero(int n) { return GenericBimodule(n); }

    int n() const { return n_; }

    int dim(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) return 0;
        return dims_[idx(i, j)];
    }
    void set_dim(int i, int j, int d);

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    // left_map(i, j): X_{i,j} -> X_{i+1,j}, valid for 1 <= i <= n-1.
    RatMat& left_map(int i, int j);
    const RatMat& left_map(int i, int j) const;

    // right_map(i, j): X_{i,j+1} -> X_{i,j}, valid for 1 <= j <= n-1.
    RatMat& right_map(int i, int j);
    const RatMat& right_map(int i, int j) const;

    // Reshape all action matrices to match the current dims (zero-filled).
    void shape_maps();

    bool all_integer_actions() const;

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * (n_ + 1) + j; }

    int n_;
    std::vector<int> dims_;
    std::vector<RatMat> left_;
    std::vector<RatMat> right_;
};

bool validate(const GenericBimodule& x);
std::vector<std::string> validate_diagnostics(const GenericBimodule& x);

GenericBimodule direct_sum(const GenericBimodule& x, const GenericBimodule& y);

// A as a bimodule over itself: e_i at position (i, i), a_i at (i+1, i).
GenericBimodule regular_bimodule(int n);

// Outer tensor product over the ground field of a left and a right module.
GenericBimodule outer_product(const LeftModule& k, const RightModule& m);

LeftModule column_left_module(const GenericBimodule& x, int p);
RightModule row_right_module(const GenericBimodule& x, int i);

struct SupportProfile {
    std::vector<int> lsupp;  // rows with a nonzero graded piece, ascending
    std::vector<int> rsupp;  // columns likewise
    int height = 0;          // max(lsupp) - min(lsupp) + 1, 0 when empty
    int width = 0;
    std::optional<int> valleys;  // only known for realizations of string graphs
};

SupportProfile support_profile(const GenericBimodule& x);

enum class Side { Left, Right };

// Grading twist along the outer automorphism direction: Phi re-indexes the
// chosen side by +1 (rows move down / columns move right), Psi by -1. What
// falls off the grid is truncated; the result is the tensor product of X
// with the corresponding twisted projective bimodule.
enum class TwistKind { Phi, Psi };

GenericBimodule twist(const GenericBimodule& x, Side side, TwistKind kind);

// True iff X restricted to a left module is projective, tested by comparing
// dim X with the dimension of the projective cover of X / rad_left X.
bool is_left_projective(const GenericBimodule& x);

// A bimodule homomorphism X -> Y as one block per grid vertex.
struct BlockMap {
    int n = 0;
    std::vector<RatMat> blocks;  // (n+1)^2 slots, entry (i,j) at i*(n+1)+j

    RatMat& block(int i, int j) { return blocks[static_cast<size_t>(i) * (n + 1) + j]; }
    const RatMat& block(int i, int j) const { return blocks[static_cast<size_t>(i) * (n + 1) + j]; }
};

BlockMap zero_block_map(const GenericBimodule& x, const GenericBimodule& y);
BlockMap compose(const BlockMap& g, const BlockMap& f);  // g after f

int hom_dim(const GenericBimodule& x, const GenericBimodule& y);
std::vector<BlockMap> hom_basis(const GenericBimodule& x, const GenericBimodule& y);

// Kernel of an endomorphism e of X as a sub-bimodule with induced action.
// Requires e to commute with the action (any BlockMap solving the hom system
// does) and ker(e) to be action-stable, which holds whenever e is idempotent.
GenericBimodule kernel_sub_bimodule(const GenericBimodule& x, const BlockMap& e);

// Hom over left A-module maps between two left modules; returns a basis,
// one RatMat per row degree.
std::vector<std::vector<RatMat>> hom_left_modules(const LeftModule& x, const LeftModule& y);

// Hom_A(X, A) of left A-module maps into the regular module, carrying the
// bimodule structure (a f b)(x) = f(x a) b. The grading piece at (p, q) is
// Hom_A(X e_p, A e_q).
GenericBimodule left_hom_to_A(const GenericBimodule& x);

}  // namespace anbim
