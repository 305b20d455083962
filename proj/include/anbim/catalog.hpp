#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anbim/bimodule.hpp"

namespace anbim {

// Families of indecomposable bimodules. The k-split ones (outer products of
// a left and a right module) are L, V, H, PI; the rest are the staircase
// string bimodules graded by their valley count t. Declaration order is the
// canonical sort order used everywhere.
enum class Family { L, V, H, PI, M, W, N, S };

std::string family_name(Family f);
bool family_has_t(Family f);

struct IndecLabel {
    Family fam = Family::L;
    int t = 0;  // valley count; meaningful for M/W/N/S only, 0 otherwise
    int i = 0;
    int j = 0;

    auto operator<=>(const IndecLabel&) const = default;

    bool ksplit() const { return !family_has_t(fam); }
    std::string str() const;
};

IndecLabel make_label(Family f, int i, int j);
IndecLabel make_label(Family f, int t, int i, int j);

// Grammar: "L,i,j" | "V,i,j" | "H,i,j" | "PI,i,j" | "W:t,i,j" | "M:t,i,j"
// | "N:t,i,j" | "S:t,i,j". Throws std::invalid_argument on anything else.
IndecLabel parse_label(const std::string& s);

bool label_valid(const IndecLabel& l, int n);

// Number of isomorphism classes of indecomposable bimodules.
long count_formula(int n);

// The diagram of a bimodule on the grid: one basis vector per listed vertex,
// vertical arrows for the left action, horizontal for the right, all with
// unit coefficient.
struct ActionGraph {
    int n = 0;
    std::vector<GridVertex> verts;   // sorted, no duplicates
    std::vector<GridArrow> arrows;   // sorted, endpoints listed in verts

    bool has_vertex(GridVertex v) const;
    void normalize();  // sort + dedupe, verify arrow endpoints
};

ActionGraph label_graph(const IndecLabel& l, int n);
GenericBimodule realize_graph(const ActionGraph& g);

std::vector<ActionGraph> graph_components(const ActionGraph& g);

int graph_valleys(const ActionGraph& g);  // vertices of indegree two

// Label of a connected action graph; throws std::invalid_argument if the
// graph is not one of the catalogued shapes.
IndecLabel classify_component(const ActionGraph& g);

// The anti-involution swapping the two actions: vertex i|j goes to
// (n+1-j)|(n+1-i), vertical and horizontal arrows trade places.
ActionGraph reflect_graph(const ActionGraph& g);

class Catalog {
public:
    explicit Catalog(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(labels_.size()); }

    const std::vector<IndecLabel>& labels() const { return labels_; }
    const IndecLabel& label(int idx) const { return labels_.at(idx); }
    int index_of(const IndecLabel& l) const;  // throws if unknown

    const ActionGraph& graph(int idx) const { return graphs_.at(idx); }
    const GenericBimodule& realization(int idx) const { return reals_.at(idx); }
    const GenericBimodule& realization(const IndecLabel& l) const {
        return reals_.at(index_of(l));
    }

    IndecLabel involution(const IndecLabel& l) const;

    // h[a] = dim Hom(Z_a, X); the ground truth for identification.
    std::vector<int> fingerprint(const GenericBimodule& x) const;

    // Label whose fingerprint column matches X's; X must be indecomposable.
    IndecLabel identify(const GenericBimodule& x) const;

    // Multiplicities m with H m = h, or nullopt if they are not all
    // nonnegative integers.
    std::optional<std::vector<long>> solve_fingerprint(const std::vector<int>& h) const;

    // Pairwise hom dimension matrix H[a][b] = dim Hom(Z_a, Z_b). Built on
    // first use; construction asserts unit diagonal and invertibility.
    const std::vector<std::vector<int>>& hom_matrix() const;

    // Stable content hash used to key on-disk product caches.
    std::string content_hash() const;

private:
    void ensure_hom_data() const;

    int n_;
    std::vector<IndecLabel> labels_;
    std::map<IndecLabel, int> index_;
    std::vector<ActionGraph> graphs_;
    std::vector<GenericBimodule> reals_;

    mutable std::vector<std::vector<int>> hom_;
    mutable RatMat hom_inv_;
    mutable bool hom_ready_ = false;
};

}  // namespace anbim
