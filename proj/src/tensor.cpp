#include "anbim/tensor.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace anbim {

namespace {

// Cokernel of a relation span inside a middle space: pi maps middle
// coordinates onto quotient coordinates, sigma picks the free-column
// representatives (pi * sigma = id).
struct Cokernel {
    int middle_dim = 0;
    int quot_dim = 0;
    RatMat pi;     // quot_dim x middle_dim
    RatMat sigma;  // middle_dim x quot_dim
};

Cokernel cokernel_of(RatMat relations) {
    Cokernel ck;
    ck.middle_dim = relations.cols();
    std::vector<int> pivots = relations.rref();
    std::vector<bool> is_pivot(ck.middle_dim, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<int> free_cols;
    for (int c = 0; c < ck.middle_dim; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    ck.quot_dim = static_cast<int>(free_cols.size());
    ck.pi = RatMat(ck.quot_dim, ck.middle_dim);
    ck.sigma = RatMat(ck.middle_dim, ck.quot_dim);
    for (int k = 0; k < ck.quot_dim; ++k) {
        ck.pi.at(k, free_cols[k]) = 1;
        ck.sigma.at(free_cols[k], k) = 1;
    }
    // A pivot column equals minus the free part of its rref row in the
    // quotient, so its image under pi is read off from that row.
    for (size_t r = 0; r < pivots.size(); ++r) {
        for (int k = 0; k < ck.quot_dim; ++k) {
            Rat coef = relations.at(static_cast<int>(r), free_cols[k]);
            if (coef != 0) ck.pi.at(k, pivots[r]) = -coef;
        }
    }
    return ck;
}

}  // namespace

GenericBimodule tensor(const GenericBimodule& x, const GenericBimodule& y) {
    if (x.n() != y.n()) throw std::invalid_argument("tensor: mismatched n");
    const int n = x.n();
    GenericBimodule out(n);

    // One cokernel per grid vertex. The middle space at (p, q) is the direct
    // sum over i of X_{p,i} (x) Y_{i,q}, the summand for i starting at
    // off[i]; basis order inside a summand is u * dimY + v.
    std::vector<Cokernel> cok(static_cast<size_t>(n + 1) * (n + 1));
    std::vector<std::vector<int>> off(static_cast<size_t>(n + 1) * (n + 1));
    auto slot = [n](int p, int q) { return static_cast<size_t>(p) * (n + 1) + q; };

    for (int p = 1; p <= n; ++p) {
        for (int q = 1; q <= n; ++q) {
            std::vector<int>& o = off[slot(p, q)];
            o.assign(n + 2, 0);
            for (int i = 1; i <= n; ++i) o[i + 1] = o[i] + x.dim(p, i) * y.dim(i, q);
            const int middle = o[n + 1];

            int rel_rows = 0;
            for (int j = 1; j <= n - 1; ++j) rel_rows += x.dim(p, j + 1) * y.dim(j, q);

            RatMat rel(rel_rows, middle);
            int row = 0;
            for (int j = 1; j <= n - 1; ++j) {
                const int dxu = x.dim(p, j + 1);
                const int dyv = y.dim(j, q);
                if (dxu == 0 || dyv == 0) continue;
                const RatMat& rx = x.right_map(p, j);   // X_{p,j+1} -> X_{p,j}
                const RatMat& ly = y.left_map(j, q);    // Y_{j,q} -> Y_{j+1,q}
                for (int u = 0; u < dxu; ++u) {
                    for (int v = 0; v < dyv; ++v, ++row) {
                        for (int u2 = 0; u2 < x.dim(p, j); ++u2)
                            rel.at(row, o[j] + u2 * dyv + v) = rx.at(u2, u);
                        for (int v2 = 0; v2 < y.dim(j + 1, q); ++v2)
                            rel.at(row, o[j + 1] + u * y.dim(j + 1, q) + v2) -= ly.at(v2, v);
                    }
                }
            }
            cok[slot(p, q)] = cokernel_of(std::move(rel));
            out.set_dim(p, q, cok[slot(p, q)].quot_dim);
        }
    }
    out.shape_maps();

    // Induced actions: lift a quotient basis vector to the middle space,
    // apply the action of X (left) or Y (right) summand by summand, project
    // back down. Relations map into relations, so the result is independent
    // of the chosen representatives.
    for (int p = 1; p <= n; ++p) {
        for (int q = 1; q <= n; ++q) {
            if (p <= n - 1 && out.dim(p, q) > 0 && out.dim(p + 1, q) > 0) {
                const std::vector<int>& os = off[slot(p, q)];
                const std::vector<int>& ot = off[slot(p + 1, q)];
                RatMat mid(ot[n + 1], os[n + 1]);
                for (int i = 1; i <= n; ++i) {
                    const int dyv = y.dim(i, q);
                    if (x.dim(p, i) == 0 || dyv == 0 || x.dim(p + 1, i) == 0) continue;
                    const RatMat& lx = x.left_map(p, i);
                    for (int u2 = 0; u2 < x.dim(p + 1, i); ++u2)
                        for (int u = 0; u < x.dim(p, i); ++u)
                            for (int v = 0; v < dyv; ++v)
                                mid.at(ot[i] + u2 * dyv + v, os[i] + u * dyv + v) = lx.at(u2, u);
                }
                out.left_map(p, q) =
                    cok[slot(p + 1, q)].pi.mul(mid).mul(cok[slot(p, q)].sigma);
            }
            if (q <= n - 1 && out.dim(p, q + 1) > 0 && out.dim(p, q) > 0) {
                const std::vector<int>& os = off[slot(p, q + 1)];
                const std::vector<int>& ot = off[slot(p, q)];
                RatMat mid(ot[n + 1], os[n + 1]);
                for (int i = 1; i <= n; ++i) {
                    const int dxu = x.dim(p, i);
                    if (dxu == 0 || y.dim(i, q + 1) == 0 || y.dim(i, q) == 0) continue;
                    const RatMat& ry = y.right_map(i, q);  // Y_{i,q+1} -> Y_{i,q}
                    for (int u = 0; u < dxu; ++u)
                        for (int v2 = 0; v2 < y.dim(i, q); ++v2)
                            for (int v = 0; v < y.dim(i, q + 1); ++v)
                                mid.at(ot[i] + u * y.dim(i, q) + v2, os[i] + u * y.dim(i, q + 1) + v) =
                                    ry.at(v2, v);
                }
                out.right_map(p, q) =
                    cok[slot(p, q)].pi.mul(mid).mul(cok[slot(p, q + 1)].sigma);
            }
        }
    }

    if (!validate(out)) throw std::logic_error("tensor: result fails bimodule axioms");

    // The product's support can only shrink: rows come from X, columns
    // from Y.
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q)
            if (out.dim(p, q) > 0) {
                bool row_ok = false, col_ok = false;
                for (int i = 1; i <= n && !row_ok; ++i) row_ok = x.dim(p, i) > 0;
                for (int i = 1; i <= n && !col_ok; ++i) col_ok = y.dim(i, q) > 0;
                if (!row_ok || !col_ok)
                    throw std::logic_error("tensor: support escaped the factors");
            }

    return out;
}

int module_pairing(const RightModule& nmod, const LeftModule& kmod) {
    if (nmod.n != kmod.n) throw std::invalid_argument("module_pairing: mismatched n");
    const int n = nmod.n;

    std::vector<int> off(n + 2, 0);
    for (int i = 1; i <= n; ++i) off[i + 1] = off[i] + nmod.dims[i] * kmod.dims[i];
    const int middle = off[n + 1];

    int rel_rows = 0;
    for (int j = 1; j <= n - 1; ++j) rel_rows += nmod.dims[j + 1] * kmod.dims[j];

    RatMat rel(rel_rows, middle);
    int row = 0;
    for (int j = 1; j <= n - 1; ++j) {
        const int du = nmod.dims[j + 1];
        const int dv = kmod.dims[j];
        if (du == 0 || dv == 0) continue;
        const RatMat& rn = nmod.maps[j];  // N_{j+1} -> N_j
        const RatMat& lk = kmod.maps[j];  // K_j -> K_{j+1}
        for (int u = 0; u < du; ++u) {
            for (int v = 0; v < dv; ++v, ++row) {
                for (int u2 = 0; u2 < nmod.dims[j]; ++u2)
                    rel.at(row, off[j] + u2 * dv + v) = rn.at(u2, u);
                for (int v2 = 0; v2 < kmod.dims[j + 1]; ++v2)
                    rel.at(row, off[j + 1] + u * kmod.dims[j + 1] + v2) -= lk.at(v2, v);
            }
        }
    }
    return middle - rel.rank();
}

long Decomposition::total_multiplicity() const {
    long s = 0;
    for (const auto& [l, m] : parts) s += m;
    return s;
}

long Decomposition::total_dim(const Catalog& cat) const {
    long s = 0;
    for (const auto& [l, m] : parts) s += m * cat.realization(l).total_dim();
    return s;
}

void Decomposition::add(const IndecLabel& l, long mult) {
    if (mult == 0) return;
    long& slot = parts[l];
    slot += mult;
    if (slot == 0) parts.erase(l);
}

std::string Decomposition::str() const {
    if (parts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, m] : parts) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m << "*";
        os << l.str();
    }
    return os.str();
}

namespace {

bool dims_reconcile(const std::vector<long>& mult, const GenericBimodule& x, const Catalog& cat) {
    const int n = cat.n();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            long want = x.dim(i, j);
            for (int a = 0; a < cat.size(); ++a)
                if (mult[a] != 0) want -= mult[a] * cat.realization(a).dim(i, j);
            if (want != 0) return false;
        }
    }
    return true;
}

// Read the scalar of an endomorphism of an indecomposable catalog
// realization; all its graded pieces are one-dimensional, so any block on
// the support carries it.
Rat endo_scalar(const BlockMap& e, const GenericBimodule& z) {
    for (int i = 1; i <= z.n(); ++i)
        for (int j = 1; j <= z.n(); ++j)
            if (z.dim(i, j) > 0) return e.block(i, j).at(0, 0);
    return 0;
}

Decomposition splitting_decompose(const GenericBimodule& x, const Catalog& cat) {
    Decomposition out;
    GenericBimodule work = x;
    while (work.total_dim() > 0) {
        bool peeled = false;
        for (int a = 0; a < cat.size() && !peeled; ++a) {
            const GenericBimodule& z = cat.realization(a);
            if (z.total_dim() > work.total_dim()) continue;
            bool fits = true;
            for (int i = 1; i <= cat.n() && fits; ++i)
                for (int j = 1; j <= cat.n() && fits; ++j)
                    if (z.dim(i, j) > work.dim(i, j)) fits = false;
            if (!fits) continue;
            if (hom_dim(z, work) == 0 || hom_dim(work, z) == 0) continue;

            // Z is a summand iff some composition Z -> work -> Z is nonzero
            // (it is then an isomorphism since End(Z) is the ground field).
            std::vector<BlockMap> fs = hom_basis(z, work);
            std::vector<BlockMap> gs = hom_basis(work, z);
            for (const BlockMap& f : fs) {
                for (const BlockMap& g : gs) {
                    Rat lambda = endo_scalar(compose(g, f), z);
                    if (lambda == 0) continue;
                    BlockMap idem = compose(f, g);
                    Rat inv = 1 / lambda;
                    for (RatMat& b : idem.blocks) b = b.scale(inv);
                    work = kernel_sub_bimodule(work, idem);
                    out.add(cat.label(a));
                    peeled = true;
                    break;
                }
                if (peeled) break;
            }
        }
        if (!peeled)
            throw std::logic_error(
                "decompose: nonzero remainder admits no catalog summand");
    }
    return out;
}

Decomposition fingerprint_decompose(const GenericBimodule& x, const Catalog& cat,
                                    bool* ok = nullptr) {
    if (ok) *ok = true;
    std::vector<int> h = cat.fingerprint(x);
    std::optional<std::vector<long>> mult = cat.solve_fingerprint(h);
    if (mult && dims_reconcile(*mult, x, cat)) {
        Decomposition out;
        for (int a = 0; a < cat.size(); ++a)
            if ((*mult)[a] != 0) out.add(cat.label(a), (*mult)[a]);
        return out;
    }
    if (ok) {
        *ok = false;
        return {};
    }
    return splitting_decompose(x, cat);
}

}  // namespace

Decomposition decompose(const GenericBimodule& x, const Catalog& cat, DecomposeMethod method) {
    if (x.n() != cat.n()) throw std::invalid_argument("decompose: mismatched n");
    if (x.total_dim() == 0) return {};
    switch (method) {
        case DecomposeMethod::Fingerprint:
            return fingerprint_decompose(x, cat);
        case DecomposeMethod::Splitting:
            return splitting_decompose(x, cat);
        case DecomposeMethod::Both: {
            bool fp_ok = false;
            Decomposition a = fingerprint_decompose(x, cat, &fp_ok);
            Decomposition b = splitting_decompose(x, cat);
            if (!fp_ok)
                throw std::logic_error("decompose: fingerprint route failed outright");
            if (!(a == b))
                throw std::logic_error("decompose: fingerprint and splitting disagree: " +
                                       a.str() + " vs " + b.str());
            return a;
        }
    }
    throw std::logic_error("decompose: unknown method");
}

Decomposition tensor_decomposed(const IndecLabel& a, const IndecLabel& b, const Catalog& cat,
                                DecomposeMethod method) {
    GenericBimodule prod = tensor(cat.realization(a), cat.realization(b));
    if (prod.total_dim() == 0) return {};
    return decompose(prod, cat, method);
}

const Decomposition& ProductTable::product(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    Decomposition d = tensor_decomposed(cat_.label(a), cat_.label(b), cat_);
    return table_.emplace(key, std::move(d)).first->second;
}

const Decomposition& ProductTable::product(const IndecLabel& a, const IndecLabel& b) {
    return product(cat_.index_of(a), cat_.index_of(b));
}

bool ProductTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        return false;
    }
    if (!doc.is_object() || doc.value("n", -1) != cat_.n() ||
        doc.value("catalog_hash", std::string()) != cat_.content_hash())
        return false;
    if (!doc.contains("products") || !doc["products"].is_object()) return false;

    std::map<std::pair<int, int>, Decomposition> loaded;
    try {
        for (const auto& [key, val] : doc["products"].items()) {
            size_t bar = key.find('|');
            if (bar == std::string::npos) return false;
            int a = cat_.index_of(parse_label(key.substr(0, bar)));
            int b = cat_.index_of(parse_label(key.substr(bar + 1)));
            Decomposition d;
            for (const auto& entry : val) {
                IndecLabel l = parse_label(entry.at(0).get<std::string>());
                long m = entry.at(1).get<long>();
                if (m <= 0) return false;
                cat_.index_of(l);
                d.add(l, m);
            }
            loaded[{a, b}] = std::move(d);
        }
    } catch (const std::exception&) {
        return false;
    }
    for (auto& [k, v] : loaded) table_[k] = std::move(v);
    return true;
}

void ProductTable::save(const std::string& path) const {
    nlohmann::json products = nlohmann::json::object();
    for (const auto& [key, dec] : table_) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& [l, m] : dec.parts)
            entries.push_back({l.str(), m});
        products[cat_.label(key.first).str() + "|" + cat_.label(key.second).str()] = entries;
    }
    nlohmann::json doc = {
        {"n", cat_.n()},
        {"catalog_hash", cat_.content_hash()},
        {"products", products},
    };
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write product cache: " + path);
    out << doc.dump(1) << "\n";
}

}  // namespace anbim
