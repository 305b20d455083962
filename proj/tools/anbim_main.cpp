#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "anbim/adjunctions.hpp"
#include "anbim/cells.hpp"
#include "anbim/generators.hpp"
#include "anbim/shiftrules.hpp"
#include "anbim/verify.hpp"

namespace {

using namespace anbim;

// Writes to the requested file, or stdout when no path was given.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + out_path);
    os << text;
}

std::filesystem::path cache_file(const std::string& cache_dir, const Catalog& cat) {
    return std::filesystem::path(cache_dir) /
           ("products_n" + std::to_string(cat.n()) + "_" + cat.content_hash() + ".json");
}

// Product table with the on-disk cache attached when enabled.
class CachedTable {
public:
    CachedTable(const Catalog& cat, const std::string& cache_dir, bool no_cache)
        : table_(cat), cache_dir_(no_cache ? "" : cache_dir) {
        if (!cache_dir_.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(cache_dir_, ec);
            if (!ec) table_.load(cache_file(cache_dir_, cat).string());
        }
        loaded_ = static_cast<long>(table_.computed());
    }
    ~CachedTable() {
        if (cache_dir_.empty() || table_.computed() == loaded_) return;
        try {
            table_.save(cache_file(cache_dir_, table_.catalog()).string());
        } catch (...) {
            // failing to persist the cache must not affect the exit status
        }
    }
    ProductTable& operator*() { return table_; }

private:
    ProductTable table_;
    long loaded_ = 0;
    std::string cache_dir_;
};

std::string catalog_json(const Catalog& cat) {
    nlohmann::json labels = nlohmann::json::array();
    for (int a = 0; a < cat.size(); ++a) {
        const IndecLabel& l = cat.label(a);
        SupportProfile sp = support_profile(cat.realization(a));
        nlohmann::json e;
        e["kind"] = family_name(l.fam);
        if (family_has_t(l.fam)) e["t"] = l.t;
        e["i"] = l.i;
        e["j"] = l.j;
        e["dim"] = cat.realization(a).total_dim();
        e["lsupp"] = sp.lsupp;
        e["rsupp"] = sp.rsupp;
        e["valleys"] = graph_valleys(cat.graph(a));
        labels.push_back(e);
    }
    nlohmann::json doc = {{"n", cat.n()}, {"labels", labels}};
    return doc.dump(1) + "\n";
}

std::string catalog_table(const Catalog& cat) {
    std::ostringstream os;
    os << std::left << std::setw(10) << "label" << std::setw(5) << "dim" << std::setw(12)
       << "lsupp" << std::setw(12) << "rsupp" << "valleys\n";
    auto range = [](const std::vector<int>& v) {
        if (v.empty()) return std::string("-");
        if (v.size() == 1) return std::to_string(v.front());
        return std::to_string(v.front()) + ".." + std::to_string(v.back());
    };
    for (int a = 0; a < cat.size(); ++a) {
        SupportProfile sp = support_profile(cat.realization(a));
        os << std::left << std::setw(10) << cat.label(a).str() << std::setw(5)
           << cat.realization(a).total_dim() << std::setw(12) << range(sp.lsupp) << std::setw(12)
           << range(sp.rsupp) << graph_valleys(cat.graph(a)) << "\n";
    }
    os << cat.size() << " labels; closed form gives " << count_formula(cat.n()) << "\n";
    if (cat.size() != count_formula(cat.n())) throw std::logic_error("catalog count mismatch");
    return os.str();
}

int cmd_catalog(int n, const std::string& format, const std::string& out) {
    Catalog cat(n);
    emit(format == "json" ? catalog_json(cat) : catalog_table(cat), out);
    return 0;
}

int cmd_tensor(int n, const std::string& left, const std::string& right,
               const std::string& method, const std::string& format, const std::string& out) {
    Catalog cat(n);
    IndecLabel a = parse_label(left);
    IndecLabel b = parse_label(right);
    if (!label_valid(a, n)) throw std::invalid_argument("label out of range: " + left);
    if (!label_valid(b, n)) throw std::invalid_argument("label out of range: " + right);

    auto rules_product = [&]() -> Decomposition {
        const IndecLabel identity = n >= 2 ? make_label(Family::W, n - 1, 1, 1)
                                           : make_label(Family::L, 1, 1);
        Decomposition d;
        if (a == identity) {
            d.add(b);
            return d;
        }
        if (b == identity) {
            d.add(a);
            return d;
        }
        if (n >= 3)
            for (GeneratorName g :
                 {GeneratorName::W21, GeneratorName::N11, GeneratorName::S12}) {
                if (a == generator_label(g, n) && shift_applicable(g, b))
                    return shift_tensor(g, Side::Left, b, cat);
                if (b == generator_label(g, n) && shift_applicable(g, a))
                    return shift_tensor(g, Side::Right, a, cat);
            }
        if (a.ksplit() && b.ksplit()) return ksplit_tensor(a, b, cat);
        throw std::invalid_argument(
            "the combinatorial rules need a generator, identity, or two outer-product factors");
    };

    Decomposition result;
    if (method == "rules") {
        result = rules_product();
    } else if (method == "both") {
        result = tensor_decomposed(a, b, cat, DecomposeMethod::Both);
        Decomposition by_rules = rules_product();
        if (by_rules != result)
            throw std::logic_error("rules give " + by_rules.str() + ", exact tensor gives " +
                                   result.str());
    } else {
        result = tensor_decomposed(a, b, cat);
    }

    std::ostringstream os;
    if (format == "json") {
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& [l, m] : result.parts)
            parts.push_back({{"label", l.str()}, {"multiplicity", m}});
        nlohmann::json doc = {
            {"n", n}, {"left", a.str()}, {"right", b.str()}, {"parts", parts}};
        os << doc.dump(1) << "\n";
    } else {
        os << a.str() << " (x) " << b.str() << " = ";
        if (result.parts.empty()) {
            os << "0\n";
        } else {
            bool first = true;
            for (const auto& [l, m] : result.parts) {
                if (!first) os << " + ";
                os << l.str() << " x" << m;
                first = false;
            }
            os << "\n";
        }
    }
    emit(os.str(), out);
    return 0;
}

int cmd_cells(int n, const std::string& dot, const std::string& out,
              const std::string& cache_dir, bool no_cache) {
    Catalog cat(n);
    CachedTable table(cat, cache_dir, no_cache);
    CellStructure cs = cells(*table);
    emit(cells_json(cs, cat), out);
    if (!dot.empty()) {
        std::ofstream os(dot, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open dot file: " + dot);
        os << export_cells_dot(cs, cat);
    }
    return 0;
}

int cmd_adjunctions(int n, const std::string& out) {
    Catalog cat(n);
    std::string report = adjunctions_json(cat);
    auto doc = nlohmann::json::parse(report);
    emit(report, out);
    return doc["unlisted_nonsplit"].empty() && doc["missing_classified"].empty() ? 0 : 1;
}

int cmd_generators(int n, bool verify_minimal, const std::string& out,
                   const std::string& cache_dir, bool no_cache) {
    Catalog cat(n);  // n >= 3 enforced by standard_generators below
    CachedTable table(cat, cache_dir, no_cache);
    ClosureResult cr = closure(standard_generators(n), *table);
    bool ok = cr.full(cat);
    if (verify_minimal) ok = ok && verify_minimality(*table).minimal();
    emit(generators_json(*table), out);
    return ok ? 0 : 1;
}

int cmd_verify_all(int n, const std::string& out, const std::string& cache_dir, bool no_cache) {
    Catalog cat(n);
    CachedTable table(cat, cache_dir, no_cache);
    std::vector<CheckResult> results = verify_all(*table);
    emit(verify_report(results), out);
    return verify_ok(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Indecomposable bimodules over the radical-square-zero path algebra of the "
                 "uniformly oriented A_n quiver: catalog, tensor decompositions, cell "
                 "structure, adjoint pairs, and generating-set certificates"};
    app.require_subcommand(1);

    int n = 3;
    std::string format = "table";
    std::string method = "oracle";
    std::string out, dot;
    std::string cache_dir;
    if (const char* env = std::getenv("ANBIM_CACHE_DIR")) cache_dir = env;
    bool no_cache = false;
    bool verify_minimal = false;
    int jobs = 1;
    std::string left, right;

    auto add_common = [&](CLI::App* cmd, int min_n) {
        cmd->add_option("--n", n, "rank of the quiver")->required()->check(CLI::Range(min_n, 64));
        cmd->add_option("--out", out, "write output to this file instead of stdout");
        cmd->add_option("--jobs", jobs, "worker cap (all current sweeps are single-threaded)")
            ->check(CLI::PositiveNumber);
    };
    auto add_cache = [&](CLI::App* cmd) {
        cmd->add_option("--cache-dir", cache_dir,
                        "directory for product-table caches (env ANBIM_CACHE_DIR)");
        cmd->add_flag("--no-cache", no_cache, "recompute everything, touch no cache");
    };

    CLI::App* c_catalog = app.add_subcommand("catalog", "list the indecomposable bimodules");
    add_common(c_catalog, 1);
    c_catalog->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    CLI::App* c_tensor = app.add_subcommand("tensor", "decompose one tensor product");
    add_common(c_tensor, 1);
    c_tensor->add_option("--left", left, "left factor label")->required();
    c_tensor->add_option("--right", right, "right factor label")->required();
    c_tensor->add_option("--method", method, "oracle, rules, or both")
        ->check(CLI::IsMember({"oracle", "rules", "both"}));
    c_tensor->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    CLI::App* c_cells = app.add_subcommand("cells", "compute and validate the cell structure");
    add_common(c_cells, 1);
    add_cache(c_cells);
    c_cells->add_option("--dot", dot, "also write the cell diagram to this dot file");

    CLI::App* c_adj = app.add_subcommand("adjunctions", "list all adjoint pairs");
    add_common(c_adj, 1);

    CLI::App* c_gen =
        app.add_subcommand("generators", "closure certificate for the four-element set");
    add_common(c_gen, 3);
    add_cache(c_gen);
    c_gen->add_flag("--verify-minimal", verify_minimal,
                    "also check that every three-element subset falls short");

    CLI::App* c_verify = app.add_subcommand("verify-all", "run every theorem check");
    add_common(c_verify, 1);
    add_cache(c_verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_catalog)) return cmd_catalog(n, format, out);
        if (app.got_subcommand(c_tensor)) return cmd_tensor(n, left, right, method, format, out);
        if (app.got_subcommand(c_cells)) return cmd_cells(n, dot, out, cache_dir, no_cache);
        if (app.got_subcommand(c_adj)) return cmd_adjunctions(n, out);
        if (app.got_subcommand(c_gen))
            return cmd_generators(n, verify_minimal, out, cache_dir, no_cache);
        if (app.got_subcommand(c_verify)) return cmd_verify_all(n, out, cache_dir, no_cache);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
