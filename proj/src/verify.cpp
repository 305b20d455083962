#include "anbim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "anbim/adjunctions.hpp"
#include "anbim/cells.hpp"
#include "anbim/generators.hpp"
#include "anbim/shiftrules.hpp"

namespace anbim {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult run_check(const std::string& name,
                      const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    Clock::time_point t0 = Clock::now();
    try {
        r.detail = body();
        r.pass = true;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return r;
}

void require(bool cond, const std::string& message) {
    if (!cond) throw std::logic_error(message);
}

std::string check_catalog(const Catalog& cat) {
    require(cat.size() == count_formula(cat.n()), "catalog size differs from the closed form");
    for (int a = 0; a < cat.size(); ++a) {
        require(validate(cat.realization(a)), "a catalog realization fails validation");
        require(cat.identify(cat.realization(a)) == cat.label(a),
                "identification does not round-trip on " + cat.label(a).str());
    }
    return std::to_string(cat.size()) + " labels";
}

std::string check_supports(const Catalog& cat) {
    long products = 0;
    for (int a = 0; a < cat.size(); ++a)
        for (int b = 0; b < cat.size(); ++b) {
            SupportProfile pa = support_profile(cat.realization(a));
            SupportProfile pb = support_profile(cat.realization(b));
            SupportProfile pp = support_profile(tensor(cat.realization(a), cat.realization(b)));
            require(std::includes(pa.lsupp.begin(), pa.lsupp.end(), pp.lsupp.begin(),
                                  pp.lsupp.end()),
                    "left support escapes on " + cat.label(a).str() + " x " + cat.label(b).str());
            require(std::includes(pb.rsupp.begin(), pb.rsupp.end(), pp.rsupp.begin(),
                                  pp.rsupp.end()),
                    "right support escapes on " + cat.label(a).str() + " x " + cat.label(b).str());
            ++products;
        }
    return std::to_string(products) + " products";
}

std::string check_cells(ProductTable& table) {
    CellStructure cs = cells(table);  // throws on any structural mismatch
    std::ostringstream os;
    os << cs.two_sided_cells.size() << " two-sided, " << cs.left_cells.size() << " left, "
       << cs.right_cells.size() << " right cells";
    require(cs.left_one_step_transitive && cs.right_one_step_transitive,
            "one-sided preorders needed a closure step");
    return os.str();
}

std::string check_adjunctions(const Catalog& cat) {
    std::map<IndecLabel, Decomposition> computed, expected;
    for (const AdjunctionPair& p : all_adjoint_pairs(cat))
        if (!p.left.ksplit()) computed[p.left] = p.right;
    for (const AdjunctionPair& p : expected_nonsplit_pairs(cat)) expected[p.left] = p.right;
    require(computed == expected, "non-split adjoint pairs differ from the closed-form list");
    std::set<IndecLabel> classified;
    for (const auto& [l, r] : expected) classified.insert(l);
    for (const IndecLabel& l : cat.labels())
        if (!l.ksplit())
            require(is_left_projective(cat.realization(l)) == (classified.count(l) > 0),
                    "left projectivity contradicts the classification on " + l.str());
    return std::to_string(computed.size()) + " non-split pairs";
}

std::string check_generators(ProductTable& table) {
    const Catalog& cat = table.catalog();
    if (cat.n() < 3) return "requires rank >= 3; skipped";
    ClosureResult cr = closure(standard_generators(cat.n()), table);
    require(cr.full(cat), "the four generators do not reach the whole catalog");
    MinimalityReport rep = verify_minimality(table);
    require(rep.minimal(), "a three-element subset reaches too much of the catalog");
    return "closure in " + std::to_string(cr.rounds) + " rounds; 4 proper drops";
}

std::string check_shift_rules(const Catalog& cat) {
    if (cat.n() < 3) return "requires rank >= 3; skipped";
    long products = 0;
    for (const IndecLabel& x : cat.labels())
        for (GeneratorName g : {GeneratorName::W21, GeneratorName::N11, GeneratorName::S12}) {
            if (!shift_applicable(g, x)) continue;
            for (Side side : {Side::Left, Side::Right}) {
                const IndecLabel gl = generator_label(g, cat.n());
                Decomposition exact =
                    side == Side::Left ? tensor_decomposed(gl, x, cat)
                                       : tensor_decomposed(x, gl, cat);
                require(shift_tensor(g, side, x, cat) == exact,
                        "shift rule disagrees with the exact tensor on " + generator_name(g) +
                            (side == Side::Left ? " . " : " ' ") + x.str());
                ++products;
            }
        }
    return std::to_string(products) + " products";
}

std::string check_decomposition_routes(const Catalog& cat) {
    long products = 0;
    if (cat.n() <= 3) {
        for (int a = 0; a < cat.size(); ++a)
            for (int b = 0; b < cat.size(); ++b) {
                tensor_decomposed(cat.label(a), cat.label(b), cat, DecomposeMethod::Both);
                ++products;
            }
        return std::to_string(products) + " products, exhaustive";
    }
    std::mt19937 rng(602214u);
    std::uniform_int_distribution<int> pick(0, cat.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        tensor_decomposed(cat.label(pick(rng)), cat.label(pick(rng)), cat,
                          DecomposeMethod::Both);
        ++products;
    }
    return std::to_string(products) + " products, sampled";
}

}  // namespace

std::vector<CheckResult> verify_all(ProductTable& table) {
    const Catalog& cat = table.catalog();
    std::vector<CheckResult> out;
    out.push_back(run_check("catalog count and identification", [&] { return check_catalog(cat); }));
    out.push_back(run_check("tensor support containment", [&] { return check_supports(cat); }));
    out.push_back(run_check("cell partitions and chain", [&] { return check_cells(table); }));
    out.push_back(run_check("adjoint pair classification", [&] { return check_adjunctions(cat); }));
    out.push_back(run_check("generating set and minimality", [&] { return check_generators(table); }));
    out.push_back(run_check("shift rules vs exact tensor", [&] { return check_shift_rules(cat); }));
    out.push_back(
        run_check("decomposition route agreement", [&] { return check_decomposition_routes(cat); }));
    return out;
}

bool verify_ok(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

std::string verify_report(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    size_t width = 0;
    for (const CheckResult& r : results) width = std::max(width, r.name.size());
    for (const CheckResult& r : results) {
        os << r.name << std::string(width - r.name.size() + 2, ' ')
           << (r.pass ? "PASS" : "FAIL") << "  " << r.millis << " ms";
        if (!r.detail.empty()) os << "  (" << r.detail << ")";
        os << "\n";
    }
    os << (verify_ok(results) ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

}  // namespace anbim
