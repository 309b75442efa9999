// Command-line driver: list tableaux, compute and cache psi, run verification suites.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.

#include "hcs/algebra/element_json.hpp"
#include "hcs/fusion/fusion.hpp"
#include "hcs/fusion/psi_cache.hpp"
#include "hcs/verify/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace hcs;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& v, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

StrictPartition shape_arg(const std::string& text) {
    try {
        return parse_strict_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid shape '") + text + "': " + e.what());
    }
}

ShiftedTableau select_tableau(const StrictPartition& shape, const std::string& which, int index) {
    if (which == "row") return row_tableau(shape);
    if (which == "column") return column_tableau(shape);
    const auto all = enumerate_standard(shape);
    if (index < 0 || index >= static_cast<int>(all.size()))
        throw UsageError("tableau index " + std::to_string(index) + " out of range 0.." + std::to_string(all.size() - 1));
    return all[static_cast<std::size_t>(index)];
}

Json tableau_json(const ShiftedTableau& t) {
    Json j = t.to_json();
    j["w"] = w_of(t).images();
    j["s"] = s_of(t).images();
    const auto words = reduced_words(t);
    j["w_word"] = words.w;
    j["s_word"] = words.s;
    return j;
}

void print_tableau(std::ostream& os, const std::string& title, const ShiftedTableau& t) {
    const auto words = reduced_words(t);
    os << title << "\n" << t.render() << "\n";
    os << "  w = " << w_of(t).to_string() << "  word [" << join(words.w) << "]\n";
    os << "  s = " << s_of(t).to_string() << "  word [" << join(words.s) << "]\n";
}

int cmd_tableaux(int n, const std::string& shape_text, const std::string& which, bool json) {
    if (shape_text.empty()) {
        if (n < 1) throw UsageError("give --n or --shape");
        Json rows = Json::array();
        for (const auto& s : enumerate_strict_partitions(n)) {
            const auto m = enumerate_standard(s).size();
            if (json)
                rows.push_back({{"shape", s.parts()}, {"m", m}});
            else
                std::cout << s.to_string() << "  m = " << m << "\n";
        }
        if (json) std::cout << Json{{"n", n}, {"shapes", rows}}.dump(2) << "\n";
        return kOk;
    }
    const StrictPartition shape = shape_arg(shape_text);
    if (n > 0 && n != shape.n()) throw UsageError("--n does not match the size of --shape");
    const auto all = enumerate_standard(shape);
    if (json) {
        Json j{{"shape", shape.parts()}, {"m", all.size()}};
        if (which == "row" || which == "all") j["row"] = tableau_json(row_tableau(shape));
        if (which == "column" || which == "all") j["column"] = tableau_json(column_tableau(shape));
        if (which == "all") {
            Json ts = Json::array();
            for (const auto& t : all) ts.push_back(tableau_json(t));
            j["standard"] = std::move(ts);
        }
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << shape.to_string() << "  m = " << all.size() << "\n";
    if (which == "row" || which == "all") print_tableau(std::cout, "row tableau", row_tableau(shape));
    if (which == "column" || which == "all") print_tableau(std::cout, "column tableau", column_tableau(shape));
    if (which == "all")
        for (std::size_t i = 0; i < all.size(); ++i) print_tableau(std::cout, "standard tableau " + std::to_string(i), all[i]);
    return kOk;
}

int cmd_psi(const std::string& shape_text, const std::string& which, int index, const std::string& cache_dir,
            bool dump, bool json, bool force) {
    const StrictPartition shape = shape_arg(shape_text);
    if (shape.n() > kDeskBound && !force)
        throw UsageError("n = " + std::to_string(shape.n()) + " exceeds the desk bound " + std::to_string(kDeskBound) +
                         "; pass --force");
    const ShiftedTableau t = select_tableau(shape, which, index);
    std::optional<PsiCache> cache = cache_dir.empty() ? PsiCache::from_env() : std::optional<PsiCache>(PsiCache(cache_dir));

    std::optional<AlgebraElement> psi;
    bool cached = false;
    if (cache) {
        psi = cache->load(t);
        cached = psi.has_value();
    }
    if (!psi) {
        FusionEngine engine(shape);
        psi = engine.psi(t);
        if (cache) cache->store(t, *psi);
    }
    const Permutation w = w_of(t);
    const TowerScalar lead = psi->coeff(w, 0);
    if (json) {
        Json j{{"shape", shape.parts()}, {"tableau", t.to_json()}, {"terms", psi->size()},
               {"leading", {{"perm", w.images()}, {"coeff", lead.to_string()}, {"length", w.length()}}},
               {"max_length", psi->max_length()}, {"cached", cached}};
        if (cache) j["cache_file"] = cache->path_for(t).string();
        if (dump) j["psi"] = to_json(*psi);
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << "shape " << shape.to_string() << ", tableau " << t.key() << "\n" << t.render() << "\n";
    std::cout << "terms " << psi->size() << ", max length " << psi->max_length() << "\n";
    std::cout << "leading term T_" << w.to_string() << " (length " << w.length() << ") coefficient " << lead.to_string() << "\n";
    if (cache) std::cout << (cached ? "loaded from " : "stored to ") << cache->path_for(t).string() << "\n";
    if (dump) std::cout << to_json(*psi).dump() << "\n";
    return kOk;
}

int cmd_verify(const std::string& suite, int n, const SuiteOptions& opts, bool json) {
    if (!is_suite(suite)) {
        std::ostringstream os;
        os << "unknown suite '" << suite << "'; known:";
        for (const auto& s : suite_names()) os << " " << s;
        throw UsageError(os.str());
    }
    Report r;
    try {
        r = run_suite(suite, n, opts);
    } catch (const DeskScaleError& e) {
        throw UsageError(e.what());
    }
    if (json)
        std::cout << r.to_json().dump(2) << "\n";
    else
        std::cout << r.to_text();
    return r.passed() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke-Clifford superalgebra: tableaux, fusion and verification"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    int n = 0;
    std::string shape, which = "all", cache_dir, suite;
    int index = 0;
    bool dump = false, force = false;
    SuiteOptions opts;

    auto* tab = app.add_subcommand("tableaux", "List strict partitions or the tableaux of a shape");
    tab->add_option("--n", n, "Size");
    tab->add_option("--shape", shape, "Strict partition, e.g. 4,3,1");
    tab->add_option("--which", which, "Tableaux to show")->check(CLI::IsMember({"row", "column", "all"}));

    auto* psi = app.add_subcommand("psi", "Compute psi at a tableau (cached under $HCS_CACHE_DIR)");
    psi->add_option("--shape", shape, "Strict partition")->required();
    std::string psi_which = "column";
    psi->add_option("--which", psi_which, "Tableau selector")->check(CLI::IsMember({"row", "column", "index"}));
    psi->add_option("--index", index, "Index into the standard tableaux (with --which index)");
    psi->add_option("--cache-dir", cache_dir, "Cache directory (overrides $HCS_CACHE_DIR)");
    psi->add_flag("--dump", dump, "Print the element as JSON");
    psi->add_flag("--force", force, "Allow n above the desk bound");

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("--suite", suite, "Suite name")->required();
    ver->add_option("--n", n, "Size")->required();
    ver->add_option("--seed", opts.seed, "Random seed");
    ver->add_option("--q", opts.numeric.q, "Numeric value of q")->check(CLI::PositiveNumber);
    ver->add_option("--tolerance", opts.numeric.tolerance, "Numeric tolerance")->check(CLI::PositiveNumber);
    ver->add_option("--threads", opts.threads, "Worker threads over shapes (0: one per shape)")->check(CLI::NonNegativeNumber);
    ver->add_flag("--force", opts.force, "Allow n above the desk bound");

    for (auto* sub : {tab, psi, ver}) sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    const bool json = format == "json";
    try {
        if (*tab) return cmd_tableaux(n, shape, which, json);
        if (*psi) return cmd_psi(shape, psi_which, index, cache_dir, dump, json, force);
        if (*ver) {
            if (opts.numeric.q == 1.0) throw UsageError("--q must differ from 1");
            return cmd_verify(suite, n, opts, json);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
