#include "multsidon/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "multsidon/arith.hpp"
#include "multsidon/decompose.hpp"
#include "multsidon/encode.hpp"
#include "multsidon/extremal.hpp"
#include "multsidon/setio.hpp"
#include "multsidon/sidonkit.hpp"

namespace multsidon {

using Json = nlohmann::ordered_json;

namespace {

// Thrown for bad user input; maps to exit status 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument(key + ": expected a nonnegative integer, got '" + text + "'");
    return v;
}

double parse_real(const std::string& key, const std::string& text) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument(key + ": expected a real number, got '" + text + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1")
        return true;
    if (text == "false" || text == "0")
        return false;
    throw std::invalid_argument(key + ": expected true/false, got '" + text + "'");
}

Json u128_json(u128 x) {
    if (x <= std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::uint64_t>(x);
    std::string digits;
    while (x > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::uint64_t env_sieve_limit() {
    const char* env = std::getenv("MULTSIDON_SIEVE_LIMIT");
    if (env == nullptr || *env == '\0')
        return 0;
    return parse_u64("MULTSIDON_SIEVE_LIMIT", env);
}

FactorSieve make_sieve(const RunConfig& cfg, std::uint64_t needed) {
    needed = std::max<std::uint64_t>(needed, 2);
    std::uint64_t limit = cfg.sieve_limit != 0 ? cfg.sieve_limit : env_sieve_limit();
    if (limit == 0)
        limit = needed;
    if (limit < needed)
        throw InputError("sieve limit " + std::to_string(limit) + " is below the required " +
                         std::to_string(needed));
    return FactorSieve(limit);
}

// The set a command operates on, plus the scale n it lives in.
std::vector<std::uint64_t> load_set(const RunConfig& cfg, const FactorSieve& sieve) {
    if (!cfg.set_file.empty() && !cfg.construction.empty())
        throw InputError("give either --set or --construction, not both");
    if (!cfg.set_file.empty()) {
        auto set = read_set_file(cfg.set_file);
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (std::uint64_t a : set)
            if (a < 1 || a > cfg.n)
                throw InputError("set element " + std::to_string(a) + " outside [1, " +
                                 std::to_string(cfg.n) + "]");
        return set;
    }
    const std::string& c = cfg.construction;
    if (c == "base")
        return base_construction(cfg.n, sieve);
    if (c == "greedy")
        return greedy_3sidon(cfg.n, sieve);
    if (c == "exact") {
        auto r = exact_max_3sidon(cfg.n, cfg.budget, sieve);
        return r.best_set;
    }
    if (c == "random") {
        if (cfg.random_size > cfg.n)
            throw InputError("--random-size exceeds n");
        return random_subset(cfg.n, cfg.random_size, cfg.seed);
    }
    if (c.empty())
        throw InputError("this command needs --set FILE or --construction NAME");
    throw InputError("unknown construction '" + c + "' (base, greedy, exact, random)");
}

std::uint64_t set_file_max(const RunConfig& cfg) {
    if (cfg.set_file.empty())
        return 0;
    auto set = read_set_file(cfg.set_file);
    return set.empty() ? 0 : *std::max_element(set.begin(), set.end());
}

Json constants_json(const BoundConstants& c) {
    return Json{{"c2", c.c2}, {"c7", c.c7},       {"c8", c.c8},           {"c9", c.c9},
                {"c10", c.c10}, {"delta", c.delta}, {"C_delta", c.C_delta}};
}

Json violation_json(const Violation& v) {
    return Json{{"lhs", v.lhs}, {"rhs", v.rhs}, {"product", u128_json(v.product)}};
}

// ---------------------------------------------------------------- decompose

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 1)
        throw InputError("decompose: n must be positive");
    const FactorSieve sieve = make_sieve(cfg, cfg.n);
    const std::uint64_t n = cfg.n;

    struct Tally {
        std::uint64_t large_prime = 0, balanced = 0, failures = 0, min_v_exceeds = 0;
        std::uint64_t first_failure = 0;
    };
    const unsigned workers = std::max(1u, cfg.workers);
    std::vector<Tally> tallies(workers);
    auto scan = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        Tally& t = tallies[w];
        for (std::uint64_t m = lo; m < hi; ++m) {
            const Decomposition d = lemma_decompose(m, n, sieve);
            bool ok = satisfies_invariants(d, n, sieve);
            if (d.split == SplitCase::Balanced) {
                ++t.balanced;
                const auto i = static_cast<long>(lemma_prefix_length(m, n, sieve));
                ok = ok && 3 * (i - 1) < static_cast<long>(big_omega(m, sieve));
            } else {
                ++t.large_prime;
            }
            if (!ok && t.failures++ == 0)
                t.first_failure = m;
            if (min_v_decompose(m, n, sieve).v > d.v)
                ++t.min_v_exceeds;
        }
    };
    const std::uint64_t chunk = (n + workers - 1) / workers;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = 1 + w * chunk;
            const std::uint64_t hi = std::min<std::uint64_t>(n + 1, lo + chunk);
            if (lo < hi)
                pool.emplace_back(scan, w, lo, hi);
        }
    }
    Tally total;
    for (const Tally& t : tallies) {
        total.large_prime += t.large_prime;
        total.balanced += t.balanced;
        total.min_v_exceeds += t.min_v_exceeds;
        if (t.failures > 0 && total.failures == 0)
            total.first_failure = t.first_failure;
        total.failures += t.failures;
    }

    if (cfg.list) {
        if (cfg.format == OutputFormat::Json)
            throw InputError("decompose --list writes csv or text");
        out << "m,lemma_u,lemma_v,lemma_case,min_u,min_v,min_case\n";
        for (std::uint64_t m = 1; m <= n; ++m) {
            const auto a = lemma_decompose(m, n, sieve);
            const auto b = min_v_decompose(m, n, sieve);
            out << m << ',' << a.u << ',' << a.v << ',' << to_string(a.split) << ',' << b.u << ','
                << b.v << ',' << to_string(b.split) << '\n';
        }
    } else if (cfg.format == OutputFormat::Json) {
        Json j{{"command", "decompose"},
               {"n", n},
               {"n_two_thirds_floor", floor_two_thirds(n)},
               {"checked", n},
               {"large_prime", total.large_prime},
               {"balanced", total.balanced},
               {"failures", total.failures},
               {"min_v_exceeds_lemma_v", total.min_v_exceeds},
               {"totality", total.failures == 0},
               {"formulas",
                {{"n_two_thirds_floor", "largest t with t^3 <= n^2"},
                 {"large_prime", "#{m <= n : largest prime of m > n^(2/3)}"},
                 {"balanced", "#{m <= n : u,v <= n^(2/3), 2*Omega(u)-2 <= Omega(v)}"},
                 {"failures", "#{m <= n : split breaks its case conditions or 3(i-1) >= Omega(m)}"},
                 {"min_v_exceeds_lemma_v", "#{m <= n : min-v split has larger v than the constructive split}"}}}};
        if (total.failures > 0)
            j["first_failure"] = total.first_failure;
        emit_json(out, j);
    } else {
        out << "n," << n << "\nlarge_prime," << total.large_prime << "\nbalanced," << total.balanced
            << "\nfailures," << total.failures << "\nmin_v_exceeds_lemma_v," << total.min_v_exceeds << '\n';
    }
    return total.failures == 0 && total.min_v_exceeds == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.k < 1)
        throw InputError("verify: k must be positive");
    const FactorSieve sieve = make_sieve(cfg, std::max(cfg.n, set_file_max(cfg)));
    const auto set = load_set(cfg, sieve);

    const auto violation = verify_k_sidon(set, cfg.k, sieve);
    const auto square = verify_square_free_products(set, 2 * cfg.k, sieve);
    const bool failed = violation.has_value() || square.has_value();

    if (cfg.format == OutputFormat::Json) {
        Json j{{"command", "verify"}, {"n", cfg.n}, {"k", cfg.k}, {"size", set.size()}};
        j["k_sidon"] = violation ? "violation" : "ok";
        j["violation"] = violation ? violation_json(*violation) : Json(nullptr);
        j["square_free_products"] = square ? "square" : "ok";
        j["square_witness"] = square ? Json(*square) : Json(nullptr);
        j["formulas"] = {{"violation", "s1*...*sk = t1*...*tk, 2k distinct elements, lexicographically smallest"},
                         {"square_witness", "2k-element subset whose product is a perfect square"}};
        emit_json(out, j);
    } else {
        out << "k_sidon," << (violation ? "violation" : "ok") << '\n';
        if (violation) {
            out << "lhs";
            for (auto a : violation->lhs)
                out << ',' << a;
            out << "\nrhs";
            for (auto a : violation->rhs)
                out << ',' << a;
            out << "\nproduct," << u128_json(violation->product).dump() << '\n';
        }
        out << "square_free_products," << (square ? "square" : "ok") << '\n';
    }
    return failed ? 1 : 0;
}

// ---------------------------------------------------------------- encode

int cmd_encode(const RunConfig& cfg, std::ostream& out) {
    const FactorSieve sieve = make_sieve(cfg, std::max(cfg.n, set_file_max(cfg)));
    const auto set = load_set(cfg, sieve);
    const EdgeGraph g = build_graph(set, cfg.n, sieve, cfg.workers);
    const auto hexagon = find_hexagon(g);

    if (!cfg.graph_out.empty()) {
        std::ofstream f(cfg.graph_out);
        if (!f)
            throw InputError("cannot write '" + cfg.graph_out + "'");
        write_edge_list(f, g);
    }

    if (cfg.format == OutputFormat::Text) {
        write_edge_list(out, g);
    } else {
        Json j{{"command", "encode"},
               {"n", cfg.n},
               {"elements", set.size()},
               {"edges", g.edges().size()},
               {"skipped_squares", g.skipped_squares()},
               {"vertex_count", g.full_vertex_count()},
               {"incident_vertices", g.incident_vertex_count()},
               {"isolated_vertices", g.isolated_vertex_count()}};
        if (hexagon) {
            const auto sol = hexagon_to_solution(*hexagon);
            u128 p = 1;
            for (auto s : sol.lhs)
                p *= s;
            j["hexagon"] = {{"vertices", hexagon->vertices},
                            {"labels", hexagon->edge_labels},
                            {"lhs", sol.lhs},
                            {"rhs", sol.rhs},
                            {"product", u128_json(p)}};
        } else {
            j["hexagon"] = nullptr;
        }
        j["formulas"] = {{"edges", "#{a in A : min-v split has u != v}"},
                         {"vertex_count", "pi(n)+floor(n^(2/3))-pi(n^(2/3))"},
                         {"isolated_vertices", "vertex_count - incident_vertices"},
                         {"hexagon", "x1..x6 cycle; lhs = (x1x2, x3x4, x5x6), rhs = (x2x3, x4x5, x6x1)"}};
        emit_json(out, j);
    }
    return hexagon ? 1 : 0;
}

// ---------------------------------------------------------------- ledger

int cmd_ledger(const RunConfig& cfg, std::ostream& out) {
    const FactorSieve sieve = make_sieve(cfg, std::max(cfg.n, set_file_max(cfg)));
    if (cfg.n < 16)
        throw InputError("ledger: n must be at least 16");
    cfg.constants.validate();
    const auto set = load_set(cfg, sieve);
    const EdgeGraph g = build_graph(set, cfg.n, sieve, cfg.workers);
    const PartitionLedger ledger = partition_edges(g, cfg.n, sieve, cfg.constants);
    const auto checks = check_hard_caps(ledger, cfg.g0_floor);
    const bool violated = std::any_of(checks.begin(), checks.end(),
                                      [](const CapCheck& c) { return c.status == CapStatus::Violated; });

    if (cfg.format == OutputFormat::Csv || cfg.format == OutputFormat::Text) {
        write_ledger_csv(out, ledger);
    } else {
        Json parts = Json::array();
        for (const auto& [key, entry] : ledger.parts) {
            Json p{{"part_key", part_name(key.kind)}, {"h", key.h}, {"subkey", sub_name(key.sub)}};
            if (key.sub == SubKind::Hkl) {
                p["k"] = key.k;
                p["l"] = key.l;
            }
            p["edge_count"] = entry.edge_count;
            p["cap"] = entry.cap.value ? Json(*entry.cap.value) : Json(nullptr);
            p["cap_kind"] = cap_kind_name(entry.cap.kind);
            p["cap_formula"] = entry.cap.formula;
            parts.push_back(p);
        }
        Json summary = Json::array();
        for (const auto& s : ledger.summary)
            summary.push_back({{"part_key", s.part_key},
                               {"h", s.h},
                               {"edge_count", s.edge_count},
                               {"cap", s.cap.value ? Json(*s.cap.value) : Json(nullptr)},
                               {"cap_kind", cap_kind_name(s.cap.kind)},
                               {"cap_formula", s.cap.formula}});
        Json cap_checks = Json::array();
        for (const auto& c : checks) {
            const char* status = c.status == CapStatus::Holds      ? "holds"
                                 : c.status == CapStatus::Violated ? "violated"
                                                                   : "informational";
            cap_checks.push_back(
                {{"part_key", c.part_key}, {"edge_count", c.edge_count}, {"cap", c.cap}, {"status", status}});
        }
        Json j{{"command", "ledger"},
               {"n", cfg.n},
               {"K", ledger.shape.K},
               {"band_thresholds", ledger.thresholds},
               {"elements", set.size()},
               {"total", ledger.total},
               {"skipped_squares", ledger.skipped_squares},
               {"constants", constants_json(cfg.constants)},
               {"parts", parts},
               {"summary", summary},
               {"hard_caps", cap_checks},
               {"formulas",
                {{"K", "max(1, floor(ln(n)/6))"},
                 {"band_thresholds", "floor(n^(1/2 + h/(6K))), h = 0..K"},
                 {"total", "|E(G)|"}}}};
        emit_json(out, j);
    }
    return violated ? 1 : 0;
}

// ---------------------------------------------------------------- census

int cmd_census(const RunConfig& cfg, std::ostream& out) {
    const std::uint64_t x = cfg.x != 0 ? cfg.x : cfg.n;
    if (x < 1)
        throw InputError("census: x must be positive");
    if (cfg.i_min > cfg.i_max)
        throw InputError("census: i-min exceeds i-max");
    cfg.constants.validate();
    const FactorSieve sieve = make_sieve(cfg, x);
    const auto hist = omega_histogram(x, sieve, cfg.workers);

    std::vector<CensusRow> rows;
    for (unsigned i = cfg.i_min; i <= cfg.i_max; ++i)
        rows.push_back(census_row(x, i, hist, cfg.constants));

    if (cfg.format == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back({{"x", r.x},
                           {"i", r.i},
                           {"N_exact", r.N_exact},
                           {"M_exact", r.M_exact},
                           {"bound_value", r.bound_value ? Json(*r.bound_value) : Json(nullptr)},
                           {"remark_exponent", r.remark_exponent ? Json(*r.remark_exponent) : Json(nullptr)},
                           {"regime", r.regime}});
        emit_json(out, Json{{"command", "census"},
                            {"constants", constants_json(cfg.constants)},
                            {"rows", arr},
                            {"formulas",
                             {{"N_exact", "#{m <= x : Omega(m) <= i}"},
                              {"M_exact", "#{m <= x : Omega(m) >= i}"},
                              {"bound_value", "C_delta*(x/ln x)*(ln ln x)^(i-1)/(i-1)!"},
                              {"remark_exponent", "a - a*ln(a), a = (i-1)/ln ln x"},
                              {"regime", "N: 1 <= i <= (1-delta) lnln x; M: (1+delta) lnln x <= i <= (2-delta) lnln x"}}}});
    } else {
        write_census_csv_header(out);
        for (const auto& r : rows)
            write_census_csv_row(out, r);
    }
    return 0;
}

// ---------------------------------------------------------------- search

Json search_json(const SearchResult& r) {
    return Json{{"n", r.n},
                {"size", r.size},
                {"best_set", r.best_set},
                {"optimal", r.optimal},
                {"nodes_explored", r.nodes_explored},
                {"budget_hit", r.budget_hit}};
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 1)
        throw InputError("search: n must be positive");
    if (cfg.objective != "sidon" && cfg.objective != "square-free")
        throw InputError("search: objective must be sidon or square-free");
    if (cfg.objective == "square-free" && cfg.greedy)
        throw InputError("search: --greedy only supports the sidon objective");
    const FactorSieve sieve = make_sieve(cfg, cfg.n);
    const bool do_exact = cfg.exact || !cfg.greedy;

    Json j{{"command", "search"}, {"objective", cfg.objective}, {"n", cfg.n}};
    bool verified = true;
    if (do_exact) {
        const auto r = cfg.objective == "sidon" ? exact_max_3sidon(cfg.n, cfg.budget, sieve)
                                                : exact_max_square_product_free(cfg.n, cfg.budget, sieve);
        j["exact"] = search_json(r);
        j["size"] = r.size;
        j["optimal"] = r.optimal;
        verified = cfg.objective == "sidon" ? !verify_k_sidon(r.best_set, 3, sieve)
                                            : !verify_square_free_products(r.best_set, 6, sieve);
        j["exact"]["verified"] = verified;
    }
    if (cfg.greedy) {
        const auto set = greedy_3sidon(cfg.n, sieve);
        const bool ok = !verify_k_sidon(set, 3, sieve);
        verified = verified && ok;
        j["greedy"] = {{"size", set.size()}, {"set", set}, {"verified", ok}};
    }
    j["formulas"] = {{"size", cfg.objective == "sidon" ? "G_3(n) when optimal" : "F_6(n) when optimal"},
                     {"nodes_explored", "branch-and-bound nodes, elements ascending, include first"}};

    if (cfg.format == OutputFormat::Json) {
        emit_json(out, j);
    } else {
        out << "mode,size,optimal,nodes_explored,set\n";
        auto row = [&](const char* mode, const Json& r, bool opt, std::uint64_t nodes) {
            out << mode << ',' << r.at("size").get<std::size_t>() << ',' << (opt ? "true" : "false") << ','
                << nodes << ',';
            const Json& set = r.contains("best_set") ? r.at("best_set") : r.at("set");
            for (std::size_t i = 0; i < set.size(); ++i)
                out << (i ? " " : "") << set[i].get<std::uint64_t>();
            out << '\n';
        };
        if (j.contains("exact"))
            row("exact", j["exact"], j["exact"]["optimal"].get<bool>(),
                j["exact"]["nodes_explored"].get<std::uint64_t>());
        if (j.contains("greedy"))
            row("greedy", j["greedy"], false, 0);
    }
    return verified ? 0 : 1;
}

// ---------------------------------------------------------------- extremal

int cmd_extremal(const RunConfig& cfg, std::ostream& out) {
    if (cfg.max_order > kMaxGeneralOrder || cfg.max_class > kMaxBipartiteClass)
        throw BudgetExceeded("extremal: brute force capped at order " + std::to_string(kMaxGeneralOrder) +
                             " and class size " + std::to_string(kMaxBipartiteClass));
    Json general = Json::array();
    bool sound = true;
    for (unsigned n = 1; n <= cfg.max_order; ++n) {
        const auto r = brute_force_ex_c6(n);
        const auto fb = bound_furedi_balanced(n);
        const bool witness_ok = r.witness.size() == r.max_edges && is_c6_free(r.witness);
        sound = sound && witness_ok;
        general.push_back({{"n", n},
                           {"ex", r.max_edges},
                           {"witness", r.witness},
                           {"witness_c6_free", witness_ok},
                           {"furedi_strong", fb.strong},
                           {"furedi_weak", fb.weak},
                           {"below_furedi_weak", static_cast<double>(r.max_edges) < fb.weak}});
    }
    Json bipartite = Json::array();
    for (unsigned u = 1; u <= cfg.max_class; ++u) {
        for (unsigned v = 1; v <= u; ++v) {
            const auto r = brute_force_ex_c6_bipartite(u, v);
            const double gy = bound_gyori(u, v);
            const bool witness_ok = r.witness.size() == r.max_edges && is_c6_free(r.witness);
            const bool below = static_cast<double>(r.max_edges) < gy;
            sound = sound && witness_ok && below;
            bipartite.push_back({{"u", u},
                                 {"v", v},
                                 {"ex", r.max_edges},
                                 {"witness_c6_free", witness_ok},
                                 {"gyori", gy},
                                 {"below_gyori", below},
                                 {"furedi_unbalanced", bound_furedi_unbalanced(u, v)}});
        }
    }
    if (cfg.format == OutputFormat::Json) {
        emit_json(out, Json{{"command", "extremal"},
                            {"general", general},
                            {"bipartite", bipartite},
                            {"formulas",
                             {{"ex", "max edges of a C6-free graph, exhaustive search"},
                              {"furedi_strong", "0.6272*n^(4/3) (asymptotic, informational)"},
                              {"furedi_weak", "n^(4/3) (asymptotic, informational)"},
                              {"gyori", "2u + v^2/2, strict upper bound for v <= u"},
                              {"furedi_unbalanced", "2^(1/3)*(uv)^(2/3) + 16(u+v)"}}}});
    } else {
        out << "kind,u,v,ex,bound,bound_formula\n";
        for (const auto& g : general)
            out << "general," << g["n"].get<unsigned>() << ",," << g["ex"].get<std::size_t>() << ','
                << format_real(g["furedi_weak"].get<double>()) << ",n^(4/3)\n";
        for (const auto& b : bipartite)
            out << "bipartite," << b["u"].get<unsigned>() << ',' << b["v"].get<unsigned>() << ','
                << b["ex"].get<std::size_t>() << ',' << format_real(b["gyori"].get<double>())
                << ",2u+v^2/2\n";
    }
    return sound ? 0 : 1;
}

// ---------------------------------------------------------------- bounds

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    std::vector<std::uint64_t> ns = cfg.bound_ns.empty() ? std::vector<std::uint64_t>{cfg.n} : cfg.bound_ns;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (auto n : ns)
        if (n < 16)
            throw InputError("bounds: every n must be at least 16");
    const FactorSieve sieve = make_sieve(cfg, ns.back());

    std::vector<G3BoundReport> rows;
    for (auto n : ns)
        rows.push_back(g3_bound_report(n, sieve));

    if (cfg.format == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n},
                           {"pi_n", r.pi_n},
                           {"pi_half", r.pi_half},
                           {"exponent", r.exponent},
                           {"n_two_thirds", r.n_two_thirds},
                           {"main_error", r.main_error},
                           {"proof_error", r.proof_error},
                           {"lower_error", r.lower_error},
                           {"previous_error", r.previous_error},
                           {"main_bound", r.main_bound},
                           {"gk1_hard_cap", r.gk1_hard_cap},
                           {"exponent_slack", r.exponent_slack}});
        emit_json(out, Json{{"command", "bounds"},
                            {"rows", arr},
                            {"formulas",
                             {{"pi_n", "pi(n)"},
                              {"pi_half", "pi(floor(n/2))"},
                              {"exponent", "2^(1/3) - 1/3"},
                              {"main_error", "n^(2/3) * ln(n)^(2^(1/3)-1/3)"},
                              {"proof_error", "n^(2/3) * ln(n)^(2^(1/3)-1/3) * lnln(n)^2"},
                              {"lower_error", "n^(2/3) / ln(n)^(4/3)"},
                              {"previous_error", "n^(2/3) * ln(n) / lnln(n)"},
                              {"main_bound", "pi(n) + pi(n/2) + main_error, exponent up to o(1)"},
                              {"gk1_hard_cap", "pi(n) + pi(n/2) + n^(2/3)/2"}}}});
    } else {
        out << "n,pi_n,pi_half,exponent,main_error,proof_error,lower_error,previous_error,main_bound,"
               "gk1_hard_cap\n";
        for (const auto& r : rows)
            out << r.n << ',' << r.pi_n << ',' << r.pi_half << ',' << format_real(r.exponent) << ','
                << format_real(r.main_error) << ',' << format_real(r.proof_error) << ','
                << format_real(r.lower_error) << ',' << format_real(r.previous_error) << ','
                << format_real(r.main_bound) << ',' << format_real(r.gk1_hard_cap) << '\n';
    }
    return 0;
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"n", [](RunConfig& c, const std::string& v) { c.n = parse_u64("n", v); }},
        {"sieve-limit", [](RunConfig& c, const std::string& v) { c.sieve_limit = parse_u64("sieve-limit", v); }},
        {"format", [](RunConfig& c, const std::string& v) { c.format = parse_format(v); }},
        {"seed", [](RunConfig& c, const std::string& v) { c.seed = parse_u64("seed", v); }},
        {"budget", [](RunConfig& c, const std::string& v) { c.budget = parse_u64("budget", v); }},
        {"workers", [](RunConfig& c, const std::string& v) { c.workers = static_cast<unsigned>(parse_u64("workers", v)); }},
        {"c2", [](RunConfig& c, const std::string& v) { c.constants.c2 = parse_real("c2", v); }},
        {"c7", [](RunConfig& c, const std::string& v) { c.constants.c7 = parse_real("c7", v); }},
        {"c8", [](RunConfig& c, const std::string& v) { c.constants.c8 = parse_real("c8", v); }},
        {"c9", [](RunConfig& c, const std::string& v) { c.constants.c9 = parse_real("c9", v); }},
        {"c10", [](RunConfig& c, const std::string& v) { c.constants.c10 = parse_real("c10", v); }},
        {"delta", [](RunConfig& c, const std::string& v) { c.constants.delta = parse_real("delta", v); }},
        {"C-delta", [](RunConfig& c, const std::string& v) { c.constants.C_delta = parse_real("C-delta", v); }},
        {"set", [](RunConfig& c, const std::string& v) { c.set_file = v; }},
        {"construction", [](RunConfig& c, const std::string& v) { c.construction = v; }},
        {"random-size", [](RunConfig& c, const std::string& v) { c.random_size = parse_u64("random-size", v); }},
        {"k", [](RunConfig& c, const std::string& v) { c.k = static_cast<unsigned>(parse_u64("k", v)); }},
        {"list", [](RunConfig& c, const std::string& v) { c.list = parse_bool("list", v); }},
        {"graph-out", [](RunConfig& c, const std::string& v) { c.graph_out = v; }},
        {"g0-floor", [](RunConfig& c, const std::string& v) { c.g0_floor = parse_u64("g0-floor", v); }},
        {"x", [](RunConfig& c, const std::string& v) { c.x = parse_u64("x", v); }},
        {"i-min", [](RunConfig& c, const std::string& v) { c.i_min = static_cast<unsigned>(parse_u64("i-min", v)); }},
        {"i-max", [](RunConfig& c, const std::string& v) { c.i_max = static_cast<unsigned>(parse_u64("i-max", v)); }},
        {"exact", [](RunConfig& c, const std::string& v) { c.exact = parse_bool("exact", v); }},
        {"greedy", [](RunConfig& c, const std::string& v) { c.greedy = parse_bool("greedy", v); }},
        {"objective", [](RunConfig& c, const std::string& v) { c.objective = v; }},
        {"max-order", [](RunConfig& c, const std::string& v) { c.max_order = static_cast<unsigned>(parse_u64("max-order", v)); }},
        {"max-class", [](RunConfig& c, const std::string& v) { c.max_class = static_cast<unsigned>(parse_u64("max-class", v)); }},
        {"ns", [](RunConfig& c, const std::string& v) {
             c.bound_ns.clear();
             std::stringstream ss(v);
             std::string item;
             while (std::getline(ss, item, ','))
                 c.bound_ns.push_back(parse_u64("ns", item));
         }},
    };
    return table;
}

} // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json")
        return OutputFormat::Json;
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "text")
        return OutputFormat::Text;
    throw std::invalid_argument("unknown output format '" + name + "' (json, csv, text)");
}

void apply_config(RunConfig& config, std::istream& in) {
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos)
                return std::string();
            const auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        auto it = setters().find(key);
        if (it == setters().end())
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        it->second(config, value);
    }
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file '" + path + "'");
    apply_config(config, in);
}

std::vector<std::uint64_t> random_subset(std::uint64_t n, std::size_t size, std::uint64_t seed) {
    if (size > n)
        throw std::invalid_argument("random_subset: size exceeds n");
    std::mt19937_64 rng(seed);
    // partial Fisher-Yates on 1..n; modulo draw keeps the stream identical across standard libraries
    std::vector<std::uint64_t> pool(n);
    for (std::uint64_t i = 0; i < n; ++i)
        pool[i] = i + 1;
    for (std::size_t i = 0; i < size; ++i) {
        const std::uint64_t j = i + rng() % (n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    return pool;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    static const std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>> commands = {
        {"decompose", cmd_decompose}, {"verify", cmd_verify}, {"encode", cmd_encode},
        {"ledger", cmd_ledger},       {"census", cmd_census}, {"search", cmd_search},
        {"extremal", cmd_extremal},   {"bounds", cmd_bounds},
    };
    auto it = commands.find(config.command);
    if (it == commands.end()) {
        err << "error: unknown command '" << config.command << "'\n";
        return 2;
    }
    if (config.budget == 0) {
        err << "error: budget must be positive\n";
        return 2;
    }
    try {
        return it->second(config, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

} // namespace multsidon
