#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multsidon/arith.hpp"
#include "multsidon/encode.hpp"

namespace multsidon {

// All logarithms are natural. None of these constants is pinned by theory;
// c2 only has to exceed 2^(1/3) e^(2/3) ~ 2.4528.
struct BoundConstants {
    double c2 = 2.5;
    double c7 = 1.0;
    double c8 = 1.0;
    double c9 = 1.0;
    double c10 = 3.0;
    double delta = 0.5;
    double C_delta = 1.0;

    void validate() const;  // throws std::invalid_argument
};

enum class PartKind { G0, Gprime, Gdoubleprime, GK1 };
enum class SubKind { None, H1, H2, Hkl };

struct PartKey {
    PartKind kind = PartKind::G0;
    unsigned h = 0;  // band, 1..K for Gprime / Gdoubleprime
    SubKind sub = SubKind::None;
    unsigned k = 0;  // Omega(u) for Hkl
    unsigned l = 0;  // Omega(v) for Hkl

    auto operator<=>(const PartKey&) const = default;
};

std::string part_name(PartKind kind);
std::string sub_name(SubKind sub);

enum class CapKind { Hard, Asymptotic, None };
std::string cap_kind_name(CapKind kind);

struct Cap {
    std::optional<double> value;
    CapKind kind = CapKind::None;
    std::string formula;
};

// Everything the cap formulas depend on.
struct LedgerShape {
    std::uint64_t n = 0;
    unsigned K = 1;
    std::uint64_t pi_n = 0;
    std::uint64_t pi_half = 0;  // pi(floor(n/2))

    double ln_n() const;
    double lnln_n() const;
    double alpha(unsigned h) const;  // 1/2 + h/(6K)
    double beta(unsigned h) const;   // 1/2 - (h-1)/(6K)
};

LedgerShape make_shape(std::uint64_t n, const FactorSieve& sieve);

// K = max(1, floor(ln n / 6))
unsigned band_count(std::uint64_t n);

// T_h = floor(n^(1/2 + h/(6K))) for h = 0..K, so band h is T_{h-1} < max(u,v) <= T_h.
std::vector<std::uint64_t> band_thresholds(std::uint64_t n, unsigned K);

Cap theoretical_cap(const PartKey& key, const LedgerShape& shape, const BoundConstants& c);

struct PartEntry {
    std::uint64_t edge_count = 0;
    Cap cap;
};

// Aggregate lines (band totals, side sums, squares, grand total).
struct SummaryLine {
    std::string part_key;
    unsigned h = 0;
    std::string subkey;
    std::uint64_t edge_count = 0;
    Cap cap;
};

struct PartitionLedger {
    LedgerShape shape;
    std::vector<std::uint64_t> thresholds;
    std::map<PartKey, PartEntry> parts;  // an exact partition of the edges
    std::uint64_t total = 0;
    std::uint64_t skipped_squares = 0;
    std::vector<SummaryLine> summary;
};

PartKey classify_edge(const LabeledEdge& e, const LedgerShape& shape,
                      const std::vector<std::uint64_t>& thresholds, const FactorSieve& sieve);

// g must have been built for the same n; n >= 16.
PartitionLedger partition_edges(const EdgeGraph& g, std::uint64_t n, const FactorSieve& sieve,
                                const BoundConstants& constants = {});

enum class CapStatus { Holds, Violated, Informational };

struct CapCheck {
    std::string part_key;
    std::uint64_t edge_count = 0;
    double cap = 0;
    CapStatus status = CapStatus::Informational;
};

// The parameter-free caps: G0 (asserted only for n >= g0_floor), GK1, squares.
std::vector<CapCheck> check_hard_caps(const PartitionLedger& ledger, std::uint64_t g0_floor = 10000);

// CSV: part_key,h,subkey,k,l,edge_count,cap,cap_kind
void write_ledger_csv(std::ostream& out, const PartitionLedger& ledger);

struct CensusRow {
    std::uint64_t x = 0;
    unsigned i = 0;
    std::uint64_t N_exact = 0;  // #{m <= x : Omega(m) <= i}
    std::uint64_t M_exact = 0;  // #{m <= x : Omega(m) >= i}
    std::optional<double> bound_value;
    std::optional<double> remark_exponent;
    std::string regime;  // N, M or none: which tail estimate applies to i
};

// Histogram of Omega(m) over 1 <= m <= x.
std::vector<std::uint64_t> omega_histogram(std::uint64_t x, const FactorSieve& sieve, unsigned workers = 1);

CensusRow census(std::uint64_t x, unsigned i, const FactorSieve& sieve, const BoundConstants& c = {});
CensusRow census_row(std::uint64_t x, unsigned i, const std::vector<std::uint64_t>& histogram,
                     const BoundConstants& c);

// CSV: x,i,N_exact,M_exact,bound_value,remark_exponent
void write_census_csv_header(std::ostream& out);
void write_census_csv_row(std::ostream& out, const CensusRow& row);

struct G3BoundReport {
    std::uint64_t n = 0;
    std::uint64_t pi_n = 0;
    std::uint64_t pi_half = 0;
    double exponent = 0;          // 2^(1/3) - 1/3
    double n_two_thirds = 0;
    double main_error = 0;        // n^(2/3) (ln n)^exponent
    double proof_error = 0;       // main_error (ln ln n)^2
    double lower_error = 0;       // n^(2/3) / (ln n)^(4/3)
    double previous_error = 0;    // n^(2/3) ln n / ln ln n
    double main_bound = 0;        // pi_n + pi_half + main_error
    double gk1_hard_cap = 0;      // pi_n + pi_half + n^(2/3)/2
    std::string exponent_slack = "o(1)";
};

G3BoundReport g3_bound_report(std::uint64_t n, const FactorSieve& sieve);

// Shortest decimal form that round-trips, never locale dependent.
std::string format_real(double x);

} // namespace multsidon
