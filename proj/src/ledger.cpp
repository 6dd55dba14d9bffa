#include "multsidon/ledger.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace multsidon {

namespace {

const double kExponent = std::cbrt(2.0) - 1.0 / 3.0;       // 0.9266
const double kHklLogPower = 4.0 / 3.0 - std::cbrt(2.0);    // 0.0734

double pow_n(const LedgerShape& s, double e) { return std::pow(static_cast<double>(s.n), e); }

} // namespace

void BoundConstants::validate() const {
    for (double c : {c2, c7, c8, c9, c10, C_delta})
        if (!(c > 0))
            throw std::invalid_argument("bound constants must be positive");
    if (!(delta > 0 && delta < 1))
        throw std::invalid_argument("delta must lie in (0, 1)");
}

std::string part_name(PartKind kind) {
    switch (kind) {
    case PartKind::G0: return "G0";
    case PartKind::Gprime: return "Gprime";
    case PartKind::Gdoubleprime: return "Gdoubleprime";
    case PartKind::GK1: return "GK1";
    }
    return "?";
}

std::string sub_name(SubKind sub) {
    switch (sub) {
    case SubKind::None: return "";
    case SubKind::H1: return "H1";
    case SubKind::H2: return "H2";
    case SubKind::Hkl: return "Hkl";
    }
    return "?";
}

std::string cap_kind_name(CapKind kind) {
    switch (kind) {
    case CapKind::Hard: return "hard";
    case CapKind::Asymptotic: return "asymptotic";
    case CapKind::None: return "none";
    }
    return "?";
}

double LedgerShape::ln_n() const { return std::log(static_cast<double>(n)); }
double LedgerShape::lnln_n() const { return std::log(ln_n()); }
double LedgerShape::alpha(unsigned h) const { return 0.5 + static_cast<double>(h) / (6.0 * K); }
double LedgerShape::beta(unsigned h) const { return 0.5 - static_cast<double>(h - 1) / (6.0 * K); }

unsigned band_count(std::uint64_t n) {
    if (n < 1)
        throw std::invalid_argument("band_count: n must be positive");
    const double k = std::floor(std::log(static_cast<double>(n)) / 6.0);
    return std::max(1u, static_cast<unsigned>(k));
}

LedgerShape make_shape(std::uint64_t n, const FactorSieve& sieve) {
    if (n < 16)
        throw std::invalid_argument("ledger: n must be at least 16");
    if (n > sieve.limit())
        throw std::out_of_range("ledger: n exceeds sieve limit");
    return {n, band_count(n), prime_pi(n, sieve), prime_pi(n / 2, sieve)};
}

std::vector<std::uint64_t> band_thresholds(std::uint64_t n, unsigned K) {
    std::vector<std::uint64_t> t;
    for (unsigned h = 0; h <= K; ++h)
        t.push_back(floor_rational_power(n, 3 * K + h, 6 * K));
    return t;
}

Cap theoretical_cap(const PartKey& key, const LedgerShape& s, const BoundConstants& c) {
    const double n23 = pow_n(s, 2.0 / 3.0);
    switch (key.kind) {
    case PartKind::G0:
        return {n23, CapKind::Hard, "n^(2/3)"};
    case PartKind::GK1:
        return {static_cast<double>(s.pi_n + s.pi_half) + n23 / 2.0, CapKind::Hard,
                "pi(n)+pi(n/2)+n^(2/3)/2"};
    case PartKind::Gprime:
    case PartKind::Gdoubleprime:
        break;
    }
    const double side = 16.0 * (pow_n(s, s.alpha(key.h)) + pow_n(s, s.beta(key.h)));
    switch (key.sub) {
    case SubKind::H1:
    case SubKind::H2:
        return {c.c2 * n23 / std::pow(s.ln_n(), 0.08) + side, CapKind::Asymptotic,
                "c2*n^(2/3)/ln(n)^0.08+16(n^alpha+n^beta)"};
    case SubKind::Hkl:
        return {c.c7 * n23 / std::pow(s.ln_n(), kHklLogPower) + side, CapKind::Asymptotic,
                "c7*n^(2/3)/ln(n)^(4/3-2^(1/3))+16(n^alpha+n^beta)"};
    case SubKind::None:
        break;
    }
    const double ll2 = s.lnln_n() * s.lnln_n();
    return {(c.c7 + 1.0) * n23 * ll2 / std::pow(s.ln_n(), kHklLogPower) +
                17.0 * ll2 * (pow_n(s, s.alpha(key.h)) + pow_n(s, s.beta(key.h))),
            CapKind::Asymptotic,
            "(c7+1)*n^(2/3)*lnln(n)^2/ln(n)^(4/3-2^(1/3))+17*lnln(n)^2*(n^alpha+n^beta)"};
}

PartKey classify_edge(const LabeledEdge& e, const LedgerShape& shape,
                      const std::vector<std::uint64_t>& thresholds, const FactorSieve& sieve) {
    const Decomposition& d = e.split;
    if (d.split == SplitCase::LargePrime)
        return {PartKind::GK1};
    const std::uint64_t top = std::max(d.u, d.v);
    if (top <= thresholds.front())
        return {PartKind::G0};

    // first h with top <= T_h
    auto it = std::lower_bound(thresholds.begin() + 1, thresholds.end(), top);
    if (it == thresholds.end())
        throw std::logic_error("classify_edge: Balanced edge above n^(2/3)");
    PartKey key;
    key.h = static_cast<unsigned>(it - thresholds.begin());
    key.kind = d.u == top ? PartKind::Gprime : PartKind::Gdoubleprime;

    const double ll = shape.lnln_n();
    const unsigned wu = big_omega(d.u, sieve);
    const unsigned wv = big_omega(d.v, sieve);
    if (wu <= 0.55 * ll) {
        key.sub = SubKind::H1;
    } else if (wv >= 1.6 * ll) {
        key.sub = SubKind::H2;
    } else {
        key.sub = SubKind::Hkl;
        key.k = wu;
        key.l = wv;
    }
    return key;
}

PartitionLedger partition_edges(const EdgeGraph& g, std::uint64_t n, const FactorSieve& sieve,
                                const BoundConstants& constants) {
    if (g.n() != n)
        throw std::invalid_argument("partition_edges: graph was built for n = " +
                                    std::to_string(g.n()) + ", not " + std::to_string(n));
    constants.validate();

    PartitionLedger ledger;
    ledger.shape = make_shape(n, sieve);
    ledger.thresholds = band_thresholds(n, ledger.shape.K);
    ledger.skipped_squares = g.skipped_squares().size();

    for (const auto& e : g.edges()) {
        PartKey key = classify_edge(e, ledger.shape, ledger.thresholds, sieve);
        auto [it, fresh] = ledger.parts.try_emplace(key);
        if (fresh)
            it->second.cap = theoretical_cap(key, ledger.shape, constants);
        ++it->second.edge_count;
        ++ledger.total;
    }
    // the parameter-free parts always get a line, even when empty
    for (PartKind kind : {PartKind::G0, PartKind::GK1}) {
        PartKey key{kind};
        auto [it, fresh] = ledger.parts.try_emplace(key);
        if (fresh)
            it->second.cap = theoretical_cap(key, ledger.shape, constants);
    }

    const LedgerShape& s = ledger.shape;
    const double n23 = pow_n(s, 2.0 / 3.0);
    const double ll2 = s.lnln_n() * s.lnln_n();
    for (PartKind side : {PartKind::Gprime, PartKind::Gdoubleprime}) {
        std::uint64_t side_total = 0;
        for (unsigned h = 1; h <= s.K; ++h) {
            std::uint64_t band = 0;
            for (const auto& [key, entry] : ledger.parts)
                if (key.kind == side && key.h == h)
                    band += entry.edge_count;
            side_total += band;
            PartKey band_key{side, h};
            ledger.summary.push_back({part_name(side) + "_band", h, "all", band,
                                      theoretical_cap(band_key, s, constants)});
        }
        Cap cap{constants.c8 * n23 * std::pow(s.ln_n(), kExponent) * ll2 + constants.c9 * n23 * ll2,
                CapKind::Asymptotic,
                "c8*n^(2/3)*ln(n)^(2^(1/3)-1/3)*lnln(n)^2+c9*n^(2/3)*lnln(n)^2"};
        ledger.summary.push_back({part_name(side) + "_total", 0, "all", side_total, cap});
    }
    ledger.summary.push_back({"squares", 0, "skipped", ledger.skipped_squares,
                              {static_cast<double>(isqrt(n)), CapKind::Hard, "floor(sqrt(n))"}});
    ledger.summary.push_back(
        {"total", 0, "all", ledger.total,
         {static_cast<double>(s.pi_n + s.pi_half) + constants.c10 * n23 * std::pow(s.ln_n(), kExponent) * ll2,
          CapKind::Asymptotic, "pi(n)+pi(n/2)+c10*n^(2/3)*ln(n)^(2^(1/3)-1/3)*lnln(n)^2"}});
    return ledger;
}

std::vector<CapCheck> check_hard_caps(const PartitionLedger& ledger, std::uint64_t g0_floor) {
    std::vector<CapCheck> out;
    auto judge = [](std::uint64_t count, double cap) {
        return static_cast<double>(count) <= cap ? CapStatus::Holds : CapStatus::Violated;
    };
    for (const auto& [key, entry] : ledger.parts) {
        if (entry.cap.kind != CapKind::Hard)
            continue;
        CapCheck check{part_name(key.kind), entry.edge_count, *entry.cap.value};
        check.status = judge(entry.edge_count, check.cap);
        if (key.kind == PartKind::G0 && ledger.shape.n < g0_floor)
            check.status = CapStatus::Informational;
        out.push_back(check);
    }
    for (const auto& line : ledger.summary) {
        if (line.cap.kind != CapKind::Hard)
            continue;
        out.push_back({line.part_key, line.edge_count, *line.cap.value,
                       judge(line.edge_count, *line.cap.value)});
    }
    return out;
}

std::string format_real(double x) {
    if (std::isnan(x))
        return "nan";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_ledger_csv(std::ostream& out, const PartitionLedger& ledger) {
    auto cap_text = [](const Cap& cap) { return cap.value ? format_real(*cap.value) : std::string(); };
    out << "part_key,h,subkey,k,l,edge_count,cap,cap_kind\n";
    for (const auto& [key, entry] : ledger.parts) {
        out << part_name(key.kind) << ',' << key.h << ',' << sub_name(key.sub) << ',';
        if (key.sub == SubKind::Hkl)
            out << key.k << ',' << key.l;
        else
            out << ',';
        out << ',' << entry.edge_count << ',' << cap_text(entry.cap) << ','
            << cap_kind_name(entry.cap.kind) << '\n';
    }
    for (const auto& line : ledger.summary) {
        out << line.part_key << ',' << line.h << ',' << line.subkey << ",,," << line.edge_count << ','
            << cap_text(line.cap) << ',' << cap_kind_name(line.cap.kind) << '\n';
    }
}

std::vector<std::uint64_t> omega_histogram(std::uint64_t x, const FactorSieve& sieve, unsigned workers) {
    if (x > sieve.limit())
        throw std::out_of_range("omega_histogram: x exceeds sieve limit");
    workers = std::max(1u, workers);
    std::vector<std::vector<std::uint64_t>> partial(workers);
    auto work = [&](unsigned w) {
        auto& hist = partial[w];
        for (std::uint64_t m = 1 + w; m <= x; m += workers) {
            unsigned om = big_omega(m, sieve);
            if (hist.size() <= om)
                hist.resize(om + 1, 0);
            ++hist[om];
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
    }
    std::vector<std::uint64_t> hist;
    for (const auto& p : partial) {
        if (hist.size() < p.size())
            hist.resize(p.size(), 0);
        for (std::size_t i = 0; i < p.size(); ++i)
            hist[i] += p[i];
    }
    return hist;
}

CensusRow census_row(std::uint64_t x, unsigned i, const std::vector<std::uint64_t>& histogram,
                     const BoundConstants& c) {
    if (x < 1)
        throw std::invalid_argument("census: x must be positive");
    CensusRow row;
    row.x = x;
    row.i = i;
    for (std::size_t w = 0; w < histogram.size(); ++w) {
        if (w <= i)
            row.N_exact += histogram[w];
        if (w >= i)
            row.M_exact += histogram[w];
    }

    // the analytic side needs ln ln x > 0
    if (x < 16) {
        row.regime = "none";
        return row;
    }
    const double lx = std::log(static_cast<double>(x));
    const double llx = std::log(lx);
    if (i >= 1) {
        // (ln ln x)^(i-1) / (i-1)! via lgamma to stay finite for large i
        const double j = static_cast<double>(i - 1);
        const double log_term = j * std::log(llx) - std::lgamma(j + 1.0);
        row.bound_value = c.C_delta * (static_cast<double>(x) / lx) * std::exp(log_term);
        const double a = j / llx;
        row.remark_exponent = a > 0 ? a - a * std::log(a) : 0.0;
    }
    const double di = static_cast<double>(i);
    if (di >= 1 && di <= (1 - c.delta) * llx)
        row.regime = "N";
    else if (di >= (1 + c.delta) * llx && di <= (2 - c.delta) * llx)
        row.regime = "M";
    else
        row.regime = "none";
    return row;
}

CensusRow census(std::uint64_t x, unsigned i, const FactorSieve& sieve, const BoundConstants& c) {
    return census_row(x, i, omega_histogram(x, sieve), c);
}

void write_census_csv_header(std::ostream& out) {
    out << "x,i,N_exact,M_exact,bound_value,remark_exponent\n";
}

void write_census_csv_row(std::ostream& out, const CensusRow& row) {
    out << row.x << ',' << row.i << ',' << row.N_exact << ',' << row.M_exact << ','
        << (row.bound_value ? format_real(*row.bound_value) : "") << ','
        << (row.remark_exponent ? format_real(*row.remark_exponent) : "") << '\n';
}

G3BoundReport g3_bound_report(std::uint64_t n, const FactorSieve& sieve) {
    if (n < 16)
        throw std::invalid_argument("g3_bound_report: n must be at least 16");
    if (n > sieve.limit())
        throw std::out_of_range("g3_bound_report: n exceeds sieve limit");
    G3BoundReport r;
    r.n = n;
    r.pi_n = prime_pi(n, sieve);
    r.pi_half = prime_pi(n / 2, sieve);
    r.exponent = kExponent;
    const double dn = static_cast<double>(n);
    const double ln = std::log(dn);
    const double lnln = std::log(ln);
    r.n_two_thirds = std::pow(dn, 2.0 / 3.0);
    r.main_error = r.n_two_thirds * std::pow(ln, kExponent);
    r.proof_error = r.main_error * lnln * lnln;
    r.lower_error = r.n_two_thirds / std::pow(ln, 4.0 / 3.0);
    r.previous_error = r.n_two_thirds * ln / lnln;
    r.main_bound = static_cast<double>(r.pi_n + r.pi_half) + r.main_error;
    r.gk1_hard_cap = static_cast<double>(r.pi_n + r.pi_half) + r.n_two_thirds / 2.0;
    return r;
}

} // namespace multsidon
