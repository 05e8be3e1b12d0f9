#include "shufflelab/signature.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "shufflelab/invariants.hpp"
#include "shufflelab/matrix.hpp"
#include "shufflelab/parallel.hpp"
#include "shufflelab/ring.hpp"
#include "shufflelab/tableau.hpp"

namespace shufflelab {

PLPath::PLPath(int dim, std::vector<std::vector<double>> points)
    : dim_(dim), points_(std::move(points)) {
    if (dim < 1) throw std::invalid_argument("PLPath: dimension must be >= 1");
    if (points_.size() < 2) throw std::invalid_argument("PLPath: need at least two points");
    for (const auto& p : points_)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("PLPath: point dimension mismatch");
}

namespace {

bool parse_cell(const std::string& cell, double& out) {
    const char* s = cell.c_str();
    char* end = nullptr;
    out = std::strtod(s, &end);
    if (end == s) return false;
    while (*end == ' ' || *end == '\t') ++end;
    return *end == '\0';
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t i = 0;
    while (i <= line.size()) {
        std::size_t e = line.find(',', i);
        if (e == std::string::npos) e = line.size();
        std::size_t b = i;
        while (b < e && (line[b] == ' ' || line[b] == '\t')) ++b;
        cells.push_back(line.substr(b, e - b));
        i = e + 1;
    }
    return cells;
}

}  // namespace

PLPath PLPath::parse_csv(std::istream& in) {
    std::vector<std::vector<double>> points;
    std::string line;
    bool first_data_row = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = true;
        for (char c : line)
            if (c != ' ' && c != '\t') {
                blank = false;
                break;
            }
        if (blank) continue;
        const auto cells = split_row(line);
        std::vector<double> row(cells.size());
        bool numeric = true;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (!parse_cell(cells[i], row[i])) {
                numeric = false;
                break;
            }
        if (!numeric) {
            if (first_data_row) {
                first_data_row = false;  // header row
                continue;
            }
            throw std::invalid_argument("PLPath: non-numeric cell in row \"" + line + "\"");
        }
        first_data_row = false;
        if (!points.empty() && points.back().size() != row.size())
            throw std::invalid_argument("PLPath: ragged CSV rows");
        points.push_back(std::move(row));
    }
    if (points.empty()) throw std::invalid_argument("PLPath: no data rows");
    const int dim = static_cast<int>(points[0].size());
    return PLPath(dim, std::move(points));
}

PLPath PLPath::parse_csv_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw std::runtime_error("PLPath: cannot open \"" + filename + "\"");
    return parse_csv(in);
}

std::vector<double> PLPath::increment(std::size_t seg) const {
    std::vector<double> out(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i)
        out[static_cast<std::size_t>(i)] =
            points_[seg + 1][static_cast<std::size_t>(i)] - points_[seg][static_cast<std::size_t>(i)];
    return out;
}

namespace {

/// splitmix64: bit-stable across platforms, unlike std distributions.
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_interval(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace

PLPath random_path(int dim, int segments, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("random_path: dimension must be >= 1");
    if (segments < 1) throw std::invalid_argument("random_path: need at least one segment");
    std::uint64_t state = seed;
    std::vector<std::vector<double>> points;
    points.emplace_back(static_cast<std::size_t>(dim), 0.0);
    for (int s = 0; s < segments; ++s) {
        std::vector<double> p = points.back();
        for (int i = 0; i < dim; ++i) p[static_cast<std::size_t>(i)] += 2.0 * unit_interval(state) - 1.0;
        points.push_back(std::move(p));
    }
    return PLPath(dim, std::move(points));
}

TruncatedSignature::TruncatedSignature(int dim, int level) : dim_(dim), level_(level) {
    if (dim < 1) throw std::invalid_argument("TruncatedSignature: dimension must be >= 1");
    if (level < 0) throw std::invalid_argument("TruncatedSignature: level must be >= 0");
    levels_.resize(static_cast<std::size_t>(level) + 1);
    std::size_t size = 1;
    for (int n = 0; n <= level; ++n) {
        levels_[static_cast<std::size_t>(n)].assign(size, 0.0);
        size *= static_cast<std::size_t>(dim);
    }
}

TruncatedSignature TruncatedSignature::unit(int dim, int level) {
    TruncatedSignature s(dim, level);
    s.levels_[0][0] = 1.0;
    return s;
}

double TruncatedSignature::coeff(const Word& w) const {
    const int n = static_cast<int>(w.length());
    if (n > level_)
        throw std::invalid_argument("TruncatedSignature: word \"" + w.str() +
                                    "\" exceeds truncation level " + std::to_string(level_));
    std::size_t idx = 0;
    for (std::size_t k = 0; k < w.length(); ++k) {
        const int l = static_cast<int>(w.at(k));
        if (l > dim_)
            throw std::invalid_argument("TruncatedSignature: word \"" + w.str() +
                                        "\" leaves the alphabet {1.." + std::to_string(dim_) + "}");
        idx = idx * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(l - 1);
    }
    return levels_[static_cast<std::size_t>(n)][idx];
}

TruncatedSignature segment_signature(const std::vector<double>& increment, int level) {
    const int d = static_cast<int>(increment.size());
    TruncatedSignature s = TruncatedSignature::unit(d, level);
    for (int n = 1; n <= level; ++n) {
        const auto& prev = s.level_data(n - 1);
        auto& cur = s.level_data(n);
        for (std::size_t idx = 0; idx < cur.size(); ++idx)
            cur[idx] = prev[idx / static_cast<std::size_t>(d)] *
                       increment[idx % static_cast<std::size_t>(d)] / static_cast<double>(n);
    }
    return s;
}

TruncatedSignature chen_concat(const TruncatedSignature& a, const TruncatedSignature& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("chen_concat: dimension mismatch");
    if (a.level() != b.level())
        throw std::invalid_argument("chen_concat: truncation level mismatch");
    const std::size_t d = static_cast<std::size_t>(a.dim());
    TruncatedSignature out(a.dim(), a.level());
    for (int n = 0; n <= a.level(); ++n) {
        auto& cur = out.level_data(n);
        // suffix_size = d^(n-k) for the split w = u (length k) . v.
        std::size_t suffix_size = 1;
        for (int k = n; k >= 0; --k) {
            const auto& ak = a.level_data(k);
            const auto& bn_k = b.level_data(n - k);
            for (std::size_t idx = 0; idx < cur.size(); ++idx)
                cur[idx] += ak[idx / suffix_size] * bn_k[idx % suffix_size];
            suffix_size *= d;
        }
    }
    return out;
}

TruncatedSignature path_signature(const PLPath& x, int level) {
    TruncatedSignature acc = TruncatedSignature::unit(x.dim(), level);
    for (std::size_t s = 0; s < x.segment_count(); ++s)
        acc = chen_concat(acc, segment_signature(x.increment(s), level));
    return acc;
}

double pair(const FormalSum& s, const TruncatedSignature& sig) {
    // Canonical term order keeps the floating-point sum independent of how
    // the FormalSum's hash map happened to be built.
    double total = 0.0;
    for (const auto& [w, c] : s.sorted_terms()) total += c.to_double() * sig.coeff(w);
    return total;
}

CgmReport verify_cgm(const PLPath& x, double tol, double abs_floor) {
    const int d = x.dim();
    const TruncatedSignature sig = path_signature(x, std::max(2, d));

    AlgMatrix<DoubleRing> level2(DoubleRing{}, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) level2.at(i, j) = sig.coeff(Word{i + 1, j + 1});
    // det_serial keeps the report bit-identical for any thread count.
    const double lhs = det_serial(level2);

    const double p = pair(inv(Tableau::single_column(d)), sig);
    const double rhs = std::ldexp(p * p, -d);

    CgmReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    r.rel_err = scale > 0.0 ? r.abs_err / scale : 0.0;
    const double slack = std::max(abs_floor, tol * scale);
    r.nonneg_ok = lhs >= -slack;
    r.pass = r.abs_err <= slack && r.nonneg_ok;
    return r;
}

namespace {

struct BatchAcc {
    int passed = 0;
    int failed = 0;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    int worst_path = -1;
    CgmReport worst;
    int first_failed = -1;
    CgmReport first_failed_report;

    void take(int index, const CgmReport& r) {
        r.pass ? ++passed : ++failed;
        if (r.abs_err > max_abs_err) max_abs_err = r.abs_err;
        if (worst_path < 0 || r.rel_err > max_rel_err ||
            (r.rel_err == max_rel_err && index < worst_path)) {
            max_rel_err = r.rel_err;
            worst_path = index;
            worst = r;
        }
        if (!r.pass && (first_failed < 0 || index < first_failed)) {
            first_failed = index;
            first_failed_report = r;
        }
    }

    void merge(const BatchAcc& o) {
        passed += o.passed;
        failed += o.failed;
        if (o.max_abs_err > max_abs_err) max_abs_err = o.max_abs_err;
        if (o.worst_path >= 0 &&
            (worst_path < 0 || o.max_rel_err > max_rel_err ||
             (o.max_rel_err == max_rel_err && o.worst_path < worst_path))) {
            max_rel_err = o.max_rel_err;
            worst_path = o.worst_path;
            worst = o.worst;
        }
        if (o.first_failed >= 0 && (first_failed < 0 || o.first_failed < first_failed)) {
            first_failed = o.first_failed;
            first_failed_report = o.first_failed_report;
        }
    }
};

PLPath batch_path(int d, std::uint64_t seed, int index) {
    std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(index + 1));
    const int segments = 2 + static_cast<int>(splitmix64(state) % 7);  // 2..8
    return random_path(d, segments, splitmix64(state));
}

CgmBatch finish_batch(int d, int paths, std::uint64_t seed, double tol, double abs_floor,
                      BatchAcc acc) {
    CgmBatch b;
    b.d = d;
    b.paths = paths;
    b.seed = seed;
    b.tol = tol;
    b.abs_floor = abs_floor;
    b.passed = acc.passed;
    b.failed = acc.failed;
    b.max_abs_err = acc.max_abs_err;
    b.max_rel_err = acc.max_rel_err;
    b.worst_path = acc.worst_path;
    b.worst = acc.worst;
    b.first_failed = acc.first_failed;
    b.first_failed_report = acc.first_failed_report;
    return b;
}

}  // namespace

CgmBatch run_cgm_batch_serial(int d, int paths, std::uint64_t seed, double tol,
                              double abs_floor) {
    if (paths < 1) throw std::invalid_argument("run_cgm_batch: need at least one path");
    BatchAcc acc;
    for (int i = 0; i < paths; ++i) acc.take(i, verify_cgm(batch_path(d, seed, i), tol, abs_floor));
    return finish_batch(d, paths, seed, tol, abs_floor, acc);
}

CgmBatch run_cgm_batch(int d, int paths, std::uint64_t seed, double tol, double abs_floor) {
    if (paths < 1) throw std::invalid_argument("run_cgm_batch: need at least one path");
    BatchAcc acc = par::parallel_reduce<BatchAcc>(
        static_cast<std::size_t>(paths), [] { return BatchAcc{}; },
        [&](BatchAcc& local, std::size_t i) {
            local.take(static_cast<int>(i),
                       verify_cgm(batch_path(d, seed, static_cast<int>(i)), tol, abs_floor));
        },
        [](BatchAcc& into, BatchAcc&& part) { into.merge(part); });
    return finish_batch(d, paths, seed, tol, abs_floor, acc);
}

}  // namespace shufflelab
