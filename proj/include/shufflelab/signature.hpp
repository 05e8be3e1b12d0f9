#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "shufflelab/formal_sum.hpp"
#include "shufflelab/word.hpp"

namespace shufflelab {

/// Piecewise-linear path in R^d: an ordered list of at least two points.
class PLPath {
public:
    PLPath(int dim, std::vector<std::vector<double>> points);

    /// One point per row, d comma-separated decimal columns, rows in time
    /// order; a single leading non-numeric row is treated as a header.
    static PLPath parse_csv(std::istream& in);
    static PLPath parse_csv_file(const std::string& filename);

    int dim() const { return dim_; }
    std::size_t point_count() const { return points_.size(); }
    std::size_t segment_count() const { return points_.size() - 1; }
    const std::vector<double>& point(std::size_t k) const { return points_[k]; }
    std::vector<double> increment(std::size_t seg) const;

private:
    int dim_;
    std::vector<std::vector<double>> points_;
};

/// Seeded random path from the origin with `segments` increments uniform in
/// [-1,1]^d. Uses its own bit-stable generator so a seed pins the path
/// independent of the standard library implementation.
PLPath random_path(int dim, int segments, std::uint64_t seed);

/// Iterated-integral signature truncated at `level`, stored densely per
/// level (d^n coefficients at level n, indexed base-d by the word).
class TruncatedSignature {
public:
    TruncatedSignature(int dim, int level);

    static TruncatedSignature unit(int dim, int level);

    int dim() const { return dim_; }
    int level() const { return level_; }

    /// Coefficient of w; throws when |w| exceeds the truncation level.
    double coeff(const Word& w) const;

    const std::vector<double>& level_data(int n) const { return levels_[static_cast<std::size_t>(n)]; }
    std::vector<double>& level_data(int n) { return levels_[static_cast<std::size_t>(n)]; }

private:
    int dim_;
    int level_;
    std::vector<std::vector<double>> levels_;
};

/// Signature of one linear segment: coefficient of w = prod_k inc[w_k] / n!
/// (the truncated tensor exponential of the increment).
TruncatedSignature segment_signature(const std::vector<double>& increment, int level);

/// Graded concatenation product: coeff(w) = sum over splits w = u.v of
/// a(u) * b(v). Signature of the concatenated path.
TruncatedSignature chen_concat(const TruncatedSignature& a, const TruncatedSignature& b);

/// Fold of segment signatures along the path.
TruncatedSignature path_signature(const PLPath& x, int level);

/// Linear pairing <s, sig>; throws when s has a word above the truncation
/// level.
double pair(const FormalSum& s, const TruncatedSignature& sig);

/// One path's comparison of det of the d x d level-2 signature matrix
/// against 2^{-d} <inv(column tableau), sig>^2.
struct CgmReport {
    double lhs = 0.0;      // determinant of the level-2 matrix
    double rhs = 0.0;      // 2^{-d} * pairing^2
    double abs_err = 0.0;
    double rel_err = 0.0;  // abs_err / max(|lhs|, |rhs|), 0 when both vanish
    bool nonneg_ok = true; // lhs >= -(tolerance slack)
    bool pass = false;
};

/// pass iff |lhs - rhs| <= max(abs_floor, tol * max(|lhs|, |rhs|)) and the
/// determinant is nonnegative up to the same slack.
CgmReport verify_cgm(const PLPath& x, double tol, double abs_floor = 1e-12);

struct CgmBatch {
    int d = 0;
    int paths = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    double abs_floor = 0.0;
    int passed = 0;
    int failed = 0;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    int worst_path = -1;    // smallest index attaining max_rel_err
    CgmReport worst;
    int first_failed = -1;  // -1 when all paths pass
    CgmReport first_failed_report;
};

/// Runs verify_cgm on `paths` seeded random paths (2..8 segments each),
/// parallel across paths; all aggregates are order-independent, so the
/// report is identical for any thread count.
CgmBatch run_cgm_batch(int d, int paths, std::uint64_t seed, double tol,
                       double abs_floor = 1e-12);
CgmBatch run_cgm_batch_serial(int d, int paths, std::uint64_t seed, double tol,
                              double abs_floor = 1e-12);

}  // namespace shufflelab
