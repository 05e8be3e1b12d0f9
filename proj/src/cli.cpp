#include "shufflelab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shufflelab/invariants.hpp"
#include "shufflelab/matrix.hpp"
#include "shufflelab/rational.hpp"
#include "shufflelab/ring.hpp"
#include "shufflelab/shuffle.hpp"
#include "shufflelab/signature.hpp"
#include "shufflelab/special_matrices.hpp"
#include "shufflelab/tableau.hpp"

namespace shufflelab {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitVerified = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

/// Bad arguments detected after CLI11 parsing (range/parity/missing flag).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform integer in [lo, hi].
int rand_range(std::uint64_t& state, int lo, int hi) {
    return lo + static_cast<int>(splitmix64(state) %
                                 static_cast<std::uint64_t>(hi - lo + 1));
}

Rational random_rational(std::uint64_t& state) {
    return Rational(rand_range(state, -9, 9), rand_range(state, 1, 9));
}

AlgMatrix<RationalRing> random_skew(std::uint64_t& state, int n) {
    AlgMatrix<RationalRing> m(RationalRing{}, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Rational q = random_rational(state);
            m.at(i, j) = q;
            m.at(j, i) = -q;
        }
    return m;
}

ordered_json word_to_json(const Word& w) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < w.length(); ++i) arr.push_back(static_cast<int>(w.at(i)));
    return arr;
}

ordered_json sum_to_json(const FormalSum& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& [w, c] : s.sorted_terms()) {
        ordered_json t;
        t["word"] = word_to_json(w);
        t["num"] = c.num_str();
        t["den"] = c.den_str();
        arr.push_back(std::move(t));
    }
    return arr;
}

std::string json_value_str(const ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

struct Check {
    std::string name;
    bool pass = false;
    ordered_json detail = ordered_json::object();
};

struct VerifyReport {
    std::string identity;
    ordered_json params = ordered_json::object();
    std::vector<Check> checks;
    std::optional<SumDifference> counterexample;
    ordered_json extra = ordered_json::object();

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add_equality(std::string name, const FormalSum& lhs, const FormalSum& rhs,
                      ordered_json detail = ordered_json::object()) {
        const bool eq = lhs == rhs;
        detail["lhs_terms"] = lhs.term_count();
        detail["rhs_terms"] = rhs.term_count();
        checks.push_back({std::move(name), eq, std::move(detail)});
        if (!eq && !counterexample) counterexample = first_difference(lhs, rhs);
    }

    int emit(std::ostream& out, const std::string& format) const {
        const bool ok = all_pass();
        if (format == "json") {
            ordered_json j;
            j["command"] = "verify";
            j["identity"] = identity;
            j["params"] = params;
            ordered_json cs = ordered_json::array();
            for (const auto& c : checks) {
                ordered_json cj;
                cj["name"] = c.name;
                cj["pass"] = c.pass;
                cj["detail"] = c.detail;
                cs.push_back(std::move(cj));
            }
            j["checks"] = std::move(cs);
            if (counterexample) {
                ordered_json ce;
                ce["word"] = word_to_json(counterexample->word);
                ce["lhs"] = counterexample->lhs.str();
                ce["rhs"] = counterexample->rhs.str();
                j["counterexample"] = std::move(ce);
            } else {
                j["counterexample"] = nullptr;
            }
            if (!extra.empty()) j["extra"] = extra;
            j["status"] = ok ? "verified" : "failed";
            out << j.dump(2) << "\n";
        } else {
            out << "verify " << identity;
            for (const auto& [k, v] : params.items()) out << " " << k << "=" << json_value_str(v);
            out << "\n";
            for (const auto& c : checks) {
                out << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
                for (const auto& [k, v] : c.detail.items())
                    out << "  " << k << "=" << json_value_str(v);
                out << "\n";
            }
            for (const auto& [k, v] : extra.items())
                out << "  " << k << ": " << json_value_str(v) << "\n";
            if (counterexample)
                out << "  counterexample: word=" << counterexample->word.str()
                    << " lhs=" << counterexample->lhs.str()
                    << " rhs=" << counterexample->rhs.str() << "\n";
            out << "result: " << (ok ? "verified" : "FAILED") << "\n";
        }
        return ok ? kExitVerified : kExitFailed;
    }
};

void require_d(int d, int lo, int hi, const std::string& identity) {
    if (d == -1) throw UsageError("identity '" + identity + "' requires --d");
    if (d < lo || d > hi)
        throw UsageError("identity '" + identity + "' supports --d " + std::to_string(lo) +
                         ".." + std::to_string(hi));
}

// det_W(d) = inv(two-column tableau) = 2^-d * inv(column tableau)^(shuffle 2)
VerifyReport verify_main(int d, bool slow) {
    require_d(d, 1, 5, "main");
    if (d == 5 && !slow) throw UsageError("identity 'main' with --d 5 requires --slow");
    VerifyReport rep;
    rep.identity = "main";
    rep.params["d"] = d;

    const FormalSum det_w = det(build_W(d));
    const FormalSum inv_t2 = inv(Tableau::two_column(d));
    const FormalSum inv_t1_sq_halved =
        shuffle_power(inv(Tableau::single_column(d)), 2).scale(Rational::pow2(-d));

    rep.add_equality("det_W_equals_inv_t2", det_w, inv_t2);
    rep.add_equality("det_W_equals_halved_inv_t1_shuffle_sq", det_w, inv_t1_sq_halved);
    if (det_w.term_count() <= 36) {
        ordered_json exps;
        exps["det_W"] = det_w.str();
        exps["inv_t2"] = inv_t2.str();
        exps["halved_inv_t1_shuffle_sq"] = inv_t1_sq_halved.str();
        rep.extra["expansions"] = std::move(exps);
    }
    return rep;
}

VerifyReport verify_andreief(int d) {
    require_d(d, 1, 4, "andreief");
    VerifyReport rep;
    rep.identity = "andreief";
    rep.params["d"] = d;
    rep.add_equality("andreief_rhs_equals_det_W", andreief_rhs(d), det(build_W(d)));
    return rep;
}

// shuffle of k factors = sum over S_k of left-bracketed half-shuffle chains
VerifyReport verify_halfshuffle_expansion(int d, std::uint64_t seed) {
    require_d(d, 1, 3, "halfshuffle-expansion");
    VerifyReport rep;
    rep.identity = "halfshuffle-expansion";
    rep.params["d"] = d;
    rep.params["seed"] = seed;

    std::vector<FormalSum> base;
    for (int a = 1; a <= d; ++a) {
        base.push_back(FormalSum::from_word(d, Word{a}));
        for (int b = 1; b <= d; ++b) base.push_back(FormalSum::from_word(d, Word{a, b}));
    }

    auto expansion_holds = [&](const std::vector<FormalSum>& factors) {
        const FormalSum lhs = shuffle_many(factors, d);
        FormalSum rhs(d);
        std::vector<FormalSum> reordered(factors.size(), FormalSum(d));
        for (const auto& sigma : all_permutations(static_cast<int>(factors.size()))) {
            for (std::size_t i = 0; i < factors.size(); ++i)
                reordered[i] = factors[static_cast<std::size_t>(sigma.map0(static_cast<int>(i)))];
            rhs.absorb(half_shuffle_chain(reordered));
        }
        if (lhs == rhs) return true;
        if (!rep.counterexample) rep.counterexample = first_difference(lhs, rhs);
        return false;
    };

    const std::size_t m = base.size();
    bool exhaustive_ok = true;
    std::size_t exhaustive_cases = 0;
    for (int k = 1; k <= 3; ++k) {
        std::size_t combos = 1;
        for (int i = 0; i < k; ++i) combos *= m;
        for (std::size_t code = 0; code < combos; ++code) {
            std::vector<FormalSum> factors;
            std::size_t c = code;
            for (int i = 0; i < k; ++i) {
                factors.push_back(base[c % m]);
                c /= m;
            }
            ++exhaustive_cases;
            if (!expansion_holds(factors)) {
                exhaustive_ok = false;
                break;
            }
        }
        if (!exhaustive_ok) break;
    }
    rep.checks.push_back({"exhaustive_k_le_3_len_le_2", exhaustive_ok,
                          ordered_json{{"cases", exhaustive_cases}}});

    std::uint64_t state = seed;
    bool random_ok = true;
    const int random_cases = 200;
    for (int t = 0; t < random_cases && random_ok; ++t) {
        std::vector<FormalSum> factors;
        for (int i = 0; i < 4; ++i) {
            const int len = rand_range(state, 1, 2);
            Word w;
            for (int l = 0; l < len; ++l) w = w.appended(static_cast<Letter>(rand_range(state, 1, d)));
            factors.push_back(FormalSum::from_word(d, w));
        }
        random_ok = expansion_holds(factors);
    }
    rep.checks.push_back({"random_k_4", random_ok, ordered_json{{"cases", random_cases}}});
    return rep;
}

VerifyReport verify_h_action(int d) {
    require_d(d, 2, 5, "h-action");
    VerifyReport rep;
    rep.identity = "h-action";
    rep.params["d"] = d;
    const SubgroupH h = h_generators(d);

    auto check_flips = [&](const std::string& name, const FormalSum& s) {
        bool ok = true;
        std::string failing;
        for (const Permutation& g : h.generators) {
            const FormalSum acted = act(g, s);
            const FormalSum expected = s.negate();  // generators are transpositions
            if (acted != expected) {
                ok = false;
                failing = g.str();
                if (!rep.counterexample) rep.counterexample = first_difference(acted, expected);
                break;
            }
        }
        ordered_json detail{{"generators", h.generators.size()}, {"terms", s.term_count()}};
        if (!ok) detail["failing_generator"] = failing;
        rep.checks.push_back({name, ok, std::move(detail)});
    };

    check_flips("inv_t2_flips_sign", inv(Tableau::two_column(d)));
    check_flips("inv_t1_shuffle_sq_flips_sign",
                shuffle_power(inv(Tableau::single_column(d)), 2));
    return rep;
}

// inv(column tableau) = 2^{d/2} * Pf(Anti[W_d]) for even d
VerifyReport verify_debruijn_even(int d) {
    if (d != -1 && d % 2 != 0)
        throw UsageError("identity 'debruijn-even' requires even --d");
    require_d(d, 2, 6, "debruijn-even");
    VerifyReport rep;
    rep.identity = "debruijn-even";
    rep.params["d"] = d;
    const FormalSum lhs = inv(Tableau::single_column(d));
    const FormalSum rhs = pfaffian(anti_part(build_W(d))).scale(Rational::pow2(d / 2));
    rep.add_equality("inv_t1_equals_scaled_pf_anti_W", lhs, rhs);
    return rep;
}

// inv(column tableau) = Pf(Z_d) for odd d
VerifyReport verify_debruijn_odd(int d) {
    if (d != -1 && d % 2 == 0)
        throw UsageError("identity 'debruijn-odd' requires odd --d");
    require_d(d, 1, 5, "debruijn-odd");
    VerifyReport rep;
    rep.identity = "debruijn-odd";
    rep.params["d"] = d;
    rep.add_equality("inv_t1_equals_pf_Z", inv(Tableau::single_column(d)),
                     pfaffian(build_Z(d)));
    return rep;
}

VerifyReport verify_det_pf(std::uint64_t seed) {
    VerifyReport rep;
    rep.identity = "det-pf";
    rep.params["seed"] = seed;

    std::uint64_t state = seed;
    for (int n : {2, 4, 6}) {
        bool ok = true;
        const int cases = 50;
        for (int t = 0; t < cases && ok; ++t) {
            const auto m = random_skew(state, n);
            const Rational pf = pfaffian(m);
            ok = pf * pf == det(m) && pf == pfaffian_perm_sum(m);
        }
        rep.checks.push_back({"rational_skew_n" + std::to_string(n), ok,
                              ordered_json{{"cases", cases}}});
    }

    auto shuffle_case = [&](const std::string& name, const AlgMatrix<ShuffleRing>& m) {
        const FormalSum pf = pfaffian(m);
        const bool ok = shuffle(pf, pf) == det(m) && pf == pfaffian_perm_sum(m);
        rep.checks.push_back({name, ok, ordered_json{{"pf_terms", pf.term_count()}}});
        if (!ok && !rep.counterexample)
            rep.counterexample = first_difference(shuffle(pf, pf), det(m));
    };
    shuffle_case("shuffle_anti_W2", anti_part(build_W(2)));
    shuffle_case("shuffle_anti_W4", anti_part(build_W(4)));
    shuffle_case("shuffle_Z3", build_Z(3));
    return rep;
}

VerifyReport verify_det_skew_rank1(std::uint64_t seed) {
    VerifyReport rep;
    rep.identity = "det-skew-rank1";
    rep.params["seed"] = seed;
    std::uint64_t state = seed;
    bool rows_ok = true;
    bool cols_ok = true;
    const int cases = 50;
    for (int t = 0; t < cases; ++t) {
        const int n = 2 + t % 4;  // sizes 2..5
        const auto a = random_skew(state, n);
        std::vector<Rational> v;
        for (int i = 0; i < n; ++i) v.push_back(random_rational(state));
        const Rational lambda = random_rational(state);
        rows_ok = rows_ok && det_skew_plus_rank1(a, v, lambda, Rank1Replace::Rows).agree;
        cols_ok = cols_ok && det_skew_plus_rank1(a, v, lambda, Rank1Replace::Cols).agree;
    }
    rep.checks.push_back({"direct_equals_row_replacement_sum", rows_ok,
                          ordered_json{{"cases", cases}, {"sizes", "2..5"}}});
    rep.checks.push_back({"direct_equals_col_replacement_sum", cols_ok,
                          ordered_json{{"cases", cases}, {"sizes", "2..5"}}});
    return rep;
}

// Sym[W_d] entry (i,j) = 1/2 (i shuffle j)
VerifyReport verify_sym_w(int d) {
    require_d(d, 1, 6, "sym-w");
    VerifyReport rep;
    rep.identity = "sym-w";
    rep.params["d"] = d;
    const auto sym = sym_part(build_W(d));
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
        for (int j = 0; j < d && ok; ++j) {
            const FormalSum expected =
                shuffle(FormalSum::from_word(d, Word{i + 1}), FormalSum::from_word(d, Word{j + 1}))
                    .scale(Rational(1, 2));
            if (sym.at(i, j) != expected) {
                ok = false;
                if (!rep.counterexample)
                    rep.counterexample = first_difference(sym.at(i, j), expected);
            }
        }
    }
    rep.checks.push_back({"sym_W_entries_are_half_letter_shuffles", ok,
                          ordered_json{{"entries", d * d}}});
    return rep;
}

VerifyReport verify_cgm_identity(int d, int paths, std::uint64_t seed, double tol) {
    require_d(d, 1, 6, "cgm");
    if (paths < 1) throw UsageError("--paths must be >= 1");
    if (!(tol >= 0.0)) throw UsageError("--tol must be >= 0");
    VerifyReport rep;
    rep.identity = "cgm";
    rep.params["d"] = d;
    rep.params["paths"] = paths;
    rep.params["seed"] = seed;
    rep.params["tol"] = tol;

    // tol 0 asks for bit-exact agreement: drop the absolute-error floor too.
    const double abs_floor = tol > 0.0 ? 1e-12 : 0.0;
    const CgmBatch b = run_cgm_batch(d, paths, seed, tol, abs_floor);
    ordered_json detail;
    detail["passed"] = b.passed;
    detail["failed"] = b.failed;
    detail["max_abs_err"] = b.max_abs_err;
    detail["max_rel_err"] = b.max_rel_err;
    detail["worst_path"] = b.worst_path;
    rep.checks.push_back({"level2_det_equals_halved_pairing_sq", b.failed == 0, std::move(detail)});
    if (b.failed > 0) {
        ordered_json ce;
        ce["path"] = b.first_failed;
        ce["lhs"] = b.first_failed_report.lhs;
        ce["rhs"] = b.first_failed_report.rhs;
        ce["abs_err"] = b.first_failed_report.abs_err;
        ce["rel_err"] = b.first_failed_report.rel_err;
        rep.extra["failing_path"] = std::move(ce);
    }
    return rep;
}

struct CliOptions {
    std::string format = "text";
    int d = -1;
    std::uint64_t seed = 1;
    int paths = 100;
    double tol = 1e-9;
    bool slow = false;
    std::string tableau;
    int level = 2;
    std::string identity;
    std::string what;
    std::vector<std::string> operands;
    std::string expr;
    std::string csv;
};

int cmd_verify(const CliOptions& o, std::ostream& out) {
    VerifyReport rep;
    if (o.identity == "main") rep = verify_main(o.d, o.slow);
    else if (o.identity == "andreief") rep = verify_andreief(o.d);
    else if (o.identity == "halfshuffle-expansion") rep = verify_halfshuffle_expansion(o.d, o.seed);
    else if (o.identity == "h-action") rep = verify_h_action(o.d);
    else if (o.identity == "debruijn-even") rep = verify_debruijn_even(o.d);
    else if (o.identity == "debruijn-odd") rep = verify_debruijn_odd(o.d);
    else if (o.identity == "det-pf") rep = verify_det_pf(o.seed);
    else if (o.identity == "det-skew-rank1") rep = verify_det_skew_rank1(o.seed);
    else if (o.identity == "sym-w") rep = verify_sym_w(o.d);
    else if (o.identity == "cgm") rep = verify_cgm_identity(o.d, o.paths, o.seed, o.tol);
    else
        throw UsageError(
            "unknown identity '" + o.identity +
            "' (expected one of: main, andreief, halfshuffle-expansion, h-action, "
            "debruijn-even, debruijn-odd, det-pf, det-skew-rank1, sym-w, cgm)");
    return rep.emit(out, o.format);
}

std::pair<FormalSum, FormalSum> parse_operand_pair(const CliOptions& o) {
    if (o.operands.size() != 2)
        throw UsageError("expand " + o.what + " takes exactly two word arguments");
    const FormalSum a0 = parse_formal_sum(o.operands[0]);
    const FormalSum b0 = parse_formal_sum(o.operands[1]);
    const int d = std::max({a0.alphabet_size(), b0.alphabet_size(), o.d});
    return {parse_formal_sum(o.operands[0], d), parse_formal_sum(o.operands[1], d)};
}

int emit_sum(const FormalSum& s, const CliOptions& o, std::ostream& out,
             const std::string& what) {
    if (o.format == "json") {
        ordered_json j;
        j["command"] = "expand";
        j["expr"] = what;
        j["alphabet"] = s.alphabet_size();
        j["terms"] = sum_to_json(s);
        out << j.dump(2) << "\n";
    } else {
        out << s.str() << "\n";
    }
    return kExitVerified;
}

int cmd_expand(const CliOptions& o, std::ostream& out) {
    if (o.what == "shuffle") {
        const auto [a, b] = parse_operand_pair(o);
        return emit_sum(shuffle(a, b), o, out, "shuffle");
    }
    if (o.what == "halfshuffle") {
        const auto [a, b] = parse_operand_pair(o);
        return emit_sum(half_shuffle(a, b), o, out, "halfshuffle");
    }
    if (!o.operands.empty())
        throw UsageError("expand " + o.what + " takes no word arguments");
    if (o.what == "inv") {
        if (o.tableau.empty()) throw UsageError("expand inv requires --tableau");
        return emit_sum(inv(Tableau::parse(o.tableau)), o, out, "inv");
    }
    if (o.what == "detW") {
        require_d(o.d, 1, 4, "expand detW");
        return emit_sum(det(build_W(o.d)), o, out, "detW");
    }
    if (o.what == "pf-anti-W") {
        if (o.d != -1 && o.d % 2 != 0) throw UsageError("expand pf-anti-W requires even --d");
        require_d(o.d, 2, 6, "expand pf-anti-W");
        return emit_sum(pfaffian(anti_part(build_W(o.d))), o, out, "pf-anti-W");
    }
    if (o.what == "Z") {
        if (o.d != -1 && o.d % 2 == 0) throw UsageError("expand Z requires odd --d");
        require_d(o.d, 1, 5, "expand Z");
        const auto z = build_Z(o.d);
        if (o.format == "json") {
            ordered_json j;
            j["command"] = "expand";
            j["expr"] = "Z";
            j["d"] = o.d;
            ordered_json rows = ordered_json::array();
            for (int i = 0; i < z.size(); ++i) {
                ordered_json row = ordered_json::array();
                for (int k = 0; k < z.size(); ++k) row.push_back(sum_to_json(z.at(i, k)));
                rows.push_back(std::move(row));
            }
            j["matrix"] = std::move(rows);
            out << j.dump(2) << "\n";
        } else {
            for (int i = 0; i < z.size(); ++i)
                for (int k = 0; k < z.size(); ++k)
                    out << "Z[" << i + 1 << "][" << k + 1 << "] = " << z.at(i, k).str() << "\n";
        }
        return kExitVerified;
    }
    throw UsageError("unknown expression '" + o.what +
                     "' (expected one of: shuffle, halfshuffle, inv, detW, pf-anti-W, Z)");
}

int cmd_signature(const CliOptions& o, std::ostream& out) {
    if (o.level < 0) throw UsageError("--level must be >= 0");
    const PLPath x = PLPath::parse_csv_file(o.csv);
    double entries = 0.0;
    for (int n = 0, p = 1; n <= o.level; ++n, p *= x.dim()) {
        entries += static_cast<double>(p);
        if (entries > 2e7) throw UsageError("--level too large for this dimension");
    }
    const TruncatedSignature sig = path_signature(x, o.level);
    if (o.format == "json") {
        ordered_json j;
        j["command"] = "signature";
        j["dim"] = x.dim();
        j["level"] = o.level;
        ordered_json coeffs = ordered_json::array();
        for (int n = 0; n <= o.level; ++n) {
            const auto& data = sig.level_data(n);
            for (std::size_t idx = 0; idx < data.size(); ++idx) {
                ordered_json c;
                ordered_json wa = ordered_json::array();
                std::size_t rem = idx;
                std::vector<int> letters(static_cast<std::size_t>(n));
                for (int k = n - 1; k >= 0; --k) {
                    letters[static_cast<std::size_t>(k)] =
                        static_cast<int>(rem % static_cast<std::size_t>(x.dim())) + 1;
                    rem /= static_cast<std::size_t>(x.dim());
                }
                for (int l : letters) wa.push_back(l);
                c["word"] = std::move(wa);
                c["value"] = data[idx];
                coeffs.push_back(std::move(c));
            }
        }
        j["coefficients"] = std::move(coeffs);
        out << j.dump(2) << "\n";
    } else {
        for (int n = 0; n <= o.level; ++n) {
            const auto& data = sig.level_data(n);
            for (std::size_t idx = 0; idx < data.size(); ++idx) {
                std::string w;
                if (n == 0) {
                    w = "e";
                } else {
                    std::size_t rem = idx;
                    std::string letters(static_cast<std::size_t>(n), '\0');
                    for (int k = n - 1; k >= 0; --k) {
                        letters[static_cast<std::size_t>(k)] =
                            static_cast<char>(rem % static_cast<std::size_t>(x.dim()) + 1);
                        rem /= static_cast<std::size_t>(x.dim());
                    }
                    w = Word(std::move(letters)).str();
                }
                out << w << " " << fmt_double(data[idx]) << "\n";
            }
        }
    }
    return kExitVerified;
}

FormalSum parse_pair_expr(const std::string& raw, int d_flag) {
    std::string t = raw;
    const auto not_space = [](char c) { return c != ' ' && c != '\t'; };
    t.erase(t.begin(), std::find_if(t.begin(), t.end(), not_space));
    t.erase(std::find_if(t.rbegin(), t.rend(), not_space).base(), t.end());
    if (t.rfind("inv(", 0) == 0 && !t.empty() && t.back() == ')') {
        const std::string inner = t.substr(4, t.size() - 5);
        if (inner.rfind("t1,", 0) == 0)
            return inv(Tableau::single_column(std::stoi(inner.substr(3))));
        if (inner.rfind("t2,", 0) == 0)
            return inv(Tableau::two_column(std::stoi(inner.substr(3))));
        return inv(Tableau::parse(inner));
    }
    return parse_formal_sum(t, d_flag > 0 ? d_flag : 0);
}

int cmd_pair(const CliOptions& o, std::ostream& out) {
    const FormalSum s = parse_pair_expr(o.expr, o.d);
    const PLPath x = PLPath::parse_csv_file(o.csv);
    const TruncatedSignature sig = path_signature(x, s.max_word_length());
    const double value = pair(s, sig);
    if (o.format == "json") {
        ordered_json j;
        j["command"] = "pair";
        j["expr"] = o.expr;
        j["value"] = value;
        out << j.dump(2) << "\n";
    } else {
        out << fmt_double(value) << "\n";
    }
    return kExitVerified;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"shuffle-lab: exact shuffle-algebra identities, tableau invariants, "
                 "Pfaffians, and path signatures"};
    app.require_subcommand(1);

    CliOptions o;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* verify = app.add_subcommand("verify", "Check a built-in identity and report the result");
    verify->add_option("identity", o.identity,
                       "One of: main, andreief, halfshuffle-expansion, h-action, debruijn-even, "
                       "debruijn-odd, det-pf, det-skew-rank1, sym-w, cgm")
        ->required();
    verify->add_option("--d", o.d, "Alphabet size / matrix dimension");
    verify->add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();
    verify->add_option("--paths", o.paths, "Number of random paths (cgm)")->capture_default_str();
    verify->add_option("--tol", o.tol, "Relative tolerance (cgm); 0 demands bit-exact agreement")
        ->capture_default_str();
    verify->add_flag("--slow", o.slow, "Allow the expensive d=5 runs");
    add_format(verify);

    CLI::App* expand = app.add_subcommand("expand", "Expand an expression to canonical form");
    expand->add_option("expr", o.what,
                       "One of: shuffle, halfshuffle, inv, detW, pf-anti-W, Z")
        ->required();
    expand->add_option("words", o.operands, "Word operands (shuffle/halfshuffle)");
    expand->add_option("--tableau", o.tableau, "Tableau such as \"1,2;3,4\" (inv)");
    expand->add_option("--d", o.d, "Alphabet size / matrix dimension");
    add_format(expand);

    CLI::App* signature = app.add_subcommand("signature", "Truncated signature of a CSV path");
    signature->add_option("csv", o.csv, "CSV file: one point per row, comma-separated coordinates")
        ->required();
    signature->add_option("--level", o.level, "Truncation level")->capture_default_str();
    add_format(signature);

    CLI::App* pair_cmd = app.add_subcommand("pair", "Pair a formal sum with a path's signature");
    pair_cmd->add_option("expr", o.expr,
                         "Formal sum such as \"12 - 21\", or inv(t1,D) / inv(t2,D) / inv(R;R;...)")
        ->required();
    pair_cmd->add_option("csv", o.csv, "CSV file: one point per row, comma-separated coordinates")
        ->required();
    pair_cmd->add_option("--d", o.d, "Alphabet size override for plain word sums");
    add_format(pair_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitVerified;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitVerified;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(o, out);
        if (app.got_subcommand(expand)) return cmd_expand(o, out);
        if (app.got_subcommand(signature)) return cmd_signature(o, out);
        if (app.got_subcommand(pair_cmd)) return cmd_pair(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace shufflelab
