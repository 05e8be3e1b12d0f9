#include "shufflelab/invariants.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shufflelab/parallel.hpp"
#include "shufflelab/permutation.hpp"

namespace shufflelab {

namespace {

/// All elements of the column stabilizer of t: the direct product over
/// columns of the symmetric groups on each column's entry set, embedded in
/// S_n. For a d x w rectangle that is (d!)^w permutations.
std::vector<Permutation> column_stabilizer(const Tableau& t) {
    const int n = t.rows() * t.cols();
    // Per column, every arrangement of its entries.
    std::vector<std::vector<std::vector<int>>> arrangements;
    for (int c = 0; c < t.cols(); ++c) {
        const std::vector<int> entries = t.column(c);
        std::vector<std::vector<int>> arr;
        for (const auto& p : all_permutations(t.rows())) {
            std::vector<int> a(entries.size());
            for (std::size_t i = 0; i < entries.size(); ++i)
                a[i] = entries[static_cast<std::size_t>(p.map0(static_cast<int>(i)))];
            arr.push_back(std::move(a));
        }
        arrangements.push_back(std::move(arr));
    }
    std::vector<Permutation> out;
    std::vector<std::size_t> choice(static_cast<std::size_t>(t.cols()), 0);
    while (true) {
        std::vector<int> images(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
        for (int c = 0; c < t.cols(); ++c) {
            const std::vector<int> entries = t.column(c);
            const std::vector<int>& arr = arrangements[static_cast<std::size_t>(c)]
                                                      [choice[static_cast<std::size_t>(c)]];
            for (std::size_t i = 0; i < entries.size(); ++i)
                images[static_cast<std::size_t>(entries[i] - 1)] = arr[i];
        }
        out.push_back(Permutation::from_one_line(images));
        int c = t.cols() - 1;
        while (c >= 0) {
            auto& ch = choice[static_cast<std::size_t>(c)];
            if (++ch < arrangements[static_cast<std::size_t>(c)].size()) break;
            ch = 0;
            --c;
        }
        if (c < 0) break;
    }
    return out;
}

}  // namespace

FormalSum inv_serial(const Tableau& t) {
    const Word base = t.row_word();
    FormalSum out(t.rows());
    for (const Permutation& sigma : column_stabilizer(t))
        out.add_term(permute_positions(sigma, base), Rational(sigma.sign()));
    return out;
}

FormalSum inv(const Tableau& t) {
    const std::vector<Permutation> stab = column_stabilizer(t);
    if (stab.size() < 64) return inv_serial(t);
    const Word base = t.row_word();
    return par::parallel_reduce<FormalSum>(
        stab.size(), [&] { return FormalSum::zero(t.rows()); },
        [&](FormalSum& acc, std::size_t i) {
            acc.add_term(permute_positions(stab[i], base), Rational(stab[i].sign()));
        },
        [](FormalSum& into, FormalSum&& part) { into.absorb(part); });
}

SubgroupH h_generators(int d) {
    if (d < 2) throw std::invalid_argument("h_generators: requires d >= 2");
    SubgroupH h;
    h.d = d;
    for (int i = 1; i < d; ++i)
        h.generators.push_back(Permutation::transposition(2 * d, 2 * i - 1, 2 * i + 1));
    for (int i = 1; i < d; ++i)
        h.generators.push_back(Permutation::transposition(2 * d, 2 * i, 2 * i + 2));
    return h;
}

bool check_sign_equivariance(const FormalSum& s, const SubgroupH& h,
                             int exhaustive_word_length) {
    const auto deg = s.homogeneous_degree();
    if (!deg || *deg != 2 * h.d)
        throw std::invalid_argument("check_sign_equivariance: input must be homogeneous of degree " +
                                    std::to_string(2 * h.d));
    for (const Permutation& g : h.generators) {
        if (act(g, s) != s.scale(Rational(g.sign()))) return false;
    }
    if (exhaustive_word_length > 0) {
        // Breadth-first products of up to that many generators.
        std::vector<Permutation> layer{Permutation::identity(2 * h.d)};
        std::vector<Permutation> seen = layer;
        for (int len = 1; len <= exhaustive_word_length; ++len) {
            std::vector<Permutation> next;
            for (const Permutation& p : layer) {
                for (const Permutation& g : h.generators) {
                    Permutation q = g.compose(p);
                    bool known = false;
                    for (const Permutation& r : seen)
                        if (r == q) {
                            known = true;
                            break;
                        }
                    if (known) continue;
                    seen.push_back(q);
                    next.push_back(q);
                    if (act(q, s) != s.scale(Rational(q.sign()))) return false;
                }
            }
            layer = std::move(next);
        }
    }
    return true;
}

}  // namespace shufflelab
