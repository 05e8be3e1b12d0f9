#include "shufflelab/special_matrices.hpp"

#include <stdexcept>

#include "shufflelab/parallel.hpp"
#include "shufflelab/permutation.hpp"
#include "shufflelab/shuffle.hpp"

namespace shufflelab {

AlgMatrix<ShuffleRing> build_W(int d) {
    if (d < 1) throw std::invalid_argument("build_W: requires d >= 1");
    AlgMatrix<ShuffleRing> w(ShuffleRing{d}, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            w.at(i, j) = FormalSum::from_word(d, Word{i + 1, j + 1});
    return w;
}

AlgMatrix<ShuffleRing> build_Z(int d) {
    if (d < 1 || d % 2 == 0) throw std::invalid_argument("build_Z: requires odd d >= 1");
    AlgMatrix<ShuffleRing> z(ShuffleRing{d}, d + 1);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            // 2 * Anti[W_d] entry: ij - ji.
            FormalSum e = FormalSum::from_word(d, Word{i + 1, j + 1});
            e.add_term(Word{j + 1, i + 1}, Rational(-1));
            z.at(i, j) = std::move(e);
        }
        z.at(i, d) = FormalSum::from_word(d, Word{i + 1});
        z.at(d, i) = FormalSum::from_term(d, Word{i + 1}, Rational(-1));
    }
    return z;
}

namespace {

FormalSum andreief_pair_term(int d, const std::vector<Permutation>& perms,
                             std::size_t sigma_i, std::size_t tau_i) {
    const Permutation& sigma = perms[sigma_i];
    const Permutation& tau = perms[tau_i];
    std::vector<FormalSum> factors;
    factors.reserve(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i)
        factors.push_back(FormalSum::from_word(d, Word{sigma.map1(i), tau.map1(i)}));
    FormalSum chain = half_shuffle_chain(factors);
    return sigma.sign() * tau.sign() < 0 ? chain.negate() : chain;
}

}  // namespace

FormalSum andreief_rhs_serial(int d) {
    if (d < 1) throw std::invalid_argument("andreief_rhs: requires d >= 1");
    const auto perms = all_permutations(d);
    FormalSum out(d);
    for (std::size_t s = 0; s < perms.size(); ++s)
        for (std::size_t t = 0; t < perms.size(); ++t)
            out.absorb(andreief_pair_term(d, perms, s, t));
    return out;
}

FormalSum andreief_rhs(int d) {
    if (d < 1) throw std::invalid_argument("andreief_rhs: requires d >= 1");
    const auto perms = all_permutations(d);
    const std::size_t pairs = perms.size() * perms.size();
    if (pairs < 16) return andreief_rhs_serial(d);
    return par::parallel_reduce<FormalSum>(
        pairs, [&] { return FormalSum::zero(d); },
        [&](FormalSum& acc, std::size_t i) {
            acc.absorb(andreief_pair_term(d, perms, i / perms.size(), i % perms.size()));
        },
        [](FormalSum& into, FormalSum&& part) { into.absorb(part); });
}

FormalSum block_concat_form(int d) {
    if (d < 1) throw std::invalid_argument("block_concat_form: requires d >= 1");
    const auto perms = all_permutations(d);
    FormalSum out(d);
    for (const Permutation& sigma : perms) {
        const Rational sign(sigma.sign());
        for (const Permutation& tau : perms) {
            std::string letters;
            letters.reserve(static_cast<std::size_t>(2 * d));
            for (int i = 1; i <= d; ++i) {
                const int t = tau.map1(i);
                letters.push_back(static_cast<char>(t));
                letters.push_back(static_cast<char>(sigma.map1(t)));
            }
            out.add_term(Word(std::move(letters)), sign);
        }
    }
    return out;
}

}  // namespace shufflelab
