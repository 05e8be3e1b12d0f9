#include "shufflelab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace shufflelab {

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("Permutation: negative size");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::from_one_line(const std::vector<int>& images_one_based) {
    const int n = static_cast<int>(images_one_based.size());
    std::vector<int> img(images_one_based.size());
    std::vector<bool> seen(images_one_based.size(), false);
    for (std::size_t i = 0; i < images_one_based.size(); ++i) {
        int v = images_one_based[i];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Permutation: images are not a bijection of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
        img[i] = v - 1;
    }
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw std::invalid_argument("Permutation: bad transposition points");
    Permutation p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size())
        throw std::invalid_argument("Permutation: size mismatch in compose");
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        img[i] = img_[static_cast<std::size_t>(other.img_[i])];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        img[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return Permutation(std::move(img));
}

int Permutation::sign() const {
    std::vector<bool> seen(img_.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i;
        int len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(img_[j]);
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

std::string Permutation::str() const {
    std::vector<bool> seen(img_.size(), false);
    std::string out;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == static_cast<int>(i)) continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(img_[j]);
        }
        out += ')';
    }
    return out.empty() ? "id" : out;
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 0) throw std::invalid_argument("all_permutations: negative size");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        std::vector<int> one_based(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) one_based[i] = img[i] + 1;
        out.push_back(Permutation::from_one_line(one_based));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Word permute_positions(const Permutation& sigma, const Word& w) {
    if (static_cast<std::size_t>(sigma.size()) != w.length())
        throw std::invalid_argument("permute_positions: length mismatch");
    std::string out(w.length(), '\0');
    const std::string& in = w.bytes();
    for (std::size_t l = 0; l < in.size(); ++l)
        out[static_cast<std::size_t>(sigma.map0(static_cast<int>(l)))] = in[l];
    return Word(std::move(out));
}

}  // namespace shufflelab
