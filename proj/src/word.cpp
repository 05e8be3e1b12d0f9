#include "shufflelab/word.hpp"

#include <stdexcept>

namespace shufflelab {

char Word::checked(int l) {
    if (l < 1 || l > 255) throw std::invalid_argument("Word: letter out of range 1..255");
    return static_cast<char>(static_cast<unsigned char>(l));
}

Word Word::parse(std::string_view text) {
    if (text == "e") return Word();
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c >= '1' && c <= '9') {
            w.letters_.push_back(checked(c - '0'));
            ++i;
        } else if (c == '[') {
            std::size_t close = text.find(']', i);
            if (close == std::string_view::npos)
                throw std::invalid_argument("Word: unterminated '[' in \"" + std::string(text) + "\"");
            int val = 0;
            if (close == i + 1) throw std::invalid_argument("Word: empty brackets");
            for (std::size_t k = i + 1; k < close; ++k) {
                if (text[k] < '0' || text[k] > '9')
                    throw std::invalid_argument("Word: non-digit inside brackets");
                val = val * 10 + (text[k] - '0');
                if (val > 255) throw std::invalid_argument("Word: letter out of range 1..255");
            }
            w.letters_.push_back(checked(val));
            i = close + 1;
        } else {
            throw std::invalid_argument("Word: unexpected character '" + std::string(1, c) +
                                        "' in \"" + std::string(text) + "\"");
        }
    }
    return w;
}

Letter Word::max_letter() const {
    Letter m = 0;
    for (char c : letters_) {
        Letter l = static_cast<Letter>(static_cast<unsigned char>(c));
        if (l > m) m = l;
    }
    return m;
}

std::string Word::str() const {
    if (letters_.empty()) return "e";
    std::string out;
    out.reserve(letters_.size());
    for (char c : letters_) {
        int l = static_cast<unsigned char>(c);
        if (l <= 9) {
            out.push_back(static_cast<char>('0' + l));
        } else {
            out += '[' + std::to_string(l) + ']';
        }
    }
    return out;
}

}  // namespace shufflelab
