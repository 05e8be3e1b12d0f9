#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace shufflelab {

/// A letter of the alphabet {1..d}, stored as its integer value.
using Letter = std::uint8_t;

/// A word over {1..d}: a finite (possibly empty) sequence of letters.
/// Letters are packed one byte each; words at the scales of this library
/// (length <= 15) stay inside the small-string buffer.
class Word {
public:
    Word() = default;
    explicit Word(std::string raw_letters) : letters_(std::move(raw_letters)) {}
    Word(std::initializer_list<int> ls) {
        letters_.reserve(ls.size());
        for (int l : ls) letters_.push_back(checked(l));
    }

    /// Parse "122", "e" (empty word) or bracketed letters like "[10]3".
    static Word parse(std::string_view text);

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Letter at(std::size_t i) const { return static_cast<Letter>(letters_[i]); }
    Letter last() const { return static_cast<Letter>(letters_.back()); }
    Letter max_letter() const;

    Word concat(const Word& o) const { return Word(letters_ + o.letters_); }
    Word appended(Letter l) const {
        Word w(*this);
        w.letters_.push_back(static_cast<char>(l));
        return w;
    }
    /// The word with its last letter removed.
    Word dropped_last() const { return Word(letters_.substr(0, letters_.size() - 1)); }

    const std::string& bytes() const { return letters_; }

    /// Digit string; letters above 9 are bracketed, e.g. "[10]". Empty word: "e".
    std::string str() const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return letters_ != o.letters_; }

    /// Canonical order: by length first, then lexicographically.
    bool operator<(const Word& o) const {
        if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
        return letters_ < o.letters_;
    }

private:
    static char checked(int l);

    std::string letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const {
        return std::hash<std::string>{}(w.bytes());
    }
};

}  // namespace shufflelab
