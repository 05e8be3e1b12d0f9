#include "shufflelab/tableau.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace shufflelab {

Tableau::Tableau(int rows, int cols, std::vector<int> entries_row_major)
    : rows_(rows), cols_(cols), e_(std::move(entries_row_major)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("Tableau: shape must be at least 1x1");
    const std::size_t n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    if (e_.size() != n) throw std::invalid_argument("Tableau: entry count does not match shape");
    std::vector<bool> seen(n, false);
    for (int v : e_) {
        if (v < 1 || v > static_cast<int>(n) || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Tableau: entries must be a permutation of 1.." +
                                        std::to_string(n));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    for (int r = 0; r < rows_; ++r)
        for (int c = 1; c < cols_; ++c)
            if (entry(r, c - 1) >= entry(r, c))
                throw std::invalid_argument("Tableau: row " + std::to_string(r + 1) +
                                            " is not strictly increasing");
    for (int c = 0; c < cols_; ++c)
        for (int r = 1; r < rows_; ++r)
            if (entry(r - 1, c) >= entry(r, c))
                throw std::invalid_argument("Tableau: column " + std::to_string(c + 1) +
                                            " is not strictly increasing");
}

Tableau Tableau::parse(std::string_view text) {
    std::vector<int> entries;
    int rows = 0;
    int cols = -1;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t row_end = text.find(';', i);
        if (row_end == std::string_view::npos) row_end = text.size();
        std::string_view row = text.substr(i, row_end - i);
        int row_cols = 0;
        std::size_t j = 0;
        while (j <= row.size()) {
            std::size_t cell_end = row.find(',', j);
            if (cell_end == std::string_view::npos) cell_end = row.size();
            std::string_view cell = row.substr(j, cell_end - j);
            int value = 0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (ec != std::errc() || ptr != cell.data() + cell.size())
                throw std::invalid_argument("Tableau: bad entry \"" + std::string(cell) + "\"");
            entries.push_back(value);
            ++row_cols;
            j = cell_end + 1;
        }
        if (cols == -1) cols = row_cols;
        else if (cols != row_cols)
            throw std::invalid_argument("Tableau: rows of unequal length (shape must be rectangular)");
        ++rows;
        i = row_end + 1;
    }
    return Tableau(rows, cols, std::move(entries));
}

Tableau Tableau::single_column(int d) {
    std::vector<int> e(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    return Tableau(d, 1, std::move(e));
}

Tableau Tableau::two_column(int d) {
    std::vector<int> e(static_cast<std::size_t>(2 * d));
    for (int i = 0; i < d; ++i) {
        e[static_cast<std::size_t>(2 * i)] = 2 * i + 1;
        e[static_cast<std::size_t>(2 * i + 1)] = 2 * i + 2;
    }
    return Tableau(d, 2, std::move(e));
}

std::vector<int> Tableau::column(int c) const {
    std::vector<int> out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = entry(r, c);
    return out;
}

Word Tableau::row_word() const {
    const int n = rows_ * cols_;
    std::string letters(static_cast<std::size_t>(n), '\0');
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            letters[static_cast<std::size_t>(entry(r, c) - 1)] = static_cast<char>(r + 1);
    return Word(std::move(letters));
}

std::string Tableau::str() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        if (r) out += ';';
        for (int c = 0; c < cols_; ++c) {
            if (c) out += ',';
            out += std::to_string(entry(r, c));
        }
    }
    return out;
}

}  // namespace shufflelab
