#pragma once

#include <string_view>
#include <vector>

#include "shufflelab/word.hpp"

namespace shufflelab {

/// Rectangular standard Young tableau: a rows x cols grid filled with
/// 1..rows*cols, strictly increasing along every row and every column.
/// Non-rectangular or non-standard fillings are rejected at construction.
class Tableau {
public:
    Tableau(int rows, int cols, std::vector<int> entries_row_major);

    /// Text form "1,2;3,4": rows separated by ';', entries by ','.
    static Tableau parse(std::string_view text);

    /// t_{1,d}: the single-column tableau with entries 1..d.
    static Tableau single_column(int d);
    /// t_{2,d}: the two-column tableau with row i holding 2i-1, 2i.
    static Tableau two_column(int d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int entry(int r, int c) const { return e_[static_cast<std::size_t>(r * cols_ + c)]; }

    /// Entries of column c, top to bottom (increasing).
    std::vector<int> column(int c) const;

    /// Word j_1..j_n with j_l = i iff l sits in row i; length rows*cols,
    /// alphabet {1..rows}.
    Word row_word() const;

    std::string str() const;

    bool operator==(const Tableau& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    int rows_;
    int cols_;
    std::vector<int> e_;
};

}  // namespace shufflelab
