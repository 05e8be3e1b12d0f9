#pragma once

#include <vector>

#include "shufflelab/formal_sum.hpp"
#include "shufflelab/tableau.hpp"

namespace shufflelab {

/// The signed sum over the column stabilizer of T (permutations mapping each
/// column's entry set to itself) acting by position on T's row word. For a
/// d x w rectangular tableau this has (d!)^w terms before cancellation.
FormalSum inv(const Tableau& t);

/// Serial reference for inv().
FormalSum inv_serial(const Tableau& t);

/// The subgroup of S_{2d} generated by the transpositions
/// (1,3),(3,5),...,(2d-3,2d-1) and (2,4),(4,6),...,(2d-2,2d).
struct SubgroupH {
    int d = 0;
    std::vector<Permutation> generators;  // 2(d-1) transpositions on 2d points
};

SubgroupH h_generators(int d);  // requires d >= 2

/// True iff act(h, s) = sign(h) * s for every generator of H. Since the
/// action is a group action and sign is multiplicative, checking generators
/// suffices; exhaustive_word_length > 0 additionally checks all products of
/// up to that many generators. Requires s homogeneous of degree 2d.
bool check_sign_equivariance(const FormalSum& s, const SubgroupH& h,
                             int exhaustive_word_length = 0);

}  // namespace shufflelab
