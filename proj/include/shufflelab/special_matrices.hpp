#pragma once

#include "shufflelab/formal_sum.hpp"
#include "shufflelab/matrix.hpp"
#include "shufflelab/ring.hpp"

namespace shufflelab {

/// d x d matrix over the shuffle ring whose (i,j) entry is the two-letter
/// word ij (letters are 1-based).
AlgMatrix<ShuffleRing> build_W(int d);

/// Bordered skew matrix for odd d: top-left block 2*Anti[W_d], last column
/// the single letters 1..d, last row their negatives, corner 0. Size d+1.
AlgMatrix<ShuffleRing> build_Z(int d);

/// sum_{sigma,tau in S_d} sgn(sigma) sgn(tau)
///   (a_{sigma(1)} b_{tau(1)} > a_{sigma(2)} b_{tau(2)} > ... ) with strict
/// left bracketing, over the identified alphabets a_i = b_i = i. Equals
/// det of the matrix with entries ij.
FormalSum andreief_rhs(int d);
FormalSum andreief_rhs_serial(int d);

/// sum_{sigma} sgn(sigma) sum_{tau} prod_i tau(i)sigma(tau(i)), the product
/// being concatenation of two-letter blocks.
FormalSum block_concat_form(int d);

}  // namespace shufflelab
