#pragma once

#include <span>

#include "shufflelab/formal_sum.hpp"

namespace shufflelab {

/// Shuffle product: sum of all order-preserving interleavings, extended
/// bilinearly. Enumerates interleavings directly (positions of the first
/// word); goes OpenMP-parallel across term pairs for large operands.
FormalSum shuffle(const FormalSum& a, const FormalSum& b);

/// Serial reference for shuffle(), same interleaving enumeration.
FormalSum shuffle_serial(const FormalSum& a, const FormalSum& b);

/// Textbook recursive definition, kept as a test oracle:
/// e?u = u?e = u, (v.a)?(w.b) = (v?(w.b)).a + ((v.a)?w).b.
FormalSum shuffle_recursive(const FormalSum& a, const FormalSum& b);

/// Right half-shuffle: w > i = wi and w > (v.i) = (w ? v).i, bilinear.
/// Defined for non-empty words only; operands with an empty-word term are
/// rejected.
FormalSum half_shuffle(const FormalSum& a, const FormalSum& b);

/// Strict left bracketing ((w1 > w2) > ...) > wk; list must be non-empty.
FormalSum half_shuffle_chain(std::span<const FormalSum> ws);

/// Iterated shuffle product of a list; empty list gives the unit.
FormalSum shuffle_many(std::span<const FormalSum> ws, int alphabet_size_if_empty = 1);

/// k-th shuffle power; binary exponentiation once k >= 4.
FormalSum shuffle_power(const FormalSum& a, int k);

}  // namespace shufflelab
