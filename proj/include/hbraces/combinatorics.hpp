#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hbraces {

/// A permutation in one-line notation, 0-based: perm[k] is the original
/// position of the element that ends up at position k.
using Permutation = std::vector<std::size_t>;

/// Parities (degrees mod 2), one entry per graded symbol.
using ParityVector = std::vector<int>;

/// Koszul sign of reordering the graded symbols nu_0..nu_{n-1} into
/// nu_perm[0]..nu_perm[n-1] in the free graded commutative algebra:
/// -1 per inverted pair of odd symbols. Returns +1 or -1.
/// Throws ContractViolation on a length mismatch or a non-bijection.
int koszul_sign(std::span<const std::size_t> perm, std::span<const int> parities);

/// All (u, v)-unshuffles in lexicographic order of their one-line notation.
std::vector<Permutation> unshuffles(std::size_t u, std::size_t v);

/// Ordered tuples of positive integers summing to r, grouped by length and
/// lexicographic within a length. compositions(0) is the single empty tuple.
std::vector<std::vector<std::size_t>> compositions(std::size_t r);

/// Set partitions of {0..n-1}. Blocks are sorted internally and ordered by
/// their smallest element.
using SetPartition = std::vector<std::vector<std::size_t>>;
std::vector<SetPartition> set_partitions(std::size_t n);

/// Binomial coefficient and Bell number, for counting checks.
unsigned long long binomial(unsigned n, unsigned k);
unsigned long long bell_number(unsigned n);

/// Every vector in {0,1}^n, in binary counting order (first entry slowest).
std::vector<ParityVector> all_parity_vectors(std::size_t n);

} // namespace hbraces
