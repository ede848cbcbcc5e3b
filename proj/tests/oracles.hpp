#pragma once

// Independent reference computations used to cross-check the library.
// Nothing here calls the library's elimination or complex builders.

#include "lhh/sparse.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using lhh::Rational;
using Dense = std::vector<std::vector<Rational>>;

Dense to_dense(const lhh::SparseMatrix& m);
/// Textbook Gaussian elimination over Q.
std::size_t dense_rank(Dense a);
std::size_t dense_rank(const lhh::SparseMatrix& m);

/// HH_n(Q[x]/(x^m)) from the 2-periodic resolution
/// A <-0- A <-m x^{m-1}- A <-0- A <- ..., built directly on the monomial basis.
std::size_t truncated_poly_hh(int m, int n);

/// Number of conjugacy classes of a group given by a Cayley table.
std::size_t conjugacy_classes(const std::vector<std::vector<int>>& table);

/// Cayley table of S_3 on lexicographically ordered permutations, composition (ab)(x) = a(b(x)).
std::vector<std::vector<int>> s3_table();

}  // namespace oracle
