#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lhh {

/// Permutation of {0, ..., n-1}; images[i] = sigma(i). Printed 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// The cyclic shift i -> i+1 mod n.
  static Permutation cyclic_shift(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  int sign() const;
  Permutation inverse() const;
  /// (*this after other)(i) = this(other(i)).
  Permutation after(const Permutation& other) const;
  /// Cycle lengths in decreasing order.
  std::vector<int> cycle_type() const;
  /// True iff sigma is a single n-cycle (the identity of S_1 counts).
  bool is_full_cycle() const;
  /// One-line notation, 1-based: "[2 3 1]".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// S_n in lexicographic order of the image sequence.
std::vector<Permutation> symmetric_group(int n);
/// Position of sigma in symmetric_group(n).
std::size_t lex_rank(const Permutation& sigma);

/// U_n: all n-cycles, lexicographically sorted; |U_n| = (n-1)!.
std::vector<Permutation> full_cycles(int n);
/// Position of an n-cycle in full_cycles(n); throws if sigma is not an n-cycle.
std::size_t full_cycle_rank(const std::vector<Permutation>& sorted_cycles, const Permutation& sigma);

/// Points of a full cycle in cycle order starting at 0: 0, sigma(0), sigma^2(0), ...
std::vector<int> cycle_order(const Permutation& sigma);
/// Sign of the permutation k -> cycle_order[k].
int cycle_order_sign(const Permutation& sigma);

/// One term of the elementary-matrix transport of the Leibniz boundary.
///
/// For slots i < j of E^{a_0}_{0 sigma(0)} (x) ... the bracket of slots i and j
/// survives when sigma(i) = j (kind A: slot i becomes a_i a_j) or sigma(j) = i
/// (kind B: slot i becomes a_j a_i, sign flipped). Slot j is deleted and rows are
/// renumbered in slot order.
struct TransportTerm {
  int sign;
  int slot_i;
  int slot_j;
  bool swapped;  // kind B: product is a_j a_i
  Permutation result;
};

std::vector<TransportTerm> transport_terms(const Permutation& sigma);

/// Face d_k of the presimplicial set U_{*+1}: contracts the edge sigma^k(0) -> sigma^{k+1}(0).
Permutation face_U(const Permutation& sigma, int k);

}  // namespace lhh
