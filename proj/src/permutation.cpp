#include "lhh/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lhh {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("Permutation: images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::cyclic_shift(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return Permutation(std::move(im));
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("Permutation::after: size mismatch");
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[i] = images_[other.images_[i]];
  return Permutation(std::move(im));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool Permutation::is_full_cycle() const {
  if (images_.empty()) return false;
  int len = 0, j = 0;
  do {
    j = images_[j];
    ++len;
  } while (j != 0);
  return len == size();
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < size(); ++i) os << (i ? " " : "") << images_[i] + 1;
  os << ']';
  return os.str();
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(im);
  while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::size_t lex_rank(const Permutation& sigma) {
  const int n = sigma.size();
  std::size_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (sigma(j) < sigma(i)) ++smaller;
    r = r * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
  }
  return r;
}

std::vector<Permutation> full_cycles(int n) {
  if (n < 1) throw std::invalid_argument("full_cycles: n must be positive");
  std::vector<Permutation> out;
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    std::vector<int> im(n);
    int prev = 0;
    for (int v : rest) {
      im[prev] = v;
      prev = v;
    }
    im[prev] = 0;
    out.emplace_back(std::move(im));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t full_cycle_rank(const std::vector<Permutation>& sorted_cycles, const Permutation& sigma) {
  auto it = std::lower_bound(sorted_cycles.begin(), sorted_cycles.end(), sigma);
  if (it == sorted_cycles.end() || !(*it == sigma))
    throw std::invalid_argument("full_cycle_rank: " + sigma.to_string() + " is not a full cycle of this size");
  return static_cast<std::size_t>(it - sorted_cycles.begin());
}

std::vector<int> cycle_order(const Permutation& sigma) {
  if (!sigma.is_full_cycle()) throw std::invalid_argument("cycle_order: " + sigma.to_string() + " is not a full cycle");
  std::vector<int> order;
  int r = 0;
  for (int k = 0; k < sigma.size(); ++k, r = sigma(r)) order.push_back(r);
  return order;
}

int cycle_order_sign(const Permutation& sigma) { return Permutation(cycle_order(sigma)).sign(); }

std::vector<TransportTerm> transport_terms(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<TransportTerm> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int sign = (j % 2 == 1) ? 1 : -1;  // (-1)^{j+1}
      for (int kind = 0; kind < 2; ++kind) {
        // Slot s carries row s before relabeling.
        std::vector<int> row(n);
        std::iota(row.begin(), row.end(), 0);
        std::vector<int> col = sigma.images();
        if (kind == 0) {
          if (sigma(i) != j) continue;
          col[i] = sigma(j);
        } else {
          if (sigma(j) != i) continue;
          row[i] = j;
          col[i] = sigma(i);
        }
        // Surviving slots in order; the deleted row never appears as a column.
        std::vector<int> new_index(n, -1);
        int next = 0;
        for (int s = 0; s < n; ++s)
          if (s != j) new_index[row[s]] = next++;
        std::vector<int> im;
        for (int s = 0; s < n; ++s)
          if (s != j) im.push_back(new_index[col[s]]);
        out.push_back({kind == 0 ? sign : -sign, i, j, kind == 1, Permutation(std::move(im))});
      }
    }
  }
  return out;
}

Permutation face_U(const Permutation& sigma, int k) {
  const int m = sigma.size();
  if (k < 0 || k >= m) throw std::out_of_range("face_U: index out of range");
  const auto order = cycle_order(sigma);
  if (m == 1) throw std::invalid_argument("face_U: U_1 has no faces");
  // Edge k runs from row order[k] to row order[k+1 mod m].
  const int r = order[k];
  for (const auto& t : transport_terms(sigma)) {
    const int kept_row = t.swapped ? t.slot_j : t.slot_i;
    if (kept_row == r) return t.result;
  }
  throw std::logic_error("face_U: no transport term for edge");
}

}  // namespace lhh
