#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monopos/bitset.hpp"
#include "monopos/errors.hpp"

namespace monopos {

/// Branch and bound over a hereditary family of vertex sets (every subset of
/// a feasible set is feasible).
///
/// A Model supplies
///   Bits<W> include(const Bits<W>& chosen, const Bits<W>& cand, int v) const
///     -- the candidates still addable once v joins chosen (v and chosen
///        removed from the result);
///   int bound(const Bits<W>& cand) const
///     -- an upper bound on how many members of cand can be added together.
///
/// Vertices are branched on in the order given at construction.
template <std::size_t W, class Model>
class SubsetSearch {
 public:
  SubsetSearch(const Model& model, std::vector<int> order, std::uint64_t node_limit)
      : model_(model), order_(std::move(order)), node_limit_(node_limit) {}

  /// Largest feasible subset of universe (include branch first). Sets no
  /// larger than lower_bound are not reported; the empty set is returned
  /// when nothing beats it.
  Bits<W> maximize(const Bits<W>& universe, int lower_bound = 0) {
    best_ = Bits<W>{};
    best_size_ = lower_bound;
    maximize_from(Bits<W>{}, 0, universe, 0);
    return best_;
  }
  int best_size() const { return best_size_; }

  /// First feasible subset of the given size in depth-first order with the
  /// exclude branch taken first. With the order listing vertices from the
  /// highest id down, that is the subset with the smallest bit pattern.
  std::optional<Bits<W>> first_of_size(const Bits<W>& universe, int target) {
    found_.reset();
    first_from(Bits<W>{}, 0, universe, 0, target);
    return found_;
  }

  std::uint64_t expansions() const { return expansions_; }

 private:
  void tick() {
    if (++expansions_ > node_limit_) {
      throw LimitExceeded("branch and bound exceeded its node limit of " + std::to_string(node_limit_));
    }
  }

  std::size_t next_index(const Bits<W>& cand, std::size_t i) const {
    while (!cand.test(order_[i])) ++i;
    return i;
  }

  void maximize_from(Bits<W> chosen, int size, Bits<W> cand, std::size_t i) {
    while (true) {
      tick();
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      if (cand.none() || size + model_.bound(cand) <= best_size_) return;
      i = next_index(cand, i);
      const int v = order_[i];
      Bits<W> with = chosen;
      with.set(v);
      maximize_from(with, size + 1, model_.include(chosen, cand, v), i + 1);
      cand.reset(v);
      ++i;
    }
  }

  bool first_from(const Bits<W>& chosen, int size, Bits<W> cand, std::size_t i, int target) {
    tick();
    if (size == target) {
      found_ = chosen;
      return true;
    }
    if (cand.none() || size + model_.bound(cand) < target) return false;
    i = next_index(cand, i);
    const int v = order_[i];
    Bits<W> without = cand;
    without.reset(v);
    if (first_from(chosen, size, without, i + 1, target)) return true;
    Bits<W> with = chosen;
    with.set(v);
    return first_from(with, size + 1, model_.include(chosen, cand, v), i + 1, target);
  }

  const Model& model_;
  std::vector<int> order_;
  std::uint64_t node_limit_;
  std::uint64_t expansions_ = 0;
  Bits<W> best_;
  int best_size_ = 0;
  std::optional<Bits<W>> found_;
};

/// n-1, n-2, ..., 0: branching order whose first hit is the smallest bit pattern.
inline std::vector<int> descending_ids(int n) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int v = n - 1; v >= 0; --v) order.push_back(v);
  return order;
}

}  // namespace monopos
