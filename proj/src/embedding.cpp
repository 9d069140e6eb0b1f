#include "hcover/embedding.hpp"

#include <algorithm>

namespace hcover {

namespace {

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, Mask allowed) : g_(g), h_(h), allowed_(allowed) {
    phi_.assign(h.order(), -1);
  }

  bool run_from(int root, int image) {
    order_ = search_order(root);
    phi_.assign(h_.order(), -1);
    phi_[root] = image;
    return extend(1, bit(image));
  }

  bool run_free() {
    if (h_.order() == 0) return true;
    int root = 0;
    for (int x = 1; x < h_.order(); ++x)
      if (h_.degree(x) > h_.degree(root)) root = x;
    for (Mask m = allowed_; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (g_.degree(v) >= h_.degree(root) && run_from(root, v)) return true;
    }
    return false;
  }

  const std::vector<int>& mapping() const { return phi_; }

 private:
  // BFS from root, then remaining components by descending degree.
  std::vector<int> search_order(int root) const {
    const int n = h_.order();
    std::vector<int> order{root};
    Mask seen = bit(root);
    for (std::size_t head = 0; order.size() < static_cast<std::size_t>(n); ++head) {
      if (head == order.size()) {
        int best = -1;
        for (int x = 0; x < n; ++x)
          if (!(seen & bit(x)) && (best < 0 || h_.degree(x) > h_.degree(best))) best = x;
        order.push_back(best);
        seen |= bit(best);
      }
      for (Mask m = h_.neighbors(order[head]) & ~seen; m; m &= m - 1) {
        const int y = std::countr_zero(m);
        order.push_back(y);
        seen |= bit(y);
      }
    }
    return order;
  }

  bool extend(std::size_t depth, Mask used) {
    if (depth == order_.size()) return true;
    const int y = order_[depth];
    Mask cand = allowed_ & ~used;
    for (Mask m = h_.neighbors(y); m; m &= m - 1) {
      const int z = std::countr_zero(m);
      if (phi_[z] >= 0) cand &= g_.neighbors(phi_[z]);
    }
    const int need = h_.degree(y);
    for (; cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      if (g_.degree(v) < need) continue;
      phi_[y] = v;
      if (extend(depth + 1, used | bit(v))) return true;
    }
    phi_[y] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  Mask allowed_;
  std::vector<int> order_;
  std::vector<int> phi_;
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const Graph& g, const Graph& h, Mask allowed, int anchor) {
  allowed &= g.vertices().bits();
  if (h.order() > std::popcount(allowed)) return std::nullopt;
  Matcher m(g, h, allowed);
  if (anchor < 0) {
    if (m.run_free()) return m.mapping();
    return std::nullopt;
  }
  if (!(allowed & bit(anchor))) return std::nullopt;
  for (int x = 0; x < h.order(); ++x) {
    if (h.degree(x) > g.degree(anchor)) continue;
    if (m.run_from(x, anchor)) return m.mapping();
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_copy_at(const Graph& g, const Graph& h, int v) {
  if (v < 0 || v >= g.order()) throw ArgumentError("vertex out of range");
  return find_embedding(g, h, g.vertices().bits(), v);
}

bool subgraph_copy_at(const Graph& g, const Graph& h, int v) { return find_copy_at(g, h, v).has_value(); }

}  // namespace hcover
