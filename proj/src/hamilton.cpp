#include <bit>

#include "adf/bipartite.hpp"
#include "adf/errors.hpp"

namespace adf {

namespace {

class HamiltonSearch {
 public:
  HamiltonSearch(const BipartiteInstance& g, std::uint64_t budget)
      : n_(g.order()), budget_(budget), nbr_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) nbr_[v] |= bit(w);
    }
    all_ = n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
  }

  HamiltonResult run() {
    HamiltonResult result;
    if (n_ < 4) {
      result.status = HamiltonResult::Status::absent;
      return result;
    }
    start_ = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (std::popcount(nbr_[v]) < 2) {
        result.status = HamiltonResult::Status::absent;
        return result;
      }
      if (std::popcount(nbr_[v]) < std::popcount(nbr_[start_])) start_ = v;
    }
    path_.assign(1, start_);
    bool found = extend(start_, bit(start_));
    result.nodes = nodes_;
    if (found) {
      result.status = HamiltonResult::Status::found;
      result.cycle = path_;
    } else {
      result.status = exhausted_ ? HamiltonResult::Status::unknown : HamiltonResult::Status::absent;
    }
    return result;
  }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  bool extend(Vertex cur, std::uint64_t visited) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const int depth = std::popcount(visited);
    if (depth == n_) return (nbr_[cur] & bit(start_)) != 0;

    const std::uint64_t unvisited = all_ & ~visited;
    if ((nbr_[start_] & unvisited) == 0) return false;
    const std::uint64_t ends = bit(cur) | bit(start_);
    int forced_count = 0;
    Vertex forced = -1;
    for (std::uint64_t m = unvisited; m; m &= m - 1) {
      const Vertex w = std::countr_zero(m);
      const std::uint64_t options = nbr_[w] & (unvisited | ends);
      const int count = std::popcount(options);
      if (count < 2) return false;
      // w's two cycle edges are fixed; if one goes to the path end, w is next.
      if (count == 2 && cur != start_ && (options & bit(cur))) {
        ++forced_count;
        forced = w;
      }
    }
    if (forced_count > 1) return false;

    std::uint64_t candidates = forced_count == 1 ? bit(forced) : nbr_[cur] & unvisited;
    for (std::uint64_t m = candidates; m; m &= m - 1) {
      const Vertex w = std::countr_zero(m);
      path_.push_back(w);
      if (extend(w, visited | bit(w))) return true;
      path_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  int n_;
  std::uint64_t budget_;
  std::vector<std::uint64_t> nbr_;
  std::uint64_t all_ = 0;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

HamiltonResult has_hamilton_cycle(const BipartiteInstance& g, std::uint64_t node_budget) {
  if (g.order() > 64) throw PreconditionError("Hamilton search supports at most 64 vertices");
  return HamiltonSearch(g, node_budget).run();
}

}  // namespace adf
