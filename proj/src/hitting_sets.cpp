#include "idemlin/hitting_sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace idemlin {

namespace {

class Mmcs {
 public:
  Mmcs(const std::vector<IndexSet>& sets, std::size_t universe)
      : sets_(sets), hits_(sets.size(), 0), containing_(universe), candidate_(universe, true) {
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      for (auto e : sets_[s]) {
        if (e >= universe) throw std::out_of_range("hitting set element " + std::to_string(e) + " outside universe");
        containing_[e].push_back(s);
      }
    }
  }

  std::vector<IndexSet> run() {
    recurse();
    for (auto& t : out_) std::sort(t.begin(), t.end());
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void recurse() {
    // Uncovered set with the fewest remaining candidates.
    std::size_t best = sets_.size();
    std::size_t best_count = 0;
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      if (hits_[s] != 0) continue;
      std::size_t count = 0;
      for (auto e : sets_[s]) count += candidate_[e] ? 1 : 0;
      if (best == sets_.size() || count < best_count) {
        best = s;
        best_count = count;
      }
    }
    if (best == sets_.size()) {
      out_.push_back(chosen_);
      return;
    }

    IndexSet branch;
    for (auto e : sets_[best])
      if (candidate_[e]) branch.push_back(e);
    for (auto e : branch) candidate_[e] = false;

    for (auto e : branch) {
      for (auto s : containing_[e]) ++hits_[s];
      chosen_.push_back(e);
      if (all_critical()) recurse();
      chosen_.pop_back();
      for (auto s : containing_[e]) --hits_[s];
      candidate_[e] = true;
    }
  }

  bool all_critical() const {
    for (auto f : chosen_) {
      const bool has_private = std::any_of(containing_[f].begin(), containing_[f].end(),
                                           [&](std::size_t s) { return hits_[s] == 1; });
      if (!has_private) return false;
    }
    return true;
  }

  const std::vector<IndexSet>& sets_;
  std::vector<std::size_t> hits_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<bool> candidate_;
  IndexSet chosen_;
  std::vector<IndexSet> out_;
};

}  // namespace

std::vector<IndexSet> minimal_hitting_sets(const std::vector<IndexSet>& sets, std::size_t universe) {
  for (const auto& s : sets)
    if (s.empty()) return {};
  // Duplicate elements inside one set would double count hits.
  std::vector<IndexSet> clean = sets;
  for (auto& s : clean) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return Mmcs(clean, universe).run();
}

}  // namespace idemlin
