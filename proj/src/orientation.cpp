#include "tressec/orientation.hpp"

#include <algorithm>

namespace tressec {

namespace {

// Violations of consistency introduced by adding x to the set: some member a
// with inverse(x) < a or inverse(a) < x, a of a different separation.
bool admissible_with(const SeparationSystem& sys, const std::vector<int>& members, int x) {
  const int xi = sys.inverse(x);
  for (int a : members) {
    if (sys.same_separation(a, x)) continue;
    if (sys.lt(xi, a) || sys.lt(sys.inverse(a), x)) return false;
  }
  return true;
}

}  // namespace

bool is_antisymmetric(const SeparationSystem& sys, const std::vector<int>& members) {
  for (int u : members) {
    if (sys.degenerate(u)) continue;
    if (std::find(members.begin(), members.end(), sys.inverse(u)) != members.end()) return false;
  }
  return true;
}

bool is_consistent(const SeparationSystem& sys, const std::vector<int>& members) {
  for (int u : members)
    for (int v : members) {
      if (sys.same_separation(u, v)) continue;
      if (sys.lt(sys.inverse(u), v)) return false;
    }
  return true;
}

bool is_full_orientation(const SeparationSystem& sys, const std::vector<int>& members) {
  std::vector<int> hits(sys.count(), 0);
  for (int u : members) {
    if (u < 0 || u >= sys.count()) return false;
    ++hits[u];
  }
  for (int rep : sys.separations()) {
    const int a = hits[rep] + (sys.degenerate(rep) ? 0 : hits[sys.inverse(rep)]);
    if (a != 1 || hits[rep] > 1) return false;
  }
  return true;
}

std::vector<int> down_closure(const SeparationSystem& sys, const std::vector<int>& members) {
  std::vector<int> out;
  for (int r = 0; r < sys.count(); ++r)
    for (int s : members)
      if (sys.le(r, s)) {
        out.push_back(r);
        break;
      }
  return out;
}

std::vector<int> maximal_elements(const SeparationSystem& sys, const std::vector<int>& members) {
  std::vector<int> out;
  for (int u : members) {
    bool topped = false;
    for (int v : members)
      if (sys.lt(u, v)) {
        topped = true;
        break;
      }
    if (!topped) out.push_back(u);
  }
  return normalize_set(std::move(out));
}

std::vector<int> extend_partial(const SeparationSystem& sys, const std::vector<int>& members) {
  require(is_antisymmetric(sys, members), errc::precondition_violated,
          "partial orientation is not antisymmetric");
  require(is_consistent(sys, members), errc::precondition_violated,
          "partial orientation is not consistent");
  std::vector<int> chosen = normalize_set(members);
  std::vector<bool> oriented(sys.count(), false);
  for (int u : chosen) oriented[u] = oriented[sys.inverse(u)] = true;

  auto orient = [&](int x) {
    chosen.push_back(x);
    oriented[x] = oriented[sys.inverse(x)] = true;
  };

  const auto reps = sys.separations();
  while (true) {
    // Propagate separations with exactly one admissible orientation.
    bool forced = true;
    while (forced) {
      forced = false;
      for (int rep : reps) {
        if (oriented[rep]) continue;
        const int other = sys.inverse(rep);
        const bool a = admissible_with(sys, chosen, rep);
        const bool b = rep != other && admissible_with(sys, chosen, other);
        if (!a && !b) fail(errc::unextendable, "no admissible orientation for separation " +
                                                   std::to_string(sys.canonical(rep)));
        if (a != b) {
          orient(a ? rep : other);
          forced = true;
        }
      }
    }
    // Greedy: lowest admissible index among unoriented separations.
    int pick = -1;
    for (int x = 0; x < sys.count(); ++x)
      if (!oriented[x] && admissible_with(sys, chosen, x)) {
        pick = x;
        break;
      }
    if (pick == -1) break;
    orient(pick);
  }
  for (int rep : reps)
    require(oriented[rep], errc::unextendable,
            "separation " + std::to_string(rep) + " could not be oriented");
  chosen = normalize_set(std::move(chosen));
  require(is_consistent(sys, chosen), errc::unextendable, "extension lost consistency");
  return chosen;
}

std::vector<std::vector<int>> enumerate_consistent(const SeparationSystem& sys,
                                                   const EnumerationLimits& limits) {
  require(sys.count() <= limits.max_oriented, errc::too_large,
          "system has " + std::to_string(sys.count()) + " oriented elements, limit is " +
              std::to_string(limits.max_oriented));
  const auto reps = sys.separations();
  std::vector<std::vector<int>> found;
  std::vector<int> current;
  auto backtrack = [&](auto&& self, size_t k) -> void {
    if (k == reps.size()) {
      found.push_back(normalize_set(current));
      return;
    }
    const int rep = reps[k];
    const int other = sys.inverse(rep);
    if (admissible_with(sys, current, rep)) {
      current.push_back(rep);
      self(self, k + 1);
      current.pop_back();
    }
    if (other != rep && admissible_with(sys, current, other)) {
      current.push_back(other);
      self(self, k + 1);
      current.pop_back();
    }
  };
  backtrack(backtrack, 0);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<SplittingSet> splitting_stars(const SeparationSystem& sys,
                                          const EnumerationLimits& limits) {
  std::vector<SplittingSet> out;
  for (const auto& orientation : enumerate_consistent(sys, limits)) {
    SplittingSet split;
    split.members = maximal_elements(sys, orientation);
    split.witness = orientation;
    // Finiteness puts every member below a maximal one.  Equality can fail
    // without regularity: the down-closure of the maxima may pick up the
    // inverse of a small element.
    const auto closed = normalize_set(down_closure(sys, split.members));
    require(std::includes(closed.begin(), closed.end(), orientation.begin(), orientation.end()),
            errc::violation_found,
            "orientation not contained in the down-closure of its maximal elements");
    out.push_back(std::move(split));
  }
  std::sort(out.begin(), out.end(),
            [](const SplittingSet& a, const SplittingSet& b) { return a.members < b.members; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const SplittingSet& a, const SplittingSet& b) {
                          return a.members == b.members;
                        }),
            out.end());
  return out;
}

std::vector<int> orientation_with_max(const SeparationSystem& sys, int s,
                                      const EnumerationLimits& limits) {
  require(s >= 0 && s < sys.count(), errc::precondition_violated, "index out of range");
  std::vector<std::vector<int>> hits;
  for (const auto& orientation : enumerate_consistent(sys, limits)) {
    const auto maxima = maximal_elements(sys, orientation);
    if (std::binary_search(maxima.begin(), maxima.end(), s)) hits.push_back(orientation);
  }
  require(!hits.empty(), errc::not_found,
          "no consistent orientation has " + std::to_string(s) + " maximal");
  require(hits.size() == 1, errc::not_unique,
          "several consistent orientations have " + std::to_string(s) + " maximal");
  return hits.front();
}

bool is_directed(const SeparationSystem& sys, const std::vector<int>& orientation) {
  for (int r : orientation)
    for (int s : orientation) {
      bool bounded = false;
      for (int t : orientation)
        if (sys.le(r, t) && sys.le(s, t)) {
          bounded = true;
          break;
        }
      if (!bounded) return false;
    }
  return true;
}

std::vector<std::vector<int>> directed_orientations(const SeparationSystem& sys,
                                                    const EnumerationLimits& limits) {
  std::vector<std::vector<int>> out;
  for (auto& orientation : enumerate_consistent(sys, limits))
    if (is_directed(sys, orientation)) out.push_back(std::move(orientation));
  return out;
}

std::vector<int> directed_orientation_containing(const SeparationSystem& sys, int s) {
  require(s >= 0 && s < sys.count(), errc::precondition_violated, "index out of range");
  require(is_regular(sys) && is_nested(sys), errc::precondition_violated,
          "directed_orientation_containing requires a regular tree set");
  std::vector<int> chain{s};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < sys.count(); ++x) {
      if (std::find(chain.begin(), chain.end(), x) != chain.end()) continue;
      bool fits = true;
      for (int c : chain)
        if (!sys.comparable(x, c)) {
          fits = false;
          break;
        }
      if (fits) {
        chain.push_back(x);
        grew = true;
        break;
      }
    }
  }
  std::vector<int> orientation = normalize_set(down_closure(sys, chain));
  require(is_full_orientation(sys, orientation) && is_consistent(sys, orientation),
          errc::violation_found, "down-closure of a maximal chain failed to orient the system");
  require(is_directed(sys, orientation), errc::violation_found,
          "chain down-closure is not directed");
  return orientation;
}

}  // namespace tressec
