#include "tressec/separation_system.hpp"

#include <algorithm>

namespace tressec {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::bad_involution: return "BadInvolution";
    case errc::not_a_poset: return "NotAPoset";
    case errc::involution_not_order_reversing: return "InvolutionNotOrderReversing";
    case errc::not_essential: return "NotEssential";
    case errc::not_regular: return "NotRegular";
    case errc::not_a_tree_set: return "NotATreeSet";
    case errc::not_an_order_tree: return "NotAnOrderTree";
    case errc::not_nested: return "NotNested";
    case errc::too_large: return "TooLarge";
    case errc::unextendable: return "Unextendable";
    case errc::unknown_node: return "UnknownNode";
    case errc::unknown_element: return "UnknownElement";
    case errc::not_unique: return "NotUnique";
    case errc::not_found: return "NotFound";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::mismatch: return "Mismatch";
    case errc::violation_found: return "ViolationFound";
    case errc::invalid_family: return "InvalidFamily";
    case errc::premise_failed_first: return "PremiseFailed(first)";
    case errc::premise_failed_second: return "PremiseFailed(second)";
    case errc::premise_failed_uniqueness: return "PremiseFailed(uniqueness)";
    case errc::missing_directed_label: return "MissingDirectedLabel";
    case errc::not_injective_embedding: return "NotInjectiveEmbedding";
    case errc::not_over_family: return "NotOverF";
    case errc::degenerate_element: return "DegenerateElement";
    case errc::invalid_decomposition: return "InvalidDecomposition";
    case errc::not_separations_of_graph: return "NotSeparationsOfG";
    case errc::unsupported_conversion: return "UnsupportedConversion";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

namespace {

void check_involution(int count, const std::vector<int>& inv) {
  require(static_cast<int>(inv.size()) == count, errc::bad_involution,
          "involution has " + std::to_string(inv.size()) + " entries for " + std::to_string(count) +
              " elements");
  for (int i = 0; i < count; ++i) {
    require(inv[i] >= 0 && inv[i] < count, errc::bad_involution,
            "involution image out of range at index " + std::to_string(i));
    require(inv[inv[i]] == i, errc::bad_involution,
            "involution is not self-inverse at index " + std::to_string(i));
  }
}

BitMatrix closure_of(int count, const std::vector<std::pair<int, int>>& generators,
                     const std::vector<int>& inv, bool add_duals) {
  BitMatrix rel(count);
  for (int i = 0; i < count; ++i) rel.set(i, i);
  for (const auto& [i, j] : generators) {
    require(i >= 0 && i < count && j >= 0 && j < count, errc::precondition_violated,
            "order generator index out of range");
    rel.set(i, j);
    if (add_duals) rel.set(inv[j], inv[i]);
  }
  rel.transitive_close();
  return rel;
}

}  // namespace

SeparationSystem SeparationSystem::finish(int count, std::vector<int> involution, BitMatrix closure,
                                          std::vector<std::string> labels, bool check_duality) {
  require(count >= 0, errc::precondition_violated, "negative element count");
  require(labels.empty() || static_cast<int>(labels.size()) == count, errc::precondition_violated,
          "label list does not match element count");
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      require(!(closure.get(i, j) && closure.get(j, i)), errc::not_a_poset,
              "antisymmetry fails between " + std::to_string(i) + " and " + std::to_string(j));
  if (check_duality) {
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j)
        require(closure.get(i, j) == closure.get(involution[j], involution[i]),
                errc::involution_not_order_reversing,
                "Eq. (1) fails: " + std::to_string(i) + " <= " + std::to_string(j) +
                    " does not match its dual pair");
  }
  SeparationSystem sys;
  sys.count_ = count;
  sys.inv_ = std::move(involution);
  sys.le_ = std::move(closure);
  sys.labels_ = std::move(labels);
  return sys;
}

SeparationSystem SeparationSystem::build(int count, std::vector<int> involution,
                                         const std::vector<std::pair<int, int>>& le_generators,
                                         std::vector<std::string> labels) {
  check_involution(count, involution);
  BitMatrix closure = closure_of(count, le_generators, involution, /*add_duals=*/true);
  return finish(count, std::move(involution), std::move(closure), std::move(labels), true);
}

SeparationSystem SeparationSystem::build_exact(int count, std::vector<int> involution,
                                               const std::vector<std::pair<int, int>>& le_generators,
                                               std::vector<std::string> labels) {
  check_involution(count, involution);
  BitMatrix closure = closure_of(count, le_generators, involution, /*add_duals=*/false);
  return finish(count, std::move(involution), std::move(closure), std::move(labels), true);
}

int SeparationSystem::separation_count() const {
  int pairs = 0, fixed_points = 0;
  for (int i = 0; i < count_; ++i) {
    if (inv_[i] == i)
      ++fixed_points;
    else if (i < inv_[i])
      ++pairs;
  }
  return pairs + fixed_points;
}

std::vector<int> SeparationSystem::separations() const {
  std::vector<int> reps;
  for (int i = 0; i < count_; ++i)
    if (i <= inv_[i]) reps.push_back(i);
  return reps;
}

std::string SeparationSystem::display(int i) const {
  if (has_labels()) return labels_[i];
  return "#" + std::to_string(i);
}

std::vector<std::pair<int, int>> SeparationSystem::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < count_; ++i)
    for (int j = 0; j < count_; ++j)
      if (i != j && le_.get(i, j)) out.emplace_back(i, j);
  return out;
}

Classification classify(const SeparationSystem& sys) {
  const int n = sys.count();
  Classification c;
  c.small.assign(n, false);
  c.trivial.assign(n, false);
  c.cotrivial.assign(n, false);
  c.degenerate.assign(n, false);
  c.witness.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    c.degenerate[i] = sys.degenerate(i);
    c.small[i] = sys.le(i, sys.inverse(i));
    for (int j = 0; j < n; ++j) {
      if (sys.same_separation(i, j)) continue;
      if (sys.lt(i, j) && sys.lt(i, sys.inverse(j))) {
        const int w = sys.canonical(j);
        if (c.witness[i] == -1 || w < c.witness[i]) c.witness[i] = w;
      }
    }
    c.trivial[i] = c.witness[i] != -1;
  }
  for (int i = 0; i < n; ++i) c.cotrivial[i] = c.trivial[sys.inverse(i)];
  return c;
}

bool nested_pair(const SeparationSystem& sys, int r, int s) {
  if (sys.same_separation(r, s)) return true;
  const int ri = sys.inverse(r), si = sys.inverse(s);
  return sys.comparable(r, s) || sys.comparable(r, si) || sys.comparable(ri, s) ||
         sys.comparable(ri, si);
}

bool is_nested(const SeparationSystem& sys) {
  const auto reps = sys.separations();
  for (size_t a = 0; a < reps.size(); ++a)
    for (size_t b = a + 1; b < reps.size(); ++b)
      if (!nested_pair(sys, reps[a], reps[b])) return false;
  return true;
}

bool is_regular(const SeparationSystem& sys) {
  for (int i = 0; i < sys.count(); ++i)
    if (sys.le(i, sys.inverse(i))) return false;
  return true;
}

bool is_essential(const SeparationSystem& sys) {
  const Classification c = classify(sys);
  for (int i = 0; i < sys.count(); ++i)
    if (c.trivial[i] || c.degenerate[i]) return false;
  return true;
}

bool is_tree_set(const SeparationSystem& sys) { return is_nested(sys) && is_essential(sys); }

InducedSubsystem induced_subsystem(const SeparationSystem& sys, const std::vector<int>& keep) {
  InducedSubsystem out;
  out.to_host = normalize_set(keep);
  out.from_host.assign(sys.count(), -1);
  for (size_t k = 0; k < out.to_host.size(); ++k) {
    const int host = out.to_host[k];
    require(host >= 0 && host < sys.count(), errc::precondition_violated, "index out of range");
    out.from_host[host] = static_cast<int>(k);
  }
  const int m = static_cast<int>(out.to_host.size());
  std::vector<int> inv(m);
  std::vector<std::string> labels;
  if (sys.has_labels()) labels.reserve(m);
  for (int k = 0; k < m; ++k) {
    const int host_inv = sys.inverse(out.to_host[k]);
    require(out.from_host[host_inv] != -1, errc::precondition_violated,
            "subset is not closed under the involution");
    inv[k] = out.from_host[host_inv];
    if (sys.has_labels()) labels.push_back(sys.label(out.to_host[k]));
  }
  std::vector<std::pair<int, int>> gens;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && sys.le(out.to_host[a], out.to_host[b])) gens.emplace_back(a, b);
  out.system = SeparationSystem::build_exact(m, std::move(inv), gens, std::move(labels));
  return out;
}

InducedSubsystem essential_core(const SeparationSystem& sys) {
  const Classification c = classify(sys);
  std::vector<int> keep;
  for (int i = 0; i < sys.count(); ++i)
    if (!c.degenerate[i] && !c.trivial[i] && !c.cotrivial[i]) keep.push_back(i);
  return induced_subsystem(sys, keep);
}

SeparationSystem regularization(const SeparationSystem& sys) {
  require(is_essential(sys), errc::not_essential, "regularization requires an essential system");
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < sys.count(); ++i)
    for (int j = 0; j < sys.count(); ++j)
      if (i != j && j != sys.inverse(i) && sys.le(i, j)) gens.emplace_back(i, j);
  std::vector<int> inv(sys.count());
  for (int i = 0; i < sys.count(); ++i) inv[i] = sys.inverse(i);
  SeparationSystem out = SeparationSystem::build_exact(sys.count(), std::move(inv), gens,
                                                       sys.has_labels() ? sys.labels()
                                                                        : std::vector<std::string>{});
  require(is_regular(out), errc::violation_found, "regularization left a small element");
  return out;
}

bool is_star(const SeparationSystem& sys, const std::vector<int>& members) {
  for (int u : members)
    if (sys.degenerate(u)) return false;
  for (int u : members)
    for (int v : members)
      if (u != v && !sys.le(u, sys.inverse(v))) return false;
  return true;
}

bool is_proper_star(const SeparationSystem& sys, const std::vector<int>& members) {
  if (!is_star(sys, members)) return false;
  for (int u : members)
    for (int v : members) {
      if (u == v) continue;
      const int vi = sys.inverse(v);
      if (sys.le(u, v) || sys.le(v, u) || sys.le(vi, u)) return false;
    }
  return true;
}

bool is_proper_in(const SeparationSystem& sys, const std::vector<int>& members) {
  if (!is_proper_star(sys, members)) return false;
  if (members.size() == 1) {
    const Classification c = classify(sys);
    if (c.cotrivial[members.front()]) return false;
  }
  return true;
}

bool star_le(const SeparationSystem& sys, const std::vector<int>& sigma, const std::vector<int>& tau) {
  for (int u : sigma) {
    bool dominated = false;
    for (int v : tau)
      if (sys.le(u, v)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

bool verify_system_isomorphism(const SeparationSystem& from, const SeparationSystem& onto,
                               const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != from.count() || from.count() != onto.count()) return false;
  std::vector<bool> hit(onto.count(), false);
  for (int i = 0; i < from.count(); ++i) {
    if (map[i] < 0 || map[i] >= onto.count() || hit[map[i]]) return false;
    hit[map[i]] = true;
  }
  for (int i = 0; i < from.count(); ++i)
    if (map[from.inverse(i)] != onto.inverse(map[i])) return false;
  for (int i = 0; i < from.count(); ++i)
    for (int j = 0; j < from.count(); ++j)
      if (from.le(i, j) != onto.le(map[i], map[j])) return false;
  return true;
}

std::vector<int> normalize_set(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

std::string set_to_string(const std::vector<int>& members) {
  std::string out = "{";
  for (size_t k = 0; k < members.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(members[k]);
  }
  out += "}";
  return out;
}

}  // namespace tressec
