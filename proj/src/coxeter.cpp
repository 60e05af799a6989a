#include "braidlab/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace braidlab {

void append_braid_neighbors(const CoxeterDiagram& d, const Word& w, std::vector<Word>& out) {
  const int len = static_cast<int>(w.size());
  for (int i = 0; i < len - 1; ++i) {
    Gen s = w[i];
    Gen t = w[i + 1];
    if (s == t) continue;
    int m = d.order(s, t);
    if (m == CoxeterDiagram::kInfinity || i + m > len) continue;
    bool match = true;
    for (int k = 2; k < m && match; ++k) match = w[i + k] == w[i + (k & 1)];
    if (!match) continue;
    Word v = w;
    for (int k = 0; k < m; ++k) v[i + k] = (k & 1) ? s : t;
    out.push_back(std::move(v));
  }
}

CoxeterContext::CoxeterContext(CoxeterDiagram d, size_t class_budget)
    : diagram_(std::move(d)), class_budget_(class_budget) {}

Word CoxeterContext::reduce_word(const Word& w) const {
  Word cached;
  if (canon_.lookup(w, &cached)) return cached;

  std::unordered_set<Word> visited{w};
  std::deque<Word> queue{w};
  Word result;
  bool deleted = false;
  while (!queue.empty()) {
    Word u = queue.front();
    queue.pop_front();
    int pair = -1;
    for (size_t i = 0; i + 1 < u.size(); ++i)
      if (u[i] == u[i + 1]) {
        pair = static_cast<int>(i);
        break;
      }
    if (pair >= 0) {
      Word shorter = u;
      shorter.erase(pair, 2);
      result = reduce_word(shorter);
      deleted = true;
      break;
    }
    std::vector<Word> next;
    append_braid_neighbors(diagram_, u, next);
    for (auto& v : next) {
      if (visited.insert(v).second) {
        if (visited.size() > class_budget_)
          throw ClassTooLarge("word class exceeded budget");
        queue.push_back(v);
      }
    }
  }
  if (!deleted) {
    // Whole class is square-free: w was reduced all along.
    result = *std::min_element(visited.begin(), visited.end(),
                               [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  }
  for (const auto& u : visited) canon_.insert(u, result);
  return result;
}

CoxeterElement CoxeterContext::reduce(const Word& w) const {
  return CoxeterElement{reduce_word(w)};
}

CoxeterElement CoxeterContext::multiply(const CoxeterElement& a, const CoxeterElement& b) const {
  return reduce(a.canonical + b.canonical);
}

CoxeterElement CoxeterContext::inverse(const CoxeterElement& a) const {
  Word rev(a.canonical.rbegin(), a.canonical.rend());
  return reduce(rev);
}

bool CoxeterContext::prefix_leq(const CoxeterElement& a, const CoxeterElement& b) const {
  if (a.length() > b.length()) return false;
  CoxeterElement rest = multiply(inverse(a), b);
  return b.length() == a.length() + rest.length();
}

bool CoxeterContext::is_reduced_sequence(std::span<const CoxeterElement> seq) const {
  Word all;
  int total = 0;
  for (const auto& w : seq) {
    all += w.canonical;
    total += w.length();
  }
  return reduce(all).length() == total;
}

namespace {

// One connected component of the induced labeled graph, matched against the
// finite-type templates.  Integer comparisons only.
bool component_is_finite(const CoxeterDiagram& d, const std::vector<Gen>& comp) {
  const int n = static_cast<int>(comp.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!d.finite_order(comp[i], comp[j])) return false;
  if (n <= 2) return true;  // A1, or I2(m) with m finite

  struct Edge {
    int a, b, m;
  };
  std::vector<Edge> edges;
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = d.order(comp[i], comp[j]);
      if (m >= 3) {
        edges.push_back({i, j, m});
        ++deg[i];
        ++deg[j];
      }
    }
  if (static_cast<int>(edges.size()) != n - 1) return false;  // cycle
  int big4 = 0, big5 = 0, big6 = 0;
  for (const auto& e : edges) {
    if (e.m == 4) ++big4;
    if (e.m == 5) ++big5;
    if (e.m >= 6) ++big6;
  }
  if (big6 || big4 + big5 > 1) return false;
  std::vector<int> branch;
  for (int i = 0; i < n; ++i) {
    if (deg[i] > 3) return false;
    if (deg[i] == 3) branch.push_back(i);
  }
  if (branch.size() > 1) return false;

  if (branch.empty()) {
    // A path.  All labels 3: type A.  One label 4: type B when terminal,
    // F4 when it is the middle edge of a 4-vertex path.  One label 5:
    // types H3, H4 with the 5 on a terminal edge.
    if (big4 + big5 == 0) return true;
    for (const auto& e : edges) {
      if (e.m == 3) continue;
      bool terminal = deg[e.a] == 1 || deg[e.b] == 1;
      if (e.m == 4) {
        if (terminal) return true;               // B_n
        return n == 4 && deg[e.a] == 2 && deg[e.b] == 2;  // F4
      }
      // e.m == 5: terminal edge of a path on 3 or 4 vertices (H3, H4).
      return terminal && n <= 4;
    }
    return false;  // unreachable: exactly one non-3 edge exists
  }
  // One branch vertex: all labels must be 3 (types D and E).
  if (big4 + big5 > 0) return false;
  // Branch arm lengths, in edges.
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<int> arms;
  int center = branch[0];
  for (int start : adj[center]) {
    int len = 1, prev = center, cur = start;
    while (adj[cur].size() == 2) {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] != 1) return false;
  if (arms[1] == 1) return true;  // D_n
  if (arms[1] != 2) return false;
  return arms[2] >= 2 && arms[2] <= 4;  // E6, E7, E8
}

}  // namespace

bool CoxeterContext::is_finite_type(GenSet j) const {
  return finite_type_.get_or_compute(j.bits, [&] {
    auto gens = j.members();
    std::vector<bool> used(gens.size(), false);
    for (size_t i = 0; i < gens.size(); ++i) {
      if (used[i]) continue;
      std::vector<Gen> comp;
      std::vector<size_t> stack{i};
      used[i] = true;
      while (!stack.empty()) {
        size_t k = stack.back();
        stack.pop_back();
        comp.push_back(gens[k]);
        for (size_t l = 0; l < gens.size(); ++l) {
          if (used[l]) continue;
          int m = diagram_.order(gens[k], gens[l]);
          if (m == CoxeterDiagram::kInfinity || m >= 3) {
            used[l] = true;
            stack.push_back(l);
          }
        }
      }
      if (!component_is_finite(diagram_, comp)) return false;
    }
    return true;
  });
}

std::vector<CoxeterElement> CoxeterContext::enumerate_elements(GenSet j, int max_len) const {
  std::vector<CoxeterElement> out{CoxeterElement{}};
  std::vector<Word> layer{Word{}};
  auto gens = j.members();
  for (int len = 1; len <= max_len && !layer.empty(); ++len) {
    std::unordered_set<Word> seen;
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (Gen s : gens) {
        Word ext = w;
        ext.push_back(static_cast<char>(s));
        Word c = reduce_word(ext);
        if (static_cast<int>(c.size()) == len && seen.insert(c).second) next.push_back(c);
      }
    }
    std::sort(next.begin(), next.end(), shortlex_less);
    for (const auto& c : next) out.push_back(CoxeterElement{c});
    layer = std::move(next);
  }
  return out;
}

CoxeterElement CoxeterContext::longest_element(GenSet j) const {
  if (!is_finite_type(j))
    throw NotFiniteType("longest element requires a finite-type subdiagram");
  Word w = longest_.get_or_compute(j.bits, [&] {
    CoxeterElement cur;
    auto gens = j.members();
    bool grew = true;
    while (grew) {
      grew = false;
      for (Gen s : gens) {
        CoxeterElement ext = reduce(cur.canonical + static_cast<char>(s));
        if (ext.length() > cur.length()) {
          cur = ext;
          grew = true;
          break;
        }
      }
    }
    return cur.canonical;
  });
  return CoxeterElement{w};
}

std::vector<GenSet> CoxeterContext::finite_type_closure() const {
  if (diagram_.rank() > 20) throw SizeBudget("finite-type closure over too many generators");
  std::vector<GenSet> out;
  uint32_t total = diagram_.rank() == 0 ? 1u : (1u << diagram_.rank());
  for (uint32_t bits = 0; bits < total; ++bits) {
    GenSet j(bits);
    if (is_finite_type(j)) out.push_back(j);
  }
  std::sort(out.begin(), out.end(), [](GenSet a, GenSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits < b.bits;
  });
  return out;
}

}  // namespace braidlab
