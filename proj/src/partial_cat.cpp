#include "braidlab/partial_cat.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace braidlab {

namespace {

constexpr char kKeySep = '\x7f';

std::string arrow_label(const PartialCategory& c, int a) {
  return c.braid().diagram().print_word(c.arrow(a).canonical);
}

std::string tuple_label(const PartialCategory& c, const std::vector<int>& tuple) {
  std::string out = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += arrow_label(c, tuple[i]);
  }
  return out + ")";
}

std::string pack_tuple(const std::vector<int>& t) {
  std::string s;
  s.reserve(t.size() * 2);
  for (int v : t) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>(v >> 8 & 0xff));
  }
  return s;
}

// Per-interval outcome sets over all parenthesizations.  Each tree picks one
// outcome for its left and right subtree, so the set for [i,j) is the union
// over split points of pairwise composites; buffers are reused across calls.
class IntervalOutcomes {
 public:
  void compute(const PartialCategory& c, const std::vector<int>& edges) {
    n_ = static_cast<int>(edges.size());
    if (cells_.size() < size_t(n_ + 1) * (n_ + 1)) cells_.resize(size_t(n_ + 1) * (n_ + 1));
    for (int i = 0; i < n_; ++i) {
      auto& s = cell(i, i + 1);
      s.clear();
      s.push_back(edges[i]);
    }
    for (int len = 2; len <= n_; ++len)
      for (int i = 0; i + len <= n_; ++i) {
        auto& out = cell(i, i + len);
        out.clear();
        for (int mid = i + 1; mid < i + len; ++mid)
          for (int l : cell(i, mid))
            for (int r : cell(mid, i + len)) out.push_back(l < 0 || r < 0 ? -1 : c.compose(l, r));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
      }
  }

  const std::vector<int>& result() const { return cells_[size_t(0) * (n_ + 1) + n_]; }

 private:
  std::vector<int>& cell(int i, int j) { return cells_[size_t(i) * (n_ + 1) + j]; }

  int n_ = 0;
  std::vector<std::vector<int>> cells_;
};

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

const char* presentation_kind_name(PresentationKind k) {
  return k == PresentationKind::Fin ? "fin" : "full";
}

PartialCategory::PartialCategory(const BraidContext& bc, PresentationKind kind, int cutoff)
    : bc_(&bc), kind_(kind), cutoff_(cutoff) {
  if (cutoff < 0) throw Error("arrow cutoff must be nonnegative");
  const CoxeterContext& cox = bc.cox();
  for (const auto& w : cox.enumerate_elements(cox.diagram().all(), cutoff)) {
    if (kind == PresentationKind::Fin && !cox.is_finite_type(cox.support(w))) continue;
    arrows_.push_back(w);
  }
  if (arrows_.empty() || !arrows_[0].is_identity()) throw Error("identity arrow missing");

  const int n = arrow_count();
  table_.assign(size_t(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (weight(a) + weight(b) > cutoff_) continue;
      CoxeterElement p = cox.multiply(arrows_[a], arrows_[b]);
      if (p.length() != weight(a) + weight(b)) continue;
      table_[size_t(a) * n + b] = find_arrow(p);
    }
}

int PartialCategory::find_arrow(const CoxeterElement& w) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), w);
  if (it == arrows_.end() || !(*it == w)) return -1;
  return static_cast<int>(it - arrows_.begin());
}

void PartialCategory::override_compose(int a, int b, int result) {
  const int n = arrow_count();
  if (a < 0 || a >= n || b < 0 || b >= n || result < -1 || result >= n)
    throw Error("compose override out of range");
  table_[size_t(a) * n + b] = result;
}

int PartialCategory::fold_composite(const std::vector<int>& edges) const {
  int acc = identity();
  for (int e : edges) {
    acc = compose(acc, e);
    if (acc < 0) return -1;
  }
  return acc;
}

int parenthesized_composite(const PartialCategory& c, std::vector<int> edges,
                            const std::vector<int>& merge_order) {
  if (edges.empty()) {
    if (!merge_order.empty()) throw Error("merge order longer than the tuple allows");
    return c.identity();
  }
  if (merge_order.size() != edges.size() - 1) throw Error("merge order must have n-1 entries");
  for (int pos : merge_order) {
    if (pos < 0 || pos + 1 >= static_cast<int>(edges.size()))
      throw Error("merge position out of range");
    int r = c.compose(edges[pos], edges[pos + 1]);
    if (r < 0) return -1;
    edges[pos] = r;
    edges.erase(edges.begin() + pos + 1);
  }
  return edges[0];
}

std::vector<int> parenthesization_outcomes(const PartialCategory& c,
                                           const std::vector<int>& edges) {
  if (edges.empty()) return {c.identity()};
  IntervalOutcomes scratch;
  scratch.compute(c, edges);
  return scratch.result();
}

AxiomAudit audit_axioms(const PartialCategory& c, int max_n) {
  AxiomAudit out;
  const int n = c.arrow_count();
  const int e = c.identity();

  for (int a = 0; a < n && out.p1; ++a)
    for (int b = 0; b < n; ++b) {
      ++out.pairs_checked;
      int r = c.compose(a, b);
      if (r < -1 || r >= n) {
        out.p1 = false;
        out.p1_witness = AxiomWitness{{a, b}, "composite index out of range"};
        break;
      }
    }
  if (out.p1)
    for (int a = 0; a < n; ++a) {
      if (c.compose(e, a) == a && c.compose(a, e) == a) continue;
      out.p1 = false;
      out.p1_witness =
          AxiomWitness{{e, a}, "identity does not act neutrally on " + arrow_label(c, a)};
      break;
    }

  for (int a = 0; a < n && out.p2; ++a)
    for (int b = 0; b < n && out.p2; ++b) {
      int ab = c.compose(a, b);
      for (int cc = 0; cc < n; ++cc) {
        ++out.triples_checked;
        int bc = c.compose(b, cc);
        int left = ab < 0 ? -1 : c.compose(ab, cc);
        int right = bc < 0 ? -1 : c.compose(a, bc);
        if (ab >= 0 && left >= 0 && (bc < 0 || right != left)) {
          out.p2 = false;
          out.p2_witness = AxiomWitness{
              {a, b, cc}, "left-first square over " + tuple_label(c, {a, b, cc}) + " has no filler"};
          break;
        }
        if (bc >= 0 && right >= 0 && (ab < 0 || left != right)) {
          out.p2 = false;
          out.p2_witness = AxiomWitness{
              {a, b, cc},
              "right-first square over " + tuple_label(c, {a, b, cc}) + " has no filler"};
          break;
        }
      }
    }

  IntervalOutcomes scratch;
  std::vector<int> tuple;
  for (int len = 2; len <= max_n && out.p0; ++len) {
    tuple.assign(len, 0);
    for (;;) {
      ++out.tuples_checked;
      scratch.compute(c, tuple);
      if (scratch.result().size() > 1) {
        out.p0 = false;
        out.p0_witness =
            AxiomWitness{tuple, "parenthesizations of " + tuple_label(c, tuple) + " disagree"};
        break;
      }
      int pos = len - 1;
      while (pos >= 0 && tuple[pos] == n - 1) tuple[pos--] = 0;
      if (pos < 0) break;
      ++tuple[pos];
    }
  }
  return out;
}

std::vector<std::vector<int>> spine_homs(const PartialCategory& c, const std::vector<int>& x,
                                         const std::vector<int>& y) {
  const int nx = static_cast<int>(x.size());
  const int ny = static_cast<int>(y.size());
  std::vector<std::vector<int>> out;
  std::vector<int> f(ny + 1, 0);
  auto rec = [&](auto&& self, int j) -> void {
    if (j > ny) {
      if (f[ny] == nx) out.push_back(f);
      return;
    }
    int start = f[j - 1];
    int acc = c.identity();
    for (int v = start; v <= nx; ++v) {
      if (v > start) {
        acc = c.compose(acc, x[v - 1]);
        if (acc < 0) break;
      }
      if (acc == y[j - 1]) {
        f[j] = v;
        self(self, j + 1);
      }
    }
  };
  if (ny == 0) {
    if (nx == 0) out.push_back(f);
    return out;
  }
  rec(rec, 1);
  return out;
}

std::vector<int> compose_vertex_maps(const std::vector<int>& f_star,
                                     const std::vector<int>& g_star) {
  std::vector<int> out(g_star.size());
  for (size_t i = 0; i < g_star.size(); ++i) {
    int v = g_star[i];
    if (v < 0 || v >= static_cast<int>(f_star.size())) throw Error("vertex map out of range");
    out[i] = f_star[v];
  }
  return out;
}

std::vector<std::vector<int>> enumerate_spines(const PartialCategory& c, int weight_cutoff,
                                               int max_edges, bool nondegenerate) {
  if (weight_cutoff < 0 || max_edges < 0) throw Error("spine bounds must be nonnegative");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int weight_left, int edges_left) -> void {
    out.push_back(cur);
    if (edges_left == 0) return;
    for (int a = nondegenerate ? 1 : 0; a < c.arrow_count(); ++a) {
      if (c.weight(a) > weight_left) break;
      cur.push_back(a);
      self(self, weight_left - c.weight(a), edges_left - 1);
      cur.pop_back();
    }
  };
  rec(rec, weight_cutoff, max_edges);
  return out;
}

void check_no_invertible_pairs(const PartialCategory& c) {
  for (int a = 1; a < c.arrow_count(); ++a)
    for (int b = 1; b < c.arrow_count(); ++b)
      if (c.compose(a, b) == c.identity())
        throw HypothesisFailed("nonidentity arrows " + arrow_label(c, a) + " and " +
                               arrow_label(c, b) + " compose to the identity");
}

std::vector<int> contract_identities(const PartialCategory& c, const std::vector<int>& tuple) {
  std::vector<int> out;
  for (int a : tuple) {
    if (a < 0 || a >= c.arrow_count()) throw Error("arrow index out of range");
    if (a != c.identity()) out.push_back(a);
  }
  return out;
}

NecklaceFiber necklace_fiber(const PartialCategory& c, const std::vector<int>& spine) {
  const int n = static_cast<int>(spine.size());
  NecklaceFiber out;
  const uint32_t full = n >= 1 ? (1u << (n - 1)) - 1u : 0u;
  for (uint32_t mask = 0; mask <= full; ++mask) {
    bool ok = true;
    int start = 0;
    for (int i = 0; i < n && ok; ++i) {
      if (i != n - 1 && !(mask >> i & 1)) continue;
      std::vector<int> block(spine.begin() + start, spine.begin() + i + 1);
      auto outcomes = parenthesization_outcomes(c, block);
      ok = outcomes.size() == 1 && outcomes[0] >= 0;
      start = i + 1;
    }
    if (ok) out.cuts.push_back(mask);
    if (mask == full) break;
  }

  const int m = static_cast<int>(out.cuts.size());
  out.order = Poset(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && (out.cuts[j] & ~out.cuts[i]) == 0) out.order.add_less(i, j);

  auto it = std::find(out.cuts.begin(), out.cuts.end(), full);
  if (it != out.cuts.end()) {
    int idx = static_cast<int>(it - out.cuts.begin());
    bool least = true;
    for (int j = 0; j < m; ++j) least = least && out.order.leq(idx, j);
    out.initial = least ? idx : -1;
  }
  out.cert = certify(out.order);
  return out;
}

SpineFiber spine_fiber(const BraidContext& bc, const PartialCategory& c,
                       const PosBraidElement& b) {
  SpineFiber out;
  std::vector<PosBraidElement> lift(c.arrow_count());
  for (int a = 0; a < c.arrow_count(); ++a) lift[a] = bc.reduced_lift(c.arrow(a));

  std::vector<int> cur;
  auto rec = [&](auto&& self, const PosBraidElement& rest) -> void {
    if (rest.is_identity()) {
      out.objects.push_back(cur);
      return;
    }
    for (int a = 1; a < c.arrow_count(); ++a) {
      if (c.weight(a) > rest.length()) break;
      if (!bc.left_divides(lift[a], rest)) continue;
      cur.push_back(a);
      self(self, bc.quotient(lift[a], rest));
      cur.pop_back();
    }
  };
  rec(rec, b);

  const int m = static_cast<int>(out.objects.size());
  out.order = Poset(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && !spine_homs(c, out.objects[i], out.objects[j]).empty())
        out.order.add_less(i, j);
  return out;
}

FiberReport fiber_check(const BraidContext& bc, const PartialCategory& c,
                        const PosBraidElement& b) {
  FiberReport rep;
  rep.base = b;
  if (b.length() > c.cutoff()) throw Error("fiber base longer than the arrow cutoff");

  SpineFiber fib = spine_fiber(bc, c, b);
  rep.objects = fib.objects.size();
  WordVariant variant = c.kind() == PresentationKind::Fin ? WordVariant::FiniteTypeReduced
                                                          : WordVariant::Reduced;
  ChainPoset wp = build_word_poset(bc, b, variant);

  auto fail = [&](std::string msg) {
    if (rep.detail.empty()) rep.detail = std::move(msg);
  };

  std::unordered_map<std::string, int> chain_of;
  for (size_t i = 0; i < wp.chains.size(); ++i) {
    std::string key;
    for (const auto& q : wp.chains[i].quotients) {
      key += q.canonical;
      key += kKeySep;
    }
    chain_of.emplace(std::move(key), static_cast<int>(i));
  }

  std::vector<int> to_chain(fib.objects.size(), -1);
  for (size_t i = 0; i < fib.objects.size(); ++i) {
    std::string key;
    for (int a : fib.objects[i]) {
      key += c.arrow(a).canonical;
      key += kKeySep;
    }
    auto it = chain_of.find(key);
    if (it == chain_of.end()) {
      fail("spine " + tuple_label(c, fib.objects[i]) + " has no matching chain");
      continue;
    }
    to_chain[i] = it->second;
  }
  if (fib.objects.size() != wp.chains.size())
    fail("object counts differ: " + std::to_string(fib.objects.size()) + " spines vs " +
         std::to_string(wp.chains.size()) + " chains");

  const int m = static_cast<int>(fib.objects.size());
  for (int i = 0; i < m && rep.detail.empty(); ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      auto homs = spine_homs(c, fib.objects[i], fib.objects[j]);
      if (homs.size() > 1) {
        fail("hom set from " + tuple_label(c, fib.objects[i]) + " to " +
             tuple_label(c, fib.objects[j]) + " is not a singleton");
        break;
      }
      if (to_chain[i] < 0 || to_chain[j] < 0) continue;
      if (!homs.empty() != wp.order.leq(to_chain[i], to_chain[j])) {
        fail("order mismatch between " + tuple_label(c, fib.objects[i]) + " and " +
             tuple_label(c, fib.objects[j]));
        break;
      }
    }

  rep.cert = certify(fib.order);
  rep.pass = rep.detail.empty() && is_contractible(rep.cert.verdict);
  return rep;
}

std::vector<Pi0Report> presentation_pi0(const BraidContext& bc, const PartialCategory& c,
                                        int max_len) {
  if (max_len > c.cutoff()) throw Error("component scan beyond the arrow cutoff");
  std::vector<PosBraidElement> lift(c.arrow_count());
  for (int a = 0; a < c.arrow_count(); ++a) lift[a] = bc.reduced_lift(c.arrow(a));
  std::vector<PosBraidElement> elements = bc.enumerate_elements(max_len);

  std::vector<Pi0Report> out;
  for (int k = 0; k <= max_len; ++k) {
    Pi0Report rep;
    rep.length = k;
    for (const auto& el : elements) rep.braid_elements += el.length() == k;

    std::vector<std::vector<int>> tuples;
    std::vector<Word> products;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, const PosBraidElement& prod) -> void {
      if (left == 0) {
        tuples.push_back(cur);
        products.push_back(prod.canonical);
        return;
      }
      for (int a = 1; a < c.arrow_count(); ++a) {
        if (c.weight(a) > left) break;
        cur.push_back(a);
        self(self, left - c.weight(a), bc.multiply(prod, lift[a]));
        cur.pop_back();
      }
    };
    rec(rec, k, PosBraidElement{});
    rep.tuples = tuples.size();

    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < tuples.size(); ++i) index.emplace(pack_tuple(tuples[i]), i);

    UnionFind uf(tuples.size());
    for (size_t i = 0; i < tuples.size(); ++i)
      for (size_t p = 0; p + 1 < tuples[i].size(); ++p) {
        int merged = c.compose(tuples[i][p], tuples[i][p + 1]);
        if (merged < 0) continue;
        std::vector<int> t = tuples[i];
        t[p] = merged;
        t.erase(t.begin() + p + 1);
        auto it = index.find(pack_tuple(t));
        if (it == index.end()) throw Error("merged spine left the weight class");
        uf.unite(static_cast<int>(i), it->second);
      }

    std::unordered_map<int, Word> component_product;
    std::unordered_set<std::string> distinct;
    bool constant = true;
    for (size_t i = 0; i < tuples.size(); ++i) {
      distinct.insert(products[i]);
      auto [it, inserted] = component_product.emplace(uf.find(static_cast<int>(i)), products[i]);
      if (!inserted && it->second != products[i] && constant) {
        constant = false;
        rep.detail = "component of " + tuple_label(c, tuples[i]) + " mixes products";
      }
    }
    rep.components = component_product.size();
    rep.pass = constant && rep.components == rep.braid_elements &&
               distinct.size() == rep.braid_elements;
    if (!rep.pass && rep.detail.empty())
      rep.detail = "components " + std::to_string(rep.components) + " vs elements " +
                   std::to_string(rep.braid_elements);
    out.push_back(std::move(rep));
  }
  return out;
}

std::optional<std::string> inject_table_fault(PartialCategory& cat) {
  const CoxeterContext& cox = cat.braid().cox();
  const CoxeterDiagram& d = cox.diagram();
  for (Gen a = 0; a < d.rank(); ++a)
    for (Gen b = 0; b < d.rank(); ++b) {
      if (a == b) continue;
      int ia = cat.find_arrow(CoxeterElement{Word(1, static_cast<char>(a))});
      int ib = cat.find_arrow(CoxeterElement{Word(1, static_cast<char>(b))});
      if (ia < 0 || ib < 0) continue;
      int honest = cat.compose(ia, ib);
      int swapped = cat.find_arrow(cox.multiply(cat.arrow(ib), cat.arrow(ia)));
      if (honest < 0 || swapped < 0 || honest == swapped) continue;
      cat.override_compose(ia, ib, swapped);
      return "compose(" + d.name(a) + "," + d.name(b) + ") overwritten to " +
             d.print_word(cat.arrow(swapped).canonical);
    }
  return std::nullopt;
}

}  // namespace braidlab
