#include "braidlab/simplicial.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

namespace braidlab {

size_t SimplicialComplex::face_count() const {
  size_t total = 0;
  for (const auto& level : by_dim) total += level.size();
  return total;
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  std::vector<std::vector<int>> out;
  for (int d = 0; d <= dim(); ++d) {
    for (const auto& f : by_dim[d]) {
      if (d == dim()) {
        out.push_back(f);
        continue;
      }
      // f is a facet iff no (d+1)-face contains it.
      bool covered = false;
      for (const auto& g : by_dim[d + 1]) {
        if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          covered = true;
          break;
        }
      }
      if (!covered) out.push_back(f);
    }
  }
  return out;
}

SimplicialComplex complex_from_facets(int n_vertices, const std::vector<std::vector<int>>& facets) {
  for (size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].empty()) throw Error("facets must be nonempty");
    for (int v : facets[i])
      if (v < 0 || v >= n_vertices) throw Error("facet vertex out of range");
    for (size_t j = 0; j < facets.size(); ++j) {
      if (i == j) continue;
      std::vector<int> a = facets[i], b = facets[j];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a == b && i < j) throw Error("duplicate facet");
      if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
        throw Error("facet contained in another facet");
    }
  }
  std::set<std::vector<int>> all;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    if (std::unique(facet.begin(), facet.end()) != facet.end())
      throw Error("facet has repeated vertices");
    // All nonempty subsets.
    const size_t k = facet.size();
    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> face;
      for (size_t b = 0; b < k; ++b)
        if (mask >> b & 1) face.push_back(facet[b]);
      all.insert(std::move(face));
    }
  }
  SimplicialComplex k;
  k.n_vertices = n_vertices;
  for (const auto& f : all) {
    int d = static_cast<int>(f.size()) - 1;
    if (d >= static_cast<int>(k.by_dim.size())) k.by_dim.resize(d + 1);
    k.by_dim[d].push_back(f);
  }
  for (auto& level : k.by_dim) std::sort(level.begin(), level.end());
  return k;
}

SimplicialComplex order_complex(const Poset& p, size_t face_budget) {
  const int n = p.size();
  const int words = std::max(1, p.stride());
  std::vector<std::vector<uint64_t>> comp(n, std::vector<uint64_t>(words, 0));
  for (int i = 0; i < n; ++i) {
    const uint64_t* up = p.up_row(i);
    const uint64_t* down = p.down_row(i);
    for (int w = 0; w < words; ++w) comp[i][w] = up[w] | down[w];
  }

  SimplicialComplex k;
  k.n_vertices = n;
  size_t count = 0;
  std::vector<int> chain;
  std::vector<uint64_t> cand(words);

  auto emit = [&]() {
    if (++count > face_budget) throw SizeBudget("order complex exceeded face budget");
    int d = static_cast<int>(chain.size()) - 1;
    if (d >= static_cast<int>(k.by_dim.size())) k.by_dim.resize(d + 1);
    k.by_dim[d].push_back(chain);
  };

  // Chains are exactly the cliques of the comparability graph; enumerate in
  // increasing vertex order so each shows up once.
  auto dfs = [&](auto&& self, std::vector<uint64_t> avail) -> void {
    emit();
    for (int w = 0; w < words; ++w) {
      uint64_t bits = avail[w];
      while (bits) {
        int v = w * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        std::vector<uint64_t> next(words);
        for (int u = 0; u < words; ++u) next[u] = avail[u] & comp[v][u];
        // Restrict to vertices beyond v.
        for (int u = 0; u < w; ++u) next[u] = 0;
        next[w] &= ~((uint64_t(2) << (v % 64)) - 1);
        chain.push_back(v);
        self(self, std::move(next));
        chain.pop_back();
      }
    }
  };

  for (int v = 0; v < n; ++v) {
    chain.assign(1, v);
    std::vector<uint64_t> next(words);
    for (int u = 0; u < words; ++u) next[u] = comp[v][u];
    for (int u = 0; u < v / 64; ++u) next[u] = 0;
    next[v / 64] &= ~((uint64_t(2) << (v % 64)) - 1);
    dfs(dfs, std::move(next));
  }
  for (auto& level : k.by_dim) std::sort(level.begin(), level.end());
  return k;
}

namespace {

std::string face_key(const std::vector<int>& f) {
  return std::string(reinterpret_cast<const char*>(f.data()), f.size() * sizeof(int));
}

}  // namespace

std::optional<std::vector<CollapsePair>> greedy_collapse(const SimplicialComplex& k) {
  if (k.empty()) return std::nullopt;

  // Global face ids, subface lists, live coface counts.
  std::vector<const std::vector<int>*> faces;
  std::vector<int> face_dim;
  std::unordered_map<std::string, int> index;
  for (int d = 0; d <= k.dim(); ++d)
    for (const auto& f : k.by_dim[d]) {
      index[face_key(f)] = static_cast<int>(faces.size());
      faces.push_back(&f);
      face_dim.push_back(d);
    }
  const int total = static_cast<int>(faces.size());
  std::vector<std::vector<int>> subfaces(total), cofaces(total);
  for (int id = 0; id < total; ++id) {
    if (face_dim[id] == 0) continue;
    const auto& f = *faces[id];
    std::vector<int> sub(f.size() - 1);
    for (size_t drop = 0; drop < f.size(); ++drop) {
      sub.clear();
      for (size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      int sid = index.at(face_key(sub));
      subfaces[id].push_back(sid);
      cofaces[sid].push_back(id);
    }
  }
  std::vector<int> cofcnt(total);
  for (int id = 0; id < total; ++id) cofcnt[id] = static_cast<int>(cofaces[id].size());
  std::vector<bool> live(total, true);

  auto unique_live_coface = [&](int id) -> int {
    int found = -1;
    for (int c : cofaces[id])
      if (live[c]) {
        if (found >= 0) return -1;
        found = c;
      }
    return found;
  };

  // Buckets of candidate free faces by dimension; drain top down.
  std::vector<std::vector<int>> bucket(std::max(1, k.dim() + 1));
  for (int id = 0; id < total; ++id)
    if (cofcnt[id] == 1) bucket[face_dim[id]].push_back(id);

  std::vector<CollapsePair> seq;
  int live_count = total;
  for (;;) {
    int sigma = -1;
    for (int d = static_cast<int>(bucket.size()) - 1; d >= 0 && sigma < 0; --d)
      while (!bucket[d].empty()) {
        int id = bucket[d].back();
        bucket[d].pop_back();
        if (!live[id] || cofcnt[id] != 1) continue;
        int tau = unique_live_coface(id);
        if (tau < 0 || cofcnt[tau] != 0) continue;
        sigma = id;
        // Collapse (sigma, tau).
        live[sigma] = live[tau] = false;
        live_count -= 2;
        seq.push_back({*faces[sigma], *faces[tau]});
        for (int g : subfaces[tau])
          if (live[g] && --cofcnt[g] == 1) bucket[face_dim[g]].push_back(g);
        for (int g : subfaces[sigma])
          if (live[g] && --cofcnt[g] == 1) bucket[face_dim[g]].push_back(g);
        break;
      }
    if (sigma < 0) break;
  }
  if (live_count != 1) return std::nullopt;
  for (int id = 0; id < total; ++id)
    if (live[id] && face_dim[id] != 0) return std::nullopt;
  return seq;
}

}  // namespace braidlab
