#include "braidlab/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <string>
#include <unordered_map>

namespace braidlab {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Col = std::vector<std::pair<int, Rat>>;  // sorted by row index

void axpy(Col& dst, const Col& src, const Rat& lambda) {
  Col out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, lambda * src[j].second);
      ++j;
    } else {
      Rat v = dst[i].second + lambda * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

// Rank by column reduction: repeatedly cancel the lowest entry against the
// stored column owning that pivot row.
int rank(std::vector<Col> cols) {
  std::unordered_map<int, int> pivot_owner;
  int rank = 0;
  for (size_t c = 0; c < cols.size(); ++c) {
    Col& col = cols[c];
    while (!col.empty()) {
      int low = col.back().first;
      auto it = pivot_owner.find(low);
      if (it == pivot_owner.end()) {
        pivot_owner.emplace(low, static_cast<int>(c));
        ++rank;
        break;
      }
      const Col& other = cols[it->second];
      Rat lambda = -col.back().second / other.back().second;
      axpy(col, other, lambda);
    }
  }
  return rank;
}

std::string face_key(const std::vector<int>& f) {
  return std::string(reinterpret_cast<const char*>(f.data()), f.size() * sizeof(int));
}

}  // namespace

Betti homology(const SimplicialComplex& k) {
  Betti out;
  if (k.empty()) {
    out.reduced = {1};  // only the empty face survives
    return out;
  }
  const int top = k.dim();
  // ranks[d] = rank of the boundary map from d-faces, d = 0..top; the
  // augmentation sends every vertex to the empty face.
  std::vector<int> ranks(top + 2, 0);

  std::unordered_map<std::string, int> below;  // row index of each (d-1)-face
  for (int d = 0; d <= top; ++d) {
    std::vector<Col> cols;
    cols.reserve(k.by_dim[d].size());
    for (const auto& f : k.by_dim[d]) {
      Col col;
      if (d == 0) {
        col.emplace_back(0, 1);
      } else {
        std::vector<int> sub(f.size() - 1);
        for (size_t drop = 0; drop < f.size(); ++drop) {
          sub.clear();
          for (size_t i = 0; i < f.size(); ++i)
            if (i != drop) sub.push_back(f[i]);
          col.emplace_back(below.at(face_key(sub)), (drop % 2) ? -1 : 1);
        }
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
      }
      cols.push_back(std::move(col));
    }
    ranks[d] = rank(std::move(cols));
    below.clear();
    for (size_t i = 0; i < k.by_dim[d].size(); ++i)
      below.emplace(face_key(k.by_dim[d][i]), static_cast<int>(i));
  }

  out.reduced.assign(top + 2, 0);
  for (int d = -1; d <= top; ++d) {
    int64_t cells = d == -1 ? 1 : static_cast<int64_t>(k.by_dim[d].size());
    int64_t from_here = d == -1 ? 0 : ranks[d];
    int64_t from_above = d == top ? 0 : ranks[d + 1];
    out.reduced[d + 1] = cells - from_here - from_above;
  }
  return out;
}

namespace {

using Relator = std::vector<int>;  // letters +-(generator id + 1)

void free_reduce(Relator& r) {
  Relator out;
  for (int x : r) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  while (out.size() >= 2 && out.front() == -out.back()) {
    out.erase(out.begin());
    out.pop_back();
  }
  r = std::move(out);
}

}  // namespace

Pi1Probe pi1_probe(const SimplicialComplex& k, size_t move_budget) {
  Pi1Probe out;
  if (k.empty() || k.by_dim[0].empty()) return out;
  const int n = k.n_vertices;

  std::vector<std::vector<int>> adj(n);
  std::unordered_map<int64_t, int> edge_gen;  // packed edge -> generator id, -1 for tree edges
  auto pack = [](int a, int b) { return int64_t(a) * (1 << 20) + b; };
  const auto& edges = k.dim() >= 1 ? k.by_dim[1] : std::vector<std::vector<int>>{};
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<bool> seen(n, false);
  std::deque<int> queue{k.by_dim[0][0][0]};
  seen[queue.front()] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : adj[v]) {
      if (seen[u]) continue;
      seen[u] = true;
      ++reached;
      edge_gen[pack(std::min(u, v), std::max(u, v))] = -1;
      queue.push_back(u);
    }
  }
  std::vector<int> used;
  for (const auto& f : k.by_dim[0]) used.push_back(f[0]);
  for (int v : used)
    if (!seen[v]) return out;  // disconnected: nothing to prove

  int n_gens = 0;
  for (const auto& e : edges) {
    auto key = pack(e[0], e[1]);
    if (!edge_gen.count(key)) edge_gen[key] = n_gens++;
  }
  // Letter of the oriented edge a -> b (a < b forward).
  auto letter = [&](int a, int b) -> int {
    int g = edge_gen.at(pack(std::min(a, b), std::max(a, b)));
    if (g < 0) return 0;
    return a < b ? g + 1 : -(g + 1);
  };

  std::vector<Relator> relators;
  if (k.dim() >= 2)
    for (const auto& t : k.by_dim[2]) {
      Relator r;
      for (int x : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])})
        if (x) r.push_back(x);
      free_reduce(r);
      if (!r.empty()) relators.push_back(std::move(r));
    }

  std::vector<bool> gen_alive(n_gens, true);
  size_t moves = 0;
  bool changed = true;
  while (changed && moves < move_budget) {
    changed = false;
    // Kill generators forced trivial or equal to another.
    for (size_t i = 0; i < relators.size() && moves < move_budget; ++i) {
      Relator& r = relators[i];
      if (r.size() == 1) {
        int g = std::abs(r[0]) - 1;
        gen_alive[g] = false;
        for (auto& s : relators) {
          std::erase_if(s, [&](int x) { return std::abs(x) - 1 == g; });
          free_reduce(s);
        }
        ++moves;
        changed = true;
      } else if (r.size() == 2 && std::abs(r[0]) != std::abs(r[1])) {
        // r = [a, b]: b = a^-1; eliminate |b|.
        int a = r[0], b = r[1];
        int dead = std::abs(b) - 1;
        gen_alive[dead] = false;
        for (auto& s : relators) {
          Relator next;
          for (int x : s) {
            if (std::abs(x) - 1 == dead)
              next.push_back(x == b ? -a : a);
            else
              next.push_back(x);
          }
          s = std::move(next);
          free_reduce(s);
        }
        ++moves;
        changed = true;
      }
    }
    std::erase_if(relators, [](const Relator& r) { return r.empty(); });
    if (changed) continue;
    // Shorten a longer relator with a rotation of a shorter one.
    for (size_t i = 0; i < relators.size() && !changed; ++i) {
      const Relator r = relators[i];
      if (r.size() < 3) continue;
      std::vector<Relator> patterns;
      for (size_t rot = 0; rot < r.size(); ++rot) {
        Relator fwd(r.begin() + rot, r.end());
        fwd.insert(fwd.end(), r.begin(), r.begin() + rot);
        patterns.push_back(fwd);
        Relator inv;
        for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) inv.push_back(-*it);
        patterns.push_back(inv);
      }
      for (size_t j = 0; j < relators.size() && !changed; ++j) {
        if (i == j) continue;
        Relator& s = relators[j];
        if (s.size() < r.size()) continue;
        for (const auto& pat : patterns) {
          size_t plen = pat.size() - 1;
          bool hit = false;
          for (size_t at = 0; at + plen <= s.size() && !hit; ++at) {
            if (!std::equal(pat.begin(), pat.begin() + plen, s.begin() + at)) continue;
            Relator next(s.begin(), s.begin() + at);
            next.push_back(-pat.back());
            next.insert(next.end(), s.begin() + at + plen, s.end());
            free_reduce(next);
            s = std::move(next);
            hit = true;
          }
          if (hit) {
            ++moves;
            changed = true;
            break;
          }
        }
      }
    }
    std::erase_if(relators, [](const Relator& r) { return r.empty(); });
  }

  size_t alive = 0;
  for (int g = 0; g < n_gens; ++g)
    if (gen_alive[g]) ++alive;
  size_t relator_len = 0;
  for (const auto& r : relators) relator_len += r.size();
  out.presentation_size = alive + relator_len;
  out.trivial = alive == 0;
  return out;
}

}  // namespace braidlab
