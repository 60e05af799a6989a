#include "braidlab/poset.hpp"

#include <algorithm>
#include <deque>

namespace braidlab {

Poset::Poset(int n) : n_(n), up_(n), down_(n) {}

void Poset::add_less(int i, int j) {
  up_.set(i, j);
  down_.set(j, i);
}

bool Poset::validate() const {
  for (int i = 0; i < n_; ++i) {
    if (up_.get(i, i)) return false;
    for (int j = 0; j < n_; ++j) {
      if (up_.get(i, j) && up_.get(j, i)) return false;
      if (up_.get(i, j) != down_.get(j, i)) return false;
    }
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (up_.get(i, j))
        for (int k = 0; k < n_; ++k)
          if (up_.get(j, k) && !up_.get(i, k)) return false;
  return true;
}

Poset Poset::opposite() const {
  Poset op(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (up_.get(i, j)) op.add_less(j, i);
  return op;
}

Poset Poset::induced(const std::vector<int>& keep) const {
  Poset sub(static_cast<int>(keep.size()));
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b)
      if (a != b && up_.get(keep[a], keep[b])) sub.add_less(static_cast<int>(a), static_cast<int>(b));
  return sub;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (!up_.get(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < n_ && cover; ++k)
        if (up_.get(i, k) && up_.get(k, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

std::optional<int> Poset::cone_point() const {
  const int words = stride();
  for (int i = 0; i < n_; ++i) {
    const uint64_t* up = up_row(i);
    const uint64_t* down = down_row(i);
    int count = 0;
    for (int w = 0; w < words; ++w) count += __builtin_popcountll(up[w] | down[w]);
    if (count == n_ - 1) return i;
  }
  return std::nullopt;
}

namespace {

struct LiveRows {
  int n, words;
  std::vector<uint64_t> alive;
  const Poset* p;

  explicit LiveRows(const Poset& poset)
      : n(poset.size()), words(poset.stride()), alive(words, 0), p(&poset) {
    for (int i = 0; i < n; ++i) alive[i / 64] |= uint64_t(1) << (i % 64);
  }

  void kill(int i) { alive[i / 64] &= ~(uint64_t(1) << (i % 64)); }
  bool live(int i) const { return alive[i / 64] >> (i % 64) & 1; }

  // Live strict up-set or down-set of x as explicit indices.
  std::vector<int> side(int x, bool up) const {
    const uint64_t* row = up ? p->up_row(x) : p->down_row(x);
    std::vector<int> out;
    for (int w = 0; w < words; ++w) {
      uint64_t bits = row[w] & alive[w];
      while (bits) {
        out.push_back(w * 64 + __builtin_ctzll(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  // Does `set` have an extreme member m with every other element above
  // (when up) or below it?
  std::optional<int> extreme(const std::vector<int>& set, bool up) const {
    for (int m : set) {
      const uint64_t* row = up ? p->up_row(m) : p->down_row(m);
      bool ok = true;
      for (int other : set)
        if (other != m && !(row[other / 64] >> (other % 64) & 1)) {
          ok = false;
          break;
        }
      if (ok) return m;
    }
    return std::nullopt;
  }
};

}  // namespace

DismantleResult dismantle(const Poset& p) {
  DismantleResult result;
  const int n = p.size();
  LiveRows rows(p);
  std::deque<int> queue;
  std::vector<bool> queued(n, true);
  for (int i = 0; i < n; ++i) queue.push_back(i);

  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    queued[x] = false;
    if (!rows.live(x)) continue;

    auto up = rows.side(x, true);
    std::optional<int> image;
    bool inflationary = true;
    if (!up.empty()) image = rows.extreme(up, true);
    if (!image) {
      auto down = rows.side(x, false);
      if (!down.empty()) {
        image = rows.extreme(down, false);
        inflationary = false;
      }
    }
    if (!image) continue;

    rows.kill(x);
    result.steps.push_back({x, *image, inflationary});
    for (int y : rows.side(x, true))
      if (!queued[y]) {
        queued[y] = true;
        queue.push_back(y);
      }
    for (int y : rows.side(x, false))
      if (!queued[y]) {
        queued[y] = true;
        queue.push_back(y);
      }
  }
  for (int i = 0; i < n; ++i)
    if (rows.live(i)) result.core.push_back(i);
  return result;
}

bool verify_retraction(const Poset& p, const std::vector<RetractionStep>& steps) {
  const int n = p.size();
  std::vector<bool> live(n, true);
  for (const auto& step : steps) {
    int x = step.removed, m = step.image;
    if (x < 0 || x >= n || m < 0 || m >= n) return false;
    if (!live[x] || !live[m] || x == m) return false;
    if (step.inflationary ? !p.strictly_less(x, m) : !p.strictly_less(m, x)) return false;
    // The map (x -> m, id elsewhere) is monotone on the live subposet iff m
    // is the extreme of x's live strict up-set (down-set); check directly.
    for (int y = 0; y < n; ++y) {
      if (!live[y] || y == x) continue;
      if (step.inflationary && p.strictly_less(x, y) && !p.leq(m, y)) return false;
      if (!step.inflationary && p.strictly_less(y, x) && !p.leq(y, m)) return false;
    }
    live[x] = false;
  }
  return true;
}

std::vector<int> slice_elements(const Poset& dom, const Poset& cod,
                                const std::vector<int>& f, int t, SliceSide side) {
  if (static_cast<int>(f.size()) != dom.size()) throw Error("slice: map size mismatch");
  std::vector<int> keep;
  for (int x = 0; x < dom.size(); ++x) {
    int fx = f[x];
    if (fx < 0 || fx >= cod.size()) throw Error("slice: image out of range");
    bool in = side == SliceSide::Above ? cod.leq(t, fx) : cod.leq(fx, t);
    if (in) keep.push_back(x);
  }
  return keep;
}

Poset subset_poset(int k, bool include_empty, std::vector<uint32_t>* masks_out) {
  if (k > 20) throw SizeBudget("subset poset over too many atoms");
  std::vector<uint32_t> masks;
  for (uint32_t m = include_empty ? 0 : 1; m < (1u << k); ++m) masks.push_back(m);
  Poset p(static_cast<int>(masks.size()));
  for (size_t i = 0; i < masks.size(); ++i)
    for (size_t j = 0; j < masks.size(); ++j)
      if (i != j && (masks[i] & ~masks[j]) == 0)
        p.add_less(static_cast<int>(i), static_cast<int>(j));
  if (masks_out) *masks_out = std::move(masks);
  return p;
}

}  // namespace braidlab
