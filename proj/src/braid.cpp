#include "braidlab/braid.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace braidlab {

BraidContext::BraidContext(const CoxeterContext& cox) : cox_(&cox) {}

PosBraidElement BraidContext::canonical(const Word& w) const {
  Word cached;
  if (canon_.lookup(w, &cached)) return PosBraidElement{cached};

  std::unordered_set<Word> visited{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word u = queue.front();
    queue.pop_front();
    std::vector<Word> next;
    append_braid_neighbors(diagram(), u, next);
    for (auto& v : next) {
      if (visited.insert(v).second) {
        if (visited.size() > cox_->class_budget())
          throw ClassTooLarge("braid class exceeded budget");
        queue.push_back(v);
      }
    }
  }
  std::vector<Word> members(visited.begin(), visited.end());
  std::sort(members.begin(), members.end(), shortlex_less);
  Word least = members.front();
  for (const auto& u : members) canon_.insert(u, least);
  class_.get_or_compute(least, [&] { return members; });
  return PosBraidElement{least};
}

PosBraidElement BraidContext::multiply(const PosBraidElement& a, const PosBraidElement& b) const {
  return canonical(a.canonical + b.canonical);
}

const std::vector<Word>& BraidContext::braid_class(const PosBraidElement& b) const {
  return class_.get_or_compute(b.canonical, [&] {
    std::unordered_set<Word> visited{b.canonical};
    std::deque<Word> queue{b.canonical};
    while (!queue.empty()) {
      Word u = queue.front();
      queue.pop_front();
      std::vector<Word> next;
      append_braid_neighbors(diagram(), u, next);
      for (auto& v : next) {
        if (visited.insert(v).second) {
          if (visited.size() > cox_->class_budget())
            throw ClassTooLarge("braid class exceeded budget");
          queue.push_back(v);
        }
      }
    }
    std::vector<Word> members(visited.begin(), visited.end());
    std::sort(members.begin(), members.end(), shortlex_less);
    return members;
  });
}

const BraidContext::DivisorTable& BraidContext::divisors(const PosBraidElement& b) const {
  return divisor_.get_or_compute(b.canonical, [&] {
    const auto& cls = braid_class(b);
    DivisorTable table;
    table.by_length.resize(b.length() + 1);
    std::vector<std::unordered_set<Word>> seen(b.length() + 1);
    for (const auto& u : cls) {
      for (int k = 0; k <= b.length(); ++k) {
        Word prefix = u.substr(0, k);
        Word c = canonical(prefix).canonical;
        if (seen[k].insert(c).second) table.by_length[k].push_back(c);
      }
    }
    for (auto& level : table.by_length) std::sort(level.begin(), level.end(), shortlex_less);
    return table;
  });
}

bool BraidContext::left_divides(const PosBraidElement& a, const PosBraidElement& b) const {
  if (a.length() > b.length()) return false;
  const auto& level = divisors(b).by_length[a.length()];
  return std::binary_search(level.begin(), level.end(), a.canonical, shortlex_less);
}

PosBraidElement BraidContext::quotient(const PosBraidElement& a, const PosBraidElement& b) const {
  Word key = a.canonical;
  key.push_back(0x7f);
  key += b.canonical;
  Word q = quotient_.get_or_compute(key, [&]() -> Word {
    for (const auto& u : braid_class(b)) {
      Word prefix = u.substr(0, a.length());
      if (canonical(prefix).canonical == a.canonical)
        return canonical(u.substr(a.length())).canonical;
    }
    throw Error("quotient: '" + diagram().print_word(a.canonical) + "' does not divide '" +
                diagram().print_word(b.canonical) + "'");
  });
  return PosBraidElement{q};
}

bool BraidContext::is_reduced(const PosBraidElement& b) const {
  for (const auto& u : braid_class(b))
    for (size_t i = 0; i + 1 < u.size(); ++i)
      if (u[i] == u[i + 1]) return false;
  return true;
}

PosBraidElement BraidContext::reduced_lift(const CoxeterElement& w) const {
  return PosBraidElement{w.canonical};
}

DescentSet BraidContext::descent_set(const PosBraidElement& b) const {
  DescentSet out;
  for (const auto& u : braid_class(b))
    if (!u.empty()) out.add(u.front());
  return out;
}

std::vector<PosBraidElement> BraidContext::prefixes(const PosBraidElement& b) const {
  std::vector<PosBraidElement> out;
  for (const auto& level : divisors(b).by_length)
    for (const auto& w : level) out.push_back(PosBraidElement{w});
  return out;
}

PosBraidElement BraidContext::maximal_reduced_prefix(const PosBraidElement& b) const {
  std::vector<PosBraidElement> reduced;
  for (const auto& p : prefixes(b))
    if (is_reduced(p)) reduced.push_back(p);
  // The identity is always square-free, so `reduced` is nonempty.
  std::vector<PosBraidElement> maximal;
  for (const auto& p : reduced) {
    bool dominated = false;
    for (const auto& q : reduced)
      if (!(q == p) && left_divides(p, q)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(p);
  }
  if (maximal.size() != 1)
    throw NonUniqueMaximum("square-free divisors of '" + diagram().print_word(b.canonical) +
                           "' have " + std::to_string(maximal.size()) + " maximal elements");
  for (const auto& p : reduced)
    if (!left_divides(p, maximal.front()))
      throw NonUniqueMaximum("maximal square-free divisor does not dominate '" +
                             diagram().print_word(p.canonical) + "'");
  return maximal.front();
}

DescentLiftReport BraidContext::verify_descent_divisibility(const PosBraidElement& b) const {
  DescentLiftReport report;
  report.descents = descent_set(b);
  report.descents_finite_type = cox_->is_finite_type(report.descents);
  if (!report.descents_finite_type) return report;
  CoxeterElement longest = cox_->longest_element(report.descents);
  auto elements = cox_->enumerate_elements(report.descents, longest.length());
  report.pass = true;
  for (const auto& w : elements) {
    ++report.checked;
    if (!left_divides(reduced_lift(w), b)) {
      report.pass = false;
      report.counterexample = w.canonical;
      return report;
    }
  }
  return report;
}

std::optional<GenSet> BraidContext::delta_subset(const PosBraidElement& b) const {
  GenSet j = support(b);
  if (!cox_->is_finite_type(j)) return std::nullopt;
  if (reduced_lift(cox_->longest_element(j)) == b) return j;
  return std::nullopt;
}

std::vector<PosBraidElement> BraidContext::enumerate_elements(int max_len) const {
  std::vector<PosBraidElement> out{PosBraidElement{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::unordered_set<Word> seen;
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (Gen s = 0; s < diagram().rank(); ++s) {
        Word ext = w;
        ext.push_back(static_cast<char>(s));
        Word c = canonical(ext).canonical;
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    std::sort(next.begin(), next.end(), shortlex_less);
    for (const auto& c : next) out.push_back(PosBraidElement{c});
    layer = std::move(next);
  }
  return out;
}

}  // namespace braidlab
