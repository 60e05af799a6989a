#include "braidlab/diagram.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

namespace braidlab {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

CoxeterDiagram CoxeterDiagram::parse(std::string_view text) {
  CoxeterDiagram d;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_gens = false;
  std::vector<std::tuple<Gen, Gen, int>> entries;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (!have_gens) {
      if (tok[0] != "gens:")
        throw ParseError("line " + std::to_string(lineno) + ": expected 'gens:' first");
      for (size_t i = 1; i < tok.size(); ++i) {
        if (d.find(tok[i]))
          throw ParseError("duplicate generator '" + tok[i] + "'");
        d.names_.push_back(tok[i]);
      }
      if (d.rank() > 24) throw ParseError("too many generators");
      d.m_.assign(d.rank() * d.rank(), 2);
      for (Gen g = 0; g < d.rank(); ++g) d.m_[g * d.rank() + g] = 1;
      have_gens = true;
      continue;
    }
    if (tok[0] != "m:" || tok.size() != 4)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'm: a b k'");
    auto a = d.find(tok[1]), b = d.find(tok[2]);
    if (!a || !b)
      throw ParseError("line " + std::to_string(lineno) + ": unknown generator");
    int k;
    if (tok[3] == "inf") {
      k = kInfinity;
    } else {
      try {
        size_t pos = 0;
        k = std::stoi(tok[3], &pos);
        if (pos != tok[3].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad order '" + tok[3] + "'");
      }
    }
    entries.emplace_back(*a, *b, k);
  }
  if (!have_gens) throw ParseError("missing 'gens:' line");
  std::vector<bool> seen(d.rank() * d.rank(), false);
  for (auto [a, b, k] : entries) {
    if (a == b) {
      if (k != 1) throw InvalidMatrix("diagonal entries must be 1");
      continue;
    }
    if (k != kInfinity && k < 2) throw InvalidMatrix("off-diagonal entries must be >= 2");
    int ab = a * d.rank() + b, ba = b * d.rank() + a;
    if ((seen[ab] || seen[ba]) && d.m_[ab] != k)
      throw InvalidMatrix("conflicting entries for one pair");
    seen[ab] = seen[ba] = true;
    d.m_[ab] = d.m_[ba] = k;
  }
  return d;
}

CoxeterDiagram CoxeterDiagram::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open diagram file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::optional<Gen> CoxeterDiagram::find(std::string_view name) const {
  for (Gen g = 0; g < rank(); ++g)
    if (names_[g] == name) return g;
  return std::nullopt;
}

Word CoxeterDiagram::parse_word(std::string_view text) const {
  auto tok = tokens(std::string(text));
  Word w;
  if (tok.empty()) return w;
  if (tok.size() == 1 && !find(tok[0])) {
    if (tok[0] == "1") return w;  // identity
    bool single = true;
    for (const auto& n : names_) single = single && n.size() == 1;
    if (!single)
      throw UnknownGenerator("unknown generator '" + tok[0] + "'");
    for (char c : tok[0]) {
      auto g = find(std::string_view(&c, 1));
      if (!g) throw UnknownGenerator(std::string("unknown generator '") + c + "'");
      w.push_back(static_cast<char>(*g));
    }
    return w;
  }
  for (const auto& t : tok) {
    auto g = find(t);
    if (!g) throw UnknownGenerator("unknown generator '" + t + "'");
    w.push_back(static_cast<char>(*g));
  }
  return w;
}

std::string CoxeterDiagram::print_word(const Word& w) const {
  if (w.empty()) return "1";
  bool single = true;
  for (const auto& n : names_) single = single && n.size() == 1;
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!single && i) out += ' ';
    out += name(w[i]);
  }
  return out;
}

std::string CoxeterDiagram::print_set(GenSet s) const {
  std::string out = "{";
  bool first = true;
  for (Gen g : s.members()) {
    if (!first) out += ",";
    out += name(g);
    first = false;
  }
  return out + "}";
}

}  // namespace braidlab
