#include "braidlab/certify.hpp"

#include <algorithm>

namespace braidlab {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ContractibleByClosure: return "ContractibleByClosure";
    case Verdict::ContractibleByCollapse: return "ContractibleByCollapse";
    case Verdict::NotContractible: return "NotContractible";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string HomotopyCertificate::certificate_kind() const {
  switch (verdict) {
    case Verdict::ContractibleByClosure: return ops.empty() ? "cone" : "closure";
    case Verdict::ContractibleByCollapse: return "collapse";
    case Verdict::NotContractible: return "homology";
    case Verdict::Inconclusive: return "";
  }
  return "";
}

namespace {

// The map is the identity off op.moved, so monotonicity only needs checking
// on pairs that touch a moved element.
bool op_valid(const Poset& p, const std::vector<char>& live, const ClosureOp& op) {
  if (op.moved.empty()) return false;
  const int n = p.size();
  std::vector<int> f(n);
  for (int i = 0; i < n; ++i) f[i] = i;
  for (const auto& [x, fx] : op.moved) {
    if (x < 0 || x >= n || fx < 0 || fx >= n) return false;
    if (!live[x] || !live[fx] || x == fx) return false;
    bool ok = op.inflationary ? p.strictly_less(x, fx) : p.strictly_less(fx, x);
    if (!ok) return false;
    f[x] = fx;
  }
  for (const auto& [x, fx] : op.moved)
    if (f[fx] != fx) return false;  // image moved too: not idempotent
  for (const auto& [x, fx] : op.moved) {
    for (int y = 0; y < n; ++y) {
      if (!live[y]) continue;
      if (p.leq(x, y) && !p.leq(fx, f[y])) return false;
      if (p.leq(y, x) && !p.leq(f[y], fx)) return false;
    }
  }
  return true;
}

// T runs over the common descents of the first quotients; the inserted stop
// is the lifted longest element of W_T, which divides every first quotient.
std::optional<ClosureOp> insert_stop_op(const BraidContext& bc, const ChainPoset& p,
                                        const std::vector<char>& live) {
  GenSet t = bc.diagram().all();
  for (int x = 0; x < p.order.size(); ++x) {
    if (!live[x]) continue;
    if (p.chains[x].quotients.empty()) return std::nullopt;
    t = t.intersect(bc.descent_set(p.chains[x].quotients[0]));
  }
  if (t.empty() || !bc.cox().is_finite_type(t)) return std::nullopt;
  const PosBraidElement delta = bc.reduced_lift(bc.cox().longest_element(t));

  auto it = std::lower_bound(p.divisors.begin(), p.divisors.end(), delta);
  const bool have_divisor = it != p.divisors.end() && *it == delta;
  const int delta_bit = have_divisor ? static_cast<int>(it - p.divisors.begin()) : -1;

  ClosureOp op;
  op.kind = ClosureOp::Kind::InsertStop;
  op.inserted = delta.canonical;
  op.inflationary = false;
  for (int x = 0; x < p.order.size(); ++x) {
    if (!live[x]) continue;
    if (p.chains[x].quotients[0] == delta) continue;
    if (delta_bit < 0) return std::nullopt;
    auto mask = p.masks[x];
    mask[delta_bit / 64] |= uint64_t(1) << (delta_bit % 64);
    int j = p.find_mask(mask);
    if (j < 0 || !live[j]) return std::nullopt;
    op.moved.emplace_back(x, j);
  }
  if (op.moved.empty() || !op_valid(p.order, live, op)) return std::nullopt;
  return op;
}

struct ClosureSearch {
  const Poset& order;
  const BraidContext* bc = nullptr;
  const ChainPoset* chains = nullptr;
  ClosureStrategy strategy = ClosureStrategy::Auto;
};

std::optional<HomotopyCertificate> run_closure(const ClosureSearch& s) {
  const int n = s.order.size();
  if (n == 0) return std::nullopt;
  std::vector<char> live(n, 1);
  HomotopyCertificate cert;
  for (;;) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (live[i]) idx.push_back(i);
    for (int x : idx) {
      bool cone = true;
      for (int y : idx)
        if (!s.order.comparable(x, y)) {
          cone = false;
          break;
        }
      if (cone) {
        cert.verdict = Verdict::ContractibleByClosure;
        cert.cone_point = x;
        return cert;
      }
    }
    bool progressed = false;
    if (s.chains && s.strategy != ClosureStrategy::DismantleOnly) {
      if (auto op = insert_stop_op(*s.bc, *s.chains, live)) {
        for (const auto& [x, fx] : op->moved) live[x] = 0;
        cert.ops.push_back(std::move(*op));
        progressed = true;
      }
    }
    if (!progressed && s.strategy != ClosureStrategy::InsertOnly) {
      Poset ind = s.order.induced(idx);
      DismantleResult d = dismantle(ind);
      for (const auto& step : d.steps) {
        ClosureOp op;
        op.kind = ClosureOp::Kind::RemovePoint;
        op.inflationary = step.inflationary;
        op.moved.emplace_back(idx[step.removed], idx[step.image]);
        live[idx[step.removed]] = 0;
        cert.ops.push_back(std::move(op));
        progressed = true;
      }
    }
    if (!progressed) return std::nullopt;
  }
}

}  // namespace

std::optional<HomotopyCertificate> closure_certificate(const Poset& p) {
  return run_closure({p});
}

std::optional<HomotopyCertificate> closure_certificate(const BraidContext& bc,
                                                       const ChainPoset& p,
                                                       ClosureStrategy strategy) {
  return run_closure({p.order, &bc, &p, strategy});
}

std::optional<HomotopyCertificate> collapse_certificate(const SimplicialComplex& k) {
  auto seq = greedy_collapse(k);
  if (!seq) return std::nullopt;
  HomotopyCertificate cert;
  cert.verdict = Verdict::ContractibleByCollapse;
  cert.collapses = std::move(*seq);
  return cert;
}

namespace {

HomotopyCertificate certify_tail(const Poset& p, const CertifyOptions& opt) {
  HomotopyCertificate out;
  SimplicialComplex k;
  try {
    k = order_complex(p, opt.face_budget);
  } catch (const SizeBudget&) {
    return out;  // no complex, no verdict
  }
  if (auto c = collapse_certificate(k)) return *c;
  out.betti = homology(k);
  if (!out.betti.all_zero()) {
    out.verdict = Verdict::NotContractible;
    return out;
  }
  out.pi1 = pi1_probe(k, opt.pi1_move_budget);
  return out;
}

}  // namespace

HomotopyCertificate certify(const Poset& p, const CertifyOptions& opt) {
  if (auto c = closure_certificate(p)) return *c;
  return certify_tail(p, opt);
}

HomotopyCertificate certify(const BraidContext& bc, const ChainPoset& p,
                            const CertifyOptions& opt) {
  if (auto c = closure_certificate(bc, p, opt.strategy)) return *c;
  return certify_tail(p.order, opt);
}

bool verify_closure_witness(const Poset& p, const HomotopyCertificate& cert) {
  if (cert.verdict != Verdict::ContractibleByClosure) return false;
  std::vector<char> live(p.size(), 1);
  for (const auto& op : cert.ops) {
    if (!op_valid(p, live, op)) return false;
    for (const auto& [x, fx] : op.moved) live[x] = 0;
  }
  if (cert.cone_point < 0 || cert.cone_point >= p.size() || !live[cert.cone_point])
    return false;
  for (int y = 0; y < p.size(); ++y)
    if (live[y] && !p.comparable(cert.cone_point, y)) return false;
  return true;
}

}  // namespace braidlab
