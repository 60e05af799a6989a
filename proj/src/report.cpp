#include "braidlab/report.hpp"

namespace braidlab {

namespace {

std::string spine_label(const PartialCategory& c, const std::vector<int>& tuple) {
  const CoxeterDiagram& d = c.braid().diagram();
  std::string out = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += d.print_word(c.arrow(tuple[i]).canonical);
  }
  return out + ")";
}

nlohmann::json witness_json(const PartialCategory& c, const AxiomWitness& w) {
  nlohmann::json arrows = nlohmann::json::array();
  for (int a : w.arrows) arrows.push_back(c.braid().diagram().print_word(c.arrow(a).canonical));
  return {{"arrows", arrows}, {"detail", w.detail}};
}

}  // namespace

nlohmann::json betti_json(const Betti& b) {
  nlohmann::json out = nlohmann::json::array();
  for (auto v : b.reduced) out.push_back(v);
  return out;
}

nlohmann::json certification_json(const BraidContext& bc, const CertificationRecord& rec) {
  return {
      {"diagram", rec.diagram},
      {"b_canonical", bc.diagram().print_word(rec.b.canonical)},
      {"variant", variant_code(rec.variant)},
      {"verdict", verdict_name(rec.cert.verdict)},
      {"betti", betti_json(rec.cert.betti)},
      {"elapsed_ms", rec.elapsed_ms},
      {"certificate_kind", rec.cert.certificate_kind()},
  };
}

nlohmann::json audit_json(const PartialCategory& c, const AxiomAudit& a) {
  nlohmann::json j = {
      {"kind", presentation_kind_name(c.kind())},
      {"cutoff", c.cutoff()},
      {"arrows", c.arrow_count()},
      {"p1", a.p1},
      {"p2", a.p2},
      {"p0", a.p0},
      {"pairs_checked", a.pairs_checked},
      {"triples_checked", a.triples_checked},
      {"tuples_checked", a.tuples_checked},
      {"pass", a.pass()},
  };
  if (a.p1_witness) j["p1_witness"] = witness_json(c, *a.p1_witness);
  if (a.p2_witness) j["p2_witness"] = witness_json(c, *a.p2_witness);
  if (a.p0_witness) j["p0_witness"] = witness_json(c, *a.p0_witness);
  return j;
}

nlohmann::json fiber_json(const BraidContext& bc, const PartialCategory& c,
                          const FiberReport& r) {
  nlohmann::json j = {
      {"kind", presentation_kind_name(c.kind())},
      {"b_canonical", bc.diagram().print_word(r.base.canonical)},
      {"objects", r.objects},
      {"verdict", verdict_name(r.cert.verdict)},
      {"certificate_kind", r.cert.certificate_kind()},
      {"pass", r.pass},
  };
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

nlohmann::json pi0_json(const Pi0Report& r) {
  nlohmann::json j = {
      {"length", r.length},
      {"tuples", r.tuples},
      {"components", r.components},
      {"braid_elements", r.braid_elements},
      {"pass", r.pass},
  };
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

nlohmann::json report_envelope(nlohmann::json payload) {
  payload["schema"] = kReportSchema;
  return payload;
}

std::string to_dot(const PartialCategory& c, const SpineFiber& fib) {
  std::string out = "digraph fiber {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < fib.objects.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + spine_label(c, fib.objects[i]) + "\"];\n";
  for (auto [a, b] : fib.order.covers())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace braidlab
