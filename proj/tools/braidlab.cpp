#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidlab/campaign.hpp"
#include "braidlab/certify.hpp"
#include "braidlab/chain_poset.hpp"
#include "braidlab/partial_cat.hpp"
#include "braidlab/report.hpp"

namespace {

using namespace braidlab;

void emit_json(const nlohmann::json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot write " + out_path);
  f << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

PresentationKind kind_from_code(const std::string& code) {
  if (code == "fin") return PresentationKind::Fin;
  if (code == "full") return PresentationKind::Full;
  throw Error("presentation kind must be fin or full, got '" + code + "'");
}

void print_element(const CoxeterDiagram& d, const Word& canonical) {
  std::cout << d.print_word(canonical) << " (length " << canonical.size() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorization posets and reduced-lift presentations of positive braid monoids"};
  app.require_subcommand(1);

  std::string diagram_path;
  std::string word_text;
  std::string variant = "full";
  std::string kind_code = "fin";
  std::string target = "group";
  std::string out_path;
  std::string dot_path;
  int max_len = 6;
  size_t budget_class = 200'000;
  size_t budget_poset = 50'000;
  unsigned jobs = 1;
  uint64_t seed = 1;
  bool inject_fault = false;
  std::vector<std::string> verify_variants;

  auto add_diagram = [&](CLI::App* sub) {
    sub->add_option("--diagram", diagram_path, "diagram file")->required();
    sub->add_option("--budget-class", budget_class, "equivalence-class node budget");
  };

  auto* nf = app.add_subcommand("normal-form", "canonical form and length of a word");
  add_diagram(nf);
  nf->add_option("--word", word_text, "input word");
  nf->add_option("--target", target, "group or monoid")
      ->check(CLI::IsMember({"group", "monoid"}));

  auto* rl = app.add_subcommand("reduced-lift", "square-free braid element lifting a group word");
  add_diagram(rl);
  rl->add_option("--word", word_text, "input word");

  auto* pf = app.add_subcommand("prefixes", "all left divisors of a braid element");
  add_diagram(pf);
  pf->add_option("--word", word_text, "input word");

  auto* ds = app.add_subcommand("descents", "generators left-dividing a braid element");
  add_diagram(ds);
  ds->add_option("--word", word_text, "input word");

  auto* mx = app.add_subcommand("max-reduced-prefix", "maximal square-free left divisor");
  add_diagram(mx);
  mx->add_option("--word", word_text, "input word");

  auto* po = app.add_subcommand("poset", "factorization poset with Hasse DOT and certificate");
  add_diagram(po);
  po->add_option("--word", word_text, "base braid word");
  po->add_option("--variant", variant, "full, s, r, f, fr, or delta");
  po->add_option("--budget-poset", budget_poset, "poset element budget");
  po->add_option("--out", out_path, "certificate JSON path (stdout when absent)");
  po->add_option("--dot", dot_path, "Hasse diagram DOT path");

  auto* ce = app.add_subcommand("certify", "contractibility certificate for a factorization poset");
  add_diagram(ce);
  ce->add_option("--word", word_text, "base braid word");
  ce->add_option("--variant", variant, "full, s, r, f, fr, or delta");
  ce->add_option("--budget-poset", budget_poset, "poset element budget");
  ce->add_option("--out", out_path, "report path (stdout when absent)");

  auto* au = app.add_subcommand("audit-axioms", "partial-category axiom audit");
  add_diagram(au);
  au->add_option("--variant", kind_code, "presentation kind: fin or full");
  au->add_option("--max-len", max_len, "arrow weight cutoff");
  au->add_option("--out", out_path, "report path (stdout when absent)");
  au->add_flag("--inject-fault", inject_fault)->group("");

  auto* fc = app.add_subcommand("fiber-check", "spine fiber against the factorization poset");
  add_diagram(fc);
  fc->add_option("--word", word_text, "base braid word");
  fc->add_option("--variant", kind_code, "presentation kind: fin or full");
  fc->add_option("--max-len", max_len, "arrow weight cutoff");
  fc->add_option("--out", out_path, "report path (stdout when absent)");
  fc->add_option("--dot", dot_path, "fiber Hasse DOT path");

  auto* ve = app.add_subcommand("verify", "full verification campaign over all short elements");
  add_diagram(ve);
  ve->add_option("--max-len", max_len, "maximal braid length");
  ve->add_option("--variant", verify_variants, "poset variants to certify (default: all)");
  ve->add_option("--budget-poset", budget_poset, "poset element budget");
  ve->add_option("--jobs", jobs, "worker threads");
  ve->add_option("--seed", seed, "seed for sampled subposets");
  ve->add_option("--out", out_path, "output directory (stdout JSON when absent)");
  ve->add_flag("--inject-fault", inject_fault)->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ve->parsed()) {
      CampaignConfig cfg;
      cfg.diagram_path = diagram_path;
      cfg.max_len = max_len;
      cfg.class_budget = budget_class;
      cfg.poset_budget = budget_poset;
      cfg.jobs = jobs;
      cfg.seed = seed;
      cfg.inject_fault = inject_fault;
      for (const auto& code : verify_variants) cfg.variants.push_back(variant_from_code(code));
      CampaignResult res = run_campaign(cfg);
      if (out_path.empty()) {
        std::cout << res.report.dump(2) << "\n";
      } else {
        std::filesystem::create_directories(out_path);
        emit_json(res.report, (std::filesystem::path(out_path) / "report.json").string());
        write_file((std::filesystem::path(out_path) / "summary.tsv").string(), res.tsv);
        std::cout << "report written to " << out_path << " (failures " << res.failures
                  << ", inconclusive " << res.inconclusive << ")\n";
      }
      return res.pass() ? 0 : 1;
    }

    CoxeterDiagram d = CoxeterDiagram::load(diagram_path);
    CoxeterContext cox(d, budget_class);
    BraidContext bc(cox);
    Word w = d.parse_word(word_text);

    if (nf->parsed()) {
      print_element(d, target == "group" ? cox.reduce(w).canonical : bc.canonical(w).canonical);
      return 0;
    }
    if (rl->parsed()) {
      print_element(d, bc.reduced_lift(cox.reduce(w)).canonical);
      return 0;
    }
    if (pf->parsed()) {
      for (const auto& p : bc.prefixes(bc.canonical(w))) std::cout << d.print_word(p.canonical) << "\n";
      return 0;
    }
    if (ds->parsed()) {
      std::cout << d.print_set(bc.descent_set(bc.canonical(w))) << "\n";
      return 0;
    }
    if (mx->parsed()) {
      print_element(d, bc.maximal_reduced_prefix(bc.canonical(w)).canonical);
      return 0;
    }
    if (po->parsed() || ce->parsed()) {
      CertificationRecord rec;
      rec.diagram = diagram_path;
      rec.b = bc.canonical(w);
      rec.variant = variant_from_code(variant);
      auto t0 = std::chrono::steady_clock::now();
      ChainPoset p = build_word_poset(bc, rec.b, rec.variant, budget_poset);
      rec.cert = certify(bc, p);
      rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
      if (po->parsed() && !dot_path.empty()) write_file(dot_path, to_dot(bc, p));
      nlohmann::json j = certification_json(bc, rec);
      j["objects"] = p.order.size();
      emit_json(report_envelope(std::move(j)), out_path);
      return 0;
    }
    if (au->parsed()) {
      PartialCategory cat(bc, kind_from_code(kind_code), max_len);
      nlohmann::json fault;
      if (inject_fault) {
        auto note = inject_table_fault(cat);
        fault = note ? nlohmann::json(*note) : nlohmann::json();
      }
      AxiomAudit a = audit_axioms(cat, 4);
      nlohmann::json j = audit_json(cat, a);
      if (!fault.is_null()) j["fault"] = fault;
      emit_json(report_envelope(std::move(j)), out_path);
      return a.pass() ? 0 : 1;
    }
    if (fc->parsed()) {
      PartialCategory cat(bc, kind_from_code(kind_code), max_len);
      PosBraidElement b = bc.canonical(w);
      FiberReport fr = fiber_check(bc, cat, b);
      if (!dot_path.empty()) write_file(dot_path, to_dot(cat, spine_fiber(bc, cat, b)));
      emit_json(report_envelope(fiber_json(bc, cat, fr)), out_path);
      return fr.pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
