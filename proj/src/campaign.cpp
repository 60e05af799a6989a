#include "braidlab/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <random>

#include "braidlab/certify.hpp"
#include "braidlab/partial_cat.hpp"
#include "braidlab/report.hpp"
#include "braidlab/util.hpp"

namespace braidlab {

namespace {

int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

std::vector<WordVariant> all_variants() {
  return {WordVariant::Full,       WordVariant::Stripped,           WordVariant::Reduced,
          WordVariant::FiniteType, WordVariant::FiniteTypeReduced, WordVariant::Delta};
}

std::string betti_tsv(const Betti& b) {
  if (b.reduced.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < b.reduced.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(b.reduced[i]);
  }
  return out;
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& cfg) {
  CampaignResult res;
  CoxeterDiagram d = CoxeterDiagram::load(cfg.diagram_path);
  CoxeterContext cox(d, cfg.class_budget);
  BraidContext bc(cox);
  const std::string label = cfg.diagram_label.empty() ? cfg.diagram_path : cfg.diagram_label;

  const std::vector<PosBraidElement> elements = bc.enumerate_elements(cfg.max_len);
  const std::vector<WordVariant> variants =
      cfg.variants.empty() ? all_variants() : cfg.variants;

  std::vector<CertificationRecord> records(elements.size() * variants.size());
  std::vector<std::string> errors(records.size());
  parallel_for(records.size(), cfg.jobs, [&](size_t idx) {
    CertificationRecord& rec = records[idx];
    rec.diagram = label;
    rec.b = elements[idx / variants.size()];
    rec.variant = variants[idx % variants.size()];
    auto t0 = std::chrono::steady_clock::now();
    try {
      ChainPoset p = build_word_poset(bc, rec.b, rec.variant, cfg.poset_budget);
      rec.cert = certify(bc, p);
    } catch (const Error& e) {
      errors[idx] = e.what();
    }
    rec.elapsed_ms = ms_since(t0);
  });

  nlohmann::json certs = nlohmann::json::array();
  std::string tsv = "diagram\tb\tvariant\tverdict\tcertificate\tbetti\telapsed_ms\n";
  for (size_t idx = 0; idx < records.size(); ++idx) {
    const CertificationRecord& rec = records[idx];
    nlohmann::json j = certification_json(bc, rec);
    const bool informational =
        rec.variant == WordVariant::Stripped && bc.delta_subset(rec.b).has_value();
    j["required"] = !informational;
    if (!errors[idx].empty()) {
      j["error"] = errors[idx];
      ++res.failures;
    } else {
      if (!informational && !is_contractible(rec.cert.verdict)) ++res.failures;
      if (rec.cert.verdict == Verdict::Inconclusive) ++res.inconclusive;
    }
    certs.push_back(std::move(j));
    tsv += label + '\t' + d.print_word(rec.b.canonical) + '\t' + variant_code(rec.variant) +
           '\t' + verdict_name(rec.cert.verdict) + '\t' + rec.cert.certificate_kind() + '\t' +
           betti_tsv(rec.cert.betti) + '\t' + std::to_string(rec.elapsed_ms) + '\n';
  }

  nlohmann::json descents = nlohmann::json::array();
  for (const auto& b : elements) {
    nlohmann::json j{{"b_canonical", d.print_word(b.canonical)}};
    try {
      DescentLiftReport r = bc.verify_descent_divisibility(b);
      j["pass"] = r.pass;
      j["descents"] = d.print_set(r.descents);
      j["finite_type"] = r.descents_finite_type;
      j["checked"] = r.checked;
      if (!r.pass) {
        j["counterexample"] = d.print_word(r.counterexample);
        ++res.failures;
      }
    } catch (const Error& e) {
      j["error"] = e.what();
      j["pass"] = false;
      ++res.failures;
    }
    descents.push_back(std::move(j));
  }

  nlohmann::json presentations = nlohmann::json::array();
  for (PresentationKind kind : {PresentationKind::Fin, PresentationKind::Full}) {
    nlohmann::json pj{{"kind", presentation_kind_name(kind)}};
    try {
      PartialCategory cat(bc, kind, std::max(cfg.max_len, 1));
      pj["arrows"] = cat.arrow_count();
      if (cfg.inject_fault) {
        auto note = inject_table_fault(cat);
        pj["fault_injected"] = note.has_value();
        if (note) pj["fault"] = *note;
      }

      AxiomAudit audit = audit_axioms(cat, cfg.audit_tuple_len);
      pj["audit"] = audit_json(cat, audit);
      if (!audit.pass()) ++res.failures;

      nlohmann::json fibers = nlohmann::json::array();
      for (const auto& b : elements) {
        try {
          FiberReport fr = fiber_check(bc, cat, b);
          if (!fr.pass) ++res.failures;
          if (fr.cert.verdict == Verdict::Inconclusive) ++res.inconclusive;
          fibers.push_back(fiber_json(bc, cat, fr));
        } catch (const Error& e) {
          fibers.push_back({{"b_canonical", d.print_word(b.canonical)},
                            {"error", e.what()},
                            {"pass", false}});
          ++res.failures;
        }
      }
      pj["fibers"] = std::move(fibers);

      nlohmann::json pi0 = nlohmann::json::array();
      for (const Pi0Report& r : presentation_pi0(bc, cat, cfg.max_len)) {
        if (!r.pass) ++res.failures;
        pi0.push_back(pi0_json(r));
      }
      pj["pi0"] = std::move(pi0);
    } catch (const Error& e) {
      pj["error"] = e.what();
      ++res.failures;
    }
    presentations.push_back(std::move(pj));
  }

  nlohmann::json samples = nlohmann::json::array();
  for (const auto& b : elements) {
    if (b.length() > cfg.sample_max_len) continue;
    try {
      ChainPoset full = build_word_poset(bc, b, WordVariant::Full, cfg.poset_budget);
      std::vector<int> always, optional_idx;
      for (size_t i = 0; i < full.chains.size(); ++i) {
        bool delta_chain = true;
        for (const auto& q : full.chains[i].quotients)
          delta_chain = delta_chain && bc.delta_subset(q).has_value();
        (delta_chain ? always : optional_idx).push_back(static_cast<int>(i));
      }
      uint64_t mix = cfg.seed ^ 0x9e3779b97f4a7c15ull;
      for (char ch : b.canonical) mix = (mix ^ static_cast<uint8_t>(ch)) * 1099511628211ull;
      std::mt19937_64 rng(mix);
      for (int round = 0; round < cfg.sample_rounds; ++round) {
        std::vector<int> keep = always;
        for (int i : optional_idx)
          if (rng() & 1) keep.push_back(i);
        std::sort(keep.begin(), keep.end());
        HomotopyCertificate cert = certify(bc, full.induced(keep));
        if (!is_contractible(cert.verdict)) ++res.failures;
        if (cert.verdict == Verdict::Inconclusive) ++res.inconclusive;
        samples.push_back({{"b_canonical", d.print_word(b.canonical)},
                           {"round", round},
                           {"objects", keep.size()},
                           {"verdict", verdict_name(cert.verdict)},
                           {"certificate_kind", cert.certificate_kind()}});
      }
    } catch (const Error& e) {
      samples.push_back({{"b_canonical", d.print_word(b.canonical)}, {"error", e.what()}});
      ++res.failures;
    }
  }

  nlohmann::json variant_names = nlohmann::json::array();
  for (WordVariant v : variants) variant_names.push_back(variant_code(v));

  res.report = report_envelope({
      {"diagram", label},
      {"path", cfg.diagram_path},
      {"max_len", cfg.max_len},
      {"seed", cfg.seed},
      {"jobs", cfg.jobs},
      {"budgets", {{"class", cfg.class_budget}, {"poset", cfg.poset_budget}}},
      {"variants", variant_names},
      {"elements", elements.size()},
      {"certifications", std::move(certs)},
      {"descent_checks", std::move(descents)},
      {"presentations", std::move(presentations)},
      {"subposet_samples", std::move(samples)},
      {"failures", res.failures},
      {"inconclusive", res.inconclusive},
      {"pass", res.pass()},
  });
  res.tsv = std::move(tsv);
  return res;
}

}  // namespace braidlab
