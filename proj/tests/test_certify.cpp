#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "braidlab/certify.hpp"
#include "braidlab/chain_poset.hpp"
#include "helpers.hpp"

using namespace braidlab;
using testenv::br;
using testenv::lab;
using testenv::w;

namespace {

bool contractible(const HomotopyCertificate& c) {
  return c.verdict == Verdict::ContractibleByClosure ||
         c.verdict == Verdict::ContractibleByCollapse;
}

// Indices of chains all of whose quotients are lifted longest elements.
std::vector<int> delta_chain_indices(const BraidContext& bc, const ChainPoset& p) {
  std::vector<int> out;
  for (int i = 0; i < p.order.size(); ++i) {
    bool all = true;
    for (const auto& q : p.chains[i].quotients)
      if (!bc.delta_subset(q).has_value()) {
        all = false;
        break;
      }
    if (all) out.push_back(i);
  }
  return out;
}

// Slice of a chain poset over the descent sets of first stops.
std::vector<int> descent_slice(const BraidContext& bc, const ChainPoset& p, GenSet t,
                               SliceSide side) {
  std::vector<uint32_t> masks;
  Poset cod = subset_poset(static_cast<int>(bc.diagram().rank()), true, &masks);
  std::vector<int> f(p.order.size());
  for (int i = 0; i < p.order.size(); ++i)
    f[i] = static_cast<int>(bc.descent_set(p.chains[i].quotients[0]).bits);
  return slice_elements(p.order, cod, f, static_cast<int>(t.bits), side);
}

}  // namespace

TEST_CASE("posets with a cone point certify immediately") {
  auto& l = lab("a2");
  for (const char* word : {"", "s", "st", "sts", "ssts"}) {
    auto p = build_word_poset(l.bc, br(l, word), WordVariant::Full);
    auto cert = certify(l.bc, p);
    CAPTURE(word);
    CHECK(cert.verdict == Verdict::ContractibleByClosure);
    CHECK(cert.ops.empty());
    CHECK(cert.certificate_kind() == "cone");
    CHECK(verify_closure_witness(p.order, cert));
    REQUIRE(cert.cone_point >= 0);
    CHECK(p.chains[cert.cone_point].stops.empty());
  }
}

TEST_CASE("delta chains certify by closure") {
  auto& l = lab("a2");
  auto p = build_word_poset(l.bc, br(l, "sts"), WordVariant::Delta);
  REQUIRE(p.order.size() == 3);
  auto cert = certify(l.bc, p);
  CHECK(cert.verdict == Verdict::ContractibleByClosure);
  CHECK(verify_closure_witness(p.order, cert));
}

TEST_CASE("dismantling certifies the square-free chain posets") {
  auto& l = lab("a2");
  auto p = build_word_poset(l.bc, br(l, "ssts"), WordVariant::FiniteTypeReduced);
  auto cert = certify(l.bc, p);
  CHECK(cert.verdict == Verdict::ContractibleByClosure);
  CHECK_FALSE(cert.ops.empty());
  CHECK(cert.certificate_kind() == "closure");
  CHECK(verify_closure_witness(p.order, cert));

  auto direct = closure_certificate(l.bc, p, ClosureStrategy::DismantleOnly);
  REQUIRE(direct.has_value());
  CHECK(verify_closure_witness(p.order, *direct));
}

TEST_CASE("the split factorization poset is seen by homology") {
  auto& l = lab("a2");
  auto p = build_word_poset(l.bc, br(l, "sts"), WordVariant::Stripped);
  auto cert = certify(l.bc, p);
  CHECK(cert.verdict == Verdict::NotContractible);
  CHECK(cert.certificate_kind() == "homology");
  CHECK(cert.betti.degree(0) == 1);
  CHECK(cert.betti.degree(1) == 0);
  CHECK_FALSE(cert.betti.all_zero());
}

TEST_CASE("the empty poset is not contractible") {
  auto& l = lab("a2");
  auto p = build_word_poset(l.bc, br(l, ""), WordVariant::Stripped);
  REQUIRE(p.order.size() == 0);
  auto cert = certify(l.bc, p);
  CHECK(cert.verdict == Verdict::NotContractible);
  CHECK(cert.betti.degree(-1) == 1);
}

TEST_CASE("stop insertion contracts descent slices") {
  auto& l = lab("a2");

  for (const char* word : {"sts", "ssts"}) {
    auto p = build_word_poset(l.bc, br(l, word), WordVariant::Stripped);
    CAPTURE(word);

    // slicing over the empty descent set keeps everything
    auto whole = descent_slice(l.bc, p, GenSet{}, SliceSide::Above);
    CHECK(whole.size() == static_cast<size_t>(p.order.size()));

    GenSet ts;
    ts.add(0);
    auto keep = descent_slice(l.bc, p, ts, SliceSide::Above);
    REQUIRE_FALSE(keep.empty());
    CHECK(keep.size() < static_cast<size_t>(p.order.size()));
    auto sliced = p.induced(keep);
    auto cert = closure_certificate(l.bc, sliced, ClosureStrategy::InsertOnly);
    REQUIRE(cert.has_value());
    CHECK(verify_closure_witness(sliced.order, *cert));
    CHECK(certify(l.bc, sliced).verdict == Verdict::ContractibleByClosure);
  }

  // the sliced ssts poset is no cone, so its route must open with an insert
  {
    auto p = build_word_poset(l.bc, br(l, "ssts"), WordVariant::Stripped);
    GenSet ts;
    ts.add(0);
    auto sliced = p.induced(descent_slice(l.bc, p, ts, SliceSide::Above));
    auto cert = closure_certificate(l.bc, sliced, ClosureStrategy::InsertOnly);
    REQUIRE(cert.has_value());
    REQUIRE_FALSE(cert->ops.empty());
    CHECK(cert->ops.front().kind == ClosureOp::Kind::InsertStop);
    CHECK(cert->ops.front().inserted == w(l, "s"));
  }

  // a slice over an unrealized descent set is empty and essential
  auto p = build_word_poset(l.bc, br(l, "sts"), WordVariant::Stripped);
  auto none = descent_slice(l.bc, p, l.d.all(), SliceSide::Above);
  CHECK(none.empty());
  auto cert = certify(l.bc, p.induced(none));
  CHECK(cert.verdict == Verdict::NotContractible);
  CHECK(cert.betti.degree(-1) == 1);
}

TEST_CASE("plain posets certify through the same ladder") {
  Poset chain(3);
  chain.add_less(0, 1);
  chain.add_less(0, 2);
  chain.add_less(1, 2);
  auto c1 = closure_certificate(chain);
  REQUIRE(c1.has_value());
  CHECK(c1->verdict == Verdict::ContractibleByClosure);

  Poset anti(3);
  CHECK_FALSE(closure_certificate(anti).has_value());
  auto cert = certify(anti);
  CHECK(cert.verdict == Verdict::NotContractible);
  CHECK(cert.betti.degree(0) == 2);
}

TEST_CASE("collapsing certifies complexes directly") {
  auto solid = complex_from_facets(3, {{0, 1, 2}});
  auto c = collapse_certificate(solid);
  REQUIRE(c.has_value());
  CHECK(c->verdict == Verdict::ContractibleByCollapse);
  CHECK(c->certificate_kind() == "collapse");
  CHECK_FALSE(c->collapses.empty());

  auto hollow = complex_from_facets(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_FALSE(collapse_certificate(hollow).has_value());

  auto& l = lab("a2");
  auto p = build_word_poset(l.bc, br(l, "stst"), WordVariant::Reduced);
  CHECK(collapse_certificate(order_complex(p.order)).has_value());
}

TEST_CASE("face budgets degrade to inconclusive") {
  Poset anti(3);
  CertifyOptions opt;
  opt.face_budget = 2;
  auto cert = certify(anti, opt);
  CHECK(cert.verdict == Verdict::Inconclusive);
  CHECK(cert.certificate_kind() == "");
  CHECK(cert.betti.reduced.empty());
}

TEST_CASE("rationally invisible non-simply-connected input stays inconclusive") {
  // the projective plane: contractibility must not be claimed, and rational
  // homology cannot rule it out, so the honest answer is inconclusive
  auto rp2 = complex_from_facets(6, {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5},
                                     {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 5},
                                     {2, 4, 5}, {3, 4, 5}});
  // face poset ordered by containment; its order complex triangulates the
  // same space
  std::vector<std::vector<int>> faces;
  for (int d = 0; d <= rp2.dim(); ++d)
    for (const auto& f : rp2.by_dim[d]) faces.push_back(f);
  Poset fp(static_cast<int>(faces.size()));
  for (size_t i = 0; i < faces.size(); ++i)
    for (size_t j = 0; j < faces.size(); ++j)
      if (i != j && faces[i].size() < faces[j].size() &&
          std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end()))
        fp.add_less(static_cast<int>(i), static_cast<int>(j));
  REQUIRE(fp.validate());

  auto cert = certify(fp);
  CHECK(cert.verdict == Verdict::Inconclusive);
  CHECK(cert.betti.all_zero());
  CHECK_FALSE(cert.pi1.trivial);
}

TEST_CASE("closure witnesses are replayed skeptically") {
  auto& l = lab("a2");
  auto p = build_word_poset(l.bc, br(l, "sts"), WordVariant::Full);
  auto cert = certify(l.bc, p);
  REQUIRE(cert.verdict == Verdict::ContractibleByClosure);
  CHECK(verify_closure_witness(p.order, cert));

  auto wrong_kind = cert;
  wrong_kind.verdict = Verdict::ContractibleByCollapse;
  CHECK_FALSE(verify_closure_witness(p.order, wrong_kind));

  auto bad_cone = cert;
  bad_cone.cone_point = -1;
  CHECK_FALSE(verify_closure_witness(p.order, bad_cone));

  // a step moving a live element to an incomparable one must be refused
  auto ps = build_word_poset(l.bc, br(l, "sts"), WordVariant::Stripped);
  int a = -1, b = -1;
  for (int i = 0; i < ps.order.size() && a < 0; ++i)
    for (int j = 0; j < ps.order.size(); ++j)
      if (!ps.order.comparable(i, j)) {
        a = i;
        b = j;
        break;
      }
  REQUIRE(a >= 0);
  HomotopyCertificate forged;
  forged.verdict = Verdict::ContractibleByClosure;
  ClosureOp op;
  op.kind = ClosureOp::Kind::RemovePoint;
  op.inflationary = true;
  op.moved.emplace_back(a, b);
  forged.ops.push_back(op);
  forged.cone_point = 0;
  CHECK_FALSE(verify_closure_witness(ps.order, forged));

  // replaying the same removal twice trips the liveness check
  auto fr = build_word_poset(l.bc, br(l, "ssts"), WordVariant::FiniteTypeReduced);
  auto dm = certify(l.bc, fr);
  REQUIRE_FALSE(dm.ops.empty());
  auto doubled = dm;
  doubled.ops.push_back(doubled.ops.front());
  CHECK_FALSE(verify_closure_witness(fr.order, doubled));
}

TEST_CASE("certification is deterministic") {
  auto& l = lab("b2");
  auto p = build_word_poset(l.bc, br(l, "ststs"), WordVariant::Reduced);
  auto c1 = certify(l.bc, p);
  auto c2 = certify(l.bc, p);
  CHECK(c1.verdict == c2.verdict);
  REQUIRE(c1.ops.size() == c2.ops.size());
  for (size_t i = 0; i < c1.ops.size(); ++i) {
    CHECK(c1.ops[i].kind == c2.ops[i].kind);
    CHECK(c1.ops[i].moved == c2.ops[i].moved);
  }
}

TEST_CASE("random interpolating subposets stay contractible") {
  auto& l = lab("a2");
  std::mt19937_64 rng(2026);
  size_t not_contractible = 0;
  for (const auto& b : l.bc.enumerate_elements(4)) {
    auto full = build_word_poset(l.bc, b, WordVariant::Full);
    auto always = delta_chain_indices(l.bc, full);
    std::vector<int> optional_idx;
    for (int i = 0; i < full.order.size(); ++i)
      if (std::find(always.begin(), always.end(), i) == always.end())
        optional_idx.push_back(i);
    for (int round = 0; round < 6; ++round) {
      std::vector<int> keep = always;
      for (int i : optional_idx)
        if (rng() & 1) keep.push_back(i);
      std::sort(keep.begin(), keep.end());
      auto cert = certify(l.bc, full.induced(keep));
      CAPTURE(l.d.print_word(b.canonical));
      CHECK(contractible(cert));
      if (cert.verdict == Verdict::NotContractible) {
        ++not_contractible;
        CHECK_FALSE(cert.betti.all_zero());
      }
    }
  }
  CHECK(not_contractible == 0);
}

TEST_CASE("negative verdicts always carry homology evidence") {
  auto& l = lab("b2");
  for (const auto& b : l.bc.enumerate_elements(4))
    for (auto v : {WordVariant::Stripped, WordVariant::Reduced, WordVariant::Delta}) {
      auto cert = certify(l.bc, build_word_poset(l.bc, b, v));
      if (cert.verdict == Verdict::NotContractible) CHECK_FALSE(cert.betti.all_zero());
      if (cert.verdict == Verdict::Inconclusive) CHECK(cert.betti.all_zero());
    }
}
