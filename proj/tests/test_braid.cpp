#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/errors.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace braidlab;
using testenv::br;
using testenv::el;
using testenv::lab;
using testenv::w;

namespace {

std::set<Word> class_set(const BraidContext& bc, const PosBraidElement& b) {
  const auto& v = bc.braid_class(b);
  return {v.begin(), v.end()};
}

Word random_word(std::mt19937_64& rng, int rank, int len) {
  Word out;
  for (int i = 0; i < len; ++i)
    out.push_back(static_cast<char>(rng() % static_cast<unsigned>(rank)));
  return out;
}

}  // namespace

TEST_CASE("monoid canonical forms pick the shortlex class minimum") {
  auto& l = lab("a2");
  CHECK(br(l, "tst").canonical == w(l, "sts"));
  CHECK(br(l, "").is_identity());
  CHECK(br(l, "ssts").canonical == w(l, "ssts"));
  CHECK(class_set(l.bc, br(l, "ssts")) ==
        std::set<Word>({w(l, "ssts"), w(l, "stst"), w(l, "tstt")}));
  CHECK(class_set(l.bc, br(l, "ts")) == std::set<Word>({w(l, "ts")}));
}

TEST_CASE("monoid canonical forms agree with the move-closure oracle") {
  std::mt19937_64 rng(19);
  for (const char* name : {"a2", "b2", "a3", "i2_5", "atilde1", "atilde2"}) {
    auto& l = lab(name);
    for (int trial = 0; trial < 80; ++trial) {
      Word word = random_word(rng, static_cast<int>(l.d.rank()), 1 + trial % 7);
      CAPTURE(name);
      CAPTURE(l.d.print_word(word));
      CHECK(l.bc.canonical(word).canonical == oracle::monoid_canonical(l.d, word));
      CHECK(class_set(l.bc, l.bc.canonical(word)) == oracle::monoid_class(l.d, word));
    }
  }
}

TEST_CASE("monoid multiplication concatenates and renormalizes") {
  auto& l = lab("a2");
  CHECK(l.bc.multiply(br(l, "s"), br(l, "ts")).canonical == w(l, "sts"));
  CHECK(l.bc.multiply(br(l, "sts"), br(l, "s")).canonical == w(l, "stss"));
  CHECK(l.bc.multiply(br(l, ""), br(l, "ts")) == br(l, "ts"));
  for (const auto& a : l.bc.enumerate_elements(3))
    for (const auto& b : l.bc.enumerate_elements(3)) {
      auto ab = l.bc.multiply(a, b);
      CHECK(ab.length() == a.length() + b.length());
      CHECK(ab == l.bc.canonical(a.canonical + b.canonical));
    }
}

TEST_CASE("left divisibility scans the braid class") {
  auto& l = lab("a2");
  CHECK(l.bc.left_divides(br(l, "ts"), br(l, "sts")));
  CHECK_FALSE(l.bc.left_divides(br(l, "s"), br(l, "ts")));
  CHECK(l.bc.left_divides(br(l, ""), br(l, "ssts")));

  std::mt19937_64 rng(23);
  for (const char* name : {"a2", "b2", "atilde1"}) {
    auto& d = lab(name);
    for (int trial = 0; trial < 60; ++trial) {
      auto a = d.bc.canonical(random_word(rng, 2, trial % 4));
      auto b = d.bc.canonical(random_word(rng, 2, 1 + trial % 5));
      CHECK(d.bc.left_divides(a, b) == oracle::monoid_divides(d.d, a.canonical, b.canonical));
    }
  }
}

TEST_CASE("quotients complement their divisor") {
  auto& l = lab("b2");
  for (const auto& b : l.bc.enumerate_elements(5))
    for (const auto& a : l.bc.prefixes(b)) {
      auto c = l.bc.quotient(a, b);
      CHECK(l.bc.multiply(a, c) == b);
    }
}

TEST_CASE("divisibility is a partial order") {
  for (const char* name : {"a2", "atilde1"}) {
    auto& l = lab(name);
    auto all = l.bc.enumerate_elements(4);
    for (const auto& x : all)
      for (const auto& y : all) {
        if (l.bc.left_divides(x, y) && l.bc.left_divides(y, x)) CHECK(x == y);
        for (const auto& z : all)
          if (l.bc.left_divides(x, y) && l.bc.left_divides(y, z))
            CHECK(l.bc.left_divides(x, z));
      }
  }
}

TEST_CASE("square-free elements are recognized") {
  auto& l = lab("a2");
  CHECK_FALSE(l.bc.is_reduced(br(l, "ss")));
  CHECK(l.bc.is_reduced(br(l, "sts")));
  CHECK_FALSE(l.bc.is_reduced(br(l, "stst")));
  CHECK(l.bc.is_reduced(br(l, "")));

  std::mt19937_64 rng(29);
  for (const char* name : {"b2", "a3", "atilde2"}) {
    auto& d = lab(name);
    for (int trial = 0; trial < 60; ++trial) {
      auto b = d.bc.canonical(random_word(rng, static_cast<int>(d.d.rank()), 1 + trial % 6));
      CHECK(d.bc.is_reduced(b) == oracle::monoid_reduced(d.d, b.canonical));
    }
  }
}

TEST_CASE("reduced lifts biject group elements with square-free elements") {
  auto& l = lab("a2");
  CHECK(l.bc.reduced_lift(el(l, "ts")).canonical == w(l, "ts"));
  CHECK(l.bc.reduced_lift(el(l, "tst")).canonical == w(l, "sts"));
  CHECK(l.bc.reduced_lift(el(l, "")).is_identity());

  for (const char* name : {"a2", "b2", "a3", "i2_5", "atilde1", "atilde2"}) {
    auto& d = lab(name);
    const int cap = 5;
    auto group = d.cox.enumerate_elements(d.d.all(), cap);
    std::set<PosBraidElement> lifts;
    for (const auto& g : group) {
      auto b = d.bc.reduced_lift(g);
      CHECK(d.bc.is_reduced(b));
      CHECK(b.length() == g.length());
      // the lift spells a word for the group element it came from
      CHECK(d.cox.reduce(b.canonical) == g);
      lifts.insert(b);
    }
    CHECK(lifts.size() == group.size());

    size_t reduced_count = 0;
    for (const auto& b : d.bc.enumerate_elements(cap))
      if (d.bc.is_reduced(b)) {
        ++reduced_count;
        CHECK(lifts.count(b));
      }
    CHECK(reduced_count == lifts.size());
  }
}

TEST_CASE("descent sets collect the possible first letters") {
  auto& l = lab("a2");
  CHECK(l.bc.descent_set(br(l, "sts")).bits == 3u);
  CHECK(l.bc.descent_set(br(l, "s")).bits == 1u);
  CHECK(l.bc.descent_set(br(l, "")).empty());

  std::mt19937_64 rng(31);
  for (const char* name : {"a3", "atilde2"}) {
    auto& d = lab(name);
    for (int trial = 0; trial < 50; ++trial) {
      auto b = d.bc.canonical(random_word(rng, 3, 1 + trial % 6));
      auto expect = oracle::monoid_descents(d.d, b.canonical);
      auto got = d.bc.descent_set(b).members();
      CHECK(std::set<Gen>(got.begin(), got.end()) == expect);
    }
  }
}

TEST_CASE("prefix tables list every divisor once in order") {
  auto& l = lab("a2");
  auto divs = l.bc.prefixes(br(l, "sts"));
  REQUIRE(divs.size() == 6);
  std::vector<Word> got;
  for (const auto& p : divs) got.push_back(p.canonical);
  CHECK(got == std::vector<Word>({w(l, ""), w(l, "s"), w(l, "t"), w(l, "st"), w(l, "ts"),
                                  w(l, "sts")}));

  auto st = l.bc.prefixes(br(l, "st"));
  REQUIRE(st.size() == 3);
  CHECK(st[0].is_identity());
  CHECK(st[1] == br(l, "s"));
  CHECK(st[2] == br(l, "st"));

  CHECK(l.bc.prefixes(br(l, "")).size() == 1);

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    auto b = l.bc.canonical(random_word(rng, 2, 1 + trial % 6));
    std::set<Word> got_set;
    for (const auto& p : l.bc.prefixes(b)) got_set.insert(p.canonical);
    CHECK(got_set == oracle::monoid_divisors(l.d, b.canonical));
  }
}

TEST_CASE("maximal square-free prefixes are unique and maximal") {
  auto& l = lab("a2");
  CHECK(l.bc.maximal_reduced_prefix(br(l, "ssts")) == br(l, "sts"));
  CHECK(l.bc.maximal_reduced_prefix(br(l, "ss")) == br(l, "s"));
  CHECK(l.bc.maximal_reduced_prefix(br(l, "sts")) == br(l, "sts"));
  CHECK(l.bc.maximal_reduced_prefix(br(l, "")).is_identity());

  for (const char* name : {"a2", "b2", "atilde1"}) {
    auto& d = lab(name);
    for (const auto& b : d.bc.enumerate_elements(5)) {
      auto m = d.bc.maximal_reduced_prefix(b);
      CHECK(d.bc.is_reduced(m));
      CHECK(d.bc.left_divides(m, b));
      // maximal: every square-free divisor of b divides m
      for (const auto& p : d.bc.prefixes(b))
        if (d.bc.is_reduced(p)) CHECK(d.bc.left_divides(p, m));
      CHECK(d.bc.descent_set(b) == d.bc.descent_set(m));
    }
  }
}

TEST_CASE("descent parabolic lifts divide the element") {
  auto& l = lab("a2");
  auto rep = l.bc.verify_descent_divisibility(br(l, "sts"));
  CHECK(rep.pass);
  CHECK(rep.descents.bits == 3u);
  CHECK(rep.descents_finite_type);
  CHECK(rep.checked == 6);

  auto& f = lab("atilde1");
  auto rep2 = f.bc.verify_descent_divisibility(br(f, "stst"));
  CHECK(rep2.pass);
  CHECK(rep2.descents.bits == 1u);
  CHECK(rep2.checked == 2);

  CHECK(l.bc.verify_descent_divisibility(br(l, "")).pass);

  for (const char* name : {"a3", "atilde2"}) {
    auto& d = lab(name);
    for (const auto& b : d.bc.enumerate_elements(5)) {
      auto r = d.bc.verify_descent_divisibility(b);
      CAPTURE(d.d.print_word(b.canonical));
      CHECK(r.pass);
      CHECK(r.descents_finite_type);
    }
  }
}

TEST_CASE("longest-element lifts are detected with their support") {
  auto& l = lab("a2");
  auto full = l.bc.delta_subset(br(l, "sts"));
  REQUIRE(full.has_value());
  CHECK(full->bits == 3u);
  auto trivial = l.bc.delta_subset(br(l, ""));
  REQUIRE(trivial.has_value());
  CHECK(trivial->empty());
  CHECK_FALSE(l.bc.delta_subset(br(l, "st")).has_value());
  CHECK_FALSE(l.bc.delta_subset(br(l, "ssts")).has_value());
  auto single = l.bc.delta_subset(br(l, "s"));
  REQUIRE(single.has_value());
  CHECK(single->bits == 1u);

  auto& b2 = lab("b2");
  CHECK(b2.bc.delta_subset(b2.bc.canonical(w(b2, "stst"))).has_value());
  CHECK_FALSE(b2.bc.delta_subset(b2.bc.canonical(w(b2, "sts"))).has_value());
}

TEST_CASE("monoid enumeration matches the oracle census") {
  auto& l = lab("a2");
  auto got = l.bc.enumerate_elements(4);
  std::set<Word> got_set;
  for (const auto& b : got) got_set.insert(b.canonical);
  CHECK(got_set == oracle::monoid_elements(l.d, 4));
  CHECK(std::is_sorted(got.begin(), got.end(), [](const auto& a, const auto& b) {
    return a.length() != b.length() ? a.length() < b.length()
                                    : shortlex_less(a.canonical, b.canonical);
  }));

  auto& f = lab("atilde1");
  std::set<Word> free_set;
  for (const auto& b : f.bc.enumerate_elements(4)) free_set.insert(b.canonical);
  CHECK(free_set == oracle::monoid_elements(f.d, 4));
  CHECK(free_set.size() == 31);  // free monoid on two letters
}
