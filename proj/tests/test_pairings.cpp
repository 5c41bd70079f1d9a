#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "brauer/errors.hpp"
#include "brauer/json_io.hpp"
#include "brauer/pairings.hpp"

using namespace brauer;

namespace {

PairPartition make(int t, std::vector<std::pair<int, int>> pairs) {
  return PairPartition(t, std::move(pairs));
}

const PairPartition kGamma2 = make(2, {{1, 2}, {3, 4}});
const PairPartition kIdentity2 = make(2, {{1, 3}, {2, 4}});
const PairPartition kSwap2 = make(2, {{1, 4}, {2, 3}});

}  // namespace

TEST_CASE("canonical form") {
  PairPartition p = make(2, {{4, 2}, {3, 1}});
  CHECK(p.pairs() == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK(p == kIdentity2);
  CHECK(p.partner_of(1) == 3);
  CHECK(p.partner_of(4) == 2);
  CHECK_THROWS_AS(make(2, {{1, 2}, {2, 3}}), ContractError);
  CHECK_THROWS_AS(make(2, {{1, 2}, {3, 5}}), ContractError);
  CHECK_THROWS_AS(make(2, {{1, 2}}), ContractError);
  CHECK_THROWS_AS(PairPartition(0, {}), SizeError);
  CHECK_THROWS_AS(PairPartition(9, {}), SizeError);
}

TEST_CASE("enumeration counts are odd double factorials") {
  CHECK(enumerate_pairings(1).size() == 1);
  CHECK(enumerate_pairings(1).front() == make(1, {{1, 2}}));
  CHECK(enumerate_pairings(2).size() == 3);
  CHECK(enumerate_pairings(3).size() == 15);
  CHECK(enumerate_pairings(4).size() == 105);
  CHECK(enumerate_pairings(5).size() == 945);
  CHECK(enumerate_pairings(6).size() == 10395);
  CHECK(double_factorial_odd(6) == 10395);
  CHECK(double_factorial_odd(8) == 2027025);
  CHECK_THROWS_AS(enumerate_pairings(0), SizeError);
  CHECK_THROWS_AS(enumerate_pairings(kMaxPairingT + 1), SizeError);
}

TEST_CASE("enumeration is lexicographic and duplicate-free") {
  for (int t : {2, 3, 4}) {
    const auto basis = enumerate_pairings(t);
    CHECK(std::is_sorted(basis.begin(), basis.end()));
    CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
  }
  // Global basis order at t=2: gamma, identity, swap.
  const auto basis2 = enumerate_pairings(2);
  CHECK(basis2[0] == kGamma2);
  CHECK(basis2[1] == kIdentity2);
  CHECK(basis2[2] == kSwap2);
}

TEST_CASE("propagating numbers match the diagram pictures") {
  CHECK(propagating_number(kIdentity2) == 2);
  CHECK(propagating_number(kSwap2) == 2);
  CHECK(propagating_number(kGamma2) == 0);
  CHECK(is_permutation_diagram(kIdentity2));
  CHECK(!is_permutation_diagram(kGamma2));
}

TEST_CASE("propagating number parity and range") {
  for (int t : {1, 2, 3, 4}) {
    for (const PairPartition& m : enumerate_pairings(t)) {
      const int pr = propagating_number(m);
      CHECK(pr >= 0);
      CHECK(pr <= t);
      CHECK((t - pr) % 2 == 0);
    }
  }
}

TEST_CASE("exactly t! permutation diagrams, closed under composition") {
  for (int t : {2, 3, 4}) {
    int factorial = 1;
    for (int k = 2; k <= t; ++k) factorial *= k;
    std::vector<PairPartition> perms;
    for (const PairPartition& m : enumerate_pairings(t))
      if (is_permutation_diagram(m)) perms.push_back(m);
    CHECK(static_cast<int>(perms.size()) == factorial);
    for (const PairPartition& a : perms) {
      for (const PairPartition& b : perms) {
        const CompositionResult result = compose(a, b);
        CHECK(result.loops == 0);
        CHECK(is_permutation_diagram(result.product));
      }
    }
  }
}

TEST_CASE("composition identities at t=2") {
  SUBCASE("identity law") {
    const auto result = compose(kIdentity2, kIdentity2);
    CHECK(result.product == kIdentity2);
    CHECK(result.loops == 0);
  }
  SUBCASE("gamma squared picks up one loop") {
    const auto result = compose(kGamma2, kGamma2);
    CHECK(result.product == kGamma2);
    CHECK(result.loops == 1);
  }
  SUBCASE("swap is an involution") {
    const auto result = compose(kSwap2, kSwap2);
    CHECK(result.product == kIdentity2);
    CHECK(result.loops == 0);
  }
  SUBCASE("identity is neutral on everything") {
    for (const PairPartition& m : enumerate_pairings(2)) {
      CHECK(compose(identity_pairing(2), m).product == m);
      CHECK(compose(m, identity_pairing(2)).product == m);
      CHECK(compose(identity_pairing(2), m).loops == 0);
    }
  }
  CHECK_THROWS_AS(compose(kIdentity2, identity_pairing(3)), SizeError);
}

TEST_CASE("composition is associative including loop counts") {
  for (int t : {2, 3}) {
    const auto basis = enumerate_pairings(t);
    for (const PairPartition& a : basis) {
      for (const PairPartition& b : basis) {
        const auto ab = compose(a, b);
        for (const PairPartition& c : basis) {
          const auto bc = compose(b, c);
          const auto left = compose(ab.product, c);
          const auto right = compose(a, bc.product);
          CHECK(left.product == right.product);
          CHECK(ab.loops + left.loops == bc.loops + right.loops);
        }
      }
    }
  }
}

TEST_CASE("transpose_diagram") {
  CHECK(transpose_diagram(kIdentity2) == kIdentity2);
  CHECK(transpose_diagram(kGamma2) == kGamma2);
  // Relabeling 1->4, 2->5, 3->6, 4->1, 5->2, 6->3 sends {1,2},{3,4},{5,6} to
  // {4,5},{6,1},{2,3}, canonically {1,6},{2,3},{4,5}.
  const PairPartition all_top = make(3, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(transpose_diagram(all_top) == make(3, {{1, 6}, {2, 3}, {4, 5}}));
  for (int t : {1, 2, 3, 4}) {
    for (const PairPartition& m : enumerate_pairings(t)) {
      CHECK(transpose_diagram(transpose_diagram(m)) == m);
      CHECK(propagating_number(transpose_diagram(m)) == propagating_number(m));
    }
  }
}

TEST_CASE("union_cycle_count examples") {
  CHECK(union_cycle_count(kIdentity2, kIdentity2) == 2);  // Tr[I] = d^2
  CHECK(union_cycle_count(kIdentity2, kSwap2) == 1);      // Tr[SWAP] = d
  CHECK(union_cycle_count(kIdentity2, kGamma2) == 1);     // Tr[gamma] = d
  CHECK_THROWS_AS(union_cycle_count(kIdentity2, identity_pairing(3)), SizeError);
}

TEST_CASE("union_cycle_count symmetry and diagonal") {
  for (int t : {1, 2, 3}) {
    const auto basis = enumerate_pairings(t);
    for (const PairPartition& m : basis) {
      CHECK(union_cycle_count(m, m) == t);
      for (const PairPartition& n : basis)
        CHECK(union_cycle_count(m, n) == union_cycle_count(n, m));
    }
  }
}

TEST_CASE("permutation embedding") {
  CHECK(pairing_from_permutation({0}) == identity_pairing(1));
  CHECK(pairing_from_permutation({0, 1}) == kIdentity2);
  CHECK(pairing_from_permutation({1, 0}) == kSwap2);
  CHECK(enumerate_permutations(3).size() == 6);
  // Embedding respects composition: diagram of s then u composes to s o u.
  const std::vector<int> cycle = {1, 2, 0};
  const std::vector<int> swap = {1, 0, 2};
  std::vector<int> composed(3);
  for (int i = 0; i < 3; ++i) composed[i] = cycle[swap[i]];
  const auto result = compose(pairing_from_permutation(cycle), pairing_from_permutation(swap));
  CHECK(result.loops == 0);
  CHECK(result.product == pairing_from_permutation(composed));
}

TEST_CASE("string form") {
  CHECK(kIdentity2.to_string() == "{{1,3},{2,4}}");
}

TEST_CASE("enumeration near the cap") {
  CHECK(enumerate_pairings(7).size() == 135135);
}

TEST_CASE("json serialization") {
  CHECK(pairing_to_json(kIdentity2).dump() == "[[1,3],[2,4]]");
  for (const PairPartition& m : enumerate_pairings(3))
    CHECK(pairing_from_json(pairing_to_json(m)) == m);
  // Non-canonical input canonicalizes on parse.
  CHECK(pairing_from_json(Json::parse("[[4,2],[3,1]]")) == kIdentity2);
  CHECK_THROWS(pairing_from_json(Json::parse("[[1,2],[2,3]]")));
}
