#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "pathideal/classify.hpp"
#include "pathideal/error.hpp"
#include "support.hpp"

using namespace pathideal;

namespace {

const char* const kExample9 = "x1 x2\nx2 x3\nx3 x4\nx4 x5\nx5 x6\nx6 x7\nx4 x8\nx8 x9\n";

Tree family(const char* spec) { return make_family_tree(parse_family_spec(spec)); }

std::set<std::string> labels_of(const Tree& t, const std::vector<Vertex>& vs) {
  std::set<std::string> out;
  for (Vertex v : vs) out.insert(t.label(v));
  return out;
}

std::set<std::string> label_range(const char* prefix, int from, int to) {
  std::set<std::string> out;
  for (int i = from; i <= to; ++i) out.insert(prefix + std::to_string(i));
  return out;
}

}  // namespace

TEST_CASE("find_induced_two_paths examples") {
  const Tree p9 = family("path:9");
  const auto w = find_induced_two_paths(p9, 4);
  REQUIRE(w.has_value());
  CHECK(labels_of(p9, w->vertices) == std::set<std::string>{"v1", "v2", "v3", "v4", "v6", "v7", "v8", "v9"});
  CHECK(verify_witness(p9.graph(), *w));
  CHECK(w->family() == FamilySpec{FamilySpec::Kind::TwoPaths, {4}});

  CHECK_FALSE(find_induced_two_paths(family("path:8"), 4).has_value());
  CHECK_FALSE(find_induced_two_paths(family("star:6"), 2).has_value());
}

TEST_CASE("find_induced_Lnk examples") {
  const Tree l64 = family("Lnk:6,4");
  const auto w = find_induced_Lnk(l64, 6, 3, 4);
  REQUIRE(w.has_value());
  CHECK(w->k == 3);
  CHECK(w->vertices.size() == 8);
  const auto got = labels_of(l64, w->vertices);
  auto a = label_range("x", 1, 6);
  a.insert({"y2", "y3"});
  auto b = label_range("x", 2, 6);
  b.insert({"y1", "y2", "y3"});
  CHECK((got == a || got == b));
  CHECK(verify_witness(l64.graph(), *w));

  CHECK_FALSE(find_induced_Lnk(parse_tree(kExample9), 7, 3, 5).has_value());
  CHECK_FALSE(find_induced_Lnk(family("path:12"), 6, 3, 4).has_value());

  using support::error_code_of;
  const Tree p = family("path:6");
  CHECK(error_code_of([&] { find_induced_Lnk(p, 4, 3, 3); }) == ErrorCode::BadRange);
  CHECK(error_code_of([&] { find_induced_Lnk(p, 6, 2, 4); }) == ErrorCode::BadRange);
  CHECK(error_code_of([&] { find_induced_Lnk(p, 6, 3, 5); }) == ErrorCode::BadRange);
  CHECK(error_code_of([&] { find_induced_Lnk(p, 6, 4, 3); }) == ErrorCode::BadRange);
}

TEST_CASE("verify_witness rejects tampered maps") {
  const Tree l53 = family("Lnk:5,3");
  const auto w = check_Fn(l53, 4).hit;
  REQUIRE(w.has_value());
  CHECK(verify_witness(l53.graph(), *w));
  auto swapped = *w;
  std::swap(swapped.mapping[0].second, swapped.mapping[1].second);
  CHECK_FALSE(verify_witness(l53.graph(), swapped));
  auto shrunk = *w;
  shrunk.vertices.pop_back();
  CHECK_FALSE(verify_witness(l53.graph(), shrunk));
}

TEST_CASE("check_Fn examples") {
  const Tree l53 = family("Lnk:5,3");
  const auto r5 = check_Fn(l53, 5);
  CHECK(r5.in_range);
  CHECK_FALSE(r5.holds());
  REQUIRE(r5.hit.has_value());
  CHECK(r5.hit->kind == ForbiddenWitness::Kind::Lnk);

  const auto r4 = check_Fn(l53, 4);
  CHECK_FALSE(r4.holds());
  REQUIRE(r4.hit.has_value());
  CHECK(r4.hit->family() == FamilySpec{FamilySpec::Kind::Lnk, {5, 3}});

  const auto fig = check_Fn(parse_tree(kExample9), 7);
  CHECK(fig.holds());
  CHECK(fig.diameter == 6);

  const auto far = check_Fn(family("path:12"), 4);
  CHECK_FALSE(far.in_range);
  CHECK(far.hit.has_value());

  CHECK(support::error_code_of([&] { check_Fn(l53, 3); }) == ErrorCode::NUnsupported);
}

TEST_CASE("check_Fn agrees with the definition on small trees") {
  std::size_t holds = 0;
  std::size_t fails = 0;
  for (const auto& t : support::tree_corpus(4, 11)) {
    for (std::size_t n = 4; n <= 7; ++n) {
      const auto full = check_Fn(t, n);
      CHECK(full.holds() == oracle::condition_Fn(t.graph(), n));
      CHECK(full.diameter == static_cast<std::size_t>(oracle::diameter(t.graph())));
      if (full.hit) CHECK(verify_witness(t.graph(), *full.hit));
      if (n >= 5) CHECK(check_Fn(t, n, LnkRange::Reduced).holds() == full.holds());
      (full.holds() ? holds : fails) += 1;
    }
  }
  CHECK(holds > 50);
  CHECK(fails > 50);
}

TEST_CASE("zero ideal and diameter bounds") {
  for (const auto& t : support::tree_corpus(1, 10)) {
    const int d = oracle::diameter(t.graph());
    for (std::size_t n = 2; n <= 10; ++n) {
      const bool nonzero = !oracle::path_supports(t.graph(), n).empty();
      CHECK(nonzero == (d >= static_cast<int>(n) - 1));
      if (!oracle::has_induced_two_paths(t.graph(), n)) CHECK(d <= 2 * static_cast<int>(n) - 1);
    }
  }
}

TEST_CASE("trimming preserves J_n under (F_n)") {
  std::size_t checked = 0;
  for (const auto& t : support::tree_corpus(4, 11)) {
    for (std::size_t n = 4; n <= 7; ++n) {
      if (!check_Fn(t, n).holds()) continue;
      const Tree trimmed = trim(t);
      CHECK(caterpillar_decomposition(trimmed).has_value());
      CHECK(relabel(path_ideal(trimmed, n), t.labels()) == path_ideal(t, n));
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("classify examples") {
  const Tree fig = parse_tree(kExample9);
  const auto c = classify(fig, 7);
  CHECK(c.verdict == Verdict::LinearQuotients);
  CHECK(c.criterion_clause == "F_n, d <= 2n-3");
  CHECK(c.diameter == 6);
  CHECK(labels_of(fig, c.trimmed_vertices) == label_range("x", 1, 8));
  REQUIRE(std::holds_alternative<QuotientOrder>(c.witness));
  CHECK(std::get<QuotientOrder>(c.witness).order.size() == 1);
  CHECK_FALSE(c.experimental);
  CHECK(verify_classification(fig, c));

  const Tree l53 = family("Lnk:5,3");
  const auto bad = classify(l53, 4);
  CHECK(bad.verdict == Verdict::NotLinearQuotients);
  CHECK(bad.criterion_clause == "induced L_{5,3}");
  CHECK(std::get<ForbiddenWitness>(bad.witness).family() == FamilySpec{FamilySpec::Kind::Lnk, {5, 3}});

  const auto two = classify(family("path:9"), 4);
  CHECK(two.verdict == Verdict::NotLinearQuotients);
  CHECK(two.criterion_clause == "induced P_4+P_4");

  const auto zero = classify(family("star:5"), 4);
  CHECK(zero.verdict == Verdict::ZeroIdeal);
  CHECK(zero.criterion_clause == "diam(G) < n-1");
  CHECK(std::get<DiameterBound>(zero.witness) == DiameterBound{2, 4});

  CHECK(classify(family("caterpillar:6,1,0,1,1,1"), 4).criterion_clause == "F_n, d = 2n-2, l_{n-2} = 0");
  CHECK(classify(family("caterpillar:6,1,1,1,0,1"), 4).criterion_clause == "F_n, d = 2n-2, l_n = 0");
  CHECK(classify(family("caterpillar:7,1,0,1,1,0,1"), 4).criterion_clause == "F_n, d = 2n-1");
  CHECK(classify(family("caterpillar:6,1,1,1,1,1"), 4).verdict == Verdict::NotLinearQuotients);

  using support::error_code_of;
  CHECK(error_code_of([&] { classify(fig, 3); }) == ErrorCode::NUnsupported);
  CHECK(error_code_of([&] { classify_legacy_n23(fig, 4); }) == ErrorCode::NUnsupported);
}

TEST_CASE("verify_classification rejects tampered witnesses") {
  const Tree p7 = family("path:7");
  auto c = classify(p7, 4);
  REQUIRE(c.verdict == Verdict::LinearQuotients);
  CHECK(verify_classification(p7, c));
  auto& q = std::get<QuotientOrder>(c.witness);
  REQUIRE(q.certificates.size() == 4);
  q.certificates[2] = q.certificates[1];
  CHECK_FALSE(verify_classification(p7, c));

  auto zero = classify(family("star:5"), 4);
  zero.diameter = 3;
  CHECK_FALSE(verify_classification(family("star:5"), zero));

  auto wrong_kind = classify(family("path:9"), 4);
  wrong_kind.witness = DiameterBound{8, 4};
  CHECK_FALSE(verify_classification(family("path:9"), wrong_kind));
}

TEST_CASE("classify_verified on every tree up to 10 vertices") {
  std::map<Verdict, std::size_t> tally;
  for (const auto& t : support::tree_corpus(1, 10)) {
    for (std::size_t n = 4; n <= 8; ++n) {
      const auto v = classify_verified(t, n);
      CHECK(verify_classification(t, v.classification));
      tally[v.classification.verdict] += 1;
      const auto j = path_ideal(t, n);
      if (j.size() <= 7) {
        std::vector<std::uint64_t> gens;
        for (auto g : j.generators()) gens.push_back(g.bits());
        CHECK(oracle::has_linear_quotients_by_permutations(gens) ==
              (v.classification.verdict != Verdict::NotLinearQuotients));
      }
    }
  }
  CHECK(tally[Verdict::LinearQuotients] > 100);
  CHECK(tally[Verdict::NotLinearQuotients] > 20);
  CHECK(tally[Verdict::ZeroIdeal] > 100);
}

TEST_CASE("classify_verified caps and random trees") {
  const Tree big = family("caterpillar:5,3,2,2,3");
  CHECK(support::error_code_of([&] { classify_verified(big, 4, 5); }) == ErrorCode::TooManyGenerators);
  const auto v = classify_verified(big, 4, 30, 0);
  CHECK_FALSE(v.linear_resolution.has_value());
  CHECK(v.lq_oracle);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Tree t = random_tree(12 + seed % 5, seed);
    for (std::size_t n = 4; n <= 7; ++n) {
      if (path_ideal(t, n).size() > kDefaultLinearQuotientsCap) continue;
      const auto r = classify_verified(t, n, kDefaultLinearQuotientsCap, 10);
      CHECK(verify_classification(t, r.classification));
    }
  }
}

TEST_CASE("legacy n = 2, 3 follows the two-paths test") {
  for (const auto& t : support::tree_corpus(2, 10)) {
    for (std::size_t n = 2; n <= 3; ++n) {
      const auto j = path_ideal(t, n);
      if (j.size() > kDefaultLinearQuotientsCap) continue;
      const auto c = classify_legacy_n23(t, n);
      CHECK(c.experimental);
      CHECK(verify_classification(t, c));
      const bool two = oracle::has_induced_two_paths(t.graph(), n);
      if (j.is_zero()) {
        CHECK(c.verdict == Verdict::ZeroIdeal);
      } else {
        CHECK((c.verdict == Verdict::NotLinearQuotients) == two);
        CHECK(find_linear_quotients_order(j).has_value() == !two);
      }
      const auto v = classify_verified(t, n, kDefaultLinearQuotientsCap, kDefaultBettiGeneratorCap, true);
      CHECK(v.classification == c);
    }
  }
  CHECK(support::error_code_of([] { classify_verified(family("path:6"), 3); }) == ErrorCode::NUnsupported);
}
