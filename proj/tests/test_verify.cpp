#include <catch2/catch_amalgamated.hpp>

#include "alpha_extremal/canonical.hpp"
#include "alpha_extremal/families.hpp"
#include "alpha_extremal/verify.hpp"

using namespace alpha_extremal;

namespace {

const VerificationReport& find(const std::vector<VerificationReport>& rs, const std::string& id, int n, int p,
                               double alpha) {
  for (const auto& r : rs) {
    if (r.theorem_id == id && r.n == n && r.parameter == p && r.alpha == alpha) return r;
  }
  FAIL("no record " << id << " n=" << n << " p=" << p << " alpha=" << alpha);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("theorem ids round trip", "[verify]") {
  for (auto id : {TheoremId::kUniGirth, TheoremId::kUniPendant, TheoremId::kBiGirthB1, TheoremId::kBiGirth,
                  TheoremId::kBiPendantB1, TheoremId::kBiPendantB2, TheoremId::kBiPendant}) {
    CHECK(parse_theorem_id(to_string(id)) == id);
  }
  CHECK_FALSE(parse_theorem_id("uni").has_value());
  for (auto id : all_lemmas()) CHECK(parse_lemma_id(to_string(id)) == id);
  CHECK(all_lemmas().size() == 13);
}

TEST_CASE("uni-girth winner at n = 7, g = 4", "[verify]") {
  const auto rs = verify_theorem(TheoremId::kUniGirth, 7, 7, {0.5});
  const auto& r = find(rs, "uni-girth", 7, 4, 0.5);
  CHECK(r.status == Status::kPass);
  CHECK(r.winner_matches_family);
  CHECK(r.winner_canonical_key == canonical_key(make_pendant_cycle(7, 4)));
  REQUIRE(r.margin.has_value());
  CHECK(*r.margin > kMargin);
  CHECK(*r.margin == *r.rho_winner - *r.rho_runner_up);
}

TEST_CASE("uni-pendant winner at n = 6, k = 2", "[verify]") {
  const auto rs = verify_theorem(TheoremId::kUniPendant, 6, 6, {0.0});
  const auto& r = find(rs, "uni-pendant", 6, 2, 0.0);
  CHECK(r.status == Status::kPass);
  CHECK(r.winner_canonical_key == canonical_key(make_cycle_with_paths(6, 3, 2)));
}

TEST_CASE("bi-girth winner at n = 5, g = 4 is K_{2,3}", "[verify]") {
  const auto rs = verify_theorem(TheoremId::kBiGirth, 5, 5, {0.5, 0.3});
  const auto& r = find(rs, "bi-girth", 5, 4, 0.5);
  CHECK(r.status == Status::kPass);
  CHECK(r.class_size == 1);
  CHECK_FALSE(r.margin.has_value());
  CHECK(r.winner_canonical_key == canonical_key(make_theta(2, 2, 2)));
  CHECK(find(rs, "bi-girth", 5, 4, 0.3).status == Status::kSkippedOutOfHypothesis);
  // g = 5 needs ceil(15/2) - 1 = 7 vertices.
  CHECK(find(rs, "bi-girth", 5, 5, 0.5).status == Status::kSkipped);
  CHECK(find(rs, kBiGirthComparisonId, 5, 3, 0.5).status == Status::kPass);
}

TEST_CASE("theorem record layout", "[verify][property]") {
  const auto grid = full_alpha_grid();
  const auto rs = verify_theorem(TheoremId::kUniGirth, 4, 8, grid);
  // Sum over n of (n - 2) girths, ten alphas each.
  CHECK(rs.size() == (2 + 3 + 4 + 5 + 6) * grid.size());
  CHECK(std::is_sorted(rs.begin(), rs.end(), report_order));
  for (const auto& r : rs) {
    CHECK(r.status == Status::kPass);
    CHECK(r.class_size >= 1);
    if (r.class_size > 1) {
      REQUIRE(r.margin.has_value());
      CHECK(*r.rho_winner >= *r.rho_runner_up);
    }
  }
}

TEST_CASE("theorem checks are deterministic", "[verify]") {
  const auto a = verify_theorem(TheoremId::kBiPendantB2, 5, 7, {0.0, 0.5});
  const auto b = verify_theorem(TheoremId::kBiPendantB2, 5, 7, {0.0, 0.5});
  CHECK(a == b);
}

TEST_CASE("pendant path entries decay on U_9(3,1)", "[verify]") {
  std::vector<detail::LemmaInstance> out;
  detail::check_pendant_decay(make_cycle_with_paths(9, 3, 1), {0.5}, out);
  // One record per pendant path: the smallest step from root to leaf.
  REQUIRE(out.size() == 1);
  CHECK(out[0].ok);
  CHECK(out[0].larger > out[0].smaller);
  CHECK(out[0].n == 9);
}

TEST_CASE("average degree bound is tight on C8", "[verify]") {
  std::vector<detail::LemmaInstance> out;
  detail::check_average_degree(make_cycle(8), {0.7}, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].ok);
  CHECK(std::abs(out[0].larger - out[0].smaller) < kEqualityTolerance);
}

TEST_CASE("girth monotonicity of U_9(t,2)", "[verify]") {
  const auto rs = verify_lemma(LemmaId::kL3_4, LemmaScope::kExhaustiveSmall, 9, {0.0, 0.5, 0.9});
  REQUIRE_FALSE(rs.empty());
  for (const auto& r : rs) CHECK(r.status == Status::kPass);
  for (double a : {0.0, 0.5, 0.9}) {
    CHECK(rho(make_cycle_with_paths(9, 5, 2), Alpha(a)) < rho(make_cycle_with_paths(9, 4, 2), Alpha(a)));
  }
}

TEST_CASE("lemma suites pass on small scopes", "[verify][lemma]") {
  const std::vector<double> alphas{0.0, 0.5, 0.9};
  for (auto id : all_lemmas()) {
    std::vector<std::string> violations;
    const auto rs = verify_lemma(id, LemmaScope::kFamilyInstances, 7, alphas, &violations);
    INFO(to_string(id));
    CHECK_FALSE(rs.empty());
    CHECK_FALSE(any_failed(rs));
    CHECK(violations.empty());
    for (const auto& r : rs) CHECK(r.theorem_id == to_string(id));
  }
}

TEST_CASE("lemma failures are reported with a witness", "[verify]") {
  std::vector<detail::LemmaInstance> bad(1);
  bad[0].alpha_index = 0;
  bad[0].n = 4;
  bad[0].ok = false;
  bad[0].margin = -0.5;
  bad[0].key = "n4-x";
  bad[0].what = "made up";
  std::vector<std::string> violations;
  const auto rs = detail::aggregate("L2.1", {4}, {0.5}, {bad}, &violations);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].status == Status::kFail);
  CHECK(*rs[0].margin == -0.5);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].find("made up") != std::string::npos);
}

TEST_CASE("polynomial checks", "[verify]") {
  const auto rs = polycheck({0.3, 0.5});
  CHECK(rs.size() == 18);
  CHECK_FALSE(any_failed(rs));
  const auto& closed = find(rs, "poly:closed-form-C133", 6, 0, 0.5);
  CHECK(std::abs(*closed.rho_runner_up - 2.5) < 1e-12);
  CHECK(find(rs, "poly:g-sign-bound", 8, 0, 0.3).status == Status::kSkippedOutOfHypothesis);
  CHECK(find(rs, "poly:g-sign-bound", 8, 0, 0.5).status == Status::kPass);
  CHECK(find(rs, "poly:h2-root-G3", 8, 0, 0.3).status == Status::kPass);
}
