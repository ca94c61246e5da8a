#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <string>

#include "hump/bijections.hpp"
#include "hump/certify.hpp"
#include "hump/hook_tableaux.hpp"
#include "hump/hump_stats.hpp"

using namespace hump;
using namespace hump::literals;

namespace {

void expect_not_in_domain(const std::function<void()>& f) {
  try {
    f();
    FAIL() << "expected NOT_IN_DOMAIN";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_in_domain) << e.what();
  }
}

const HookTableau figure_tableau{{1, 2, 4, 5, 7}, {3, 6, 8}, {9}};

}  // namespace

TEST(Psi, FigureExample) {
  const auto hp = HumpedPath::at("UFUFFDDUD"_path, 2);
  EXPECT_EQ(psi_forward(hp).str(), "UFUUDUUFF");
  EXPECT_EQ(psi_inverse("UFUUDUUFF"_path), hp);
}

TEST(Psi, SmallestCase) {
  EXPECT_EQ(psi_forward(HumpedPath::at("UD"_path, 0)).str(), "UU");
  EXPECT_EQ(psi_inverse("UU"_path), HumpedPath::at("UD"_path, 0));
}

TEST(Psi, TraceSegments) {
  const auto t = psi_forward_traced(HumpedPath::at("UFUFFDDUD"_path, 2));
  ASSERT_TRUE(t.trace.reproduces_source());
  ASSERT_EQ(t.trace.segments.size(), 3u);
  EXPECT_EQ(t.trace.segments[0].text.str(), "UF");
  EXPECT_EQ(t.trace.segments[1].text.str(), "UFFD");
  EXPECT_EQ(t.trace.segments[2].text.str(), "DUD");
  EXPECT_EQ(reverse_complement(t.trace.segments[2].text).str(), "UDU");

  const auto inv = psi_inverse_traced("UFUUDUUFF"_path);
  EXPECT_TRUE(inv.trace.reproduces_source());
  EXPECT_EQ(inv.trace.segments[2].text.str(), "UDU");
}

TEST(Psi, Domain) {
  expect_not_in_domain([] { psi_inverse("UUU"_path); });    // odd end height
  expect_not_in_domain([] { psi_inverse("UUUD"_path); });   // last non-flat is D
  expect_not_in_domain([] { psi_inverse(""_path); });
  expect_not_in_domain([] { psi_forward(HumpedPath{"UDD"_path, {0, 0, 1}}); });
  expect_not_in_domain([] { psi_forward(HumpedPath{"UFDUD"_path, {0, 0, 1}}); });  // wrong flat run
}

TEST(PsiStar, Examples) {
  EXPECT_EQ(psi_star_forward(HumpedPath::at("UD"_path, 0)).str(), "DU");
  const auto hp = HumpedPath::at("UFUFFDDUD"_path, 2);
  const auto image = psi_star_forward(hp);
  EXPECT_EQ(image.str(), "DUDDUFUFF");
  EXPECT_EQ(classify(image).min_height, -2);
  EXPECT_TRUE(classify(image).star_u());
  EXPECT_EQ(psi_star_inverse(image), hp);
}

TEST(PsiStar, InverseSplitsAtFirstMinimum) {
  // M1 = UD returns to the minimum after the inserted D.
  const auto hp = HumpedPath::at("UDUD"_path, 2);
  const auto image = psi_star_forward(hp);
  EXPECT_EQ(image.str(), "DUDU");
  EXPECT_EQ(psi_star_inverse(image), hp);
}

TEST(PsiStar, Domain) {
  expect_not_in_domain([] { psi_star_inverse("UD"_path); });   // minimum 0
  expect_not_in_domain([] { psi_star_inverse("DUUD"_path); }); // last non-flat is D
}

TEST(Rho1, Examples) {
  EXPECT_EQ(rho1_forward("UFUUDUUFF"_path).str(), "UFUUDU");
  EXPECT_EQ(rho1_forward("UU"_path).str(), "U");
  EXPECT_EQ(rho1_inverse("U"_path, 4).str(), "UUFF");
  EXPECT_EQ(rho1_inverse("UFUUDU"_path, 9).str(), "UFUUDUUFF");
  expect_not_in_domain([] { rho1_inverse("U"_path, 1); });
  expect_not_in_domain([] { rho1_inverse("UU"_path, 4); });
  expect_not_in_domain([] { rho1_forward("UUUD"_path); });
}

TEST(Rho2, Examples) {
  expect_not_in_domain([] { rho2_forward("UUDD"_path); });
  expect_not_in_domain([] { rho2_forward("FFFF"_path); });
  EXPECT_EQ(rho2_forward("UUDU"_path).str(), "UUDU");
  const auto raised = rho2_forward("UUUD"_path);
  EXPECT_EQ(raised.str(), "UUUU");
  EXPECT_EQ(classify(raised).end_height, 4);
  EXPECT_EQ(rho2_inverse("UUUU"_path, 1).str(), "UUUD");
  EXPECT_EQ(rho2_inverse("UUDU"_path, 1).str(), "UUDU");
  expect_not_in_domain([] { rho2_inverse("UUUU"_path, 3); });
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi_forward(figure_tableau).str(), "UUDUUDUDF");
  EXPECT_EQ(phi_forward(HookTableau{{1}, {2}, {}}).str(), "UD");
  EXPECT_EQ(phi_inverse("UDF"_path), (HookTableau{{1}, {2}, {3}}));
  EXPECT_EQ(phi_inverse("UUDUUDUDF"_path), figure_tableau);
}

TEST(Phi, Domain) {
  expect_not_in_domain([] { phi_forward(HookTableau{{1, 2}, {}, {}}); });      // k = n
  expect_not_in_domain([] { phi_forward(HookTableau{{2, 3}, {1}, {}}); });     // not standard
  expect_not_in_domain([] { phi_inverse("UU"_path); });
  expect_not_in_domain([] { phi_inverse("UFD"_path); });                       // first non-up is F
}

TEST(Varphi, FigureExample) {
  EXPECT_EQ(varphi_inverse("UFUUDUUFF"_path).str(), "UUDUUDUDF");
  EXPECT_EQ(varphi_forward("UUDUUDUDF"_path).str(), "UFUUDUUFF");
}

TEST(Varphi, CaseBranches) {
  EXPECT_EQ(varphi_forward("UD"_path).str(), "UU");           // U^r1 D F^r2
  EXPECT_EQ(varphi_forward("UUDF"_path).str(), "UFFU");       // odd k: U^r D M1 -> U^(r-1) F M1 U
  EXPECT_EQ(varphi_forward("UDUU"_path).str(), "UDUU");       // even k ending in U: identity
  EXPECT_EQ(varphi_inverse("UU"_path).str(), "UD");
  EXPECT_EQ(varphi_inverse("UFFU"_path).str(), "UUDF");
  EXPECT_EQ(varphi_inverse("UUFF"_path).str(), "UDFF");
  expect_not_in_domain([] { varphi_forward("UUU"_path); });
  expect_not_in_domain([] { varphi_inverse("UUD"_path); });
}

TEST(CapPhi, FigurePipeline) {
  const auto hp = HumpedPath::at("UFUFFDDUD"_path, 2);
  EXPECT_EQ(cap_phi_forward(hp), figure_tableau);
  EXPECT_EQ(cap_phi_inverse(figure_tableau), hp);
  const auto stages = cap_phi_forward_stages(hp);
  EXPECT_EQ(stages.psi.value.str(), "UFUUDUUFF");
  EXPECT_EQ(stages.varphi.value.str(), "UUDUUDUDF");
  EXPECT_EQ(stages.phi.value, figure_tableau);
}

TEST(CapPhi, SmallestCase) {
  // UD -> UU -> UD -> {1}/{2}: shape (1,1), since shape (2) is outside the range.
  const auto t = cap_phi_forward(HumpedPath::at("UD"_path, 0));
  EXPECT_EQ(t, (HookTableau{{1}, {2}, {}}));
  EXPECT_FALSE(validate(t).has_value());
}

TEST(FStep, Examples) {
  EXPECT_EQ(f_step_forward("UD"_path).str(), "UD");
  const auto a = f_step_forward("UF"_path);
  EXPECT_EQ(a.str(), "UUD");
  EXPECT_TRUE(classify(a).d_star());
  EXPECT_EQ(classify(a).end_height, 1);
  EXPECT_EQ(f_step_forward("FU"_path).str(), "UDU");
  EXPECT_EQ(f_step_inverse("UDU"_path, 2).str(), "FU");
  EXPECT_EQ(f_step_inverse("UD"_path, 2).str(), "UD");
  expect_not_in_domain([] { f_step_forward("UU"_path); });
  expect_not_in_domain([] { f_step_inverse("UDU"_path, 5); });
}

TEST(MoveFlat, Examples) {
  EXPECT_EQ(move_flat("UF"_path).str(), "FU");
  const auto b = move_flat("UUF"_path);
  EXPECT_EQ(b.str(), "FUU");
  EXPECT_EQ(weight(b), 1);
  EXPECT_EQ(move_flat_inverse("FUU"_path).str(), "UUF");
  expect_not_in_domain([] { move_flat("UFF"_path); });
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight("UFUUDUUFF"_path), 1);
  EXPECT_EQ(weight("UF"_path), -1);
  EXPECT_EQ(weight("UU"_path), 1);
  expect_not_in_domain([] { weight("FDF"_path); });
}

TEST(Traces, ReproduceSourceOnAllInputsUpToEight) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& hp : humped_paths(n)) {
      EXPECT_TRUE(psi_forward_traced(hp).trace.reproduces_source());
      EXPECT_TRUE(psi_star_forward_traced(hp).trace.reproduces_source());
    }
    for (const auto& w : words_where(n, in_even_star_u)) {
      EXPECT_TRUE(psi_inverse_traced(w).trace.reproduces_source());
      EXPECT_TRUE(varphi_inverse_traced(w).trace.reproduces_source());
      EXPECT_TRUE(rho1_forward_traced(w).trace.reproduces_source());
    }
    for (const auto& w : words_where(n, in_d_star_range))
      EXPECT_TRUE(varphi_forward_traced(w).trace.reproduces_source());
  }
}

class Certification : public ::testing::TestWithParam<int> {};

TEST_P(Certification, EveryMapIsABijection) {
  for (const auto& check : certify_all_bijections(GetParam())) {
    EXPECT_TRUE(check.passed()) << check.map << " n=" << check.order << ": " << check.failure.value_or("");
    EXPECT_EQ(check.domain_size, check.codomain_size) << check.map;
  }
}

INSTANTIATE_TEST_SUITE_P(OrdersUpToTen, Certification, ::testing::Range(1, 11));

TEST(Certification, DetectsABrokenInverse) {
  const auto dom = words_where(4, in_d_star_range);
  const auto cod = words_where(4, in_even_star_u);
  const auto check = certify_bijection<PathWord, PathWord>(
      "broken", 4, dom, cod, varphi_forward, [](const PathWord& w) { return w; });
  EXPECT_FALSE(check.passed());
}

TEST(SignedWeight, SumsMatchShiftedTableauCounts) {
  for (int n = 0; n <= 12; ++n) {
    std::map<int, ExactInt> sums;
    enumerate_paths(n, PathFilter::of(PathFlag::motzkin_prefix | PathFlag::star_u),
                    [&](const PathWord& w) { sums[w.end_height() - 1] += weight(w); });
    for (int k = 0; k <= n; ++k) {
      const ExactInt shifted = s_count(n, k) + ((n + k + 1) % 2 == 0 ? 1 : -1);
      EXPECT_EQ(sums[k], shifted) << n << "," << k;
    }
  }
}
