#include <gtest/gtest.h>

#include "subshift/construction_verify.hpp"

#include "group_fixtures.hpp"

using namespace subshift;

namespace {

ConstructionSpec tower() { return derive_spec(fixtures::z2_z4_z8(), {2, 2}); }

std::shared_ptr<const ConstructionSpec> shared_tower() {
  return std::make_shared<const ConstructionSpec>(tower());
}

}  // namespace

TEST(VerifyStructure, CyclicTowerLevelOne) {
  const StructureReport r = verify_structure(tower(), 1);
  EXPECT_TRUE(r.minimality);
  EXPECT_TRUE(r.decomposition);
  EXPECT_TRUE(r.consistency);
  EXPECT_TRUE(r.not_shift);
  EXPECT_TRUE(r.witnesses.empty());
  EXPECT_EQ(r.repetition_threshold, 8u);
  EXPECT_EQ(r.max_interior_run, 6u);
  for (auto lead : r.leading_runs) EXPECT_EQ(lead, 8u);
  for (auto trail : r.trailing_runs) EXPECT_GE(trail, 8u);
}

TEST(VerifyStructure, CyclicTowerLevelTwo) {
  const StructureReport r = verify_structure(tower(), 2);
  EXPECT_TRUE(r.pass()) << (r.witnesses.empty() ? "" : r.witnesses.front());
  EXPECT_EQ(r.leading_runs.size(), 8u);
  for (auto lead : r.leading_runs) EXPECT_EQ(lead, r.repetition_threshold);
  EXPECT_LT(r.max_interior_run, r.repetition_threshold);
}

TEST(VerifyStructure, NonAbelianChainPasses) {
  const ConstructionSpec spec = derive_spec(fixtures::z2_s3(), {2});
  EXPECT_TRUE(verify_structure(spec, 1).pass());
}

TEST(VerifyStructure, RunLengthLawAcrossMultiplicities) {
  for (const std::vector<std::uint64_t>& b :
       {std::vector<std::uint64_t>{2, 2}, {3, 2}, {2, 3}, {4, 4}}) {
    const ConstructionSpec spec = derive_spec(fixtures::z2_z4_z8(), b);
    for (std::size_t k = 1; k < spec.top_level(); ++k) {
      const StructureReport r = verify_structure(spec, k);
      EXPECT_TRUE(r.pass());
      for (auto lead : r.leading_runs) EXPECT_EQ(lead, r.repetition_threshold);
      EXPECT_EQ(r.max_interior_run, 3 * spec.level(k + 1).multiplicity);
    }
  }
}

TEST(VerifyStructure, CorruptedBlockIsCaught) {
  const ConstructionSpec spec = tower();
  const AkWordFamily a1 = build_Ak(spec, 1);
  AkWordFamily a2 = build_Ak(spec, 2);
  // Swap the symbol of one interior block of w_1: runs shift and the block
  // no longer agrees with the permuted image.
  auto& runs = a2.runs[1];
  std::vector<BlockRun> edited;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i == 3) {
      edited.push_back({runs[i].element, 1});
      edited.push_back({1 - runs[i].element, 1});
      if (runs[i].count > 2) edited.push_back({runs[i].element, runs[i].count - 2});
    } else {
      edited.push_back(runs[i]);
    }
  }
  runs = edited;
  const StructureReport r = verify_structure(spec, a1, a2);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.consistency);
  bool positioned = false;
  for (const auto& w : r.witnesses) positioned = positioned || w.find("position") != std::string::npos;
  EXPECT_TRUE(positioned);
}

TEST(VerifyStructure, MissingBlockAndLongRunAreCaught) {
  const ConstructionSpec spec = tower();
  const AkWordFamily a1 = build_Ak(spec, 1);
  AkWordFamily a2 = build_Ak(spec, 2);
  // Replace every block of w_0 by symbol 1 of the same total length.
  a2.runs[0] = {{1, 36}};
  const StructureReport r = verify_structure(spec, a1, a2);
  EXPECT_FALSE(r.minimality);
  EXPECT_FALSE(r.decomposition);
}

TEST(VerifyStructure, LevelMustHaveASuccessor) {
  EXPECT_THROW(verify_structure(tower(), 3), InputError);
  EXPECT_THROW(verify_structure(tower(), 0), InputError);
}

TEST(GroupAction, CompositionLawAndInjectivity) {
  const ConstructionSpec spec = tower();
  const IsomorphismReport r2 = group_isomorphism_check(spec, 2);
  EXPECT_EQ(r2.identities_checked, 16u);
  EXPECT_TRUE(r2.pass());
  const IsomorphismReport r3 = group_isomorphism_check(spec, 3);
  EXPECT_EQ(r3.identities_checked, 64u);
  EXPECT_TRUE(r3.pass());
  const IsomorphismReport s3 = group_isomorphism_check(derive_spec(fixtures::z2_s3(), {2}), 2);
  EXPECT_EQ(s3.identities_checked, 36u);
  EXPECT_TRUE(s3.pass());
}

TEST(ComplexityAudit, FirstRegimeStartsAtLevelOne) {
  auto spec = shared_tower();
  const LanguageTable t = build_language(ConstructionSource{spec, 2}, 36);
  const AuditReport r = construction_complexity_audit(*spec, t, 1);
  ASSERT_EQ(r.rows.size(), 35u);
  EXPECT_EQ(r.rows.front().n, 1u);
  EXPECT_EQ(r.rows.front().c_n, 2u);
  EXPECT_EQ(r.rows.front().regime, 1);
  EXPECT_EQ(r.rows.front().bound, 4);
  EXPECT_TRUE(r.pass);
  for (const auto& row : r.rows) EXPECT_LE(BigInt(row.c_n), row.bound);
}

TEST(ComplexityAudit, LevelTwoStartsAtBlockLength) {
  auto spec = shared_tower();
  const LanguageTable t = build_language(ConstructionSource{spec, 3}, 80);
  const AuditReport r = construction_complexity_audit(*spec, t, 2);
  ASSERT_FALSE(r.rows.empty());
  EXPECT_EQ(r.rows.front().n, 36u);
  EXPECT_EQ(r.rows.front().regime, 1);
  EXPECT_EQ(r.rows.front().bound, 576);
  EXPECT_LE(r.rows.front().c_n, 576u);
  EXPECT_EQ(r.rows.back().n, 80u);
  EXPECT_TRUE(r.pass);
}

TEST(ComplexityAudit, DepthAndLevelErrors) {
  auto spec = shared_tower();
  const LanguageTable t = build_language(ConstructionSource{spec, 2}, 20);
  EXPECT_THROW(construction_complexity_audit(*spec, t, 2), DepthError);
  EXPECT_THROW(construction_complexity_audit(*spec, t, 3), InputError);
}

TEST(RequiredB, ThresholdForIdentityGrowth) {
  const GroupChain chain{{cyclic_group(2), cyclic_group(4)}, {{0, 2}}};
  const auto t = required_b_lower_bounds(chain, GrowthFunction::named("n"));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].threshold, BigInt(1) << 28);
  EXPECT_EQ(t[0].threshold, 268435456);
  ASSERT_TRUE(t[0].least_b);
  EXPECT_EQ(*t[0].least_b, 268435457);
}

TEST(RequiredB, LogGrowthIsSymbolic) {
  const GroupChain chain{{cyclic_group(2), cyclic_group(4)}, {{0, 2}}};
  const auto t = required_b_lower_bounds(chain, GrowthFunction::named("log2"));
  EXPECT_FALSE(t[0].least_b);
  EXPECT_NE(t[0].symbolic.find("f(b) > 268435456"), std::string::npos) << t[0].symbolic;
}

TEST(RequiredB, SmallThresholdsAreSolvedExactly) {
  const GroupChain chain = fixtures::z2_z4_z8();
  const auto sq = required_b_lower_bounds(chain, GrowthFunction::named("sqrt"));
  EXPECT_EQ(*sq[0].least_b, (BigInt(268435457) * 268435457));
  std::vector<std::uint64_t> table(40);
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = (i + 1) * (i + 1) * 1000000;
  const auto tab = required_b_lower_bounds(chain, GrowthFunction::tabulated(table));
  EXPECT_EQ(*tab[0].least_b, 17);  // 17^2 * 10^6 > 2^28 >= 16^2 * 10^6
  EXPECT_FALSE(tab[1].least_b);
}

TEST(RequiredB, InputValidation) {
  EXPECT_THROW(GrowthFunction::tabulated({1, 3, 2}), InputError);
  EXPECT_THROW(GrowthFunction::named("exp"), InputError);
  EXPECT_THROW(required_b_lower_bounds({{cyclic_group(2), cyclic_group(2)}, {{0, 1}}},
                                       GrowthFunction::named("n")),
               InputError);
}
