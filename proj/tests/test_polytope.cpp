#include "pcrystal/polytope.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace pcrystal;

namespace {

ZVector vec(std::vector<ZVector::Entry> e) { return ZVector::from_entries(std::move(e)); }

bool subset(const ZVectorSet &a, const ZVectorSet &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

class ScopedEnv {
public:
  ScopedEnv(const char *name, const char *value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

private:
  const char *name_;
};

const CheckResult &check_named(const VerifyReport &r, std::string_view prefix) {
  for (const CheckResult &c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return c;
  throw std::runtime_error("no check " + std::string(prefix));
}

} // namespace

TEST(Build, B2Membership) {
  Polyhedron p = build(TypeLabel::B, 2, Object::Binf, Source::Table);
  EXPECT_TRUE(contains(p, ZVector{}));
  EXPECT_TRUE(contains(p, vec({{1, 1}})));
  EXPECT_TRUE(contains(p, vec({{2, 1}})));
  EXPECT_FALSE(contains(p, vec({{3, 1}})));
  EXPECT_FALSE(contains(p, vec({{1, -1}})));
  EXPECT_THROW(contains(p, ZVector{}, Weight({1, 0})), crystal_error);

  Polyhedron q = build(TypeLabel::B, 2, Object::Blambda, Source::Table);
  EXPECT_TRUE(contains(q, vec({{1, 1}}), Weight({1, 0})));
  EXPECT_FALSE(contains(q, vec({{1, 1}}), Weight({0, 1})));
  EXPECT_THROW(contains(q, ZVector{}), crystal_error);
  EXPECT_THROW(contains(q, ZVector{}, Weight({1, -1})), crystal_error);
}

TEST(Build, ClosureGenerators) {
  FormSet d4 = closure_generators(TypeLabel::D, 4);
  EXPECT_EQ(d4.size(), 9u);
  EXPECT_TRUE(d4.count(LinearForm::coordinate(4, 4)));
  EXPECT_EQ(closure_generators(TypeLabel::B, 3).size(), 3u);
}

TEST(Build, SourcesWithoutTables) {
  EXPECT_NO_THROW(build(TypeLabel::A, 3, Object::Blambda, Source::Closure));
  EXPECT_NO_THROW(build(TypeLabel::G2, 2, Object::Binf, Source::Closure));
  try {
    build(TypeLabel::E7, 7, Object::Blambda, Source::Table);
    FAIL() << "expected an exception";
  } catch (const crystal_error &e) {
    EXPECT_NE(std::string(e.what()).find("closure"), std::string::npos);
  }
  EXPECT_THROW(build(TypeLabel::A, 3, Object::Binf, Source::Table), crystal_error);
  EXPECT_FALSE(has_table(TypeLabel::E8, Object::Blambda));
  EXPECT_TRUE(has_table(TypeLabel::E8, Object::Binf));
}

TEST(Enumeration, TruncatedBinfMatchesGeneration) {
  for (auto [t, n, depth] : std::vector<std::tuple<TypeLabel, int, int>>{
           {TypeLabel::B, 2, 6}, {TypeLabel::C, 3, 4}, {TypeLabel::D, 4, 4}, {TypeLabel::A, 3, 4}, {TypeLabel::G2, 2, 5}}) {
    Source s = has_table(t, Object::Binf) ? Source::Table : Source::Closure;
    Polyhedron p = build(t, n, Object::Binf, s);
    EXPECT_EQ(enumerate_binf_truncated(p, depth), generate_binf(p.iota, depth)) << p.iota.cartan().label();
  }
}

TEST(Enumeration, TruncationIsMonotone) {
  Polyhedron p = build(TypeLabel::C, 2, Object::Binf, Source::Closure);
  ZVectorSet prev = enumerate_binf_truncated(p, 0);
  EXPECT_EQ(prev, ZVectorSet{ZVector{}});
  for (int d = 1; d <= 6; ++d) {
    ZVectorSet cur = enumerate_binf_truncated(p, d);
    EXPECT_TRUE(subset(prev, cur));
    EXPECT_GT(cur.size(), prev.size());
    prev = std::move(cur);
  }
  EXPECT_THROW(enumerate_binf_truncated(p, -1), crystal_error);
}

TEST(Enumeration, BlambdaExamples) {
  Polyhedron a2 = build(TypeLabel::A, 2, Object::Blambda, Source::Closure);
  EXPECT_EQ(enumerate_blambda(a2, Weight({1, 1})).size(), 8u);
  EXPECT_EQ(enumerate_blambda(a2, Weight({0, 0})), ZVectorSet{ZVector{}});
  Polyhedron b2 = build(TypeLabel::B, 2, Object::Blambda, Source::Table);
  EXPECT_EQ(enumerate_blambda(b2, Weight({0, 1})).size(), 4u);
  EXPECT_EQ(enumerate_blambda(b2, Weight({2, 1})), generate_blambda(b2.iota, Weight({2, 1})));
  EXPECT_THROW(enumerate_blambda(b2, Weight({1, 0}), 2), crystal_error);
}

TEST(Enumeration, IndependentOfSource) {
  for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{{TypeLabel::B, 3}, {TypeLabel::D, 4}, {TypeLabel::F4, 4}}) {
    Polyhedron tab = build(t, n, Object::Binf, Source::Table);
    Polyhedron clo = build(t, n, Object::Binf, Source::Closure);
    EXPECT_EQ(enumerate_binf_truncated(tab, 4), enumerate_binf_truncated(clo, 4));
    Weight w = Weight::fundamental(n, 1);
    EXPECT_EQ(enumerate_blambda(build(t, n, Object::Blambda, Source::Table), w),
              enumerate_blambda(build(t, n, Object::Blambda, Source::Closure), w));
  }
}

TEST(Enumeration, NonzeroCoordinates) {
  Polyhedron b2 = build(TypeLabel::B, 2, Object::Binf, Source::Table);
  std::vector<Position> nz = nonzero_coordinates(b2);
  EXPECT_EQ(nz, (std::vector<Position>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  EXPECT_EQ(nonzero_coordinates(build(TypeLabel::G2, 2, Object::Binf, Source::Closure)).size(), 6u);
}

TEST(Graph, Examples) {
  CrystalGraph a1 = crystal_graph(cartan_matrix(TypeLabel::A, 1), Weight({2}));
  EXPECT_EQ(a1.nodes.size(), 3u);
  EXPECT_EQ(a1.edges.size(), 2u);
  for (auto [s, i, t] : a1.edges) EXPECT_EQ(i, 1);

  CrystalGraph b2 = crystal_graph(cartan_matrix(TypeLabel::B, 2), Weight({1, 0}));
  EXPECT_EQ(b2.nodes.size(), 5u);
  EXPECT_EQ(b2.edges.size(), 4u);

  // edges are the f_i images that stay inside the set
  IotaSequence iota(cartan_matrix(TypeLabel::B, 2));
  ZVectorSet depth2 = generate_binf(iota, 2);
  CrystalGraph g = crystal_graph(iota, depth2);
  for (auto [s, i, t] : g.edges) EXPECT_EQ(f_tilde(iota, g.nodes[s], i), g.nodes[t]);
  EXPECT_EQ(g.edges.size(), generate_binf(iota, 1).size() * 2);
}

TEST(Axioms, BrokenSetIsRejected) {
  IotaSequence iota(cartan_matrix(TypeLabel::B, 2));
  ZVectorSet good = generate_blambda(iota, Weight({1, 1}));
  EXPECT_TRUE(check_crystal_axioms(iota, good, Weight({1, 1})).passed);
  ZVectorSet bad = good;
  bad.erase(std::prev(bad.end()));
  EXPECT_FALSE(check_crystal_axioms(iota, bad, Weight({1, 1})).passed);
}

TEST(Formatting, Vectors) {
  IotaSequence iota(cartan_matrix(TypeLabel::B, 2));
  EXPECT_EQ(format_vector(iota, ZVector{}), "0");
  EXPECT_EQ(format_vector(iota, vec({{1, 2}, {4, 1}})), "x_{1;1}=2,x_{2;2}=1");
}

TEST(Verify, B2WithWeight) {
  VerifyOptions opt;
  opt.lambda = Weight({1, 0});
  opt.depth = 6;
  VerifyReport r = verify(cartan_matrix(TypeLabel::B, 2), opt);
  for (const CheckResult &c : r.checks) EXPECT_TRUE(c.passed) << c.name << (c.witnesses.empty() ? "" : c.witnesses[0]);
  EXPECT_EQ(r.checks.size(), 8u);
}

TEST(Verify, F4) {
  VerifyOptions opt;
  opt.depth = 5;
  EXPECT_TRUE(verify(cartan_matrix(TypeLabel::F4, 4), opt).passed());
}

TEST(Verify, TypesWithoutTablesUseTheClosure) {
  VerifyOptions opt;
  opt.lambda = Weight({1, 0, 1});
  VerifyReport r = verify(cartan_matrix(TypeLabel::A, 3), opt);
  EXPECT_TRUE(r.passed());
  const CheckResult &a = check_named(r, "(a)");
  ASSERT_FALSE(a.counts.empty());
  EXPECT_EQ(a.counts[0].first, "skipped");

  VerifyOptions g;
  g.lambda = Weight({1, 0});
  EXPECT_TRUE(verify(cartan_matrix(TypeLabel::G2, 2), g).passed());
}

TEST(Verify, DroppedTableFormIsDetected) {
  FormSet broken = binf_table(TypeLabel::B, 3);
  ASSERT_EQ(broken.erase(phi_form(TypeLabel::B, 3, 2, 0)), 1u);
  VerifyOptions opt;
  opt.table_override = broken;
  opt.depth = 4;
  VerifyReport r = verify(cartan_matrix(TypeLabel::B, 3), opt);
  EXPECT_FALSE(r.passed());
  const CheckResult &a = check_named(r, "(a)");
  EXPECT_FALSE(a.passed);
  ASSERT_FALSE(a.witnesses.empty());
  EXPECT_EQ(a.witnesses[0], "only in closure: x_{2;1}");
}

TEST(Verify, AlteredTableFormChangesTheLatticePoints) {
  FormSet broken = binf_table(TypeLabel::B, 2);
  broken.erase(phi_form(TypeLabel::B, 2, 1, 1));
  broken.insert(LinearForm::coordinate(2, 2));
  VerifyOptions opt;
  opt.table_override = broken;
  opt.sources = {Source::Table};
  opt.depth = 3;
  VerifyReport r = verify(cartan_matrix(TypeLabel::B, 2), opt);
  EXPECT_FALSE(check_named(r, "(b)").passed);
}

TEST(Caps, EnvironmentOverrides) {
  {
    ScopedEnv env("PCRYSTAL_CLOSURE_CAP", "5");
    EXPECT_EQ(closure_cap(), 5u);
    EXPECT_THROW(build(TypeLabel::B, 3, Object::Binf, Source::Closure), crystal_error);
  }
  {
    ScopedEnv env("PCRYSTAL_ENUMERATION_CAP", "3");
    Polyhedron p = build(TypeLabel::B, 2, Object::Blambda, Source::Table);
    EXPECT_THROW(enumerate_blambda(p, Weight({1, 0})), crystal_error);
  }
  {
    ScopedEnv env("PCRYSTAL_CLOSURE_CAP", "many");
    EXPECT_THROW(closure_cap(), crystal_error);
  }
  EXPECT_EQ(closure_cap(), kDefaultClosureCap);
}
