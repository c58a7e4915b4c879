#include <gtest/gtest.h>

#include <set>

#include "hyperseq/identities/engine.hpp"
#include "oracles.hpp"

using namespace hyperseq;
using Q = ExactRational;

namespace {

Assignment at(std::initializer_list<std::pair<const char*, Q>> kv) {
  Assignment a;
  for (const auto& [k, v] : kv) a.set(k, v);
  return a;
}

Q exact(const SequenceValue& v) { return std::get<ExactRational>(v); }

const std::vector<std::string> kListedIds = {
    "prop-5", "rem-bgg", "eq-8", "eq-9", "rem-alpha-beta", "prop-bt", "prop-falling", "eq-10", "eq-Dgh",
    "prop-leap-rel", "eq-11", "eq-pd", "eq-13", "gf-harmonic", "gf-hyperharmonic", "prop-teo4", "prop-son1",
    "cor-son4", "eq-hrp", "prop-son8", "cor-bih", "rem-kHk", "cor-w", "eq-hhr", "prop-one1-n", "prop-one1-r",
    "cor-hk-shift", "cor-e", "cor-lower", "cor-recip", "cor-e2", "rem-Hk-hik", "rem-doublesum", "prop-one2",
    "cor-nf", "cor-son6", "cor-fib-sign", "prop-one11-sinh", "prop-one11-cosh", "rem-one11-x0", "prop-one6",
    "t1-1.23", "t1-1.41", "t1-1.42", "t1-1.44", "t1-2.16", "t1-3.2", "t1-3.36", "t1-3.95", "t1-3.100",
    "t1-3.108", "t1-4.3", "t1-6.19", "t1-6.22", "t1-7.2", "t1-7.9", "t1-7.13", "t1-7.15", "t1-12.9a",
    "t1-12.9b", "t1-Z.58", "t2-1.23", "t2-1.41", "t2-1.42", "t2-1.44", "t2-2.16", "t2-3.2", "t2-3.36",
    "t2-3.95", "t2-3.100", "t2-3.108", "t2-4.3", "t2-6.19", "t2-6.22", "t2-7.2", "t2-7.9", "t2-7.13",
    "t2-7.29", "t2-7.30", "t2-12.9a", "t2-12.9b", "t2-Z.58"};

// Appendix equations registered beyond the required list.
const std::set<std::string> kExtraIds = {"eq-A1", "eq-A2", "eq-A3"};

}  // namespace

TEST(Registry, CoversEveryListedIdAndNothingUnanchored) {
  std::set<std::string> ids;
  for (const auto& e : registry()) {
    EXPECT_TRUE(ids.insert(e.id).second) << "duplicate " << e.id;
    EXPECT_FALSE(e.anchor.empty()) << e.id;
    EXPECT_NE(std::find(suite_names().begin(), suite_names().end(), e.suite), suite_names().end()) << e.id;
  }
  for (const auto& id : kListedIds) EXPECT_TRUE(ids.count(id)) << "missing " << id;
  for (const auto& id : ids) {
    bool listed = std::find(kListedIds.begin(), kListedIds.end(), id) != kListedIds.end();
    EXPECT_TRUE(listed || kExtraIds.count(id)) << "unexpected " << id;
  }
}

TEST(Registry, EveryDomainIsNonEmpty) {
  for (const auto& e : registry()) EXPECT_FALSE(enumerate(e.domain, {}).empty()) << e.id;
}

TEST(Registry, ExactEvaluationIsDeterministic) {
  for (const auto& e : registry()) {
    if (e.mode.kind != ModeKind::Exact) continue;
    auto points = enumerate(e.domain, {});
    for (std::size_t i = 0; i < points.size(); i += std::max<std::size_t>(1, points.size() / 7)) {
      try {
        EXPECT_EQ(exact(e.primary.lhs(points[i])), exact(e.primary.lhs(points[i]))) << e.id;
        EXPECT_EQ(exact(e.primary.rhs(points[i])), exact(e.primary.rhs(points[i]))) << e.id;
      } catch (const DomainError&) {
      }
    }
  }
}

TEST(Registry, LookupOfUnknownIdFails) {
  EXPECT_THROW(find_identity("t3-1.1"), LookupError);
  EXPECT_THROW(verify("nope"), LookupError);
  EXPECT_THROW(run_suite({"bogus"}), LookupError);
}

TEST(SpotValues, BalanceIdentity) {
  const auto& e = find_identity("prop-5");
  auto a = at({{"n", 3}, {"r", 2}});
  EXPECT_EQ(exact(e.primary.lhs(a)), Q::make(1, 3));
  EXPECT_EQ(exact(e.primary.rhs(a)), Q::make(1, 3));
}

TEST(SpotValues, TableRows) {
  struct Case {
    const char* id;
    Assignment a;
    Q value;
  };
  const Case cases[] = {
      {"t1-6.19", at({{"n", 2}, {"r", 2}}), 3},
      {"t1-3.36", at({{"n", 1}}), 1},
      {"t1-6.22", at({{"n", 1}}), -2},
      {"t2-1.41", at({{"n", 2}, {"r", 2}}), Q::make(5, 18)},
      {"t2-3.2", at({{"n", 2}, {"r", 1}}), Q::make(7, 2)},
      {"t2-6.19", at({{"n", 2}, {"r", 1}, {"j", 2}}), 8},
  };
  for (const auto& c : cases) {
    const auto& e = find_identity(c.id);
    EXPECT_EQ(exact(e.primary.lhs(c.a)), c.value) << c.id;
    EXPECT_EQ(exact(e.primary.rhs(c.a)), c.value) << c.id;
  }
}

TEST(Verify, BalanceIdentityPassesOnRequestedBounds) {
  DomainBounds b;
  b.per_param = {{"n", 25}, {"r", 10}};
  auto rep = verify("prop-5", b);
  EXPECT_EQ(rep.verdict(), Verdict::Pass);
  EXPECT_EQ(rep.primary.tested, 250);
  EXPECT_TRUE(rep.primary.counterexamples.empty());
}

TEST(Verify, Row395FailsAtNEqualsOneUnderBothReadings) {
  auto rep = verify("t1-3.95");
  ASSERT_EQ(rep.verdict(), Verdict::Fail);
  const auto& c = rep.primary.counterexamples.front();
  EXPECT_EQ(c.params.i("n"), 1);
  EXPECT_EQ(exact(c.lhs), Q(-2));
  EXPECT_EQ(exact(c.rhs), Q(2));
  const auto* alt = rep.reading("alternative-half");
  ASSERT_NE(alt, nullptr);
  EXPECT_EQ(alt->verdict, Verdict::Fail);
}

TEST(Verify, RowZ58DependsOnHalfIntegerConvention) {
  DomainBounds b;
  b.max_all = 20;
  auto rep = verify("t1-Z.58", b);
  EXPECT_EQ(rep.verdict(), Verdict::Fail);
  EXPECT_EQ(exact(rep.primary.counterexamples.front().lhs), Q::make(3, 2));
  EXPECT_EQ(exact(rep.primary.counterexamples.front().rhs), Q(3));
  ASSERT_NE(rep.reading("alternative-half"), nullptr);
  EXPECT_EQ(rep.reading("alternative-half")->verdict, Verdict::Pass);
  EXPECT_EQ(rep.reading("alternative-half")->tested, 20);
}

TEST(Verify, Table2Row32PrintedOrderFailsWhileDerivedOrderPasses) {
  auto rep = verify("t2-3.2");
  EXPECT_EQ(rep.verdict(), Verdict::Pass);
  ASSERT_NE(rep.reading("as-printed"), nullptr);
  EXPECT_EQ(rep.reading("as-printed")->verdict, Verdict::Fail);
}

TEST(Verify, Table2Row142CounterexampleMatchesBruteForce) {
  auto report = run_suite({"table2"}, {}, {}, {"1.42"});
  const auto* r = report.find("t2-1.42");
  ASSERT_NE(r, nullptr);
  ASSERT_EQ(r->verdict(), Verdict::Fail);
  const auto& c = r->primary.counterexamples.front();
  EXPECT_EQ(c.params.str(), "n=1, r=2");
  // n = 1: lhs = h_1^(r) / C(r, 1)^2 = 1/r^2, rhs = 1/r
  EXPECT_EQ(exact(c.lhs), Q::make(1, 4));
  EXPECT_EQ(exact(c.rhs), Q::make(1, 2));
}

TEST(Verify, DigammaDifferenceAsStatedFailsWithSignFlip) {
  auto rep = verify("prop-one6");
  ASSERT_EQ(rep.verdict(), Verdict::Fail);
  EXPECT_EQ(rep.primary.failed, rep.primary.tested);
  const auto& c = rep.primary.counterexamples.front();
  EXPECT_NEAR(as_certified(c.lhs).value, -as_certified(c.rhs).value, 1e-12);
}

TEST(Verify, SkipsDomainErrorsWithReasonAndPropagatesIntegrityErrors) {
  Identity e{"test-skip", "core", "anchor", Mode::exact(), {Branch{{ParamDecl::range("n", 0, 4)}, {}}},
             Reading{"default", [](const Assignment& a) -> SequenceValue { return Q(a.i("n")).reciprocal(); },
                     [](const Assignment& a) -> SequenceValue { return Q::make(1, a.i("n")); }},
             {}};
  auto rep = verify(e);
  EXPECT_EQ(rep.verdict(), Verdict::Pass);
  EXPECT_EQ(rep.primary.tested, 4);
  EXPECT_EQ(rep.primary.skipped, 1);
  ASSERT_EQ(rep.primary.skips.size(), 1u);
  EXPECT_EQ(rep.primary.skips[0].params.i("n"), 0);
  EXPECT_NE(rep.primary.skips[0].reason.find("domain"), std::string::npos);

  Identity bad = e;
  bad.primary.lhs = [](const Assignment&) -> SequenceValue { return CertifiedReal{1, 0}; };
  EXPECT_THROW(verify(bad), IntegrityError);
}

TEST(Verify, AllSkippedMeansSkipped) {
  Identity e{"test-skipped", "core", "anchor", Mode::exact(), {Branch{{ParamDecl::range("n", 1, 3)}, {}}},
             Reading{"default", [](const Assignment&) -> SequenceValue { throw DomainError("always"); },
                     [](const Assignment&) -> SequenceValue { return Q(0); }},
             {}};
  auto rep = verify(e);
  EXPECT_EQ(rep.verdict(), Verdict::Skipped);
  EXPECT_EQ(rep.primary.tested, 0);
}

TEST(Verify, CounterexampleCapIsHonoured) {
  AuditOptions opts;
  opts.counterexample_cap = 2;
  auto rep = verify("t1-7.9", {}, opts);
  EXPECT_EQ(rep.primary.counterexamples.size(), 2u);
  EXPECT_EQ(rep.primary.failed, 25);
}

TEST(Verify, EnlargingTheDomainNeverTurnsFailIntoPass) {
  for (const auto& e : registry()) {
    if (e.suite == "float") continue;
    DomainBounds small;
    small.max_all = 3;
    auto a = verify(e, small);
    if (a.verdict() != Verdict::Fail) continue;
    EXPECT_EQ(verify(e).verdict(), Verdict::Fail) << e.id;
  }
}

TEST(Verify, ParallelAndSerialRunsSerialiseIdentically) {
  AuditOptions serial, parallel;
  serial.workers = 1;
  parallel.workers = 8;
  for (const char* id : {"t2-6.19", "t1-3.95", "prop-one11-cosh", "t2-1.42"})
    EXPECT_EQ(verify(id, {}, serial).to_json().dump(), verify(id, {}, parallel).to_json().dump()) << id;
}

TEST(Suites, CoreIsAllPass) {
  auto rep = run_suite({"core"});
  EXPECT_FALSE(rep.identities.empty());
  for (const auto& r : rep.identities) EXPECT_EQ(r.verdict(), Verdict::Pass) << r.identity_id;
  EXPECT_FALSE(rep.has_failures());
}

TEST(Suites, EmptyFilterCoversTheWholeRegistryInIdOrder) {
  DomainBounds small;
  small.max_all = 4;
  auto rep = run_suite({}, small);
  ASSERT_EQ(rep.identities.size(), registry().size());
  for (std::size_t i = 1; i < rep.identities.size(); ++i)
    EXPECT_LT(rep.identities[i - 1].identity_id, rep.identities[i].identity_id);
  for (const auto& r : rep.identities) {
    if (r.verdict() == Verdict::Fail) EXPECT_FALSE(r.primary.counterexamples.empty()) << r.identity_id;
    if (r.verdict() == Verdict::Pass) {
      EXPECT_GE(r.primary.tested, 1) << r.identity_id;
      EXPECT_TRUE(r.primary.counterexamples.empty()) << r.identity_id;
    }
  }
}

TEST(Suites, OnlyMatchesIdOrRowSuffix) {
  EXPECT_TRUE(id_matches("t1-3.95", {"3.95"}));
  EXPECT_TRUE(id_matches("t1-3.95", {"t1-3.95"}));
  EXPECT_FALSE(id_matches("t1-3.95", {"1-3.9"}));
  EXPECT_FALSE(id_matches("t1-13.95", {"3.95"}));
  auto rep = run_suite({"table1", "table2"}, {}, {}, {"3.95"});
  ASSERT_EQ(rep.identities.size(), 2u);
  EXPECT_EQ(rep.identities[0].identity_id, "t1-3.95");
  EXPECT_EQ(rep.identities[1].identity_id, "t2-3.95");
}

TEST(Reports, JsonAndCsvShapes) {
  auto rep = run_suite({"table1"}, {}, {}, {"3.95", "3.36"});
  auto j = rep.to_json();
  ASSERT_EQ(j["identities"].size(), 2u);
  const auto& row = j["identities"][1];
  for (const char* key : {"identity_id", "anchor", "mode", "verdict", "tested", "skipped", "counterexamples"})
    EXPECT_TRUE(row.contains(key)) << key;
  EXPECT_EQ(row["identity_id"], "t1-3.95");
  EXPECT_EQ(row["counterexamples"][0]["params"]["n"], "1");
  EXPECT_EQ(row["counterexamples"][0]["lhs"], "-2");
  EXPECT_EQ(j["summary"]["fail"], 1);

  std::string csv = rep.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "identity_id,suite,mode,verdict,tested,skipped,failed,first_counterexample,alternatives");
  EXPECT_NE(csv.find("t1-3.95,table1,EXACT,FAIL,25,0,25,n=1: lhs=-2 rhs=2,alternative-half=FAIL"),
            std::string::npos);
}

TEST(Reports, FloatValuesCarryErrorBounds) {
  auto rep = verify("t1-1.23");
  auto j = rep.to_json();
  EXPECT_EQ(j["mode"], "FLOAT");
  EXPECT_DOUBLE_EQ(j["tolerance"].get<double>(), 1e-12);
  AuditOptions loose;
  loose.float_tolerance = 0.5;
  EXPECT_DOUBLE_EQ(verify("t1-1.23", {}, loose).mode.tolerance, 0.5);
}

TEST(Domains, BoundsAndEnumerationOrder) {
  ParamDecl n = ParamDecl::range("n", 1, 25), r = ParamDecl::range("r", -25, 25);
  DomainBounds b;
  EXPECT_EQ(b.effective(n), std::make_pair(1L, 25L));
  b.max_all = 5;
  EXPECT_EQ(b.effective(n), std::make_pair(1L, 5L));
  EXPECT_EQ(b.effective(r), std::make_pair(-5L, 5L));
  b.per_param["n"] = 2;
  EXPECT_EQ(b.effective(n), std::make_pair(1L, 2L));

  Branch br{{ParamDecl::range("a", 0, 2), ParamDecl::range("b", 0, 1)},
            [](const Assignment& x) { return x.i("a") != 1; }};
  auto pts = enumerate({br}, {});
  std::vector<std::string> got;
  for (const auto& p : pts) got.push_back(p.str());
  EXPECT_EQ(got, (std::vector<std::string>{"a=0, b=0", "a=0, b=1", "a=2, b=0", "a=2, b=1"}));
}

TEST(Comparison, FloatToleranceIncludesErrorBounds) {
  Mode m = Mode::floating(1e-12);
  EXPECT_TRUE(values_agree(CertifiedReal{1.0, 0}, CertifiedReal{1.0 + 5e-13, 0}, m));
  EXPECT_FALSE(values_agree(CertifiedReal{1.0, 0}, CertifiedReal{1.0 + 5e-12, 0}, m));
  EXPECT_TRUE(values_agree(CertifiedReal{1.0, 3e-12}, CertifiedReal{1.0 + 5e-12, 3e-12}, m));
  EXPECT_TRUE(values_agree(Q::make(1, 3), CertifiedReal{1.0 / 3.0, 0}, m));
  EXPECT_THROW(values_agree(Q(1), CertifiedReal{1.0, 0}, Mode::exact()), IntegrityError);
}

TEST(HalfConvention, AlternativeReadingOnlyAtOneHalf) {
  using rows::hq;
  using rows::HalfConvention;
  EXPECT_EQ(hq(1, Q::make(1, 2), HalfConvention::Alternative), Q::make(1, 4));
  EXPECT_EQ(hq(1, Q::make(1, 2), HalfConvention::Default), Q(1));
  EXPECT_EQ(hq(3, Q(2), HalfConvention::Alternative), hyperharmonic(3, 2));
  EXPECT_THROW(hq(3, Q::make(3, 2), HalfConvention::Alternative), DomainError);
}
