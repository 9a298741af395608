#include <doctest.h>

#include "dedekind/arith.hpp"
#include "dedekind/conjectures.hpp"

using namespace dedekind;
using namespace dedekind::conjectures;

namespace {

const DivisorPrediction& at(const Conj21Prediction& p, Int k) {
  for (const auto& d : p.divisors) {
    if (d.k == k) {
      return d;
    }
  }
  throw std::logic_error("no such divisor");
}

bool has_note(const Verdict& v, const std::string& prefix) {
  for (const auto& n : v.notes) {
    if (n.rfind(prefix, 0) == 0) {
      return true;
    }
  }
  return false;
}

std::string witness(const Counterexample& ce, const std::string& key) {
  for (const auto& [k, v] : ce.witness) {
    if (k == key) {
      return v;
    }
  }
  return "";
}

}  // namespace

TEST_CASE("case tags") {
  CHECK(case_tag(2) == CaseTag::i);
  CHECK(case_tag(6) == CaseTag::i);
  CHECK(case_tag(4) == CaseTag::ii);
  CHECK(case_tag(12) == CaseTag::ii);
  CHECK(case_tag(3) == CaseTag::iii);
  CHECK(case_tag(45) == CaseTag::iii);
  CHECK(case_tag(1) == CaseTag::iv);
  CHECK(case_tag(35) == CaseTag::iv);
}

TEST_CASE("tags partition the divisors for b <= 1000") {
  for (Int b = 2; b <= 1000; ++b) {
    const auto p = conj21_predict(b);
    CHECK(p.divisors.size() == arith::divisors(b).size());
    for (const auto& d : p.divisors) {
      CHECK(d.tag != CaseTag::none);
      CHECK(d.k * d.c == b);
      if (d.tag == CaseTag::iii) {
        CHECK_FALSE(d.predicted_6k);
      }
    }
  }
}

TEST_CASE("conj21_predict examples") {
  const auto& b5 = at(conj21_predict(5), 1);
  CHECK(b5.tag == CaseTag::iv);
  CHECK(b5.predicted_2k);
  CHECK(b5.predicted_6k);
  const auto& b9 = at(conj21_predict(9), 1);
  CHECK(b9.tag == CaseTag::iii);
  CHECK_FALSE(b9.predicted_2k);
  CHECK_FALSE(b9.predicted_6k);
  const auto& b8 = at(conj21_predict(8), 2);
  CHECK(b8.tag == CaseTag::ii);
  CHECK_FALSE(b8.predicted_2k);
  CHECK_FALSE(b8.predicted_6k);
}

TEST_CASE("conj21_compare") {
  for (Int b : {5, 9}) {
    const auto c = conj21_compare(b, 3 * b);
    CHECK(c.verdict.status() == VerdictStatus::verified_at_scale);
    CHECK(c.report.b == b);
  }
}

TEST_CASE("table1_reproduce small ranges") {
  const std::vector<Table1Row> first_five{{8, {18}}, {18, {16}}, {22, {20, 60}}, {26, {20, 60}}, {29, {18}}};
  CHECK(table1_reproduce(30) == first_five);
  CHECK(table1_reproduce(7).empty());
  CHECK_THROWS_AS(table1_reproduce(1), std::invalid_argument);
  // Odd orders are kept only on request (b = 70 has zeta_9 and zeta_45).
  const auto all = table1_reproduce(70, {}, OrderFilter::all);
  CHECK(all.back() == Table1Row{70, {9, 18, 45, 90}});
}

TEST_CASE("sweeps are independent of the worker count") {
  CHECK(table1_reproduce(90, {}, OrderFilter::even_only, 1) ==
        table1_reproduce(90, {}, OrderFilter::even_only, 3));
  SweepOptions one;
  SweepOptions three;
  three.jobs = 3;
  const auto a = sweep(Statement::conj2_7, 60, one);
  const auto b = sweep(Statement::conj2_7, 60, three);
  CHECK(a.cases_checked == b.cases_checked);
  CHECK(a.notes == b.notes);
  REQUIRE(a.counterexamples.size() == b.counterexamples.size());
  for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
    CHECK(a.counterexamples[i].witness == b.counterexamples[i].witness);
  }
}

TEST_CASE("proposition sweeps at b <= 100") {
  for (const auto s : {Statement::prop2_2, Statement::prop2_3, Statement::prop2_4, Statement::prop2_6, Statement::final_prop, Statement::reciprocity,
                       Statement::zolotarev, Statement::structural,
                       Statement::oracle}) {
    const auto v = sweep(s, 100);
    CHECK_MESSAGE(v.status() == VerdictStatus::verified_at_scale, to_string(s));
    CHECK(v.cases_checked > 0);
  }
  CHECK(has_note(sweep(Statement::prop2_6, 100), "odd b with equality"));
}

TEST_CASE("Kloosterman identity: literal form fails exactly when c = 2 (mod 8)") {
  const auto v = sweep(Statement::prop2_5, 100);
  REQUIRE_FALSE(v.counterexamples.empty());
  for (const auto& ce : v.counterexamples) {
    CHECK(witness(ce, "c mod 8") == "2");
  }
  for (const auto& n : v.notes) {
    if (n.find("prefactor") != std::string::npos) {
      CHECK(n.find("prefactor exp(-pi i c/4) holds=true") != std::string::npos);
    }
  }
}

TEST_CASE("integrality: divisibility implies integrality only when 4 and 9 do not divide b") {
  const auto v = sweep(Statement::integrality, 100);
  CHECK(v.status() == VerdictStatus::refuted);
  for (const auto& ce : v.counterexamples) {
    CHECK((ce.b % 4 == 0 || ce.b % 9 == 0));
    CHECK(witness(ce, "divides") == "true");
  }
  CHECK_FALSE(has_note(v, "integral difference without divisibility"));
  CHECK_FALSE(has_note(v, "divisibility without integral difference, other b"));
  CHECK(sweep(Statement::integrality, 3).counterexamples.empty());
  CHECK_FALSE(sweep(Statement::integrality, 4).counterexamples.empty());
}

TEST_CASE("conj2.1 sweep at b <= 60") {
  CHECK(sweep(Statement::conj2_1, 60).status() == VerdictStatus::verified_at_scale);
}

TEST_CASE("conj2.7 by mode") {
  SweepOptions distinct;
  distinct.nth_mode = inversion::NthMode::distinct;
  const auto d = sweep(Statement::conj2_7, 100, distinct);
  CHECK(d.status() == VerdictStatus::verified_at_scale);
  CHECK(has_note(d, "distinct equality cases"));

  // Counting repeated values refutes the bound: inv(a, b) = inv(a^-1, b)
  // duplicates the second value, e.g. b = 7 gives 0, 6, 6, ... so I_3 = 6 < 20/3.
  SweepOptions multiset;
  multiset.nth_mode = inversion::NthMode::multiset;
  const auto m = sweep(Statement::conj2_7, 100, multiset);
  CHECK(m.status() == VerdictStatus::refuted);
  REQUIRE_FALSE(m.counterexamples.empty());
  const auto& first = m.counterexamples.front();
  CHECK(first.b == 7);
  CHECK(witness(first, "mode") == "multiset");
  CHECK(witness(first, "n") == "3");
  CHECK(witness(first, "I_n") == "6");
  CHECK(witness(first, "bound") == "20/3");
}

TEST_CASE("statement ids") {
  for (const auto s : all_statements()) {
    CHECK(parse_statement(to_string(s)) == s);
  }
  CHECK(parse_statement("final-prop") == Statement::final_prop);
  CHECK_THROWS_AS(parse_statement("prop9.9"), std::invalid_argument);
}

TEST_CASE("verdict status") {
  Verdict v;
  CHECK(v.status() == VerdictStatus::not_applicable);
  v.cases_checked = 3;
  CHECK(v.status() == VerdictStatus::verified_at_scale);
  v.counterexamples.push_back({5, {}});
  CHECK(v.status() == VerdictStatus::refuted);
}
