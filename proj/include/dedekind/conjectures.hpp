#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dedekind/inversion.hpp"
#include "dedekind/invpoly.hpp"
#include "dedekind/numeric.hpp"

namespace dedekind::conjectures {

/// Which clause of the cyclotomic-root conjecture governs c = b / k.
enum class CaseTag {
  i,    ///< c = 2 (mod 4)
  ii,   ///< c = 0 (mod 4)
  iii,  ///< c = 3^e n, e >= 1, gcd(n, 6) = 1
  iv,   ///< gcd(c, 6) = 1
  none,
};

std::string to_string(CaseTag tag);
CaseTag case_tag(Int c);

struct DivisorPrediction {
  Int k;
  Int c;
  CaseTag tag;
  bool predicted_2k;
  bool predicted_6k;
};

struct Conj21Prediction {
  Int b = 0;
  std::vector<DivisorPrediction> divisors;  ///< ascending k

  /// Every order 2k and 6k (k | b) mapped to whether any decomposition
  /// predicts it as a root.
  std::map<Int, bool> predicted_orders() const;
};

Conj21Prediction conj21_predict(Int b);

enum class VerdictStatus { verified_at_scale, refuted, not_applicable };

std::string to_string(VerdictStatus status);

struct Counterexample {
  Int b;
  std::vector<std::pair<std::string, std::string>> witness;
};

struct Verdict {
  std::string statement;
  Int b_min = 0;
  Int b_max = 0;
  Int cases_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  VerdictStatus status() const;
};

struct Conj21Comparison {
  Conj21Prediction prediction;
  RootReport report;
  Verdict verdict;
};

/// Checks both directions for every order 2k, 6k: predicted roots must vanish
/// and unpredicted ones must not. The scan up to m_max is attached for context.
Conj21Comparison conj21_compare(Int b, Int m_max);

/// m_max = floor(b * num / den).
struct OrderCeiling {
  Int num = 3;
  Int den = 1;

  Int for_b(Int b) const { return b * num / den; }
};

enum class OrderFilter {
  even_only,  ///< unexplained roots of even order only (the published table)
  all,
};

struct Table1Row {
  Int b;
  std::vector<Int> orders;

  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

/// Unexplained cyclotomic roots for 2 <= b <= b_max, ascending, rows with no
/// unexplained order omitted.
std::vector<Table1Row> table1_reproduce(Int b_max, OrderCeiling ceiling = {},
                                        OrderFilter filter = OrderFilter::even_only,
                                        unsigned jobs = 1);

enum class Statement {
  prop2_2,
  prop2_3,
  prop2_4,
  prop2_5,
  prop2_6,
  conj2_1,
  conj2_7,
  final_prop,
  reciprocity,
  zolotarev,
  integrality,
  structural,
  oracle,
};

/// Accepts ids such as "prop2.2", "conj2.7", "final-prop". Throws
/// std::invalid_argument for unknown ids.
Statement parse_statement(const std::string& id);
std::string to_string(Statement s);
std::vector<Statement> all_statements();

struct SweepOptions {
  unsigned jobs = 1;
  /// conj2.7 only: restrict to one ordering mode (default runs both).
  std::optional<inversion::NthMode> nth_mode;
  /// prop2.5 only: also verify each identity exactly.
  bool exact = false;
};

/// Exhaustively instantiates the statement's hypotheses for b <= b_max.
Verdict sweep(Statement statement, Int b_max, const SweepOptions& options = {});

}  // namespace dedekind::conjectures
