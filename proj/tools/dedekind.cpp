// Command-line front end: single computations, sweeps, Table 1, root plots.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "dedekind/arith.hpp"
#include "dedekind/conjectures.hpp"
#include "dedekind/inversion.hpp"
#include "dedekind/invpoly.hpp"
#include "dedekind/kloosterman.hpp"
#include "dedekind/numroots.hpp"
#include "dedekind/parallel.hpp"
#include "dedekind/serialize.hpp"

namespace {

using dedekind::Int;
using dedekind::serialize::json;
using dedekind::serialize::ReportStatus;
namespace conj = dedekind::conjectures;

constexpr int kExitOk = 0;
constexpr int kExitCounterexamples = 1;
constexpr int kExitUsage = 2;
constexpr const char* kOutDirEnv = "DEDEKIND_OUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_decimal(const std::string& text, const std::string& what) {
  std::size_t start = text.size() > 1 && text[0] == '-' ? 1 : 0;
  if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos) {
    throw UsageError(what + ": '" + text + "' is not a decimal integer");
  }
  try {
    return std::stoll(text);
  } catch (const std::out_of_range&) {
    throw UsageError(what + ": '" + text + "' is out of range");
  }
}

Int parse_at_least(const std::string& text, const std::string& what, Int lo) {
  const Int v = parse_decimal(text, what);
  if (v < lo) {
    throw UsageError(what + " must be at least " + std::to_string(lo));
  }
  return v;
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_complex(std::complex<double> z) {
  return fmt_double(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt_double(std::abs(z.imag())) +
         "i";
}

std::string join(const std::vector<Int>& xs) {
  std::string out;
  for (const Int x : xs) {
    out += (out.empty() ? "" : ",") + std::to_string(x);
  }
  return out;
}

ReportStatus status_of(const conj::Verdict& v) {
  return v.counterexamples.empty() ? ReportStatus::ok : ReportStatus::counterexamples;
}

void print_verdict(std::ostream& out, const conj::Verdict& v) {
  out << v.statement << " [" << v.b_min << ", " << v.b_max << "]: "
      << conj::to_string(v.status()) << " (" << v.cases_checked << " cases, "
      << v.counterexamples.size() << " counterexamples)\n";
  for (const auto& note : v.notes) {
    out << "  note: " << note << '\n';
  }
  const std::size_t shown = std::min<std::size_t>(v.counterexamples.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    out << "  counterexample:";
    for (const auto& [k, val] : v.counterexamples[i].witness) {
      out << ' ' << k << '=' << val;
    }
    out << '\n';
  }
  if (shown < v.counterexamples.size()) {
    out << "  ... " << v.counterexamples.size() - shown << " more (use --json for all)\n";
  }
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  const char* dir = std::getenv(kOutDirEnv);
  if (p.is_relative() && dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / p;
  }
  return p;
}

struct Options {
  bool json = false;
  std::string jobs = "0";

  std::string a, b, m;
  std::string method = "fast";
  std::string format;
  std::string mmax;
  std::string cap = "4";
  std::string bmax;
  std::string factor = "3";
  bool all_orders = false;
  std::string statement;
  std::string mode;
  bool exact = false;
  std::string out;
  std::string tol = "1e-12";
  std::string max_iter = "1000";
};

// One subcommand's status, structured payload and human-readable text.
struct Outcome {
  ReportStatus status = ReportStatus::ok;
  json payload;
  std::string text;
};

Outcome cmd_sum(const Options& o) {
  const Int a = parse_decimal(o.a, "a");
  const Int b = parse_at_least(o.b, "b", 1);
  const auto s = dedekind::inversion::dedekind_sum(a, b);
  const auto text = dedekind::to_string(s);
  return {ReportStatus::ok, {{"a", a}, {"b", b}, {"sum", text}}, text + "\n"};
}

Outcome cmd_inv(const Options& o) {
  const Int a = parse_decimal(o.a, "a");
  const Int b = parse_at_least(o.b, "b", 1);
  namespace inv = dedekind::inversion;
  Int value = 0;
  if (o.method == "closed") {
    value = inv::inv_closed_form(dedekind::arith::mod(a, b), b);
  } else {
    value = inv::inv_count(a, b, o.method == "oracle" ? inv::CountMethod::oracle : inv::CountMethod::fast);
  }
  return {ReportStatus::ok,
          {{"a", a}, {"b", b}, {"method", o.method}, {"inv", value}},
          std::to_string(value) + "\n"};
}

Outcome cmd_poly(const Options& o) {
  const auto p = dedekind::build_invpoly(parse_at_least(o.b, "b", 2));
  auto j = dedekind::serialize::to_json(p);
  std::string text;
  if (o.format == "json") {
    text = j.dump() + "\n";
  } else if (o.format == "dense") {
    text = join(p.dense()) + "\n";
  } else {
    text = "f_" + std::to_string(p.b()) + "(x) = " + dedekind::format_sparse(p.terms()) +
           "\ndegree " + std::to_string(p.degree()) + ", phi " + std::to_string(p.phi()) + "\n";
  }
  return {ReportStatus::ok, std::move(j), text};
}

Outcome cmd_roots(const Options& o) {
  const Int b = parse_at_least(o.b, "b", 2);
  const Int m_max = o.mmax.empty() ? 3 * b : parse_at_least(o.mmax, "--mmax", 1);
  const int cap = static_cast<int>(parse_at_least(o.cap, "--cap", 1));
  const auto cmp = conj::conj21_compare(b, m_max);
  const auto rep = dedekind::cyclotomic_root_scan(dedekind::build_invpoly(b), m_max, cap);
  std::ostringstream text;
  const auto list = [&](const char* label, const std::vector<dedekind::RootEntry>& es) {
    text << label << ':';
    for (const auto& e : es) {
      text << " zeta_" << e.m;
      if (e.multiplicity > 1) {
        text << "^" << e.multiplicity << (e.cap_reached ? "+" : "");
      }
    }
    text << '\n';
  };
  text << "f_" << b << ": cyclotomic roots with m <= " << m_max << '\n';
  list("explained", rep.explained);
  list("unexplained", rep.unexplained);
  text << "residual degree " << rep.residual_degree << '\n';
  text << "conjecture 2.1 prediction: " << conj::to_string(cmp.verdict.status()) << '\n';
  for (const auto& ce : cmp.verdict.counterexamples) {
    text << "  mismatch:";
    for (const auto& [k, v] : ce.witness) {
      text << ' ' << k << '=' << v;
    }
    text << '\n';
  }
  json payload = {{"roots", dedekind::serialize::to_json(rep)},
                  {"prediction", dedekind::serialize::to_json(cmp.prediction)},
                  {"comparison", dedekind::serialize::to_json(cmp.verdict)}};
  return {status_of(cmp.verdict), std::move(payload), text.str()};
}

Outcome cmd_table1(const Options& o) {
  const Int b_max = o.bmax.empty() ? 424 : parse_at_least(o.bmax, "--bmax", 2);
  const auto factor = dedekind::parse_fraction(o.factor);
  if (factor <= 0) {
    throw UsageError("--mmax-factor must be positive");
  }
  conj::OrderCeiling ceiling;
  ceiling.num = static_cast<Int>(dedekind::numerator(factor));
  ceiling.den = static_cast<Int>(dedekind::denominator(factor));
  const auto rows = conj::table1_reproduce(
      b_max, ceiling, o.all_orders ? conj::OrderFilter::all : conj::OrderFilter::even_only,
      dedekind::resolve_jobs(static_cast<unsigned>(parse_at_least(o.jobs, "--jobs", 0))));
  std::ostringstream text;
  text << "b\tunexplained m\n";
  for (const auto& r : rows) {
    text << r.b << '\t' << join(r.orders) << '\n';
  }
  json payload = {{"b_max", b_max},
                  {"mmax_factor", dedekind::to_string(factor)},
                  {"orders", o.all_orders ? "all" : "even"},
                  {"rows", dedekind::serialize::to_json(rows)}};
  return {ReportStatus::ok, std::move(payload), text.str()};
}

Outcome cmd_verify(const Options& o) {
  const Int b_max = o.bmax.empty() ? 100 : parse_at_least(o.bmax, "--bmax", 2);
  conj::SweepOptions opts;
  opts.jobs = dedekind::resolve_jobs(static_cast<unsigned>(parse_at_least(o.jobs, "--jobs", 0)));
  opts.exact = o.exact;
  if (o.mode == "distinct") {
    opts.nth_mode = dedekind::inversion::NthMode::distinct;
  } else if (o.mode == "multiset") {
    opts.nth_mode = dedekind::inversion::NthMode::multiset;
  }
  std::vector<conj::Statement> which;
  if (o.statement == "all") {
    which = conj::all_statements();
  } else {
    try {
      which = {conj::parse_statement(o.statement)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  Outcome out;
  json verdicts = json::array();
  std::ostringstream text;
  for (const auto s : which) {
    const auto v = conj::sweep(s, b_max, opts);
    if (!v.counterexamples.empty()) {
      out.status = ReportStatus::counterexamples;
    }
    print_verdict(text, v);
    verdicts.push_back(dedekind::serialize::to_json(v));
  }
  out.payload = which.size() == 1 ? verdicts[0] : json{{"verdicts", verdicts}};
  out.text = text.str();
  return out;
}

Outcome cmd_kloosterman(const Options& o) {
  namespace kl = dedekind::kloosterman;
  const kl::KloostermanParams params{parse_decimal(o.a, "a"), parse_decimal(o.b, "b"),
                                     parse_at_least(o.m, "m", 2)};
  const auto value = kl::kloosterman_float(params);
  json payload = {{"a", params.a}, {"b", params.b}, {"m", params.m},
                  {"value", {value.real(), value.imag()}}};
  std::string text = "K(" + o.a + ", " + o.b + ", " + o.m + ") = " + fmt_complex(value) + "\n";
  if (o.exact) {
    const auto exact = kl::kloosterman_exact(params);
    std::string rendered;
    for (std::size_t i = 0; i < exact.coeffs().size(); ++i) {
      rendered += (i ? "," : "") + dedekind::to_string(exact.coeffs()[i]);
    }
    const auto constant = exact.as_constant();
    payload["exact"] = {{"basis", "powers of zeta_m modulo Phi_m"}, {"coeffs", rendered}};
    if (constant) {
      payload["exact"]["integer"] = dedekind::to_string(*constant);
      text += "exact: " + dedekind::to_string(*constant) + "\n";
    } else {
      text += "exact (zeta_" + o.m + " basis): [" + rendered + "]\n";
    }
  }
  return {ReportStatus::ok, std::move(payload), text};
}

Outcome cmd_numroots(const Options& o) {
  namespace nr = dedekind::numroots;
  const Int b = parse_at_least(o.b, "b", 2);
  double tol = 0;
  try {
    tol = std::stod(o.tol);
  } catch (const std::exception&) {
    throw UsageError("--tol: '" + o.tol + "' is not a number");
  }
  const int max_iter = static_cast<int>(parse_at_least(o.max_iter, "--max-iter", 1));
  const auto format = o.format == "json" ? nr::PlotFormat::json : nr::PlotFormat::csv;
  const auto roots = nr::find_roots(dedekind::build_invpoly(b), tol, max_iter);
  const auto verdict = nr::annulus_check(roots);

  std::ostringstream plot;
  nr::emit_plot_data(roots, format, plot);
  Outcome out;
  out.status = status_of(verdict);
  out.payload = {{"roots", dedekind::serialize::to_json(roots)},
                 {"annulus", dedekind::serialize::to_json(verdict)}};
  if (!o.out.empty()) {
    const auto path = resolve_output(o.out);
    std::ofstream file(path);
    if (!file || !(file << plot.str()) || !file.flush()) {
      throw std::runtime_error("cannot write " + path.string());
    }
    out.payload["written"] = path.string();
    std::ostringstream text;
    text << "wrote " << roots.roots.size() << " roots to " << path.string() << '\n';
    print_verdict(text, verdict);
    out.text = text.str();
  } else {
    out.text = plot.str();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dedekind sums, inversion numbers and the inversion polynomial f_b"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit a machine-readable report");
  app.add_option("--jobs", o.jobs, "Worker threads for sweeps (0 = all available)");

  const auto add_ab = [&](CLI::App* sub) {
    sub->add_option("a", o.a, "Numerator")->required();
    sub->add_option("b", o.b, "Modulus")->required();
  };

  auto* sum = app.add_subcommand("sum", "Dedekind sum s(a, b) as an exact fraction");
  add_ab(sum);

  auto* inv = app.add_subcommand("inv", "Inversion number inv(a, b)");
  add_ab(inv);
  inv->add_option("--method", o.method, "Counting method")
      ->check(CLI::IsMember({"fast", "oracle", "closed"}));

  auto* poly = app.add_subcommand("poly", "Inversion polynomial f_b");
  poly->add_option("b", o.b, "Modulus")->required();
  poly->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dense"}));

  auto* roots = app.add_subcommand("roots", "Cyclotomic roots of f_b, exact");
  roots->add_option("b", o.b, "Modulus")->required();
  roots->add_option("--mmax", o.mmax, "Largest order tested (default 3b)");
  roots->add_option("--cap", o.cap, "Multiplicity cap");

  auto* table1 = app.add_subcommand("table1", "Cyclotomic roots not explained by the 2k/6k rule");
  table1->add_option("--bmax", o.bmax, "Largest b (default 424)");
  table1->add_option("--mmax-factor", o.factor, "Orders tested up to factor * b (default 3)");
  table1->add_flag("--all-orders", o.all_orders, "Include odd orders");

  auto* verify = app.add_subcommand("verify", "Exhaustive check of a statement up to --bmax");
  verify->add_option("statement", o.statement, "Statement id or 'all'")->required();
  verify->add_option("--bmax", o.bmax, "Largest b (default 100)");
  verify->add_option("--mode", o.mode, "conj2.7 ordering mode (default both)")
      ->check(CLI::IsMember({"distinct", "multiset"}));
  verify->add_flag("--exact", o.exact, "prop2.5: also verify exactly in Z[zeta_8b]");

  auto* kloos = app.add_subcommand("kloosterman", "Kloosterman sum K(a, b, m)");
  add_ab(kloos);
  kloos->add_option("m", o.m, "Modulus")->required();
  kloos->add_flag("--exact", o.exact, "Also compute exactly in Z[zeta_m]");

  auto* numroots = app.add_subcommand("numroots", "Numeric roots of f_b (plot data)");
  numroots->add_option("b", o.b, "Modulus")->required();
  numroots->add_option("--out", o.out, "Write plot data here (relative to $DEDEKIND_OUT_DIR if set)");
  numroots->add_option("--format", o.format, "Plot data format")
      ->check(CLI::IsMember({"csv", "json"}));
  numroots->add_option("--tol", o.tol, "Step tolerance");
  numroots->add_option("--max-iter", o.max_iter, "Iteration limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto* sub = app.get_subcommands().front();
  std::string command;
  for (int i = 1; i < argc; ++i) {
    command += (i > 1 ? " " : "") + std::string(argv[i]);
  }
  try {
    parse_at_least(o.jobs, "--jobs", 0);
    Outcome out;
    const std::string name = sub->get_name();
    if (name == "sum") {
      out = cmd_sum(o);
    } else if (name == "inv") {
      out = cmd_inv(o);
    } else if (name == "poly") {
      out = cmd_poly(o);
    } else if (name == "roots") {
      out = cmd_roots(o);
    } else if (name == "table1") {
      out = cmd_table1(o);
    } else if (name == "verify") {
      out = cmd_verify(o);
    } else if (name == "kloosterman") {
      out = cmd_kloosterman(o);
    } else {
      out = cmd_numroots(o);
    }
    if (o.json) {
      std::cout << dedekind::serialize::make_report(command, out.status, out.payload).dump(2)
                << '\n';
    } else {
      std::cout << out.text;
    }
    return out.status == ReportStatus::ok ? kExitOk : kExitCounterexamples;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (o.json) {
      std::cout << dedekind::serialize::make_report(command, ReportStatus::error,
                                                    {{"message", e.what()}})
                       .dump(2)
                << '\n';
    }
    return kExitUsage;
  }
}
