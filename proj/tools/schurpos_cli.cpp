// Command-line front end: exact positivity checks with deterministic,
// machine-readable reports. Exit status: 0 = all checks passed, 1 = a
// mathematical check failed, 2 = usage or parse error.

#include <CLI11.hpp>

#include <schurpos/schurpos.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace schurpos;

Rational parse_positive_rational(const std::string& text, const std::string& what) {
  Rational value = parse_rational(text);
  if (value.sign() <= 0) {
    throw std::invalid_argument(what + " must be positive, got " + text);
  }
  return value;
}

std::vector<Rational> parse_t_list(const std::string& text) {
  std::vector<Rational> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    const std::string tok =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    out.push_back(parse_positive_rational(tok, "t"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty t list");
  return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

Report cmd_specialize(const std::string& shape_text, const std::string& t_text) {
  const SkewShape shape = parse_skew_shape(shape_text);
  const SpecializationContext ctx(parse_positive_rational(t_text, "t"));
  const Rational value = ctx.phi_skew_schur(shape);

  Report report;
  report.command = "specialize";
  report.add_parameter("shape", shape.str());
  report.add_parameter("t", rational_str(ctx.t()));
  report.columns = {"shape", "t", "value", "sign"};
  report.add_row({shape.str(), rational_str(ctx.t()), rational_str(value),
                  std::string(minor_sign_str(classify_sign(value)))});
  report.pass = value.sign() > 0;
  return report;
}

Report cmd_scan(int max_weight, const std::string& t_text) {
  const std::vector<Rational> ts = parse_t_list(t_text);

  Report report;
  report.command = "scan";
  report.add_parameter("max_weight", std::to_string(max_weight));
  report.add_parameter("t", t_text);
  report.columns = {"shape", "t", "value", "sign"};
  report.text_rows_all = false;

  const std::vector<Partition> outers = enumerate_partitions(max_weight);
  long shapes = 0;
  long nonpositive = 0;
  for (const Rational& t : ts) {
    const SpecializationContext ctx(t);
    for (const Partition& outer : outers) {
      for (const Partition& inner : sub_partitions(outer)) {
        const SkewShape shape(outer, inner);
        const Rational value = ctx.phi_skew_schur(shape);
        const MinorSign s = classify_sign(value);
        if (s != MinorSign::positive) {
          ++nonpositive;
          report.text_rows.push_back(report.rows.size());
        }
        report.add_row({shape.str(), rational_str(t), rational_str(value),
                        std::string(minor_sign_str(s))});
      }
    }
    if (shapes == 0) shapes = static_cast<long>(report.rows.size());
  }
  report.notes.push_back("shapes: " + std::to_string(shapes));
  report.notes.push_back("evaluations: " + std::to_string(report.rows.size()));
  report.notes.push_back("nonpositive: " + std::to_string(nonpositive));
  report.pass = nonpositive == 0;
  return report;
}

Report cmd_tpscan(const std::string& t_text, int order, int window) {
  const SpecializationContext ctx(parse_positive_rational(t_text, "t"));
  const TpScanReport scan = tp_scan(phi_sequence(ctx), order, window);

  Report report;
  report.command = "tpscan";
  report.add_parameter("t", rational_str(ctx.t()));
  report.add_parameter("order", std::to_string(order));
  report.add_parameter("window", std::to_string(window));
  report.add_parameter("sequence", scan.label);
  report.columns = {"I", "J", "minor", "sign"};
  report.text_rows_all = false;
  for (const MinorRecord& record : scan.records) {
    if (record.sign == MinorSign::negative) report.text_rows.push_back(report.rows.size());
    report.add_row({record.rows.str(), record.cols.str(), rational_str(record.value),
                    std::string(minor_sign_str(record.sign))});
  }
  report.notes.push_back("minors: " + std::to_string(scan.records.size()));
  report.notes.push_back("positive: " + std::to_string(scan.positives));
  report.notes.push_back("zero: " + std::to_string(scan.zeros));
  report.notes.push_back("negative: " + std::to_string(scan.negatives));
  report.pass = !scan.any_negative();
  return report;
}

Report cmd_jensen(const std::string& t_text, int nmax) {
  const Rational t = parse_positive_rational(t_text, "t");

  Report report;
  report.command = "jensen";
  report.add_parameter("t", rational_str(t));
  report.add_parameter("nmax", std::to_string(nmax));
  report.columns = {"n", "coefficients", "roots_real_nonpositive"};
  for (int n = 0; n <= nmax; ++n) {
    const Polynomial p = jensen_poly(t, n);
    const bool ok = all_roots_real_nonpositive(p);
    report.add_row({std::to_string(n), p.str(), bool_str(ok)});
    report.pass = report.pass && ok;
  }
  return report;
}

Report cmd_laguerre_check(const std::string& t_text, int nmax) {
  const Rational t = parse_positive_rational(t_text, "t");

  Report report;
  report.command = "laguerre-check";
  report.add_parameter("t", rational_str(t));
  report.add_parameter("nmax", std::to_string(nmax));
  report.columns = {"n", "jensen", "scaled_laguerre", "equal"};
  for (int n = 0; n <= nmax; ++n) {
    const Polynomial lhs = jensen_poly(t, n);
    const Polynomial rhs =
        laguerre_poly(t - 1, n).reflected() * (Rational(factorial(n)) / rising_factorial(t, n));
    const bool equal = lhs == rhs;
    report.add_row({std::to_string(n), lhs.str(), rhs.str(), bool_str(equal)});
    report.pass = report.pass && equal;
  }
  return report;
}

Report cmd_bessel_check(const std::string& t_text, int count) {
  const Rational t = parse_positive_rational(t_text, "t");
  if (count < 1) throw std::invalid_argument("count must be >= 1");

  Report report;
  report.command = "bessel-check";
  report.add_parameter("t", rational_str(t));
  report.add_parameter("count", std::to_string(count));
  report.columns = {"m", "series_term", "gamma_term", "equal"};
  Rational gamma_ratio = 1;
  for (int m = 0; m < count; ++m) {
    if (m > 0) gamma_ratio *= t + (m - 1);
    const Rational lhs = Rational(1) / (rising_factorial(t, m) * factorial(m));
    const Rational rhs = Rational(1) / (Rational(factorial(m)) * gamma_ratio);
    const bool equal = lhs == rhs;
    report.add_row({std::to_string(m), rational_str(lhs), rational_str(rhs), bool_str(equal)});
    report.pass = report.pass && equal;
  }
  return report;
}

Report cmd_lassalle(int N) {
  const ZeilbergerReport zeilberger = zeilberger_check(N);

  Report report;
  report.command = "lassalle";
  report.add_parameter("N", std::to_string(N));
  report.columns = {"n",           "C_n",        "A_n",           "ratio",
                    "a_positive",  "a_monotone", "ratio_integer", "ratio_monotone"};
  const auto& table = zeilberger.table;
  for (size_t i = 0; i < table.a_values.size(); ++i) {
    std::vector<std::string> row = {std::to_string(i + 1), table.catalan[i + 1].str(),
                                    table.a_values[i].str(), rational_str(table.ratios[i]),
                                    "-", "-", "-", "-"};
    if (i >= 1) {
      const ZeilbergerRow& z = zeilberger.rows[i - 1];
      row[4] = bool_str(z.a_positive);
      row[5] = bool_str(z.a_monotone);
      row[6] = bool_str(z.ratio_integer);
      row[7] = bool_str(z.ratio_monotone);
    }
    report.add_row(std::move(row));
  }
  report.text_override = lassalle_csv(table);
  report.pass = zeilberger.pass;
  return report;
}

Report cmd_karlin(bool theta_positive, const std::string& k_text, const std::string& l_text,
                  const std::string& i_text, const std::string& j_text) {
  KarlinParams params{theta_positive, Extent(0), Extent(0)};
  if (!theta_positive) {
    if (k_text.empty() || l_text.empty()) {
      throw std::invalid_argument("--K and --L are required unless --theta-positive is given");
    }
    params.K = Extent::parse(k_text);
    params.L = Extent::parse(l_text);
  }
  const IndexList rows = parse_index_list(i_text);
  const IndexList cols = parse_index_list(j_text);
  const bool predicted = predict_positive(params, rows, cols);

  Report report;
  report.command = "karlin";
  report.add_parameter("theta_positive", bool_str(theta_positive));
  report.add_parameter("K", theta_positive ? "-" : params.K.str());
  report.add_parameter("L", theta_positive ? "-" : params.L.str());
  report.add_parameter("I", rows.str());
  report.add_parameter("J", cols.str());
  report.columns = {"I", "J", "predicted_positive"};
  report.add_row({rows.str(), cols.str(), bool_str(predicted)});
  report.pass = predicted;
  return report;
}

int finish(const Report& report, bool json, const std::string& output_path) {
  const std::string body = json ? report.render_json() : report.render_text();
  if (!output_path.empty()) {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + output_path);
    out << body;
  } else {
    std::cout << body;
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact positivity checks for specialized Schur functions and "
               "totally positive Toeplitz sequences"};
  app.require_subcommand(1);

  bool json = false;
  std::string output_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "emit a single JSON document instead of text");
    sub->add_option("--output", output_path, "write the report to this file");
  };

  std::function<Report()> runner;

  {
    auto* sub = app.add_subcommand("specialize", "evaluate phi(s_{lambda/mu}) exactly");
    auto shape = std::make_shared<std::string>();
    auto t = std::make_shared<std::string>();
    sub->add_option("shape", *shape, "shape, e.g. [4,2,1] or [4,2,1]/[2,1]")->required();
    sub->add_option("--t", *t, "positive rational t, e.g. 7/3")->required();
    add_common(sub);
    sub->callback([&runner, shape, t] {
      runner = [shape, t] { return cmd_specialize(*shape, *t); };
    });
  }
  {
    auto* sub = app.add_subcommand("scan", "positivity sweep over all skew shapes");
    auto max_weight = std::make_shared<int>(8);
    auto t = std::make_shared<std::string>("1/2,1,2,7/3");
    sub->add_option("--max-weight", *max_weight, "largest |lambda| to scan")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--t", *t, "comma-separated positive rationals");
    add_common(sub);
    sub->callback([&runner, max_weight, t] {
      runner = [max_weight, t] { return cmd_scan(*max_weight, *t); };
    });
  }
  {
    auto* sub = app.add_subcommand("tpscan", "total-positivity scan of the phi sequence");
    auto t = std::make_shared<std::string>("1");
    auto order = std::make_shared<int>(4);
    auto window = std::make_shared<int>(10);
    sub->add_option("--t", *t, "positive rational t");
    sub->add_option("--order", *order, "largest minor order");
    sub->add_option("--window", *window, "largest row/column index");
    add_common(sub);
    sub->callback([&runner, t, order, window] {
      runner = [t, order, window] { return cmd_tpscan(*t, *order, *window); };
    });
  }
  {
    auto* sub = app.add_subcommand("jensen", "real-rootedness of Jensen polynomials");
    auto t = std::make_shared<std::string>();
    auto nmax = std::make_shared<int>(15);
    sub->add_option("--t", *t, "positive rational t")->required();
    sub->add_option("--nmax", *nmax, "largest degree n")->check(CLI::NonNegativeNumber);
    add_common(sub);
    sub->callback([&runner, t, nmax] {
      runner = [t, nmax] { return cmd_jensen(*t, *nmax); };
    });
  }
  {
    auto* sub = app.add_subcommand("laguerre-check",
                                   "Jensen vs scaled Laguerre coefficient identity");
    auto t = std::make_shared<std::string>();
    auto nmax = std::make_shared<int>(15);
    sub->add_option("--t", *t, "positive rational t")->required();
    sub->add_option("--nmax", *nmax, "largest degree n")->check(CLI::NonNegativeNumber);
    add_common(sub);
    sub->callback([&runner, t, nmax] {
      runner = [t, nmax] { return cmd_laguerre_check(*t, *nmax); };
    });
  }
  {
    auto* sub = app.add_subcommand("bessel-check", "series vs Gamma-ratio coefficient identity");
    auto t = std::make_shared<std::string>();
    auto count = std::make_shared<int>(20);
    sub->add_option("--t", *t, "positive rational t")->required();
    sub->add_option("--nmax", *count, "number of coefficients to compare");
    add_common(sub);
    sub->callback([&runner, t, count] {
      runner = [t, count] { return cmd_bessel_check(*t, *count); };
    });
  }
  {
    auto* sub = app.add_subcommand("lassalle", "Catalan / A_n table with Zeilberger checks");
    auto n = std::make_shared<int>(20);
    sub->add_option("--nmax", *n, "largest n in the table");
    add_common(sub);
    sub->callback([&runner, n] {
      runner = [n] { return cmd_lassalle(*n); };
    });
  }
  {
    auto* sub = app.add_subcommand("karlin", "strict-positivity prediction for a minor");
    auto theta_positive = std::make_shared<bool>(false);
    auto K = std::make_shared<std::string>();
    auto L = std::make_shared<std::string>();
    auto I = std::make_shared<std::string>();
    auto J = std::make_shared<std::string>();
    sub->add_flag("--theta-positive", *theta_positive, "theta > 0 (K and L are then ignored)");
    sub->add_option("--K", *K, "number of positive delta parameters, or inf");
    sub->add_option("--L", *L, "number of positive rho parameters, or inf");
    sub->add_option("--I", *I, "row indices, e.g. 1,2")->required();
    sub->add_option("--J", *J, "column indices, e.g. 2,3")->required();
    add_common(sub);
    sub->callback([&runner, theta_positive, K, L, I, J] {
      runner = [theta_positive, K, L, I, J] {
        return cmd_karlin(*theta_positive, *K, *L, *I, *J);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return finish(runner(), json, output_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
