// januarial command-line front end. Talks to the library only through the
// C API in januarial/januarial.h.
//
// Exit codes: 0 success, 1 usage, 2 domain error, 3 search exhausted,
// 4 verification failure.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "januarial/januarial.h"
#include "json.hpp"

namespace {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2, kExitSearch = 3, kExitVerify = 4 };

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(jan_status status) {
  switch (status) {
    case JAN_OK: return kExitOk;
    case JAN_ERR_INVALID_ARGUMENT: return kExitUsage;
    case JAN_ERR_SEARCH_EXHAUSTED: return kExitSearch;
    case JAN_ERR_ORDER_MISMATCH:
    case JAN_ERR_SPLITTING:
    case JAN_ERR_NOT_FOUND:
    case JAN_ERR_INTERNAL: return kExitVerify;
    default: return kExitDomain;
  }
}

void check(jan_status status) {
  if (status != JAN_OK) {
    throw Failure{exit_code_for(status), std::string(jan_status_name(status)) + ": " + jan_last_error_message()};
  }
}

// Calls a (buffer, capacity, length) text getter twice: size query, then fill.
std::string fetch_text(const std::function<jan_status(char*, size_t, size_t*)>& getter) {
  size_t length = 0;
  const jan_status probe = getter(nullptr, 0, &length);
  if (probe != JAN_ERR_BUFFER_TOO_SMALL) check(probe);
  std::string text(length + 1, '\0');
  check(getter(text.data(), text.size(), &length));
  text.resize(length);
  return text;
}

template <typename T>
std::vector<T> fetch_array(const std::function<jan_status(T*, size_t, size_t*)>& getter) {
  size_t length = 0;
  const jan_status probe = getter(nullptr, 0, &length);
  if (probe != JAN_ERR_BUFFER_TOO_SMALL) check(probe);
  std::vector<T> values(length);
  if (length > 0) check(getter(values.data(), values.size(), &length));
  return values;
}

template <typename T>
std::string join(const std::vector<T>& values, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? sep : "") << values[i];
  return out.str();
}

struct Options {
  std::uint64_t p = 0;
  std::uint64_t l = 0;
  std::uint64_t k = 0;
  std::uint64_t theta = 0;
  std::uint64_t pmin = 0;
  std::uint64_t pmax = 0;
  std::string format = "text";
  std::string output;
  bool force = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Failure{kExitUsage, "cannot open output file " + path};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (opt.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw Failure{kExitUsage, "--format must be one of: " + list};
}

int cmd_poly(const Options& opt, std::ostream& out) {
  if (opt.k == 0) throw Failure{kExitUsage, "--k must be >= 1"};
  if (opt.p == 0 || opt.k <= 64) {
    out << fetch_text([&](char* b, size_t c, size_t* l) { return jan_gk_format(opt.k, b, c, l); }) << '\n';
  }
  if (opt.p != 0) {
    const auto reduced = fetch_array<uint64_t>(
        [&](uint64_t* b, size_t c, size_t* l) { return jan_gk_coefficients_mod(opt.k, opt.p, b, c, l); });
    const auto roots =
        fetch_array<uint64_t>([&](uint64_t* b, size_t c, size_t* l) { return jan_gk_roots(opt.k, opt.p, b, c, l); });
    out << "mod " << opt.p << ": [" << join(reduced, ", ") << "]\n";
    out << "roots: {" << join(roots, ", ") << "}\n";
  }
  return kExitOk;
}

int cmd_thetas(const Options& opt, std::ostream& out) {
  require_format(opt, {"text", "json"});
  const auto thetas = fetch_array<uint64_t>(
      [&](uint64_t* b, size_t c, size_t* l) { return jan_januarial_thetas(opt.p, b, c, l); });
  uint64_t expected = 0;
  check(jan_expected_count((opt.p + 1) / 2, &expected));
  const bool ok = thetas.size() == expected;
  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["p"] = opt.p;
    doc["k"] = (opt.p + 1) / 2;
    doc["thetas"] = thetas;
    doc["expected"] = expected;
    doc["ok"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    out << join(thetas, " ") << " (expected " << expected << ")\n";
    if (!ok) out << "MISMATCH: found " << thetas.size() << " theta values\n";
  }
  return ok ? kExitOk : kExitVerify;
}

int cmd_build(const Options& opt, std::ostream& out) {
  require_format(opt, {"text", "json", "dot"});
  jan_diagram* raw = nullptr;
  check(jan_diagram_build(opt.p, opt.l, opt.theta, &raw));
  std::unique_ptr<jan_diagram, decltype(&jan_diagram_free)> diagram(raw, &jan_diagram_free);
  const jan_format format =
      opt.format == "json" ? JAN_FORMAT_JSON : opt.format == "dot" ? JAN_FORMAT_DOT : JAN_FORMAT_TEXT;
  out << fetch_text([&](char* b, size_t c, size_t* l) { return jan_diagram_export(diagram.get(), format, b, c, l); });
  return kExitOk;
}

int cmd_census(std::uint64_t pmin, std::uint64_t pmax, const Options& opt, std::ostream& out) {
  require_format(opt, {"text", "csv"});
  if (opt.l == 0) throw Failure{kExitUsage, "--l is required"};
  jan_census* raw = nullptr;
  check(jan_census_run(pmin, pmax, opt.l, &raw));
  std::unique_ptr<jan_census, decltype(&jan_census_free)> census(raw, &jan_census_free);
  out << fetch_text([&](char* b, size_t c, size_t* l) { return jan_census_csv(census.get(), b, c, l); });
  const std::string trailer =
      fetch_text([&](char* b, size_t c, size_t* l) { return jan_census_trailer(census.get(), b, c, l); });
  (opt.format == "csv" ? std::cerr : out) << trailer;
  int matches = 0;
  check(jan_census_summary(census.get(), nullptr, nullptr, &matches));
  return matches ? kExitOk : kExitVerify;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  jan_report* raw = nullptr;
  check(jan_verify(opt.p, opt.l, opt.force ? 1 : 0, &raw));
  std::unique_ptr<jan_report, decltype(&jan_report_free)> report(raw, &jan_report_free);
  out << fetch_text([&](char* b, size_t c, size_t* l) { return jan_report_text(report.get(), b, c, l); });
  int passed = 0;
  check(jan_report_passed(report.get(), &passed));
  return passed ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Januarial coset diagrams on PL(F_p)", "januarial"};
  app.require_subcommand(1);
  Options opt;

  auto* poly = app.add_subcommand("poly", "Print g_k(theta); with --p also its reduction and roots mod p");
  poly->add_option("--k", opt.k, "Index k of g_k")->required();
  poly->add_option("--p", opt.p, "Prime modulus");

  auto* thetas = app.add_subcommand("thetas", "List the theta values that give januarials for p");
  thetas->add_option("--p", opt.p, "Odd prime > 3")->required();
  thetas->add_option("--format", opt.format, "text or json");

  auto* build = app.add_subcommand("build", "Construct generators and the coset diagram D(theta, p, l)");
  build->add_option("--p", opt.p, "Odd prime > 3")->required();
  build->add_option("--l", opt.l, "Order of y (>= 3)")->required();
  build->add_option("--theta", opt.theta, "Class parameter theta")->required();
  build->add_option("--format", opt.format, "text, json or dot");

  auto* enumerate = app.add_subcommand("enumerate", "Census of all januarials for one prime");
  enumerate->add_option("--p", opt.p, "Odd prime > 3")->required();
  enumerate->add_option("--l", opt.l, "Order of y (>= 3)")->required();
  enumerate->add_option("--format", opt.format, "text or csv");

  auto* sweep = app.add_subcommand("sweep", "Census over every prime in [pmin, pmax]");
  sweep->add_option("--pmin", opt.pmin, "Lower bound")->required();
  sweep->add_option("--pmax", opt.pmax, "Upper bound")->required();
  sweep->add_option("--l", opt.l, "Order of y (>= 3)")->required();
  sweep->add_option("--format", opt.format, "text or csv");

  auto* verify = app.add_subcommand("verify", "Brute-force cross-checks over all of PGL(2,p)");
  verify->add_option("--p", opt.p, "Odd prime > 3")->required();
  verify->add_option("--l", opt.l, "Order of y; default: smallest valid");
  verify->add_flag("--force", opt.force, "Allow p above the enumeration budget");

  for (auto* sub : {poly, thetas, build, enumerate, sweep, verify}) {
    sub->add_option("--output,-o", opt.output, "Write to this file instead of standard output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Output output(opt.output);
    std::ostream& out = output.stream();
    if (*poly) return cmd_poly(opt, out);
    if (*thetas) return cmd_thetas(opt, out);
    if (*build) return cmd_build(opt, out);
    if (*enumerate) return cmd_census(opt.p, opt.p, opt, out);
    if (*sweep) return cmd_census(opt.pmin, opt.pmax, opt, out);
    if (*verify) return cmd_verify(opt, out);
  } catch (const Failure& failure) {
    std::cerr << "error: " << failure.message << '\n';
    return failure.exit_code;
  }
  return kExitUsage;
}
