#include "ordt/cli.hpp"

#include <atomic>
#include <csignal>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ordt/classes.hpp"
#include "ordt/density.hpp"
#include "ordt/dynamics.hpp"
#include "ordt/errors.hpp"
#include "ordt/scan.hpp"
#include "ordt/search.hpp"
#include "ordt/serialize.hpp"
#include "ordt/verify.hpp"

namespace ordt {

namespace {

enum class Format { Json, Csv, Text };

struct Config {
  std::uint64_t cap = 1000;
  std::uint64_t budget = kDefaultBudget;
  Format format = Format::Json;
  std::string checkpoint_path;
  int threads = 0;
};

std::atomic<bool> g_stop{false};

extern "C" void on_sigint(int) { g_stop.store(true); }

Int positive(const std::string& text, const char* what) {
  const Int v = parse_int(text);
  if (v < 1) throw DomainError(std::string(what) + " must be positive");
  return v;
}

std::uint64_t small(const Int& v, const char* what) {
  if (!v.fits_ulong_p()) throw DomainError(std::string(what) + " is too large");
  return v.get_ui();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string render_order(const OrderResult& r) {
  return r.is_finite() ? "order " + std::to_string(r.order())
                       : "not an integer after " + std::to_string(r.cap()) +
                             " steps (cap exceeded; order unknown)";
}

int cmd_order(const Config& cfg, const std::string& a, const std::string& m, std::ostream& out) {
  const Rat x = make_rat(parse_int(a), positive(m, "M"));
  const OrderResult r = order(x, cfg.cap);
  switch (cfg.format) {
    case Format::Json: emit(out, Json(r)); break;
    case Format::Csv:
      out << "x,order,cap_exceeded\n"
          << x << ',' << (r.is_finite() ? std::to_string(r.order()) : "") << ','
          << (r.is_finite() ? "false" : "true") << '\n';
      break;
    case Format::Text: out << x << ": " << render_order(r) << '\n'; break;
  }
  return kExitOk;
}

int cmd_orbit(const Config& cfg, const std::string& a, const std::string& m, std::ostream& out) {
  const OrbitTrace t = orbit(make_rat(parse_int(a), positive(m, "M")), cfg.cap);
  switch (cfg.format) {
    case Format::Json: emit(out, Json(t)); break;
    case Format::Csv:
      out << "step,q,r,h,new_den,image_num,image_den\n";
      for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& s = t.steps[i];
        out << i + 1 << ',' << s.q << ',' << s.r << ',' << s.h << ',' << s.new_den << ','
            << s.image.num() << ',' << s.image.den() << '\n';
      }
      break;
    case Format::Text:
      out << t.start;
      for (const auto& s : t.steps) out << " -> " << s.image;
      out << "\n" << render_order(t.result) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_classes(const Config& cfg, std::uint64_t n, std::uint64_t M, const std::string& method,
                std::ostream& out, std::ostream& err) {
  const EnumerationOptions opts{cfg.budget, cfg.threads};
  std::optional<ClassSet> brute, recursive;
  if (method == "brute" || method == "both") brute = enumerate_bruteforce(n, M, cfg.cap, opts);
  if (method == "recursive" || method == "both") recursive = enumerate_recursive(n, M, opts);
  const ClassSet& shown = recursive ? *recursive : *brute;
  const bool both = brute && recursive;
  const bool agree = !both || *brute == *recursive;

  switch (cfg.format) {
    case Format::Json: {
      Json j = shown;
      if (both) j["agree"] = agree;
      emit(out, j);
      break;
    }
    case Format::Csv: out << class_set_csv(shown); break;
    case Format::Text:
      out << "R_{" << n << "," << M << "} mod " << shown.modulus << " (" << shown.residues.size()
          << " classes):";
      for (auto k : shown.residues) out << ' ' << k;
      out << '\n';
      if (both) out << (agree ? "brute force and recursion agree\n" : "MISMATCH\n");
      break;
  }
  if (!agree) {
    err << "brute-force and recursive enumerations of R_{" << n << "," << M << "} differ\n";
    return kExitCheck;
  }
  return kExitOk;
}

int cmd_count(const Config& cfg, std::uint64_t n, std::uint64_t M, bool closed_form, bool table,
              std::ostream& out) {
  if (table) {
    const auto rows = count_rows(n, M);
    if (cfg.format == Format::Json) {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back({{"n", r.n}, {"M", r.M}, {"A", r.count.get_str()}});
      emit(out, arr);
    } else {
      out << count_rows_csv(rows);
    }
    return kExitOk;
  }
  Int value;
  if (closed_form) {
    const auto f = factorize(M);
    if (f.size() != 1) throw DomainError("--closed-form needs M to be a prime power");
    value = count_prime_power(n, f.front().prime, f.front().exponent);
  } else {
    value = count_recurrence(n, M);
  }
  switch (cfg.format) {
    case Format::Json:
      emit(out, {{"n", n}, {"M", M}, {"A", value.get_str()},
                 {"method", closed_form ? "closed_form" : "recurrence"}});
      break;
    case Format::Csv: out << count_rows_csv({{n, M, value}}); break;
    case Format::Text: out << "A(" << n << "," << M << ") = " << value << '\n'; break;
  }
  return kExitOk;
}

int cmd_density(const Config& cfg, std::uint64_t M, std::uint64_t terms,
                std::optional<std::uint64_t> n_max, std::ostream& out) {
  DensityReport report = density_report(M, terms);
  if (n_max) report.empirical = empirical_counts(M, *n_max, cfg.cap, cfg.threads);
  switch (cfg.format) {
    case Format::Json: emit(out, Json(report)); break;
    case Format::Csv: out << density_csv(report); break;
    case Format::Text:
      out << "M = " << M << ", partial sum up to n = " << terms << ": " << report.partial_sum
          << " ~ " << report.partial_sum.to_decimal(12) << '\n';
      for (const auto& t : report.terms) {
        out << "  n=" << t.n << "  predicted " << t.term.to_decimal(12);
        if (report.empirical && report.empirical->counted_b > 0)
          out << "  observed "
              << Rat(Int(static_cast<unsigned long>(report.empirical->observed(t.n))),
                     Int(static_cast<unsigned long>(report.empirical->counted_b)))
                     .to_decimal(12);
        out << '\n';
      }
      if (report.empirical)
        out << "  finite order within cap: " << report.empirical->counted_finite << " of "
            << report.empirical->counted_admissible << " admissible numerators; "
            << report.empirical->cap_exceeded << " unresolved at cap\n";
      break;
  }
  return kExitOk;
}

int cmd_family(const Config& cfg, std::uint64_t M, std::uint64_t n, std::ostream& out) {
  const Int a = family_witness(M, n);
  const OrderResult r = order(make_rat(a, Int(static_cast<unsigned long>(M))),
                              std::max<std::uint64_t>(cfg.cap, n));
  switch (cfg.format) {
    case Format::Json: emit(out, {{"M", M}, {"n", n}, {"a", a.get_str()}, {"result", r}}); break;
    case Format::Csv:
      out << "M,n,a,order\n" << M << ',' << n << ',' << a << ','
          << (r.is_finite() ? std::to_string(r.order()) : "") << '\n';
      break;
    case Format::Text: out << a << "/" << M << ": " << render_order(r) << '\n'; break;
  }
  return kExitOk;
}

int cmd_mu(const Config& cfg, std::uint64_t M, std::uint64_t n,
           const std::optional<std::string>& limit, std::ostream& out) {
  std::optional<Int> lim;
  if (limit) lim = parse_int(*limit);
  const MuSearchResult r = mu_search(M, n, lim, std::max<std::uint64_t>(cfg.cap, n));
  switch (cfg.format) {
    case Format::Json: emit(out, Json(r)); break;
    case Format::Csv:
      out << "M,n,mu\n" << M << ',' << n << ',' << (r.entry ? r.entry->mu.get_str() : "") << '\n';
      break;
    case Format::Text:
      if (r.entry)
        out << "mu(" << M << "," << n << ") = " << r.entry->mu << '\n';
      else
        out << "no numerator of order " << n << " up to " << r.limit << '\n';
      break;
  }
  return kExitOk;
}

int cmd_scan(const Config& cfg, std::uint64_t m_lo, std::uint64_t m_hi, std::uint64_t a_hi,
             std::ostream& out) {
  ScanOptions opts;
  opts.m_lo = m_lo;
  opts.m_hi = m_hi;
  opts.a_hi = a_hi;
  opts.cap = cfg.cap;
  opts.checkpoint_path = cfg.checkpoint_path;
  opts.threads = cfg.threads;
  g_stop.store(false);
  opts.stop = &g_stop;
  auto previous = std::signal(SIGINT, on_sigint);
  ScanCheckpoint cp;
  try {
    cp = conjecture_scan(opts);
  } catch (...) {
    std::signal(SIGINT, previous);
    throw;
  }
  std::signal(SIGINT, previous);
  const bool complete = scan_complete(cp, a_hi);
  switch (cfg.format) {
    case Format::Json: {
      Json j = cp;
      j["complete"] = complete;
      emit(out, j);
      break;
    }
    case Format::Csv:
      out << "M,a,iterations,last_denominator\n";
      for (const auto& e : cp.exceeders)
        out << e.M << ',' << e.a << ',' << e.iterations << ',' << e.last_denominator << '\n';
      break;
    case Format::Text:
      out << "scanned M in [" << m_lo << ", " << m_hi << "], a <= " << a_hi << ", cap "
          << cfg.cap << (complete ? "" : " (interrupted)") << ": " << cp.exceeders.size()
          << " numerators still open at the cap\n";
      for (const auto& e : cp.exceeders)
        out << "  " << e.a << "/" << e.M << " denominator " << e.last_denominator << '\n';
      break;
  }
  return kExitOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  VerifyConfig vc = VerifyConfig::defaults();
  vc.threads = cfg.threads;
  const VerifyReport report = verify_all(vc);
  if (cfg.format == Format::Text) {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)\n";
      for (const auto& ce : c.counterexamples) out << "    " << ce << '\n';
    }
  } else {
    emit(out, Json(report));
  }
  return report.all_passed() ? kExitOk : kExitCheck;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orders of rationals under T(x) = floor(x)(1 + frac(x))", "ordt"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string format = "json";
  app.add_option("--cap", cfg.cap, "Iteration cap for order computations")
      ->envname("ORDT_CAP")
      ->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  app.add_option("--budget", cfg.budget, "Maximum modulus M^(n+1) for class enumeration")
      ->envname("ORDT_BUDGET")
      ->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  app.add_option("--threads", cfg.threads, "Worker threads (0: OpenMP default)")
      ->envname("ORDT_THREADS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--checkpoint", cfg.checkpoint_path, "Scan checkpoint file");

  std::string a, m;
  std::uint64_t n = 0, M = 0;

  auto* orbit_cmd = app.add_subcommand("orbit", "Iterate a/M until an integer or the cap");
  orbit_cmd->add_option("a", a)->required();
  orbit_cmd->add_option("M", m)->required();

  auto* order_cmd = app.add_subcommand("order", "Order of a/M");
  order_cmd->add_option("a", a)->required();
  order_cmd->add_option("M", m)->required();

  std::string method = "recursive";
  auto* classes_cmd = app.add_subcommand("classes", "Residue classes of order n mod M^(n+1)");
  classes_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  classes_cmd->add_option("M", M)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  classes_cmd->add_option("--method", method)->check(CLI::IsMember({"brute", "recursive", "both"}));

  bool closed_form = false, table = false;
  auto* count_cmd = app.add_subcommand("count", "Number of classes A(n, M)");
  count_cmd->add_option("n", n)->required();
  count_cmd->add_option("M", M)->required()->check(CLI::PositiveNumber);
  count_cmd->add_flag("--closed-form", closed_form, "Use the prime-power formula");
  count_cmd->add_flag("--table", table, "All A(n', M') with n' <= n, 2 <= M' <= M");

  std::uint64_t terms = 20;
  std::optional<std::uint64_t> empirical;
  auto* density_cmd = app.add_subcommand("density", "Density partial sums and empirical counts");
  density_cmd->add_option("M", M)->required()->check(CLI::PositiveNumber);
  density_cmd->add_option("--terms", terms, "Sum n = 0..terms");
  density_cmd->add_option("--empirical", empirical, "Count numerators up to N_max");

  auto* family_cmd = app.add_subcommand("family", "Explicit numerator of order n over M");
  family_cmd->add_option("M", M)->required();
  family_cmd->add_option("n", n)->required();

  std::optional<std::string> limit;
  auto* mu_cmd = app.add_subcommand("mu", "Least numerator of order n over M");
  mu_cmd->add_option("M", M)->required();
  mu_cmd->add_option("n", n)->required();
  mu_cmd->add_option("--limit", limit, "Largest numerator to try");

  std::uint64_t m_lo = 0, m_hi = 0, a_hi = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Search for numerators still open at the cap");
  scan_cmd->add_option("--M-lo", m_lo)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  scan_cmd->add_option("--M-hi", m_hi)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  scan_cmd->add_option("--a-hi", a_hi)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run every built-in cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitDomain;
  }
  cfg.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;

  try {
    if (*orbit_cmd) return cmd_orbit(cfg, a, m, out);
    if (*order_cmd) return cmd_order(cfg, a, m, out);
    if (*classes_cmd) return cmd_classes(cfg, n, M, method, out, err);
    if (*count_cmd) return cmd_count(cfg, n, M, closed_form, table, out);
    if (*density_cmd) return cmd_density(cfg, M, terms, empirical, out);
    if (*family_cmd) return cmd_family(cfg, M, n, out);
    if (*mu_cmd) return cmd_mu(cfg, M, n, limit, out);
    if (*scan_cmd) return cmd_scan(cfg, m_lo, m_hi, a_hi, out);
    if (*verify_cmd) return cmd_verify(cfg, out);
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheck;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitDomain;
}

}  // namespace ordt
