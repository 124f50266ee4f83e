#pragma once

// Command-line front end. Everything writes to caller-supplied streams so the
// commands can be driven in-process by tests.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "twalex/bigfloat.hpp"
#include "twalex/error.hpp"
#include "twalex/group.hpp"
#include "twalex/invariant.hpp"
#include "twalex/job.hpp"
#include "twalex/volume.hpp"

namespace twalex::cli {

enum class Format { Table, Csv };

struct Options {
  int n_min = 4;
  int n_max = 15;
  mpfr_prec_t precision = kDefaultPrecision;
  Format format = Format::Table;
  std::string column = "auto";
  std::optional<std::string> reference;
  bool trivial_rep = false;
  bool fit = false;
  bool parallel = false;
};

/// Parses "<min>..<max>" or a single "<n>".
inline std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  auto to_int = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw Error("usage", "invalid n range '" + s + "'");
    return v;
  };
  if (dots == std::string::npos) {
    int n = to_int(s);
    return {n, n};
  }
  return {to_int(s.substr(0, dots)), to_int(s.substr(dots + 2))};
}

/// The job with every generator sent to the identity (classical Alexander path).
inline Job with_trivial_rep(Job job) {
  std::vector<Matrix2> ids(job.presentation.generators.size(), Matrix2::identity(2));
  job.rep = RepSL2(std::move(ids));
  return job;
}

inline TwistConfig make_config(const Job& job, const Options& opt, int n) {
  TwistConfig cfg{job.presentation, job.rep, n, std::nullopt, opt.parallel};
  if (opt.column != "auto") {
    auto idx = opt.column.size() == 1 ? job.presentation.index_of(opt.column[0]) : std::nullopt;
    if (!idx) throw Error("usage", "--column must be 'auto' or a generator letter, got '" + opt.column + "'");
    cfg.column = *idx;
  }
  return cfg;
}

inline std::string unit_string(const TwistedAlexander& d) {
  return std::string(d.unit_sign < 0 ? "-" : "+") + "t^" + std::to_string(d.unit_exponent);
}

/// Normalized invariant, its denominator and the residual unit.
inline void print_invariant(const TwistedAlexander& d, const Job& job, std::ostream& out) {
  out << "n: " << d.n << '\n';
  out << "column: " << job.presentation.generators[static_cast<std::size_t>(d.column)] << '\n';
  out << "numerator: " << to_string(d.value.num, job.field) << '\n';
  out << "denominator: " << to_string(d.value.den, job.field) << '\n';
  out << "unit: " << unit_string(d) << '\n';
  if (!d.value.num.is_zero()) out << "order at t=1: " << order_at_one(d.value.num).order << '\n';
}

inline void cmd_compute(const Job& job_in, const Options& opt, std::ostream& out) {
  const Job job = opt.trivial_rep ? with_trivial_rep(job_in) : job_in;
  const int n_min = opt.trivial_rep ? 1 : opt.n_min;
  const int n_max = opt.trivial_rep ? 1 : opt.n_max;
  if (opt.precision < kMinPrecision) throw Error("usage", "--precision must be at least 64 bits");
  if (n_min < 1 || n_max < n_min) throw Error("usage", "invalid n range");

  const TwistConfig cfg = make_config(job, opt, 2);
  const InvariantSweep sweep = invariant_sweep(cfg, n_min, n_max, true, opt.parallel);
  const auto reference = opt.reference ? opt.reference : job.reference;
  const VolumeReport report = n_max >= kFirstVolumeRow
                                  ? volume_report(sweep.at_one, n_min, n_max, opt.precision, reference)
                                  : VolumeReport{{}, std::nullopt, opt.precision};

  const bool csv = opt.format == Format::Csv;
  const int digits = csv ? BigFloat(opt.precision).full_digits() : 6;
  auto fmt = [&](const BigFloat& x) { return x.to_string(digits); };
  const std::string none = csv ? "" : "-";

  if (csv) out << "n,order,abs_delta_at_one,abs_A_n,v_n,gap\n";
  else
    out << std::setw(3) << "n" << std::setw(6) << "ord" << std::setw(16) << "|Delta_n(1)|" << std::setw(16)
        << "|A_n(1)|" << std::setw(12) << "v_n" << std::setw(12) << "gap" << '\n';

  for (int n = n_min; n <= n_max; ++n) {
    const TwistedAlexander& d = sweep.invariants.at(n);
    std::string ord = d.value.num.is_zero() ? none : std::to_string(order_at_one(d.value.num).order);
    std::string at_one = none, ratio = none, v = none, gap = none;
    if (auto it = sweep.at_one.find(n); it != sweep.at_one.end())
      at_one = fmt(abs(it->second.embed(opt.precision)));
    for (const auto& row : report.rows) {
      if (row.n != n) continue;
      ratio = fmt(row.ratio_abs);
      v = fmt(row.estimate);
      if (row.gap) gap = fmt(*row.gap);
    }
    if (csv) {
      out << n << ',' << ord << ',' << at_one << ',' << ratio << ',' << v << ',' << gap << '\n';
    } else {
      out << std::setw(3) << n << std::setw(6) << ord << std::setw(16) << at_one << std::setw(16) << ratio
          << std::setw(12) << v << std::setw(12) << gap << '\n';
    }
  }

  if (opt.fit) {
    if (auto f = experimental_fit(report)) {
      std::ostringstream line;
      line << std::setprecision(6) << "EXPERIMENTAL fit v_n ~ V - c*log(n)/n: V = " << f->limit << ", c = " << f->slope;
      out << (csv ? "# " : "") << line.str() << '\n';
    }
  }
}

inline void cmd_invariant(const Job& job_in, int n, const Options& opt, std::ostream& out) {
  const Job job = opt.trivial_rep ? with_trivial_rep(job_in) : job_in;
  if (opt.trivial_rep) n = 1;
  if (n < 1) throw Error("usage", "n must be >= 1");
  print_invariant(twisted_alexander(make_config(job, opt, n)), job, out);
}

/// Runs the consistency checks on a job loaded without validation. Returns
/// true iff no check failed.
inline bool cmd_check(const Job& job, std::ostream& out) {
  bool ok = true;
  auto report = [&](const std::string& status, const std::string& name, const std::string& detail = {}) {
    if (status == "FAIL") ok = false;
    out << '[' << status << "] " << name;
    if (!detail.empty()) out << ": " << detail;
    out << '\n';
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report("FAIL", name, e.what());
    }
  };
  const auto& pres = job.presentation;

  guarded("determinant 1", [&] {
    auto bad = non_unimodular_generators(job.rep);
    std::string which;
    for (int g : bad) which += pres.generators[static_cast<std::size_t>(g)];
    report(bad.empty() ? "PASS" : "FAIL", "determinant 1", bad.empty() ? "" : "generators " + which);
  });

  guarded("relations", [&] {
    auto defects = check_relations(job.rep, pres);
    report(defects.empty() ? "PASS" : "FAIL", "relations",
           std::to_string(pres.relations.size() - defects.size()) + "/" + std::to_string(pres.relations.size()) +
               " hold exactly");
  });

  guarded("Fox fundamental identity", [&] {
    bool holds = true;
    for (const Word& r : pres.relators()) {
      GroupRingElement sum;
      for (int j = 0; j < pres.generator_count(); ++j)
        sum += fox_derivative(r, j) * (GroupRingElement(Word::generator(j)) - GroupRingElement::one());
      holds = holds && sum == GroupRingElement(r) - GroupRingElement::one();
    }
    report(holds ? "PASS" : "FAIL", "Fox fundamental identity");
  });

  std::vector<std::optional<TwistedAlexander>> by_n(6);
  for (int n : {2, 3}) {
    const std::string name = "column independence n=" + std::to_string(n);
    guarded(name, [&] {
      TwistConfig cfg{pres, job.rep, n, std::nullopt, false};
      auto all = twisted_alexander_all_columns(cfg);
      std::optional<TwistedAlexander> first;
      int admissible = 0;
      bool agree = true;
      for (const auto& d : all) {
        if (!d) continue;
        ++admissible;
        if (!first) first = d;
        else agree = agree && equivalent_up_to_unit(*first, *d);
      }
      if (!first) return report("FAIL", name, "no admissible column");
      by_n[static_cast<std::size_t>(n)] = first;
      report(agree ? "PASS" : "FAIL", name, std::to_string(admissible) + " admissible columns");
    });
  }

  guarded("parity of zero at t=1", [&] {
    std::string detail;
    bool pass = true;
    bool any = false;
    for (int n = 2; n <= 5; ++n) {
      auto d = by_n[static_cast<std::size_t>(n)];
      if (!d) d = twisted_alexander(TwistConfig{pres, job.rep, n, std::nullopt, false});
      if (d->value.num.is_zero()) continue;
      any = true;
      const int order = order_at_one(d->value.num).order;
      const int expected = n % 2 == 0 ? 0 : 1;
      if (order != expected) pass = false;
      detail += (detail.empty() ? "" : ", ") + ("n=" + std::to_string(n) + ":" + std::to_string(order));
    }
    if (!any) return report("SKIP", "parity of zero at t=1", "invariant vanishes identically");
    report(pass ? "PASS" : "FAIL", "parity of zero at t=1", detail);
  });
  return ok;
}

/// Full CLI: returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Alexander invariants of knot groups and hyperbolic volume estimates", "twalex"};
  app.require_subcommand(1);
  Options opt;
  std::string job_path;
  std::string range = "4..15";
  std::string format = "table";
  std::string reference;
  int n_single = 2;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("job", job_path, "job file")->required();
    sub->add_option("--precision", opt.precision, "embedding precision in bits")->capture_default_str();
    sub->add_option("--column", opt.column, "deleted column: auto or a generator letter")->capture_default_str();
    sub->add_flag("--trivial-rep", opt.trivial_rep, "use the trivial representation (n = 1, classical path)");
    sub->add_flag("--parallel", opt.parallel, "compute independent pieces concurrently");
  };

  auto* compute = app.add_subcommand("compute", "invariant values at t=1 and volume estimates over an n range");
  add_common(compute);
  compute->add_option("--n", range, "n range <min>..<max>")->capture_default_str();
  compute->add_option("--format", format, "table or csv")->check(CLI::IsMember({"table", "csv"}))->capture_default_str();
  compute->add_option("--reference", reference, "reference volume for the gap column");
  compute->add_flag("--fit", opt.fit, "print an EXPERIMENTAL V - c*log(n)/n fit");

  auto* invariant = app.add_subcommand("invariant", "print the unit-normalized invariant for one n");
  add_common(invariant);
  invariant->add_option("--n", n_single, "dimension n")->capture_default_str();

  auto* check = app.add_subcommand("check", "consistency checks on a job file");
  check->add_option("job", job_path, "job file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      const Job job = load_job(job_path, false);
      return cmd_check(job, out) ? 0 : 1;
    }
    if (!reference.empty()) opt.reference = reference;
    opt.format = format == "csv" ? Format::Csv : Format::Table;
    const Job job = load_job(job_path, !opt.trivial_rep);
    if (compute->parsed()) {
      std::tie(opt.n_min, opt.n_max) = parse_range(range);
      cmd_compute(job, opt, out);
    } else {
      cmd_invariant(job, n_single, opt, out);
    }
    return 0;
  } catch (const Error& e) {
    err << "error [" << e.stage() << "]: " << e.what() << '\n';
    return e.stage() == "usage" ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error [internal]: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace twalex::cli
