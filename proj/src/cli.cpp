// Copyright 2026 The liepoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liepoly/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <thread>

#include <CLI11.hpp>

#include "liepoly/analyzer.hpp"
#include "liepoly/error.hpp"
#include "liepoly/families.hpp"
#include "liepoly/torus.hpp"

namespace liepoly::cli {

namespace {

struct Options {
  std::string family = "b2";
  std::string format;
  unsigned k = 2;
  unsigned n = 2;
  std::int64_t b = 1;
  std::uint64_t q = 2;
  std::string method = "both";
  unsigned kmin = 1;
  unsigned kmax = 10;
  std::vector<std::uint64_t> q_list;
  unsigned jobs = 0;
  bool count_only = false;
  std::uint64_t reduce_q = 0;
  bool symbolic = false;
  bool pointwise = false;
  std::uint64_t pmax = 200;
  unsigned samples = 16;
};

bool use_csv(const Options& o, bool csv_default) { return o.format.empty() ? csv_default : o.format == "csv"; }

unsigned jobs_or_default(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

FamilyTag torus_family(const std::string& name) {
  if (name == "b2") return FamilyTag::kB2;
  if (name == "g2") return FamilyTag::kG2;
  throw InvalidInput("this command needs --family b2 or g2");
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<unsigned>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const FamilyId fam = parse_family(o.family, o.n, o.b);
  const PolyMap map = family_map(fam, o.k);
  if (use_csv(o, false)) {
    out << "component,exponents,coefficient\n";
    for (std::size_t c = 0; c < map.arity(); ++c) {
      for (const auto& t : map[c].terms()) {
        out << c << ',';
        for (std::size_t v = 0; v < map[c].nvars(); ++v) out << (v ? ";" : "") << t.exponents[v];
        out << ',' << t.coeff.get_str() << '\n';
      }
    }
    return kExitOk;
  }
  nlohmann::json display = nlohmann::json::array();
  for (const auto& c : map.components()) display.push_back(c.to_string());
  out << nlohmann::json{{"family", fam.name()}, {"k", o.k}, {"display", display}, {"map", to_json(map)}}.dump(2)
      << '\n';
  return kExitOk;
}

PermMethod parse_method(const std::string& m) {
  if (m == "brute") return PermMethod::kBrute;
  if (m == "criterion") return PermMethod::kCriterion;
  return PermMethod::kBoth;
}

int cmd_perm_test(const Options& o, std::ostream& out) {
  const FamilyId fam = parse_family(o.family, o.n, o.b);
  const PermVerdict v = perm_test(fam, o.k, o.q, parse_method(o.method));
  if (use_csv(o, false)) {
    out << scan_csv_header() << '\n' << to_csv_row(v) << '\n';
  } else {
    out << to_json(v).dump(2) << '\n';
  }
  return v.agree ? kExitOk : kExitViolation;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const FamilyId fam = parse_family(o.family, o.n, o.b);
  std::vector<unsigned> ks;
  for (unsigned k = o.kmin; k <= o.kmax; ++k) ks.push_back(k);
  ScanOptions so;
  so.jobs = jobs_or_default(o.jobs);
  so.method = parse_method(o.method);
  const auto rows = scan(fam, ks, o.q_list, so);
  const auto bad = std::count_if(rows.begin(), rows.end(), [](const PermVerdict& v) { return !v.agree; });
  if (use_csv(o, true)) {
    out << scan_csv_header() << '\n';
    for (const auto& v : rows) out << to_csv_row(v) << '\n';
  } else {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : rows) a.push_back(to_json(v));
    out << nlohmann::json{{"cells", rows.size()}, {"disagreements", bad}, {"rows", a}}.dump(2) << '\n';
  }
  err << rows.size() << " cells, " << bad << " disagreements\n";
  return bad == 0 ? kExitOk : kExitViolation;
}

int cmd_fixpoints(const Options& o, std::ostream& out) {
  const FamilyTag tag = torus_family(o.family);
  const FixedPointSet set = fix_enumerate(tag, o.k);
  if (o.count_only) {
    if (use_csv(o, false)) {
      out << "family,k,count\n" << o.family << ',' << o.k << ',' << set.points.size() << '\n';
    } else {
      out << set.points.size() << '\n';
    }
    return kExitOk;
  }
  const FieldCtx* ctx = o.reduce_q ? &field_of_order(o.reduce_q) : nullptr;
  if (use_csv(o, false)) {
    out << (ctx ? "sigma,tau,x,y\n" : "sigma,tau\n");
    for (const auto& p : set.points) {
      out << p.sigma.to_string() << ',' << p.tau.to_string();
      if (ctx) {
        const auto img = phi_field(tag, p, *ctx);
        out << ',' << to_string(img.first) << ',' << to_string(img.second);
      }
      out << '\n';
    }
    return kExitOk;
  }
  nlohmann::json j = to_json(set);
  if (ctx) {
    j["reduce_q"] = o.reduce_q;
    for (std::size_t i = 0; i < set.points.size(); ++i) {
      const auto img = phi_field(tag, set.points[i], *ctx);
      j["points"][i]["reduced"] = {to_string(img.first), to_string(img.second)};
    }
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_frobenius(const Options& o, std::ostream& out) {
  const FamilyId fam = parse_family(o.family, o.n, o.b);
  const FrobeniusMode mode = o.pointwise ? FrobeniusMode::kPointwise : FrobeniusMode::kSymbolic;
  const bool holds = frobenius_check(fam, o.q, mode);
  const std::string mode_name = o.pointwise ? "pointwise" : "symbolic";
  if (use_csv(o, false)) {
    out << "family,q,mode,holds\n" << fam.name() << ',' << o.q << ',' << mode_name << ',' << bool_str(holds) << '\n';
  } else {
    out << nlohmann::json{{"family", fam.name()}, {"q", o.q}, {"mode", mode_name}, {"holds", holds}}.dump(2) << '\n';
  }
  return holds ? kExitOk : kExitViolation;
}

int cmd_correspond(const Options& o, std::ostream& out) {
  const auto rep = correspondence_check(torus_family(o.family), o.q);
  if (use_csv(o, false)) {
    out << "family,q,fixed_points,distinct_images,bijective,equivariance_k\n"
        << o.family << ',' << o.q << ',' << rep.fixed_points << ',' << rep.distinct_images << ','
        << bool_str(rep.ok()) << ',' << join(rep.equivariance_ks, ';') << '\n';
  } else {
    out << to_json(rep).dump(2) << '\n';
  }
  return rep.ok() ? kExitOk : kExitViolation;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
  const auto rep = counterexample_report(torus_family(o.family), o.k, o.pmax, jobs_or_default(o.jobs));
  if (use_csv(o, false)) {
    out << "residue,permutation,consistent,primes\n";
    for (const auto& [r, cls] : rep.classes) {
      out << r << ',' << bool_str(cls.is_perm[0]) << ',' << bool_str(cls.consistent) << ',';
      for (std::size_t i = 0; i < cls.primes.size(); ++i) out << (i ? ";" : "") << cls.primes[i];
      out << '\n';
    }
  } else {
    out << to_json(rep).dump(2) << '\n';
  }
  const bool ok = rep.matches && !rep.realizability.expected_realizable;
  return ok ? kExitOk : kExitViolation;
}

int cmd_region(const Options& o, std::ostream& out) {
  const auto rs = region_sample(torus_family(o.family), o.samples);
  if (use_csv(o, true)) {
    out << "sigma,tau,x,y,kind\n";
    for (const auto& r : rs.rows) {
      out << fmt_double(r.sigma) << ',' << fmt_double(r.tau) << ',' << fmt_double(r.x) << ',' << fmt_double(r.y) << ','
          << to_string(r.kind) << '\n';
    }
  } else {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rs.rows) {
      a.push_back({{"sigma", r.sigma}, {"tau", r.tau}, {"x", r.x}, {"y", r.y}, {"kind", to_string(r.kind)}});
    }
    out << nlohmann::json{{"family", o.family}, {"samples", o.samples}, {"rows", a}}.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Permutation tests and torus data for the polynomial families of B2 and G2", "liepoly"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "csv"};
  const std::vector<std::string> families = {"dickson", "b2", "g2", "g2-tilde", "g2-3var", "f-power", "lw"};

  auto common = [&](CLI::App* sub, bool with_family) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember(formats));
    if (with_family) sub->add_option("--family", o.family, "family name")->required()->check(CLI::IsMember(families));
  };
  auto lw_opts = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of coordinates for lw")->check(CLI::Range(1U, 8U));
    sub->add_option("--b", o.b, "constant term for lw");
  };

  auto* gen = app.add_subcommand("gen", "print the k-th polynomial map");
  common(gen, true);
  gen->add_option("--k", o.k, "index")->required()->check(CLI::Range(0U, 400U));
  lw_opts(gen);

  auto* perm = app.add_subcommand("perm-test", "decide whether the k-th map permutes F_q^n");
  common(perm, true);
  perm->add_option("--k", o.k, "index")->required();
  perm->add_option("--q", o.q, "field order")->required();
  perm->add_option("--method", o.method, "brute, criterion or both")
      ->check(CLI::IsMember({"brute", "criterion", "both"}));
  lw_opts(perm);

  auto* sc = app.add_subcommand("scan", "brute force against the gcd criterion over a grid");
  common(sc, true);
  sc->add_option("--kmin", o.kmin, "first index")->check(CLI::Range(0U, 400U));
  sc->add_option("--kmax", o.kmax, "last index")->required()->check(CLI::Range(0U, 400U));
  sc->add_option("--q-list", o.q_list, "comma-separated field orders")->required()->delimiter(',');
  sc->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  sc->add_option("--method", o.method, "brute, criterion or both")
      ->check(CLI::IsMember({"brute", "criterion", "both"}));
  lw_opts(sc);

  auto* fix = app.add_subcommand("fixpoints", "enumerate the fixed points on the torus");
  common(fix, true);
  fix->add_option("--k", o.k, "index")->required()->check(CLI::Range(2U, 200U));
  auto* count_flag = fix->add_flag("--count-only", o.count_only, "print only the number of classes");
  fix->add_option("--reduce-q", o.reduce_q, "also reduce the points into F_q^2")->excludes(count_flag);

  auto* frob = app.add_subcommand("frobenius", "check the q-th map against the Frobenius");
  common(frob, true);
  frob->add_option("--q", o.q, "field order")->required();
  auto* sym = frob->add_flag("--symbolic", o.symbolic, "compare coefficients mod p (default)");
  frob->add_flag("--pointwise", o.pointwise, "compare values on F_q^n")->excludes(sym);
  lw_opts(frob);

  auto* corr = app.add_subcommand("correspond", "check that Fix(F_q) reduces onto F_q^2");
  common(corr, true);
  corr->add_option("--q", o.q, "field order")->required();

  auto* cex = app.add_subcommand("counterexample", "residue classes of p for which the k-th map permutes F_p^2");
  common(cex, true);
  o.k = 13;
  cex->add_option("--k", o.k, "prime index");
  cex->add_option("--pmax", o.pmax, "largest prime")->required();
  cex->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");

  auto* reg = app.add_subcommand("region", "sample the image of the fundamental region");
  common(reg, true);
  reg->add_option("--samples", o.samples, "subdivision count n (n^2 interior points)")->check(CLI::Range(1U, 1000U));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* active = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << active->help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (perm->parsed()) return cmd_perm_test(o, out);
    if (sc->parsed()) return cmd_scan(o, out, err);
    if (fix->parsed()) return cmd_fixpoints(o, out);
    if (frob->parsed()) return cmd_frobenius(o, out);
    if (corr->parsed()) return cmd_correspond(o, out);
    if (cex->parsed()) return cmd_counterexample(o, out);
    if (reg->parsed()) return cmd_region(o, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace liepoly::cli
