#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fermat/certificate.hpp"
#include "fermat/finite_field.hpp"
#include "fermat/identities.hpp"
#include "fermat/parallel.hpp"
#include "fermat/rational_map.hpp"
#include "fermat/varieties.hpp"
#include "serialize.hpp"

namespace fermat::cli {

namespace {

using nlohmann::ordered_json;

std::uint32_t parse_u32(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
  }
  if (used != s.size() || v >= PrimeField::kMaxModulus) {
    throw std::invalid_argument("expected an integer below 2^31, got '" + s + "'");
  }
  return static_cast<std::uint32_t>(v);
}

// Writes records in the chosen format; TSV gets a '#' header line first.
class Emitter {
 public:
  Emitter(std::ostream& out, Format format, const std::vector<std::string>& columns)
      : out_(out), format_(format), columns_(columns) {}

  void emit(const ordered_json& record) {
    if (format_ == Format::json) {
      out_ << record.dump() << '\n';
      return;
    }
    if (!header_written_) {
      out_ << tsv_header(columns_) << '\n';
      header_written_ = true;
    }
    out_ << to_tsv(record, columns_) << '\n';
  }
  void flush() { out_.flush(); }

 private:
  std::ostream& out_;
  Format format_;
  const std::vector<std::string>& columns_;
  bool header_written_ = false;
};

// Runs fn over primes in order-stable batches and hands each result to sink
// as soon as its batch completes, so long sweeps stream.
template <typename Fn, typename Sink>
void sweep(const std::vector<std::uint32_t>& primes, unsigned threads, Fn fn, Sink sink) {
  const std::size_t batch = std::max<std::size_t>(1, std::size_t{threads} * 8);
  for (std::size_t start = 0; start < primes.size(); start += batch) {
    const std::size_t n = std::min(batch, primes.size() - start);
    auto results = parallel_map(n, threads, [&](std::size_t i) { return fn(primes[start + i]); });
    for (auto& r : results) sink(r);
  }
}

// Random points of the E^3 patch over a handful of primes, pushed forward
// and tested against both V33 equations. Returns the number of failures.
std::size_t random_forward_failures(const MapSpec& map, std::uint64_t seed, std::size_t samples) {
  static constexpr std::array<std::uint32_t, 6> kPrimes{5, 7, 11, 13, 31, 10007};
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::uint32_t p = kPrimes[rng() % kPrimes.size()];
    const PatchMap pm(p, map);
    const PrimeField& f = pm.field();
    std::array<std::uint32_t, 6> coords{};
    for (std::size_t k = 0; k < 3; ++k) {
      for (;;) {
        const auto x = static_cast<std::uint32_t>(rng() % p);
        const auto roots = detail::cube_roots(f, f.neg(f.add(f.cube(x), 1)));
        if (roots.empty()) continue;
        coords[2 * k] = x;
        coords[2 * k + 1] = roots[rng() % roots.size()];
        break;
      }
    }
    if (!pm.on_target(pm.forward_unchecked(E3PatchPoint(f, coords)))) ++failures;
  }
  return failures;
}

int cmd_verify_map(const RunConfig& cfg, const std::vector<std::string>& overrides, std::size_t samples,
                   std::ostream& out, std::ostream& err) {
  MapSpec map = fermat_map();
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--assign expects NAME=POLY, got '" + o + "'");
    const std::string name = o.substr(0, eq);
    map = map.with_assignment(name, parse_poly(map.source(), o.substr(eq + 1)));
  }

  std::vector<MembershipCheck> rows;
  for (auto& c : verify_map_well_defined(map).checks) rows.push_back(std::move(c));
  for (auto& c : verify_degree_relation(map).checks) rows.push_back(std::move(c));
  const HomogenizedCertificate hom = verify_homogenized(map);
  for (const auto& c : hom.checks) rows.push_back(c);

  std::ostringstream forms;
  for (const auto& [name, form] : hom.homogenized.forms.assignments()) {
    if (forms.tellp() > 0) forms << ", ";
    forms << name << " = " << form.to_string();
  }
  const auto& t = hom.homogenized.tridegree;
  const std::string tri = "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
  rows.push_back({"homogenized_tridegree", "tridegree " + tri, forms.str(), "-", hom.forms_trihomogeneous});
  rows.push_back({"homogenized_restriction", "z1 = z2 = z3 = 1", "matches input map", "-",
                  hom.restriction_matches_input});
  rows.push_back({"reference_assignments", "z1 = z2 = z3 = 1", "matches X0 -> -x1*y3, X1 -> -y1*y3, X2 -> x3, "
                  "X4 -> -x2*y3, X5 -> -y2*y3", "-", hom.restriction_matches_reference});
  const std::size_t failures = random_forward_failures(map, cfg.seed, samples);
  rows.push_back({"random_forward", "seed " + std::to_string(cfg.seed) + ", " + std::to_string(samples) + " samples",
                  "image on V33", std::to_string(failures) + " failures", failures == 0});

  Emitter emitter(out, cfg.format, membership_columns());
  bool ok = true;
  for (const auto& r : rows) {
    emitter.emit(to_json(r));
    if (!r.member) {
      ok = false;
      err << "verify-map: " << r.label << " failed; normal form: " << r.normal_form << '\n';
    }
  }
  return ok ? kOk : kViolation;
}

int cmd_count(const RunConfig& cfg, const std::string& variety, CountMethod method, bool check, std::ostream& out,
              std::ostream& err) {
  // A single prime gets the whole thread budget inside the table kernel.
  const unsigned inner_threads = cfg.primes.size() == 1 ? cfg.threads : 1;
  const unsigned outer_threads = cfg.primes.size() == 1 ? 1 : cfg.threads;
  std::function<CountReport(std::uint32_t, CountMethod)> fn;
  if (variety == "E") {
    fn = [&](std::uint32_t p, CountMethod m) { return count_E(p, m, cfg.budget); };
  } else if (variety == "E3") {
    fn = [&](std::uint32_t p, CountMethod m) { return count_E3(p, m, cfg.budget); };
  } else if (variety == "V33") {
    fn = [&](std::uint32_t p, CountMethod m) { return count_V33(p, m, cfg.budget, inner_threads); };
  } else {
    throw std::invalid_argument("unknown variety '" + variety + "' (expected E, E3 or V33)");
  }

  auto one = [&](std::uint32_t p, CountMethod m) -> CountRow {
    CountRow row{p, variety, m, std::nullopt, {}};
    try {
      row.report = fn(p, m);
    } catch (const BudgetExceeded& e) {
      row.refusal = e.what();
    }
    return row;
  };

  Emitter emitter(out, cfg.format, count_columns());
  bool refused = false;
  bool violated = false;
  sweep(
      cfg.primes, outer_threads,
      [&](std::uint32_t p) {
        std::vector<CountRow> rows{one(p, method)};
        if (check) rows.push_back(one(p, method == CountMethod::table ? CountMethod::brute : CountMethod::table));
        return rows;
      },
      [&](const std::vector<CountRow>& rows) {
        for (const auto& r : rows) {
          emitter.emit(to_json(r));
          if (!r.report) {
            refused = true;
            err << "count: p=" << r.p << " " << to_string(r.method) << " refused: " << r.refusal << '\n';
          }
        }
        if (rows.size() == 2 && rows[0].report && rows[1].report &&
            !(rows[0].report->projective_count == rows[1].report->projective_count &&
              rows[0].report->affine_cone_count == rows[1].report->affine_cone_count)) {
          violated = true;
          err << "count: p=" << rows[0].p << " table and brute-force counts disagree\n";
        }
        emitter.flush();
      });
  if (violated) return kViolation;
  return refused ? kUsage : kOk;
}

int cmd_fiber_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Emitter emitter(out, cfg.format, census_columns());
  bool refused = false;
  bool violated = false;
  const unsigned inner_threads = cfg.primes.size() == 1 ? cfg.threads : 1;
  const unsigned outer_threads = cfg.primes.size() == 1 ? 1 : cfg.threads;
  sweep(
      cfg.primes, outer_threads,
      [&](std::uint32_t p) {
        CensusRow row{p, std::nullopt, {}};
        try {
          row.census = fiber_census(p, cfg.budget, inner_threads);
        } catch (const BudgetExceeded& e) {
          row.refusal = e.what();
        }
        return row;
      },
      [&](const CensusRow& row) {
        emitter.emit(to_json(row));
        emitter.flush();
        if (!row.census) {
          refused = true;
          err << "fiber-stats: p=" << row.p << " refused: " << row.refusal << '\n';
          return;
        }
        const auto& c = *row.census;
        const bool inert_ok = row.p % 3 != 2 || (c.fiber0 == 0 && c.fiber3 == 0);
        if (!c.conserved || c.fiber_other != 0 || !inert_ok) {
          violated = true;
          err << "fiber-stats: p=" << row.p << " violates the fiber structure\n";
        }
      });
  if (violated) return kViolation;
  return refused ? kUsage : kOk;
}

int cmd_ap(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.primes.empty() && cfg.primes.back() > cfg.bound) {
    throw std::invalid_argument("prime " + std::to_string(cfg.primes.back()) + " exceeds --bound " +
                                std::to_string(cfg.bound));
  }
  const FormPair forms = expand_forms(cfg.bound);
  Emitter emitter(out, cfg.format, ap_columns());
  bool violated = false;
  sweep(
      cfg.primes, cfg.threads, [&](std::uint32_t p) { return compute_ap_row(p, forms); },
      [&](const ApRow& row) {
        emitter.emit(to_json(row));
        emitter.flush();
        if (!row.identity_ok()) {
          violated = true;
          err << "ap: p=" << row.p << " identity fails\n";
        }
      });
  return violated ? kViolation : kOk;
}

int cmd_check_identities(const RunConfig& cfg, std::uint32_t max_prime, const std::string& f2_text,
                         const std::string& f4_text, std::ostream& out, std::ostream& err) {
  const EtaProductSpec f2 = f2_text.empty() ? eta_products::weight2() : parse_eta_spec(f2_text);
  const EtaProductSpec f4 = f4_text.empty() ? eta_products::weight4() : parse_eta_spec(f4_text);
  const IdentityReport report = check_identities(max_prime, cfg.bound, f2, f4, cfg.threads);

  Emitter families(out, cfg.format, family_columns());
  for (const auto& fam : report.families) families.emit(to_json(fam));
  if (!report.ok()) {
    Emitter violations(out, cfg.format, violation_columns());
    for (const auto& fam : report.families) {
      for (const auto& v : fam.violations) {
        ordered_json j;
        j["family"] = fam.name;
        j["violation"] = v;
        violations.emit(j);
      }
    }
    err << "check-identities: violations found up to p = " << max_prime << '\n';
    return kViolation;
  }
  return kOk;
}

}  // namespace

std::vector<std::uint32_t> parse_primes(const std::string& text, std::ostream& notes) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      const std::uint32_t p = parse_u32(item);
      if (!is_prime(p)) throw std::invalid_argument(item + " is not prime");
      if (p == 3) throw std::invalid_argument("p = 3 is a prime of bad reduction");
      out.push_back(p);
      continue;
    }
    const std::uint32_t lo = parse_u32(item.substr(0, dots));
    const std::uint32_t hi = parse_u32(item.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty prime range " + item);
    for (std::uint32_t p : primes_in_range(lo, hi)) {
      if (p == 3) {
        notes << "note: skipping p = 3 (bad reduction)\n";
        continue;
      }
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw std::invalid_argument("no primes in '" + text + "'");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification toolkit for the degree-3 rational map E^3 -> V33", "fermat"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "tsv";
  std::string primes_flag;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--primes", primes_flag, "Primes: p, a..b, or a comma list");
  app.add_option("--budget", cfg.budget, "Maximum tuples for exhaustive searches");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--bound", cfg.bound, "Truncation bound for q-expansions")->check(CLI::Range(1ul, 1'000'000ul));

  auto* verify = app.add_subcommand("verify-map", "Certify the map symbolically");
  std::vector<std::string> overrides;
  std::size_t samples = 200;
  verify->add_option("--assign", overrides, "Override an assignment, e.g. X0=-x1*y3");
  verify->add_option("--samples", samples, "Random E^3 points pushed forward");

  auto* count = app.add_subcommand("count", "Point counts of E, E3 or V33");
  std::string variety;
  std::string primes_pos;
  std::string method = "table";
  bool check = false;
  count->add_option("variety", variety, "E, E3 or V33")->required();
  count->add_option("primes", primes_pos, "Primes: p, a..b, or a comma list");
  count->add_option("--method", method)->check(CLI::IsMember({"table", "brute"}));
  count->add_flag("--check", check, "Also run the other method and compare");

  auto* fibers = app.add_subcommand("fiber-stats", "Exhaustive fiber census");
  fibers->add_option("primes", primes_pos, "Primes: p, a..b, or a comma list");

  auto* ap = app.add_subcommand("ap", "Traces a_p by every route");
  ap->add_option("primes", primes_pos, "Primes: p, a..b, or a comma list");

  auto* identities = app.add_subcommand("check-identities", "CM and eigenform identities up to a prime");
  std::uint32_t max_prime = 1000;
  std::string f2_text;
  std::string f4_text;
  identities->add_option("max_prime", max_prime, "Largest prime checked");
  identities->add_option("--f2", f2_text, "Weight-2 eta product, e.g. 3^2*9^2");
  identities->add_option("--f4", f4_text, "Weight-4 eta product, e.g. 3^8");

  std::vector<const char*> argv{"fermat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.format = format == "json" ? Format::json : Format::tsv;
    const std::string primes_text = !primes_flag.empty() ? primes_flag : primes_pos;
    auto require_primes = [&]() {
      if (primes_text.empty()) throw std::invalid_argument("no primes given");
      cfg.primes = parse_primes(primes_text, err);
    };
    if (*verify) {
      cfg.command = "verify-map";
      return cmd_verify_map(cfg, overrides, samples, out, err);
    }
    if (*count) {
      cfg.command = "count";
      require_primes();
      return cmd_count(cfg, variety, parse_count_method(method), check, out, err);
    }
    if (*fibers) {
      cfg.command = "fiber-stats";
      require_primes();
      return cmd_fiber_stats(cfg, out, err);
    }
    if (*ap) {
      cfg.command = "ap";
      require_primes();
      return cmd_ap(cfg, out, err);
    }
    cfg.command = "check-identities";
    return cmd_check_identities(cfg, max_prime, f2_text, f4_text, out, err);
  } catch (const BadReduction& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace fermat::cli
