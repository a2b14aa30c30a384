// toricap: capacities, embedding obstructions, and self-verification for
// four-dimensional convex toric domains.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toricap/capacities.hpp"
#include "toricap/errors.hpp"
#include "toricap/obstructions.hpp"
#include "toricap/oracle.hpp"
#include "toricap/verify.hpp"

using json = nlohmann::ordered_json;
using namespace toricap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitValidationError = 3;
constexpr int kExitBudgetExceeded = 4;

json value_json(const Value& v) {
  json j;
  if (v.is_exact()) {
    j["value"] = v.str();
  } else {
    j["value"] = v.dbl();
    j["approx"] = true;
  }
  j["exact"] = v.is_exact();
  return j;
}

CapacityValue compute(const ToricDomain& domain, const std::string& family,
                      long k) {
  if (family == "gt") return gt(domain, k);
  if (family == "gh") return gh(domain, k);
  return ech(domain, k);
}

int run_caps(const std::string& spec_text,
             const std::vector<std::string>& families, long kmax,
             const std::string& format) {
  auto domain = ToricDomain::validate(parse_domain_spec(spec_text));
  std::string canonical_spec = domain_spec_str(domain.spec());
  if (format == "json") {
    json out = json::array();
    for (const auto& family : families) {
      json block;
      block["domain"] = canonical_spec;
      block["family"] = family;
      block["values"] = json::array();
      for (long k = 1; k <= kmax; ++k) {
        CapacityValue cv = compute(domain, family, k);
        json entry;
        entry["k"] = k;
        json v = value_json(cv.value);
        entry.update(v);
        entry["witnesses"] = cv.witness_strings();
        if (cv.experimental) entry["experimental"] = true;
        block["values"].push_back(entry);
      }
      out.push_back(block);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (format == "csv") {
    std::cout << "family";
    for (long k = 1; k <= kmax; ++k) std::cout << ",k=" << k;
    std::cout << "\n";
    for (const auto& family : families) {
      std::cout << family;
      for (long k = 1; k <= kmax; ++k)
        std::cout << ',' << compute(domain, family, k).value.str();
      std::cout << "\n";
    }
    return kExitOk;
  }
  // table: k across the top
  std::cout << "domain: " << canonical_spec << "\n";
  std::cout << "k";
  for (long k = 1; k <= kmax; ++k) std::cout << '\t' << k;
  std::cout << "\n";
  for (const auto& family : families) {
    std::cout << family;
    for (long k = 1; k <= kmax; ++k) {
      Value v = compute(domain, family, k).value;
      std::cout << '\t' << v.str();
    }
    std::cout << "\n";
  }
  return kExitOk;
}

json report_json(const ObstructionReport& rep) {
  json out;
  out["source"] = domain_spec_str(rep.source);
  out["target"] = domain_spec_str(rep.target);
  out["kmax"] = rep.kmax;
  out["bounds"] = json::array();
  for (const auto& fb : rep.bounds) {
    json b;
    b["family"] = family_str(fb.family);
    b["stabilized"] = fb.family != Family::Ech;
    json mu = value_json(fb.mu);
    b["mu"] = mu["value"];
    if (mu.contains("approx")) b["approx"] = true;
    b["exact"] = mu["exact"];
    b["witness_k"] = fb.witness_k;
    b["still_increasing_at_kmax"] = fb.still_increasing;
    out["bounds"].push_back(b);
  }
  json vol = value_json(rep.volume);
  out["volume_bound"] = vol["value"];
  out["volume_exact"] = rep.volume_exact;
  if (!rep.volume_exact) out["volume_approx_value"] = rep.volume.dbl();
  if (rep.sharpness) {
    json s;
    s["formula_mu"] = value_json(rep.sharpness->formula_mu)["value"];
    s["attained"] = rep.sharpness->attained;
    out["sharpness"] = s;
  }
  return out;
}

int run_obstruct(const std::string& src_text, const std::string& tgt_text,
                 long kmax, const std::string& format) {
  auto src = ToricDomain::validate(parse_domain_spec(src_text));
  auto tgt = ToricDomain::validate(parse_domain_spec(tgt_text));
  ObstructionReport rep = report(src, tgt, kmax);
  if (format == "json") {
    std::cout << report_json(rep).dump(2) << "\n";
    return kExitOk;
  }
  if (format == "csv") {
    std::cout << "family,mu,witness_k,still_increasing\n";
    for (const auto& fb : rep.bounds)
      std::cout << family_str(fb.family) << ',' << fb.mu.str() << ','
                << fb.witness_k << ',' << (fb.still_increasing ? 1 : 0)
                << "\n";
    std::cout << "volume," << rep.volume.str() << ",,\n";
    return kExitOk;
  }
  std::cout << "source: " << domain_spec_str(rep.source) << "\n";
  std::cout << "target: " << domain_spec_str(rep.target) << "\n";
  std::cout << "kmax:   " << rep.kmax << "\n";
  for (const auto& fb : rep.bounds) {
    std::cout << family_str(fb.family) << " bound: mu >= " << fb.mu.str()
              << " (k=" << fb.witness_k << ")"
              << (fb.family == Family::Ech ? " [unstabilized]" : "");
    if (fb.still_increasing) std::cout << " [still increasing at kmax]";
    std::cout << "\n";
  }
  std::cout << "volume bound: mu >= " << rep.volume.str() << "\n";
  if (rep.sharpness)
    std::cout << "sharp formula: mu >= " << rep.sharpness->formula_mu.str()
              << (rep.sharpness->attained ? " (attained)" : " (not attained)")
              << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite, long samples, std::uint64_t seed,
               long kmax) {
  std::vector<VerifyResult> results;
  auto want = [&](const std::string& s) {
    return suite == "all" || suite == s;
  };
  if (want("tables")) results.push_back(verify_tables());
  if (want("closed-forms"))
    results.push_back(verify_closed_forms(samples, seed, std::min(kmax, 20l)));
  if (want("oracles")) results.push_back(verify_oracles(std::min(kmax, 8l)));
  if (want("invariants")) results.push_back(verify_invariants(samples, seed));
  if (want("reduction"))
    results.push_back(verify_reduction(samples * 5, seed));
  if (want("sharpness")) results.push_back(verify_sharpness());
  bool ok = true;
  for (const auto& r : results) {
    std::cout << r.suite << ": " << (r.ok() ? "PASS" : "FAIL") << " ("
              << r.checks << " checks";
    if (!r.ok()) std::cout << ", " << r.failures.size() << " failures";
    std::cout << ")\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    ok &= r.ok();
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capacities and embedding obstructions for 4d convex toric "
               "domains"};
  app.require_subcommand(1);

  double tol = 1e-9;
  if (const char* env = std::getenv("TORICAP_TOLERANCE")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) tol = v;
  }
  app.add_option("--tolerance", tol,
                 "comparison tolerance for inexact arithmetic");

  auto* caps = app.add_subcommand("caps", "capacity table for one domain");
  std::string caps_domain, caps_families = "gt,gh,ech", caps_format = "table";
  long caps_kmax = 10;
  caps->add_option("domain", caps_domain, "domain spec, e.g. ellipsoid:1,7")
      ->required();
  caps->add_option("--families", caps_families, "subset of gt,gh,ech");
  caps->add_option("--kmax", caps_kmax, "largest k")->check(CLI::Range(1l, 1000l));
  caps->add_option("--format", caps_format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  auto* obstruct =
      app.add_subcommand("obstruct", "embedding obstruction report");
  std::string ob_src, ob_tgt, ob_format = "table";
  long ob_kmax = 0;
  obstruct->add_option("source", ob_src, "source domain spec")->required();
  obstruct->add_option("target", ob_tgt, "target domain spec")->required();
  obstruct->add_option("--kmax", ob_kmax, "largest k (0 = automatic)");
  obstruct->add_option("--format", ob_format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  std::string suite = "all";
  long samples = 100, v_kmax = 8;
  std::uint64_t seed = 0;
  verify
      ->add_option("suite", suite,
                   "tables|closed-forms|oracles|invariants|reduction|"
                   "sharpness|all")
      ->check(CLI::IsMember({"tables", "closed-forms", "oracles", "invariants",
                             "reduction", "sharpness", "all"}));
  verify->add_option("--samples", samples, "random samples per suite");
  verify->add_option("--seed", seed, "random seed (0 = default)");
  verify->add_option("--kmax", v_kmax, "largest k for sampled suites");

  CLI11_PARSE(app, argc, argv);
  set_tolerance(tol);

  try {
    if (caps->parsed()) {
      std::vector<std::string> fams;
      std::string cur;
      for (char ch : caps_families + ",") {
        if (ch == ',') {
          if (!cur.empty()) fams.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(ch);
        }
      }
      for (const auto& f : fams)
        if (f != "gt" && f != "gh" && f != "ech")
          throw ParseError("unknown capacity family '" + f + "'");
      return run_caps(caps_domain, fams, caps_kmax, caps_format);
    }
    if (obstruct->parsed())
      return run_obstruct(ob_src, ob_tgt, ob_kmax, ob_format);
    if (verify->parsed()) return run_verify(suite, samples, seed, v_kmax);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const ToricError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidationError;
  }
  return kExitOk;
}
