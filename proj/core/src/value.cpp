#include "toricap/value.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>

#include "toricap/errors.hpp"

namespace toricap {

namespace {
std::atomic<double> g_tolerance{1e-9};
}

double tolerance() { return g_tolerance.load(); }

void set_tolerance(double tol) {
  if (!(tol > 0)) throw BadParameter("tolerance must be positive");
  g_tolerance.store(tol);
}

std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (s.empty()) throw ParseError("empty rational");
      return Rat(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

bool rational_sqrt(const Rat& r, Rat& root) {
  if (r < 0) return false;
  BigInt n = numerator(r), d = denominator(r);
  BigInt sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  root = Rat(sn, sd);
  return true;
}

std::string Value::str() const {
  if (exact_) return rat_str(rat_);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", dbl_);
  // prefer the shortest representation that round-trips
  for (int prec = 1; prec <= 16; ++prec) {
    char probe[64];
    std::snprintf(probe, sizeof probe, "%.*g", prec, dbl_);
    if (std::strtod(probe, nullptr) == dbl_) return probe;
  }
  return buf;
}

}  // namespace toricap
