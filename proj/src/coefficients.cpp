#include "lzeta/coefficients.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lzeta/bernoulli.hpp"
#include "lzeta/error.hpp"
#include "lzeta/relation.hpp"
#include "lzeta/surd.hpp"

namespace lzeta {

namespace {

using Kind = TrigKind;

// B_2j B_{4k+2-2j} / ((2j)! (4k+2-2j)!)
Rational beta(long k, long j) {
  return bernoulli(2 * j) * bernoulli(4 * k + 2 - 2 * j) / (factorial(2 * j) * factorial(4 * k + 2 - 2 * j));
}

// B_2j B_{4k-2j} / ((2j)! (4k-2j)!)
Rational gamma(long k, long j) {
  return bernoulli(2 * j) * bernoulli(4 * k - 2 * j) / (factorial(2 * j) * factorial(4 * k - 2 * j));
}

long sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

void require_nonzero(const Coefficient& c, const std::string& what) {
  if (is_zero(c)) throw DomainError(what + " vanishes");
}

void require_nonzero(const Rational& c, const std::string& what) {
  if (c == 0) throw DomainError(what + " vanishes");
}

std::string zeta_id(long n) { return "zeta(" + std::to_string(n) + ")"; }

std::string indexed(const char* name, long j, long k) {
  return std::string(name) + "_" + std::to_string(j) + "," + std::to_string(k);
}

QuadraticSurd trig(int m, long multiple, Kind kind) { return surd_trig(m, multiple, kind); }

Rational rational_part(const QuadraticSurd& x, const char* what) {
  if (!x.is_rational()) throw std::logic_error(std::string(what) + " is not rational");
  return x.a();
}

// 2^(e/2) in Q(sqrt m) with e odd allowed
QuadraticSurd root2(long e, int m) { return QuadraticSurd::sqrt2_power(e, m); }

GaussianRational one_plus_i_pow(long e) { return gaussian_pow(GaussianRational(1, 1), e); }

// sum_{n=-half..half} (1 + i n)^e
GaussianRational gaussian_row_sum(long half, long e) {
  GaussianRational total;
  for (long n = -half; n <= half; ++n) total += gaussian_pow(GaussianRational(Rational(1), Rational(n)), e);
  return total;
}

GaussianRational scaled(const GaussianRational& z, const Rational& r) { return z * GaussianRational(r); }

// (1 + (1+i)^(4k+1-2j)) / 2^(4k+1-2j) - (1 + (1+i)^(2j-1)) / 2^(2j-1), the p = 2 piece
GaussianRational p2_piece(long k, long j) {
  const long hi = 4 * k + 1 - 2 * j;
  const long lo = 2 * j - 1;
  return scaled(GaussianRational(1) + one_plus_i_pow(hi), pow2(-hi)) -
         scaled(GaussianRational(1) + one_plus_i_pow(lo), pow2(-lo));
}

struct GaussianFormula {
  GaussianRational pi_weight;
  CoefficientTable table;
};

void push(CoefficientTable& t, BasisTerm b, Coefficient c) { accumulate(t.entries, b, c); }

Rational real_or_throw(const GaussianRational& z, const char* what) {
  if (!z.is_real()) throw std::logic_error(std::string(what) + " has a nonzero imaginary part");
  return z.re;
}

GaussianFormula formula_p2(long k) {
  const long s = -(4 * k + 1);
  const Rational a = pow2(4 * k + 1) - sign_pow(k) * pow2(2 * k) - 1;
  require_nonzero(a, "a_k");
  GaussianFormula f;
  f.table.raw.emplace_back("a_k", to_string(a));
  GaussianRational sum;
  for (long j = 0; j <= k; ++j) {
    const long hi = 4 * k + 1 - 2 * j;
    const long lo = 2 * j - 1;
    const GaussianRational b = scaled(scaled(GaussianRational(1) + one_plus_i_pow(hi), pow2(lo)) -
                                          scaled(GaussianRational(1) + one_plus_i_pow(lo), pow2(hi)),
                                      1 / a);
    f.table.raw.emplace_back(indexed("b", j, k), to_string(b));
    sum += scaled(b, -sign_pow(j) * beta(k, j));
  }
  f.pi_weight = scaled(sum, pow2(4 * k + 1));
  push(f.table, BasisTerm::pi_power(4 * k + 1), real_or_throw(f.pi_weight, "pi weight"));
  push(f.table, BasisTerm::lambert(QSymbol::positive(2), s), Rational(-(2 * a + 4) / a));
  push(f.table, BasisTerm::lambert(QSymbol::positive(4), s), Rational(4 / a));
  return f;
}

GaussianFormula formula_p3(long k) {
  const long s = -(4 * k + 1);
  const Rational pk = pow2(2 * k) * sign_pow(k);
  const Rational three = pow(Rational(3), 4 * k + 1);
  const Rational den = pow2(4 * k + 1) - pk + 1;
  require_nonzero(den, "denominator of a_k");
  const Rational a = pow2(4 * k) * (three + 1) / den;
  const Rational b = (three - 1) / 2 - pk - a * (pow2(4 * k + 1) - pk - 1) / pow2(4 * k + 1);
  require_nonzero(b, "b_k");
  GaussianFormula f;
  f.table.raw.emplace_back("a_k", to_string(a));
  f.table.raw.emplace_back("b_k", to_string(b));
  GaussianRational sum;
  for (long j = 0; j <= k; ++j) {
    const long hi = 4 * k + 1 - 2 * j;
    const long lo = 2 * j - 1;
    const GaussianRational c = scaled(gaussian_row_sum(1, hi), pow(Rational(3), lo)) -
                               scaled(gaussian_row_sum(1, lo), pow(Rational(3), hi)) - scaled(p2_piece(k, j), a);
    f.table.raw.emplace_back(indexed("c", j, k), to_string(c));
    sum += scaled(c, -sign_pow(j) * beta(k, j));
  }
  f.pi_weight = scaled(sum, pow2(4 * k + 1) / (2 * b));
  push(f.table, BasisTerm::pi_power(4 * k + 1), real_or_throw(f.pi_weight, "pi weight"));
  push(f.table, BasisTerm::lambert(QSymbol::negative(3), s), Rational(pk * 2 / b));
  push(f.table, BasisTerm::lambert(QSymbol::positive(4), s), Rational(-a / (pow2(4 * k - 1) * b)));
  push(f.table, BasisTerm::lambert(QSymbol::positive(6), s), Rational(2 / b));
  return f;
}

GaussianFormula formula_p5(long k) {
  const long s = -(4 * k + 1);
  const Rational pk = pow2(2 * k) * sign_pow(k);
  const Rational five = pow(Rational(5), 4 * k + 1);
  const GaussianRational g = gaussian_pow(GaussianRational(1, 2), 4 * k);
  const Rational den = pow2(4 * k) * (five - 2 * g.re + 1);
  require_nonzero(den, "denominator of a_k");
  const Rational a = (pow2(4 * k + 1) - pk + 1) / den;
  const Rational row = real_or_throw(gaussian_row_sum(2, 4 * k), "row sum");
  const Rational b = a / 2 * (five - row) - (pow2(4 * k + 1) - pk - 1) / pow2(4 * k + 1);
  require_nonzero(b, "b_k");
  GaussianFormula f;
  f.table.raw.emplace_back("a_k", to_string(a));
  f.table.raw.emplace_back("b_k", to_string(b));
  GaussianRational sum;
  for (long j = 0; j <= k; ++j) {
    const long hi = 4 * k + 1 - 2 * j;
    const long lo = 2 * j - 1;
    const GaussianRational c = scaled(scaled(gaussian_row_sum(2, hi), pow(Rational(5), lo)) -
                                          scaled(gaussian_row_sum(2, lo), pow(Rational(5), hi)),
                                      a) -
                               p2_piece(k, j);
    f.table.raw.emplace_back(indexed("c", j, k), to_string(c));
    sum += scaled(c, -sign_pow(j) * beta(k, j));
  }
  f.pi_weight = scaled(sum, pow2(4 * k + 1) / (2 * b));
  push(f.table, BasisTerm::pi_power(4 * k + 1), real_or_throw(f.pi_weight, "pi weight"));
  push(f.table, BasisTerm::lambert(QSymbol::positive(4), s), Rational(-1 / (pow2(4 * k - 1) * b)));
  push(f.table, BasisTerm::lambert(QSymbol::negative(5), s), Rational(pk * 2 * a / b));
  push(f.table, BasisTerm::lambert(QSymbol::positive(10), s), Rational(2 * a / b));
  return f;
}

GaussianFormula gaussian_formula(const std::string& method, long k) {
  if (method == "p2") return formula_p2(k);
  if (method == "p3") return formula_p3(k);
  if (method == "p5") return formula_p5(k);
  throw InvalidArgument("no Gaussian formula for method '" + method + "'");
}

CoefficientTable corollary2(long k) {
  CoefficientTable t;
  Rational sum;
  for (long j = 0; j <= k; ++j) {
    Rational w = -sign_pow(j) * gamma(k, j);
    if (j == k) w /= 2;
    sum += w;
  }
  push(t, BasisTerm::pi_power(4 * k - 1), Rational(sum * pow2(4 * k - 1)));
  push(t, BasisTerm::lambert(QSymbol::positive(2), -(4 * k - 1)), Rational(-2));
  return t;
}

CoefficientTable corollary3(long k) {
  CoefficientTable t;
  Rational sum;
  for (long j = 0; j <= k; ++j) sum += sign_pow(j) * (2 * k + 1 - 2 * j) * beta(k, j);
  push(t, BasisTerm::pi_power(4 * k + 1), Rational(sum * pow2(4 * k + 1) / (2 * k)));
  push(t, BasisTerm::lambert_derivative(QSymbol::positive(2), -(4 * k + 1)), Rational(-1, k));
  push(t, BasisTerm::lambert(QSymbol::positive(2), -(4 * k + 1)), Rational(-2));
  return t;
}

// theta = pi/6
CoefficientTable root3_plus(long k) {
  if (k % 3 == 0) {
    throw InvalidArgument("root3 for zeta(4k+1) is undefined for k divisible by 3 (k = " + std::to_string(k) + ")");
  }
  const int m = 3;
  const long s = -(4 * k + 1);
  const Rational d = pow2(4 * k) - rational_part(trig(m, 4 * k, Kind::kCos), "cos(2 pi k/3)");
  require_nonzero(d, "denominator of a_k");
  const Rational a = (pow2(4 * k + 1) + 1) / d;
  CoefficientTable t;
  t.raw.emplace_back("a_k", to_string(a));
  Coefficient sum = Rational(0);
  for (long j = 0; j <= k; ++j) {
    const QuadraticSurd b = (pow2(2 * j - 1) * trig(m, 2 * (2 * k - 1 - j), Kind::kSin) +
                             pow2(4 * k + 1 - 2 * j) * trig(m, 2 * (j + 1), Kind::kSin)) /
                            d;
    t.raw.emplace_back(indexed("b", j, k), to_string(b));
    sum = sum + Coefficient(b) * Coefficient(Rational(sign_pow(j) * beta(k, j)));
  }
  push(t, BasisTerm::pi_power(4 * k + 1), sum * Coefficient(pow2(4 * k + 1)));
  push(t, BasisTerm::lambert(QSymbol::negative(1, 3), s), Rational(-a));
  return t;
}

CoefficientTable root3_minus(long k) {
  const int m = 3;
  const long s = -(4 * k - 1);
  const Rational a = pow2(4 * k) + 4 * rational_part(trig(m, 4 * k + 1, Kind::kSin), "sin((4k+1) pi/6)");
  require_nonzero(a, "a_k");
  CoefficientTable t;
  t.raw.emplace_back("a_k", to_string(a));
  Coefficient sum = Rational(0);
  for (long j = 0; j <= k; ++j) {
    QuadraticSurd b = (pow2(4 * k + 1 - 2 * j) * trig(m, 2 * j - 1, Kind::kCos) +
                       pow2(2 * j + 1) * trig(m, 4 * k - 1 - 2 * j, Kind::kCos)) /
                      a;
    if (j == k) b /= Rational(2);
    t.raw.emplace_back(indexed("b", j, k), to_string(b));
    sum = sum + Coefficient(b) * Coefficient(Rational(-sign_pow(j) * gamma(k, j)));
  }
  const Rational c2 = rational_part(trig(m, 2 * (2 * k - 1), Kind::kCos), "cos((2k-1) pi/3)");
  push(t, BasisTerm::pi_power(4 * k - 1), sum * Coefficient(pow2(4 * k - 1)));
  push(t, BasisTerm::lambert(QSymbol::positive(1, 3), s), Rational((pow2(4 * k + 1) + 4) / a));
  push(t, BasisTerm::lambert(QSymbol::positive(2, 3), s),
       Rational(-(pow2(4 * k + 2) + pow2(4 - 4 * k) + 12 + 8 * c2) / a));
  push(t, BasisTerm::lambert(QSymbol::positive(4, 3), s), Rational((pow2(4 - 4 * k) + 8) / a));
  return t;
}

// theta = arccot(sqrt 7)
CoefficientTable root7_plus(long k) {
  const int m = 7;
  const long s = -(4 * k + 1);
  const Rational c4 = rational_part(trig(m, 4 * k, Kind::kCos), "cos(4k theta)");
  const Rational den = 1 - pow2(-2 * k) * c4;
  require_nonzero(den, "1 - 2^-2k cos(4k theta)");
  const Rational a = (2 + pow2(-4 * k) - pow2(-2 * k + 1) * c4) / den;
  const Rational b = -(4 + 3 * pow2(-4 * k) + pow2(-8 * k) - pow2(-2 * k + 2) * c4 - pow2(-6 * k + 1) * c4) / den;
  const Rational cden = pow2(2 * k) - c4;
  require_nonzero(cden, "2^2k - cos(4k theta)");
  CoefficientTable t;
  t.raw.emplace_back("a_k", to_string(a));
  t.raw.emplace_back("b_k", to_string(b));
  Coefficient sum = Rational(0);
  for (long j = 0; j <= k; ++j) {
    const QuadraticSurd c = (root2(4 * k + 1 - 2 * j, m) * trig(m, 2 * j - 1, Kind::kCos) -
                             root2(2 * j - 1, m) * trig(m, 4 * k + 1 - 2 * j, Kind::kCos)) /
                            cden;
    t.raw.emplace_back(indexed("c", j, k), to_string(c));
    sum = sum + Coefficient(c) * Coefficient(Rational(sign_pow(j) * beta(k, j)));
  }
  push(t, BasisTerm::pi_power(4 * k + 1), sum * Coefficient(pow2(4 * k + 1)));
  push(t, BasisTerm::lambert(QSymbol::positive(1, 7), s), a);
  push(t, BasisTerm::lambert(QSymbol::positive(2, 7), s), b);
  push(t, BasisTerm::lambert(QSymbol::positive(4, 7), s), Rational(pow2(-4 * k) * a));
  return t;
}

CoefficientTable root7_minus(long k) {
  const int m = 7;
  const long s = -(4 * k - 1);
  const Rational a = pow2(2 * k) + 2 * rational_part(trig(m, 4 * k - 2, Kind::kCos), "cos((4k-2) theta)");
  require_nonzero(a, "a_k");
  const QuadraticSurd b_surd = QuadraticSurd::rational(pow2(2 * k + 1) + pow2(-2 * k + 2), m) +
                               root2(3, m) * trig(m, 4 * k + 1, Kind::kSin) +
                               QuadraticSurd::rational(2, m) * trig(m, 4 * k, Kind::kCos);
  const Rational b = rational_part(b_surd, "b_k");
  CoefficientTable t;
  t.raw.emplace_back("a_k", to_string(a));
  t.raw.emplace_back("b_k", to_string(b));
  Coefficient sum = Rational(0);
  for (long j = 0; j <= k; ++j) {
    QuadraticSurd c = (root2(4 * k + 1 - 2 * j, m) * trig(m, 2 * j - 1, Kind::kCos) +
                       root2(2 * j + 1, m) * trig(m, 4 * k - 1 - 2 * j, Kind::kCos)) /
                      a;
    if (j == k) c /= Rational(2);
    t.raw.emplace_back(indexed("c", j, k), to_string(c));
    sum = sum + Coefficient(c) * Coefficient(Rational(-sign_pow(j) * gamma(k, j)));
  }
  push(t, BasisTerm::pi_power(4 * k - 1), sum * Coefficient(pow2(4 * k - 1)));
  push(t, BasisTerm::lambert(QSymbol::positive(1, 7), s), Rational(b / a));
  push(t, BasisTerm::lambert(QSymbol::positive(2, 7), s),
       Rational(-((pow2(-4 * k + 2) + 2) * b - pow2(-2 * k + 2)) / a));
  push(t, BasisTerm::lambert(QSymbol::positive(4, 7), s), Rational(pow2(-4 * k + 2) * b / a));
  return t;
}

// theta = arccot(sqrt 15)
CoefficientTable root15_plus(long k) {
  const int m = 15;
  const long s = -(4 * k + 1);
  const QuadraticSurd sin2k = trig(m, 2 * k, Kind::kSin);
  require_nonzero(normalize(sin2k), "sin(2k theta)");
  CoefficientTable t;
  Coefficient sum = Rational(0);
  for (long j = 0; j <= k; ++j) {
    const QuadraticSurd c = trig(m, 2 * k + 1 - 2 * j, Kind::kSin) / sin2k;
    t.raw.emplace_back(indexed("c", j, k), to_string(c));
    sum = sum + Coefficient(c) * Coefficient(Rational(sign_pow(j) * beta(k, j)));
  }
  const QSymbol q = QSymbol::positive(1, 15);
  push(t, BasisTerm::pi_power(4 * k + 1), sum * Coefficient(pow2(4 * k + 1)));
  push(t, BasisTerm::sech(q, s), normalize(trig(m, 2 * k, Kind::kCos) / sin2k));
  push(t, BasisTerm::lambert(q, s), Rational(pow2(-4 * k) + 2));
  push(t, BasisTerm::lambert(q.power(2), s), Rational(-(pow2(-8 * k) + 3 * pow2(-4 * k) + 4)));
  push(t, BasisTerm::lambert(q.power(4), s), Rational(pow2(-8 * k) + pow2(-4 * k + 1)));
  return t;
}

CoefficientTable root15_minus(long k) {
  const int m = 15;
  const long s = -(4 * k - 1);
  const QuadraticSurd cos_odd = trig(m, 2 * k - 1, Kind::kCos);
  const QuadraticSurd cc = QuadraticSurd::rational(4, m) * cos_odd * cos_odd;
  require_nonzero(normalize(cc), "cos((2k-1) theta)");
  const QuadraticSurd a = (trig(m, 4 * k - 1, Kind::kCos) - QuadraticSurd::rational(2, m) * trig(m, 4 * k, Kind::kSin)) / cc;
  const QuadraticSurd b = (QuadraticSurd::rational(2, m) + QuadraticSurd::rational(2, m) * trig(m, 4 * k, Kind::kCos) +
                           trig(m, 4 * k - 1, Kind::kSin)) /
                          cc;
  CoefficientTable t;
  t.raw.emplace_back("a_k", to_string(a));
  t.raw.emplace_back("b_k", to_string(b));
  Coefficient sum = Rational(0);
  for (long j = 0; j <= k; ++j) {
    QuadraticSurd c = trig(m, 2 * k - 2 * j, Kind::kCos) / cos_odd;
    if (j == k) c /= Rational(2);
    t.raw.emplace_back(indexed("c", j, k), to_string(c));
    sum = sum + Coefficient(c) * Coefficient(Rational(-sign_pow(j) * gamma(k, j)));
  }
  const Coefficient bc = normalize(b);
  const QSymbol q = QSymbol::positive(1, 15);
  push(t, BasisTerm::pi_power(4 * k - 1), sum * Coefficient(pow2(4 * k - 1)));
  push(t, BasisTerm::sech(q, s), normalize(a));
  push(t, BasisTerm::lambert(q, s), bc * Coefficient(Rational(pow2(-4 * k + 2) + 2)));
  push(t, BasisTerm::lambert(q.power(2), s), bc * Coefficient(Rational(-(pow2(-8 * k + 4) + 3 * pow2(-4 * k + 2) + 4))));
  push(t, BasisTerm::lambert(q.power(4), s), bc * Coefficient(Rational(pow2(-8 * k + 4) + pow2(-4 * k + 3))));
  return t;
}

void require_k(long k) {
  if (k < 1) throw InvalidArgument("k must be a positive integer, got " + std::to_string(k));
}

std::string strip_alias(std::string_view method, bool plus) {
  std::string m(method);
  if (m == "corollary") return plus ? "corollary3" : "corollary2";
  if (m.size() > 2 && m.ends_with("_p") && m.starts_with("root")) {
    if (!plus) throw InvalidArgument("method '" + m + "' is for zeta(4k+1)");
    return m.substr(0, m.size() - 2);
  }
  return m;
}

const std::vector<std::string>& minus_methods() {
  static const std::vector<std::string> v = {"corollary2", "root3", "root7", "root15"};
  return v;
}

const std::vector<std::string>& plus_methods() {
  static const std::vector<std::string> v = {"corollary3", "p2", "p3", "p5", "root3", "root7", "root15"};
  return v;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

std::string canonical_zeta_method(std::string_view method, long s) {
  if (s < 3 || s % 2 == 0) throw InvalidArgument("zeta(s) needs odd s >= 3, got " + std::to_string(s));
  const bool plus = (s % 4 == 1);
  if (method == "auto") return "root15";
  std::string m = strip_alias(method, plus);
  const auto& allowed = plus ? plus_methods() : minus_methods();
  if (!contains(allowed, m)) {
    throw InvalidArgument("method '" + std::string(method) + "' does not apply to zeta(" + std::to_string(s) + ")");
  }
  return m;
}

std::vector<std::string> zeta_methods(long s) {
  if (s < 3 || s % 2 == 0) throw InvalidArgument("zeta(s) needs odd s >= 3");
  std::vector<std::string> out = (s % 4 == 1) ? plus_methods() : minus_methods();
  if (s % 4 == 1 && ((s - 1) / 4) % 3 == 0) out.erase(std::find(out.begin(), out.end(), "root3"));
  return out;
}

CoefficientTable coeffs_4km1(std::string_view method, long k) {
  require_k(k);
  const std::string m = canonical_zeta_method(method, 4 * k - 1);
  CoefficientTable t;
  if (m == "corollary2") t = corollary2(k);
  if (m == "root3") t = root3_minus(k);
  if (m == "root7") t = root7_minus(k);
  if (m == "root15") t = root15_minus(k);
  t.constant_id = zeta_id(4 * k - 1);
  t.method_id = m;
  return t;
}

CoefficientTable coeffs_4kp1(std::string_view method, long k) {
  require_k(k);
  const std::string m = canonical_zeta_method(method, 4 * k + 1);
  CoefficientTable t;
  if (m == "corollary3") t = corollary3(k);
  if (m == "p2" || m == "p3" || m == "p5") t = gaussian_formula(m, k).table;
  if (m == "root3") t = root3_plus(k);
  if (m == "root7") t = root7_plus(k);
  if (m == "root15") t = root15_plus(k);
  t.constant_id = zeta_id(4 * k + 1);
  t.method_id = m;
  return t;
}

CoefficientTable coeffs_zeta(long s, std::string_view method) {
  if (s < 3 || s % 2 == 0) throw InvalidArgument("zeta(s) needs odd s >= 3, got " + std::to_string(s));
  return (s % 4 == 1) ? coeffs_4kp1(method, (s - 1) / 4) : coeffs_4km1(method, (s + 1) / 4);
}

GaussianRational gaussian_pi_weight(std::string_view method, long k) {
  require_k(k);
  return gaussian_formula(std::string(method), k).pi_weight;
}

CoefficientTable eliminate_zeta(const CoefficientTable& first, const CoefficientTable& second, std::string method_id) {
  if (first.constant_id != second.constant_id) throw InvalidArgument("tables are for different constants");
  long n = 0;
  for (const auto& e : first.entries) {
    if (e.basis.kind == BasisTerm::Kind::kPiPower) n = e.basis.power;
  }
  const BasisTerm pi = BasisTerm::pi_power(n);
  const Coefficient* a1 = first.find(pi);
  const Coefficient* a2 = second.find(pi);
  if (a1 == nullptr || a2 == nullptr) throw InvalidArgument("both tables need a pi-power entry");
  const Coefficient den = *a1 - *a2;
  require_nonzero(den, "difference of pi coefficients");

  std::vector<TableEntry> merged;
  for (const auto& e : second.entries) {
    if (!(e.basis == pi)) accumulate(merged, e.basis, e.coeff / den);
  }
  for (const auto& e : first.entries) {
    if (!(e.basis == pi)) accumulate(merged, e.basis, -e.coeff / den);
  }
  // slowest-decaying nome first
  std::stable_sort(merged.begin(), merged.end(), [](const TableEntry& x, const TableEntry& y) {
    const double rx = x.basis.q.rate();
    const double ry = y.basis.q.rate();
    if (rx != ry) return rx < ry;
    if (x.basis.kind != y.basis.kind) return x.basis.kind > y.basis.kind;
    return x.basis.q.phase > y.basis.q.phase;
  });
  CoefficientTable out;
  out.constant_id = n == 1 ? "pi" : "pi^" + std::to_string(n);
  out.method_id = std::move(method_id);
  out.entries = std::move(merged);
  return out;
}

namespace {

GaussianRational gi(long re, long im, long den) { return {Rational(re, den), Rational(im, den)}; }

void add_points(std::vector<Relation>& rels, int which, long k, std::initializer_list<GaussianRational> points) {
  for (const auto& t : points) rels.push_back(transformation_relation(which, k, t));
}

std::vector<Rational> real_solution(const std::vector<Relation>& rels, const Symbol& target,
                                    const std::vector<Symbol>& keep) {
  std::vector<Rational> out;
  for (const auto& c : solve_for(rels, target, keep)) out.push_back(real_or_throw(c, "eliminated coefficient"));
  return out;
}

CoefficientTable table_from_solution(const std::vector<Symbol>& keep, const std::vector<Rational>& coeffs) {
  CoefficientTable t;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const Symbol& x = keep[i];
    const BasisTerm b = x.kind == Symbol::Kind::kPi ? BasisTerm::pi_power(x.n) : BasisTerm::lambert(x.q, x.s);
    accumulate(t.entries, b, coeffs[i]);
  }
  return t;
}

// t = (1+-i)/2 and a = 1/2 in the zeta-free combination, i.e. the transformation
// at t, t/a and a t, plus the prime-2 multisections that remove L at -e^{-pi}
// and at +-i e^{-pi/2}.
CoefficientTable example62(long k) {
  const long s = -(4 * k + 1);
  const int which = k == 0 ? 1 : 3;
  std::vector<Relation> rels;
  add_points(rels, which, k, {gi(1, 1, 2), gi(1, -1, 2), gi(1, 1, 1), gi(1, -1, 1), gi(1, 1, 4), gi(1, -1, 4)});
  rels.push_back(multisection_relation(2, s, 2, 0));
  rels.push_back(multisection_relation(2, s, 1, Rational(1, 2)));
  const std::vector<Symbol> keep = {Symbol::lambert(QSymbol::positive(1), s), Symbol::lambert(QSymbol::positive(2), s),
                                    Symbol::lambert(QSymbol::positive(4), s)};
  return table_from_solution(keep, real_solution(rels, Symbol::pi(4 * k + 1), keep));
}

// t = 1 and a = 1/2: the transformation at 1, 2 and 1/2
CoefficientTable example63(long k) {
  const long s = -(4 * k - 1);
  std::vector<Relation> rels;
  add_points(rels, 2, k, {gi(1, 0, 1), gi(2, 0, 1), gi(1, 0, 2)});
  const std::vector<Symbol> keep = {Symbol::lambert(QSymbol::positive(1), s), Symbol::lambert(QSymbol::positive(2), s),
                                    Symbol::lambert(QSymbol::positive(4), s)};
  return table_from_solution(keep, real_solution(rels, Symbol::pi(4 * k - 1), keep));
}

void prime2_relations(std::vector<Relation>& rels, int which, long k, long s) {
  add_points(rels, which, k, {gi(1, 0, 2), gi(1, 1, 2), gi(1, -1, 2)});
  rels.push_back(multisection_relation(2, s, 2, 0));
}

void prime3_relations(std::vector<Relation>& rels, int which, long k, long s) {
  add_points(rels, which, k, {gi(1, 0, 3), gi(1, 1, 3), gi(1, -1, 3)});
  rels.push_back(multisection_relation(3, s, 2, 0));
}

void prime5_relations(std::vector<Relation>& rels, int which, long k, long s) {
  add_points(rels, which, k, {gi(1, 0, 5), gi(1, 1, 5), gi(1, -1, 5), gi(1, 2, 5), gi(1, -2, 5)});
  rels.push_back(multisection_relation(5, s, 2, 0));
}

}  // namespace

std::vector<std::string> pi_methods(long power) {
  if (power < 1 || power % 2 == 0) throw InvalidArgument("pi power must be odd and positive");
  if (power % 4 == 1) {
    if (power == 1) return {"example62"};
    return {"example62", "prop_pi5", "p5_root15"};
  }
  return {"example63", "prop_pi3"};
}

CoefficientTable coeffs_pi(std::string_view method, long power) {
  const auto methods = pi_methods(power);
  const std::string m(method);
  if (!contains(methods, m)) {
    throw InvalidArgument("method '" + m + "' does not produce pi^" + std::to_string(power));
  }
  CoefficientTable t;
  if (m == "example62") {
    t = example62((power - 1) / 4);
  } else if (m == "example63") {
    t = example63((power + 1) / 4);
  } else if (m == "prop_pi5") {
    const long k = (power - 1) / 4;
    t = eliminate_zeta(coeffs_4kp1("p3", k), coeffs_4kp1("p5", k), m);
  } else if (m == "p5_root15") {
    const long k = (power - 1) / 4;
    t = eliminate_zeta(coeffs_4kp1("p5", k), coeffs_4kp1("root15", k), m);
  } else if (m == "prop_pi3") {
    const long k = (power + 1) / 4;
    t = eliminate_zeta(coeffs_4km1("corollary2", k), coeffs_4km1("root7", k), m);
  }
  t.constant_id = power == 1 ? "pi" : "pi^" + std::to_string(power);
  t.method_id = m;
  return t;
}

CoefficientTable coeffs_log(long p) {
  if (p != 2 && p != 3 && p != 5) throw InvalidArgument("log p is available for p in {2, 3, 5}");
  std::vector<Relation> rels;
  prime2_relations(rels, 1, 0, -1);
  std::vector<Symbol> keep = {Symbol::pi(1), Symbol::lambert(QSymbol::positive(2), -1)};
  if (p == 3) {
    prime3_relations(rels, 1, 0, -1);
    keep.push_back(Symbol::lambert(QSymbol::negative(3), -1));
  }
  keep.push_back(Symbol::lambert(QSymbol::positive(4), -1));
  if (p == 5) {
    prime5_relations(rels, 1, 0, -1);
    keep.push_back(Symbol::lambert(QSymbol::negative(5), -1));
  }
  if (p == 3) keep.push_back(Symbol::lambert(QSymbol::positive(6), -1));
  if (p == 5) keep.push_back(Symbol::lambert(QSymbol::positive(10), -1));
  CoefficientTable t = table_from_solution(keep, real_solution(rels, Symbol::log(p), keep));
  t.constant_id = "log(" + std::to_string(p) + ")";
  t.method_id = "log" + std::to_string(p);
  return t;
}

CoefficientTable derive_zeta_by_elimination(std::string_view method, long k) {
  require_k(k);
  const long s = -(4 * k + 1);
  const std::string m(method);
  std::vector<Relation> rels;
  prime2_relations(rels, 3, k, s);
  std::vector<Symbol> keep = {Symbol::pi(4 * k + 1)};
  if (m == "p2") {
    keep.push_back(Symbol::lambert(QSymbol::positive(2), s));
    keep.push_back(Symbol::lambert(QSymbol::positive(4), s));
  } else if (m == "p3") {
    prime3_relations(rels, 3, k, s);
    keep.push_back(Symbol::lambert(QSymbol::negative(3), s));
    keep.push_back(Symbol::lambert(QSymbol::positive(4), s));
    keep.push_back(Symbol::lambert(QSymbol::positive(6), s));
  } else {
    throw InvalidArgument("elimination rederivation covers p2 and p3");
  }
  CoefficientTable t = table_from_solution(keep, real_solution(rels, Symbol::zeta(4 * k + 1), keep));
  t.constant_id = zeta_id(4 * k + 1);
  t.method_id = m;
  return t;
}

}  // namespace lzeta
