#include "lzeta/surd.hpp"

#include <string>
#include <utility>

#include "lzeta/error.hpp"

namespace lzeta {

bool is_supported_radicand(int m) { return m == 3 || m == 7 || m == 15; }

QuadraticSurd::QuadraticSurd(Rational a, Rational b, int radicand, long half_two_exponent)
    : a_(std::move(a)), b_(std::move(b)), m_(radicand), e_(half_two_exponent) {
  if (!is_supported_radicand(m_)) {
    throw InvalidArgument("unsupported radicand " + std::to_string(m_) + " (expected 3, 7 or 15)");
  }
  normalize();
}

void QuadraticSurd::normalize() {
  if (is_zero()) {
    e_ = 0;
    return;
  }
  // e = 2*whole + rest with rest in {0, 1}
  long rest = e_ % 2;
  if (rest < 0) rest += 2;
  const long whole = (e_ - rest) / 2;
  if (whole != 0) {
    const Rational f = pow2(whole);
    a_ *= f;
    b_ *= f;
  }
  e_ = rest;
}

namespace {

void require_same_ring(const QuadraticSurd& x, const QuadraticSurd& y, const char* op) {
  if (x.radicand() != y.radicand()) {
    throw DomainError(std::string("surd ") + op + " across radicands " + std::to_string(x.radicand()) +
                      " and " + std::to_string(y.radicand()));
  }
}

}  // namespace

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    *this = rhs;
    return *this;
  }
  require_same_ring(*this, rhs, "addition");
  if (e_ != rhs.e_) throw DomainError("surd addition with mismatched powers of sqrt(2)");
  a_ += rhs.a_;
  b_ += rhs.b_;
  normalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& rhs) { return *this += -rhs; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& rhs) {
  require_same_ring(*this, rhs, "multiplication");
  Rational a = a_ * rhs.a_ + m_ * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  e_ += rhs.e_;
  normalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& rhs) { return *this *= inverse(rhs); }

QuadraticSurd& QuadraticSurd::operator*=(const Rational& rhs) {
  a_ *= rhs;
  b_ *= rhs;
  normalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const Rational& rhs) {
  if (rhs == 0) throw DivisionByZero("surd divided by zero");
  a_ /= rhs;
  b_ /= rhs;
  return *this;
}

QuadraticSurd QuadraticSurd::operator-() const { return {-a_, -b_, m_, e_}; }

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return x.m_ == y.m_ && x.e_ == y.e_ && x.a_ == y.a_ && x.b_ == y.b_;
}

QuadraticSurd operator+(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs += rhs; }
QuadraticSurd operator-(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs -= rhs; }
QuadraticSurd operator*(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs *= rhs; }
QuadraticSurd operator/(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs /= rhs; }
QuadraticSurd operator*(QuadraticSurd lhs, const Rational& rhs) { return lhs *= rhs; }
QuadraticSurd operator*(const Rational& lhs, QuadraticSurd rhs) { return rhs *= lhs; }
QuadraticSurd operator/(QuadraticSurd lhs, const Rational& rhs) { return lhs /= rhs; }

QuadraticSurd inverse(const QuadraticSurd& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of surd zero");
  // 1/(a + b sqrt m) = (a - b sqrt m) / (a^2 - m b^2); m is never a square.
  const Rational n = x.a() * x.a() - x.radicand() * x.b() * x.b();
  return {x.a() / n, -x.b() / n, x.radicand(), -x.half_two_exponent()};
}

std::string to_string(const QuadraticSurd& x) {
  std::string base;
  if (x.b() == 0) {
    base = to_string(x.a());
  } else {
    const std::string root = "(" + to_string(x.b()) + ")*sqrt(" + std::to_string(x.radicand()) + ")";
    base = (x.a() == 0) ? root : to_string(x.a()) + "+" + root;
  }
  if (x.half_two_exponent() == 0) return base;
  return "(" + base + ")*sqrt(2)";
}

QuadraticSurd parse_surd(std::string_view text, int default_radicand) {
  const std::string s(text);
  auto fail = [&]() -> QuadraticSurd { throw InvalidArgument("not a surd: '" + s + "'"); };
  static constexpr std::string_view kTwo = ")*sqrt(2)";
  if (s.size() > kTwo.size() + 1 && s.front() == '(' && s.ends_with(kTwo)) {
    QuadraticSurd inner = parse_surd(s.substr(1, s.size() - kTwo.size() - 1), default_radicand);
    return inner * QuadraticSurd::sqrt2_power(1, inner.radicand());
  }
  const auto star = s.find("*sqrt(");
  if (star == std::string::npos) return QuadraticSurd::rational(parse_rational(s), default_radicand);
  if (s.back() != ')') return fail();
  const int m = std::stoi(s.substr(star + 6, s.size() - star - 7));
  const std::string head = s.substr(0, star);
  if (head.empty() || head.back() != ')') return fail();
  const auto open = head.rfind('(');
  if (open == std::string::npos) return fail();
  const Rational b = parse_rational(head.substr(open + 1, head.size() - open - 2));
  Rational a = 0;
  if (open > 0) {
    if (head[open - 1] != '+') return fail();
    a = parse_rational(head.substr(0, open - 1));
  }
  return {a, b, m};
}

QuadraticSurd surd_trig(int m, long multiple, TrigKind kind) {
  if (!is_supported_radicand(m)) {
    throw InvalidArgument("surd_trig: unsupported radicand " + std::to_string(m));
  }
  if (multiple < 0) {
    QuadraticSurd v = surd_trig(m, -multiple, kind);
    return kind == TrigKind::kSin ? -v : v;
  }
  // cos(theta) = sqrt(m)/sqrt(m+1), sin(theta) = 1/sqrt(m+1)
  QuadraticSurd cos1 = (m == 7) ? QuadraticSurd(0, 1, 7, -3)
                                : QuadraticSurd(0, make_rational(1, m == 3 ? 2 : 4), m);
  QuadraticSurd sin1 = (m == 7) ? QuadraticSurd(1, 0, 7, -3)
                                : QuadraticSurd(make_rational(1, m == 3 ? 2 : 4), 0, m);
  QuadraticSurd c = QuadraticSurd::one(m);
  QuadraticSurd s = QuadraticSurd::zero(m);
  for (long j = 0; j < multiple; ++j) {
    QuadraticSurd next_c = c * cos1 - s * sin1;
    QuadraticSurd next_s = s * cos1 + c * sin1;
    c = std::move(next_c);
    s = std::move(next_s);
  }
  return kind == TrigKind::kCos ? c : s;
}

}  // namespace lzeta
