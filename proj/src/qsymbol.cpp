#include "lzeta/qsymbol.hpp"

#include <cmath>
#include <string>

#include "lzeta/error.hpp"

namespace lzeta {

namespace {

Rational reduce_turns(Rational phase) {
  // phase mod 1 into [0, 1)
  Integer whole;
  mpz_fdiv_q(whole.get_mpz_t(), phase.get_num_mpz_t(), phase.get_den_mpz_t());
  phase -= whole;
  return phase;
}

std::strong_ordering cmp(const Rational& a, const Rational& b) {
  const int c = ::cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

QSymbol QSymbol::positive(Rational decay, int radicand) {
  return with_phase(std::move(decay), 0, radicand);
}

QSymbol QSymbol::negative(Rational decay, int radicand) {
  return with_phase(std::move(decay), Rational(1, 2), radicand);
}

QSymbol QSymbol::with_phase(Rational decay, Rational phase, int radicand) {
  if (decay <= 0) throw DomainError("nome decay must be positive so that |q| < 1");
  if (radicand != 1 && radicand != 3 && radicand != 7 && radicand != 15) {
    throw InvalidArgument("unsupported nome radicand " + std::to_string(radicand));
  }
  return QSymbol{std::move(decay), radicand, reduce_turns(std::move(phase))};
}

QSymbol QSymbol::power(long p) const { return with_phase(decay * p, phase * p, radicand); }

double QSymbol::rate() const { return decay.get_d() * std::sqrt(static_cast<double>(radicand)); }

Real QSymbol::magnitude(mpfr_prec_t prec) const {
  Real x = Real(decay, prec) * const_pi(prec);
  if (radicand != 1) x *= sqrt(Real(radicand, prec));
  return exp(-x);
}

Complex QSymbol::value(mpfr_prec_t prec) const {
  Real mag = magnitude(prec);
  if (phase == 0) return Complex(std::move(mag));
  if (phase == Rational(1, 2)) return Complex(-mag);
  if (phase == Rational(1, 4)) return Complex(Real(prec), std::move(mag));
  if (phase == Rational(3, 4)) return Complex(Real(prec), -mag);
  Real angle = Real(phase, prec) * const_pi(prec) * 2L;
  return Complex(mag * cos(angle), mag * sin(angle));
}

std::strong_ordering operator<=>(const QSymbol& a, const QSymbol& b) {
  if (auto c = a.radicand <=> b.radicand; c != 0) return c;
  if (auto c = cmp(a.decay, b.decay); c != 0) return c;
  return cmp(a.phase, b.phase);
}

std::string to_string(const QSymbol& q) {
  std::string rate;
  if (q.decay != 1) rate = to_string(q.decay) + "*";
  if (q.radicand != 1) rate += "sqrt(" + std::to_string(q.radicand) + ")*";
  std::string body = "exp(-" + rate + "pi)";
  if (q.phase == 0) return body;
  if (q.phase == Rational(1, 2)) return "-" + body;
  if (q.phase == Rational(1, 4)) return "i*" + body;
  if (q.phase == Rational(3, 4)) return "-i*" + body;
  return "exp(2*pi*i*" + to_string(q.phase) + ")*" + body;
}

QSymbol parse_qsymbol(std::string_view text) {
  std::string s(text);
  const std::string original = s;
  auto fail = [&]() -> QSymbol { throw InvalidArgument("not a symbolic nome: '" + original + "'"); };
  Rational phase = 0;
  if (s.starts_with("exp(2*pi*i*")) {
    const auto close = s.find(")*");
    if (close == std::string::npos) return fail();
    phase = parse_rational(s.substr(11, close - 11));
    s = s.substr(close + 2);
  } else if (s.starts_with("-i*")) {
    phase = Rational(3, 4);
    s = s.substr(3);
  } else if (s.starts_with("i*")) {
    phase = Rational(1, 4);
    s = s.substr(2);
  } else if (s.starts_with("-")) {
    phase = Rational(1, 2);
    s = s.substr(1);
  }
  if (!s.starts_with("exp(-") || !s.ends_with("pi)")) return fail();
  std::string rate = s.substr(5, s.size() - 5 - 3);
  Rational decay = 1;
  int radicand = 1;
  const auto root = rate.find("sqrt(");
  if (root != std::string::npos) {
    const auto close = rate.find(')', root);
    if (close == std::string::npos) return fail();
    radicand = std::stoi(rate.substr(root + 5, close - root - 5));
    if (rate.substr(close + 1) != "*") return fail();
    rate = rate.substr(0, root);
  }
  if (!rate.empty()) {
    if (rate.back() != '*') return fail();
    decay = parse_rational(rate.substr(0, rate.size() - 1));
  }
  return QSymbol::with_phase(decay, phase, radicand);
}

}  // namespace lzeta
