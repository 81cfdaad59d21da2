#include "lzeta/relation.hpp"

#include <algorithm>
#include <stdexcept>

#include "lzeta/bernoulli.hpp"
#include "lzeta/error.hpp"

namespace lzeta {

Symbol Symbol::pi(long power) {
  Symbol x;
  x.kind = Kind::kPi;
  x.n = power;
  return x;
}

Symbol Symbol::zeta(long arg) {
  Symbol x;
  x.kind = Kind::kZeta;
  x.n = arg;
  return x;
}

Symbol Symbol::log(long prime) {
  Symbol x;
  x.kind = Kind::kLog;
  x.n = prime;
  return x;
}

Symbol Symbol::angle(long re, long im) {
  Symbol x;
  x.kind = Kind::kAngle;
  x.dir_re = re;
  x.dir_im = im;
  return x;
}

Symbol Symbol::lambert(QSymbol q, long s) {
  Symbol x;
  x.kind = Kind::kLambert;
  x.q = std::move(q);
  x.s = s;
  return x;
}

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  switch (a.kind) {
    case Symbol::Kind::kAngle:
      if (auto c = a.dir_re <=> b.dir_re; c != 0) return c;
      return a.dir_im <=> b.dir_im;
    case Symbol::Kind::kLambert:
      if (auto c = a.q <=> b.q; c != 0) return c;
      return a.s <=> b.s;
    default:
      return a.n <=> b.n;
  }
}

bool operator==(const Symbol& a, const Symbol& b) { return (a <=> b) == 0; }

namespace {

void add(Relation& rel, const Symbol& x, const GaussianRational& c) {
  GaussianRational& slot = rel[x];
  slot += c;
  if (slot.is_zero()) rel.erase(x);
}

// q = e^{-2 pi t}
QSymbol nome_of(const GaussianRational& t) {
  if (t.re <= 0) throw DomainError("transformation point needs Re(t) > 0");
  return QSymbol::with_phase(2 * t.re, -t.im);
}

// B_2j B_{total-2j} / ((2j)! (total-2j)!)
Rational bernoulli_pair(long j, long total) {
  return bernoulli(2 * j) * bernoulli(total - 2 * j) / (factorial(2 * j) * factorial(total - 2 * j));
}

// exponents of the primes in a positive integer
void factor_into(Relation& rel, Integer n, const Rational& weight) {
  for (unsigned long p = 2; n > 1; ++p) {
    while (n % p == 0) {
      add(rel, Symbol::log(static_cast<long>(p)), weight);
      n /= p;
    }
    if (Integer(p) * p > n && n > 1) {
      add(rel, Symbol::log(n.get_si()), weight);
      break;
    }
  }
}

// -(1/2) log t, split into log primes and the argument
void add_minus_half_log(Relation& rel, const GaussianRational& t) {
  const Rational n2 = norm(t);
  // log t = (1/2) log |t|^2 + i arg t
  factor_into(rel, n2.get_num(), Rational(-1, 4));
  factor_into(rel, n2.get_den(), Rational(1, 4));
  const Integer scale = lcm(t.re.get_den(), t.im.get_den());
  Integer x = t.re.get_num() * (scale / t.re.get_den());
  Integer y = t.im.get_num() * (scale / t.im.get_den());
  if (y == 0) return;
  const int sign = y > 0 ? 1 : -1;
  y = abs(y);
  const GaussianRational half_i(0, Rational(-sign, 2));
  if (x == y) {
    add(rel, Symbol::pi(1), half_i * GaussianRational(Rational(1, 4)));
    return;
  }
  const Integer g = gcd(x, y);
  add(rel, Symbol::angle(Integer(x / g).get_si(), Integer(y / g).get_si()), half_i);
}

}  // namespace

Relation transformation_relation(int which, long k, const GaussianRational& t) {
  const GaussianRational ti = inverse(t);
  const QSymbol q = nome_of(t);
  const QSymbol qi = nome_of(ti);
  Relation rel;
  if (which == 1) {
    add(rel, Symbol::lambert(q, -1), Rational(1));
    add(rel, Symbol::lambert(qi, -1), Rational(-1));
    add_minus_half_log(rel, t);
    add(rel, Symbol::pi(1), (t - ti) * GaussianRational(Rational(1, 12)));
    return rel;
  }
  if (k < 1) throw InvalidArgument("transformation relation needs k >= 1");
  if (which == 2) {
    const long s = -(4 * k - 1);
    add(rel, Symbol::lambert(q, s), gaussian_pow(t, -(2 * k - 1)));
    add(rel, Symbol::lambert(qi, s), gaussian_pow(t, 2 * k - 1));
    GaussianRational sum;
    for (long j = 0; j <= k; ++j) {
      const long n = 2 * k - 2 * j;
      Rational w = bernoulli_pair(j, 4 * k) * ((j % 2 == 0) ? -1 : 1);
      if (j == k) w /= 2;
      sum += GaussianRational(w) * (gaussian_pow(t, n) + gaussian_pow(t, -n)) * GaussianRational(Rational(1, 2));
    }
    add(rel, Symbol::pi(4 * k - 1), -GaussianRational(pow2(4 * k - 1)) * sum);
    add(rel, Symbol::zeta(4 * k - 1),
        (gaussian_pow(t, 2 * k - 1) + gaussian_pow(t, -(2 * k - 1))) * GaussianRational(Rational(1, 2)));
    return rel;
  }
  if (which == 3) {
    const long s = -(4 * k + 1);
    add(rel, Symbol::lambert(q, s), gaussian_pow(t, -2 * k));
    add(rel, Symbol::lambert(qi, s), -gaussian_pow(t, 2 * k));
    GaussianRational sum;
    for (long j = 0; j <= k; ++j) {
      const long n = 2 * k + 1 - 2 * j;
      const Rational w = bernoulli_pair(j, 4 * k + 2) * ((j % 2 == 0) ? -1 : 1);
      sum += GaussianRational(w) * (gaussian_pow(t, n) - gaussian_pow(t, -n)) * GaussianRational(Rational(1, 2));
    }
    add(rel, Symbol::pi(4 * k + 1), -GaussianRational(pow2(4 * k + 1)) * sum);
    add(rel, Symbol::zeta(4 * k + 1),
        -(gaussian_pow(t, 2 * k) - gaussian_pow(t, -2 * k)) * GaussianRational(Rational(1, 2)));
    return rel;
  }
  throw InvalidArgument("transformation case must be 1, 2 or 3");
}

Relation multisection_relation(long p, long s, const Rational& decay, const Rational& phase) {
  if (p < 2) throw InvalidArgument("multisection needs p >= 2");
  Relation rel;
  for (long n = 0; n < p; ++n) {
    add(rel, Symbol::lambert(QSymbol::with_phase(decay / p, (phase + n) / p), s), Rational(1));
  }
  const Rational ps = pow(Rational(p), s + 1);
  const QSymbol q = QSymbol::with_phase(decay, phase);
  add(rel, Symbol::lambert(q, s), Rational(-(ps + p)));
  add(rel, Symbol::lambert(q.power(p), s), ps);
  return rel;
}

std::vector<GaussianRational> solve_for(const std::vector<Relation>& relations, const Symbol& target,
                                        const std::vector<Symbol>& keep) {
  // columns: everything to eliminate, then the target, then the kept symbols
  std::vector<Symbol> cols;
  {
    std::map<Symbol, bool> seen;
    for (const auto& rel : relations) {
      for (const auto& [x, c] : rel) seen[x] = true;
    }
    for (const auto& [x, unused] : seen) {
      if (x == target || std::find(keep.begin(), keep.end(), x) != keep.end()) continue;
      cols.push_back(x);
    }
  }
  const std::size_t target_col = cols.size();
  cols.push_back(target);
  cols.insert(cols.end(), keep.begin(), keep.end());

  std::vector<std::vector<GaussianRational>> m;
  for (const auto& rel : relations) {
    std::vector<GaussianRational> row(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (auto it = rel.find(cols[c]); it != rel.end()) row[c] = it->second;
    }
    m.push_back(std::move(row));
  }

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const GaussianRational inv = inverse(m[rank][c]);
    for (auto& v : m[rank]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const GaussianRational f = m[r][c];
      for (std::size_t cc = c; cc < cols.size(); ++cc) m[r][cc] -= f * m[rank][cc];
    }
    if (c == target_col) {
      std::vector<GaussianRational> out;
      for (std::size_t i = 0; i < keep.size(); ++i) out.push_back(-m[rank][target_col + 1 + i]);
      return out;
    }
    ++rank;
  }
  throw std::logic_error("relations do not determine the target");
}

}  // namespace lzeta
