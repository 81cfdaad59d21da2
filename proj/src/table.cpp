#include "lzeta/table.hpp"

#include "json.hpp"

#include "lzeta/error.hpp"

namespace lzeta {

using ordered_json = nlohmann::ordered_json;

namespace {

QuadraticSurd as_surd(const Coefficient& c, int radicand) {
  if (const auto* q = std::get_if<Rational>(&c)) return QuadraticSurd::rational(*q, radicand);
  return std::get<QuadraticSurd>(c);
}

int radicand_of(const Coefficient& x, const Coefficient& y) {
  if (const auto* s = std::get_if<QuadraticSurd>(&x)) return s->radicand();
  return std::get<QuadraticSurd>(y).radicand();
}

template <typename RationalOp, typename SurdOp>
Coefficient combine(const Coefficient& x, const Coefficient& y, RationalOp on_rational, SurdOp on_surd) {
  if (std::holds_alternative<Rational>(x) && std::holds_alternative<Rational>(y)) {
    return on_rational(std::get<Rational>(x), std::get<Rational>(y));
  }
  const int m = radicand_of(x, y);
  return normalize(on_surd(as_surd(x, m), as_surd(y, m)));
}

}  // namespace

Coefficient normalize(Coefficient c) {
  if (const auto* s = std::get_if<QuadraticSurd>(&c); s && s->is_rational()) return s->a();
  return c;
}

Coefficient operator+(const Coefficient& x, const Coefficient& y) {
  return combine(
      x, y, [](const Rational& a, const Rational& b) -> Rational { return a + b; },
      [](const QuadraticSurd& a, const QuadraticSurd& b) { return a + b; });
}

Coefficient operator-(const Coefficient& x, const Coefficient& y) {
  return combine(
      x, y, [](const Rational& a, const Rational& b) -> Rational { return a - b; },
      [](const QuadraticSurd& a, const QuadraticSurd& b) { return a - b; });
}

Coefficient operator*(const Coefficient& x, const Coefficient& y) {
  return combine(
      x, y, [](const Rational& a, const Rational& b) -> Rational { return a * b; },
      [](const QuadraticSurd& a, const QuadraticSurd& b) { return a * b; });
}

Coefficient operator/(const Coefficient& x, const Coefficient& y) {
  if (is_zero(y)) throw DivisionByZero("coefficient division by zero");
  return combine(
      x, y, [](const Rational& a, const Rational& b) -> Rational { return a / b; },
      [](const QuadraticSurd& a, const QuadraticSurd& b) { return a / b; });
}

Coefficient operator-(const Coefficient& x) {
  if (const auto* q = std::get_if<Rational>(&x)) return Rational(-*q);
  return -std::get<QuadraticSurd>(x);
}

bool is_zero(const Coefficient& c) {
  if (const auto* q = std::get_if<Rational>(&c)) return *q == 0;
  return std::get<QuadraticSurd>(c).is_zero();
}

std::string to_string(const Coefficient& c) {
  if (const auto* q = std::get_if<Rational>(&c)) return to_string(*q);
  return to_string(std::get<QuadraticSurd>(c));
}

Coefficient parse_coefficient(std::string_view text) {
  const std::string s(text);
  // radicand: the first sqrt(m) that is not the sqrt(2) factor
  int radicand = 0;
  bool has_root = false;
  for (auto at = s.find("sqrt("); at != std::string::npos; at = s.find("sqrt(", at + 5)) {
    has_root = true;
    const int m = std::stoi(s.substr(at + 5));
    if (m != 2) {
      radicand = m;
      break;
    }
  }
  if (!has_root) return parse_rational(s);
  return normalize(parse_surd(s, radicand == 0 ? 7 : radicand));
}

BasisTerm BasisTerm::pi_power(long n) {
  BasisTerm b;
  b.kind = Kind::kPiPower;
  b.power = n;
  return b;
}

BasisTerm BasisTerm::lambert(QSymbol q, long s) {
  BasisTerm b;
  b.kind = Kind::kLambert;
  b.q = std::move(q);
  b.s = s;
  return b;
}

BasisTerm BasisTerm::sech(QSymbol q, long s) {
  BasisTerm b = lambert(std::move(q), s);
  b.kind = Kind::kSech;
  return b;
}

BasisTerm BasisTerm::lambert_derivative(QSymbol q, long s) {
  BasisTerm b = lambert(std::move(q), s);
  b.kind = Kind::kLambertDerivative;
  return b;
}

std::strong_ordering operator<=>(const BasisTerm& a, const BasisTerm& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (a.kind == BasisTerm::Kind::kPiPower) return a.power <=> b.power;
  if (auto c = a.q <=> b.q; c != 0) return c;
  return a.s <=> b.s;
}

bool operator==(const BasisTerm& a, const BasisTerm& b) { return (a <=> b) == 0; }

const char* kind_name(BasisTerm::Kind kind) {
  switch (kind) {
    case BasisTerm::Kind::kPiPower:
      return "pi_power";
    case BasisTerm::Kind::kLambert:
      return "lambert";
    case BasisTerm::Kind::kSech:
      return "sech_series";
    case BasisTerm::Kind::kLambertDerivative:
      return "lambert_derivative";
  }
  return "?";
}

namespace {

BasisTerm::Kind kind_from_name(const std::string& name) {
  for (auto kind : {BasisTerm::Kind::kPiPower, BasisTerm::Kind::kLambert, BasisTerm::Kind::kSech,
                    BasisTerm::Kind::kLambertDerivative}) {
    if (name == kind_name(kind)) return kind;
  }
  throw InvalidArgument("unknown basis kind '" + name + "'");
}

}  // namespace

std::string to_string(const BasisTerm& b) {
  const std::string args = "[" + to_string(b.q) + "](" + std::to_string(b.s) + ")";
  switch (b.kind) {
    case BasisTerm::Kind::kPiPower:
      return b.power == 1 ? "pi" : "pi^" + std::to_string(b.power);
    case BasisTerm::Kind::kLambert:
      return "L" + args;
    case BasisTerm::Kind::kSech:
      return "S" + args;
    case BasisTerm::Kind::kLambertDerivative:
      return "2*pi*q*L'" + args;
  }
  return "?";
}

const Coefficient* CoefficientTable::find(const BasisTerm& basis) const {
  for (const auto& e : entries) {
    if (e.basis == basis) return &e.coeff;
  }
  return nullptr;
}

std::string to_json(const CoefficientTable& table, int indent) {
  ordered_json out;
  out["constant"] = table.constant_id;
  out["method"] = table.method_id;
  ordered_json entries = ordered_json::array();
  for (const auto& e : table.entries) {
    ordered_json basis;
    basis["kind"] = kind_name(e.basis.kind);
    if (e.basis.kind == BasisTerm::Kind::kPiPower) {
      basis["n"] = e.basis.power;
    } else {
      basis["q"] = to_string(e.basis.q);
      basis["s"] = e.basis.s;
    }
    ordered_json entry;
    entry["basis"] = std::move(basis);
    entry["coeff"] = to_string(e.coeff);
    entries.push_back(std::move(entry));
  }
  out["entries"] = std::move(entries);
  if (!table.raw.empty()) {
    ordered_json raw = ordered_json::object();
    for (const auto& [name, value] : table.raw) raw[name] = value;
    out["raw"] = std::move(raw);
  }
  return out.dump(indent);
}

CoefficientTable table_from_json(std::string_view text) {
  ordered_json in;
  try {
    in = ordered_json::parse(text);
    CoefficientTable table;
    table.constant_id = in.at("constant").get<std::string>();
    table.method_id = in.at("method").get<std::string>();
    for (const auto& e : in.at("entries")) {
      const auto& basis = e.at("basis");
      BasisTerm b;
      b.kind = kind_from_name(basis.at("kind").get<std::string>());
      if (b.kind == BasisTerm::Kind::kPiPower) {
        b.power = basis.at("n").get<long>();
      } else {
        b.q = parse_qsymbol(basis.at("q").get<std::string>());
        b.s = basis.at("s").get<long>();
      }
      table.entries.push_back({b, parse_coefficient(e.at("coeff").get<std::string>())});
    }
    if (in.contains("raw")) {
      for (const auto& [name, value] : in["raw"].items()) table.raw.emplace_back(name, value.get<std::string>());
    }
    return table;
  } catch (const ordered_json::exception& err) {
    throw InvalidArgument(std::string("bad table JSON: ") + err.what());
  }
}

void accumulate(std::vector<TableEntry>& entries, const BasisTerm& basis, const Coefficient& coeff) {
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    if (it->basis == basis) {
      it->coeff = it->coeff + coeff;
      if (is_zero(it->coeff)) entries.erase(it);
      return;
    }
  }
  if (!is_zero(coeff)) entries.push_back({basis, normalize(coeff)});
}

CoefficientTable negative_q_rewrite(const CoefficientTable& table) {
  CoefficientTable out = table;
  out.entries.clear();
  for (const auto& e : table.entries) {
    if (e.basis.kind != BasisTerm::Kind::kLambert || !e.basis.q.is_negative()) {
      accumulate(out.entries, e.basis, e.coeff);
      continue;
    }
    const QSymbol base = QSymbol::positive(e.basis.q.decay, e.basis.q.radicand);
    const Rational p = pow2(e.basis.s + 1);
    accumulate(out.entries, BasisTerm::lambert(base, e.basis.s), -e.coeff);
    accumulate(out.entries, BasisTerm::lambert(base.power(2), e.basis.s), e.coeff * Coefficient(p + 2));
    accumulate(out.entries, BasisTerm::lambert(base.power(4), e.basis.s), e.coeff * Coefficient(Rational(-p)));
  }
  return out;
}

}  // namespace lzeta
