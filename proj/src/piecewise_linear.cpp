#include "linfeig/piecewise_linear.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>

#include "linfeig/error.hpp"

namespace linfeig {

namespace {

using boost::multiprecision::cpp_int;

cpp_int pow10(unsigned k) {
  cpp_int p = 1;
  for (unsigned i = 0; i < k; ++i) p *= 10;
  return p;
}

[[noreturn]] void bad_number(const std::string& text) {
  throw Error(Errc::MalformedInput, "not a number: '" + text + "'");
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) bad_number(raw);
  if (auto slash = text.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) bad_number(raw);
    return num / den;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  unsigned frac = 0;
  bool seen_point = false;
  for (; pos < text.size() && text[pos] != 'e' && text[pos] != 'E'; ++pos) {
    char c = text[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_point) ++frac;
    } else {
      bad_number(raw);
    }
  }
  if (digits.empty()) bad_number(raw);
  // cpp_int reads a leading 0 as an octal prefix
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  long exponent = 0;
  if (pos < text.size()) {
    std::string exp_text = text.substr(pos + 1);
    if (exp_text.empty()) bad_number(raw);
    try {
      std::size_t used = 0;
      exponent = std::stol(exp_text, &used);
      if (used != exp_text.size()) bad_number(raw);
    } catch (const std::logic_error&) {
      bad_number(raw);
    }
    if (std::abs(exponent) > 4000) bad_number(raw);
  }
  Rational value{cpp_int(digits)};
  long shift = exponent - static_cast<long>(frac);
  if (shift >= 0) value *= Rational(pow10(static_cast<unsigned>(shift)));
  else value /= Rational(pow10(static_cast<unsigned>(-shift)));
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& x) {
  cpp_int num = boost::multiprecision::numerator(x);
  cpp_int den = boost::multiprecision::denominator(x);
  cpp_int rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.str() + "/" + den.str();
  unsigned places = std::max(twos, fives);
  cpp_int scaled = num * pow10(places) / den;
  bool negative = scaled < 0;
  std::string digits = (negative ? cpp_int(-scaled) : scaled).str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : x_(std::move(breakpoints)), y_(std::move(values)) {
  if (x_.size() < 2 || x_.size() != y_.size()) {
    throw Error(Errc::MalformedInput, "need at least two breakpoints with one value each");
  }
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (!(x_[i] > x_[i - 1])) throw Error(Errc::MalformedInput, "breakpoints must increase strictly");
  }
}

Rational PiecewiseLinearFn::slope(std::size_t s) const { return (y_[s + 1] - y_[s]) / (x_[s + 1] - x_[s]); }

Rational PiecewiseLinearFn::lipschitz() const {
  Rational best = 0;
  for (std::size_t s = 0; s < segments(); ++s) best = std::max(best, Rational(abs(slope(s))));
  return best;
}

Rational PiecewiseLinearFn::operator()(const Rational& x) const {
  if (x < x_.front() || x > x_.back()) throw Error(Errc::OutOfRange, "evaluation outside the interval");
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t s = it == x_.end() ? segments() - 1 : static_cast<std::size_t>(it - x_.begin()) - 1;
  return y_[s] + slope(s) * (x - x_[s]);
}

bool PiecewiseLinearFn::is_zero() const {
  return std::all_of(y_.begin(), y_.end(), [](const Rational& v) { return v == 0; });
}

PiecewiseLinearFn PiecewiseLinearFn::simplified() const {
  std::vector<Rational> xs{x_.front()}, ys{y_.front()};
  for (std::size_t i = 1; i + 1 < x_.size(); ++i) {
    if (slope(i - 1) != slope(i)) {
      xs.push_back(x_[i]);
      ys.push_back(y_[i]);
    }
  }
  xs.push_back(x_.back());
  ys.push_back(y_.back());
  return {std::move(xs), std::move(ys)};
}

std::vector<Rational> merged_breakpoints(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
  if (f.left() != g.left() || f.right() != g.right()) {
    throw Error(Errc::DomainMismatch, "functions live on different intervals");
  }
  std::vector<Rational> xs;
  std::set_union(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
                 g.breakpoints().end(), std::back_inserter(xs));
  return xs;
}

namespace {

template <class Op>
PiecewiseLinearFn combine(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g, Op op) {
  auto xs = merged_breakpoints(f, g);
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(op(f(x), g(x)));
  return {std::move(xs), std::move(ys)};
}

}  // namespace

PiecewiseLinearFn operator+(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
  return combine(f, g, [](const Rational& a, const Rational& b) { return Rational(a + b); });
}

PiecewiseLinearFn operator-(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
  return combine(f, g, [](const Rational& a, const Rational& b) { return Rational(a - b); });
}

PiecewiseLinearFn operator*(const Rational& c, const PiecewiseLinearFn& f) {
  std::vector<Rational> ys;
  for (const auto& v : f.values()) ys.push_back(c * v);
  return {f.breakpoints(), std::move(ys)};
}

bool same_function(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
  if (f.left() != g.left() || f.right() != g.right()) return false;
  for (const auto& x : merged_breakpoints(f, g)) {
    if (f(x) != g(x)) return false;
  }
  return true;
}

Rational inner_product(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
  auto xs = merged_breakpoints(f, g);
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    Rational h = xs[i + 1] - xs[i];
    Rational a0 = f(xs[i]), a1 = f(xs[i + 1]), b0 = g(xs[i]), b1 = g(xs[i + 1]);
    total += h * (2 * a0 * b0 + a0 * b1 + a1 * b0 + 2 * a1 * b1) / 6;
  }
  return total;
}

PiecewiseLinearFn read_pwl_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::MalformedInput, "empty function CSV");
  std::string header = line;
  header.erase(std::remove_if(header.begin(), header.end(), ::isspace), header.end());
  if (header != "breakpoint,value") {
    throw Error(Errc::MalformedInput, "function CSV header must be breakpoint,value");
  }
  std::vector<Rational> xs, ys;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(Errc::MalformedInput, "expected breakpoint,value");
    xs.push_back(parse_rational(line.substr(0, comma)));
    ys.push_back(parse_rational(line.substr(comma + 1)));
  }
  return {std::move(xs), std::move(ys)};
}

void write_pwl_csv(std::ostream& out, const PiecewiseLinearFn& f) {
  out << "breakpoint,value\n";
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    out << format_rational(f.breakpoints()[i]) << ',' << format_rational(f.values()[i]) << '\n';
  }
}

}  // namespace linfeig
