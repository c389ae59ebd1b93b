#include "cylnet/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace cylnet {

int total_degree(const Monomial& m) {
  int d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

bool monomial_before(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end()) return ia->second > 0;
    if (ia == a.end()) return ib->second < 0;
    if (ia->first < ib->first) return ia->second > 0;
    if (ib->first < ia->first) return ib->second < 0;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (auto& [v, e] : b) {
    int ne = (r.count(v) ? r[v] : 0) + e;
    if (ne == 0)
      r.erase(v);
    else
      r[v] = ne;
  }
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (auto& [v, e] : b) {
    int ne = (r.count(v) ? r[v] : 0) - e;
    if (ne == 0)
      r.erase(v);
    else
      r[v] = ne;
  }
  return r;
}

MPoly::MPoly(long c) {
  if (c != 0) terms_[Monomial{}] = c;
}

MPoly::MPoly(const mpz_class& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

MPoly MPoly::var(const std::string& name, int exp) {
  MPoly p;
  if (exp == 0) return MPoly(1);
  p.terms_[Monomial{{name, exp}}] = 1;
  return p;
}

bool MPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

void MPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  r -= o;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly MPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly r(1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

namespace {

// Per-variable minimum exponent over all terms: the monomial content, a unit
// of the Laurent ring.  Dividing it out leaves an ordinary polynomial not
// divisible by any variable.
Monomial monomial_content(const MPoly& p) {
  Monomial content;
  bool first = true;
  for (auto& [m, c] : p.terms()) {
    if (first) {
      content = m;
      first = false;
      continue;
    }
    for (auto it = content.begin(); it != content.end();) {
      auto f = m.find(it->first);
      int e = f == m.end() ? 0 : f->second;
      it->second = std::min(it->second, e);
      if (it->second == 0)
        it = content.erase(it);
      else
        ++it;
    }
    for (auto& [v, e] : m)
      if (e < 0 && !content.count(v)) content[v] = e;
  }
  return content;
}

}  // namespace

std::optional<MPoly> MPoly::exact_div(const MPoly& b) const {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (is_zero()) return MPoly();
  // Laurent monomials are units: divide out the monomial content of both
  // operands, run ordinary leading-term division on the resulting honest
  // polynomials, then restore the content ratio.  If an exact Laurent
  // quotient exists, the content-free quotient is an honest polynomial, so
  // any quotient monomial with a negative exponent means NotDivisible.
  Monomial ca = monomial_content(*this), cb = monomial_content(b);
  auto strip = [](const MPoly& p, const Monomial& content) {
    MPoly r;
    for (auto& [m, c] : p.terms()) r.terms_[mono_div(m, content)] = c;
    return r;
  };
  MPoly r = strip(*this, ca), bb = strip(b, cb);
  auto leading = [](const MPoly& p) {
    auto best = p.terms_.begin();
    for (auto it = std::next(best); it != p.terms_.end(); ++it)
      if (monomial_before(it->first, best->first)) best = it;
    return best;
  };
  auto lb = leading(bb);
  MPoly q;
  while (!r.is_zero()) {
    auto lr = leading(r);
    Monomial lead_mono = lr->first;
    mpz_class qc, rem;
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), lr->second.get_mpz_t(),
                lb->second.get_mpz_t());
    if (rem != 0) return std::nullopt;
    Monomial qm = mono_div(lead_mono, lb->first);
    for (auto& [v, e] : qm)
      if (e < 0) return std::nullopt;
    MPoly step;
    step.terms_[qm] = qc;
    q += step;
    r -= step * bb;
    if (!r.is_zero() && !monomial_before(lead_mono, leading(r)->first))
      return std::nullopt;
  }
  MPoly adjust;
  adjust.terms_[mono_div(ca, cb)] = 1;
  return q * adjust;
}

mpq_class MPoly::eval(const std::map<std::string, mpq_class>& point) const {
  mpq_class total = 0;
  for (auto& [m, c] : terms_) {
    mpq_class term(c);
    for (auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end())
        throw std::runtime_error("eval: no value for variable " + v);
      mpq_class base = it->second;
      int k = e;
      if (k < 0) {
        if (base == 0) throw std::domain_error("eval: 0 to negative power");
        base = 1 / base;
        k = -k;
      }
      for (int i = 0; i < k; i++) term *= base;
    }
    total += term;
  }
  return total;
}

MPoly MPoly::subst(const std::map<std::string, MPoly>& point) const {
  MPoly total;
  for (auto& [m, c] : terms_) {
    MPoly term{c};
    for (auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end()) {
        term *= MPoly::var(v, e);
        continue;
      }
      if (e >= 0) {
        term *= it->second.pow(e);
      } else {
        // Only monomial substitutions support negative exponents.
        const MPoly& val = it->second;
        if (val.terms_.size() != 1)
          throw std::domain_error("subst: negative power of a sum");
        auto& [vm, vc] = *val.terms_.begin();
        if (vc != 1 && vc != -1)
          throw std::domain_error("subst: negative power, non-unit coeff");
        MPoly inv;
        inv.terms_[mono_div(Monomial{}, vm)] = vc;
        term *= inv.pow(-e);
      }
    }
    total += term;
  }
  return total;
}

bool MPoly::nonneg_coeffs() const {
  for (auto& [m, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::vector<std::string> MPoly::variables() const {
  std::set<std::string> vs;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m) vs.insert(v);
  return {vs.begin(), vs.end()};
}

std::string MPoly::str() const {
  if (is_zero()) return "0";
  std::vector<const std::pair<const Monomial, mpz_class>*> ts;
  for (auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [](auto* a, auto* b) { return monomial_before(a->first, b->first); });
  std::ostringstream out;
  bool first = true;
  for (auto* t : ts) {
    const Monomial& m = t->first;
    mpz_class c = t->second;
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    mpz_class a = abs(c);
    bool wrote = false;
    if (a != 1 || m.empty()) {
      out << a.get_str();
      wrote = true;
    }
    for (auto& [v, e] : m) {
      if (wrote) out << "*";
      out << v;
      if (e != 1) out << "^" << e;
      wrote = true;
    }
  }
  return out.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) i++;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      i++;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("parse error at position " + std::to_string(i) +
                             ": " + msg);
  }

  MPoly expr() {
    MPoly r = term();
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }

  MPoly term() {
    MPoly r = factor();
    while (eat('*')) r *= factor();
    return r;
  }

  MPoly factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    return atom();
  }

  int exponent() {
    skip();
    bool paren = eat('(');
    skip();
    bool neg = eat('-');
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) i++;
    if (i == start) fail("expected integer exponent");
    int e = std::stoi(s.substr(start, i - start));
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  MPoly atom() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == '(') {
      i++;
      MPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      if (eat('^')) {
        int e = exponent();
        if (e < 0) fail("negative exponent on a parenthesized expression");
        r = r.pow(e);
      }
      return r;
    }
    if (std::isdigit((unsigned char)c)) {
      size_t start = i;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) i++;
      mpz_class n(s.substr(start, i - start));
      if (eat('^')) {
        int e = exponent();
        if (e < 0) fail("negative exponent on an integer");
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), n.get_mpz_t(), (unsigned long)e);
        return MPoly(r);
      }
      return MPoly(n);
    }
    if (std::isalpha((unsigned char)c)) {
      size_t start = i;
      i++;
      while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
        i++;
      std::string name = s.substr(start, i - start);
      int e = 1;
      if (eat('^')) e = exponent();
      return MPoly::var(name, e);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

MPoly parse_mpoly(const std::string& text) {
  Parser p(text);
  MPoly r = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace cylnet
