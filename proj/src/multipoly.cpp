#include "gwt/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gwt {

MultiPoly::MultiPoly(Field f, std::vector<std::string> vars)
    : f_(f), vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(const Field& f, const std::vector<std::string>& vars,
                              const Elem& c) {
  MultiPoly p(f, vars);
  p.add_term(Exponents(vars.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const Field& f, const std::vector<std::string>& vars,
                              int i) {
  if (i < 0 || i >= static_cast<int>(vars.size())) throw std::out_of_range("variable index");
  MultiPoly p(f, vars);
  Exponents e(vars.size(), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, f.one());
  return p;
}

std::vector<std::string> MultiPoly::standard_vars(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::degree_in(int v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

Elem MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? f_.zero() : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Elem& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_same(const MultiPoly& o) const {
  if (!(f_ == o.f_) || vars_.size() != o.vars_.size()) {
    throw std::invalid_argument("polynomial ring mismatch");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  require_same(o);
  MultiPoly r(f_, vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

MultiPoly operator*(MultiPoly a, const Elem& s) {
  if (s.is_zero()) {
    a.terms_.clear();
    return a;
  }
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  MultiPoly result = constant(f_, vars_, f_.one());
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::partial(int v) const {
  MultiPoly r(f_, vars_);
  const auto i = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    r.add_term(d, c * f_.from_int(e[i]));
  }
  return r;
}

MultiPoly MultiPoly::hasse(int v, int a) const {
  if (a < 0) throw std::invalid_argument("negative Hasse order");
  MultiPoly r(f_, vars_);
  const auto i = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) {
    if (e[i] < a) continue;
    Exponents d = e;
    d[i] -= a;
    r.add_term(d, c * f_.from_mpz(binomial(e[i], a)));
  }
  return r;
}

MultiPoly MultiPoly::substitute(int v, const MultiPoly& g) const {
  require_same(g);
  std::vector<MultiPoly> images;
  for (int i = 0; i < nvars(); ++i) {
    images.push_back(i == v ? g : variable(f_, vars_, i));
  }
  return compose(images);
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars()) {
    throw std::invalid_argument("compose needs one image per variable");
  }
  if (images.empty()) throw std::invalid_argument("compose on a ring without variables");
  const Field& tf = images.front().field();
  const auto& tv = images.front().vars();
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i].require_same(images.front());
    powers[i].push_back(constant(tf, tv, tf.one()));
  }
  MultiPoly out(tf, tv);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(tf, tv, gwt::embed(c, tf));
    for (std::size_t i = 0; i < e.size(); ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) {
        powers[i].push_back(powers[i].back() * images[i]);
      }
      if (e[i] > 0) t *= powers[i][static_cast<std::size_t>(e[i])];
    }
    out += t;
  }
  return out;
}

Elem MultiPoly::eval(std::span<const Elem> point) const {
  if (static_cast<int>(point.size()) != nvars()) {
    throw std::invalid_argument("evaluation point has the wrong length");
  }
  const Field tf = point.empty() ? f_ : point.front().field();
  std::vector<std::vector<Elem>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) powers[i].push_back(tf.one());
  Elem acc = tf.zero();
  for (const auto& [e, c] : terms_) {
    Elem t = gwt::embed(c, tf);
    for (std::size_t i = 0; i < e.size(); ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) {
        powers[i].push_back(powers[i].back() * point[i]);
      }
      if (e[i] > 0) t *= powers[i][static_cast<std::size_t>(e[i])];
    }
    acc += t;
  }
  return acc;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int v) const {
  const int d = degree_in(v);
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d + 1, 0)), MultiPoly(f_, vars_));
  const auto i = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) {
    Exponents r = e;
    r[i] = 0;
    out[static_cast<std::size_t>(e[i])].add_term(r, c);
  }
  return out;
}

UPoly MultiPoly::to_univariate(int v) const {
  std::vector<Elem> c(static_cast<std::size_t>(std::max(degree_in(v) + 1, 0)), f_.zero());
  for (const auto& [e, a] : terms_) {
    for (int j = 0; j < nvars(); ++j) {
      if (j != v && e[static_cast<std::size_t>(j)] != 0) {
        throw std::invalid_argument("polynomial involves more than one variable");
      }
    }
    c[static_cast<std::size_t>(e[static_cast<std::size_t>(v)])] = a;
  }
  return UPoly(f_, std::move(c));
}

MultiPoly MultiPoly::from_univariate(const UPoly& u, const Field& f,
                                     const std::vector<std::string>& vars, int v) {
  MultiPoly p(f, vars);
  for (int k = 0; k <= u.degree(); ++k) {
    Exponents e(vars.size(), 0);
    e[static_cast<std::size_t>(v)] = k;
    p.add_term(e, gwt::embed(u.coeff(k), f));
  }
  return p;
}

MultiPoly MultiPoly::embed(const Field& target) const {
  MultiPoly p(target, vars_);
  for (const auto& [e, c] : terms_) p.add_term(e, gwt::embed(c, target));
  return p;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.to_string();
    bool neg = false;
    if (!cs.empty() && cs[0] == '-') {
      neg = true;
      cs.erase(0, 1);
    }
    if (cs.find_first_of("+*") != std::string::npos) cs = "(" + cs + ")";
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

MultiPoly MultiPoly::parse(std::string_view text, const Field& f, int nvars) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  struct Term {
    mpz_class coeff;
    std::vector<std::pair<int, int>> powers;
  };
  std::vector<Term> terms;
  int max_var = -1;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected a number in polynomial: " + s);
    return mpz_class(s.substr(start, pos - start));
  };
  while (i < s.size()) {
    Term t{1, {}};
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') t.coeff = -1;
      ++i;
    } else if (!terms.empty()) {
      throw std::invalid_argument("expected '+' or '-' in polynomial: " + s);
    }
    bool any = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (any) {
        if (s[i] == '*') ++i;
        if (i >= s.size()) throw std::invalid_argument("dangling '*' in polynomial");
      }
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        t.coeff *= read_int(i);
      } else if (s[i] == 'x') {
        ++i;
        const mpz_class idx = read_int(i);
        if (idx > 64) throw std::invalid_argument("variable index too large");
        int k = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          const mpz_class e = read_int(i);
          if (e > 10000) throw std::invalid_argument("exponent too large");
          k = static_cast<int>(e.get_si());
        }
        const int v = static_cast<int>(idx.get_si());
        max_var = std::max(max_var, v);
        t.powers.emplace_back(v, k);
      } else {
        throw std::invalid_argument(std::string("unexpected character '") + s[i] +
                                    "' in polynomial");
      }
      any = true;
    }
    if (!any) throw std::invalid_argument("empty term in polynomial: " + s);
    terms.push_back(std::move(t));
  }
  const int n = std::max(nvars, max_var + 1);
  MultiPoly p(f, standard_vars(n));
  for (const auto& t : terms) {
    Exponents e(static_cast<std::size_t>(n), 0);
    for (auto [v, k] : t.powers) e[static_cast<std::size_t>(v)] += k;
    p.add_term(e, f.from_mpz(t.coeff));
  }
  return p;
}

std::vector<MultiPoly> gradient(const MultiPoly& f) {
  std::vector<MultiPoly> g;
  for (int i = 0; i < f.nvars(); ++i) g.push_back(f.partial(i));
  return g;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  MultiPoly q(a.field(), a.vars());
  MultiPoly r = a;
  const auto& [lb, cb] = *b.terms().rbegin();
  const Elem inv = cb.inv();
  while (!r.is_zero()) {
    const auto& [lr, cr] = *r.terms().rbegin();
    MultiPoly::Exponents e(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      e[i] = lr[i] - lb[i];
      if (e[i] < 0) throw std::domain_error("inexact polynomial division");
    }
    MultiPoly t(a.field(), a.vars());
    t.add_term(e, cr * inv);
    q += t;
    r -= t * b;
  }
  return q;
}

MultiPoly det_bareiss(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  const Field f = m[0][0].field();
  const auto vars = m[0][0].vars();
  MultiPoly prev = MultiPoly::constant(f, vars, f.one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly(f, vars);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? num * prev.coeff(MultiPoly::Exponents(vars.size(), 0)).inv()
                                     : exact_div(num, prev);
      }
    }
    prev = m[k][k];
  }
  MultiPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, int v) {
  const int m = f.degree_in(v), n = g.degree_in(v);
  if (m <= 0 || n <= 0) {
    throw std::invalid_argument("resultant needs positive degree in the eliminated variable");
  }
  const auto a = f.coefficients_in(v);
  const auto b = g.coefficients_in(v);
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, MultiPoly(f.field(), f.vars())));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) {
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = a[static_cast<std::size_t>(m - k)];
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) {
      s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = b[static_cast<std::size_t>(n - k)];
    }
  }
  return det_bareiss(std::move(s));
}

MultiPoly hessian(const MultiPoly& f) {
  if (f.nvars() != 3) throw std::invalid_argument("hessian needs 3 variables");
  if (!f.is_homogeneous()) throw std::invalid_argument("hessian needs a homogeneous polynomial");
  const auto g = gradient(f);
  std::vector<std::vector<MultiPoly>> h(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) h[static_cast<std::size_t>(i)].push_back(g[static_cast<std::size_t>(i)].partial(j));
  }
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
         h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

}  // namespace gwt
