#include "gwt/gw.hpp"

#include <algorithm>
#include <stdexcept>

#include "gwt/integer.hpp"
#include "gwt/upoly.hpp"

namespace gwt {

namespace {

std::vector<mpz_class> as_integers(const std::vector<Elem>& v) {
  std::vector<mpz_class> out;
  for (const auto& e : v) out.push_back(square_class(e).squarefree);
  return out;
}

SquareClass product_class(const Field& f, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  SquareClass c;
  if (f.is_finite()) {
    c.sign = 1;
    for (const auto* v : {&a, &b})
      for (const auto& e : *v) c.sign *= square_class(e).sign;
    return c;
  }
  mpz_class prod = 1;
  for (const auto* v : {&a, &b})
    for (const auto& e : *v) prod *= square_class(e).squarefree;
  c.squarefree = squarefree_part(prod);
  c.sign = sgn(c.squarefree);
  return c;
}

int hasse_symbol(const std::vector<mpz_class>& entries, const mpz_class& p) {
  int s = 1;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) s *= hilbert_symbol(entries[i], entries[j], p);
  return s;
}

// Primes where a form with these entries can have a nontrivial symbol.
std::vector<mpz_class> relevant_primes(const std::vector<mpz_class>& entries) {
  std::vector<mpz_class> ps{2};
  for (const auto& e : entries)
    for (const auto& p : prime_factors(e)) ps.push_back(p);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

int signature_of(const std::vector<Elem>& v) {
  int s = 0;
  for (const auto& e : v) s += sgn(e.rational()) > 0 ? 1 : -1;
  return s;
}

}  // namespace

GWClass GWClass::diag(const Field& f, const std::vector<Elem>& entries) {
  GWClass c(f);
  for (const auto& e : entries) {
    if (!(e.field() == f)) throw std::invalid_argument("diagonal entry from another field");
    if (e.is_zero()) throw std::invalid_argument("zero diagonal entry");
    c.pos_.push_back(square_class_representative(e));
  }
  c.normalize();
  return c;
}

GWClass GWClass::unit(const Elem& a) { return diag(a.field(), {a}); }

GWClass GWClass::hyperbolic(const Field& f, long n) {
  GWClass c(f);
  auto& part = n >= 0 ? c.pos_ : c.neg_;
  const Elem m1 = square_class_representative(-f.one());
  for (long i = 0; i < (n >= 0 ? n : -n); ++i) {
    part.push_back(f.one());
    part.push_back(m1);
  }
  c.normalize();
  return c;
}

void GWClass::normalize() {
  std::sort(pos_.begin(), pos_.end());
  std::sort(neg_.begin(), neg_.end());
  std::vector<Elem> p, n;
  std::size_t i = 0, j = 0;
  while (i < pos_.size() || j < neg_.size()) {
    if (j == neg_.size() || (i < pos_.size() && pos_[i] < neg_[j])) {
      p.push_back(pos_[i++]);
    } else if (i == pos_.size() || neg_[j] < pos_[i]) {
      n.push_back(neg_[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  pos_ = std::move(p);
  neg_ = std::move(n);
}

void GWClass::require_same(const GWClass& o) const {
  if (!(f_ == o.f_)) throw std::invalid_argument("Grothendieck-Witt classes over different fields");
}

GWClass GWClass::operator-() const {
  GWClass c = *this;
  std::swap(c.pos_, c.neg_);
  return c;
}

GWClass& GWClass::operator+=(const GWClass& o) {
  require_same(o);
  pos_.insert(pos_.end(), o.pos_.begin(), o.pos_.end());
  neg_.insert(neg_.end(), o.neg_.begin(), o.neg_.end());
  normalize();
  return *this;
}

GWClass& GWClass::operator-=(const GWClass& o) { return *this += -o; }

GWClass operator*(const GWClass& a, const GWClass& b) {
  a.require_same(b);
  GWClass c(a.f_);
  auto mul_into = [&](const std::vector<Elem>& x, const std::vector<Elem>& y, std::vector<Elem>& out) {
    for (const auto& u : x)
      for (const auto& v : y) out.push_back(square_class_representative(u * v));
  };
  mul_into(a.pos_, b.pos_, c.pos_);
  mul_into(a.neg_, b.neg_, c.pos_);
  mul_into(a.pos_, b.neg_, c.neg_);
  mul_into(a.neg_, b.pos_, c.neg_);
  c.normalize();
  return c;
}

GWClass operator*(long k, const GWClass& a) {
  GWClass c(a.f_);
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) c += a;
  return k >= 0 ? c : -c;
}

std::string GWClass::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& e : pos_) out += (out.empty() ? "<" : " + <") + e.to_string() + ">";
  for (const auto& e : neg_) out += (out.empty() ? "-<" : " - <") + e.to_string() + ">";
  return out;
}

int hilbert_symbol(const mpz_class& a0, const mpz_class& b0, const mpz_class& p) {
  if (a0 == 0 || b0 == 0) throw std::domain_error("Hilbert symbol of zero");
  if (p == 0) return (a0 < 0 && b0 < 0) ? -1 : 1;
  mpz_class a = a0, b = b0;
  const int alpha = valuation(a, p), beta = valuation(b, p);
  for (int i = 0; i < alpha; ++i) a /= p;
  for (int i = 0; i < beta; ++i) b /= p;
  if (p == 2) {
    auto eps = [](const mpz_class& u) {
      mpz_class r = u % 4;
      if (r < 0) r += 4;
      return r == 3 ? 1 : 0;
    };
    auto omega = [](const mpz_class& u) {
      mpz_class r = u % 8;
      if (r < 0) r += 8;
      return (r == 3 || r == 5) ? 1 : 0;
    };
    const int e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  mpz_class half = (p - 1) / 2;
  if ((alpha * beta) % 2 == 1 && mpz_odd_p(half.get_mpz_t())) s = -s;
  if (beta % 2 == 1) s *= mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2 == 1) s *= mpz_legendre(b.get_mpz_t(), p.get_mpz_t());
  return s;
}

GWInvariants invariants(const GWClass& c) {
  GWInvariants inv;
  inv.rank = c.rank();
  inv.disc = product_class(c.field(), c.positive(), c.negative());
  if (!c.field().is_finite()) {
    inv.signature = signature_of(c.positive()) - signature_of(c.negative());
    std::vector<mpz_class> entries = as_integers(c.positive());
    for (const auto& n : as_integers(c.negative())) entries.push_back(-n);
    inv.hyperbolic_offset = static_cast<long>(c.negative().size());
    for (const auto& p : relevant_primes(entries)) inv.hasse[p] = hasse_symbol(entries, p);
    inv.hasse[0] = hasse_symbol(entries, 0);
  }
  return inv;
}

bool gw_equal(const GWClass& a, const GWClass& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("Grothendieck-Witt classes over different fields");
  // a == b  iff  P_a + N_b and P_b + N_a are isometric.
  std::vector<Elem> x = a.positive(), y = b.positive();
  x.insert(x.end(), b.negative().begin(), b.negative().end());
  y.insert(y.end(), a.negative().begin(), a.negative().end());
  if (x.size() != y.size()) return false;
  if (!(product_class(a.field(), x, {}) == product_class(a.field(), y, {}))) return false;
  if (a.field().is_finite()) return true;
  if (signature_of(x) != signature_of(y)) return false;
  const auto ix = as_integers(x), iy = as_integers(y);
  std::vector<mpz_class> all = ix;
  all.insert(all.end(), iy.begin(), iy.end());
  for (const auto& p : relevant_primes(all)) {
    if (hasse_symbol(ix, p) != hasse_symbol(iy, p)) return false;
  }
  return true;
}

Diagonalization diagonalize(const Matrix& gram) {
  const std::size_t n = gram.size();
  if (n == 0) throw std::invalid_argument("empty Gram matrix");
  const Field f = gram[0][0].field();
  if (f.characteristic() == 2) throw std::domain_error("characteristic 2");
  Matrix a = gram;
  Matrix s = identity(f, n);
  // Basis change e_i <- e_i + c e_j, applied to a (both sides) and to s.
  auto add_multiple = [&](std::size_t i, std::size_t j, const Elem& c) {
    for (std::size_t r = 0; r < n; ++r) a[r][i] += c * a[r][j];
    for (std::size_t r = 0; r < n; ++r) a[i][r] += c * a[j][r];
    for (std::size_t r = 0; r < n; ++r) s[r][i] += c * s[r][j];
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a[j][j].is_zero()) ++j;
      if (j < n) {
        std::swap(a[k], a[j]);
        for (auto& row : a) std::swap(row[k], row[j]);
        for (auto& row : s) std::swap(row[k], row[j]);
      } else {
        j = k + 1;
        while (j < n && a[k][j].is_zero()) ++j;
        if (j == n) continue;
        add_multiple(k, j, f.one());
      }
    }
    if (a[k][k].is_zero()) throw std::logic_error("diagonalization pivot failure");
    const Elem inv = a[k][k].inv();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[k][i].is_zero()) continue;
      add_multiple(i, k, -(a[k][i] * inv));
    }
  }
  Diagonalization d;
  d.congruence = std::move(s);
  for (std::size_t i = 0; i < n; ++i) d.diagonal.push_back(a[i][i]);
  return d;
}

TraceForm trace_form_certified(const Elem& a, int degree) {
  if (a.is_zero()) throw std::invalid_argument("trace form of zero");
  const Field big = a.field();
  if (!big.is_finite()) {
    if (degree > 1) throw std::invalid_argument("rational base needs a trivial extension");
    TraceForm t;
    t.gram = {{a}};
    t.diag = diagonalize(t.gram);
    t.form = GWClass::unit(a);
    return t;
  }
  const int e = degree == 0 ? big.degree() : degree;
  if (e < 1 || big.degree() % e != 0) throw std::invalid_argument("no subfield of that degree");
  const Field k = big.prime_field();
  const mpz_class p = big.characteristic();
  if (e != big.degree() && e % degree_over(a, k) != 0) {
    throw std::invalid_argument("element is not in the requested subfield");
  }
  auto trace = [&](const Elem& x) {
    Elem acc = x, conj = x;
    for (int i = 1; i < e; ++i) {
      conj = conj.pow(p);
      acc += conj;
    }
    return to_prime_field(acc);
  };
  // A generator of the subfield of degree e.
  Elem theta = big.generator();
  if (e != big.degree()) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    const int steps = big.degree() / e;
    for (long j = 1;; ++j) {
      const Elem g = big.generator().pow(j) + big.from_int(j);
      Elem acc = g, conj = g;
      for (int i = 1; i < steps; ++i) {
        conj = conj.pow(pe);
        acc += conj;
      }
      if (degree_over(acc, k) == e) {
        theta = acc;
        break;
      }
    }
  }
  std::vector<Elem> basis{big.one()};
  for (int i = 1; i < e; ++i) basis.push_back(basis.back() * theta);
  TraceForm t;
  t.gram.assign(static_cast<std::size_t>(e), std::vector<Elem>(static_cast<std::size_t>(e)));
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j)
      t.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          trace(a * basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)]);
  t.diag = diagonalize(t.gram);
  t.form = GWClass::diag(k, t.diag.diagonal);
  return t;
}

GWClass trace_form(const Elem& a, int degree) { return trace_form_certified(a, degree).form; }

}  // namespace gwt
