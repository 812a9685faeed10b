#include "gwt/upoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace gwt {

namespace {

constexpr std::uint64_t kSplitSeed = 0x9e3779b97f4a7c15ULL;

std::uint64_t poly_hash(const UPoly& f) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& c : f.coeffs()) {
    for (auto r : c.residue()) {
      h ^= r;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  }
  return h;
}

Elem random_elem(const Field& f, std::mt19937_64& rng) {
  std::vector<std::uint32_t> r(static_cast<std::size_t>(f.degree()));
  for (auto& c : r) c = static_cast<std::uint32_t>(rng() % f.characteristic());
  return f.from_residue(std::move(r));
}

UPoly random_below(const Field& f, int deg, std::mt19937_64& rng) {
  std::vector<Elem> c;
  for (int i = 0; i < deg; ++i) c.push_back(random_elem(f, rng));
  return UPoly(f, std::move(c));
}

void require_finite(const UPoly& f, const char* what) {
  if (!f.field().is_finite()) {
    throw std::domain_error(std::string(what) + " needs a finite field");
  }
}

bool lex_less(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

UPoly::UPoly(Field f, std::vector<Elem> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!(c.field() == f_)) throw std::invalid_argument("coefficient field mismatch");
  }
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const Elem& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::x(const Field& f) { return UPoly(f, {f.zero(), f.one()}); }

UPoly UPoly::monomial(const Elem& c, int k) {
  std::vector<Elem> v(static_cast<std::size_t>(k) + 1, c.field().zero());
  v[static_cast<std::size_t>(k)] = c;
  return UPoly(c.field(), std::move(v));
}

Elem UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return f_.zero();
  return c_[static_cast<std::size_t>(i)];
}

Elem UPoly::eval(const Elem& x) const {
  if (!(x.field() == f_)) return embed(*this, x.field()).eval(x);
  Elem acc = f_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inv();
}

UPoly UPoly::derivative() const { return hasse(1); }

UPoly UPoly::hasse(int a) const {
  if (a < 0) throw std::invalid_argument("negative Hasse order");
  std::vector<Elem> out;
  for (int n = a; n <= degree(); ++n) {
    out.push_back(c_[static_cast<std::size_t>(n)] * f_.from_mpz(binomial(n, a)));
  }
  return UPoly(f_, std::move(out));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (!(o.f_ == f_)) throw std::invalid_argument("polynomial field mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), f_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (!(a.f_ == b.f_)) throw std::invalid_argument("polynomial field mismatch");
  if (a.is_zero() || b.is_zero()) return UPoly(a.f_);
  std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, a.f_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(a.f_, std::move(out));
}

UPoly operator*(UPoly a, const Elem& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Elem& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string cs = c.to_string();
    const bool paren = cs.find_first_of("+*") != std::string::npos;
    if (i == 0 || !c.is_one()) out += paren ? "(" + cs + ")" : cs;
    if (i > 0) {
      if (!c.is_one()) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  std::vector<Elem> rem = a.coeffs();
  const int db = b.degree();
  const Elem inv_lead = b.lead().inv();
  std::vector<Elem> quo;
  if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db + 1), f.zero());
  for (int i = a.degree(); i >= db; --i) {
    const Elem c = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (c.is_zero()) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  q = UPoly(f, std::move(quo));
  r = UPoly(f, std::move(rem));
}

UPoly operator%(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  return r;
}

UPoly operator/(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  return q;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& mod) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  UPoly result = UPoly::constant(base.field().one()) % mod;
  UPoly b = base % mod;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
  }
  return result;
}

UPoly compose(const UPoly& f, const UPoly& g) {
  UPoly acc(f.field());
  for (int i = f.degree(); i >= 0; --i) acc = acc * g + UPoly::constant(f.coeff(i));
  return acc;
}

Field extension_of(const Field& base, int k) {
  const int e = base.degree() * k;
  if (e == 1) return base.prime_field();
  return Field::extension(base.prime_field(), e);
}

Elem embed(const Elem& x, const Field& target) {
  const Field src = x.field();
  if (src == target) return x;
  if (!src.is_finite() || !target.is_finite() ||
      src.characteristic() != target.characteristic() ||
      target.degree() % src.degree() != 0) {
    throw std::domain_error("no embedding " + src.to_string() + " -> " + target.to_string());
  }
  if (src.degree() == 1) return target.from_int(x.residue()[0]);
  static std::mutex mu;
  static std::map<std::pair<const void*, const void*>, Elem> cache;
  Elem image;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({src.data(), target.data()});
    if (it != cache.end()) image = it->second;
  }
  if (image.field() == Field()) {
    const Field fp = src.prime_field();
    std::vector<Elem> mc;
    for (auto c : src.modulus()) mc.push_back(fp.from_int(c));
    image = roots_in(UPoly(fp, std::move(mc)), target).front();
    std::lock_guard lock(mu);
    cache.emplace(std::make_pair(src.data(), target.data()), image);
  }
  Elem acc = target.zero();
  const auto r = x.residue();
  for (std::size_t i = r.size(); i-- > 0;) acc = acc * image + target.from_int(r[i]);
  return acc;
}

UPoly embed(const UPoly& f, const Field& target) {
  if (f.field() == target) return f;
  std::vector<Elem> c;
  for (const auto& a : f.coeffs()) c.push_back(embed(a, target));
  return UPoly(target, std::move(c));
}

std::vector<Elem> taylor_jets(const UPoly& f, const Elem& c, int m) {
  const UPoly g = embed(f, c.field());
  std::vector<Elem> out;
  for (int a = 0; a < m; ++a) out.push_back(g.hasse(a).eval(c));
  return out;
}

std::vector<Factor> squarefree_factorization(const UPoly& f0) {
  require_finite(f0, "squarefree factorization");
  if (f0.is_zero()) throw std::domain_error("factorization of zero");
  const Field& k = f0.field();
  const std::uint32_t p = k.characteristic();
  std::vector<Factor> out;
  UPoly f = f0.monic();
  int scale = 1;
  while (f.degree() > 0) {
    UPoly c = gcd(f, f.derivative());
    UPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
      UPoly y = gcd(w, c);
      UPoly z = w / y;
      if (z.degree() > 0) out.push_back({z, i * scale});
      ++i;
      w = y;
      c = c / y;
    }
    if (c.degree() <= 0) break;
    // c is a polynomial in x^p; take the p-th root coefficient-wise.
    const mpz_class root_exp = k.order() / p;
    std::vector<Elem> r;
    for (int j = 0; j <= c.degree(); j += static_cast<int>(p)) r.push_back(c.coeff(j).pow(root_exp));
    f = UPoly(k, std::move(r));
    scale *= static_cast<int>(p);
  }
  return out;
}

std::vector<std::pair<UPoly, int>> distinct_degree_factorization(const UPoly& f0) {
  require_finite(f0, "distinct-degree factorization");
  const Field& k = f0.field();
  const mpz_class q = k.order();
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = f0.monic();
  const UPoly x = UPoly::x(k);
  UPoly w = x % f;
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    w = powmod(w, q, f);
    UPoly g = gcd(f, w - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      w = w % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<UPoly> equal_degree_factorization(const UPoly& f0, int d) {
  require_finite(f0, "equal-degree factorization");
  const Field& k = f0.field();
  const UPoly f = f0.monic();
  if (f.degree() <= d) return {f};
  std::mt19937_64 rng(kSplitSeed ^ poly_hash(f));
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), k.order().get_mpz_t(), static_cast<unsigned long>(d));
  const mpz_class half = (qd - 1) / 2;
  const UPoly one = UPoly::constant(k.one());
  std::vector<UPoly> todo{f}, out;
  while (!todo.empty()) {
    UPoly h = std::move(todo.back());
    todo.pop_back();
    if (h.degree() == d) {
      out.push_back(h);
      continue;
    }
    while (true) {
      const UPoly a = random_below(k, h.degree(), rng);
      if (a.degree() <= 0) continue;
      UPoly g = gcd(h, powmod(a, half, h) - one);
      if (g.degree() > 0 && g.degree() < h.degree()) {
        todo.push_back(h / g);
        todo.push_back(g);
        break;
      }
    }
  }
  return out;
}

std::vector<Factor> factor(const UPoly& f) {
  std::vector<Factor> out;
  for (const auto& sf : squarefree_factorization(f)) {
    for (const auto& [prod, d] : distinct_degree_factorization(sf.poly)) {
      for (auto& g : equal_degree_factorization(prod, d)) out.push_back({g, sf.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    return lex_less(a.poly.coeffs(), b.poly.coeffs());
  });
  return out;
}

std::vector<Elem> roots_in(const UPoly& f, const Field& target) {
  if (f.is_zero()) throw std::domain_error("roots of zero");
  const UPoly fl = embed(f, target);
  if (fl.degree() <= 0) return {};
  const UPoly x = UPoly::x(target);
  const UPoly g = gcd(fl, powmod(x, target.order(), fl) - x);
  std::vector<Elem> roots;
  if (g.degree() <= 0) return roots;
  for (const auto& lin : equal_degree_factorization(g, 1)) roots.push_back(-lin.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

Elem some_root(const UPoly& f, const Field& target) {
  const UPoly fl = embed(f, target).monic();
  const UPoly x = UPoly::x(target);
  UPoly g = gcd(fl, powmod(x, target.order(), fl) - x);
  if (g.degree() <= 0) throw std::domain_error("polynomial has no root in " + target.to_string());
  if (g.degree() == 1) return -g.coeff(0);
  std::mt19937_64 rng(kSplitSeed ^ poly_hash(g));
  const mpz_class half = (target.order() - 1) / 2;
  const UPoly one = UPoly::constant(target.one());
  while (g.degree() > 1) {
    const UPoly a = random_below(target, g.degree(), rng);
    if (a.degree() <= 0) continue;
    UPoly h = gcd(g, powmod(a, half, g) - one);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      UPoly other = g / h;
      g = h.degree() <= other.degree() ? h : other.monic();
    }
  }
  return -g.coeff(0);
}

int degree_over(const Elem& x, const Field& base) {
  const mpz_class q = base.order();
  Elem y = x;
  for (int j = 1;; ++j) {
    y = y.pow(q);
    if (y == x) return j;
  }
}

std::vector<std::vector<Elem>> frobenius_orbit(const std::vector<Elem>& coords,
                                               const Field& base, int degree) {
  const mpz_class q = base.order();
  std::vector<std::vector<Elem>> orbit{coords};
  for (int i = 1; i < degree; ++i) {
    std::vector<Elem> next;
    for (const auto& c : orbit.back()) next.push_back(c.pow(q));
    orbit.push_back(std::move(next));
  }
  return orbit;
}

std::vector<Elem> canonical_representative(const std::vector<Elem>& coords,
                                           const Field& base, int degree) {
  auto orbit = frobenius_orbit(coords, base, degree);
  return *std::min_element(orbit.begin(), orbit.end(), lex_less);
}

std::vector<ClosedPoint> closed_points_univariate(const UPoly& f) {
  require_finite(f, "closed points");
  if (f.is_zero()) throw std::domain_error("closed points of the zero polynomial");
  const Field& k = f.field();
  std::vector<ClosedPoint> out;
  for (const auto& fac : factor(f)) {
    const int d = fac.poly.degree();
    const Field big = extension_of(k, d);
    const Elem r = some_root(fac.poly, big);
    out.push_back({d, canonical_representative({r}, k, d), fac.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const ClosedPoint& a, const ClosedPoint& b) {
    if (a.residue_degree != b.residue_degree) return a.residue_degree < b.residue_degree;
    return lex_less(a.coords, b.coords);
  });
  return out;
}

}  // namespace gwt
